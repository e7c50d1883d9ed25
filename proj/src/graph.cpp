#include "splitcm/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace splitcm {

SimpleGraph SimpleGraph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1 || n > 63) throw std::invalid_argument("vertex count must be between 1 and 63");
  for (auto& [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  SimpleGraph G;
  G.n = n;
  G.edges = std::move(edges);
  G.adj.assign(static_cast<size_t>(n) + 1, 0);
  for (auto [a, b] : G.edges) {
    G.adj[static_cast<size_t>(a)] |= VarMask{1} << (b - 1);
    G.adj[static_cast<size_t>(b)] |= VarMask{1} << (a - 1);
  }
  return G;
}

bool SimpleGraph::has_edge(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("vertex out of range");
  return (adj[static_cast<size_t>(i)] >> (j - 1)) & 1;
}

SimpleGraph complement(const SimpleGraph& G) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= G.n; ++i)
    for (int j = i + 1; j <= G.n; ++j)
      if (!G.has_edge(i, j)) edges.emplace_back(i, j);
  return SimpleGraph::make(G.n, std::move(edges));
}

SimpleGraph delete_vertex(const SimpleGraph& G, int v) {
  if (v < 1 || v > G.n) throw std::out_of_range("vertex out of range");
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : G.edges)
    if (a != v && b != v) edges.emplace_back(a, b);
  return SimpleGraph::make(G.n, std::move(edges));
}

bool is_perfect_elimination_order(const SimpleGraph& G, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != G.n) return false;
  std::vector<int> pos(static_cast<size_t>(G.n) + 1, 0);
  for (int k = 0; k < G.n; ++k) {
    int v = order[static_cast<size_t>(k)];
    if (v < 1 || v > G.n || pos[static_cast<size_t>(v)] != 0) return false;
    pos[static_cast<size_t>(v)] = k + 1;
  }
  for (int k = 0; k < G.n; ++k) {
    int v = order[static_cast<size_t>(k)];
    std::vector<int> later;
    for (VarMask m = G.neighbors(v); m;) {
      int u = std::countr_zero(m) + 1;
      m &= m - 1;
      if (pos[static_cast<size_t>(u)] > k + 1) later.push_back(u);
    }
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b)
        if (!G.has_edge(later[a], later[b])) return false;
  }
  return true;
}

std::optional<std::vector<int>> perfect_elimination_order(const SimpleGraph& G) {
  // Maximum cardinality search yields a reversed perfect elimination order
  // exactly when the graph is chordal.
  std::vector<int> weight(static_cast<size_t>(G.n) + 1, 0);
  std::vector<bool> picked(static_cast<size_t>(G.n) + 1, false);
  std::vector<int> visit;
  visit.reserve(static_cast<size_t>(G.n));
  for (int step = 0; step < G.n; ++step) {
    int best = -1;
    for (int v = 1; v <= G.n; ++v)
      if (!picked[static_cast<size_t>(v)] &&
          (best == -1 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]))
        best = v;
    picked[static_cast<size_t>(best)] = true;
    visit.push_back(best);
    for (VarMask m = G.neighbors(best); m;) {
      int u = std::countr_zero(m) + 1;
      m &= m - 1;
      if (!picked[static_cast<size_t>(u)]) ++weight[static_cast<size_t>(u)];
    }
  }
  std::reverse(visit.begin(), visit.end());
  if (!is_perfect_elimination_order(G, visit)) return std::nullopt;
  return visit;
}

bool is_chordal(const SimpleGraph& G) { return perfect_elimination_order(G).has_value(); }

bool is_cochordal(const SimpleGraph& G) { return is_chordal(complement(G)); }

MonomialIdeal edge_ideal(const SimpleGraph& G) {
  RingContext ring(G.n);
  std::vector<Monomial> gens;
  gens.reserve(G.edges.size());
  for (auto [a, b] : G.edges)
    gens.push_back(Monomial::variable(G.n, a).times_variable(b));
  return MonomialIdeal::make(ring, std::move(gens));
}

MonomialIdeal cover_ideal(const SimpleGraph& G) {
  RingContext ring(G.n);
  std::vector<VarMask> supports;
  supports.reserve(G.edges.size());
  for (auto [a, b] : G.edges)
    supports.push_back((VarMask{1} << (a - 1)) | (VarMask{1} << (b - 1)));
  std::vector<Monomial> gens;
  for (VarMask cover : minimal_support_covers(supports, G.n)) {
    Monomial m = Monomial::one(G.n);
    for (VarMask rest = cover; rest;) {
      int v = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      m = m.times_variable(v);
    }
    gens.push_back(m);
  }
  return MonomialIdeal::make(ring, std::move(gens));
}

namespace {

CertPtr build_edge_cert(const SimpleGraph& cur, const std::vector<int>& order, size_t k,
                        Splitter& splitter) {
  MonomialIdeal ideal = edge_ideal(cur);
  if (cur.edges.empty())
    return std::make_shared<SplitCertificate>(
        SplitCertificate{SplitCertificate::Kind::Zero, ideal, {}, 0, nullptr, nullptr});
  if (cur.edges.size() == 1)
    return std::make_shared<SplitCertificate>(SplitCertificate{
        SplitCertificate::Kind::Principal, ideal, ideal.gens().front(), 0, nullptr, nullptr});
  int v = order[k];
  if (cur.neighbors(v) == 0) return build_edge_cert(cur, order, k + 1, splitter);

  RingContext ring(cur.n);
  std::vector<Monomial> nbr_vars;
  for (VarMask m = cur.neighbors(v); m;) {
    int u = std::countr_zero(m) + 1;
    m &= m - 1;
    nbr_vars.push_back(Monomial::variable(cur.n, u));
  }
  MonomialIdeal inner_ideal = MonomialIdeal::make(ring, std::move(nbr_vars));
  CertPtr inner = splitter.certify(inner_ideal);
  if (!inner) throw std::logic_error("variable-generated ideal failed to certify");
  CertPtr outer = build_edge_cert(delete_vertex(cur, v), order, k + 1, splitter);

  return std::make_shared<SplitCertificate>(
      SplitCertificate{SplitCertificate::Kind::Split, ideal, {}, v, inner, outer});
}

}  // namespace

CertPtr edge_ideal_splitting(const SimpleGraph& G, const std::vector<int>& complement_peo,
                             Splitter& splitter) {
  if (!is_perfect_elimination_order(complement(G), complement_peo))
    throw std::invalid_argument("order is not a perfect elimination order of the complement");
  return build_edge_cert(G, complement_peo, 0, splitter);
}

BicmReport bicm(const SimpleGraph& G) {
  BicmReport report;
  if (G.edges.empty()) {
    report.bicm = true;
    report.cochordal = true;
    report.proj_dim = 0;
    return report;
  }

  // Drop isolated vertices; they contribute free variables only.
  std::vector<int> active;
  for (int v = 1; v <= G.n; ++v)
    if (G.neighbors(v) != 0) active.push_back(v);
  std::vector<int> to_new(static_cast<size_t>(G.n) + 1, 0);
  for (size_t i = 0; i < active.size(); ++i) to_new[static_cast<size_t>(active[i])] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, int>> sub_edges;
  for (auto [a, b] : G.edges)
    sub_edges.emplace_back(to_new[static_cast<size_t>(a)], to_new[static_cast<size_t>(b)]);
  SimpleGraph H = SimpleGraph::make(static_cast<int>(active.size()), std::move(sub_edges));

  auto peo_c = perfect_elimination_order(complement(H));
  if (!peo_c) return report;  // not cochordal, hence not bicm
  report.cochordal = true;
  report.peo.reserve(peo_c->size());
  for (int v : *peo_c) report.peo.push_back(active[static_cast<size_t>(v) - 1]);

  // Relabel so the order is 1..m, then compare forward degrees.
  std::vector<int> pos(static_cast<size_t>(H.n) + 1, 0);
  for (int k = 0; k < H.n; ++k) pos[static_cast<size_t>((*peo_c)[static_cast<size_t>(k)])] = k + 1;
  std::vector<int> forward(static_cast<size_t>(H.n) + 1, 0);
  for (int v = 1; v <= H.n; ++v) {
    int pv = pos[static_cast<size_t>(v)];
    for (VarMask m = H.neighbors(v); m;) {
      int u = std::countr_zero(m) + 1;
      m &= m - 1;
      if (pos[static_cast<size_t>(u)] > pv) ++forward[static_cast<size_t>(pv)];
    }
  }

  // Under a valid elimination order the positive forward degrees occupy a
  // prefix 1..r (a vertex with no later neighbor forces the whole suffix to
  // be edgeless). Peeling vertices one at a time shows the edge ideal is CM
  // exactly when forward[i] = r+1-i on that prefix: consecutive positions
  // step down by one and the last positive position has forward degree 1
  // (the final peel leaves an edgeless graph, whose ideal has projdim 0).
  // Checking pairs up to the first zero position enforces all of this.
  int r = 0;
  while (r < H.n && forward[static_cast<size_t>(r) + 1] > 0) ++r;
  auto record = [&](int i, int j) {
    BicmViolation bad;
    bad.position_i = i;
    bad.position_j = j;
    bad.vertex_i = report.peo[static_cast<size_t>(i) - 1];
    bad.vertex_j = report.peo[static_cast<size_t>(j) - 1];
    bad.forward_i = forward[static_cast<size_t>(i)];
    bad.forward_j = forward[static_cast<size_t>(j)];
    report.violation = bad;
  };
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= std::min(r + 1, H.n); ++j)
      if (forward[static_cast<size_t>(i)] != forward[static_cast<size_t>(j)] + (j - i)) {
        record(i, j);
        return report;
      }
  for (int j = r + 2; j <= H.n; ++j)
    if (forward[static_cast<size_t>(j)] > 0) {  // cannot happen for a verified order
      record(r + 1, j);
      return report;
    }

  report.bicm = true;
  report.proj_dim = r;
  return report;
}

}  // namespace splitcm
