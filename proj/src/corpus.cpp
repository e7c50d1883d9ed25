#include "splitcm/corpus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace splitcm {

namespace {

std::vector<Monomial> monomial_pool(const RingContext& ring, int min_deg, int max_deg) {
  std::vector<Monomial> pool;
  for (int d = min_deg; d <= max_deg; ++d) {
    auto level = monomials_of_degree(ring, d);
    pool.insert(pool.end(), level.begin(), level.end());
  }
  return pool;
}

void antichain_dfs(const RingContext& ring, const std::vector<Monomial>& pool, size_t next,
                   std::vector<Monomial>& chosen, int max_gens,
                   std::vector<MonomialIdeal>& out) {
  if (!chosen.empty()) out.push_back(MonomialIdeal::make(ring, chosen));
  if (static_cast<int>(chosen.size()) == max_gens) return;
  for (size_t k = next; k < pool.size(); ++k) {
    bool comparable = false;
    for (const Monomial& c : chosen) {
      if (c.divides(pool[k]) || pool[k].divides(c)) {
        comparable = true;
        break;
      }
    }
    if (comparable) continue;
    chosen.push_back(pool[k]);
    antichain_dfs(ring, pool, k + 1, chosen, max_gens, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<MonomialIdeal> enumerate_antichain_ideals(int n, int max_gens, int max_deg) {
  RingContext ring(n);
  std::vector<Monomial> pool = monomial_pool(ring, 1, max_deg);
  std::vector<MonomialIdeal> out;
  std::vector<Monomial> chosen;
  antichain_dfs(ring, pool, 0, chosen, max_gens, out);
  return out;
}

std::vector<MonomialIdeal> random_ideals(int n, int count, int max_gens, int max_deg,
                                         std::uint64_t seed) {
  RingContext ring(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gens_dist(1, max_gens);
  std::uniform_int_distribution<int> deg_dist(1, max_deg);
  std::uniform_int_distribution<int> var_dist(1, n);
  std::vector<MonomialIdeal> out;
  out.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    std::vector<Monomial> gens;
    int g = gens_dist(rng);
    for (int a = 0; a < g; ++a) {
      Monomial m = Monomial::one(n);
      int d = deg_dist(rng);
      for (int b = 0; b < d; ++b) m = m.times_variable(var_dist(rng));
      gens.push_back(m);
    }
    out.push_back(MonomialIdeal::make(ring, std::move(gens)));
  }
  return out;
}

namespace {

void polymatroidal_dfs(const RingContext& ring, const std::vector<Monomial>& pool, size_t next,
                       std::vector<Monomial>& chosen, int max_gens,
                       std::vector<MonomialIdeal>& out) {
  if (!chosen.empty()) {
    MonomialIdeal I = MonomialIdeal::make(ring, chosen);
    if (is_polymatroidal(I)) out.push_back(std::move(I));
  }
  if (static_cast<int>(chosen.size()) == max_gens) return;
  for (size_t k = next; k < pool.size(); ++k) {
    chosen.push_back(pool[k]);
    polymatroidal_dfs(ring, pool, k + 1, chosen, max_gens, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<MonomialIdeal> enumerate_polymatroidal(int n, int degree, int max_gens) {
  RingContext ring(n);
  std::vector<Monomial> pool = monomials_of_degree(ring, degree);
  std::vector<MonomialIdeal> out;
  std::vector<Monomial> chosen;
  polymatroidal_dfs(ring, pool, 0, chosen, max_gens, out);
  return out;
}

namespace {

void seed_dfs(const RingContext& ring, const SpreadVector& t, const std::vector<Monomial>& pool,
              size_t next, std::vector<Monomial>& chosen, int max_seed, int max_gens,
              std::unordered_set<std::string>& seen, TspreadCorpus& out) {
  if (!chosen.empty()) {
    MonomialIdeal closure = tspread_strong_closure(MonomialIdeal::make(ring, chosen), t);
    if (seen.insert(closure.key()).second) {
      if (static_cast<int>(closure.num_gens()) <= max_gens)
        out.ideals.push_back(std::move(closure));
      else
        ++out.skipped_large;
    }
  }
  if (static_cast<int>(chosen.size()) == max_seed) return;
  for (size_t k = next; k < pool.size(); ++k) {
    chosen.push_back(pool[k]);
    seed_dfs(ring, t, pool, k + 1, chosen, max_seed, max_gens, seen, out);
    chosen.pop_back();
  }
}

}  // namespace

TspreadCorpus tspread_closure_corpus(const SpreadVector& t, int num_vars, int max_seed,
                                     int max_gens) {
  RingContext ring(num_vars);
  std::vector<Monomial> pool;
  for (int deg = 2; deg <= t.max_degree(); ++deg) {
    auto level = tspread_monomials(ring, t, deg);
    pool.insert(pool.end(), level.begin(), level.end());
  }
  TspreadCorpus out;
  std::unordered_set<std::string> seen;
  std::vector<Monomial> chosen;
  seed_dfs(ring, t, pool, 0, chosen, max_seed, max_gens, seen, out);
  return out;
}

namespace {

// Antichain enumeration over the face lattice; masks visited in decreasing
// popcount so no later mask can contain an earlier one, leaving only the
// "earlier contains later" comparability check.
void complex_dfs(int n, const std::vector<VarMask>& masks, size_t next,
                 std::vector<VarMask>& chosen, std::vector<SimplicialComplex>& out) {
  if (!chosen.empty()) out.push_back(SimplicialComplex::make(n, chosen));
  for (size_t k = next; k < masks.size(); ++k) {
    bool comparable = false;
    for (VarMask c : chosen) {
      if ((masks[k] & c) == masks[k]) {
        comparable = true;
        break;
      }
    }
    if (comparable) continue;
    chosen.push_back(masks[k]);
    complex_dfs(n, masks, k + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<SimplicialComplex> enumerate_complexes(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("complex enumeration supports 1..10 vertices");
  std::vector<VarMask> masks;
  for (VarMask m = 0; m < (VarMask{1} << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](VarMask a, VarMask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  std::vector<SimplicialComplex> out;
  std::vector<VarMask> chosen;
  complex_dfs(n, masks, 0, chosen, out);
  return out;
}

std::vector<SimpleGraph> random_graphs(int count, double density, std::uint64_t seed, int min_n,
                                       int max_n) {
  if (min_n < 1 || max_n < min_n) throw std::invalid_argument("bad vertex range");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge_dist(density);
  std::vector<SimpleGraph> out;
  out.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    int n = min_n + k % (max_n - min_n + 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (edge_dist(rng)) edges.emplace_back(i, j);
    out.push_back(SimpleGraph::make(n, std::move(edges)));
  }
  return out;
}

}  // namespace splitcm
