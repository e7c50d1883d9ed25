#include "splitcm/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitcm {

SpreadVector::SpreadVector(std::vector<int> gaps) : t(std::move(gaps)) {
  if (t.empty()) throw std::invalid_argument("gap vector needs at least one entry");
  for (int g : t) {
    if (g < 0) throw std::invalid_argument("gaps must be nonnegative");
  }
}

bool is_tspread_monomial(const Monomial& u, const SpreadVector& t) {
  std::vector<int> word = u.index_word();
  if (static_cast<int>(word.size()) > t.max_degree())
    throw std::invalid_argument("degree of the monomial exceeds what the gap vector supports");
  for (size_t j = 0; j + 1 < word.size(); ++j) {
    if (word[j + 1] - word[j] < t.t[j]) return false;
  }
  return true;
}

namespace {

void collect_tspread(const RingContext& ring, const SpreadVector& t, int remaining, int min_index,
                     std::vector<int>& word, std::vector<Monomial>& out) {
  if (remaining == 0) {
    std::vector<int> exps(static_cast<size_t>(ring.num_vars), 0);
    for (int i : word) exps[static_cast<size_t>(i) - 1] += 1;
    out.push_back(Monomial(std::move(exps)));
    return;
  }
  for (int i = min_index; i <= ring.num_vars; ++i) {
    word.push_back(i);
    int gap = word.size() <= t.t.size() ? t.t[word.size() - 1] : 0;
    collect_tspread(ring, t, remaining - 1, i + gap, word, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<Monomial> tspread_monomials(const RingContext& ring, const SpreadVector& t,
                                        int degree) {
  if (degree < 0 || degree > t.max_degree())
    throw std::invalid_argument("degree outside the range the gap vector supports");
  if (degree == 0) return {Monomial::one(ring.num_vars)};
  std::vector<int> word;
  std::vector<Monomial> out;
  collect_tspread(ring, t, degree, 1, word, out);
  return out;
}

namespace {

void require_tspread_gens(const MonomialIdeal& I, const SpreadVector& t) {
  for (const Monomial& g : I.gens()) {
    if (!is_tspread_monomial(g, t))
      throw std::invalid_argument("generator is not t-spread for the given gaps");
  }
}

/// Exchanges x_i (u / x_j), i < j, that stay t-spread.
std::vector<Monomial> tspread_exchanges(const Monomial& u, const SpreadVector& t) {
  std::vector<Monomial> out;
  int n = u.num_vars();
  for (int j = 2; j <= n; ++j) {
    if (u.exponent(j) == 0) continue;
    Monomial base = u.divide_by_variable(j);
    for (int i = 1; i < j; ++i) {
      Monomial v = base.times_variable(i);
      if (v == u) continue;
      if (is_tspread_monomial(v, t)) out.push_back(v);
    }
  }
  return out;
}

}  // namespace

bool is_tspread_strongly_stable(const MonomialIdeal& I, const SpreadVector& t) {
  if (!I.is_proper_nonzero())
    throw std::domain_error("spread stability is decided for proper nonzero ideals");
  require_tspread_gens(I, t);
  int top = I.max_gen_degree();
  for (int deg = I.min_gen_degree(); deg <= top; ++deg) {
    for (const Monomial& u : tspread_monomials(I.ring(), t, deg)) {
      if (!I.contains(u)) continue;
      for (const Monomial& v : tspread_exchanges(u, t)) {
        if (!I.contains(v)) return false;
      }
    }
  }
  return true;
}

MonomialIdeal tspread_strong_closure(const MonomialIdeal& seed, const SpreadVector& t) {
  if (!seed.is_proper_nonzero())
    throw std::domain_error("closure is built from a proper nonzero seed");
  require_tspread_gens(seed, t);
  MonomialIdeal current = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Monomial> missing;
    int top = current.max_gen_degree();
    for (int deg = 1; deg <= top; ++deg) {
      for (const Monomial& u : tspread_monomials(current.ring(), t, deg)) {
        if (!current.contains(u)) continue;
        for (const Monomial& v : tspread_exchanges(u, t)) {
          if (!current.contains(v)) missing.push_back(v);
        }
      }
    }
    if (!missing.empty()) {
      std::vector<Monomial> gens = current.gens();
      gens.insert(gens.end(), missing.begin(), missing.end());
      current = MonomialIdeal::make(current.ring(), std::move(gens));
      grew = true;
    }
  }
  return current;
}

std::optional<Monomial> tspread_cm_witness(const MonomialIdeal& I, const SpreadVector& t) {
  if (!is_tspread_strongly_stable(I, t))
    throw std::invalid_argument("the witness criterion needs a t-spread strongly stable ideal");
  if (!I.inside_m_squared())
    throw std::invalid_argument("the witness criterion needs every generator inside m^2");
  int n = I.effective_num_vars();
  for (int len = 2; len <= t.max_degree(); ++len) {
    // factor m carries index n - (t_m + ... + t_{len-1})
    std::vector<int> exps(static_cast<size_t>(I.num_vars()), 0);
    int suffix = 0;
    bool valid = true;
    std::vector<int> indices;
    for (int m = len; m >= 1; --m) {
      int idx = n - suffix;
      if (idx < 1) {
        valid = false;
        break;
      }
      indices.push_back(idx);
      if (m >= 2) suffix += t.t[static_cast<size_t>(m) - 2];
    }
    if (!valid) continue;
    for (int idx : indices) exps[static_cast<size_t>(idx) - 1] += 1;
    Monomial witness{exps};
    const auto& gens = I.gens();
    if (std::find(gens.begin(), gens.end(), witness) != gens.end()) return witness;
  }
  return std::nullopt;
}

bool tspread_cm_criterion(const MonomialIdeal& I, const SpreadVector& t) {
  return tspread_cm_witness(I, t).has_value();
}

bool tspread_witness_conclusive(const MonomialIdeal& I, const SpreadVector& t) {
  if (I.is_equigenerated()) return true;
  return std::all_of(t.t.begin(), t.t.end(), [](int gap) { return gap == 0; });
}

bool is_polymatroidal(const MonomialIdeal& I) {
  if (!I.is_equigenerated()) throw std::invalid_argument("mixed generator degrees");
  const auto& gens = I.gens();
  if (gens.size() <= 1) return true;
  int n = I.num_vars();
  auto in_gens = [&gens](const Monomial& m) {
    return std::binary_search(gens.begin(), gens.end(), m,
                              [](const Monomial& a, const Monomial& b) { return a.lex_less(b); });
  };
  for (const Monomial& u : gens) {
    for (const Monomial& v : gens) {
      if (u == v) continue;
      for (int i = 1; i <= n; ++i) {
        if (u.exponent(i) <= v.exponent(i)) continue;
        bool found = false;
        Monomial base = u.divide_by_variable(i);
        for (int j = 1; j <= n && !found; ++j) {
          if (u.exponent(j) < v.exponent(j) && in_gens(base.times_variable(j))) found = true;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool is_componentwise_polymatroidal(const MonomialIdeal& I, std::optional<VarMask> allowed) {
  if (I.is_zero() || I.is_unit()) return true;
  for (int j = I.min_gen_degree(); j <= I.max_gen_degree(); ++j) {
    if (!is_polymatroidal(I.degree_component(j, allowed))) return false;
  }
  return true;
}

PolymatroidalClassification classify_cm_polymatroidal(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero())
    throw std::domain_error("classification applies to proper nonzero ideals");
  if (!is_polymatroidal(I)) throw std::invalid_argument("ideal is not polymatroidal");
  PolymatroidalClassification c;
  c.degree = I.max_gen_degree();
  c.support = I.support_union();
  if (I.is_principal()) {
    c.tag = PolymatroidalClass::Principal;
    return c;
  }
  size_t full = monomials_of_degree(I.ring(), c.degree, c.support).size();
  if (I.num_gens() == full) {
    c.tag = PolymatroidalClass::Veronese;
    return c;
  }
  if (I.is_squarefree()) {
    size_t sqfree = squarefree_monomials_of_degree(I.ring(), c.degree, c.support).size();
    if (I.num_gens() == sqfree) {
      c.tag = PolymatroidalClass::SquarefreeVeronese;
      return c;
    }
  }
  c.tag = PolymatroidalClass::NotCM;
  return c;
}

const char* to_string(PolymatroidalClass tag) {
  switch (tag) {
    case PolymatroidalClass::Principal:
      return "principal";
    case PolymatroidalClass::Veronese:
      return "veronese";
    case PolymatroidalClass::SquarefreeVeronese:
      return "squarefree-veronese";
    case PolymatroidalClass::NotCM:
      return "not-cm";
  }
  return "?";
}

MonomialIdeal veronese(int n, int d) {
  if (d < 1) throw std::invalid_argument("Veronese degree must be positive");
  RingContext ring(n);
  return MonomialIdeal::make(ring, monomials_of_degree(ring, d));
}

MonomialIdeal squarefree_veronese(int n, int d) {
  if (d < 1 || d > n) throw std::invalid_argument("squarefree Veronese needs 1 <= d <= n");
  RingContext ring(n);
  return MonomialIdeal::make(ring, squarefree_monomials_of_degree(ring, d));
}

}  // namespace splitcm
