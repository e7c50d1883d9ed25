#include "splitcm/monomial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace splitcm {

int popcount(VarMask m) { return std::popcount(m); }

RingContext::RingContext(int n) : num_vars(n) {
  if (n < 1 || n > 63) throw std::invalid_argument("ring must have between 1 and 63 variables");
}

VarMask RingContext::all_vars() const {
  return (num_vars == 63) ? ~VarMask{0} >> 1 : (VarMask{1} << num_vars) - 1;
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::invalid_argument("monomial needs at least one variable slot");
  for (int e : exps_) {
    if (e < 0 || e >= 64) throw std::invalid_argument("exponents must lie in [0, 64)");
  }
}

Monomial Monomial::one(int num_vars) { return Monomial(std::vector<int>(static_cast<size_t>(num_vars), 0)); }

Monomial Monomial::variable(int num_vars, int i) {
  if (i < 1 || i > num_vars) throw std::out_of_range("variable index out of range");
  std::vector<int> e(static_cast<size_t>(num_vars), 0);
  e[static_cast<size_t>(i) - 1] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

VarMask Monomial::support() const {
  VarMask m = 0;
  for (size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > 0) m |= VarMask{1} << k;
  }
  return m;
}

int Monomial::max_var() const {
  for (int k = static_cast<int>(exps_.size()); k >= 1; --k) {
    if (exps_[static_cast<size_t>(k) - 1] > 0) return k;
  }
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  std::vector<int> e(exps_);
  for (size_t k = 0; k < e.size(); ++k) e[k] += other.exps_[k];
  return Monomial(std::move(e));
}

Monomial Monomial::times_variable(int i) const {
  std::vector<int> e(exps_);
  e.at(static_cast<size_t>(i) - 1) += 1;
  return Monomial(std::move(e));
}

Monomial Monomial::divide_by_variable(int i) const {
  std::vector<int> e(exps_);
  int& slot = e.at(static_cast<size_t>(i) - 1);
  if (slot == 0) throw std::invalid_argument("monomial not divisible by that variable");
  slot -= 1;
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_by(const Monomial& d) const {
  std::vector<int> e(exps_);
  for (size_t k = 0; k < e.size(); ++k) e[k] = std::max(0, e[k] - d.exps_[k]);
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> e(exps_);
  for (size_t k = 0; k < e.size(); ++k) e[k] = std::max(e[k], other.exps_[k]);
  return Monomial(std::move(e));
}

std::vector<int> Monomial::index_word() const {
  std::vector<int> word;
  for (size_t k = 0; k < exps_.size(); ++k) {
    for (int r = 0; r < exps_[k]; ++r) word.push_back(static_cast<int>(k) + 1);
  }
  return word;
}

bool Monomial::lex_less(const Monomial& other) const { return exps_ < other.exps_; }

MonomialIdeal::MonomialIdeal(RingContext ring, std::vector<Monomial> gens)
    : ring_(ring), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::make(const RingContext& ring, std::vector<Monomial> gens) {
  for (const Monomial& g : gens) {
    if (g.num_vars() != ring.num_vars) throw std::invalid_argument("generator from a different ring");
  }
  // The unit ideal swallows everything else.
  for (const Monomial& g : gens) {
    if (g.is_one()) return unit(ring);
  }
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.lex_less(b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (size_t k = 0; k < gens.size(); ++k) {
    bool redundant = false;
    for (size_t l = 0; l < gens.size() && !redundant; ++l) {
      if (l != k && gens[l].divides(gens[k])) redundant = true;
    }
    if (!redundant) minimal.push_back(gens[k]);
  }
  return MonomialIdeal(ring, std::move(minimal));
}

MonomialIdeal MonomialIdeal::zero(const RingContext& ring) { return MonomialIdeal(ring, {}); }

MonomialIdeal MonomialIdeal::unit(const RingContext& ring) {
  return MonomialIdeal(ring, {Monomial::one(ring.num_vars)});
}

MonomialIdeal MonomialIdeal::maximal(const RingContext& ring) {
  std::vector<Monomial> gens;
  for (int i = 1; i <= ring.num_vars; ++i) gens.push_back(Monomial::variable(ring.num_vars, i));
  return make(ring, std::move(gens));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

bool MonomialIdeal::is_principal() const { return gens_.size() == 1 && !gens_[0].is_one(); }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_variable_generated() const {
  return !gens_.empty() &&
         std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() == 1; });
}

bool MonomialIdeal::inside_m_squared() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() >= 2; });
}

bool MonomialIdeal::is_equigenerated() const {
  if (gens_.empty()) return true;
  int d = gens_[0].degree();
  return std::all_of(gens_.begin(), gens_.end(), [d](const Monomial& g) { return g.degree() == d; });
}

int MonomialIdeal::min_gen_degree() const {
  if (gens_.empty()) throw std::domain_error("zero ideal has no generator degrees");
  int d = gens_[0].degree();
  for (const Monomial& g : gens_) d = std::min(d, g.degree());
  return d;
}

int MonomialIdeal::max_gen_degree() const {
  if (gens_.empty()) throw std::domain_error("zero ideal has no generator degrees");
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

int MonomialIdeal::effective_num_vars() const {
  int n = 0;
  for (const Monomial& g : gens_) n = std::max(n, g.max_var());
  return n;
}

VarMask MonomialIdeal::support_union() const {
  VarMask m = 0;
  for (const Monomial& g : gens_) m |= g.support();
  return m;
}

std::vector<VarMask> MonomialIdeal::gen_supports() const {
  std::vector<VarMask> s;
  s.reserve(gens_.size());
  for (const Monomial& g : gens_) s.push_back(g.support());
  return s;
}

bool MonomialIdeal::contains(const Monomial& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&u](const Monomial& g) { return g.divides(u); });
}

bool MonomialIdeal::is_subideal_of(const MonomialIdeal& other) const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&other](const Monomial& g) { return other.contains(g); });
}

MonomialIdeal MonomialIdeal::colon_by_variable(int i) const {
  return colon_by_monomial(Monomial::variable(ring_.num_vars, i));
}

MonomialIdeal MonomialIdeal::colon_by_monomial(const Monomial& u) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.quotient_by(u));
  return make(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::plus_variable(int i) const {
  std::vector<Monomial> gens(gens_);
  gens.push_back(Monomial::variable(ring_.num_vars, i));
  return make(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal& other) const {
  if (!(ring_ == other.ring_)) throw std::invalid_argument("ideal sum across different rings");
  std::vector<Monomial> gens(gens_);
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return make(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::times_variable(int i) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.times_variable(i));
  return make(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::degree_component(int j, std::optional<VarMask> allowed) const {
  if (j < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<Monomial> gens;
  for (const Monomial& m : monomials_of_degree(ring_, j, allowed)) {
    if (contains(m)) gens.push_back(m);
  }
  return make(ring_, std::move(gens));
}

int MonomialIdeal::krull_dim_quotient() const {
  if (is_unit()) throw std::domain_error("S/S is the zero ring; no Krull dimension here");
  return ring_.num_vars - min_support_cover(gen_supports(), ring_.num_vars);
}

std::string MonomialIdeal::key() const {
  std::string k;
  k.reserve(2 + gens_.size() * static_cast<size_t>(ring_.num_vars));
  k.push_back(static_cast<char>(ring_.num_vars));
  for (const Monomial& g : gens_) {
    k.push_back('|');
    for (int e : g.exponents()) k.push_back(static_cast<char>(e));
  }
  return k;
}

namespace {

void collect_monomials(const RingContext& ring, int degree, VarMask allowed, int max_exp,
                       size_t var, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var + 1 == exps.size()) {
    bool ok = degree == 0 || ((allowed >> var) & 1 && degree <= max_exp);
    if (ok) {
      exps[var] = degree;
      out.push_back(Monomial(exps));
      exps[var] = 0;
    }
    return;
  }
  int cap = ((allowed >> var) & 1) ? std::min(degree, max_exp) : 0;
  for (int e = 0; e <= cap; ++e) {
    exps[var] = e;
    collect_monomials(ring, degree - e, allowed, max_exp, var + 1, exps, out);
  }
  exps[var] = 0;
}

std::vector<Monomial> enumerate(const RingContext& ring, int degree, std::optional<VarMask> allowed,
                                int max_exp) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  VarMask mask = allowed.value_or(ring.all_vars()) & ring.all_vars();
  std::vector<int> exps(static_cast<size_t>(ring.num_vars), 0);
  std::vector<Monomial> out;
  collect_monomials(ring, degree, mask, max_exp, 0, exps, out);
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingContext& ring, int degree,
                                          std::optional<VarMask> allowed) {
  return enumerate(ring, degree, allowed, 63);
}

std::vector<Monomial> squarefree_monomials_of_degree(const RingContext& ring, int degree,
                                                     std::optional<VarMask> allowed) {
  return enumerate(ring, degree, allowed, 1);
}

namespace {

void cover_bound(const std::vector<VarMask>& supports, VarMask chosen, int chosen_size, int& best) {
  if (chosen_size >= best) return;
  VarMask pending = 0;
  bool all_hit = true;
  for (VarMask s : supports) {
    if ((s & chosen) == 0) {
      all_hit = false;
      pending = s;
      break;
    }
  }
  if (all_hit) {
    best = chosen_size;
    return;
  }
  for (VarMask bits = pending; bits; bits &= bits - 1) {
    VarMask low = bits & (~bits + 1);
    cover_bound(supports, chosen | low, chosen_size + 1, best);
  }
}

void cover_enumerate(const std::vector<VarMask>& supports, VarMask chosen,
                     std::vector<VarMask>& found) {
  VarMask pending = 0;
  bool all_hit = true;
  for (VarMask s : supports) {
    if ((s & chosen) == 0) {
      all_hit = false;
      pending = s;
      break;
    }
  }
  if (all_hit) {
    found.push_back(chosen);
    return;
  }
  for (VarMask bits = pending; bits; bits &= bits - 1) {
    VarMask low = bits & (~bits + 1);
    cover_enumerate(supports, chosen | low, found);
  }
}

}  // namespace

int min_support_cover(const std::vector<VarMask>& supports, int num_vars) {
  for (VarMask s : supports) {
    if (s == 0) throw std::invalid_argument("empty support cannot be covered");
  }
  int best = num_vars + 1;
  cover_bound(supports, 0, 0, best);
  return best;
}

std::vector<VarMask> minimal_support_covers(const std::vector<VarMask>& supports, int num_vars) {
  for (VarMask s : supports) {
    if (s == 0) throw std::invalid_argument("empty support cannot be covered");
  }
  (void)num_vars;
  std::vector<VarMask> found;
  cover_enumerate(supports, 0, found);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<VarMask> minimal;
  for (VarMask c : found) {
    bool keep = true;
    for (VarMask d : found) {
      if (d != c && (d & c) == d) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(c);
  }
  return minimal;
}

}  // namespace splitcm
