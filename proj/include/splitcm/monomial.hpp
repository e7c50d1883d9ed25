#ifndef SPLITCM_MONOMIAL_HPP
#define SPLITCM_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace splitcm {

/// Set of variable indices as a bitmask; bit k-1 stands for x_k.
using VarMask = std::uint64_t;

int popcount(VarMask m);

/// The ambient polynomial ring S = K[x_1,...,x_n] with the standard grading.
/// Only the variable count lives here; coefficient fields are an oracle-side
/// concern (see FieldSpec).
struct RingContext {
  int num_vars;

  explicit RingContext(int n);
  VarMask all_vars() const;
  bool operator==(const RingContext&) const = default;
};

/// A monomial in a fixed number of variables, stored as its exponent tuple.
class Monomial {
public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int num_vars);
  static Monomial variable(int num_vars, int i);  // x_i, 1-based
  static Monomial from_exponents(std::vector<int> exponents) {
    return Monomial(std::move(exponents));
  }

  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  int exponent(int i) const { return exps_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  VarMask support() const;
  /// Largest i with x_i dividing this monomial; 0 for the monomial 1.
  int max_var() const;

  Monomial times(const Monomial& other) const;
  Monomial times_variable(int i) const;
  /// Requires x_i | this.
  Monomial divide_by_variable(int i) const;
  /// this / gcd(this, d) -- the monomial generator of (this) : (d).
  Monomial quotient_by(const Monomial& d) const;
  Monomial lcm(const Monomial& other) const;

  /// Sorted support with multiplicity: x1^2*x3 -> {1, 1, 3}.
  std::vector<int> index_word() const;

  bool operator==(const Monomial&) const = default;
  bool lex_less(const Monomial& other) const;

private:
  std::vector<int> exps_;
};

/// A monomial ideal held by its unique minimal monomial generating set G(I),
/// stored as a lexicographically sorted divisibility antichain. The zero
/// ideal has no generators; the unit ideal S is generated by 1.
class MonomialIdeal {
public:
  /// Canonicalize an arbitrary generating set (minimalize + sort).
  static MonomialIdeal make(const RingContext& ring, std::vector<Monomial> gens);
  static MonomialIdeal zero(const RingContext& ring);
  static MonomialIdeal unit(const RingContext& ring);
  /// The maximal ideal m = (x_1,...,x_n).
  static MonomialIdeal maximal(const RingContext& ring);

  const RingContext& ring() const { return ring_; }
  int num_vars() const { return ring_.num_vars; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_principal() const;
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }
  bool is_squarefree() const;
  bool is_variable_generated() const;
  /// True iff every generator has degree >= 2 (i.e. I is inside m^2).
  bool inside_m_squared() const;
  bool is_equigenerated() const;
  int min_gen_degree() const;  // requires a generator
  int max_gen_degree() const;  // requires a generator
  /// Largest variable index dividing some generator (0 for zero/unit ideal).
  int effective_num_vars() const;
  VarMask support_union() const;
  std::vector<VarMask> gen_supports() const;

  bool contains(const Monomial& u) const;
  bool is_subideal_of(const MonomialIdeal& other) const;
  MonomialIdeal colon_by_variable(int i) const;
  MonomialIdeal colon_by_monomial(const Monomial& u) const;
  MonomialIdeal plus_variable(int i) const;
  MonomialIdeal plus(const MonomialIdeal& other) const;
  MonomialIdeal times_variable(int i) const;
  /// The ideal generated by every degree-j monomial of I, optionally within
  /// a restricted variable set.
  MonomialIdeal degree_component(int j, std::optional<VarMask> allowed = {}) const;
  /// Krull dimension of S/I. Rejects the unit ideal; returns n for I = 0.
  int krull_dim_quotient() const;

  /// Canonical byte encoding; equal ideals have equal keys.
  std::string key() const;
  bool operator==(const MonomialIdeal&) const = default;

private:
  MonomialIdeal(RingContext ring, std::vector<Monomial> gens);

  RingContext ring_;
  std::vector<Monomial> gens_;
};

/// All monomials of the given total degree, ascending lex, optionally
/// restricted to a variable mask.
std::vector<Monomial> monomials_of_degree(const RingContext& ring, int degree,
                                          std::optional<VarMask> allowed = {});
std::vector<Monomial> squarefree_monomials_of_degree(const RingContext& ring, int degree,
                                                     std::optional<VarMask> allowed = {});

/// Size of a minimum hitting set of the supports (exhaustive branch and bound).
int min_support_cover(const std::vector<VarMask>& supports, int num_vars);
/// All inclusion-minimal hitting sets of the supports.
std::vector<VarMask> minimal_support_covers(const std::vector<VarMask>& supports, int num_vars);

}  // namespace splitcm

#endif
