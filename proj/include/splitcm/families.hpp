#ifndef SPLITCM_FAMILIES_HPP
#define SPLITCM_FAMILIES_HPP

#include <optional>
#include <vector>

#include "splitcm/monomial.hpp"

namespace splitcm {

/// Gap vector t = (t_1,...,t_{d-1}) with t_i >= 0. A monomial
/// x_{i_1} ... x_{i_l} (indices ascending with multiplicity) is t-spread
/// when l <= d and i_{j+1} - i_j >= t_j for every j.
struct SpreadVector {
  std::vector<int> t;

  explicit SpreadVector(std::vector<int> gaps);
  int max_degree() const { return static_cast<int>(t.size()) + 1; }
};

/// Throws when deg(u) exceeds the degree the gap vector supports.
bool is_tspread_monomial(const Monomial& u, const SpreadVector& t);

/// All t-spread monomials of the given degree (degree <= d enforced).
std::vector<Monomial> tspread_monomials(const RingContext& ring, const SpreadVector& t, int degree);

/// Exchange-closedness over every t-spread monomial of I up to the top
/// generator degree: x_i (u / x_j) must stay in I whenever i < j, x_j | u and
/// the exchange is again t-spread. Throws when a generator is not t-spread.
bool is_tspread_strongly_stable(const MonomialIdeal& I, const SpreadVector& t);

/// Smallest t-spread strongly stable ideal containing the seed generators.
MonomialIdeal tspread_strong_closure(const MonomialIdeal& seed, const SpreadVector& t);

/// Witness-monomial lookup for a t-spread strongly stable ideal inside m^2:
/// the generator x_{n-(t_1+...+t_{l-1})} x_{n-(t_2+...+t_{l-1})} ... x_n for
/// some length l in [2, d], with n the largest variable dividing a generator.
/// A Cohen-Macaulay quotient always has the witness. The converse holds on
/// the conclusive regimes (see below) but fails for mixed generator degrees
/// with nonzero gaps: the (1,1)-spread (x1x2, x1x3, x1x4, x2x3x4) carries
/// x2x3x4 yet has depth 1 < dim 2.
std::optional<Monomial> tspread_cm_witness(const MonomialIdeal& I, const SpreadVector& t);
bool tspread_cm_criterion(const MonomialIdeal& I, const SpreadVector& t);

/// True when the witness decides Cohen-Macaulayness exactly: equigenerated
/// ideals (the depth ladder of the splitting recursion is then pinned by the
/// variable window) and all-zero gap vectors (a witness x_n^l pulls the whole
/// power m^l into the ideal, leaving an artinian quotient).
bool tspread_witness_conclusive(const MonomialIdeal& I, const SpreadVector& t);

/// Single-degree exchange property: for u, v in G(I) and any i with
/// deg_{x_i} u > deg_{x_i} v there is j with deg_{x_j} u < deg_{x_j} v and
/// x_j (u / x_i) in G(I). Throws on mixed generator degrees.
bool is_polymatroidal(const MonomialIdeal& I);

/// Every degree component between the extreme generator degrees is
/// polymatroidal (components outside that band come for free).
bool is_componentwise_polymatroidal(const MonomialIdeal& I, std::optional<VarMask> allowed = {});

enum class PolymatroidalClass { Principal, Veronese, SquarefreeVeronese, NotCM };

struct PolymatroidalClassification {
  PolymatroidalClass tag = PolymatroidalClass::NotCM;
  int degree = 0;
  VarMask support = 0;
};

/// CM classification of a polymatroidal ideal: principal, a power of the
/// maximal ideal in its support variables, or a squarefree Veronese there;
/// anything else is not CM. Throws when I is not polymatroidal.
PolymatroidalClassification classify_cm_polymatroidal(const MonomialIdeal& I);

const char* to_string(PolymatroidalClass tag);

/// (x_1,...,x_n)^d in its own ring.
MonomialIdeal veronese(int n, int d);
/// Ideal of all squarefree degree-d monomials in n variables.
MonomialIdeal squarefree_veronese(int n, int d);

}  // namespace splitcm

#endif
