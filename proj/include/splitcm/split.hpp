#ifndef SPLITCM_SPLIT_HPP
#define SPLITCM_SPLIT_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "splitcm/betti.hpp"
#include "splitcm/monomial.hpp"

namespace splitcm {

struct SplitCertificate;
using CertPtr = std::shared_ptr<const SplitCertificate>;

/// Witness of vertex splittability. Base cases: the unit ideal, the zero
/// ideal, and principal ideals. A Split node records a splitting variable
/// x_var together with certified parts I_1 (inner) and I_2 (outer) such that
/// I = x_var * I_1 + I_2, the generators partition accordingly, and
/// I_2 is a subideal of I_1. Shared subtrees make this a DAG in practice.
struct SplitCertificate {
  enum class Kind { Unit, Zero, Principal, Split };

  Kind kind;
  MonomialIdeal ideal;
  std::optional<Monomial> gen;  // Principal only
  int var = 0;                  // Split only
  CertPtr inner;                // certificate for I_1
  CertPtr outer;                // certificate for I_2
};

struct VertexSplit {
  int var;
  MonomialIdeal inner;
  MonomialIdeal outer;
};

/// Split I at x_i when the forced candidate pair qualifies:
/// inner = (u / x_i : u in G(I), x_i | u), outer = (the remaining generators),
/// accepted iff inner is nonzero and outer is a subideal of inner. The outer
/// part may be zero. Requires I proper, nonzero and non-principal.
std::optional<VertexSplit> try_split_at(const MonomialIdeal& I, int i);

/// Variables (increasing order) at which try_split_at succeeds.
std::vector<int> admissible_split_vars(const MonomialIdeal& I);

/// Memoized recursive search for a vertex-splittability certificate.
/// Variables are probed in increasing index order, so results are
/// deterministic. Safe to share across threads.
class Splitter {
public:
  /// Certificate for I, or null when I is not vertex splittable.
  CertPtr certify(const MonomialIdeal& I);
  /// Like certify but forces the root split to use x_root_var (null when the
  /// split at that variable fails or a part is not splittable).
  CertPtr certify_with_root(const MonomialIdeal& I, int root_var);

private:
  CertPtr certify_locked(const MonomialIdeal& I);

  std::mutex mutex_;
  std::unordered_map<std::string, CertPtr> memo_;  // null value = not splittable
};

/// Rebuild the ideal a certificate claims to certify (children first).
MonomialIdeal reconstruct(const SplitCertificate& cert);

/// Check the defining conditions at every node: generator partition,
/// outer inside inner, and reconstruction matching the stored ideal.
bool verify_certificate(const SplitCertificate& cert);

/// Graded Betti numbers of the certified ideal via the splitting recursion
///   beta_{i,j}(I) = beta_{i,j-1}(I_1) + beta_{i,j}(I_2) + beta_{i-1,j-1}(I_2).
BettiTable betti_table(const SplitCertificate& cert);

/// depth S/I via depth S/I = min{ depth S/I_1, depth S/I_2 - 1 }.
/// Requires a certificate for a proper ideal (possibly zero).
int depth_quotient(const SplitCertificate& cert);

/// reg S/I via reg S/I = max{ reg S/I_1 + 1, reg S/I_2 }.
int reg_quotient(const SplitCertificate& cert);

/// Numeric invariants of S/I for proper nonzero I, with a consistency flag
/// comparing the recursion path against the Betti-table path.
struct QuotientInvariants {
  int depth = 0;
  int krull_dim = 0;
  int proj_dim = 0;
  int reg = 0;
  bool paths_agree = false;
};

QuotientInvariants quotient_invariants(const SplitCertificate& cert);

/// Order of G(I) with linear quotients, found by backtracking over prefixes
/// (memoized on the chosen subset), or nothing if no order works.
std::optional<std::vector<Monomial>> linear_quotients_order(const MonomialIdeal& I);

/// Certificate as JSON text: {kind, var?, inner?, outer?, gen?}.
std::string certificate_json(const SplitCertificate& cert, bool pretty = false);

}  // namespace splitcm

#endif
