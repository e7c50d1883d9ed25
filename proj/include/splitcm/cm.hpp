#ifndef SPLITCM_CM_HPP
#define SPLITCM_CM_HPP

#include <memory>
#include <optional>
#include <string>

#include "splitcm/split.hpp"

namespace splitcm {

/// Homological profile of S/I for a certified proper nonzero ideal.
/// cm_type, level and pseudo_gorenstein are reported only when S/I is CM.
struct HomologicalSummary {
  int depth = 0;
  int krull_dim = 0;
  int proj_dim = 0;
  int reg = 0;
  bool cm = false;
  bool gorenstein = false;
  std::optional<long long> cm_type;
  std::optional<bool> level;
  std::optional<bool> pseudo_gorenstein;
  bool paths_agree = false;
};

/// depth S/I == dim S/I, with depth from the splitting recursion and dim
/// from minimal covers of the generator supports.
bool is_cm(const SplitCertificate& cert);

/// Syntactic Gorenstein test for vertex splittable ideals: the minimal
/// generators are variables plus at most one monomial of degree >= 2
/// (covering the principal and variable-generated cases and their mix).
bool is_gorenstein(const MonomialIdeal& I);

/// Full classification off one certificate.
HomologicalSummary analyze(const SplitCertificate& cert);

/// Cross-check routes that walk the certificate instead of the Betti table.
/// CM-type adds up over a split (unit and zero parts contribute 0).
long long cm_type_recursive(const SplitCertificate& cert);
/// Levelness: both parts level and reg S/I_1 + 1 == reg S/I_2 at a split
/// (degenerate parts fall back to the surviving part).
bool level_recursive(const SplitCertificate& cert);
/// Pseudo-Gorenstein: the part owning the top regularity is pseudo-Gorenstein
/// and owns it strictly.
bool pseudo_gorenstein_recursive(const SplitCertificate& cert);

/// Inductive CM explanation. At every split node with I inside m^2, the
/// recorded step checks CM(I) <=> CM(I : x_i) and CM((I, x_i)) and
/// depth S/(I : x_i) = depth S/(I, x_i); nodes with a degree-one generator
/// carry hypothesis = false and record nothing else.
struct CmExplanation {
  MonomialIdeal ideal;
  std::string kind;  // unit | zero | principal | split
  bool cm = false;
  int depth = 0;
  int krull_dim = 0;
  bool hypothesis = false;
  int var = 0;
  bool colon_matches_inner = false;
  std::optional<bool> cm_colon, cm_sum, depths_equal;
  std::optional<int> depth_colon, depth_sum;
  std::optional<bool> theorem_verdict;  // CM(colon) && CM(sum) && depths_equal
  std::optional<bool> agrees;           // theorem_verdict == cm
  std::unique_ptr<CmExplanation> inner, outer;

  CmExplanation(MonomialIdeal i) : ideal(std::move(i)) {}
};

std::unique_ptr<CmExplanation> explain_cm(const SplitCertificate& cert, Splitter& splitter);

/// True at every node of the explanation where the hypothesis applies.
bool explanation_agrees_everywhere(const CmExplanation& node);

std::string explanation_json(const CmExplanation& node, bool pretty = false);

}  // namespace splitcm

#endif
