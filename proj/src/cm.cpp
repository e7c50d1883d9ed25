#include "splitcm/cm.hpp"

#include <stdexcept>

#include "json.hpp"
#include "splitcm/parse.hpp"

namespace splitcm {

bool is_cm(const SplitCertificate& cert) {
  if (!cert.ideal.is_proper_nonzero())
    throw std::domain_error("CM is decided for proper nonzero ideals");
  return depth_quotient(cert) == cert.ideal.krull_dim_quotient();
}

bool is_gorenstein(const MonomialIdeal& I) {
  // Splittable ideals are Gorenstein exactly when the minimal generators are
  // variables plus at most one deeper monomial: stripping the variables
  // leaves a principal (or zero) ideal in the remaining ones, a hypersurface.
  // Minimality already keeps that monomial off the stripped variables. With
  // no variable generators this reduces to "principal"; with no deeper
  // generator it is the variable-generated case.
  if (I.is_unit()) return false;
  int deep = 0;
  for (const Monomial& g : I.gens())
    if (g.degree() >= 2) ++deep;
  return deep <= 1;
}

HomologicalSummary analyze(const SplitCertificate& cert) {
  QuotientInvariants inv = quotient_invariants(cert);
  HomologicalSummary s;
  s.depth = inv.depth;
  s.krull_dim = inv.krull_dim;
  s.proj_dim = inv.proj_dim;
  s.reg = inv.reg;
  s.paths_agree = inv.paths_agree;
  s.cm = inv.depth == inv.krull_dim;
  s.gorenstein = is_gorenstein(cert.ideal);
  if (s.cm) {
    BettiTable table = betti_table(cert);
    int p = table.quotient_proj_dim();
    long long type = table.quotient_total(p);
    long long top = table.quotient_at(p, p + s.reg);
    s.cm_type = type;
    s.level = type == top;
    s.pseudo_gorenstein = top == 1;
  }
  return s;
}

long long cm_type_recursive(const SplitCertificate& cert) {
  switch (cert.kind) {
    case SplitCertificate::Kind::Unit:
    case SplitCertificate::Kind::Zero:
      return 0;
    case SplitCertificate::Kind::Principal:
      return 1;
    case SplitCertificate::Kind::Split:
      return cm_type_recursive(*cert.inner) + cm_type_recursive(*cert.outer);
  }
  throw std::logic_error("unreachable");
}

bool level_recursive(const SplitCertificate& cert) {
  switch (cert.kind) {
    case SplitCertificate::Kind::Unit:
    case SplitCertificate::Kind::Zero:
    case SplitCertificate::Kind::Principal:
      return true;
    case SplitCertificate::Kind::Split: {
      // Degenerate parts: x_i I_1 is a shift of I_1, and (x_i) + I_2 lives in
      // one fewer variable, so the surviving part decides.
      if (cert.outer->ideal.is_zero()) return level_recursive(*cert.inner);
      if (cert.inner->ideal.is_unit()) return level_recursive(*cert.outer);
      return level_recursive(*cert.inner) && level_recursive(*cert.outer) &&
             reg_quotient(*cert.inner) + 1 == reg_quotient(*cert.outer);
    }
  }
  throw std::logic_error("unreachable");
}

bool pseudo_gorenstein_recursive(const SplitCertificate& cert) {
  switch (cert.kind) {
    case SplitCertificate::Kind::Unit:
    case SplitCertificate::Kind::Zero:
    case SplitCertificate::Kind::Principal:
      return true;
    case SplitCertificate::Kind::Split: {
      if (cert.outer->ideal.is_zero()) return pseudo_gorenstein_recursive(*cert.inner);
      if (cert.inner->ideal.is_unit()) return pseudo_gorenstein_recursive(*cert.outer);
      int left = reg_quotient(*cert.inner) + 1;
      int right = reg_quotient(*cert.outer);
      if (left > right) return pseudo_gorenstein_recursive(*cert.inner);
      if (left < right) return pseudo_gorenstein_recursive(*cert.outer);
      return false;  // both sides contribute to the top graded Betti number
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

struct CmView {
  bool cm;
  int depth;
  int dim;
};

CmView quotient_cm_view(const SplitCertificate& cert) {
  int depth = depth_quotient(cert);
  int dim = cert.ideal.is_zero() ? cert.ideal.num_vars() : cert.ideal.krull_dim_quotient();
  return CmView{depth == dim, depth, dim};
}

std::unique_ptr<CmExplanation> explain_rec(const SplitCertificate& cert, Splitter& splitter) {
  auto node = std::make_unique<CmExplanation>(cert.ideal);
  switch (cert.kind) {
    case SplitCertificate::Kind::Unit:
      node->kind = "unit";
      return node;
    case SplitCertificate::Kind::Zero:
      node->kind = "zero";
      node->cm = true;
      node->depth = node->krull_dim = cert.ideal.num_vars();
      return node;
    case SplitCertificate::Kind::Principal:
      node->kind = "principal";
      node->cm = true;
      node->depth = node->krull_dim = cert.ideal.num_vars() - 1;
      return node;
    case SplitCertificate::Kind::Split:
      break;
  }

  node->kind = "split";
  node->var = cert.var;
  CmView view = quotient_cm_view(cert);
  node->cm = view.cm;
  node->depth = view.depth;
  node->krull_dim = view.dim;
  node->hypothesis = cert.ideal.inside_m_squared();
  if (node->hypothesis) {
    MonomialIdeal colon = cert.ideal.colon_by_variable(cert.var);
    MonomialIdeal sum = cert.ideal.plus_variable(cert.var);
    node->colon_matches_inner = colon == cert.inner->ideal;
    CertPtr colon_cert = splitter.certify(colon);
    CertPtr sum_cert = splitter.certify(sum);
    if (colon_cert && sum_cert) {
      CmView cv = quotient_cm_view(*colon_cert);
      CmView sv = quotient_cm_view(*sum_cert);
      node->cm_colon = cv.cm;
      node->cm_sum = sv.cm;
      node->depth_colon = cv.depth;
      node->depth_sum = sv.depth;
      node->depths_equal = cv.depth == sv.depth;
      node->theorem_verdict = cv.cm && sv.cm && *node->depths_equal;
      node->agrees = *node->theorem_verdict == node->cm;
    }
  }
  node->inner = explain_rec(*cert.inner, splitter);
  node->outer = explain_rec(*cert.outer, splitter);
  return node;
}

}  // namespace

std::unique_ptr<CmExplanation> explain_cm(const SplitCertificate& cert, Splitter& splitter) {
  if (!cert.ideal.is_proper_nonzero())
    throw std::domain_error("explanations are built for proper nonzero ideals");
  return explain_rec(cert, splitter);
}

bool explanation_agrees_everywhere(const CmExplanation& node) {
  if (node.hypothesis && (!node.agrees.has_value() || !*node.agrees)) return false;
  if (node.inner && !explanation_agrees_everywhere(*node.inner)) return false;
  if (node.outer && !explanation_agrees_everywhere(*node.outer)) return false;
  return true;
}

namespace {

nlohmann::json explanation_to_json(const CmExplanation& node) {
  nlohmann::json j;
  j["ideal"] = to_string(node.ideal);
  j["kind"] = node.kind;
  if (node.kind != "unit") {
    j["cm"] = node.cm;
    j["depth"] = node.depth;
    j["dim"] = node.krull_dim;
  }
  if (node.kind == "split") {
    j["var"] = node.var;
    j["hypothesis"] = node.hypothesis;
    if (node.hypothesis) {
      j["colon_matches_inner"] = node.colon_matches_inner;
      if (node.cm_colon) j["cm_colon"] = *node.cm_colon;
      if (node.cm_sum) j["cm_sum"] = *node.cm_sum;
      if (node.depth_colon) j["depth_colon"] = *node.depth_colon;
      if (node.depth_sum) j["depth_sum"] = *node.depth_sum;
      if (node.depths_equal) j["depths_equal"] = *node.depths_equal;
      if (node.theorem_verdict) j["theorem_verdict"] = *node.theorem_verdict;
      if (node.agrees) j["agrees"] = *node.agrees;
    }
    if (node.inner) j["inner"] = explanation_to_json(*node.inner);
    if (node.outer) j["outer"] = explanation_to_json(*node.outer);
  }
  return j;
}

}  // namespace

std::string explanation_json(const CmExplanation& node, bool pretty) {
  nlohmann::json j = explanation_to_json(node);
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace splitcm
