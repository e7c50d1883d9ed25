#ifndef SPLITCM_ORACLE_HPP
#define SPLITCM_ORACLE_HPP

#include <map>
#include <string>
#include <unordered_map>

#include "splitcm/betti.hpp"
#include "splitcm/complex.hpp"
#include "splitcm/gf.hpp"
#include "splitcm/monomial.hpp"

namespace splitcm {

/// Graded Betti numbers of I from the Taylor complex on G(I): the tensored
/// boundary keeps a +-1 entry exactly where deleting a generator preserves
/// the lcm, and homology ranks are computed stratum by stratum (subset size,
/// lcm degree) by Gaussian elimination over GF(p). Independent of the
/// splitting recursion. Capped at 20 generators; the unit ideal is rejected.
BettiTable taylor_betti(const MonomialIdeal& I, const gf::FieldSpec& field);

/// depth S/I via Auslander-Buchsbaum on the Taylor-complex resolution.
int depth_oracle(const MonomialIdeal& I, const gf::FieldSpec& field);

/// depth == dim test with both sides computed oracle-side.
bool is_cm_oracle(const MonomialIdeal& I, const gf::FieldSpec& field);

/// True when all generators share one degree d and the resolution is linear
/// (every beta_{i,j}(I) sits at j = i + d).
bool has_linear_resolution(const BettiTable& table, int gen_degree);

/// Alexander dual of a squarefree proper nonzero ideal: generated by the
/// minimal transversals of the generator supports.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

/// Vertex decomposability: a complex is a simplex, or some vertex has a
/// vertex-decomposable deletion and link with no link face being a facet of
/// the deletion. Memoized; intended for at most 8 vertices.
class VertexDecomposability {
 public:
  bool decide(const SimplicialComplex& complex);

 private:
  std::map<std::vector<VarMask>, bool> memo_;
};

bool is_vertex_decomposable(const SimplicialComplex& complex);

}  // namespace splitcm

#endif
