#ifndef SPLITCM_COMPLEX_HPP
#define SPLITCM_COMPLEX_HPP

#include <vector>

#include "splitcm/monomial.hpp"

namespace splitcm {

/// Simplicial complex on the vertex set {1,...,n}, stored by its facets
/// (inclusion-maximal faces) as sorted bitmasks. The complex {emptyset} is
/// the single facet 0; a void complex (no faces at all) is not represented.
struct SimplicialComplex {
  int n = 0;
  std::vector<VarMask> facets;

  static SimplicialComplex make(int n, std::vector<VarMask> faces);

  bool is_face(VarMask f) const;
  /// Vertices that lie in some face.
  VarMask vertices() const;
  bool is_simplex() const { return facets.size() == 1; }
  /// Largest face size.
  int dimension_plus_one() const;

  /// Faces not containing v (as a complex).
  SimplicialComplex deletion(int v) const;
  /// { F : v not in F, F + v is a face }.
  SimplicialComplex link(int v) const;

  bool operator==(const SimplicialComplex&) const = default;
};

/// Stanley-Reisner complex of a squarefree ideal: faces are the subsets
/// supporting no generator. The unit ideal is rejected.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I);

/// Stanley-Reisner ideal of the Alexander dual: generated by the monomials
/// x_{[n] minus F} over the facets F.
MonomialIdeal dual_stanley_reisner_ideal(const SimplicialComplex& complex);

}  // namespace splitcm

#endif
