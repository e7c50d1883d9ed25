#include "splitcm/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitcm {

namespace {

std::vector<VarMask> maximal_sets(std::vector<VarMask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarMask> out;
  for (VarMask f : sets) {
    bool maximal = true;
    for (VarMask g : sets) {
      if (g != f && (f & g) == f) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::make(int n, std::vector<VarMask> faces) {
  if (n < 1 || n > 63) throw std::invalid_argument("vertex count must lie in [1, 63]");
  if (faces.empty()) throw std::invalid_argument("a complex needs at least the empty face");
  VarMask universe = (VarMask{1} << n) - 1;
  for (VarMask f : faces) {
    if ((f & ~universe) != 0) throw std::invalid_argument("face outside the vertex set");
  }
  return SimplicialComplex{n, maximal_sets(std::move(faces))};
}

bool SimplicialComplex::is_face(VarMask f) const {
  return std::any_of(facets.begin(), facets.end(),
                     [f](VarMask facet) { return (f & facet) == f; });
}

VarMask SimplicialComplex::vertices() const {
  VarMask v = 0;
  for (VarMask f : facets) v |= f;
  return v;
}

int SimplicialComplex::dimension_plus_one() const {
  int best = 0;
  for (VarMask f : facets) best = std::max(best, popcount(f));
  return best;
}

SimplicialComplex SimplicialComplex::deletion(int v) const {
  VarMask bit = VarMask{1} << (v - 1);
  std::vector<VarMask> faces;
  for (VarMask f : facets) faces.push_back(f & ~bit);
  return SimplicialComplex{n, maximal_sets(std::move(faces))};
}

SimplicialComplex SimplicialComplex::link(int v) const {
  VarMask bit = VarMask{1} << (v - 1);
  std::vector<VarMask> faces;
  for (VarMask f : facets) {
    if (f & bit) faces.push_back(f & ~bit);
  }
  if (faces.empty()) throw std::invalid_argument("link of a non-vertex");
  return SimplicialComplex{n, maximal_sets(std::move(faces))};
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw std::invalid_argument("Stanley-Reisner needs a squarefree ideal");
  if (I.is_unit()) throw std::invalid_argument("the unit ideal has no Stanley-Reisner complex");
  int n = I.num_vars();
  std::vector<VarMask> supports = I.gen_supports();
  std::vector<VarMask> faces;
  for (VarMask f = 0; f < (VarMask{1} << n); ++f) {
    bool face = std::none_of(supports.begin(), supports.end(),
                             [f](VarMask s) { return (s & f) == s; });
    if (face) faces.push_back(f);
  }
  return SimplicialComplex::make(n, std::move(faces));
}

MonomialIdeal dual_stanley_reisner_ideal(const SimplicialComplex& complex) {
  VarMask universe = (VarMask{1} << complex.n) - 1;
  std::vector<Monomial> gens;
  for (VarMask f : complex.facets) {
    VarMask comp = universe & ~f;
    std::vector<int> exps(static_cast<size_t>(complex.n), 0);
    for (int k = 0; k < complex.n; ++k) {
      if ((comp >> k) & 1) exps[static_cast<size_t>(k)] = 1;
    }
    gens.push_back(Monomial(std::move(exps)));
  }
  return MonomialIdeal::make(RingContext(complex.n), std::move(gens));
}

}  // namespace splitcm
