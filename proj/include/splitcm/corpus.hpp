#ifndef SPLITCM_CORPUS_HPP
#define SPLITCM_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "splitcm/complex.hpp"
#include "splitcm/families.hpp"
#include "splitcm/graph.hpp"
#include "splitcm/monomial.hpp"

namespace splitcm {

/// Every monomial ideal whose minimal generators are at most max_gens
/// monomials of degree between 1 and max_deg (divisibility antichains over
/// the full monomial pool; proper and nonzero by construction).
std::vector<MonomialIdeal> enumerate_antichain_ideals(int n, int max_gens, int max_deg);

/// Reproducible random sample; generating sets are minimalized, so the actual
/// generator counts may come out below max_gens.
std::vector<MonomialIdeal> random_ideals(int n, int count, int max_gens, int max_deg,
                                         std::uint64_t seed);

/// All polymatroidal ideals generated by up to max_gens monomials of the
/// given degree.
std::vector<MonomialIdeal> enumerate_polymatroidal(int n, int degree, int max_gens);

/// t-spread strongly stable ideals inside m^2, produced as exchange closures
/// of seed sets of up to max_seed t-spread monomials (degrees 2..d), then
/// deduplicated. Closures with more than max_gens generators are counted in
/// skipped_large instead of returned.
struct TspreadCorpus {
  std::vector<MonomialIdeal> ideals;
  int skipped_large = 0;
};
TspreadCorpus tspread_closure_corpus(const SpreadVector& t, int num_vars, int max_seed,
                                     int max_gens);

/// All simplicial complexes on vertex set {1..n}: antichains of subsets of
/// 2^[n] with at least one facet (the facet set may be just the empty face).
std::vector<SimplicialComplex> enumerate_complexes(int n);

/// Erdos-Renyi sample; each of the count graphs draws every edge with the
/// given density. Vertex counts cycle over min_n..max_n.
std::vector<SimpleGraph> random_graphs(int count, double density, std::uint64_t seed,
                                       int min_n = 4, int max_n = 8);

}  // namespace splitcm

#endif
