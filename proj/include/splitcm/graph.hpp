#ifndef SPLITCM_GRAPH_HPP
#define SPLITCM_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "splitcm/monomial.hpp"
#include "splitcm/split.hpp"

namespace splitcm {

/// Finite simple graph on {1,...,n}.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  std::vector<VarMask> adj;                // 1-based; adj[v] = neighbor mask

  static SimpleGraph make(int n, std::vector<std::pair<int, int>> edges);

  bool has_edge(int i, int j) const;
  VarMask neighbors(int v) const { return adj[static_cast<size_t>(v)]; }
  int degree(int v) const { return popcount(neighbors(v)); }
  bool operator==(const SimpleGraph&) const = default;
};

SimpleGraph complement(const SimpleGraph& G);
/// Same vertex set; edges at v removed.
SimpleGraph delete_vertex(const SimpleGraph& G, int v);

/// order[k] lists the vertex eliminated k-th; valid iff every vertex's
/// not-yet-eliminated neighborhood is a clique.
bool is_perfect_elimination_order(const SimpleGraph& G, const std::vector<int>& order);

/// Maximum-cardinality search followed by direct verification; empty when
/// the graph is not chordal.
std::optional<std::vector<int>> perfect_elimination_order(const SimpleGraph& G);

bool is_chordal(const SimpleGraph& G);
bool is_cochordal(const SimpleGraph& G);

/// I(G) = (x_i x_j : {i,j} an edge).
MonomialIdeal edge_ideal(const SimpleGraph& G);
/// J(G), generated by the minimal vertex covers.
MonomialIdeal cover_ideal(const SimpleGraph& G);

/// Certificate for I(G) read off a perfect elimination order of the
/// complement: the step at the order's first vertex v splits off
/// x_v (x_j : j a neighbor of v) and recurses into G minus v.
/// Throws when the order is not a perfect elimination order of G^c.
CertPtr edge_ideal_splitting(const SimpleGraph& G, const std::vector<int>& complement_peo,
                             Splitter& splitter);

struct BicmViolation {
  int position_i = 0, position_j = 0;  // positions along the order
  int vertex_i = 0, vertex_j = 0;      // original labels
  int forward_i = 0, forward_j = 0;    // forward degrees at those positions
};

struct BicmReport {
  bool bicm = false;
  bool cochordal = false;
  std::vector<int> peo;  // order on the non-isolated vertices, original labels
  std::optional<int> proj_dim;
  std::optional<BicmViolation> violation;
};

/// Unmixed + CM test for I(G) in both orders: the complement must be chordal
/// and the forward degrees along the order must drop by exactly one per step
/// wherever they are positive. Isolated vertices are set aside first.
BicmReport bicm(const SimpleGraph& G);

}  // namespace splitcm

#endif
