#include "splitcm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace splitcm {

namespace {

struct Stratum {
  std::vector<std::uint32_t> subsets;                 // generator subsets, ascending
  std::unordered_map<std::uint32_t, std::size_t> index;
};

}  // namespace

BettiTable taylor_betti(const MonomialIdeal& I, const gf::FieldSpec& field) {
  if (I.is_unit()) throw std::domain_error("Taylor oracle expects a proper ideal");
  const auto& gens = I.gens();
  const std::size_t m = gens.size();
  if (m > 20) throw std::invalid_argument("Taylor oracle capped at 20 generators");
  BettiTable table;
  if (m == 0) return table;

  const int n = I.num_vars();
  const std::size_t count = std::size_t{1} << m;
  // lcm exponent vectors for every generator subset, built one bit at a time
  std::vector<std::uint8_t> lcm_exps(count * static_cast<std::size_t>(n), 0);
  std::vector<std::uint16_t> lcm_deg(count, 0);
  for (std::uint32_t f = 1; f < count; ++f) {
    std::uint32_t low = f & (~f + 1);
    std::uint32_t rest = f ^ low;
    int g = std::countr_zero(low);
    const std::uint8_t* base = &lcm_exps[static_cast<std::size_t>(rest) * n];
    std::uint8_t* dst = &lcm_exps[static_cast<std::size_t>(f) * n];
    const auto& exps = gens[static_cast<std::size_t>(g)].exponents();
    std::uint16_t deg = 0;
    for (int k = 0; k < n; ++k) {
      dst[k] = std::max(base[k], static_cast<std::uint8_t>(exps[static_cast<std::size_t>(k)]));
      deg = static_cast<std::uint16_t>(deg + dst[k]);
    }
    lcm_deg[f] = deg;
  }

  // strata[size][degree]
  std::map<int, std::map<int, Stratum>> strata;
  for (std::uint32_t f = 0; f < count; ++f) {
    Stratum& s = strata[std::popcount(f)][lcm_deg[f]];
    s.index.emplace(f, s.subsets.size());
    s.subsets.push_back(f);
  }

  // per-stratum boundary ranks: rank[s][j] for the map (s, j) -> (s-1, j)
  std::map<int, std::map<int, std::size_t>> rank;
  for (auto& [size, by_deg] : strata) {
    if (size == 0) continue;
    for (auto& [deg, stratum] : by_deg) {
      auto target_size = strata.find(size - 1);
      const Stratum* target = nullptr;
      if (target_size != strata.end()) {
        auto td = target_size->second.find(deg);
        if (td != target_size->second.end()) target = &td->second;
      }
      if (target == nullptr) {
        rank[size][deg] = 0;
        continue;
      }
      gf::DenseMatrix mat(stratum.subsets.size(), target->subsets.size());
      for (std::size_t r = 0; r < stratum.subsets.size(); ++r) {
        std::uint32_t f = stratum.subsets[r];
        int sign = 0;
        for (std::uint32_t bits = f; bits; bits &= bits - 1) {
          std::uint32_t low = bits & (~bits + 1);
          std::uint32_t sub = f ^ low;
          if (lcm_deg[sub] == lcm_deg[f]) {
            auto it = target->index.find(sub);
            if (it != target->index.end()) {
              mat.at(r, it->second) = (sign % 2 == 0) ? 1 : field.p - 1;
            }
          }
          ++sign;
        }
      }
      rank[size][deg] = gf::rank_mod_p(std::move(mat), field);
    }
  }

  // beta_{i,j}(I) = Tor_{i+1}(S/I)_j read off subsets of size i + 1
  for (auto& [size, by_deg] : strata) {
    if (size == 0) continue;
    for (auto& [deg, stratum] : by_deg) {
      long long dim = static_cast<long long>(stratum.subsets.size());
      dim -= static_cast<long long>(rank[size][deg]);
      auto up = rank.find(size + 1);
      if (up != rank.end()) {
        auto it = up->second.find(deg);
        if (it != up->second.end()) dim -= static_cast<long long>(it->second);
      }
      if (dim > 0) table.add(size - 1, deg, dim);
    }
  }
  return table;
}

int depth_oracle(const MonomialIdeal& I, const gf::FieldSpec& field) {
  if (I.is_unit()) throw std::domain_error("depth oracle expects a proper ideal");
  if (I.is_zero()) return I.num_vars();
  BettiTable table = taylor_betti(I, field);
  return I.num_vars() - table.quotient_proj_dim();
}

bool is_cm_oracle(const MonomialIdeal& I, const gf::FieldSpec& field) {
  return depth_oracle(I, field) == I.krull_dim_quotient();
}

bool has_linear_resolution(const BettiTable& table, int gen_degree) {
  for (const auto& [ij, c] : table.entries()) {
    if (c != 0 && ij.second != ij.first + gen_degree) return false;
  }
  return true;
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw std::invalid_argument("Alexander dual needs a squarefree ideal");
  if (!I.is_proper_nonzero()) throw std::domain_error("Alexander dual needs a proper nonzero ideal");
  int n = I.num_vars();
  std::vector<Monomial> gens;
  for (VarMask cover : minimal_support_covers(I.gen_supports(), n)) {
    std::vector<int> exps(static_cast<size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      if ((cover >> k) & 1) exps[static_cast<size_t>(k)] = 1;
    }
    gens.push_back(Monomial(std::move(exps)));
  }
  return MonomialIdeal::make(I.ring(), std::move(gens));
}

bool VertexDecomposability::decide(const SimplicialComplex& complex) {
  if (complex.n > 8) throw std::invalid_argument("vertex decomposability capped at 8 vertices");
  if (complex.is_simplex()) return true;
  auto it = memo_.find(complex.facets);
  if (it != memo_.end()) return it->second;
  bool result = false;
  VarMask verts = complex.vertices();
  for (int v = 1; v <= complex.n && !result; ++v) {
    if (((verts >> (v - 1)) & 1) == 0) continue;
    SimplicialComplex del = complex.deletion(v);
    SimplicialComplex lk = complex.link(v);
    // shedding: no face of the link may be a facet of the deletion
    bool shedding = true;
    for (VarMask df : del.facets) {
      if (lk.is_face(df)) {
        shedding = false;
        break;
      }
    }
    if (!shedding) continue;
    result = decide(del) && decide(lk);
  }
  memo_.emplace(complex.facets, result);
  return result;
}

bool is_vertex_decomposable(const SimplicialComplex& complex) {
  VertexDecomposability vd;
  return vd.decide(complex);
}

}  // namespace splitcm
