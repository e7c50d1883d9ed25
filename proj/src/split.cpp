#include "splitcm/split.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "splitcm/parse.hpp"

namespace splitcm {

namespace {

constexpr int kDepthInf = std::numeric_limits<int>::max() / 4;   // depth of S/S = 0
constexpr int kRegNegInf = std::numeric_limits<int>::min() / 4;  // reg of the zero module

CertPtr leaf_for(const MonomialIdeal& I) {
  if (I.is_unit()) return std::make_shared<SplitCertificate>(
      SplitCertificate{SplitCertificate::Kind::Unit, I, {}, 0, nullptr, nullptr});
  if (I.is_zero()) return std::make_shared<SplitCertificate>(
      SplitCertificate{SplitCertificate::Kind::Zero, I, {}, 0, nullptr, nullptr});
  if (I.is_principal()) return std::make_shared<SplitCertificate>(
      SplitCertificate{SplitCertificate::Kind::Principal, I, I.gens()[0], 0, nullptr, nullptr});
  return nullptr;
}

}  // namespace

std::optional<VertexSplit> try_split_at(const MonomialIdeal& I, int i) {
  if (i < 1 || i > I.num_vars()) throw std::out_of_range("splitting variable out of range");
  if (!I.is_proper_nonzero()) throw std::domain_error("only proper nonzero ideals can be split");
  std::vector<Monomial> inner_gens, outer_gens;
  for (const Monomial& g : I.gens()) {
    if (g.exponent(i) > 0) {
      inner_gens.push_back(g.divide_by_variable(i));
    } else {
      outer_gens.push_back(g);
    }
  }
  if (inner_gens.empty()) return std::nullopt;
  // Dividing a fixed variable out of an antichain keeps it an antichain, so
  // both parts are already minimal generating sets.
  MonomialIdeal inner = MonomialIdeal::make(I.ring(), std::move(inner_gens));
  MonomialIdeal outer = MonomialIdeal::make(I.ring(), std::move(outer_gens));
  if (!outer.is_subideal_of(inner)) return std::nullopt;
  return VertexSplit{i, std::move(inner), std::move(outer)};
}

std::vector<int> admissible_split_vars(const MonomialIdeal& I) {
  std::vector<int> vars;
  VarMask support = I.support_union();
  for (int i = 1; i <= I.num_vars(); ++i) {
    if (((support >> (i - 1)) & 1) && try_split_at(I, i).has_value()) vars.push_back(i);
  }
  return vars;
}

CertPtr Splitter::certify(const MonomialIdeal& I) {
  std::lock_guard<std::mutex> lock(mutex_);
  return certify_locked(I);
}

CertPtr Splitter::certify_locked(const MonomialIdeal& I) {
  if (CertPtr leaf = leaf_for(I)) return leaf;
  std::string key = I.key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  CertPtr result;
  VarMask support = I.support_union();
  for (int i = 1; i <= I.num_vars() && !result; ++i) {
    if (((support >> (i - 1)) & 1) == 0) continue;
    auto split = try_split_at(I, i);
    if (!split) continue;
    CertPtr inner = certify_locked(split->inner);
    if (!inner) continue;
    CertPtr outer = certify_locked(split->outer);
    if (!outer) continue;
    result = std::make_shared<SplitCertificate>(
        SplitCertificate{SplitCertificate::Kind::Split, I, {}, i, inner, outer});
  }
  memo_.emplace(std::move(key), result);
  return result;
}

CertPtr Splitter::certify_with_root(const MonomialIdeal& I, int root_var) {
  if (!I.is_proper_nonzero()) return nullptr;
  auto split = try_split_at(I, root_var);
  if (!split) return nullptr;
  CertPtr inner = certify(split->inner);
  CertPtr outer = certify(split->outer);
  if (!inner || !outer) return nullptr;
  return std::make_shared<SplitCertificate>(
      SplitCertificate{SplitCertificate::Kind::Split, I, {}, root_var, inner, outer});
}

MonomialIdeal reconstruct(const SplitCertificate& cert) {
  switch (cert.kind) {
    case SplitCertificate::Kind::Unit:
      return MonomialIdeal::unit(cert.ideal.ring());
    case SplitCertificate::Kind::Zero:
      return MonomialIdeal::zero(cert.ideal.ring());
    case SplitCertificate::Kind::Principal:
      return MonomialIdeal::make(cert.ideal.ring(), {*cert.gen});
    case SplitCertificate::Kind::Split: {
      MonomialIdeal shifted = reconstruct(*cert.inner).times_variable(cert.var);
      return shifted.plus(reconstruct(*cert.outer));
    }
  }
  throw std::logic_error("unreachable");
}

bool verify_certificate(const SplitCertificate& cert) {
  switch (cert.kind) {
    case SplitCertificate::Kind::Unit:
      return cert.ideal.is_unit();
    case SplitCertificate::Kind::Zero:
      return cert.ideal.is_zero();
    case SplitCertificate::Kind::Principal:
      return cert.ideal.is_principal() && cert.gen && cert.ideal.gens()[0] == *cert.gen;
    case SplitCertificate::Kind::Split: {
      if (!cert.inner || !cert.outer) return false;
      const MonomialIdeal& inner = cert.inner->ideal;
      const MonomialIdeal& outer = cert.outer->ideal;
      if (inner.is_zero()) return false;
      if (!outer.is_subideal_of(inner)) return false;
      // The generator sets of x_i I_1 and I_2 must partition G(I) exactly.
      MonomialIdeal shifted = inner.times_variable(cert.var);
      if (shifted.num_gens() + outer.num_gens() != cert.ideal.num_gens()) return false;
      if (!(shifted.plus(outer) == cert.ideal)) return false;
      for (const Monomial& g : outer.gens()) {
        if (g.exponent(cert.var) > 0) return false;
      }
      if (!(reconstruct(cert) == cert.ideal)) return false;
      return verify_certificate(*cert.inner) && verify_certificate(*cert.outer);
    }
  }
  return false;
}

namespace {

const BettiTable& betti_rec(const SplitCertificate& cert,
                            std::unordered_map<const SplitCertificate*, BettiTable>& memo) {
  auto it = memo.find(&cert);
  if (it != memo.end()) return it->second;
  BettiTable table;
  switch (cert.kind) {
    case SplitCertificate::Kind::Unit:
      table.add(0, 0, 1);
      break;
    case SplitCertificate::Kind::Zero:
      break;
    case SplitCertificate::Kind::Principal:
      table.add(0, cert.gen->degree(), 1);
      break;
    case SplitCertificate::Kind::Split: {
      const BettiTable& inner = betti_rec(*cert.inner, memo);
      const BettiTable& outer = betti_rec(*cert.outer, memo);
      table = inner.shifted(0, 1).plus(outer).plus(outer.shifted(1, 1));
      break;
    }
  }
  return memo.emplace(&cert, std::move(table)).first->second;
}

int depth_rec(const SplitCertificate& cert,
              std::unordered_map<const SplitCertificate*, int>& memo) {
  auto it = memo.find(&cert);
  if (it != memo.end()) return it->second;
  int d = 0;
  int n = cert.ideal.num_vars();
  switch (cert.kind) {
    case SplitCertificate::Kind::Unit:
      d = kDepthInf;
      break;
    case SplitCertificate::Kind::Zero:
      d = n;
      break;
    case SplitCertificate::Kind::Principal:
      d = n - 1;
      break;
    case SplitCertificate::Kind::Split:
      d = std::min(depth_rec(*cert.inner, memo), depth_rec(*cert.outer, memo) - 1);
      break;
  }
  memo.emplace(&cert, d);
  return d;
}

int reg_rec(const SplitCertificate& cert,
            std::unordered_map<const SplitCertificate*, int>& memo) {
  auto it = memo.find(&cert);
  if (it != memo.end()) return it->second;
  int r = 0;
  switch (cert.kind) {
    case SplitCertificate::Kind::Unit:
      r = kRegNegInf;
      break;
    case SplitCertificate::Kind::Zero:
      r = 0;
      break;
    case SplitCertificate::Kind::Principal:
      r = cert.gen->degree() - 1;
      break;
    case SplitCertificate::Kind::Split:
      r = std::max(reg_rec(*cert.inner, memo) + 1, reg_rec(*cert.outer, memo));
      break;
  }
  memo.emplace(&cert, r);
  return r;
}

}  // namespace

BettiTable betti_table(const SplitCertificate& cert) {
  std::unordered_map<const SplitCertificate*, BettiTable> memo;
  return betti_rec(cert, memo);
}

int depth_quotient(const SplitCertificate& cert) {
  if (cert.kind == SplitCertificate::Kind::Unit)
    throw std::domain_error("S/S is the zero ring; no depth here");
  std::unordered_map<const SplitCertificate*, int> memo;
  return depth_rec(cert, memo);
}

int reg_quotient(const SplitCertificate& cert) {
  if (cert.kind == SplitCertificate::Kind::Unit)
    throw std::domain_error("S/S is the zero ring; no regularity here");
  std::unordered_map<const SplitCertificate*, int> memo;
  return reg_rec(cert, memo);
}

QuotientInvariants quotient_invariants(const SplitCertificate& cert) {
  if (!cert.ideal.is_proper_nonzero())
    throw std::domain_error("invariants are reported for proper nonzero ideals");
  int n = cert.ideal.num_vars();
  QuotientInvariants inv;
  inv.depth = depth_quotient(cert);
  inv.reg = reg_quotient(cert);
  inv.krull_dim = cert.ideal.krull_dim_quotient();
  BettiTable table = betti_table(cert);
  inv.proj_dim = table.quotient_proj_dim();
  inv.paths_agree =
      inv.proj_dim == n - inv.depth && inv.reg == table.quotient_regularity();
  return inv;
}

namespace {

bool colon_is_variable_generated(const MonomialIdeal& prefix, const Monomial& next) {
  std::vector<Monomial> gens;
  gens.reserve(prefix.num_gens());
  for (const Monomial& g : prefix.gens()) gens.push_back(g.quotient_by(next));
  MonomialIdeal colon = MonomialIdeal::make(prefix.ring(), std::move(gens));
  return colon.is_variable_generated();
}

bool lq_search(const MonomialIdeal& I, std::uint32_t mask, std::vector<signed char>& state,
               std::vector<int>& order) {
  if (mask == 0) return true;
  if (state[mask] != -1) return false;  // only failed masks are revisited
  const auto& gens = I.gens();
  for (size_t t = 0; t < gens.size(); ++t) {
    if (((mask >> t) & 1) == 0) continue;
    std::uint32_t rest = mask & ~(std::uint32_t{1} << t);
    if (rest != 0) {
      std::vector<Monomial> prefix;
      for (size_t s = 0; s < gens.size(); ++s) {
        if ((rest >> s) & 1) prefix.push_back(gens[s]);
      }
      if (!colon_is_variable_generated(MonomialIdeal::make(I.ring(), std::move(prefix)), gens[t]))
        continue;
    }
    if (lq_search(I, rest, state, order)) {
      order.push_back(static_cast<int>(t));
      return true;
    }
  }
  state[mask] = 0;
  return false;
}

}  // namespace

std::optional<std::vector<Monomial>> linear_quotients_order(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) throw std::domain_error("linear quotients need a proper nonzero ideal");
  size_t m = I.num_gens();
  if (m > 20) throw std::invalid_argument("linear quotients search capped at 20 generators");
  std::vector<signed char> state(size_t{1} << m, -1);
  std::vector<int> order;
  std::uint32_t full = (m == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
  if (!lq_search(I, full, state, order)) return std::nullopt;
  std::vector<Monomial> result;
  result.reserve(m);
  for (int idx : order) result.push_back(I.gens()[static_cast<size_t>(idx)]);
  return result;
}

namespace {

nlohmann::json certificate_to_json(const SplitCertificate& cert) {
  nlohmann::json j;
  switch (cert.kind) {
    case SplitCertificate::Kind::Unit:
      j["kind"] = "unit";
      break;
    case SplitCertificate::Kind::Zero:
      j["kind"] = "zero";
      break;
    case SplitCertificate::Kind::Principal:
      j["kind"] = "principal";
      j["gen"] = to_string(*cert.gen);
      break;
    case SplitCertificate::Kind::Split:
      j["kind"] = "split";
      j["var"] = cert.var;
      j["inner"] = certificate_to_json(*cert.inner);
      j["outer"] = certificate_to_json(*cert.outer);
      break;
  }
  return j;
}

}  // namespace

std::string certificate_json(const SplitCertificate& cert, bool pretty) {
  nlohmann::json j = certificate_to_json(cert);
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace splitcm
