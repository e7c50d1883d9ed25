#ifndef SPLITCM_TEST_HELPERS_HPP
#define SPLITCM_TEST_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "splitcm/monomial.hpp"
#include "splitcm/parse.hpp"

namespace splitcm::test {

inline Monomial mono(int n, const char* text) { return parse_monomial(text, n); }

inline MonomialIdeal mk(int n, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(parse_monomial(g, n));
  return MonomialIdeal::make(RingContext(n), std::move(ms));
}

inline VarMask mask(std::initializer_list<int> vars) {
  VarMask m = 0;
  for (int v : vars) m |= VarMask{1} << (v - 1);
  return m;
}

}  // namespace splitcm::test

#endif
