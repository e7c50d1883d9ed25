#include "splitcm/gf.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif

namespace splitcm::gf {

FieldSpec::FieldSpec(std::uint32_t prime) : p(prime) {
  if (p < 2 || p >= (1u << 15)) throw std::invalid_argument("field prime must lie in [2, 2^15)");
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("field order must be prime");
  }
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const {
  return a >= b ? a - b : a + p - b;
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p; }

std::uint32_t FieldSpec::neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  // extended Euclid on (a, p)
  std::int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  std::int64_t inv = s0 % p;
  if (inv < 0) inv += p;
  return static_cast<std::uint32_t>(inv);
}

void row_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                     std::uint32_t c, std::uint32_t p) {
  if (c == 0) return;
  for (std::size_t k = 0; k < len; ++k) {
    dst[k] = (dst[k] + c * src[k]) % p;  // c*src fits: (p-1)^2 < 2^30
  }
}

#if defined(__x86_64__) || defined(__i386__)

__attribute__((target("avx2"))) void row_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                   std::size_t len, std::uint32_t c,
                                                   std::uint32_t p) {
  if (c == 0) return;
  const std::uint64_t mu64 = (std::uint64_t{1} << 32) / p;
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i mu = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(mu64)));
  std::size_t k = 0;
  for (; k + 8 <= len; k += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    // x = d + c*s < p + p^2 < 2^31
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(cv, s));
    // Barrett: q = floor(x * mu / 2^32), r = x - q*p, then one fixup subtract.
    __m256i qe = _mm256_srli_epi64(_mm256_mul_epu32(x, mu), 32);
    __m256i qo = _mm256_srli_epi64(_mm256_mul_epu32(_mm256_srli_epi64(x, 32), mu), 32);
    __m256i q = _mm256_blend_epi32(qe, _mm256_slli_epi64(qo, 32), 0xAA);
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pv));
    __m256i lt = _mm256_cmpgt_epi32(pv, r);  // r < p ?
    r = _mm256_sub_epi32(r, _mm256_andnot_si256(lt, pv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), r);
  }
  for (; k < len; ++k) {  // leftovers
    dst[k] = (dst[k] + c * src[k]) % p;
  }
}

#endif

namespace {

std::atomic<bool> g_simd_enabled{true};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool env_disables_simd() {
  const char* v = std::getenv("SPLITCM_NO_SIMD");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

struct SimdInit {
  SimdInit() {
    if (env_disables_simd()) g_simd_enabled.store(false);
  }
} g_simd_init;

}  // namespace

RowAxpyFn row_axpy() {
#if defined(__x86_64__) || defined(__i386__)
  if (g_simd_enabled.load(std::memory_order_relaxed) && cpu_has_avx2()) return row_axpy_avx2;
#endif
  return row_axpy_scalar;
}

void set_simd_enabled(bool enabled) { g_simd_enabled.store(enabled); }

std::string active_kernel_name() {
  return row_axpy() == row_axpy_scalar ? "scalar" : "avx2";
}

std::size_t rank_mod_p(DenseMatrix m, const FieldSpec& field) {
  const std::uint32_t p = field.p;
  RowAxpyFn axpy = row_axpy();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != r) {
      for (std::size_t k = c; k < m.cols; ++k) std::swap(m.a[pivot * m.cols + k], m.a[r * m.cols + k]);
    }
    std::uint32_t pivinv = field.inv(m.at(r, c));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      std::uint32_t head = m.at(i, c);
      if (head == 0) continue;
      std::uint32_t factor = field.mul(field.neg(head), pivinv);
      axpy(&m.a[i * m.cols + c], &m.a[r * m.cols + c], m.cols - c, factor, p);
    }
    ++r;
  }
  return r;
}

}  // namespace splitcm::gf
