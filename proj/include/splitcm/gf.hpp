#ifndef SPLITCM_GF_HPP
#define SPLITCM_GF_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace splitcm::gf {

/// Prime field used by the rank oracle. Primes are kept below 2^15 so that
/// a*b + c stays inside 32 bits for reduced operands.
struct FieldSpec {
  std::uint32_t p;

  explicit FieldSpec(std::uint32_t prime);
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t inv(std::uint32_t a) const;
};

/// dst[k] <- (dst[k] + c * src[k]) mod p for k in [0, len). Operands are
/// assumed reduced (< p) and c < p.
using RowAxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                           std::uint32_t c, std::uint32_t p);

void row_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                     std::uint32_t c, std::uint32_t p);
#if defined(__x86_64__) || defined(__i386__)
void row_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                   std::uint32_t c, std::uint32_t p);
#endif

/// Kernel selected at startup: the AVX2 variant when the CPU supports it and
/// SPLITCM_NO_SIMD is unset, otherwise the scalar reference. The active
/// choice can be overridden for equivalence testing.
RowAxpyFn row_axpy();
void set_simd_enabled(bool enabled);
std::string active_kernel_name();

/// Dense row-major matrix over GF(p), entries reduced.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> a;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Rank by Gaussian elimination; row updates go through the active kernel.
std::size_t rank_mod_p(DenseMatrix m, const FieldSpec& field);

}  // namespace splitcm::gf

#endif
