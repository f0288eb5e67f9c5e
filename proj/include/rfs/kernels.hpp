#pragma once

// Data-parallel inner loops shared by the network, metric, and sampling code.
//
// Every kernel has a scalar reference implementation and an AVX2 variant.
// Both evaluate the same operation tree: reductions accumulate into four
// independent stripes (stripe j sums elements j, j+4, j+8, ...) which are
// combined as (s0+s1)+(s2+s3), followed by a sequential tail.  With FP
// contraction disabled the two backends are bit-identical, so backend
// selection can never change a result, only its speed.

#include <cstddef>
#include <string>

namespace rfs::kernels {

enum class Backend { scalar, avx2 };

// Selected once per process: AVX2 when the CPU supports it, unless the
// RF_SURROGATE_SIMD environment variable ("scalar" or "avx2") says otherwise.
Backend active_backend();
const char* backend_name(Backend b);

// Force a backend (tests use this to cross-check both paths).
// Throws std::runtime_error if the requested backend is unsupported here.
void set_backend(Backend b);

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// sum_i x[i]
double reduce_sum(const double* x, std::size_t n);

// sum_i (a[i]-b[i])^2
double reduce_sumsq_diff(const double* a, const double* b, std::size_t n);

// sum_i |a[i]-b[i]|
double reduce_abs_diff(const double* a, const double* b, std::size_t n);

// max_i |x[i]|  (0 for n == 0)
double reduce_max_abs(const double* x, std::size_t n);

// C[m x n] = A[m x k] * B[n x k]^T; row r of C holds dot(A.row(r), B.row(j)).
// bias may be null; when present, C[r][j] = dot(...) + bias[j].
void matmul_nt(const double* a, std::size_t m, const double* b, std::size_t n,
               std::size_t k, const double* bias, double* c);

namespace detail {
double dot_scalar(const double* a, const double* b, std::size_t n);
double dot_avx2(const double* a, const double* b, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
double reduce_sum_scalar(const double* x, std::size_t n);
double reduce_sum_avx2(const double* x, std::size_t n);
double reduce_sumsq_diff_scalar(const double* a, const double* b, std::size_t n);
double reduce_sumsq_diff_avx2(const double* a, const double* b, std::size_t n);
double reduce_abs_diff_scalar(const double* a, const double* b, std::size_t n);
double reduce_abs_diff_avx2(const double* a, const double* b, std::size_t n);
double reduce_max_abs_scalar(const double* x, std::size_t n);
double reduce_max_abs_avx2(const double* x, std::size_t n);
bool cpu_has_avx2();
}  // namespace detail

}  // namespace rfs::kernels
