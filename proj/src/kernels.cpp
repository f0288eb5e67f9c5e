#include "rfs/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace rfs::kernels {

namespace detail {

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2");
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  const std::size_t n4 = n - (n % 4);
  for (; i < n4; i += 4) {
    acc0 += a[i] * b[i];
    acc1 += a[i + 1] * b[i + 1];
    acc2 += a[i + 2] * b[i + 2];
    acc3 += a[i + 3] * b[i + 3];
  }
  double s = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double reduce_sum_scalar(const double* x, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  const std::size_t n4 = n - (n % 4);
  for (; i < n4; i += 4) {
    acc0 += x[i];
    acc1 += x[i + 1];
    acc2 += x[i + 2];
    acc3 += x[i + 3];
  }
  double s = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) s += x[i];
  return s;
}

double reduce_sumsq_diff_scalar(const double* a, const double* b, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  const std::size_t n4 = n - (n % 4);
  for (; i < n4; i += 4) {
    const double d0 = a[i] - b[i];
    const double d1 = a[i + 1] - b[i + 1];
    const double d2 = a[i + 2] - b[i + 2];
    const double d3 = a[i + 3] - b[i + 3];
    acc0 += d0 * d0;
    acc1 += d1 * d1;
    acc2 += d2 * d2;
    acc3 += d3 * d3;
  }
  double s = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double reduce_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  const std::size_t n4 = n - (n % 4);
  for (; i < n4; i += 4) {
    acc0 += std::fabs(a[i] - b[i]);
    acc1 += std::fabs(a[i + 1] - b[i + 1]);
    acc2 += std::fabs(a[i + 2] - b[i + 2]);
    acc3 += std::fabs(a[i + 3] - b[i + 3]);
  }
  double s = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

double reduce_max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

}  // namespace detail

namespace {

struct Dispatch {
  decltype(&detail::dot_scalar) dot;
  decltype(&detail::axpy_scalar) axpy;
  decltype(&detail::reduce_sum_scalar) reduce_sum;
  decltype(&detail::reduce_sumsq_diff_scalar) reduce_sumsq_diff;
  decltype(&detail::reduce_abs_diff_scalar) reduce_abs_diff;
  decltype(&detail::reduce_max_abs_scalar) reduce_max_abs;
};

constexpr Dispatch kScalar = {
    &detail::dot_scalar,         &detail::axpy_scalar,
    &detail::reduce_sum_scalar,  &detail::reduce_sumsq_diff_scalar,
    &detail::reduce_abs_diff_scalar, &detail::reduce_max_abs_scalar,
};

constexpr Dispatch kAvx2 = {
    &detail::dot_avx2,         &detail::axpy_avx2,
    &detail::reduce_sum_avx2,  &detail::reduce_sumsq_diff_avx2,
    &detail::reduce_abs_diff_avx2, &detail::reduce_max_abs_avx2,
};

Backend select_initial() {
  if (const char* env = std::getenv("RF_SURROGATE_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!detail::cpu_has_avx2())
        throw std::runtime_error("RF_SURROGATE_SIMD=avx2 but CPU lacks AVX2");
      return Backend::avx2;
    }
  }
  return detail::cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> g_backend{select_initial()};

const Dispatch& table() {
  return g_backend.load(std::memory_order_relaxed) == Backend::avx2 ? kAvx2
                                                                    : kScalar;
}

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void set_backend(Backend b) {
  if (b == Backend::avx2 && !detail::cpu_has_avx2())
    throw std::runtime_error("AVX2 backend requested but CPU lacks AVX2");
  g_backend.store(b, std::memory_order_relaxed);
}

double dot(const double* a, const double* b, std::size_t n) {
  return table().dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  table().axpy(alpha, x, y, n);
}

double reduce_sum(const double* x, std::size_t n) {
  return table().reduce_sum(x, n);
}

double reduce_sumsq_diff(const double* a, const double* b, std::size_t n) {
  return table().reduce_sumsq_diff(a, b, n);
}

double reduce_abs_diff(const double* a, const double* b, std::size_t n) {
  return table().reduce_abs_diff(a, b, n);
}

double reduce_max_abs(const double* x, std::size_t n) {
  return table().reduce_max_abs(x, n);
}

void matmul_nt(const double* a, std::size_t m, const double* b, std::size_t n,
               std::size_t k, const double* bias, double* c) {
  const auto dot_fn = table().dot;
  for (std::size_t r = 0; r < m; ++r) {
    const double* arow = a + r * k;
    double* crow = c + r * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = dot_fn(arow, b + j * k, k);
      crow[j] = bias ? v + bias[j] : v;
    }
  }
}

}  // namespace rfs::kernels
