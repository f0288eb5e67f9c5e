#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rfs/kernels.hpp"
#include "rfs/rng.hpp"

using namespace rfs;
namespace k = rfs::kernels;

namespace {

std::vector<double> random_vec(RngStream& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal() * (1.0 + 10.0 * rng.uniform());
  return v;
}

}  // namespace

TEST_CASE("scalar and avx2 backends are bit-identical") {
  if (!k::detail::cpu_has_avx2()) {
    MESSAGE("CPU lacks AVX2; equivalence check skipped");
    return;
  }
  RngStream rng(7, "kernels/equivalence");
  // Odd sizes exercise every tail length.
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 64u, 257u, 1000u}) {
    auto a = random_vec(rng, n);
    auto b = random_vec(rng, n);
    CHECK(k::detail::dot_scalar(a.data(), b.data(), n) ==
          k::detail::dot_avx2(a.data(), b.data(), n));
    CHECK(k::detail::reduce_sum_scalar(a.data(), n) ==
          k::detail::reduce_sum_avx2(a.data(), n));
    CHECK(k::detail::reduce_sumsq_diff_scalar(a.data(), b.data(), n) ==
          k::detail::reduce_sumsq_diff_avx2(a.data(), b.data(), n));
    CHECK(k::detail::reduce_abs_diff_scalar(a.data(), b.data(), n) ==
          k::detail::reduce_abs_diff_avx2(a.data(), b.data(), n));
    CHECK(k::detail::reduce_max_abs_scalar(a.data(), n) ==
          k::detail::reduce_max_abs_avx2(a.data(), n));

    auto y1 = random_vec(rng, n);
    auto y2 = y1;
    k::detail::axpy_scalar(0.37, a.data(), y1.data(), n);
    k::detail::axpy_avx2(0.37, a.data(), y2.data(), n);
    CHECK(y1 == y2);
  }
}

TEST_CASE("reductions match a long-double reference") {
  RngStream rng(11, "kernels/reference");
  const std::size_t n = 1003;
  auto a = random_vec(rng, n);
  auto b = random_vec(rng, n);

  long double dot_ref = 0, sum_ref = 0, sq_ref = 0, abs_ref = 0;
  double max_ref = 0;
  for (std::size_t i = 0; i < n; ++i) {
    dot_ref += static_cast<long double>(a[i]) * b[i];
    sum_ref += a[i];
    const long double d = static_cast<long double>(a[i]) - b[i];
    sq_ref += d * d;
    abs_ref += fabsl(d);
    max_ref = std::max(max_ref, std::fabs(a[i]));
  }
  CHECK(k::dot(a.data(), b.data(), n) ==
        doctest::Approx(static_cast<double>(dot_ref)).epsilon(1e-12));
  CHECK(k::reduce_sum(a.data(), n) ==
        doctest::Approx(static_cast<double>(sum_ref)).epsilon(1e-12));
  CHECK(k::reduce_sumsq_diff(a.data(), b.data(), n) ==
        doctest::Approx(static_cast<double>(sq_ref)).epsilon(1e-12));
  CHECK(k::reduce_abs_diff(a.data(), b.data(), n) ==
        doctest::Approx(static_cast<double>(abs_ref)).epsilon(1e-12));
  CHECK(k::reduce_max_abs(a.data(), n) == max_ref);
}

TEST_CASE("matmul_nt equals a naive triple loop") {
  RngStream rng(13, "kernels/matmul");
  const std::size_t m = 9, n = 7, kk = 33;
  auto a = random_vec(rng, m * kk);
  auto b = random_vec(rng, n * kk);
  auto bias = random_vec(rng, n);
  std::vector<double> c(m * n), ref(m * n);
  k::matmul_nt(a.data(), m, b.data(), n, kk, bias.data(), c.data());
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < n; ++j) {
      double s = bias[j];
      for (std::size_t t = 0; t < kk; ++t) s += a[r * kk + t] * b[j * kk + t];
      ref[r * n + j] = s;
    }
  for (std::size_t i = 0; i < m * n; ++i)
    CHECK(c[i] == doctest::Approx(ref[i]).epsilon(1e-12));
}

TEST_CASE("backend selection is sticky and reported") {
  const k::Backend original = k::active_backend();
  k::set_backend(k::Backend::scalar);
  CHECK(k::active_backend() == k::Backend::scalar);
  CHECK(std::string(k::backend_name(k::active_backend())) == "scalar");
  k::set_backend(original);
}
