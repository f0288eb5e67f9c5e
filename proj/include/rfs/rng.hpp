#pragma once

// Labeled deterministic random streams.  Every stochastic operation in the
// library draws from a stream addressed by (seed, label); the same pair
// always yields the same sequence, on every platform.  The engine is
// std::mt19937_64 (its output sequence is pinned by the standard); the
// uniform/normal transforms are written out here because the standard
// distributions are implementation-defined.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace rfs {

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view label);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Uniform integer on [0, n), unbiased (rejection); n >= 1.
  std::uint64_t uniform_int(std::uint64_t n);

  // Standard normal via Box-Muller; generates pairs, caches the second.
  double normal();

  // Derived stream: same seed, label extended with "/" + sublabel.
  RngStream child(std::string_view sublabel) const;

  const std::string& label() const { return label_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::string label_;
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace rfs
