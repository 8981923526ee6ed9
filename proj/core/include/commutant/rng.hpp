#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace commutant {

namespace rng_detail {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rng_detail

// Purpose tags keeping unrelated draws on disjoint substreams. Solve and
// verification generators must never share samples.
enum class StreamKind : std::uint64_t {
  Solve = 1,
  Verify = 2,
  Check = 3,
  Twirl = 4,
  Misc = 5,
};

// Stream id for (purpose, variable ordinal, sample index). The id is mixed
// again inside RngStream, so simple packing is enough.
inline std::uint64_t stream_id(StreamKind kind, std::uint64_t var_ordinal,
                               std::uint64_t sample_index) {
  return (static_cast<std::uint64_t>(kind) << 56) ^ (var_ordinal << 40) ^ sample_index;
}

// Deterministic counter-based generator: a splitmix64 walk whose origin is a
// hash of (seed, stream). Distinct streams are independent for all practical
// purposes and reproducible across platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(rng_detail::mix64(rng_detail::mix64(seed ^ 0x6a09e667f3bcc908ULL) ^
                                 rng_detail::mix64(stream))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller, one cached mate
  double next_gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = 1.0 - next_unit();  // (0, 1]
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  // standard complex normal CN(0,1): re and im are N(0, 1/2), E|z|^2 = 1
  std::complex<double> next_complex_gaussian() {
    double u1 = 1.0 - next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

  // uniform in [0, n), rejection sampled
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace commutant
