#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hagge/kernel.hpp"

namespace hagge::test {

inline Scalar Q(const std::string& s) { return parse_scalar(s); }
inline Scalar Q(long n, long d = 1) { return rational(n, d); }

inline PPoint P(long x, long y) { return PPoint::affine(Scalar(x), Scalar(y)); }
inline PPoint P(const std::string& x, const std::string& y) { return PPoint::affine(Q(x), Q(y)); }
inline PPoint P(const Scalar& x, const Scalar& y) { return PPoint::affine(x, y); }

/// Small rational lattice for hand-rolled property tests.
class Lattice {
 public:
  explicit Lattice(std::uint64_t seed) : rng_(seed) {}

  Scalar scalar(long range = 12, long max_den = 6) {
    const long n = static_cast<long>(rng_() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    const long d = 1 + static_cast<long>(rng_() % static_cast<std::uint64_t>(max_den));
    return rational(n, d);
  }

  Scalar nonzero(long range = 12, long max_den = 6) {
    for (;;) {
      Scalar s = scalar(range, max_den);
      if (!is_zero(s)) return s;
    }
  }

  PPoint point(long range = 12, long max_den = 6) { return PPoint::affine(scalar(range, max_den), scalar(range, max_den)); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hagge::test
