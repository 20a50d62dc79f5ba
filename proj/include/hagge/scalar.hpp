#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace hagge {

/// Exact rational number. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

inline int sign(const Scalar& q) { return sgn(q); }
inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

/// "p/q" form, or "p" for integers.
std::string to_string(const Scalar& q);

/// Accepts "p", "-p", "p/q". Throws GeomError(SchemaError) on anything else,
/// including decimal or exponent notation.
Scalar parse_scalar(std::string_view text);

inline Scalar rational(long num, long den = 1) {
  Scalar q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

/// Scales a homogeneous coordinate vector to coprime integers whose first
/// nonzero entry is positive. Returns false (leaving the input untouched) when
/// every entry is zero.
bool canonicalize_projective(std::span<Scalar> coords);

}  // namespace hagge
