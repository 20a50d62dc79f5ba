#pragma once

#include <cstddef>
#include <vector>

#include "hagge/scalar.hpp"

namespace hagge::linalg {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

/// Exact determinant by fraction-free elimination with row pivoting.
Scalar determinant(Matrix m);

Scalar det3(const Scalar& a, const Scalar& b, const Scalar& c,
            const Scalar& d, const Scalar& e, const Scalar& f,
            const Scalar& g, const Scalar& h, const Scalar& i);

struct NullSpace {
  std::size_t rank = 0;
  std::vector<Row> basis;  ///< one vector per free column
};

/// Reduced row echelon form over the rationals, then one basis vector of the
/// kernel per free variable.
NullSpace null_space(Matrix m);

}  // namespace hagge::linalg
