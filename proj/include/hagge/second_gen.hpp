#pragma once

// Configuration built from a triangle ABC and a point T on an arbitrary
// circle: the perpendiculars from T to the sides cut the circle again at
// X, Y, Z, and XYZ is indirectly similar to ABC.

#include <array>

#include "hagge/conic.hpp"
#include "hagge/kernel.hpp"

namespace hagge {

/// p ↦ [[u, v], [v, −u]]·p + (tx, ty).
struct IndirectSimilarity {
  Scalar u, v, tx, ty;

  Scalar ratio2() const { return u * u + v * v; }
  PPoint apply(const PPoint& p) const;
  IndirectSimilarity inverse() const;
  /// Homogeneous 3×3 matrix of the map.
  Mat3 matrix() const;
};

/// Throws CollinearSource, or NotASimilarity when no orientation-reversing
/// similarity maps src onto dst.
IndirectSimilarity fit_indirect_similarity(const std::array<PPoint, 3>& src, const std::array<PPoint, 3>& dst);

/// Throws NoUniqueFixedPoint when ratio² = 1.
PPoint fixed_point(const IndirectSimilarity& sim);

struct OrthologyResult {
  PPoint centre;
  Scalar residual;  ///< concurrency of all three perpendiculars
};

/// Perpendiculars from tri1's vertices to the opposite sides of tri2.
OrthologyResult orthologic_centre(const std::array<PPoint, 3>& tri1, const std::array<PPoint, 3>& tri2);

struct SecondGenScene {
  PPoint A, B, C, T;
  Circle circ;   ///< circumcircle of ABC
  Circle hcirc;  ///< the circle through T
  PPoint X, Y, Z, J, P, D, E, F, U, V, W, Tp, Jp;
  IndirectSimilarity sim;
};

/// Throws TOnSide, TNotOnCircle, or NotASimilarity when the construction
/// fails its own consistency checks.
SecondGenScene build_second_gen(const PPoint& A, const PPoint& B, const PPoint& C, const PPoint& T,
                                const Circle& hcirc);

/// collinear(X, P, U), collinear(Y, P, V), collinear(Z, P, W).
std::array<Scalar, 3> theorem8_verdict(const SecondGenScene& s);

struct Theorem9Verdict {
  PPoint L, M, N;
  Scalar residual;
};

/// L = VW ∧ XT, M = WU ∧ YT, N = UV ∧ ZT.
Theorem9Verdict theorem9_verdict(const SecondGenScene& s);

struct Theorem10Verdict {
  Conic conic;        ///< through the midpoints of AX, BY, CZ, DU, EV
  Scalar residual;    ///< value at the midpoint of FW
};

Theorem10Verdict theorem10_verdict(const SecondGenScene& s);

struct ParalogyVerdict {
  Scalar atTp;  ///< sum of squared values of lines through X, Y, Z parallel to BC, CA, AB at Tp
  Scalar atJp;  ///< sum of squared values of lines through A, B, C parallel to YZ, ZX, XY at Jp
};

ParalogyVerdict paralogic_verdict(const SecondGenScene& s);
/// The same measure for an arbitrary candidate centre.
Scalar paralogy_residual(const std::array<PPoint, 3>& through, const std::array<PPoint, 3>& sides,
                         const PPoint& candidate);

struct ConicImage {
  Conic source;  ///< conic A B C P J
  Conic image;   ///< source pushed through sim
  Conic target;  ///< conic X Y Z P T
};

ConicImage conic_image_check(const SecondGenScene& s);

}  // namespace hagge
