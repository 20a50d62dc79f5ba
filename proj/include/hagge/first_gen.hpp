#pragma once

// Configuration of a triangle ABC, a point K and a circle Σ through K:
// U, V, W are the second meets of circles BKC, CKA, AKB with Σ and
// X, Y, Z the second meets of AK, BK, CK with Σ.

#include <array>
#include <optional>

#include "hagge/conic.hpp"
#include "hagge/kernel.hpp"

namespace hagge {

struct FirstGenScene {
  PPoint A, B, C, K;
  Circle sigma;
  PPoint U, V, W, X, Y, Z, P;
  /// Slope parameters through K, present only when K is the origin and Σ is
  /// x² + y² + x + y = 0. paramsUVW = (a, c, e), paramsXYZ = (b, d, f).
  std::optional<std::array<ParamPoint, 3>> paramsUVW;
  std::optional<std::array<ParamPoint, 3>> paramsXYZ;
};

FirstGenScene build_first_gen(const PPoint& A, const PPoint& B, const PPoint& C, const PPoint& K,
                              const Circle& sigma);

/// True when K = (0, 0) and Σ is x² + y² + x + y = 0.
bool is_standard_form(const PPoint& K, const Circle& sigma);

/// Parameter of a point of Σ: slope of the line joining it to the origin.
ParamPoint slope_parameter(const PPoint& p);

/// z ↦ α·z + t on the complex plane, with rational α and t.
struct DirectSimilarity {
  Scalar re, im, tx, ty;
  PPoint apply(const PPoint& p) const;
  Circle apply(const Circle& c) const;
};

/// The similarity sending K to the origin and the centre of Σ to (−1/2, −1/2).
DirectSimilarity standardizing_map(const PPoint& K, const Circle& sigma);

/// The same scene rebuilt after mapping every input through
/// standardizing_map; its parameters are always present.
FirstGenScene standardized(const FirstGenScene& s);

struct Theorem1Verdict {
  Scalar squared_product;  ///< (BU²·CV²·AW²)/(CU²·AV²·BW²), expected 1
  int sign_product;        ///< product of the KBUC, KCVA, KAWB convexity signs, expected −1
};

Theorem1Verdict theorem1_verdict(const FirstGenScene& s);
/// The same quantities for arbitrary points, used by negative controls.
Theorem1Verdict signed_ratio_product(const PPoint& A, const PPoint& B, const PPoint& C, const PPoint& K,
                                     const PPoint& U, const PPoint& V, const PPoint& W);

/// Inverts about K with power k and returns collinear(U′, V′, W′).
Scalar theorem1_oracle(const FirstGenScene& s, const Scalar& k);

struct Theorem2Verdict {
  Scalar concurrency;                ///< concurrent(UX, VY, WZ)
  std::optional<Scalar> involution;  ///< det of (ab, a + b, 1) rows, when parameters exist
  bool infinite_parameter = false;   ///< a parameter hit the vertical line through K
};

Theorem2Verdict theorem2_verdict(const FirstGenScene& s);

struct Theorem3Verdict {
  PPoint L, M, N;
  Scalar lmn;  ///< collinear(L, M, N)
  Scalar lmp;  ///< collinear(L, M, P)
  Scalar lnp;
  Scalar mnp;
};

/// L = VW ∧ AK, M = WU ∧ BK, N = UV ∧ CK.
Theorem3Verdict theorem3_verdict(const FirstGenScene& s);

/// Pascal construction on the hexagon V W U X K Y of Σ.
PascalResult theorem3_pascal(const FirstGenScene& s);

struct Theorem4Scene {
  PPoint A, B, C, D, E, F;
  Conic sigma;
  std::array<Conic, 3> aux;  ///< conics BCDEF, CADEF, ABDEF
  PPoint U, V, W, X, Y, Z, P;
  Scalar residual;  ///< concurrent(UX, VY, WZ)
};

Theorem4Scene build_theorem4(const PPoint& A, const PPoint& B, const PPoint& C, const PPoint& D, const PPoint& E,
                             const PPoint& F, const Conic& sigma);

}  // namespace hagge
