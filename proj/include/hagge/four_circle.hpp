#pragma once

// Cyclic quadrilateral ABCD on the hyperbola y² − m²x² = 1, its half-turn
// image A₁B₂C₃D₄ about the origin, and the four circles Σ₁..Σ₄.
//
// Index conventions: vertex v = 0..3 stands for A, B, C, D with parameter
// a, b, c, d.  Circle k = 0..3 is Σ_{k+1}; its rotated vertex is the image of
// vertex k and its three constructed points are pts[k][j] for the vertices
// others(k)[j].

#include <array>

#include "hagge/kernel.hpp"

namespace hagge {

struct FourCircleParams {
  Scalar m, a, b, c, d, p;

  std::array<Scalar, 4> vertex() const { return {a, b, c, d}; }
  /// Throws InvalidParams on zero, repeated or sign-clashing parameters.
  /// abcd = 1 is enforced only when unit_product is set.
  void validate(bool unit_product) const;
};

/// ((t − 1/t)/(2m), (t + 1/t)/2).
PPoint hyperbola_point(const Scalar& m, const Scalar& t);

/// Γ from its closed form; contains the four vertices when abcd = 1.
Circle gamma_circle(const FourCircleParams& prm);

/// Chord joining the hyperbola points with parameters s and t.
PLine chord_line(const Scalar& m, const Scalar& s, const Scalar& t);

/// chord(vertex, −rotated) ∧ chord(−vertex, p).
PPoint k_point(const FourCircleParams& prm, const Scalar& vertexParam, const Scalar& rotatedParam);

struct FourCircleScene {
  FourCircleParams params;
  std::array<PPoint, 4> vertices;  ///< A, B, C, D
  std::array<PPoint, 4> rotated;   ///< A₁, B₂, C₃, D₄
  PPoint P;
  Circle gamma;  ///< circle through A, B, C
  std::array<std::array<PPoint, 3>, 4> pts;
  std::array<Circle, 4> circles;
  std::array<PPoint, 4> centres;
  std::array<PLine, 4> kLines;  ///< A-, B-, C-, D-lines
  PLine qLine;                  ///< Q₁Q₄

  static std::array<int, 3> others(int k);
  /// Name such as "A_4" for pts[k][j].
  static std::string point_name(int k, int j);
};

FourCircleScene build_four_circle(const FourCircleParams& prm);

/// concyclic4(pts[k][0..2], rotated[k]) for each k.
std::array<Scalar, 4> theorem5_verdict(const FourCircleScene& s);

struct Theorem6Verdict {
  std::array<PPoint, 12> partners;  ///< second points on Σ_k, ordered as pts
  std::array<Scalar, 12> residuals;  ///< collinear(point, partner, P)
};

Theorem6Verdict theorem6_verdict(const FourCircleScene& s);

struct Theorem7Verdict {
  std::array<Scalar, 6> collinear;  ///< collinear(Q_i, Q_j, P), pairs in lexicographic order
  std::array<Scalar, 6> cross;      ///< r_i²·|PQ_j|² − r_j²·|PQ_i|²
  std::array<Scalar, 4> offsets;    ///< signed positions (Q_k − P)·(Q₄ − Q₁)
  std::array<Scalar, 3> enlargement;  ///< |X₁Y₁|²·|PQ₄|² − |X₄Y₄|²·|PQ₁|² for sides AB, BC, CA
};

Theorem7Verdict theorem7_verdict(const FourCircleScene& s);

// Closed forms ---------------------------------------------------------------

/// A₄ from its coordinate formulas.
PPoint a4_closed_form(const FourCircleParams& prm);

/// Second point of circle B C D₄ on Σ₄, from its coordinate formulas.
PPoint a4_partner_closed_form(const FourCircleParams& prm);

/// Factored value of the A₄B₄C₄D₄ concyclicity determinant in its reference form.
Scalar concyclic_closed_form_reference(const FourCircleParams& prm);
/// The reference value divided by m³, which is what the determinant equals.
Scalar concyclic_closed_form(const FourCircleParams& prm);

/// Factored value of the (Q₁, Q₄, P) determinant in its reference form.
Scalar centre_line_closed_form_reference(const FourCircleParams& prm);
/// The reference value times −(abcp + 1)/(m³p).
Scalar centre_line_closed_form(const FourCircleParams& prm);

/// det of rows (x, y, 1) for Q₁, Q₄, P where Q₄ is built with d := 1/(abc)
/// and Q₁ with a := 1/(bcd).  Equals centre_line_closed_form for any params.
Scalar centre_line_determinant_charted(const FourCircleParams& prm);

/// The same determinant from the scene's own centres.
Scalar centre_line_determinant(const FourCircleScene& s);

}  // namespace hagge
