#include "hagge/scalar.hpp"

#include <cctype>
#include <vector>

#include "hagge/error.hpp"

namespace hagge {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::KnownPointNotIncident: return "KnownPointNotIncident";
    case ErrorCode::IdenticalCircles: return "IdenticalCircles";
    case ErrorCode::CenterInversion: return "CenterInversion";
    case ErrorCode::DegenerateQuad: return "DegenerateQuad";
    case ErrorCode::LineAtInfinity: return "LineAtInfinity";
    case ErrorCode::ImaginaryCircle: return "ImaginaryCircle";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DependentConstraints: return "DependentConstraints";
    case ErrorCode::NoConic: return "NoConic";
    case ErrorCode::SharedPointNotIncident: return "SharedPointNotIncident";
    case ErrorCode::CoincidentConics: return "CoincidentConics";
    case ErrorCode::TangentialDegeneracy: return "TangentialDegeneracy";
    case ErrorCode::DegenerateInvolution: return "DegenerateInvolution";
    case ErrorCode::UnderDetermined: return "UnderDetermined";
    case ErrorCode::PointNotOnConic: return "PointNotOnConic";
    case ErrorCode::KNotOnSigma: return "KNotOnSigma";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::KOnSideLine: return "KOnSideLine";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EqualParameters: return "EqualParameters";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::AuxCircleDegenerate: return "AuxCircleDegenerate";
    case ErrorCode::NotASimilarity: return "NotASimilarity";
    case ErrorCode::CollinearSource: return "CollinearSource";
    case ErrorCode::NoUniqueFixedPoint: return "NoUniqueFixedPoint";
    case ErrorCode::ParallelPerpendiculars: return "ParallelPerpendiculars";
    case ErrorCode::TOnSide: return "TOnSide";
    case ErrorCode::TNotOnCircle: return "TNotOnCircle";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

std::string to_string(const Scalar& q) { return q.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || (slash != std::string_view::npos && !is_integer_literal(den, false))) {
    throw GeomError(ErrorCode::SchemaError, "not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer zn(n, 10);
  Integer zd(1);
  if (slash != std::string_view::npos) zd = Integer(std::string(den), 10);
  if (zd == 0) throw GeomError(ErrorCode::SchemaError, "zero denominator: '" + std::string(text) + "'");
  Scalar q(zn, zd);
  q.canonicalize();
  return q;
}

bool canonicalize_projective(std::span<Scalar> coords) {
  Integer l = 1;
  bool any = false;
  for (const auto& c : coords) {
    if (is_zero(c)) continue;
    any = true;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  if (!any) return false;
  Integer g = 0;
  std::vector<Integer> nums;
  nums.reserve(coords.size());
  for (const auto& c : coords) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    nums.push_back(std::move(v));
  }
  int lead = 0;
  for (const auto& v : nums) {
    if (sgn(v) != 0) {
      lead = sgn(v);
      break;
    }
  }
  if (lead < 0) g = -g;
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = Scalar(nums[i] / g);
  return true;
}

}  // namespace hagge
