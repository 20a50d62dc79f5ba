#include <random>

#include "hagge/harness/scene.hpp"

namespace hagge::harness {

namespace {

constexpr int kRetries = 64;

// Only the engine is portable; the standard distributions are not, so draws
// are reduced by hand.
class Draw {
 public:
  Draw(SceneKind kind, std::uint64_t seed)
      : rng_(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(kind) + 1) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }

  Scalar rational(long range, long maxDen) {
    const long den = integer(1, maxDen);
    return hagge::rational(integer(-range * den, range * den), den);
  }

  Scalar nonzero(long range, long maxDen) {
    for (;;) {
      Scalar q = rational(range, maxDen);
      if (!is_zero(q)) return q;
    }
  }

  PPoint point(long range = 8, long maxDen = 3) { return PPoint::affine(rational(range, maxDen), rational(range, maxDen)); }

 private:
  std::mt19937_64 rng_;
};

Payload draw_payload(SceneKind kind, Draw& d) {
  switch (kind) {
    case SceneKind::FirstGen: {
      const PPoint K = d.point(), Q = d.point();
      return FirstGenInput{d.point(), d.point(), d.point(), K, Circle::centred_through(Q, K)};
    }
    case SceneKind::Theorem4: {
      std::array<PPoint, 5> on{d.point(), d.point(), d.point(), d.point(), d.point()};
      const Conic sigma = conic_through_5(on);
      if (is_zero(sigma.determinant())) throw GeomError(ErrorCode::TangentialDegeneracy, "line-pair sigma");
      return Theorem4Input{d.point(), d.point(), d.point(), on[0], on[1], on[2], sigma};
    }
    case SceneKind::FourCircle: {
      FourCircleParams prm{d.nonzero(3, 3), d.nonzero(4, 3), d.nonzero(4, 3), d.nonzero(4, 3), 1, d.nonzero(4, 3)};
      prm.d = 1 / (prm.a * prm.b * prm.c);
      prm.validate(true);
      return prm;
    }
    case SceneKind::SecondGen: {
      const PPoint T = d.point(), Q = d.point();
      return SecondGenInput{d.point(), d.point(), d.point(), T, Circle::centred_through(Q, T)};
    }
  }
  throw GeomError(ErrorCode::SchemaError, "unknown kind");
}

}  // namespace

Scene generate_scene(SceneKind kind, std::uint64_t seed) {
  Draw d(kind, seed);
  std::string last = "no attempt";
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    try {
      Scene s{kind, seed, json::object(), draw_payload(kind, d)};
      if (auto why = degeneracy(s)) {
        last = *why;
        continue;
      }
      s.provenance = {{"generator", "hagge/1"}, {"seed", seed}, {"attempt", attempt}};
      return s;
    } catch (const GeomError& e) {
      last = e.what();
    }
  }
  throw GeomError(ErrorCode::GenerationExhausted,
                  kind_name(kind) + "/" + std::to_string(seed) + " after " + std::to_string(kRetries) +
                      " draws; last rejection: " + last);
}

std::optional<std::string> degeneracy(const Scene& s) {
  try {
    switch (s.kind) {
      case SceneKind::FirstGen: {
        const auto& in = std::get<FirstGenInput>(s.payload);
        const FirstGenScene f = build_first_gen(in.A, in.B, in.C, in.K, in.sigma);
        theorem1_verdict(f);
        theorem1_oracle(f, 1);
        theorem2_verdict(standardized(f));
        theorem3_verdict(f);
        theorem3_pascal(f);
        break;
      }
      case SceneKind::Theorem4: {
        const auto& in = std::get<Theorem4Input>(s.payload);
        build_theorem4(in.A, in.B, in.C, in.D, in.E, in.F, in.sigma);
        break;
      }
      case SceneKind::FourCircle: {
        const FourCircleScene f = build_four_circle(std::get<FourCircleParams>(s.payload));
        theorem6_verdict(f);
        theorem7_verdict(f);
        break;
      }
      case SceneKind::SecondGen: {
        const auto& in = std::get<SecondGenInput>(s.payload);
        const SecondGenScene g = build_second_gen(in.A, in.B, in.C, in.T, in.hcirc);
        theorem9_verdict(g);
        theorem10_verdict(g);
        conic_image_check(g);
        break;
      }
    }
  } catch (const GeomError& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

}  // namespace hagge::harness
