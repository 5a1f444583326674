#include "tsol/minkowski.hpp"

#include "tsol/errors.hpp"

#include <cmath>

namespace tsol {

bool is_finite(const MVec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

const char* causal_character_name(CausalCharacter c) {
    switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Lightlike: return "lightlike";
    case CausalCharacter::ZeroVector: return "zero";
    }
    return "?";
}

CausalCharacter causal_character(const MVec3& a, double tol) {
    double e2 = euclid_norm2(a);
    if (e2 == 0.0) return CausalCharacter::ZeroVector;
    double q = mink_dot(a, a);
    if (std::abs(q) <= tol * e2) return CausalCharacter::Lightlike;
    return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

MVec3 normalize(const MVec3& v, double tol) {
    CausalCharacter c = causal_character(v, tol);
    if (c == CausalCharacter::Lightlike || c == CausalCharacter::ZeroVector)
        throw Error(ErrorKind::LightlikeNormalization,
                    "cannot normalize a causal-null vector (<v,v> within the lightlike band)");
    return v * (1.0 / std::sqrt(std::abs(mink_dot(v, v))));
}

LinearMap3 boost_x(double phi) {
    double ch = std::cosh(phi);
    double sh = std::sinh(phi);
    LinearMap3 b;
    b.m = {{{1.0, 0.0, 0.0}, {0.0, ch, sh}, {0.0, sh, ch}}};
    return b;
}

LinearMap3 rot_z(double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    LinearMap3 r;
    r.m = {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
    return r;
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::LightlikeNormalization: return "LightlikeNormalization";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::AllPointsDegenerate: return "AllPointsDegenerate";
    case ErrorKind::DegenerateSampleSet: return "DegenerateSampleSet";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::EpsMismatch: return "EpsMismatch";
    case ErrorKind::EpsUnavailable: return "EpsUnavailable";
    case ErrorKind::RegimeViolationAtStart: return "RegimeViolationAtStart";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::IncompatiblePair: return "IncompatiblePair";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EvalDomainError: return "EvalDomainError";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DegenerateBase: return "DegenerateBase";
    case ErrorKind::LightlikeDirectorDerivative: return "LightlikeDirectorDerivative";
    case ErrorKind::InconclusiveSampling: return "InconclusiveSampling";
    }
    return "Error";
}

} // namespace tsol
