#pragma once

#include "tsol/curve.hpp"
#include "tsol/minkowski.hpp"
#include "tsol/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tsol {

// Sampled invariants of the ruling family of X = gamma + t w. Director
// quantities are computed on the pointwise-normalized director w_hat whenever
// w is not lightlike, so they are insensitive to scaling w(s).
struct RuledInvariants {
    CausalCharacter director_char = CausalCharacter::ZeroVector;
    bool mixed_char = false;       // causal character changes across samples
    bool cylindrical = false;      // w_hat' == 0 (lightlike w: direction of w constant)
    double cyl_measure = 0.0;      // sup |w_hat'| (lightlike: sup |w x w'| / sup|w|^2)
    // Causal sign of <w_hat', w_hat'>: +1 spacelike, -1 timelike, 0 lightlike.
    // Unset when cylindrical, when the director is lightlike, or when the
    // character of w_hat' is not uniform across samples (eta_mixed).
    std::optional<int> eta;
    bool eta_mixed = false;
    // Straightness of the lightlike derivative: set when eta == 0.
    bool wprime_direction_constant = false;
    double wprime_direction_spread = 0.0; // sup Euclidean cross of unit directions
    MVec3 wprime_direction{0, 0, 0};      // Euclidean-unit representative
    double max_abs_q = 0.0; // sup |<gamma', w_hat'>|
    double max_abs_r = 0.0; // sup |<gamma', gamma'>|
};

RuledInvariants ruled_invariants(const RuledSurfaceSpec& spec, int samples = 101,
                                 double cyl_tol = 1e-9, double char_tol = 1e-10);

// Euclidean best-fit plane through sampled surface points.
struct PlanarityReport {
    bool planar = false;
    MVec3 point{0, 0, 0};  // centroid
    MVec3 normal{0, 0, 0}; // Euclidean-unit
    double max_dev = 0.0;  // sup |<p - centroid, normal>_euclid|
    double scale = 0.0;    // bounding-box diagonal
};

PlanarityReport planarity_test(const ParametricSurface& surf, int ns = 24, int nt = 12,
                               double tol = 1e-8);

/// Coefficients c0..c[degree] of the best polynomial fit (in powers of t) to
/// t -> r2(s, t) at fixed s, sampled at degree+1 Chebyshev nodes of the
/// t-range. For an exact ruled patch with fixed eps the residual is a cubic,
/// so with degree = 4 the leading coefficient must vanish. eps is taken from
/// the first non-degenerate node unless supplied.
std::vector<double> t_polynomial_coeffs(const RuledSurfaceSpec& spec, const MVec3& v, double s,
                                        int degree = 4, std::optional<int> eps = {});

/// Reparametrizes a non-cylindrical ruled patch so that the normalized
/// director moves at unit speed (|<w_hat',w_hat'>| = 1) and the base curve is
/// the striction curve (<c', w_hat'> = 0). The t-range is carried over.
/// Throws Error(LightlikeNormalization) when the director is lightlike
/// somewhere and Error(LightlikeDirectorDerivative) when <w_hat',w_hat'>
/// vanishes somewhere (that includes cylindrical input).
RuledSurfaceSpec striction_reparametrize(const RuledSurfaceSpec& spec, int table_size = 1024);

enum class CaseLabel {
    Thm1Plane,
    Thm1SpacelikeCylinder,
    Thm1TimelikeCylinder,
    Thm1NullScroll,
    Thm2Excluded,
    Thm3Plane,
    Thm3MustBeCylindrical,
    Thm4Candidate,
    NotASoliton,
    InconclusiveSampling,
};

const char* case_label_name(CaseLabel c);

struct ClassifyOptions {
    int director_samples = 101;
    int grid_ns = 33;        // velocity/residual grid
    int grid_nt = 9;
    double cyl_tol = 1e-9;
    double char_tol = 1e-10;
    double straight_tol = 1e-8;
    double plane_tol = 1e-8;
    double fit_tol = 1e-7;     // rms of the linear velocity fit
    double residual_tol = 1e-6; // max |r1| with the chosen velocity
};

struct ClassificationReport {
    CaseLabel label = CaseLabel::NotASoliton;
    RuledInvariants invariants;
    std::optional<VelocityFit> fit;
    std::optional<MVec3> velocity; // velocity the residual check used
    double max_residual = 0.0;     // max |r1|; NaN when no velocity was checked
    std::vector<double> t_coeffs;  // degree-4 residual coefficients at mid s
    std::vector<std::string> evidence;
};

/// Decides which case of the ruled-soliton classification the patch falls in,
/// fitting the translation velocity on the way. Soliton labels are only
/// assigned when the fitted velocity passes the pointwise residual check.
ClassificationReport classify(const RuledSurfaceSpec& spec, const ClassifyOptions& opt = {});

std::string format_report(const ClassificationReport& report);

} // namespace tsol
