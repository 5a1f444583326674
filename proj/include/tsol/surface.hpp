#pragma once

#include "tsol/minkowski.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace tsol {

// Position and derivatives of an immersion X(s,t) up to second order.
struct SurfaceJet2 {
    MVec3 p;   // X
    MVec3 ps;  // X_s
    MVec3 pt;  // X_t
    MVec3 pss; // X_ss
    MVec3 pst; // X_st
    MVec3 ptt; // X_tt
};

struct Rect {
    double s0 = 0.0, s1 = 1.0;
    double t0 = 0.0, t1 = 1.0;
};

enum class JetProvenance { Analytic, TaylorJet, FiniteDifference };

struct ParametricSurface {
    Rect domain;
    std::function<SurfaceJet2(double, double)> jet;
    JetProvenance provenance = JetProvenance::TaylorJet;
};

/// Largest Euclidean norm among the six jet vectors; the scale used by the
/// relative degeneracy test.
double jet_scale(const SurfaceJet2& j);

/// True when |<Xs x Xt, Xs x Xt>| <= tol * scale^2, i.e. the induced metric is
/// (numerically) degenerate at this point.
bool is_degenerate(const SurfaceJet2& j, double tol = 1e-10);

// First/second fundamental data at one non-degenerate point. eps = <N,N> is -1
// on spacelike patches (timelike normal) and +1 on timelike patches.
struct FundamentalData {
    double E, F, G;
    double W2; // EG - F^2
    int eps;
    MVec3 N;
    double H;
    double K;
};

/// Throws Error(DegeneratePoint) when is_degenerate(j, tol).
FundamentalData fundamental_data(const SurfaceJet2& j, double tol = 1e-10);

/// Defect of 2H = <N,v>: r1 = 2H - <N,v>. Throws Error(DegeneratePoint).
double residual_eq1(const SurfaceJet2& j, const MVec3& v, double tol = 1e-10);

/// Defect of the polynomial form: r2 = H1 - eps*(EG-F^2)*(Xs,Xt,v) with
/// H1 = E*(Xs,Xt,Xtt) - 2F*(Xs,Xt,Xst) + G*(Xs,Xt,Xss). Well defined at
/// degenerate points once eps is supplied; the two-argument overload reads eps
/// from fundamental_data and throws Error(EpsUnavailable) if it cannot.
double residual_eq2(const SurfaceJet2& j, const MVec3& v, int eps);
double residual_eq2(const SurfaceJet2& j, const MVec3& v);

/// H1 and the eps-independent factor of the right side, so callers can form
/// residual_eq2 for a fixed patch eps: r2 = h1 - eps * w2 * triple(Xs,Xt,v).
struct Eq2Parts {
    double h1;
    double w2;
    double triple_v; // (Xs, Xt, v)
};
Eq2Parts residual_eq2_parts(const SurfaceJet2& j, const MVec3& v);

using PositionFn = std::function<MVec3(double, double)>;

/// Central-difference jet oracle (O(h^2) accurate). The mixed derivative is
/// differenced in s first; fd_jet_ts does t first, for cross-checking.
SurfaceJet2 fd_jet(const PositionFn& x, double s, double t, double h = 1e-5);
SurfaceJet2 fd_jet_ts(const PositionFn& x, double s, double t, double h = 1e-5);

struct GridReport {
    double max_abs_r1 = 0.0;
    double mean_abs_r1 = 0.0;
    double worst_s = 0.0, worst_t = 0.0;
    int evaluated = 0;
    int degenerate = 0;
};

/// Max/mean |r1| over an ns x nt grid of interior points (cell midpoints of the
/// uniform subdivision). Degenerate points are skipped and counted. Throws
/// Error(AllPointsDegenerate) when nothing could be evaluated.
GridReport max_residual(const ParametricSurface& surf, const MVec3& v, int ns, int nt,
                        double degen_tol = 1e-10);

// One linear condition eps*(EG-F^2)*(Xs,Xt,v) = H1 on the velocity, written as
// row . v = rhs with row the Euclidean coefficient vector.
struct VelocityRow {
    std::array<double, 3> row;
    double rhs;
};

VelocityRow velocity_row(const SurfaceJet2& j, int eps);

struct VelocityFit {
    MVec3 v;                     // minimal-norm least-squares solution
    double fit_rms = 0.0;        // RMS defect of eps*(EG-F^2)*(Xs,Xt,v) - H1
    int rank = 0;
    int nullspace_dim = 0;
    std::vector<MVec3> nullspace; // Euclidean-orthonormal basis
};

/// Least-squares velocity from the rows; rank decided relative to the largest
/// singular value (rel_tol). Throws Error(RankDeficient) when rank is 0.
VelocityFit fit_velocity_rows(const std::vector<VelocityRow>& rows, double rel_tol = 1e-9);

/// Same system restricted to the plane {v : <c,v> = 0} (Minkowski pairing).
VelocityFit fit_velocity_rows_constrained(const std::vector<VelocityRow>& rows, const MVec3& c,
                                          double rel_tol = 1e-9);

/// Builds rows over an interior grid (skipping degenerate points, eps taken
/// per point) and solves. Throws AllPointsDegenerate / RankDeficient.
VelocityFit solve_velocity(const ParametricSurface& surf, int ns, int nt,
                           double degen_tol = 1e-10);

} // namespace tsol
