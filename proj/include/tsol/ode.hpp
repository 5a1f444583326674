#pragma once

#include "tsol/catalog.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace tsol {

// Scalar profile equations u'' = rhs(s, u, u') whose graphs, extruded along a
// fixed ruling direction, translate under mean curvature flow.
//
//   Eq31Spacelike  u'' =  (1 - u'^2)(v2 u' - v3)   rulings (1,0,0), |u'| < 1
//   Eq31Timelike   u'' = -(1 - u'^2)(v2 u' - v3)   rulings (1,0,0), |u'| > 1
//   Eq32           u'' =  (1 + u'^2)(v2 - v1 u')   rulings (0,0,1)
//   Gr0Spacelike   u'' =  (1 - u'^2)(1 - u')       rulings (1,0,0), |u'| < 1
//   Gr0Timelike    u'' = -(1 - u'^2)(1 - u')       rulings (1,0,0), |u'| > 1
//
// The Gr0 pair is the Eq31 pair specialized to v = (0,-1,-1); that velocity is
// what the lifted cylinder actually translates along, and it is stored here.
enum class ReaperId { Eq31Spacelike, Eq31Timelike, Eq32, Gr0Spacelike, Gr0Timelike };

const char* reaper_id_name(ReaperId id);

struct ReaperOde {
    ReaperId id;
    std::function<double(double s, double u, double up)> rhs;
    MVec3 velocity;   // soliton velocity of the lifted cylinder
    RulingCase ruling;
    int regime;       // required sign of 1 - u'^2; 0 when unconstrained
};

/// v supplies the velocity components the equation uses (v2/v3 for Eq31,
/// v1/v2 for Eq32); the free component is carried through to the lift.
/// Defaults: Eq31 -> (0,0,1), Eq32 -> (0,1,0). Gr0 ignores v.
ReaperOde make_reaper(ReaperId id, std::optional<MVec3> v = {});

struct IntegrateOptions {
    double tol = 1e-10;     // local error per unit step
    double h_init = 1e-2;
    double h_min = 1e-12;
    double up_blowup = 1e6; // |u'| beyond this counts as a blow-up
    std::optional<double> fixed_step; // plain RK4 with this step, no control
};

enum class StopReason { ReachedEnd, RegimeExit, Blowup, StepUnderflow };

const char* stop_reason_name(StopReason r);

struct ProfileNode {
    double s, u, up, upp;
};

// Accepted integration nodes in traversal order (s increasing or decreasing
// with the requested direction). Evaluation between nodes is cubic Hermite in
// (u, u'); derivatives of the interpolant stay within the method order.
struct ProfileSolution {
    std::vector<ProfileNode> nodes;
    StopReason stop = StopReason::ReachedEnd;

    double s_begin() const { return nodes.front().s; }
    double s_end() const { return nodes.back().s; }
    bool covers(double s) const;
    double eval(double s) const;       // throws Error(OutOfRange) outside
    double eval_deriv(double s) const; // same
};

/// Integrates from u(s0) = u0, u'(s0) = up0 toward s1. Throws
/// Error(RegimeViolationAtStart) if the initial slope sits in the wrong
/// regime, Error(StepUnderflow) only when no step could be completed;
/// otherwise a truncated solution is returned with the reason recorded.
ProfileSolution integrate(const ReaperOde& ode, double s0, double u0, double up0, double s1,
                          const IntegrateOptions& opt = {});

/// Extrudes a solution into the cylinder the equation describes, over the
/// covered s-range. u'' along the profile comes from the equation itself,
/// not from differentiating the interpolant.
SolitonFamily lift_cylinder(const ReaperOde& ode, const ProfileSolution& sol,
                            SRange t_range = {-1.0, 1.0});

struct ProfileComparison {
    double max_abs_diff;
    double at_s;
    SRange overlap;
};

/// Max |u_numeric - u_family| over the overlap of the solution range and the
/// family's s-range. The family must be a cylinder with a stored profile and
/// the overlap nonempty; otherwise Error(IncompatiblePair).
ProfileComparison compare_closed_form(const ProfileSolution& sol, const SolitonFamily& family,
                                      int samples = 257);

} // namespace tsol
