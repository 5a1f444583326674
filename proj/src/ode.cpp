#include "tsol/ode.hpp"

#include "tsol/errors.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace tsol {

const char* reaper_id_name(ReaperId id) {
    switch (id) {
    case ReaperId::Eq31Spacelike: return "eq31-spacelike";
    case ReaperId::Eq31Timelike: return "eq31-timelike";
    case ReaperId::Eq32: return "eq32";
    case ReaperId::Gr0Spacelike: return "gr0-spacelike";
    case ReaperId::Gr0Timelike: return "gr0-timelike";
    }
    return "?";
}

const char* stop_reason_name(StopReason r) {
    switch (r) {
    case StopReason::ReachedEnd: return "reached-end";
    case StopReason::RegimeExit: return "regime-exit";
    case StopReason::Blowup: return "blow-up";
    case StopReason::StepUnderflow: return "step-underflow";
    }
    return "?";
}

ReaperOde make_reaper(ReaperId id, std::optional<MVec3> v) {
    ReaperOde ode;
    ode.id = id;
    switch (id) {
    case ReaperId::Eq31Spacelike:
    case ReaperId::Eq31Timelike: {
        MVec3 vel = v ? *v : MVec3{0, 0, 1};
        double sgn = id == ReaperId::Eq31Spacelike ? 1.0 : -1.0;
        double v2 = vel.y, v3 = vel.z;
        ode.rhs = [sgn, v2, v3](double, double, double up) {
            return sgn * (1.0 - up * up) * (v2 * up - v3);
        };
        ode.velocity = vel;
        ode.ruling = RulingCase::SpacelikeW;
        ode.regime = id == ReaperId::Eq31Spacelike ? 1 : -1;
        break;
    }
    case ReaperId::Eq32: {
        MVec3 vel = v ? *v : MVec3{0, 1, 0};
        double v1 = vel.x, v2 = vel.y;
        ode.rhs = [v1, v2](double, double, double up) {
            return (1.0 + up * up) * (v2 - v1 * up);
        };
        ode.velocity = vel;
        ode.ruling = RulingCase::TimelikeW;
        ode.regime = 0;
        break;
    }
    case ReaperId::Gr0Spacelike:
    case ReaperId::Gr0Timelike: {
        double sgn = id == ReaperId::Gr0Spacelike ? 1.0 : -1.0;
        ode.rhs = [sgn](double, double, double up) {
            return sgn * (1.0 - up * up) * (1.0 - up);
        };
        ode.velocity = {0, -1, -1};
        ode.ruling = RulingCase::SpacelikeW;
        ode.regime = id == ReaperId::Gr0Spacelike ? 1 : -1;
        break;
    }
    }
    return ode;
}

namespace {

struct State {
    double u, up;
};

State rk4_step(const ReaperOde& ode, double s, State y, double h) {
    auto f = [&](double ss, State yy) { return State{yy.up, ode.rhs(ss, yy.u, yy.up)}; };
    State k1 = f(s, y);
    State k2 = f(s + h / 2, {y.u + h / 2 * k1.u, y.up + h / 2 * k1.up});
    State k3 = f(s + h / 2, {y.u + h / 2 * k2.u, y.up + h / 2 * k2.up});
    State k4 = f(s + h, {y.u + h * k3.u, y.up + h * k3.up});
    return {y.u + h / 6 * (k1.u + 2 * k2.u + 2 * k3.u + k4.u),
            y.up + h / 6 * (k1.up + 2 * k2.up + 2 * k3.up + k4.up)};
}

double regime_band(double up) { return 1e-14 * (1.0 + up * up); }

bool regime_ok(const ReaperOde& ode, double up) {
    if (ode.regime == 0) return true;
    double q = 1.0 - up * up;
    return ode.regime * q > regime_band(up);
}

} // namespace

bool ProfileSolution::covers(double s) const {
    double a = nodes.front().s, b = nodes.back().s;
    if (a > b) std::swap(a, b);
    double slack = 1e-12 * (1.0 + b - a);
    return s >= a - slack && s <= b + slack;
}

namespace {

// Index of the node interval containing s (nodes monotone in either direction).
size_t locate(const std::vector<ProfileNode>& nodes, double s) {
    bool inc = nodes.back().s >= nodes.front().s;
    size_t lo = 0, hi = nodes.size() - 1;
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        bool left = inc ? s < nodes[mid].s : s > nodes[mid].s;
        if (left) hi = mid;
        else lo = mid;
    }
    return lo;
}

} // namespace

double ProfileSolution::eval(double s) const {
    if (!covers(s)) throw Error(ErrorKind::OutOfRange, "parameter outside the integrated range");
    size_t i = locate(nodes, s);
    const ProfileNode& n0 = nodes[i];
    const ProfileNode& n1 = nodes[i + 1];
    double h = n1.s - n0.s;
    double x = (s - n0.s) / h;
    double x2 = x * x, x3 = x2 * x;
    return n0.u * (2 * x3 - 3 * x2 + 1) + n0.up * h * (x3 - 2 * x2 + x) +
           n1.u * (-2 * x3 + 3 * x2) + n1.up * h * (x3 - x2);
}

double ProfileSolution::eval_deriv(double s) const {
    if (!covers(s)) throw Error(ErrorKind::OutOfRange, "parameter outside the integrated range");
    size_t i = locate(nodes, s);
    const ProfileNode& n0 = nodes[i];
    const ProfileNode& n1 = nodes[i + 1];
    double h = n1.s - n0.s;
    double x = (s - n0.s) / h;
    double x2 = x * x, x3 = x2 * x;
    // u' gets its own Hermite cubic: the nodes carry u'' exactly, so this is
    // one order better than differentiating the u interpolant
    return n0.up * (2 * x3 - 3 * x2 + 1) + n0.upp * h * (x3 - 2 * x2 + x) +
           n1.up * (-2 * x3 + 3 * x2) + n1.upp * h * (x3 - x2);
}

ProfileSolution integrate(const ReaperOde& ode, double s0, double u0, double up0, double s1,
                          const IntegrateOptions& opt) {
    if (s1 == s0) throw Error(ErrorKind::OutOfRange, "empty integration interval");
    if (!regime_ok(ode, up0)) {
        std::ostringstream os;
        os << "initial slope u' = " << up0 << " violates the " << reaper_id_name(ode.id)
           << " regime (sign of 1 - u'^2 must be " << (ode.regime > 0 ? "positive" : "negative")
           << ")";
        throw Error(ErrorKind::RegimeViolationAtStart, os.str());
    }

    double dir = s1 > s0 ? 1.0 : -1.0;
    double span = std::abs(s1 - s0);

    ProfileSolution sol;
    double s = s0;
    State y{u0, up0};
    sol.nodes.push_back({s, y.u, y.up, ode.rhs(s, y.u, y.up)});

    if (opt.fixed_step) {
        double want = std::abs(*opt.fixed_step);
        if (!(want > 0)) throw Error(ErrorKind::OutOfRange, "fixed step must be positive");
        long long n = std::max<long long>(1, llround(span / want));
        double h = span / double(n);
        for (long long i = 0; i < n; ++i) {
            State ynext = rk4_step(ode, s, y, dir * h);
            double snext = s0 + dir * h * double(i + 1);
            if (!std::isfinite(ynext.u) || !std::isfinite(ynext.up) ||
                std::abs(ynext.up) > opt.up_blowup) {
                sol.stop = StopReason::Blowup;
                return sol;
            }
            if (!regime_ok(ode, ynext.up)) {
                sol.stop = StopReason::RegimeExit;
                return sol;
            }
            s = snext;
            y = ynext;
            sol.nodes.push_back({s, y.u, y.up, ode.rhs(s, y.u, y.up)});
        }
        sol.stop = StopReason::ReachedEnd;
        return sol;
    }

    double h = std::min(std::abs(opt.h_init), span);
    long long guard = 0;
    for (;;) {
        if (++guard > 5'000'000)
            throw Error(ErrorKind::StepUnderflow, "step control failed to finish");
        double remaining = std::abs(s1 - s);
        if (remaining <= 1e-14 * (1.0 + std::abs(s1))) {
            sol.stop = StopReason::ReachedEnd;
            return sol;
        }
        h = std::min(h, remaining);

        State yfull = rk4_step(ode, s, y, dir * h);
        State yhalf = rk4_step(ode, s, y, dir * h / 2);
        State y2 = rk4_step(ode, s + dir * h / 2, yhalf, dir * h / 2);

        bool finite = std::isfinite(y2.u) && std::isfinite(y2.up) && std::isfinite(yfull.u) &&
                      std::isfinite(yfull.up);
        double scale = 1.0 + std::abs(y.u) + std::abs(y.up);
        double est = finite ? std::hypot(y2.u - yfull.u, y2.up - yfull.up) / 15.0 / scale : 1e300;

        if (finite && est <= opt.tol * h) {
            bool exits_regime = !regime_ok(ode, y2.up);
            bool blows_up = std::abs(y2.up) > opt.up_blowup;
            if (exits_regime || blows_up) {
                // Try to creep closer with smaller steps before giving up.
                if (h > 4.0 * opt.h_min) {
                    h /= 4.0;
                    continue;
                }
                sol.stop = exits_regime ? StopReason::RegimeExit : StopReason::Blowup;
                return sol;
            }
            s += dir * h;
            y = y2;
            sol.nodes.push_back({s, y.u, y.up, ode.rhs(s, y.u, y.up)});
            double grow = est > 0 ? 0.9 * std::pow(opt.tol * h / est, 0.25) : 5.0;
            h *= std::clamp(grow, 0.2, 5.0);
        } else {
            double shrink = (finite && est > 0) ? 0.9 * std::pow(opt.tol * h / est, 0.25) : 0.2;
            h *= std::clamp(shrink, 0.05, 0.9);
        }
        if (h < opt.h_min) {
            if (sol.nodes.size() > 1) {
                sol.stop = StopReason::StepUnderflow;
                return sol;
            }
            throw Error(ErrorKind::StepUnderflow, "step size underflow before any progress");
        }
    }
}

SolitonFamily lift_cylinder(const ReaperOde& ode, const ProfileSolution& sol, SRange t_range) {
    if (sol.nodes.size() < 2)
        throw Error(ErrorKind::OutOfRange, "solution too short to lift");
    auto rhs = ode.rhs;
    auto solution = std::make_shared<ProfileSolution>(sol);
    Profile u;
    u.u = [solution, rhs](double s) {
        double f = solution->eval(s);
        double d1 = solution->eval_deriv(s);
        return Jet1{f, d1, rhs(s, f, d1)};
    };
    double a = sol.s_begin(), b = sol.s_end();
    if (a > b) std::swap(a, b);
    return make_cylinder(std::move(u), ode.ruling, ode.velocity, {a, b}, t_range);
}

ProfileComparison compare_closed_form(const ProfileSolution& sol, const SolitonFamily& family,
                                      int samples) {
    if (!family.profile || !family.ruling)
        throw Error(ErrorKind::IncompatiblePair, "family is not a cylinder with a profile");
    double a = sol.s_begin(), b = sol.s_end();
    if (a > b) std::swap(a, b);
    double lo = std::max(a, family.spec.domain.s0);
    double hi = std::min(b, family.spec.domain.s1);
    if (!(hi > lo))
        throw Error(ErrorKind::IncompatiblePair, "no overlap between the s-ranges");
    ProfileComparison cmp{0.0, lo, {lo, hi}};
    for (int i = 0; i < samples; ++i) {
        double s = lo + (hi - lo) * i / double(samples - 1);
        double diff = std::abs(sol.eval(s) - family.profile->u(s).f);
        if (diff > cmp.max_abs_diff) {
            cmp.max_abs_diff = diff;
            cmp.at_s = s;
        }
    }
    return cmp;
}

} // namespace tsol
