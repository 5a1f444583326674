#include "tsol/ruled.hpp"

#include "tsol/errors.hpp"
#include "tsol/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <memory>
#include <sstream>

namespace tsol {

namespace {

struct DirJet {
    MVec3 w, w1, w2;
};

// Value and two derivatives of w/sqrt(|<w,w>|); delta is the sign of <w,w>.
DirJet normalize_director(const CurveJet& d, int delta) {
    double q = mink_dot(d.p, d.p);
    double q1 = 2.0 * mink_dot(d.p, d.d1);
    double q2 = 2.0 * (mink_dot(d.d1, d.d1) + mink_dot(d.p, d.d2));
    double m = std::sqrt(delta * q);
    double m1 = delta * q1 / (2.0 * m);
    double m2 = (delta * q2 - 2.0 * m1 * m1) / (2.0 * m);
    double inv = 1.0 / m;
    double inv1 = -m1 / (m * m);
    double inv2 = (2.0 * m1 * m1 - m * m2) / (m * m * m);
    DirJet nj;
    nj.w = d.p * inv;
    nj.w1 = d.d1 * inv + d.p * inv1;
    nj.w2 = d.d2 * inv + d.d1 * (2.0 * inv1) + d.p * inv2;
    return nj;
}

MVec3 euclid_cross(const MVec3& a, const MVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

MVec3 canonical_sign(MVec3 v) {
    double ax = std::abs(v.x), ay = std::abs(v.y), az = std::abs(v.z);
    double lead = ax >= ay && ax >= az ? v.x : (ay >= az ? v.y : v.z);
    return lead < 0 ? -v : v;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(4) << std::scientific << x;
    return os.str();
}

std::string fmt_vec(const MVec3& v) {
    std::ostringstream os;
    os << std::setprecision(10) << "(" << v.x << ", " << v.y << ", " << v.z << ")";
    return os.str();
}

} // namespace

RuledInvariants ruled_invariants(const RuledSurfaceSpec& spec, int samples, double cyl_tol,
                                 double char_tol) {
    if (samples < 2) throw Error(ErrorKind::OutOfRange, "need at least 2 director samples");
    RuledInvariants inv;
    const Rect& d = spec.domain;

    std::vector<CurveJet> dirs(samples), bases(samples);
    for (int i = 0; i < samples; ++i) {
        double s = d.s0 + (d.s1 - d.s0) * i / double(samples - 1);
        dirs[i] = spec.director(s);
        bases[i] = spec.gamma(s);
        if (euclid_norm(dirs[i].p) == 0.0)
            throw Error(ErrorKind::DegenerateSampleSet, "director vanishes inside the s-range");
    }

    inv.director_char = causal_character(dirs[0].p, char_tol);
    for (int i = 1; i < samples; ++i) {
        if (causal_character(dirs[i].p, char_tol) != inv.director_char) {
            inv.mixed_char = true;
            return inv;
        }
    }

    if (inv.director_char == CausalCharacter::Lightlike) {
        double sup_cross = 0.0, sup_w = 0.0;
        for (const CurveJet& dj : dirs) {
            sup_cross = std::max(sup_cross, euclid_norm(euclid_cross(dj.p, dj.d1)));
            sup_w = std::max(sup_w, euclid_norm(dj.p));
        }
        inv.cyl_measure = sup_cross / (sup_w * sup_w);
        inv.cylindrical = inv.cyl_measure <= cyl_tol;
        return inv;
    }

    int delta = inv.director_char == CausalCharacter::Spacelike ? 1 : -1;
    std::vector<DirJet> njs(samples);
    double sup_w1 = 0.0;
    for (int i = 0; i < samples; ++i) {
        njs[i] = normalize_director(dirs[i], delta);
        sup_w1 = std::max(sup_w1, euclid_norm(njs[i].w1));
    }
    inv.cyl_measure = sup_w1;
    inv.cylindrical = sup_w1 <= cyl_tol;
    if (inv.cylindrical) return inv;

    int pos = 0, neg = 0, nul = 0;
    for (const DirJet& nj : njs) {
        double q = mink_dot(nj.w1, nj.w1);
        double band = char_tol * euclid_norm2(nj.w1);
        if (q > band) ++pos;
        else if (q < -band) ++neg;
        else ++nul;
    }
    if (pos == samples) inv.eta = 1;
    else if (neg == samples) inv.eta = -1;
    else if (nul == samples) inv.eta = 0;
    else inv.eta_mixed = true;

    for (int i = 0; i < samples; ++i) {
        inv.max_abs_q = std::max(inv.max_abs_q, std::abs(mink_dot(bases[i].d1, njs[i].w1)));
        inv.max_abs_r = std::max(inv.max_abs_r, std::abs(mink_dot(bases[i].d1, bases[i].d1)));
    }

    if (inv.eta && *inv.eta == 0) {
        int ref = 0;
        for (int i = 1; i < samples; ++i)
            if (euclid_norm(njs[i].w1) > euclid_norm(njs[ref].w1)) ref = i;
        MVec3 u_ref = njs[ref].w1 * (1.0 / euclid_norm(njs[ref].w1));
        double spread = 0.0;
        for (const DirJet& nj : njs) {
            double len = euclid_norm(nj.w1);
            if (len <= 1e-12 * sup_w1) continue;
            MVec3 u = nj.w1 * (1.0 / len);
            spread = std::max(spread, euclid_norm(euclid_cross(u, u_ref)));
        }
        inv.wprime_direction_spread = spread;
        inv.wprime_direction = canonical_sign(u_ref);
        inv.wprime_direction_constant = spread <= 1e-8;
    }
    return inv;
}

PlanarityReport planarity_test(const ParametricSurface& surf, int ns, int nt, double tol) {
    PlanarityReport rep;
    const Rect& d = surf.domain;
    std::vector<MVec3> pts;
    pts.reserve(size_t(ns) * nt);
    MVec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
    MVec3 c{0, 0, 0};
    for (int i = 0; i < ns; ++i) {
        double s = d.s0 + (d.s1 - d.s0) * i / double(ns - 1);
        for (int k = 0; k < nt; ++k) {
            double t = d.t0 + (d.t1 - d.t0) * k / double(nt - 1);
            MVec3 p = surf.jet(s, t).p;
            pts.push_back(p);
            c += p;
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
        }
    }
    c = c * (1.0 / double(pts.size()));
    rep.point = c;
    rep.scale = euclid_norm(hi - lo);

    Mat3 cov{};
    for (const MVec3& p : pts) {
        MVec3 q = p - c;
        double comp[3] = {q.x, q.y, q.z};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) cov[a][b] += comp[a] * comp[b];
    }
    SymEigen3 eig = sym_eigen3(cov);
    rep.normal = {eig.vecs[0][0], eig.vecs[1][0], eig.vecs[2][0]};
    rep.normal = canonical_sign(rep.normal);

    double dev = 0.0;
    for (const MVec3& p : pts) {
        MVec3 q = p - c;
        dev = std::max(dev, std::abs(q.x * rep.normal.x + q.y * rep.normal.y +
                                     q.z * rep.normal.z));
    }
    rep.max_dev = dev;
    rep.planar = dev <= tol * (rep.scale + 1e-300);
    return rep;
}

std::vector<double> t_polynomial_coeffs(const RuledSurfaceSpec& spec, const MVec3& v, double s,
                                        int degree, std::optional<int> eps) {
    if (degree < 1 || degree > 12)
        throw Error(ErrorKind::OutOfRange, "degree out of the supported range");
    int n = degree + 1;
    double tc = 0.5 * (spec.domain.t0 + spec.domain.t1);
    double th = 0.5 * (spec.domain.t1 - spec.domain.t0);
    if (th == 0.0) throw Error(ErrorKind::OutOfRange, "empty t-range");

    std::vector<double> xs(n), ts(n);
    std::vector<SurfaceJet2> jets(n);
    for (int k = 0; k < n; ++k) {
        xs[k] = std::cos(M_PI * (2.0 * k + 1.0) / (2.0 * n));
        ts[k] = tc + th * xs[k];
        jets[k] = ruled_jet(spec, s, ts[k]);
    }
    int e = 0;
    if (eps) {
        e = *eps;
    } else {
        bool found = false;
        for (int k = 0; k < n && !found; ++k) {
            if (!is_degenerate(jets[k])) {
                e = fundamental_data(jets[k]).eps;
                found = true;
            }
        }
        if (!found)
            throw Error(ErrorKind::AllPointsDegenerate,
                        "all polynomial nodes are metrically degenerate");
    }

    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<double> b(n);
    for (int k = 0; k < n; ++k) {
        double p = 1.0;
        for (int j = 0; j < n; ++j) {
            a[k][j] = p;
            p *= xs[k];
        }
        b[k] = residual_eq2(jets[k], v, e);
    }
    if (!solve_dense(a, b))
        throw Error(ErrorKind::DegenerateSampleSet, "polynomial node system is singular");

    // b now holds coefficients in powers of x = (t - tc)/th; expand to powers of t.
    std::vector<double> coef(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double scale = b[j] / std::pow(th, j);
        double binom = 1.0;
        for (int m = j; m >= 0; --m) {
            coef[m] += scale * binom * std::pow(-tc, j - m);
            binom = binom * m / double(j - m + 1);
        }
    }
    return coef;
}

RuledSurfaceSpec striction_reparametrize(const RuledSurfaceSpec& spec, int table_size) {
    if (table_size < 8) throw Error(ErrorKind::OutOfRange, "table too small");
    const Rect& dom = spec.domain;

    CausalCharacter ch = causal_character(spec.director(dom.s0).p);
    if (ch != CausalCharacter::Spacelike && ch != CausalCharacter::Timelike)
        throw Error(ErrorKind::LightlikeNormalization,
                    "director is lightlike; it has no unit normalization");
    int delta = ch == CausalCharacter::Spacelike ? 1 : -1;

    // Speed of the normalized director, and its causal sign.
    int eta = 0;
    auto speed = [&](double s) {
        DirJet nj = normalize_director(spec.director(s), delta);
        double q = mink_dot(nj.w1, nj.w1);
        double band = 1e-10 * euclid_norm2(nj.w1);
        int sign = q > band ? 1 : (q < -band ? -1 : 0);
        if (sign == 0)
            throw Error(ErrorKind::LightlikeDirectorDerivative,
                        "<w',w'> vanishes on the patch; no unit-speed reparametrization");
        if (eta == 0) eta = sign;
        if (sign != eta)
            throw Error(ErrorKind::LightlikeDirectorDerivative,
                        "<w',w'> changes causal type over the s-range");
        return std::sqrt(double(eta) * q);
    };

    int n = table_size;
    auto table = std::make_shared<std::vector<std::array<double, 3>>>(); // {s, ell, m}
    table->resize(n + 1);
    double h = (dom.s1 - dom.s0) / n;
    double ell = 0.0;
    double m_prev = speed(dom.s0);
    (*table)[0] = {dom.s0, 0.0, m_prev};
    for (int i = 1; i <= n; ++i) {
        double s = dom.s0 + h * i;
        double m_mid = speed(s - h / 2);
        double m_cur = speed(s);
        ell += h / 6.0 * (m_prev + 4.0 * m_mid + m_cur); // Simpson on the subinterval
        (*table)[i] = {s, ell, m_cur};
        m_prev = m_cur;
    }
    double total = ell;
    int eta_final = eta;

    // tau -> s with d s/d tau = 1/m: Hermite model of ell on the bracket, Newton.
    auto sigma = [table, total](double tau) {
        tau = std::clamp(tau, 0.0, total);
        size_t lo = 0, hi = table->size() - 1;
        while (hi - lo > 1) {
            size_t mid = (lo + hi) / 2;
            if ((*table)[mid][1] > tau) hi = mid;
            else lo = mid;
        }
        double s0 = (*table)[lo][0], l0 = (*table)[lo][1], m0 = (*table)[lo][2];
        double s1 = (*table)[hi][0], l1 = (*table)[hi][1], m1 = (*table)[hi][2];
        double hh = s1 - s0;
        double s = s0 + (tau - l0) / (l1 - l0) * hh;
        for (int it = 0; it < 8; ++it) {
            double x = (s - s0) / hh;
            double x2 = x * x, x3 = x2 * x;
            double lv = l0 * (2 * x3 - 3 * x2 + 1) + m0 * hh * (x3 - 2 * x2 + x) +
                        l1 * (-2 * x3 + 3 * x2) + m1 * hh * (x3 - x2);
            double ld = (l0 * (6 * x2 - 6 * x) + m0 * hh * (3 * x2 - 4 * x + 1) +
                         l1 * (-6 * x2 + 6 * x) + m1 * hh * (3 * x2 - 2 * x)) /
                        hh;
            s -= (lv - tau) / ld;
            s = std::clamp(s, s0, s1);
        }
        return s;
    };

    Curve old_gamma = spec.gamma;
    Curve old_dir = spec.director;

    // Pointwise normalized-director jet plus the reparametrization derivatives.
    auto frame = [old_dir, delta, eta_final, sigma](double tau, double& s, DirJet& nj,
                                                    double& sp, double& spp) {
        s = sigma(tau);
        nj = normalize_director(old_dir(s), delta);
        double q = mink_dot(nj.w1, nj.w1);
        double m = std::sqrt(double(eta_final) * q);
        double q1 = 2.0 * mink_dot(nj.w1, nj.w2);
        double m1 = eta_final * q1 / (2.0 * m);
        sp = 1.0 / m;
        spp = -m1 / (m * m * m);
    };

    RuledSurfaceSpec out;
    out.director = [frame](double tau) {
        double s, sp, spp;
        DirJet nj;
        frame(tau, s, nj, sp, spp);
        return CurveJet{nj.w, nj.w1 * sp, nj.w2 * (sp * sp) + nj.w1 * spp};
    };

    auto lambda_at = [old_gamma, old_dir, delta](double s) {
        DirJet nj = normalize_director(old_dir(s), delta);
        CurveJet g = old_gamma(s);
        return -mink_dot(g.d1, nj.w1) / mink_dot(nj.w1, nj.w1);
    };
    out.gamma = [old_gamma, old_dir, delta, frame, lambda_at](double tau) {
        double s, sp, spp;
        DirJet nj;
        frame(tau, s, nj, sp, spp);
        CurveJet g = old_gamma(s);
        double fd = 1e-4 * (1.0 + std::abs(s));
        double lm = lambda_at(s - fd), l0 = lambda_at(s), lp = lambda_at(s + fd);
        double l1 = (lp - lm) / (2.0 * fd);
        double l2 = (lp - 2.0 * l0 + lm) / (fd * fd);
        MVec3 c = g.p + nj.w * l0;
        MVec3 c1 = g.d1 + nj.w * l1 + nj.w1 * l0;
        MVec3 c2 = g.d2 + nj.w * l2 + nj.w1 * (2.0 * l1) + nj.w2 * l0;
        return CurveJet{c, c1 * sp, c2 * (sp * sp) + c1 * spp};
    };
    out.domain = {0.0, total, dom.t0, dom.t1};
    return out;
}

const char* case_label_name(CaseLabel c) {
    switch (c) {
    case CaseLabel::Thm1Plane: return "Thm1-Plane";
    case CaseLabel::Thm1SpacelikeCylinder: return "Thm1-SpacelikeCylinder";
    case CaseLabel::Thm1TimelikeCylinder: return "Thm1-TimelikeCylinder";
    case CaseLabel::Thm1NullScroll: return "Thm1-NullScroll";
    case CaseLabel::Thm2Excluded: return "Thm2-Excluded";
    case CaseLabel::Thm3Plane: return "Thm3-Plane";
    case CaseLabel::Thm3MustBeCylindrical: return "Thm3-MustBeCylindrical";
    case CaseLabel::Thm4Candidate: return "Thm4-Candidate";
    case CaseLabel::NotASoliton: return "NotASoliton";
    case CaseLabel::InconclusiveSampling: return "InconclusiveSampling";
    }
    return "?";
}

namespace {

std::vector<VelocityRow> collect_rows(const ParametricSurface& surf, int ns, int nt,
                                      double degen_tol = 1e-10) {
    const Rect& d = surf.domain;
    std::vector<VelocityRow> rows;
    for (int i = 0; i < ns; ++i) {
        double s = d.s0 + (i + 0.5) * (d.s1 - d.s0) / ns;
        for (int k = 0; k < nt; ++k) {
            double t = d.t0 + (k + 0.5) * (d.t1 - d.t0) / nt;
            SurfaceJet2 j = surf.jet(s, t);
            if (is_degenerate(j, degen_tol)) continue;
            rows.push_back(velocity_row(j, fundamental_data(j, degen_tol).eps));
        }
    }
    if (rows.size() < 3)
        throw Error(ErrorKind::DegenerateSampleSet,
                    "fewer than 3 usable samples for the velocity fit");
    return rows;
}

// Minimal-norm fits on surfaces with H == 0 return v = 0; the physically
// meaningful direction then lives in the fit nullspace.
MVec3 choose_velocity(const VelocityFit& fit) {
    if (euclid_norm(fit.v) <= 1e-9 && fit.nullspace_dim >= 1)
        return canonical_sign(fit.nullspace[0]);
    return fit.v;
}

} // namespace

ClassificationReport classify(const RuledSurfaceSpec& spec, const ClassifyOptions& opt) {
    ClassificationReport rep;
    rep.max_residual = std::numeric_limits<double>::quiet_NaN();
    rep.invariants = ruled_invariants(spec, opt.director_samples, opt.cyl_tol, opt.char_tol);
    const RuledInvariants& inv = rep.invariants;
    ParametricSurface surf = ruled_surface(spec);

    auto note = [&rep](const std::string& s) { rep.evidence.push_back(s); };

    if (inv.mixed_char) {
        rep.label = CaseLabel::InconclusiveSampling;
        note("director causal character changes across the s-range; split the domain at the "
             "transition");
        return rep;
    }

    auto finish = [&](const MVec3& v, CaseLabel ok) {
        rep.velocity = v;
        GridReport gr = max_residual(surf, v, opt.grid_ns, opt.grid_nt);
        rep.max_residual = gr.max_abs_r1;
        if (gr.max_abs_r1 <= opt.residual_tol) {
            rep.label = ok;
        } else {
            rep.label = CaseLabel::NotASoliton;
            note("best velocity " + fmt_vec(v) + " still leaves max |2H - <N,v>| = " +
                 fmt(gr.max_abs_r1) + " at (s,t) = (" + fmt(gr.worst_s) + ", " + fmt(gr.worst_t) +
                 ")");
        }
        try {
            double smid = 0.5 * (spec.domain.s0 + spec.domain.s1);
            rep.t_coeffs = t_polynomial_coeffs(spec, v, smid);
        } catch (const Error&) {
            // coefficient table is advisory; leave it empty
        }
    };

    try {
        if (inv.cylindrical) {
            PlanarityReport plan = planarity_test(surf, 24, 12, opt.plane_tol);
            rep.fit = fit_velocity_rows(collect_rows(surf, opt.grid_ns, opt.grid_nt));
            MVec3 v = choose_velocity(*rep.fit);
            if (rep.fit->nullspace_dim > 0)
                note("velocity fit has a " + std::to_string(rep.fit->nullspace_dim) +
                     "-dimensional nullspace (translations along it act trivially)");
            if (plan.planar) {
                note("patch lies in the plane through " + fmt_vec(plan.point) +
                     " with Euclidean normal " + fmt_vec(plan.normal) + " (max deviation " +
                     fmt(plan.max_dev) + ")");
                finish(v, CaseLabel::Thm1Plane);
                return rep;
            }
            switch (inv.director_char) {
            case CausalCharacter::Spacelike:
                finish(v, CaseLabel::Thm1SpacelikeCylinder);
                break;
            case CausalCharacter::Timelike:
                finish(v, CaseLabel::Thm1TimelikeCylinder);
                break;
            default:
                finish(v, CaseLabel::Thm1NullScroll);
                break;
            }
            return rep;
        }

        // Non-cylindrical cases.
        if (inv.director_char == CausalCharacter::Lightlike) {
            rep.label = CaseLabel::Thm2Excluded;
            note("rulings are lightlike with varying direction: sup |w x w'| / sup|w|^2 = " +
                 fmt(inv.cyl_measure) + " exceeds the cylindricity tolerance " +
                 fmt(opt.cyl_tol));
            try {
                rep.fit = fit_velocity_rows(collect_rows(surf, opt.grid_ns, opt.grid_nt));
                MVec3 v = choose_velocity(*rep.fit);
                GridReport gr = max_residual(surf, v, opt.grid_ns, opt.grid_nt);
                rep.velocity = v;
                rep.max_residual = gr.max_abs_r1;
                note("best least-squares velocity " + fmt_vec(v) + " leaves rms defect " +
                     fmt(rep.fit->fit_rms) + " and max |2H - <N,v>| = " + fmt(gr.max_abs_r1));
            } catch (const Error& e) {
                note(std::string("velocity fit impossible here: ") + e.what());
            }
            return rep;
        }

        if (inv.eta_mixed) {
            rep.label = CaseLabel::InconclusiveSampling;
            note("<w',w'> changes causal type across the s-range; split the domain at the "
                 "transition");
            return rep;
        }

        if (*inv.eta != 0) {
            PlanarityReport plan = planarity_test(surf, 24, 12, opt.plane_tol);
            if (plan.planar) {
                rep.fit = fit_velocity_rows(collect_rows(surf, opt.grid_ns, opt.grid_nt));
                MVec3 v = choose_velocity(*rep.fit);
                note("non-cylindrical rulings with " +
                     std::string(*inv.eta > 0 ? "spacelike" : "timelike") +
                     " derivative sweep a plane (max deviation " + fmt(plan.max_dev) + ")");
                finish(v, CaseLabel::Thm3Plane);
                return rep;
            }
            rep.label = CaseLabel::Thm3MustBeCylindrical;
            note("rulings rotate with " +
                 std::string(*inv.eta > 0 ? "spacelike" : "timelike") +
                 " derivative but the patch is not planar (plane deviation " + fmt(plan.max_dev) +
                 " vs scale " + fmt(plan.scale) + "); such a soliton would have to be "
                 "cylindrical or planar");
            try {
                rep.fit = fit_velocity_rows(collect_rows(surf, opt.grid_ns, opt.grid_nt));
                MVec3 v = choose_velocity(*rep.fit);
                GridReport gr = max_residual(surf, v, opt.grid_ns, opt.grid_nt);
                rep.velocity = v;
                rep.max_residual = gr.max_abs_r1;
                note("best least-squares velocity " + fmt_vec(v) + " leaves max |2H - <N,v>| = " +
                     fmt(gr.max_abs_r1));
            } catch (const Error& e) {
                note(std::string("velocity fit impossible here: ") + e.what());
            }
            return rep;
        }

        // eta == 0: lightlike ruling derivative.
        if (!inv.wprime_direction_constant) {
            rep.label = CaseLabel::NotASoliton;
            note("normalized ruling derivative is lightlike but its direction varies (spread " +
                 fmt(inv.wprime_direction_spread) + "); the classification admits no such "
                 "soliton");
            return rep;
        }
        note("normalized ruling derivative is lightlike with fixed direction " +
             fmt_vec(inv.wprime_direction));
        rep.fit = fit_velocity_rows_constrained(collect_rows(surf, opt.grid_ns, opt.grid_nt),
                                                inv.wprime_direction);
        MVec3 v = choose_velocity(*rep.fit);
        note("velocity fitted under <w', v> = 0: rms defect " + fmt(rep.fit->fit_rms) +
             ", rank " + std::to_string(rep.fit->rank));
        finish(v, CaseLabel::Thm4Candidate);
        return rep;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::AllPointsDegenerate ||
            e.kind() == ErrorKind::DegenerateSampleSet || e.kind() == ErrorKind::RankDeficient) {
            rep.label = CaseLabel::InconclusiveSampling;
            note(std::string("sampling failed: ") + e.what());
            return rep;
        }
        throw;
    }
}

std::string format_report(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "case: " << case_label_name(rep.label) << "\n";
    const RuledInvariants& inv = rep.invariants;
    os << "rulings: " << causal_character_name(inv.director_char)
       << (inv.cylindrical ? ", constant direction" : ", turning") << " (measure "
       << fmt(inv.cyl_measure) << ")\n";
    if (inv.eta)
        os << "ruling derivative: "
           << (*inv.eta > 0 ? "spacelike" : (*inv.eta < 0 ? "timelike" : "lightlike")) << "\n";
    if (rep.velocity) os << "velocity: " << fmt_vec(*rep.velocity) << "\n";
    if (rep.fit)
        os << "fit: rms " << fmt(rep.fit->fit_rms) << ", rank " << rep.fit->rank
           << ", nullspace dim " << rep.fit->nullspace_dim << "\n";
    if (rep.velocity && std::isfinite(rep.max_residual))
        os << "max |2H - <N,v>|: " << fmt(rep.max_residual) << "\n";
    if (!rep.t_coeffs.empty()) {
        os << "residual t-coefficients at mid s:";
        for (size_t i = 0; i < rep.t_coeffs.size(); ++i) os << " c" << i << "=" << fmt(rep.t_coeffs[i]);
        os << "\n";
    }
    for (const std::string& e : rep.evidence) os << "  - " << e << "\n";
    return os.str();
}

} // namespace tsol
