#include "tsol/surface.hpp"

#include "tsol/errors.hpp"
#include "tsol/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace tsol {

double jet_scale(const SurfaceJet2& j) {
    double s2 = 0.0;
    for (const MVec3* v : {&j.p, &j.ps, &j.pt, &j.pss, &j.pst, &j.ptt})
        s2 = std::max(s2, euclid_norm2(*v));
    return std::sqrt(s2);
}

namespace {

// Relative degeneracy threshold for <Xs x Xt, Xs x Xt>, built from the scale
// of the tangent vectors only (the cross product is quadratic in them).
double degen_threshold(const SurfaceJet2& j, double tol) {
    double s2 = std::max(euclid_norm2(j.ps), euclid_norm2(j.pt));
    return tol * s2 * s2;
}

void require_finite(const SurfaceJet2& j) {
    for (const MVec3* v : {&j.p, &j.ps, &j.pt, &j.pss, &j.pst, &j.ptt})
        if (!is_finite(*v))
            throw Error(ErrorKind::EvalDomainError, "non-finite surface jet component");
}

} // namespace

bool is_degenerate(const SurfaceJet2& j, double tol) {
    MVec3 c = mink_cross(j.ps, j.pt);
    return std::abs(mink_dot(c, c)) <= degen_threshold(j, tol);
}

FundamentalData fundamental_data(const SurfaceJet2& j, double tol) {
    require_finite(j);
    MVec3 c = mink_cross(j.ps, j.pt);
    double q = mink_dot(c, c);
    if (std::abs(q) <= degen_threshold(j, tol))
        throw Error(ErrorKind::DegeneratePoint,
                    "induced metric is degenerate: |<Xs x Xt, Xs x Xt>| below tolerance");

    FundamentalData d;
    d.E = mink_dot(j.ps, j.ps);
    d.F = mink_dot(j.ps, j.pt);
    d.G = mink_dot(j.pt, j.pt);
    d.W2 = d.E * d.G - d.F * d.F;

    double nrm = std::sqrt(std::abs(q));
    d.N = c * (1.0 / nrm);
    d.eps = q > 0.0 ? 1 : -1;

    double ls = triple(j.ps, j.pt, j.pss) / nrm;
    double ms = triple(j.ps, j.pt, j.pst) / nrm;
    double ns = triple(j.ps, j.pt, j.ptt) / nrm;

    double aw2 = std::abs(d.W2);
    double h1 = d.E * triple(j.ps, j.pt, j.ptt) - 2.0 * d.F * triple(j.ps, j.pt, j.pst) +
                d.G * triple(j.ps, j.pt, j.pss);
    d.H = -0.5 * h1 / (aw2 * std::sqrt(aw2));
    d.K = d.eps * (ls * ns - ms * ms) / d.W2;
    return d;
}

double residual_eq1(const SurfaceJet2& j, const MVec3& v, double tol) {
    FundamentalData d = fundamental_data(j, tol);
    return 2.0 * d.H - mink_dot(d.N, v);
}

Eq2Parts residual_eq2_parts(const SurfaceJet2& j, const MVec3& v) {
    require_finite(j);
    double E = mink_dot(j.ps, j.ps);
    double F = mink_dot(j.ps, j.pt);
    double G = mink_dot(j.pt, j.pt);
    Eq2Parts parts;
    parts.h1 = E * triple(j.ps, j.pt, j.ptt) - 2.0 * F * triple(j.ps, j.pt, j.pst) +
               G * triple(j.ps, j.pt, j.pss);
    parts.w2 = E * G - F * F;
    parts.triple_v = triple(j.ps, j.pt, v);
    return parts;
}

double residual_eq2(const SurfaceJet2& j, const MVec3& v, int eps) {
    Eq2Parts parts = residual_eq2_parts(j, v);
    return parts.h1 - eps * parts.w2 * parts.triple_v;
}

double residual_eq2(const SurfaceJet2& j, const MVec3& v) {
    if (is_degenerate(j))
        throw Error(ErrorKind::EpsUnavailable,
                    "eps undefined at a degenerate point; pass it explicitly");
    return residual_eq2(j, v, fundamental_data(j).eps);
}

SurfaceJet2 fd_jet(const PositionFn& x, double s, double t, double h) {
    SurfaceJet2 j;
    const double ih = 1.0 / h, ih2 = ih * ih;
    MVec3 c = x(s, t);
    MVec3 sp = x(s + h, t), sm = x(s - h, t);
    MVec3 tp = x(s, t + h), tm = x(s, t - h);
    j.p = c;
    j.ps = (sp - sm) * (0.5 * ih);
    j.pt = (tp - tm) * (0.5 * ih);
    j.pss = (sp - 2.0 * c + sm) * ih2;
    j.ptt = (tp - 2.0 * c + tm) * ih2;
    // d/ds of the central t-difference
    MVec3 dt_sp = (x(s + h, t + h) - x(s + h, t - h)) * (0.5 * ih);
    MVec3 dt_sm = (x(s - h, t + h) - x(s - h, t - h)) * (0.5 * ih);
    j.pst = (dt_sp - dt_sm) * (0.5 * ih);
    return j;
}

SurfaceJet2 fd_jet_ts(const PositionFn& x, double s, double t, double h) {
    SurfaceJet2 j = fd_jet(x, s, t, h);
    const double ih = 1.0 / h;
    MVec3 ds_tp = (x(s + h, t + h) - x(s - h, t + h)) * (0.5 * ih);
    MVec3 ds_tm = (x(s + h, t - h) - x(s - h, t - h)) * (0.5 * ih);
    j.pst = (ds_tp - ds_tm) * (0.5 * ih);
    return j;
}

GridReport max_residual(const ParametricSurface& surf, const MVec3& v, int ns, int nt,
                        double degen_tol) {
    if (ns < 1 || nt < 1) throw Error(ErrorKind::OutOfRange, "grid must be at least 1x1");
    GridReport rep;
    double sum = 0.0;
    const Rect& d = surf.domain;
    for (int i = 0; i < ns; ++i) {
        double s = d.s0 + (i + 0.5) * (d.s1 - d.s0) / ns;
        for (int k = 0; k < nt; ++k) {
            double t = d.t0 + (k + 0.5) * (d.t1 - d.t0) / nt;
            SurfaceJet2 j = surf.jet(s, t);
            if (is_degenerate(j, degen_tol)) {
                ++rep.degenerate;
                continue;
            }
            double r = std::abs(residual_eq1(j, v, degen_tol));
            sum += r;
            ++rep.evaluated;
            if (r > rep.max_abs_r1) {
                rep.max_abs_r1 = r;
                rep.worst_s = s;
                rep.worst_t = t;
            }
        }
    }
    if (rep.evaluated == 0)
        throw Error(ErrorKind::AllPointsDegenerate, "no non-degenerate grid point");
    rep.mean_abs_r1 = sum / rep.evaluated;
    return rep;
}

VelocityRow velocity_row(const SurfaceJet2& j, int eps) {
    double E = mink_dot(j.ps, j.ps);
    double F = mink_dot(j.ps, j.pt);
    double G = mink_dot(j.pt, j.pt);
    double w2 = E * G - F * F;
    double h1 = E * triple(j.ps, j.pt, j.ptt) - 2.0 * F * triple(j.ps, j.pt, j.pst) +
                G * triple(j.ps, j.pt, j.pss);
    MVec3 c = mink_cross(j.ps, j.pt);
    // triple(Xs,Xt,v) = cx*vx + cy*vy - cz*vz
    double f = eps * w2;
    return {{f * c.x, f * c.y, -f * c.z}, h1};
}

namespace {

VelocityFit fit_in_basis(const std::vector<VelocityRow>& rows,
                         const std::vector<MVec3>& basis, double rel_tol) {
    const int n = static_cast<int>(basis.size());
    // normal equations in the basis coordinates
    Mat3 ata = {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
    std::array<double, 3> atb = {0, 0, 0};
    for (const VelocityRow& r : rows) {
        std::array<double, 3> rb = {0, 0, 0};
        for (int i = 0; i < n; ++i)
            rb[i] = r.row[0] * basis[i].x + r.row[1] * basis[i].y + r.row[2] * basis[i].z;
        for (int i = 0; i < n; ++i) {
            atb[i] += rb[i] * r.rhs;
            for (int k = 0; k < n; ++k) ata[i][k] += rb[i] * rb[k];
        }
    }
    for (int i = n; i < 3; ++i) ata[i][i] = 0.0;

    SymEigen3 eig = sym_eigen3(ata);
    double lmax = 0.0;
    for (int i = 0; i < 3; ++i) lmax = std::max(lmax, std::abs(eig.values[i]));
    double cut = lmax * rel_tol * rel_tol; // eigenvalues of A^T A are squared singular values

    VelocityFit fit;
    std::array<double, 3> coeff = {0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        // With n == 2 the coefficient matrix is block diagonal, so the padding
        // axis survives as an exact eigenvector; skip it by its coordinates.
        bool padding = n < 3 && std::abs(eig.vecs[2][i]) > 0.5;
        double proj = 0.0;
        for (int k = 0; k < n; ++k) proj += eig.vecs[k][i] * atb[k];
        if (!padding && std::abs(eig.values[i]) > cut && lmax > 0.0) {
            ++fit.rank;
            for (int k = 0; k < n; ++k) coeff[k] += eig.vecs[k][i] * proj / eig.values[i];
        } else if (!padding) {
            MVec3 dir{0, 0, 0};
            for (int k = 0; k < n; ++k) dir += eig.vecs[k][i] * basis[k];
            fit.nullspace.push_back(dir);
        }
    }
    fit.nullspace_dim = static_cast<int>(fit.nullspace.size());
    if (fit.rank == 0)
        throw Error(ErrorKind::RankDeficient, "velocity system has rank 0: no constraint on v");

    fit.v = {0, 0, 0};
    for (int k = 0; k < n; ++k) fit.v += coeff[k] * basis[k];

    double ss = 0.0;
    for (const VelocityRow& r : rows) {
        double d = r.row[0] * fit.v.x + r.row[1] * fit.v.y + r.row[2] * fit.v.z - r.rhs;
        ss += d * d;
    }
    fit.fit_rms = std::sqrt(ss / static_cast<double>(rows.size()));
    return fit;
}

} // namespace

VelocityFit fit_velocity_rows(const std::vector<VelocityRow>& rows, double rel_tol) {
    if (rows.empty()) throw Error(ErrorKind::DegenerateSampleSet, "no rows to fit");
    return fit_in_basis(rows, {MVec3{1, 0, 0}, MVec3{0, 1, 0}, MVec3{0, 0, 1}}, rel_tol);
}

VelocityFit fit_velocity_rows_constrained(const std::vector<VelocityRow>& rows, const MVec3& c,
                                          double rel_tol) {
    if (rows.empty()) throw Error(ErrorKind::DegenerateSampleSet, "no rows to fit");
    // Euclidean kernel of the pairing functional v -> <c,v> = (cx, cy, -cz).v
    MVec3 n{c.x, c.y, -c.z};
    double nn = euclid_norm(n);
    if (nn == 0.0) return fit_velocity_rows(rows, rel_tol);
    n = n * (1.0 / nn);
    MVec3 seed = std::abs(n.x) < 0.9 ? MVec3{1, 0, 0} : MVec3{0, 1, 0};
    double d = seed.x * n.x + seed.y * n.y + seed.z * n.z;
    MVec3 b1 = seed - d * n;
    b1 = b1 * (1.0 / euclid_norm(b1));
    MVec3 b2{n.y * b1.z - n.z * b1.y, n.z * b1.x - n.x * b1.z, n.x * b1.y - n.y * b1.x};
    return fit_in_basis(rows, {b1, b2}, rel_tol);
}

VelocityFit solve_velocity(const ParametricSurface& surf, int ns, int nt, double degen_tol) {
    std::vector<VelocityRow> rows;
    rows.reserve(static_cast<size_t>(ns) * nt);
    const Rect& d = surf.domain;
    for (int i = 0; i < ns; ++i) {
        double s = d.s0 + (i + 0.5) * (d.s1 - d.s0) / ns;
        for (int k = 0; k < nt; ++k) {
            double t = d.t0 + (k + 0.5) * (d.t1 - d.t0) / nt;
            SurfaceJet2 j = surf.jet(s, t);
            if (is_degenerate(j, degen_tol)) continue;
            rows.push_back(velocity_row(j, fundamental_data(j, degen_tol).eps));
        }
    }
    if (rows.empty())
        throw Error(ErrorKind::AllPointsDegenerate, "no non-degenerate grid point");
    return fit_velocity_rows(rows);
}

} // namespace tsol
