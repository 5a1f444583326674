#include <doctest.h>

#include "tsol/catalog.hpp"
#include "tsol/curve.hpp"
#include "tsol/errors.hpp"
#include "tsol/surface.hpp"

#include <cmath>
#include <random>

using namespace tsol;

namespace {

std::mt19937 rng(987123);
double rnd(double lo = -1.5, double hi = 1.5) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}
MVec3 rnd_vec() { return {rnd(), rnd(), rnd()}; }

// Random jet, retried until comfortably non-degenerate.
SurfaceJet2 random_jet() {
    for (;;) {
        SurfaceJet2 j{rnd_vec(), rnd_vec(), rnd_vec(), rnd_vec(), rnd_vec(), rnd_vec()};
        MVec3 c = mink_cross(j.ps, j.pt);
        if (std::abs(mink_dot(c, c)) > 1e-2) return j;
    }
}

// A non-ruled graph-type immersion for finite-difference cross checks.
MVec3 wavy(double s, double t) {
    return {s * std::cos(t), s * std::sin(t) + 0.3 * s * s, std::sin(s) * std::cos(t) * 0.5};
}

SurfaceJet2 wavy_jet(double s, double t) {
    Jet2 S = Jet2::var_s(s), T = Jet2::var_t(t);
    Jet2 x = S * cos(T);
    Jet2 y = S * sin(T) + 0.3 * S * S;
    Jet2 z = sin(S) * cos(T) * 0.5;
    return {{x.f, y.f, z.f},     {x.fs, y.fs, z.fs},    {x.ft, y.ft, z.ft},
            {x.fss, y.fss, z.fss}, {x.fst, y.fst, z.fst}, {x.ftt, y.ftt, z.ftt}};
}

} // namespace

TEST_CASE("flat plane: both residual forms against hand values") {
    // X(s,t) = (s, t, 0), v = e3. H = 0, N = (0,0,-1), <N,v> = 1.
    SurfaceJet2 j{{0.5, -0.3, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    MVec3 v{0, 0, 1};
    FundamentalData fd = fundamental_data(j);
    CHECK(fd.E == 1.0);
    CHECK(fd.G == 1.0);
    CHECK(fd.F == 0.0);
    CHECK(fd.W2 == 1.0);
    CHECK(fd.eps == -1);
    CHECK(fd.H == doctest::Approx(0.0));
    CHECK(fd.K == doctest::Approx(0.0));
    CHECK(residual_eq1(j, v) == doctest::Approx(-1.0));
    CHECK(residual_eq2(j, v) == doctest::Approx(1.0));
}

TEST_CASE("parabolic cylinder at a hand-computed point") {
    // profile u = s^2 in the z = 0 plane, rulings e3, at s = 1 with v = (0,1,0):
    // Xs = (1,2,0), Xt = (0,0,1), E = 5, G = -1, W2 = -5, eps = +1,
    // H1 = 2, r2 = -3, r1 = 3/5^(3/2).
    SurfaceJet2 j{{1, 1, 0}, {1, 2, 0}, {0, 0, 1}, {0, 2, 0}, {0, 0, 0}, {0, 0, 0}};
    MVec3 v{0, 1, 0};
    FundamentalData fd = fundamental_data(j);
    CHECK(fd.E == doctest::Approx(5.0));
    CHECK(fd.G == doctest::Approx(-1.0));
    CHECK(fd.W2 == doctest::Approx(-5.0));
    CHECK(fd.eps == 1);
    CHECK(residual_eq2(j, v) == doctest::Approx(-3.0));
    CHECK(residual_eq1(j, v) == doctest::Approx(3.0 / std::pow(5.0, 1.5)));
}

TEST_CASE("fundamental data invariants on random jets") {
    for (int i = 0; i < 200; ++i) {
        SurfaceJet2 j = random_jet();
        FundamentalData fd = fundamental_data(j);
        MVec3 c = mink_cross(j.ps, j.pt);
        CHECK(fd.W2 == doctest::Approx(fd.E * fd.G - fd.F * fd.F).epsilon(1e-12));
        // Lagrange: <c,c> = F^2 - EG
        CHECK(mink_dot(c, c) == doctest::Approx(-fd.W2).epsilon(1e-12));
        CHECK(fd.eps == (fd.W2 > 0 ? -1 : 1));
        CHECK(mink_dot(fd.N, fd.N) == doctest::Approx(double(fd.eps)).epsilon(1e-10));
        CHECK(mink_dot(fd.N, j.ps) == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(mink_dot(fd.N, j.pt) == doctest::Approx(0.0).epsilon(1e-10));
    }
}

TEST_CASE("polynomial residual is the scaled pointwise residual") {
    // r2 = -|EG - F^2|^(3/2) * r1, the bridge between the two formulations
    for (int i = 0; i < 200; ++i) {
        SurfaceJet2 j = random_jet();
        MVec3 v = rnd_vec();
        FundamentalData fd = fundamental_data(j);
        double r1 = residual_eq1(j, v);
        double r2 = residual_eq2(j, v);
        double scale = std::pow(std::abs(fd.W2), 1.5);
        CHECK(r2 == doctest::Approx(-scale * r1).epsilon(1e-9));
        CHECK(residual_eq2(j, v, fd.eps) == doctest::Approx(r2).epsilon(1e-12));
        Eq2Parts parts = residual_eq2_parts(j, v);
        CHECK(parts.h1 - fd.eps * parts.w2 * parts.triple_v == doctest::Approx(r2));
    }
}

TEST_CASE("degenerate points are detected and rejected") {
    // Xt lightlike and orthogonal to Xs: the induced metric degenerates
    SurfaceJet2 j{{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    CHECK(is_degenerate(j));
    CHECK_THROWS_AS((void)fundamental_data(j), Error);
    CHECK_THROWS_AS((void)residual_eq1(j, {0, 0, 1}), Error);
    // eq2 still works once eps is supplied from outside
    CHECK(residual_eq2(j, {0, 0, 1}, 1) == doctest::Approx(residual_eq2_parts(j, {0, 0, 1}).h1 -
                                                           1 * 0.0));
    try {
        (void)fundamental_data(j);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegeneratePoint);
    }
}

TEST_CASE("finite-difference jets agree with analytic jets") {
    for (double s : {0.6, 1.1}) {
        for (double t : {0.2, 0.9}) {
            SurfaceJet2 a = wavy_jet(s, t);
            SurfaceJet2 fd = fd_jet(wavy, s, t);
            SurfaceJet2 fd2 = fd_jet_ts(wavy, s, t);
            // second differences sit on a roundoff floor of about eps/h^2
            for (auto pick : {&SurfaceJet2::p, &SurfaceJet2::ps, &SurfaceJet2::pt}) {
                CHECK(euclid_norm(a.*pick - fd.*pick) < 1e-8);
                CHECK(euclid_norm(fd.*pick - fd2.*pick) < 1e-8);
            }
            for (auto pick : {&SurfaceJet2::pss, &SurfaceJet2::pst, &SurfaceJet2::ptt}) {
                CHECK(euclid_norm(a.*pick - fd.*pick) < 1e-5);
                CHECK(euclid_norm(fd.*pick - fd2.*pick) < 1e-5);
            }
        }
    }
}

TEST_CASE("grid residual scan finds the degenerate rows and the worst point") {
    SolitonFamily fam = make_cylinder(
        Profile{[](double s) {
            Jet1 x = Jet1::variable(s);
            return x * x;
        }},
        RulingCase::SpacelikeW, {0, 0, 1}, {-1.0, 1.0});
    // u' = 2s crosses +-1 at s = +-1/2; midpoint grids of 30 cells hit it exactly
    GridReport gr = max_residual(fam.surface, {0, 0, 1}, 30, 30);
    CHECK(gr.degenerate == 60);
    CHECK(gr.evaluated == 840);
    CHECK(gr.max_abs_r1 > 1.0);

    // a fully lightlike patch cannot be scanned at all
    RuledSurfaceSpec spec;
    spec.gamma = [](double s) { return CurveJet{{s, 0, 0}, {1, 0, 0}, {0, 0, 0}}; };
    spec.director = constant_curve({0, 1, 1});
    spec.domain = {0, 1, 0, 1};
    CHECK_THROWS_AS((void)max_residual(ruled_surface(spec), {0, 0, 1}, 8, 8), Error);
}

TEST_CASE("velocity fitting: exact rows") {
    std::vector<VelocityRow> rows = {
        {{1, 0, 0}, 1.0}, {{0, 1, 0}, 2.0}, {{0, 0, 1}, 3.0}, {{1, 1, 0}, 3.0}};
    VelocityFit fit = fit_velocity_rows(rows);
    CHECK(fit.rank == 3);
    CHECK(fit.nullspace_dim == 0);
    CHECK(fit.v.x == doctest::Approx(1.0));
    CHECK(fit.v.y == doctest::Approx(2.0));
    CHECK(fit.v.z == doctest::Approx(3.0));
    CHECK(fit.fit_rms == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("velocity fitting: rank-deficient rows give the minimal-norm answer") {
    std::vector<VelocityRow> rows = {{{2, 0, 0}, 4.0}, {{1, 0, 0}, 2.0}, {{3, 0, 0}, 6.0}};
    VelocityFit fit = fit_velocity_rows(rows);
    CHECK(fit.rank == 1);
    CHECK(fit.nullspace_dim == 2);
    CHECK(fit.v.x == doctest::Approx(2.0));
    CHECK(fit.v.y == doctest::Approx(0.0));
    CHECK(fit.v.z == doctest::Approx(0.0));
    // nullspace is Euclidean-orthonormal and orthogonal to the row
    for (const MVec3& n : fit.nullspace) {
        CHECK(euclid_norm(n) == doctest::Approx(1.0));
        CHECK(n.x == doctest::Approx(0.0));
    }
    std::vector<VelocityRow> empty_rows = {{{0, 0, 0}, 0.0}};
    CHECK_THROWS_AS((void)fit_velocity_rows(empty_rows), Error);
}

TEST_CASE("velocity fitting on catalog surfaces recovers the stored velocity") {
    SolitonFamily fam = make_thm4_a1(0.5, 1.0, 0.0);
    VelocityFit fit = solve_velocity(fam.surface, 25, 25);
    CHECK(fit.rank == 3);
    CHECK(euclid_norm(fit.v - fam.velocity) < 1e-7);
    CHECK(fit.fit_rms < 1e-10);
}

TEST_CASE("velocity fitting on a cylinder leaves the ruling direction free") {
    SolitonFamily fam = make_gr1(Gr1Branch::Cosh, 0.0, 0.0, 0.7);
    VelocityFit fit = solve_velocity(fam.surface, 25, 25);
    CHECK(fit.rank == 2);
    CHECK(fit.nullspace_dim == 1);
    // rulings (1,0,0): that component of v is undetermined
    CHECK(std::abs(std::abs(fit.nullspace[0].x) - 1.0) < 1e-9);
    // minimal-norm solution drops the ruling component of (0.7, 0, 1)
    CHECK(std::abs(fit.v.x) < 1e-8);
    CHECK(fit.v.y == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(fit.v.z == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("constrained velocity fitting respects the linear condition") {
    SolitonFamily fam = make_thm4_a0(0.0, 0.0, 1);
    auto rows = std::vector<VelocityRow>{};
    const ParametricSurface& surf = fam.surface;
    for (int i = 0; i < 15; ++i)
        for (int k = 0; k < 15; ++k) {
            double s = surf.domain.s0 +
                       (surf.domain.s1 - surf.domain.s0) * (i + 0.5) / 15.0;
            double t = surf.domain.t0 +
                       (surf.domain.t1 - surf.domain.t0) * (k + 0.5) / 15.0;
            SurfaceJet2 j = surf.jet(s, t);
            if (is_degenerate(j)) continue;
            rows.push_back(velocity_row(j, fundamental_data(j).eps));
        }
    // <w', v> = 0 with w' = (0,1,1): exactly the structure of the family
    VelocityFit fit = fit_velocity_rows_constrained(rows, {0, 1, 1});
    CHECK(std::abs(mink_dot(fit.v, MVec3{0, 1, 1})) < 1e-9);
    CHECK(euclid_norm(fit.v - fam.velocity) < 1e-6);
}
