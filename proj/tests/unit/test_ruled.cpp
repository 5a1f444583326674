#include <doctest.h>

#include "tsol/catalog.hpp"
#include "tsol/curve.hpp"
#include "tsol/errors.hpp"
#include "tsol/expr.hpp"
#include "tsol/ruled.hpp"
#include "tsol/surface.hpp"

#include <cmath>
#include <cstdio>
#include <random>

using namespace tsol;

namespace {

RuledSurfaceSpec spec_of(const char* gamma, const char* w, Rect dom) {
    RuledSurfaceSpec spec;
    spec.gamma = expr_curve(parse_vec_expr(gamma));
    spec.director = expr_curve(parse_vec_expr(w));
    spec.domain = dom;
    return spec;
}

} // namespace

TEST_CASE("ruling invariants: cylindrical specs and director characters") {
    RuledInvariants a = ruled_invariants(make_gr1(Gr1Branch::Cosh, 0, 0).spec);
    CHECK(a.cylindrical);
    CHECK(a.director_char == CausalCharacter::Spacelike);

    RuledInvariants b = ruled_invariants(make_gr3(0, 0).spec);
    CHECK(b.cylindrical);
    CHECK(b.director_char == CausalCharacter::Timelike);

    RuledInvariants c = ruled_invariants(
        make_null_scroll(Profile{[](double s) { return exp(Jet1::variable(s)); }}).spec);
    CHECK(c.cylindrical);
    CHECK(c.director_char == CausalCharacter::Lightlike);
}

TEST_CASE("ruling invariants: turning directors and the causal type of w'") {
    // w = (1,s,s): unit spacelike with lightlike derivative of fixed direction
    RuledInvariants a = ruled_invariants(intro_examples().first.spec);
    CHECK(!a.cylindrical);
    CHECK(a.director_char == CausalCharacter::Spacelike);
    REQUIRE(a.eta.has_value());
    CHECK(*a.eta == 0);
    CHECK(a.wprime_direction_constant);
    CHECK(a.wprime_direction_spread < 1e-12);
    CHECK(std::abs(a.wprime_direction.x) < 1e-12);
    CHECK(a.wprime_direction.y == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(a.wprime_direction.z == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    // circular director: spacelike derivative
    RuledInvariants b =
        ruled_invariants(spec_of("(0, 0, s)", "(cos(s), sin(s), 0)", {0, 3, -1, 1}));
    CHECK(!b.cylindrical);
    REQUIRE(b.eta.has_value());
    CHECK(*b.eta == 1);

    // hyperbolic director: timelike derivative
    RuledInvariants c =
        ruled_invariants(spec_of("(0, s, 0)", "(cosh(s), 0, sinh(s))", {-1, 1, -1, 1}));
    REQUIRE(c.eta.has_value());
    CHECK(*c.eta == -1);

    // <w_hat', w_hat'> is timelike away from s = 0 but vanishes there
    RuledInvariants d =
        ruled_invariants(spec_of("(0, 0, s)", "(s, cosh(s), sinh(s))", {-1.2, 1.2, -1, 1}));
    CHECK(!d.eta.has_value());
    CHECK(d.eta_mixed);

    // director character itself flips from spacelike to timelike
    RuledInvariants e =
        ruled_invariants(spec_of("(0, 0, s)", "(1, s, 2*s)", {0, 1, -1, 1}));
    CHECK(e.mixed_char);
}

TEST_CASE("planarity detection") {
    PlanarityReport in_plane =
        planarity_test(ruled_surface(spec_of("(s, 2*s, 0)", "(1, 0, 0)", {0, 1, 0, 1})));
    CHECK(in_plane.planar);
    CHECK(std::abs(in_plane.normal.x) < 1e-9);
    CHECK(std::abs(in_plane.normal.y) < 1e-9);

    PlanarityReport curved = planarity_test(make_gr1(Gr1Branch::Cosh, 0, 0).surface);
    CHECK(!curved.planar);
    CHECK(curved.max_dev > 1e-3 * curved.scale);
}

TEST_CASE("residual in the ruling parameter is polynomial of degree at most 3") {
    std::mt19937 rng(4321);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
        double a1 = d(rng), a2 = d(rng), a3 = d(rng);
        char gamma[128], w[128];
        std::snprintf(gamma, sizeof gamma, "(s + %.4f*s^2, %.4f*sin(s), %.4f*s)", a1, a2, a3);
        std::snprintf(w, sizeof w, "(cos(%.4f*s), sin(%.4f*s), 0.3)", a1, a1);
        RuledSurfaceSpec spec = spec_of(gamma, w, {0.2, 1.0, -1, 1});
        MVec3 v{d(rng), d(rng), d(rng)};
        auto coeffs = t_polynomial_coeffs(spec, v, 0.6, 6);
        REQUIRE(coeffs.size() == 7);
        double scale = 0.0;
        for (double c : coeffs) scale = std::max(scale, std::abs(c));
        CHECK(std::abs(coeffs[4]) <= 1e-9 * (1.0 + scale));
        CHECK(std::abs(coeffs[5]) <= 1e-9 * (1.0 + scale));
        CHECK(std::abs(coeffs[6]) <= 1e-9 * (1.0 + scale));
    }
}

TEST_CASE("for the lightlike-turning gauge the quadratic coefficient is structural") {
    // w = (1,s,s) with eps fixed to +1: the residual is quadratic in t and its
    // leading coefficient must equal -2 eps <gamma',w'> (w', w, v)
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        double a1 = d(rng), a2 = d(rng);
        char gamma[128];
        std::snprintf(gamma, sizeof gamma, "(%.4f*sin(s) + s, %.4f*s^2, log(s))", a1, a2);
        RuledSurfaceSpec spec = spec_of(gamma, "(1, s, s)", {1.0, 2.0, 0.5, 1.5});
        MVec3 v{d(rng), d(rng), d(rng)};
        double s = 1.4;
        auto coeffs = t_polynomial_coeffs(spec, v, s, 4, 1);
        CurveJet g = spec.gamma(s);
        CurveJet w = spec.director(s);
        double b2 = -2.0 * mink_dot(g.d1, w.d1) * triple(w.d1, w.p, v);
        CHECK(coeffs[2] == doctest::Approx(b2).epsilon(1e-8));
        CHECK(std::abs(coeffs[3]) < 1e-8 * (1 + std::abs(b2)));
        CHECK(std::abs(coeffs[4]) < 1e-8 * (1 + std::abs(b2)));
    }
}

TEST_CASE("striction reparametrization of a rotating director") {
    // gamma = (cos s, sin s, s) rules the same surface as the axis (0,0,s);
    // the striction curve is exactly that axis
    RuledSurfaceSpec spec =
        spec_of("(cos(s), sin(s), s)", "(cos(s), sin(s), 0)", {0.0, 2.5, 0.5, 1.5});
    RuledSurfaceSpec out = striction_reparametrize(spec);
    CHECK(out.domain.s1 == doctest::Approx(2.5).epsilon(1e-8)); // already unit speed
    for (double tau : {0.1, 0.9, 2.0}) {
        CurveJet base = out.gamma(tau);
        CHECK(std::abs(base.p.x) < 1e-6);
        CHECK(std::abs(base.p.y) < 1e-6);
        CurveJet dir = out.director(tau);
        CHECK(mink_dot(dir.p, dir.p) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(mink_dot(dir.d1, dir.d1) == doctest::Approx(1.0).epsilon(1e-10));
        // striction condition: base derivative orthogonal to the turning direction
        CHECK(std::abs(mink_dot(base.d1, dir.d1)) < 1e-5);
    }

    // a base already on the axis stays there
    RuledSurfaceSpec axis = spec_of("(0, 0, s)", "(cos(s), sin(s), 0)", {0.0, 2.5, 0.5, 1.5});
    RuledSurfaceSpec out2 = striction_reparametrize(axis);
    CHECK(std::abs(out2.gamma(1.0).p.x) < 1e-8);
    CHECK(std::abs(out2.gamma(1.0).p.y) < 1e-8);
}

TEST_CASE("striction reparametrization rejects lightlike situations") {
    // lightlike director has no unit normalization
    CHECK_THROWS_AS((void)striction_reparametrize(
                        spec_of("(exp(s), s, -exp(s))", "(1, 0, 1)", {0.5, 2.0, -1, 1})),
                    Error);
    // lightlike w' admits no unit-speed turning parameter
    try {
        (void)striction_reparametrize(intro_examples().first.spec);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LightlikeDirectorDerivative);
    }
}

TEST_CASE("classifier recognizes the cylinder cases") {
    CHECK(classify(make_gr1(Gr1Branch::Cosh, 0, 0, 0.5).spec).label ==
          CaseLabel::Thm1SpacelikeCylinder);
    CHECK(classify(make_gr1(Gr1Branch::Sinh, 0, 0).spec).label ==
          CaseLabel::Thm1SpacelikeCylinder);
    CHECK(classify(make_gr2(Gr2Branch::Exp, 1, 1.0, 0.0).spec).label ==
          CaseLabel::Thm1SpacelikeCylinder);
    CHECK(classify(make_gr3(0, 0, 1.0).spec).label == CaseLabel::Thm1TimelikeCylinder);

    ClassificationReport scroll = classify(
        make_null_scroll(Profile{[](double s) { return exp(Jet1::variable(s)); }}).spec);
    CHECK(scroll.label == CaseLabel::Thm1NullScroll);
    REQUIRE(scroll.velocity.has_value());
    // flat scroll: fitted velocity lies along the lightlike ruling
    CHECK(std::abs(scroll.velocity->x - scroll.velocity->z) < 1e-9);
    CHECK(std::abs(scroll.velocity->y) < 1e-9);
}

TEST_CASE("classifier recognizes planes in cylindrical presentation") {
    ClassificationReport rep =
        classify(spec_of("(s, 0, 0.5*s)", "(0, 1, 0)", {-1, 1, -1, 1}));
    CHECK(rep.label == CaseLabel::Thm1Plane);
    CHECK(rep.max_residual < 1e-9);
}

TEST_CASE("classifier rejects non-soliton cylinders with a residual certificate") {
    ClassificationReport rep =
        classify(make_cylinder(Profile{[](double s) {
                                   Jet1 x = Jet1::variable(s);
                                   return x * x;
                               }},
                               RulingCase::TimelikeW, {0, 0, 1}, {0.2, 1.0})
                     .spec);
    CHECK(rep.label == CaseLabel::NotASoliton);
    CHECK(rep.max_residual > 1e-6);
    CHECK(!rep.evidence.empty());
}

TEST_CASE("classifier excludes non-cylindrical lightlike rulings") {
    ClassificationReport rep =
        classify(spec_of("(s, 0, 0)", "(cos(s), sin(s), 1)", {0, 1.5, -1, 1}));
    CHECK(rep.label == CaseLabel::Thm2Excluded);
    CHECK(!rep.evidence.empty());
}

TEST_CASE("classifier sends turning non-planar rulings to the cylindrical case") {
    // helicoid-style patch: rulings rotate with spacelike derivative, surface
    // is not a plane, so no translating soliton lives here
    ClassificationReport rep =
        classify(spec_of("(0, 0, s)", "(cos(s), sin(s), 0)", {0, 3, 0.5, 1.5}));
    CHECK(rep.label == CaseLabel::Thm3MustBeCylindrical);

    // the same rulings sweeping a plane
    ClassificationReport plane =
        classify(spec_of("(0, 0, 0)", "(cos(s), sin(s), 0)", {0, 1.5, 0.5, 1.5}));
    CHECK(plane.label == CaseLabel::Thm3Plane);
}

TEST_CASE("classifier accepts the non-cylindrical solitons with a fitted velocity") {
    ClassificationReport rep = classify(intro_examples().second.spec);
    CHECK(rep.label == CaseLabel::Thm4Candidate);
    REQUIRE(rep.velocity.has_value());
    CHECK(euclid_norm(*rep.velocity - MVec3{1, 0, 0}) < 1e-6);
    CHECK(rep.max_residual < 1e-6);

    ClassificationReport a2 = classify(make_thm4_a2(0.5, 2.0, -0.3).spec);
    CHECK(a2.label == CaseLabel::Thm4Candidate);
    REQUIRE(a2.velocity.has_value());
    CHECK(euclid_norm(*a2.velocity - MVec3{1, 0.5, 0.5}) < 1e-5);
}

TEST_CASE("classifier rules out lightlike-turning patches that solve nothing") {
    ClassificationReport rep =
        classify(spec_of("(0, s, 0)", "(1, s, s)", {0.5, 1.5, 1.0, 2.0}));
    CHECK(rep.label == CaseLabel::NotASoliton);
    CHECK(rep.max_residual > 1e-6);
}

TEST_CASE("classifier reports mixed-character rulings as inconclusive") {
    ClassificationReport rep = classify(spec_of("(0, 0, s)", "(1, s, 2*s)", {0, 1, -1, 1}));
    CHECK(rep.label == CaseLabel::InconclusiveSampling);
    CHECK(!rep.evidence.empty());
}

TEST_CASE("swapping the surface parameters flips the pointwise residual sign") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    auto rv = [&] { return MVec3{d(rng), d(rng), d(rng)}; };
    int done = 0;
    while (done < 40) {
        SurfaceJet2 j{rv(), rv(), rv(), rv(), rv(), rv()};
        MVec3 c = mink_cross(j.ps, j.pt);
        if (std::abs(mink_dot(c, c)) < 1e-2) continue;
        ++done;
        SurfaceJet2 sw{j.p, j.pt, j.ps, j.ptt, j.pst, j.pss};
        MVec3 v = rv();
        CHECK(residual_eq1(sw, v) == doctest::Approx(-residual_eq1(j, v)).epsilon(1e-10));
    }
}

TEST_CASE("classification labels render to the documented strings") {
    CHECK(case_label_name(CaseLabel::Thm1Plane) == std::string("Thm1-Plane"));
    CHECK(case_label_name(CaseLabel::Thm1SpacelikeCylinder) ==
          std::string("Thm1-SpacelikeCylinder"));
    CHECK(case_label_name(CaseLabel::Thm2Excluded) == std::string("Thm2-Excluded"));
    CHECK(case_label_name(CaseLabel::Thm4Candidate) == std::string("Thm4-Candidate"));
    CHECK(case_label_name(CaseLabel::InconclusiveSampling) ==
          std::string("InconclusiveSampling"));
}

TEST_CASE("classification report text carries the label and the velocity") {
    ClassificationReport rep = classify(intro_examples().first.spec);
    std::string text = format_report(rep);
    CHECK(text.find("Thm4-Candidate") != std::string::npos);
    CHECK(text.find("velocity:") != std::string::npos);
    CHECK(text.find("rulings: spacelike, turning") != std::string::npos);
}
