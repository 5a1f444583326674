#include "tsol/catalog.hpp"

#include "tsol/errors.hpp"
#include "tsol/expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tsol {

const char* family_id_name(FamilyId id) {
    switch (id) {
    case FamilyId::Gr1Cosh: return "Gr1Cosh";
    case FamilyId::Gr1Sinh: return "Gr1Sinh";
    case FamilyId::Gr2Exp: return "Gr2Exp";
    case FamilyId::Gr2Arctanh: return "Gr2Arctanh";
    case FamilyId::Gr3: return "Gr3";
    case FamilyId::NullScroll: return "NullScroll";
    case FamilyId::Thm4V0: return "Thm4V0";
    case FamilyId::Thm4A0: return "Thm4A0";
    case FamilyId::Thm4A1: return "Thm4A1";
    case FamilyId::Thm4A2: return "Thm4A2";
    case FamilyId::IntroX: return "IntroX";
    case FamilyId::IntroY: return "IntroY";
    case FamilyId::GenericCylinder: return "GenericCylinder";
    }
    return "?";
}

namespace {

void check_domain(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::DomainViolation, what);
}

// Evaluates pred on 33 evenly spaced samples of [sr.lo, sr.hi].
void validate_samples(const SRange& sr, const std::function<bool(double)>& pred,
                      const std::string& what) {
    check_domain(sr.hi > sr.lo, "empty parameter range");
    for (int i = 0; i <= 32; ++i) {
        double s = sr.lo + i * (sr.hi - sr.lo) / 32.0;
        if (!pred(s)) {
            std::ostringstream os;
            os << what << " (violated at s = " << s << ")";
            throw Error(ErrorKind::DomainViolation, os.str());
        }
    }
}

RuledSurfaceSpec cylinder_spec(const Profile& u, RulingCase ruling, SRange sr, SRange tr) {
    RuledSurfaceSpec spec;
    ScalarFn uf = u.u;
    if (ruling == RulingCase::SpacelikeW) {
        spec.gamma = [uf](double s) {
            Jet1 j = uf(s);
            return CurveJet{{0.0, s, j.f}, {0.0, 1.0, j.d1}, {0.0, 0.0, j.d2}};
        };
        spec.director = constant_curve({1, 0, 0});
    } else {
        spec.gamma = [uf](double s) {
            Jet1 j = uf(s);
            return CurveJet{{s, j.f, 0.0}, {1.0, j.d1, 0.0}, {0.0, j.d2, 0.0}};
        };
        spec.director = constant_curve({0, 0, 1});
    }
    spec.domain = {sr.lo, sr.hi, tr.lo, tr.hi};
    return spec;
}

SolitonFamily assemble(FamilyId id, std::vector<std::pair<std::string, double>> params,
                       MVec3 v, RuledSurfaceSpec spec) {
    SolitonFamily f;
    f.id = id;
    f.name = family_id_name(id);
    f.params = std::move(params);
    f.velocity = v;
    f.surface = ruled_surface(spec);
    f.spec = std::move(spec);
    return f;
}

Curve thm4_director() {
    return [](double s) {
        return CurveJet{{1.0, s, s}, {0.0, 1.0, 1.0}, {0.0, 0.0, 0.0}};
    };
}

Curve thm4_gamma(ScalarFn x, ScalarFn z, ScalarFn phi) {
    return [x = std::move(x), z = std::move(z), phi = std::move(phi)](double s) {
        Jet1 jx = x(s), jz = z(s), jp = phi(s);
        Jet1 jy = jz + jp;
        return CurveJet{{jx.f, jy.f, jz.f}, {jx.d1, jy.d1, jz.d1}, {jx.d2, jy.d2, jz.d2}};
    };
}

// The patch metric determinant of a Thm4-gauge surface is E = 2Q(s)(t - t*(s))
// with t*(s) = -R/(2Q); place the default t-range on the side where the
// computed <N,N> matches the requested eps.
SRange thm4_default_trange(const Curve& gamma, int eps, SRange sr) {
    const MVec3 wprime{0, 1, 1};
    double lo_star = 1e300, hi_star = -1e300;
    double q_sign = 0.0;
    for (int i = 0; i <= 32; ++i) {
        double s = sr.lo + i * (sr.hi - sr.lo) / 32.0;
        CurveJet g = gamma(s);
        double q = mink_dot(g.d1, wprime);
        double r = mink_dot(g.d1, g.d1);
        check_domain(std::abs(q) > 1e-14 * (1.0 + euclid_norm2(g.d1)),
                     "base curve has <gamma', w'> = 0 somewhere: ruling gauge degenerates");
        double sign = q > 0 ? 1.0 : -1.0;
        if (q_sign == 0.0) q_sign = sign;
        check_domain(sign == q_sign, "<gamma', w'> changes sign over the s-range");
        double t_star = -r / (2.0 * q);
        lo_star = std::min(lo_star, t_star);
        hi_star = std::max(hi_star, t_star);
    }
    bool want_negative_e = eps == 1; // <N,N> = -sign(EG - F^2)
    bool above = want_negative_e ? (q_sign < 0) : (q_sign > 0);
    if (above) return {hi_star + 0.25, hi_star + 1.25};
    return {lo_star - 1.25, lo_star - 0.25};
}

void validate_eps(const SolitonFamily& f, int eps) {
    const Rect& d = f.surface.domain;
    int degenerate = 0, total = 0;
    for (int i = 0; i < 7; ++i) {
        double s = d.s0 + (i + 0.5) * (d.s1 - d.s0) / 7.0;
        for (int k = 0; k < 5; ++k) {
            double t = d.t0 + (k + 0.5) * (d.t1 - d.t0) / 5.0;
            SurfaceJet2 j = f.surface.jet(s, t);
            ++total;
            if (is_degenerate(j)) {
                ++degenerate;
                continue;
            }
            FundamentalData fd = fundamental_data(j);
            if (fd.eps != eps) {
                std::ostringstream os;
                os << "requested eps = " << eps << " but <N,N> = " << fd.eps << " at (s,t) = ("
                   << s << ", " << t << ")";
                throw Error(ErrorKind::EpsMismatch, os.str());
            }
        }
    }
    if (2 * degenerate >= total)
        throw Error(ErrorKind::DomainViolation, "t-range sits on the degeneracy locus");
}

SolitonFamily make_thm4(FamilyId id, std::vector<std::pair<std::string, double>> params,
                        MVec3 v, ScalarFn x, ScalarFn z, ScalarFn phi, int eps, SRange sr,
                        OptRange tr) {
    RuledSurfaceSpec spec;
    spec.gamma = thm4_gamma(std::move(x), std::move(z), std::move(phi));
    spec.director = thm4_director();
    SRange trange = tr ? *tr : thm4_default_trange(spec.gamma, eps, sr);
    spec.domain = {sr.lo, sr.hi, trange.lo, trange.hi};
    SolitonFamily f = assemble(id, std::move(params), v, std::move(spec));
    validate_eps(f, eps);
    return f;
}

} // namespace

SolitonFamily make_cylinder(Profile u, RulingCase ruling, const MVec3& v, SRange s_range,
                            SRange t_range) {
    check_domain(s_range.hi > s_range.lo && t_range.hi > t_range.lo, "empty domain rectangle");
    ScalarFn uf = u.u;
    validate_samples(s_range, [&](double s) {
        Jet1 j = uf(s);
        return std::isfinite(j.f) && std::isfinite(j.d1) && std::isfinite(j.d2);
    }, "profile not finite on the s-range");
    SolitonFamily f = assemble(FamilyId::GenericCylinder, {}, v,
                               cylinder_spec(u, ruling, s_range, t_range));
    f.profile = std::move(u);
    f.ruling = ruling;
    return f;
}

SolitonFamily make_gr1(Gr1Branch branch, double a, double b, double v1, OptRange s_range,
                       OptRange t_range) {
    SRange sr = s_range ? *s_range : (branch == Gr1Branch::Cosh ? SRange{-1.0, 1.0}
                                                                : SRange{0.5 - a, 2.0 - a});
    SRange tr = t_range ? *t_range : SRange{-1.0, 1.0};
    Profile u;
    if (branch == Gr1Branch::Cosh) {
        u.u = [a, b](double s) { return -log(cosh(Jet1::variable(s) + a)) + b; };
    } else {
        validate_samples(sr, [&](double s) { return s + a > 0.0; },
                         "sinh branch requires s + a > 0");
        u.u = [a, b](double s) { return log(sinh(Jet1::variable(s) + a)) + b; };
    }
    SolitonFamily f = assemble(branch == Gr1Branch::Cosh ? FamilyId::Gr1Cosh : FamilyId::Gr1Sinh,
                               {{"a", a}, {"b", b}, {"v1", v1}}, MVec3{v1, 0, 1},
                               cylinder_spec(u, RulingCase::SpacelikeW, sr, tr));
    f.profile = std::move(u);
    f.ruling = RulingCase::SpacelikeW;
    return f;
}

SolitonFamily make_gr2(Gr2Branch branch, int sign, double a, double b, double v1,
                       OptRange s_range, OptRange t_range) {
    check_domain(sign == 1 || sign == -1, "sign must be +1 or -1");
    check_domain(a != 0.0, "a must be nonzero");
    SRange tr = t_range ? *t_range : SRange{-1.0, 1.0};
    Profile u;
    SRange sr{};
    if (branch == Gr2Branch::Exp) {
        sr = s_range ? *s_range
                     : (a > 0.0 ? SRange{-1.0, 1.0}
                                : SRange{0.5 * std::log(-a) + 0.25, 0.5 * std::log(-a) + 1.75});
        validate_samples(sr, [&](double s) { return std::exp(2.0 * s) + a > 0.0; },
                         "exp branch requires e^{2s} + a > 0");
        double sgn = sign;
        u.u = [a, b, sgn](double s) {
            Jet1 js = Jet1::variable(s);
            return sgn * log(exp(js) + sqrt(exp(2.0 * js) + a)) + b;
        };
    } else {
        check_domain(a > 0.0, "arctanh branch requires a > 0");
        double hi = -0.5 * std::log(a) - 0.2;
        sr = s_range ? *s_range : SRange{hi - 1.8, hi};
        validate_samples(sr, [&](double s) {
            double q = a * std::exp(2.0 * s);
            return q > 0.0 && q < 1.0;
        }, "arctanh branch requires 0 < a e^{2s} < 1");
        double sgn = sign;
        u.u = [a, b, sgn](double s) {
            Jet1 js = Jet1::variable(s);
            return sgn * atanh(sqrt(1.0 - a * exp(2.0 * js))) + b;
        };
    }
    SolitonFamily f = assemble(branch == Gr2Branch::Exp ? FamilyId::Gr2Exp : FamilyId::Gr2Arctanh,
                               {{"a", a}, {"b", b}, {"v1", v1}, {"sign", double(sign)}},
                               MVec3{v1, 1, 0}, cylinder_spec(u, RulingCase::SpacelikeW, sr, tr));
    f.profile = std::move(u);
    f.ruling = RulingCase::SpacelikeW;
    return f;
}

SolitonFamily make_gr3(double a, double b, double v3, OptRange s_range, OptRange t_range) {
    SRange sr = s_range ? *s_range : SRange{-1.4 - a, 1.4 - a};
    SRange tr = t_range ? *t_range : SRange{-1.0, 1.0};
    validate_samples(sr, [&](double s) { return std::cos(s + a) > 0.0; },
                     "profile requires cos(s + a) > 0");
    Profile u;
    u.u = [a, b](double s) { return -log(cos(Jet1::variable(s) + a)) + b; };
    SolitonFamily f = assemble(FamilyId::Gr3, {{"a", a}, {"b", b}, {"v3", v3}}, MVec3{0, 1, v3},
                               cylinder_spec(u, RulingCase::TimelikeW, sr, tr));
    f.profile = std::move(u);
    f.ruling = RulingCase::TimelikeW;
    return f;
}

SolitonFamily make_null_scroll(Profile u, double v_scale, SRange s_range, OptRange t_range) {
    check_domain(v_scale != 0.0, "velocity scale must be nonzero");
    SRange tr = t_range ? *t_range : SRange{-1.0, 1.0};
    ScalarFn uf = u.u;
    validate_samples(s_range, [&](double s) {
        Jet1 j = uf(s);
        return std::isfinite(j.f) && std::isfinite(j.d1) && std::isfinite(j.d2);
    }, "base profile not finite on the s-range");
    for (int i = 0; i <= 32; ++i) {
        double s = s_range.lo + i * (s_range.hi - s_range.lo) / 32.0;
        Jet1 j = uf(s);
        if (std::abs(j.d1) <= 1e-10 * (1.0 + std::abs(j.f)))
            throw Error(ErrorKind::DegenerateBase,
                        "null scroll needs u' != 0 (patch degenerates where u' vanishes)");
    }
    RuledSurfaceSpec spec;
    spec.gamma = [uf](double s) {
        Jet1 j = uf(s);
        return CurveJet{{j.f, s, -j.f}, {j.d1, 1.0, -j.d1}, {j.d2, 0.0, -j.d2}};
    };
    spec.director = constant_curve({1, 0, 1});
    spec.domain = {s_range.lo, s_range.hi, tr.lo, tr.hi};
    SolitonFamily f = assemble(FamilyId::NullScroll, {{"vscale", v_scale}},
                               MVec3{v_scale, 0, v_scale}, std::move(spec));
    f.profile = std::move(u);
    return f;
}

SolitonFamily make_thm4_v0(double a, double b, int eps, OptRange s_range, OptRange t_range) {
    check_domain(eps == 1 || eps == -1, "eps must be +1 or -1");
    double e = eps;
    SRange sr = s_range ? *s_range
                        : (eps == 1 ? SRange{-a / 2 + 0.25, -a / 2 + 1.75}
                                    : SRange{a / 2 - 1.75, a / 2 - 0.25});
    validate_samples(sr, [&](double s) { return 2.0 * e * s + a > 0.0; },
                     "requires 2 eps s + a > 0");
    ScalarFn x = [a, e](double s) {
        Jet1 js = Jet1::variable(s);
        return (a / 4.0) * log(2.0 * e * js + a) - js / (2.0 * e);
    };
    ScalarFn z = [a, b, e](double s) {
        Jet1 js = Jet1::variable(s);
        return -((a * a + 4.0) / (16.0 * e)) * log(2.0 * e * js + a) + b * js -
               (e / 8.0) * js * js;
    };
    ScalarFn phi = [a, e](double s) {
        return log(2.0 * e * Jet1::variable(s) + a) / (2.0 * e);
    };
    return make_thm4(FamilyId::Thm4V0, {{"a", a}, {"b", b}, {"eps", double(eps)}}, MVec3{0, 1, 1},
                     x, z, phi, eps, sr, t_range);
}

SolitonFamily make_thm4_a0(double v2, double b, int eps, OptRange s_range, OptRange t_range) {
    check_domain(eps == 1 || eps == -1, "eps must be +1 or -1");
    double e = eps;
    SRange sr = s_range ? *s_range : SRange{v2 + 0.5, v2 + 2.0};
    validate_samples(sr, [&](double s) { return s - v2 > 0.0; }, "requires s > v2");
    ScalarFn x = [v2, e](double s) {
        Jet1 d = Jet1::variable(s) - v2;
        return (log(d) - v2 / d) / e;
    };
    ScalarFn z = [v2, b, e](double s) {
        Jet1 js = Jet1::variable(s);
        Jet1 d = js - v2;
        return (2.0 * v2 * log(d) - (1.0 + v2 * v2) / d) / (2.0 * e) + b * js;
    };
    ScalarFn phi = [v2, e](double s) { return 1.0 / (e * (Jet1::variable(s) - v2)); };
    return make_thm4(FamilyId::Thm4A0, {{"v2", v2}, {"b", b}, {"eps", double(eps)}},
                     MVec3{1, v2, v2}, x, z, phi, eps, sr, t_range);
}

SolitonFamily make_thm4_a1(double v2, double a, double b, OptRange s_range, OptRange t_range) {
    check_domain(a != 0.0, "a must be nonzero");
    int eps = a > 0.0 ? 1 : -1;
    double e = eps;
    double p = std::sqrt(e / a);
    SRange sr = s_range ? *s_range : SRange{v2 - 1.0, v2 + 1.0};
    ScalarFn x = [v2, a, e, p](double s) {
        Jet1 ph = p * (Jet1::variable(s) - v2);
        return log(1.0 + ph * ph) / (2.0 * e) + (v2 / (a * p)) * atan(ph);
    };
    ScalarFn z = [v2, a, b, e, p](double s) {
        Jet1 js = Jet1::variable(s);
        Jet1 ph = p * (js - v2);
        return ((p * p * (v2 * v2 + 1.0) - 1.0) * atan(ph) + p * v2 * log(1.0 + ph * ph)) /
                   (2.0 * e * p) +
               b * js;
    };
    ScalarFn phi = [v2, a, p](double s) {
        return -atan(p * (Jet1::variable(s) - v2)) / (a * p);
    };
    return make_thm4(FamilyId::Thm4A1, {{"v2", v2}, {"a", a}, {"b", b}}, MVec3{1, v2, v2}, x, z,
                     phi, eps, sr, t_range);
}

SolitonFamily make_thm4_a2(double v2, double a, double b, OptRange s_range, OptRange t_range) {
    check_domain(a != 0.0, "a must be nonzero");
    int eps = a > 0.0 ? -1 : 1;
    double e = eps;
    double p = std::sqrt(-e / a);
    SRange sr = s_range ? *s_range : SRange{v2 - 0.9 / p, v2 + 0.9 / p};
    validate_samples(sr, [&](double s) { return std::abs(p * (s - v2)) < 1.0; },
                     "requires |p(s - v2)| < 1");
    ScalarFn x = [v2, a, e, p](double s) {
        Jet1 ph = p * (Jet1::variable(s) - v2);
        return log(1.0 - ph * ph) / (2.0 * e) +
               (v2 / (2.0 * a * p)) * log((1.0 + ph) / (1.0 - ph));
    };
    ScalarFn z = [v2, a, b, e, p](double s) {
        Jet1 js = Jet1::variable(s);
        Jet1 ph = p * (js - v2);
        return (e * v2 / 2.0) * log(1.0 - ph * ph) +
               ((1.0 - a * e + v2 * v2) / (2.0 * a * p)) * atanh(ph) + b * js;
    };
    ScalarFn phi = [v2, a, p](double s) {
        Jet1 ph = p * (Jet1::variable(s) - v2);
        return -log((1.0 + ph) / (1.0 - ph)) / (2.0 * p * a);
    };
    return make_thm4(FamilyId::Thm4A2, {{"v2", v2}, {"a", a}, {"b", b}}, MVec3{1, v2, v2}, x, z,
                     phi, eps, sr, t_range);
}

std::pair<SolitonFamily, SolitonFamily> intro_examples() {
    RuledSurfaceSpec sx;
    sx.gamma = [](double s) {
        Jet1 js = Jet1::variable(s);
        Jet1 x = log(js), y = 1.0 / (2.0 * js), z = -1.0 / (2.0 * js);
        return CurveJet{{x.f, y.f, z.f}, {x.d1, y.d1, z.d1}, {x.d2, y.d2, z.d2}};
    };
    sx.director = thm4_director();
    sx.domain = {1.0, 2.0, 1.0, 2.0};
    SolitonFamily fx = assemble(FamilyId::IntroX, {}, MVec3{1, 0, 0}, std::move(sx));

    RuledSurfaceSpec sy;
    sy.gamma = [](double s) {
        Jet1 js = Jet1::variable(s);
        Jet1 x = -0.5 * log(1.0 + js * js), y = atan(js) + js, z = js;
        return CurveJet{{x.f, y.f, z.f}, {x.d1, y.d1, z.d1}, {x.d2, y.d2, z.d2}};
    };
    sy.director = thm4_director();
    sy.domain = {-1.0, 1.0, 0.0, 1.0};
    SolitonFamily fy = assemble(FamilyId::IntroY, {}, MVec3{1, 0, 0}, std::move(sy));

    return {std::move(fx), std::move(fy)};
}

namespace {

double get(const std::map<std::string, double>& m, const std::string& k, double dflt) {
    auto it = m.find(k);
    return it == m.end() ? dflt : it->second;
}

OptRange opt_range(const std::map<std::string, double>& m, const char* lo, const char* hi) {
    auto a = m.find(lo);
    auto b = m.find(hi);
    if (a == m.end() || b == m.end()) return {};
    return SRange{a->second, b->second};
}

void reject_unknown(const FamilyInfo& info, const std::map<std::string, double>& params,
                    const std::map<std::string, std::string>& strings) {
    auto known_num = [&](const std::string& k) {
        if (k == "s0" || k == "s1" || k == "t0" || k == "t1") return true;
        return std::any_of(info.params.begin(), info.params.end(),
                           [&](const ParamSpec& p) { return p.key == k; });
    };
    for (const auto& [k, v] : params) {
        (void)v;
        if (!known_num(k))
            throw Error(ErrorKind::OutOfRange,
                        "unknown parameter '" + k + "' for family " + info.name);
    }
    for (const auto& [k, v] : strings) {
        (void)v;
        if (std::find(info.string_params.begin(), info.string_params.end(), k) ==
            info.string_params.end())
            throw Error(ErrorKind::OutOfRange,
                        "unknown string parameter '" + k + "' for family " + info.name);
    }
}

Profile profile_from_expr(const std::string& text) {
    ExprPtr e = parse_expr(text);
    Profile p;
    p.u = [e](double s) { return eval_jet(*e, s); };
    return p;
}

std::vector<FamilyInfo> build_registry() {
    using M = std::map<std::string, double>;
    using S = std::map<std::string, std::string>;
    std::vector<FamilyInfo> reg;

    auto add = [&reg](FamilyInfo info) { reg.push_back(std::move(info)); };

    add({FamilyId::Gr1Cosh, "Gr1Cosh",
         "cylinder u = -log cosh(s+a) + b, rulings (1,0,0), velocity (v1,0,1)",
         {{"a", 0, "profile shift"}, {"b", 0, "height offset"}, {"v1", 0, "ruling component of v"}},
         {},
         [](const M& m, const S&) {
             return make_gr1(Gr1Branch::Cosh, get(m, "a", 0), get(m, "b", 0), get(m, "v1", 0),
                             opt_range(m, "s0", "s1"), opt_range(m, "t0", "t1"));
         }});
    add({FamilyId::Gr1Sinh, "Gr1Sinh",
         "cylinder u = log sinh(s+a) + b (needs s+a>0), rulings (1,0,0), velocity (v1,0,1)",
         {{"a", 0, "profile shift"}, {"b", 0, "height offset"}, {"v1", 0, "ruling component of v"}},
         {},
         [](const M& m, const S&) {
             return make_gr1(Gr1Branch::Sinh, get(m, "a", 0), get(m, "b", 0), get(m, "v1", 0),
                             opt_range(m, "s0", "s1"), opt_range(m, "t0", "t1"));
         }});
    add({FamilyId::Gr2Exp, "Gr2Exp",
         "cylinder u = sign*log(e^s + sqrt(e^2s + a)) + b, rulings (1,0,0), velocity (v1,1,0)",
         {{"a", 1, "branch constant, nonzero"},
          {"b", 0, "height offset"},
          {"v1", 0, "ruling component of v"},
          {"sign", 1, "+1 or -1"}},
         {},
         [](const M& m, const S&) {
             return make_gr2(Gr2Branch::Exp, int(get(m, "sign", 1)), get(m, "a", 1),
                             get(m, "b", 0), get(m, "v1", 0), opt_range(m, "s0", "s1"),
                             opt_range(m, "t0", "t1"));
         }});
    add({FamilyId::Gr2Arctanh, "Gr2Arctanh",
         "cylinder u = sign*atanh(sqrt(1 - a e^2s)) + b (needs 0<a e^2s<1), velocity (v1,1,0)",
         {{"a", 1, "branch constant, positive"},
          {"b", 0, "height offset"},
          {"v1", 0, "ruling component of v"},
          {"sign", 1, "+1 or -1"}},
         {},
         [](const M& m, const S&) {
             return make_gr2(Gr2Branch::Arctanh, int(get(m, "sign", 1)), get(m, "a", 1),
                             get(m, "b", 0), get(m, "v1", 0), opt_range(m, "s0", "s1"),
                             opt_range(m, "t0", "t1"));
         }});
    add({FamilyId::Gr3, "Gr3",
         "cylinder u = -log cos(s+a) + b (needs cos(s+a)>0), rulings (0,0,1), velocity (0,1,v3)",
         {{"a", 0, "profile shift"}, {"b", 0, "height offset"}, {"v3", 0, "ruling component of v"}},
         {},
         [](const M& m, const S&) {
             return make_gr3(get(m, "a", 0), get(m, "b", 0), get(m, "v3", 0),
                             opt_range(m, "s0", "s1"), opt_range(m, "t0", "t1"));
         }});
    add({FamilyId::NullScroll, "NullScroll",
         "flat scroll over (u(s), s, -u(s)) with u' != 0, rulings (1,0,1), velocity "
         "vscale*(1,0,1)",
         {{"vscale", 1, "velocity scale, nonzero"}},
         {"u"},
         [](const M& m, const S& s) {
             auto it = s.find("u");
             Profile u = profile_from_expr(it == s.end() ? "exp(s)" : it->second);
             SRange sr{get(m, "s0", 0.5), get(m, "s1", 2.0)};
             return make_null_scroll(std::move(u), get(m, "vscale", 1), sr,
                                     opt_range(m, "t0", "t1"));
         }});
    add({FamilyId::Thm4V0, "Thm4V0",
         "non-cylindrical family with rulings (1,s,s), velocity (0,1,1); needs 2*eps*s + a > 0",
         {{"a", 1, "branch constant"}, {"b", 0, "base-curve slope"}, {"eps", 1, "sign of <N,N>"}},
         {},
         [](const M& m, const S&) {
             return make_thm4_v0(get(m, "a", 1), get(m, "b", 0), int(get(m, "eps", 1)),
                                 opt_range(m, "s0", "s1"), opt_range(m, "t0", "t1"));
         }});
    add({FamilyId::Thm4A0, "Thm4A0",
         "non-cylindrical family with rulings (1,s,s), velocity (1,v2,v2); needs s > v2",
         {{"v2", 0, "velocity parameter"},
          {"b", 0, "base-curve slope"},
          {"eps", 1, "sign of <N,N>"}},
         {},
         [](const M& m, const S&) {
             return make_thm4_a0(get(m, "v2", 0), get(m, "b", 0), int(get(m, "eps", 1)),
                                 opt_range(m, "s0", "s1"), opt_range(m, "t0", "t1"));
         }});
    add({FamilyId::Thm4A1, "Thm4A1",
         "non-cylindrical family with rulings (1,s,s), velocity (1,v2,v2); eps = sign(a)",
         {{"v2", 0, "velocity parameter"}, {"a", -1, "branch constant, nonzero"},
          {"b", 1, "base-curve slope"}},
         {},
         [](const M& m, const S&) {
             return make_thm4_a1(get(m, "v2", 0), get(m, "a", -1), get(m, "b", 1),
                                 opt_range(m, "s0", "s1"), opt_range(m, "t0", "t1"));
         }});
    add({FamilyId::Thm4A2, "Thm4A2",
         "non-cylindrical family with rulings (1,s,s), velocity (1,v2,v2); eps = -sign(a), "
         "|p(s-v2)| < 1",
         {{"v2", 0, "velocity parameter"}, {"a", 1, "branch constant, nonzero"},
          {"b", 0, "base-curve slope"}},
         {},
         [](const M& m, const S&) {
             return make_thm4_a2(get(m, "v2", 0), get(m, "a", 1), get(m, "b", 0),
                                 opt_range(m, "s0", "s1"), opt_range(m, "t0", "t1"));
         }});
    add({FamilyId::IntroX, "IntroX",
         "worked example (log s, 1/(2s), -1/(2s)) + t(1,s,s), velocity (1,0,0)",
         {},
         {},
         [](const M&, const S&) { return intro_examples().first; }});
    add({FamilyId::IntroY, "IntroY",
         "worked example (-log(1+s^2)/2, atan(s)+s, s) + t(1,s,s), velocity (1,0,0)",
         {},
         {},
         [](const M&, const S&) { return intro_examples().second; }});
    add({FamilyId::GenericCylinder, "GenericCylinder",
         "cylinder over a caller profile u(s); no soliton property implied",
         {{"v1", 0, "velocity x"}, {"v2", 0, "velocity y"}, {"v3", 0, "velocity z"},
          {"ruling", 0, "0 = rulings (1,0,0), 1 = rulings (0,0,1)"}},
         {"u"},
         [](const M& m, const S& s) {
             auto it = s.find("u");
             Profile u = profile_from_expr(it == s.end() ? "s^2" : it->second);
             SRange sr{get(m, "s0", -1.0), get(m, "s1", 1.0)};
             SRange tr{get(m, "t0", -1.0), get(m, "t1", 1.0)};
             RulingCase rc = get(m, "ruling", 0) == 0 ? RulingCase::SpacelikeW
                                                      : RulingCase::TimelikeW;
             return make_cylinder(std::move(u), rc,
                                  {get(m, "v1", 0), get(m, "v2", 0), get(m, "v3", 0)}, sr, tr);
         }});

    return reg;
}

} // namespace

const std::vector<FamilyInfo>& family_registry() {
    static const std::vector<FamilyInfo> reg = build_registry();
    return reg;
}

const FamilyInfo& family_info(const std::string& name) {
    for (const FamilyInfo& info : family_registry())
        if (info.name == name) return info;
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
        return s;
    };
    std::string want = lower(name);
    for (const FamilyInfo& info : family_registry())
        if (lower(info.name) == want) return info;
    throw Error(ErrorKind::OutOfRange, "unknown family '" + name + "' (see the list command)");
}

SolitonFamily make_family(const std::string& name, const std::map<std::string, double>& params,
                          const std::map<std::string, std::string>& strings) {
    const FamilyInfo& info = family_info(name);
    reject_unknown(info, params, strings);
    std::map<std::string, double> merged = params;
    for (const ParamSpec& p : info.params)
        merged.emplace(p.key, p.default_value);
    return info.factory(merged, strings);
}

} // namespace tsol
