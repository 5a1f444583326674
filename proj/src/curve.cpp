#include "tsol/curve.hpp"

namespace tsol {

Curve curve_from_components(ScalarFn x, ScalarFn y, ScalarFn z) {
    return [x = std::move(x), y = std::move(y), z = std::move(z)](double s) {
        Jet1 jx = x(s), jy = y(s), jz = z(s);
        CurveJet c;
        c.p = {jx.f, jy.f, jz.f};
        c.d1 = {jx.d1, jy.d1, jz.d1};
        c.d2 = {jx.d2, jy.d2, jz.d2};
        return c;
    };
}

Curve constant_curve(const MVec3& w) {
    return [w](double) { return CurveJet{w, {0, 0, 0}, {0, 0, 0}}; };
}

SurfaceJet2 ruled_jet(const RuledSurfaceSpec& spec, double s, double t) {
    CurveJet g = spec.gamma(s);
    CurveJet w = spec.director(s);
    SurfaceJet2 j;
    j.p = g.p + t * w.p;
    j.ps = g.d1 + t * w.d1;
    j.pt = w.p;
    j.pss = g.d2 + t * w.d2;
    j.pst = w.d1;
    j.ptt = {0, 0, 0};
    return j;
}

ParametricSurface ruled_surface(const RuledSurfaceSpec& spec, JetProvenance prov) {
    ParametricSurface surf;
    surf.domain = spec.domain;
    surf.provenance = prov;
    surf.jet = [spec](double s, double t) { return ruled_jet(spec, s, t); };
    return surf;
}

} // namespace tsol
