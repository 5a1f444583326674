#pragma once

#include "tsol/jet.hpp"
#include "tsol/minkowski.hpp"
#include "tsol/surface.hpp"

#include <functional>

namespace tsol {

// Value and first two derivatives of a space curve at one parameter.
struct CurveJet {
    MVec3 p;
    MVec3 d1;
    MVec3 d2;
};

using Curve = std::function<CurveJet(double)>;
using ScalarFn = std::function<Jet1(double)>;

/// Assembles a curve from per-component scalar jets.
Curve curve_from_components(ScalarFn x, ScalarFn y, ScalarFn z);

/// Constant curve (zero derivatives), for cylinder directors.
Curve constant_curve(const MVec3& w);

// Ruled patch X(s,t) = gamma(s) + t * director(s).
struct RuledSurfaceSpec {
    Curve gamma;
    Curve director;
    Rect domain;
};

SurfaceJet2 ruled_jet(const RuledSurfaceSpec& spec, double s, double t);
ParametricSurface ruled_surface(const RuledSurfaceSpec& spec,
                                JetProvenance prov = JetProvenance::TaylorJet);

} // namespace tsol
