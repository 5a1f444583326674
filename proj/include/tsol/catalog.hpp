#pragma once

#include "tsol/curve.hpp"
#include "tsol/minkowski.hpp"
#include "tsol/surface.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tsol {

enum class FamilyId {
    Gr1Cosh,
    Gr1Sinh,
    Gr2Exp,
    Gr2Arctanh,
    Gr3,
    NullScroll,
    Thm4V0,
    Thm4A0,
    Thm4A1,
    Thm4A2,
    IntroX,
    IntroY,
    GenericCylinder,
};

const char* family_id_name(FamilyId id);

enum class Gr1Branch { Cosh, Sinh };
enum class Gr2Branch { Exp, Arctanh };

// Ruling direction for the cylinder constructions: SpacelikeW puts the profile
// in the x=0 plane with rulings (1,0,0); TimelikeW puts it in the z=0 plane
// with rulings (0,0,1).
enum class RulingCase { SpacelikeW, TimelikeW };

struct Profile {
    ScalarFn u;
};

// One member of the catalog: a concrete soliton surface with the velocity it
// translates along, plus the ruled decomposition it was built from.
struct SolitonFamily {
    FamilyId id;
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    MVec3 velocity;
    RuledSurfaceSpec spec;
    ParametricSurface surface;
    std::optional<Profile> profile;     // cylinders only
    std::optional<RulingCase> ruling;   // cylinders only
};

struct SRange {
    double lo, hi;
};
using OptRange = std::optional<SRange>;

/// Cylinder over an explicit profile. No soliton property is implied; the
/// velocity is simply recorded for residual checks.
SolitonFamily make_cylinder(Profile u, RulingCase ruling, const MVec3& v, SRange s_range,
                            SRange t_range = {-1.0, 1.0});

/// u = -log cosh(s+a)+b (cosh branch, spacelike profile regime) or
/// u = log sinh(s+a)+b (sinh branch, timelike regime), rulings (1,0,0),
/// velocity (v1, 0, 1).
SolitonFamily make_gr1(Gr1Branch branch, double a, double b, double v1 = 0.0,
                       OptRange s_range = {}, OptRange t_range = {});

/// u = sign*log(e^s + sqrt(e^{2s}+a))+b (exp branch, needs e^{2s}+a>0, a != 0)
/// or u = sign*atanh(sqrt(1-a e^{2s}))+b (arctanh branch, needs 0<a e^{2s}<1),
/// rulings (1,0,0), velocity (v1, 1, 0). sign is +1 or -1.
SolitonFamily make_gr2(Gr2Branch branch, int sign, double a, double b, double v1 = 0.0,
                       OptRange s_range = {}, OptRange t_range = {});

/// u = -log cos(s+a)+b in the z=0 plane, rulings (0,0,1), velocity (0,1,v3);
/// needs cos(s+a)>0 on the domain.
SolitonFamily make_gr3(double a, double b, double v3 = 0.0, OptRange s_range = {},
                       OptRange t_range = {});

/// Flat null scroll: base (u(s), s, -u(s)) with u' != 0, rulings (1,0,1),
/// velocity v_scale*(1,0,1). H = K = 0.
SolitonFamily make_null_scroll(Profile u, double v_scale = 1.0, SRange s_range = {0.5, 2.0},
                               OptRange t_range = {});

// The non-cylindrical families: rulings w(s) = (1,s,s), base (x, z+Phi, z),
// velocity orthogonal to w' = (0,1,1). eps is the sign of <N,N> on the patch;
// the t-range is placed on the matching side of the degeneracy line and the
// constructor throws Error(EpsMismatch) when that fails.

/// Velocity (0,1,1): Phi = log(2 eps s + a)/(2 eps), eps = +-1, 2 eps s + a > 0.
SolitonFamily make_thm4_v0(double a, double b, int eps, OptRange s_range = {},
                           OptRange t_range = {});

/// Velocity (1, v2, v2), a = 0 case: Phi = 1/(eps(s - v2)), s > v2.
SolitonFamily make_thm4_a0(double v2, double b, int eps, OptRange s_range = {},
                           OptRange t_range = {});

/// Velocity (1, v2, v2), sign a = eps: Phi = -atan(p(s-v2))/(a p), p = sqrt(eps/a).
SolitonFamily make_thm4_a1(double v2, double a, double b, OptRange s_range = {},
                           OptRange t_range = {});

/// Velocity (1, v2, v2), sign a = -eps: Phi = -log((1+phi)/(1-phi))/(2 p a),
/// phi = p(s-v2), p = sqrt(-eps/a), |phi| < 1.
SolitonFamily make_thm4_a2(double v2, double a, double b, OptRange s_range = {},
                           OptRange t_range = {});

/// The two worked examples: X(s,t) = (log s, 1/(2s), -1/(2s)) + t(1,s,s) on
/// s,t in [1,2], and Y(s,t) = (-log(1+s^2)/2, atan s + s, s) + t(1,s,s) on
/// s in [-1,1], t in [0,1]. Both translate along (1,0,0). Built from the
/// literal formulas, independent of the Thm4 constructors.
std::pair<SolitonFamily, SolitonFamily> intro_examples();

// Registry: one entry per FamilyId with the parameter schema and a factory
// taking named numeric parameters (plus expression strings for the profile
// of GenericCylinder / NullScroll).
struct ParamSpec {
    std::string key;
    double default_value;
    std::string doc;
};

struct FamilyInfo {
    FamilyId id;
    std::string name;
    std::string source; // closed form and ruling type, for listings
    std::vector<ParamSpec> params;
    std::vector<std::string> string_params;
    std::function<SolitonFamily(const std::map<std::string, double>&,
                                const std::map<std::string, std::string>&)>
        factory;
};

const std::vector<FamilyInfo>& family_registry();
const FamilyInfo& family_info(const std::string& name); // throws OutOfRange
SolitonFamily make_family(const std::string& name,
                          const std::map<std::string, double>& params = {},
                          const std::map<std::string, std::string>& strings = {});

} // namespace tsol
