#pragma once

#include "tsol/curve.hpp"
#include "tsol/ode.hpp"
#include "tsol/surface.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tsol {

struct GridSample {
    double s, t;
    MVec3 p;
};

/// Inclusive ns x nt sample grid, row-major with s as the outer index.
std::vector<GridSample> sample_grid(const ParametricSurface& surf, int ns, int nt);

// Doubles are written with enough digits to round-trip exactly.
void write_surface_csv(std::ostream& os, const std::vector<GridSample>& pts);
void write_surface_obj(std::ostream& os, const std::vector<GridSample>& pts, int ns, int nt);
void write_profile_csv(std::ostream& os, const ProfileSolution& sol);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(std::istream& is); // throws Error(ParseError)

// Ruled patch description, one "key = value" per line, '#' comments:
//   gamma   = (expr, expr, expr)   base curve components in s
//   w       = (expr, expr, expr)   director components in s
//   s_range = lo hi
//   t_range = lo hi                optional, default -1 1
//   v       = (num, num, num)      optional velocity to check instead of fitting
struct ClassifyInput {
    RuledSurfaceSpec spec;
    std::optional<MVec3> velocity;
};

ClassifyInput load_classify_input(std::istream& is);
ClassifyInput load_classify_input_file(const std::string& path);

} // namespace tsol
