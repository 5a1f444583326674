#include "tsol/io.hpp"

#include "tsol/errors.hpp"
#include "tsol/expr.hpp"

#include <cstdio>
#include <istream>
#include <fstream>
#include <ostream>
#include <sstream>

namespace tsol {

namespace {

std::string g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

std::vector<GridSample> sample_grid(const ParametricSurface& surf, int ns, int nt) {
    if (ns < 2 || nt < 2) throw Error(ErrorKind::OutOfRange, "grid needs at least 2x2 samples");
    const Rect& d = surf.domain;
    std::vector<GridSample> pts;
    pts.reserve(size_t(ns) * nt);
    for (int i = 0; i < ns; ++i) {
        double s = d.s0 + (d.s1 - d.s0) * i / double(ns - 1);
        for (int k = 0; k < nt; ++k) {
            double t = d.t0 + (d.t1 - d.t0) * k / double(nt - 1);
            pts.push_back({s, t, surf.jet(s, t).p});
        }
    }
    return pts;
}

void write_surface_csv(std::ostream& os, const std::vector<GridSample>& pts) {
    os << "s,t,x,y,z\n";
    for (const GridSample& g : pts)
        os << g17(g.s) << ',' << g17(g.t) << ',' << g17(g.p.x) << ',' << g17(g.p.y) << ','
           << g17(g.p.z) << '\n';
}

void write_surface_obj(std::ostream& os, const std::vector<GridSample>& pts, int ns, int nt) {
    if (int(pts.size()) != ns * nt)
        throw Error(ErrorKind::OutOfRange, "point count does not match the grid shape");
    for (const GridSample& g : pts)
        os << "v " << g17(g.p.x) << ' ' << g17(g.p.y) << ' ' << g17(g.p.z) << '\n';
    for (int i = 0; i + 1 < ns; ++i) {
        for (int k = 0; k + 1 < nt; ++k) {
            int a = i * nt + k + 1; // obj indices are 1-based
            int b = (i + 1) * nt + k + 1;
            os << "f " << a << ' ' << b << ' ' << b + 1 << ' ' << a + 1 << '\n';
        }
    }
}

void write_profile_csv(std::ostream& os, const ProfileSolution& sol) {
    os << "s,u,u_prime,u_second\n";
    for (const ProfileNode& n : sol.nodes)
        os << g17(n.s) << ',' << g17(n.u) << ',' << g17(n.up) << ',' << g17(n.upp) << '\n';
}

CsvTable read_csv(std::istream& is) {
    CsvTable table;
    std::string line;
    if (!std::getline(is, line)) throw Error(ErrorKind::ParseError, "empty csv stream");
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) table.header.push_back(trim(cell));
    size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::stringstream rs(line);
        std::vector<double> row;
        while (std::getline(rs, cell, ',')) {
            cell = trim(cell);
            char* end = nullptr;
            double v = std::strtod(cell.c_str(), &end);
            if (end != cell.c_str() + cell.size()) {
                std::ostringstream os;
                os << "bad number '" << cell << "' on csv line " << lineno;
                throw Error(ErrorKind::ParseError, os.str());
            }
            row.push_back(v);
        }
        if (row.size() != table.header.size()) {
            std::ostringstream os;
            os << "csv line " << lineno << " has " << row.size() << " fields, expected "
               << table.header.size();
            throw Error(ErrorKind::ParseError, os.str());
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

// Constant vector, "(a, b, c)" or bare "a, b, c": expression syntax, but s
// must not appear.
MVec3 parse_const_vec(std::string text, const std::string& key) {
    if (!text.empty() && text.front() != '(') text = "(" + text + ")";
    auto comps = parse_vec_expr(text);
    Jet1 jx = eval_jet(*comps[0], 0.0);
    Jet1 jy = eval_jet(*comps[1], 0.0);
    Jet1 jz = eval_jet(*comps[2], 0.0);
    if (jx.d1 != 0.0 || jy.d1 != 0.0 || jz.d1 != 0.0)
        throw Error(ErrorKind::ParseError, key + " must be constant (no s dependence)");
    return {jx.f, jy.f, jz.f};
}

std::pair<double, double> parse_range(std::string text, const std::string& key) {
    for (char& c : text)
        if (c == ',') c = ' ';
    std::istringstream is(text);
    double lo, hi;
    std::string extra;
    if (!(is >> lo >> hi) || (is >> extra))
        throw Error(ErrorKind::ParseError, key + " needs exactly two numbers");
    if (!(hi > lo)) throw Error(ErrorKind::ParseError, key + " must satisfy lo < hi");
    return {lo, hi};
}

} // namespace

ClassifyInput load_classify_input(std::istream& is) {
    std::optional<std::array<ExprPtr, 3>> gamma, w;
    std::optional<std::pair<double, double>> srange, trange;
    std::optional<MVec3> velocity;

    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << "line " << lineno << ": expected key = value";
            throw Error(ErrorKind::ParseError, os.str());
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        // expressions may be wrapped in double quotes
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = trim(value.substr(1, value.size() - 2));
        if (key == "gamma") gamma = parse_vec_expr(value);
        else if (key == "w") w = parse_vec_expr(value);
        else if (key == "s_range") srange = parse_range(value, key);
        else if (key == "t_range") trange = parse_range(value, key);
        else if (key == "v") velocity = parse_const_vec(value, key);
        else {
            std::ostringstream os;
            os << "line " << lineno << ": unknown key '" << key << "'";
            throw Error(ErrorKind::ParseError, os.str());
        }
    }
    if (!gamma) throw Error(ErrorKind::ParseError, "missing key 'gamma'");
    if (!w) throw Error(ErrorKind::ParseError, "missing key 'w'");
    if (!srange) throw Error(ErrorKind::ParseError, "missing key 's_range'");
    if (!trange) trange = {{-1.0, 1.0}};

    ClassifyInput input;
    input.spec.gamma = expr_curve(*gamma);
    input.spec.director = expr_curve(*w);
    input.spec.domain = {srange->first, srange->second, trange->first, trange->second};
    input.velocity = velocity;
    return input;
}

ClassifyInput load_classify_input_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    try {
        return load_classify_input(is);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ParseError) throw;
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

} // namespace tsol
