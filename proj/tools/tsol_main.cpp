// Command line front end: list / sample / residual / solve-ode / classify /
// fit-velocity. Exit codes: 0 pass, 1 tolerance or expectation failure,
// 2 precondition/parse/usage errors.

#include "tsol/catalog.hpp"
#include "tsol/errors.hpp"
#include "tsol/expr.hpp"
#include "tsol/io.hpp"
#include "tsol/ode.hpp"
#include "tsol/ruled.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace tsol;

std::pair<int, int> parse_grid(const std::string& text) {
    int w = 0, h = 0;
    char x = 0;
    if (std::sscanf(text.c_str(), "%d%c%d", &w, &x, &h) != 3 || (x != 'x' && x != 'X') ||
        w < 2 || h < 2)
        throw Error(ErrorKind::ParseError, "--grid wants WxH with W,H >= 2, e.g. 30x30");
    return {w, h};
}

// Velocity flags accept both "1,0,0" and "(1, 0, 0)".
MVec3 parse_vec_flag(std::string text) {
    if (text.empty()) throw Error(ErrorKind::ParseError, "empty vector");
    if (text.front() != '(') text = "(" + text + ")";
    auto comps = parse_vec_expr(text);
    Jet1 jx = eval_jet(*comps[0], 0.0), jy = eval_jet(*comps[1], 0.0),
         jz = eval_jet(*comps[2], 0.0);
    if (jx.d1 != 0 || jy.d1 != 0 || jz.d1 != 0)
        throw Error(ErrorKind::ParseError, "vector flags must be constant");
    return {jx.f, jy.f, jz.f};
}

std::pair<double, double> parse_pair_flag(const std::string& text, const char* what) {
    double a, b;
    if (std::sscanf(text.c_str(), "%lf,%lf", &a, &b) != 2)
        throw Error(ErrorKind::ParseError, std::string(what) + " wants two numbers: a,b");
    return {a, b};
}

// Family parameters arrive as leftover tokens: --a 0.5, --sign=-1, --u exp(s).
SolitonFamily family_from_tokens(const std::string& name, std::vector<std::string> tokens) {
    const FamilyInfo& info = family_info(name);
    std::map<std::string, double> nums;
    std::map<std::string, std::string> strs;
    // remaining() yields tokens in reverse parse order on some CLI11 versions;
    // normalize by scanning for leading dashes.
    for (size_t i = 0; i < tokens.size(); ++i) {
        std::string tok = tokens[i];
        if (tok.rfind("--", 0) != 0)
            throw Error(ErrorKind::ParseError, "unexpected argument '" + tok +
                                                   "' (family parameters look like --a 0.5)");
        tok.erase(0, 2);
        std::string value;
        size_t eq = tok.find('=');
        if (eq != std::string::npos) {
            value = tok.substr(eq + 1);
            tok.erase(eq);
        } else {
            if (i + 1 >= tokens.size())
                throw Error(ErrorKind::ParseError, "missing value for --" + tok);
            value = tokens[++i];
        }
        bool is_string = std::find(info.string_params.begin(), info.string_params.end(), tok) !=
                         info.string_params.end();
        if (is_string) {
            strs[tok] = value;
            continue;
        }
        bool known = tok == "s0" || tok == "s1" || tok == "t0" || tok == "t1";
        for (const ParamSpec& p : info.params) known = known || p.key == tok;
        if (!known) {
            std::string keys;
            for (const ParamSpec& p : info.params) keys += " --" + p.key;
            for (const std::string& s : info.string_params) keys += " --" + s;
            throw Error(ErrorKind::OutOfRange,
                        "family " + info.name + " has no parameter --" + tok +
                            " (available:" + keys + " --s0 --s1 --t0 --t1)");
        }
        char* end = nullptr;
        double v = std::strtod(value.c_str(), &end);
        if (end != value.c_str() + value.size())
            throw Error(ErrorKind::ParseError, "--" + tok + " wants a number, got '" + value +
                                                   "'");
        nums[tok] = v;
    }
    return make_family(name, nums, strs);
}

struct Common {
    std::string grid = "30x30";
    double tol = 1e-6;
    std::string out;
    std::string format = "csv";
    long seed = 0; // reserved for randomized sweeps; accepted for script stability
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--grid", c.grid, "sample grid as WxH")->capture_default_str();
    sub->add_option("--tol", c.tol, "pass/fail tolerance")->capture_default_str();
    sub->add_option("--out", c.out, "output file (default: stdout)");
    sub->add_option("--format", c.format, "output format: csv or obj")
        ->check(CLI::IsMember({"csv", "obj"}));
    sub->add_option("--seed", c.seed, "seed for randomized sweeps (reserved)");
}

std::ofstream open_out_file(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error(ErrorKind::ParseError, "cannot open output file '" + path + "'");
    return os;
}

int cmd_list(const std::string& family, bool as_json) {
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const FamilyInfo& info : family_registry()) {
            if (!family.empty() && info.name != family) continue;
            nlohmann::json params = nlohmann::json::array();
            for (const ParamSpec& p : info.params)
                params.push_back({{"key", p.key}, {"default", p.default_value}, {"doc", p.doc}});
            arr.push_back({{"name", info.name},
                           {"source", info.source},
                           {"params", params},
                           {"string_params", info.string_params}});
        }
        if (!family.empty() && arr.empty())
            throw Error(ErrorKind::OutOfRange, "unknown family '" + family + "'");
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    bool found = false;
    for (const FamilyInfo& info : family_registry()) {
        if (!family.empty() && info.name != family) continue;
        found = true;
        std::printf("%-16s %s\n", info.name.c_str(), info.source.c_str());
        if (!family.empty()) {
            for (const ParamSpec& p : info.params)
                std::printf("    --%-8s default %-8g %s\n", p.key.c_str(), p.default_value,
                            p.doc.c_str());
            for (const std::string& s : info.string_params)
                std::printf("    --%-8s expression in s\n", s.c_str());
            std::printf("    --s0/--s1, --t0/--t1 override the parameter rectangle\n");
        }
    }
    if (!family.empty() && !found)
        throw Error(ErrorKind::OutOfRange, "unknown family '" + family + "'");
    if (family.empty())
        std::printf("\nuse `list --family NAME` for parameters, `--json` for machine output\n");
    return 0;
}

int cmd_sample(const SolitonFamily& fam, const Common& c) {
    auto [w, h] = parse_grid(c.grid);
    std::vector<GridSample> pts = sample_grid(fam.surface, w, h);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!c.out.empty()) {
        file = open_out_file(c.out);
        os = &file;
    }
    if (c.format == "obj") write_surface_obj(*os, pts, w, h);
    else write_surface_csv(*os, pts);
    return 0;
}

int report_residual(const ParametricSurface& surf, const MVec3& v, const Common& c,
                    const char* velocity_origin) {
    auto [w, h] = parse_grid(c.grid);
    GridReport gr = max_residual(surf, v, w, h);
    std::printf("velocity (%s): (%.12g, %.12g, %.12g)\n", velocity_origin, v.x, v.y, v.z);
    std::printf("max |2H - <N,v>| = %.6e at (s,t) = (%.6g, %.6g)\n", gr.max_abs_r1, gr.worst_s,
                gr.worst_t);
    std::printf("mean |2H - <N,v>| = %.6e over %d points (%d degenerate skipped)\n",
                gr.mean_abs_r1, gr.evaluated, gr.degenerate);
    bool pass = gr.max_abs_r1 <= c.tol;
    std::printf("%s (tol %.3e)\n", pass ? "PASS" : "FAIL", c.tol);
    return pass ? 0 : 1;
}

int cmd_residual(const std::string& family, const std::string& spec_file,
                 const std::optional<MVec3>& v_flag, std::vector<std::string> tokens,
                 const Common& c) {
    if (!spec_file.empty()) {
        ClassifyInput input = load_classify_input_file(spec_file);
        ParametricSurface surf = ruled_surface(input.spec);
        std::optional<MVec3> v = v_flag ? v_flag : input.velocity;
        if (v) return report_residual(surf, *v, c, "given");
        auto [w, h] = parse_grid(c.grid);
        VelocityFit fit = solve_velocity(surf, w, h);
        return report_residual(surf, fit.v, c, "fitted");
    }
    SolitonFamily fam = family_from_tokens(family, std::move(tokens));
    MVec3 v = v_flag ? *v_flag : fam.velocity;
    return report_residual(fam.surface, v, c, v_flag ? "given" : "catalog");
}

int cmd_solve_ode(const std::string& ode_name, std::optional<double> v1,
                  std::optional<double> v2, std::optional<double> v3, const std::string& init,
                  const std::string& range, double ode_tol, std::optional<double> fixed_step,
                  bool lift, const Common& c) {
    std::optional<ReaperId> id;
    for (ReaperId r : {ReaperId::Eq31Spacelike, ReaperId::Eq31Timelike, ReaperId::Eq32,
                       ReaperId::Gr0Spacelike, ReaperId::Gr0Timelike})
        if (ode_name == reaper_id_name(r)) id = r;
    if (!id)
        throw Error(ErrorKind::OutOfRange,
                    "unknown ode '" + ode_name +
                        "' (eq31-spacelike, eq31-timelike, eq32, gr0-spacelike, gr0-timelike)");

    MVec3 v = make_reaper(*id).velocity; // per-equation defaults
    if (v1) v.x = *v1;
    if (v2) v.y = *v2;
    if (v3) v.z = *v3;
    ReaperOde ode = make_reaper(*id, v);

    auto [u0, up0] = parse_pair_flag(init, "--init");
    auto [s0, s1] = parse_pair_flag(range, "--range");
    IntegrateOptions opt;
    opt.tol = ode_tol;
    opt.fixed_step = fixed_step;
    ProfileSolution sol = integrate(ode, s0, u0, up0, s1, opt);

    if (!c.out.empty()) {
        std::ofstream os = open_out_file(c.out);
        write_profile_csv(os, sol);
    } else {
        write_profile_csv(std::cout, sol);
    }
    std::ostream& rep = c.out.empty() ? std::cerr : std::cout;
    rep << "stop: " << stop_reason_name(sol.stop) << " after " << sol.nodes.size()
        << " nodes, s in [" << sol.s_begin() << ", " << sol.s_end() << "]\n";

    if (!lift) return 0;
    SolitonFamily lifted = lift_cylinder(ode, sol);
    auto [w, h] = parse_grid(c.grid);
    GridReport gr = max_residual(lifted.surface, ode.velocity, w, h);
    rep << "lift velocity: (" << ode.velocity.x << ", " << ode.velocity.y << ", "
        << ode.velocity.z << ")\n";
    rep << "lift max |2H - <N,v>| = " << gr.max_abs_r1 << " (tol " << c.tol << ")\n";
    return gr.max_abs_r1 <= c.tol ? 0 : 1;
}

int cmd_classify(const std::string& spec_file, const std::string& family,
                 const std::optional<MVec3>& v_flag, const std::string& expect,
                 std::vector<std::string> tokens, const Common& c) {
    RuledSurfaceSpec spec;
    std::optional<MVec3> given_v = v_flag;
    if (!spec_file.empty()) {
        ClassifyInput input = load_classify_input_file(spec_file);
        spec = input.spec;
        if (!given_v) given_v = input.velocity;
    } else if (!family.empty()) {
        spec = family_from_tokens(family, std::move(tokens)).spec;
    } else {
        throw Error(ErrorKind::ParseError, "classify needs a spec file or --family NAME");
    }

    ClassificationReport rep = classify(spec);
    std::cout << format_report(rep);

    if (given_v) {
        auto [w, h] = parse_grid(c.grid);
        GridReport gr = max_residual(ruled_surface(spec), *given_v, w, h);
        std::printf("given velocity (%.12g, %.12g, %.12g): max |2H - <N,v>| = %.6e\n",
                    given_v->x, given_v->y, given_v->z, gr.max_abs_r1);
    }
    if (!expect.empty() && expect != case_label_name(rep.label)) {
        std::printf("expected %s\n", expect.c_str());
        return 1;
    }
    return 0;
}

int cmd_fit_velocity(const std::string& family, const std::string& spec_file,
                     std::vector<std::string> tokens, const Common& c) {
    auto [w, h] = parse_grid(c.grid);
    std::optional<SolitonFamily> fam;
    ParametricSurface surf;
    if (!spec_file.empty()) {
        surf = ruled_surface(load_classify_input_file(spec_file).spec);
    } else {
        fam = family_from_tokens(family, std::move(tokens));
        surf = fam->surface;
    }
    VelocityFit fit = solve_velocity(surf, w, h);
    std::printf("fitted velocity: (%.12g, %.12g, %.12g)\n", fit.v.x, fit.v.y, fit.v.z);
    std::printf("fit rms = %.6e, rank = %d, nullspace dim = %d\n", fit.fit_rms, fit.rank,
                fit.nullspace_dim);
    for (const MVec3& n : fit.nullspace)
        std::printf("nullspace direction: (%.12g, %.12g, %.12g)\n", n.x, n.y, n.z);
    if (fam) {
        MVec3 vt = fam->velocity;
        // Components along the fit nullspace are invisible to the equations;
        // compare what is actually determined.
        for (const MVec3& n : fit.nullspace) {
            double along = vt.x * n.x + vt.y * n.y + vt.z * n.z;
            vt = vt - n * along;
        }
        std::printf("catalog velocity projected onto the determined space: "
                    "(%.12g, %.12g, %.12g)\n",
                    vt.x, vt.y, vt.z);
        std::printf("difference |fit - projected| = %.6e\n", euclid_norm(fit.v - vt));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ruled translating-soliton toolkit for Minkowski 3-space"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file; flags override it");

    Common c_sample, c_residual, c_ode, c_classify, c_fit;

    auto* list = app.add_subcommand("list", "catalog of closed-form families");
    std::string list_family;
    bool list_json = false;
    list->add_option("--family", list_family, "show one family's parameter schema");
    list->add_flag("--json", list_json, "machine-readable output");

    auto* sample = app.add_subcommand("sample", "evaluate a family on a grid (csv or obj)");
    std::string sample_family;
    sample->add_option("family", sample_family, "catalog family name")->required();
    add_common(sample, c_sample);
    sample->allow_extras();

    auto* residual = app.add_subcommand("residual", "soliton residual of a family or spec file");
    std::string residual_family, residual_spec, residual_v;
    residual->add_option("family", residual_family, "catalog family name");
    residual->add_option("--spec", residual_spec, "ruled patch description file");
    residual->add_option("--v", residual_v, "velocity override, e.g. 1,0,0");
    add_common(residual, c_residual);
    residual->allow_extras();

    auto* ode = app.add_subcommand("solve-ode", "integrate a profile equation");
    std::string ode_name, ode_init = "0,0", ode_range;
    std::optional<double> ov1, ov2, ov3, ofixed;
    double ode_tol = 1e-10;
    bool ode_lift = false;
    ode->add_option("ode", ode_name, "eq31-spacelike | eq31-timelike | eq32 | gr0-spacelike | "
                                     "gr0-timelike")
        ->required();
    ode->add_option("--v1", ov1, "velocity x component");
    ode->add_option("--v2", ov2, "velocity y component");
    ode->add_option("--v3", ov3, "velocity z component");
    ode->add_option("--init", ode_init, "u0,up0 initial data")->capture_default_str();
    ode->add_option("--range", ode_range, "s0,s1 integration range")->required();
    ode->add_option("--ode-tol", ode_tol, "local error tolerance")->capture_default_str();
    ode->add_option("--fixed-step", ofixed, "disable step control, use this step");
    ode->add_flag("--lift", ode_lift, "extrude the solution and check its soliton residual");
    add_common(ode, c_ode);

    auto* classify_cmd = app.add_subcommand("classify", "match a ruled patch against the "
                                                        "classification");
    std::string classify_spec, classify_family, classify_v, classify_expect;
    classify_cmd->add_option("spec", classify_spec, "ruled patch description file");
    classify_cmd->add_option("--family", classify_family, "classify a catalog family instead");
    classify_cmd->add_option("--v", classify_v, "also check this velocity");
    classify_cmd->add_option("--expect", classify_expect,
                             "exit 1 unless the case label matches");
    add_common(classify_cmd, c_classify);
    classify_cmd->allow_extras();

    auto* fitv = app.add_subcommand("fit-velocity", "least-squares translation velocity");
    std::string fit_family, fit_spec;
    fitv->add_option("family", fit_family, "catalog family name");
    fitv->add_option("--spec", fit_spec, "ruled patch description file");
    add_common(fitv, c_fit);
    fitv->allow_extras();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (list->parsed()) return cmd_list(list_family, list_json);
        if (sample->parsed())
            return cmd_sample(family_from_tokens(sample_family, sample->remaining()), c_sample);
        if (residual->parsed()) {
            if (residual_family.empty() && residual_spec.empty())
                throw Error(ErrorKind::ParseError, "residual needs a family name or --spec");
            std::optional<MVec3> v;
            if (!residual_v.empty()) v = parse_vec_flag(residual_v);
            return cmd_residual(residual_family, residual_spec, v, residual->remaining(),
                                c_residual);
        }
        if (ode->parsed())
            return cmd_solve_ode(ode_name, ov1, ov2, ov3, ode_init, ode_range, ode_tol, ofixed,
                                 ode_lift, c_ode);
        if (classify_cmd->parsed()) {
            std::optional<MVec3> v;
            if (!classify_v.empty()) v = parse_vec_flag(classify_v);
            return cmd_classify(classify_spec, classify_family, v, classify_expect,
                                classify_cmd->remaining(), c_classify);
        }
        if (fitv->parsed()) {
            if (fit_family.empty() && fit_spec.empty())
                throw Error(ErrorKind::ParseError, "fit-velocity needs a family name or --spec");
            return cmd_fit_velocity(fit_family, fit_spec, fitv->remaining(), c_fit);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
