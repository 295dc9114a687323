// Command-line front end: curve/surface evaluation and export, the
// verification suite, quadrature reports, the rear-track comparison, and
// subcritical period data. One command per process; outputs are
// byte-reproducible for identical configs.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ctrx/frenet.hpp"
#include "ctrx/mesh.hpp"
#include "ctrx/num_format.hpp"
#include "ctrx/quadrature.hpp"
#include "ctrx/rear_track.hpp"
#include "ctrx/surface.hpp"
#include "ctrx/tractrix.hpp"
#include "ctrx/verify.hpp"

using json = nlohmann::ordered_json;
using namespace ctrx;

namespace {

constexpr int kSchemaVersion = 1;
constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct FamilyOpts {
    double R = kUnset;
    double selector = kUnset;
    double c1 = kUnset, c2 = kUnset;
    int branch = +1;
};

struct EvalCurveOpts {
    FamilyOpts fam;
    double tmin = -5.0, tmax = 5.0;
    int samples = 401;
    std::string out;
};

struct EvalSurfaceOpts {
    double R = kUnset;
    int branch = +1;
    double tmin = kUnset, tmax = kUnset, amin = kUnset, amax = kUnset;
    int nt = 96, na = 96;
    std::string out;
};

struct VerifyOpts {
    FamilyOpts fam;
    int samples = 1000;
    std::uint64_t seed = 20240801;
    std::string out;
};

struct QuadOpts {
    double R = kUnset;
    int branch = +1;
    double tol = 1e-4;
    std::string regime;  // optional cross-check against R
    std::string out;
};

struct RearTrackOpts {
    FamilyOpts fam;
    double t0 = 0.5, t1 = 5.5, h = 1e-3;
    double tol = 1e-6;
    std::string out;
};

struct PetalsOpts {
    double R = kUnset;
    std::string nu;  // "p/q"
    std::string out;
};

void add_family_options(CLI::App* cmd, FamilyOpts& fam, bool require_R = true) {
    auto* r = cmd->add_option("--R", fam.R, "directrix radius");
    if (require_R) r->required();
    cmd->add_option("--selector", fam.selector, "constraint-curve parameter for (c1, c2)");
    cmd->add_option("--c1", fam.c1, "explicit constant c1");
    cmd->add_option("--c2", fam.c2, "explicit constant c2");
    cmd->add_option("--branch", fam.branch, "subcritical component sign (+1 or -1)");
}

TractrixParams resolve_params(const FamilyOpts& fam) {
    if (std::isnan(fam.R)) throw std::invalid_argument("missing R");
    const bool have_c = !std::isnan(fam.c1) || !std::isnan(fam.c2);
    if (have_c) {
        if (std::isnan(fam.c1) || std::isnan(fam.c2)) {
            throw std::invalid_argument("c1 and c2 must be given together");
        }
        return params_from_constants(fam.R, fam.c1, fam.c2);
    }
    if (std::isnan(fam.selector)) {
        throw std::invalid_argument("give either --selector or both --c1 and --c2");
    }
    return make_params(fam.R, fam.selector, fam.branch);
}

json params_json(const TractrixParams& p) {
    return {{"R", p.R},
            {"c1", p.c1},
            {"c2", p.c2},
            {"lambda", p.lambda},
            {"regime", regime_name(p.regime)}};
}

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << body;
}

// JSON reports go to --out when given, stdout otherwise.
void emit_report(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        write_text(out, j.dump(2) + "\n");
    }
}

int run_eval_curve(const EvalCurveOpts& o) {
    const TractrixParams p = resolve_params(o.fam);
    if (!(o.tmax >= o.tmin) || o.samples < 2) {
        throw std::invalid_argument("eval-curve needs tmax >= tmin and samples >= 2");
    }
    std::string body = "t,x,y,z,speed,kappa,tau\n";
    for (int i = 0; i < o.samples; ++i) {
        const double t = o.tmin + (o.tmax - o.tmin) * i / (o.samples - 1);
        const CurveSample s = eval_curve(p, t);
        double kappa = std::numeric_limits<double>::quiet_NaN();
        double tau = std::numeric_limits<double>::quiet_NaN();
        if (std::abs(s.xi.y) >= 1e-10) {
            const FrenetData fd = frenet(p, t);
            kappa = fd.kappa;
            tau = fd.tau;
        }
        body += format_double(t) + ',' + format_double(s.f.x) + ',' + format_double(s.f.y) +
                ',' + format_double(s.f.z) + ',' + format_double(s.speed) + ',' +
                format_double(kappa) + ',' + format_double(tau) + '\n';
    }
    if (o.out.empty()) {
        std::cout << body;
    } else {
        write_text(o.out, body);
    }
    return 0;
}

int run_eval_surface(const EvalSurfaceOpts& o) {
    if (std::isnan(o.R)) throw std::invalid_argument("missing R");
    if (o.out.empty()) throw std::invalid_argument("eval-surface needs --out <mesh.obj>");
    SurfacePatch s = make_surface(o.R, o.branch);
    if (!std::isnan(o.tmin) || !std::isnan(o.tmax) || !std::isnan(o.amin) ||
        !std::isnan(o.amax)) {
        Interval t_range = s.t_range, a_range = s.alpha_range;
        if (!std::isnan(o.tmin)) t_range.lo = o.tmin;
        if (!std::isnan(o.tmax)) t_range.hi = o.tmax;
        if (!std::isnan(o.amin)) a_range.lo = o.amin;
        if (!std::isnan(o.amax)) a_range.hi = o.amax;
        s = make_surface(o.R, o.branch, t_range, a_range);
    }
    const SurfaceMesh mesh = build_surface_mesh(s, o.nt, o.na);
    std::ostringstream obj;
    write_obj(obj, mesh);
    write_text(o.out, obj.str());

    json side;
    side["schema"] = kSchemaVersion;
    side["command"] = "eval-surface";
    side["R"] = s.R;
    side["regime"] = regime_name(s.regime);
    side["branch"] = s.branch;
    side["t_range"] = {s.t_range.lo, s.t_range.hi};
    side["alpha_range"] = {s.alpha_range.lo, s.alpha_range.hi};
    side["nt"] = o.nt;
    side["na"] = o.na;
    json objects = json::array();
    for (const auto& ob : mesh.objects) objects.push_back(ob.name);
    side["objects"] = objects;
    json edges = json::array();
    for (const auto& line : cuspidal_edge_polylines(s, o.na)) {
        json pl = json::array();
        for (const Vec3d& v : line) pl.push_back({v.x, v.y, v.z});
        edges.push_back(pl);
    }
    side["cuspidal_edges"] = edges;
    write_text(o.out + ".json", side.dump(2) + "\n");
    return 0;
}

int run_verify(const VerifyOpts& o) {
    const TractrixParams p = resolve_params(o.fam);
    const VerifyReport report = run_verification(p, o.samples, o.seed);
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "verify";
    j["params"] = params_json(p);
    j["seed"] = o.seed;
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
        checks.push_back({{"check", c.check},
                          {"samples", c.samples},
                          {"max_residual", c.max_residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    }
    j["checks"] = checks;
    j["pass"] = report.pass;
    emit_report(j, o.out);
    if (!report.pass) {
        for (const CheckResult& c : report.checks) {
            if (!c.pass) {
                std::cerr << "verify: " << c.check << " failed, max_residual "
                          << format_double(c.max_residual) << " > tolerance "
                          << format_double(c.tolerance) << '\n';
                break;
            }
        }
        return 1;
    }
    return 0;
}

void check_regime_flag(const std::string& flag, Regime actual) {
    if (flag.empty()) return;
    if (flag != regime_name(actual)) {
        throw std::invalid_argument("requested regime '" + flag + "' but R implies '" +
                                    regime_name(actual) + "'");
    }
}

int run_quadrature(const QuadOpts& o, bool volume) {
    if (std::isnan(o.R)) throw std::invalid_argument("missing R");
    const SurfacePatch s = make_surface(o.R, o.branch);
    check_regime_flag(o.regime, s.regime);
    const QuadratureResult r =
        volume ? enclosed_volume(s, o.tol) : surface_area(s, o.tol);

    std::optional<double> target;
    if (volume) {
        if (s.regime != Regime::Subcritical) target = 2.0 * std::numbers::pi / 3.0;
    } else {
        target = (s.regime == Regime::Subcritical) ? subcritical_unit_area_closed_form(o.R)
                                                   : 4.0 * std::numbers::pi;
    }
    const bool pass = r.converged && (!target || std::abs(r.value - *target) <= o.tol);

    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = volume ? "volume" : "area";
    j["R"] = o.R;
    j["regime"] = regime_name(s.regime);
    if (s.regime == Regime::Subcritical) j["branch"] = s.branch;
    j["tol"] = o.tol;
    j["value"] = r.value;
    j["error_estimate"] = r.error_estimate;
    j["evaluations"] = r.evaluations;
    j["converged"] = r.converged;
    j["truncation"] = r.truncation;
    if (target) {
        j["target"] = *target;
    } else {
        j["target"] = nullptr;
    }
    j["pass"] = pass;
    emit_report(j, o.out);
    if (!pass) {
        const double residual = target ? std::abs(r.value - *target) : r.error_estimate;
        std::cerr << (volume ? "volume" : "area") << ": residual " << format_double(residual)
                  << " exceeds tol " << format_double(o.tol) << '\n';
        return 1;
    }
    return 0;
}

int run_rear_track(const RearTrackOpts& o) {
    const TractrixParams p = resolve_params(o.fam);
    if (!(o.h > 0.0)) throw std::invalid_argument("step size must be positive");
    const Directrix d = circle_directrix(p.R);
    const RearTrackResult run = integrate_rear_track(d, eval_curve(p, o.t0).f, o.t0, o.t1, o.h);
    double max_dev = 0.0;
    for (const RearTrackState& st : run.states) {
        max_dev = std::max(max_dev, distance(st.x, eval_curve(p, st.t).f));
    }
    const bool pass = max_dev <= o.tol;
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "rear-track";
    j["params"] = params_json(p);
    j["t0"] = o.t0;
    j["t1"] = o.t1;
    j["h"] = o.h;
    j["steps"] = static_cast<long long>(run.states.size()) - 1;
    j["max_deviation_vs_closed_form"] = max_dev;
    j["max_rod_drift"] = run.max_rod_drift;
    j["max_renorm_displacement"] = run.max_renorm_displacement;
    j["crossed_cusp"] = run.crossed_cusp;
    j["tol"] = o.tol;
    j["pass"] = pass;
    emit_report(j, o.out);
    if (!pass) {
        std::cerr << "rear-track: deviation " << format_double(max_dev) << " exceeds tol "
                  << format_double(o.tol) << '\n';
        return 1;
    }
    return 0;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("nu must look like p/q");
    const long long num = std::stoll(text.substr(0, slash));
    const long long den = std::stoll(text.substr(slash + 1));
    if (num <= 0 || den <= 0) throw std::invalid_argument("nu must be a positive rational");
    return {num, den};
}

int run_petals(const PetalsOpts& o) {
    std::optional<Rational> nu;
    double R = o.R;
    if (!o.nu.empty()) {
        nu = parse_rational(o.nu);
        const double value = static_cast<double>(nu->num) / static_cast<double>(nu->den);
        if (!(value > 0.0 && value < 1.0)) {
            throw std::invalid_argument("nu must lie in (0, 1) for a subcritical curve");
        }
        const double implied = std::sqrt(1.0 - value * value);
        if (std::isnan(R)) {
            R = implied;
        } else if (std::abs(std::sqrt(1.0 - R * R) - value) > 1e-12) {
            throw std::invalid_argument("given R is inconsistent with nu");
        }
    }
    if (std::isnan(R)) throw std::invalid_argument("petals needs --R or --nu");
    const TractrixParams p = make_params(R, 0.0);
    const PeriodData d = period_data(p, nu);

    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "petals";
    j["R"] = R;
    j["period"] = d.period;
    j["phi"] = d.phi;
    j["closed"] = d.closed;
    if (d.petals) {
        j["petals"] = *d.petals;
        j["windings"] = *d.windings;
    } else {
        j["petals"] = nullptr;
        j["windings"] = nullptr;
        // a continued-fraction hint, never an assertion of closedness
        if (const auto hint = suggest_rational(std::sqrt(1.0 - R * R), 64, 1e-9)) {
            j["nu_suggestion"] = std::to_string(hint->num) + "/" + std::to_string(hint->den);
        } else {
            j["nu_suggestion"] = nullptr;
        }
    }
    emit_report(j, o.out);
    return 0;
}

// --- config-file dispatch ----------------------------------------------------

template <class T>
void load(const json& j, const char* key, T& into) {
    if (j.contains(key)) into = j.at(key).get<T>();
}

void load_family(const json& j, FamilyOpts& fam) {
    load(j, "R", fam.R);
    load(j, "selector", fam.selector);
    load(j, "c1", fam.c1);
    load(j, "c2", fam.c2);
    load(j, "branch", fam.branch);
}

int run_from_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    std::string command;
    load(j, "command", command);
    if (command == "eval-curve") {
        EvalCurveOpts o;
        load_family(j, o.fam);
        load(j, "tmin", o.tmin);
        load(j, "tmax", o.tmax);
        load(j, "samples", o.samples);
        load(j, "out", o.out);
        return run_eval_curve(o);
    }
    if (command == "eval-surface") {
        EvalSurfaceOpts o;
        load(j, "R", o.R);
        load(j, "branch", o.branch);
        load(j, "tmin", o.tmin);
        load(j, "tmax", o.tmax);
        load(j, "amin", o.amin);
        load(j, "amax", o.amax);
        load(j, "nt", o.nt);
        load(j, "na", o.na);
        load(j, "out", o.out);
        return run_eval_surface(o);
    }
    if (command == "verify") {
        VerifyOpts o;
        load_family(j, o.fam);
        load(j, "samples", o.samples);
        load(j, "seed", o.seed);
        load(j, "out", o.out);
        return run_verify(o);
    }
    if (command == "area" || command == "volume") {
        QuadOpts o;
        load(j, "R", o.R);
        load(j, "branch", o.branch);
        load(j, "tol", o.tol);
        load(j, "regime", o.regime);
        load(j, "out", o.out);
        return run_quadrature(o, command == "volume");
    }
    if (command == "rear-track") {
        RearTrackOpts o;
        load_family(j, o.fam);
        load(j, "t0", o.t0);
        load(j, "t1", o.t1);
        load(j, "h", o.h);
        load(j, "step", o.h);
        load(j, "tol", o.tol);
        load(j, "out", o.out);
        return run_rear_track(o);
    }
    if (command == "petals") {
        PetalsOpts o;
        load(j, "R", o.R);
        load(j, "nu", o.nu);
        load(j, "out", o.out);
        return run_petals(o);
    }
    throw std::invalid_argument("config: unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular tractrices and pseudospheres: evaluation, verification, quadrature"};
    app.require_subcommand(0, 1);
    std::string config_path;
    app.add_option("--config", config_path, "run one command described by a JSON file");

    EvalCurveOpts curve_opts;
    auto* curve = app.add_subcommand("eval-curve", "sample a tractrix into CSV");
    add_family_options(curve, curve_opts.fam);
    curve->add_option("--tmin", curve_opts.tmin);
    curve->add_option("--tmax", curve_opts.tmax);
    curve->add_option("--samples", curve_opts.samples);
    curve->add_option("--out", curve_opts.out, "CSV path (stdout if omitted)");

    EvalSurfaceOpts surf_opts;
    auto* surf = app.add_subcommand("eval-surface", "triangulate a pseudosphere patch into OBJ");
    surf->add_option("--R", surf_opts.R)->required();
    surf->add_option("--branch", surf_opts.branch);
    surf->add_option("--tmin", surf_opts.tmin);
    surf->add_option("--tmax", surf_opts.tmax);
    surf->add_option("--amin", surf_opts.amin);
    surf->add_option("--amax", surf_opts.amax);
    surf->add_option("--nt", surf_opts.nt);
    surf->add_option("--na", surf_opts.na);
    surf->add_option("--out", surf_opts.out, "OBJ path; sidecar JSON lands at <out>.json")
        ->required();

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "run the invariant suite for one member");
    add_family_options(verify, verify_opts.fam);
    verify->add_option("--samples", verify_opts.samples);
    verify->add_option("--seed", verify_opts.seed);
    verify->add_option("--out", verify_opts.out, "JSON report path (stdout if omitted)");

    QuadOpts area_opts;
    auto* area = app.add_subcommand("area", "surface area vs the paper target");
    area->add_option("--R", area_opts.R)->required();
    area->add_option("--branch", area_opts.branch);
    area->add_option("--tol", area_opts.tol);
    area->add_option("--regime", area_opts.regime);
    area->add_option("--out", area_opts.out);

    QuadOpts vol_opts;
    auto* vol = app.add_subcommand("volume", "enclosed volume (with multiplicity)");
    vol->add_option("--R", vol_opts.R)->required();
    vol->add_option("--branch", vol_opts.branch);
    vol->add_option("--tol", vol_opts.tol);
    vol->add_option("--regime", vol_opts.regime);
    vol->add_option("--out", vol_opts.out);

    RearTrackOpts rear_opts;
    auto* rear = app.add_subcommand("rear-track", "integrate the bicycle ODE vs the closed form");
    add_family_options(rear, rear_opts.fam);
    rear->add_option("--t0", rear_opts.t0);
    rear->add_option("--t1", rear_opts.t1);
    rear->add_option("--step", rear_opts.h, "integration step");
    rear->add_option("--tol", rear_opts.tol);
    rear->add_option("--out", rear_opts.out);

    PetalsOpts petals_opts;
    auto* petals = app.add_subcommand("petals", "subcritical period, closedness, petal counts");
    petals->add_option("--R", petals_opts.R);
    petals->add_option("--nu", petals_opts.nu, "sqrt(1-R^2) as an exact rational p/q");
    petals->add_option("--out", petals_opts.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) return run_from_config(config_path);
        if (curve->parsed()) return run_eval_curve(curve_opts);
        if (surf->parsed()) return run_eval_surface(surf_opts);
        if (verify->parsed()) return run_verify(verify_opts);
        if (area->parsed()) return run_quadrature(area_opts, false);
        if (vol->parsed()) return run_quadrature(vol_opts, true);
        if (rear->parsed()) return run_rear_track(rear_opts);
        if (petals->parsed()) return run_petals(petals_opts);
        std::cerr << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
