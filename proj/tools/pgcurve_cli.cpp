// pgcurve: curves in the three-dimensional pseudo-Galilean space from the
// command line -- vector classification, Frenet data, synthesis from natural
// equations, Smarandache curves and the built-in verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 quadrature failure, 4 admissibility/degeneracy failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgcurve/curve.hpp"
#include "pgcurve/errors.hpp"
#include "pgcurve/expression.hpp"
#include "pgcurve/fixtures.hpp"
#include "pgcurve/io.hpp"
#include "pgcurve/natural.hpp"
#include "pgcurve/smarandache.hpp"
#include "pgcurve/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

int exit_code_for(pg::Errc code) {
    switch (code) {
    case pg::Errc::ToleranceNotReached:
    case pg::Errc::NumericallyUnstable:
        return 3;
    case pg::Errc::DegenerateCurvature:
    case pg::Errc::LightlikeNormal:
    case pg::Errc::NonPositiveCurvature:
    case pg::Errc::ZeroNormCombination:
        return 4;
    default:
        return 2; // InvalidArgument, OutOfDomain, InvalidFamilyParameter
    }
}

struct GlobalOptions {
    std::string output = "-";
    std::string format = "csv";
    int precision = 17;
    double tol = 0.0; // quadrature abs_tol; 0 means "not set"
    std::vector<double> range;
    int nodes = 101;
    std::string config_path;
};

// Tolerance precedence: --tol flag, then PGCURVE_QUAD_TOL, then the default.
pg::QuadratureConfig quadrature_config(const GlobalOptions& g) {
    pg::QuadratureConfig cfg;
    if (g.tol > 0.0) {
        cfg.abs_tol = g.tol;
        return cfg;
    }
    if (const char* env = std::getenv("PGCURVE_QUAD_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0))
            pg::raise(pg::Errc::InvalidArgument,
                      "PGCURVE_QUAD_TOL must be a positive number");
        cfg.abs_tol = v;
    }
    return cfg;
}

// A curve source resolved from a JSON config.  Ranges are injected late so
// that --range can override the config.
struct Source {
    std::function<pg::CurveModel(double, double)> make_model;
    std::function<pg::NaturalEquations(double, double)> make_natural;
    bool prefer_natural = false; // family/natural configs: frames via synthesis
    bool has_default_range = false;
    double default_lo = 0.0;
    double default_hi = 0.0;
    ordered_json echo; // config contents, echoed into JSON meta
};

pg::CausalCharacter parse_character(const std::string& text) {
    if (text == "spacelike") return pg::CausalCharacter::Spacelike;
    if (text == "timelike") return pg::CausalCharacter::Timelike;
    pg::raise(pg::Errc::InvalidArgument,
              "config: character must be \"spacelike\" or \"timelike\", got \"" + text + "\"");
}

std::function<double(double)> parse_scalar_map(const ordered_json& config,
                                               const char* key) {
    if (!config.contains(key))
        pg::raise(pg::Errc::InvalidArgument,
                  std::string("config: missing required key \"") + key + "\"");
    const auto& v = config.at(key);
    if (v.is_number()) {
        const double c = v.get<double>();
        return [c](double) { return c; };
    }
    if (v.is_string())
        return pg::Expression::parse(v.get<std::string>());
    pg::raise(pg::Errc::InvalidArgument,
              std::string("config: \"") + key + "\" must be a number or an expression string");
}

// Curves given as y(s), z(s) expressions are evaluated on a slightly padded
// domain so that difference stencils remain inside it at the range ends.
pg::CurveModel expression_model(const pg::Expression& ey, const pg::Expression& ez,
                                double lo, double hi) {
    const double pad = 3e-3 * std::max({1.0, std::abs(lo), std::abs(hi)});
    pg::CurveModel model;
    model.s_lo = lo - pad;
    model.s_hi = hi + pad;
    model.kind = pg::Parametrization::ArcLength;
    model.position = [ey, ez](double s) { return pg::Vec3{s, ey(s), ez(s)}; };
    return model;
}

Source load_source(const std::string& path) {
    if (path.empty())
        pg::raise(pg::Errc::InvalidArgument, "this command requires --config");
    std::ifstream in(path);
    if (!in)
        pg::raise(pg::Errc::InvalidArgument, "cannot open config file: " + path);
    ordered_json config;
    try {
        config = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        pg::raise(pg::Errc::InvalidArgument, std::string("config: ") + e.what());
    }

    Source src;
    src.echo = config;
    if (config.contains("range")) {
        const auto& r = config.at("range");
        if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
            pg::raise(pg::Errc::InvalidArgument, "config: range must be [lo, hi]");
        src.default_lo = r[0].get<double>();
        src.default_hi = r[1].get<double>();
        src.has_default_range = true;
    }

    if (config.contains("example")) {
        const int id = config.at("example").get<int>();
        const pg::ReferenceExample& ex = pg::reference_example(id);
        if (!src.has_default_range) {
            src.default_lo = ex.window_lo;
            src.default_hi = ex.window_hi;
            src.has_default_range = true;
        }
        src.make_model = [&ex](double, double) { return ex.curve; };
        src.make_natural = [&ex](double lo, double hi) {
            pg::NaturalEquations neq = ex.natural;
            neq.s_lo = lo;
            neq.s_hi = hi;
            return neq;
        };
        return src;
    }

    if (config.contains("curve")) {
        const auto& c = config.at("curve");
        const auto ey = pg::Expression::parse(c.at("y").get<std::string>());
        const auto ez = pg::Expression::parse(c.at("z").get<std::string>());
        src.make_model = [ey, ez](double lo, double hi) {
            return expression_model(ey, ez, lo, hi);
        };
        return src;
    }

    if (config.contains("family")) {
        const std::string family = config.at("family").get<std::string>();
        const pg::CausalCharacter character =
            parse_character(config.value("character", "spacelike"));
        const ordered_json params = config.value("params", ordered_json::object());

        if (family == "natural") {
            const auto kappa = parse_scalar_map(config, "kappa");
            const auto tau = parse_scalar_map(config, "tau");
            src.make_natural = [kappa, tau, character](double lo, double hi) {
                return pg::NaturalEquations{kappa, tau, character, lo, hi};
            };
        } else {
            pg::FamilySpec spec;
            spec.character = character;
            if (family == "general_helix") {
                spec.family = pg::CurveFamily::GeneralHelix;
                spec.m = params.value("m", 0.0);
                spec.kappa_fn = parse_scalar_map(config, "kappa");
            } else if (family == "circular_helix") {
                spec.family = pg::CurveFamily::CircularHelix;
                spec.kappa0 = params.value("kappa0", 0.0);
                spec.tau0 = params.value("tau0", 0.0);
            } else if (family == "salkowski") {
                spec.family = pg::CurveFamily::Salkowski;
                spec.kappa0 = params.value("kappa0", 0.0);
                spec.tau_fn = parse_scalar_map(config, "tau");
            } else if (family == "anti_salkowski") {
                spec.family = pg::CurveFamily::AntiSalkowski;
                spec.tau0 = params.value("tau0", 0.0);
                spec.kappa_fn = parse_scalar_map(config, "kappa");
            } else {
                pg::raise(pg::Errc::InvalidArgument,
                          "config: unknown family \"" + family + "\"");
            }
            src.make_natural = [spec](double lo, double hi) {
                pg::FamilySpec s = spec;
                s.s_lo = lo;
                s.s_hi = hi;
                return pg::family_to_natural(s);
            };
        }
        src.prefer_natural = true;
        return src;
    }

    pg::raise(pg::Errc::InvalidArgument,
              "config: expected one of \"example\", \"curve\" or \"family\"");
}

void resolve_range(const Source& src, const GlobalOptions& g, double& lo, double& hi) {
    if (g.range.size() == 2) {
        lo = g.range[0];
        hi = g.range[1];
    } else if (src.has_default_range) {
        lo = src.default_lo;
        hi = src.default_hi;
    } else {
        pg::raise(pg::Errc::InvalidArgument,
                  "no sampling range: pass --range LO HI or put \"range\" in the config");
    }
    if (!(lo < hi))
        pg::raise(pg::Errc::InvalidArgument, "range: lo must be strictly below hi");
}

ordered_json base_meta(const char* command, const GlobalOptions& g,
                       double lo, double hi) {
    ordered_json meta;
    meta["tool"] = "pgcurve";
    meta["version"] = kToolVersion;
    meta["command"] = command;
    meta["range"] = {lo, hi};
    meta["nodes"] = g.nodes;
    meta["precision"] = g.precision;
    return meta;
}

void emit(const GlobalOptions& g, const pg::SampleTable& table, const ordered_json& meta) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (g.output != "-") {
        file.open(g.output, std::ios::binary);
        if (!file)
            pg::raise(pg::Errc::InvalidArgument, "cannot open output file: " + g.output);
        os = &file;
    }
    if (g.format == "csv")
        pg::write_csv(*os, table, g.precision);
    else
        pg::write_json(*os, table, meta, g.precision);
}

void emit_text(const GlobalOptions& g, const std::string& text) {
    if (g.output != "-") {
        std::ofstream file(g.output, std::ios::binary);
        if (!file)
            pg::raise(pg::Errc::InvalidArgument, "cannot open output file: " + g.output);
        file << text;
    } else {
        std::cout << text;
    }
}

// The model used to evaluate/frame a source over [lo, hi].
pg::CurveModel resolve_model(const Source& src, const pg::QuadratureConfig& cfg,
                             double lo, double hi, int nodes) {
    if (src.make_model) return src.make_model(lo, hi);
    const auto grid = pg::uniform_grid(lo, hi, nodes);
    return pg::CurveSynthesizer(src.make_natural(lo, hi), grid, cfg).curve_model();
}

pg::SampleTable frame_table(const pg::CurveModel& model, const std::vector<double>& grid) {
    pg::SampleTable table;
    table.columns = {"s", "x", "y", "z", "kappa", "tau",
                     "e1x", "e1y", "e1z", "e2x", "e2y", "e2z",
                     "e3x", "e3y", "e3z", "epsilon"};
    for (double s : grid) {
        const pg::Vec3 p = pg::eval_curve(model, s);
        const pg::Frame f = pg::frenet_frame(model, s);
        table.rows.push_back({s, p.x, p.y, p.z, f.kappa, f.tau,
                              f.e1.x, f.e1.y, f.e1.z, f.e2.x, f.e2.y, f.e2.z,
                              f.e3.x, f.e3.y, f.e3.z, static_cast<double>(f.epsilon)});
    }
    return table;
}

int cmd_classify(const GlobalOptions& g, double x, double y, double z) {
    emit_text(g, std::string(pg::to_string(pg::classify({x, y, z}))) + "\n");
    return 0;
}

int cmd_eval(const GlobalOptions& g) {
    const Source src = load_source(g.config_path);
    const pg::QuadratureConfig cfg = quadrature_config(g);
    double lo = 0.0, hi = 0.0;
    resolve_range(src, g, lo, hi);
    const auto grid = pg::uniform_grid(lo, hi, g.nodes);
    const pg::CurveModel model = resolve_model(src, cfg, lo, hi, g.nodes);

    pg::SampleTable table;
    table.columns = {"s", "x", "y", "z"};
    for (double s : grid) {
        const pg::Vec3 p = pg::eval_curve(model, s);
        table.rows.push_back({s, p.x, p.y, p.z});
    }
    ordered_json meta = base_meta("eval", g, lo, hi);
    meta["config"] = src.echo;
    emit(g, table, meta);
    return 0;
}

int cmd_frenet(const GlobalOptions& g) {
    const Source src = load_source(g.config_path);
    const pg::QuadratureConfig cfg = quadrature_config(g);
    double lo = 0.0, hi = 0.0;
    resolve_range(src, g, lo, hi);
    const auto grid = pg::uniform_grid(lo, hi, g.nodes);
    const pg::CurveModel model = resolve_model(src, cfg, lo, hi, g.nodes);

    ordered_json meta = base_meta("frenet", g, lo, hi);
    meta["config"] = src.echo;
    emit(g, frame_table(model, grid), meta);
    return 0;
}

int cmd_synthesize(const GlobalOptions& g) {
    const Source src = load_source(g.config_path);
    if (!src.make_natural)
        pg::raise(pg::Errc::InvalidArgument,
                  "synthesize needs natural equations: use a family/natural/example config");
    const pg::QuadratureConfig cfg = quadrature_config(g);
    double lo = 0.0, hi = 0.0;
    resolve_range(src, g, lo, hi);
    const auto grid = pg::uniform_grid(lo, hi, g.nodes);
    const pg::CurveSynthesizer engine(src.make_natural(lo, hi), grid, cfg);

    // kappa and tau columns are recomputed from the synthesized curve, not
    // echoed from the inputs: the column itself demonstrates the round trip.
    ordered_json meta = base_meta("synthesize", g, lo, hi);
    meta["config"] = src.echo;
    emit(g, frame_table(engine.curve_model(), grid), meta);
    return 0;
}

int cmd_smarandache(const GlobalOptions& g, const std::string& kind_text) {
    pg::SmarandacheKind kind;
    if (kind_text == "e1e2") kind = pg::SmarandacheKind::E1E2;
    else if (kind_text == "e1e3") kind = pg::SmarandacheKind::E1E3;
    else if (kind_text == "e1e2e3") kind = pg::SmarandacheKind::E1E2E3;
    else if (kind_text == "e2e3") {
        std::cerr << "error: e2e3 is not constructible: e2 + e3 is a lightlike "
                     "combination (zero norm) for every admissible frame and "
                     "cannot be normalized\n";
        return 2;
    } else {
        std::cerr << "error: unknown kind \"" << kind_text
                  << "\" (expected e1e2, e1e3 or e1e2e3)\n";
        return 2;
    }

    const Source src = load_source(g.config_path);
    const pg::QuadratureConfig cfg = quadrature_config(g);
    double lo = 0.0, hi = 0.0;
    resolve_range(src, g, lo, hi);
    const auto grid = pg::uniform_grid(lo, hi, g.nodes);

    const pg::SampledCurve curve = src.prefer_natural
        ? pg::smarandache_curve(src.make_natural(lo, hi), kind, grid, cfg)
        : pg::smarandache_curve(src.make_model(lo, hi), kind, grid);

    pg::SampleTable table;
    table.columns = {"s", "x", "y", "z"};
    for (size_t i = 0; i < curve.params.size(); ++i)
        table.rows.push_back({curve.params[i], curve.points[i].x,
                              curve.points[i].y, curve.points[i].z});

    ordered_json meta = base_meta("smarandache", g, lo, hi);
    meta["kind"] = kind_text;
    meta["config"] = src.echo;
    emit(g, table, meta);
    return 0;
}

int cmd_verify(const GlobalOptions& g, const std::string& which) {
    std::vector<int> ids;
    bool all = false;
    if (which == "all") {
        ids = {1, 2, 3, 4, 5};
        all = true;
    } else {
        try {
            size_t used = 0;
            const int id = std::stoi(which, &used);
            if (used != which.size()) throw std::invalid_argument(which);
            ids = {id};
        } catch (const std::exception&) {
            pg::raise(pg::Errc::InvalidArgument,
                      "verify: expected an example id 1..5 or \"all\", got \"" + which + "\"");
        }
    }

    const pg::QuadratureConfig cfg = quadrature_config(g);
    pg::VerifyReport report = pg::run_verification(ids, cfg);
    if (all) {
        auto extra = pg::family_expansion_discrepancies();
        report.discrepancies.insert(report.discrepancies.end(), extra.begin(), extra.end());
    }

    std::ostringstream out;
    pg::print_report(out, report);
    emit_text(g, out.str());
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curves in the three-dimensional pseudo-Galilean space"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--output", g.output, "output file, or - for stdout");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision", g.precision, "significant digits, 6..17")
        ->check(CLI::Range(6, 17));
    app.add_option("--tol", g.tol, "quadrature absolute tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--range", g.range, "sampling range LO HI")->expected(2);
    app.add_option("--nodes", g.nodes, "number of sample nodes")
        ->check(CLI::Range(2, 2000000));
    app.add_option("--config", g.config_path, "JSON curve/family config");

    double cx = 0.0, cy = 0.0, cz = 0.0;
    auto* classify_cmd = app.add_subcommand("classify", "classify a vector under the degenerate metric");
    classify_cmd->add_option("x", cx, "absolute coordinate")->required();
    classify_cmd->add_option("y", cy, "first isotropic coordinate")->required();
    classify_cmd->add_option("z", cz, "second isotropic coordinate")->required();

    auto* eval_cmd = app.add_subcommand("eval", "sample curve positions");
    auto* frenet_cmd = app.add_subcommand("frenet", "sample Frenet frames, curvature and torsion");
    auto* synthesize_cmd = app.add_subcommand("synthesize", "synthesize a curve from natural equations");

    std::string kind_text;
    auto* smarandache_cmd = app.add_subcommand("smarandache", "sample a Smarandache curve");
    smarandache_cmd->add_option("--kind", kind_text, "e1e2, e1e3 or e1e2e3")->required();

    std::string which = "all";
    auto* verify_cmd = app.add_subcommand("verify", "check the built-in reference examples");
    verify_cmd->add_option("example", which, "example id 1..5 or \"all\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) return cmd_classify(g, cx, cy, cz);
        if (*eval_cmd) return cmd_eval(g);
        if (*frenet_cmd) return cmd_frenet(g);
        if (*synthesize_cmd) return cmd_synthesize(g);
        if (*smarandache_cmd) return cmd_smarandache(g, kind_text);
        if (*verify_cmd) return cmd_verify(g, which);
    } catch (const pg::Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_code_for(err.code());
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 2;
}
