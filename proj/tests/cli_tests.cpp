// End-to-end checks of the pgcurve command-line tool, run as subprocesses of
// the installed binary.  One [PASS]/[FAIL] line per scenario; nonzero exit if
// anything failed.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "pgcurve/io.hpp"

namespace {

int g_failures = 0;
int g_checks = 0;
std::vector<std::string> g_current_errors;

void expect(bool cond, const std::string& what) {
    ++g_checks;
    if (!cond) {
        ++g_failures;
        g_current_errors.push_back(what);
    }
}

void finish_case(const std::string& name) {
    if (g_current_errors.empty()) {
        std::printf("[PASS] %s\n", name.c_str());
    } else {
        std::printf("[FAIL] %s\n", name.c_str());
        for (const auto& e : g_current_errors)
            std::printf("       %s\n", e.c_str());
    }
    g_current_errors.clear();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs the CLI through /bin/sh, capturing stdout via the pipe and stderr via
// a scratch file.  `prefix` can carry environment assignments.
RunResult run_cli(const std::string& args, const std::string& prefix = "") {
    const std::string err_path = "/tmp/pgcurve_cli_tests_stderr.txt";
    const std::string cmd =
        prefix + " " + std::string(PGCURVE_CLI_PATH) + " " + args + " 2>" + err_path;

    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        result.err = "popen failed";
        return result;
    }
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        result.out.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    std::ifstream err_file(err_path);
    std::stringstream ss;
    ss << err_file.rdbuf();
    result.err = ss.str();
    return result;
}

std::string write_config(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/pgcurve_cli_tests_" + name + ".json";
    std::ofstream out(path);
    out << body;
    return path;
}

pg::SampleTable parse_csv(const std::string& text) {
    std::istringstream in(text);
    return pg::read_csv(in);
}

size_t column_index(const pg::SampleTable& table, const std::string& name) {
    for (size_t c = 0; c < table.columns.size(); ++c)
        if (table.columns[c] == name) return c;
    return static_cast<size_t>(-1);
}

void case_classify() {
    expect(run_cli("classify 1 2 3").out == "non-isotropic\n", "x != 0 is non-isotropic");
    expect(run_cli("classify 0 2 1").out == "spacelike\n", "y^2 > z^2 is spacelike");
    expect(run_cli("classify 0 1 2").out == "timelike\n", "y^2 < z^2 is timelike");
    expect(run_cli("classify 0 1 1").out == "lightlike\n", "y = z is lightlike");
    expect(run_cli("classify 0 -3 3").out == "lightlike\n", "y = -z is lightlike");
    expect(run_cli("classify 0 0 0").out == "zero\n", "origin is zero");
    expect(run_cli("classify 1 2 3").exit_code == 0, "classify exits 0");
    finish_case("classify prints the vector class");
}

void case_usage_errors() {
    expect(run_cli("classify 1 2").exit_code == 2, "missing argument exits 2");
    expect(run_cli("frobnicate").exit_code == 2, "unknown subcommand exits 2");
    expect(run_cli("").exit_code == 2, "missing subcommand exits 2");
    expect(run_cli("eval").exit_code == 2, "eval without --config exits 2");
    expect(run_cli("eval --nodes 1 --config /tmp/nonexistent.json").exit_code == 2,
           "nodes below 2 exits 2");
    expect(run_cli("eval --precision 42 --config /tmp/nonexistent.json").exit_code == 2,
           "precision outside 6..17 exits 2");
    expect(run_cli("eval --format yaml --config /tmp/nonexistent.json").exit_code == 2,
           "unknown format exits 2");
    expect(run_cli("eval --config /tmp/definitely_missing_config.json").exit_code == 2,
           "missing config file exits 2");
    const std::string bad = write_config("bad_json", "{ not json");
    expect(run_cli("eval --config " + bad).exit_code == 2, "malformed JSON exits 2");
    const std::string unknown = write_config("bad_family",
        R"({"family": "loxodrome", "kappa": "1", "range": [0, 1]})");
    expect(run_cli("synthesize --config " + unknown).exit_code == 2,
           "unknown family exits 2");
    finish_case("usage and config errors exit 2");
}

void case_eval_example() {
    const std::string cfg = write_config("ex1", R"({"example": 1})");
    const RunResult r = run_cli("eval --config " + cfg + " --nodes 3");
    expect(r.exit_code == 0, "eval exits 0");
    const pg::SampleTable table = parse_csv(r.out);
    expect(table.columns == std::vector<std::string>{"s", "x", "y", "z"},
           "eval emits s,x,y,z");
    expect(table.rows.size() == 3, "one row per node");
    // Default range is the example's verification window [0.5, 3].
    expect(table.rows.front()[0] == 0.5, "range starts at the window");
    expect(table.rows.back()[0] == 3.0, "range ends at the window");
    for (const auto& row : table.rows)
        expect(row[1] == row[0], "arc-length curve has x = s");
    // alpha(1) = (1, -1/6 * (cosh 0 - 2 sinh 0), ...) = (1, -1/6, 1/3).
    const RunResult mid = run_cli("eval --config " + cfg + " --range 1 2 --nodes 2");
    const pg::SampleTable mt = parse_csv(mid.out);
    expect(std::abs(mt.rows[0][2] + 1.0 / 6.0) <= 1e-12, "y(1) = -1/6");
    expect(std::abs(mt.rows[0][3] - 1.0 / 3.0) <= 1e-12, "z(1) = 1/3");
    finish_case("eval samples example curves");
}

void case_frenet_example() {
    const std::string cfg = write_config("ex5", R"({"example": 5})");
    const RunResult r = run_cli("frenet --config " + cfg + " --range -1 2 --nodes 4");
    expect(r.exit_code == 0, "frenet exits 0");
    const pg::SampleTable table = parse_csv(r.out);
    expect(table.columns.size() == 16, "frenet emits 16 columns");
    const size_t kappa = column_index(table, "kappa");
    const size_t tau = column_index(table, "tau");
    const size_t e2y = column_index(table, "e2y");
    const size_t e3z = column_index(table, "e3z");
    const size_t eps = column_index(table, "epsilon");
    expect(kappa != static_cast<size_t>(-1) && tau != static_cast<size_t>(-1),
           "kappa and tau columns exist");
    for (const auto& row : table.rows) {
        const double u = row[0];
        expect(std::abs(row[kappa] - 1.0 / (2.0 + u)) <= 1e-12, "kappa = 1/(2+u)");
        expect(row[tau] == 0.0, "planar curve has tau = 0");
        expect(row[e2y] == 1.0, "e2 = (0,1,0)");
        expect(row[e3z] == 1.0, "e3 = (0,0,1)");
        expect(row[eps] == 1.0, "epsilon = +1");
    }
    finish_case("frenet reports invariants and the moving frame");
}

void case_smarandache_rows() {
    const std::string cfg = write_config("ex1s", R"({"example": 1})");
    const RunResult r = run_cli("smarandache --kind e1e2e3 --config " + cfg + " --nodes 11");
    expect(r.exit_code == 0, "smarandache exits 0");
    const pg::SampleTable table = parse_csv(r.out);
    expect(table.rows.size() == 11, "one row per node");
    for (const auto& row : table.rows) {
        const double u = row[0];
        const double u2 = u * u;
        expect(row[1] == 1.0, "absolute coordinate is exactly 1");
        expect(std::abs(row[2] - (-3.0 + u2 * u2) / (4.0 * u2)) <= 1e-9,
               "y matches the closed form");
        expect(std::abs(row[3] - (3.0 + u2 * u2) / (4.0 * u2)) <= 1e-9,
               "z matches the closed form");
    }
    finish_case("smarandache e1e2e3 matches the closed form");
}

void case_smarandache_e2e3() {
    const std::string cfg = write_config("ex1e", R"({"example": 1})");
    const RunResult r = run_cli("smarandache --kind e2e3 --config " + cfg);
    expect(r.exit_code == 2, "e2e3 exits 2");
    expect(r.err.find("lightlike combination") != std::string::npos,
           "stderr explains the lightlike degeneracy");
    expect(r.out.empty(), "no table is emitted");
    const RunResult bogus = run_cli("smarandache --kind e9 --config " + cfg);
    expect(bogus.exit_code == 2, "unknown kind exits 2");
    expect(bogus.err.find("unknown kind") != std::string::npos, "unknown kind is named");
    finish_case("smarandache refuses the lightlike e2e3 combination");
}

void case_synthesize_roundtrip() {
    const std::string cfg = write_config("circ", R"({
        "family": "circular_helix",
        "character": "timelike",
        "params": {"kappa0": 1.0, "tau0": 2.0},
        "range": [0, 2]
    })");
    const RunResult r = run_cli("synthesize --config " + cfg + " --nodes 41");
    expect(r.exit_code == 0, "synthesize exits 0");
    const pg::SampleTable table = parse_csv(r.out);
    const size_t kappa = column_index(table, "kappa");
    const size_t tau = column_index(table, "tau");
    const size_t eps = column_index(table, "epsilon");
    for (const auto& row : table.rows) {
        const double s = row[0];
        // kappa/tau columns are recomputed from the synthesized curve; their
        // agreement with the inputs is the round trip.
        expect(std::abs(row[kappa] - 1.0) <= 1e-6, "recomputed kappa = 1");
        expect(std::abs(row[tau] - 2.0) <= 1e-6, "recomputed tau = 2");
        expect(row[eps] == 1.0, "timelike synthesis has epsilon = +1");
        expect(std::abs(row[2] - (std::cosh(2.0 * s) - 1.0) / 4.0) <= 1e-6,
               "y matches the closed form");
        expect(std::abs(row[3] - (std::sinh(2.0 * s) / 4.0 - s / 2.0)) <= 1e-6,
           "z matches the closed form");
    }
    finish_case("synthesize reproduces constant invariants");
}

void case_synthesize_failures() {
    const std::string pole = write_config("pole", R"({
        "family": "natural",
        "character": "spacelike",
        "kappa": "1/s",
        "tau": "0",
        "range": [0, 1]
    })");
    expect(run_cli("synthesize --config " + pole).exit_code == 3,
           "curvature pole exits 3");

    const std::string negative = write_config("negk", R"({
        "family": "natural",
        "character": "spacelike",
        "kappa": "1 - s",
        "tau": "0",
        "range": [0, 2]
    })");
    expect(run_cli("synthesize --config " + negative).exit_code == 4,
           "non-positive curvature exits 4");

    const std::string zero_m = write_config("zerom", R"({
        "family": "general_helix",
        "params": {"m": 0.0},
        "kappa": "1/s",
        "range": [1, 3]
    })");
    expect(run_cli("synthesize --config " + zero_m).exit_code == 2,
           "invalid family parameter exits 2");

    const std::string curve_cfg = write_config("curvecfg", R"({
        "curve": {"y": "s^2", "z": "s"},
        "range": [0, 1]
    })");
    expect(run_cli("synthesize --config " + curve_cfg).exit_code == 2,
           "synthesize rejects curve-only configs");
    finish_case("synthesize maps failures to exit codes");
}

void case_expression_curves() {
    // y'' = e^-s sinh 2s, z'' = e^-s cosh 2s: kappa = e^-s, tau = -2.
    const std::string cfg = write_config("expr", R"({
        "curve": {"y": "exp(s)/2 - exp(-3*s)/18", "z": "exp(s)/2 + exp(-3*s)/18"},
        "range": [-1, 1]
    })");
    const RunResult r = run_cli("frenet --config " + cfg + " --nodes 9");
    expect(r.exit_code == 0, "expression curve frames exit 0");
    const pg::SampleTable table = parse_csv(r.out);
    const size_t kappa = column_index(table, "kappa");
    const size_t tau = column_index(table, "tau");
    for (const auto& row : table.rows) {
        // Derivatives come from difference stencils here, so the budget is
        // the order-3 stencil truncation, not machine precision.
        expect(std::abs(row[kappa] - std::exp(-row[0])) <= 1e-6,
               "finite-difference kappa tracks e^-s");
        expect(std::abs(row[tau] + 2.0) <= 1e-4, "finite-difference tau tracks -2");
    }
    finish_case("frenet works on expression-defined curves");
}

void case_json_output() {
    const std::string cfg = write_config("ex1j", R"({"example": 1})");
    const RunResult r = run_cli("frenet --config " + cfg + " --nodes 5 --format json");
    expect(r.exit_code == 0, "json output exits 0");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(r.out);
    } catch (...) {
        expect(false, "output parses as JSON");
        finish_case("json output carries meta and samples");
        return;
    }
    expect(doc.contains("meta") && doc.contains("samples"), "meta and samples keys");
    expect(doc["meta"]["tool"] == "pgcurve", "meta.tool");
    expect(doc["meta"]["command"] == "frenet", "meta.command");
    expect(doc["meta"]["nodes"] == 5, "meta.nodes");
    expect(doc["meta"]["config"]["example"] == 1, "config echo");
    expect(doc["samples"].size() == 5, "one sample per node");
    expect(doc["samples"][0].contains("kappa"), "sample fields are named");
    finish_case("json output carries meta and samples");
}

void case_determinism_and_precision() {
    const std::string cfg = write_config("ex3d", R"({"example": 3})");
    const RunResult a = run_cli("frenet --config " + cfg + " --nodes 33");
    const RunResult b = run_cli("frenet --config " + cfg + " --nodes 33");
    expect(a.exit_code == 0 && b.exit_code == 0, "repeat runs exit 0");
    expect(a.out == b.out, "repeat runs are byte-identical");

    const std::string cfg5 = write_config("ex5p", R"({"example": 5})");
    const RunResult wide = run_cli("eval --config " + cfg5 + " --range 0 1 --nodes 4");
    const RunResult narrow =
        run_cli("eval --config " + cfg5 + " --range 0 1 --nodes 4 --precision 6");
    expect(wide.out.find("0.3333333333333333") != std::string::npos,
           "precision 17 keeps full digits");
    expect(narrow.out.find("0.333333\n") != std::string::npos ||
           narrow.out.find("0.333333,") != std::string::npos,
           "precision 6 rounds to six significant digits");
    finish_case("output is deterministic and precision-controlled");
}

void case_output_file() {
    const std::string cfg = write_config("ex1o", R"({"example": 1})");
    const std::string path = "/tmp/pgcurve_cli_tests_out.csv";
    std::remove(path.c_str());
    const RunResult direct = run_cli("eval --config " + cfg + " --nodes 7");
    const RunResult filed =
        run_cli("eval --config " + cfg + " --nodes 7 --output " + path);
    expect(filed.exit_code == 0, "file output exits 0");
    expect(filed.out.empty(), "nothing on stdout when writing to a file");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    expect(ss.str() == direct.out, "file content equals stdout content");
    finish_case("--output writes the same bytes to a file");
}

void case_verify() {
    const RunResult five = run_cli("verify 5");
    expect(five.exit_code == 0, "verify 5 exits 0");
    expect(five.out.find("example5/curvature") != std::string::npos, "checks are listed");
    expect(five.out.find("-> PASS") != std::string::npos, "verdict is PASS");
    expect(five.out.find("known discrepancies") != std::string::npos,
           "published-row drifts are reported");
    expect(five.out.find("example5/smarandache_e1e2") != std::string::npos,
           "the drifted row is named");

    expect(run_cli("verify 9").exit_code == 2, "bad example id exits 2");
    expect(run_cli("verify x").exit_code == 2, "non-numeric id exits 2");
    finish_case("verify checks a single example");
}

void case_tolerance_sources() {
    const std::string cfg = write_config("tols", R"({
        "family": "circular_helix",
        "character": "spacelike",
        "params": {"kappa0": 1.0, "tau0": 2.0},
        "range": [0, 1]
    })");
    expect(run_cli("synthesize --config " + cfg + " --nodes 11",
                   "PGCURVE_QUAD_TOL=1e-8").exit_code == 0,
           "valid env tolerance is accepted");
    expect(run_cli("synthesize --config " + cfg + " --nodes 11",
                   "PGCURVE_QUAD_TOL=bogus").exit_code == 2,
           "malformed env tolerance exits 2");
    expect(run_cli("synthesize --config " + cfg + " --nodes 11 --tol 1e-8",
                   "PGCURVE_QUAD_TOL=bogus").exit_code == 0,
           "--tol takes precedence over the environment");
    expect(run_cli("synthesize --config " + cfg + " --nodes 11 --tol -1").exit_code == 2,
           "negative --tol exits 2");
    finish_case("quadrature tolerance comes from --tol, then the environment");
}

} // namespace

int main() {
    case_classify();
    case_usage_errors();
    case_eval_example();
    case_frenet_example();
    case_smarandache_rows();
    case_smarandache_e2e3();
    case_synthesize_roundtrip();
    case_synthesize_failures();
    case_expression_curves();
    case_json_output();
    case_determinism_and_precision();
    case_output_file();
    case_verify();
    case_tolerance_sources();

    std::printf("%d checks, %d failed\n", g_checks, g_failures);
    return g_failures == 0 ? 0 : 1;
}
