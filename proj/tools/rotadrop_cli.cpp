// Command-line front end: classify, solve, report, verify, mesh and sweep
// over the drop-family parameters (a, b). Machine-readable JSON/CSV output,
// deterministic for identical invocations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotadrop/rotadrop.hpp"

using nlohmann::json;
using namespace rotadrop;

namespace {

double verification_tolerance() {
    if (const char* env = std::getenv("ROTADROP_TOL")) {
        try {
            return std::stod(env);
        } catch (...) {
            throw std::invalid_argument("ROTADROP_TOL is not a number");
        }
    }
    return 1e-7;
}

json check_to_json(const BoundCheck& c) {
    json j;
    j["name"] = c.name;
    if (c.hypothesis_met) {
        j["lhs"] = c.lhs;
        j["rhs"] = c.rhs;
        j["margin"] = c.margin;
        j["passed"] = c.passed;
        if (c.equality) j["equality"] = true;
        j["status"] = c.equality ? "equality" : (c.passed ? "pass" : "fail");
    } else {
        j["status"] = "skipped";
    }
    j["hypothesis_met"] = c.hypothesis_met;
    return j;
}

json report_to_json(const QuantityReport& r) {
    return json{{"area", r.area},
                {"volume", r.volume},
                {"height", r.height},
                {"energy", r.energy},
                {"q_n1", r.q_n1},
                {"c0", r.c0},
                {"flux_residual", r.flux_residual},
                {"heinz_margin", r.heinz_margin}};
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty())
        throw std::invalid_argument("empty parameter list");
    return out;
}

std::ostream& open_output(std::optional<std::ofstream>& file,
                          const std::string& path) {
    if (path.empty()) return std::cout;
    file.emplace(path, std::ios::binary);
    if (!*file)
        throw std::runtime_error("cannot open output file: " + path);
    return *file;
}

struct Cli {
    std::string a_list = "0", b_list = "0";
    double u0 = 0.0, d = 0.0;
    double c = -1.0;  // optional truncation radius
    double step = 1e-4;
    std::size_t samples = 2048;
    std::size_t n_theta = 64, n_s = 64;
    std::string out;
    std::string format = "json";

    DropParams params() const {
        return {parse_list(a_list).at(0), parse_list(b_list).at(0), u0, d};
    }
    SolveOptions solve_options() const {
        SolveOptions o;
        o.step = step;
        o.samples = samples;
        return o;
    }
    // Solves in canonical form; flips u and psi back when the input had
    // b < 0 so the emitted profile belongs to the requested parameters.
    ProfileCurve solve(const DropParams& p, bool to_c) const {
        auto canon = canonicalize(p);
        StopCondition stop = (to_c && c >= 0.0) ? StopCondition::radius(c)
                                                : StopCondition::vertical_tangent();
        ProfileCurve curve = solve_profile(canon.params, stop, solve_options());
        if (canon.flipped) {
            for (auto& q : curve.samples) {
                q.u = -q.u;
                q.psi = -q.psi;
            }
            curve.params = p;
        }
        return curve;
    }
};

int run_classify(const Cli& cli) {
    const DropParams p = cli.params();
    auto canon = canonicalize(p);
    json j;
    j["type"] = to_string(classify(p.a, p.b));
    j["c0"] = find_c0(p.a, p.b);
    if (canon.params.a < 0.0) {
        auto [r1, r2] = critical_radii(canon.params.a, canon.params.b);
        j["r1"] = r1;
        j["r2"] = r2;
    }
    if (canon.flipped) j["flipped"] = true;
    // --c asks for the first integral at that radius; the only place the
    // toroidal constant d enters.
    if (cli.c >= 0.0) j["f_c"] = first_integral(cli.c, p);
    std::optional<std::ofstream> file;
    open_output(file, cli.out) << j.dump() << "\n";
    return 0;
}

int run_solve(const Cli& cli) {
    const ProfileCurve curve = cli.solve(cli.params(), true);
    std::optional<std::ofstream> file;
    std::ostream& out = open_output(file, cli.out);
    if (cli.format == "csv") {
        write_csv(curve, out);
    } else {
        json j;
        j["stop_reason"] = curve.stop_reason == StopReason::VerticalTangent
                               ? "VerticalTangent"
                               : (curve.stop_reason == StopReason::RadiusReached
                                      ? "RadiusReached"
                                      : "StepLimit");
        j["type"] = to_string(curve.surface_type);
        j["c_end"] = curve.c_end();
        j["u_end"] = curve.u_end();
        j["residual"] = profile_residual(curve);
        json rows = json::array();
        for (const auto& q : curve.samples)
            rows.push_back(json{{"s", q.s}, {"r", q.r}, {"u", q.u}, {"psi", q.psi}});
        j["samples"] = rows;
        out << j.dump() << "\n";
    }
    return 0;
}

int run_report(const Cli& cli) {
    const DropParams p = canonicalize(cli.params()).params;
    const ProfileCurve full = solve_profile(p, StopCondition::vertical_tangent(),
                                            cli.solve_options());
    const ClosedProfile closed = close_profile(full);
    QuantityReport rep = quantity_report(closed);
    if (cli.c >= 0.0 && cli.c < full.c_end()) {
        const ProfileCurve cut = truncate(full, cli.c);
        rep.area = area(cut);
        rep.volume = volume(cut);
        rep.height = height(cut);
        rep.energy = energy(cut);
        rep.flux_residual = boundary_flux_check(cut).residual;
        rep.heinz_margin = heinz_margin(cut.c_end(), p.a, p.b);
    }
    std::optional<std::ofstream> file;
    open_output(file, cli.out) << report_to_json(rep).dump() << "\n";
    return 0;
}

int run_verify(const Cli& cli) {
    const double tol = verification_tolerance();
    const DropParams p = canonicalize(cli.params()).params;
    const ProfileCurve full = solve_profile(p, StopCondition::vertical_tangent(),
                                            cli.solve_options());
    const BoundReport rep = verify_all(close_profile(full), tol);
    json arr = json::array();
    for (const auto& chk : rep.checks) arr.push_back(check_to_json(chk));
    std::optional<std::ofstream> file;
    open_output(file, cli.out) << arr.dump() << "\n";
    return rep.all_passed() ? 0 : 1;
}

int run_mesh(const Cli& cli) {
    const DropParams p = canonicalize(cli.params()).params;
    const ProfileCurve full = solve_profile(p, StopCondition::vertical_tangent(),
                                            cli.solve_options());
    RevolveMesh mesh;
    if (cli.c >= 0.0 && cli.c < full.c_end())
        mesh = revolve(truncate(full, cli.c), cli.n_theta, cli.n_s);
    else
        mesh = revolve(close_profile(full), cli.n_theta, cli.n_s);
    if (cli.out.empty())
        throw std::invalid_argument("mesh: --out is required");
    std::ofstream file(cli.out, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file: " + cli.out);
    export_obj(mesh, file);
    const ResidualSummary res = laplace_residual(mesh);
    std::cout << json{{"max", res.max},
                      {"mean", res.mean},
                      {"n_interior", res.n_interior}}
                     .dump()
              << "\n";
    return 0;
}

int run_sweep(const Cli& cli) {
    const auto as = parse_list(cli.a_list);
    const auto bs = parse_list(cli.b_list);
    std::optional<std::ofstream> file;
    std::ostream& out = open_output(file, cli.out);
    for (double a : as) {
        for (double b : bs) {
            json j;
            j["a"] = a;
            j["b"] = b;
            try {
                const DropParams p = canonicalize(DropParams{a, b, cli.u0}).params;
                const ProfileCurve full = solve_profile(
                    p, StopCondition::vertical_tangent(), cli.solve_options());
                j["type"] = to_string(full.surface_type);
                j["report"] = report_to_json(quantity_report(close_profile(full)));
            } catch (const std::exception& e) {
                j["error"] = e.what();
            }
            out << j.dump() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stationary rotating drop profiles, quantities and checks"};
    app.require_subcommand(1);
    Cli cli;

    auto add_common = [&cli](CLI::App* cmd) {
        cmd->add_option("--a", cli.a_list, "rotation coefficient (comma list for sweep)");
        cmd->add_option("--b", cli.b_list, "capillarity coefficient (comma list for sweep)");
        cmd->add_option("--u0", cli.u0, "initial height");
        cmd->add_option("--c", cli.c, "truncation radius");
        cmd->add_option("--d", cli.d, "first-integral constant");
        cmd->add_option("--step", cli.step, "integration step");
        cmd->add_option("--samples", cli.samples, "samples per curve");
        cmd->add_option("--n-theta", cli.n_theta, "azimuthal vertex count");
        cmd->add_option("--n-s", cli.n_s, "profile ring count");
        cmd->add_option("--out", cli.out, "output path");
        cmd->add_option("--format", cli.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    CLI::App* classify_cmd = app.add_subcommand("classify", "surface type and radii");
    CLI::App* solve_cmd = app.add_subcommand("solve", "profile curve samples");
    CLI::App* report_cmd = app.add_subcommand("report", "geometric quantity report");
    CLI::App* verify_cmd = app.add_subcommand("verify", "inequality harness");
    CLI::App* mesh_cmd = app.add_subcommand("mesh", "revolved triangle mesh + residuals");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid of quantity reports");
    for (CLI::App* cmd : {classify_cmd, solve_cmd, report_cmd, verify_cmd,
                          mesh_cmd, sweep_cmd})
        add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << json{{"error", "argument"}, {"message", e.what()}}.dump()
                  << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(classify_cmd)) return run_classify(cli);
        if (app.got_subcommand(solve_cmd)) return run_solve(cli);
        if (app.got_subcommand(report_cmd)) return run_report(cli);
        if (app.got_subcommand(verify_cmd)) return run_verify(cli);
        if (app.got_subcommand(mesh_cmd)) return run_mesh(cli);
        if (app.got_subcommand(sweep_cmd)) return run_sweep(cli);
    } catch (const NumericDomainError& e) {
        std::cerr << json{{"error", "numeric"}, {"message", e.what()}}.dump()
                  << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << json{{"error", "numeric"}, {"message", e.what()}}.dump()
                  << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", "argument"}, {"message", e.what()}}.dump()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "runtime"}, {"message", e.what()}}.dump()
                  << "\n";
        return 2;
    }
    return 2;
}
