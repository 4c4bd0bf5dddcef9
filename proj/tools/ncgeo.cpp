// Command-line driver: reproduces each verified statement of the calculus as
// a named verification with text or JSON reports.
//
//   ncgeo verify all
//   ncgeo verify center --mode zeta3 --bound 6
//   ncgeo solve metric --middle-linear --mode generic --laurent --pmin -4 --pmax 0 --rmin 0 --rmax 6
//   ncgeo connection right-from-left --in gamma.txt
//   ncgeo connection whole-bimodule --mode zeta3
//   ncgeo connection gauge-demo
//   ncgeo compat check --gamma g.txt --gammatilde gt.txt --metric m.txt [--center-only]
//   ncgeo compat equivalence-test --trials 100 --seed 7
//   ncgeo matrixgeo verify
//   ncgeo demo rescaled-sigma
//
// Exit codes: 0 all PASS, 1 verification failure, 2 usage error, 3 parse error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncgeo/sections.hpp"
#include "ncgeo/verify.hpp"

using namespace ncgeo;
using nlohmann::json;

namespace {

struct Report {
    std::string command;
    std::vector<VerificationResult> results;
    std::string payload; // solved data blocks, shown verbatim

    bool pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

void print_text(const Report& report) {
    for (const auto& r : report.results) {
        std::printf("== %s: %s (%.2f s)\n", r.name.c_str(), r.pass ? "PASS" : "FAIL", r.elapsed_seconds);
        if (!r.description.empty()) std::printf("   %s\n", r.description.c_str());
        for (const auto& c : r.checks)
            std::printf("   [%s] %s%s%s\n", c.pass ? "ok" : "XX", c.name.c_str(), c.detail.empty() ? "" : ": ",
                        c.detail.c_str());
    }
    if (!report.payload.empty()) std::printf("%s", report.payload.c_str());
    std::printf("overall: %s\n", report.pass() ? "PASS" : "FAIL");
}

void print_json(const Report& report) {
    json out;
    out["command"] = report.command;
    out["overall"] = report.pass() ? "PASS" : "FAIL";
    out["results"] = json::array();
    for (const auto& r : report.results) {
        json jr;
        jr["name"] = r.name;
        jr["description"] = r.description;
        jr["status"] = r.pass ? "PASS" : "FAIL";
        jr["elapsed_seconds"] = r.elapsed_seconds;
        jr["checks"] = json::array();
        for (const auto& c : r.checks)
            jr["checks"].push_back({{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
        out["results"].push_back(std::move(jr));
    }
    if (!report.payload.empty()) out["output"] = report.payload;
    std::cout << out.dump(2) << "\n";
}

template <QField F>
VerificationResult run_metric_solver(const ExpWindow& window, bool tau_symmetric, PowerMode mode, Report& report) {
    VerificationResult result{"solve-metric", "middle-linear metric solver", true, {}, 0};
    detail::Stopwatch watch;
    auto basis = solve_middle_linear<F>(window, tau_symmetric, mode);
    result.add("solution space dimension", true, std::to_string(basis.size()));
    bool residuals = true, tau = true;
    std::ostringstream payload;
    for (const auto& g : basis) {
        residuals = residuals && is_middle_linear(g);
        if (tau_symmetric) tau = tau && is_tau_symmetric(g);
        payload << write_metric(g) << "\n";
    }
    result.add("all basis members have vanishing middle-linearity residuals", residuals);
    if (tau_symmetric) result.add("all basis members are tau-symmetric", tau);
    report.payload = payload.str();
    result.elapsed_seconds = watch.seconds();
    return result;
}

Report cmd_right_from_left(const std::string& path) {
    Report report{"connection right-from-left", {}, ""};
    VerificationResult result{"right-from-left", "right connection reconstructed from " + path, true, {}, 0};
    detail::Stopwatch watch;
    auto file = SectionFile::load(path);
    auto gamma = load_christoffel<Zeta3>(file, "gamma");
    using A = AlgElem<Zeta3>;
    const Zeta3 q = Zeta3::q();
    result.add("Gamma^1_12 in xA", gamma.entry(0, 0, 1).in_left_ideal_x(1));
    result.add("Gamma^1_21 in xA", gamma.entry(0, 1, 0).in_left_ideal_x(1));
    result.add("Gamma^1_22 in x^2 A", gamma.entry(0, 1, 1).in_left_ideal_x(2));
    result.add("Gamma^2_22 in xA", gamma.entry(1, 1, 1).in_left_ideal_x(1));
    if (gamma.entry(1, 1, 1).in_left_ideal_x(1)) {
        const PowerMode L = PowerMode::Laurent;
        A combined = (q - Zeta3(1)) * gamma.entry(1, 0, 1).as_laurent() +
                     (Zeta3(1) - q * q) * gamma.entry(1, 1, 0).as_laurent() +
                     (Zeta3(3) * q * q) *
                         (A::y(L) * A::monomial(Zeta3(1), -1, 0, L) * gamma.entry(1, 1, 1).as_laurent());
        result.add("(q-1) Gamma^2_12 + (1-q^2) Gamma^2_21 + 3 q^2 y x^{-1} Gamma^2_22 in xA",
                   combined.in_left_ideal_x(1));
    } else {
        result.add("(q-1) Gamma^2_12 + (1-q^2) Gamma^2_21 + 3 q^2 y x^{-1} Gamma^2_22 in xA", false,
                   "not evaluated: Gamma^2_22 already fails");
    }
    if (result.pass) {
        auto rt = solve_right_from_left(gamma);
        bool zero = true;
        for (const auto& r : sigma_compat_residuals(gamma, rt)) zero = zero && r.is_zero();
        result.add("reconstructed pair has zero compatibility residuals", zero);
        report.payload = write_christoffel(rt, "gammatilde");
    }
    result.elapsed_seconds = watch.seconds();
    report.results.push_back(std::move(result));
    return report;
}

template <QField F>
Report cmd_compat_check(const std::string& gamma_path, const std::string& gammatilde_path,
                        const std::string& metric_path, bool center_only) {
    Report report{"compat check", {}, ""};
    VerificationResult result{"compat-check", "metric compatibility of the connection pair", true, {}, 0};
    detail::Stopwatch watch;
    auto gamma = load_christoffel<F>(SectionFile::load(gamma_path), "gamma");
    auto gammatilde = load_christoffel<F>(SectionFile::load(gammatilde_path), "gammatilde");
    auto metric = load_metric<F>(SectionFile::load(metric_path));
    if (center_only) {
        if constexpr (std::is_same_v<F, Zeta3>) {
            result.add("compatibility over the centre of the bimodule",
                       compat_over_center(gamma, gammatilde, metric));
        } else {
            result.add("compatibility over the centre of the bimodule", true,
                       "the centre is zero for generic q; the condition is vacuous");
        }
    } else {
        auto rep = metric_compat_residuals(gamma, gammatilde, metric);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                result.add("P" + std::to_string(i + 1) + std::to_string(j + 1) + " = 0",
                           rep.residual[i][j].is_zero(), rep.residual[i][j].to_string());
    }
    result.elapsed_seconds = watch.seconds();
    report.results.push_back(std::move(result));
    return report;
}

Report cmd_gauge_demo() {
    Report report{"connection gauge-demo", {}, ""};
    report.results.push_back(verify_gauge());
    std::ostringstream payload;
    using A = AlgElem<Zeta3>;
    auto u = GaugeMatrix<Zeta3>({{{A::unit(), A::x()}, {A::zero(), A::unit()}}},
                                {{{A::unit(), -A::x()}, {A::zero(), A::unit()}}});
    payload << "# flat connection transformed by the frame change U = (1 x; 0 1)\n"
            << write_christoffel(gauge_transform_frame(u, Christoffel<Zeta3>(Side::Left)), "gamma");
    report.payload = payload.str();
    return report;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of metrics and left/right connection pairs on quantum-plane 1-forms"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    std::uint64_t seed = kDefaultSeed;
    app.add_option("--seed", seed, "seed for randomized suites");

    // verify
    auto* verify = app.add_subcommand("verify", "run named verifications");
    verify->require_subcommand(1);
    auto* verify_all_cmd = verify->add_subcommand("all", "every verification in sequence");
    auto* verify_center_cmd = verify->add_subcommand("center", "centres of the algebra and the 1-forms");
    std::string center_mode = "zeta3";
    long center_bound = 6;
    verify_center_cmd->add_option("--mode", center_mode)->check(CLI::IsMember({"generic", "zeta3"}));
    verify_center_cmd->add_option("--bound", center_bound);

    // solve metric
    auto* solve = app.add_subcommand("solve", "constraint solvers");
    solve->require_subcommand(1);
    auto* solve_metric_cmd = solve->add_subcommand("metric", "solve the middle-linearity system");
    bool middle_linear = false, laurent = false, tau_symmetric = false;
    std::string solve_mode = "generic";
    long pmin = 0, pmax = 8, rmin = 0, rmax = 8;
    solve_metric_cmd->add_flag("--middle-linear", middle_linear, "solve for middle-linear metrics");
    solve_metric_cmd->add_option("--mode", solve_mode)->check(CLI::IsMember({"generic", "zeta3"}));
    solve_metric_cmd->add_flag("--laurent", laurent, "admit negative exponents");
    solve_metric_cmd->add_flag("--tau-symmetric", tau_symmetric, "intersect with the tau-symmetry condition");
    solve_metric_cmd->add_option("--pmin", pmin);
    solve_metric_cmd->add_option("--pmax", pmax);
    solve_metric_cmd->add_option("--rmin", rmin);
    solve_metric_cmd->add_option("--rmax", rmax);

    // connection
    auto* connection = app.add_subcommand("connection", "connection pairs");
    connection->require_subcommand(1);
    auto* rfl = connection->add_subcommand("right-from-left", "reconstruct the right connection");
    std::string in_path;
    rfl->add_option("--in", in_path, "file with a [gamma] section")->required();
    auto* wb = connection->add_subcommand("whole-bimodule", "families compatible on the whole bimodule");
    std::string wb_mode = "all";
    wb->add_option("--mode", wb_mode)->check(CLI::IsMember({"generic", "zeta3", "all"}));
    connection->add_subcommand("gauge-demo", "frame-change counterexample and covariant gauge action");

    // compat
    auto* compat = app.add_subcommand("compat", "metric compatibility");
    compat->require_subcommand(1);
    auto* check = compat->add_subcommand("check", "check a (gamma, gammatilde, metric) triple from files");
    std::string gamma_path, gammatilde_path, metric_path, compat_mode = "zeta3";
    bool center_only = false;
    check->add_option("--gamma", gamma_path)->required();
    check->add_option("--gammatilde", gammatilde_path)->required();
    check->add_option("--metric", metric_path)->required();
    check->add_option("--mode", compat_mode)->check(CLI::IsMember({"generic", "zeta3"}));
    check->add_flag("--center-only", center_only);
    auto* equivalence = compat->add_subcommand("equivalence-test", "centre verdict vs full verdict");
    int trials = 100;
    equivalence->add_option("--trials", trials);

    // matrixgeo
    auto* mg = app.add_subcommand("matrixgeo", "matrix-valued function calculus");
    mg->require_subcommand(1);
    mg->add_subcommand("verify", "run the matrix-geometry verifications");

    // demo
    auto* demo = app.add_subcommand("demo", "demonstrations");
    demo->require_subcommand(1);
    auto* rescaled = demo->add_subcommand("rescaled-sigma", "unsolvability under the q^2-rescaled braiding");
    long rescaled_bound = 4;
    rescaled->add_option("--bound", rescaled_bound, "exponent bound of the constraint window");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Report report;
        if (verify_all_cmd->parsed()) {
            report.command = "verify all";
            report.results = verify_all(seed);
        } else if (verify_center_cmd->parsed()) {
            report.command = "verify center";
            report.results.push_back(verify_center(center_mode, center_bound, seed));
        } else if (solve_metric_cmd->parsed()) {
            report.command = "solve metric";
            if (!middle_linear) {
                std::cerr << "solve metric requires --middle-linear (the only implemented system)\n";
                return 2;
            }
            if (!laurent && (pmin < 0 || rmin < 0)) {
                std::cerr << "negative exponents require --laurent\n";
                return 2;
            }
            ExpWindow window{pmin, pmax, rmin, rmax};
            PowerMode mode = laurent ? PowerMode::Laurent : PowerMode::Polynomial;
            if (solve_mode == "generic")
                report.results.push_back(run_metric_solver<GenericQ>(window, tau_symmetric, mode, report));
            else
                report.results.push_back(run_metric_solver<Zeta3>(window, tau_symmetric, mode, report));
        } else if (rfl->parsed()) {
            report = cmd_right_from_left(in_path);
        } else if (wb->parsed()) {
            report.command = "connection whole-bimodule";
            report.results.push_back(verify_whole_bimodule(seed, wb_mode));
        } else if (connection->get_subcommand("gauge-demo")->parsed()) {
            report = cmd_gauge_demo();
        } else if (check->parsed()) {
            report = compat_mode == "generic"
                         ? cmd_compat_check<GenericQ>(gamma_path, gammatilde_path, metric_path, center_only)
                         : cmd_compat_check<Zeta3>(gamma_path, gammatilde_path, metric_path, center_only);
        } else if (equivalence->parsed()) {
            report.command = "compat equivalence-test";
            report.results.push_back(verify_compat_equivalence(trials, seed));
        } else if (mg->get_subcommand("verify")->parsed()) {
            report.command = "matrixgeo verify";
            report.results.push_back(verify_matrixgeo(seed));
        } else if (rescaled->parsed()) {
            report.command = "demo rescaled-sigma";
            report.results.push_back(verify_rescaled_sigma(rescaled_bound));
        }

        if (format == "json")
            print_json(report);
        else
            print_text(report);
        return report.pass() ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
}
