// Command-line driver: parameter sweeps over the dilaton, crossing-point
// search, state inspection, SVG chart emission, and an oracle self-check.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "dbh/oracle.hpp"

namespace {

// Exit codes: 0 success, 1 usage (CLI11), 2 domain error, 3 no crossing, 4 I/O.
constexpr int kExitDomain = 2;
constexpr int kExitNoCrossing = 3;
constexpr int kExitIo = 4;

int run_self_check(const cliops::SweepConfig& cfg) {
    const bool strict = std::abs(cfg.q_r) == 1.0;
    bool ok = true;
    std::printf("self-check (qr=%g%s)\n", cfg.q_r,
                strict ? "" : "; deviations reported, not asserted, for |qr| < 1");
    for (double f : {0.0, 0.2, 0.5, 0.8, 0.95}) {
        const double alpha = f * cfg.mass;
        const oracle::OracleReport r = oracle::self_check(cfg.params_at(alpha));
        const double overlap = std::abs(r.vacuum_excited_overlap);
        std::printf(
            "  alpha=%-8g state deviation %.3e | discord grid gap %+.3e | overlap %.3e\n",
            alpha, r.max_entrywise_deviation, r.max_objective_gap, overlap);
        if (strict && (r.max_entrywise_deviation > 1e-10 || r.max_objective_gap > 1e-6 ||
                       overlap > 1e-12))
            ok = false;
    }
    std::printf("self-check: %s\n", ok ? "ok" : "FAILED");
    return ok ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Correlations of a fermion mode shared between an inertial observer and an "
        "observer near a dilaton black hole"};
    app.require_subcommand(0, 1);

    cliops::SweepConfig cfg;
    double alpha = 0.0;
    std::string csv_out = "sweep.csv";
    std::string plot_dir = ".";
    bool self_check = false;

    app.add_flag("--self-check", self_check,
                 "run the independent verification oracles and print a report");

    auto add_common = [&cfg, &self_check](CLI::App* sub) {
        sub->add_flag("--self-check", self_check,
                      "run the independent verification oracles before the command");
        sub->add_option("--mass", cfg.mass, "black-hole mass M")->capture_default_str();
        sub->add_option("--omega", cfg.omega, "mode frequency")->capture_default_str();
        sub->add_option("--qr", cfg.q_r, "outside-fermion branch weight, |qr| <= 1")
            ->capture_default_str();
        sub->add_option("--alpha-min", cfg.alpha_min, "lower end of the dilaton range")
            ->capture_default_str();
        sub->add_option("--alpha-max", cfg.alpha_max, "upper end of the dilaton range")
            ->capture_default_str();
        sub->add_option("--steps", cfg.steps, "number of sweep rows")->capture_default_str();
    };

    CLI::App* sweep =
        app.add_subcommand("sweep", "write a CSV of every correlation measure over the dilaton");
    add_common(sweep);
    sweep->add_option("--out", csv_out, "CSV output path")->capture_default_str();

    CLI::App* cross = app.add_subcommand(
        "find-crossing", "locate the dilaton where the two classical correlations coincide");
    add_common(cross);

    CLI::App* state =
        app.add_subcommand("state", "print the shared two-qubit state at one parameter point");
    add_common(state);
    state->add_option("--alpha", alpha, "dilaton value")->capture_default_str();

    CLI::App* plot = app.add_subcommand("plot", "emit SVG charts of the correlation measures");
    add_common(plot);
    plot->add_option("--out", plot_dir, "output directory for the two SVG files")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (self_check) {
            const int rc = run_self_check(cfg);
            if (rc != 0 || app.get_subcommands().empty()) return rc;
        } else if (app.get_subcommands().empty()) {
            std::cout << app.help();
            return 1;
        }

        if (sweep->parsed()) {
            cliops::write_file(csv_out, cliops::sweep_csv(cliops::run_sweep(cfg)));
            std::printf("wrote %d rows to %s\n", cfg.steps, csv_out.c_str());
        } else if (cross->parsed()) {
            const double alpha_star = cliops::find_crossing(cfg);
            std::printf("alpha* = %.5f\n", alpha_star);
        } else if (state->parsed()) {
            std::fputs(cliops::state_dump(cfg.params_at(alpha)).c_str(), stdout);
        } else if (plot->parsed()) {
            const std::vector<cliops::SweepRow> rows = cliops::run_sweep(cfg);
            namespace fs = std::filesystem;
            const fs::path dir(plot_dir);
            std::error_code ec;
            fs::create_directories(dir, ec);
            const std::string classical = (dir / "classical_correlations.svg").string();
            const std::string quantum = (dir / "quantum_correlations.svg").string();
            cliops::write_file(classical, cliops::classical_svg(cfg, rows));
            cliops::write_file(quantum, cliops::quantum_svg(cfg, rows));
            std::printf("wrote %s and %s\n", classical.c_str(), quantum.c_str());
        }
    } catch (const cliops::NoCrossingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoCrossing;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
