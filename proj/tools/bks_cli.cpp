// Command-line front door: invariant suite, hidden-variable enumeration
// table, Born probabilities, and N-shot experiments.
//
// Exit codes: 0 success (or QM verdict), 1 invariant failure or a
// hidden-variable-consistent shot observed, 2 usage error.

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bks/harness.hpp"

namespace {

int write_output(const std::string& content, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << *path << "'\n";
        return 1;
    }
    out << content;
    return out.good() ? 0 : 1;
}

bks::OutputFormat parse_format(const std::string& s) {
    if (s == "json") return bks::OutputFormat::Json;
    if (s == "csv") return bks::OutputFormat::Csv;
    throw CLI::ValidationError("--format", "must be 'json' or 'csv'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit noncontextuality test simulator"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run the full sampling-free invariant suite");

    std::string table_format = "csv";
    std::optional<std::string> table_out;
    auto* nchv_table =
        app.add_subcommand("nchv-table", "Emit the 16-row hidden-variable enumeration table");
    nchv_table->add_option("--format", table_format, "json or csv")->capture_default_str();
    nchv_table->add_option("--out", table_out, "Output file (default stdout)");

    std::string probs_state = "preset:phi+";
    std::string probs_format = "json";
    std::optional<std::string> probs_out;
    auto* qm_probs =
        app.add_subcommand("qm-probs", "Born probabilities of the four outcomes for a state");
    qm_probs->add_option("--state", probs_state, "State descriptor")->capture_default_str();
    qm_probs->add_option("--format", probs_format, "json or csv")->capture_default_str();
    qm_probs->add_option("--out", probs_out, "Output file (default stdout)");

    bks::ExperimentConfig config;
    config.state_spec = "preset:phi+";
    std::string sim_mode = "joint";
    std::string sim_format = "json";
    std::vector<double> coeffs;
    auto* simulate = app.add_subcommand("simulate", "Run an N-shot experiment");
    simulate->add_option("--state", config.state_spec, "State descriptor")->capture_default_str();
    simulate->add_option("--shots", config.shots, "Number of shots")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--seed", config.master_seed, "Master seed")->capture_default_str();
    simulate->add_option("--mode", sim_mode, "joint, sequential, or maximal")
        ->capture_default_str();
    simulate
        ->add_option("--coeffs", coeffs,
                     "Four distinct eigenvalues for maximal mode (default 1 2 3 4)")
        ->expected(4);
    simulate->add_option("--noise", config.noise_p, "Depolarizing probability in [0,1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    simulate->add_option("--format", sim_format, "json or csv")->capture_default_str();
    simulate->add_option("--out", config.output_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return bks::run_verify(std::cout);

        if (nchv_table->parsed()) {
            const std::string content = parse_format(table_format) == bks::OutputFormat::Json
                                            ? bks::nchv_table_json().dump(2) + "\n"
                                            : bks::nchv_table_csv();
            return write_output(content, table_out);
        }

        if (qm_probs->parsed()) {
            const std::string content = parse_format(probs_format) == bks::OutputFormat::Json
                                            ? bks::born_json(probs_state).dump(2) + "\n"
                                            : bks::born_csv(probs_state);
            return write_output(content, probs_out);
        }

        // simulate
        config.mode = bks::parse_mode(sim_mode);
        config.output_format = parse_format(sim_format);
        if (!coeffs.empty()) {
            for (std::size_t i = 0; i < 4; ++i) config.coefficients[i] = coeffs[i];
        }
        const bks::ExperimentResult result = bks::run_experiment(config);
        const std::string content = config.output_format == bks::OutputFormat::Json
                                        ? bks::report_to_json(config, result).dump(2) + "\n"
                                        : bks::records_to_csv(result);
        const int io_status = write_output(content, config.output_path);
        if (io_status != 0) return io_status;
        return result.report.nchv_consistent_shots == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
