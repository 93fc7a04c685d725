#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bks/linalg.hpp"
#include "bks/nchv.hpp"
#include "bks/observables.hpp"
#include "bks/pattern.hpp"
#include "bks/qm.hpp"
#include "bks/rng.hpp"

// Experiment orchestration: invariant suite, hidden-variable enumeration
// table, Born probabilities, N-shot experiments, and the verdict report
// contrasting the two models shot by shot.

namespace bks {

enum class Mode { Joint, Sequential, Maximal };
enum class OutputFormat { Json, Csv };

inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::Joint: return "joint";
        case Mode::Sequential: return "sequential";
        case Mode::Maximal: return "maximal";
    }
    throw std::invalid_argument("unknown mode");
}

inline Mode parse_mode(const std::string& s) {
    if (s == "joint") return Mode::Joint;
    if (s == "sequential") return Mode::Sequential;
    if (s == "maximal") return Mode::Maximal;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

enum class Verdict { QM, NCHV, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::QM: return "QM";
        case Verdict::NCHV: return "NCHV";
        case Verdict::Inconclusive: return "inconclusive";
    }
    throw std::invalid_argument("unknown verdict");
}

struct ExperimentConfig {
    std::string state_spec;
    std::uint64_t shots = 1;
    std::uint64_t master_seed = 0;
    Mode mode = Mode::Joint;
    std::array<double, 4> coefficients{1, 2, 3, 4};  // maximal mode only
    double noise_p = 0.0;
    OutputFormat output_format = OutputFormat::Json;
    std::optional<std::string> output_path;
};

inline void validate(const ExperimentConfig& config) {
    if (config.shots < 1) throw std::invalid_argument("shots must be >= 1");
    if (config.noise_p < 0.0 || config.noise_p > 1.0)
        throw std::invalid_argument("noise probability must be in [0,1]");
}

struct ExperimentRecord {
    std::uint64_t shot_index;
    int outcome;                // 1..4
    std::array<bool, 4> truth;  // P1..P4
    Pattern pattern;
    std::uint64_t stream_seed;  // per-shot RNG stream identifier
};

struct VerdictReport {
    std::uint64_t shots = 0;
    std::array<std::uint64_t, 4> outcome_counts{};
    std::array<std::uint64_t, 4> pattern_counts{};  // indexed by Pattern enum order
    std::array<double, 4> born_probabilities{};
    std::array<double, 4> frequencies{};
    std::array<double, 4> std_errors{};  // binomial, from the Born probabilities
    std::uint64_t nchv_consistent_shots = 0;  // pattern in {AllFalse, TwoTrue}
    std::uint64_t qm_consistent_shots = 0;    // pattern ExactlyOneTrue
    Verdict verdict = Verdict::Inconclusive;
};

struct ExperimentResult {
    VerdictReport report;
    std::vector<ExperimentRecord> records;
};

namespace detail {

// 12 significant digits, the fixed numeric format for all text outputs.
inline std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline MeasurementResult depolarized_shot(const TwoQubitState& state,
                                          const PropositionBasis& basis, SplitMix64& rng) {
    const int index = sample_index({0.25, 0.25, 0.25, 0.25}, rng);
    std::array<bool, 4> truth{};
    truth[index] = true;
    return {index + 1, {basis.states[index], state.provenance}, truth};
}

inline MeasurementResult run_shot(const TwoQubitState& state, const PropositionBasis& basis,
                                  const MaximalObservable& h, Mode mode, double noise_p,
                                  SplitMix64& rng) {
    switch (mode) {
        case Mode::Joint:
            return sample(state, basis, rng, noise_p);
        case Mode::Sequential: {
            if (noise_p > 0.0 && rng.next_double() < noise_p)
                return depolarized_shot(state, basis, rng);
            return sample_sequential(state, basis, {1, 2, 3, 4}, rng);
        }
        case Mode::Maximal: {
            if (noise_p > 0.0 && rng.next_double() < noise_p)
                return depolarized_shot(state, basis, rng);
            return measure_maximal(state, h, rng).second;
        }
    }
    throw std::invalid_argument("unknown mode");
}

}  // namespace detail

// Deterministic given the config: shot i uses the stream derived from
// (master_seed, i), so the record stream is independent of execution order.
inline ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate(config);
    const TwoQubitState state = prepare(config.state_spec);
    const PropositionBasis basis = build_proposition_basis();
    const MaximalObservable h = build_maximal_observable(config.coefficients, basis);

    ExperimentResult result;
    result.records.reserve(config.shots);
    VerdictReport& report = result.report;
    report.shots = config.shots;
    report.born_probabilities = born(state, basis).probs;

    for (std::uint64_t i = 0; i < config.shots; ++i) {
        SplitMix64 rng = SplitMix64::substream(config.master_seed, i);
        const std::uint64_t stream_seed = rng.state();
        const MeasurementResult shot =
            detail::run_shot(state, basis, h, config.mode, config.noise_p, rng);
        const Pattern pattern = classify(shot.truth);
        result.records.push_back({i, shot.outcome_index, shot.truth, pattern, stream_seed});
        ++report.outcome_counts[static_cast<std::size_t>(shot.outcome_index - 1)];
        ++report.pattern_counts[static_cast<std::size_t>(pattern)];
        if (pattern == Pattern::AllFalse || pattern == Pattern::TwoTrue)
            ++report.nchv_consistent_shots;
        if (pattern == Pattern::ExactlyOneTrue) ++report.qm_consistent_shots;
    }

    const double n = static_cast<double>(config.shots);
    for (std::size_t i = 0; i < 4; ++i) {
        report.frequencies[i] = static_cast<double>(report.outcome_counts[i]) / n;
        const double p = report.born_probabilities[i];
        report.std_errors[i] = std::sqrt(p * (1.0 - p) / n);
    }

    if (report.qm_consistent_shots == report.shots && report.nchv_consistent_shots == 0)
        report.verdict = Verdict::QM;
    else if (report.nchv_consistent_shots == report.shots && report.qm_consistent_shots == 0)
        report.verdict = Verdict::NCHV;
    else
        report.verdict = Verdict::Inconclusive;
    return result;
}

inline nlohmann::json report_to_json(const ExperimentConfig& config, const ExperimentResult& result) {
    const VerdictReport& r = result.report;
    nlohmann::json j;
    j["schema_version"] = 1;
    j["config"] = {
        {"state", config.state_spec},
        {"shots", config.shots},
        {"seed", config.master_seed},
        {"mode", to_string(config.mode)},
        {"coefficients", config.coefficients},
        {"noise", config.noise_p},
    };
    j["born_probabilities"] = r.born_probabilities;
    j["outcome_counts"] = r.outcome_counts;
    j["frequencies"] = r.frequencies;
    j["std_errors"] = r.std_errors;
    j["pattern_counts"] = {
        {"AllFalse", r.pattern_counts[0]},
        {"ExactlyOneTrue", r.pattern_counts[1]},
        {"TwoTrue", r.pattern_counts[2]},
        {"Other", r.pattern_counts[3]},
    };
    j["nchv_consistent_shots"] = r.nchv_consistent_shots;
    j["qm_consistent_shots"] = r.qm_consistent_shots;
    j["verdict"] = to_string(r.verdict);
    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : result.records) {
        records.push_back({
            {"shot_index", rec.shot_index},
            {"outcome", rec.outcome},
            {"truth", rec.truth},
            {"pattern", to_string(rec.pattern)},
            {"stream_seed", rec.stream_seed},
        });
    }
    j["records"] = std::move(records);
    return j;
}

inline std::string records_to_csv(const ExperimentResult& result) {
    std::string out = "shot_index,outcome,P1,P2,P3,P4,pattern\n";
    for (const auto& rec : result.records) {
        out += std::to_string(rec.shot_index) + ',' + std::to_string(rec.outcome);
        for (bool t : rec.truth) out += t ? ",1" : ",0";
        out += ',';
        out += to_string(rec.pattern);
        out += '\n';
    }
    return out;
}

// 16-row enumeration of the hidden-variable model in canonical order.
inline std::string nchv_table_csv() {
    std::string out = "vA,vB,va,vb,P1,P2,P3,P4,pattern\n";
    for (const auto& [state, outcome] : enumerate_all()) {
        out += std::to_string(state.vA) + ',' + std::to_string(state.vB) + ',' +
               std::to_string(state.va) + ',' + std::to_string(state.vb);
        for (bool t : outcome.truth) out += t ? ",1" : ",0";
        out += ',';
        out += to_string(outcome.pattern);
        out += '\n';
    }
    return out;
}

inline nlohmann::json nchv_table_json() {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [state, outcome] : enumerate_all()) {
        rows.push_back({
            {"vA", state.vA},
            {"vB", state.vB},
            {"va", state.va},
            {"vb", state.vb},
            {"P1", outcome.truth[0] ? 1 : 0},
            {"P2", outcome.truth[1] ? 1 : 0},
            {"P3", outcome.truth[2] ? 1 : 0},
            {"P4", outcome.truth[3] ? 1 : 0},
            {"pattern", to_string(outcome.pattern)},
        });
    }
    return nlohmann::json{{"schema_version", 1}, {"rows", std::move(rows)}};
}

inline std::string born_csv(const std::string& state_spec) {
    const TwoQubitState state = prepare(state_spec);
    const BornDistribution dist = born(state, build_proposition_basis());
    std::string out = "outcome,probability\n";
    for (std::size_t i = 0; i < 4; ++i)
        out += std::to_string(i + 1) + ',' + detail::fmt12(dist.probs[i]) + '\n';
    return out;
}

inline nlohmann::json born_json(const std::string& state_spec) {
    const TwoQubitState state = prepare(state_spec);
    const BornDistribution dist = born(state, build_proposition_basis());
    return nlohmann::json{
        {"schema_version", 1}, {"state", state_spec}, {"born_probabilities", dist.probs}};
}

// Every invariant that needs no sampling, one named line each.
// Returns 0 when all pass.
inline int run_verify(std::ostream& os) {
    int failures = 0;
    const auto check = [&](const std::string& name, bool ok) {
        os << (ok ? "ok   " : "FAIL ") << name << '\n';
        if (!ok) ++failures;
    };

    try {
        const PropositionBasis basis = build_proposition_basis();

        const Mat<4> zz = build_product_observable(ProductLabel::AB).matrix;
        const Mat<4> xx = build_product_observable(ProductLabel::ab).matrix;
        const Mat<4> zx = build_product_observable(ProductLabel::Ab).matrix;
        const Mat<4> xz = build_product_observable(ProductLabel::aB).matrix;
        for (const auto* m : {&zz, &xx, &zx, &xz}) {
            check("product observable is Hermitian", is_hermitian(*m));
            check("product observable squares to identity",
                  max_abs_diff(matmul(*m, *m), identity<4>()) < kStructuralTol);
        }

        const std::array<std::array<const Mat<4>*, 2>, 4> eigs = {{
            {&zz, &xx}, {&zz, &xx}, {&zx, &xz}, {&zx, &xz}}};
        const std::array<double, 4> signs = {+1, -1, +1, -1};
        for (std::size_t i = 0; i < 4; ++i) {
            const Vec<4>& psi = basis.states[i];
            const Vec<4> expected = scale(Complex{signs[i], 0.0}, psi);
            bool ok = true;
            for (const Mat<4>* m : eigs[i])
                ok = ok && max_abs_diff(matvec(*m, psi), expected) < kStructuralTol;
            check("defining eigenvalue equations, state " + std::to_string(i + 1), ok);
            check("unit norm, state " + std::to_string(i + 1),
                  std::abs(norm(psi) - 1.0) < kStructuralTol);
            check("rank-1 projector, state " + std::to_string(i + 1),
                  is_projector(basis.projectors[i]));
        }

        double max_cross = 0.0;
        double max_comm = 0.0;
        Mat<4> sum;
        for (std::size_t i = 0; i < 4; ++i) {
            sum = add(sum, basis.projectors[i]);
            for (std::size_t j = 0; j < 4; ++j) {
                if (i == j) continue;
                max_cross = std::max(max_cross,
                                     max_abs(matmul(basis.projectors[i], basis.projectors[j])));
                max_comm = std::max(
                    max_comm, max_abs_diff(matmul(basis.projectors[i], basis.projectors[j]),
                                           matmul(basis.projectors[j], basis.projectors[i])));
            }
        }
        check("projectors mutually orthogonal", max_cross < kStructuralTol);
        check("projectors pairwise commute", max_comm < kStructuralTol);
        check("projectors resolve the identity",
              max_abs_diff(sum, identity<4>()) < kStructuralTol);

        const MaximalObservable h = build_maximal_observable({1, 2, 3, 4}, basis);
        check("maximal observable is Hermitian", is_hermitian(h.matrix));
        const auto recovered = recover_projectors(h);
        double max_dev = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            max_dev = std::max(max_dev, max_abs_diff(recovered[i], basis.projectors[i]));
        check("projector recovery round-trip", max_dev < 1e-9);

        const NchvTheoremReport nchv = verify_nchv_theorems();
        check("hidden-variable model: two propositions can be true together",
              nchv.not_mutually_exclusive);
        check("hidden-variable model: all four can be false together", nchv.not_exhaustive);
        check("hidden-variable model: every state is AllFalse or TwoTrue",
              nchv.pattern_dichotomy);

        const QmTheoremReport qm = verify_qm_theorems(basis);
        check("quantum model: propositions mutually exclusive", qm.mutually_exclusive);
        check("quantum model: propositions exhaustive", qm.exhaustive);
        check("quantum model: exactly one proposition true per shot", qm.one_and_only_one);
    } catch (const std::exception& e) {
        os << "FAIL construction fault: " << e.what() << '\n';
        ++failures;
    }

    os << (failures == 0 ? "all checks passed" : "checks FAILED: " + std::to_string(failures))
       << '\n';
    return failures == 0 ? 0 : 1;
}

}  // namespace bks
