#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bks/linalg.hpp"
#include "bks/observables.hpp"
#include "bks/pattern.hpp"
#include "bks/rng.hpp"

// Quantum side of the test: state preparation, Born-rule probabilities for
// the joint measurement {P1..P4}, seeded sampling with collapse, a sequential
// commuting-measurement mode, and measurement of the maximal observable.

namespace bks {

// Probabilities below this are rounding dust from analytically-zero
// amplitudes; they are clamped so an impossible outcome is never sampled.
inline constexpr double kProbClamp = 1e-14;

struct TwoQubitState {
    Vec<4> amplitudes;       // unit norm
    std::string provenance;  // descriptor the state came from
};

struct BornDistribution {
    std::array<double, 4> probs;  // nonnegative, sums to 1
};

struct MeasurementResult {
    int outcome_index;  // 1..4
    TwoQubitState post_state;
    std::array<bool, 4> truth;  // exactly one true, at outcome_index
};

namespace detail {

inline TwoQubitState make_state(const Vec<4>& amplitudes, std::string provenance) {
    if (!is_finite(amplitudes)) throw std::invalid_argument("state amplitudes must be finite");
    return {normalized(amplitudes), std::move(provenance)};
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline double parse_real(const std::string& s) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed number in state descriptor: '" + s + "'");
    }
    if (used != s.size())
        throw std::invalid_argument("malformed number in state descriptor: '" + s + "'");
    return value;
}

}  // namespace detail

inline TwoQubitState prepare_preset(const std::string& name) {
    const double r = 1.0 / std::sqrt(2.0);
    if (name == "phi+") return detail::make_state({r, 0, 0, r}, "preset:phi+");
    if (name == "psi-") return detail::make_state({0, r, -r, 0}, "preset:psi-");
    if (name == "psi3") return detail::make_state({0.5, 0.5, 0.5, -0.5}, "preset:psi3");
    if (name == "psi4") return detail::make_state({0.5, -0.5, -0.5, -0.5}, "preset:psi4");
    if (name == "up-up") return detail::make_state({1, 0, 0, 0}, "preset:up-up");
    if (name == "plus-plus") return detail::make_state({0.5, 0.5, 0.5, 0.5}, "preset:plus-plus");
    throw std::invalid_argument("unknown preset '" + name + "'");
}

inline TwoQubitState prepare_explicit(const Vec<4>& amplitudes) {
    return detail::make_state(amplitudes, "explicit");
}

// Rotation-invariant draw from the pure-state sphere: normalize a vector of
// i.i.d. complex Gaussian amplitudes.
inline TwoQubitState prepare_random(std::uint64_t seed) {
    SplitMix64 rng = SplitMix64::substream(seed, 0);
    Vec<4> amplitudes;
    for (auto& a : amplitudes) {
        const double re = rng.next_normal();
        const double im = rng.next_normal();
        a = Complex{re, im};
    }
    return detail::make_state(amplitudes, "random:" + std::to_string(seed));
}

// Descriptor grammar:
//   preset:<phi+|psi-|psi3|psi4|up-up|plus-plus>
//   amps:<re,im;re,im;re,im;re,im>
//   random:<seed>
inline TwoQubitState prepare(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("state descriptor must be <kind>:<payload>, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string payload = spec.substr(colon + 1);

    if (kind == "preset") return prepare_preset(payload);
    if (kind == "amps") {
        const auto parts = detail::split(payload, ';');
        if (parts.size() != 4)
            throw std::invalid_argument("amps descriptor needs four ';'-separated amplitudes");
        Vec<4> amplitudes;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto pair = detail::split(parts[i], ',');
            if (pair.size() != 2)
                throw std::invalid_argument("each amplitude needs 're,im', got '" + parts[i] + "'");
            amplitudes[i] = Complex{detail::parse_real(pair[0]), detail::parse_real(pair[1])};
        }
        TwoQubitState state = detail::make_state(amplitudes, "amps:" + payload);
        return state;
    }
    if (kind == "random") {
        std::size_t used = 0;
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(payload, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed seed '" + payload + "'");
        }
        if (used != payload.size()) throw std::invalid_argument("malformed seed '" + payload + "'");
        return prepare_random(seed);
    }
    throw std::invalid_argument("unknown state descriptor kind '" + kind + "'");
}

// prob_i = |<psi_i|state>|^2, clamped and renormalization-free (the basis
// resolves the identity, so the raw probabilities already sum to 1).
inline BornDistribution born(const TwoQubitState& state, const PropositionBasis& basis) {
    BornDistribution dist{};
    for (std::size_t i = 0; i < 4; ++i) {
        const double p = std::norm(inner(basis.states[i], state.amplitudes));
        dist.probs[i] = p < kProbClamp ? 0.0 : p;
    }
    return dist;
}

namespace detail {

// Inverse-CDF with one uniform draw, cumulative order P1 -> P4.
inline int sample_index(const std::array<double, 4>& probs, SplitMix64& rng) {
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (total <= 0.0) throw std::domain_error("degenerate outcome distribution");
    const double u = rng.next_double() * total;
    double cdf = 0.0;
    int last_nonzero = -1;
    for (int i = 0; i < 4; ++i) {
        if (probs[i] == 0.0) continue;
        last_nonzero = i;
        cdf += probs[i];
        if (u < cdf) return i;
    }
    return last_nonzero;
}

inline MeasurementResult make_result(int index, const TwoQubitState& state,
                                     const PropositionBasis& basis) {
    const Vec<4> projected = matvec(basis.projectors[index], state.amplitudes);
    std::array<bool, 4> truth{};
    truth[index] = true;
    return {index + 1, {normalized(projected), state.provenance}, truth};
}

}  // namespace detail

// Joint measurement of all four propositions in one shot. With probability
// noise_p the shot's distribution is replaced by uniform 1/4 (depolarizing
// knob, default off).
inline MeasurementResult sample(const TwoQubitState& state, const PropositionBasis& basis,
                                SplitMix64& rng, double noise_p = 0.0) {
    if (norm(state.amplitudes) < 1e-9) throw std::domain_error("degenerate state");
    if (noise_p > 0.0 && rng.next_double() < noise_p) {
        // depolarized shot: uniform outcome, post state is the outcome's
        // eigenstate (the input may be orthogonal to it)
        const int index = detail::sample_index({0.25, 0.25, 0.25, 0.25}, rng);
        std::array<bool, 4> truth{};
        truth[index] = true;
        return {index + 1, {basis.states[index], state.provenance}, truth};
    }
    const std::array<double, 4> probs = born(state, basis).probs;
    return detail::make_result(detail::sample_index(probs, rng), state, basis);
}

// Measures the binary observables P_i one at a time in the given order,
// collapsing after each. Exactly one measurement comes out true: the
// projectors are orthogonal (no second true) and resolve the identity (after
// three false results the state lies in the remaining eigenspace).
inline MeasurementResult sample_sequential(const TwoQubitState& state,
                                           const PropositionBasis& basis,
                                           const std::array<int, 4>& order, SplitMix64& rng) {
    std::array<bool, 4> seen{};
    for (int idx : order) {
        if (idx < 1 || idx > 4 || seen[idx - 1])
            throw std::invalid_argument("order must be a permutation of 1..4");
        seen[idx - 1] = true;
    }
    if (norm(state.amplitudes) < 1e-9) throw std::domain_error("degenerate state");

    Vec<4> current = state.amplitudes;
    std::array<bool, 4> truth{};
    int outcome = -1;
    for (std::size_t k = 0; k < 4; ++k) {
        const int i = order[k] - 1;
        if (outcome >= 0) continue;  // orthogonality: remaining answers are false
        double p_true = inner(current, matvec(basis.projectors[i], current)).real();
        p_true = p_true < kProbClamp ? 0.0 : std::min(p_true, 1.0);
        // By completeness, if the first three answers were false the last
        // projector fires with probability 1; force it against rounding.
        const bool force_true = (k == 3) && p_true > 0.0;
        const bool drew_true = p_true > 0.0 && rng.next_double() < p_true;
        if (drew_true || force_true) {
            truth[i] = true;
            outcome = i;
            current = normalized(matvec(basis.projectors[i], current));
        } else {
            // collapse onto the complement
            Vec<4> rejected = current;
            const Vec<4> proj = matvec(basis.projectors[i], current);
            for (std::size_t m = 0; m < 4; ++m) rejected[m] -= proj[m];
            current = normalized(rejected);
        }
    }
    if (outcome < 0) throw std::logic_error("sequential measurement produced no outcome");
    return {outcome + 1, {current, state.provenance}, truth};
}

// One-shot measurement of H = sum_i c_i P_i: returns the observed eigenvalue
// together with the proposition outcome it decides.
inline std::pair<double, MeasurementResult> measure_maximal(const TwoQubitState& state,
                                                            const MaximalObservable& h,
                                                            SplitMix64& rng) {
    if (norm(state.amplitudes) < 1e-9) throw std::domain_error("degenerate state");
    const std::array<Mat<4>, 4> projectors = recover_projectors(h);
    std::array<double, 4> probs{};
    for (std::size_t i = 0; i < 4; ++i) {
        const double p = inner(state.amplitudes, matvec(projectors[i], state.amplitudes)).real();
        probs[i] = p < kProbClamp ? 0.0 : p;
    }
    const int index = detail::sample_index(probs, rng);
    const Vec<4> projected = matvec(projectors[index], state.amplitudes);
    std::array<bool, 4> truth{};
    truth[index] = true;
    MeasurementResult result{index + 1, {normalized(projected), state.provenance}, truth};
    return {h.coefficients[index], result};
}

struct QmTheoremReport {
    bool mutually_exclusive;  // P_i P_j = 0 for i != j
    bool exhaustive;          // sum_i P_i = I
    bool one_and_only_one;    // per-shot contract, implied by the two above

    bool all_hold() const { return mutually_exclusive && exhaustive && one_and_only_one; }
};

inline QmTheoremReport verify_qm_theorems(const PropositionBasis& basis) {
    QmTheoremReport report{true, true, false};
    Mat<4> sum;
    for (std::size_t i = 0; i < 4; ++i) {
        sum = add(sum, basis.projectors[i]);
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            if (max_abs(matmul(basis.projectors[i], basis.projectors[j])) > kStructuralTol)
                report.mutually_exclusive = false;
        }
    }
    if (max_abs_diff(sum, identity<4>()) > kStructuralTol) report.exhaustive = false;
    report.one_and_only_one = report.mutually_exclusive && report.exhaustive;
    return report;
}

}  // namespace bks
