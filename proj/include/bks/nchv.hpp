#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "bks/pattern.hpp"

// Noncontextual hidden-variable model of the four-proposition test.
// Each of the four single-particle observables A, B (sigma_z on particles 1
// and 2) and a, b (sigma_x on particles 1 and 2) carries a predefined value
// +1 or -1; a product observable's value is the product of its factors.
// This module is deliberately independent of the linear-algebra layer.

namespace bks {

struct HiddenState {
    int vA, vB, va, vb;  // each exactly +1 or -1
};

struct PropositionOutcome {
    std::array<bool, 4> truth;  // P1..P4
    Pattern pattern;
};

inline void validate(const HiddenState& h) {
    for (int v : {h.vA, h.vB, h.va, h.vb})
        if (v != 1 && v != -1) throw std::invalid_argument("hidden values must be +1 or -1");
}

// P1: AB=+1 and ab=+1    P2: AB=-1 and ab=-1
// P3: Ab=+1 and aB=+1    P4: Ab=-1 and aB=-1
inline PropositionOutcome evaluate(const HiddenState& h) {
    validate(h);
    const int AB = h.vA * h.vB;
    const int ab = h.va * h.vb;
    const int Ab = h.vA * h.vb;
    const int aB = h.va * h.vB;
    const std::array<bool, 4> truth = {
        AB == 1 && ab == 1,
        AB == -1 && ab == -1,
        Ab == 1 && aB == 1,
        Ab == -1 && aB == -1,
    };
    return {truth, classify(truth)};
}

// All 16 assignments, lexicographic on (vA, vB, va, vb) with +1 before -1.
inline std::array<std::pair<HiddenState, PropositionOutcome>, 16> enumerate_all() {
    std::array<std::pair<HiddenState, PropositionOutcome>, 16> out;
    std::size_t k = 0;
    for (int vA : {1, -1})
        for (int vB : {1, -1})
            for (int va : {1, -1})
                for (int vb : {1, -1}) {
                    const HiddenState h{vA, vB, va, vb};
                    out[k++] = {h, evaluate(h)};
                }
    return out;
}

struct NchvTheoremReport {
    bool not_mutually_exclusive;  // some state makes two propositions true
    bool not_exhaustive;          // some state makes all four false
    bool pattern_dichotomy;       // every state is AllFalse or TwoTrue

    bool all_hold() const { return not_mutually_exclusive && not_exhaustive && pattern_dichotomy; }
};

inline NchvTheoremReport verify_nchv_theorems() {
    NchvTheoremReport report{false, false, true};
    for (const auto& [state, outcome] : enumerate_all()) {
        (void)state;
        if (outcome.pattern == Pattern::TwoTrue) report.not_mutually_exclusive = true;
        if (outcome.pattern == Pattern::AllFalse) report.not_exhaustive = true;
        if (outcome.pattern != Pattern::AllFalse && outcome.pattern != Pattern::TwoTrue)
            report.pattern_dichotomy = false;
    }
    return report;
}

}  // namespace bks
