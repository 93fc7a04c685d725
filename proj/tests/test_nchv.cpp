// Only the hidden-variable header: this model must stay independent of the
// quantum machinery.
#include "bks/nchv.hpp"

#include <doctest.h>

using namespace bks;

TEST_CASE("paper witnesses") {
    const PropositionOutcome all_plus = evaluate({1, 1, 1, 1});
    CHECK(all_plus.truth == std::array<bool, 4>{true, false, true, false});
    CHECK(all_plus.pattern == Pattern::TwoTrue);

    const PropositionOutcome flipped_b = evaluate({1, 1, 1, -1});
    CHECK(flipped_b.truth == std::array<bool, 4>{false, false, false, false});
    CHECK(flipped_b.pattern == Pattern::AllFalse);

    const PropositionOutcome mixed = evaluate({1, -1, -1, 1});
    CHECK(mixed.truth == std::array<bool, 4>{false, true, true, false});
    CHECK(mixed.pattern == Pattern::TwoTrue);
}

TEST_CASE("invalid hidden values are rejected") {
    CHECK_THROWS_AS(evaluate({0, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate({1, 1, 2, -1}), std::invalid_argument);
}

TEST_CASE("enumeration covers all 16 assignments with the known pattern counts") {
    const auto table = enumerate_all();
    CHECK(table.size() == 16);

    int all_false = 0, two_true = 0, one_true = 0, other = 0;
    for (const auto& [state, outcome] : table) {
        (void)state;
        switch (outcome.pattern) {
            case Pattern::AllFalse: ++all_false; break;
            case Pattern::TwoTrue: ++two_true; break;
            case Pattern::ExactlyOneTrue: ++one_true; break;
            case Pattern::Other: ++other; break;
        }
    }
    CHECK(all_false == 8);
    CHECK(two_true == 8);
    CHECK(one_true == 0);
    CHECK(other == 0);

    // canonical order: first entry all +1, last all -1
    CHECK(table.front().first.vA == 1);
    CHECK(table.front().first.vb == 1);
    CHECK(table.back().first.vA == -1);
    CHECK(table.back().first.vb == -1);
}

TEST_CASE("pattern dichotomy follows the sign of the product vA*vB*va*vb") {
    for (const auto& [state, outcome] : enumerate_all()) {
        const int product = state.vA * state.vB * state.va * state.vb;
        if (product == -1)
            CHECK(outcome.pattern == Pattern::AllFalse);
        else
            CHECK(outcome.pattern == Pattern::TwoTrue);
    }
}

TEST_CASE("true pairs are always one of {P1,P3},{P1,P4},{P2,P3},{P2,P4}") {
    for (const auto& [state, outcome] : enumerate_all()) {
        (void)state;
        if (outcome.pattern != Pattern::TwoTrue) continue;
        const auto& t = outcome.truth;
        CHECK_FALSE((t[0] && t[1]));  // P1 with P2 never
        CHECK_FALSE((t[2] && t[3]));  // P3 with P4 never
    }
}

TEST_CASE("evaluation is invariant under a global sign flip") {
    for (const auto& [state, outcome] : enumerate_all()) {
        const PropositionOutcome flipped =
            evaluate({-state.vA, -state.vB, -state.va, -state.vb});
        CHECK(flipped.truth == outcome.truth);
    }
}

TEST_CASE("all three hidden-variable theorems hold") {
    const NchvTheoremReport report = verify_nchv_theorems();
    CHECK(report.not_mutually_exclusive);
    CHECK(report.not_exhaustive);
    CHECK(report.pattern_dichotomy);
    CHECK(report.all_hold());
}
