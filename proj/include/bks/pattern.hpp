#pragma once

#include <array>
#include <stdexcept>

// Truth-pattern classifier shared by the hidden-variable model and the
// quantum sampler. The hidden-variable model only ever produces AllFalse or
// TwoTrue; the quantum sampler only ever produces ExactlyOneTrue.

namespace bks {

enum class Pattern { AllFalse, ExactlyOneTrue, TwoTrue, Other };

inline Pattern classify(const std::array<bool, 4>& truth) {
    int count = 0;
    for (bool t : truth) count += t ? 1 : 0;
    switch (count) {
        case 0: return Pattern::AllFalse;
        case 1: return Pattern::ExactlyOneTrue;
        case 2: return Pattern::TwoTrue;
        default: return Pattern::Other;
    }
}

inline const char* to_string(Pattern p) {
    switch (p) {
        case Pattern::AllFalse: return "AllFalse";
        case Pattern::ExactlyOneTrue: return "ExactlyOneTrue";
        case Pattern::TwoTrue: return "TwoTrue";
        case Pattern::Other: return "Other";
    }
    throw std::invalid_argument("unknown pattern");
}

}  // namespace bks
