#pragma once

#include <array>
#include <cstdint>

// Test-side statistics helpers.

namespace bks::teststats {

// Chi-square homogeneity statistic for two outcome histograms, with the
// number of degrees of freedom (pooled-nonzero bins minus one).
struct Chi2 {
    double statistic;
    int dof;
};

inline Chi2 chi2_homogeneity(const std::array<std::uint64_t, 4>& h1,
                             const std::array<std::uint64_t, 4>& h2) {
    const double n1 = static_cast<double>(h1[0] + h1[1] + h1[2] + h1[3]);
    const double n2 = static_cast<double>(h2[0] + h2[1] + h2[2] + h2[3]);
    double stat = 0.0;
    int bins = 0;
    for (int i = 0; i < 4; ++i) {
        const double pooled = static_cast<double>(h1[i] + h2[i]);
        if (pooled == 0.0) continue;
        ++bins;
        const double e1 = n1 * pooled / (n1 + n2);
        const double e2 = n2 * pooled / (n1 + n2);
        const double d1 = static_cast<double>(h1[i]) - e1;
        const double d2 = static_cast<double>(h2[i]) - e2;
        stat += d1 * d1 / e1 + d2 * d2 / e2;
    }
    return {stat, bins - 1};
}

// Upper critical values of the chi-square distribution at p = 0.001.
inline double chi2_crit_p001(int dof) {
    switch (dof) {
        case 1: return 10.828;
        case 2: return 13.816;
        case 3: return 16.266;
        default: return 16.266;
    }
}

inline bool chi2_accepts(const std::array<std::uint64_t, 4>& h1,
                         const std::array<std::uint64_t, 4>& h2) {
    const Chi2 c = chi2_homogeneity(h1, h2);
    if (c.dof <= 0) return true;  // identical support with a single bin
    return c.statistic < chi2_crit_p001(c.dof);
}

}  // namespace bks::teststats
