#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "bks/linalg.hpp"

// The four product observables built from sigma_z and sigma_x on each qubit,
// the joint eigenbasis that represents the four propositions, and the
// nondegenerate observable whose measurement decides all four at once.

namespace bks {

enum class ProductLabel { AB, ab, Ab, aB };

inline const char* to_string(ProductLabel l) {
    switch (l) {
        case ProductLabel::AB: return "AB";
        case ProductLabel::ab: return "ab";
        case ProductLabel::Ab: return "Ab";
        case ProductLabel::aB: return "aB";
    }
    throw std::invalid_argument("unknown product label");
}

struct ProductObservable {
    ProductLabel label;
    Mat<4> matrix;  // Hermitian, squares to identity
};

inline ProductObservable build_product_observable(ProductLabel label) {
    switch (label) {
        case ProductLabel::AB: return {label, tensor(pauli_z(), pauli_z())};
        case ProductLabel::ab: return {label, tensor(pauli_x(), pauli_x())};
        case ProductLabel::Ab: return {label, tensor(pauli_z(), pauli_x())};
        case ProductLabel::aB: return {label, tensor(pauli_x(), pauli_z())};
    }
    throw std::invalid_argument("unknown product label");
}

struct PropositionBasis {
    std::array<Vec<4>, 4> states;      // unit norm, first nonzero amplitude real positive
    std::array<Mat<4>, 4> projectors;  // rank-1 outer products, mutually orthogonal, sum to I
};

namespace detail {

// Joint eigenvector of (m1, s1) and (m2, s2), fixed analytically and
// re-verified against the defining eigenvalue equations.
inline Vec<4> joint_eigenvector(const Mat<4>& m1, double s1, const Mat<4>& m2, double s2,
                                const Vec<4>& candidate) {
    const Vec<4> v = normalized(candidate);
    const Vec<4> sv1 = scale(Complex{s1, 0.0}, v);
    const Vec<4> sv2 = scale(Complex{s2, 0.0}, v);
    if (max_abs_diff(matvec(m1, v), sv1) > kStructuralTol ||
        max_abs_diff(matvec(m2, v), sv2) > kStructuralTol)
        throw std::logic_error("joint eigenvector candidate fails its eigenvalue equations");
    return v;
}

}  // namespace detail

// States solve, per index:
//   1: (AB, +1), (ab, +1)    2: (AB, -1), (ab, -1)
//   3: (Ab, +1), (aB, +1)    4: (Ab, -1), (aB, -1)
inline PropositionBasis build_proposition_basis() {
    const Mat<4> zz = tensor(pauli_z(), pauli_z());
    const Mat<4> xx = tensor(pauli_x(), pauli_x());
    const Mat<4> zx = tensor(pauli_z(), pauli_x());
    const Mat<4> xz = tensor(pauli_x(), pauli_z());

    PropositionBasis basis;
    basis.states[0] = detail::joint_eigenvector(zz, +1, xx, +1, Vec<4>{1, 0, 0, 1});
    basis.states[1] = detail::joint_eigenvector(zz, -1, xx, -1, Vec<4>{0, 1, -1, 0});
    basis.states[2] = detail::joint_eigenvector(zx, +1, xz, +1, Vec<4>{1, 1, 1, -1});
    basis.states[3] = detail::joint_eigenvector(zx, -1, xz, -1, Vec<4>{1, -1, -1, -1});

    for (std::size_t i = 0; i < 4; ++i) basis.projectors[i] = outer(basis.states[i]);

    // Mutual orthogonality and resolution of identity.
    Mat<4> sum;
    for (std::size_t i = 0; i < 4; ++i) {
        sum = add(sum, basis.projectors[i]);
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            if (max_abs(matmul(basis.projectors[i], basis.projectors[j])) > kStructuralTol)
                throw std::logic_error("constructed projectors are not mutually orthogonal");
        }
    }
    if (max_abs_diff(sum, identity<4>()) > kStructuralTol)
        throw std::logic_error("constructed projectors do not resolve the identity");
    return basis;
}

struct MaximalObservable {
    std::array<double, 4> coefficients;  // pairwise distinct eigenvalues
    Mat<4> matrix;                       // sum_i c_i P_i
};

inline constexpr double kCoefficientGapRel = 1e-9;

// Weighted projector sum with distinct weights; the spectrum is exactly the
// coefficient set, so the observable is nondegenerate.
inline MaximalObservable build_maximal_observable(const std::array<double, 4>& coefficients,
                                                  const PropositionBasis& basis) {
    double max_abs_c = 0.0;
    for (double c : coefficients) max_abs_c = std::max(max_abs_c, std::abs(c));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (std::abs(coefficients[i] - coefficients[j]) <= kCoefficientGapRel * max_abs_c)
                throw std::invalid_argument("coefficients must be pairwise distinct");

    Mat<4> h;
    for (std::size_t i = 0; i < 4; ++i)
        h = add(h, scale(Complex{coefficients[i], 0.0}, basis.projectors[i]));
    return {coefficients, h};
}

// P_i = prod_{j != i} (H - c_j I) / (c_i - c_j).
inline std::array<Mat<4>, 4> recover_projectors(const MaximalObservable& h) {
    std::array<Mat<4>, 4> out;
    const Mat<4> id = identity<4>();
    for (std::size_t i = 0; i < 4; ++i) {
        Mat<4> p = id;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j == i) continue;
            const Mat<4> factor =
                scale(Complex{1.0 / (h.coefficients[i] - h.coefficients[j]), 0.0},
                      sub(h.matrix, scale(Complex{h.coefficients[j], 0.0}, id)));
            p = matmul(p, factor);
        }
        out[i] = p;
    }
    return out;
}

}  // namespace bks
