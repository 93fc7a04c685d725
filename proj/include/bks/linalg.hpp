#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

// Dense complex vectors and matrices for dimensions 2 and 4.
// Dimensions are template parameters, so mismatches are compile errors.
// All values are immutable-by-convention and all operations are pure.

namespace bks {

using Complex = std::complex<double>;

inline constexpr double kStructuralTol = 1e-12;

template <std::size_t N>
using Vec = std::array<Complex, N>;

template <std::size_t N>
struct Mat {
    static constexpr std::size_t dim = N;
    std::array<Complex, N * N> entries{};

    Complex& operator()(std::size_t r, std::size_t c) { return entries[r * N + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries[r * N + c]; }
};

template <std::size_t N>
Mat<N> identity() {
    Mat<N> m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
}

// sigma_z = diag(+1, -1); m=0 is the +1 eigenstate ("spin up").
inline Mat<2> pauli_z() {
    Mat<2> m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

// sigma_x = antidiag(+1, +1).
inline Mat<2> pauli_x() {
    Mat<2> m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

// Kronecker product in the fixed basis ordering |m1 m2> -> index 2*m1 + m2.
inline Mat<4> tensor(const Mat<2>& m1, const Mat<2>& m2) {
    Mat<4> out;
    for (std::size_t r1 = 0; r1 < 2; ++r1)
        for (std::size_t c1 = 0; c1 < 2; ++c1)
            for (std::size_t r2 = 0; r2 < 2; ++r2)
                for (std::size_t c2 = 0; c2 < 2; ++c2)
                    out(2 * r1 + r2, 2 * c1 + c2) = m1(r1, c1) * m2(r2, c2);
    return out;
}

template <std::size_t N>
Vec<N> matvec(const Mat<N>& m, const Vec<N>& v) {
    Vec<N> out{};
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) out[r] += m(r, c) * v[c];
    return out;
}

template <std::size_t N>
Mat<N> matmul(const Mat<N>& m1, const Mat<N>& m2) {
    Mat<N> out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < N; ++k) s += m1(r, k) * m2(k, c);
            out(r, c) = s;
        }
    return out;
}

template <std::size_t N>
Mat<N> adjoint(const Mat<N>& m) {
    Mat<N> out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) out(r, c) = std::conj(m(c, r));
    return out;
}

// Conjugate-linear in the first argument.
template <std::size_t N>
Complex inner(const Vec<N>& v1, const Vec<N>& v2) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += std::conj(v1[i]) * v2[i];
    return s;
}

template <std::size_t N>
Mat<N> outer(const Vec<N>& v) {
    Mat<N> out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) out(r, c) = v[r] * std::conj(v[c]);
    return out;
}

template <std::size_t N>
Mat<N> add(const Mat<N>& m1, const Mat<N>& m2) {
    Mat<N> out;
    for (std::size_t i = 0; i < N * N; ++i) out.entries[i] = m1.entries[i] + m2.entries[i];
    return out;
}

template <std::size_t N>
Mat<N> sub(const Mat<N>& m1, const Mat<N>& m2) {
    Mat<N> out;
    for (std::size_t i = 0; i < N * N; ++i) out.entries[i] = m1.entries[i] - m2.entries[i];
    return out;
}

template <std::size_t N>
Mat<N> scale(Complex alpha, const Mat<N>& m) {
    Mat<N> out;
    for (std::size_t i = 0; i < N * N; ++i) out.entries[i] = alpha * m.entries[i];
    return out;
}

template <std::size_t N>
Vec<N> scale(Complex alpha, const Vec<N>& v) {
    Vec<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = alpha * v[i];
    return out;
}

template <std::size_t N>
double norm(const Vec<N>& v) {
    return std::sqrt(inner(v, v).real());
}

template <std::size_t N>
Vec<N> normalized(const Vec<N>& v) {
    const double n = norm(v);
    if (n < 1e-9) throw std::domain_error("cannot normalize a (near-)zero vector");
    return scale(Complex{1.0 / n, 0.0}, v);
}

template <std::size_t N>
double max_abs(const Mat<N>& m) {
    double mx = 0.0;
    for (const auto& e : m.entries) mx = std::max(mx, std::abs(e));
    return mx;
}

template <std::size_t N>
double max_abs_diff(const Mat<N>& m1, const Mat<N>& m2) {
    return max_abs(sub(m1, m2));
}

template <std::size_t N>
double max_abs_diff(const Vec<N>& v1, const Vec<N>& v2) {
    double mx = 0.0;
    for (std::size_t i = 0; i < N; ++i) mx = std::max(mx, std::abs(v1[i] - v2[i]));
    return mx;
}

template <std::size_t N>
bool is_finite(const Vec<N>& v) {
    for (const auto& e : v)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

template <std::size_t N>
bool is_finite(const Mat<N>& m) {
    for (const auto& e : m.entries)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

template <std::size_t N>
bool is_hermitian(const Mat<N>& m, double tol = kStructuralTol) {
    return max_abs_diff(m, adjoint(m)) <= tol;
}

// Hermitian and idempotent within tol.
template <std::size_t N>
bool is_projector(const Mat<N>& m, double tol = kStructuralTol) {
    return is_hermitian(m, tol) && max_abs_diff(matmul(m, m), m) <= tol;
}

}  // namespace bks
