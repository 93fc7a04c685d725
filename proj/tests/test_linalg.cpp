#include <doctest.h>

#include "bks/linalg.hpp"
#include "bks/rng.hpp"

using namespace bks;

namespace {

Mat<2> random_mat2(SplitMix64& rng) {
    Mat<2> m;
    for (auto& e : m.entries) e = Complex{2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
    return m;
}

Vec<4> random_vec4(SplitMix64& rng) {
    Vec<4> v;
    for (auto& e : v) e = Complex{2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
    return v;
}

Mat<4> random_mat4(SplitMix64& rng) {
    Mat<4> m;
    for (auto& e : m.entries) e = Complex{2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
    return m;
}

}  // namespace

TEST_CASE("tensor of identities is the identity") {
    CHECK(max_abs_diff(tensor(identity<2>(), identity<2>()), identity<4>()) == 0.0);
}

TEST_CASE("tensor sigma_z x sigma_z") {
    const Mat<4> m = tensor(pauli_z(), pauli_z());
    Mat<4> expected;
    expected(0, 0) = 1.0;
    expected(1, 1) = -1.0;
    expected(2, 2) = -1.0;
    expected(3, 3) = 1.0;
    CHECK(max_abs_diff(m, expected) == 0.0);
}

TEST_CASE("tensor sigma_z x sigma_x") {
    const Mat<4> m = tensor(pauli_z(), pauli_x());
    Mat<4> expected;
    expected(0, 1) = 1.0;
    expected(1, 0) = 1.0;
    expected(2, 3) = -1.0;
    expected(3, 2) = -1.0;
    CHECK(max_abs_diff(m, expected) == 0.0);
}

TEST_CASE("matvec identity and eigenvector cases") {
    SplitMix64 rng(7);
    const Vec<4> v = random_vec4(rng);
    CHECK(max_abs_diff(matvec(identity<4>(), v), v) == 0.0);

    const double r = 1.0 / std::sqrt(2.0);
    const Vec<4> bell = {r, 0, 0, r};
    CHECK(max_abs_diff(matvec(tensor(pauli_z(), pauli_z()), bell), bell) < 1e-15);

    // sigma_z x sigma_x flips the second qubit with a sign from the first
    const Vec<4> e00 = {1, 0, 0, 0};
    const Vec<4> e01 = {0, 1, 0, 0};
    CHECK(max_abs_diff(matvec(tensor(pauli_z(), pauli_x()), e00), e01) == 0.0);
}

TEST_CASE("matmul basics") {
    SplitMix64 rng(11);
    const Mat<4> m = random_mat4(rng);
    CHECK(max_abs_diff(matmul(identity<4>(), m), m) == 0.0);
    CHECK(max_abs_diff(matmul(pauli_x(), pauli_x()), identity<2>()) == 0.0);

    // sigma_z sigma_x = [[0,1],[-1,0]]  (hand expansion)
    const Mat<2> zx = matmul(pauli_z(), pauli_x());
    Mat<2> expected;
    expected(0, 1) = 1.0;
    expected(1, 0) = -1.0;
    CHECK(max_abs_diff(zx, expected) == 0.0);
}

TEST_CASE("adjoint") {
    CHECK(max_abs_diff(adjoint(identity<4>()), identity<4>()) == 0.0);
    const Mat<4> zx = tensor(pauli_z(), pauli_x());
    CHECK(max_abs_diff(adjoint(zx), zx) == 0.0);

    SplitMix64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat<4> m = random_mat4(rng);
        CHECK(max_abs_diff(adjoint(adjoint(m)), m) == 0.0);
    }
}

TEST_CASE("inner products") {
    SplitMix64 rng(17);
    const Vec<4> v = random_vec4(rng);
    const Complex nn = inner(v, v);
    CHECK(nn.real() >= 0.0);
    CHECK(std::abs(nn.imag()) < 1e-15);

    const Vec<4> e00 = {1, 0, 0, 0};
    const Vec<4> e01 = {0, 1, 0, 0};
    CHECK(std::abs(inner(e00, e01)) == 0.0);

    const double r = 1.0 / std::sqrt(2.0);
    const Vec<4> bell = {r, 0, 0, r};
    CHECK(std::abs(inner(bell, e00) - Complex{r, 0}) < 1e-15);
}

TEST_CASE("structural predicates") {
    CHECK(is_projector(identity<4>()));
    CHECK_FALSE(is_projector(tensor(pauli_z(), pauli_z())));  // squares to I, not itself

    const double r = 1.0 / std::sqrt(2.0);
    const Vec<4> bell = {r, 0, 0, r};
    CHECK(is_projector(outer(bell)));
}

TEST_CASE("tensor is bilinear") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat<2> a = random_mat2(rng);
        const Mat<2> b = random_mat2(rng);
        const Mat<2> c = random_mat2(rng);
        const Complex alpha{2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
        const Mat<4> lhs = tensor(add(scale(alpha, a), b), c);
        const Mat<4> rhs = add(scale(alpha, tensor(a, c)), tensor(b, c));
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("mixed-product identity (A x B)(C x D) = (AC) x (BD)") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat<2> a = random_mat2(rng);
        const Mat<2> b = random_mat2(rng);
        const Mat<2> c = random_mat2(rng);
        const Mat<2> d = random_mat2(rng);
        const Mat<4> lhs = matmul(tensor(a, b), tensor(c, d));
        const Mat<4> rhs = tensor(matmul(a, c), matmul(b, d));
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("adjoint reverses products") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat<4> m1 = random_mat4(rng);
        const Mat<4> m2 = random_mat4(rng);
        CHECK(max_abs_diff(adjoint(matmul(m1, m2)), matmul(adjoint(m2), adjoint(m1))) < 1e-12);
    }
}

TEST_CASE("inner is compatible with the adjoint") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat<4> m = random_mat4(rng);
        const Vec<4> v = random_vec4(rng);
        const Vec<4> w = random_vec4(rng);
        CHECK(std::abs(inner(v, matvec(m, w)) - inner(matvec(adjoint(m), v), w)) < 1e-12);
    }
}
