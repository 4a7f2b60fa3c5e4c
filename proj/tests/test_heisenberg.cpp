#include <doctest.h>

#include <random>

#include "weddle/heis/heisenberg.hpp"

using namespace weddle;
using namespace weddle::heis;

namespace {

HeisenbergElement random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, 2);
    return HeisenbergElement(d(rng), {d(rng), d(rng)}, {d(rng), d(rng)});
}

const SymplecticMat& random_sp(std::mt19937_64& rng) {
    const auto& grp = sympchar::symplectic_group(2, 3);
    std::uniform_int_distribution<std::size_t> pick(0, grp.elements.size() - 1);
    return grp.elements[pick(rng)];
}

}  // namespace

TEST_CASE("group law") {
    auto e1 = HeisenbergElement(0, {1, 0}, {0, 0});
    auto f1 = HeisenbergElement(0, {0, 0}, {1, 0});
    auto ab = h_mul(e1, f1), ba = h_mul(f1, e1);
    CHECK(ab.x == ba.x);
    CHECK(ab.xs == ba.xs);
    CHECK(ab.t != ba.t);

    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
        CHECK(h_mul(h_mul(a, b), c) == h_mul(a, h_mul(b, c)));
        CHECK(h_mul(a, HeisenbergElement::identity(2)) == a);
        CHECK(h_mul(a, h_inv(a)) == HeisenbergElement::identity(2));
    }
    CHECK(enumerate_group(1).size() == 27);
    CHECK(enumerate_group(2).size() == 243);
    CHECK_THROWS_AS(h_mul(HeisenbergElement::identity(1), HeisenbergElement::identity(2)), ShapeError);
}

TEST_CASE("Weil pairing") {
    Z3Vec u{1, 0, 0, 0}, v{0, 0, 1, 0};
    CHECK(weil_pairing(u, u) == 0);
    CHECK(weil_pairing(u, v) == 2);  // -1 mod 3
    CHECK(commutator_exponent(HeisenbergElement::from_u(0, u), HeisenbergElement::from_u(0, v)) == 2);
    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; ++k) {
        auto a = random_element(rng), b = random_element(rng);
        CHECK(commutator_exponent(a, b) == weil_pairing(a.u(), b.u()));
    }
    // Gram matrix of E has full rank over Z/3: E(e_i, .) are independent.
    algebra::Matrix<algebra::Fp> gram(4, 4, algebra::Fp(0, 3));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Z3Vec a(4, 0), b(4, 0);
            a[i] = 1;
            b[j] = 1;
            gram(i, j) = algebra::Fp(weil_pairing(a, b), 3);
        }
    CHECK(algebra::rank(gram) == 4);
}

TEST_CASE("Schroedinger representation") {
    auto shift = schrodinger_monomial(HeisenbergElement(0, {1, 0}, {0, 0}));
    for (int s = 0; s < kDim; ++s) {
        auto sg = sigma_of(s);
        CHECK(shift.col[s] == sigma_index(sg[0] + 1, sg[1]));
        CHECK(shift.exp[s] == 0);
    }
    auto diag = schrodinger_monomial(HeisenbergElement(0, {0, 0}, {1, 2}));
    for (int s = 0; s < kDim; ++s) {
        auto sg = sigma_of(s);
        CHECK(diag.col[s] == s);
        CHECK(diag.exp[s] == (sg[0] + 2 * sg[1]) % 3);
    }
    CHECK(schrodinger(HeisenbergElement(1, {0, 0}, {0, 0})) ==
          QOmega::omega() * Matrix<QOmega>::identity(kDim));

    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; ++k) {
        auto a = random_element(rng), b = random_element(rng);
        CHECK(schrodinger(h_mul(a, b)) == schrodinger(a) * schrodinger(b));
    }
}

TEST_CASE("involution j and D_-1") {
    auto j = involution_j();
    CHECK(j * j == Matrix<QOmega>::identity(kDim));
    auto I = Matrix<QOmega>::identity(kDim);
    CHECK(algebra::nullspace(j - I).size() == 5);
    CHECK(algebra::nullspace(j + I).size() == 4);
    for (const auto& v : eigenbasis_plus()) CHECK(j.apply(v) == v);
    std::mt19937_64 rng(4);
    auto d = d_minus_one(2);
    CHECK(d.satisfies_cocycle());
    for (int k = 0; k < 50; ++k) {
        auto h = random_element(rng);
        CHECK(j * schrodinger(h) * j == schrodinger(d.apply(h)));
    }
}

TEST_CASE("zeta automorphisms") {
    CHECK(zeta({0, 0, 0, 0}) == identity_automorphism(2));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(0, 2);
    auto dm1 = d_minus_one(2);
    for (int k = 0; k < 20; ++k) {
        Z3Vec a{d(rng), d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng), d(rng)};
        Z3Vec s(4);
        for (int i = 0; i < 4; ++i) s[i] = (a[i] + b[i]) % 3;
        CHECK(compose(zeta(a), zeta(b)) == zeta(s));
    }
    for (std::size_t i = 0; i < 81; ++i) {
        auto z = zeta(vector_of(i, 2));
        CHECK(z.satisfies_cocycle());
        CHECK((compose(z, dm1) == compose(dm1, z)) == (i == 0));
    }
}

TEST_CASE("symplectic lifts") {
    CHECK(lift_symplectic(SymplecticMat::identity(2, 3)) == identity_automorphism(2));
    std::mt19937_64 rng(6);
    auto dm1 = d_minus_one(2);
    for (int k = 0; k < 20; ++k) {
        const auto& M = random_sp(rng);
        const auto& N = random_sp(rng);
        auto lm = lift_symplectic(M);
        CHECK(lm.satisfies_cocycle());
        CHECK(compose(lm, dm1) == compose(dm1, lm));
        CHECK(lift_symplectic(M * N) == compose(lm, lift_symplectic(N)));
        auto h = random_element(rng), g = random_element(rng);
        CHECK(lm.apply(h_mul(h, g)) == h_mul(lm.apply(h), lm.apply(g)));
    }
    // Direct cocycle identity on random (M, u, v).
    std::uniform_int_distribution<int> d(0, 2);
    for (int k = 0; k < 100; ++k) {
        const auto& M = random_sp(rng);
        auto lm = lift_symplectic(M);
        Z3Vec u{d(rng), d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng), d(rng)}, s(4);
        for (int i = 0; i < 4; ++i) s[i] = (u[i] + v[i]) % 3;
        int lhs = ((lm.f(s) - lm.f(u) - lm.f(v)) % 3 + 3) % 3;
        int rhs = ((beta(M.apply(u), M.apply(v)) - beta(u, v)) % 3 + 3) % 3;
        CHECK(lhs == rhs);
    }
    SymplecticMat bad(2, 3, {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(lift_symplectic(bad), InvariantViolation);
}

TEST_CASE("intertwiners") {
    auto id = intertwiner(SymplecticMat::identity(2, 3));
    CHECK(id.solution_dim == 1);
    CHECK(id.T == Matrix<QOmega>::identity(kDim));
    for (const auto& M : sympchar::symplectic_group(2, 3).generators) {
        auto r = intertwiner(M);
        CHECK(r.solution_dim == 1);
        CHECK(preserves_eigenspaces(r.T));
        auto phi = lift_symplectic(M);
        for (const auto& h : enumerate_group(2))
            CHECK(r.T * schrodinger(h) == schrodinger(phi.apply(h)) * r.T);
        CHECK(upsilon_plus(r.T).rows() == 5);
        CHECK(upsilon_minus(r.T).rows() == 4);
    }
    std::mt19937_64 rng(7);
    for (int k = 0; k < 5; ++k) {
        const auto& M = random_sp(rng);
        const auto& N = random_sp(rng);
        CHECK(projectively_equal(intertwiner(M * N).T, intertwiner(M).T * intertwiner(N).T));
    }
}

TEST_CASE("verification summary") {
    auto rep = verify_heisenberg(11, 3);
    CHECK(rep.ok());
    CHECK(rep.pairs_checked == 243u * 243u);
    CHECK(rep.generator_solution_dims.size() == 15);
    CHECK(rep.counterexamples.empty());
}

TEST_CASE("intertwiner system: fraction-free and Gauss-Jordan kernels agree") {
    // Rebuild T from the fraction-free path for one generator and compare.
    const auto& M = sympchar::symplectic_group(2, 3).generators[5];
    auto phi = lift_symplectic(M);
    auto T = intertwiner(M).T;
    constexpr int N = kDim * kDim;
    Matrix<QOmega> sys(0, N, QOmega(0));
    std::vector<algebra::Vec<QOmega>> rows;
    for (int gi = 0; gi < 4; ++gi) {
        Z3Vec u(4, 0);
        u[gi] = 1;
        auto h = HeisenbergElement::from_u(0, u);
        auto U = schrodinger(h), V = schrodinger(phi.apply(h));
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                algebra::Vec<QOmega> r(N, QOmega(0));
                for (int k = 0; k < kDim; ++k) {
                    r[i * kDim + k] += U(k, j);
                    r[k * kDim + j] -= V(i, k);
                }
                rows.push_back(r);
            }
    }
    Matrix<QOmega> A(rows.size(), N, QOmega(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < N; ++j) A(i, j) = rows[i][j];
    auto ff = algebra::nullspace(A);
    REQUIRE(ff.size() == 1);
    CHECK(ff == algebra::nullspace_naive(A));
    Matrix<QOmega> T2(kDim, kDim, QOmega(0));
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) T2(i, j) = ff[0][i * kDim + j];
    CHECK(normalize_projective(T2) == T);
}
