#include <doctest.h>

#include <random>

#include "support.hpp"
#include "weddle/algebra/fit.hpp"

using namespace weddle;
using namespace weddle::algebra;
using namespace testsupport;

namespace {

Matrix<Rational> from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix<Rational> m(rows.size(), rows.begin()->size(), Rational(0));
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long v : r) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

bool in_kernel(const Matrix<Rational>& m, const Vec<Rational>& v) {
    for (const auto& x : m.apply(v))
        if (!is_zero(x)) return false;
    return true;
}

}  // namespace

TEST_CASE("nullspace basics") {
    CHECK(nullspace(Matrix<Rational>::identity(3)).empty());
    CHECK(nullspace(Matrix<Rational>(2, 2, Rational(0))).size() == 2);
    CHECK(nullspace(Matrix<Rational>(2, 5, Rational(0))).size() == 5);
}

TEST_CASE("kernel of the skew Z-system at (1,1,1,1)") {
    // Rows of the Z-restricted quadric system evaluated at Z = (1,1,1,1).
    auto m = from_ints({{0, -1, -1, -1, -1},
                        {1, 0, -2, -2, -2},
                        {1, 2, 0, 2, -2},
                        {1, 2, -2, 0, 2},
                        {1, 2, 2, -2, 0}});
    CHECK(m.is_skew());
    auto k = nullspace(m);
    REQUIRE(k.size() == 1);
    Vec<Rational> expect{Rational(6), Rational(-3), Rational(1), Rational(1), Rational(1)};
    Rational s = k[0][0] / 6;
    for (std::size_t i = 0; i < 5; ++i) CHECK(k[0][i] == s * expect[i]);
}

TEST_CASE("fraction-free and naive elimination agree") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
        std::size_t k = 1 + t % 6;
        Matrix<Rational> m = (t % 3 == 0) ? random_matrix(rng, 6, 6) : random_low_rank(rng, 6, 6, k);
        auto ff = echelon_fraction_free(m);
        auto nv = rref_naive(m);
        CHECK(ff.pivots == nv.pivots);
        CHECK(rref_from_echelon(ff) == nv.form);
        auto k1 = nullspace(m), k2 = nullspace_naive(m);
        CHECK(k1 == k2);
        CHECK(k1.size() + rank(m) == 6);
        for (const auto& v : k1) CHECK(in_kernel(m, v));
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(8);
    for (std::size_t n = 1; n <= 6; ++n) {
        auto m = random_matrix(rng, n, n);
        CHECK(determinant(m) == determinant_expand(m));
    }
}

TEST_CASE("non-field domains are rejected") {
    Matrix<Fp> m(2, 2, Fp(1, 6));
    CHECK_THROWS_AS(nullspace(m), UnsupportedDomain);
    Matrix<long long> z(2, 2, 1);
    CHECK_THROWS_AS(nullspace(z), UnsupportedDomain);
    Matrix<Cyclotomic<Fp>> c(1, 1, Cyclotomic<Fp>(Fp(1, 7), Fp(0, 7)));
    CHECK_THROWS_AS(nullspace(c), UnsupportedDomain);
}

TEST_CASE("pfaffian") {
    auto m2 = from_ints({{0, 7}, {-7, 0}});
    CHECK(pfaffian(m2) == 7);

    using P = SparsePoly<Rational>;
    const std::size_t nv = 6;
    auto v = [&](std::size_t i) { return P::variable(nv, i); };
    PolyMatrix<Rational> s(4, 4, P(nv));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            s(i, j) = v(idx++);
            s(j, i) = -s(i, j);
        }
    // m01 m23 - m02 m13 + m03 m12 with m01..m23 = v0..v5 in order
    P expect = v(0) * v(5) - v(1) * v(4) + v(2) * v(3);
    CHECK(pfaffian_expand(s) == expect);
    CHECK(determinant_expand(s) == expect * expect);

    std::mt19937_64 rng(77);
    for (int t = 0; t < 10; ++t) {
        auto m = random_skew(rng, 6);
        CHECK(pfaffian(m) * pfaffian(m) == determinant(m));
        CHECK(pfaffian(m) == pfaffian_expand(m));
    }
    for (std::size_t n = 2; n <= 8; n += 2)
        for (int t = 0; t < 5; ++t) {
            auto m = (t == 4 && n >= 4) ? random_skew(rng, n) * Matrix<Rational>::identity(n) : random_skew(rng, n);
            if (t == 3) {
                // Singular case: repeat an index.
                for (std::size_t j = 0; j < n; ++j) {
                    m(1, j) = m(0, j);
                    m(j, 1) = m(j, 0);
                }
                m(0, 1) = m(1, 0) = Rational(0);
                m(1, 1) = Rational(0);
            }
            REQUIRE(m.is_skew());
            CHECK(pfaffian(m) * pfaffian(m) == determinant(m));
        }

    CHECK_THROWS_AS(pfaffian(from_ints({{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}})), ShapeError);
    CHECK_THROWS_AS(pfaffian(from_ints({{0, 1}, {1, 0}})), ShapeError);
}

TEST_CASE("adjugate") {
    CHECK(adjugate(Matrix<Rational>::identity(4)) == Matrix<Rational>::identity(4));
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
        auto m = random_matrix(rng, 4, 4);
        CHECK(m * adjugate(m) == determinant(m) * Matrix<Rational>::identity(4));
        CHECK(adjugate(m) * m == determinant(m) * Matrix<Rational>::identity(4));
    }
    for (int t = 0; t < 10; ++t) {
        auto m = random_skew(rng, 5);
        REQUIRE(rank(m) == 4);
        CHECK(rank(adjugate(m)) == 1);
    }
    CHECK_THROWS_AS(adjugate(Matrix<Rational>(2, 3, Rational(0))), ShapeError);
}

TEST_CASE("fit_hypersurface over an exact field") {
    using P = SparsePoly<Rational>;
    // Rational points of x^2 + y^2 = z^2 from Pythagorean triples.
    std::vector<Vec<Rational>> conic;
    for (long m = 2; m <= 6; ++m) {
        long n = m - 1;
        conic.push_back({Rational(m * m - n * n), Rational(2 * m * n), Rational(m * m + n * n)});
    }
    auto q = fit_hypersurface(conic, 2);
    REQUIRE(q.size() == 1);
    P x = P::variable(3, 0), y = P::variable(3, 1), z = P::variable(3, 2);
    CHECK(proportional(q[0], x * x + y * y - z * z));

    std::vector<Vec<Rational>> cubic;
    for (long t = -6; t < 6; ++t) cubic.push_back({Rational(1), Rational(t), Rational(t * t), Rational(t * t * t)});
    auto net = fit_hypersurface(cubic, 2);
    CHECK(net.size() == 3);
    // Rank oracle: three independent quadrics, each vanishing on a fresh point.
    Vec<Rational> fresh{Rational(1), Rational(17), Rational(289), Rational(4913)};
    for (const auto& f : net) CHECK(is_zero(f.evaluate(fresh)));

    std::vector<Vec<Rational>> three{{Rational(1), Rational(2), Rational(0), Rational(3)},
                                     {Rational(0), Rational(1), Rational(-1), Rational(5)},
                                     {Rational(4), Rational(0), Rational(1), Rational(1)}};
    CHECK(fit_hypersurface(three, 1).size() == 1);

    std::vector<Vec<Rational>> bad{{Rational(1), Rational(2)}, {Rational(1), Rational(2), Rational(3)}};
    CHECK_THROWS_AS(fit_hypersurface(bad, 1), ShapeError);
}

TEST_CASE("fit over Q and over F_p agree after reduction") {
    std::vector<Vec<Rational>> cubic;
    std::vector<Vec<Fp>> cubic_p;
    const std::int64_t p = 101;
    for (long t = -6; t < 6; ++t) {
        cubic.push_back({Rational(1), Rational(t), Rational(t * t), Rational(t * t * t)});
        cubic_p.push_back({Fp(1, p), Fp(t, p), Fp(t * t, p), Fp(t * t * t, p)});
    }
    auto q = fit_hypersurface(cubic, 2);
    auto r = fit_hypersurface(cubic_p, 2);
    REQUIRE(q.size() == r.size());
    for (std::size_t i = 0; i < q.size(); ++i) CHECK(reduce_mod(q[i], p) == r[i]);
}

TEST_CASE("floating fit returns threshold and gap") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    std::vector<Vec<Complex>> pts;
    for (int i = 0; i < 12; ++i) {
        Complex t(g(rng), g(rng));
        pts.push_back({Complex(1), t, t * t, t * t * t});
    }
    auto fit = fit_hypersurface_float(pts, 2);
    CHECK(fit.basis.size() == 3);
    CHECK(fit.relative_threshold == 1e-8);
    CHECK(fit.gap > 1e6);
    Complex t(0.3, -0.7);
    Vec<Complex> fresh{Complex(1), t, t * t, t * t * t};
    for (const auto& f : fit.basis) CHECK(std::abs(f.evaluate(fresh)) < 1e-10);
}
