#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "weddle/geometry/symmetroid.hpp"
#include "weddle/theta/theta.hpp"
#include "weddle/theta/weddle.hpp"

using namespace weddle;
using namespace weddle::theta;

namespace {

constexpr double kPi = std::numbers::pi;

// Brute-force series over a fixed large box; no tail analysis.
Complex theta_box(const R2& alpha, const R2& beta, const C2& z, const PeriodMatrix& om, int box = 25) {
    Complex s(0.0);
    for (int i = -box; i <= box; ++i)
        for (int j = -box; j <= box; ++j) {
            const double v0 = i + alpha[0], v1 = j + alpha[1];
            const Complex q = om(0, 0) * v0 * v0 + 2.0 * om(0, 1) * v0 * v1 + om(1, 1) * v1 * v1;
            s += std::exp(Complex(0, kPi) * q + Complex(0, 2 * kPi) * (v0 * (z[0] + beta[0]) + v1 * (z[1] + beta[1])));
        }
    return s;
}

// Reducible period matrix with a small perturbation; used for series checks only.
PeriodMatrix near_diagonal() { return PeriodMatrix({0.0, 1.0}, {0.05, 0.02}, {0.05, 0.02}, {0.0, 1.0}); }

Characteristic odd_kappa() { return Characteristic({1, 0}, {1, 0}); }

}  // namespace

TEST_CASE("period matrix validation and parsing") {
    CHECK_THROWS_AS(PeriodMatrix({0, 1}, {0.1, 0}, {0.2, 0}, {0, 1}), UnsupportedDomain);
    CHECK_THROWS_AS(PeriodMatrix({0, 1}, {0, 2}, {0, 2}, {0, 1}), UnsupportedDomain);
    CHECK_THROWS_AS(PeriodMatrix({0, -1}, {0, 0}, {0, 0}, {0, 1}), UnsupportedDomain);
    const auto om = default_period_matrix();
    const auto back = parse_period_matrix(om.to_string());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(back(i, j) == om(i, j));
    CHECK_THROWS_AS(parse_period_matrix("1 2 3"), ParseError);
    CHECK_THROWS_AS(parse_period_matrix("1 1 0 0 0 0 1 1 9"), ParseError);
    CHECK(om.lambda_min() > 0.0);
}

TEST_CASE("theta series agrees with a brute-force box sum within its bound") {
    std::mt19937_64 rng(3);
    for (const auto& om : {default_period_matrix(), near_diagonal()})
        for (int t = 0; t < 10; ++t) {
            const auto m = Characteristic::from_index(2, static_cast<unsigned>(rng() % 16));
            const C2 z = sample_point(rng, om);
            const auto v = theta::theta(m, z, om, 1e-13);
            const Complex ref = theta_box({0.5 * m.a[0], 0.5 * m.a[1]}, {0.5 * m.b[0], 0.5 * m.b[1]}, z, om);
            CHECK(v.bound < 1e-13);
            CHECK(std::abs(v.value - ref) < v.bound + 1e-13 * std::max(1.0, std::abs(ref)));
        }
    CHECK_THROWS_AS(theta_real({0, 0}, {0, 0}, {0.0, 0.0}, default_period_matrix(), 0.0), UnsupportedDomain);
}

TEST_CASE("tail bound honesty: halving tol moves the value by less than the old bound") {
    std::mt19937_64 rng(11);
    const auto om = default_period_matrix();
    for (int t = 0; t < 50; ++t) {
        const R2 alpha{std::uniform_real_distribution<double>(0, 1)(rng), std::uniform_real_distribution<double>(0, 1)(rng)};
        const R2 beta{std::uniform_real_distribution<double>(0, 1)(rng), std::uniform_real_distribution<double>(0, 1)(rng)};
        const C2 z = sample_point(rng, om);
        const double tol = 1e-4;
        const auto a = theta_real(alpha, beta, z, om, tol);
        const auto b = theta_real(alpha, beta, z, om, tol / 2);
        CHECK(std::abs(a.value - b.value) <= a.bound + 1e-14);
        CHECK(b.radius >= a.radius);
    }
}

TEST_CASE("parity, odd theta constants and quasi-periodicity") {
    const double tol = 1e-13;
    std::mt19937_64 rng(5);
    for (const auto& om : {default_period_matrix(), near_diagonal()}) {
        for (int t = 0; t < 20; ++t) {
            const auto m = Characteristic::from_index(2, static_cast<unsigned>(rng() % 16));
            const C2 z = sample_point(rng, om);
            const auto plus = theta::theta(m, z, om, tol);
            const auto minus = theta::theta(m, {-z[0], -z[1]}, om, tol);
            CHECK(std::abs(minus.value - double(sympchar::parity(m)) * plus.value) < 2 * tol);
        }
        for (const auto& m : sympchar::all_characteristics(2))
            if (sympchar::parity(m) == -1) CHECK(std::abs(theta::theta(m, {0.0, 0.0}, om, tol).value) < tol);
        for (int t = 0; t < 20; ++t) {
            const auto m = Characteristic::from_index(2, static_cast<unsigned>(rng() % 16));
            const R2 alpha{0.5 * m.a[0], 0.5 * m.a[1]}, beta{0.5 * m.b[0], 0.5 * m.b[1]};
            const std::array<int, 2> n{static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3) - 1};
            const std::array<int, 2> p{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2};
            const C2 z = sample_point(rng, om);
            const auto on = om.apply({double(n[0]), double(n[1])});
            const C2 shifted{z[0] + on[0] + double(p[0]), z[1] + on[1] + double(p[1])};
            const auto lhs = theta_real(alpha, beta, shifted, om, tol);
            const auto rhs = theta_real(alpha, beta, z, om, tol);
            const Complex f = quasi_period_factor(alpha, beta, z, n, p, om);
            CHECK(std::abs(lhs.value - f * rhs.value) < lhs.bound + std::abs(f) * rhs.bound +
                                                          1e-13 * std::max(1.0, std::abs(lhs.value)));
        }
    }
}

TEST_CASE("level-3 coordinates satisfy the equivariance contract") {
    const auto rep = validate_level3(default_period_matrix(), 7, 10);
    CHECK(rep.ok(1e-8));
    CHECK(validate_level3(near_diagonal(), 8, 5).ok(1e-8));
}

TEST_CASE("involution eigenspaces: level 3 table and level 2 evenness") {
    const auto om = default_period_matrix();
    const auto table = eigenspace_table(om, 2);
    REQUIRE(table.level3.size() == 16);
    int even = 0;
    for (const auto& row : table.level3) {
        if (row.parity == 1) {
            ++even;
            CHECK(row.dim_plus == 5);
            CHECK(row.dim_minus == 4);
        } else {
            CHECK(row.dim_plus == 4);
            CHECK(row.dim_minus == 5);
        }
    }
    CHECK(even == 10);
    CHECK(table.level2_all_even);

    for (const auto& k : sympchar::all_characteristics(2)) {
        const auto inv = involution_matrix(k, om);
        CHECK(inv.square_residual < 1e-9);
        CHECK(inv.equivariance < 1e-9);
        CHECK(inv.invariant_j_label == (sympchar::parity(k) == 1 ? "V+" : "V-"));
    }
}

TEST_CASE("theta-nulls: eigenspace membership and det M+ at even characteristics") {
    const auto om = default_period_matrix();
    for (const auto& k : sympchar::all_characteristics(2)) {
        const auto tn = theta_null(k, om);
        CHECK(tn.off_space < 1e-8);
        if (tn.parity == 1) {
            CHECK(tn.coords.size() == 5);
            CHECK(tn.det_plus < 1e-6);
        } else {
            CHECK(tn.coords.size() == 4);
        }
    }
}

TEST_CASE("node census: the invariant half-periods are those where kappa + mu has the parity of kappa") {
    const auto om = default_period_matrix();
    for (const auto& k : sympchar::all_characteristics(2)) {
        const auto c = node_census(k, om);
        std::set<unsigned> got, expect;
        for (const auto& mu : c.invariant) got.insert(mu.index());
        for (const auto& mu : sympchar::all_characteristics(2)) {
            const unsigned sum = k.index() ^ mu.index();
            if (sympchar::parity(Characteristic::from_index(2, sum)) == sympchar::parity(k)) expect.insert(mu.index());
        }
        CHECK(got == expect);
        CHECK(got.size() == (sympchar::parity(k) == -1 ? 6u : 10u));
    }
}

TEST_CASE("surface quadrics and the commuting square with the theta-null maps") {
    const auto om = default_period_matrix();
    const auto sq = surface_quadrics(om, 3);
    CHECK(sq.quadric_nullity == 9);
    CHECK(sq.r_gap > 1e6);
    CHECK(sq.f0_residual < 1e-7);
    CHECK(sq.fa_residual < 1e-7);
    for (const auto& k : sympchar::all_characteristics(2)) {
        const auto tn = theta_null(k, om);
        const auto v = tn.parity == -1 ? steinerian_minus_numeric(tn.coords) : plus_kernel(tn.coords).vector;
        CHECK(algebra::chordal_distance(v, sq.r) < 1e-6);
    }
    // Non-generic: a random Y is not on det M+ = 0.
    std::mt19937_64 rng(4);
    Vec<Complex> y;
    for (int i = 0; i < 5; ++i) y.push_back({std::normal_distribution<double>()(rng), std::normal_distribution<double>()(rng)});
    CHECK(plus_kernel(y).smallest_ratio > 1e-6);
}

TEST_CASE("Weddle surface from the theta side") {
    const auto om = default_period_matrix();
    CHECK_THROWS_AS(weddle_from_theta(om, Characteristic({0, 0}, {0, 0}), 1), UnsupportedDomain);
    for (const auto& k : sympchar::all_characteristics(2)) {
        if (sympchar::parity(k) != -1) continue;
        const auto w = weddle_from_theta(om, k, 5);
        CHECK(w.fit_nullity == 1);
        CHECK(w.quartic.degree() == 4);
        CHECK(w.fresh_residual < 1e-6);
        REQUIRE(w.nodes.size() == 6);
        CHECK(w.node_gradient < 1e-5);
        CHECK(w.lines.size() == 25);
        CHECK(w.line_residual < 1e-6);
        CHECK(w.cubic_quadrics == 3);
        CHECK(w.cubic_node_residual < 1e-8);
        CHECK(w.rigidity_nullity == 1);
        CHECK(w.rigidity_distance < 1e-6);
    }
}

TEST_CASE("symmetroid of the theta nodes") {
    const auto om = default_period_matrix();
    const auto w = weddle_from_theta(om, odd_kappa(), 9);
    const auto s = theta_symmetroid(w.nodes);
    REQUIRE(s.points.size() == 16);
    const double scale = algebra::coefficient_norm(s.quartic);
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(s.points[i].rank == (i < 6 ? 3u : 2u));
        const double t = algebra::sup_norm(s.points[i].t);
        CHECK(algebra::sup_norm(s.points[i].gradient) / (scale * t * t * t) < 1e-9);
    }
    // A random point of the symmetroid's ambient space is not singular.
    const Vec<Complex> t{{0.3, 0.1}, {-0.7, 0.2}, {0.5, 0.5}, {1.0, 0.0}};
    CHECK(algebra::sup_norm(geometry::gradient_at(s.quartic, t)) / scale > 1e-6);
}

TEST_CASE("symmetroid over F_p: exactly the 16 constructed singular points") {
    using algebra::Fp;
    const std::int64_t p = 31;
    const auto nodes = geometry::random_points_ff(p, 11, 6);
    const auto s = geometry::symmetroid<Fp>(
        nodes, [](const std::vector<Vec<Fp>>& pts) { return algebra::fit_hypersurface(pts, 2, 4); });
    CHECK(s.quadrics.size() == 4);
    std::set<std::vector<std::int64_t>> constructed;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        const auto& pt = s.points[i];
        CHECK(pt.rank == (i < 6 ? 3u : 2u));
        for (const auto& g : pt.gradient) CHECK(g.is_zero());
        std::vector<std::int64_t> key;
        for (const auto& x : geometry::projective_key(pt.t)) key.push_back(x.value());
        constructed.insert(key);
    }
    CHECK(constructed.size() == 16);
    std::set<std::vector<std::int64_t>> found;
    for (const auto& x : geometry::singular_points_ff(s.quartic, p)) {
        std::vector<std::int64_t> key;
        for (const auto& c : x) key.push_back(c.value());
        found.insert(key);
    }
    CHECK(found == constructed);

    // Four collinear points impose only three conditions: five quadrics.
    auto bad = nodes;
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i) bad[k][i] = nodes[0][i] + Fp(k, p) * (nodes[1][i] - nodes[0][i]);
    CHECK_THROWS_AS(geometry::symmetroid<Fp>(
                        bad, [](const std::vector<Vec<Fp>>& pts) { return algebra::fit_hypersurface(pts, 2, 4); }),
                    DegenerateConfiguration);
    CHECK_THROWS_AS(geometry::singular_points_ff(s.quartic, 33), UnsupportedDomain);
}
