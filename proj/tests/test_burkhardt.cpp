#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "weddle/algebra/interchange.hpp"
#include "weddle/burkhardt/burkhardt.hpp"
#include "weddle/heis/heisenberg.hpp"

using namespace weddle;
using namespace weddle::burkhardt;
using algebra::rational;

namespace {

using Poly = SparsePoly<Rational>;

Vec<Rational> qvec(std::initializer_list<long> xs) {
    Vec<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

Vec<Rational> random_z(std::mt19937_64& rng, long bound = 20) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return qvec({d(rng), d(rng), d(rng), d(rng)});
}

// X_s -> X_{perm(s)} on 9 variables.
Poly permute_x(const Poly& f, const std::array<int, 9>& perm) {
    std::vector<std::size_t> target(perm.begin(), perm.end());
    return f.remap_variables(target, 9);
}

const Poly& burkhardt_q() {
    static const Poly b = derive_burkhardt_rational(1).quartic;
    return b;
}

}  // namespace

TEST_CASE("quadrics f_a") {
    auto f = quadrics_f(qvec({1, 0, 0, 0, 0}));
    CHECK(f[0] == fixtures::mono(9, 1, {0, 0}));

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-9, 9);
    auto r = qvec({d(rng), d(rng), d(rng), d(rng), d(rng)});
    auto fa = quadrics_f(r);
    for (int a = 0; a < 9; ++a) {
        // Translation X_s -> X_{s+a} (the permutation part of the Schroedinger action).
        heis::HeisenbergElement h(0, {a / 3, a % 3}, {0, 0});
        auto U = heis::schrodinger_monomial(h);
        std::array<int, 9> perm;
        for (int s = 0; s < 9; ++s) perm[s] = U.col[s];
        CHECK(permute_x(fa[0], perm) == fa[a]);

        std::array<int, 9> neg;
        for (int s = 0; s < 9; ++s) neg[s] = heis::neg_index(s);
        CHECK(permute_x(fa[a], neg) == fa[heis::neg_index(a)]);
        CHECK(fa[a].is_homogeneous());
        CHECK(fa[a].degree() == 2);
    }
    CHECK(permute_x(fa[0], [] {
              std::array<int, 9> n;
              for (int s = 0; s < 9; ++s) n[s] = heis::neg_index(s);
              return n;
          }()) == fa[0]);
    CHECK_THROWS_AS(quadrics_f(qvec({1, 2})), ShapeError);
}

TEST_CASE("M+ symmetric, M- skew and singular") {
    const auto& mp = matrix_plus();
    const auto& mm = matrix_minus();
    CHECK(mp.is_symmetric());
    CHECK(mm.is_skew());
    CHECK((mm + mm.transpose()).is_zero());
    CHECK(algebra::determinant_expand(mm).is_zero());
    CHECK(mp(0, 0) == fixtures::mono(5, 1, {0, 0}));
    CHECK(mp(1, 1) == fixtures::mono(5, 4, {0, 1}));
    CHECK(mm(0, 1) == fixtures::mono(4, -2, {0, 0}));
}

TEST_CASE("symbolic kernel identity and pfaffian quartics") {
    for (const auto& q : kernel_residual()) CHECK(q.is_zero());
    const auto& r = steinerian_minus_symbolic();
    REQUIRE(r.size() == 5);
    for (const auto& q : r) {
        CHECK(q.is_homogeneous());
        CHECK(q.degree() == 4);
    }
    CHECK(algebra::proportional(r[0], fixtures::mono(4, 1, {0, 1, 2, 3})));
    CHECK(r[0] == fixtures::mono(4, 6, {0, 1, 2, 3}));

    // Linear independence: coefficient vectors over the 35 quartic monomials.
    auto monos = algebra::monomials(4, 4);
    Matrix<Rational> c(5, monos.size(), Rational(0));
    for (int i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < monos.size(); ++j) c(i, j) = r[i].coefficient(monos[j]);
    CHECK(algebra::rank(c) == 5);
}

TEST_CASE("kernel at (1,1,1,1) against elimination") {
    auto z = qvec({1, 1, 1, 1});
    auto r = steinerian_minus(z);
    REQUIRE(r);
    CHECK(*r == qvec({6, -3, 1, 1, 1}));
    auto ker = kernel_by_elimination(z);
    REQUIRE(ker.size() == 1);
    CHECK(projective_normalize(ker[0]) == projective_normalize(*r));

    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        auto zz = random_z(rng);
        auto rr = steinerian_minus(zz);
        auto kk = kernel_by_elimination(zz);
        REQUIRE(rr);
        REQUIRE(kk.size() == 1);
        CHECK(projective_normalize(kk[0]) == projective_normalize(*rr));
    }
}

TEST_CASE("adjugate of M-[z] is lambda r r^t") {
    std::mt19937_64 rng(7);
    const auto mm = matrix_minus();
    for (int k = 0; k < 20; ++k) {
        auto z = random_z(rng);
        auto m = algebra::evaluate(mm, z);
        auto adj = algebra::adjugate(m);
        auto r = *steinerian_minus(z);
        std::optional<Rational> lambda;
        bool ok = true;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                Rational rr = r[i] * r[j];
                if (sgn(rr) == 0) {
                    ok = ok && sgn(adj(i, j)) == 0;
                    continue;
                }
                Rational l = adj(i, j) / rr;
                if (!lambda) lambda = l;
                ok = ok && l == *lambda;
            }
        CHECK(ok);
        REQUIRE(lambda);
        CHECK(sgn(*lambda) != 0);
    }
}

TEST_CASE("base locus signal") {
    // z = (1,0,0,0) kills every quartic.
    CHECK_FALSE(steinerian_minus(qvec({1, 0, 0, 0})).has_value());
    CHECK_THROWS_AS(steinerian_minus(qvec({1, 0, 0})), ShapeError);
}

TEST_CASE("derived quartic: nullity one over Q and F_101, agreement") {
    auto q = derive_burkhardt_rational(1);
    CHECK(q.nullity == 1);
    CHECK(q.monomials == 70);
    CHECK(q.samples == 120);
    CHECK(q.quartic.is_homogeneous());
    CHECK(q.quartic.degree() == 4);

    auto f = derive_burkhardt_fp(101, 2);
    CHECK(f.nullity == 1);
    CHECK(algebra::make_monic(algebra::reduce_mod(q.quartic, 101)) == f.quartic);

    // Independent seeds give the same polynomial.
    CHECK(derive_burkhardt_rational(99).quartic == q.quartic);

    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        auto r = steinerian_minus(random_z(rng, 50));
        REQUIRE(r);
        CHECK(sgn(q.quartic.evaluate(*r)) == 0);
    }
    CHECK_THROWS_AS(derive_burkhardt_fp(97, 1), UnsupportedDomain);
    CHECK_THROWS_AS(derive_burkhardt_rational(1, 40), DegenerateConfiguration);
}

TEST_CASE("derived quartic is invariant under the V+ blocks") {
    auto rep = upsilon_invariance(burkhardt_q());
    CHECK(rep.generators == 15);
    CHECK(rep.ok());
    // A non-invariant quartic is rejected.
    auto other = burkhardt_q() + fixtures::mono(5, 1, {0, 0, 0, 1});
    CHECK_FALSE(upsilon_invariance(other).ok());
}

TEST_CASE("Hessian identification") {
    auto h = hessian(burkhardt_q());
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(h(i, j).degree() == 2);
            CHECK(h(i, j) == h(j, i));
        }
    auto m = hessian_match(burkhardt_q());
    CHECK(m.found);
    CHECK(m.unique_up_to_sign());
    CHECK(m.scale == 12);
    CHECK(m.perm == std::array<int, 5>{0, 1, 2, 3, 4});
}

TEST_CASE("det Hess(B) has degree 10") {
    auto d = algebra::determinant_expand(hessian(burkhardt_q()));
    CHECK(d.is_homogeneous());
    CHECK(d.degree() == 10);
}

TEST_CASE("St+ corank") {
    // Coordinates kept nonzero: points with two vanishing Y_i lie on det M+ = 0.
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> d(1, 30);
    for (int k = 0; k < 10; ++k) {
        auto y = qvec({d(rng), -d(rng), d(rng), -d(rng), d(rng)});
        auto s = steinerian_plus(y);
        CHECK(s.corank == 0);
        CHECK_FALSE(s.kernel.has_value());
    }
    auto pts = hessian_points_ff(101, 3, 10);
    REQUIRE(pts.size() == 10);
    const auto mp = convert<Fp>(matrix_plus());
    for (const auto& y : pts) {
        auto s = steinerian_plus(y);
        CHECK(s.corank == 1);
        REQUIRE(s.kernel.has_value());
        auto m = algebra::evaluate(mp, y);
        for (const auto& x : m.apply(*s.kernel)) CHECK(x.is_zero());
    }
}

TEST_CASE("fiber census over F_31") {
    auto c = count_fibers_ff(31);
    CHECK(c.points == 30784);
    CHECK(c.base_points == 40);
    CHECK(c.singular_images == 45);
    std::uint64_t covered = c.base_points;
    for (const auto& [size, n] : c.histogram) covered += size * n;
    CHECK(covered == c.points);
    CHECK(c.max_smooth_fiber <= 6);
    CHECK(c.max_fiber > c.max_smooth_fiber);

    auto z = Vec<Fp>{Fp(1, 31), Fp(1, 31), Fp(1, 31), Fp(1, 31)};
    auto img = *steinerian_minus(z);
    auto fib = fiber_ff(31, img);
    CHECK(std::find(fib.begin(), fib.end(), z) != fib.end());
}

TEST_CASE("fiber census over F_49 reaches 6") {
    auto c = count_fibers_ff(7, 2);
    CHECK(c.base_points == 40);
    CHECK(c.singular_images == 45);
    CHECK(c.max_smooth_fiber == 6);
}

TEST_CASE("base locus") {
    CHECK(count_base_locus_ff(7, 1) == 40);
    CHECK(count_base_locus_ff(13, 1) == 40);
    CHECK(count_base_locus_ff(7, 2) == 40);
    CHECK_THROWS_AS(count_base_locus_ff(5, 1), UnsupportedDomain);
    CHECK_THROWS_AS(count_base_locus_ff(211, 1), UnsupportedDomain);
    CHECK_THROWS_AS(count_base_locus_ff(7, 3), UnsupportedDomain);
    CHECK_THROWS_AS(count_base_locus_ff(31, 2, 1000), ResourceError);
    CHECK_THROWS_AS(count_fibers_ff(31, 1, 1000), ResourceError);
}

TEST_CASE("reconciliation with the reference forms") {
    auto minus = reconcile_matrix(matrix_minus(), fixtures::reference_minus(), false);
    CHECK(minus.found);
    CHECK(minus.perm == std::array<int, 5>{0, 1, 2, 3, 4});
    for (const auto& s : minus.row_scale) CHECK(s == 2);

    // The symmetric form needs a column rescaling as well.
    CHECK_FALSE(reconcile_matrix(matrix_plus(), fixtures::reference_plus(), false).found);
    auto plus = reconcile_matrix(matrix_plus(), fixtures::reference_plus(), true);
    CHECK(plus.found);
    CHECK(plus.row_scale == std::vector<Rational>{1, 2, 2, 2, 2});
    CHECK(plus.col_scale == std::vector<Rational>{1, 2, 2, 2, 2});

    // The reference quartics are not the kernel of the reference skew matrix.
    auto ref = fixtures::reference_quartics();
    auto residual = fixtures::reference_minus().apply(ref);
    bool all_zero = true;
    for (const auto& q : residual) all_zero = all_zero && q.is_zero();
    CHECK_FALSE(all_zero);
    Vec<Rational> at_one;
    for (const auto& q : ref) at_one.push_back(q.evaluate(qvec({1, 1, 1, 1})));
    CHECK(at_one == qvec({6, 1, -3, -1, 1}));

    // No signed relabeling of Z and r maps the computed quartics onto them,
    // and they do not lie on the derived quartic.
    CHECK_FALSE(reconcile_quartics(steinerian_minus_symbolic(), ref).found);
    CHECK_FALSE(burkhardt_q().substitute(ref).is_zero());

    // Sanity: a relabeled copy of the computed quartics is recognized.
    std::vector<Poly> img{Poly::variable(4, 1), -Poly::variable(4, 0), Poly::variable(4, 3), Poly::variable(4, 2)};
    std::vector<Poly> moved;
    for (const auto& q : steinerian_minus_symbolic()) moved.push_back(rational(3) * q.substitute(img));
    std::swap(moved[1], moved[2]);
    auto qm = reconcile_quartics(steinerian_minus_symbolic(), moved);
    CHECK(qm.found);
    CHECK(qm.scale == 3);
}
