#include <doctest.h>

#include <random>

#include "weddle/algebra/scalar.hpp"

using namespace weddle;
using namespace weddle::algebra;

TEST_CASE("prime field arithmetic") {
    const std::int64_t p = 101;
    Fp a(37, p), b(-5, p);
    CHECK((a + b).value() == 32);
    CHECK((a * b).value() == (37 * 96) % 101);
    CHECK(a * a.inverse() == Fp(1));
    CHECK((a / b) * b == a);
    CHECK(Fp(0) == Fp(101, p));
    CHECK(-Fp(3, p) == Fp(98, p));
    CHECK_THROWS_AS(Fp(0, p).inverse(), UnsupportedDomain);
    CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 11), UnsupportedDomain);
}

TEST_CASE("unbound constants adopt the modulus") {
    Fp a(5, 7);
    CHECK((Fp(3) + a).modulus() == 7);
    CHECK((Fp(3) + a).value() == 1);
    CHECK(Fp(-1) * a == Fp(2, 7));
    CHECK(Fp(1) / a == a.inverse());
}

TEST_CASE("field axioms over F_p on random triples") {
    std::mt19937_64 rng(11);
    const std::int64_t p = 103;
    std::uniform_int_distribution<long long> d(0, p - 1);
    for (int t = 0; t < 300; ++t) {
        Fp x(d(rng), p), y(d(rng), p), z(d(rng), p);
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        if (!x.is_zero()) CHECK(x * x.inverse() == Fp(1));
    }
}

TEST_CASE("square roots mod p") {
    for (std::int64_t p : {7, 13, 17, 101, 103, 193}) {
        int residues = 0;
        for (std::int64_t v = 0; v < p; ++v) {
            Fp r;
            if (sqrt_mod(Fp(v, p), r)) {
                CHECK(r * r == Fp(v, p));
                ++residues;
            }
        }
        CHECK(residues == (p + 1) / 2);
    }
}

TEST_CASE("quadratic extension") {
    const std::int64_t p = 31;
    const std::int64_t n = least_nonresidue(p);
    Fp2 t(Fp(0, p), Fp(1, p), n);
    CHECK(t * t == Fp2(Fp(n, p), Fp(0, p), n));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> d(0, p - 1);
    for (int k = 0; k < 100; ++k) {
        Fp2 x(Fp(d(rng), p), Fp(d(rng), p), n);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == Fp2(1));
    }
}

TEST_CASE("cyclotomic field Q(w)") {
    QOmega w = QOmega::omega();
    CHECK(w * w * w == QOmega(1));
    CHECK(w * w + w + QOmega(1) == QOmega(0));
    CHECK(QOmega::omega_pow(-1) == w * w);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-7, 7);
    for (int k = 0; k < 100; ++k) {
        QOmega x(rational(d(rng), 3), rational(d(rng), 2));
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == QOmega(1));
        QOmega y(Rational(d(rng)), Rational(d(rng)));
        CHECK((x + y) * x == x * x + y * x);
    }
}

TEST_CASE("pair representation over F_p is a field only for p = 2 mod 3") {
    Cyclotomic<Fp> x(Fp(1, 11), Fp(2, 11));
    CHECK_NOTHROW(ScalarTraits<Cyclotomic<Fp>>::require_field(x));
    CHECK(x * x.inverse() == Cyclotomic<Fp>(1));
    Cyclotomic<Fp> y(Fp(1, 13), Fp(2, 13));
    CHECK_THROWS_AS(ScalarTraits<Cyclotomic<Fp>>::require_field(y), UnsupportedDomain);
}

TEST_CASE("cube roots of unity in F_p") {
    Fp w = primitive_cube_root(31);
    CHECK(!(w == Fp(1)));
    CHECK(w * w * w == Fp(1));
    CHECK_THROWS_AS(primitive_cube_root(101), UnsupportedDomain);
}
