#include <doctest.h>

#include <random>

#include "weddle/sympchar/sympchar.hpp"

using namespace weddle;
using namespace weddle::sympchar;

TEST_CASE("parity and census") {
    CHECK(parity(Characteristic({0, 0}, {0, 0})) == 1);
    CHECK(parity(Characteristic({1, 0}, {1, 0})) == -1);
    int even = 0, odd = 0;
    for (const auto& m : all_characteristics(2)) (parity(m) > 0 ? even : odd)++;
    CHECK(even == 10);
    CHECK(odd == 6);
    CHECK_THROWS_AS(Characteristic({2, 0}, {0, 0}), InvariantViolation);
}

TEST_CASE("group orders") {
    CHECK(group_order(2, 2) == 720);
    CHECK(group_order(2, 3) == 51840);
    CHECK(group_order(1, 2) == 6);
    CHECK(group_order(1, 3) == 24);
    CHECK(group_order(2, 5) == symplectic_order_formula(2, 5));
    CHECK_THROWS_AS(group_order(3, 2), ResourceError);
    CHECK_THROWS_AS(group_order(0, 2), ResourceError);
    CHECK_THROWS_AS(group_order(2, 1), ResourceError);
}

TEST_CASE("Sp(2,F2) by brute force over all 2x2 matrices") {
    int count = 0;
    for (int bits = 0; bits < 16; ++bits) {
        SymplecticMat m(1, 2, {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1});
        if (m.is_symplectic()) ++count;
    }
    CHECK(count == 6);
    CHECK(symplectic_group(1, 2).elements.size() == 6);
}

TEST_CASE("gamma index") {
    CHECK(gamma_index(2, 3) == 51840);
    CHECK(gamma_index(2, 6) == 37324800);
    CHECK(gamma_index(2, 2) == 720);
    CHECK(gamma_index(2, 6) / gamma_index(2, 3) == 720);
    CHECK(group_order(2, 2) / stabilizer(default_odd_base()).order == 6);
}

TEST_CASE("characteristic action") {
    const auto& grp = symplectic_group(2, 2);
    for (const auto& m : all_characteristics(2))
        CHECK(act_characteristic(SymplecticMat::identity(2, 2), m) == m);

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, grp.elements.size() - 1);
    std::uniform_int_distribution<unsigned> pickm(0, 15);
    for (int t = 0; t < 200; ++t) {
        const auto& M = grp.elements[pick(rng)];
        auto m = Characteristic::from_index(2, pickm(rng));
        CHECK(parity(act_characteristic(M, m)) == parity(m));
    }
    // Left action, checked exhaustively on pairs of generators and on random pairs.
    for (const auto& M : grp.generators)
        for (const auto& N : grp.generators)
            for (const auto& m : all_characteristics(2))
                CHECK(act_characteristic(M * N, m) == act_characteristic(M, act_characteristic(N, m)));
    for (int t = 0; t < 100; ++t) {
        const auto& M = grp.elements[pick(rng)];
        const auto& N = grp.elements[pick(rng)];
        auto m = Characteristic::from_index(2, pickm(rng));
        CHECK(act_characteristic(M * N, m) == act_characteristic(M, act_characteristic(N, m)));
    }

    SymplecticMat bad(2, 2, {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(act_characteristic(bad, Characteristic({0, 0}, {0, 0})), InvariantViolation);
}

TEST_CASE("orbits of characteristics") {
    auto orbits = characteristic_orbits(2);
    REQUIRE(orbits.size() == 2);
    std::vector<std::size_t> sizes{orbits[0].size(), orbits[1].size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{6, 10});
    for (const auto& o : orbits)
        for (const auto& m : o) CHECK(parity(m) == parity(o.front()));
    // Orbit of (0;0) is the even set.
    for (const auto& o : orbits)
        if (std::find(o.begin(), o.end(), Characteristic({0, 0}, {0, 0})) != o.end()) CHECK(o.size() == 10);
}

TEST_CASE("quadratic forms and the torsor action") {
    auto forms = all_quadratic_forms(2);
    CHECK(forms.size() == 16);
    int plus = 0;
    for (const auto& k : forms) {
        CHECK(is_quadratic_form(k));
        if (epsilon(k) > 0) ++plus;
    }
    CHECK(plus == 10);
    for (const auto& m : all_characteristics(2)) CHECK(epsilon(quad_form(m)) == parity(m));

    auto k = quad_form(Characteristic({0, 0}, {0, 0}));
    CHECK(torsor_action(0, k) == k);
    std::set<QuadFormF2> images;
    for (unsigned x = 0; x < 16; ++x) {
        auto xk = torsor_action(x, k);
        CHECK(epsilon(xk) == k(x) * epsilon(k));
        images.insert(xk);
    }
    CHECK(images.size() == 16);
}

TEST_CASE("stabilizers") {
    auto odd = stabilizer(Characteristic({1, 0}, {1, 0}));
    CHECK(odd.order == 120);
    CHECK(odd.odd_orbit_sizes == std::vector<std::size_t>{1, 5});
    auto even = stabilizer(Characteristic({0, 0}, {0, 0}));
    CHECK(even.order == 72);
    for (const auto& m : all_characteristics(2)) CHECK(stabilizer(m).order == (parity(m) > 0 ? 72u : 120u));
}

TEST_CASE("congruence subgroup classification") {
    using L = GammaLabel;
    auto id = classify_gamma(IntSymplecticMat::identity(2));
    CHECK(id.size() == 6);

    auto t6 = IntSymplecticMat::transvection({1, 0, 1, 1}, 6);
    REQUIRE(t6.is_symplectic());
    auto l6 = classify_gamma(t6);
    CHECK(l6.count(L::Level6));
    CHECK(l6.count(L::Level3_6));
    CHECK(l6.count(L::Level3Minus));

    // A level-3 transvection whose mod-2 image moves the base characteristic.
    bool found = false;
    for (unsigned bits = 1; bits < 16; ++bits) {
        std::vector<long long> v{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1};
        auto t3 = IntSymplecticMat::transvection(v, 3);
        auto labels = classify_gamma(t3);
        CHECK(labels.count(L::Level3));
        CHECK(!labels.count(L::Level2));
        bool moves = !(act_characteristic(t3, default_odd_base()) == default_odd_base());
        CHECK(labels.count(L::Level3Minus) == (moves ? 0u : 1u));
        found = found || moves;
    }
    CHECK(found);

    IntSymplecticMat bad(2, {2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(classify_gamma(bad), InvariantViolation);
    CHECK_THROWS_AS(classify_gamma(IntSymplecticMat::identity(2), Characteristic({0, 0}, {0, 0})),
                    InvariantViolation);
}

TEST_CASE("matrix parsing and inverse") {
    auto m = parse_int_matrix("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
    CHECK(m.is_symplectic());
    CHECK_THROWS_AS(parse_int_matrix("1 0 0"), weddle::ParseError);
    CHECK_THROWS_AS(parse_int_matrix("1 x 0 1"), weddle::ParseError);
    for (const auto& M : symplectic_group(2, 3).generators) CHECK(M * M.inverse() == SymplecticMat::identity(2, 3));
}
