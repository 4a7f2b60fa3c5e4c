#pragma once

#include <random>

#include "weddle/algebra/matrix.hpp"

namespace testsupport {

using namespace weddle::algebra;

inline Rational random_rational(std::mt19937_64& rng, int span = 9) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 5);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int span = 9) {
    Matrix<Rational> m(r, c, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng, span);
    return m;
}

// Random matrix of rank at most k (product of r x k and k x c factors).
inline Matrix<Rational> random_low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
    return random_matrix(rng, r, k, 4) * random_matrix(rng, k, c, 4);
}

inline Matrix<Rational> random_skew(std::mt19937_64& rng, std::size_t n) {
    Matrix<Rational> m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_rational(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

}  // namespace testsupport
