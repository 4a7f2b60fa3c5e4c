#pragma once

// Externally supplied reference forms, in their own normalization: a symmetric
// matrix in Y_0..Y_4, a skew matrix in Z_1..Z_4 and five quartics in Z.

#include <initializer_list>
#include <utility>
#include <vector>

#include "weddle/algebra/matrix.hpp"

namespace fixtures {

using weddle::algebra::Exponents;
using weddle::algebra::PolyMatrix;
using weddle::algebra::Rational;
using Poly = weddle::algebra::SparsePoly<Rational>;

// Sum of c * prod x_i^{e_i}.
inline Poly poly(std::size_t n, std::initializer_list<std::pair<long, std::initializer_list<int>>> terms) {
    Poly p(n);
    for (const auto& [c, e] : terms) {
        Exponents ex(n, 0);
        std::size_t i = 0;
        for (int v : e) ex[i++] = static_cast<std::uint16_t>(v);
        p.add_term(ex, Rational(c));
    }
    return p;
}

// Monomial in variables given by index list, e.g. mono(5, 2, {0, 1}) = 2 Y0 Y1.
inline Poly mono(std::size_t n, long c, std::initializer_list<int> vars) {
    Exponents ex(n, 0);
    for (int v : vars) ++ex[v];
    Poly p(n);
    p.add_term(ex, Rational(c));
    return p;
}

inline PolyMatrix<Rational> reference_plus() {
    auto m = [](long c, std::initializer_list<int> v) { return mono(5, c, v); };
    return PolyMatrix<Rational>{
        {m(1, {0, 0}), m(1, {1, 1}), m(1, {2, 2}), m(1, {3, 3}), m(1, {4, 4})},
        {m(1, {1, 1}), m(1, {0, 1}), m(1, {3, 4}), m(1, {2, 4}), m(1, {2, 3})},
        {m(1, {2, 2}), m(1, {3, 4}), m(1, {0, 2}), m(1, {1, 4}), m(1, {3, 1})},
        {m(1, {3, 3}), m(1, {2, 4}), m(1, {1, 4}), m(1, {0, 3}), m(1, {1, 2})},
        {m(1, {4, 4}), m(1, {3, 2}), m(1, {1, 3}), m(1, {1, 2}), m(1, {0, 4})},
    };
}

// Z_1..Z_4 are variables 0..3.
inline PolyMatrix<Rational> reference_minus() {
    auto m = [](long c, std::initializer_list<int> v) { return mono(4, c, v); };
    const Poly o(4);
    return PolyMatrix<Rational>{
        {o, m(-1, {0, 0}), m(-1, {1, 1}), m(-1, {2, 2}), m(-1, {3, 3})},
        {m(1, {0, 0}), o, m(-2, {2, 3}), m(-2, {1, 3}), m(-2, {1, 2})},
        {m(1, {1, 1}), m(2, {2, 3}), o, m(2, {0, 3}), m(-2, {2, 0})},
        {m(1, {2, 2}), m(2, {1, 3}), m(-2, {0, 3}), o, m(2, {0, 1})},
        {m(1, {3, 3}), m(2, {2, 1}), m(2, {0, 2}), m(-2, {0, 1}), o},
    };
}

inline std::vector<Poly> reference_quartics() {
    return {
        poly(4, {{6, {1, 1, 1, 1}}}),
        poly(4, {{1, {1, 3, 0, 0}}, {1, {1, 0, 3, 0}}, {-1, {1, 0, 0, 3}}}),
        poly(4, {{-1, {3, 1, 0, 0}}, {-1, {0, 1, 3, 0}}, {-1, {0, 1, 0, 3}}}),
        poly(4, {{-1, {3, 0, 1, 0}}, {-1, {0, 3, 1, 0}}, {1, {0, 0, 1, 3}}}),
        poly(4, {{1, {3, 0, 0, 1}}, {1, {0, 3, 0, 1}}, {-1, {0, 0, 3, 1}}}),
    };
}

}  // namespace fixtures
