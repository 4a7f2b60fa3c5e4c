#pragma once

// Six points in P^3 and the 25 lines they determine: the 15 joins and the 10
// intersections of complementary planes. Works over exact fields and over
// complex floats (kernels by SVD).

#include <array>
#include <string>
#include <vector>

#include "weddle/algebra/fit.hpp"
#include "weddle/algebra/matrix.hpp"
#include "weddle/algebra/poly.hpp"

namespace weddle::geometry {

using algebra::Complex;
using algebra::Matrix;
using algebra::SparsePoly;
using algebra::Vec;

template <class F>
struct Line {
    Vec<F> p;
    Vec<F> q;
    std::string label;  // "ij" for joins, "ijk|lmn" for plane intersections
};

constexpr double kKernelTol = 1e-9;

template <class F>
std::vector<Vec<F>> kernel(const Matrix<F>& m, double rel_tol = kKernelTol) {
    if constexpr (algebra::ScalarTraits<F>::exact) return algebra::nullspace_naive(m);
    else return algebra::nullspace_svd(m, rel_tol).basis;
}

template <class F>
Matrix<F> rows_of(const std::vector<Vec<F>>& vs) {
    Matrix<F> m(vs.size(), vs.empty() ? 0 : vs.front().size(), F(0));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs[i].size(); ++j) m(i, j) = vs[i][j];
    return m;
}

// Linear form vanishing on three points of P^3.
template <class F>
Vec<F> plane_through(const Vec<F>& a, const Vec<F>& b, const Vec<F>& c) {
    auto k = kernel(rows_of<F>({a, b, c}));
    if (k.size() != 1) throw DegenerateConfiguration("points are collinear");
    return k.front();
}

// Line cut out by two linear forms.
template <class F>
Line<F> meet(const Vec<F>& h1, const Vec<F>& h2) {
    auto k = kernel(rows_of<F>({h1, h2}));
    if (k.size() != 2) throw DegenerateConfiguration("planes coincide");
    return {k[0], k[1], {}};
}

// {i,j,k} with i = 0, paired with its complement: the 10 splittings of six points.
inline const std::vector<std::array<std::array<int, 3>, 2>>& complementary_triples() {
    static const auto splits = [] {
        std::vector<std::array<std::array<int, 3>, 2>> out;
        for (int j = 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                std::array<int, 3> a{0, j, k}, b{};
                int n = 0;
                for (int x = 1; x < 6; ++x)
                    if (x != j && x != k) b[n++] = x;
                out.push_back({a, b});
            }
        return out;
    }();
    return splits;
}

template <class F>
std::vector<Line<F>> weddle_lines(const std::vector<Vec<F>>& nodes) {
    if (nodes.size() != 6) throw ShapeError("expected six nodes");
    std::vector<Line<F>> lines;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            lines.push_back({nodes[i], nodes[j], std::to_string(i) + std::to_string(j)});
    for (const auto& [a, b] : complementary_triples()) {
        auto l = meet(plane_through(nodes[a[0]], nodes[a[1]], nodes[a[2]]),
                      plane_through(nodes[b[0]], nodes[b[1]], nodes[b[2]]));
        l.label = std::to_string(a[0]) + std::to_string(a[1]) + std::to_string(a[2]) + "|" +
                  std::to_string(b[0]) + std::to_string(b[1]) + std::to_string(b[2]);
        lines.push_back(l);
    }
    return lines;
}

// Coefficients c_k of f(s p + t q) = sum c_k s^{d-k} t^k for homogeneous f of degree d.
template <class F>
Vec<F> restrict_to_line(const SparsePoly<F>& f, const Line<F>& l) {
    const std::size_t n = f.nvars();
    if (l.p.size() != n || l.q.size() != n) throw ShapeError("line lives in a different space");
    std::vector<SparsePoly<F>> img;
    for (std::size_t i = 0; i < n; ++i) {
        SparsePoly<F> li(2);
        li.add_term({1, 0}, l.p[i]);
        li.add_term({0, 1}, l.q[i]);
        img.push_back(li);
    }
    const auto g = f.substitute(img);
    const int d = f.degree();
    Vec<F> c(d < 0 ? 0 : d + 1, F(0));
    for (const auto& [e, v] : g.terms()) c[e[1]] = v;
    return c;
}

template <class F>
Vec<F> gradient_at(const SparsePoly<F>& f, const Vec<F>& x) {
    Vec<F> g;
    for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i).evaluate(x));
    return g;
}

// Points s p + t q at the given (s, t) parameters.
template <class F>
std::vector<Vec<F>> points_on_line(const Line<F>& l, const std::vector<std::pair<F, F>>& params) {
    std::vector<Vec<F>> out;
    for (const auto& [s, t] : params) {
        Vec<F> x(l.p.size(), F(0));
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = F(F(s * l.p[i]) + F(t * l.q[i]));
        out.push_back(x);
    }
    return out;
}

// Exact scalars: scale so the first nonzero coordinate is 1.
template <class F>
Vec<F> projective_key(Vec<F> v) {
    for (const auto& x : v)
        if (!algebra::is_zero(x)) {
            const F inv = F(F(1) / x);
            for (auto& y : v) y = F(y * inv);
            return v;
        }
    throw ShapeError("zero vector is not a projective point");
}

// Largest |entry| relative helpers for the floating side.
inline double max_abs(const Vec<Complex>& v) { return algebra::sup_norm(v); }

}  // namespace weddle::geometry
