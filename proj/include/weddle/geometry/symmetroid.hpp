#pragma once

// Quartic symmetroid of the net of quadrics through six points of P^3:
// F(t) = det(sum t_k S_k), S_k twice the Gram matrix of the k-th quadric
// (no division, so it also runs over unbound Fp constants).
// Its expected singular points are the six cones with vertex at a point and
// the ten plane pairs over complementary triples.

#include <string>
#include <vector>

#include "weddle/algebra/scalar.hpp"
#include "weddle/geometry/config.hpp"

namespace weddle::geometry {

template <class F>
struct SymmetroidPoint {
    Vec<F> t;             // coordinates in the quadric basis
    std::size_t rank = 0; // of sum t_k S_k
    Vec<F> gradient;      // of F at t
    std::string label;    // "cone i" or "ijk|lmn"
};

template <class F>
struct Symmetroid {
    std::vector<SparsePoly<F>> quadrics;  // basis of quadrics through the points
    std::vector<Matrix<F>> matrices;      // 2 x Gram matrix: diagonal 2c, off-diagonal c
    SparsePoly<F> quartic{4};             // F(t)
    std::vector<SymmetroidPoint<F>> points;  // 6 cones, then 10 plane pairs
};

// q(x) = x^t S x / 2.
template <class F>
Matrix<F> symmetric_matrix(const SparsePoly<F>& q) {
    if (q.nvars() != 4 || q.degree() != 2) throw ShapeError("expected a quadric in 4 variables");
    Matrix<F> s(4, 4, F(0));
    for (const auto& [e, c] : q.terms()) {
        std::vector<int> idx;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < e[i]; ++k) idx.push_back(i);
        if (idx[0] == idx[1]) {
            s(idx[0], idx[0]) = F(c + c);
        } else {
            s(idx[0], idx[1]) = c;
            s(idx[1], idx[0]) = c;
        }
    }
    return s;
}

template <class F>
std::size_t matrix_rank(const Matrix<F>& m, double rel_tol = kKernelTol) {
    return m.cols() - kernel(m, rel_tol).size();
}

template <class F>
Matrix<F> combine(const std::vector<Matrix<F>>& ms, const Vec<F>& t) {
    Matrix<F> r(4, 4, F(0));
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) r(i, j) = F(r(i, j) + F(t[k] * ms[k](i, j)));
    return r;
}

template <class F>
Vec<F> linear_form_product_in_basis(const Vec<F>& h1, const Vec<F>& h2, const std::vector<SparsePoly<F>>& basis,
                                    double rel_tol) {
    SparsePoly<F> a(4), b(4);
    for (std::size_t i = 0; i < 4; ++i) {
        a += SparsePoly<F>::variable(4, i) * SparsePoly<F>::constant(4, h1[i]);
        b += SparsePoly<F>::variable(4, i) * SparsePoly<F>::constant(4, h2[i]);
    }
    const auto target = a * b;
    const auto monos = algebra::monomials(4, 2);
    Matrix<F> m(monos.size(), basis.size() + 1, F(0));
    for (std::size_t r = 0; r < monos.size(); ++r) {
        for (std::size_t k = 0; k < basis.size(); ++k) m(r, k) = basis[k].coefficient(monos[r]);
        m(r, basis.size()) = F(-target.coefficient(monos[r]));
    }
    auto ker = kernel(m, rel_tol);
    if (ker.size() != 1 || algebra::is_zero(ker[0].back()))
        throw DegenerateConfiguration("plane pair is not in the span of the quadrics");
    Vec<F> t(ker[0].begin(), ker[0].end() - 1);
    const F inv = F(F(1) / ker[0].back());
    for (auto& x : t) x = F(x * inv);
    return t;
}

// `fit` returns a basis of the quadrics through the points (exact or float).
template <class F, class Fit>
Symmetroid<F> symmetroid(const std::vector<Vec<F>>& nodes, Fit&& fit, double rel_tol = kKernelTol) {
    if (nodes.size() != 6) throw ShapeError("expected six points");
    // General position: no four of the points coplanar (else some cones drop rank).
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b)
            for (std::size_t c = b + 1; c < 6; ++c)
                for (std::size_t d = c + 1; d < 6; ++d)
                    if (matrix_rank(rows_of<F>({nodes[a], nodes[b], nodes[c], nodes[d]}), rel_tol) < 4)
                        throw DegenerateConfiguration("points " + std::to_string(a) + std::to_string(b) +
                                                      std::to_string(c) + std::to_string(d) + " are coplanar");
    Symmetroid<F> out;
    out.quadrics = fit(nodes);
    if (out.quadrics.size() != 4)
        throw DegenerateConfiguration("quadrics through the points: dimension " + std::to_string(out.quadrics.size()) +
                                      ", expected 4");
    for (const auto& q : out.quadrics) out.matrices.push_back(symmetric_matrix(q));

    algebra::PolyMatrix<F> pm(4, 4, SparsePoly<F>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                pm(i, j) += SparsePoly<F>::variable(4, k) * SparsePoly<F>::constant(4, out.matrices[k](i, j));
    out.quartic = algebra::determinant_expand(pm);

    auto finish = [&](Vec<F> t, std::string label) {
        SymmetroidPoint<F> pt;
        pt.rank = matrix_rank(combine(out.matrices, t), rel_tol);
        pt.gradient = gradient_at(out.quartic, t);
        pt.t = std::move(t);
        pt.label = std::move(label);
        out.points.push_back(std::move(pt));
    };

    // Cone with vertex p_i: (sum t_k S_k) p_i = 0.
    for (std::size_t i = 0; i < 6; ++i) {
        Matrix<F> m(4, 4, F(0));
        for (std::size_t k = 0; k < 4; ++k) {
            const auto col = out.matrices[k].apply(nodes[i]);
            for (std::size_t r = 0; r < 4; ++r) m(r, k) = col[r];
        }
        auto ker = kernel(m, rel_tol);
        if (ker.size() != 1) throw DegenerateConfiguration("no unique cone with vertex at point " + std::to_string(i));
        finish(ker[0], "cone " + std::to_string(i));
    }
    for (const auto& [a, b] : complementary_triples()) {
        const auto h1 = plane_through(nodes[a[0]], nodes[a[1]], nodes[a[2]]);
        const auto h2 = plane_through(nodes[b[0]], nodes[b[1]], nodes[b[2]]);
        finish(linear_form_product_in_basis(h1, h2, out.quadrics, rel_tol),
               std::to_string(a[0]) + std::to_string(a[1]) + std::to_string(a[2]) + "|" + std::to_string(b[0]) +
                   std::to_string(b[1]) + std::to_string(b[2]));
    }
    return out;
}

// All points of P^3(F_p) (first nonzero coordinate 1) where f and its gradient vanish.
std::vector<Vec<algebra::Fp>> singular_points_ff(const SparsePoly<algebra::Fp>& f, std::int64_t p);

// Random points of P^3(F_p): first coordinate 1, the rest uniform.
std::vector<Vec<algebra::Fp>> random_points_ff(std::int64_t p, std::uint64_t seed, std::size_t count);

}  // namespace weddle::geometry
