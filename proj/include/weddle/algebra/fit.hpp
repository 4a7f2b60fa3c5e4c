#pragma once

#include <vector>

#include "weddle/algebra/matrix.hpp"
#include "weddle/algebra/poly.hpp"

namespace weddle::algebra {

// Rows = points, columns = monomials of the given degree.
template <class F>
Matrix<F> monomial_matrix(const std::vector<Vec<F>>& points, const std::vector<Exponents>& monos) {
    if (points.empty()) return Matrix<F>(0, monos.size(), F(0));
    const std::size_t n = points.front().size();
    Matrix<F> m(points.size(), monos.size(), F(0));
    std::vector<std::vector<F>> powers(n);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& x = points[i];
        if (x.size() != n) throw ShapeError("points lie in different projective spaces");
        for (std::size_t k = 0; k < n; ++k) {
            powers[k].assign(1, F(1));
        }
        for (std::size_t j = 0; j < monos.size(); ++j) {
            F v(1);
            for (std::size_t k = 0; k < n; ++k) {
                auto e = monos[j][k];
                if (e == 0) continue;
                auto& pw = powers[k];
                while (pw.size() <= e) pw.push_back(F(pw.back() * x[k]));
                v = F(v * pw[e]);
            }
            m(i, j) = v;
        }
    }
    return m;
}

template <class F>
SparsePoly<F> poly_from_coefficients(const std::vector<Exponents>& monos, const Vec<F>& c, std::size_t nvars) {
    SparsePoly<F> p(nvars);
    for (std::size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], c[j]);
    return p;
}

// Basis of the degree-d forms vanishing at every point (exact scalars).
template <class F>
std::vector<SparsePoly<F>> fit_hypersurface(const std::vector<Vec<F>>& points, unsigned degree,
                                            std::size_t nvars = 0) {
    if (nvars == 0) {
        if (points.empty()) throw ShapeError("cannot infer ambient dimension from no points");
        nvars = points.front().size();
    }
    for (const auto& p : points)
        if (p.size() != nvars) throw ShapeError("point dimension differs from ambient dimension");
    const auto monos = monomials(nvars, degree);
    std::vector<SparsePoly<F>> out;
    if (points.empty()) {
        for (const auto& e : monos) out.push_back(SparsePoly<F>::monomial(e, F(1)));
        return out;
    }
    for (const auto& v : nullspace(monomial_matrix(points, monos)))
        out.push_back(poly_from_coefficients(monos, v, nvars));
    return out;
}

// ---------------------------------------------------------------------------
// Floating point.

struct FloatNullspace {
    std::vector<Vec<Complex>> basis;     // orthonormal kernel vectors
    std::vector<double> singular_values;  // descending
    double threshold = 0.0;               // absolute cutoff used
    double relative_threshold = 0.0;
};

// Right kernel by SVD; singular values below rel_tol * sigma_max count as zero.
FloatNullspace nullspace_svd(const Matrix<Complex>& m, double rel_tol = 1e-8);

struct FloatFit {
    std::vector<SparsePoly<Complex>> basis;
    std::vector<double> singular_values;
    double relative_threshold = 0.0;
    // Ratio of the smallest retained singular value to the largest discarded
    // one (gap across the cutoff); 0 when nothing or everything is discarded.
    double gap = 0.0;
};

// Points are rescaled to unit sup-norm before evaluation.
FloatFit fit_hypersurface_float(const std::vector<Vec<Complex>>& points, unsigned degree,
                                double rel_tol = 1e-8, std::size_t nvars = 0);

Vec<Complex> normalize_sup(const Vec<Complex>& v);

double sup_norm(const Vec<Complex>& v);
double coefficient_norm(const SparsePoly<Complex>& p);

// Chordal distance between two projective points.
double chordal_distance(const Vec<Complex>& a, const Vec<Complex>& b);

}  // namespace weddle::algebra
