#include "weddle/algebra/fit.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace weddle::algebra {

FloatNullspace nullspace_svd(const Matrix<Complex>& m, double rel_tol) {
    const auto rows = static_cast<Eigen::Index>(m.rows());
    const auto cols = static_cast<Eigen::Index>(m.cols());
    FloatNullspace out;
    out.relative_threshold = rel_tol;
    if (cols == 0) return out;
    // Pad to at least as many rows as columns so the full V is available.
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(std::max(rows, cols), cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = m(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    out.singular_values.assign(s.data(), s.data() + s.size());
    const double smax = s.size() ? s(0) : 0.0;
    out.threshold = rel_tol * smax;
    const auto& v = svd.matrixV();
    for (Eigen::Index j = 0; j < cols; ++j) {
        if (smax > 0.0 && s(j) > out.threshold) continue;
        Vec<Complex> k(static_cast<std::size_t>(cols));
        for (Eigen::Index i = 0; i < cols; ++i) k[static_cast<std::size_t>(i)] = v(i, j);
        out.basis.push_back(std::move(k));
    }
    return out;
}

double sup_norm(const Vec<Complex>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

Vec<Complex> normalize_sup(const Vec<Complex>& v) {
    double m = sup_norm(v);
    if (m == 0.0) return v;
    Vec<Complex> r = v;
    for (auto& x : r) x /= m;
    return r;
}

double coefficient_norm(const SparsePoly<Complex>& p) {
    double s = 0.0;
    for (const auto& [e, c] : p.terms()) s += std::norm(c);
    return std::sqrt(s);
}

double chordal_distance(const Vec<Complex>& a, const Vec<Complex>& b) {
    if (a.size() != b.size()) throw ShapeError("projective points of different dimension");
    double na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    if (na == 0.0 || nb == 0.0) throw ShapeError("zero vector is not a projective point");
    // |a ^ b| / (|a| |b|): no cancellation for nearby points, unlike sqrt(1 - cos^2).
    double w = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) w += std::norm(a[i] * b[j] - a[j] * b[i]);
    return std::min(1.0, std::sqrt(w / (na * nb)));
}

FloatFit fit_hypersurface_float(const std::vector<Vec<Complex>>& points, unsigned degree, double rel_tol,
                                std::size_t nvars) {
    if (nvars == 0) {
        if (points.empty()) throw ShapeError("cannot infer ambient dimension from no points");
        nvars = points.front().size();
    }
    std::vector<Vec<Complex>> scaled;
    scaled.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != nvars) throw ShapeError("point dimension differs from ambient dimension");
        scaled.push_back(normalize_sup(p));
    }
    const auto monos = monomials(nvars, degree);
    FloatNullspace ns = nullspace_svd(monomial_matrix(scaled, monos), rel_tol);
    FloatFit fit;
    fit.singular_values = ns.singular_values;
    fit.relative_threshold = rel_tol;
    for (const auto& v : ns.basis) fit.basis.push_back(poly_from_coefficients(monos, v, nvars));
    const std::size_t kept = monos.size() - ns.basis.size();
    const auto& s = ns.singular_values;
    if (kept > 0 && kept < s.size()) fit.gap = s[kept] > 0.0 ? s[kept - 1] / s[kept] : INFINITY;
    return fit;
}

}  // namespace weddle::algebra
