#include "weddle/theta/weddle.hpp"

#include <cmath>

namespace weddle::theta {

namespace {

constexpr double kInvariantTol = 1e-8;
constexpr double kDivisorResidual = 1e-12;

C2 add(const C2& a, const C2& b) { return {a[0] + b[0], a[1] + b[1]}; }

Vec<Complex> projected(const C2& z, const PeriodMatrix& om) {
    return algebra::normalize_sup(minus_coords(level3_coords(z, om)));
}

SparsePoly<Complex> unit(const SparsePoly<Complex>& f) {
    return Complex(1.0 / algebra::coefficient_norm(f)) * f;
}

double max_value(const std::vector<SparsePoly<Complex>>& fs, const Vec<Complex>& x) {
    double m = 0.0;
    for (const auto& f : fs) m = std::max(m, std::abs(f.evaluate(x)) / algebra::coefficient_norm(f));
    return m;
}

Vec<Complex> coefficient_vector(const SparsePoly<Complex>& f) {
    Vec<Complex> c;
    for (const auto& e : algebra::monomials(f.nvars(), static_cast<unsigned>(f.degree()))) c.push_back(f.coefficient(e));
    return c;
}

// w - Omega n - m with n, m the nearest integers to the lattice coordinates.
C2 reduce_to_cell(C2 w, const PeriodMatrix& om) {
    const double y00 = om(0, 0).imag(), y01 = om(0, 1).imag(), y11 = om(1, 1).imag();
    const double det = y00 * y11 - y01 * y01;
    const double u0 = (y11 * w[0].imag() - y01 * w[1].imag()) / det;
    const double u1 = (y00 * w[1].imag() - y01 * w[0].imag()) / det;
    const auto shift = om.apply({std::round(u0), std::round(u1)});
    for (int i = 0; i < 2; ++i) {
        w[i] -= shift[i];
        w[i] -= std::round(w[i].real());
    }
    return w;
}

}  // namespace

NodeCensus node_census(const Characteristic& kappa, const PeriodMatrix& om) {
    NodeCensus c;
    c.kappa = kappa;
    const auto inv = involution_matrix(kappa, om);
    const C2 hk = half_period(kappa, om);
    for (const auto& mu : sympchar::all_characteristics(2)) {
        const auto v = level3_coords(add(hk, half_period(mu, om)), om);
        const auto rv = inv.R.apply(v);
        Vec<Complex> off(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) off[i] = 0.5 * (v[i] - rv[i]);
        const double r = algebra::sup_norm(off) / algebra::sup_norm(v);
        c.off_space.push_back(r);
        if (r < kInvariantTol) c.invariant.push_back(mu);
    }
    return c;
}

C2 theta_divisor_point(std::mt19937_64& rng, const PeriodMatrix& om) {
    const Characteristic zero({0, 0}, {0, 0});
    constexpr double h = 1e-5;
    for (int attempt = 0; attempt < 50; ++attempt) {
        const C2 start = sample_point(rng, om);
        C2 w = start;
        auto f = [&](Complex w2) { return theta(zero, {w[0], w2}, om).value; };
        bool converged = false;
        for (int it = 0; it < 60; ++it) {
            const Complex v = f(w[1]);
            const Complex d = (f(w[1] + h) - f(w[1] - h)) / (2.0 * h);
            if (std::abs(d) == 0.0) break;
            const Complex step = v / d;
            w[1] -= step;
            if (std::abs(w[1]) > 1e3) break;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(w[1]))) {
                converged = true;
                break;
            }
        }
        if (!converged) continue;
        // Same point of the image: X(w + Omega n + m) is proportional to X(w).
        w = reduce_to_cell(w, om);
        for (int it = 0; it < 5; ++it) {
            const Complex d = (f(w[1] + h) - f(w[1] - h)) / (2.0 * h);
            if (std::abs(d) == 0.0) break;
            w[1] -= f(w[1]) / d;
        }
        if (std::abs(f(w[1])) < kDivisorResidual) return w;
    }
    throw DegenerateConfiguration("no point of the theta divisor found after 50 starts");
}

algebra::FloatFit quartics_through_lines(const std::vector<geometry::Line<Complex>>& lines, double rel_tol) {
    const std::vector<std::pair<Complex, Complex>> params{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0},
                                                          {1.0, -1.0}, {1.0, 0.5}, {0.5, -1.0}};
    std::vector<Vec<Complex>> pts;
    for (const auto& l : lines)
        for (const auto& x : geometry::points_on_line(l, params)) pts.push_back(algebra::normalize_sup(x));
    return algebra::fit_hypersurface_float(pts, 4, rel_tol, 4);
}

geometry::Symmetroid<Complex> theta_symmetroid(const std::vector<Vec<Complex>>& nodes) {
    return geometry::symmetroid<Complex>(
        nodes, [](const std::vector<Vec<Complex>>& pts) { return algebra::fit_hypersurface_float(pts, 2, 1e-9, 4).basis; },
        1e-9);
}

WeddleTheta weddle_from_theta(const PeriodMatrix& om, const Characteristic& kappa, std::uint64_t seed,
                              std::size_t samples, std::size_t fresh) {
    if (sympchar::parity(kappa) != -1) throw UnsupportedDomain("the Weddle surface needs an odd characteristic");
    WeddleTheta w;
    w.kappa = kappa;
    std::mt19937_64 rng(seed);
    const C2 hk = half_period(kappa, om);

    const auto census = node_census(kappa, om);
    if (census.invariant.size() != 6)
        throw InconsistencyError(std::to_string(census.invariant.size()) +
                                 " half-periods on the invariant side, expected 6");
    for (const auto& mu : census.invariant) w.nodes.push_back(projected(add(hk, half_period(mu, om)), om));

    // Fit; one retry with twice the samples before giving up.
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Vec<Complex>> pts;
        for (std::size_t i = 0; i < samples << attempt; ++i) pts.push_back(projected(add(sample_point(rng, om), hk), om));
        auto fit = algebra::fit_hypersurface_float(pts, 4, 1e-9, 4);
        w.samples = pts.size();
        w.fit_nullity = fit.basis.size();
        w.fit_gap = fit.gap;
        if (w.fit_nullity == 1) {
            w.quartic = unit(fit.basis.front());
            break;
        }
    }
    if (w.fit_nullity != 1)
        throw InconsistencyError("quartic fit nullity " + std::to_string(w.fit_nullity) + ", expected 1");

    for (std::size_t i = 0; i < fresh; ++i)
        w.fresh_residual = std::max(w.fresh_residual,
                                    std::abs(w.quartic.evaluate(projected(add(sample_point(rng, om), hk), om))));

    for (const auto& n : w.nodes) {
        w.node_value = std::max(w.node_value, std::abs(w.quartic.evaluate(n)));
        w.node_gradient = std::max(w.node_gradient, algebra::sup_norm(geometry::gradient_at(w.quartic, n)));
    }

    const auto lines = geometry::weddle_lines(w.nodes);
    for (const auto& l : lines) {
        const double r = algebra::sup_norm(geometry::restrict_to_line(w.quartic, l));
        w.lines.push_back({l.label, r});
        w.line_residual = std::max(w.line_residual, r);
    }

    std::vector<Vec<Complex>> cubic;
    for (int i = 0; i < 40; ++i) cubic.push_back(projected(theta_divisor_point(rng, om), om));
    w.cubic_samples = cubic.size();
    const auto net = algebra::fit_hypersurface_float(cubic, 2, 1e-9, 4).basis;
    w.cubic_quadrics = net.size();
    for (const auto& n : w.nodes) w.cubic_node_residual = std::max(w.cubic_node_residual, max_value(net, n));

    const auto rigid = quartics_through_lines(lines);
    w.rigidity_nullity = rigid.basis.size();
    if (w.rigidity_nullity == 1)
        w.rigidity_distance =
            algebra::chordal_distance(coefficient_vector(rigid.basis.front()), coefficient_vector(w.quartic));
    return w;
}

}  // namespace weddle::theta
