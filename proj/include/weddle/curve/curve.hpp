#pragma once

// Genus-2 curve y^2 = f(x) with split sextic f, its tricanonical model in P^4
// (basis 1, x, x^2, x^3 even and y odd under y -> -y), the secant map to the
// hyperplane {y = 0}, quadrics through the curve and their map to P^3.
// Templated over exact fields (Fp) and complex floats.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "weddle/algebra/fit.hpp"
#include "weddle/algebra/scalar.hpp"
#include "weddle/geometry/config.hpp"

namespace weddle::curve {

using algebra::Complex;
using algebra::Fp;
using algebra::SparsePoly;
using algebra::Vec;

constexpr double kFloatTol = 1e-9;

// Chart 0: (x, y) with y^2 = f(x). Chart 1: (u, v) = (1/x, y/x^3) with v^2 = u^6 f(1/u).
template <class F>
struct CurvePoint {
    F x;
    F y;
    int chart = 0;
    bool weierstrass() const { return algebra::is_zero(y); }
};

template <class F>
class GenusTwoCurve {
public:
    // f = prod (x - r_i); throws UnsupportedDomain unless six distinct roots.
    explicit GenusTwoCurve(std::vector<F> roots) : roots_(std::move(roots)) {
        if (roots_.size() != 6) throw UnsupportedDomain("a genus-2 curve needs six roots");
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j)
                if (is_small(F(roots_[i] - roots_[j])))
                    throw UnsupportedDomain("roots " + std::to_string(i) + " and " + std::to_string(j) +
                                            " coincide: the sextic is singular");
    }

    const std::vector<F>& roots() const { return roots_; }

    F f(const F& x) const {
        F r(1);
        for (const auto& a : roots_) r = F(r * F(x - a));
        return r;
    }
    // u^6 f(1/u) = prod (1 - r_i u)
    F f_reversed(const F& u) const {
        F r(1);
        for (const auto& a : roots_) r = F(r * F(F(1) - F(a * u)));
        return r;
    }

    bool on_curve(const CurvePoint<F>& p) const {
        const F lhs = F(p.y * p.y);
        return is_small(F(lhs - (p.chart == 0 ? f(p.x) : f_reversed(p.x))), scale(p));
    }

    CurvePoint<F> involution(const CurvePoint<F>& p) const { return {p.x, F(-p.y), p.chart}; }
    CurvePoint<F> weierstrass(std::size_t i) const { return {roots_.at(i), F(0), 0}; }

    static bool is_small(const F& v, double scale = 1.0) {
        if constexpr (algebra::ScalarTraits<F>::exact) return algebra::is_zero(v);
        else return std::abs(v) <= kFloatTol * std::max(1.0, scale);
    }

private:
    double scale(const CurvePoint<F>& p) const {
        if constexpr (algebra::ScalarTraits<F>::exact) return 1.0;
        else return std::max(1.0, std::pow(std::abs(p.x), 6));
    }

    std::vector<F> roots_;
};

GenusTwoCurve<Fp> curve_ff(const std::vector<long long>& roots, std::int64_t p);
GenusTwoCurve<Complex> curve_float(const std::vector<long long>& roots);

// Random non-Weierstrass affine point.
CurvePoint<Fp> random_point(const GenusTwoCurve<Fp>& c, std::mt19937_64& rng);
CurvePoint<Complex> random_point(const GenusTwoCurve<Complex>& c, std::mt19937_64& rng);

// Random scalar: uniform in F_p, standard complex normal for floats.
Fp random_scalar(const Fp& like, std::mt19937_64& rng);
Complex random_scalar(const Complex& like, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Scalar-generic helpers.

template <class F>
double magnitude(const F& v) {
    if constexpr (algebra::ScalarTraits<F>::exact) return algebra::is_zero(v) ? 0.0 : 1.0;
    else return std::abs(v);
}

template <class F>
double max_magnitude(const Vec<F>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, magnitude(x));
    return m;
}

// Exact: 0 or 1. Floats: chordal distance.
template <class F>
double projective_distance(const Vec<F>& a, const Vec<F>& b) {
    if constexpr (algebra::ScalarTraits<F>::exact) {
        if (a.size() != b.size()) throw ShapeError("projective points of different dimension");
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                if (!algebra::is_zero(F(F(a[i] * b[j]) - F(a[j] * b[i])))) return 1.0;
        return 0.0;
    } else {
        return algebra::chordal_distance(a, b);
    }
}

template <class F>
Vec<F> normalize_point(const Vec<F>& v) {
    if constexpr (algebra::ScalarTraits<F>::exact) return geometry::projective_key(v);
    else return algebra::normalize_sup(v);
}

// Exact: leading coefficient 1. Floats: unit coefficient norm.
template <class F>
SparsePoly<F> normalize_form(const SparsePoly<F>& f) {
    if (f.is_zero()) throw ShapeError("zero form");
    if constexpr (algebra::ScalarTraits<F>::exact) return F(F(1) / f.leading().second) * f;
    else return Complex(1.0 / algebra::coefficient_norm(f)) * f;
}

// |f(x)| for x normalized and f normalized.
template <class F>
double form_residual(const SparsePoly<F>& f, const Vec<F>& x) {
    return magnitude(normalize_form(f).evaluate(normalize_point(x)));
}

template <class F>
std::vector<SparsePoly<F>> fit_forms(const std::vector<Vec<F>>& pts, unsigned degree, std::size_t nvars,
                                     double rel_tol = kFloatTol) {
    if constexpr (algebra::ScalarTraits<F>::exact) return algebra::fit_hypersurface(pts, degree, nvars);
    else return algebra::fit_hypersurface_float(pts, degree, rel_tol, nvars).basis;
}

// Exact: a - c b == 0 for the c matching a leading term. Floats: chordal
// distance of coefficient vectors over all monomials of the degree.
template <class F>
double form_distance(const SparsePoly<F>& a, const SparsePoly<F>& b) {
    if (a.nvars() != b.nvars() || a.degree() != b.degree()) return 1.0;
    Vec<F> va, vb;
    for (const auto& e : algebra::monomials(a.nvars(), static_cast<unsigned>(a.degree()))) {
        va.push_back(a.coefficient(e));
        vb.push_back(b.coefficient(e));
    }
    return projective_distance(va, vb);
}

template <class F>
Vec<F> lerp(const Vec<F>& p, const Vec<F>& q, const F& a, const F& b) {
    Vec<F> r(p.size(), F(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = F(F(a * p[i]) + F(b * q[i]));
    return r;
}

// ---------------------------------------------------------------------------
// Tricanonical model and secants.

// 1 in the field of x (a bound Fp constant rather than an unbound one).
template <class F>
F one_like(const F& x) {
    if constexpr (std::is_same_v<F, Fp>) return x.bound() ? Fp(1, x.modulus()) : Fp(1);
    else return F(1);
}

template <class F>
Vec<F> tricanonical(const CurvePoint<F>& p) {
    const F one = one_like(p.x);
    if (p.chart == 0) return {one, p.x, F(p.x * p.x), F(F(p.x * p.x) * p.x), p.y};
    if (p.chart == 1) return {F(F(p.x * p.x) * p.x), F(p.x * p.x), p.x, one, p.y};
    throw UnsupportedDomain("unknown chart " + std::to_string(p.chart));
}

// (1, r, r^2, r^3): the embedded Weierstrass points inside {y = 0}.
template <class F>
std::vector<Vec<F>> weierstrass_images(const GenusTwoCurve<F>& c) {
    std::vector<Vec<F>> out;
    for (std::size_t i = 0; i < 6; ++i) {
        auto v = tricanonical(c.weierstrass(i));
        v.pop_back();
        out.push_back(v);
    }
    return out;
}

// Line through P, Q meets {y = 0} at y_Q P - y_P Q.
template <class F>
Vec<F> secant_point(const CurvePoint<F>& p, const CurvePoint<F>& q) {
    if (p.chart != q.chart) throw UnsupportedDomain("secant of points given in different charts");
    const auto P = tricanonical(p), Q = tricanonical(q);
    if (p.weierstrass() && q.weierstrass())
        throw DegenerateConfiguration("both points are Weierstrass: the secant lies in {y = 0}");
    if (projective_distance(P, Q) < kFloatTol) throw DegenerateConfiguration("secant of a point with itself");
    Vec<F> s(4);
    for (std::size_t i = 0; i < 4; ++i) s[i] = F(F(q.y * P[i]) - F(p.y * Q[i]));
    return s;
}

// Two random points with distinct images (a point may repeat over a small field).
template <class F>
std::pair<CurvePoint<F>, CurvePoint<F>> random_pair(const GenusTwoCurve<F>& c, std::mt19937_64& rng) {
    for (;;) {
        auto p = random_point(c, rng), q = random_point(c, rng);
        if (projective_distance(tricanonical(p), tricanonical(q)) > 1e-6) return {p, q};
    }
}

// A point a P + b Q of Sec(C) in P^4 with random a, b.
template <class F>
Vec<F> random_secant_sample(const GenusTwoCurve<F>& c, std::mt19937_64& rng) {
    const auto [p, q] = random_pair(c, rng);
    const F like = c.roots().front();
    return lerp(tricanonical(p), tricanonical(q), random_scalar(like, rng), random_scalar(like, rng));
}

// ---------------------------------------------------------------------------
// W': the quartic through the secant points.

template <class F>
struct WeddlePrime {
    SparsePoly<F> quartic{4};
    std::size_t samples = 0;
    std::size_t nullity = 0;
    std::vector<Vec<F>> nodes;
    double node_value = 0.0;
    double node_gradient = 0.0;
    std::vector<geometry::Line<F>> lines;
    double line_residual = 0.0;
    bool lines_distinct = false;
    // Each of the 10 plane-intersection lines against the 15 joins: how many it meets.
    std::vector<std::size_t> joins_met;
    std::size_t rigidity_nullity = 0;
    double rigidity_distance = 1.0;
};

// Two lines of P^3 meet iff det(p1, q1, p2, q2) = 0.
template <class F>
bool lines_meet(const geometry::Line<F>& a, const geometry::Line<F>& b) {
    algebra::Matrix<F> m = geometry::rows_of<F>({a.p, a.q, b.p, b.q});
    return geometry::kernel(m).size() > 0;
}

template <class F>
bool same_line(const geometry::Line<F>& a, const geometry::Line<F>& b) {
    return geometry::kernel(geometry::rows_of<F>({a.p, a.q, b.p, b.q})).size() == 2;
}

// Quartics vanishing on 6 points of each line.
template <class F>
std::vector<SparsePoly<F>> quartics_through_lines(const std::vector<geometry::Line<F>>& lines) {
    std::vector<std::pair<F, F>> params;
    for (int k = 0; k < 6; ++k) params.push_back({F(1), F(k)});
    std::vector<Vec<F>> pts;
    for (const auto& l : lines)
        for (const auto& x : geometry::points_on_line(l, params)) pts.push_back(normalize_point(x));
    return fit_forms(pts, 4, 4);
}

template <class F>
WeddlePrime<F> weddle_prime_fit(const GenusTwoCurve<F>& c, std::uint64_t seed, std::size_t samples = 80) {
    if (samples < 60) throw UnsupportedDomain("need at least 60 secant samples");
    std::mt19937_64 rng(seed);
    WeddlePrime<F> w;
    for (int attempt = 0; attempt < 2 && w.nullity != 1; ++attempt) {
        std::vector<Vec<F>> pts;
        for (std::size_t i = 0; i < samples << attempt; ++i) {
            const auto [p, q] = random_pair(c, rng);
            pts.push_back(normalize_point(secant_point(p, q)));
        }
        auto fit = fit_forms(pts, 4, 4);
        w.samples = pts.size();
        w.nullity = fit.size();
        if (w.nullity == 1) w.quartic = normalize_form(fit.front());
    }
    if (w.nullity != 1) throw InconsistencyError("W' fit nullity " + std::to_string(w.nullity) + ", expected 1");

    w.nodes = weierstrass_images(c);
    for (const auto& n : w.nodes) {
        w.node_value = std::max(w.node_value, form_residual(w.quartic, n));
        w.node_gradient = std::max(w.node_gradient, max_magnitude(geometry::gradient_at(w.quartic, normalize_point(n))));
    }
    w.lines = geometry::weddle_lines(w.nodes);
    for (auto& l : w.lines) {
        l.p = normalize_point(l.p);
        l.q = normalize_point(l.q);
        w.line_residual = std::max(w.line_residual, max_magnitude(geometry::restrict_to_line(w.quartic, l)));
    }
    w.lines_distinct = true;
    for (std::size_t i = 0; i < w.lines.size(); ++i)
        for (std::size_t j = i + 1; j < w.lines.size(); ++j)
            if (same_line(w.lines[i], w.lines[j])) w.lines_distinct = false;
    for (std::size_t i = 15; i < w.lines.size(); ++i) {
        std::size_t n = 0;
        for (std::size_t j = 0; j < 15; ++j) n += lines_meet(w.lines[i], w.lines[j]);
        w.joins_met.push_back(n);
    }
    const auto rigid = quartics_through_lines(w.lines);
    w.rigidity_nullity = rigid.size();
    if (rigid.size() == 1) w.rigidity_distance = form_distance(rigid.front(), w.quartic);
    return w;
}

// ---------------------------------------------------------------------------
// Quadrics through C and the map phi.

template <class F>
struct CurveQuadrics {
    std::vector<SparsePoly<F>> basis;  // 5 variables
    std::size_t samples = 0;
    double fresh_residual = 0.0;
    // Restriction to {y = 0}.
    std::size_t restriction_rank = 0;
    std::size_t weierstrass_quadrics = 0;  // quadrics in 4 variables through the 6 images
    bool restriction_is_weierstrass_span = false;
};

template <class F>
SparsePoly<F> restrict_to_hyperplane(const SparsePoly<F>& f) {
    SparsePoly<F> r(4);
    for (const auto& [e, c] : f.terms())
        if (e[4] == 0) r.add_term(algebra::Exponents(e.begin(), e.begin() + 4), c);
    return r;
}

// Rank of a family of forms of one degree, via their coefficient vectors.
template <class F>
std::size_t forms_rank(const std::vector<SparsePoly<F>>& fs, std::size_t nvars, unsigned degree) {
    const auto monos = algebra::monomials(nvars, degree);
    algebra::Matrix<F> m(fs.size(), monos.size(), F(0));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < monos.size(); ++j) m(i, j) = fs[i].coefficient(monos[j]);
    return monos.size() - geometry::kernel(m).size();
}

template <class F>
CurveQuadrics<F> quadrics_through_curve(const GenusTwoCurve<F>& c, std::uint64_t seed, std::size_t samples = 40) {
    if (samples < 40) throw UnsupportedDomain("need at least 40 curve samples");
    std::mt19937_64 rng(seed);
    CurveQuadrics<F> q;
    std::vector<Vec<F>> pts;
    for (std::size_t i = 0; i < samples; ++i) pts.push_back(normalize_point(tricanonical(random_point(c, rng))));
    q.samples = pts.size();
    q.basis = fit_forms(pts, 2, 5);
    if (q.basis.size() != 4)
        throw InconsistencyError("quadrics through C: dimension " + std::to_string(q.basis.size()) + ", expected 4");
    for (auto& b : q.basis) b = normalize_form(b);
    for (int i = 0; i < 20; ++i) {
        const auto x = tricanonical(random_point(c, rng));
        for (const auto& b : q.basis) q.fresh_residual = std::max(q.fresh_residual, form_residual(b, x));
    }
    std::vector<SparsePoly<F>> res;
    for (const auto& b : q.basis) res.push_back(restrict_to_hyperplane(b));
    q.restriction_rank = forms_rank(res, 4, 2);
    const auto through = fit_forms(weierstrass_images(c), 2, 4);
    q.weierstrass_quadrics = through.size();
    auto both = res;
    both.insert(both.end(), through.begin(), through.end());
    q.restriction_is_weierstrass_span = q.restriction_rank == 4 && through.size() == 4 && forms_rank(both, 4, 2) == 4;
    return q;
}

// nullopt on the base locus (all quadrics vanish: the point is on C).
template <class F>
std::optional<Vec<F>> phi(const std::vector<SparsePoly<F>>& quadrics, const Vec<F>& x) {
    const auto xn = normalize_point(x);
    Vec<F> v;
    for (const auto& q : quadrics) v.push_back(q.evaluate(xn));
    if (max_magnitude(v) <= (algebra::ScalarTraits<F>::exact ? 0.0 : kFloatTol)) return std::nullopt;
    return normalize_point(v);
}

template <class F>
Vec<F> phi_or_throw(const std::vector<SparsePoly<F>>& quadrics, const Vec<F>& x) {
    auto v = phi(quadrics, x);
    if (!v) throw DegenerateConfiguration("point lies in the base locus of the quadrics");
    return *v;
}

// Point (1, r, r^2, r^3, t) on the tangent line at the Weierstrass point r.
template <class F>
Vec<F> weierstrass_tangent_point(const GenusTwoCurve<F>& c, std::size_t i, const F& t) {
    auto v = tricanonical(c.weierstrass(i));
    v[4] = t;
    return v;
}

template <class F>
struct PhiChecks {
    double secant_constant = 0.0;   // max distance between images of points on one secant
    double tangent_common = 0.0;    // max distance between images of the six tangent lines
    Vec<F> origin;                  // the common tangent image
    bool random_defined = false;
    double n_identity = 0.0;        // phi(S(p,q)) against phi(a P + b Q)
    bool curve_in_base_locus = false;
};

template <class F>
PhiChecks<F> phi_checks(const GenusTwoCurve<F>& c, const std::vector<SparsePoly<F>>& quadrics, std::uint64_t seed,
                        std::size_t secants = 10) {
    std::mt19937_64 rng(seed);
    PhiChecks<F> out;
    const F like = c.roots().front();
    for (std::size_t i = 0; i < secants; ++i) {
        const auto [p, q] = random_pair(c, rng);
        const auto P = tricanonical(p), Q = tricanonical(q);
        const auto base = phi_or_throw(quadrics, lerp(P, Q, F(1), F(1)));
        for (int k = 0; k < 2; ++k) {
            const auto img = phi_or_throw(quadrics, lerp(P, Q, random_scalar(like, rng), random_scalar(like, rng)));
            out.secant_constant = std::max(out.secant_constant, projective_distance(base, img));
        }
        auto s = secant_point(p, q);
        s.push_back(F(0));
        out.n_identity = std::max(out.n_identity, projective_distance(phi_or_throw(quadrics, s), base));
    }
    out.origin = phi_or_throw(quadrics, weierstrass_tangent_point(c, 0, F(1)));
    for (std::size_t i = 0; i < 6; ++i)
        for (int k = 1; k <= 2; ++k) {
            const auto img = phi_or_throw(quadrics, weierstrass_tangent_point(c, i, F(k)));
            out.tangent_common = std::max(out.tangent_common, projective_distance(out.origin, img));
        }
    Vec<F> x;
    for (int k = 0; k < 5; ++k) x.push_back(random_scalar(like, rng));
    out.random_defined = phi(quadrics, x).has_value();
    out.curve_in_base_locus = !phi(quadrics, tricanonical(random_point(c, rng))).has_value();
    return out;
}

// ---------------------------------------------------------------------------
// Kummer quartic: the image of Sec(C) under phi.

template <class F>
struct KummerFit {
    SparsePoly<F> quartic{4};
    std::size_t samples = 0;
    std::size_t nullity = 0;
    std::vector<Vec<F>> nodes;         // 15 Weierstrass secants, then the tangent image
    std::vector<std::string> labels;
    bool nodes_distinct = false;
    double node_value = 0.0;
    double node_gradient = 0.0;
};

template <class F>
KummerFit<F> kummer_fit(const GenusTwoCurve<F>& c, const std::vector<SparsePoly<F>>& quadrics, std::uint64_t seed,
                        std::size_t samples = 100) {
    if (samples < 80) throw UnsupportedDomain("need at least 80 secant samples");
    std::mt19937_64 rng(seed);
    KummerFit<F> k;
    std::vector<Vec<F>> pts;
    while (pts.size() < samples)
        if (auto v = phi(quadrics, random_secant_sample(c, rng))) pts.push_back(*v);
    k.samples = pts.size();
    auto fit = fit_forms(pts, 4, 4);
    k.nullity = fit.size();
    if (k.nullity != 1) throw InconsistencyError("Kummer fit nullity " + std::to_string(k.nullity) + ", expected 1");
    k.quartic = normalize_form(fit.front());

    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            const auto P = tricanonical(c.weierstrass(i)), Q = tricanonical(c.weierstrass(j));
            // Any point of the secant other than the two ends.
            k.nodes.push_back(phi_or_throw(quadrics, lerp(P, Q, F(1), F(2))));
            k.labels.push_back("w" + std::to_string(i) + "w" + std::to_string(j));
        }
    k.nodes.push_back(phi_or_throw(quadrics, weierstrass_tangent_point(c, 0, F(1))));
    k.labels.push_back("tangent");
    k.nodes_distinct = true;
    for (std::size_t i = 0; i < k.nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < k.nodes.size(); ++j)
            if (projective_distance(k.nodes[i], k.nodes[j]) < 1e-6) k.nodes_distinct = false;
        k.node_value = std::max(k.node_value, form_residual(k.quartic, k.nodes[i]));
        k.node_gradient = std::max(k.node_gradient, max_magnitude(geometry::gradient_at(k.quartic, k.nodes[i])));
    }
    return k;
}

// ---------------------------------------------------------------------------
// The secant octic in P^4 and its restriction to {y = 0}; exact fields only.

struct SecOctic {
    SparsePoly<Fp> octic{5};
    std::size_t samples = 0;
    std::size_t monomials = 0;
    std::size_t nullity = 0;
    bool fresh_vanish = false;
    bool restriction_proportional = false;  // octic|_{y=0} = c (W')^2
    Fp ratio;
    bool singular_along_curve = false;      // gradient zero at 20 curve points
};

SecOctic sec_octic_tangency(const GenusTwoCurve<Fp>& c, const SparsePoly<Fp>& weddle_prime, std::uint64_t seed,
                            std::size_t samples = 600);

// Hyperplanes through 4 curve points with distinct x, until one whose section
// is split over F_p: degree of the x-polynomial and its F_p roots (distinct
// and with multiplicity).
struct HyperplaneSection {
    int polynomial_degree = 0;
    std::size_t distinct_points = 0;
    std::size_t multiplicity_total = 0;
    std::size_t hyperplanes_tried = 0;
    std::size_t on_curve = 0;
};

HyperplaneSection hyperplane_section(const GenusTwoCurve<Fp>& c, std::uint64_t seed);

// Affine points of C over F_p with y = 0.
std::size_t count_weierstrass_ff(const GenusTwoCurve<Fp>& c);

}  // namespace weddle::curve
