#include "weddle/curve/curve.hpp"

#include <set>

namespace weddle::curve {

GenusTwoCurve<Fp> curve_ff(const std::vector<long long>& roots, std::int64_t p) {
    if (p < 7 || !algebra::is_prime(static_cast<std::uint64_t>(p)))
        throw UnsupportedDomain("need a prime p >= 7, got " + std::to_string(p));
    std::vector<Fp> r;
    for (auto x : roots) r.push_back(Fp(((x % p) + p) % p, p));
    return GenusTwoCurve<Fp>(r);
}

GenusTwoCurve<Complex> curve_float(const std::vector<long long>& roots) {
    std::vector<Complex> r;
    for (auto x : roots) r.push_back(Complex(static_cast<double>(x)));
    return GenusTwoCurve<Complex>(r);
}

CurvePoint<Fp> random_point(const GenusTwoCurve<Fp>& c, std::mt19937_64& rng) {
    const auto p = c.roots().front().modulus();
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const Fp x(d(rng), p);
        const Fp fx = c.f(x);
        Fp y;
        if (fx.is_zero() || !sqrt_mod(fx, y)) continue;
        return {x, rng() & 1 ? y : -y, 0};
    }
    throw DegenerateConfiguration("no affine non-Weierstrass point found");
}

CurvePoint<Complex> random_point(const GenusTwoCurve<Complex>& c, std::mt19937_64& rng) {
    std::normal_distribution<double> d;
    const Complex x(d(rng), d(rng));
    return {x, std::sqrt(c.f(x)), 0};
}

Fp random_scalar(const Fp& like, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(1, like.modulus() - 1);
    return Fp(d(rng), like.modulus());
}

Complex random_scalar(const Complex&, std::mt19937_64& rng) {
    std::normal_distribution<double> d;
    return {d(rng), d(rng)};
}

SecOctic sec_octic_tangency(const GenusTwoCurve<Fp>& c, const SparsePoly<Fp>& weddle_prime, std::uint64_t seed,
                            std::size_t samples) {
    if (samples < 600) throw UnsupportedDomain("need at least 600 secant samples");
    std::mt19937_64 rng(seed);
    SecOctic s;
    s.monomials = algebra::monomials(5, 8).size();
    for (int attempt = 0; attempt < 2 && s.nullity != 1; ++attempt) {
        std::vector<Vec<Fp>> pts;
        for (std::size_t i = 0; i < samples + 200 * attempt; ++i) pts.push_back(random_secant_sample(c, rng));
        auto fit = algebra::fit_hypersurface(pts, 8, 5);
        s.samples = pts.size();
        s.nullity = fit.size();
        if (s.nullity == 1) s.octic = normalize_form(fit.front());
    }
    if (s.nullity != 1) throw InconsistencyError("octic fit nullity " + std::to_string(s.nullity) + ", expected 1");

    s.fresh_vanish = true;
    for (int i = 0; i < 30; ++i) s.fresh_vanish = s.fresh_vanish && s.octic.evaluate(random_secant_sample(c, rng)).is_zero();

    const auto res = restrict_to_hyperplane(s.octic);
    const auto sq = weddle_prime * weddle_prime;
    if (!res.is_zero()) {
        s.ratio = res.leading().second / sq.leading().second;
        s.restriction_proportional = (res - s.ratio * sq).is_zero();
    }

    s.singular_along_curve = true;
    for (int i = 0; i < 20; ++i) {
        const auto x = tricanonical(random_point(c, rng));
        for (const auto& g : geometry::gradient_at(s.octic, x)) s.singular_along_curve = s.singular_along_curve && g.is_zero();
    }
    return s;
}

HyperplaneSection hyperplane_section(const GenusTwoCurve<Fp>& c, std::uint64_t seed) {
    const auto p = c.roots().front().modulus();
    std::mt19937_64 rng(seed);
    std::size_t tries = 0;
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Vec<Fp>> rows;
        std::set<std::int64_t> xs;
        while (rows.size() < 4) {
            const auto pt = random_point(c, rng);
            if (xs.insert(pt.x.value()).second) rows.push_back(tricanonical(pt));
        }
        const auto ker = geometry::kernel(geometry::rows_of(rows));
        if (ker.size() != 1 || ker[0][4].is_zero()) continue;
        ++tries;
        const auto& h = ker[0];
        // g(x) = (h0 + h1 x + h2 x^2 + h3 x^3)^2 - h4^2 f(x)
        std::vector<Fp> g(7, Fp(0, p));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g[i + j] = g[i + j] + h[i] * h[j];
        std::vector<Fp> f{Fp(1, p)};
        for (const auto& r : c.roots()) {
            std::vector<Fp> n(f.size() + 1, Fp(0, p));
            for (std::size_t k = 0; k < f.size(); ++k) {
                n[k + 1] = n[k + 1] + f[k];
                n[k] = n[k] - r * f[k];
            }
            f = n;
        }
        for (int k = 0; k < 7; ++k) g[k] = g[k] - h[4] * h[4] * f[k];
        // h3 = +-h4: the hyperplane passes through a point at infinity, outside the affine count.
        if (g[6].is_zero()) continue;
        HyperplaneSection s;
        for (int k = 6; k >= 0; --k)
            if (!g[k].is_zero()) {
                s.polynomial_degree = k;
                break;
            }
        for (std::int64_t v = 0; v < p; ++v) {
            const Fp x(v, p);
            Fp gx(0, p), pw(1, p);
            for (int k = 0; k < 7; ++k) {
                gx = gx + g[k] * pw;
                pw = pw * x;
            }
            if (!gx.is_zero()) continue;
            ++s.distinct_points;
            // Multiplicity by repeated division by (t - x).
            auto q = g;
            for (;;) {
                std::vector<Fp> d(q.size() - 1, Fp(0, p));
                Fp carry(0, p);
                for (std::size_t k = q.size(); k-- > 1;) {
                    carry = carry * x + q[k];
                    d[k - 1] = carry;
                }
                if (!(carry * x + q[0]).is_zero()) break;
                ++s.multiplicity_total;
                q = d;
                if (q.size() == 1) break;
            }
            const Fp y = -(h[0] + h[1] * x + h[2] * x * x + h[3] * x * x * x) / h[4];
            const CurvePoint<Fp> pt{x, y, 0};
            if (c.on_curve(pt)) ++s.on_curve;
        }
        // The two residual intersections may be conjugate over F_{p^2}; take another hyperplane.
        if (s.multiplicity_total < static_cast<std::size_t>(s.polynomial_degree)) continue;
        s.hyperplanes_tried = tries;
        return s;
    }
    throw DegenerateConfiguration("no hyperplane section split over F_p in 100 attempts");
}

std::size_t count_weierstrass_ff(const GenusTwoCurve<Fp>& c) {
    const auto p = c.roots().front().modulus();
    std::size_t n = 0;
    for (std::int64_t v = 0; v < p; ++v) n += c.f(Fp(v, p)).is_zero();
    return n;
}

}  // namespace weddle::curve
