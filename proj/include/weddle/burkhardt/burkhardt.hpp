#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "weddle/algebra/fit.hpp"
#include "weddle/algebra/matrix.hpp"
#include "weddle/algebra/poly.hpp"

namespace weddle::burkhardt {

using algebra::Fp;
using algebra::Fp2;
using algebra::Matrix;
using algebra::PolyMatrix;
using algebra::QOmega;
using algebra::Rational;
using algebra::SparsePoly;
using algebra::Vec;

// r_0..r_4 on the representatives 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1), 4=(1,2)
// of s ~ -s; r_s = r_{-s} is implicit.
template <class F>
using RVector = Vec<F>;

constexpr int kReps = 5;

// Slot 0..4 of the representative of {s, -s}, for a sigma index 0..8.
int rep_slot(int sigma);

// Integer-coefficient polynomial to any scalar ring with a long long constructor.
template <class F>
F to_scalar(const Rational& c) {
    if constexpr (std::is_same_v<F, Rational>) {
        return c;
    } else {
        if (c.get_den() != 1) throw UnsupportedDomain("non-integral coefficient");
        return F(static_cast<long long>(c.get_num().get_si()));
    }
}

template <class F>
SparsePoly<F> convert(const SparsePoly<Rational>& p) {
    return p.template map_coefficients<F>([](const Rational& c) { return to_scalar<F>(c); });
}

template <class F>
PolyMatrix<F> convert(const PolyMatrix<Rational>& m) {
    PolyMatrix<F> r(m.rows(), m.cols(), SparsePoly<F>(m(0, 0).nvars()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = convert<F>(m(i, j));
    return r;
}

// f_a = sum over all nine s of r_s X_{s+a} X_{-s+a}; index a = sigma index, 9 variables.
template <class F>
std::vector<SparsePoly<F>> quadrics_f(const RVector<F>& r) {
    if (r.size() != kReps) throw ShapeError("r-vector must have 5 entries");
    std::vector<SparsePoly<F>> out;
    for (int a = 0; a < 9; ++a) {
        SparsePoly<F> f(9);
        const int a1 = a / 3, a2 = a % 3;
        for (int s = 0; s < 9; ++s) {
            const int s1 = s / 3, s2 = s % 3;
            const int p = 3 * ((s1 + a1) % 3) + (s2 + a2) % 3;
            const int q = 3 * ((6 - s1 + a1) % 3) + (6 - s2 + a2) % 3;
            algebra::Exponents e(9, 0);
            ++e[p];
            ++e[q];
            f.add_term(e, r[rep_slot(s)]);
        }
        out.push_back(f);
    }
    return out;
}

// Restricted quadrics Q_0 = f_0, Q_a = f_a + f_{-a} (a a nonzero representative)
// after X_0 = Y_0, X_s = Y_s + Z_s, X_{-s} = Y_s - Z_s, written as M r.
// matrix_plus: Z = 0, variables Y_0..Y_4; symmetric.
// matrix_minus: Y = 0, variables Z_1..Z_4 (indices 0..3); skew.
const PolyMatrix<Rational>& matrix_plus();
const PolyMatrix<Rational>& matrix_minus();

// r_i = (-1)^i Pf(M_-[Z] without row/column i), scaled to coprime integer
// coefficients with r_0 having positive leading coefficient.
const std::vector<SparsePoly<Rational>>& steinerian_minus_symbolic();

// M_-[Z] r(Z) as polynomials (all zero when the kernel identity holds).
std::vector<SparsePoly<Rational>> kernel_residual();

// Kernel vector of M_-[z] from the quartics; nullopt on the base locus.
template <class F>
std::optional<RVector<F>> steinerian_minus(const Vec<F>& z) {
    if (z.size() != 4) throw ShapeError("Z-point must have 4 coordinates");
    RVector<F> r;
    bool any = false;
    for (const auto& q : steinerian_minus_symbolic()) {
        r.push_back(q.template evaluate_as<F>(std::span<const F>(z), to_scalar<F>));
        any = any || !algebra::is_zero(r.back());
    }
    if (!any) return std::nullopt;
    return r;
}

// Independent oracle: Gaussian elimination on the evaluated M_-[z].
template <class F>
std::vector<Vec<F>> kernel_by_elimination(const Vec<F>& z) {
    return algebra::nullspace_naive(algebra::evaluate(convert<F>(matrix_minus()), z));
}

// Scale so the first nonzero coordinate is 1.
template <class F>
Vec<F> projective_normalize(Vec<F> v) {
    for (const auto& x : v)
        if (!algebra::is_zero(x)) {
            const F inv = F(F(1) / x);
            for (auto& y : v) y = F(y * inv);
            return v;
        }
    return v;
}

// ---------------------------------------------------------------------------
// Interpolated invariant quartic.

template <class F>
struct BurkhardtFit {
    SparsePoly<F> quartic{5};
    std::size_t samples = 0;
    std::size_t monomials = 0;
    std::size_t nullity = 0;
};

// Samples St_-(z) at random z (coordinates in [-bound, bound]), fits quartics
// in r_0..r_4. Throws DegenerateConfiguration when no quartic survives or the
// samples cannot determine one, InconsistencyError on nullity >= 2 with enough
// samples.
BurkhardtFit<Rational> derive_burkhardt_rational(std::uint64_t seed, std::size_t samples = 120, long bound = 9);
BurkhardtFit<Fp> derive_burkhardt_fp(std::int64_t p, std::uint64_t seed, std::size_t samples = 120);

PolyMatrix<Rational> hessian(const SparsePoly<Rational>& f);

struct HessianMatch {
    bool found = false;
    Rational scale;                  // Hess(B) = scale * P M_+ P^t
    std::array<int, 5> perm{};       // P(i, perm[i]) = signs[i]
    std::array<int, 5> signs{};
    std::size_t matches = 0;         // signed permutations that work (P and -P both count)
    bool unique_up_to_sign() const { return matches == 2; }
};

HessianMatch hessian_match(const SparsePoly<Rational>& b);

// B(P y) = c B(y) for every generator's V_+ block P (over Q(w)).
struct InvarianceReport {
    std::size_t generators = 0;
    std::size_t invariant = 0;
    std::vector<std::string> failures;
    bool ok() const { return generators > 0 && invariant == generators; }
};

bool projectively_invariant(const SparsePoly<Rational>& b, const Matrix<QOmega>& p);
InvarianceReport upsilon_invariance(const SparsePoly<Rational>& b);

// ---------------------------------------------------------------------------
// St_+.

template <class F>
struct SteinerianPlus {
    std::size_t corank = 0;
    std::optional<RVector<F>> kernel;  // present iff corank == 1
};

template <class F>
SteinerianPlus<F> steinerian_plus(const Vec<F>& y) {
    if (y.size() != 5) throw ShapeError("Y-point must have 5 coordinates");
    auto m = algebra::evaluate(convert<F>(matrix_plus()), y);
    auto ker = algebra::nullspace_naive(m);
    SteinerianPlus<F> out;
    out.corank = ker.size();
    if (ker.size() == 1) out.kernel = projective_normalize(ker.front());
    return out;
}

// Points of {det M_+ = 0} over F_p: roots in F_p of det M_+[y0 + t y1] along
// random pencils until `count` points are found.
std::vector<Vec<Fp>> hessian_points_ff(std::int64_t p, std::uint64_t seed, std::size_t count);

// ---------------------------------------------------------------------------
// Finite field enumeration.

constexpr std::uint64_t kDefaultPointCap = 20'000'000;

struct FiberCensus {
    std::int64_t p = 0;
    int k = 1;
    std::uint64_t points = 0;       // |P^3(F_q)|, q = p^k
    std::uint64_t base_points = 0;
    std::uint64_t images = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;  // fiber size -> number of images
    // Same, split by whether the image point is a singular point of B.
    std::map<std::uint64_t, std::uint64_t> smooth_histogram;
    std::map<std::uint64_t, std::uint64_t> singular_histogram;
    std::uint64_t singular_images = 0;
    std::uint64_t max_fiber = 0;
    std::uint64_t max_smooth_fiber = 0;
    std::uint64_t generic_fiber = 0;  // smooth-image fiber size covering the most source points
};

// Preconditions: p prime, p = 1 mod 3, p <= 200. Throws ResourceError past `cap` points.
FiberCensus count_fibers_ff(std::int64_t p, int k = 1, std::uint64_t cap = kDefaultPointCap);

// All z in P^3(F_p) (first nonzero coordinate 1) with St_-(z) = image projectively.
std::vector<Vec<Fp>> fiber_ff(std::int64_t p, const Vec<Fp>& image, std::uint64_t cap = kDefaultPointCap);

// Points of P^3(F_{p^k}) where all five quartics vanish, k in {1, 2}.
std::uint64_t count_base_locus_ff(std::int64_t p, int k, std::uint64_t cap = kDefaultPointCap);

// ---------------------------------------------------------------------------
// Comparison with externally supplied forms.

// computed(perm[i], perm[j]) = row[i] * col[j] * reference(i, j); col is all 1
// unless column scaling is allowed.
struct MatrixMatch {
    bool found = false;
    std::array<int, 5> perm{};
    std::vector<Rational> row_scale;
    std::vector<Rational> col_scale;
};

MatrixMatch reconcile_matrix(const PolyMatrix<Rational>& computed, const PolyMatrix<Rational>& reference,
                             bool column_scaling);

// Signed permutation of Z and signed permutation of r-indices with one common
// scalar, mapping the computed quartics onto the reference ones.
struct QuarticMatch {
    bool found = false;
    std::array<int, 4> z_perm{};
    std::array<int, 4> z_signs{};
    std::array<int, 5> r_perm{};
    std::array<int, 5> r_signs{};
    Rational scale;
};

QuarticMatch reconcile_quartics(const std::vector<SparsePoly<Rational>>& computed,
                                const std::vector<SparsePoly<Rational>>& reference);

}  // namespace weddle::burkhardt
