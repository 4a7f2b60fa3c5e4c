#include "weddle/theta/theta.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "weddle/burkhardt/burkhardt.hpp"
#include "weddle/heis/heisenberg.hpp"

namespace weddle::theta {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// e(x) = exp(2 pi i x)
Complex e2pi(Complex x) { return std::exp(2.0 * kPi * kI * x); }

struct Im2 {
    double y11, y12, y22;
    double det() const { return y11 * y22 - y12 * y12; }
};

Im2 imag_part(const PeriodMatrix& om) { return {om(0, 0).imag(), om(0, 1).imag(), om(1, 1).imag()}; }

// Tail of sum over shells t = rho, rho+1, ... of 16 (t+1) exp(-pi lambda t^2).
double shell_tail(double lambda, double rho) {
    double s = 0.0;
    for (double t = rho;; t += 1.0) {
        double term = 16.0 * (t + 1.0) * std::exp(-kPi * lambda * t * t);
        s += term;
        if (term < 1e-30 * s || term == 0.0) break;
    }
    return s;
}

Eigen::MatrixXcd to_eigen(const Matrix<Complex>& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

double max_abs_diff(const Vec<Complex>& a, const Vec<Complex>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

C2 add(const C2& a, const C2& b) { return {a[0] + b[0], a[1] + b[1]}; }
C2 neg(const C2& a) { return {-a[0], -a[1]}; }

std::size_t eigen_multiplicity(const Matrix<Complex>& r, double lambda) {
    Matrix<Complex> m = r;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
    return algebra::nullspace_svd(m, 1e-9).basis.size();
}

}  // namespace

PeriodMatrix::PeriodMatrix(Complex o11, Complex o12, Complex o21, Complex o22) {
    m_ = {{{o11, o12}, {o21, o22}}};
    if (std::abs(o12 - o21) > 1e-12 * (1.0 + std::abs(o12)))
        throw UnsupportedDomain("period matrix is not symmetric");
    const Im2 y = imag_part(*this);
    // Leading minors of Im(Omega).
    if (!(y.y11 > 0.0) || !(y.det() > 0.0))
        throw UnsupportedDomain("imaginary part of the period matrix is not positive definite");
    const double tr = y.y11 + y.y22;
    lambda_min_ = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * y.det())));
}

PeriodMatrix PeriodMatrix::scaled(double s) const {
    return PeriodMatrix(s * m_[0][0], s * m_[0][1], s * m_[1][0], s * m_[1][1]);
}

C2 PeriodMatrix::apply(const R2& v) const {
    return {m_[0][0] * v[0] + m_[0][1] * v[1], m_[1][0] * v[0] + m_[1][1] * v[1]};
}

std::string PeriodMatrix::to_string() const {
    std::ostringstream os;
    os.precision(17);
    for (const auto& row : m_)
        for (const auto& x : row) os << x.real() << ' ' << x.imag() << ' ';
    auto s = os.str();
    s.pop_back();
    return s;
}

PeriodMatrix default_period_matrix() {
    return PeriodMatrix({1.0, 1.0}, {0.3, 0.1}, {0.3, 0.1}, {1.5, 1.2});
}

PeriodMatrix parse_period_matrix(const std::string& text) {
    std::istringstream is(text);
    std::array<double, 8> v;
    for (auto& x : v)
        if (!(is >> x)) throw ParseError("period matrix needs 8 real numbers");
    std::string extra;
    if (is >> extra) throw ParseError("trailing data after period matrix: " + extra);
    return PeriodMatrix({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]});
}

ThetaValue theta_real(const R2& alpha, const R2& beta, const C2& z, const PeriodMatrix& om, double tol) {
    if (!(tol > 0.0)) throw UnsupportedDomain("tolerance must be positive");
    const Im2 y = imag_part(om);
    const double d = y.det();
    const double yz0 = z[0].imag(), yz1 = z[1].imag();
    // Y^{-1} Im z
    const double w0 = (y.y22 * yz0 - y.y12 * yz1) / d;
    const double w1 = (-y.y12 * yz0 + y.y11 * yz1) / d;
    const double envelope = std::exp(kPi * (yz0 * w0 + yz1 * w1));
    const std::array<long, 2> c0{std::lround(-alpha[0] - w0), std::lround(-alpha[1] - w1)};
    const double lambda = om.lambda_min();

    int R = 1;
    double bound = envelope * shell_tail(lambda, R + 0.5);
    while (bound >= tol) {
        if (++R > 200) throw ResourceError("theta series needs more than 200 terms per direction");
        bound = envelope * shell_tail(lambda, R + 0.5);
    }

    const Complex zb0 = z[0] + beta[0], zb1 = z[1] + beta[1];
    Complex sum(0.0, 0.0);
    for (long i = c0[0] - R; i <= c0[0] + R; ++i)
        for (long j = c0[1] - R; j <= c0[1] + R; ++j) {
            const double v0 = static_cast<double>(i) + alpha[0];
            const double v1 = static_cast<double>(j) + alpha[1];
            const Complex quad = om(0, 0) * v0 * v0 + 2.0 * om(0, 1) * v0 * v1 + om(1, 1) * v1 * v1;
            sum += std::exp(kPi * kI * quad + 2.0 * kPi * kI * (v0 * zb0 + v1 * zb1));
        }
    return {sum, bound, R};
}

ThetaValue theta(const Characteristic& m, const C2& z, const PeriodMatrix& om, double tol) {
    if (m.genus() != 2) throw ShapeError("theta is implemented for genus 2");
    return theta_real({0.5 * m.a[0], 0.5 * m.a[1]}, {0.5 * m.b[0], 0.5 * m.b[1]}, z, om, tol);
}

C2 half_period(const Characteristic& m, const PeriodMatrix& om) {
    if (m.genus() != 2) throw ShapeError("half periods are implemented for genus 2");
    auto w = om.apply({0.5 * m.a[0], 0.5 * m.a[1]});
    return {w[0] + 0.5 * m.b[0], w[1] + 0.5 * m.b[1]};
}

Complex quasi_period_factor(const R2& alpha, const R2& beta, const C2& z, const std::array<int, 2>& n,
                            const std::array<int, 2>& p, const PeriodMatrix& om) {
    const double n0 = n[0], n1 = n[1];
    const Complex nOn = om(0, 0) * n0 * n0 + 2.0 * om(0, 1) * n0 * n1 + om(1, 1) * n1 * n1;
    const Complex shift = n0 * (z[0] + static_cast<double>(p[0]) + beta[0]) +
                          n1 * (z[1] + static_cast<double>(p[1]) + beta[1]);
    return e2pi(alpha[0] * p[0] + alpha[1] * p[1]) * e2pi(-0.5 * nOn - shift);
}

C2 sample_point(std::mt19937_64& rng, const PeriodMatrix& om) {
    std::uniform_real_distribution<double> d(-0.5, 0.5);
    const R2 u{d(rng), d(rng)};
    const double v0 = d(rng), v1 = d(rng);
    auto w = om.apply(u);
    return {w[0] + v0, w[1] + v1};
}

Vec<Complex> level3_coords(const C2& z, const PeriodMatrix& om, double tol) {
    const auto om3 = om.scaled(3.0);
    const C2 z3{3.0 * z[0], 3.0 * z[1]};
    Vec<Complex> x(heis::kDim);
    for (int s = 0; s < heis::kDim; ++s) {
        const auto sg = heis::sigma_of(s);
        x[s] = theta_real({sg[0] / 3.0, sg[1] / 3.0}, {0.0, 0.0}, z3, om3, tol).value;
    }
    return x;
}

Matrix<Complex> to_complex(const Matrix<algebra::QOmega>& m) {
    const Complex w = std::exp(2.0 * kPi * kI / 3.0);
    Matrix<Complex> r(m.rows(), m.cols(), Complex(0.0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).u().get_d() + m(i, j).v().get_d() * w;
    return r;
}

ContractReport validate_level3(const PeriodMatrix& om, std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    const auto J = to_complex(heis::involution_j());
    std::array<Matrix<Complex>, 2> Ureal, Uomega;
    for (int k = 0; k < 2; ++k) {
        std::vector<int> e{0, 0};
        e[k] = 1;
        Ureal[k] = to_complex(heis::schrodinger(heis::HeisenbergElement(0, {0, 0}, e)));
        Uomega[k] = to_complex(heis::schrodinger(heis::HeisenbergElement(0, e, {0, 0})));
    }
    ContractReport rep;
    for (int t = 0; t < samples; ++t) {
        const C2 z = sample_point(rng, om);
        const auto x = level3_coords(z, om);
        rep.symmetry = std::max(rep.symmetry, algebra::chordal_distance(level3_coords(neg(z), om), J.apply(x)));
        for (int k = 0; k < 2; ++k) {
            C2 dz{0.0, 0.0};
            dz[k] = 1.0 / 3.0;
            rep.translation_real = std::max(
                rep.translation_real, algebra::chordal_distance(level3_coords(add(z, dz), om), Ureal[k].apply(x)));
            R2 u{0.0, 0.0};
            u[k] = 1.0 / 3.0;
            rep.translation_omega =
                std::max(rep.translation_omega,
                         algebra::chordal_distance(level3_coords(add(z, om.apply(u)), om), Uomega[k].apply(x)));
        }
    }
    return rep;
}

Vec<Complex> plus_coords(const Vec<Complex>& v) {
    if (v.size() != heis::kDim) throw ShapeError("expected 9 coordinates");
    Vec<Complex> y;
    for (int s : heis::orbit_representatives())
        y.push_back(s == 0 ? v[0] : 0.5 * (v[s] + v[heis::neg_index(s)]));
    return y;
}

Vec<Complex> minus_coords(const Vec<Complex>& v) {
    if (v.size() != heis::kDim) throw ShapeError("expected 9 coordinates");
    Vec<Complex> z;
    for (int s : heis::orbit_representatives())
        if (s != 0) z.push_back(0.5 * (v[s] - v[heis::neg_index(s)]));
    return z;
}

Involution involution_matrix(const Characteristic& kappa, const PeriodMatrix& om, std::uint64_t seed) {
    if (kappa.genus() != 2) throw ShapeError("expected a genus-2 characteristic");
    Involution inv;
    inv.kappa = kappa;
    // c = (-1)^{3 a.b} from e(-3/2 a^t Omega a) e(3 a^t (z + Omega a/2 + b/2)) at z = 0.
    const int ab = kappa.a[0] * kappa.b[0] + kappa.a[1] * kappa.b[1];
    inv.epsilon = (3 * ab) % 2 ? -1 : 1;
    const auto J = to_complex(heis::involution_j());
    inv.R = Complex(inv.epsilon) * J;

    auto sq = inv.R * inv.R;
    for (std::size_t i = 0; i < sq.rows(); ++i)
        for (std::size_t j = 0; j < sq.cols(); ++j)
            inv.square_residual = std::max(inv.square_residual, std::abs(sq(i, j) - (i == j ? 1.0 : 0.0)));
    inv.dim_invariant = eigen_multiplicity(inv.R, 1.0);
    inv.dim_anti = eigen_multiplicity(inv.R, -1.0);
    if (inv.dim_invariant + inv.dim_anti != heis::kDim)
        throw InvariantViolation("involution does not split the level-3 space");
    inv.invariant_j_label = inv.epsilon == 1 ? "V+" : "V-";

    std::mt19937_64 rng(seed);
    const C2 hp = half_period(kappa, om);
    for (int t = 0; t < 5; ++t) {
        const C2 z = sample_point(rng, om);
        auto xp = level3_coords(add(z, hp), om);
        auto xm = level3_coords(add(neg(z), hp), om);
        inv.equivariance = std::max(inv.equivariance, algebra::chordal_distance(xm, inv.R.apply(xp)));
    }
    return inv;
}

ThetaNull theta_null(const Characteristic& kappa, const PeriodMatrix& om, double tol) {
    ThetaNull tn;
    tn.kappa = kappa;
    tn.parity = sympchar::parity(kappa);
    tn.point = algebra::normalize_sup(level3_coords(half_period(kappa, om), om, tol));
    const int eps = tn.parity;
    const auto J = to_complex(heis::involution_j());
    const auto jv = J.apply(tn.point);
    Vec<Complex> off(tn.point.size());
    for (std::size_t i = 0; i < off.size(); ++i) off[i] = 0.5 * (tn.point[i] - Complex(eps) * jv[i]);
    tn.off_space = algebra::sup_norm(off) / algebra::sup_norm(tn.point);
    if (eps == 1) {
        tn.coords = plus_coords(tn.point);
        const auto m = algebra::evaluate(burkhardt::convert<Complex>(burkhardt::matrix_plus()), tn.coords);
        const auto e = to_eigen(m);
        tn.det_plus = std::abs(e.determinant()) / std::pow(e.norm(), 5);
    } else {
        tn.coords = minus_coords(tn.point);
    }
    return tn;
}

DimensionTable eigenspace_table(const PeriodMatrix& om, std::uint64_t seed) {
    DimensionTable t;
    for (const auto& k : sympchar::all_characteristics(2)) {
        auto inv = involution_matrix(k, om, seed);
        t.level3.push_back({k, sympchar::parity(k), inv.dim_invariant, inv.dim_anti});
    }
    // Level 2: theta[a/2; 0](2z; 2 Omega) for a in {0,1}^2 and their products.
    const auto om2 = om.scaled(2.0);
    std::mt19937_64 rng(seed);
    auto level2 = [&](const C2& z) {
        Vec<Complex> v;
        for (int a = 0; a < 4; ++a)
            v.push_back(theta_real({0.5 * (a >> 1), 0.5 * (a & 1)}, {0.0, 0.0}, {2.0 * z[0], 2.0 * z[1]}, om2).value);
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) v.push_back(v[a] * v[b]);
        return v;
    };
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
        const C2 z = sample_point(rng, om);
        auto p = level2(z), m = level2(neg(z));
        worst = std::max(worst, max_abs_diff(p, m) / algebra::sup_norm(p));
    }
    t.level2_residual = worst;
    t.level2_all_even = worst < 1e-9;
    return t;
}

SurfaceQuadrics surface_quadrics(const PeriodMatrix& om, std::uint64_t seed, std::size_t samples,
                                 std::size_t fresh) {
    std::mt19937_64 rng(seed);
    std::vector<Vec<Complex>> pts;
    for (std::size_t i = 0; i < samples; ++i) pts.push_back(algebra::normalize_sup(level3_coords(sample_point(rng, om), om)));

    SurfaceQuadrics out;
    auto fit = algebra::fit_hypersurface_float(pts, 2, 1e-9, heis::kDim);
    out.quadric_nullity = fit.basis.size();
    out.singular_values = fit.singular_values;
    if (out.quadric_nullity != 9)
        throw InconsistencyError("quadrics through the level-3 surface: nullity " +
                                 std::to_string(out.quadric_nullity) + ", expected 9");

    const auto& reps = heis::orbit_representatives();
    Matrix<Complex> a(pts.size(), 5, Complex(0.0));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (int k = 0; k < 5; ++k) {
            const int s = reps[k];
            a(i, k) = (s == 0 ? 1.0 : 2.0) * pts[i][s] * pts[i][heis::neg_index(s)];
        }
    auto ns = algebra::nullspace_svd(a, 0.0);
    const auto& sv = ns.singular_values;
    out.r_gap = sv[4] > 0.0 ? sv[3] / sv[4] : INFINITY;
    // Smallest singular vector: the threshold 0 keeps only exact zeros, so take V's last column.
    {
        Eigen::MatrixXcd e = to_eigen(a);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeFullV);
        Vec<Complex> r(5);
        for (int k = 0; k < 5; ++k) r[k] = svd.matrixV()(k, 4);
        out.r = algebra::normalize_sup(r);
    }

    for (std::size_t i = 0; i < fresh; ++i) {
        const auto x = algebra::normalize_sup(level3_coords(sample_point(rng, om), om));
        for (int a9 = 0; a9 < heis::kDim; ++a9) {
            const auto as = heis::sigma_of(a9);
            Complex f(0.0);
            for (int s = 0; s < heis::kDim; ++s) {
                const auto ss = heis::sigma_of(s);
                const int p = heis::sigma_index(ss[0] + as[0], ss[1] + as[1]);
                const int q = heis::sigma_index(-ss[0] + as[0], -ss[1] + as[1]);
                f += out.r[burkhardt::rep_slot(s)] * x[p] * x[q];
            }
            if (a9 == 0) out.f0_residual = std::max(out.f0_residual, std::abs(f));
            out.fa_residual = std::max(out.fa_residual, std::abs(f));
        }
    }
    return out;
}

NumericKernel plus_kernel(const Vec<Complex>& y) {
    const auto m = algebra::evaluate(burkhardt::convert<Complex>(burkhardt::matrix_plus()), y);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
    NumericKernel k;
    const auto& s = svd.singularValues();
    k.smallest_ratio = s(0) > 0.0 ? s(4) / s(0) : 0.0;
    Vec<Complex> v(5);
    for (int i = 0; i < 5; ++i) v[i] = svd.matrixV()(i, 4);
    k.vector = algebra::normalize_sup(v);
    return k;
}

Vec<Complex> steinerian_minus_numeric(const Vec<Complex>& z) {
    auto r = burkhardt::steinerian_minus<Complex>(z);
    if (!r) return Vec<Complex>(5, Complex(0.0));
    return *r;
}

}  // namespace weddle::theta
