#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "weddle/algebra/fit.hpp"
#include "weddle/algebra/matrix.hpp"
#include "weddle/sympchar/sympchar.hpp"

namespace weddle::theta {

using algebra::Complex;
using algebra::Matrix;
using algebra::Vec;
using sympchar::Characteristic;

using C2 = std::array<Complex, 2>;
using R2 = std::array<double, 2>;

constexpr double kDefaultTol = 1e-13;

class PeriodMatrix {
public:
    // Throws UnsupportedDomain unless symmetric with positive definite imaginary part.
    PeriodMatrix(Complex o11, Complex o12, Complex o21, Complex o22);

    Complex operator()(int i, int j) const { return m_[i][j]; }
    // Smallest eigenvalue of Im(Omega).
    double lambda_min() const { return lambda_min_; }
    PeriodMatrix scaled(double s) const;
    C2 apply(const R2& v) const;  // Omega * v
    std::string to_string() const;

private:
    std::array<std::array<Complex, 2>, 2> m_;
    double lambda_min_ = 0.0;
};

// [[1+i, .3+.1i], [.3+.1i, 1.5+1.2i]]: generic enough for the surface checks.
PeriodMatrix default_period_matrix();

// "re11 im11 re12 im12 re21 im21 re22 im22".
PeriodMatrix parse_period_matrix(const std::string& text);

struct ThetaValue {
    Complex value;
    double bound = 0.0;  // |value - series| <= bound
    int radius = 0;      // box half-width used
};

// sum over r in Z^2 of e(1/2 (r+alpha)^t Omega (r+alpha) + (r+alpha)^t (z+beta)),
// e(x) = exp(2 pi i x); the box is centered on the Gaussian peak and sized so the
// tail bound is below tol.
ThetaValue theta_real(const R2& alpha, const R2& beta, const C2& z, const PeriodMatrix& om, double tol = kDefaultTol);

// Half-integer characteristic: alpha = a/2, beta = b/2.
ThetaValue theta(const Characteristic& m, const C2& z, const PeriodMatrix& om, double tol = kDefaultTol);

// Omega a/2 + b/2.
C2 half_period(const Characteristic& m, const PeriodMatrix& om);

// theta(z + Omega n + p) / theta(z) for integer n, p.
Complex quasi_period_factor(const R2& alpha, const R2& beta, const C2& z, const std::array<int, 2>& n,
                            const std::array<int, 2>& p, const PeriodMatrix& om);

// z = Omega u + v with u, v uniform in [-1/2, 1/2]^2.
C2 sample_point(std::mt19937_64& rng, const PeriodMatrix& om);

// ---------------------------------------------------------------------------
// Level 3.

// X_s(z) = theta[s/3; 0](3z; 3 Omega), s = (s1, s2) at index 3 s1 + s2.
Vec<Complex> level3_coords(const C2& z, const PeriodMatrix& om, double tol = kDefaultTol);

// Largest chordal residual of the equivariance contract over random z:
// X(-z) = j X(z), X(z + e_k/3) ~ U(0,0,e_k) X(z), X(z + Omega e_k/3) ~ U(0,e_k,0) X(z).
struct ContractReport {
    double symmetry = 0.0;
    double translation_real = 0.0;
    double translation_omega = 0.0;
    bool ok(double tol) const { return symmetry < tol && translation_real < tol && translation_omega < tol; }
};

ContractReport validate_level3(const PeriodMatrix& om, std::uint64_t seed, int samples = 10);

// Y_0 = v_0, Y_i = (v_s + v_{-s})/2 and Z_i = (v_s - v_{-s})/2 over the orbit representatives.
Vec<Complex> plus_coords(const Vec<Complex>& v);
Vec<Complex> minus_coords(const Vec<Complex>& v);

// Complex 9x9 matrix of a Schroedinger operator or of j.
Matrix<Complex> to_complex(const Matrix<algebra::QOmega>& m);

// ---------------------------------------------------------------------------
// z -> -z on X^k(z) = X(z + half_period(k)).

struct Involution {
    Characteristic kappa;
    int epsilon = 1;                 // R = epsilon * j
    Matrix<Complex> R;
    std::size_t dim_invariant = 0;   // eigenvalue +1 of R
    std::size_t dim_anti = 0;
    double square_residual = 0.0;    // |R^2 - Id|
    double equivariance = 0.0;       // max chordal |X^k(-z) - R X^k(z)| over samples
    // Which j-eigenspace is the R-invariant one ("V+" or "V-").
    std::string invariant_j_label;
};

// epsilon comes from the lattice factor X(w + Omega a + b) = c(w) X(w):
// X^k(-z) = (-1)^{a.b} e(3 a.z) j X^k(z).
Involution involution_matrix(const Characteristic& kappa, const PeriodMatrix& om, std::uint64_t seed = 1);

struct ThetaNull {
    Characteristic kappa;
    int parity = 1;
    Vec<Complex> point;     // X^k(0), sup-normalized
    Vec<Complex> coords;    // Y (even) or Z (odd) coordinates
    double off_space = 0.0; // component outside the R-invariant space relative to |point|
    double det_plus = 0.0;  // even only: |det M+[Y]| / |M+[Y]|^5
};

ThetaNull theta_null(const Characteristic& kappa, const PeriodMatrix& om, double tol = kDefaultTol);

struct DimensionRow {
    Characteristic kappa;
    int parity = 1;
    std::size_t dim_plus = 0;
    std::size_t dim_minus = 0;
};

// Level 3: all 16 characteristics. Level 2: whether theta[a/2;0](2z;2 Omega) and
// their 10 products are even on the sampled points (h^0_- = 0).
struct DimensionTable {
    std::vector<DimensionRow> level3;
    bool level2_all_even = false;
    double level2_residual = 0.0;
};

DimensionTable eigenspace_table(const PeriodMatrix& om, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Quadrics through the embedded surface.

struct SurfaceQuadrics {
    Vec<Complex> r;                      // r_0..r_4, sup-normalized
    std::size_t quadric_nullity = 0;     // all quadrics in X through the samples
    std::vector<double> singular_values; // of the 45-column matrix
    double r_gap = 0.0;                  // sigma_4 / sigma_5 of the 5-column system
    double f0_residual = 0.0;            // on fresh samples, relative
    double fa_residual = 0.0;            // max over all nine f_a
};

SurfaceQuadrics surface_quadrics(const PeriodMatrix& om, std::uint64_t seed, std::size_t samples = 60,
                                 std::size_t fresh = 30);

// Numeric kernel of M+[y] (smallest singular vector) and its singular-value ratio.
struct NumericKernel {
    Vec<Complex> vector;
    double smallest_ratio = 0.0;  // sigma_min / sigma_max
};

NumericKernel plus_kernel(const Vec<Complex>& y);

// St_-(z) with complex z (quartic formulas).
Vec<Complex> steinerian_minus_numeric(const Vec<Complex>& z);

}  // namespace weddle::theta
