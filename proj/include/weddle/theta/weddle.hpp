#pragma once

// The quartic surface in the 4-dimensional invariant space of an odd
// characteristic: fitted from the level-3 theta image, with its six nodes,
// 25 lines, the twisted cubic through the nodes and the 25-line rigidity.

#include <cstdint>
#include <string>
#include <vector>

#include "weddle/geometry/config.hpp"
#include "weddle/geometry/symmetroid.hpp"
#include "weddle/theta/theta.hpp"

namespace weddle::theta {

using algebra::SparsePoly;

// Which of the 16 half-periods mu put X^k(mu) = X(mu + k) in the R-invariant space.
struct NodeCensus {
    Characteristic kappa;
    std::vector<Characteristic> invariant;  // the mu that land there
    std::vector<double> off_space;          // per mu, in all_characteristics order
};

NodeCensus node_census(const Characteristic& kappa, const PeriodMatrix& om);

struct LineCheck {
    std::string label;
    double residual = 0.0;  // max |restricted coefficient| / |W|
};

struct WeddleTheta {
    Characteristic kappa;
    SparsePoly<Complex> quartic{4};       // unit coefficient norm
    std::size_t samples = 0;
    std::size_t fit_nullity = 0;
    double fit_gap = 0.0;                 // retained over discarded singular value
    double fresh_residual = 0.0;          // max |W(x)| / |W|, x sup-normalized
    std::vector<Vec<Complex>> nodes;      // Z-coordinates, sup-normalized
    double node_value = 0.0;              // max |W(node)| / |W|
    double node_gradient = 0.0;           // max |grad W(node)| / |W|
    std::vector<LineCheck> lines;         // 15 joins then 10 plane intersections
    double line_residual = 0.0;
    // Quadrics through the image of the theta divisor {theta[0;0] = 0}.
    std::size_t cubic_samples = 0;
    std::size_t cubic_quadrics = 0;
    double cubic_node_residual = 0.0;     // those quadrics at the nodes
    // Quartics containing all 25 lines.
    std::size_t rigidity_nullity = 0;
    double rigidity_distance = 0.0;       // chordal, coefficient vectors
};

// Throws UnsupportedDomain for even kappa, InconsistencyError if the fit or
// the node census fails.
WeddleTheta weddle_from_theta(const PeriodMatrix& om, const Characteristic& kappa, std::uint64_t seed,
                              std::size_t samples = 80, std::size_t fresh = 30);

// Solves theta[0;0](w; Omega) = 0 for w_2 at random w_1 (Newton on w_2).
C2 theta_divisor_point(std::mt19937_64& rng, const PeriodMatrix& om);

// Quartics in 4 variables vanishing on every line (5 points per line); kernel by SVD.
algebra::FloatFit quartics_through_lines(const std::vector<geometry::Line<Complex>>& lines, double rel_tol = 1e-9);

// Symmetroid of the six theta nodes with the numeric quadric fit.
geometry::Symmetroid<Complex> theta_symmetroid(const std::vector<Vec<Complex>>& nodes);

}  // namespace weddle::theta
