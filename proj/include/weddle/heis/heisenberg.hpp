#pragma once

#include <array>
#include <string>
#include <vector>

#include "weddle/algebra/matrix.hpp"
#include "weddle/sympchar/sympchar.hpp"

namespace weddle::heis {

using algebra::Matrix;
using algebra::QOmega;
using sympchar::SymplecticMat;

constexpr int kLevel = 3;

// u = (x, x*) in (Z/3)^{2g}.
using Z3Vec = std::vector<int>;

// (w^t, x, x*) with the law (t,x,x*)(s,y,y*) = (t+s+y*.x, x+y, x*+y*).
struct HeisenbergElement {
    int t = 0;
    std::vector<int> x;
    std::vector<int> xs;

    HeisenbergElement() = default;
    HeisenbergElement(int t_, std::vector<int> x_, std::vector<int> xs_);

    int genus() const { return static_cast<int>(x.size()); }
    Z3Vec u() const;
    static HeisenbergElement from_u(int t, const Z3Vec& u);
    static HeisenbergElement identity(int g);

    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

std::string to_string(const HeisenbergElement& h);

HeisenbergElement h_mul(const HeisenbergElement& a, const HeisenbergElement& b);
HeisenbergElement h_inv(const HeisenbergElement& a);

// All 3^{2g+1} elements, closure of the generators (0,e_i,0), (0,0,e_i*).
std::vector<HeisenbergElement> enumerate_group(int g);

// Packed index of u in [0, 3^{2g}); digit i is u_i.
std::size_t index_of(const Z3Vec& u);
Z3Vec vector_of(std::size_t idx, int g);

// beta(u,v) = y*.x for u = (x,x*), v = (y,y*).
int beta(const Z3Vec& u, const Z3Vec& v);

// E(u,v) = x*.y - y*.x mod 3; lifts satisfy h_v h_u = w^{E(u,v)} h_u h_v.
int weil_pairing(const Z3Vec& u, const Z3Vec& v);

// Exponent c with b*a = w^c a*b.
int commutator_exponent(const HeisenbergElement& a, const HeisenbergElement& b);

// phi(t,u) = (t + f(u), M u).
class HeisAutomorphism {
public:
    HeisAutomorphism() = default;
    HeisAutomorphism(SymplecticMat M, std::vector<int> multiplier);

    const SymplecticMat& symplectic_part() const { return M_; }
    const std::vector<int>& multiplier() const { return f_; }
    int genus() const { return M_.genus(); }
    int f(const Z3Vec& u) const { return f_[index_of(u)]; }

    HeisenbergElement apply(const HeisenbergElement& h) const;
    // f(u+v) - f(u) - f(v) = beta(Mu,Mv) - beta(u,v) for all u, v.
    bool satisfies_cocycle() const;

    friend HeisAutomorphism compose(const HeisAutomorphism& a, const HeisAutomorphism& b);
    friend bool operator==(const HeisAutomorphism& a, const HeisAutomorphism& b) {
        return a.M_ == b.M_ && a.f_ == b.f_;
    }

private:
    SymplecticMat M_;
    std::vector<int> f_;
};

HeisAutomorphism identity_automorphism(int g);

// zeta_a: (t,u) -> (t + E(u,a), u).
HeisAutomorphism zeta(const Z3Vec& a);

// D_{-1}: (t,x,x*) -> (t,-x,-x*).
HeisAutomorphism d_minus_one(int g);

// Multiplier 2*(beta(Mu,Mu) - beta(u,u)), i.e. (1/2)(...) with 1/2 = 2 mod 3.
HeisAutomorphism lift_symplectic(const SymplecticMat& M);

// ---------------------------------------------------------------------------
// Schroedinger representation, g = 2, basis X_s indexed by s = 3*s1 + s2.

constexpr int kDim = 9;

int sigma_index(int s1, int s2);
std::array<int, 2> sigma_of(int idx);
int neg_index(int idx);

// Matrix with exactly one entry w^{exp[r]} per row, in column col[r].
struct MonomialMatrix {
    std::array<int, kDim> col{};
    std::array<int, kDim> exp{};

    friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
    friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

Matrix<QOmega> to_matrix(const MonomialMatrix& m);

// (U f)(s) = w^{t + x*.s} f(s + x): U[s][s+x] = w^{t + x*.s}.
MonomialMatrix schrodinger_monomial(const HeisenbergElement& h);
Matrix<QOmega> schrodinger(const HeisenbergElement& h);

// X_s -> X_{-s}.
Matrix<QOmega> involution_j();

// Bases of the j-eigenspaces: V+ spanned by e_0 and e_s + e_{-s} (5 vectors),
// V- by e_s - e_{-s} (4 vectors), s running over the nonzero representatives.
std::vector<algebra::Vec<QOmega>> eigenbasis_plus();
std::vector<algebra::Vec<QOmega>> eigenbasis_minus();

// Representatives of s ~ -s: 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1), 4=(1,2).
const std::array<int, 5>& orbit_representatives();

struct IntertwinerResult {
    Matrix<QOmega> T;
    std::size_t solution_dim = 0;
};

// Solution space of T U(h) = U(lift(M) h) T over the generators (0,e_i);
// returns the normalized solution (first nonzero entry in row-major order is
// 1). Throws InconsistencyError when the space is not one-dimensional.
IntertwinerResult intertwiner(const SymplecticMat& M);

// Same constraint system for an arbitrary automorphism.
IntertwinerResult intertwiner(const HeisAutomorphism& phi);

// Scale so the first nonzero entry in row-major order is 1.
Matrix<QOmega> normalize_projective(const Matrix<QOmega>& m);
bool projectively_equal(const Matrix<QOmega>& a, const Matrix<QOmega>& b);

// Restrictions of T to V+ (5x5, coefficients in the basis of eigenbasis_plus)
// and V- (4x4). Throw InvariantViolation if T does not preserve the space.
Matrix<QOmega> upsilon_plus(const Matrix<QOmega>& T);
Matrix<QOmega> upsilon_minus(const Matrix<QOmega>& T);
bool preserves_eigenspaces(const Matrix<QOmega>& T);

// ---------------------------------------------------------------------------
// Verification summary.

struct HeisenbergReport {
    bool group_law = false;       // U multiplicative on all pairs; center acts by scalars
    bool j_intertwining = false;  // j U(h) j = U(D_{-1} h)
    bool eigensplit = false;      // dims (5,4)
    bool schur_dims = false;      // every generator: solution space dim 1
    bool block_split = false;     // every intertwiner preserves V+ and V-
    bool projectivity = false;    // T_{MN} ~ T_M T_N on sampled pairs
    bool sequence = false;        // trivial-symplectic automorphisms are the zeta_a
    std::size_t pairs_checked = 0;
    std::vector<std::size_t> generator_solution_dims;
    std::vector<std::string> counterexamples;

    bool ok() const {
        return group_law && j_intertwining && eigensplit && schur_dims && block_split && projectivity && sequence;
    }
};

HeisenbergReport verify_heisenberg(unsigned long long seed, std::size_t projective_pairs = 20);

}  // namespace weddle::heis
