#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "weddle/errors.hpp"

namespace weddle::sympchar {

// Half-integer characteristic (a/2, b/2) stored in doubled coordinates.
struct Characteristic {
    std::vector<int> a;
    std::vector<int> b;

    Characteristic() = default;
    Characteristic(std::vector<int> a_, std::vector<int> b_);

    int genus() const { return static_cast<int>(a.size()); }
    // Bit i is a_i, bit g+i is b_i.
    unsigned index() const;
    static Characteristic from_index(int g, unsigned idx);

    friend bool operator==(const Characteristic&, const Characteristic&) = default;
    friend auto operator<=>(const Characteristic&, const Characteristic&) = default;
};

std::string to_string(const Characteristic& m);

// (-1)^{a.b}
int parity(const Characteristic& m);

std::vector<Characteristic> all_characteristics(int g);

// 2g x 2g matrix over Z/n, row-major, acting on column vectors. Blocks are
// M = (A B; C D) and the form is J = (0 I; -I 0).
class SymplecticMat {
public:
    SymplecticMat() = default;
    SymplecticMat(int g, int n, std::vector<int> entries);

    static SymplecticMat identity(int g, int n);
    // t_v(x) = x + k <x,v> v with <x,y> = x^T J y.
    static SymplecticMat transvection(const std::vector<int>& v, int n, int k = 1);

    int genus() const { return g_; }
    int modulus() const { return n_; }
    int dim() const { return 2 * g_; }
    int operator()(int i, int j) const { return e_[i * 2 * g_ + j]; }
    const std::vector<int>& entries() const { return e_; }

    bool is_symplectic() const;
    SymplecticMat reduce(int m) const;
    SymplecticMat inverse() const;
    std::vector<int> apply(const std::vector<int>& x) const;
    std::uint64_t key() const;

    friend SymplecticMat operator*(const SymplecticMat& x, const SymplecticMat& y);
    friend bool operator==(const SymplecticMat& x, const SymplecticMat& y) {
        return x.g_ == y.g_ && x.n_ == y.n_ && x.e_ == y.e_;
    }

private:
    int g_ = 0;
    int n_ = 2;
    std::vector<int> e_;
};

std::string to_string(const SymplecticMat& m);

// Integer symplectic matrix (element of Sp(2g, Z)).
class IntSymplecticMat {
public:
    IntSymplecticMat() = default;
    IntSymplecticMat(int g, std::vector<long long> entries);

    static IntSymplecticMat identity(int g);
    // x -> x + k <x,v> v over Z.
    static IntSymplecticMat transvection(const std::vector<long long>& v, long long k);

    int genus() const { return g_; }
    long long operator()(int i, int j) const { return e_[i * 2 * g_ + j]; }
    const std::vector<long long>& entries() const { return e_; }
    bool is_symplectic() const;
    SymplecticMat reduce(int n) const;

    friend IntSymplecticMat operator*(const IntSymplecticMat& x, const IntSymplecticMat& y);

private:
    int g_ = 0;
    std::vector<long long> e_;
};

// Whitespace-separated integer grid; size must be a square of even side.
IntSymplecticMat parse_int_matrix(const std::string& text);

// m' = (D -C; -B A)(a; b) + (diag(C D^t); diag(A B^t)) mod 2. M is reduced
// mod 2 first; throws InvariantViolation when M is not symplectic.
Characteristic act_characteristic(const SymplecticMat& M, const Characteristic& m);
Characteristic act_characteristic(const IntSymplecticMat& M, const Characteristic& m);

// kappa: F_2^{2g} -> {+1,-1}; the vector x is packed with bit i = x'_i and
// bit g+i = x''_i.
struct QuadFormF2 {
    int g = 0;
    std::vector<int> values;

    int operator()(unsigned x) const { return values[x]; }
    friend bool operator==(const QuadFormF2&, const QuadFormF2&) = default;
    friend auto operator<=>(const QuadFormF2&, const QuadFormF2&) = default;
};

// (-1)^{<x,y>} for the standard symplectic pairing mod 2.
int pairing_sign(int g, unsigned x, unsigned y);

// kappa(x+y) kappa(x) kappa(y) = <x,y> for all x, y.
bool is_quadratic_form(const QuadFormF2& k);

// Arf invariant as a sign: sum of values / 2^g.
int epsilon(const QuadFormF2& k);

// The form q_m(x) = x'.x'' + a.x'' + b.x' attached to m; epsilon equals parity.
QuadFormF2 quad_form(const Characteristic& m);

// (x.kappa)(y) = <x,y> kappa(y)
QuadFormF2 torsor_action(unsigned x, const QuadFormF2& k);

std::vector<QuadFormF2> all_quadratic_forms(int g);

// Sp(2g, Z/n) materialized by breadth-first search from transvections.
struct FiniteSymplecticGroup {
    int g = 0;
    int n = 0;
    std::vector<SymplecticMat> generators;
    std::vector<SymplecticMat> elements;
    std::unordered_map<std::uint64_t, std::size_t> lookup;

    bool contains(const SymplecticMat& m) const { return lookup.count(m.key()) != 0; }
};

// Transvections t_v for every nonzero v with entries in {0,1}.
std::vector<SymplecticMat> standard_generators(int g, int n);

constexpr std::uint64_t kEnumerationBound = 1'000'000;

// Cached; g in {1,2} and n in {2,3}.
const FiniteSymplecticGroup& symplectic_group(int g, int n);

// Closed form n^{g(2g+1)} prod_{p|n} prod_{k=1..g} (1 - p^{-2k}).
mpz_class symplectic_order_formula(int g, long long n);

// BFS-enumerated for n in {2,3} (checked against the formula), formula
// otherwise. Throws ResourceError outside 1 <= g <= 16, 2 <= n <= 10^9 or
// when enumeration would exceed kEnumerationBound elements.
mpz_class group_order(int g, long long n);

// [Gamma_g : Gamma_g(n)].
mpq_class gamma_index(int g, long long n);

std::vector<std::vector<Characteristic>> characteristic_orbits(int g = 2);

struct StabilizerReport {
    Characteristic m;
    int parity = 1;
    std::size_t order = 0;
    std::vector<std::size_t> odd_orbit_sizes;  // sorted ascending
    std::vector<SymplecticMat> elements;       // mod 2
};

StabilizerReport stabilizer(const Characteristic& m);

enum class GammaLabel { Full, Level2, Level3, Level6, Level3_6, Level3Minus };
std::string to_string(GammaLabel l);

Characteristic default_odd_base();

std::set<GammaLabel> classify_gamma(const IntSymplecticMat& G, const Characteristic& odd_base = default_odd_base());

}  // namespace weddle::sympchar
