#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "weddle/errors.hpp"

namespace weddle::algebra {

using Rational = mpq_class;
using Complex = std::complex<double>;

// n/d in canonical form (mpq_class does not canonicalize on construction).
inline Rational rational(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

bool is_prime(std::uint64_t n);
std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t p);

// Element of Z/p. A modulus of 0 marks an integer constant not yet bound to a
// field (what generic code gets from F(0), F(1), F(-2)); it adopts the modulus
// of the other operand in mixed arithmetic.
class Fp {
public:
    Fp() = default;
    Fp(long long v) : v_(v) {}
    Fp(long long v, std::int64_t p);

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool bound() const { return p_ != 0; }
    bool is_zero() const { return v_ == 0; }
    Fp bind(std::int64_t p) const { return Fp(v_, p); }

    Fp operator-() const;
    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    friend Fp operator+(const Fp& a, const Fp& b);
    friend Fp operator-(const Fp& a, const Fp& b);
    friend Fp operator*(const Fp& a, const Fp& b);
    friend Fp operator/(const Fp& a, const Fp& b);
    friend bool operator==(const Fp& a, const Fp& b);

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

private:
    std::int64_t p_ = 0;
    std::int64_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

// Square root in F_p (Tonelli-Shanks); returns false when a is a non-residue.
bool sqrt_mod(const Fp& a, Fp& root);

// Quadratic extension F_p[t]/(t^2 - n) with n a fixed non-residue. Unbound
// constants follow the same convention as Fp.
class Fp2 {
public:
    Fp2() = default;
    Fp2(long long v) : a_(v) {}
    Fp2(Fp a, Fp b, std::int64_t nonresidue);
    Fp2(const Fp& a) : a_(a) {}

    const Fp& re() const { return a_; }
    const Fp& im() const { return b_; }
    std::int64_t nonresidue() const { return n_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    Fp2 operator-() const { return Fp2(-a_, -b_, n_); }
    Fp2 inverse() const;

    friend Fp2 operator+(const Fp2& x, const Fp2& y);
    friend Fp2 operator-(const Fp2& x, const Fp2& y);
    friend Fp2 operator*(const Fp2& x, const Fp2& y);
    friend Fp2 operator/(const Fp2& x, const Fp2& y) { return x * y.inverse(); }
    friend bool operator==(const Fp2& x, const Fp2& y);

    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

private:
    Fp a_;
    Fp b_;
    std::int64_t n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp2& a);

// Smallest quadratic non-residue mod p.
std::int64_t least_nonresidue(std::int64_t p);

// u + v*w with w^2 + w + 1 = 0.
template <class F>
class Cyclotomic {
public:
    Cyclotomic() : u_(0), v_(0) {}
    Cyclotomic(long long c) : u_(static_cast<long>(c)), v_(0) {}
    Cyclotomic(const F& u) : u_(u), v_(0) {}
    Cyclotomic(const F& u, const F& v) : u_(u), v_(v) {}

    static Cyclotomic omega() { return Cyclotomic(F(0), F(1)); }
    // w^k for k taken mod 3.
    static Cyclotomic omega_pow(int k) {
        k = ((k % 3) + 3) % 3;
        if (k == 0) return Cyclotomic(F(1), F(0));
        if (k == 1) return Cyclotomic(F(0), F(1));
        return Cyclotomic(F(-1), F(-1));
    }

    const F& u() const { return u_; }
    const F& v() const { return v_; }
    bool is_zero() const { return u_ == F(0) && v_ == F(0); }

    Cyclotomic operator-() const { return Cyclotomic(F(-u_), F(-v_)); }
    Cyclotomic conj() const { return Cyclotomic(F(u_ - v_), F(-v_)); }
    // (u + v w)(u + v w^2) = u^2 - u v + v^2.
    F norm() const { return F(u_ * u_ - u_ * v_ + v_ * v_); }
    Cyclotomic inverse() const {
        F n = norm();
        if (n == F(0)) throw UnsupportedDomain("non-invertible cyclotomic element");
        Cyclotomic c = conj();
        return Cyclotomic(F(c.u_ / n), F(c.v_ / n));
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        return Cyclotomic(F(a.u_ + b.u_), F(a.v_ + b.v_));
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        return Cyclotomic(F(a.u_ - b.u_), F(a.v_ - b.v_));
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        F bd = a.v_ * b.v_;
        return Cyclotomic(F(a.u_ * b.u_ - bd), F(a.u_ * b.v_ + a.v_ * b.u_ - bd));
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

private:
    F u_;
    F v_;
};

template <class F>
std::ostream& operator<<(std::ostream& os, const Cyclotomic<F>& c) {
    return os << '(' << c.u() << ")+(" << c.v() << ")w";
}

using QOmega = Cyclotomic<Rational>;

// Uniform queries used by the generic algorithms.
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline bool is_zero(const Fp2& a) { return a.is_zero(); }
template <class F>
bool is_zero(const Cyclotomic<F>& a) { return a.is_zero(); }
inline bool is_zero(const Complex& a) { return a == Complex(0.0, 0.0); }
inline bool is_zero(long long a) { return a == 0; }

template <class F>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "Q";
    static void require_field(const Rational&) {}
};

template <>
struct ScalarTraits<Fp> {
    static constexpr bool exact = true;
    static constexpr const char* name = "Fp";
    static void require_field(const Fp& a);
};

template <>
struct ScalarTraits<Fp2> {
    static constexpr bool exact = true;
    static constexpr const char* name = "Fp2";
    static void require_field(const Fp2&) {}
};

template <>
struct ScalarTraits<Cyclotomic<Rational>> {
    static constexpr bool exact = true;
    static constexpr const char* name = "Qw";
    static void require_field(const Cyclotomic<Rational>&) {}
};

// F_p(w) is a field only when x^2 + x + 1 is irreducible, i.e. p = 2 mod 3.
template <>
struct ScalarTraits<Cyclotomic<Fp>> {
    static constexpr bool exact = true;
    static constexpr const char* name = "Fpw";
    static void require_field(const Cyclotomic<Fp>& a);
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static constexpr const char* name = "C";
    static void require_field(const Complex&) {}
};

template <>
struct ScalarTraits<long long> {
    static constexpr bool exact = true;
    static constexpr const char* name = "Z";
    static void require_field(const long long&) {
        throw UnsupportedDomain("integers do not form a field");
    }
};

// Cube root of unity of order exactly 3 in F_p, p = 1 mod 3.
Fp primitive_cube_root(std::int64_t p);

}  // namespace weddle::algebra
