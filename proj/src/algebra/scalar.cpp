#include "weddle/algebra/scalar.hpp"

#include <sstream>

namespace weddle::algebra {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t p) {
    __int128 result = 1;
    __int128 b = ((base % p) + p) % p;
    while (exp > 0) {
        if (exp & 1) result = (result * b) % p;
        b = (b * b) % p;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t common_modulus(const Fp& a, const Fp& b) {
    if (a.modulus() == 0) return b.modulus();
    if (b.modulus() == 0 || a.modulus() == b.modulus()) return a.modulus();
    std::ostringstream msg;
    msg << "mixed moduli " << a.modulus() << " and " << b.modulus();
    throw UnsupportedDomain(msg.str());
}

}  // namespace

Fp::Fp(long long v, std::int64_t p) : p_(p) {
    if (p < 2 || p > (std::int64_t{1} << 31)) throw UnsupportedDomain("modulus out of range");
    v_ = reduce(v, p);
}

Fp Fp::operator-() const {
    if (p_ == 0) return Fp(-v_);
    return Fp(v_ == 0 ? 0 : p_ - v_, p_);
}

Fp Fp::inverse() const {
    if (v_ == 0) throw UnsupportedDomain("division by zero in F_p");
    if (p_ == 0) {
        if (v_ == 1 || v_ == -1) return *this;
        throw UnsupportedDomain("inverse of unbound integer constant");
    }
    // Extended Euclid.
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
        std::int64_t q = a / m;
        std::int64_t t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (a != 1) throw UnsupportedDomain("element not invertible: modulus is not prime");
    return Fp(x0, p_);
}

Fp Fp::pow(std::uint64_t e) const {
    if (p_ == 0) {
        std::int64_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i) r *= v_;
        return Fp(r);
    }
    return Fp(mod_pow(v_, e, p_), p_);
}

Fp operator+(const Fp& a, const Fp& b) {
    std::int64_t p = common_modulus(a, b);
    if (p == 0) return Fp(a.v_ + b.v_);
    return Fp(reduce(a.v_, p) + reduce(b.v_, p), p);
}

Fp operator-(const Fp& a, const Fp& b) {
    std::int64_t p = common_modulus(a, b);
    if (p == 0) return Fp(a.v_ - b.v_);
    return Fp(reduce(a.v_, p) - reduce(b.v_, p), p);
}

Fp operator*(const Fp& a, const Fp& b) {
    std::int64_t p = common_modulus(a, b);
    if (p == 0) return Fp(a.v_ * b.v_);
    return Fp(reduce(a.v_, p) * reduce(b.v_, p), p);
}

Fp operator/(const Fp& a, const Fp& b) {
    std::int64_t p = common_modulus(a, b);
    if (p == 0) {
        if (b.v_ == 0) throw UnsupportedDomain("division by zero");
        if (a.v_ % b.v_ != 0) throw UnsupportedDomain("inexact division of unbound integer constants");
        return Fp(a.v_ / b.v_);
    }
    return a.bind(p) * b.bind(p).inverse();
}

bool operator==(const Fp& a, const Fp& b) {
    std::int64_t p = common_modulus(a, b);
    if (p == 0) return a.v_ == b.v_;
    return reduce(a.v_, p) == reduce(b.v_, p);
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

bool sqrt_mod(const Fp& a, Fp& root) {
    const std::int64_t p = a.modulus();
    if (p == 0) throw UnsupportedDomain("sqrt of unbound constant");
    if (a.is_zero()) {
        root = Fp(0, p);
        return true;
    }
    if (p == 2) {
        root = a;
        return true;
    }
    if (mod_pow(a.value(), (p - 1) / 2, p) != 1) return false;
    if (p % 4 == 3) {
        root = Fp(mod_pow(a.value(), (p + 1) / 4, p), p);
        return true;
    }
    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::int64_t z = least_nonresidue(p);
    Fp c(mod_pow(z, q, p), p);
    Fp x(mod_pow(a.value(), (q + 1) / 2, p), p);
    Fp t(mod_pow(a.value(), q, p), p);
    int m = s;
    while (!(t == Fp(1))) {
        int i = 0;
        Fp tt = t;
        while (!(tt == Fp(1))) {
            tt = tt * tt;
            ++i;
        }
        Fp b = c;
        for (int j = 0; j < m - i - 1; ++j) b = b * b;
        x = x * b;
        c = b * b;
        t = t * c;
        m = i;
    }
    root = x;
    return true;
}

std::int64_t least_nonresidue(std::int64_t p) {
    for (std::int64_t n = 2; n < p; ++n)
        if (mod_pow(n, (p - 1) / 2, p) == p - 1) return n;
    throw UnsupportedDomain("no quadratic non-residue");
}

Fp2::Fp2(Fp a, Fp b, std::int64_t nonresidue) : a_(a), b_(b), n_(nonresidue) {}

namespace {

std::int64_t common_nonresidue(const Fp2& x, const Fp2& y) {
    if (x.nonresidue() == 0) return y.nonresidue();
    if (y.nonresidue() == 0 || x.nonresidue() == y.nonresidue()) return x.nonresidue();
    throw UnsupportedDomain("mixed quadratic extensions");
}

}  // namespace

Fp2 operator+(const Fp2& x, const Fp2& y) {
    return Fp2(x.a_ + y.a_, x.b_ + y.b_, common_nonresidue(x, y));
}

Fp2 operator-(const Fp2& x, const Fp2& y) {
    return Fp2(x.a_ - y.a_, x.b_ - y.b_, common_nonresidue(x, y));
}

Fp2 operator*(const Fp2& x, const Fp2& y) {
    std::int64_t n = common_nonresidue(x, y);
    return Fp2(x.a_ * y.a_ + Fp(n) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, n);
}

Fp2 Fp2::inverse() const {
    // (a + bt)^-1 = (a - bt) / (a^2 - n b^2)
    Fp norm = a_ * a_ - Fp(n_) * b_ * b_;
    Fp inv = norm.inverse();
    return Fp2(a_ * inv, -b_ * inv, n_);
}

bool operator==(const Fp2& x, const Fp2& y) {
    common_nonresidue(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::ostream& operator<<(std::ostream& os, const Fp2& a) {
    return os << a.re() << '+' << a.im() << 't';
}

void ScalarTraits<Fp>::require_field(const Fp& a) {
    if (a.modulus() != 0 && !is_prime(static_cast<std::uint64_t>(a.modulus())))
        throw UnsupportedDomain("Z/" + std::to_string(a.modulus()) + " is not a field");
}

void ScalarTraits<Cyclotomic<Fp>>::require_field(const Cyclotomic<Fp>& a) {
    std::int64_t p = a.u().modulus() != 0 ? a.u().modulus() : a.v().modulus();
    if (p == 0) return;
    ScalarTraits<Fp>::require_field(a.u().bind(p));
    if (p % 3 != 2)
        throw UnsupportedDomain("F_" + std::to_string(p) + "[w] is not a field (p != 2 mod 3)");
}

Fp primitive_cube_root(std::int64_t p) {
    if (p % 3 != 1) throw UnsupportedDomain("F_p has no primitive cube root of unity unless p = 1 mod 3");
    for (std::int64_t g = 2; g < p; ++g) {
        std::int64_t w = mod_pow(g, (p - 1) / 3, p);
        if (w != 1) return Fp(w, p);
    }
    throw InconsistencyError("cube root search failed");
}

}  // namespace weddle::algebra
