#include "weddle/algebra/poly.hpp"

#include <functional>

namespace weddle::algebra {

std::vector<Exponents> monomials(std::size_t nvars, unsigned degree) {
    std::vector<Exponents> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Exponents e(nvars, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == nvars) {
            e[i] = static_cast<std::uint16_t>(left);
            out.push_back(e);
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = static_cast<std::uint16_t>(k);
            rec(i + 1, left - k);
        }
    };
    rec(0, degree);
    return out;
}

SparsePoly<Rational> primitive_part(const SparsePoly<Rational>& p) {
    if (p.is_zero()) return p;
    mpz_class lcm_den = 1;
    for (const auto& [e, c] : p.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    mpz_class g = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_class num = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale(lcm_den, g);
    scale.canonicalize();
    if (sgn(p.leading().second) < 0) scale = -scale;
    return scale * p;
}

Fp rational_mod(const Rational& r, std::int64_t p) {
    mpz_class n = r.get_num() % p;
    mpz_class d = r.get_den() % p;
    if (d == 0) throw UnsupportedDomain("denominator divisible by the modulus");
    return Fp(n.get_si(), p) / Fp(d.get_si(), p);
}

SparsePoly<Fp> reduce_mod(const SparsePoly<Rational>& q, std::int64_t p) {
    return q.map_coefficients<Fp>([p](const Rational& c) { return rational_mod(c, p); });
}

}  // namespace weddle::algebra
