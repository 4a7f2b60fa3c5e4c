#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "weddle/algebra/scalar.hpp"

namespace weddle::algebra {

using Exponents = std::vector<std::uint16_t>;

// All exponent vectors of total degree d in n variables, in descending
// lexicographic order (x0^d first).
std::vector<Exponents> monomials(std::size_t nvars, unsigned degree);

template <class F>
class SparsePoly {
public:
    using Terms = std::map<Exponents, F>;

    SparsePoly() = default;
    explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

    static SparsePoly constant(std::size_t nvars, const F& c) {
        SparsePoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }
    static SparsePoly variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw ShapeError("variable index out of range");
        Exponents e(nvars, 0);
        e[i] = 1;
        SparsePoly p(nvars);
        p.add_term(e, F(1));
        return p;
    }
    static SparsePoly monomial(const Exponents& e, const F& c) {
        SparsePoly p(e.size());
        p.add_term(e, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    F coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? F(0) : it->second;
    }

    void add_term(const Exponents& e, const F& c) {
        if (e.size() != nvars_) throw ShapeError("exponent vector length differs from variable count");
        if (algebra::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = F(it->second + c);
            if (algebra::is_zero(it->second)) terms_.erase(it);
        }
    }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total(e));
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            if (d < 0) d = total(e);
            else if (total(e) != d) return false;
        }
        return true;
    }

    // Largest monomial in lexicographic order.
    const std::pair<const Exponents, F>& leading() const {
        if (terms_.empty()) throw ShapeError("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    SparsePoly operator-() const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, F(-c));
        return r;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r = a;
        r += b;
        return r;
    }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r = a;
        r -= b;
        return r;
    }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        check_arity(a, b);
        SparsePoly r(a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
                r.add_term(e, F(ca * cb));
            }
        return r;
    }
    friend SparsePoly operator*(const F& s, const SparsePoly& a) {
        SparsePoly r(a.nvars_);
        if (algebra::is_zero(s)) return r;
        for (const auto& [e, c] : a.terms_) r.add_term(e, F(s * c));
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& b) {
        check_arity(*this, b);
        for (const auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& b) {
        check_arity(*this, b);
        for (const auto& [e, c] : b.terms_) add_term(e, F(-c));
        return *this;
    }
    SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    SparsePoly pow(unsigned k) const {
        SparsePoly r = constant(nvars_, F(1));
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    SparsePoly derivative(std::size_t i) const {
        if (i >= nvars_) throw ShapeError("variable index out of range");
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d = e;
            --d[i];
            r.add_term(d, F(F(static_cast<long>(e[i])) * c));
        }
        return r;
    }

    // Evaluate with point coordinates in any ring G that accepts F
    // coefficients through conv.
    template <class G, class Conv>
    G evaluate_as(std::span<const G> x, Conv conv) const {
        if (x.size() != nvars_) throw ShapeError("evaluation point has wrong arity");
        std::vector<std::vector<G>> powers(nvars_);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < nvars_; ++i) {
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(G(1));
                while (pw.size() <= e[i]) pw.push_back(G(pw.back() * x[i]));
            }
        G acc(0);
        for (const auto& [e, c] : terms_) {
            G t = conv(c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] != 0) t = G(t * powers[i][e[i]]);
            acc = G(acc + t);
        }
        return acc;
    }

    F evaluate(std::span<const F> x) const {
        return evaluate_as<F>(x, [](const F& c) { return c; });
    }
    F evaluate(const std::vector<F>& x) const { return evaluate(std::span<const F>(x)); }

    // Substitute polynomial images for every variable (all in a common ring).
    SparsePoly substitute(const std::vector<SparsePoly>& images) const {
        if (images.size() != nvars_) throw ShapeError("substitution has wrong arity");
        std::size_t m = images.empty() ? 0 : images.front().nvars();
        for (const auto& q : images)
            if (q.nvars() != m) throw ShapeError("substitution images have mixed arity");
        std::vector<std::vector<SparsePoly>> powers(nvars_);
        SparsePoly acc(m);
        for (const auto& [e, c] : terms_) {
            SparsePoly t = constant(m, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(m, F(1)));
                while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
                t = t * pw[e[i]];
            }
            acc += t;
        }
        return acc;
    }

    template <class G, class Conv>
    SparsePoly<G> map_coefficients(Conv conv) const {
        SparsePoly<G> r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, conv(c));
        return r;
    }

    // Reorder or embed variables: new variable index of old variable i is
    // target[i] in a ring with n variables.
    SparsePoly remap_variables(const std::vector<std::size_t>& target, std::size_t n) const {
        if (target.size() != nvars_) throw ShapeError("variable map has wrong arity");
        SparsePoly r(n);
        for (const auto& [e, c] : terms_) {
            Exponents d(n, 0);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (target[i] >= n) throw ShapeError("variable map target out of range");
                d[target[i]] = static_cast<std::uint16_t>(d[target[i]] + e[i]);
            }
            r.add_term(d, c);
        }
        return r;
    }

    static int total(const Exponents& e) {
        int s = 0;
        for (auto v : e) s += v;
        return s;
    }

private:
    static void check_arity(const SparsePoly& a, const SparsePoly& b) {
        if (a.nvars_ != b.nvars_) throw ShapeError("polynomials have different variable counts");
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

// Divide by the gcd of the (integer-cleared) coefficients and make the
// leading coefficient positive.
SparsePoly<Rational> primitive_part(const SparsePoly<Rational>& p);

// Scale so the leading coefficient is 1.
template <class F>
SparsePoly<F> make_monic(const SparsePoly<F>& p) {
    if (p.is_zero()) return p;
    F inv = F(F(1) / p.leading().second);
    return inv * p;
}

// Reduce a rational polynomial modulo p (denominators must be units).
SparsePoly<Fp> reduce_mod(const SparsePoly<Rational>& q, std::int64_t p);

Fp rational_mod(const Rational& r, std::int64_t p);

// True when a = c*b for some nonzero scalar c.
template <class F>
bool proportional(const SparsePoly<F>& a, const SparsePoly<F>& b) {
    if (a.nvars() != b.nvars()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.size() != b.size()) return false;
    const F c = F(a.leading().second / b.leading().second);
    for (const auto& [e, cb] : b.terms()) {
        auto it = a.terms().find(e);
        if (it == a.terms().end() || !(it->second == F(c * cb))) return false;
    }
    return true;
}

}  // namespace weddle::algebra
