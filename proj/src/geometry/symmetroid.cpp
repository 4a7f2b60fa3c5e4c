#include "weddle/geometry/symmetroid.hpp"

#include <random>

namespace weddle::geometry {

using algebra::Fp;

namespace {

void require_field(std::int64_t p) {
    if (p < 5 || !algebra::is_prime(static_cast<std::uint64_t>(p)))
        throw UnsupportedDomain("need a prime p >= 5, got " + std::to_string(p));
}

}  // namespace

std::vector<Vec<Fp>> singular_points_ff(const SparsePoly<Fp>& f, std::int64_t p) {
    require_field(p);
    if (f.nvars() != 4) throw ShapeError("expected a form in 4 variables");
    constexpr std::int64_t kMaxP = 200;
    if (p > kMaxP) throw ResourceError("P^3 enumeration capped at p = " + std::to_string(kMaxP));
    std::vector<SparsePoly<Fp>> grad;
    for (std::size_t i = 0; i < 4; ++i) grad.push_back(f.derivative(i));

    std::vector<Vec<Fp>> out;
    Vec<Fp> z(4);
    for (int lead = 0; lead < 4; ++lead) {
        std::int64_t total = 1;
        for (int i = lead + 1; i < 4; ++i) total *= p;
        for (std::int64_t idx = 0; idx < total; ++idx) {
            std::int64_t t = idx;
            for (int i = 0; i < 4; ++i) {
                if (i < lead) z[i] = Fp(0, p);
                else if (i == lead) z[i] = Fp(1, p);
                else {
                    z[i] = Fp(t % p, p);
                    t /= p;
                }
            }
            bool singular = f.evaluate(z).is_zero();
            for (std::size_t i = 0; singular && i < 4; ++i) singular = grad[i].evaluate(z).is_zero();
            if (singular) out.push_back(z);
        }
    }
    return out;
}

std::vector<Vec<Fp>> random_points_ff(std::int64_t p, std::uint64_t seed, std::size_t count) {
    require_field(p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    std::vector<Vec<Fp>> out;
    for (std::size_t i = 0; i < count; ++i) {
        Vec<Fp> x{Fp(1, p)};
        for (int k = 0; k < 3; ++k) x.push_back(Fp(d(rng), p));
        out.push_back(x);
    }
    return out;
}

}  // namespace weddle::geometry
