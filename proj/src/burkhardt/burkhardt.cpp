#include "weddle/burkhardt/burkhardt.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "weddle/heis/heisenberg.hpp"
#include "weddle/sympchar/sympchar.hpp"

namespace weddle::burkhardt {

namespace {

using algebra::Exponents;

// Images of X_0..X_8 under X_0 = Y_0, X_s = Y_s + Z_s, X_{-s} = Y_s - Z_s,
// with one of the two blocks set to zero.
std::vector<SparsePoly<Rational>> restriction_images(bool plus) {
    const std::size_t n = plus ? 5 : 4;
    std::vector<SparsePoly<Rational>> img(9, SparsePoly<Rational>(n));
    const auto& reps = heis::orbit_representatives();
    for (int i = 0; i < kReps; ++i) {
        const int s = reps[i];
        if (plus) {
            auto y = SparsePoly<Rational>::variable(n, i);
            img[s] = y;
            img[heis::neg_index(s)] = y;
        } else if (i > 0) {
            auto z = SparsePoly<Rational>::variable(n, i - 1);
            img[s] = z;
            img[heis::neg_index(s)] = -z;
        }
    }
    return img;
}

PolyMatrix<Rational> restricted_matrix(bool plus) {
    const std::size_t n = plus ? 5 : 4;
    const auto img = restriction_images(plus);
    const auto& reps = heis::orbit_representatives();
    PolyMatrix<Rational> m(kReps, kReps, SparsePoly<Rational>(n));
    for (int col = 0; col < kReps; ++col) {
        RVector<Rational> e(kReps, Rational(0));
        e[col] = 1;
        const auto f = quadrics_f(e);
        for (int row = 0; row < kReps; ++row) {
            const int a = reps[row];
            auto q = f[a];
            if (a != 0) q += f[heis::neg_index(a)];
            m(row, col) = q.substitute(img);
        }
    }
    return m;
}

// Integer content of a family of integral polynomials.
mpz_class content(const std::vector<SparsePoly<Rational>>& ps) {
    mpz_class g = 0;
    for (const auto& p : ps)
        for (const auto& [e, c] : p.terms()) {
            if (c.get_den() != 1) throw InvariantViolation("expected integral coefficients");
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        }
    return g;
}

template <class F, class Sample>
BurkhardtFit<F> fit_quartic(std::size_t samples, Sample sample) {
    std::vector<Vec<F>> pts;
    while (pts.size() < samples) {
        if (auto r = steinerian_minus<F>(sample())) pts.push_back(*r);
    }
    auto basis = algebra::fit_hypersurface(pts, 4, kReps);
    BurkhardtFit<F> out;
    out.samples = samples;
    out.monomials = algebra::monomials(kReps, 4).size();
    out.nullity = basis.size();
    if (basis.empty()) throw DegenerateConfiguration("no quartic vanishes on the samples; resample");
    if (basis.size() > 1) {
        if (samples < out.monomials - 1)
            throw DegenerateConfiguration("too few samples to isolate a quartic");
        throw InconsistencyError("quartic through the Steinerian image is not unique (nullity " +
                                 std::to_string(basis.size()) + ")");
    }
    out.quartic = basis.front();
    return out;
}

void require_enumeration_prime(std::int64_t p) {
    if (p < 2 || p > 200 || !algebra::is_prime(static_cast<std::uint64_t>(p)))
        throw UnsupportedDomain("enumeration needs a prime p <= 200");
    if (p % 3 != 1) throw UnsupportedDomain("enumeration needs p = 1 mod 3");
}

// The five quartics with small integer coefficients, evaluated without the
// generic polynomial machinery.
struct CompiledQuartics {
    struct Term {
        long long coef;
        std::array<int, 4> e;
    };
    std::array<std::vector<Term>, kReps> terms;

    CompiledQuartics() {
        const auto& r = steinerian_minus_symbolic();
        for (int i = 0; i < kReps; ++i)
            for (const auto& [e, c] : r[i].terms())
                terms[i].push_back({c.get_num().get_si(), {e[0], e[1], e[2], e[3]}});
    }

    template <class F>
    std::array<F, kReps> operator()(const std::array<F, 4>& z) const {
        std::array<std::array<F, 5>, 4> pw;
        for (int k = 0; k < 4; ++k) {
            pw[k][0] = F(1);
            for (int d = 1; d < 5; ++d) pw[k][d] = F(pw[k][d - 1] * z[k]);
        }
        std::array<F, kReps> out;
        for (int i = 0; i < kReps; ++i) {
            F acc(0);
            for (const auto& t : terms[i])
                acc = F(acc + F(F(t.coef) * pw[0][t.e[0]] * pw[1][t.e[1]] * pw[2][t.e[2]] * pw[3][t.e[3]]));
            out[i] = acc;
        }
        return out;
    }
};

// Partial derivatives of an integral quartic in 5 variables.
struct CompiledGradient {
    struct Term {
        long long coef;
        std::array<int, kReps> e;
    };
    std::array<std::vector<Term>, kReps> partials;

    explicit CompiledGradient(const SparsePoly<Rational>& b) {
        for (int i = 0; i < kReps; ++i) {
            const auto d = b.derivative(i);
            for (const auto& [e, c] : d.terms())
                partials[i].push_back({c.get_num().get_si(), {e[0], e[1], e[2], e[3], e[4]}});
        }
    }

    template <class F>
    bool vanishes_at(const std::array<F, kReps>& y) const {
        for (const auto& terms : partials) {
            F acc(0);
            for (const auto& t : terms) {
                F m(t.coef);
                for (int v = 0; v < kReps; ++v)
                    for (int d = 0; d < t.e[v]; ++d) m = F(m * y[v]);
                acc = F(acc + m);
            }
            if (!acc.is_zero()) return false;
        }
        return true;
    }
};

// Calls visit on one representative (first nonzero coordinate 1) of every
// point of P^3 over the field with the given elements (elems[0] = 0, elems[1] = 1).
template <class F, class Visit>
void for_each_p3(const std::vector<F>& elems, Visit visit) {
    const std::size_t q = elems.size();
    std::array<F, 4> z;
    for (int lead = 0; lead < 4; ++lead) {
        const std::size_t free = 3 - lead;
        std::size_t total = 1;
        for (std::size_t i = 0; i < free; ++i) total *= q;
        for (int k = 0; k < lead; ++k) z[k] = elems[0];
        z[lead] = elems[1];
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t t = idx;
            for (std::size_t i = 0; i < free; ++i) {
                z[lead + 1 + i] = elems[t % q];
                t /= q;
            }
            visit(z);
        }
    }
}

std::vector<Fp> prime_field(std::int64_t p) {
    std::vector<Fp> elems;
    for (std::int64_t v = 0; v < p; ++v) elems.push_back(Fp(v, p));
    return elems;
}

std::vector<Fp2> quadratic_field(std::int64_t p) {
    const auto n = algebra::least_nonresidue(p);
    std::vector<Fp2> elems;
    for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t a = 0; a < p; ++a) elems.push_back(Fp2(Fp(a, p), Fp(b, p), n));
    return elems;
}

std::uint32_t encode(const Fp& x) { return static_cast<std::uint32_t>(x.value()); }
std::uint32_t encode(const Fp2& x) {
    return static_cast<std::uint32_t>(x.re().value() + x.re().modulus() * x.im().value());
}

std::uint64_t p3_size(std::uint64_t q) { return ((q * q + q) + 1) * q + 1; }

void require_cap(std::uint64_t points, std::uint64_t cap) {
    if (points > cap)
        throw ResourceError("enumeration of " + std::to_string(points) + " points exceeds the cap of " +
                            std::to_string(cap));
}

}  // namespace

int rep_slot(int sigma) {
    const auto& reps = heis::orbit_representatives();
    for (int i = 0; i < kReps; ++i)
        if (reps[i] == sigma || reps[i] == heis::neg_index(sigma)) return i;
    throw ShapeError("sigma index out of range");
}

const PolyMatrix<Rational>& matrix_plus() {
    static const PolyMatrix<Rational> m = [] {
        auto r = restricted_matrix(true);
        if (!r.is_symmetric()) throw InvariantViolation("M+ is not symmetric");
        return r;
    }();
    return m;
}

const PolyMatrix<Rational>& matrix_minus() {
    static const PolyMatrix<Rational> m = [] {
        auto r = restricted_matrix(false);
        if (!r.is_skew()) throw InvariantViolation("M- is not skew-symmetric");
        return r;
    }();
    return m;
}

const std::vector<SparsePoly<Rational>>& steinerian_minus_symbolic() {
    static const std::vector<SparsePoly<Rational>> r = [] {
        const auto& m = matrix_minus();
        std::vector<SparsePoly<Rational>> out;
        for (int i = 0; i < kReps; ++i) {
            auto pf = algebra::pfaffian_expand(m.minor(i, i));
            out.push_back(i % 2 ? -pf : pf);
        }
        Rational scale(1, 1);
        scale /= Rational(content(out));
        if (sgn(out[0].leading().second) < 0) scale = -scale;
        for (auto& p : out) p = scale * p;
        return out;
    }();
    return r;
}

std::vector<SparsePoly<Rational>> kernel_residual() {
    return matrix_minus().apply(steinerian_minus_symbolic());
}

BurkhardtFit<Rational> derive_burkhardt_rational(std::uint64_t seed, std::size_t samples, long bound) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-bound, bound);
    auto fit = fit_quartic<Rational>(samples, [&] {
        Vec<Rational> z;
        for (int i = 0; i < 4; ++i) z.push_back(Rational(dist(rng)));
        return z;
    });
    fit.quartic = algebra::primitive_part(fit.quartic);
    return fit;
}

BurkhardtFit<Fp> derive_burkhardt_fp(std::int64_t p, std::uint64_t seed, std::size_t samples) {
    if (p < 100 || !algebra::is_prime(static_cast<std::uint64_t>(p)))
        throw UnsupportedDomain("interpolation needs a prime p > 100");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    auto fit = fit_quartic<Fp>(samples, [&] {
        Vec<Fp> z;
        for (int i = 0; i < 4; ++i) z.push_back(Fp(dist(rng), p));
        return z;
    });
    fit.quartic = algebra::make_monic(fit.quartic);
    return fit;
}

PolyMatrix<Rational> hessian(const SparsePoly<Rational>& f) {
    const std::size_t n = f.nvars();
    PolyMatrix<Rational> h(n, n, SparsePoly<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        auto fi = f.derivative(i);
        for (std::size_t j = 0; j < n; ++j) h(i, j) = fi.derivative(j);
    }
    return h;
}

HessianMatch hessian_match(const SparsePoly<Rational>& b) {
    if (b.nvars() != kReps) throw ShapeError("expected a form in 5 variables");
    const auto h = hessian(b);
    const auto& m = matrix_plus();
    HessianMatch out;
    std::array<int, 5> perm;
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int mask = 0; mask < 32; ++mask) {
            std::array<int, 5> s;
            for (int i = 0; i < 5; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
            std::optional<Rational> c;
            bool ok = true;
            for (int i = 0; i < 5 && ok; ++i)
                for (int j = 0; j < 5 && ok; ++j) {
                    const auto& hij = h(i, j);
                    auto mij = Rational(s[i] * s[j]) * m(perm[i], perm[j]);
                    if (hij.is_zero() || mij.is_zero()) {
                        ok = hij.is_zero() && mij.is_zero();
                        continue;
                    }
                    if (!c) c = Rational(hij.leading().second / mij.leading().second);
                    ok = hij == *c * mij;
                }
            if (!ok || !c) continue;
            if (out.matches++ == 0) {
                out.found = true;
                out.scale = *c;
                out.perm = perm;
                out.signs = s;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool projectively_invariant(const SparsePoly<Rational>& b, const Matrix<QOmega>& p) {
    const std::size_t n = b.nvars();
    if (p.rows() != n || p.cols() != n) throw ShapeError("transformation size differs from variable count");
    const auto bq = b.map_coefficients<QOmega>([](const Rational& c) { return QOmega(c); });
    std::vector<SparsePoly<QOmega>> img;
    for (std::size_t i = 0; i < n; ++i) {
        SparsePoly<QOmega> l(n);
        for (std::size_t j = 0; j < n; ++j) {
            Exponents e(n, 0);
            e[j] = 1;
            l.add_term(e, p(i, j));
        }
        img.push_back(l);
    }
    auto moved = bq.substitute(img);
    return !moved.is_zero() && algebra::proportional(moved, bq);
}

InvarianceReport upsilon_invariance(const SparsePoly<Rational>& b) {
    InvarianceReport rep;
    const auto& G = sympchar::symplectic_group(2, 3);
    for (std::size_t k = 0; k < G.generators.size(); ++k) {
        const auto T = heis::intertwiner(G.generators[k]).T;
        ++rep.generators;
        if (projectively_invariant(b, heis::upsilon_plus(T)))
            ++rep.invariant;
        else
            rep.failures.push_back("generator " + std::to_string(k));
    }
    return rep;
}

std::vector<Vec<Fp>> hessian_points_ff(std::int64_t p, std::uint64_t seed, std::size_t count) {
    if (!algebra::is_prime(static_cast<std::uint64_t>(p))) throw UnsupportedDomain("p must be prime");
    const auto m = convert<Fp>(matrix_plus());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    std::vector<Vec<Fp>> out;
    for (std::size_t attempt = 0; out.size() < count; ++attempt) {
        if (attempt > 1000 + 100 * count) throw DegenerateConfiguration("no F_p points on det M+ = 0 found");
        Vec<Fp> y0, y1;
        for (int i = 0; i < kReps; ++i) {
            y0.push_back(Fp(dist(rng), p));
            y1.push_back(Fp(dist(rng), p));
        }
        for (std::int64_t t = 0; t < p && out.size() < count; ++t) {
            Vec<Fp> y;
            for (int i = 0; i < kReps; ++i) y.push_back(y0[i] + Fp(t, p) * y1[i]);
            if (algebra::is_zero(algebra::determinant(algebra::evaluate(m, y)))) out.push_back(y);
        }
    }
    return out;
}

FiberCensus count_fibers_ff(std::int64_t p, int k, std::uint64_t cap) {
    require_enumeration_prime(p);
    if (k != 1 && k != 2) throw UnsupportedDomain("extension degree must be 1 or 2");
    FiberCensus c;
    c.p = p;
    c.k = k;
    const std::uint64_t q = k == 1 ? p : p * p;
    c.points = p3_size(q);
    require_cap(c.points, cap);
    const CompiledQuartics quartics;
    const CompiledGradient gradient(derive_burkhardt_rational(1).quartic);
    // image -> (fiber size, image is singular on B)
    std::map<std::array<std::uint32_t, kReps>, std::pair<std::uint64_t, bool>> fibers;
    auto visit = [&](const auto& z) {
        auto r = quartics(z);
        auto lead = std::find_if(r.begin(), r.end(), [](const auto& x) { return !x.is_zero(); });
        if (lead == r.end()) {
            ++c.base_points;
            return;
        }
        const auto inv = lead->inverse();
        std::array<std::uint32_t, kReps> key;
        for (int i = 0; i < kReps; ++i) key[i] = encode(r[i] * inv);
        auto [it, fresh] = fibers.try_emplace(key, 0, false);
        if (fresh) {
            std::array<std::decay_t<decltype(r[0])>, kReps> y;
            for (int i = 0; i < kReps; ++i) y[i] = r[i] * inv;
            it->second.second = gradient.vanishes_at(y);
        }
        ++it->second.first;
    };
    if (k == 1)
        for_each_p3(prime_field(p), visit);
    else
        for_each_p3(quadratic_field(p), visit);
    c.images = fibers.size();
    for (const auto& [key, entry] : fibers) {
        const auto [n, singular] = entry;
        ++c.histogram[n];
        ++(singular ? c.singular_histogram : c.smooth_histogram)[n];
        if (singular) ++c.singular_images;
        c.max_fiber = std::max(c.max_fiber, n);
        if (!singular) c.max_smooth_fiber = std::max(c.max_smooth_fiber, n);
    }
    std::uint64_t best = 0;
    for (const auto& [size, n] : c.smooth_histogram)
        if (size * n > best) {
            best = size * n;
            c.generic_fiber = size;
        }
    return c;
}

std::vector<Vec<Fp>> fiber_ff(std::int64_t p, const Vec<Fp>& image, std::uint64_t cap) {
    require_enumeration_prime(p);
    if (image.size() != kReps) throw ShapeError("image point must have 5 coordinates");
    require_cap(p3_size(p), cap);
    const auto target = projective_normalize(image);
    const CompiledQuartics quartics;
    std::vector<Vec<Fp>> out;
    for_each_p3(prime_field(p), [&](const std::array<Fp, 4>& z) {
        auto r = quartics(z);
        if (projective_normalize(Vec<Fp>(r.begin(), r.end())) == target) out.emplace_back(z.begin(), z.end());
    });
    return out;
}

std::uint64_t count_base_locus_ff(std::int64_t p, int k, std::uint64_t cap) {
    require_enumeration_prime(p);
    if (k != 1 && k != 2) throw UnsupportedDomain("extension degree must be 1 or 2");
    const std::uint64_t q = k == 1 ? p : p * p;
    require_cap(p3_size(q), cap);
    const CompiledQuartics quartics;
    std::uint64_t count = 0;
    auto visit = [&](const auto& z) {
        auto r = quartics(z);
        if (std::all_of(r.begin(), r.end(), [](const auto& x) { return x.is_zero(); })) ++count;
    };
    if (k == 1)
        for_each_p3(prime_field(p), visit);
    else
        for_each_p3(quadratic_field(p), visit);
    return count;
}
MatrixMatch reconcile_matrix(const PolyMatrix<Rational>& computed, const PolyMatrix<Rational>& reference,
                             bool column_scaling) {
    if (computed.rows() != 5 || computed.cols() != 5 || reference.rows() != 5 || reference.cols() != 5)
        throw ShapeError("reconciliation expects 5x5 matrices");
    MatrixMatch out;
    std::array<int, 5> perm;
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // ratio(i, j) = computed(perm i, perm j) / reference(i, j) must factor as row_i * col_j.
        std::array<std::array<std::optional<Rational>, 5>, 5> ratio;
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = 0; j < 5 && ok; ++j) {
                const auto& a = computed(perm[i], perm[j]);
                const auto& b = reference(i, j);
                if (a.is_zero() || b.is_zero()) {
                    ok = a.is_zero() && b.is_zero();
                    continue;
                }
                Rational c = a.leading().second / b.leading().second;
                ok = a == c * b;
                ratio[i][j] = c;
            }
        if (!ok) continue;
        std::vector<std::optional<Rational>> row(5), col(5);
        col[0] = Rational(1);
        if (!column_scaling)
            for (auto& x : col) x = Rational(1);
        // Propagate row_i = ratio/col_j and col_j = ratio/row_i until stable.
        for (int sweep = 0; sweep < 10; ++sweep)
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    if (!ratio[i][j]) continue;
                    if (!row[i] && col[j]) row[i] = Rational(*ratio[i][j] / *col[j]);
                    if (row[i] && !col[j]) col[j] = Rational(*ratio[i][j] / *row[i]);
                }
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = 0; j < 5 && ok; ++j) {
                if (!row[i] || !col[j]) {
                    ok = false;
                    continue;
                }
                if (ratio[i][j]) ok = *ratio[i][j] == *row[i] * *col[j];
            }
        if (!ok) continue;
        out.found = true;
        out.perm = perm;
        for (int i = 0; i < 5; ++i) {
            out.row_scale.push_back(*row[i]);
            out.col_scale.push_back(*col[i]);
        }
        return out;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

QuarticMatch reconcile_quartics(const std::vector<SparsePoly<Rational>>& computed,
                                const std::vector<SparsePoly<Rational>>& reference) {
    if (computed.size() != 5 || reference.size() != 5) throw ShapeError("expected five quartics");
    QuarticMatch out;
    std::array<int, 4> zp;
    std::iota(zp.begin(), zp.end(), 0);
    do {
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<SparsePoly<Rational>> img;
            std::array<int, 4> zs;
            for (int i = 0; i < 4; ++i) {
                zs[i] = (mask >> i) & 1 ? -1 : 1;
                img.push_back(Rational(zs[i]) * SparsePoly<Rational>::variable(4, zp[i]));
            }
            std::vector<SparsePoly<Rational>> moved;
            for (const auto& q : computed) moved.push_back(q.substitute(img));
            std::optional<Rational> scale;
            std::array<int, 5> rp{}, rs{};
            std::vector<bool> used(5, false);
            bool ok = true;
            for (int k = 0; k < 5 && ok; ++k) {
                ok = false;
                for (int j = 0; j < 5 && !ok; ++j) {
                    if (used[j] || moved[j].is_zero() || reference[k].is_zero()) continue;
                    if (!algebra::proportional(reference[k], moved[j])) continue;
                    Rational c = reference[k].leading().second / moved[j].leading().second;
                    Rational mag = abs(c);
                    if (scale && *scale != mag) continue;
                    scale = mag;
                    rp[k] = j;
                    rs[k] = sgn(c);
                    used[j] = true;
                    ok = true;
                }
            }
            if (!ok) continue;
            out.found = true;
            out.z_perm = zp;
            out.z_signs = zs;
            out.r_perm = rp;
            out.r_signs = rs;
            out.scale = *scale;
            return out;
        }
    } while (std::next_permutation(zp.begin(), zp.end()));
    return out;
}

}  // namespace weddle::burkhardt
