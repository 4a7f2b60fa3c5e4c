#include "weddle/sympchar/sympchar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace weddle::sympchar {

namespace {

int mod(long long v, long long n) {
    long long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

void check_bits(const std::vector<int>& v) {
    for (int x : v)
        if (x != 0 && x != 1) throw InvariantViolation("characteristic entries must be 0 or 1");
}

// (M J M^T)_{ij} over the integers for a 2g x 2g row-major matrix.
template <class T>
bool preserves_form(const std::vector<T>& e, int g, long long n) {
    const int d = 2 * g;
    auto at = [&](int i, int j) { return e[i * d + j]; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // (M J)_{ik} = -M_{i,k+g} for k < g, M_{i,k-g} for k >= g.
            long long s = 0;
            for (int k = 0; k < g; ++k) {
                s += static_cast<long long>(-at(i, k + g)) * at(j, k);
                s += static_cast<long long>(at(i, k)) * at(j, k + g);
            }
            long long target = (j == i + g) ? 1 : (i == j + g) ? -1 : 0;
            if (n == 0 ? s != target : mod(s - target, n) != 0) return false;
        }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Characteristics

Characteristic::Characteristic(std::vector<int> a_, std::vector<int> b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size()) throw ShapeError("characteristic halves have different lengths");
    check_bits(a);
    check_bits(b);
}

unsigned Characteristic::index() const {
    unsigned idx = 0;
    const int g = genus();
    for (int i = 0; i < g; ++i) {
        idx |= static_cast<unsigned>(a[i]) << i;
        idx |= static_cast<unsigned>(b[i]) << (g + i);
    }
    return idx;
}

Characteristic Characteristic::from_index(int g, unsigned idx) {
    std::vector<int> a(g), b(g);
    for (int i = 0; i < g; ++i) {
        a[i] = (idx >> i) & 1;
        b[i] = (idx >> (g + i)) & 1;
    }
    return Characteristic(a, b);
}

std::string to_string(const Characteristic& m) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < m.a.size(); ++i) os << (i ? "," : "") << m.a[i];
    os << ';';
    for (std::size_t i = 0; i < m.b.size(); ++i) os << (i ? "," : "") << m.b[i];
    os << ')';
    return os.str();
}

int parity(const Characteristic& m) {
    int s = 0;
    for (int i = 0; i < m.genus(); ++i) s += m.a[i] * m.b[i];
    return (s % 2) ? -1 : 1;
}

std::vector<Characteristic> all_characteristics(int g) {
    std::vector<Characteristic> out;
    for (unsigned i = 0; i < (1u << (2 * g)); ++i) out.push_back(Characteristic::from_index(g, i));
    return out;
}

// ---------------------------------------------------------------------------
// Symplectic matrices mod n

SymplecticMat::SymplecticMat(int g, int n, std::vector<int> entries) : g_(g), n_(n), e_(std::move(entries)) {
    if (g < 1) throw ShapeError("genus must be positive");
    if (n < 2) throw ShapeError("modulus must be at least 2");
    if (static_cast<int>(e_.size()) != 4 * g * g) throw ShapeError("symplectic matrix needs (2g)^2 entries");
    for (auto& x : e_) x = mod(x, n);
}

SymplecticMat SymplecticMat::identity(int g, int n) {
    std::vector<int> e(4 * g * g, 0);
    for (int i = 0; i < 2 * g; ++i) e[i * 2 * g + i] = 1;
    return SymplecticMat(g, n, e);
}

SymplecticMat SymplecticMat::transvection(const std::vector<int>& v, int n, int k) {
    const int d = static_cast<int>(v.size());
    if (d % 2) throw ShapeError("transvection vector must have even length");
    const int g = d / 2;
    // x -> x + k (x^T J v) v, so T_{ij} = d_ij + k v_i (Jv)_j.
    std::vector<int> jv(d);
    for (int i = 0; i < g; ++i) {
        jv[i] = v[i + g];
        jv[i + g] = -v[i];
    }
    std::vector<int> e(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) e[i * d + j] = (i == j ? 1 : 0) + k * v[i] * jv[j];
    return SymplecticMat(g, n, e);
}

bool SymplecticMat::is_symplectic() const { return preserves_form(e_, g_, n_); }

SymplecticMat SymplecticMat::reduce(int m) const {
    if (n_ % m != 0) throw InvariantViolation("reduction modulus must divide the modulus");
    return SymplecticMat(g_, m, e_);
}

SymplecticMat SymplecticMat::inverse() const {
    // M^{-1} = -J M^T J, i.e. (D^T -B^T; -C^T A^T).
    const int d = 2 * g_;
    std::vector<int> r(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const int bi = i / g_, bj = j / g_, ii = i % g_, jj = j % g_;
            // Block (bi,bj) of the inverse is +-(block (1-bj,1-bi) of M)^T.
            const int src = (1 - bj) * g_ + jj;
            const int srcc = (1 - bi) * g_ + ii;
            const int sign = (bi == bj) ? 1 : -1;
            r[i * d + j] = sign * (*this)(src, srcc);
        }
    return SymplecticMat(g_, n_, r);
}

std::vector<int> SymplecticMat::apply(const std::vector<int>& x) const {
    const int d = dim();
    if (static_cast<int>(x.size()) != d) throw ShapeError("vector length differs from matrix size");
    std::vector<int> y(d, 0);
    for (int i = 0; i < d; ++i) {
        long long s = 0;
        for (int j = 0; j < d; ++j) s += static_cast<long long>((*this)(i, j)) * x[j];
        y[i] = mod(s, n_);
    }
    return y;
}

std::uint64_t SymplecticMat::key() const {
    std::uint64_t k = 0;
    for (auto it = e_.rbegin(); it != e_.rend(); ++it) {
        if (k > (UINT64_MAX - static_cast<std::uint64_t>(*it)) / static_cast<std::uint64_t>(n_))
            throw ResourceError("matrix too large to pack into a 64-bit key");
        k = k * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(*it);
    }
    return k;
}

SymplecticMat operator*(const SymplecticMat& x, const SymplecticMat& y) {
    if (x.g_ != y.g_ || x.n_ != y.n_) throw ShapeError("symplectic matrices over different rings");
    const int d = x.dim();
    std::vector<int> r(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int s = 0;
            for (int k = 0; k < d; ++k) s += x(i, k) * y(k, j);
            r[i * d + j] = s;
        }
    return SymplecticMat(x.g_, x.n_, std::move(r));
}

std::string to_string(const SymplecticMat& m) {
    std::ostringstream os;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j);
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Integer symplectic matrices

IntSymplecticMat::IntSymplecticMat(int g, std::vector<long long> entries) : g_(g), e_(std::move(entries)) {
    if (g < 1) throw ShapeError("genus must be positive");
    if (static_cast<int>(e_.size()) != 4 * g * g) throw ShapeError("symplectic matrix needs (2g)^2 entries");
}

IntSymplecticMat IntSymplecticMat::identity(int g) {
    std::vector<long long> e(4 * g * g, 0);
    for (int i = 0; i < 2 * g; ++i) e[i * 2 * g + i] = 1;
    return IntSymplecticMat(g, e);
}

IntSymplecticMat IntSymplecticMat::transvection(const std::vector<long long>& v, long long k) {
    const int d = static_cast<int>(v.size());
    if (d % 2) throw ShapeError("transvection vector must have even length");
    const int g = d / 2;
    std::vector<long long> jv(d);
    for (int i = 0; i < g; ++i) {
        jv[i] = v[i + g];
        jv[i + g] = -v[i];
    }
    std::vector<long long> e(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) e[i * d + j] = (i == j ? 1 : 0) + k * v[i] * jv[j];
    return IntSymplecticMat(g, e);
}

bool IntSymplecticMat::is_symplectic() const { return preserves_form(e_, g_, 0); }

SymplecticMat IntSymplecticMat::reduce(int n) const {
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = mod(e_[i], n);
    return SymplecticMat(g_, n, r);
}

IntSymplecticMat operator*(const IntSymplecticMat& x, const IntSymplecticMat& y) {
    if (x.g_ != y.g_) throw ShapeError("genus mismatch");
    const int d = 2 * x.g_;
    std::vector<long long> r(d * d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) r[i * d + j] += x(i, k) * y(k, j);
    return IntSymplecticMat(x.g_, r);
}

IntSymplecticMat parse_int_matrix(const std::string& text) {
    std::istringstream is(text);
    std::vector<long long> v;
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw ParseError("non-integer matrix entry: " + tok);
        } catch (const std::logic_error&) {
            throw ParseError("non-integer matrix entry: " + tok);
        }
    }
    int d = 0;
    while (d * d < static_cast<int>(v.size())) ++d;
    if (d * d != static_cast<int>(v.size()) || d == 0 || d % 2) throw ParseError("matrix must be 2g x 2g");
    return IntSymplecticMat(d / 2, v);
}

// ---------------------------------------------------------------------------
// Action on characteristics

Characteristic act_characteristic(const SymplecticMat& M, const Characteristic& m) {
    if (!M.is_symplectic()) throw InvariantViolation("matrix is not symplectic mod " + std::to_string(M.modulus()));
    if (M.genus() != m.genus()) throw ShapeError("genus mismatch between matrix and characteristic");
    if (M.modulus() % 2 != 0) throw InvariantViolation("characteristic action needs an even modulus");
    const int g = M.genus();
    auto A = [&](int i, int j) { return M(i, j); };
    auto B = [&](int i, int j) { return M(i, j + g); };
    auto C = [&](int i, int j) { return M(i + g, j); };
    auto D = [&](int i, int j) { return M(i + g, j + g); };
    std::vector<int> a(g), b(g);
    for (int i = 0; i < g; ++i) {
        long long sa = 0, sb = 0, dc = 0, da = 0;
        for (int j = 0; j < g; ++j) {
            sa += D(i, j) * m.a[j] - C(i, j) * m.b[j];
            sb += -B(i, j) * m.a[j] + A(i, j) * m.b[j];
            dc += C(i, j) * D(i, j);
            da += A(i, j) * B(i, j);
        }
        a[i] = mod(sa + dc, 2);
        b[i] = mod(sb + da, 2);
    }
    return Characteristic(a, b);
}

Characteristic act_characteristic(const IntSymplecticMat& M, const Characteristic& m) {
    if (!M.is_symplectic()) throw InvariantViolation("matrix is not symplectic over Z");
    return act_characteristic(M.reduce(2), m);
}

// ---------------------------------------------------------------------------
// Quadratic forms on F_2^{2g}

int pairing_sign(int g, unsigned x, unsigned y) {
    const unsigned lo = (1u << g) - 1;
    unsigned s = ((x & lo) & (y >> g)) ^ ((x >> g) & (y & lo));
    return (__builtin_popcount(s) % 2) ? -1 : 1;
}

bool is_quadratic_form(const QuadFormF2& k) {
    const unsigned N = 1u << (2 * k.g);
    if (k.values.size() != N) return false;
    for (unsigned x = 0; x < N; ++x)
        for (unsigned y = 0; y < N; ++y)
            if (k(x ^ y) * k(x) * k(y) != pairing_sign(k.g, x, y)) return false;
    return true;
}

int epsilon(const QuadFormF2& k) {
    int s = 0;
    for (int v : k.values) s += v;
    const int scale = 1 << k.g;
    if (s != scale && s != -scale) throw InvariantViolation("not a quadratic form: sum is not +-2^g");
    return s > 0 ? 1 : -1;
}

QuadFormF2 quad_form(const Characteristic& m) {
    const int g = m.genus();
    QuadFormF2 k{g, std::vector<int>(1u << (2 * g))};
    const unsigned idx = m.index();
    const unsigned lo = (1u << g) - 1;
    const unsigned ma = idx & lo, mb = idx >> g;
    for (unsigned x = 0; x < k.values.size(); ++x) {
        const unsigned x1 = x & lo, x2 = x >> g;
        int q = __builtin_popcount(x1 & x2) + __builtin_popcount(ma & x2) + __builtin_popcount(mb & x1);
        k.values[x] = (q % 2) ? -1 : 1;
    }
    return k;
}

QuadFormF2 torsor_action(unsigned x, const QuadFormF2& k) {
    QuadFormF2 r = k;
    for (unsigned y = 0; y < r.values.size(); ++y) r.values[y] = pairing_sign(k.g, x, y) * k(y);
    return r;
}

std::vector<QuadFormF2> all_quadratic_forms(int g) {
    std::vector<QuadFormF2> out;
    for (const auto& m : all_characteristics(g)) out.push_back(quad_form(m));
    return out;
}

// ---------------------------------------------------------------------------
// Finite groups

std::vector<SymplecticMat> standard_generators(int g, int n) {
    std::vector<SymplecticMat> gens;
    const int d = 2 * g;
    for (unsigned bits = 1; bits < (1u << d); ++bits) {
        std::vector<int> v(d);
        for (int i = 0; i < d; ++i) v[i] = (bits >> i) & 1;
        gens.push_back(SymplecticMat::transvection(v, n));
    }
    return gens;
}

mpz_class symplectic_order_formula(int g, long long n) {
    if (g < 1 || g > 16) throw ResourceError("genus outside supported range 1..16");
    if (n < 2 || n > 1'000'000'000) throw ResourceError("modulus outside supported range 2..10^9");
    mpq_class order = 1;
    mpz_class nn = static_cast<long>(n);
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(g * (2 * g + 1)));
    order = pw;
    long long rest = n;
    for (long long p = 2; p <= rest; ++p) {
        if (p * p > rest) p = rest;  // what remains is prime
        if (rest % p) continue;
        while (rest % p == 0) rest /= p;
        for (int k = 1; k <= g; ++k) {
            mpz_class pk;
            mpz_class pp = static_cast<long>(p);
            mpz_pow_ui(pk.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(2 * k));
            mpq_class factor(pk - 1, pk);
            factor.canonicalize();
            order *= factor;
        }
    }
    order.canonicalize();
    if (order.get_den() != 1) throw InconsistencyError("symplectic order formula is not integral");
    return order.get_num();
}

namespace {

FiniteSymplecticGroup enumerate(int g, int n) {
    FiniteSymplecticGroup grp;
    grp.g = g;
    grp.n = n;
    grp.generators = standard_generators(g, n);
    const mpz_class expected = symplectic_order_formula(g, n);
    if (expected > kEnumerationBound)
        throw ResourceError("enumeration of Sp(" + std::to_string(2 * g) + ",Z/" + std::to_string(n) +
                            ") exceeds the bound of " + std::to_string(kEnumerationBound) + " elements");
    std::vector<std::size_t> frontier;
    auto add = [&](SymplecticMat m) {
        auto [it, inserted] = grp.lookup.emplace(m.key(), grp.elements.size());
        if (inserted) {
            frontier.push_back(grp.elements.size());
            grp.elements.push_back(std::move(m));
        }
    };
    add(SymplecticMat::identity(g, n));
    while (!frontier.empty()) {
        std::vector<std::size_t> current;
        current.swap(frontier);
        for (std::size_t idx : current)
            for (const auto& gen : grp.generators) add(gen * grp.elements[idx]);
    }
    return grp;
}

}  // namespace

const FiniteSymplecticGroup& symplectic_group(int g, int n) {
    if (g < 1 || g > 2 || (n != 2 && n != 3))
        throw ResourceError("enumerated groups are limited to g <= 2 and n in {2,3}");
    static std::mutex mu;
    static std::map<std::pair<int, int>, FiniteSymplecticGroup> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({g, n});
    if (it == cache.end()) it = cache.emplace(std::make_pair(g, n), enumerate(g, n)).first;
    return it->second;
}

mpz_class group_order(int g, long long n) {
    const mpz_class formula = symplectic_order_formula(g, n);
    if (n != 2 && n != 3) return formula;
    if (formula > kEnumerationBound)
        throw ResourceError("enumeration exceeds the bound of " + std::to_string(kEnumerationBound) + " elements");
    const auto& grp = symplectic_group(g, static_cast<int>(n));
    const mpz_class counted = static_cast<unsigned long>(grp.elements.size());
    if (counted != formula)
        throw InconsistencyError("BFS order " + counted.get_str() + " differs from formula " + formula.get_str());
    return counted;
}

mpq_class gamma_index(int g, long long n) {
    mpq_class r(symplectic_order_formula(g, n));
    if (r.get_den() != 1) throw InconsistencyError("index is not an integer");
    return r;
}

std::vector<std::vector<Characteristic>> characteristic_orbits(int g) {
    const auto& grp = symplectic_group(g, 2);
    const unsigned N = 1u << (2 * g);
    std::vector<int> orbit_of(N, -1);
    std::vector<std::vector<Characteristic>> orbits;
    for (unsigned start = 0; start < N; ++start) {
        if (orbit_of[start] >= 0) continue;
        const int id = static_cast<int>(orbits.size());
        orbits.emplace_back();
        std::vector<unsigned> stack{start};
        orbit_of[start] = id;
        while (!stack.empty()) {
            unsigned cur = stack.back();
            stack.pop_back();
            orbits[id].push_back(Characteristic::from_index(g, cur));
            for (const auto& gen : grp.generators) {
                unsigned nxt = act_characteristic(gen, Characteristic::from_index(g, cur)).index();
                if (orbit_of[nxt] < 0) {
                    orbit_of[nxt] = id;
                    stack.push_back(nxt);
                }
            }
        }
        std::sort(orbits[id].begin(), orbits[id].end());
    }
    return orbits;
}

StabilizerReport stabilizer(const Characteristic& m) {
    if (m.genus() != 2) throw ShapeError("stabilizer is implemented for g = 2");
    const auto& grp = symplectic_group(2, 2);
    StabilizerReport rep;
    rep.m = m;
    rep.parity = parity(m);
    for (const auto& M : grp.elements)
        if (act_characteristic(M, m) == m) rep.elements.push_back(M);
    rep.order = rep.elements.size();
    std::vector<Characteristic> odd;
    for (const auto& c : all_characteristics(2))
        if (parity(c) < 0) odd.push_back(c);
    std::set<Characteristic> seen;
    for (const auto& c : odd) {
        if (seen.count(c)) continue;
        std::set<Characteristic> orbit;
        for (const auto& M : rep.elements) orbit.insert(act_characteristic(M, c));
        seen.insert(orbit.begin(), orbit.end());
        rep.odd_orbit_sizes.push_back(orbit.size());
    }
    std::sort(rep.odd_orbit_sizes.begin(), rep.odd_orbit_sizes.end());
    return rep;
}

std::string to_string(GammaLabel l) {
    switch (l) {
        case GammaLabel::Full: return "Gamma2";
        case GammaLabel::Level2: return "Gamma2(2)";
        case GammaLabel::Level3: return "Gamma2(3)";
        case GammaLabel::Level6: return "Gamma2(6)";
        case GammaLabel::Level3_6: return "Gamma2(3,6)";
        case GammaLabel::Level3Minus: return "Gamma2(3)-";
    }
    return "?";
}

Characteristic default_odd_base() { return Characteristic({1, 0}, {1, 0}); }

std::set<GammaLabel> classify_gamma(const IntSymplecticMat& G, const Characteristic& odd_base) {
    if (!G.is_symplectic()) throw InvariantViolation("matrix is not symplectic over Z");
    if (G.genus() != 2) throw ShapeError("classification is implemented for g = 2");
    if (parity(odd_base) != -1) throw InvariantViolation("base characteristic must be odd");
    const int g = 2, d = 4;
    auto congruent_identity = [&](long long n) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (mod(G(i, j) - (i == j ? 1 : 0), n) != 0) return false;
        return true;
    };
    std::set<GammaLabel> labels{GammaLabel::Full};
    const bool l2 = congruent_identity(2), l3 = congruent_identity(3);
    if (l2) labels.insert(GammaLabel::Level2);
    if (l3) labels.insert(GammaLabel::Level3);
    if (congruent_identity(6)) labels.insert(GammaLabel::Level6);
    if (l3) {
        bool diag_ok = true;
        for (int i = 0; i < g; ++i) {
            long long cd = 0, ab = 0;
            for (int j = 0; j < g; ++j) {
                cd += G(i + g, j) * G(i + g, j + g);
                ab += G(i, j) * G(i, j + g);
            }
            if (mod(cd, 6) != 0 || mod(ab, 6) != 0) diag_ok = false;
        }
        if (diag_ok) labels.insert(GammaLabel::Level3_6);
        const SymplecticMat g2 = G.reduce(2);
        const auto stab = stabilizer(odd_base);
        const bool in_stab = std::any_of(stab.elements.begin(), stab.elements.end(),
                                         [&](const SymplecticMat& s) { return s == g2; });
        if (in_stab) labels.insert(GammaLabel::Level3Minus);
    }
    return labels;
}

}  // namespace weddle::sympchar
