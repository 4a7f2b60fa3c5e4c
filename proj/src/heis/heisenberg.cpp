#include "weddle/heis/heisenberg.hpp"

#include <random>
#include <set>
#include <sstream>

namespace weddle::heis {

namespace {

int m3(long long v) {
    long long r = v % 3;
    return static_cast<int>(r < 0 ? r + 3 : r);
}

std::size_t pow3(int k) {
    std::size_t r = 1;
    for (int i = 0; i < k; ++i) r *= 3;
    return r;
}

void check_genus(const HeisenbergElement& a, const HeisenbergElement& b) {
    if (a.genus() != b.genus()) throw ShapeError("Heisenberg elements of different genus");
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return m3(s);
}

}  // namespace

HeisenbergElement::HeisenbergElement(int t_, std::vector<int> x_, std::vector<int> xs_)
    : t(m3(t_)), x(std::move(x_)), xs(std::move(xs_)) {
    if (x.size() != xs.size()) throw ShapeError("x and x* must have the same length");
    for (auto& v : x) v = m3(v);
    for (auto& v : xs) v = m3(v);
}

Z3Vec HeisenbergElement::u() const {
    Z3Vec r = x;
    r.insert(r.end(), xs.begin(), xs.end());
    return r;
}

HeisenbergElement HeisenbergElement::from_u(int t, const Z3Vec& u) {
    if (u.size() % 2) throw ShapeError("u must have even length");
    const std::size_t g = u.size() / 2;
    return HeisenbergElement(t, std::vector<int>(u.begin(), u.begin() + g), std::vector<int>(u.begin() + g, u.end()));
}

HeisenbergElement HeisenbergElement::identity(int g) {
    return HeisenbergElement(0, std::vector<int>(g, 0), std::vector<int>(g, 0));
}

std::string to_string(const HeisenbergElement& h) {
    std::ostringstream os;
    os << '(' << h.t << ";";
    for (std::size_t i = 0; i < h.x.size(); ++i) os << (i ? "," : "") << h.x[i];
    os << ';';
    for (std::size_t i = 0; i < h.xs.size(); ++i) os << (i ? "," : "") << h.xs[i];
    os << ')';
    return os.str();
}

HeisenbergElement h_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
    check_genus(a, b);
    std::vector<int> x(a.x.size()), xs(a.x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = a.x[i] + b.x[i];
        xs[i] = a.xs[i] + b.xs[i];
    }
    return HeisenbergElement(a.t + b.t + dot(b.xs, a.x), x, xs);
}

HeisenbergElement h_inv(const HeisenbergElement& a) {
    // (t,x,x*)(s,-x,-x*) = (t + s - x*.x, 0, 0)
    std::vector<int> x(a.x.size()), xs(a.x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = -a.x[i];
        xs[i] = -a.xs[i];
    }
    return HeisenbergElement(-a.t + dot(a.xs, a.x), x, xs);
}

std::vector<HeisenbergElement> enumerate_group(int g) {
    std::vector<HeisenbergElement> gens;
    for (int i = 0; i < g; ++i) {
        std::vector<int> e(g, 0), z(g, 0);
        e[i] = 1;
        gens.emplace_back(0, e, z);
        gens.emplace_back(0, z, e);
    }
    std::vector<HeisenbergElement> elems{HeisenbergElement::identity(g)};
    std::set<std::vector<int>> seen;
    auto key = [](const HeisenbergElement& h) {
        std::vector<int> k = h.u();
        k.push_back(h.t);
        return k;
    };
    seen.insert(key(elems.front()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& s : gens) {
            auto n = h_mul(elems[i], s);
            if (seen.insert(key(n)).second) elems.push_back(n);
        }
    return elems;
}

std::size_t index_of(const Z3Vec& u) {
    std::size_t idx = 0;
    for (std::size_t i = u.size(); i-- > 0;) idx = idx * 3 + static_cast<std::size_t>(m3(u[i]));
    return idx;
}

Z3Vec vector_of(std::size_t idx, int g) {
    Z3Vec u(2 * g);
    for (int i = 0; i < 2 * g; ++i) {
        u[i] = static_cast<int>(idx % 3);
        idx /= 3;
    }
    return u;
}

int beta(const Z3Vec& u, const Z3Vec& v) {
    if (u.size() != v.size()) throw ShapeError("vectors of different length");
    const std::size_t g = u.size() / 2;
    long long s = 0;
    for (std::size_t i = 0; i < g; ++i) s += static_cast<long long>(v[g + i]) * u[i];
    return m3(s);
}

int weil_pairing(const Z3Vec& u, const Z3Vec& v) {
    if (u.size() != v.size()) throw ShapeError("vectors of different length");
    const std::size_t g = u.size() / 2;
    long long s = 0;
    for (std::size_t i = 0; i < g; ++i) s += static_cast<long long>(u[g + i]) * v[i] - static_cast<long long>(v[g + i]) * u[i];
    return m3(s);
}

int commutator_exponent(const HeisenbergElement& a, const HeisenbergElement& b) {
    auto ba = h_mul(b, a), ab = h_mul(a, b);
    if (ba.x != ab.x || ba.xs != ab.xs) throw InconsistencyError("commutator is not central");
    return m3(ba.t - ab.t);
}

// ---------------------------------------------------------------------------

HeisAutomorphism::HeisAutomorphism(SymplecticMat M, std::vector<int> multiplier) : M_(std::move(M)), f_(std::move(multiplier)) {
    if (M_.modulus() != kLevel) throw InvariantViolation("Heisenberg automorphisms need a matrix mod 3");
    if (!M_.is_symplectic()) throw InvariantViolation("matrix is not symplectic mod 3");
    if (f_.size() != pow3(2 * M_.genus())) throw ShapeError("multiplier table has wrong size");
    for (auto& v : f_) v = m3(v);
}

HeisenbergElement HeisAutomorphism::apply(const HeisenbergElement& h) const {
    if (h.genus() != genus()) throw ShapeError("genus mismatch");
    const Z3Vec u = h.u();
    return HeisenbergElement::from_u(h.t + f(u), M_.apply(u));
}

bool HeisAutomorphism::satisfies_cocycle() const {
    const int g = genus();
    const std::size_t N = pow3(2 * g);
    std::vector<Z3Vec> us(N), mus(N);
    for (std::size_t i = 0; i < N; ++i) {
        us[i] = vector_of(i, g);
        mus[i] = M_.apply(us[i]);
    }
    if (f_[0] != 0) return false;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            Z3Vec s(2 * g);
            for (int k = 0; k < 2 * g; ++k) s[k] = us[i][k] + us[j][k];
            const int lhs = m3(f_[index_of(s)] - f_[i] - f_[j]);
            const int rhs = m3(beta(mus[i], mus[j]) - beta(us[i], us[j]));
            if (lhs != rhs) return false;
        }
    return true;
}

HeisAutomorphism compose(const HeisAutomorphism& a, const HeisAutomorphism& b) {
    if (a.genus() != b.genus()) throw ShapeError("genus mismatch");
    const int g = a.genus();
    std::vector<int> f(b.f_.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Z3Vec u = vector_of(i, g);
        f[i] = b.f_[i] + a.f(b.M_.apply(u));
    }
    return HeisAutomorphism(a.M_ * b.M_, f);
}

HeisAutomorphism identity_automorphism(int g) {
    return HeisAutomorphism(SymplecticMat::identity(g, kLevel), std::vector<int>(pow3(2 * g), 0));
}

HeisAutomorphism zeta(const Z3Vec& a) {
    if (a.size() % 2) throw ShapeError("a must have even length");
    const int g = static_cast<int>(a.size() / 2);
    std::vector<int> f(pow3(2 * g));
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = weil_pairing(vector_of(i, g), a);
    return HeisAutomorphism(SymplecticMat::identity(g, kLevel), f);
}

HeisAutomorphism d_minus_one(int g) {
    std::vector<int> e(4 * g * g, 0);
    for (int i = 0; i < 2 * g; ++i) e[i * 2 * g + i] = -1;
    return HeisAutomorphism(SymplecticMat(g, kLevel, e), std::vector<int>(pow3(2 * g), 0));
}

HeisAutomorphism lift_symplectic(const SymplecticMat& M) {
    if (M.modulus() != kLevel) throw InvariantViolation("lift needs a matrix mod 3");
    if (!M.is_symplectic()) throw InvariantViolation("matrix is not symplectic mod 3");
    const int g = M.genus();
    std::vector<int> f(pow3(2 * g));
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Z3Vec u = vector_of(i, g);
        const Z3Vec mu = M.apply(u);
        f[i] = 2 * (beta(mu, mu) - beta(u, u));
    }
    return HeisAutomorphism(M, f);
}

// ---------------------------------------------------------------------------

int sigma_index(int s1, int s2) { return 3 * m3(s1) + m3(s2); }

std::array<int, 2> sigma_of(int idx) { return {idx / 3, idx % 3}; }

int neg_index(int idx) {
    auto s = sigma_of(idx);
    return sigma_index(-s[0], -s[1]);
}

const std::array<int, 5>& orbit_representatives() {
    static const std::array<int, 5> reps{sigma_index(0, 0), sigma_index(0, 1), sigma_index(1, 0), sigma_index(1, 1),
                                         sigma_index(1, 2)};
    return reps;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    MonomialMatrix r;
    for (int i = 0; i < kDim; ++i) {
        r.col[i] = b.col[a.col[i]];
        r.exp[i] = m3(a.exp[i] + b.exp[a.col[i]]);
    }
    return r;
}

Matrix<QOmega> to_matrix(const MonomialMatrix& m) {
    Matrix<QOmega> r(kDim, kDim, QOmega(0));
    for (int i = 0; i < kDim; ++i) r(i, m.col[i]) = QOmega::omega_pow(m.exp[i]);
    return r;
}

MonomialMatrix schrodinger_monomial(const HeisenbergElement& h) {
    if (h.genus() != 2) throw ShapeError("the Schroedinger representation is implemented for g = 2");
    MonomialMatrix m;
    for (int i = 0; i < kDim; ++i) {
        auto s = sigma_of(i);
        m.col[i] = sigma_index(s[0] + h.x[0], s[1] + h.x[1]);
        m.exp[i] = m3(h.t + h.xs[0] * s[0] + h.xs[1] * s[1]);
    }
    return m;
}

Matrix<QOmega> schrodinger(const HeisenbergElement& h) { return to_matrix(schrodinger_monomial(h)); }

Matrix<QOmega> involution_j() {
    MonomialMatrix m;
    for (int i = 0; i < kDim; ++i) {
        m.col[i] = neg_index(i);
        m.exp[i] = 0;
    }
    return to_matrix(m);
}

std::vector<algebra::Vec<QOmega>> eigenbasis_plus() {
    std::vector<algebra::Vec<QOmega>> basis;
    for (int s : orbit_representatives()) {
        algebra::Vec<QOmega> v(kDim, QOmega(0));
        v[s] = QOmega(1);
        v[neg_index(s)] = QOmega(1);
        basis.push_back(v);
    }
    return basis;
}

std::vector<algebra::Vec<QOmega>> eigenbasis_minus() {
    std::vector<algebra::Vec<QOmega>> basis;
    for (int s : orbit_representatives()) {
        if (s == 0) continue;
        algebra::Vec<QOmega> v(kDim, QOmega(0));
        v[s] = QOmega(1);
        v[neg_index(s)] = QOmega(-1);
        basis.push_back(v);
    }
    return basis;
}

Matrix<QOmega> normalize_projective(const Matrix<QOmega>& m) {
    for (const auto& x : m.data())
        if (!x.is_zero()) return x.inverse() * m;
    throw InvariantViolation("zero matrix has no projective class");
}

bool projectively_equal(const Matrix<QOmega>& a, const Matrix<QOmega>& b) {
    return normalize_projective(a) == normalize_projective(b);
}

IntertwinerResult intertwiner(const HeisAutomorphism& phi) {
    if (phi.genus() != 2) throw ShapeError("intertwiners are implemented for g = 2");
    constexpr int N = kDim * kDim;
    Matrix<QOmega> sys(4 * N, N, QOmega(0));
    int row = 0;
    for (int gi = 0; gi < 4; ++gi) {
        Z3Vec u(4, 0);
        u[gi] = 1;
        const auto h = HeisenbergElement::from_u(0, u);
        const auto U = schrodinger_monomial(h);
        const auto V = schrodinger_monomial(phi.apply(h));
        std::array<int, kDim> inv{};
        for (int k = 0; k < kDim; ++k) inv[U.col[k]] = k;
        // (T U)[i][j] - (V T)[i][j] = T[i][k] w^{U.exp[k]} - w^{V.exp[i]} T[V.col[i]][j], k = U^{-1}(j).
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j, ++row) {
                const int k = inv[j];
                sys(row, i * kDim + k) += QOmega::omega_pow(U.exp[k]);
                sys(row, V.col[i] * kDim + j) -= QOmega::omega_pow(V.exp[i]);
            }
    }
    // Two terms per row: Gauss-Jordan only touches rows with a nonzero in the
    // pivot column, which keeps this sparse system fast. Both elimination paths
    // return the same canonical kernel basis.
    auto ker = algebra::nullspace_naive(sys);
    IntertwinerResult res;
    res.solution_dim = ker.size();
    if (ker.size() != 1)
        throw InconsistencyError("intertwiner solution space has dimension " + std::to_string(ker.size()));
    Matrix<QOmega> T(kDim, kDim, QOmega(0));
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) T(i, j) = ker[0][i * kDim + j];
    res.T = normalize_projective(T);
    return res;
}

IntertwinerResult intertwiner(const SymplecticMat& M) { return intertwiner(lift_symplectic(M)); }

namespace {

Matrix<QOmega> restrict_block(const Matrix<QOmega>& T, const std::vector<algebra::Vec<QOmega>>& basis, int sign) {
    if (T.rows() != kDim || T.cols() != kDim) throw ShapeError("expected a 9x9 matrix");
    std::vector<int> reps;
    for (int s : orbit_representatives())
        if (sign > 0 || s != 0) reps.push_back(s);
    Matrix<QOmega> R(basis.size(), basis.size(), QOmega(0));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto v = T.apply(basis[c]);
        for (int s = 0; s < kDim; ++s) {
            const QOmega expect = sign > 0 ? v[s] : -v[s];
            if (!(v[neg_index(s)] == expect))
                throw InvariantViolation("matrix does not preserve the j-eigenspace");
        }
        for (std::size_t r = 0; r < reps.size(); ++r) R(r, c) = v[reps[r]];
    }
    return R;
}

}  // namespace

Matrix<QOmega> upsilon_plus(const Matrix<QOmega>& T) { return restrict_block(T, eigenbasis_plus(), 1); }

Matrix<QOmega> upsilon_minus(const Matrix<QOmega>& T) { return restrict_block(T, eigenbasis_minus(), -1); }

bool preserves_eigenspaces(const Matrix<QOmega>& T) {
    try {
        upsilon_plus(T);
        upsilon_minus(T);
        return true;
    } catch (const InvariantViolation&) {
        return false;
    }
}

// ---------------------------------------------------------------------------

HeisenbergReport verify_heisenberg(unsigned long long seed, std::size_t projective_pairs) {
    HeisenbergReport rep;
    const auto elems = enumerate_group(2);
    std::vector<MonomialMatrix> U;
    U.reserve(elems.size());
    for (const auto& h : elems) U.push_back(schrodinger_monomial(h));

    rep.group_law = elems.size() == 243;
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) {
            ++rep.pairs_checked;
            if (!(schrodinger_monomial(h_mul(elems[a], elems[b])) == U[a] * U[b])) {
                if (rep.group_law)
                    rep.counterexamples.push_back("U not multiplicative at " + to_string(elems[a]) + " * " +
                                                  to_string(elems[b]));
                rep.group_law = false;
            }
        }
    for (int t = 0; t < 3; ++t) {
        const auto c = schrodinger(HeisenbergElement(t, {0, 0}, {0, 0}));
        if (!(c == QOmega::omega_pow(t) * Matrix<QOmega>::identity(kDim))) {
            rep.group_law = false;
            rep.counterexamples.push_back("center does not act by scalars");
        }
    }
    {
        std::set<std::pair<std::array<int, kDim>, std::array<int, kDim>>> distinct;
        for (const auto& m : U) distinct.insert({m.col, m.exp});
        if (distinct.size() != elems.size()) {
            rep.group_law = false;
            rep.counterexamples.push_back("U is not faithful");
        }
    }

    const auto j = involution_j();
    const auto dm1 = d_minus_one(2);
    rep.j_intertwining = (j * j == Matrix<QOmega>::identity(kDim));
    for (const auto& h : elems)
        if (!(j * schrodinger(h) * j == schrodinger(dm1.apply(h)))) {
            if (rep.j_intertwining) rep.counterexamples.push_back("j U j != U(D_-1 h) at " + to_string(h));
            rep.j_intertwining = false;
        }

    const auto I = Matrix<QOmega>::identity(kDim);
    const auto plus = algebra::nullspace(j - I), minus = algebra::nullspace(j + I);
    rep.eigensplit = plus.size() == 5 && minus.size() == 4;

    const auto& gens = sympchar::symplectic_group(2, 3).generators;
    rep.schur_dims = true;
    rep.block_split = true;
    for (const auto& M : gens) {
        try {
            auto r = intertwiner(M);
            rep.generator_solution_dims.push_back(r.solution_dim);
            if (!preserves_eigenspaces(r.T)) {
                rep.block_split = false;
                rep.counterexamples.push_back("intertwiner does not preserve V+/V- for\n" + to_string(M));
            }
        } catch (const InconsistencyError& e) {
            rep.schur_dims = false;
            rep.counterexamples.push_back(std::string(e.what()) + " for\n" + to_string(M));
        }
    }

    const auto& grp = sympchar::symplectic_group(2, 3);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, grp.elements.size() - 1);
    rep.projectivity = true;
    for (std::size_t k = 0; k < projective_pairs; ++k) {
        const auto& M = grp.elements[pick(rng)];
        const auto& N = grp.elements[pick(rng)];
        const auto TM = intertwiner(M).T, TN = intertwiner(N).T, TMN = intertwiner(M * N).T;
        if (!projectively_equal(TMN, TM * TN)) {
            rep.projectivity = false;
            rep.counterexamples.push_back("T_MN not proportional to T_M T_N for\n" + to_string(M) + "and\n" +
                                          to_string(N));
        }
        if (!preserves_eigenspaces(TMN)) rep.block_split = false;
    }

    // Automorphisms over the identity are additive characters c.u; each must be
    // a zeta_a, and a -> zeta_a must be injective.
    std::set<std::vector<int>> zetas;
    for (std::size_t a = 0; a < 81; ++a) zetas.insert(zeta(vector_of(a, 2)).multiplier());
    std::size_t matched = 0;
    for (std::size_t c = 0; c < 81; ++c) {
        const Z3Vec cv = vector_of(c, 2);
        std::vector<int> f(81);
        for (std::size_t i = 0; i < 81; ++i) {
            const Z3Vec u = vector_of(i, 2);
            long long s = 0;
            for (int k = 0; k < 4; ++k) s += static_cast<long long>(cv[k]) * u[k];
            f[i] = m3(s);
        }
        HeisAutomorphism phi(SymplecticMat::identity(2, kLevel), f);
        if (phi.satisfies_cocycle() && zetas.count(phi.multiplier())) ++matched;
    }
    rep.sequence = zetas.size() == 81 && matched == 81;
    if (!rep.sequence) rep.counterexamples.push_back("automorphisms over the identity are not all of the form zeta_a");
    return rep;
}

}  // namespace weddle::heis
