#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "weddle/algebra/poly.hpp"
#include "weddle/algebra/scalar.hpp"

namespace weddle::algebra {

// Dense row-major matrix over any commutative ring T (scalars or SparsePoly).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n, const T& zero = T(0), const T& one = T(1)) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_like());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Delete one row and one column.
    Matrix minor(std::size_t r, std::size_t c) const {
        Matrix m(rows_ - 1, cols_ - 1, zero_like());
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == c) continue;
                m(mi, mj++) = (*this)(i, j);
            }
            ++mi;
        }
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product dimension mismatch");
        Matrix r(a.rows_, b.cols_, a.zero_like());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero_entry(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = T(r(i, j) + T(aik * b(k, j)));
            }
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = T(r.data_[i] + b.data_[i]);
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = T(r.data_[i] - b.data_[i]);
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x = T(s * x);
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw ShapeError("matrix-vector dimension mismatch");
        std::vector<T> r(rows_, zero_like());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] = T(r[i] + T((*this)(i, j) * v[j]));
        return r;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!is_zero_entry(x)) return false;
        return true;
    }
    bool is_symmetric() const { return square() && (*this - transpose()).is_zero(); }
    bool is_skew() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!is_zero_entry((*this)(i, i))) return false;
        return (*this + transpose()).is_zero();
    }

    const std::vector<T>& data() const { return data_; }

    // A zero of the same ring (carries the variable count for polynomials).
    T zero_like() const {
        if constexpr (requires(const T& t) { t.nvars(); }) {
            if (!data_.empty()) return T(data_.front().nvars());
        }
        return T(0);
    }

    static bool is_zero_entry(const T& x) {
        if constexpr (requires(const T& t) { t.is_zero(); }) return x.is_zero();
        else return algebra::is_zero(x);
    }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix dimensions differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << "]\n";
    }
    return os;
}

template <class F>
using PolyMatrix = Matrix<SparsePoly<F>>;

template <class F>
using Vec = std::vector<F>;

// ---------------------------------------------------------------------------
// Elimination over a field.

template <class F>
void require_field(const Matrix<F>& m) {
    for (const auto& x : m.data())
        if (!algebra::is_zero(x)) {
            ScalarTraits<F>::require_field(x);
            return;
        }
}

template <class F>
struct Echelon {
    Matrix<F> form;                   // row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
    int swaps = 0;                    // row transpositions performed
};

// Fraction-free (Bareiss) elimination. Entries of the result are minors of the
// input; divisions by the previous pivot are exact.
template <class F>
Echelon<F> echelon_fraction_free(Matrix<F> m) {
    require_field(m);
    Echelon<F> out;
    F prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
            ++out.swaps;
        }
        const F p = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const F f = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                if (is_zero(f) && is_zero(m(i, j))) continue;
                m(i, j) = F(F(p * m(i, j) - f * m(r, j)) / prev);
            }
            m(i, c) = F(0);
        }
        // Rows with a zero in column c were still scaled by p/prev above.
        prev = p;
        out.pivots.push_back(c);
        ++r;
    }
    out.form = std::move(m);
    return out;
}

// Gauss-Jordan with divisions: reduced row echelon form.
template <class F>
Echelon<F> rref_naive(Matrix<F> m) {
    require_field(m);
    Echelon<F> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
            ++out.swaps;
        }
        const F inv = F(F(1) / m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F(m(r, j) * inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = F(m(i, j) - F(f * m(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.form = std::move(m);
    return out;
}

// Reduced form obtained from a fraction-free echelon form by back substitution.
template <class F>
Matrix<F> rref_from_echelon(const Echelon<F>& e) {
    Matrix<F> m = e.form;
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
        const std::size_t c = e.pivots[r];
        const F inv = F(F(1) / m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = F(m(r, j) * inv);
        for (std::size_t i = 0; i < r; ++i) {
            if (is_zero(m(i, c))) continue;
            const F f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F(m(i, j) - F(f * m(r, j)));
        }
    }
    for (std::size_t i = e.pivots.size(); i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F(0);
    return m;
}

// Kernel basis from any row echelon form: one vector per free column with that
// coordinate 1 and the other free coordinates 0.
template <class F>
std::vector<Vec<F>> kernel_from_echelon(const Echelon<F>& e) {
    const Matrix<F>& m = e.form;
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    // One taken from the matrix, so runtime-modulus scalars come out bound.
    F one(1);
    for (std::size_t i = 0; i < m.rows() && i < e.pivots.size(); ++i)
        if (!is_zero(m(i, e.pivots[i]))) {
            one = F(m(i, e.pivots[i]) / m(i, e.pivots[i]));
            break;
        }
    std::vector<Vec<F>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec<F> x(n, F(0));
        x[f] = one;
        for (std::size_t r = e.pivots.size(); r-- > 0;) {
            const std::size_t c = e.pivots[r];
            F s(0);
            for (std::size_t j = c + 1; j < n; ++j)
                if (!is_zero(m(r, j)) && !is_zero(x[j])) s = F(s + F(m(r, j) * x[j]));
            x[c] = F(F(-s) / m(r, c));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m) {
    return kernel_from_echelon(echelon_fraction_free(m));
}

template <class F>
std::vector<Vec<F>> nullspace_naive(const Matrix<F>& m) {
    return kernel_from_echelon(rref_naive(m));
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return echelon_fraction_free(m).pivots.size();
}

template <class F>
F determinant(const Matrix<F>& m) {
    if (!m.square()) throw ShapeError("determinant of non-square matrix");
    if (m.rows() == 0) return F(1);
    Echelon<F> e = echelon_fraction_free(m);
    if (e.pivots.size() < m.rows()) return F(0);
    F d = e.form(m.rows() - 1, m.cols() - 1);
    return (e.swaps % 2) ? F(-d) : d;
}

// Cofactor expansion; works over any commutative ring (used for PolyMatrix).
template <class T>
T determinant_expand(const Matrix<T>& m) {
    if (!m.square()) throw ShapeError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T acc = m.zero_like();
    for (std::size_t j = 0; j < n; ++j) {
        if (Matrix<T>::is_zero_entry(m(0, j))) continue;
        T term = T(m(0, j) * determinant_expand(m.minor(0, j)));
        acc = (j % 2) ? T(acc - term) : T(acc + term);
    }
    return acc;
}

template <class T>
void require_skew(const Matrix<T>& m) {
    if (!m.square()) throw ShapeError("pfaffian of non-square matrix");
    if (m.rows() % 2) throw ShapeError("pfaffian of odd-dimensional matrix");
    if (!m.is_skew()) throw ShapeError("pfaffian of non-skew matrix");
}

// Expansion along the first row; any commutative ring.
template <class T>
T pfaffian_expand(const Matrix<T>& m) {
    require_skew(m);
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 2) return m(0, 1);
    T acc = m.zero_like();
    for (std::size_t j = 1; j < n; ++j) {
        if (Matrix<T>::is_zero_entry(m(0, j))) continue;
        Matrix<T> sub(n - 2, n - 2, m.zero_like());
        std::vector<std::size_t> keep;
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) keep.push_back(k);
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = 0; b < keep.size(); ++b) sub(a, b) = m(keep[a], keep[b]);
        T term = T(m(0, j) * pfaffian_expand(sub));
        acc = (j % 2) ? T(acc + term) : T(acc - term);
    }
    return acc;
}

// Skew elimination over a field, O(n^3).
template <class F>
F pfaffian(Matrix<F> m) {
    require_skew(m);
    require_field(m);
    const std::size_t n = m.rows();
    F pf(1);
    auto swap_index = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
    };
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t piv = k + 1;
        while (piv < n && is_zero(m(k, piv))) ++piv;
        if (piv == n) return F(0);
        if (piv != k + 1) {
            swap_index(piv, k + 1);
            pf = F(-pf);
        }
        const F p = m(k, k + 1);
        pf = F(pf * p);
        for (std::size_t i = k + 2; i < n; ++i) {
            // Clear row k: index i -= (m(k,i)/p) * index k+1.
            const F c = F(m(k, i) / p);
            if (!is_zero(c)) {
                for (std::size_t j = 0; j < n; ++j) m(j, i) = F(m(j, i) - F(c * m(j, k + 1)));
                for (std::size_t j = 0; j < n; ++j) m(i, j) = F(m(i, j) - F(c * m(k + 1, j)));
            }
            // Clear row k+1: index i -= (m(k+1,i)/m(k+1,k)) * index k.
            const F d = F(m(k + 1, i) / F(-p));
            if (!is_zero(d)) {
                for (std::size_t j = 0; j < n; ++j) m(j, i) = F(m(j, i) - F(d * m(j, k)));
                for (std::size_t j = 0; j < n; ++j) m(i, j) = F(m(i, j) - F(d * m(k, j)));
            }
        }
    }
    return pf;
}

// Classical adjoint via cofactors; any commutative ring with determinant_fn.
template <class F>
Matrix<F> adjugate(const Matrix<F>& m) {
    if (!m.square()) throw ShapeError("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> adj(n, n, m.zero_like());
    if (n == 1) {
        adj(0, 0) = F(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            F c;
            if constexpr (requires(const F& t) { t.nvars(); }) c = determinant_expand(m.minor(i, j));
            else c = determinant(m.minor(i, j));
            adj(j, i) = ((i + j) % 2) ? F(-c) : c;
        }
    return adj;
}

// Evaluate every entry of a polynomial matrix at a point.
template <class F>
Matrix<F> evaluate(const PolyMatrix<F>& m, const std::vector<F>& x) {
    Matrix<F> r(m.rows(), m.cols(), F(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(x);
    return r;
}

}  // namespace weddle::algebra
