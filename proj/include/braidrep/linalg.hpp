#pragma once

// Dense exact matrices over LaurentPoly, Rational or Integer.
//
// Everything ring-generic (products, Berkowitz characteristic polynomial,
// determinant, adjugate inverse) lives here as templates; the field-only
// routines (row reduction, kernels, rank) are in linalg.cpp.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/error.hpp"
#include "braidrep/ring.hpp"

namespace braidrep {

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& fill)
        : rows_(rows), cols_(cols), entries_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n, const R& one)
    {
        Matrix m(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = one;
        }
        return m;
    }

    // Builds from nested rows; all rows must share a length.
    static Matrix from_rows(const std::vector<std::vector<R>>& rows)
    {
        if (rows.empty() || rows[0].empty()) {
            throw DomainError("matrix needs at least one row and column");
        }
        Matrix m(rows.size(), rows[0].size(), zero_like(rows[0][0]));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) {
                throw DomainError("ragged matrix rows");
            }
            for (std::size_t j = 0; j < m.cols_; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    R& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<R>& entries() const { return entries_; }

    // A sample element for zero_like / one_like when the ring carries context.
    const R& sample() const { return entries_.front(); }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    Matrix& operator+=(const Matrix& rhs)
    {
        check_same_shape(rhs);
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            entries_[k] += rhs.entries_[k];
        }
        return *this;
    }

    Matrix& operator-=(const Matrix& rhs)
    {
        check_same_shape(rhs);
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            entries_[k] -= rhs.entries_[k];
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) {
            throw DomainError("shape mismatch in product: " + a.shape() + " * " + b.shape());
        }
        Matrix c(a.rows_, b.cols_, zero_like(a.sample()));
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a(i, k);
                if (is_zero(aik)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const R& bkj = b(k, j);
                    if (!is_zero(bkj)) {
                        c(i, j) += aik * bkj;
                    }
                }
            }
        }
        return c;
    }

    Matrix scaled(const R& s) const
    {
        Matrix out = *this;
        for (auto& e : out.entries_) {
            e = e * s;
        }
        return out;
    }

    Matrix transposed() const
    {
        Matrix out(cols_, rows_, zero_like(sample()));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    bool is_identity() const
    {
        if (!is_square()) {
            return false;
        }
        const R one = one_like(sample());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (i == j ? !((*this)(i, j) == one) : !is_zero((*this)(i, j))) {
                    return false;
                }
            }
        }
        return true;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))>
    {
        using S = decltype(f(std::declval<const R&>()));
        std::vector<std::vector<S>> rows(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                rows[i].push_back(f((*this)(i, j)));
            }
        }
        return Matrix<S>::from_rows(rows);
    }

private:
    void check_same_shape(const Matrix& rhs) const
    {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
            throw DomainError("shape mismatch: " + shape() + " vs " + rhs.shape());
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> entries_;
};

template <class R>
std::vector<R> mat_vec(const Matrix<R>& m, const std::vector<R>& v)
{
    if (m.cols() != v.size()) {
        throw DomainError("shape mismatch in matrix-vector product");
    }
    std::vector<R> out(m.rows(), zero_like(m.sample()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_zero(m(i, j)) && !is_zero(v[j])) {
                out[i] += m(i, j) * v[j];
            }
        }
    }
    return out;
}

// Monic characteristic polynomial det(xI - A); coeffs[k] multiplies x^k.
template <class R>
struct CharPoly {
    std::vector<R> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }

    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs == b.coeffs; }
};

// Berkowitz: grows the characteristic polynomial over trailing principal
// submatrices. With B the trailing r x r block and [[a, R], [C, B]] the
// next one, p_{r+1}(x) = (x - a) p_r(x) - R adj(xI - B) C, and the adjugate
// term expands through the products R B^k C. No division is ever needed.
template <class R>
CharPoly<R> char_poly(const Matrix<R>& a)
{
    if (!a.is_square()) {
        throw DomainError("characteristic polynomial of non-square matrix " + a.shape());
    }
    const std::size_t n = a.rows();
    const R zero = zero_like(a.sample());
    const R one = one_like(a.sample());

    // c holds p_r with descending powers: c[0] = 1, c[l] multiplies x^(r-l).
    std::vector<R> c{one};
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t top = n - 1 - r; // new leading row/column
        const R& diag = a(top, top);
        // m[k] = R B^k C for the trailing block B = rows/cols top+1..n-1
        std::vector<R> m;
        m.reserve(r);
        std::vector<R> v(r, zero);
        for (std::size_t i = 0; i < r; ++i) {
            v[i] = a(top + 1 + i, top);
        }
        for (std::size_t k = 0; k < r; ++k) {
            R dot = zero;
            for (std::size_t i = 0; i < r; ++i) {
                if (!is_zero(v[i]) && !is_zero(a(top, top + 1 + i))) {
                    dot += a(top, top + 1 + i) * v[i];
                }
            }
            m.push_back(std::move(dot));
            if (k + 1 < r) {
                std::vector<R> next(r, zero);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t j = 0; j < r; ++j) {
                        const R& bij = a(top + 1 + i, top + 1 + j);
                        if (!is_zero(bij) && !is_zero(v[j])) {
                            next[i] += bij * v[j];
                        }
                    }
                }
                v = std::move(next);
            }
        }
        std::vector<R> d(r + 2, zero);
        d[0] = one;
        for (std::size_t l = 1; l <= r + 1; ++l) {
            R value = l <= r ? c[l] : zero;
            value -= diag * c[l - 1];
            for (std::size_t i = 0; i + 2 <= l; ++i) {
                value -= c[i] * m[l - 2 - i];
            }
            d[l] = std::move(value);
        }
        c = std::move(d);
    }
    CharPoly<R> out;
    out.coeffs.assign(c.rbegin(), c.rend());
    return out;
}

template <class R>
R det(const Matrix<R>& a)
{
    if (!a.is_square()) {
        throw DomainError("determinant of non-square matrix " + a.shape());
    }
    CharPoly<R> p = char_poly(a);
    return a.rows() % 2 == 0 ? p.coeffs[0] : R(-p.coeffs[0]);
}

// f(M) by Horner's rule.
template <class R>
Matrix<R> eval_poly_at(const std::vector<R>& coeffs, const Matrix<R>& m)
{
    if (!m.is_square()) {
        throw DomainError("polynomial of non-square matrix");
    }
    const R one = one_like(m.sample());
    Matrix<R> acc(m.rows(), m.cols(), zero_like(one));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            acc(i, i) += *it;
        }
    }
    return acc;
}

// Inverse via Cayley-Hamilton: with p(x) = sum p_k x^k the characteristic
// polynomial, A^{-1} = -p_0^{-1} * sum_{k>=1} p_k A^{k-1}. Requires det(A)
// (equivalently p_0) to be a unit of the ring.
template <class R>
Matrix<R> inverse_unit(const Matrix<R>& a)
{
    if (!a.is_square()) {
        throw DomainError("inverse of non-square matrix " + a.shape());
    }
    CharPoly<R> p = char_poly(a);
    auto inv_p0 = unit_inverse(p.coeffs[0]);
    if (!inv_p0) {
        throw DomainError("determinant is not a unit; matrix is not invertible over its ring");
    }
    std::vector<R> tail(p.coeffs.begin() + 1, p.coeffs.end());
    Matrix<R> b = eval_poly_at(tail, a);
    R factor = -*inv_p0;
    return b.scaled(factor);
}

template <class R>
R trace(const Matrix<R>& a)
{
    if (!a.is_square()) {
        throw DomainError("trace of non-square matrix");
    }
    R t = zero_like(a.sample());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        t += a(i, i);
    }
    return t;
}

// Field-only routines over Q.
using RationalVector = std::vector<Rational>;

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix<Rational>& m);

// Basis of the right null space, one vector per free column.
std::vector<RationalVector> kernel_basis(const Matrix<Rational>& m);

std::size_t rank(const Matrix<Rational>& m);

// Columns of the result are the given vectors.
Matrix<Rational> columns_to_matrix(const std::vector<RationalVector>& vectors, std::size_t ambient);

Matrix<Rational> evaluate_matrix(const Matrix<LaurentPoly>& m, std::span<const Rational> point);

} // namespace braidrep
