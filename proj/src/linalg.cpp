#include "braidrep/linalg.hpp"

namespace braidrep {

std::vector<std::size_t> rref_in_place(Matrix<Rational>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(pivot, j), m(row, j));
            }
        }
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
            m(row, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0) {
                continue;
            }
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (sgn(m(row, j)) != 0) {
                    m(i, j) -= f * m(row, j);
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<RationalVector> kernel_basis(const Matrix<Rational>& m)
{
    Matrix<Rational> r = m;
    std::vector<std::size_t> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RationalVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[pivots[k]] = -r(k, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix<Rational>& m)
{
    Matrix<Rational> r = m;
    return rref_in_place(r).size();
}

Matrix<Rational> columns_to_matrix(const std::vector<RationalVector>& vectors, std::size_t ambient)
{
    Matrix<Rational> m(ambient, vectors.size(), Rational(0));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != ambient) {
            throw DomainError("vector length does not match ambient dimension");
        }
        for (std::size_t i = 0; i < ambient; ++i) {
            m(i, j) = vectors[j][i];
        }
    }
    return m;
}

Matrix<Rational> evaluate_matrix(const Matrix<LaurentPoly>& m, std::span<const Rational> point)
{
    return m.map([&](const LaurentPoly& p) { return p.evaluate(point); });
}

} // namespace braidrep
