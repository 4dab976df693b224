#pragma once

// Mod-2^i congruence filtration of rho_n(-1): levels, graded images over
// F_2, Kohno ranks of the pure braid group, and a budgeted search through
// iterated commutators of pure braid generators.

#include <cstdint>
#include <string>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/reps.hpp"

namespace braidrep {

class F2Matrix {
public:
    F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t& operator()(std::size_t i, std::size_t j) { return bits_[i * cols_ + j]; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j]; }

    bool is_zero() const;
    int trace() const;
    // Sum of elementary matrices, 1-based, row-major: "e21 + e23"; "0" if zero.
    std::string support_string() const;

    F2Matrix operator+(const F2Matrix& other) const;
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> bits_;
};

// e_ij over F_2, 1-based.
F2Matrix f2_unit(std::size_t n, std::size_t i, std::size_t j);

// Largest i <= cap with M = I mod 2^i; 0 when M != I mod 2.
int two_adic_level(const Matrix<Integer>& m, int cap = 16);

struct GradedImage {
    int level = 0;
    F2Matrix matrix{0, 0};
};

// ((M - I) / 2^i) mod 2. Throws when the level of M is below i, or when the
// image has nonzero trace.
GradedImage gr_image(const Matrix<Integer>& m, int i);

// rho_n(-1) as integer matrices. For n = 3 the basis is the Tuba-Wenzl one,
// (-A12, A11, A21); otherwise the standard sl_{n-1} basis.
IntegerRep rho_minus_one(int n);

// phi_1..phi_depth from prod_i (1 - t^i)^{phi_i} = prod_{j<n} (1 - j t).
std::vector<Integer> kohno_ranks(int n, int depth);

// Smallest i <= max_depth with phi_i(n) > bound, or 0 if none.
int kohno_threshold(int n, const Integer& bound, int max_depth = 20);

struct KernelCandidate {
    std::string expression; // "[[B12,B13],B23]"
    BraidWord word;
    int depth = 0;
    int level = 0;
    bool gr_vanishing = false;  // level > depth
    bool burau_trivial = false; // symbolic reduced Burau matrix is I
};

// Pure generators B_ij in lexicographic (i,j) order, then for each formal
// depth d = 2..depth the commutators [u,v] of earlier records with
// depth(u) + depth(v) = d and u enumerated before v, in shortlex order of
// the operand pair. Stops after `budget` records.
std::vector<KernelCandidate> kernel_search(int n, int depth, int budget, int cap = 16);

} // namespace braidrep
