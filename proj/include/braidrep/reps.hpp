#pragma once

// Burau and Lawrence-Krammer-Bigelow generators, and the representations
// obtained from them by the conjugation action on the first graded quotient
// of the congruence filtration, i.e. the adjoint action on sl_d.
//
// All matrices act on column vectors: column c of a generator matrix holds
// the coordinates of the image of basis element c, and a word evaluates to
// the ordered product of its letters' matrices.

#include <string>
#include <utility>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/ring.hpp"

namespace braidrep {

// Basis of sl_d: labels (i,j), i != j, denote e_ij; labels (i,i) with
// i < d denote e_ii - e_{i+1,i+1}. Off-diagonal labels come first in
// row-major order, then the diagonal ones.
struct SlBasis {
    int d = 0;
    std::vector<std::pair<int, int>> labels; // 1-based

    static SlBasis standard(int d);

    std::size_t size() const { return labels.size(); }
    std::size_t index_of(int i, int j) const;
    // "A12", "A11", ...
    std::string label_name(std::size_t index) const;
    // Index of the first diagonal label.
    std::size_t first_diagonal() const { return static_cast<std::size_t>(d * (d - 1)); }
};

// Coordinates of a traceless matrix in the basis. Throws if the trace is
// nonzero, which would mean the conjugate left sl_d.
template <class R>
std::vector<R> sl_coordinates(const Matrix<R>& traceless, const SlBasis& basis);

// Matrix of X -> M X Minv on sl_d in the given basis.
template <class R>
Matrix<R> sl_adjoint(const Matrix<R>& m, const Matrix<R>& minv, const SlBasis& basis);

template <class R>
struct Representation {
    int strands = 0;
    std::size_t dim = 0;
    std::vector<std::string> var_names; // empty for numeric representations
    std::vector<Matrix<R>> gens;        // gens[k] represents sigma_{k+1}
    std::vector<Matrix<R>> invs;

    Matrix<R> identity() const { return Matrix<R>::identity(dim, one_like(gens.front().sample())); }

    Matrix<R> generator_matrix(const Letter& l) const
    {
        const auto k = static_cast<std::size_t>(l.index - 1);
        return l.exponent > 0 ? gens[k] : invs[k];
    }

    Matrix<R> eval_word(const BraidWord& w) const
    {
        if (w.strands() != strands) {
            throw DomainError("word on " + std::to_string(w.strands()) + " strands evaluated in a representation of B_" +
                              std::to_string(strands));
        }
        Matrix<R> acc = identity();
        for (const auto& l : w.letters()) {
            acc = acc * generator_matrix(l);
        }
        return acc;
    }

    // Braid relations, commuting distant generators, and stored inverses.
    bool verify_relations() const
    {
        const std::size_t m = gens.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (!(gens[i] * invs[i]).is_identity()) {
                return false;
            }
        }
        for (std::size_t i = 0; i + 1 < m; ++i) {
            if (!(gens[i] * gens[i + 1] * gens[i] == gens[i + 1] * gens[i] * gens[i + 1])) {
                return false;
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 2; j < m; ++j) {
                if (!(gens[i] * gens[j] == gens[j] * gens[i])) {
                    return false;
                }
            }
        }
        return true;
    }
};

using SymbolicRep = Representation<LaurentPoly>;
using RationalRep = Representation<Rational>;
using IntegerRep = Representation<Integer>;

// Reduced Burau matrix of sigma_r over Z[t^{+-1}], (n-1) x (n-1).
Matrix<LaurentPoly> burau_gen(int n, int r);
// LKB matrix of sigma_k over Z[t^{+-1}, q^{+-1}] on x_12, x_13, ..., x_{n-1,n}.
Matrix<LaurentPoly> lkb_gen(int n, int k);

SymbolicRep burau_rep(int n);
SymbolicRep lkb_rep(int n);

// Entrywise substitution of exact rationals for the variables.
RationalRep specialize(const SymbolicRep& rep, std::span<const Rational> point);

// rho_n over Z[a^{+-1}], dimension n(n-2).
SymbolicRep rho_symbolic(int n);
// rho_n(alpha): Burau evaluated at t = alpha, then the adjoint action.
RationalRep rho_at(int n, const Rational& alpha);
// mu_n over Z[a^{+-1}, b^{+-1}], dimension C(n,2)^2 - 1.
SymbolicRep mu_symbolic(int n);
RationalRep mu_at(int n, const Rational& alpha, const Rational& beta);

// Integer matrix of mu_n(1,1)(sigma_k) built directly from the permutation
// tau_k: A_ij -> A_{tau(i),tau(j)}, and A_ii -> +-(telescoping sum of A_ll).
Matrix<Rational> mu_one_one(int n, int k);
// tau_k as a permutation of {1..C(n,2)} (1-based images).
Permutation lkb_tau(int n, int k);

// Rewrites every generator in the basis given by the columns of p.
template <class R>
Representation<R> change_basis(const Representation<R>& rep, const Matrix<R>& p);

// Columns (-A12, A11, -a A21) in the standard sl_2 coordinates (A12, A21, A11).
Matrix<LaurentPoly> tuba_wenzl_basis_symbolic();
Matrix<Rational> tuba_wenzl_basis_at(const Rational& alpha);

IntegerRep to_integer(const RationalRep& rep);

struct CongruenceReport {
    int level = 0;
    IdealSpec ideal;
    std::size_t matrix_size = 0;
};

// Minimum shift valuation of the entries of M - I.
CongruenceReport congruence_level(const Matrix<LaurentPoly>& m, const IdealSpec& ideal, int cap = 8);

std::size_t binomial2(int n);

} // namespace braidrep
