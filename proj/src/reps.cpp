#include "braidrep/reps.hpp"

#include <algorithm>

#include "braidrep/error.hpp"

namespace braidrep {

std::size_t binomial2(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

SlBasis SlBasis::standard(int d)
{
    if (d < 2) {
        throw DomainError("sl_d needs d >= 2");
    }
    SlBasis b;
    b.d = d;
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            if (i != j) {
                b.labels.emplace_back(i, j);
            }
        }
    }
    for (int i = 1; i < d; ++i) {
        b.labels.emplace_back(i, i);
    }
    return b;
}

std::size_t SlBasis::index_of(int i, int j) const
{
    auto it = std::find(labels.begin(), labels.end(), std::make_pair(i, j));
    if (it == labels.end()) {
        throw DomainError("no basis label A" + std::to_string(i) + "," + std::to_string(j));
    }
    return static_cast<std::size_t>(it - labels.begin());
}

std::string SlBasis::label_name(std::size_t index) const
{
    const auto& [i, j] = labels.at(index);
    if (d < 10) {
        return "A" + std::to_string(i) + std::to_string(j);
    }
    return "A" + std::to_string(i) + "," + std::to_string(j);
}

template <class R>
std::vector<R> sl_coordinates(const Matrix<R>& traceless, const SlBasis& basis)
{
    const auto d = static_cast<std::size_t>(basis.d);
    if (traceless.rows() != d || traceless.cols() != d) {
        throw DomainError("matrix size does not match sl basis");
    }
    if (!is_zero(trace(traceless))) {
        throw DomainError("internal error: conjugate is not traceless");
    }
    // e_ii - e_{i+1,i+1} telescopes, so the diagonal coordinate of label i
    // is the partial sum of the first i diagonal entries.
    std::vector<R> partial;
    R running = zero_like(traceless.sample());
    for (std::size_t l = 0; l + 1 < d; ++l) {
        running += traceless(l, l);
        partial.push_back(running);
    }
    std::vector<R> coords;
    coords.reserve(basis.size());
    for (const auto& [i, j] : basis.labels) {
        if (i != j) {
            coords.push_back(traceless(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
        } else {
            coords.push_back(partial[static_cast<std::size_t>(i - 1)]);
        }
    }
    return coords;
}

namespace {

// out += sign * (column col of m) (row row of minv)
template <class R>
void add_outer(Matrix<R>& out, const Matrix<R>& m, std::size_t col, const Matrix<R>& minv, std::size_t row, bool negate)
{
    const std::size_t d = m.rows();
    for (std::size_t r = 0; r < d; ++r) {
        const R& x = m(r, col);
        if (is_zero(x)) {
            continue;
        }
        for (std::size_t s = 0; s < d; ++s) {
            const R& y = minv(row, s);
            if (is_zero(y)) {
                continue;
            }
            if (negate) {
                out(r, s) -= x * y;
            } else {
                out(r, s) += x * y;
            }
        }
    }
}

} // namespace

template <class R>
Matrix<R> sl_adjoint(const Matrix<R>& m, const Matrix<R>& minv, const SlBasis& basis)
{
    const auto d = static_cast<std::size_t>(basis.d);
    if (!m.is_square() || m.rows() != d || !minv.is_square() || minv.rows() != d) {
        throw DomainError("adjoint action needs " + std::to_string(d) + "x" + std::to_string(d) + " matrices");
    }
    const R zero = zero_like(m.sample());
    Matrix<R> out(basis.size(), basis.size(), zero);
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto& [i, j] = basis.labels[c];
        Matrix<R> conj(d, d, zero);
        const auto ii = static_cast<std::size_t>(i - 1);
        const auto jj = static_cast<std::size_t>(j - 1);
        if (i != j) {
            add_outer(conj, m, ii, minv, jj, false);
        } else {
            add_outer(conj, m, ii, minv, ii, false);
            add_outer(conj, m, ii + 1, minv, ii + 1, true);
        }
        std::vector<R> coords = sl_coordinates(conj, basis);
        for (std::size_t r = 0; r < coords.size(); ++r) {
            out(r, c) = std::move(coords[r]);
        }
    }
    return out;
}

template <class R>
Representation<R> change_basis(const Representation<R>& rep, const Matrix<R>& p)
{
    if (!p.is_square() || p.rows() != rep.dim) {
        throw DomainError("change of basis matrix has the wrong size");
    }
    Matrix<R> pinv = inverse_unit(p);
    Representation<R> out = rep;
    for (std::size_t k = 0; k < rep.gens.size(); ++k) {
        out.gens[k] = pinv * rep.gens[k] * p;
        out.invs[k] = pinv * rep.invs[k] * p;
    }
    return out;
}

template std::vector<LaurentPoly> sl_coordinates(const Matrix<LaurentPoly>&, const SlBasis&);
template std::vector<Rational> sl_coordinates(const Matrix<Rational>&, const SlBasis&);
template std::vector<Integer> sl_coordinates(const Matrix<Integer>&, const SlBasis&);
template Matrix<LaurentPoly> sl_adjoint(const Matrix<LaurentPoly>&, const Matrix<LaurentPoly>&, const SlBasis&);
template Matrix<Rational> sl_adjoint(const Matrix<Rational>&, const Matrix<Rational>&, const SlBasis&);
template Matrix<Integer> sl_adjoint(const Matrix<Integer>&, const Matrix<Integer>&, const SlBasis&);
template SymbolicRep change_basis(const SymbolicRep&, const Matrix<LaurentPoly>&);
template RationalRep change_basis(const RationalRep&, const Matrix<Rational>&);

Matrix<LaurentPoly> burau_gen(int n, int r)
{
    if (n < 2 || r < 1 || r > n - 1) {
        throw DomainError("Burau generator sigma_" + std::to_string(r) + " out of range for n = " + std::to_string(n));
    }
    const auto d = static_cast<std::size_t>(n - 1);
    const LaurentPoly t = LaurentPoly::variable(1, 0);
    auto m = Matrix<LaurentPoly>::identity(d, LaurentPoly::constant(1, 1));
    const auto row = static_cast<std::size_t>(r - 1);
    if (r > 1) {
        m(row, row - 1) = t;
    }
    m(row, row) = -t;
    if (r < n - 1) {
        m(row, row + 1) = LaurentPoly::constant(1, 1);
    }
    return m;
}

namespace {

// Position of x_ij (i < j) in the order x_12, x_13, ..., x_1n, x_23, ...
std::size_t pair_index(int n, int i, int j)
{
    std::size_t idx = 0;
    for (int a = 1; a < i; ++a) {
        idx += static_cast<std::size_t>(n - a);
    }
    return idx + static_cast<std::size_t>(j - i - 1);
}

} // namespace

Matrix<LaurentPoly> lkb_gen(int n, int k)
{
    if (n < 2 || k < 1 || k > n - 1) {
        throw DomainError("LKB generator sigma_" + std::to_string(k) + " out of range for n = " + std::to_string(n));
    }
    const std::size_t dim = binomial2(n);
    const LaurentPoly one = LaurentPoly::constant(2, 1);
    const LaurentPoly q = LaurentPoly::variable(2, 1);
    auto tq = [](int tpow, int qpow) { return LaurentPoly::monomial(2, {tpow, qpow}); };
    const LaurentPoly qm1 = q - one;

    Matrix<LaurentPoly> m(dim, dim, LaurentPoly(2));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const std::size_t col = pair_index(n, i, j);
            auto add = [&](int a, int b, const LaurentPoly& v) { m(pair_index(n, a, b), col) += v; };
            if (i == k && j == k + 1) {
                add(k, k + 1, tq(1, 2));
            } else if (j == k && i < k) {
                add(i, k, one - q);
                add(i, k + 1, q);
            } else if (j == k + 1 && i < k) {
                add(i, k, one);
                add(k, k + 1, tq(1, k - i + 1) * qm1);
            } else if (i == k && j > k + 1) {
                add(k, k + 1, tq(1, 1) * qm1);
                add(k + 1, j, q);
            } else if (i == k + 1 && j > k + 1) {
                add(k, j, one);
                add(k + 1, j, one - q);
            } else if (i < k && j > k + 1) {
                add(i, j, one);
                add(k, k + 1, tq(1, k - i) * qm1 * qm1);
            } else {
                add(i, j, one);
            }
        }
    }
    return m;
}

namespace {

SymbolicRep build_symbolic(int n, Matrix<LaurentPoly> (*gen)(int, int), std::vector<std::string> names)
{
    SymbolicRep rep;
    rep.strands = n;
    rep.var_names = std::move(names);
    for (int k = 1; k < n; ++k) {
        auto g = gen(n, k);
        rep.invs.push_back(inverse_unit(g));
        rep.gens.push_back(std::move(g));
    }
    rep.dim = rep.gens.front().rows();
    return rep;
}

template <class R>
Representation<R> adjoint_rep(const Representation<R>& base, std::vector<std::string> names)
{
    const SlBasis basis = SlBasis::standard(static_cast<int>(base.dim));
    Representation<R> rep;
    rep.strands = base.strands;
    rep.dim = basis.size();
    rep.var_names = std::move(names);
    for (std::size_t k = 0; k < base.gens.size(); ++k) {
        rep.gens.push_back(sl_adjoint(base.gens[k], base.invs[k], basis));
        rep.invs.push_back(sl_adjoint(base.invs[k], base.gens[k], basis));
    }
    return rep;
}

} // namespace

SymbolicRep burau_rep(int n) { return build_symbolic(n, burau_gen, {"t"}); }

SymbolicRep lkb_rep(int n) { return build_symbolic(n, lkb_gen, {"t", "q"}); }

RationalRep specialize(const SymbolicRep& rep, std::span<const Rational> point)
{
    RationalRep out;
    out.strands = rep.strands;
    out.dim = rep.dim;
    for (std::size_t k = 0; k < rep.gens.size(); ++k) {
        out.gens.push_back(evaluate_matrix(rep.gens[k], point));
        out.invs.push_back(evaluate_matrix(rep.invs[k], point));
    }
    return out;
}

SymbolicRep rho_symbolic(int n)
{
    if (n < 3) {
        throw DomainError("rho_n needs n >= 3");
    }
    return adjoint_rep(burau_rep(n), {"a"});
}

RationalRep rho_at(int n, const Rational& alpha)
{
    if (n < 3) {
        throw DomainError("rho_n needs n >= 3");
    }
    if (sgn(alpha) == 0) {
        throw DomainError("alpha must be nonzero");
    }
    const Rational point[1] = {alpha};
    return adjoint_rep(specialize(burau_rep(n), point), {});
}

SymbolicRep mu_symbolic(int n)
{
    if (n < 3) {
        throw DomainError("mu_n needs n >= 3 (mu_2 is zero-dimensional)");
    }
    return adjoint_rep(lkb_rep(n), {"a", "b"});
}

RationalRep mu_at(int n, const Rational& alpha, const Rational& beta)
{
    if (n < 3) {
        throw DomainError("mu_n needs n >= 3 (mu_2 is zero-dimensional)");
    }
    if (sgn(alpha) == 0 || sgn(beta) == 0) {
        throw DomainError("alpha and beta must be nonzero");
    }
    const Rational point[2] = {alpha, beta};
    return adjoint_rep(specialize(lkb_rep(n), point), {});
}

Permutation lkb_tau(int n, int k)
{
    if (n < 2 || k < 1 || k > n - 1) {
        throw DomainError("tau_k needs 1 <= k <= n-1");
    }
    std::vector<int> images(binomial2(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            int a = i;
            int b = j;
            if (j == k && i < k) {
                b = k + 1;
            } else if (j == k + 1 && i < k) {
                b = k;
            } else if (i == k && j > k + 1) {
                a = k + 1;
            } else if (i == k + 1 && j > k + 1) {
                a = k;
            }
            images[pair_index(n, i, j)] = static_cast<int>(pair_index(n, a, b)) + 1;
        }
    }
    return Permutation(std::move(images));
}

Matrix<Rational> mu_one_one(int n, int k)
{
    const Permutation tau = lkb_tau(n, k);
    const SlBasis basis = SlBasis::standard(static_cast<int>(binomial2(n)));
    Matrix<Rational> m(basis.size(), basis.size(), Rational(0));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto& [i, j] = basis.labels[c];
        if (i != j) {
            m(basis.index_of(tau(i), tau(j)), c) = 1;
            continue;
        }
        const int lo = tau(i);
        const int hi = tau(i + 1);
        if (lo < hi) {
            for (int l = lo; l < hi; ++l) {
                m(basis.index_of(l, l), c) = 1;
            }
        } else {
            for (int l = hi; l < lo; ++l) {
                m(basis.index_of(l, l), c) = -1;
            }
        }
    }
    return m;
}

Matrix<LaurentPoly> tuba_wenzl_basis_symbolic()
{
    const LaurentPoly zero(1);
    const LaurentPoly one = LaurentPoly::constant(1, 1);
    const LaurentPoly a = LaurentPoly::variable(1, 0);
    // standard coordinates: (A12, A21, A11)
    return Matrix<LaurentPoly>::from_rows({{-one, zero, zero}, {zero, zero, -a}, {zero, one, zero}});
}

Matrix<Rational> tuba_wenzl_basis_at(const Rational& alpha)
{
    const Rational point[1] = {alpha};
    return evaluate_matrix(tuba_wenzl_basis_symbolic(), point);
}

IntegerRep to_integer(const RationalRep& rep)
{
    auto conv = [](const Rational& x) {
        if (x.get_den() != 1) {
            throw DomainError("representation has non-integral entry " + rational_to_string(x));
        }
        return Integer(x.get_num());
    };
    IntegerRep out;
    out.strands = rep.strands;
    out.dim = rep.dim;
    for (std::size_t k = 0; k < rep.gens.size(); ++k) {
        out.gens.push_back(rep.gens[k].map(conv));
        out.invs.push_back(rep.invs[k].map(conv));
    }
    return out;
}

CongruenceReport congruence_level(const Matrix<LaurentPoly>& m, const IdealSpec& ideal, int cap)
{
    if (!m.is_square()) {
        throw DomainError("congruence level needs a square matrix");
    }
    ideal.validate(m.sample().nvars());
    Matrix<LaurentPoly> diff = m - Matrix<LaurentPoly>::identity(m.rows(), one_like(m.sample()));
    int level = cap;
    for (const auto& entry : diff.entries()) {
        if (!entry.is_zero()) {
            level = std::min(level, shift_valuation(entry, ideal, cap));
        }
        if (level == 0) {
            break;
        }
    }
    return CongruenceReport{level, ideal, m.rows()};
}

} // namespace braidrep
