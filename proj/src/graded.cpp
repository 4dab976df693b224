#include "braidrep/graded.hpp"

#include <algorithm>

#include "braidrep/error.hpp"

namespace braidrep {

bool F2Matrix::is_zero() const
{
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

int F2Matrix::trace() const
{
    int t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t ^= (*this)(i, i);
    }
    return t;
}

std::string F2Matrix::support_string() const
{
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != 0) {
                out += out.empty() ? "" : " + ";
                out += "e" + std::to_string(i + 1) + std::to_string(j + 1);
            }
        }
    }
    return out.empty() ? "0" : out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DomainError("F_2 matrix shape mismatch");
    }
    F2Matrix out = *this;
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        out.bits_[k] ^= other.bits_[k];
    }
    return out;
}

F2Matrix f2_unit(std::size_t n, std::size_t i, std::size_t j)
{
    F2Matrix m(n, n);
    m(i - 1, j - 1) = 1;
    return m;
}

int two_adic_level(const Matrix<Integer>& m, int cap)
{
    if (!m.is_square()) {
        throw DomainError("two-adic level of non-square matrix");
    }
    int level = cap;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Integer e = m(i, j) - (i == j ? 1 : 0);
            if (sgn(e) != 0) {
                level = std::min(level, static_cast<int>(mpz_scan1(e.get_mpz_t(), 0)));
            }
        }
    }
    return level;
}

GradedImage gr_image(const Matrix<Integer>& m, int i)
{
    if (i < 1) {
        throw DomainError("graded level must be >= 1");
    }
    const int level = two_adic_level(m, i);
    if (level < i) {
        throw DomainError("matrix has two-adic level " + std::to_string(level) + " < " + std::to_string(i));
    }
    GradedImage g{i, F2Matrix(m.rows(), m.cols())};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Integer e = m(r, c) - (r == c ? 1 : 0);
            mpz_tdiv_q_2exp(e.get_mpz_t(), e.get_mpz_t(), static_cast<mp_bitcnt_t>(i));
            g.matrix(r, c) = mpz_odd_p(e.get_mpz_t()) ? 1 : 0;
        }
    }
    if (g.matrix.trace() != 0) {
        throw DomainError("graded image has nonzero trace over F_2");
    }
    return g;
}

IntegerRep rho_minus_one(int n)
{
    RationalRep rep = rho_at(n, Rational(-1));
    if (n == 3) {
        rep = change_basis(rep, tuba_wenzl_basis_at(Rational(-1)));
    }
    return to_integer(rep);
}

std::vector<Integer> kohno_ranks(int n, int depth)
{
    if (n < 2 || depth < 1) {
        throw DomainError("kohno ranks need n >= 2 and depth >= 1");
    }
    // Taking logarithms: sum_{i | m} i phi_i = sum_{j<n} j^m =: p_m.
    std::vector<Integer> phi(static_cast<std::size_t>(depth) + 1, 0);
    for (int m = 1; m <= depth; ++m) {
        Integer p = 0;
        for (int j = 1; j < n; ++j) {
            Integer jm;
            mpz_ui_pow_ui(jm.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(m));
            p += jm;
        }
        for (int i = 1; i < m; ++i) {
            if (m % i == 0) {
                p -= Integer(i) * phi[static_cast<std::size_t>(i)];
            }
        }
        if (p % m != 0) {
            throw DomainError("non-integral Kohno rank at degree " + std::to_string(m));
        }
        phi[static_cast<std::size_t>(m)] = p / m;
    }
    phi.erase(phi.begin());
    return phi;
}

int kohno_threshold(int n, const Integer& bound, int max_depth)
{
    const auto phi = kohno_ranks(n, max_depth);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] > bound) {
            return static_cast<int>(i) + 1;
        }
    }
    return 0;
}

namespace {

struct SearchNode {
    KernelCandidate record;
    Matrix<Integer> rho;
    Matrix<Integer> rho_inv;
    Matrix<LaurentPoly> burau;
    Matrix<LaurentPoly> burau_inv;
};

template <class R>
Matrix<R> comm(const Matrix<R>& u, const Matrix<R>& ui, const Matrix<R>& v, const Matrix<R>& vi)
{
    return u * v * ui * vi;
}

} // namespace

std::vector<KernelCandidate> kernel_search(int n, int depth, int budget, int cap)
{
    if (n < 3) {
        throw DomainError("kernel search needs n >= 3");
    }
    if (depth < 1 || budget < 0) {
        throw DomainError("kernel search needs depth >= 1 and budget >= 0");
    }
    const IntegerRep rho = rho_minus_one(n);
    const SymbolicRep burau = burau_rep(n);
    std::vector<SearchNode> nodes;
    auto finish = [&](SearchNode& node) {
        node.record.level = two_adic_level(node.rho, cap);
        node.record.gr_vanishing = node.record.level > node.record.depth;
        node.record.burau_trivial = node.burau.is_identity();
        nodes.push_back(std::move(node));
    };
    for (int i = 1; i < n && static_cast<int>(nodes.size()) < budget; ++i) {
        for (int j = i + 1; j <= n && static_cast<int>(nodes.size()) < budget; ++j) {
            BraidWord w = pure_gen(i, j, n);
            BraidWord wi = w.inverse();
            SearchNode node{{"B" + std::to_string(i) + std::to_string(j), w, 1, 0, false, false},
                            rho.eval_word(w), rho.eval_word(wi), burau.eval_word(w), burau.eval_word(wi)};
            finish(node);
        }
    }
    auto full = [&] { return static_cast<int>(nodes.size()) >= budget; };
    for (int d = 2; d <= depth && !full(); ++d) {
        const std::size_t existing = nodes.size();
        for (std::size_t a = 0; a < existing && !full(); ++a) {
            for (std::size_t b = a + 1; b < existing && !full(); ++b) {
                const SearchNode& u = nodes[a];
                const SearchNode& v = nodes[b];
                if (u.record.depth + v.record.depth != d) {
                    continue;
                }
                SearchNode node{{"[" + u.record.expression + "," + v.record.expression + "]",
                                 commutator(u.record.word, v.record.word), d, 0, false, false},
                                comm(u.rho, u.rho_inv, v.rho, v.rho_inv),
                                comm(v.rho, v.rho_inv, u.rho, u.rho_inv),
                                comm(u.burau, u.burau_inv, v.burau, v.burau_inv),
                                comm(v.burau, v.burau_inv, u.burau, u.burau_inv)};
                finish(node);
            }
        }
    }
    std::vector<KernelCandidate> out;
    out.reserve(nodes.size());
    for (auto& node : nodes) {
        out.push_back(std::move(node.record));
    }
    return out;
}

} // namespace braidrep
