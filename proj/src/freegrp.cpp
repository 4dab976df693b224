#include "braidrep/freegrp.hpp"

#include <algorithm>
#include <map>

#include "braidrep/error.hpp"

namespace braidrep {

namespace {

void trim(RationalPoly& p)
{
    while (p.size() > 1 && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

Rational horner(const RationalPoly& p, const Rational& x)
{
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

// p / (x - r), assuming p(r) = 0.
RationalPoly deflate(const RationalPoly& p, const Rational& r)
{
    RationalPoly q(p.size() - 1);
    Rational carry = 0;
    for (std::size_t k = p.size() - 1; k >= 1; --k) {
        carry = carry * r + p[k];
        q[k - 1] = carry;
    }
    return q;
}

// Prime factorization by trial division; refuses cofactors it cannot split.
std::map<Integer, int> factor(Integer n)
{
    std::map<Integer, int> out;
    n = abs(n);
    for (Integer p = 2; p * p <= n; ++p) {
        if (p > 2000000) {
            if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
                throw DomainError("coefficient too large for rational-root extraction");
            }
            break;
        }
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) {
        ++out[n];
    }
    return out;
}

std::vector<Integer> divisors(const Integer& n)
{
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factor(n)) {
        const std::size_t base = out.size();
        Integer power = 1;
        for (int k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * power);
            }
        }
    }
    return out;
}

RationalVector normalized_point(const ProjectiveSubspace& s)
{
    if (!s.is_point()) {
        throw DomainError("attracting subspace has dimension " + std::to_string(s.dim()) + ", expected a point");
    }
    return s.basis().front();
}

Rational dot(const RationalVector& a, const RationalVector& b)
{
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

} // namespace

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b)
{
    RationalPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

RationalPoly linear_power(const Rational& r, int m)
{
    RationalPoly out{Rational(1)};
    for (int k = 0; k < m; ++k) {
        out = poly_mul(out, RationalPoly{Rational(-r), Rational(1)});
    }
    return out;
}

std::string poly_to_string(const RationalPoly& p, const std::string& var)
{
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (sgn(p[k]) == 0) {
            continue;
        }
        Rational c = p[k];
        const bool negative = sgn(c) < 0;
        if (negative) {
            c = -c;
        }
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = c == 1 && k > 0;
        if (!unit) {
            out += rational_to_string(c);
            if (k > 0) {
                out += "*";
            }
        }
        if (k > 0) {
            out += var;
            if (k > 1) {
                out += "^" + std::to_string(k);
            }
        }
    }
    return out.empty() ? "0" : out;
}

std::vector<RootMultiplicity> rational_roots(const RationalPoly& input)
{
    RationalPoly p = input;
    trim(p);
    if (p.size() == 1 && sgn(p[0]) == 0) {
        throw DomainError("the zero polynomial has no root multiset");
    }
    std::vector<RootMultiplicity> out;
    std::size_t zeros = 0;
    while (zeros < p.size() && sgn(p[zeros]) == 0) {
        ++zeros;
    }
    if (zeros > 0) {
        out.push_back({Rational(0), static_cast<int>(zeros)});
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));
    }
    if (p.size() > 1) {
        Integer denom_lcm = 1;
        for (const auto& c : p) {
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
        }
        const Integer lead = Rational(p.back() * denom_lcm).get_num();
        const Integer constant = Rational(p.front() * denom_lcm).get_num();
        const auto numerators = divisors(constant);
        const auto denominators = divisors(lead);
        for (const auto& num : numerators) {
            for (const auto& den : denominators) {
                for (int s : {1, -1}) {
                    if (p.size() == 1) {
                        break;
                    }
                    Rational r(Integer(s) * num, den);
                    r.canonicalize();
                    if (r.get_den() != den) {
                        continue; // already tried in lowest terms
                    }
                    int mult = 0;
                    while (p.size() > 1 && sgn(horner(p, r)) == 0) {
                        p = deflate(p, r);
                        ++mult;
                    }
                    if (mult > 0) {
                        out.push_back({r, mult});
                    }
                }
            }
        }
    }
    if (p.size() > 1) {
        throw UnsupportedSpectrum("unsupported spectrum: residual factor " + poly_to_string(p) +
                                  " has no rational root; the certifier requires a rational spectrum");
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
    return out;
}

DominantSplit dominant_split(const RationalPoly& charpoly)
{
    DominantSplit split;
    split.spectrum = rational_roots(charpoly);
    Rational top = 0;
    for (const auto& rm : split.spectrum) {
        top = std::max(top, Rational(abs(rm.root)));
    }
    split.f1 = RationalPoly{Rational(1)};
    split.f2 = RationalPoly{Rational(1)};
    for (const auto& rm : split.spectrum) {
        RationalPoly factor = linear_power(rm.root, rm.multiplicity);
        if (abs(rm.root) == top) {
            split.omega.push_back(rm.root);
            split.f1 = poly_mul(split.f1, factor);
        } else {
            split.f2 = poly_mul(split.f2, factor);
        }
    }
    // Restore the leading coefficient of a non-monic input.
    RationalPoly lead{charpoly.back()};
    split.f2 = poly_mul(split.f2, lead);
    return split;
}

DominantSplit dominant_split(const Matrix<Rational>& m) { return dominant_split(char_poly(m).coeffs); }

ProjectiveSubspace::ProjectiveSubspace(std::size_t ambient, const std::vector<RationalVector>& spanning)
    : ambient_(ambient)
{
    if (spanning.empty()) {
        return;
    }
    Matrix<Rational> rows(spanning.size(), ambient, Rational(0));
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        if (spanning[i].size() != ambient) {
            throw DomainError("vector length does not match ambient dimension");
        }
        for (std::size_t j = 0; j < ambient; ++j) {
            rows(i, j) = spanning[i][j];
        }
    }
    const auto pivots = rref_in_place(rows);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        RationalVector v(ambient);
        for (std::size_t j = 0; j < ambient; ++j) {
            v[j] = rows(i, j);
        }
        basis_.push_back(std::move(v));
    }
}

bool ProjectiveSubspace::contains(const RationalVector& v) const
{
    std::vector<RationalVector> vectors = basis_;
    vectors.push_back(v);
    return rank(columns_to_matrix(vectors, ambient_)) == basis_.size();
}

bool ProjectiveSubspace::meets_trivially(const ProjectiveSubspace& other) const
{
    if (other.ambient_ != ambient_) {
        throw DomainError("subspaces of different ambient spaces");
    }
    std::vector<RationalVector> vectors = basis_;
    vectors.insert(vectors.end(), other.basis_.begin(), other.basis_.end());
    if (vectors.empty()) {
        return true;
    }
    return rank(columns_to_matrix(vectors, ambient_)) == basis_.size() + other.basis_.size();
}

AttractRepel attract_repel(const Matrix<Rational>& m, const DominantSplit& split)
{
    return {ProjectiveSubspace(m.rows(), kernel_basis(eval_poly_at(split.f1, m))),
            ProjectiveSubspace(m.rows(), kernel_basis(eval_poly_at(split.f2, m)))};
}

AttractRepel attract_repel(const Matrix<Rational>& m) { return attract_repel(m, dominant_split(m)); }

PingPongReport certify(const Matrix<Rational>& x, const Matrix<Rational>& y)
{
    if (!x.is_square() || x.shape() != y.shape()) {
        throw DomainError("ping-pong needs two square matrices of the same size");
    }
    const std::array<Matrix<Rational>, 4> players{x, inverse_unit(x), y, inverse_unit(y)};
    PingPongReport report;
    for (std::size_t i = 0; i < 4; ++i) {
        report.splits[i] = dominant_split(players[i]);
        report.witnesses.push_back(attract_repel(players[i], report.splits[i]));
    }
    const auto& w = report.witnesses;
    report.points_ok = std::all_of(w.begin(), w.end(), [](const AttractRepel& ar) { return ar.attract.is_point(); });
    auto avoids = [&](std::size_t a, std::size_t b) {
        return w[a].attract.meets_trivially(w[b].repel) && w[a].attract.meets_trivially(w[b + 1].repel);
    };
    report.cond2_ok = avoids(0, 2) && avoids(1, 2);
    report.cond3_ok = avoids(2, 0) && avoids(3, 0);
    return report;
}

int QuadraticSurd::compare(const Rational& k) const
{
    const Rational a = rational - k;
    const int sa = sgn(a);
    const int sb = sgn(radicand) == 0 ? 0 : sgn(coeff);
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    const Rational lhs = a * a;
    const Rational rhs = coeff * coeff * radicand;
    if (lhs == rhs) {
        return 0;
    }
    return lhs > rhs ? sa : sb;
}

QuadraticSurd QuadraticSurd::normalized() const
{
    if (sgn(coeff) == 0 || sgn(radicand) == 0) {
        return {rational, 0, 0};
    }
    // sqrt(p/q) = sqrt(p q) / q
    Integer n = radicand.get_num() * radicand.get_den();
    Rational c = coeff / Rational(radicand.get_den());
    for (Integer f = 2; f * f <= n && f < 1000000; ++f) {
        while (n % (f * f) == 0) {
            n /= f * f;
            c *= f;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        return {rational + c * root, 0, 0};
    }
    return {rational, c, Rational(n)};
}

std::string QuadraticSurd::to_string() const
{
    std::string out = rational_to_string(rational);
    if (sgn(coeff) != 0 && sgn(radicand) != 0) {
        out += sgn(coeff) < 0 ? " - " : " + ";
        out += rational_to_string(abs(coeff)) + "*sqrt(" + rational_to_string(radicand) + ")";
    }
    return out;
}

RemarkDistances remark_distance(const Matrix<Rational>& x, const Matrix<Rational>& y)
{
    const RationalVector u1 = normalized_point(attract_repel(x).attract);
    const RationalVector u2 = normalized_point(attract_repel(y).attract);
    const Rational n1 = dot(u1, u1);
    const Rational n2 = dot(u2, u2);
    const Rational radicand = n1 * n2;
    // |w/|u1| - u2/|u2||^2 with w = Y^k u1
    auto distance = [&](const RationalVector& w) {
        return QuadraticSurd{dot(w, w) / n1 + 1, Rational(-2 * dot(w, u2) / radicand), radicand}.normalized();
    };
    const RationalVector w1 = mat_vec(y, u1);
    const RationalVector w2 = mat_vec(y, w1);
    return {distance(w1), distance(w2)};
}

} // namespace braidrep
