#include "braidrep/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "braidrep/error.hpp"

namespace braidrep {

namespace {

bool exp_less(const Term& x, const Term& y) { return x.exp < y.exp; }

// Sorts, merges equal exponents and drops zero coefficients.
std::vector<Term> canonicalize(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), exp_less);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& term : terms) {
        if (!out.empty() && out.back().exp == term.exp) {
            out.back().coeff += term.coeff;
        } else {
            if (!out.empty() && sgn(out.back().coeff) == 0) {
                out.pop_back();
            }
            out.push_back(std::move(term));
        }
    }
    if (!out.empty() && sgn(out.back().coeff) == 0) {
        out.pop_back();
    }
    return out;
}

ExponentVec add_exp(const ExponentVec& x, const ExponentVec& y) { return {x[0] + y[0], x[1] + y[1]}; }

} // namespace

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars)
{
    if (nvars < 1 || nvars > 2) {
        throw DomainError("Laurent polynomials support 1 or 2 variables, got " + std::to_string(nvars));
    }
}

LaurentPoly LaurentPoly::constant(int nvars, const Integer& c) { return monomial(nvars, {0, 0}, c); }

LaurentPoly LaurentPoly::monomial(int nvars, ExponentVec exp, const Integer& c)
{
    LaurentPoly p(nvars);
    if (nvars == 1 && exp[1] != 0) {
        throw DomainError("exponent for a missing variable");
    }
    if (sgn(c) != 0) {
        p.terms_.push_back({exp, c});
    }
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index)
{
    if (index < 0 || index >= nvars) {
        throw DomainError("variable index out of range");
    }
    ExponentVec e{0, 0};
    e[index] = 1;
    return monomial(nvars, e, 1);
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> terms)
{
    LaurentPoly p(nvars);
    for (const auto& t : terms) {
        if (nvars == 1 && t.exp[1] != 0) {
            throw DomainError("exponent for a missing variable");
        }
    }
    p.terms_ = canonicalize(std::move(terms));
    return p;
}

bool LaurentPoly::is_one() const
{
    return terms_.size() == 1 && terms_[0].exp == ExponentVec{0, 0} && terms_[0].coeff == 1;
}

void LaurentPoly::check_compatible(const LaurentPoly& rhs) const
{
    if (nvars_ != rhs.nvars_) {
        throw DomainError("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                          std::to_string(rhs.nvars_));
    }
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& t : out.terms_) {
        t.coeff = -t.coeff;
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    check_compatible(rhs);
    if (rhs.terms_.empty()) {
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto i = terms_.begin();
    auto j = rhs.terms_.begin();
    while (i != terms_.end() || j != rhs.terms_.end()) {
        if (j == rhs.terms_.end() || (i != terms_.end() && i->exp < j->exp)) {
            merged.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->exp < i->exp) {
            merged.push_back(*j++);
        } else {
            Integer c = i->coeff + j->coeff;
            if (sgn(c) != 0) {
                merged.push_back({i->exp, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs)
{
    lhs.check_compatible(rhs);
    LaurentPoly out(lhs.nvars_);
    if (lhs.terms_.empty() || rhs.terms_.empty()) {
        return out;
    }
    // A monomial factor shifts every exponent uniformly, so order is kept.
    if (lhs.terms_.size() == 1 || rhs.terms_.size() == 1) {
        const auto& mono = lhs.terms_.size() == 1 ? lhs.terms_[0] : rhs.terms_[0];
        const auto& other = lhs.terms_.size() == 1 ? rhs.terms_ : lhs.terms_;
        out.terms_.reserve(other.size());
        for (const auto& t : other) {
            out.terms_.push_back({add_exp(t.exp, mono.exp), t.coeff * mono.coeff});
        }
        return out;
    }
    std::vector<Term> prod;
    prod.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& x : lhs.terms_) {
        for (const auto& y : rhs.terms_) {
            prod.push_back({add_exp(x.exp, y.exp), x.coeff * y.coeff});
        }
    }
    out.terms_ = canonicalize(std::move(prod));
    return out;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs)
{
    if (lhs.nvars_ != rhs.nvars_ || lhs.terms_.size() != rhs.terms_.size()) {
        return false;
    }
    for (std::size_t k = 0; k < lhs.terms_.size(); ++k) {
        if (lhs.terms_[k].exp != rhs.terms_[k].exp || lhs.terms_[k].coeff != rhs.terms_[k].coeff) {
            return false;
        }
    }
    return true;
}

LaurentPoly LaurentPoly::pow(unsigned k) const
{
    LaurentPoly result = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

std::optional<UnitMonomial> LaurentPoly::as_unit() const
{
    if (terms_.size() != 1) {
        return std::nullopt;
    }
    const auto& t = terms_[0];
    if (t.coeff == 1) {
        return UnitMonomial{1, t.exp};
    }
    if (t.coeff == -1) {
        return UnitMonomial{-1, t.exp};
    }
    return std::nullopt;
}

Rational rational_pow(const Rational& base, int exponent)
{
    if (exponent < 0) {
        if (sgn(base) == 0) {
            throw DomainError("negative power of zero");
        }
        Rational inv = 1 / base;
        return rational_pow(inv, -exponent);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    r.canonicalize();
    return r;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const
{
    if (point.size() != static_cast<std::size_t>(nvars_)) {
        throw DomainError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                          std::to_string(nvars_));
    }
    for (const auto& x : point) {
        if (sgn(x) == 0) {
            throw DomainError("cannot evaluate a Laurent polynomial at a zero coordinate");
        }
    }
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (int k = 0; k < nvars_; ++k) {
            if (t.exp[k] != 0) {
                v *= rational_pow(point[k], t.exp[k]);
            }
        }
        sum += v;
    }
    return sum;
}

std::string LaurentPoly::to_string(std::span<const std::string> names) const
{
    static const std::string defaults[2] = {"t", "q"};
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Highest exponents first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Integer c = it->coeff;
        bool negative = sgn(c) < 0;
        if (negative) {
            c = -c;
        }
        if (first) {
            if (negative) {
                os << "-";
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (int k = 0; k < nvars_; ++k) {
            if (it->exp[k] == 0) {
                continue;
            }
            const std::string& name = k < static_cast<int>(names.size()) ? names[k] : defaults[k];
            if (!mono.empty()) {
                mono += "*";
            }
            mono += name;
            if (it->exp[k] != 1) {
                mono += "^" + std::to_string(it->exp[k]);
            }
        }
        if (mono.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << mono;
        } else {
            os << c.get_str() << "*" << mono;
        }
    }
    return os.str();
}

std::optional<LaurentPoly> unit_inverse(const LaurentPoly& x)
{
    auto u = x.as_unit();
    if (!u) {
        return std::nullopt;
    }
    return LaurentPoly::monomial(x.nvars(), {-u->exp[0], -u->exp[1]}, u->sign);
}

std::optional<Rational> unit_inverse(const Rational& x)
{
    if (sgn(x) == 0) {
        return std::nullopt;
    }
    return Rational(1 / x);
}

std::optional<Integer> unit_inverse(const Integer& x)
{
    if (x == 1 || x == -1) {
        return x;
    }
    return std::nullopt;
}

IdealSpec IdealSpec::single(int var, const Rational& center) { return IdealSpec{{{var, center}}}; }

IdealSpec IdealSpec::pair(const Rational& center0, const Rational& center1)
{
    return IdealSpec{{{0, center0}, {1, center1}}};
}

void IdealSpec::validate(int nvars) const
{
    if (generators.empty() || generators.size() > 2) {
        throw DomainError("an ideal needs 1 or 2 generators");
    }
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto& g = generators[k];
        if (g.var < 0 || g.var >= nvars) {
            throw DomainError("ideal generator refers to variable " + std::to_string(g.var) +
                              " outside the ring");
        }
        if (sgn(g.center) == 0) {
            throw DomainError("ideal center must be nonzero (variables are units)");
        }
        if (k == 1 && generators[0].var == g.var) {
            throw DomainError("ideal generators must use distinct variables");
        }
    }
}

int shift_valuation(const LaurentPoly& p, const IdealSpec& ideal, int cap)
{
    if (cap < 1) {
        throw DomainError("valuation cap must be at least 1");
    }
    ideal.validate(p.nvars());
    if (p.is_zero()) {
        return cap;
    }

    const std::size_t ngen = ideal.generators.size();
    // Multiply by a unit monomial so shifted variables carry nonnegative powers.
    std::array<int, 2> lowest{0, 0};
    for (const auto& g : ideal.generators) {
        int m = p.terms().front().exp[g.var];
        for (const auto& t : p.terms()) {
            m = std::min(m, t.exp[g.var]);
        }
        lowest[g.var] = m;
    }

    // key: shift degrees of the generators, then exponents of the remaining variables
    using Key = std::array<int, 4>;
    std::map<Key, Rational> expanded;
    for (const auto& t : p.terms()) {
        ExponentVec e = t.exp;
        Key rest{0, 0, 0, 0};
        for (int v = 0; v < p.nvars(); ++v) {
            bool shifted = false;
            for (const auto& g : ideal.generators) {
                shifted = shifted || g.var == v;
            }
            if (shifted) {
                e[v] -= lowest[v];
            } else {
                rest[2 + v] = e[v];
            }
        }
        // (c + s)^e = sum_k C(e,k) c^(e-k) s^k, truncated at total degree < cap
        std::vector<std::pair<std::array<int, 2>, Rational>> parts{{{0, 0}, Rational(t.coeff)}};
        for (std::size_t gi = 0; gi < ngen; ++gi) {
            const auto& g = ideal.generators[gi];
            int power = e[g.var];
            std::vector<std::pair<std::array<int, 2>, Rational>> next;
            for (const auto& [deg, coeff] : parts) {
                int used = deg[0] + deg[1];
                for (int k = 0; k <= power && used + k < cap; ++k) {
                    Integer binom;
                    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(power),
                                 static_cast<unsigned long>(k));
                    Rational c = coeff * Rational(binom) * rational_pow(g.center, power - k);
                    auto d = deg;
                    d[gi] = k;
                    next.emplace_back(d, std::move(c));
                }
            }
            parts = std::move(next);
        }
        for (auto& [deg, coeff] : parts) {
            Key key = rest;
            key[0] = deg[0];
            key[1] = deg[1];
            expanded[key] += coeff;
        }
    }

    int best = cap;
    for (const auto& [key, coeff] : expanded) {
        if (sgn(coeff) != 0) {
            best = std::min(best, key[0] + key[1]);
        }
    }
    return best;
}

std::string rational_to_string(const Rational& x)
{
    if (x.get_den() == 1) {
        return x.get_num().get_str();
    }
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    auto valid_int = [](const std::string& s, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
            start = 1;
        }
        if (start >= s.size()) {
            return false;
        }
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw DomainError("malformed rational '" + text + "'");
    }
    if (num[0] == '+') {
        num = num.substr(1);
    }
    Integer d(den);
    if (d == 0) {
        throw DomainError("zero denominator in '" + text + "'");
    }
    Rational r{Integer(num), d};
    r.canonicalize();
    return r;
}

} // namespace braidrep
