#pragma once

// Exact Laurent polynomials over Z in one or two variables.
//
// Variables are anonymous slots (0 and 1). The braid constructions use
// slot 0 for t (or the symbolic alpha, printed as "a") and slot 1 for q
// (or beta, printed as "b"); renaming is purely a display concern.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace braidrep {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponents of one monomial. Only the first nvars() slots are meaningful;
// unused slots are kept at zero so lexicographic comparison stays canonical.
using ExponentVec = std::array<int, 2>;

struct Term {
    ExponentVec exp{};
    Integer coeff;
};

struct UnitMonomial {
    int sign = 1;
    ExponentVec exp{};
};

class LaurentPoly {
public:
    explicit LaurentPoly(int nvars = 1);

    static LaurentPoly constant(int nvars, const Integer& c);
    static LaurentPoly monomial(int nvars, ExponentVec exp, const Integer& c = 1);
    static LaurentPoly variable(int nvars, int index);

    // Terms must be canonical: sorted by exponent, distinct, nonzero.
    static LaurentPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);

    LaurentPoly pow(unsigned k) const;

    // (sign, exponents) iff this is a single term with coefficient +-1.
    std::optional<UnitMonomial> as_unit() const;

    // Substitutes exact nonzero rationals for every variable.
    Rational evaluate(std::span<const Rational> point) const;

    // Human-readable form, e.g. "a*b^2 - 2*a^-1 + 3".
    std::string to_string(std::span<const std::string> names = {}) const;

private:
    void check_compatible(const LaurentPoly& rhs) const;

    int nvars_;
    std::vector<Term> terms_;
};

// Ideal generated by (x_v - c_v) for up to two variables v. Centers must be
// nonzero since every variable is a unit in the Laurent ring.
struct IdealSpec {
    struct Generator {
        int var = 0;
        Rational center;
    };
    std::vector<Generator> generators;

    static IdealSpec single(int var, const Rational& center);
    static IdealSpec pair(const Rational& center0, const Rational& center1);

    void validate(int nvars) const;
};

// Largest i <= cap with p in ideal^i; cap when p is zero or lies in
// ideal^cap, and 0 when p is not in the ideal at all.
int shift_valuation(const LaurentPoly& p, const IdealSpec& ideal, int cap);

Rational rational_pow(const Rational& base, int exponent);

// Ring-generic helpers used by the matrix templates.
inline LaurentPoly zero_like(const LaurentPoly& x) { return LaurentPoly(x.nvars()); }
inline LaurentPoly one_like(const LaurentPoly& x) { return LaurentPoly::constant(x.nvars(), 1); }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
std::optional<LaurentPoly> unit_inverse(const LaurentPoly& x);

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
std::optional<Rational> unit_inverse(const Rational& x);

inline Integer zero_like(const Integer&) { return Integer(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
std::optional<Integer> unit_inverse(const Integer& x);

// "P/Q" or "P" for integers.
std::string rational_to_string(const Rational& x);
// Accepts "P", "-P", "P/Q"; throws DomainError otherwise or when Q = 0.
Rational parse_rational(const std::string& text);

} // namespace braidrep
