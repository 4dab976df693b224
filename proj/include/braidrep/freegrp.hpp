#pragma once

// Tits ping-pong certificate over Q: the dominant part of the spectrum,
// attracting points and repelling subspaces, and the disjointness
// conditions, all by exact rank computations.

#include <array>
#include <string>
#include <vector>

#include "braidrep/linalg.hpp"

namespace braidrep {

// Ascending coefficients; coeffs.back() is the leading one.
using RationalPoly = std::vector<Rational>;

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
// (x - r)^m
RationalPoly linear_power(const Rational& r, int m);
std::string poly_to_string(const RationalPoly& p, const std::string& var = "x");

struct RootMultiplicity {
    Rational root;
    int multiplicity = 0;
};

// All roots with multiplicity, sorted by root value; throws
// UnsupportedSpectrum if p does not split into linear factors over Q.
std::vector<RootMultiplicity> rational_roots(const RationalPoly& p);

struct DominantSplit {
    RationalPoly f1;                    // product over the max-modulus roots
    RationalPoly f2;                    // the rest; f1 * f2 = p
    std::vector<Rational> omega;        // distinct max-modulus roots
    std::vector<RootMultiplicity> spectrum;
};

DominantSplit dominant_split(const RationalPoly& charpoly);
DominantSplit dominant_split(const Matrix<Rational>& m);

// A linear subspace of Q^ambient, stored as the nonzero rows of its reduced
// row echelon form, so equal subspaces have equal bases. A point's single
// vector has first nonzero coordinate 1.
class ProjectiveSubspace {
public:
    ProjectiveSubspace(std::size_t ambient, const std::vector<RationalVector>& spanning);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_point() const { return basis_.size() == 1; }
    const std::vector<RationalVector>& basis() const { return basis_; }

    bool contains(const RationalVector& v) const;
    bool meets_trivially(const ProjectiveSubspace& other) const;

    friend bool operator==(const ProjectiveSubspace&, const ProjectiveSubspace&) = default;

private:
    std::size_t ambient_;
    std::vector<RationalVector> basis_;
};

struct AttractRepel {
    ProjectiveSubspace attract; // ker f1(M)
    ProjectiveSubspace repel;   // ker f2(M)
};

AttractRepel attract_repel(const Matrix<Rational>& m, const DominantSplit& split);
AttractRepel attract_repel(const Matrix<Rational>& m);

struct PingPongReport {
    bool points_ok = false;
    bool cond2_ok = false; // A(X), A(X^-1) avoid A'(Y), A'(Y^-1)
    bool cond3_ok = false; // A(Y), A(Y^-1) avoid A'(X), A'(X^-1)
    // Witnesses in the order X, X^-1, Y, Y^-1.
    std::vector<AttractRepel> witnesses;
    std::array<DominantSplit, 4> splits;

    bool certified() const { return points_ok && cond2_ok && cond3_ok; }
};

PingPongReport certify(const Matrix<Rational>& x, const Matrix<Rational>& y);

// rational + coeff * sqrt(radicand), radicand >= 0.
struct QuadraticSurd {
    Rational rational;
    Rational coeff;
    Rational radicand;

    // Sign of (value - k), decided exactly.
    int compare(const Rational& k) const;
    // Same value with a square-free integer radicand (0 when the root is rational).
    QuadraticSurd normalized() const;
    std::string to_string() const;
};

struct RemarkDistances {
    QuadraticSurd first;  // |Y v1 - v2|^2
    QuadraticSurd second; // |Y^2 v1 - v2|^2
};

// v1, v2 span A(X), A(Y), normalized to first nonzero coordinate 1 and then
// to Euclidean length 1; Y^k v1 is not renormalized.
RemarkDistances remark_distance(const Matrix<Rational>& x, const Matrix<Rational>& y);

} // namespace braidrep
