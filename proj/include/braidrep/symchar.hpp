#pragma once

// Conjugacy classes of the symmetric group, the handful of irreducible
// characters that occur in rho_n(1) and mu_n(1,1), and decomposition.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/reps.hpp"

namespace braidrep {

// Weakly decreasing cycle lengths summing to n.
using Partition = std::vector<int>;

std::vector<Partition> partitions(int n);
// n! / prod(k^{i_k} i_k!)
Integer class_size(const Partition& lambda);
// "2+2+1"
std::string partition_key(const Partition& lambda);
Partition parse_partition(const std::string& key);
// i_k, the number of k-cycles
int cycle_count(const Partition& lambda, int k);

struct CharacterVector {
    int n = 0;
    std::map<Partition, long long> values;

    long long at(const Partition& lambda) const;
    long long dimension() const { return at(Partition(static_cast<std::size_t>(n), 1)); }

    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

CharacterVector operator+(const CharacterVector& a, const CharacterVector& b);
CharacterVector operator-(const CharacterVector& a, const CharacterVector& b);
CharacterVector operator*(long long k, const CharacterVector& a);

enum class Irrep { Trivial, Alternating, Standard, Wedge2Standard, W, StandardAlt, WAlt };

// "triv", "alt", "V", "wedge2V", "W", "V_alt", "W_alt"
std::string irrep_name(Irrep irrep);
Irrep parse_irrep(const std::string& name);

CharacterVector irr_char(Irrep irrep, int n);

// (1/n!) sum_C |C| chi(C) psi(C)
Rational inner_product(const CharacterVector& a, const CharacterVector& b);

struct Constituent {
    std::string name;
    CharacterVector chi;
};

// The named irreducibles with duplicates and zero characters removed, in
// the order triv, alt, V, wedge2V, W, V_alt, W_alt (first name wins).
std::vector<Constituent> standard_constituents(int n);

// Multiplicities by inner product; throws DomainError on a non-integral
// multiplicity or a nonzero residual character.
std::vector<std::pair<std::string, long long>> decompose(const CharacterVector& chi,
                                                         const std::vector<Constituent>& basis);

// Traces on lift_cycle_type representatives. The representation must
// factor through the symmetric group; two lifts of the transposition class
// are compared and a disagreement is an error.
CharacterVector rep_character(const RationalRep& rep);

// Character of mu_n(1,1) restricted to the span of the diagonal labels,
// after checking that span is invariant.
CharacterVector diag_submodule_character(int n);

} // namespace braidrep
