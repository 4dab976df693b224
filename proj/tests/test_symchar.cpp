#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "braidrep/error.hpp"
#include "braidrep/symchar.hpp"

using namespace braidrep;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(parts); }

long long mult_of(const std::vector<std::pair<std::string, long long>>& d, const std::string& name)
{
    for (const auto& [n, m] : d) {
        if (n == name) {
            return m;
        }
    }
    return -1;
}

// Brute-force class sizes: count permutations of 1..n by cycle type.
std::map<Partition, Integer> brute_class_sizes(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::map<Partition, Integer> counts;
    do {
        ++counts[Permutation(images).cycle_type()];
    } while (std::next_permutation(images.begin(), images.end()));
    return counts;
}

std::vector<Constituent> named(int n, std::initializer_list<const char*> names)
{
    std::vector<Constituent> out;
    for (const char* name : names) {
        out.push_back({name, irr_char(parse_irrep(name), n)});
    }
    return out;
}

} // namespace

TEST_CASE("partitions and class sizes")
{
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(7).size() == 15);
    CHECK(partition_key(P({2, 2, 1})) == "2+2+1");
    CHECK(parse_partition("1+2+2") == P({2, 2, 1}));
    CHECK(class_size(P({2, 1, 1})) == 6);
    CHECK(class_size(P({2, 2})) == 3);
    CHECK_THROWS_AS(parse_partition("2+x"), DomainError);
    for (int n = 1; n <= 7; ++n) {
        Integer total = 0;
        const auto brute = brute_class_sizes(n);
        for (const auto& lambda : partitions(n)) {
            total += class_size(lambda);
            CHECK(class_size(lambda) == brute.at(lambda));
        }
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        CHECK(total == fact);
    }
}

TEST_CASE("irreducible character values")
{
    for (int n = 3; n <= 7; ++n) {
        const auto v = irr_char(Irrep::Standard, n);
        const auto w2 = irr_char(Irrep::Wedge2Standard, n);
        const auto w = irr_char(Irrep::W, n);
        for (const auto& lambda : partitions(n)) {
            const long long i1 = cycle_count(lambda, 1);
            CHECK(v.at(lambda) + w2.at(lambda) + w.at(lambda) == i1 * (i1 - 2));
            CHECK(irr_char(Irrep::Trivial, n).at(lambda) == 1);
        }
    }
    CHECK(irr_char(Irrep::W, 4).at(P({2, 2})) == 2);
    CHECK(irr_char(Irrep::Standard, 5).dimension() == 4);
    CHECK(irr_char(Irrep::Wedge2Standard, 5).dimension() == 6);
    CHECK(irr_char(Irrep::W, 5).dimension() == 5);
    CHECK_THROWS_AS(parse_irrep("U"), DomainError);
    CHECK_THROWS_AS(irr_char(Irrep::Standard, 2), DomainError);
}

TEST_CASE("orthonormality of the distinct constituents, n <= 7")
{
    for (int n = 3; n <= 7; ++n) {
        const auto basis = standard_constituents(n);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                CHECK(inner_product(basis[i].chi, basis[j].chi) == (i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("constituent lists after removing zeros and coincidences")
{
    auto names = [](int n) {
        std::vector<std::string> out;
        for (const auto& c : standard_constituents(n)) {
            out.push_back(c.name);
        }
        return out;
    };
    CHECK(names(3) == std::vector<std::string>{"triv", "alt", "V"});
    CHECK(names(4) == std::vector<std::string>{"triv", "alt", "V", "wedge2V", "W"});
    CHECK(names(5) == std::vector<std::string>{"triv", "alt", "V", "wedge2V", "W", "V_alt", "W_alt"});
}

TEST_CASE("characters of rho_n(1)")
{
    auto values = [](const CharacterVector& chi, std::initializer_list<Partition> order) {
        std::vector<long long> out;
        for (const auto& p : order) {
            out.push_back(chi.at(p));
        }
        return out;
    };
    CHECK(values(rep_character(rho_at(3, 1)), {P({1, 1, 1}), P({2, 1}), P({3})}) ==
          std::vector<long long>{3, -1, 0});
    CHECK(values(rep_character(rho_at(4, 1)), {P({1, 1, 1, 1}), P({2, 1, 1}), P({3, 1}), P({4}), P({2, 2})}) ==
          std::vector<long long>{8, 0, -1, 0, 0});
    for (int n = 4; n <= 7; ++n) {
        const CharacterVector chi = rep_character(rho_at(n, 1));
        for (const auto& lambda : partitions(n)) {
            const long long i1 = cycle_count(lambda, 1);
            CHECK(chi.at(lambda) == i1 * (i1 - 2));
        }
        const auto d = decompose(chi, named(n, {"V", "wedge2V", "W"}));
        CHECK(mult_of(d, "V") == 1);
        CHECK(mult_of(d, "wedge2V") == 1);
        CHECK(mult_of(d, "W") == 1);
    }
    const auto d3 = decompose(rep_character(rho_at(3, 1)), named(3, {"V", "wedge2V"}));
    CHECK(mult_of(d3, "V") == 1);
    CHECK(mult_of(d3, "wedge2V") == 1);
}

TEST_CASE("decompositions of mu_n(1,1)")
{
    const auto d4 = decompose(rep_character(mu_at(4, 1, 1)), standard_constituents(4));
    CHECK(mult_of(d4, "alt") == 1);
    CHECK(mult_of(d4, "triv") == 2);
    CHECK(mult_of(d4, "wedge2V") == 3);
    CHECK(mult_of(d4, "W") == 4);
    CHECK(mult_of(d4, "V") == 5);
    const auto d5 = decompose(rep_character(mu_at(5, 1, 1)), standard_constituents(5));
    CHECK(mult_of(d5, "V_alt") == 1);
    CHECK(mult_of(d5, "triv") == 2);
    CHECK(mult_of(d5, "W_alt") == 3);
    CHECK(mult_of(d5, "wedge2V") == 4);
    CHECK(mult_of(d5, "W") == 6);
    CHECK(mult_of(d5, "V") == 6);
    CHECK(mult_of(d5, "alt") == 0);
}

TEST_CASE("trivial decomposition and error paths")
{
    const auto triv = irr_char(Irrep::Trivial, 4);
    const auto d = decompose(triv, named(4, {"triv"}));
    CHECK(d.size() == 1);
    CHECK(d.front().second == 1);
    // V alone cannot absorb the trivial character.
    CHECK_THROWS_AS(decompose(triv, named(4, {"V"})), DomainError);
    // A character with a fractional inner product.
    CharacterVector odd = triv;
    odd.values[P({2, 1, 1})] = 0;
    CHECK_THROWS_AS(decompose(odd, standard_constituents(4)), DomainError);
}

TEST_CASE("representations that do not factor through the symmetric group are refused")
{
    CHECK_THROWS_AS(rep_character(rho_at(3, 2)), DomainError);
}

TEST_CASE("the diagonal-label submodule of mu_n(1,1) is V + W")
{
    for (int n = 4; n <= 5; ++n) {
        const CharacterVector chi = diag_submodule_character(n);
        CHECK(chi.dimension() == static_cast<long long>(binomial2(n)) - 1);
        const auto d = decompose(chi, standard_constituents(n));
        for (const auto& [name, m] : d) {
            CHECK(m == ((name == "V" || name == "W") ? 1 : 0));
        }
    }
    const CharacterVector five = diag_submodule_character(5);
    CHECK(five.at(P({2, 1, 1, 1})) ==
          irr_char(Irrep::Standard, 5).at(P({2, 1, 1, 1})) + irr_char(Irrep::W, 5).at(P({2, 1, 1, 1})));
    CHECK(five.at(P({2, 1, 1, 1})) == 3);
    CHECK(diag_submodule_character(3).dimension() == 2);
}
