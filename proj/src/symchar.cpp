#include "braidrep/symchar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "braidrep/error.hpp"

namespace braidrep {

namespace {

void extend_partitions(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        extend_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

int fixed_points(const Partition& lambda) { return cycle_count(lambda, 1); }

// Cycle type of g^2: odd cycles stay, even k-cycles split into two k/2-cycles.
Partition squared(const Partition& lambda)
{
    Partition out;
    for (int part : lambda) {
        if (part % 2 == 1) {
            out.push_back(part);
        } else {
            out.push_back(part / 2);
            out.push_back(part / 2);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int sign(const Partition& lambda)
{
    int even_cycles = 0;
    for (int part : lambda) {
        even_cycles += (part % 2 == 0) ? 1 : 0;
    }
    return even_cycles % 2 == 0 ? 1 : -1;
}

CharacterVector tabulate(int n, const std::function<long long(const Partition&)>& f)
{
    CharacterVector chi;
    chi.n = n;
    for (const auto& lambda : partitions(n)) {
        chi.values[lambda] = f(lambda);
    }
    return chi;
}

void check_same_n(const CharacterVector& a, const CharacterVector& b)
{
    if (a.n != b.n) {
        throw DomainError("characters of different symmetric groups");
    }
}

} // namespace

std::vector<Partition> partitions(int n)
{
    if (n < 1) {
        throw DomainError("partitions need n >= 1");
    }
    std::vector<Partition> out;
    Partition prefix;
    extend_partitions(n, n, prefix, out);
    return out;
}

int cycle_count(const Partition& lambda, int k) { return static_cast<int>(std::count(lambda.begin(), lambda.end(), k)); }

Integer class_size(const Partition& lambda)
{
    int n = 0;
    for (int part : lambda) {
        n += part;
    }
    Integer size;
    mpz_fac_ui(size.get_mpz_t(), static_cast<unsigned long>(n));
    for (int k = 1; k <= n; ++k) {
        int ik = cycle_count(lambda, k);
        if (ik == 0) {
            continue;
        }
        Integer kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(ik));
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(ik));
        size /= kpow * fact;
    }
    return size;
}

std::string partition_key(const Partition& lambda)
{
    std::string out;
    for (int part : lambda) {
        if (!out.empty()) {
            out += '+';
        }
        out += std::to_string(part);
    }
    return out;
}

Partition parse_partition(const std::string& key)
{
    Partition out;
    std::stringstream in(key);
    std::string piece;
    while (std::getline(in, piece, '+')) {
        try {
            out.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw DomainError("malformed partition '" + key + "'");
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

long long CharacterVector::at(const Partition& lambda) const
{
    auto it = values.find(lambda);
    if (it == values.end()) {
        throw DomainError("character has no value at class " + partition_key(lambda));
    }
    return it->second;
}

CharacterVector operator+(const CharacterVector& a, const CharacterVector& b)
{
    check_same_n(a, b);
    CharacterVector out = a;
    for (auto& [lambda, v] : out.values) {
        v += b.at(lambda);
    }
    return out;
}

CharacterVector operator-(const CharacterVector& a, const CharacterVector& b) { return a + (-1LL) * b; }

CharacterVector operator*(long long k, const CharacterVector& a)
{
    CharacterVector out = a;
    for (auto& [lambda, v] : out.values) {
        v *= k;
    }
    return out;
}

std::string irrep_name(Irrep irrep)
{
    switch (irrep) {
    case Irrep::Trivial:
        return "triv";
    case Irrep::Alternating:
        return "alt";
    case Irrep::Standard:
        return "V";
    case Irrep::Wedge2Standard:
        return "wedge2V";
    case Irrep::W:
        return "W";
    case Irrep::StandardAlt:
        return "V_alt";
    case Irrep::WAlt:
        return "W_alt";
    }
    return "?";
}

Irrep parse_irrep(const std::string& name)
{
    for (Irrep r : {Irrep::Trivial, Irrep::Alternating, Irrep::Standard, Irrep::Wedge2Standard, Irrep::W,
                    Irrep::StandardAlt, Irrep::WAlt}) {
        if (irrep_name(r) == name) {
            return r;
        }
    }
    throw DomainError("unknown irreducible '" + name + "'");
}

CharacterVector irr_char(Irrep irrep, int n)
{
    if (n < 3) {
        throw DomainError("irreducible characters are tabulated for n >= 3");
    }
    auto chi_v = [](const Partition& g) -> long long { return fixed_points(g) - 1; };
    auto chi_w = [](const Partition& g) -> long long {
        const long long fix = fixed_points(g);
        return fix * (fix - 1) / 2 + cycle_count(g, 2) - fix;
    };
    switch (irrep) {
    case Irrep::Trivial:
        return tabulate(n, [](const Partition&) { return 1LL; });
    case Irrep::Alternating:
        return tabulate(n, [](const Partition& g) { return static_cast<long long>(sign(g)); });
    case Irrep::Standard:
        return tabulate(n, chi_v);
    case Irrep::Wedge2Standard:
        return tabulate(n, [&](const Partition& g) {
            const long long v = chi_v(g);
            return (v * v - chi_v(squared(g))) / 2;
        });
    case Irrep::W:
        return tabulate(n, chi_w);
    case Irrep::StandardAlt:
        return tabulate(n, [&](const Partition& g) { return sign(g) * chi_v(g); });
    case Irrep::WAlt:
        return tabulate(n, [&](const Partition& g) { return sign(g) * chi_w(g); });
    }
    throw DomainError("unknown irreducible");
}

Rational inner_product(const CharacterVector& a, const CharacterVector& b)
{
    check_same_n(a, b);
    Integer total = 0;
    for (const auto& [lambda, v] : a.values) {
        total += class_size(lambda) * Integer(static_cast<long>(v)) * Integer(static_cast<long>(b.at(lambda)));
    }
    Integer order;
    mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(a.n));
    Rational r(total, order);
    r.canonicalize();
    return r;
}

std::vector<Constituent> standard_constituents(int n)
{
    std::vector<Constituent> out;
    for (Irrep r : {Irrep::Trivial, Irrep::Alternating, Irrep::Standard, Irrep::Wedge2Standard, Irrep::W,
                    Irrep::StandardAlt, Irrep::WAlt}) {
        CharacterVector chi = irr_char(r, n);
        if (chi.dimension() == 0) {
            continue;
        }
        bool duplicate = std::any_of(out.begin(), out.end(), [&](const Constituent& c) { return c.chi == chi; });
        if (!duplicate) {
            out.push_back({irrep_name(r), std::move(chi)});
        }
    }
    return out;
}

std::vector<std::pair<std::string, long long>> decompose(const CharacterVector& chi,
                                                         const std::vector<Constituent>& basis)
{
    std::vector<std::pair<std::string, long long>> out;
    CharacterVector residual = chi;
    for (const auto& c : basis) {
        Rational m = inner_product(chi, c.chi);
        if (m.get_den() != 1) {
            throw DomainError("non-integral multiplicity " + rational_to_string(m) + " for " + c.name);
        }
        long long mult = m.get_num().get_si();
        out.emplace_back(c.name, mult);
        residual = residual - mult * c.chi;
    }
    for (const auto& [lambda, v] : residual.values) {
        if (v != 0) {
            throw DomainError("nonzero residual " + std::to_string(v) + " at class " + partition_key(lambda) +
                              " after decomposition");
        }
    }
    return out;
}

namespace {

long long integral_trace(const Matrix<Rational>& m)
{
    Rational t = trace(m);
    if (t.get_den() != 1) {
        throw DomainError("non-integral trace " + rational_to_string(t));
    }
    return t.get_num().get_si();
}

} // namespace

CharacterVector rep_character(const RationalRep& rep)
{
    const int n = rep.strands;
    CharacterVector chi;
    chi.n = n;
    for (const auto& lambda : partitions(n)) {
        chi.values[lambda] = integral_trace(rep.eval_word(lift_cycle_type(lambda, n)));
    }
    // sigma_1 and sigma_1^{-1} lie over the same transposition.
    Partition transposition(static_cast<std::size_t>(n - 2), 1);
    transposition.insert(transposition.begin(), 2);
    const long long alt = integral_trace(rep.eval_word(generator(n, 1, -1)));
    if (alt != chi.at(transposition)) {
        throw DomainError("trace differs between two lifts of the transposition class; the representation does "
                          "not factor through the symmetric group");
    }
    return chi;
}

CharacterVector diag_submodule_character(int n)
{
    const SlBasis basis = SlBasis::standard(static_cast<int>(binomial2(n)));
    const std::size_t start = basis.first_diagonal();
    RationalRep rep;
    rep.strands = n;
    rep.dim = basis.size();
    for (int k = 1; k < n; ++k) {
        Matrix<Rational> g = mu_one_one(n, k);
        for (std::size_t c = start; c < basis.size(); ++c) {
            for (std::size_t r = 0; r < start; ++r) {
                if (sgn(g(r, c)) != 0) {
                    throw DomainError("span of the diagonal labels is not invariant");
                }
            }
        }
        rep.invs.push_back(inverse_unit(g));
        rep.gens.push_back(std::move(g));
    }
    CharacterVector chi;
    chi.n = n;
    for (const auto& lambda : partitions(n)) {
        Matrix<Rational> m = rep.eval_word(lift_cycle_type(lambda, n));
        Rational t = 0;
        for (std::size_t i = start; i < basis.size(); ++i) {
            t += m(i, i);
        }
        chi.values[lambda] = t.get_num().get_si();
    }
    return chi;
}

} // namespace braidrep
