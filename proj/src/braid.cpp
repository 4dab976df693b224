#include "braidrep/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "braidrep/error.hpp"

namespace braidrep {

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : strands_(strands), letters_(std::move(letters))
{
    if (strands < 2) {
        throw DomainError("a braid needs at least 2 strands");
    }
    for (const auto& l : letters_) {
        if (l.index < 1 || l.index > strands - 1) {
            throw DomainError("generator sigma_" + std::to_string(l.index) + " out of range for " +
                              std::to_string(strands) + " strands");
        }
        if (l.exponent != 1 && l.exponent != -1) {
            throw DomainError("letter exponent must be +1 or -1");
        }
    }
}

BraidWord BraidWord::parse(int strands, const std::string& text)
{
    std::istringstream in(text);
    std::vector<Letter> letters;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw DomainError("malformed braid letter '" + token + "'");
        }
        if (used != token.size() || value == 0) {
            throw DomainError("malformed braid letter '" + token + "'");
        }
        letters.push_back({std::abs(value), value > 0 ? 1 : -1});
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::concat(const BraidWord& other) const
{
    if (other.strands_ != strands_) {
        throw DomainError("strand-count mismatch: " + std::to_string(strands_) + " vs " +
                          std::to_string(other.strands_));
    }
    std::vector<Letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::inverse() const
{
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.push_back({it->index, -it->exponent});
    }
    return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::free_reduce() const
{
    std::vector<Letter> stack;
    for (const auto& l : letters_) {
        if (!stack.empty() && stack.back().index == l.index && stack.back().exponent == -l.exponent) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return BraidWord(strands_, std::move(stack));
}

std::string BraidWord::to_string() const
{
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(l.index * l.exponent);
    }
    return out;
}

BraidWord generator(int strands, int index, int exponent) { return BraidWord(strands, {{index, exponent}}); }

BraidWord commutator(const BraidWord& u, const BraidWord& v)
{
    return u.concat(v).concat(u.inverse()).concat(v.inverse()).free_reduce();
}

BraidWord pure_gen(int i, int j, int strands)
{
    if (i < 1 || i >= j || j > strands) {
        throw DomainError("pure braid generator needs 1 <= i < j <= n, got (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
    }
    std::vector<Letter> conj;
    for (int k = j - 1; k >= i + 1; --k) {
        conj.push_back({k, 1});
    }
    BraidWord c(strands, conj);
    BraidWord square(strands, {{i, 1}, {i, 1}});
    return c.concat(square).concat(c.inverse());
}

BraidWord full_twist(int strands)
{
    std::vector<Letter> letters;
    for (int rep = 0; rep < strands; ++rep) {
        for (int k = 1; k < strands; ++k) {
            letters.push_back({k, 1});
        }
    }
    return BraidWord(strands, std::move(letters));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x)]) {
            throw DomainError("permutation images must be a bijection of 1..n");
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const
{
    if (other.size() != size()) {
        throw DomainError("permutation size mismatch");
    }
    std::vector<int> out(images_.size());
    for (int x = 1; x <= size(); ++x) {
        out[static_cast<std::size_t>(x - 1)] = (*this)(other(x));
    }
    return Permutation(std::move(out));
}

std::vector<int> Permutation::cycle_type() const
{
    std::vector<bool> seen(images_.size() + 1, false);
    std::vector<int> lengths;
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        int len = 0;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

bool Permutation::is_identity() const
{
    for (int x = 1; x <= size(); ++x) {
        if ((*this)(x) != x) {
            return false;
        }
    }
    return true;
}

Permutation underlying_perm(const BraidWord& w)
{
    Permutation p = Permutation::identity(w.strands());
    for (const auto& l : w.letters()) {
        std::vector<int> images = Permutation::identity(w.strands()).images();
        std::swap(images[static_cast<std::size_t>(l.index - 1)], images[static_cast<std::size_t>(l.index)]);
        p = p.compose(Permutation(std::move(images)));
    }
    return p;
}

BraidWord lift_cycle_type(const std::vector<int>& partition, int strands)
{
    int total = 0;
    for (int part : partition) {
        if (part < 1) {
            throw DomainError("partition parts must be positive");
        }
        total += part;
    }
    if (total != strands) {
        throw DomainError("partition sums to " + std::to_string(total) + ", expected " + std::to_string(strands));
    }
    std::vector<Letter> letters;
    int start = 1;
    for (int part : partition) {
        for (int k = start; k < start + part - 1; ++k) {
            letters.push_back({k, 1});
        }
        start += part;
    }
    return BraidWord(strands, std::move(letters));
}

} // namespace braidrep
