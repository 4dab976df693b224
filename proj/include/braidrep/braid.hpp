#pragma once

#include <string>
#include <vector>

namespace braidrep {

// sigma_index^exponent, exponent is +1 or -1.
struct Letter {
    int index = 1;
    int exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

class BraidWord {
public:
    explicit BraidWord(int strands, std::vector<Letter> letters = {});

    // Parses whitespace-separated signed generator indices, e.g. "3 -1".
    static BraidWord parse(int strands, const std::string& text);

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    BraidWord concat(const BraidWord& other) const;
    BraidWord inverse() const;
    // Cancels adjacent inverse pairs only; no braid relations are applied.
    BraidWord free_reduce() const;

    // Inverse of parse: "3 -1".
    std::string to_string() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<Letter> letters_;
};

BraidWord generator(int strands, int index, int exponent = 1);
BraidWord commutator(const BraidWord& u, const BraidWord& v);

// (sigma_{j-1} ... sigma_{i+1}) sigma_i^2 (sigma_{j-1} ... sigma_{i+1})^{-1}
BraidWord pure_gen(int i, int j, int strands);

// (sigma_1 sigma_2 ... sigma_{n-1})^n
BraidWord full_twist(int strands);

// Images of 1..n, stored 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
    const std::vector<int>& images() const { return images_; }

    // (this o other)(x) = this(other(x))
    Permutation compose(const Permutation& other) const;

    // Cycle lengths, weakly decreasing.
    std::vector<int> cycle_type() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// sigma_i -> (i i+1); perm(uv) = perm(u) o perm(v).
Permutation underlying_perm(const BraidWord& w);

// Places each part k on the next k strands as sigma_a ... sigma_{a+k-2}.
BraidWord lift_cycle_type(const std::vector<int>& partition, int strands);

} // namespace braidrep
