#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lklab/rng.hpp"

namespace lklab {

// Ground sets are {1..n} with n capped at one machine word.
inline constexpr int kMaxGround = 64;

// Exact C(n, k) for 0 <= n <= 64 (fits in 64 bits); 0 outside 0 <= k <= n.
unsigned long long binom(int n, int k);

// A subset of {1..n} stored as one 64-bit word. Immutable value type;
// mutators return modified copies.
class Subset {
public:
    Subset() = default;

    static Subset empty(int ground);
    static Subset full(int ground);
    static Subset of(int ground, std::initializer_list<int> members);
    static Subset from_members(int ground, const std::vector<int>& members);
    static Subset from_bits(int ground, uint64_t bits);

    int ground_size() const { return ground_; }
    uint64_t bits() const { return bits_; }

    int size() const;
    bool is_empty() const { return bits_ == 0; }
    bool contains(int x) const;

    Subset with(int x) const;
    Subset without(int x) const;
    Subset union_with(const Subset& o) const;
    Subset intersect(const Subset& o) const;
    Subset minus(const Subset& o) const;
    Subset complement() const;

    bool is_subset_of(const Subset& o) const;
    bool disjoint_with(const Subset& o) const;

    // Numeric minimum / maximum member; InvalidInput on the empty set.
    int min_element() const;
    int max_element() const;

    std::vector<int> members() const; // ascending

    bool operator==(const Subset& o) const = default;

    // Lexicographic order of the sorted member lists; the canonical order
    // for enumeration, vertex indexing and file exports.
    bool lex_less(const Subset& o) const;

private:
    Subset(int ground, uint64_t bits) : ground_(ground), bits_(bits) {}
    int ground_ = 0;
    uint64_t bits_ = 0;
};

// "{1,2,5}" / "{}" rendering used by sidecar files and CSV exports.
std::string to_braced_string(const Subset& s);
// Inverse of to_braced_string; SchemaError on malformed text, members must
// be ascending and within {1..ground}.
Subset parse_braced_subset(int ground, std::string_view text);

// A bijection on {1..n}, stored as the forward sequence with the inverse
// cached. Read sigma as an ordering of the ground set: sigma(1) comes first.
class Permutation {
public:
    static Permutation identity(int n);
    static Permutation from_seq(std::vector<int> seq); // validates bijection

    int size() const { return static_cast<int>(seq_.size()); }
    int image(int i) const;    // sigma(i), 1-based
    int position(int x) const; // sigma^{-1}(x), 1-based
    const std::vector<int>& seq() const { return seq_; }

    Subset apply(const Subset& s) const; // elementwise image

    bool operator==(const Permutation& o) const { return seq_ == o.seq_; }

private:
    Permutation(std::vector<int> seq, std::vector<int> inv)
        : seq_(std::move(seq)), inv_(std::move(inv))
    {
    }
    std::vector<int> seq_;
    std::vector<int> inv_;
};

// The member of R that comes first in the ordering sigma.
int min_under_order(const Permutation& sigma, const Subset& r);

// All k-subsets of {1..n} in lexicographic order of sorted member lists.
std::vector<Subset> enumerate_subsets(int n, int k);

// Rank of a k-subset within enumerate_subsets(n, k); the inverse of
// indexing into that sequence.
unsigned long long rank_subset(const Subset& s);

// Uniform permutation via Fisher-Yates; identical seed, identical output.
Permutation random_permutation(int n, Rng& rng);

// All n! permutations in lexicographic sequence order (n <= 10 guarded).
std::vector<Permutation> all_permutations(int n);

} // namespace lklab
