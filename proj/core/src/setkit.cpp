#include "lklab/setkit.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <numeric>

#include "lklab/errors.hpp"

namespace lklab {

namespace {

struct BinomTable {
    // Pascal's triangle up to n = 64; every entry fits in 64 bits.
    std::array<std::array<unsigned long long, kMaxGround + 1>, kMaxGround + 1> c {};
    BinomTable()
    {
        for (int n = 0; n <= kMaxGround; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const BinomTable& binom_table()
{
    static const BinomTable t;
    return t;
}

void check_ground(int ground)
{
    if (ground < 0 || ground > kMaxGround)
        throw InvalidParameters("ground size must be in [0, 64], got " + std::to_string(ground));
}

uint64_t ground_mask(int ground)
{
    return ground == 64 ? ~uint64_t{0} : (uint64_t{1} << ground) - 1;
}

} // namespace

unsigned long long binom(int n, int k)
{
    if (n < 0 || n > kMaxGround)
        throw InvalidParameters("binom: n out of [0, 64]");
    if (k < 0 || k > n)
        return 0;
    return binom_table().c[n][k];
}

Subset Subset::empty(int ground)
{
    check_ground(ground);
    return Subset(ground, 0);
}

Subset Subset::full(int ground)
{
    check_ground(ground);
    return Subset(ground, ground_mask(ground));
}

Subset Subset::of(int ground, std::initializer_list<int> members)
{
    return from_members(ground, std::vector<int>(members));
}

Subset Subset::from_members(int ground, const std::vector<int>& members)
{
    Subset s = empty(ground);
    for (int x : members)
        s = s.with(x);
    return s;
}

Subset Subset::from_bits(int ground, uint64_t bits)
{
    check_ground(ground);
    if (bits & ~ground_mask(ground))
        throw InvalidParameters("Subset: bits outside the ground set");
    return Subset(ground, bits);
}

int Subset::size() const { return std::popcount(bits_); }

bool Subset::contains(int x) const
{
    return x >= 1 && x <= ground_ && ((bits_ >> (x - 1)) & 1u);
}

Subset Subset::with(int x) const
{
    if (x < 1 || x > ground_)
        throw InvalidParameters("Subset: element " + std::to_string(x) + " outside {1.."
                                + std::to_string(ground_) + "}");
    return Subset(ground_, bits_ | (uint64_t{1} << (x - 1)));
}

Subset Subset::without(int x) const
{
    if (x < 1 || x > ground_)
        throw InvalidParameters("Subset: element outside the ground set");
    return Subset(ground_, bits_ & ~(uint64_t{1} << (x - 1)));
}

Subset Subset::union_with(const Subset& o) const
{
    assert(ground_ == o.ground_);
    return Subset(ground_, bits_ | o.bits_);
}

Subset Subset::intersect(const Subset& o) const
{
    assert(ground_ == o.ground_);
    return Subset(ground_, bits_ & o.bits_);
}

Subset Subset::minus(const Subset& o) const
{
    assert(ground_ == o.ground_);
    return Subset(ground_, bits_ & ~o.bits_);
}

Subset Subset::complement() const { return Subset(ground_, ~bits_ & ground_mask(ground_)); }

bool Subset::is_subset_of(const Subset& o) const { return (bits_ & ~o.bits_) == 0; }

bool Subset::disjoint_with(const Subset& o) const { return (bits_ & o.bits_) == 0; }

int Subset::min_element() const
{
    if (bits_ == 0)
        throw InvalidInput("min_element of an empty subset");
    return std::countr_zero(bits_) + 1;
}

int Subset::max_element() const
{
    if (bits_ == 0)
        throw InvalidInput("max_element of an empty subset");
    return 64 - std::countl_zero(bits_);
}

std::vector<int> Subset::members() const
{
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    uint64_t w = bits_;
    while (w) {
        out.push_back(std::countr_zero(w) + 1);
        w &= w - 1;
    }
    return out;
}

bool Subset::lex_less(const Subset& o) const
{
    if (bits_ == o.bits_)
        return false;
    const auto a = members();
    const auto b = o.members();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_braced_string(const Subset& s)
{
    std::string out = "{";
    bool first = true;
    for (int x : s.members()) {
        if (!first)
            out += ',';
        out += std::to_string(x);
        first = false;
    }
    out += '}';
    return out;
}

Subset parse_braced_subset(int ground, std::string_view text)
{
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw SchemaError("subset literal must be brace-delimited, got '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    Subset s = Subset::empty(ground);
    if (body.empty())
        return s;
    int prev = 0;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty())
            throw SchemaError("empty member in subset literal");
        int value = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw SchemaError("non-numeric member in subset literal");
            value = value * 10 + (ch - '0');
            if (value > kMaxGround)
                throw SchemaError("subset member out of range");
        }
        if (value <= prev)
            throw SchemaError("subset members must be strictly ascending");
        if (value > ground)
            throw SchemaError("subset member exceeds the ground set");
        s = s.with(value);
        prev = value;
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
        if (pos == body.size())
            throw SchemaError("trailing comma in subset literal");
    }
    return s;
}

Permutation Permutation::identity(int n)
{
    if (n < 1 || n > kMaxGround)
        throw InvalidParameters("permutation size must be in [1, 64]");
    std::vector<int> seq(static_cast<size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    std::vector<int> inv = seq;
    return Permutation(std::move(seq), std::move(inv));
}

Permutation Permutation::from_seq(std::vector<int> seq)
{
    const int n = static_cast<int>(seq.size());
    if (n < 1 || n > kMaxGround)
        throw InvalidParameters("permutation size must be in [1, 64]");
    std::vector<int> inv(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int x = seq[static_cast<size_t>(i - 1)];
        if (x < 1 || x > n || inv[static_cast<size_t>(x - 1)] != 0)
            throw InvalidParameters("sequence is not a permutation of {1..n}");
        inv[static_cast<size_t>(x - 1)] = i;
    }
    return Permutation(std::move(seq), std::move(inv));
}

int Permutation::image(int i) const
{
    if (i < 1 || i > size())
        throw InvalidParameters("permutation index out of range");
    return seq_[static_cast<size_t>(i - 1)];
}

int Permutation::position(int x) const
{
    if (x < 1 || x > size())
        throw InvalidParameters("permutation value out of range");
    return inv_[static_cast<size_t>(x - 1)];
}

Subset Permutation::apply(const Subset& s) const
{
    if (s.ground_size() != size())
        throw InvalidParameters("permutation and subset ground sizes differ");
    Subset out = Subset::empty(s.ground_size());
    for (int x : s.members())
        out = out.with(image(x));
    return out;
}

int min_under_order(const Permutation& sigma, const Subset& r)
{
    if (r.is_empty())
        throw InvalidParameters("min_under_order: empty set");
    if (r.ground_size() != sigma.size())
        throw InvalidParameters("min_under_order: ground sizes differ");
    int best = 0;
    int best_pos = sigma.size() + 1;
    for (int x : r.members()) {
        int p = sigma.position(x);
        if (p < best_pos) {
            best_pos = p;
            best = x;
        }
    }
    return best;
}

std::vector<Subset> enumerate_subsets(int n, int k)
{
    check_ground(n);
    if (k < 0 || k > n)
        throw InvalidParameters("enumerate_subsets: need 0 <= k <= n");
    std::vector<Subset> out;
    out.reserve(static_cast<size_t>(binom(n, k)));
    if (k == 0) {
        out.push_back(Subset::empty(n));
        return out;
    }
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        out.push_back(Subset::from_members(n, idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i + 1)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

unsigned long long rank_subset(const Subset& s)
{
    const int n = s.ground_size();
    const int k = s.size();
    unsigned long long rank = 0;
    int i = 0; // members placed so far
    int prev = 0;
    for (int a : s.members()) {
        for (int v = prev + 1; v < a; ++v)
            rank += binom(n - v, k - 1 - i);
        prev = a;
        ++i;
    }
    return rank;
}

Permutation random_permutation(int n, Rng& rng)
{
    if (n < 1)
        throw InvalidParameters("random_permutation: n must be >= 1");
    std::vector<int> seq(static_cast<size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(seq[static_cast<size_t>(i)], seq[static_cast<size_t>(rng.below(i + 1))]);
    return Permutation::from_seq(std::move(seq));
}

std::vector<Permutation> all_permutations(int n)
{
    if (n < 1 || n > 10)
        throw InvalidParameters("all_permutations: n must be in [1, 10]");
    std::vector<int> seq(static_cast<size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_seq(seq));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

} // namespace lklab
