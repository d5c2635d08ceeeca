#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "slicekit/error.hpp"
#include "slicekit/rational.hpp"

namespace slicekit {

/// Largest supported ground-set size; a block then fits one 64-bit word.
inline constexpr int kMaxPoints = 62;

/// The point set {0,...,n-1}.
struct GroundSet {
    int n = 0;

    explicit GroundSet(int n_) : n(n_) {
        if (n < 0 || n > kMaxPoints) fail(ErrorCode::argument, "ground set size out of range");
    }
    std::uint64_t mask() const { return n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n); }
};

/// A subset of a ground set, stored as a bit set. Comparing the raw words
/// orders equal-sized blocks colexicographically.
struct Block {
    std::uint64_t bits = 0;

    constexpr Block() = default;
    constexpr explicit Block(std::uint64_t b) : bits(b) {}

    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int x) const { return (bits >> x) & 1u; }
    bool subset_of(Block other) const { return (bits & ~other.bits) == 0; }
    bool disjoint_from(Block other) const { return (bits & other.bits) == 0; }

    Block with(int x) const { return Block{bits | (std::uint64_t{1} << x)}; }
    Block without(int x) const { return Block{bits & ~(std::uint64_t{1} << x)}; }

    friend constexpr Block operator|(Block a, Block b) { return Block{a.bits | b.bits}; }
    friend constexpr Block operator&(Block a, Block b) { return Block{a.bits & b.bits}; }
    friend constexpr auto operator<=>(Block a, Block b) = default;

    /// 0-based point labels, ascending.
    std::vector<int> points() const;

    static Block from_points(std::span<const int> pts, GroundSet g);
};

inline Block complement(Block b, GroundSet g) { return Block{~b.bits & g.mask()}; }

/// Removes point x from the ground set, shifting higher labels down by one.
/// Precondition: x not in b.
inline Block squeeze_out(Block b, int x) {
    const std::uint64_t low = b.bits & ((std::uint64_t{1} << x) - 1);
    const std::uint64_t high = (b.bits >> (x + 1)) << x;
    return Block{low | high};
}

/// Inverse of squeeze_out: re-inserts a gap at label x (x itself not set).
inline Block unsqueeze(Block b, int x) {
    const std::uint64_t low = b.bits & ((std::uint64_t{1} << x) - 1);
    const std::uint64_t high = (b.bits >> x) << (x + 1);
    return Block{low | high};
}

/// C(n,k) as a big integer; 0 whenever k < 0, n < 0 or k > n.
BigInt binom(long n, long k);

/// C(n,k) for 0 <= k <= n <= 62, always representable in 64 bits.
std::uint64_t binom_u64(int n, int k);

/// Position of a k-block in the colexicographic enumeration of its slice.
std::uint64_t colex_rank(Block b);

/// All k-subsets of {0,...,n-1} in colexicographic order (ascending bit
/// patterns). Materializes the slice; callers stay within desk scale.
std::vector<Block> slice_blocks(int n, int k);

/// Visits the slice in colex order without materializing it.
template <typename Fn>
void for_each_block(int n, int k, Fn&& fn) {
    GroundSet g(n);
    if (k < 0 || k > n) fail(ErrorCode::argument, "slice parameter k out of range");
    if (k == 0) {
        fn(Block{0});
        return;
    }
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    const std::uint64_t last = v << (n - k);
    while (true) {
        fn(Block{v});
        if (v == last) break;
        const std::uint64_t u = v & -v;
        const std::uint64_t w = v + u;
        v = w | (((v ^ w) >> 2) / u);
    }
}

} // namespace slicekit
