#include "slicekit/combinatorics.hpp"

#include <array>

namespace slicekit {

std::vector<int> Block::points() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    std::uint64_t rest = bits;
    while (rest) {
        out.push_back(std::countr_zero(rest));
        rest &= rest - 1;
    }
    return out;
}

Block Block::from_points(std::span<const int> pts, GroundSet g) {
    Block b;
    for (int x : pts) {
        if (x < 0 || x >= g.n) fail(ErrorCode::argument, "point label outside ground set");
        b = b.with(x);
    }
    return b;
}

BigInt binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

namespace {

// Pascal triangle up to n = 62; every entry fits in 64 bits.
struct PascalTable {
    std::array<std::array<std::uint64_t, kMaxPoints + 1>, kMaxPoints + 1> c{};
    PascalTable() {
        for (int n = 0; n <= kMaxPoints; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const PascalTable& pascal() {
    static const PascalTable table;
    return table;
}

} // namespace

std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n > kMaxPoints) fail(ErrorCode::limit, "binom_u64 limited to n <= 62");
    return pascal().c[n][k];
}

std::uint64_t colex_rank(Block b) {
    std::uint64_t rank = 0;
    int r = 0;
    std::uint64_t rest = b.bits;
    while (rest) {
        const int c = std::countr_zero(rest);
        rest &= rest - 1;
        ++r;
        rank += binom_u64(c, r);
    }
    return rank;
}

std::vector<Block> slice_blocks(int n, int k) {
    std::vector<Block> out;
    if (k >= 0 && k <= n) out.reserve(static_cast<std::size_t>(binom_u64(n, k)));
    for_each_block(n, k, [&](Block b) { out.push_back(b); });
    return out;
}

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) fail(ErrorCode::parse, "malformed rational: " + text);
    if (q.get_den() == 0) fail(ErrorCode::parse, "rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string round_half_up_2dp(const Rational& q) {
    if (sgn(q) < 0) fail(ErrorCode::argument, "round_half_up_2dp expects a non-negative value");
    // floor((200p + q) / (2q)) = round-half-up of 100 p/q
    BigInt hundredths = (200 * q.get_num() + q.get_den()) / (2 * q.get_den());
    const BigInt whole = hundredths / 100;
    const BigInt frac = hundredths % 100;
    std::string f = frac.get_str();
    if (f.size() < 2) f.insert(f.begin(), '0');
    return whole.get_str() + "." + f;
}

} // namespace slicekit
