// Acceptance suite: one line per criterion, non-zero exit on any failure.
//
//   acceptance [--criterion N] [--slow]
//
// --slow widens the degree-theorem sweep to n = 10 and the leg-recovery
// sweep to n = 9; without it both run at n = 8.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "slicekit/bounds.hpp"
#include "slicekit/degree.hpp"
#include "slicekit/designs.hpp"
#include "slicekit/scheme.hpp"
#include "slicekit/slice_function.hpp"

using namespace slicekit;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& text, double seconds) {
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  " << criterion << "  " << text << "  [" << std::fixed;
    line.precision(1);
    line << seconds << "s]";
    std::cout << line.str() << std::endl;
    if (!pass) ++g_failures;
}

struct TableRow {
    int n, k;
    long pencil, paired, divisor;
    const char* lp;
};

// published columns: #pencil, #paired, Delta, LP (2 decimals)
const std::vector<TableRow> kTable1 = {
    {6, 3, 4, 2, 2, "2.00"},        {7, 3, 5, 5, 5, "5.00"},
    {8, 3, 6, 11, 1, "6.00"},       {9, 3, 7, 21, 7, "7.00"},
    {10, 3, 8, 36, 4, "8.00"},      {11, 3, 9, 57, 3, "9.00"},
    {12, 3, 10, 85, 5, "10.00"},    {13, 3, 11, 121, 11, "11.00"},
    {8, 4, 15, 10, 5, "6.67"},      {9, 4, 21, 21, 7, "9.33"},
    {10, 4, 28, 42, 14, "14.00"},   {11, 4, 36, 78, 6, "22.00"},
    {12, 4, 45, 135, 15, "36.82"},  {13, 4, 55, 220, 55, "55.00"},
    {10, 5, 56, 42, 14, "18.67"},   {11, 5, 84, 84, 42, "42.00"},
    {12, 5, 120, 162, 6, "57.00"},  {13, 5, 165, 297, 33, "77.00"},
    {12, 6, 210, 168, 42, "63.00"}, {13, 6, 330, 330, 66, "99.00"},
    {14, 6, 495, 627, 33, "165.00"},
};
const std::vector<TableRow> kTable2 = {
    {8, 4, 5, 10, 5, "5.00"},      {9, 4, 6, 21, 1, "6.00"},
    {10, 4, 7, 42, 7, "7.00"},     {11, 4, 8, 78, 2, "8.00"},
    {12, 4, 9, 135, 3, "9.00"},    {13, 4, 10, 220, 5, "10.00"},
    {10, 5, 21, 42, 7, "9.33"},    {11, 5, 28, 84, 14, "14.00"},
    {12, 5, 36, 162, 6, "22.00"},  {13, 5, 45, 297, 3, "35.00"},
    {12, 6, 84, 168, 42, "42.00"}, {13, 6, 120, 330, 6, "57.00"},
    {14, 6, 165, 627, 33, "77.00"}, {15, 6, 220, 1144, 11, "104.50"},
};
const std::vector<TableRow> kTable3 = {
    {10, 5, 6, 2, 1, "2.00"},    {11, 5, 7, 7, 7, "7.00"},
    {12, 5, 8, 22, 2, "8.00"},   {13, 5, 9, 57, 3, "9.00"},
    {12, 6, 28, 14, 14, "8.40"}, {13, 6, 36, 36, 6, "10.80"},
    {14, 6, 45, 93, 3, "16.20"}, {15, 6, 55, 220, 11, "30.56"},
};

int check_table(int t, const std::vector<TableRow>& expected) {
    int bad = 0;
    for (const TableRow& row : expected) {
        const BoundRow got = compute_bound_row(row.n, row.k, t);
        const bool ok = got.pencil == row.pencil && got.paired == row.paired &&
                        got.divisor == row.divisor && round_half_up_2dp(got.lp) == row.lp;
        if (!ok) {
            ++bad;
            std::cout << "    mismatch at n=" << row.n << " k=" << row.k << ": got "
                      << to_string(got.pencil) << "," << to_string(got.paired) << ","
                      << to_string(got.divisor) << "," << round_half_up_2dp(got.lp) << std::endl;
        }
    }
    return bad;
}

Block prefix(int count, int offset = 0) {
    return Block{(count == 0 ? 0 : (std::uint64_t{1} << count) - 1) << offset};
}

void criterion_1() {
    Timer timer;
    const int bad = check_table(2, kTable1);
    report(1, bad == 0,
           "degree-2 table: " + std::to_string(kTable1.size() - static_cast<std::size_t>(bad)) + "/" +
               std::to_string(kTable1.size()) + " rows match pencil/paired/delta and 2dp LP",
           timer.seconds());
}

void criterion_2() {
    Timer timer;
    const int bad = check_table(3, kTable2) + check_table(4, kTable3);
    report(2, bad == 0,
           "degree-3/4 tables: " +
               std::to_string(kTable2.size() + kTable3.size() - static_cast<std::size_t>(bad)) + "/" +
               std::to_string(kTable2.size() + kTable3.size()) + " rows match",
           timer.seconds());
}

void criterion_3(bool slow) {
    Timer timer;
    const int max_n = slow ? 10 : 8;
    const TheoremReport rep = verify_paired_theorem(max_n, 0);
    report(3, rep.mismatches.empty(),
           "paired-degree theorem vs span method to n=" + std::to_string(max_n) + ": " +
               std::to_string(rep.mismatches.size()) + " mismatches in " + std::to_string(rep.cases) +
               " cases",
           timer.seconds());
}

void criterion_4() {
    Timer timer;
    long bad = 0, cases = 0;
    // every size class (i,j,k) for n <= 9, two set representatives each
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i) {
                    const Degree expect = basic_degree_formula(n, k, i, j);
                    const Block I1 = prefix(i), J1 = prefix(j);
                    // second representative: I at the top of J, J shifted up
                    const Block J2 = prefix(j, n - j);
                    const Block I2 = prefix(i, n - i);
                    for (const BasicSpec spec : {BasicSpec{I1, J1}, BasicSpec{I2, J2}}) {
                        ++cases;
                        if (degree_via_span(basic(spec, n, k)) != expect) ++bad;
                    }
                }
    // literally all (I,J,k) for n <= 6
    for (int n = 0; n <= 6; ++n) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (int k = 0; k <= n; ++k)
            for (std::uint64_t jm = 0; jm < limit; ++jm)
                for (std::uint64_t im = jm;; im = (im - 1) & jm) {
                    ++cases;
                    const Degree expect =
                        basic_degree_formula(n, k, Block{im}.size(), Block{jm}.size());
                    if (degree_via_span(basic({Block{im}, Block{jm}}, n, k)) != expect) ++bad;
                    if (im == 0) break;
                }
    }
    report(4, bad == 0,
           "basic degree formula vs span method: " + std::to_string(bad) + " mismatches in " +
               std::to_string(cases) + " cases (all size classes n<=9, all sets n<=6)",
           timer.seconds());
}

void criterion_5() {
    Timer timer;
    std::mt19937_64 rng(987654321);
    long bad = 0, cases = 0;
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            const std::vector<Block> blocks = slice_blocks(n, k);
            for (int round = 0; round < 200; ++round) {
                SliceFunction y(n, k);
                while (y.is_zero())
                    for (Block b : blocks)
                        if (rng() & 1) y.set(b, 1);
                ++cases;
                if (degree_via_span(y) != degree_via_dual(y)) ++bad;
            }
        }
    report(5, bad == 0,
           "span vs dual-distribution degree on " + std::to_string(cases) +
               " random Boolean sets (200 per (n,k), 2k<=n<=8): " + std::to_string(bad) +
               " mismatches",
           timer.seconds());
}

void criterion_6() {
    Timer timer;
    struct Anchor {
        int n, k, t, cap;
        long expected;
    };
    const std::vector<Anchor> anchors = {
        {6, 3, 2, 2, 2}, {6, 3, 3, 1, 1}, {5, 2, 0, 10, 10}, {5, 2, 1, 4, 4}, {6, 3, 1, 10, 10},
    };
    bool ok = true;
    std::string detail;
    for (const Anchor& a : anchors) {
        const M1Result res = m1_bruteforce(a.n, a.k, a.t, a.cap);
        const BigInt div = delta(a.n, a.k, a.t);
        const Rational lp = lp_bound(a.n, a.k, a.t);
        const bool hit = res.found && res.value == a.expected &&
                         mpz_divisible_p(res.value.get_mpz_t(), div.get_mpz_t()) &&
                         Rational(res.value) >= lp;
        if (!hit) {
            ok = false;
            detail += " (" + std::to_string(a.n) + "," + std::to_string(a.k) + "," +
                      std::to_string(a.t) + ")";
        }
    }
    report(6, ok,
           "exact m1 anchors (values, delta-divisibility, >= LP): " +
               std::string(ok ? "all 5 hold" : "failed at" + detail),
           timer.seconds());
}

void criterion_7() {
    Timer timer;
    const std::vector<SliceFunction> designs = search_designs({2, 6, 3, 2});
    bool ok = designs.size() == 12;
    long intersections_checked = 0;
    const GroundSet g(6);
    for (const SliceFunction& d : designs) {
        if (!hartman_anticomplementary_check(d)) ok = false;
        for (Block K : slice_blocks(6, 3)) {
            SliceFunction a(6, 3);
            a.set(K, 1);
            a.set(complement(K, g), 1);
            BigInt meet = 0;
            for (const auto& [b, v] : a.entries())
                if (d.value(b) == 1) ++meet;
            if (meet != 1) ok = false;
            if (!design_orthogonality_check(a, d, 2)) ok = false;
            ++intersections_checked;
        }
    }
    report(7, ok,
           "halving search: " + std::to_string(designs.size()) +
               " labeled 2-(6,3,2) designs, all anti-complementary, all " +
               std::to_string(intersections_checked) + " {K,K^c} intersections equal 1",
           timer.seconds());
}

// ---- criterion 8: property suites ------------------------------------

long pascal_split_failures(int max_n) {
    long bad = 0;
    for (int n = 0; n <= max_n; ++n) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (int k = 0; k <= n; ++k) {
            for (std::uint64_t jm = 0; jm < limit; ++jm)
                for (std::uint64_t im = jm;; im = (im - 1) & jm) {
                    const Block I{im}, J{jm};
                    for (int x : Block{jm & ~im}.points()) {
                        const SliceFunction whole = basic({I, J}, n, k);
                        const SliceFunction left = basic({I.with(x), J}, n, k);
                        const SliceFunction right = basic({I, J.without(x)}, n, k);
                        if (!(whole == left + right)) ++bad;
                        for (const auto& [b, v] : left.entries())
                            if (right.value(b) != 0) ++bad;
                    }
                    if (im == 0) break;
                }
            for (std::uint64_t im = 0; im < limit; ++im)
                for (std::uint64_t jm = 0; jm < limit; ++jm) {
                    if ((im & jm) != 0) continue;
                    const Block I{im}, J{jm};
                    for (int x : complement(I | J, GroundSet(n)).points())
                        if (!(paired({I, J}, n, k) ==
                              paired({I.with(x), J}, n, k) + paired({I, J.with(x)}, n, k)))
                            ++bad;
                }
        }
    }
    return bad;
}

long elementary_modification_failures(int max_n) {
    long bad = 0;
    for (int n = 1; n <= max_n; ++n) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        const GroundSet g(n);
        const GroundSet g1(n - 1);
        for (int k = 0; k <= n; ++k)
            for (std::uint64_t im = 0; im < limit; ++im)
                for (std::uint64_t jm = 0; jm < limit; ++jm) {
                    if ((im & jm) != 0) continue;
                    const Block I{im}, J{jm};
                    const SliceFunction p = paired({I, J}, n, k);
                    if (!(dual(p) == paired({I, J}, n, n - k))) ++bad;

                    const SliceFunction fb = basic({I, complement(J, g)}, n, k);
                    if (!(dual(fb) == basic({J, complement(I, g)}, n, n - k))) ++bad;

                    for (int x = 0; x < n; ++x) {
                        const Block Ix = squeeze_out(I.without(x), x);
                        const Block Jx = squeeze_out(J.without(x), x);
                        if (k >= 1) {
                            SliceFunction expect(n - 1, k - 1);
                            if (I.contains(x))
                                expect = basic({Ix, complement(Jx, g1)}, n - 1, k - 1);
                            else if (J.contains(x))
                                expect = basic({Jx, complement(Ix, g1)}, n - 1, k - 1);
                            else
                                expect = paired({Ix, Jx}, n - 1, k - 1);
                            if (!(derive(p, x) == expect)) ++bad;
                        }
                        if (n - k >= 1) {
                            SliceFunction expect(n - 1, k);
                            if (I.contains(x))
                                expect = basic({Jx, complement(Ix, g1)}, n - 1, k);
                            else if (J.contains(x))
                                expect = basic({Ix, complement(Jx, g1)}, n - 1, k);
                            else
                                expect = paired({Ix, Jx}, n - 1, k);
                            if (!(residual(p, x) == expect)) ++bad;
                        }
                    }
                }
    }
    return bad;
}

long size_classification_failures(int max_n) {
    long bad = 0;
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int i = 0; i <= n; ++i)
                for (int j = 0; i + j <= n; ++j) {
                    const SliceFunction p = paired({prefix(i), prefix(j, i)}, n, k);
                    const int lo = std::min(i, j), hi = std::max(i, j);
                    const int mk = std::min(k, n - k), xk = std::max(k, n - k);
                    const bool zero_expected = lo > mk || hi > xk;
                    const bool one_expected =
                        (lo == mk && mk < hi && hi <= xk) || (lo <= mk && mk < hi && hi == xk);
                    const bool two_expected =
                        (i == j && i == mk) || (n == 2 * k && hi == k && i != j) ||
                        (n != 2 * k - 1 && n != 2 * k && n != 2 * k + 1 &&
                         lo == std::min(k - 1, n - k - 1) && hi == std::max(k - 1, n - k - 1));
                    if (p.is_zero() != zero_expected) ++bad;
                    if ((p.size() == 1) != one_expected) ++bad;
                    if ((p.size() == 2) != two_expected) ++bad;
                }
    return bad;
}

long meet_join_failures(int max_n) {
    long bad = 0;
    for (int n = 0; n <= max_n; ++n) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        const GroundSet g(n);
        for (int k = 0; k <= n; ++k)
            for (std::uint64_t im = 0; im < limit; ++im)
                for (std::uint64_t jm = 0; jm < limit; ++jm) {
                    if ((im & jm) != 0) continue;
                    const Block I{im}, J{jm};
                    const int i = I.size(), j = J.size();
                    if (std::max(i, j) > std::min(k, n - k)) continue;
                    const SliceFunction p = paired({I, J}, n, k);
                    const Block expect_meet =
                        (i == j && i == n - k) ? complement(I | J, g) : Block{0};
                    const Block expect_join = (i == j && i == k) ? (I | J) : Block{g.mask()};
                    if (p.support_meet() != expect_meet) ++bad;
                    if (p.support_join() != expect_join) ++bad;
                }
    }
    return bad;
}

long recovery_failures(int max_n) {
    long bad = 0;
    for (int n = 0; n <= max_n; ++n) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (int k = 0; k <= n; ++k)
            for (std::uint64_t im = 0; im < limit; ++im)
                for (std::uint64_t jm = 0; jm < limit; ++jm) {
                    if ((im & jm) != 0) continue;
                    const Block I{im}, J{jm};
                    const SliceFunction p = paired({I, J}, n, k);
                    if (p.size() < 3 || p == all_one(n, k)) continue;
                    const LegRecovery rec = recover_paired_legs(p);
                    if (n == 4 && k == 2 && I.size() == 1 && J.size() == 1) {
                        // the one family where two pairs represent the same set
                        if (rec.outcome != LegRecovery::Outcome::ambiguous) ++bad;
                        continue;
                    }
                    if (rec.outcome != LegRecovery::Outcome::recovered) {
                        ++bad;
                        continue;
                    }
                    if (!((rec.I == I && rec.J == J) || (rec.I == J && rec.J == I))) ++bad;
                }
    }
    return bad;
}

void criterion_8(bool slow) {
    Timer timer;
    const long pascal = pascal_split_failures(8);
    const long modifications = elementary_modification_failures(8);
    const long sizes = size_classification_failures(10);
    const long meets = meet_join_failures(8);
    const long recoveries = recovery_failures(slow ? 9 : 8);
    const long bad = pascal + modifications + sizes + meets + recoveries;
    report(8, bad == 0,
           "property suites (Pascal splits, dual/derive/residual, sizes, meet/join, leg recovery"
           ", n<=8" + std::string(slow ? ", recovery n<=9" : "") + "): " + std::to_string(bad) +
               " failures",
           timer.seconds());
}

void criterion_9() {
    Timer timer;
    long bad = 0, cases = 0;
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int t = 1; t <= k - 1; ++t)
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; i + j <= n; ++j) {
                        ++cases;
                        const PairedVsPencil got = classify_paired_vs_pencil(n, k, t, i, j);
                        PairedVsPencil direct = PairedVsPencil::not_degree_t;
                        if (paired_degree_formula(n, k, i, j) == t) {
                            const BigInt size = binom(n - i - j, k - i) + binom(n - i - j, k - j);
                            const BigInt pencil = pencil_size(n, k, t);
                            direct = size < pencil    ? PairedVsPencil::smaller
                                     : size == pencil ? PairedVsPencil::equal
                                                      : PairedVsPencil::larger;
                        }
                        if (got != direct) ++bad;
                    }
    // the special equal/smaller families must actually be exercised
    bool families = classify_paired_vs_pencil(6, 3, 2, 2, 2) == PairedVsPencil::equal &&
                    classify_paired_vs_pencil(10, 5, 4, 4, 3) == PairedVsPencil::equal &&
                    classify_paired_vs_pencil(10, 5, 4, 4, 4) == PairedVsPencil::smaller &&
                    classify_paired_vs_pencil(6, 3, 2, 3, 0) == PairedVsPencil::smaller &&
                    classify_paired_vs_pencil(9, 4, 2, 3, 0) == PairedVsPencil::equal;
    report(9, bad == 0 && families,
           "paired-vs-pencil classification vs direct size comparison: " + std::to_string(bad) +
               " mismatches in " + std::to_string(cases) + " cases (special families hit)",
           timer.seconds());
}

void bound_sandwich() {
    Timer timer;
    bool ok = true;
    auto check = [&](int t, const std::vector<TableRow>& table) {
        for (const TableRow& row : table) {
            const Rational lp = lp_bound(row.n, row.k, t);
            const BigInt best = std::min(pencil_size(row.n, row.k, t), paired_min_size(row.n, row.k, t));
            if (!(lp <= Rational(best))) ok = false;
        }
    };
    check(2, kTable1);
    check(3, kTable2);
    check(4, kTable3);
    report(0, ok, "bound sandwich lp <= min(pencil, paired) on every table row", timer.seconds());
}

} // namespace

int main(int argc, char** argv) {
    bool slow = false;
    int only = -1;
    for (int idx = 1; idx < argc; ++idx) {
        if (std::strcmp(argv[idx], "--slow") == 0) slow = true;
        else if (std::strcmp(argv[idx], "--criterion") == 0 && idx + 1 < argc) only = std::atoi(argv[++idx]);
        else {
            std::cerr << "usage: acceptance [--criterion N] [--slow]\n";
            return 2;
        }
    }
    auto want = [&](int c) { return only < 0 || only == c; };

    if (want(1)) criterion_1();
    if (want(2)) criterion_2();
    if (want(3)) criterion_3(slow);
    if (want(4)) criterion_4();
    if (want(5)) criterion_5();
    if (want(6)) criterion_6();
    if (want(7)) criterion_7();
    if (want(8)) criterion_8(slow);
    if (want(9)) criterion_9();
    if (only < 0) bound_sandwich();

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " acceptance checks failed" << std::endl;
    return 1;
}
