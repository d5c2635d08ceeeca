#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicekit/slice_function.hpp"

namespace slicekit {

/// gcd of C(n-i,k-i) for i = 0..t; divides the size of every non-empty
/// Boolean function of degree <= t.
BigInt delta(int n, int k, int t);

/// C(n-t, min(k,n-k)-t): size of the smallest basic construction.
BigInt pencil_size(int n, int k, int t);

/// Size of the smallest degree-<=t paired construction used in the tables:
/// #p_{t+1,0} for even t, #p_{t,0} for odd t. Requires 2k <= n, 1 <= t <= k.
BigInt paired_min_size(int n, int k, int t);

/// Optimal value of the degree-t linear program (a_0 normalized to 1),
/// solved with an exact-rational simplex. Requires 2k <= n, 0 <= t <= k.
Rational lp_bound(int n, int k, int t);

struct M1Result {
    bool found = false;
    BigInt value;                       // minimal size when found
    std::vector<Block> witness;         // a minimal set, colex order
};

/// Exact minimum size of a non-zero Boolean degree-<=t function, by
/// exhaustive search over sizes 1..size_cap (skipping sizes delta does not
/// divide, and fixing the colex-least block by relabeling symmetry).
M1Result m1_bruteforce(int n, int k, int t, int size_cap);

enum class PairedVsPencil { smaller, equal, larger, not_degree_t };

/// Where a paired function with leg sizes (i,j) of degree exactly t stands
/// against the t-pencil, decided by the closed classification (the direct
/// size comparison is the test oracle, not the implementation).
PairedVsPencil classify_paired_vs_pencil(int n, int k, int t, int i, int j);

const char* to_string(PairedVsPencil c);

/// The conjectured minimum size; an unproved value, labeled as such by
/// callers that print it.
BigInt conjecture_value(int n, int k, int t);

struct BoundRow {
    int n = 0, k = 0, t = 0;
    BigInt pencil, paired, divisor;
    Rational lp;
    std::optional<BigInt> m1_exact;     // when a brute-force run settled it
    std::string external_note;          // free text for externally supplied values
};

BoundRow compute_bound_row(int n, int k, int t);

/// CSV with header n,k,t,pencil,paired,delta,lp_exact,lp_2dp; rows computed
/// in parallel, emitted in input order.
std::string table_csv(int t, std::span<const std::pair<int, int>> rows, int threads = 0);

/// Same rows as JSON; big values and rationals as exact strings.
std::string table_json(int t, std::span<const std::pair<int, int>> rows, int threads = 0);

} // namespace slicekit
