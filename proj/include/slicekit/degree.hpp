#pragma once

#include <limits>
#include <vector>

#include "slicekit/slice_function.hpp"

namespace slicekit {

/// Degree of a slice function; the zero function gets kDegreeNegInf.
using Degree = int;
inline constexpr Degree kDegreeNegInf = std::numeric_limits<int>::min();

/// Row space of the t-pencil indicators on C(V,k), kept as reduced pivot
/// rows so membership queries are a single reduction pass.
class PencilSpan {
public:
    PencilSpan(int n, int k, int t);

    bool contains(const std::vector<Rational>& vec) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> rows_; // reduced rows, ascending lead column
    std::vector<std::size_t> lead_;
};

/// Shared per-(n,k,t) span cache; safe for concurrent readers.
const PencilSpan& pencil_span(int n, int k, int t);

/// Least t with f in the span of the t-pencils, decided by exact
/// elimination; kDegreeNegInf for the zero function.
Degree degree_via_span(const SliceFunction& f);

/// Degree of f_{I,J} with #I = i, #J = j, straight from the closed form.
Degree basic_degree_formula(int n, int k, int i, int j);

/// Degree of p_{I,J} with #I = i, #J = j (closed form, zero cases included).
Degree paired_degree_formula(int n, int k, int i, int j);

/// min(i+j, k, n-k): what the sum of the two legs guarantees on its own.
Degree elementary_bound(int n, int k, int i, int j);

struct TheoremMismatch {
    int n, k, i, j;
    Degree span_degree, formula_degree;
};

struct TheoremReport {
    long cases = 0;
    std::vector<TheoremMismatch> mismatches;
};

/// Compares span degree against the closed form for every n <= max_n,
/// 0 <= k <= n and every disjoint size pair (i,j). threads <= 0 picks a
/// worker count from SLICE_THREADS / hardware.
TheoremReport verify_paired_theorem(int max_n, int threads = 0);

} // namespace slicekit
