#include "slicekit/degree.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "slicekit/threads.hpp"

namespace slicekit {

namespace {

// Reduces v in place by the pivot rows; rows are in reduced form, so one
// pass in lead order suffices.
void reduce(std::vector<Rational>& v, const std::vector<std::vector<Rational>>& rows,
            const std::vector<std::size_t>& lead) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational factor = v[lead[r]];
        if (factor == 0) continue;
        const auto& row = rows[r];
        for (std::size_t c = lead[r]; c < v.size(); ++c)
            if (row[c] != 0) v[c] -= factor * row[c];
    }
}

} // namespace

PencilSpan::PencilSpan(int n, int k, int t) {
    if (k < 0 || k > n) fail(ErrorCode::argument, "pencil span: k out of range");
    if (t < 0 || t > n) fail(ErrorCode::argument, "pencil span: t out of range");
    const std::uint64_t count = binom_u64(n, k);
    if (count > 6435) fail(ErrorCode::limit, "pencil span limited to C(n,k) <= 6435");
    cols_ = static_cast<std::size_t>(count);

    const std::vector<Block> blocks = slice_blocks(n, k);
    for_each_block(n, t, [&](Block tset) {
        std::vector<Rational> row(cols_, Rational(0));
        for (std::size_t c = 0; c < blocks.size(); ++c)
            if (tset.subset_of(blocks[c])) row[c] = 1;
        reduce(row, rows_, lead_);
        const auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
        if (it == row.end()) return;
        const std::size_t pivot = static_cast<std::size_t>(it - row.begin());
        const Rational inv = row[pivot];
        for (std::size_t c = pivot; c < cols_; ++c)
            if (row[c] != 0) row[c] /= inv;
        // clear the pivot column from earlier rows, keeping reduced form
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational coeff = rows_[r][pivot];
            if (coeff == 0) continue;
            for (std::size_t c = pivot; c < cols_; ++c)
                if (row[c] != 0) rows_[r][c] -= coeff * row[c];
        }
        // insert sorted by lead column
        const auto pos = std::lower_bound(lead_.begin(), lead_.end(), pivot);
        const std::size_t idx = static_cast<std::size_t>(pos - lead_.begin());
        lead_.insert(pos, pivot);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
    });
}

bool PencilSpan::contains(const std::vector<Rational>& vec) const {
    if (vec.size() != cols_) fail(ErrorCode::argument, "vector length does not match the slice");
    std::vector<Rational> v = vec;
    reduce(v, rows_, lead_);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

const PencilSpan& pencil_span(int n, int k, int t) {
    using Key = std::tuple<int, int, int>;
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<PencilSpan>> cache;
    const Key key{n, k, t};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<PencilSpan>(n, k, t);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, std::move(built));
    return *it->second;
}

Degree degree_via_span(const SliceFunction& f) {
    if (f.is_zero()) return kDegreeNegInf;
    const std::vector<Rational> vec = f.dense();
    const int tmax = std::min(f.k(), f.n() - f.k());
    for (int t = 0; t <= tmax; ++t)
        if (pencil_span(f.n(), f.k(), t).contains(vec)) return t;
    fail(ErrorCode::internal, "span search exhausted past min(k, n-k)");
}

Degree basic_degree_formula(int n, int k, int i, int j) {
    if (!(0 <= i && i <= j && j <= n)) fail(ErrorCode::argument, "need 0 <= i <= j <= n");
    if (i > k || j < k) return kDegreeNegInf;
    return std::min({i + (n - j), k, n - k});
}

Degree paired_degree_formula(int n, int k, int i, int j) {
    if (i < 0 || j < 0 || i + j > n) fail(ErrorCode::argument, "need i, j >= 0 and i + j <= n");
    if (k < 0 || k > n) fail(ErrorCode::argument, "k out of range");
    const int lo = std::min(i, j), hi = std::max(i, j);
    if (lo > std::min(k, n - k) || hi > std::max(k, n - k)) return kDegreeNegInf;
    if ((i + j) % 2 == 1 && i + j <= std::min(k, n - k)) return i + j - 1;
    if (k % 2 == 1 && n == 2 * k && i + j >= k) return k - 1;
    return std::min({i + j, k, n - k});
}

Degree elementary_bound(int n, int k, int i, int j) {
    if (i < 0 || j < 0 || i + j > n) fail(ErrorCode::argument, "need i, j >= 0 and i + j <= n");
    return std::min({i + j, k, n - k});
}

TheoremReport verify_paired_theorem(int max_n, int threads) {
    if (max_n < 0 || max_n > 12) fail(ErrorCode::limit, "verify_paired_theorem limited to max_n <= 12");
    struct Task {
        int n, k;
    };
    std::vector<Task> tasks;
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k) tasks.push_back({n, k});

    std::vector<TheoremReport> partial(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t idx) {
        const auto [n, k] = tasks[idx];
        TheoremReport& rep = partial[idx];
        for (int i = 0; i + 0 <= n; ++i) {
            for (int j = 0; i + j <= n; ++j) {
                Block I = Block{i == 0 ? 0 : (std::uint64_t{1} << i) - 1};
                Block J = Block{((j == 0 ? 0 : (std::uint64_t{1} << j) - 1)) << i};
                const Degree span = degree_via_span(paired({I, J}, n, k));
                const Degree formula = paired_degree_formula(n, k, i, j);
                ++rep.cases;
                if (span != formula) rep.mismatches.push_back({n, k, i, j, span, formula});
            }
        }
    });

    TheoremReport out;
    for (const auto& rep : partial) {
        out.cases += rep.cases;
        out.mismatches.insert(out.mismatches.end(), rep.mismatches.begin(), rep.mismatches.end());
    }
    return out;
}

} // namespace slicekit
