#include "slicekit/bounds.hpp"

#include <sstream>

#include "slicekit/degree.hpp"
#include "slicekit/scheme.hpp"
#include "slicekit/simplex.hpp"
#include "slicekit/threads.hpp"

#include <json.hpp>

namespace slicekit {

BigInt delta(int n, int k, int t) {
    if (!(0 <= t && t <= k && k <= n)) fail(ErrorCode::argument, "need 0 <= t <= k <= n");
    BigInt g = 0;
    for (int i = 0; i <= t; ++i) {
        BigInt term = binom(n - i, k - i);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.get_mpz_t());
    }
    return g;
}

BigInt pencil_size(int n, int k, int t) {
    if (!(0 <= t && t <= k && k <= n)) fail(ErrorCode::argument, "need 0 <= t <= k <= n");
    return binom(n - t, std::min(k, n - k) - t);
}

BigInt paired_min_size(int n, int k, int t) {
    if (2 * k > n) fail(ErrorCode::domain, "paired_min_size defined for 2k <= n");
    if (!(1 <= t && t <= k)) fail(ErrorCode::argument, "need 1 <= t <= k");
    if (t % 2 == 0) return binom(n - t - 1, k) + binom(n - t - 1, k - t - 1);
    return binom(n - t, k) + binom(n - t, k - t);
}

Rational lp_bound(int n, int k, int t) {
    if (2 * k > n) fail(ErrorCode::domain, "lp_bound defined for 2k <= n; dualize first");
    if (!(0 <= t && t <= k)) fail(ErrorCode::argument, "need 0 <= t <= k");
    const QMatrix& Q = QMatrix::get(n, k);
    const int d = Q.d();

    LPProblem p;
    p.objective.assign(static_cast<std::size_t>(d + 1), Rational(1));
    auto q_row = [&](int l) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(d + 1));
        for (int i = 0; i <= d; ++i) row.push_back(Q.at(l, i));
        return row;
    };
    for (int l = t + 1; l <= d; ++l) {
        p.rows.push_back(q_row(l));
        p.sense.push_back(LPProblem::Sense::eq);
        p.rhs.push_back(0);
    }
    for (int l = 0; l <= t; ++l) {
        p.rows.push_back(q_row(l));
        p.sense.push_back(LPProblem::Sense::ge);
        p.rhs.push_back(0);
    }
    // normalization a_0 = 1; without it the homogeneous program optimizes to 0
    std::vector<Rational> norm(static_cast<std::size_t>(d + 1), Rational(0));
    norm[0] = 1;
    p.rows.push_back(std::move(norm));
    p.sense.push_back(LPProblem::Sense::eq);
    p.rhs.push_back(1);

    const LPSolution sol = solve_min(p);
    if (sol.status != LPSolution::Status::optimal)
        fail(ErrorCode::internal, "degree LP did not reach an optimum");
    return sol.value;
}

M1Result m1_bruteforce(int n, int k, int t, int size_cap) {
    if (!(0 <= t && t <= k && k <= n)) fail(ErrorCode::argument, "need 0 <= t <= k <= n");
    const BigInt slice = binom(n, k);
    const bool small_cap = slice <= 36 && size_cap >= 1 && size_cap <= 6;
    const bool wide_cap = slice <= 20 && size_cap >= 1 && size_cap <= 10;
    if (!small_cap && !wide_cap)
        fail(ErrorCode::limit, "m1_bruteforce limited to C(n,k) <= 36 with cap <= 6, or C(n,k) <= 20 with cap <= 10");

    const std::vector<Block> blocks = slice_blocks(n, k);
    const std::size_t total = blocks.size();
    const BigInt div = delta(n, k, t);
    const int effective_t = std::min(t, std::min(k, n - k));
    const PencilSpan& span = pencil_span(n, k, effective_t);

    for (int s = 1; s <= size_cap; ++s) {
        if (!mpz_divisible_p(BigInt(s).get_mpz_t(), div.get_mpz_t())) continue;
        if (static_cast<std::size_t>(s) > total) break;
        // every witness can be relabeled to contain the colex-least block
        std::vector<std::size_t> pick(static_cast<std::size_t>(s));
        pick[0] = 0;
        for (int r = 1; r < s; ++r) pick[static_cast<std::size_t>(r)] = static_cast<std::size_t>(r);
        while (true) {
            SliceFunction f(n, k);
            for (std::size_t idx : pick) f.set(blocks[idx], 1);
            if (span.contains(f.dense())) {
                M1Result out;
                out.found = true;
                out.value = s;
                for (std::size_t idx : pick) out.witness.push_back(blocks[idx]);
                return out;
            }
            // next (s-1)-combination of {1..total-1} after the fixed block
            int pos = s - 1;
            while (pos >= 1 && pick[static_cast<std::size_t>(pos)] ==
                                   total - static_cast<std::size_t>(s - pos))
                --pos;
            if (pos < 1) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int r = pos + 1; r < s; ++r)
                pick[static_cast<std::size_t>(r)] = pick[static_cast<std::size_t>(r - 1)] + 1;
        }
    }
    return {};
}

PairedVsPencil classify_paired_vs_pencil(int n, int k, int t, int i, int j) {
    if (2 * k > n) fail(ErrorCode::domain, "classification defined for 2k <= n");
    if (!(1 <= t && t <= k - 1)) fail(ErrorCode::argument, "need 1 <= t <= k-1");
    if (i < 0 || j < 0 || i + j > n) fail(ErrorCode::argument, "need i, j >= 0 and i + j <= n");
    if (paired_degree_formula(n, k, i, j) != t) return PairedVsPencil::not_degree_t;

    const int lo = std::min(i, j), hi = std::max(i, j);
    const bool even_t = t % 2 == 0;
    if (even_t && n == 2 * k && hi == t + 1 && lo == 0) return PairedVsPencil::smaller;
    if (even_t && n == 2 * k && k == t + 1 && hi == t + 1)
        return PairedVsPencil::smaller; // alternative legs of the same two-block sets
    if (even_t && n == 2 * k && k == t + 1 && lo >= 1 && hi <= k - 1 && i + j > k &&
        2 * binom(2 * k - i - j, k - i) < k + 1)
        return PairedVsPencil::smaller;
    if (even_t && n == 2 * k + 1 && hi == t + 1 && lo == 0) return PairedVsPencil::equal;
    if (even_t && n == 2 * k && k == t + 1 && lo >= 1 && hi <= k - 1 && i + j >= k &&
        2 * binom(2 * k - i - j, k - i) == k + 1)
        return PairedVsPencil::equal;
    return PairedVsPencil::larger;
}

const char* to_string(PairedVsPencil c) {
    switch (c) {
    case PairedVsPencil::smaller: return "smaller";
    case PairedVsPencil::equal: return "equal";
    case PairedVsPencil::larger: return "larger";
    case PairedVsPencil::not_degree_t: return "not-degree-t";
    }
    return "?";
}

BigInt conjecture_value(int n, int k, int t) {
    if (!(0 <= t && t <= std::min(k, n - k))) fail(ErrorCode::argument, "need 0 <= t <= min(k, n-k)");
    if (n == 2 * k && t % 2 == 0 && t != k) return 2 * binom(2 * k - t - 1, k);
    return binom(n - t, std::min(k, n - k) - t);
}

BoundRow compute_bound_row(int n, int k, int t) {
    BoundRow row;
    row.n = n;
    row.k = k;
    row.t = t;
    row.pencil = pencil_size(n, k, t);
    row.paired = paired_min_size(n, k, t);
    row.divisor = delta(n, k, t);
    row.lp = lp_bound(n, k, t);
    return row;
}

namespace {

std::vector<BoundRow> compute_rows(int t, std::span<const std::pair<int, int>> nk, int threads) {
    std::vector<BoundRow> rows(nk.size());
    std::vector<std::string> errors(nk.size());
    parallel_for(nk.size(), threads, [&](std::size_t idx) {
        try {
            rows[idx] = compute_bound_row(nk[idx].first, nk[idx].second, t);
        } catch (const Error& e) {
            errors[idx] = e.what();
        }
    });
    for (std::size_t idx = 0; idx < nk.size(); ++idx)
        if (!errors[idx].empty())
            fail(ErrorCode::domain, "row (" + std::to_string(nk[idx].first) + "," +
                                        std::to_string(nk[idx].second) + "): " + errors[idx]);
    return rows;
}

} // namespace

std::string table_csv(int t, std::span<const std::pair<int, int>> nk, int threads) {
    const std::vector<BoundRow> rows = compute_rows(t, nk, threads);
    std::ostringstream out;
    out << "n,k,t,pencil,paired,delta,lp_exact,lp_2dp\n";
    for (const BoundRow& r : rows)
        out << r.n << ',' << r.k << ',' << r.t << ',' << to_string(r.pencil) << ','
            << to_string(r.paired) << ',' << to_string(r.divisor) << ',' << to_string(r.lp) << ','
            << round_half_up_2dp(r.lp) << '\n';
    return out.str();
}

std::string table_json(int t, std::span<const std::pair<int, int>> nk, int threads) {
    const std::vector<BoundRow> rows = compute_rows(t, nk, threads);
    nlohmann::ordered_json doc;
    doc["t"] = t;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const BoundRow& r : rows) {
        nlohmann::ordered_json item;
        item["n"] = r.n;
        item["k"] = r.k;
        item["pencil"] = to_string(r.pencil);
        item["paired"] = to_string(r.paired);
        item["delta"] = to_string(r.divisor);
        item["lp_exact"] = to_string(r.lp);
        item["lp_2dp"] = round_half_up_2dp(r.lp);
        doc["rows"].push_back(std::move(item));
    }
    return doc.dump();
}

} // namespace slicekit
