#include "slicekit/designs.hpp"

#include <algorithm>

#include "slicekit/degree.hpp"

namespace slicekit {

Rational DesignParams::lambda_i(int i) const {
    if (i < 0 || i > t) fail(ErrorCode::argument, "need 0 <= i <= t");
    return make_rational(lambda * binom(v - i, t - i), binom(k - i, t - i));
}

bool DesignParams::admissible() const {
    if (lambda < 0 || lambda > lambda_max()) return false;
    for (int i = 0; i <= t; ++i)
        if (lambda_i(i).get_den() != 1) return false;
    return true;
}

Rational DesignParams::index() const {
    if (lambda <= 0) fail(ErrorCode::argument, "index defined for lambda > 0");
    return make_rational(lambda_max(), lambda);
}

std::optional<BigInt> design_index(const SliceFunction& D, int t) {
    if (!D.is_boolean()) fail(ErrorCode::argument, "design predicate requires a Boolean function");
    if (t < 0 || t > D.k()) fail(ErrorCode::argument, "need 0 <= t <= k");
    std::optional<BigInt> lambda;
    bool constant = true;
    for_each_block(D.n(), t, [&](Block T) {
        if (!constant) return;
        BigInt cover = 0;
        for (const auto& [b, v] : D.entries())
            if (T.subset_of(b)) ++cover;
        if (!lambda)
            lambda = cover;
        else if (*lambda != cover)
            constant = false;
    });
    if (!constant) return std::nullopt;
    return lambda;
}

std::vector<BigInt> intersection_numbers(const SliceFunction& D, Block S) {
    if (!D.is_boolean()) fail(ErrorCode::argument, "intersection numbers require a Boolean function");
    std::vector<BigInt> alpha(static_cast<std::size_t>(D.k() + 1), BigInt(0));
    for (const auto& [b, v] : D.entries()) ++alpha[static_cast<std::size_t>(Block{S.bits & b.bits}.size())];
    return alpha;
}

MendelsohnResult mendelsohn_check(const SliceFunction& D, Block S, int t) {
    const std::vector<BigInt> alpha = intersection_numbers(D, S);
    const int s = S.size();
    for (int i = 0; i <= t; ++i) {
        const std::optional<BigInt> lambda_i = design_index(D, i);
        if (!lambda_i) return {false, i};
        BigInt lhs = 0;
        for (int j = 0; j <= D.k(); ++j) lhs += binom(j, i) * alpha[static_cast<std::size_t>(j)];
        if (lhs != binom(s, i) * *lambda_i) return {false, i};
    }
    return {};
}

std::vector<Rational> koehler_alpha(const DesignParams& params, int s,
                                    std::span<const Rational> high_alphas) {
    if (!params.admissible()) fail(ErrorCode::argument, "inadmissible design parameters");
    if (s < 0 || s > params.v) fail(ErrorCode::argument, "reference-set size out of range");
    const int t = params.t, k = params.k;
    if (static_cast<int>(high_alphas.size()) != k - t)
        fail(ErrorCode::argument, "expected alpha_{t+1}..alpha_k");
    // sum_{j<=t} C(j,i) alpha_j = C(s,i) lambda_i - sum_{j>t} C(j,i) alpha_j,
    // back-substituted from i = t downward.
    std::vector<Rational> alpha(static_cast<std::size_t>(t + 1), Rational(0));
    for (int i = t; i >= 0; --i) {
        Rational rhs = Rational(binom(s, i)) * params.lambda_i(i);
        for (int j = t + 1; j <= k; ++j)
            rhs -= Rational(binom(j, i)) * high_alphas[static_cast<std::size_t>(j - t - 1)];
        for (int j = i + 1; j <= t; ++j)
            rhs -= Rational(binom(j, i)) * alpha[static_cast<std::size_t>(j)];
        alpha[static_cast<std::size_t>(i)] = rhs;
    }
    return alpha;
}

bool design_orthogonality_check(const SliceFunction& A, const SliceFunction& D, int t) {
    if (!A.is_boolean() || !D.is_boolean())
        fail(ErrorCode::argument, "orthogonality check requires Boolean functions");
    if (A.n() != D.n() || A.k() != D.k()) fail(ErrorCode::argument, "A and D live on different slices");
    const Degree degA = degree_via_span(A);
    if (degA != kDegreeNegInf && degA > t)
        fail(ErrorCode::argument, "deg(A) exceeds t");
    const std::optional<BigInt> lambda = design_index(D, t);
    if (!lambda) fail(ErrorCode::argument, "D is not a t-design");
    const DesignParams params{t, D.n(), D.k(), *lambda};
    BigInt meet = 0;
    for (const auto& [b, v] : A.entries())
        if (D.value(b) == 1) ++meet;
    return Rational(meet) == make_rational(*lambda, params.lambda_max()) * Rational(A.support_size());
}

bool hartman_anticomplementary_check(const SliceFunction& D) {
    const int n = D.n(), k = D.k();
    int a = 0;
    while ((1 << (a + 1)) - 1 < k) ++a;
    ++a;
    if ((1 << a) - 1 != k || n != 2 * k)
        fail(ErrorCode::argument, "expected parameters (k-1)-(2k,k,2^(a-1)) with k = 2^a - 1");
    const std::optional<BigInt> lambda = design_index(D, k - 1);
    if (!lambda || *lambda != BigInt(1) << (a - 1))
        fail(ErrorCode::argument, "expected a (k-1)-design of index 2");
    const GroundSet g(n);
    bool ok = true;
    for_each_block(n, k, [&](Block K) {
        const bool in = D.value(K) == 1;
        const bool co = D.value(complement(K, g)) == 1;
        if (in == co) ok = false;
    });
    return ok;
}

namespace {

struct DesignSearch {
    int t, v, k;
    BigInt lambda;
    std::size_t target; // lambda_0
    std::vector<Block> blocks;
    std::vector<Block> tsets;
    std::vector<BigInt> cover;
    std::vector<Block> chosen;
    std::vector<SliceFunction> out;

    void run(std::size_t from) {
        if (chosen.size() == target) {
            if (std::all_of(cover.begin(), cover.end(), [&](const BigInt& c) { return c == lambda; }))
                out.push_back(indicator(v, k, chosen));
            return;
        }
        for (std::size_t idx = from; idx < blocks.size(); ++idx) {
            if (blocks.size() - idx < target - chosen.size()) break;
            bool fits = true;
            for (std::size_t ti = 0; ti < tsets.size(); ++ti)
                if (tsets[ti].subset_of(blocks[idx]) && cover[ti] == lambda) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (std::size_t ti = 0; ti < tsets.size(); ++ti)
                if (tsets[ti].subset_of(blocks[idx])) ++cover[ti];
            chosen.push_back(blocks[idx]);
            run(idx + 1);
            chosen.pop_back();
            for (std::size_t ti = 0; ti < tsets.size(); ++ti)
                if (tsets[ti].subset_of(blocks[idx])) --cover[ti];
        }
    }
};

} // namespace

std::vector<SliceFunction> search_designs(const DesignParams& params) {
    const int t = params.t, v = params.v, k = params.k;
    if (t < 0 || k < t || v < k) fail(ErrorCode::argument, "need 0 <= t <= k <= v");
    if (params.lambda < 0 || params.lambda > params.lambda_max()) return {};
    // the extremes have closed answers: only the empty / complete design
    if (params.lambda == 0) return {SliceFunction(v, k)};
    if (params.lambda == params.lambda_max()) return {all_one(v, k)};
    if (binom(v, k) > 24) fail(ErrorCode::limit, "design search limited to C(v,k) <= 24");
    const Rational lambda0 = params.lambda_i(0);
    if (lambda0.get_den() != 1) return {}; // inadmissible, no designs exist
    if (lambda0 > 12) fail(ErrorCode::limit, "design search limited to lambda_0 <= 12");

    DesignSearch search;
    search.t = t;
    search.v = v;
    search.k = k;
    search.lambda = params.lambda;
    search.target = static_cast<std::size_t>(lambda0.get_num().get_ui());
    search.blocks = slice_blocks(v, k);
    search.tsets = slice_blocks(v, t);
    search.cover.assign(search.tsets.size(), BigInt(0));
    search.run(0);
    return search.out;
}

} // namespace slicekit
