#include "slicekit/scheme.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace slicekit {

QMatrix::QMatrix(int n, int k) : n_(n), k_(k) {
    entries_.resize(static_cast<std::size_t>(k + 1));
    for (int l = 0; l <= k; ++l) {
        auto& row = entries_[static_cast<std::size_t>(l)];
        row.reserve(static_cast<std::size_t>(k + 1));
        for (int i = 0; i <= k; ++i) row.push_back(q_eigenvalue(n, k, l, i));
    }
}

const QMatrix& QMatrix::get(int n, int k) {
    if (2 * k > n) fail(ErrorCode::domain, "Q matrix defined for 2k <= n; dualize first");
    GroundSet g(n);
    if (k < 0) fail(ErrorCode::argument, "k out of range");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<QMatrix>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, k}];
    if (!slot) slot = std::unique_ptr<QMatrix>(new QMatrix(n, k));
    return *slot;
}

Rational q_eigenvalue(int n, int k, int l, int i) {
    if (2 * k > n) fail(ErrorCode::domain, "Q_l(i) defined for 2k <= n; dualize first");
    if (l < 0 || i < 0 || l > k || i > k) fail(ErrorCode::argument, "need 0 <= l, i <= k");
    const Rational multiplicity(binom(n, l) - binom(n, l - 1));
    Rational sum(0);
    for (int j = 0; j <= l; ++j) {
        const BigInt num = binom(l, j) * binom(n + 1 - l, j) * binom(i, j);
        if (num == 0) continue;
        const BigInt den = binom(k, j) * binom(n - k, j); // j <= l <= k <= n-k keeps this non-zero
        Rational term = make_rational(num, den);
        if (j % 2 == 1) term = -term;
        sum += term;
    }
    return multiplicity * sum;
}

std::vector<Rational> inner_distribution(const SliceFunction& Y) {
    if (Y.is_zero()) fail(ErrorCode::argument, "inner distribution of the empty set");
    if (!Y.is_boolean()) fail(ErrorCode::argument, "inner distribution requires a Boolean function");
    const int k = Y.k();
    std::vector<BigInt> pair_counts(static_cast<std::size_t>(k + 1), BigInt(0));
    std::vector<Block> support;
    support.reserve(Y.support_size());
    for (const auto& [b, v] : Y.entries()) support.push_back(b);
    for (Block a : support)
        for (Block b : support) {
            const int meet = Block{a.bits & b.bits}.size();
            ++pair_counts[static_cast<std::size_t>(k - meet)];
        }
    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(k + 1));
    const BigInt total(static_cast<unsigned long>(support.size()));
    for (int i = 0; i <= k; ++i) a.push_back(make_rational(pair_counts[static_cast<std::size_t>(i)], total));
    return a;
}

std::vector<Rational> dual_distribution(const SliceFunction& Y) {
    const QMatrix& Q = QMatrix::get(Y.n(), Y.k());
    const std::vector<Rational> a = inner_distribution(Y);
    std::vector<Rational> b(a.size(), Rational(0));
    for (int l = 0; l <= Q.d(); ++l)
        for (int i = 0; i <= Q.d(); ++i)
            b[static_cast<std::size_t>(l)] += Q.at(l, i) * a[static_cast<std::size_t>(i)];
    return b;
}

Degree degree_via_dual(const SliceFunction& Y) {
    if (Y.is_zero()) return kDegreeNegInf;
    const SliceFunction* work = &Y;
    SliceFunction dualized(0, 0);
    if (2 * Y.k() > Y.n()) {
        dualized = dual(Y);
        work = &dualized;
    }
    const std::vector<Rational> b = dual_distribution(*work);
    for (int l = static_cast<int>(b.size()) - 1; l >= 0; --l)
        if (b[static_cast<std::size_t>(l)] != 0) return l;
    fail(ErrorCode::internal, "dual distribution of a non-empty set vanished entirely");
}

bool is_design_scheme(const SliceFunction& Y, int t) {
    if (t < 0 || t > Y.k()) fail(ErrorCode::argument, "need 0 <= t <= k");
    const std::vector<Rational> b = dual_distribution(Y);
    for (int l = 1; l <= t; ++l)
        if (b[static_cast<std::size_t>(l)] != 0) return false;
    return true;
}

} // namespace slicekit
