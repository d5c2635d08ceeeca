#pragma once

#include <vector>

#include "slicekit/degree.hpp"
#include "slicekit/slice_function.hpp"

namespace slicekit {

/// Second eigenmatrix of J(n,k), entries Q_l(i) for 0 <= l,i <= k.
/// Only defined for 2k <= n; dualize first otherwise.
class QMatrix {
public:
    /// Cached per (n,k); the cache is write-once behind a lock.
    static const QMatrix& get(int n, int k);

    const Rational& at(int l, int i) const { return entries_[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)]; }
    int d() const { return k_; }

private:
    QMatrix(int n, int k);
    int n_, k_;
    std::vector<std::vector<Rational>> entries_;
};

Rational q_eigenvalue(int n, int k, int l, int i);

/// a_i = #((Y x Y) and R_i) / #Y over ordered pairs; Y non-empty Boolean.
std::vector<Rational> inner_distribution(const SliceFunction& Y);

/// (b_0,...,b_d) = Q (a_0,...,a_d); requires 2k <= n.
std::vector<Rational> dual_distribution(const SliceFunction& Y);

/// max{l : b_l != 0}; dualizes internally when 2k > n. kDegreeNegInf for
/// the empty set.
Degree degree_via_dual(const SliceFunction& Y);

/// b_1 = ... = b_t = 0; requires 2k <= n and Y non-empty.
bool is_design_scheme(const SliceFunction& Y, int t);

} // namespace slicekit
