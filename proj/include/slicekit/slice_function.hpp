#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "slicekit/combinatorics.hpp"

namespace slicekit {

/// A rational-valued function on the slice C(V,k), stored sparsely: only
/// non-zero values are kept, keyed by block in colex order. Immutable in
/// spirit; the mutating helpers exist for construction only.
class SliceFunction {
public:
    SliceFunction(int n, int k) : n_(n), k_(k) {
        GroundSet g(n);
        if (k < 0 || k > n) fail(ErrorCode::argument, "slice parameter k out of range");
    }

    int n() const { return n_; }
    int k() const { return k_; }

    const std::map<Block, Rational>& entries() const { return values_; }
    std::size_t support_size() const { return values_.size(); }
    bool is_zero() const { return values_.empty(); }

    Rational value(Block b) const {
        auto it = values_.find(b);
        return it == values_.end() ? Rational(0) : it->second;
    }

    /// Sets f(b) = v, dropping the entry when v = 0. Validates the key.
    void set(Block b, Rational v);

    /// Sum of all values; equals the support size for Boolean functions.
    Rational size() const;

    bool is_boolean() const;

    /// Intersection / union of the support. Meaningless for the zero
    /// function (returns full mask / empty block respectively).
    Block support_meet() const;
    Block support_join() const;

    /// Dense colex-ordered coefficient vector of length C(n,k).
    std::vector<Rational> dense() const;

    SliceFunction& operator+=(const SliceFunction& other);
    SliceFunction& operator-=(const SliceFunction& other);
    friend SliceFunction operator+(SliceFunction a, const SliceFunction& b) { return a += b; }
    friend SliceFunction operator-(SliceFunction a, const SliceFunction& b) { return a -= b; }
    friend bool operator==(const SliceFunction& a, const SliceFunction& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.values_ == b.values_;
    }

private:
    void check_same_slice(const SliceFunction& other) const;

    int n_, k_;
    std::map<Block, Rational> values_;
};

/// I <= K <= J specification of a basic function.
struct BasicSpec {
    Block I, J;
};

/// Disjoint (I,J) specification of a paired function.
struct PairedSpec {
    Block I, J;
};

SliceFunction all_one(int n, int k);
SliceFunction indicator(int n, int k, std::span<const Block> blocks);

/// Characteristic function of {K : I <= K <= J}; the zero function exactly
/// when #I > k or #J < k.
SliceFunction basic(const BasicSpec& spec, int n, int k);

/// f_{I,J^c} + f_{J,I^c}. Boolean except for I = J = {}, which yields the
/// constant-2 function.
SliceFunction paired(const PairedSpec& spec, int n, int k);

/// B -> f(B^c) on the (n-k)-slice.
SliceFunction dual(const SliceFunction& f);

/// K -> f(K + {x}) on the slice of V - {x} (labels above x shift down).
SliceFunction derive(const SliceFunction& f, int x);

/// Restriction to blocks avoiding x, on the slice of V - {x}.
SliceFunction residual(const SliceFunction& f, int x);

struct LegRecovery {
    enum class Outcome { recovered, not_paired, ambiguous };
    Outcome outcome;
    Block I, J;         // valid when recovered; I <= J in colex order
    std::string detail; // reason for ambiguous / not_paired
};

/// Reconstructs the unique disjoint pair {I,J} with g = p_{I,J}. Inputs of
/// support size < 3 and the all-one function are rejected as ambiguous
/// (uniqueness can fail there); anything else that is not a paired function
/// reports not_paired.
LegRecovery recover_paired_legs(const SliceFunction& g);

} // namespace slicekit
