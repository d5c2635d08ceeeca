#pragma once

#include <optional>
#include <vector>

#include "slicekit/slice_function.hpp"

namespace slicekit {

/// Numerical parameters of a t-(v,k,lambda) design.
struct DesignParams {
    int t = 0, v = 0, k = 0;
    BigInt lambda = 0;

    /// lambda_i = lambda * C(v-i,t-i) / C(k-i,t-i), exact.
    Rational lambda_i(int i) const;
    BigInt lambda_max() const { return binom(v - t, k - t); }
    /// All lambda_0..lambda_t integral.
    bool admissible() const;
    /// lambda_max / lambda; designs of index 2 are halvings.
    Rational index() const;
    bool is_halving() const { return index() == 2; }
};

/// The constant coverage count when D is a t-design, otherwise nullopt.
std::optional<BigInt> design_index(const SliceFunction& D, int t);

/// alpha_i(S) = #{B in D : #(S and B) = i}, i = 0..k.
std::vector<BigInt> intersection_numbers(const SliceFunction& D, Block S);

struct MendelsohnResult {
    bool ok = true;
    int failing_i = -1; // first level where coverage or the equation breaks
};

/// Checks sum_j C(j,i) alpha_j(S) = C(s,i) lambda_i for i = 0..t, with each
/// lambda_i taken from a direct constant-coverage count.
MendelsohnResult mendelsohn_check(const SliceFunction& D, Block S, int t);

/// alpha_0..alpha_t from alpha_{t+1}..alpha_k by solving the Mendelsohn
/// system exactly (its coefficient matrix is unitriangular).
std::vector<Rational> koehler_alpha(const DesignParams& params, int s,
                                    std::span<const Rational> high_alphas);

/// #(A and D) = (lambda/lambda_max) * #A for deg(A) <= t and D a t-design.
/// Throws on violated preconditions.
bool design_orthogonality_check(const SliceFunction& A, const SliceFunction& D, int t);

/// K in D <=> K^c not in D, for D with parameters (k-1)-(2k,k,2^(a-1)),
/// k = 2^a - 1. Throws on parameter mismatch.
bool hartman_anticomplementary_check(const SliceFunction& D);

/// Exhaustive backtracking search for all t-(v,k,lambda) designs, blocks in
/// colex order. Desk scale: C(v,k) <= 24 and lambda_0 <= 12.
std::vector<SliceFunction> search_designs(const DesignParams& params);

} // namespace slicekit
