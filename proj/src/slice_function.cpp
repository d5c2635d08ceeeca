#include "slicekit/slice_function.hpp"

#include <algorithm>

namespace slicekit {

void SliceFunction::set(Block b, Rational v) {
    if ((b.bits & ~GroundSet(n_).mask()) != 0) fail(ErrorCode::argument, "block outside ground set");
    if (b.size() != k_) fail(ErrorCode::argument, "block size does not match the slice");
    if (v == 0)
        values_.erase(b);
    else
        values_[b] = std::move(v);
}

Rational SliceFunction::size() const {
    Rational total(0);
    for (const auto& [b, v] : values_) total += v;
    return total;
}

bool SliceFunction::is_boolean() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const auto& e) { return e.second == 1; });
}

Block SliceFunction::support_meet() const {
    Block meet{GroundSet(n_).mask()};
    for (const auto& [b, v] : values_) meet = meet & b;
    return meet;
}

Block SliceFunction::support_join() const {
    Block join{0};
    for (const auto& [b, v] : values_) join = join | b;
    return join;
}

std::vector<Rational> SliceFunction::dense() const {
    const std::uint64_t count = binom_u64(n_, k_);
    if (count > (std::uint64_t{1} << 24)) fail(ErrorCode::limit, "slice too large for a dense view");
    std::vector<Rational> out(static_cast<std::size_t>(count), Rational(0));
    for (const auto& [b, v] : values_) out[static_cast<std::size_t>(colex_rank(b))] = v;
    return out;
}

void SliceFunction::check_same_slice(const SliceFunction& other) const {
    if (n_ != other.n_ || k_ != other.k_)
        fail(ErrorCode::argument, "mixed-slice arithmetic: (" + std::to_string(n_) + "," +
                                      std::to_string(k_) + ") vs (" + std::to_string(other.n_) +
                                      "," + std::to_string(other.k_) + ")");
}

SliceFunction& SliceFunction::operator+=(const SliceFunction& other) {
    check_same_slice(other);
    for (const auto& [b, v] : other.values_) set(b, value(b) + v);
    return *this;
}

SliceFunction& SliceFunction::operator-=(const SliceFunction& other) {
    check_same_slice(other);
    for (const auto& [b, v] : other.values_) set(b, value(b) - v);
    return *this;
}

SliceFunction all_one(int n, int k) {
    SliceFunction f(n, k);
    for_each_block(n, k, [&](Block b) { f.set(b, 1); });
    return f;
}

SliceFunction indicator(int n, int k, std::span<const Block> blocks) {
    SliceFunction f(n, k);
    for (Block b : blocks) f.set(b, 1);
    return f;
}

SliceFunction basic(const BasicSpec& spec, int n, int k) {
    GroundSet g(n);
    if (!spec.I.subset_of(spec.J)) fail(ErrorCode::argument, "basic function requires I <= J");
    if ((spec.J.bits & ~g.mask()) != 0) fail(ErrorCode::argument, "J outside ground set");
    SliceFunction f(n, k);
    const int i = spec.I.size();
    const int j = spec.J.size();
    if (i > k || j < k) return f; // zero function
    // choose the k-i free points from J - I
    const std::vector<int> free = Block{spec.J.bits & ~spec.I.bits}.points();
    const int m = static_cast<int>(free.size());
    for_each_block(m, k - i, [&](Block choice) {
        Block b = spec.I;
        for (int pos : choice.points()) b = b.with(free[static_cast<std::size_t>(pos)]);
        f.set(b, 1);
    });
    return f;
}

SliceFunction paired(const PairedSpec& spec, int n, int k) {
    if (!spec.I.disjoint_from(spec.J)) fail(ErrorCode::argument, "paired function requires I, J disjoint");
    GroundSet g(n);
    SliceFunction f = basic({spec.I, complement(spec.J, g)}, n, k);
    f += basic({spec.J, complement(spec.I, g)}, n, k);
    return f;
}

SliceFunction dual(const SliceFunction& f) {
    GroundSet g(f.n());
    SliceFunction out(f.n(), f.n() - f.k());
    for (const auto& [b, v] : f.entries()) out.set(complement(b, g), v);
    return out;
}

SliceFunction derive(const SliceFunction& f, int x) {
    if (f.k() < 1) fail(ErrorCode::argument, "derived function requires k >= 1");
    if (x < 0 || x >= f.n()) fail(ErrorCode::argument, "point outside ground set");
    SliceFunction out(f.n() - 1, f.k() - 1);
    for (const auto& [b, v] : f.entries())
        if (b.contains(x)) out.set(squeeze_out(b.without(x), x), v);
    return out;
}

SliceFunction residual(const SliceFunction& f, int x) {
    if (f.n() - f.k() < 1) fail(ErrorCode::argument, "residual function requires n-k >= 1");
    if (x < 0 || x >= f.n()) fail(ErrorCode::argument, "point outside ground set");
    SliceFunction out(f.n() - 1, f.k());
    for (const auto& [b, v] : f.entries())
        if (!b.contains(x)) out.set(squeeze_out(b, x), v);
    return out;
}

namespace {

// Non-zero Boolean function whose support is exactly a basic set.
bool is_basic_set(const SliceFunction& f) {
    if (f.is_zero() || !f.is_boolean()) return false;
    return f == basic({f.support_meet(), f.support_join()}, f.n(), f.k());
}

LegRecovery found(Block I, Block J) {
    if (J < I) std::swap(I, J);
    return {LegRecovery::Outcome::recovered, I, J, ""};
}

LegRecovery ambiguous(const std::string& why) { return {LegRecovery::Outcome::ambiguous, {}, {}, why}; }

LegRecovery not_paired(const std::string& why) { return {LegRecovery::Outcome::not_paired, {}, {}, why}; }

// Confirms a candidate pair against the input before reporting it.
LegRecovery confirm(const SliceFunction& g, Block I, Block J) {
    if (!I.disjoint_from(J)) return not_paired("candidate legs are not disjoint");
    if (g == paired({I, J}, g.n(), g.k())) return found(I, J);
    return not_paired("no paired function matches the support");
}

} // namespace

LegRecovery recover_paired_legs(const SliceFunction& g) {
    const int n = g.n(), k = g.k();
    if (!g.is_boolean()) {
        // the constant-2 function is the one admissible non-Boolean input
        if (g == all_one(n, k) + all_one(n, k)) {
            if (2 * binom(n, k) < 3) return ambiguous("support size below 3");
            return found(Block{0}, Block{0});
        }
        fail(ErrorCode::argument, "recover_paired_legs expects a Boolean (or constant-2) function");
    }
    if (g.support_size() < 3)
        return ambiguous("support size " + std::to_string(g.support_size()) +
                         " below 3; legs need not be unique");
    if (g == all_one(n, k)) return ambiguous("all-one function; legs are not unique");

    if (is_basic_set(g)) {
        // one leg empty: g = f_{I,J^c} with I and J^c read off the support
        const Block I = g.support_meet();
        const Block J = complement(g.support_join(), GroundSet(n));
        return confirm(g, I, J);
    }

    // Both legs non-empty. A point belongs to I + J exactly when both the
    // derived and the residual function in it are basic.
    Block membership{0};
    for (int x = 0; x < n; ++x)
        if (is_basic_set(derive(g, x)) && is_basic_set(residual(g, x))) membership = membership.with(x);
    if (membership.empty()) return not_paired("no leg points found");

    const int x = membership.points().front();
    Block I, J;
    const SliceFunction der = derive(g, x);
    if (der.support_size() >= 2) {
        // x in I: Der_x(g) = f_{I-{x}, J^c} relative to V-{x}
        I = unsqueeze(der.support_meet(), x).with(x);
        J = unsqueeze(complement(der.support_join(), GroundSet(n - 1)), x);
    } else {
        // x in I: Res_x(g) = f_{J, (I-{x})^c} relative to V-{x}
        const SliceFunction res = residual(g, x);
        J = unsqueeze(res.support_meet(), x);
        I = unsqueeze(complement(res.support_join(), GroundSet(n - 1)), x).with(x);
    }
    const LegRecovery rec = confirm(g, I, J);
    // On C(4,2) every non-basic paired function with support 4 is a
    // four-cycle, and each of those is p_{{a},{b}} for both complementary
    // point pairs {a,b}: the legs are genuinely not unique here.
    if (rec.outcome == LegRecovery::Outcome::recovered && n == 4 && k == 2)
        return ambiguous("two unordered pairs represent this function on C(4,2)");
    return rec;
}

} // namespace slicekit
