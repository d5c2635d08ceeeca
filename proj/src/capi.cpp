#include "slicekit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "slicekit/bounds.hpp"
#include "slicekit/degree.hpp"
#include "slicekit/designs.hpp"
#include "slicekit/json_io.hpp"
#include "slicekit/scheme.hpp"
#include "slicekit/slice_function.hpp"

using namespace slicekit;

struct slk_function {
    SliceFunction fn;
};

namespace {

thread_local std::string g_last_error;

slk_status set_error(slk_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

slk_status from_exception(const Error& e) {
    switch (e.code()) {
    case ErrorCode::argument: return set_error(SLK_ERR_ARGUMENT, e.what());
    case ErrorCode::domain: return set_error(SLK_ERR_DOMAIN, e.what());
    case ErrorCode::parse: return set_error(SLK_ERR_PARSE, e.what());
    case ErrorCode::limit: return set_error(SLK_ERR_LIMIT, e.what());
    case ErrorCode::internal: return set_error(SLK_ERR_INTERNAL, e.what());
    }
    return set_error(SLK_ERR_INTERNAL, e.what());
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
slk_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SLK_OK;
    } catch (const Error& e) {
        return from_exception(e);
    } catch (const std::exception& e) {
        return set_error(SLK_ERR_INTERNAL, e.what());
    }
}

Block block_from_labels(const int32_t* labels, size_t len, int n) {
    Block b;
    for (size_t idx = 0; idx < len; ++idx) {
        const int32_t label = labels[idx];
        if (label == 0) continue; // 0 marks "no point" on the wire
        if (label < 1 || label > n) fail(ErrorCode::argument, "point label outside 1..n");
        b = b.with(static_cast<int>(label - 1));
    }
    return b;
}

int32_t to_api_degree(Degree d) { return d == kDegreeNegInf ? SLK_DEGREE_NEG_INF : d; }

} // namespace

extern "C" {

const char* slk_version(void) { return "slicekit 1.0.0"; }

const char* slk_last_error(void) { return g_last_error.c_str(); }

void slk_string_free(char* text) { std::free(text); }

void slk_function_free(slk_function* f) { delete f; }

slk_status slk_function_basic(int32_t n, int32_t k, const int32_t* i_labels, size_t i_len,
                              const int32_t* j_labels, size_t j_len, slk_function** out) {
    return guarded([&] {
        const Block I = block_from_labels(i_labels, i_len, n);
        const Block J = block_from_labels(j_labels, j_len, n);
        *out = new slk_function{basic({I, J}, n, k)};
    });
}

slk_status slk_function_paired(int32_t n, int32_t k, const int32_t* i_labels, size_t i_len,
                               const int32_t* j_labels, size_t j_len, slk_function** out) {
    return guarded([&] {
        const Block I = block_from_labels(i_labels, i_len, n);
        const Block J = block_from_labels(j_labels, j_len, n);
        *out = new slk_function{paired({I, J}, n, k)};
    });
}

slk_status slk_function_from_json(const char* text, slk_function** out) {
    return guarded([&] { *out = new slk_function{function_from_json(text)}; });
}

slk_status slk_function_to_json(const slk_function* f, char** out_text) {
    return guarded([&] { *out_text = dup_string(function_to_json(f->fn)); });
}

int32_t slk_function_n(const slk_function* f) { return f->fn.n(); }

int32_t slk_function_k(const slk_function* f) { return f->fn.k(); }

int32_t slk_function_is_boolean(const slk_function* f) { return f->fn.is_boolean() ? 1 : 0; }

slk_status slk_function_size(const slk_function* f, char** out_text) {
    return guarded([&] { *out_text = dup_string(to_string(f->fn.size())); });
}

slk_status slk_degree(const slk_function* f, int32_t* out_degree) {
    return guarded([&] { *out_degree = to_api_degree(degree_via_span(f->fn)); });
}

slk_status slk_degree_dual_method(const slk_function* f, int32_t* out_degree) {
    return guarded([&] {
        if (!f->fn.is_boolean())
            fail(ErrorCode::argument, "dual-distribution degree requires a Boolean function");
        *out_degree = to_api_degree(degree_via_dual(f->fn));
    });
}

slk_status slk_basic_degree_formula(int32_t n, int32_t k, int32_t i, int32_t j, int32_t* out_degree) {
    return guarded([&] { *out_degree = to_api_degree(basic_degree_formula(n, k, i, j)); });
}

slk_status slk_paired_degree_formula(int32_t n, int32_t k, int32_t i, int32_t j, int32_t* out_degree) {
    return guarded([&] { *out_degree = to_api_degree(paired_degree_formula(n, k, i, j)); });
}

slk_status slk_elementary_bound(int32_t n, int32_t k, int32_t i, int32_t j, int32_t* out_bound) {
    return guarded([&] { *out_bound = elementary_bound(n, k, i, j); });
}

slk_status slk_verify_paired_theorem(int32_t max_n, int32_t threads, int64_t* out_cases,
                                     int64_t* out_mismatches, char** out_report) {
    return guarded([&] {
        const TheoremReport rep = verify_paired_theorem(max_n, threads);
        *out_cases = rep.cases;
        *out_mismatches = static_cast<int64_t>(rep.mismatches.size());
        if (out_report) {
            std::string text;
            for (const TheoremMismatch& m : rep.mismatches)
                text += "n=" + std::to_string(m.n) + " k=" + std::to_string(m.k) +
                        " i=" + std::to_string(m.i) + " j=" + std::to_string(m.j) +
                        " span=" + std::to_string(m.span_degree) +
                        " formula=" + std::to_string(m.formula_degree) + "\n";
            *out_report = dup_string(text);
        }
    });
}

slk_status slk_recover_paired_legs(const slk_function* f, int32_t* out_found, char** out_json) {
    return guarded([&] {
        const LegRecovery rec = recover_paired_legs(f->fn);
        if (rec.outcome == LegRecovery::Outcome::ambiguous)
            fail(ErrorCode::argument, "ambiguous: " + rec.detail);
        if (rec.outcome == LegRecovery::Outcome::not_paired) {
            *out_found = 0;
            if (out_json) *out_json = nullptr;
            return;
        }
        *out_found = 1;
        if (out_json) *out_json = dup_string(leg_pair_to_json(rec.I, rec.J));
    });
}

slk_status slk_design_index(const slk_function* d, int32_t t, int32_t* out_is_design,
                            char** out_lambda) {
    return guarded([&] {
        const std::optional<BigInt> lambda = design_index(d->fn, t);
        *out_is_design = lambda ? 1 : 0;
        if (out_lambda) *out_lambda = lambda ? dup_string(to_string(*lambda)) : nullptr;
    });
}

slk_status slk_design_search(int32_t t, int32_t v, int32_t k, int64_t lambda, char** out_json) {
    return guarded([&] {
        const std::vector<SliceFunction> designs =
            search_designs({t, v, k, BigInt(static_cast<long>(lambda))});
        std::string text = "[";
        for (std::size_t idx = 0; idx < designs.size(); ++idx) {
            if (idx) text += ",";
            text += function_to_json(designs[idx]);
        }
        text += "]";
        *out_json = dup_string(text);
    });
}

slk_status slk_hartman_check(const slk_function* d, int32_t* out_holds) {
    return guarded([&] { *out_holds = hartman_anticomplementary_check(d->fn) ? 1 : 0; });
}

slk_status slk_delta(int32_t n, int32_t k, int32_t t, char** out_text) {
    return guarded([&] { *out_text = dup_string(to_string(delta(n, k, t))); });
}

slk_status slk_pencil_size(int32_t n, int32_t k, int32_t t, char** out_text) {
    return guarded([&] { *out_text = dup_string(to_string(pencil_size(n, k, t))); });
}

slk_status slk_paired_min_size(int32_t n, int32_t k, int32_t t, char** out_text) {
    return guarded([&] { *out_text = dup_string(to_string(paired_min_size(n, k, t))); });
}

slk_status slk_conjecture_value(int32_t n, int32_t k, int32_t t, char** out_text) {
    return guarded([&] { *out_text = dup_string(to_string(conjecture_value(n, k, t))); });
}

slk_status slk_lp_bound(int32_t n, int32_t k, int32_t t, char** out_exact, char** out_rounded) {
    return guarded([&] {
        const Rational value = lp_bound(n, k, t);
        if (out_exact) *out_exact = dup_string(to_string(value));
        if (out_rounded) *out_rounded = dup_string(round_half_up_2dp(value));
    });
}

slk_status slk_table(int32_t t, const int32_t* rows_nk, size_t n_rows, int32_t format,
                     int32_t threads, char** out_text) {
    return guarded([&] {
        std::vector<std::pair<int, int>> rows;
        rows.reserve(n_rows);
        for (size_t idx = 0; idx < n_rows; ++idx)
            rows.emplace_back(rows_nk[2 * idx], rows_nk[2 * idx + 1]);
        const std::string text =
            format == 1 ? table_json(t, rows, threads) : table_csv(t, rows, threads);
        *out_text = dup_string(text);
    });
}

slk_status slk_m1_bruteforce(int32_t n, int32_t k, int32_t t, int32_t size_cap,
                             int32_t* out_found, int64_t* out_value, char** out_witness_json) {
    return guarded([&] {
        const M1Result res = m1_bruteforce(n, k, t, size_cap);
        if (out_found) *out_found = res.found ? 1 : 0;
        if (out_value) *out_value = res.found ? static_cast<int64_t>(res.value.get_si()) : 0;
        if (out_witness_json)
            *out_witness_json = res.found ? dup_string(blocks_to_json_array(res.witness)) : nullptr;
    });
}

slk_status slk_classify_paired_vs_pencil(int32_t n, int32_t k, int32_t t, int32_t i, int32_t j,
                                         const char** out_label) {
    return guarded([&] { *out_label = to_string(classify_paired_vs_pencil(n, k, t, i, j)); });
}

} // extern "C"
