// Command-line front end for the slicekit shared library. Talks to the
// library exclusively through the C API in slicekit.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slicekit.h"

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

struct StringOut {
    char* text = nullptr;
    ~StringOut() { slk_string_free(text); }
    std::string str() const { return text ? std::string(text) : std::string(); }
};

struct FunctionHandle {
    slk_function* fn = nullptr;
    ~FunctionHandle() { slk_function_free(fn); }
};

[[noreturn]] void die(slk_status status) {
    std::cerr << "error: " << slk_last_error() << "\n";
    std::exit(status == SLK_ERR_PARSE || status == SLK_ERR_ARGUMENT ? kExitUsageError
                                                                    : kExitDomainError);
}

void require(slk_status status) {
    if (status != SLK_OK) die(status);
}

// 1-based comma-separated labels; "0" entries mark the empty set.
std::vector<int32_t> parse_labels(const std::string& text) {
    std::vector<int32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            std::cerr << "error: bad point label '" << item << "'\n";
            std::exit(kExitUsageError);
        }
    }
    return out;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(kExitUsageError);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(kExitUsageError);
    }
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
}

FunctionHandle load_function(const std::string& path) {
    FunctionHandle handle;
    require(slk_function_from_json(read_input(path).c_str(), &handle.fn));
    return handle;
}

std::string degree_to_string(int32_t degree) {
    return degree == SLK_DEGREE_NEG_INF ? "-inf" : std::to_string(degree);
}

std::vector<std::pair<int, int>> parse_rows(const std::string& text) {
    std::vector<std::pair<int, int>> rows;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            std::cerr << "error: row '" << item << "' is not n:k\n";
            std::exit(kExitUsageError);
        }
        try {
            rows.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
        } catch (const std::exception&) {
            std::cerr << "error: row '" << item << "' is not n:k\n";
            std::exit(kExitUsageError);
        }
    }
    return rows;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact functions on the slice: constructions, degrees, designs, bounds"};
    app.require_subcommand(1);

    // shared flag storage
    int n = 0, k = 0, t = 0, i_size = 0, j_size = 0, max_n = 0, cap = 0, threads = 0;
    std::int64_t lambda = 0;
    std::string i_labels, j_labels, in_path = "-", out_path, format = "csv", rows_spec;

    auto* degree_cmd = app.add_subcommand("degree", "degree of a function read from JSON");
    degree_cmd->add_option("--in", in_path, "input file, - for stdin");
    degree_cmd->add_option("--out", out_path, "output file");
    bool use_dual = false;
    degree_cmd->add_flag("--dual-method", use_dual, "use the dual-distribution method");

    auto* construct_cmd = app.add_subcommand("construct", "build a basic or paired function");
    auto* construct_basic = construct_cmd->add_subcommand("basic", "characteristic function of I <= K <= J");
    auto* construct_paired = construct_cmd->add_subcommand("paired", "sum of the two opposite basic functions");
    for (CLI::App* sub : {construct_basic, construct_paired}) {
        sub->add_option("--n", n, "points")->required();
        sub->add_option("--k", k, "block size")->required();
        sub->add_option("--i", i_labels, "I as 1-based labels, 0 for empty");
        sub->add_option("--j", j_labels, "J as 1-based labels, 0 for empty");
        sub->add_option("--out", out_path, "output file");
    }
    construct_cmd->require_subcommand(1);

    auto* recover_cmd = app.add_subcommand("recover", "reconstruct {I,J} from a paired function");
    recover_cmd->add_option("--in", in_path, "input file, - for stdin");
    recover_cmd->add_option("--out", out_path, "output file");

    auto* table_cmd = app.add_subcommand("table", "pencil/paired/delta/LP columns for n:k rows");
    table_cmd->add_option("--t", t, "degree bound")->required();
    table_cmd->add_option("--rows", rows_spec, "comma-separated n:k pairs")->required();
    table_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table_cmd->add_option("--out", out_path, "output file");
    table_cmd->add_option("--threads", threads, "worker count, 0 = SLICE_THREADS/auto");

    auto* lp_cmd = app.add_subcommand("lp", "exact LP lower bound");
    lp_cmd->add_option("--n", n)->required();
    lp_cmd->add_option("--k", k)->required();
    lp_cmd->add_option("--t", t)->required();

    auto* delta_cmd = app.add_subcommand("delta", "divisibility bound");
    delta_cmd->add_option("--n", n)->required();
    delta_cmd->add_option("--k", k)->required();
    delta_cmd->add_option("--t", t)->required();

    auto* verify_cmd = app.add_subcommand("verify-theorem", "span degree vs closed form for all paired functions");
    verify_cmd->add_option("--max-n", max_n, "largest ground-set size")->required();
    verify_cmd->add_option("--threads", threads, "worker count, 0 = SLICE_THREADS/auto");

    auto* design_cmd = app.add_subcommand("design", "design predicates and search");
    auto* design_check = design_cmd->add_subcommand("check", "report lambda if the input is a t-design");
    design_check->add_option("--t", t)->required();
    design_check->add_option("--in", in_path, "input file, - for stdin");
    auto* design_search = design_cmd->add_subcommand("search", "all t-(v,k,lambda) designs, exhaustively");
    int v_points = 0;
    design_search->add_option("--t", t)->required();
    design_search->add_option("--v", v_points)->required();
    design_search->add_option("--k", k)->required();
    design_search->add_option("--lambda", lambda)->required();
    design_search->add_option("--out", out_path, "output file");
    auto* design_hartman = design_cmd->add_subcommand("hartman", "anti-complementarity of a root-case halving");
    design_hartman->add_option("--in", in_path, "input file, - for stdin");
    design_cmd->require_subcommand(1);

    auto* m1_cmd = app.add_subcommand("search-m1", "exact minimum size of a degree-<=t set");
    m1_cmd->add_option("--n", n)->required();
    m1_cmd->add_option("--k", k)->required();
    m1_cmd->add_option("--t", t)->required();
    m1_cmd->add_option("--cap", cap, "largest size to try")->required();

    auto* classify_cmd = app.add_subcommand("classify", "paired function vs t-pencil by leg sizes");
    classify_cmd->add_option("--n", n)->required();
    classify_cmd->add_option("--k", k)->required();
    classify_cmd->add_option("--t", t)->required();
    classify_cmd->add_option("--i", i_size, "size of I")->required();
    classify_cmd->add_option("--j", j_size, "size of J")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help();
        return app.exit(e) == 0 ? 0 : kExitUsageError;
    }

    if (degree_cmd->parsed()) {
        const FunctionHandle f = load_function(in_path);
        int32_t degree = 0;
        require(use_dual ? slk_degree_dual_method(f.fn, &degree) : slk_degree(f.fn, &degree));
        write_output(out_path, degree_to_string(degree));
        return 0;
    }

    if (construct_cmd->parsed()) {
        const std::vector<int32_t> I = parse_labels(i_labels);
        const std::vector<int32_t> J = parse_labels(j_labels);
        FunctionHandle f;
        if (construct_basic->parsed())
            require(slk_function_basic(n, k, I.data(), I.size(), J.data(), J.size(), &f.fn));
        else
            require(slk_function_paired(n, k, I.data(), I.size(), J.data(), J.size(), &f.fn));
        StringOut json;
        require(slk_function_to_json(f.fn, &json.text));
        write_output(out_path, json.str());
        return 0;
    }

    if (recover_cmd->parsed()) {
        const FunctionHandle f = load_function(in_path);
        int32_t found = 0;
        StringOut json;
        require(slk_recover_paired_legs(f.fn, &found, &json.text));
        write_output(out_path, found ? json.str() : std::string("{\"paired\":false}"));
        return 0;
    }

    if (table_cmd->parsed()) {
        const auto rows = parse_rows(rows_spec);
        std::vector<int32_t> flat;
        for (const auto& [rn, rk] : rows) {
            flat.push_back(rn);
            flat.push_back(rk);
        }
        StringOut text;
        require(slk_table(t, flat.data(), rows.size(), format == "json" ? 1 : 0, threads, &text.text));
        write_output(out_path, text.str());
        return 0;
    }

    if (lp_cmd->parsed()) {
        StringOut exact, rounded;
        require(slk_lp_bound(n, k, t, &exact.text, &rounded.text));
        std::cout << exact.str() << " " << rounded.str() << "\n";
        return 0;
    }

    if (delta_cmd->parsed()) {
        StringOut text;
        require(slk_delta(n, k, t, &text.text));
        std::cout << text.str() << "\n";
        return 0;
    }

    if (verify_cmd->parsed()) {
        int64_t cases = 0, mismatches = 0;
        StringOut report;
        require(slk_verify_paired_theorem(max_n, threads, &cases, &mismatches, &report.text));
        if (mismatches == 0) {
            std::cout << "OK 0 mismatches (" << cases << " cases)\n";
        } else {
            std::cout << report.str();
            std::cout << "FAIL " << mismatches << " mismatches (" << cases << " cases)\n";
        }
        return 0;
    }

    if (design_cmd->parsed()) {
        if (design_check->parsed()) {
            const FunctionHandle f = load_function(in_path);
            int32_t is_design = 0;
            StringOut lambda_text;
            require(slk_design_index(f.fn, t, &is_design, &lambda_text.text));
            std::cout << (is_design ? "lambda " + lambda_text.str() : std::string("not a design")) << "\n";
            return 0;
        }
        if (design_search->parsed()) {
            StringOut json;
            require(slk_design_search(t, v_points, k, lambda, &json.text));
            write_output(out_path, json.str());
            return 0;
        }
        const FunctionHandle f = load_function(in_path);
        int32_t holds = 0;
        require(slk_hartman_check(f.fn, &holds));
        std::cout << (holds ? "anti-complementary" : "violated") << "\n";
        return holds ? 0 : kExitDomainError;
    }

    if (m1_cmd->parsed()) {
        int32_t found = 0;
        int64_t value = 0;
        StringOut witness;
        require(slk_m1_bruteforce(n, k, t, cap, &found, &value, &witness.text));
        if (found)
            std::cout << "{\"m1\":" << value << ",\"witness\":" << witness.str() << "}\n";
        else
            std::cout << "{\"m1\":null,\"cap\":" << cap << "}\n";
        return 0;
    }

    if (classify_cmd->parsed()) {
        const char* label = nullptr;
        require(slk_classify_paired_vs_pencil(n, k, t, i_size, j_size, &label));
        std::cout << label << "\n";
        return 0;
    }

    std::cerr << app.help();
    return kExitUsageError;
}
