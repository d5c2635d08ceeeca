#include "slicekit/json_io.hpp"

#include <json.hpp>

namespace slicekit {

namespace {

using Json = nlohmann::ordered_json;

Json block_to_labels(Block b) {
    Json arr = Json::array();
    for (int x : b.points()) arr.push_back(x + 1);
    return arr;
}

Block block_from_labels(const Json& arr, int n) {
    if (!arr.is_array()) fail(ErrorCode::parse, "block must be an array of labels");
    Block b;
    for (const Json& item : arr) {
        if (!item.is_number_integer()) fail(ErrorCode::parse, "block labels must be integers");
        const long label = item.get<long>();
        if (label < 1 || label > n) fail(ErrorCode::parse, "block label outside 1..n");
        b = b.with(static_cast<int>(label - 1));
    }
    return b;
}

Json parse(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(ErrorCode::parse, "malformed JSON");
    return doc;
}

} // namespace

std::string function_to_json(const SliceFunction& f) {
    Json doc;
    doc["n"] = f.n();
    doc["k"] = f.k();
    if (f.is_boolean()) {
        Json blocks = Json::array();
        for (const auto& [b, v] : f.entries()) blocks.push_back(block_to_labels(b));
        doc["blocks"] = std::move(blocks);
    } else {
        Json entries = Json::array();
        for (const auto& [b, v] : f.entries()) {
            Json e;
            e["block"] = block_to_labels(b);
            e["value"] = to_string(v);
            entries.push_back(std::move(e));
        }
        doc["entries"] = std::move(entries);
    }
    return doc.dump();
}

SliceFunction function_from_json(const std::string& text) {
    const Json doc = parse(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("k"))
        fail(ErrorCode::parse, "expected an object with n and k");
    if (!doc["n"].is_number_integer() || !doc["k"].is_number_integer())
        fail(ErrorCode::parse, "n and k must be integers");
    const int n = doc["n"].get<int>();
    const int k = doc["k"].get<int>();
    SliceFunction f(n, k);
    if (doc.contains("blocks")) {
        if (!doc["blocks"].is_array()) fail(ErrorCode::parse, "blocks must be an array");
        for (const Json& arr : doc["blocks"]) {
            const Block b = block_from_labels(arr, n);
            if (f.value(b) != 0) fail(ErrorCode::parse, "duplicate block in blocks array");
            f.set(b, 1);
        }
    } else if (doc.contains("entries")) {
        if (!doc["entries"].is_array()) fail(ErrorCode::parse, "entries must be an array");
        for (const Json& e : doc["entries"]) {
            if (!e.is_object() || !e.contains("block") || !e.contains("value"))
                fail(ErrorCode::parse, "entry needs block and value");
            if (!e["value"].is_string()) fail(ErrorCode::parse, "entry value must be a \"p/q\" string");
            const Block b = block_from_labels(e["block"], n);
            if (f.value(b) != 0) fail(ErrorCode::parse, "duplicate block in entries");
            f.set(b, rational_from_string(e["value"].get<std::string>()));
        }
    } else {
        fail(ErrorCode::parse, "expected blocks or entries");
    }
    return f;
}

std::string leg_pair_to_json(Block I, Block J) {
    Json doc;
    doc["I"] = block_to_labels(I);
    doc["J"] = block_to_labels(J);
    return doc.dump();
}

std::pair<Block, Block> leg_pair_from_json(const std::string& text, int n) {
    const Json doc = parse(text);
    if (!doc.is_object() || !doc.contains("I") || !doc.contains("J"))
        fail(ErrorCode::parse, "expected an object with I and J");
    return {block_from_labels(doc["I"], n), block_from_labels(doc["J"], n)};
}

std::string blocks_to_json_array(std::span<const Block> blocks) {
    Json arr = Json::array();
    for (Block b : blocks) arr.push_back(block_to_labels(b));
    return arr.dump();
}

} // namespace slicekit
