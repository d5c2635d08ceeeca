#pragma once

#include <string>
#include <utility>

#include "slicekit/slice_function.hpp"

namespace slicekit {

/// Boolean functions serialize as {"n":..,"k":..,"blocks":[[1,2,3],...]},
/// anything else as {"n":..,"k":..,"entries":[{"block":[..],"value":"p/q"}]}.
/// Point labels are 1-based on the wire, 0-based internally.
std::string function_to_json(const SliceFunction& f);

SliceFunction function_from_json(const std::string& text);

/// {"I":[...],"J":[...]} with 1-based labels.
std::string leg_pair_to_json(Block I, Block J);

std::pair<Block, Block> leg_pair_from_json(const std::string& text, int n);

std::string blocks_to_json_array(std::span<const Block> blocks);

} // namespace slicekit
