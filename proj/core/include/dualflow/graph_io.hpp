#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "dualflow/network.hpp"

namespace dualflow {

// Line-oriented text format:
//
//   # comment
//   nodes N
//   edge TAIL HEAD COST      (COST is an integer or P/Q with Q > 0)
//
// Blank lines are ignored. Node 0 is the anchor.

Network parse_graph(std::istream& in);
Network parse_graph_string(std::string_view text);
Network read_graph_file(const std::filesystem::path& path);

/// Canonical text form; edge order is preserved.
std::string serialize_graph(const Network& network);
void write_graph_file(const std::filesystem::path& path, const Network& network);

}  // namespace dualflow
