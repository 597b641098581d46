#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rainbow/graph_system.hpp"

namespace rainbow {

// Text format for square systems:
//
//   rgs 1
//   <n>
//   <color> <u> <v>        (one line per edge, in any order)
//
// '#' starts a comment line and blank lines are skipped.  Serialization is
// canonical: edges sorted by (color, u, v) with u < v, no comments, so equal
// systems serialize to equal bytes.
std::string serialize_system(const GraphSystem& sys);

// Parses the format above.  Errors throw std::runtime_error carrying the
// 1-based line number of the offending line.  Duplicate edges are tolerated.
GraphSystem parse_system(const std::string& text);

using Certificate = std::variant<RainbowPath, RainbowCycle>;

// Certificate format:
//
//   path <k>     or     cycle <k>
//   <k vertex ids on one line>
//   <k-1 (path) or k (cycle) color ids on one line>
//
// A one-vertex path has an empty color line.
std::string serialize_certificate(const RainbowPath& path);
std::string serialize_certificate(const RainbowCycle& cycle);

// Parses a single certificate.  Throws std::runtime_error on malformed
// input, including a vertex/color count mismatch.
Certificate parse_certificate(const std::string& text);

// Parses a file holding zero or more certificates back to back.
std::vector<Certificate> parse_certificate_stream(const std::string& text);

}  // namespace rainbow
