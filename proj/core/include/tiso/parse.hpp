#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "tiso/temporal_graph.hpp"

namespace tiso {

enum class InputFormat { kCsv, kNdjson };

/// Parses "src,dst,t" lines (optional "src,dst,t" header) or one JSON object
/// {"src":..,"dst":..,"t":..} per line. Node ids are assigned densely in
/// order of first appearance; names are kept. Blank lines are skipped.
///
/// Throws Error with kEmptyInput, kParse (with line) or kDuplicateEdge
/// (with line of the second occurrence).
TemporalGraph parse_temporal_graph(std::istream& in, InputFormat format);
TemporalGraph parse_temporal_graph(std::string_view text, InputFormat format);

/// Reads a file, picking NDJSON for *.ndjson / *.jsonl and CSV otherwise.
TemporalGraph load_temporal_graph(const std::string& path);

}  // namespace tiso
