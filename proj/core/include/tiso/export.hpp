#pragma once

#include <span>
#include <string>
#include <string_view>

#include "tiso/representations.hpp"
#include "tiso/static_graph.hpp"
#include "tiso/temporal_graph.hpp"

namespace tiso {

inline constexpr std::string_view kFormatVersion = "tiso-graph/1";

/// Display name of a static node: original node name, or "src->dst@t".
std::string node_display(const NodeRecord& node,
                         std::span<const std::string> names = {});

/// Graphviz DOT. Label-0 nodes are boxes, label-1 nodes ellipses; every
/// edge carries a `weight` attribute.
std::string to_dot(const StaticGraph& g, std::span<const std::string> names = {});

/// JSON with explicit provenance records so event nodes round-trip.
std::string to_json(const StaticGraph& g, std::span<const std::string> names = {});
StaticGraph static_graph_from_json(std::string_view text);

/// "src,dst,weight" lines with a header.
std::string to_csv(const StaticGraph& g, std::span<const std::string> names = {});

std::string time_concatenated_to_json(const TimeConcatenatedGraph& c,
                                      std::span<const std::string> names = {});
std::string snapshots_to_csv(const SnapshotSequence& s,
                             std::span<const std::string> names = {});
std::string snapshots_to_json(const SnapshotSequence& s,
                              std::span<const std::string> names = {});

std::string temporal_to_csv(const TemporalGraph& g);
std::string temporal_to_ndjson(const TemporalGraph& g);
/// Multigraph DOT with one edge per timestamped edge, labelled by t.
std::string temporal_to_dot(const TemporalGraph& g);

}  // namespace tiso
