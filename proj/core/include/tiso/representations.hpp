#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tiso/static_graph.hpp"
#include "tiso/temporal_graph.hpp"

namespace tiso {

// Event graphs -------------------------------------------------------------

/// One event node (label 1) per timestamped edge, in edge-index order, and
/// an arc e -> e' whenever e' is a time-respecting successor of e.
StaticGraph build_event_graph(const TemporalGraph& g, Delta delta);

/// Original nodes 0..|V|-1 (label 0) followed by the event nodes (label 1).
/// Edges: event arcs, then u -> (u,v;t) and (u,v;t) -> v for every edge.
StaticGraph build_augmented_event_graph(const TemporalGraph& g, Delta delta);

/// Weakly connected components of an event graph as induced subgraphs.
/// Components are ordered by their smallest node index; nodes keep their
/// relative order.
std::vector<StaticGraph> connected_components(const StaticGraph& event_graph);

/// Replaces each event (u,v;t) by (u,v;rank), rank being the 1-based
/// position of t among the component's timestamps for the pair (u,v).
StaticGraph tau_relabel(const StaticGraph& component);

/// Sorted serialization of the tau-relabeled node and arc sets. Two
/// components are equivalent iff their keys are equal.
std::string canonical_key(const StaticGraph& component);

struct ComponentClass {
  StaticGraph representative;  // keeps its original timestamps
  std::size_t cardinality = 0;
  std::string canonical_key;
};

struct CompressedEventGraph {
  /// Disjoint union of the representatives; every arc carries its class
  /// cardinality as weight.
  StaticGraph graph;
  std::vector<ComponentClass> classes;
  /// Class index of each node of `graph`.
  std::vector<std::size_t> node_class;
};

/// Merges equivalent components. The representative of a class is the
/// member with the smallest original timestamp (ties: lexicographically
/// smallest serialization of the untransformed component). Classes are
/// ordered by their representative's smallest timestamp, then key.
CompressedEventGraph compress_event_graph(const StaticGraph& event_graph);

struct CompressionOptions {
  /// Incidence arcs carry the class cardinality instead of 1.
  bool weighted_incidence = false;
};

StaticGraph build_compressed_augmented_event_graph(
    const TemporalGraph& g, Delta delta, CompressionOptions options = {});

// Time-aggregated / time-concatenated --------------------------------------

/// Original nodes; one edge (u,v) of weight |T(u,v)| per occurring pair.
StaticGraph build_time_aggregated(const TemporalGraph& g);

/// Sorted offsets t - t_min per static edge.
using TimestampSetAnnotation =
    std::map<std::pair<NodeId, NodeId>, std::vector<Timestamp>>;

struct TimeConcatenatedGraph {
  StaticGraph graph;  // same topology and weights as the aggregated graph
  TimestampSetAnnotation offsets;
};

/// Throws Error(kEmptyGraph) for an edgeless graph.
TimeConcatenatedGraph build_time_concatenated(const TemporalGraph& g);

// Snapshots ----------------------------------------------------------------

struct Snapshot {
  Timestamp t = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;  // sorted, non-empty
  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

struct SnapshotSequence {
  std::size_t num_nodes = 0;
  std::vector<Snapshot> snapshots;  // strictly increasing t
  friend bool operator==(const SnapshotSequence&, const SnapshotSequence&) = default;
};

/// One snapshot per distinct timestamp. Throws Error(kEmptyGraph).
SnapshotSequence to_snapshots(const TemporalGraph& g);

/// Inverse of to_snapshots up to edge order (edges come out sorted by t).
TemporalGraph from_snapshots(const SnapshotSequence& s);

}  // namespace tiso
