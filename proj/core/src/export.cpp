#include "tiso/export.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "tiso/errors.hpp"

namespace tiso {
namespace {

using nlohmann::json;

std::string name_of(NodeId v, std::span<const std::string> names) {
  if (v < names.size()) return names[v];
  return std::to_string(v);
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

json node_json(std::size_t id, const NodeRecord& n,
               std::span<const std::string> names) {
  json j{{"id", id}, {"label", n.label}};
  if (const auto* o = std::get_if<OriginalNode>(&n.provenance)) {
    j["kind"] = "original";
    j["node"] = o->node;
  } else {
    const auto& ev = std::get<EventNode>(n.provenance);
    j["kind"] = "event";
    j["src"] = ev.edge.src;
    j["dst"] = ev.edge.dst;
    j["t"] = ev.edge.t;
    j["edge_index"] = ev.index;
  }
  if (!names.empty()) j["name"] = node_display(n, names);
  return j;
}

}  // namespace

std::string node_display(const NodeRecord& node,
                         std::span<const std::string> names) {
  if (const auto* o = std::get_if<OriginalNode>(&node.provenance)) {
    return name_of(o->node, names);
  }
  const auto& e = std::get<EventNode>(node.provenance).edge;
  return name_of(e.src, names) + "->" + name_of(e.dst, names) + "@" +
         std::to_string(e.t);
}

std::string to_dot(const StaticGraph& g, std::span<const std::string> names) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    const auto& n = g.node(v);
    os << "  n" << v << " [label=\"" << dot_escape(node_display(n, names))
       << "\", shape=" << (n.label == kOriginalLabel ? "box" : "ellipse")
       << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  n" << e.src << " -> n" << e.dst << " [weight=" << e.weight;
    if (e.weight != 1) os << ", label=\"" << e.weight << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const StaticGraph& g, std::span<const std::string> names) {
  json nodes = json::array();
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    nodes.push_back(node_json(v, g.node(v), names));
  }
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"weight", e.weight}});
  }
  json doc{{"format", kFormatVersion}, {"nodes", nodes}, {"edges", edges}};
  return doc.dump(2) + "\n";
}

StaticGraph static_graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  StaticGraph g;
  try {
    const auto& nodes = doc.at("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& n = nodes[i];
      if (n.at("id").get<std::size_t>() != i) {
        throw Error(ErrorCode::kParse, "node ids must be dense and ordered");
      }
      NodeRecord rec;
      rec.label = n.at("label").get<std::uint32_t>();
      auto kind = n.at("kind").get<std::string>();
      if (kind == "original") {
        rec.provenance = OriginalNode{n.at("node").get<NodeId>()};
      } else if (kind == "event") {
        rec.provenance = EventNode{
            {n.at("src").get<NodeId>(), n.at("dst").get<NodeId>(),
             n.at("t").get<Timestamp>()},
            n.value("edge_index", EdgeIndex{0})};
      } else {
        throw Error(ErrorCode::kParse, "unknown node kind '" + kind + "'");
      }
      g.add_node(rec);
    }
    for (const auto& e : doc.at("edges")) {
      g.add_edge(e.at("src").get<std::size_t>(), e.at("dst").get<std::size_t>(),
                 e.at("weight").get<std::uint64_t>());
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return g;
}

std::string to_csv(const StaticGraph& g, std::span<const std::string> names) {
  std::ostringstream os;
  os << "src,dst,weight\n";
  for (const auto& e : g.edges()) {
    os << node_display(g.node(e.src), names) << ','
       << node_display(g.node(e.dst), names) << ',' << e.weight << '\n';
  }
  return os.str();
}

std::string time_concatenated_to_json(const TimeConcatenatedGraph& c,
                                      std::span<const std::string> names) {
  json edges = json::array();
  for (const auto& [pair, ts] : c.offsets) {
    edges.push_back({{"src", name_of(pair.first, names)},
                     {"dst", name_of(pair.second, names)},
                     {"offsets", ts}});
  }
  json doc{{"format", kFormatVersion},
           {"num_nodes", c.graph.num_nodes()},
           {"edges", edges}};
  return doc.dump(2) + "\n";
}

std::string snapshots_to_csv(const SnapshotSequence& s,
                             std::span<const std::string> names) {
  std::ostringstream os;
  os << "t,src,dst\n";
  for (const auto& snap : s.snapshots) {
    for (const auto& [u, v] : snap.edges) {
      os << snap.t << ',' << name_of(u, names) << ',' << name_of(v, names) << '\n';
    }
  }
  return os.str();
}

std::string snapshots_to_json(const SnapshotSequence& s,
                              std::span<const std::string> names) {
  json snaps = json::array();
  for (const auto& snap : s.snapshots) {
    json edges = json::array();
    for (const auto& [u, v] : snap.edges) {
      edges.push_back({name_of(u, names), name_of(v, names)});
    }
    snaps.push_back({{"t", snap.t}, {"edges", edges}});
  }
  json doc{{"format", kFormatVersion},
           {"num_nodes", s.num_nodes},
           {"snapshots", snaps}};
  return doc.dump(2) + "\n";
}

std::string temporal_to_csv(const TemporalGraph& g) {
  std::ostringstream os;
  os << "src,dst,t\n";
  for (const auto& e : g.edges()) {
    os << g.name(e.src) << ',' << g.name(e.dst) << ',' << e.t << '\n';
  }
  return os.str();
}

std::string temporal_to_ndjson(const TemporalGraph& g) {
  std::ostringstream os;
  for (const auto& e : g.edges()) {
    json j{{"src", g.name(e.src)}, {"dst", g.name(e.dst)}, {"t", e.t}};
    os << j.dump() << '\n';
  }
  return os.str();
}

std::string temporal_to_dot(const TemporalGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    os << "  n" << v << " [label=\"" << dot_escape(g.name(v)) << "\", shape=box];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.t << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tiso
