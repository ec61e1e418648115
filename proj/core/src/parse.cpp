#include "tiso/parse.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "tiso/errors.hpp"

namespace tiso {
namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

class Builder {
 public:
  NodeId intern(const std::string& name) {
    auto [it, inserted] = ids_.try_emplace(name, static_cast<NodeId>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }

  void add(NodeId src, NodeId dst, Timestamp t, std::size_t line) {
    TimestampedEdge e{src, dst, t};
    auto [it, inserted] = seen_.try_emplace(e, line);
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "(" + names_[src] + "," + names_[dst] + ";" +
                      std::to_string(t) + ") first seen at line " +
                      std::to_string(it->second),
                  line);
    }
    edges_.push_back(e);
  }

  TemporalGraph finish() && {
    if (edges_.empty()) throw Error(ErrorCode::kEmptyInput, "no edges");
    auto n = names_.size();
    return TemporalGraph(n, std::move(edges_), std::move(names_));
  }

 private:
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::string> names_;
  std::vector<TimestampedEdge> edges_;
  std::map<TimestampedEdge, std::size_t> seen_;
};

Timestamp parse_timestamp(std::string_view field, std::size_t line) {
  Timestamp t = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), t);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::kParse,
                "timestamp '" + std::string(field) +
                    "' is not a signed 64-bit integer",
                line);
  }
  return t;
}

void parse_csv_line(std::string_view text, std::size_t line, bool first,
                    Builder& b) {
  std::string_view fields[3];
  std::size_t count = 0;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto part = trim(text.substr(start, comma == std::string_view::npos
                                            ? std::string_view::npos
                                            : comma - start));
    if (count == 3) {
      throw Error(ErrorCode::kParse, "expected 3 fields", line);
    }
    fields[count++] = part;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (count != 3) throw Error(ErrorCode::kParse, "expected 3 fields", line);
  if (first && fields[0] == "src" && fields[1] == "dst" && fields[2] == "t") {
    return;
  }
  if (fields[0].empty() || fields[1].empty()) {
    throw Error(ErrorCode::kParse, "empty node name", line);
  }
  auto t = parse_timestamp(fields[2], line);
  auto src = b.intern(std::string(fields[0]));
  auto dst = b.intern(std::string(fields[1]));
  b.add(src, dst, t, line);
}

std::string node_name(const nlohmann::json& v, const char* key,
                      std::size_t line) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw Error(ErrorCode::kParse,
              std::string("field '") + key + "' must be a string or integer",
              line);
}

void parse_ndjson_line(std::string_view text, std::size_t line, Builder& b) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what(), line);
  }
  if (!obj.is_object()) throw Error(ErrorCode::kParse, "expected an object", line);
  for (const char* key : {"src", "dst", "t"}) {
    if (!obj.contains(key)) {
      throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'",
                  line);
    }
  }
  const auto& tv = obj["t"];
  if (!tv.is_number_integer()) {
    throw Error(ErrorCode::kParse, "field 't' must be an integer", line);
  }
  auto src = b.intern(node_name(obj["src"], "src", line));
  auto dst = b.intern(node_name(obj["dst"], "dst", line));
  b.add(src, dst, tv.get<Timestamp>(), line);
}

}  // namespace

TemporalGraph parse_temporal_graph(std::istream& in, InputFormat format) {
  Builder b;
  std::string raw;
  std::size_t line = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw);
    if (text.empty()) continue;
    if (format == InputFormat::kCsv) {
      parse_csv_line(text, line, first, b);
    } else {
      parse_ndjson_line(text, line, b);
    }
    first = false;
  }
  return std::move(b).finish();
}

TemporalGraph parse_temporal_graph(std::string_view text, InputFormat format) {
  std::istringstream in{std::string(text)};
  return parse_temporal_graph(in, format);
}

TemporalGraph load_temporal_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  auto format = (ends_with(".ndjson") || ends_with(".jsonl"))
                    ? InputFormat::kNdjson
                    : InputFormat::kCsv;
  return parse_temporal_graph(in, format);
}

}  // namespace tiso
