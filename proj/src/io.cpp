#include <json.hpp>

#include "knotkit/algebra.hpp"
#include "knotkit/diagram.hpp"
#include "knotkit/error.hpp"

namespace knotkit {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    const std::string message = e.what();
    throw Error(ErrorCode::MalformedInput, message.substr(message.find(": ") + 2));
  }
}

template <typename T> T field(const ordered_json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::MalformedInput, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception &) {
    throw Error(ErrorCode::MalformedInput, std::string("field \"") + key + "\" has the wrong type");
  }
}

std::optional<int> optional_int(const ordered_json &j, const char *key) {
  if (!j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  return field<int>(j, key);
}

std::string kind_symbol(CrossingKind k) {
  switch (k) {
  case CrossingKind::positive: return "+";
  case CrossingKind::negative: return "-";
  case CrossingKind::virtual_crossing: return "v";
  }
  return "v";
}

CrossingKind parse_kind(const std::string &s) {
  if (s == "+")
    return CrossingKind::positive;
  if (s == "-")
    return CrossingKind::negative;
  if (s == "v")
    return CrossingKind::virtual_crossing;
  throw Error(ErrorCode::MalformedInput, "unknown crossing kind \"" + s + "\"");
}

} // namespace

std::string serialize_birack(const BirackTable &table) {
  ordered_json j;
  j["name"] = table.name();
  j["n"] = table.size();
  j["up"] = table.up_rows();
  j["down"] = table.down_rows();
  return j.dump();
}

BirackTable parse_birack(std::string_view text) {
  ordered_json j = parse_json(text);
  try {
    return BirackTable(field<std::string>(j, "name"), field<int>(j, "n"),
                       field<std::vector<std::vector<Element>>>(j, "up"),
                       field<std::vector<std::vector<Element>>>(j, "down"));
  } catch (const Error &e) {
    if (e.code() != ErrorCode::BadParameter)
      throw;
    const std::string message = e.what();
    throw Error(ErrorCode::MalformedInput, message.substr(message.find(": ") + 2));
  }
}

std::string serialize_diagram(const Diagram &d) {
  const DiagramSpec &s = d.spec();
  ordered_json j;
  j["name"] = s.name;
  j["vertices"] = ordered_json::array();
  for (const VertexSpec &v : s.vertices) {
    ordered_json vj;
    vj["kind"] = kind_symbol(v.kind);
    vj["darts"] = v.darts;
    vj["under_in"] = v.under_in ? ordered_json(*v.under_in) : ordered_json(nullptr);
    j["vertices"].push_back(vj);
  }
  j["edges"] = ordered_json::array();
  for (auto [from, to] : s.edges)
    j["edges"].push_back({from, to});
  j["outer_face_dart"] = s.outer_face_dart ? ordered_json(*s.outer_face_dart) : ordered_json(nullptr);
  j["free_loops"] = s.free_loops;
  return j.dump();
}

Diagram parse_diagram(std::string_view json_text) {
  ordered_json j = parse_json(json_text);
  DiagramSpec s;
  s.name = field<std::string>(j, "name");
  const ordered_json vertices = field<ordered_json>(j, "vertices");
  if (!vertices.is_array())
    throw Error(ErrorCode::MalformedInput, "\"vertices\" must be an array");
  for (const ordered_json &vj : vertices) {
    VertexSpec v;
    v.kind = parse_kind(field<std::string>(vj, "kind"));
    auto darts = field<std::vector<DartId>>(vj, "darts");
    if (darts.size() != 4)
      throw Error(ErrorCode::MalformedInput, "a vertex needs exactly 4 darts");
    std::copy(darts.begin(), darts.end(), v.darts.begin());
    v.under_in = optional_int(vj, "under_in");
    s.vertices.push_back(v);
  }
  for (const auto &edge : field<std::vector<std::vector<DartId>>>(j, "edges")) {
    if (edge.size() != 2)
      throw Error(ErrorCode::MalformedInput, "an edge is a pair of darts");
    s.edges.emplace_back(edge[0], edge[1]);
  }
  s.outer_face_dart = optional_int(j, "outer_face_dart");
  s.free_loops = j.contains("free_loops") ? field<int>(j, "free_loops") : 0;
  return Diagram(std::move(s));
}

} // namespace knotkit
