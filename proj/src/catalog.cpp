#include "knotkit/catalog.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "knotkit/error.hpp"

namespace knotkit::catalog {

namespace {

constexpr CrossingKind P = CrossingKind::positive;
constexpr CrossingKind N = CrossingKind::negative;
constexpr CrossingKind V = CrossingKind::virtual_crossing;

Diagram braid(std::string name, int strands, std::vector<BraidLetter> word) {
  return Diagram::from_braid(std::move(name), strands, word);
}

Diagram unknot_r2() {
  // A negative and a positive crossing cancelling by a second Reidemeister move.
  DiagramSpec s;
  s.name = "unknot_r2";
  s.vertices = {{N, {0, 1, 2, 3}, 3}, {P, {4, 5, 6, 7}, 7}};
  s.edges = {{5, 3}, {1, 0}, {2, 6}, {4, 7}};
  s.outer_face_dart = 1;
  return Diagram(std::move(s));
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    return std::nullopt;
  return value;
}

std::string read_file(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in)
    throw Error(ErrorCode::MalformedInput, "cannot read " + std::string(path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

std::vector<std::string> diagram_names() {
  return {"unknot0",  "unknot_kink_pos", "unknot_r2",       "trefoil_r",
          "trefoil_l", "figure8",        "virtual_trefoil", "trefoil_r_kinked"};
}

Diagram diagram(std::string_view name) {
  if (name == "unknot0") {
    DiagramSpec s;
    s.name = "unknot0";
    s.free_loops = 1;
    return Diagram(std::move(s));
  }
  if (name == "unknot_kink_pos")
    return braid("unknot_kink_pos", 2, {{1, P}});
  if (name == "unknot_r2")
    return unknot_r2();
  if (name == "trefoil_r")
    return braid("trefoil_r", 2, {{1, P}, {1, P}, {1, P}});
  if (name == "trefoil_l")
    return mirror(diagram("trefoil_r")).renamed("trefoil_l");
  if (name == "figure8")
    return braid("figure8", 3, {{1, P}, {2, N}, {1, P}, {2, N}});
  if (name == "virtual_trefoil")
    return braid("virtual_trefoil", 2, {{1, P}, {1, P}, {1, V}});
  if (name == "trefoil_r_kinked")
    return braid("trefoil_r_kinked", 3, {{1, P}, {1, P}, {1, P}, {2, P}});
  throw Error(ErrorCode::BadParameter, "unknown diagram \"" + std::string(name) + "\"");
}

std::vector<std::pair<std::string, std::string>> equivalence_pairs() {
  return {{"trefoil_r", "trefoil_r_kinked"}, {"unknot0", "unknot_r2"}, {"unknot0", "unknot_kink_pos"}};
}

std::vector<std::string> birack_names() {
  return {"q3", "bw", "twist2", "twist3", "dihedral3", "dihedral5", "alexander:5:2:3"};
}

BirackTable birack(std::string_view name) {
  if (name == "q3" || name == "three_colour")
    return builtin::three_colour();
  if (name == "bw" || name == "black_white")
    return builtin::black_white();
  for (std::string_view prefix : {"twist", "dihedral"}) {
    if (!name.starts_with(prefix))
      continue;
    auto n = parse_int(name.substr(prefix.size()));
    if (!n)
      break;
    return prefix == "twist" ? builtin::twist(*n) : builtin::dihedral(*n);
  }
  if (name.starts_with("alexander:")) {
    std::vector<int> params;
    std::string_view rest = name.substr(10);
    while (true) {
      auto colon = rest.find(':');
      auto value = parse_int(rest.substr(0, colon));
      if (!value)
        break;
      params.push_back(*value);
      if (colon == std::string_view::npos)
        break;
      rest = rest.substr(colon + 1);
    }
    if (params.size() == 3)
      return builtin::alexander(params[0], params[1], params[2]);
  }
  throw Error(ErrorCode::BadParameter, "unknown birack \"" + std::string(name) + "\"");
}

bool looks_like_path(std::string_view arg) {
  return arg.find('/') != std::string_view::npos || arg.find('.') != std::string_view::npos;
}

Diagram load_diagram(std::string_view arg) {
  return looks_like_path(arg) ? parse_diagram(read_file(arg)) : diagram(arg);
}

BirackTable load_birack(std::string_view arg) {
  return looks_like_path(arg) ? parse_birack(read_file(arg)) : birack(arg);
}

} // namespace knotkit::catalog
