#include <doctest.h>

#include <algorithm>
#include <map>

#include "knotkit/catalog.hpp"
#include "knotkit/error.hpp"
#include "knotkit/invariants.hpp"

using namespace knotkit;

namespace {

constexpr Element r = 0, g = 1, b = 2;

std::map<long long, int> histogram(const std::vector<long long> &values) {
  std::map<long long, int> h;
  for (long long v : values)
    ++h[v];
  return h;
}

Chain triples(std::initializer_list<std::pair<Tuple, long long>> terms) { return Chain(3, terms); }

} // namespace

TEST_CASE("trefoil chirality by the 3-colour quandle") {
  const auto right = chirality_q3(catalog::diagram("trefoil_r"));
  const auto left = chirality_q3(catalog::diagram("trefoil_l"));
  CHECK(histogram(right) == std::map<long long, int>{{0, 9}, {1, 18}});
  CHECK(histogram(left) == std::map<long long, int>{{-1, 18}, {0, 9}});
  std::vector<long long> negated;
  for (long long v : left)
    negated.push_back(-v);
  std::sort(negated.begin(), negated.end());
  CHECK(negated == right);
  CHECK(std::is_sorted(right.begin(), right.end()));
}

TEST_CASE("the trefoil anchor chain") {
  const Diagram t = catalog::diagram("trefoil_r");
  const BirackTable q = builtin::three_colour();
  const Chain anchor = triples({{{r, b, g}, 1}, {{r, r, b}, 1}, {{r, g, r}, 1}});
  bool found = false;
  for (const WholeColouring &wc : enumerate_whole_colourings(t, q))
    found = found || whole_cycle(t, q, wc) == anchor;
  CHECK(found);
  const HomologyBasis h = homology_group(q, 3, Theory::Q);
  CHECK(h.coordinates(anchor) == std::vector<long long>{1});
}

TEST_CASE("crossing triples follow the sign conventions") {
  const Diagram t = catalog::diagram("trefoil_r");
  const BirackTable q = builtin::three_colour();
  for (const WholeColouring &wc : enumerate_whole_colourings(t, q)) {
    const auto labels = crossing_triples(t, q, wc);
    REQUIRE(labels.size() == t.crossings().size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const ClassicalCrossing &c = t.crossings()[i];
      CHECK(labels[i].sign == c.sign);
      CHECK(labels[i].under == wc.edge[c.under_in]);
      CHECK(labels[i].over == wc.edge[c.over_in]);
      CHECK(labels[i].region == wc.faces[t.semi_arcs()[c.under_in].right_face]);
    }
  }
  WholeColouring partial;
  CHECK_THROWS_AS(crossing_triples(t, q, partial), Error);
}

TEST_CASE("whole cycles are cycles") {
  const BirackTable q = builtin::three_colour();
  for (const std::string &name : catalog::diagram_names()) {
    CAPTURE(name);
    const Diagram d = catalog::diagram(name);
    for (const WholeColouring &wc : enumerate_whole_colourings(d, q)) {
      const Chain c = whole_cycle(d, q, wc);
      CHECK(boundary(q, c).is_zero());
    }
  }
  // A dihedral quandle of order 5 gives classes in Z_5.
  for (const auto &cls : chirality_classes(catalog::diagram("figure8"), builtin::dihedral(5)))
    CHECK(cls.size() == 1);
}

TEST_CASE("chirality agrees on equivalent diagrams") {
  for (auto [left, right] : catalog::equivalence_pairs()) {
    CAPTURE(left);
    CHECK(chirality_q3(catalog::diagram(left)) == chirality_q3(catalog::diagram(right)));
  }
  const auto eight = chirality_q3(catalog::diagram("figure8"));
  CHECK(histogram(eight) == std::map<long long, int>{{0, 9}});
}

TEST_CASE("R3 colourings of the 3-colour quandle") {
  const auto colourings = r3_colourings(builtin::three_colour());
  // Three inbound colours and a seed region, each free: 3^4.
  CHECK(colourings.size() == 81);
  for (const R3Colouring &c : colourings) {
    CHECK(c.left.size() == 3);
    CHECK(c.right.size() == 3);
  }
  // abc + aac + bba = aab + ccc + abc with a = r, b = b, c = g.
  const Chain sample = triples({{{r, b, g}, 1}, {{r, r, g}, 1}, {{b, b, r}, 1}}) -
                       triples({{{r, r, b}, 1}, {{g, g, g}, 1}, {{r, b, g}, 1}});
  bool found = false;
  for (const R3Colouring &c : colourings)
    found = found || c.relation == sample || c.relation == -sample;
  CHECK(found);
  CHECK(r3_relations(builtin::three_colour()).size() == 81);
}

TEST_CASE("relation normalization") {
  const Chain c = triples({{{0, 1, 2}, -2}, {{1, 1, 1}, 4}});
  CHECK(normalize_relation(c) == triples({{{0, 1, 2}, 1}, {{1, 1, 1}, -2}}));
  CHECK(normalize_relation(Chain(3)).is_zero());
}

TEST_CASE("crossing-invariant group") {
  const CrossingGroup group = crossing_invariant_group(builtin::three_colour());
  CHECK(group.generator_count() == 27);
  CHECK(group.relations().size() == 54);
  CHECK(to_string(group.group()) == "Z^4 + Z_3");
  CHECK(group.order_of(q3_generator()) == 3);
  CHECK(group.order_of(triples({{{r, g, b}, 1}})) == 0);
  CHECK(group.order_of(triples({{{r, g, g}, 1}})) == 1);
  const Chain anchor = triples({{{r, b, g}, 1}, {{r, r, b}, 1}, {{r, g, r}, 1}});
  CHECK(group.coordinates(anchor) == std::vector<long long>{-1, 0, 0, 0, 0});
  CHECK(group.coordinates(anchor + anchor + anchor) == std::vector<long long>{0, 0, 0, 0, 0});
}

TEST_CASE("black_white two-cycles") {
  const BirackTable bw = builtin::black_white();
  const std::map<std::string, std::vector<long long>> expected{
      {"unknot0", {0, 0}},   {"unknot_kink_pos", {0, 1}},  {"unknot_r2", {0, 0}},
      {"trefoil_r", {0, 3}}, {"trefoil_l", {0, -3}},       {"figure8", {0, 0}},
      {"virtual_trefoil", {1, 0}}, {"trefoil_r_kinked", {0, 4}}};
  for (const auto &[name, cls] : expected) {
    CAPTURE(name);
    const Diagram d = catalog::diagram(name);
    const auto colourings = enumerate_edge_colourings(d, bw);
    CHECK(colourings.size() == 2);
    for (const EdgeColouring &ec : colourings) {
      const TwoCycle cycle = bw_two_cycle(d, bw, ec);
      CHECK(boundary(bw, cycle.chain).is_zero());
      CHECK(cycle.homology_class == cls);
    }
  }
}

TEST_CASE("report is deterministic and ordered") {
  const Diagram t = catalog::diagram("trefoil_r");
  const std::string json = diagram_report_json(t);
  CHECK(json == diagram_report_json(t));
  std::size_t last = 0;
  for (const char *key : {"\"format_version\"", "\"diagram\"", "\"writhe\"", "\"genus\"", "\"colour_counts\"",
                          "\"chirality_q3\"", "\"orientation\"", "\"two_sided\"", "\"chessboard\""}) {
    const std::size_t at = json.find(key);
    REQUIRE(at != std::string::npos);
    CHECK(at > last);
    last = at;
  }
  CHECK(json.find("\"chessboard\":true") != std::string::npos);
  const std::string vt = diagram_report_json(catalog::diagram("virtual_trefoil"));
  CHECK(vt.find("\"chessboard\":false") != std::string::npos);
  CHECK(vt.find("\"two_sided\":false") != std::string::npos);
  CHECK_FALSE(diagram_report_text(t).empty());
}
