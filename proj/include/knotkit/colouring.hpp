#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotkit/algebra.hpp"
#include "knotkit/diagram.hpp"

namespace knotkit {

/// Colour per semi-arc, indexed by SemiArcId.
using EdgeColouring = std::vector<Element>;

struct WholeColouring {
  EdgeColouring edge;
  /// Colour per face, indexed by FaceId.
  std::vector<Element> faces;

  friend auto operator<=>(const WholeColouring &, const WholeColouring &) = default;
};

/// Outgoing colours at a classical crossing.
struct CrossingOutput {
  Element over = 0;
  Element under = 0;
};

/// Positive: out_under = in_under^in_over, out_over = in_over_in_under, i.e.
/// (out_under, out_over) = S(in_over, in_under). Negative: the outputs are
/// the unique (out_over, out_under) with S(out_over, out_under) =
/// (in_under, in_over). Throws UndefinedPair (or NoPreimage for negative
/// crossings outside the image of S).
CrossingOutput crossing_rule(const BirackTable &table, CrossingKind kind, Element in_over, Element in_under);
std::optional<CrossingOutput> try_crossing_rule(const BirackTable &table, CrossingKind kind, Element in_over,
                                                Element in_under);

bool is_edge_colouring(const Diagram &d, const BirackTable &table, const EdgeColouring &ec);

/// All edge colourings in lexicographic order. Undefined table entries
/// prune the search.
std::vector<EdgeColouring> enumerate_edge_colourings(const Diagram &d, const BirackTable &table);
long long count_colourings(const Diagram &d, const BirackTable &table);

/// Transmits face colours from the seed (right face a, left face a^b along
/// every semi-arc coloured b). Nothing when transmission is inconsistent or
/// hits an undefined entry. Throws Disconnected.
std::optional<WholeColouring> extend_to_whole(const Diagram &d, const BirackTable &table, const EdgeColouring &ec,
                                              FaceId seed_face, Element seed_colour);

bool is_whole_colouring(const Diagram &d, const BirackTable &table, const WholeColouring &wc);

/// Every edge colouring with every consistent seed, one seed per connected
/// piece of the abstract surface, in lexicographic order.
std::vector<WholeColouring> enumerate_whole_colourings(const Diagram &d, const BirackTable &table);

/// The colouring by double(table) whose pair on a semi-arc is
/// (right face colour, edge colour), encoded with pair_element.
EdgeColouring to_pair_colouring(const Diagram &d, const BirackTable &table, const WholeColouring &wc);
/// Inverse of to_pair_colouring; throws NotWholeColoured when the pairs do
/// not define consistent face colours.
WholeColouring from_pair_colouring(const Diagram &d, const BirackTable &table, const EdgeColouring &pairs);

struct PairTableReport {
  int positive = 0;
  int negative = 0;
  int domain_size = 0;
  /// Pattern of the (region, under, over) triple: abc, aba, abb, aab, aaa.
  std::map<std::string, int> classes;
  /// (region, under, over) of every positive colouring, lexicographic.
  std::vector<std::array<Element, 3>> positive_triples;
};

/// Pattern name of a (region, under, over) triple over a quandle.
std::string triple_pattern(Element region, Element under, Element over);

/// Enumerates the crossing colourings by double(table). Throws WrongTable
/// unless table is isomorphic to the 3-colour quandle.
PairTableReport pair_table_check(const BirackTable &table);

/// {"diagram", "birack", "edge": {semi-arc: element}, "faces": {face: element} | null}
std::string colouring_json(const Diagram &d, const BirackTable &table, const EdgeColouring &edge,
                           const std::vector<Element> *faces);

} // namespace knotkit
