#include "knotkit/colouring.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "knotkit/error.hpp"
#include "knotkit/parallel.hpp"

namespace knotkit {

std::optional<CrossingOutput> try_crossing_rule(const BirackTable &table, CrossingKind kind, Element in_over,
                                                Element in_under) {
  if (kind == CrossingKind::virtual_crossing)
    return CrossingOutput{in_over, in_under};
  if (kind == CrossingKind::positive) {
    auto s = table.try_switch(in_over, in_under);
    if (!s)
      return std::nullopt;
    return CrossingOutput{s->second, s->first};
  }
  auto s = table.try_switch_inverse(in_under, in_over);
  if (!s)
    return std::nullopt;
  return CrossingOutput{s->first, s->second};
}

CrossingOutput crossing_rule(const BirackTable &table, CrossingKind kind, Element in_over, Element in_under) {
  if (kind == CrossingKind::negative) {
    auto r = try_crossing_rule(table, kind, in_over, in_under);
    if (!r)
      throw Error(ErrorCode::NoPreimage, "switch map does not hit (" + std::to_string(in_under) + "," +
                                             std::to_string(in_over) + ")");
    return *r;
  }
  auto [under, over] = table.switch_map(in_over, in_under);
  return {over, under};
}

namespace {

/// In (over, under) from out (over, under): the forward direction of the
/// crossing read backwards.
std::optional<std::pair<Element, Element>> inputs_from_outputs(const BirackTable &table, CrossingKind kind,
                                                               Element out_over, Element out_under) {
  if (kind == CrossingKind::positive) {
    auto s = table.try_switch_inverse(out_under, out_over);
    if (!s)
      return std::nullopt;
    return std::pair{s->first, s->second};
  }
  auto s = table.try_switch(out_over, out_under);
  if (!s)
    return std::nullopt;
  return std::pair{s->second, s->first};
}

bool crossing_holds(const BirackTable &table, CrossingKind kind, Element io, Element iu, Element oo, Element ou) {
  if (kind == CrossingKind::positive) {
    auto r = try_crossing_rule(table, kind, io, iu);
    return r && r->over == oo && r->under == ou;
  }
  auto s = table.try_switch(oo, ou);
  return s && s->first == iu && s->second == io;
}

class EdgeSearch {
public:
  EdgeSearch(const Diagram &d, const BirackTable &table)
      : d_(d), table_(table), colour_(d.semi_arcs().size(), kUndefined), incident_(d.semi_arcs().size()) {
    const auto &xs = d.crossings();
    for (int i = 0; i < static_cast<int>(xs.size()); ++i)
      for (SemiArcId a : {xs[i].over_in, xs[i].under_in, xs[i].over_out, xs[i].under_out})
        incident_[a].push_back(i);
  }

  /// Colourings with semi-arc 0 fixed to `first` (all colourings when there
  /// are no semi-arcs).
  std::vector<EdgeColouring> run(std::optional<Element> first) {
    results_.clear();
    if (first) {
      if (assign(0, *first) && propagate())
        search();
    } else {
      search();
    }
    return std::move(results_);
  }

private:
  bool assign(SemiArcId a, Element c) {
    if (colour_[a] != kUndefined)
      return colour_[a] == c;
    colour_[a] = c;
    trail_.push_back(a);
    for (int x : incident_[a])
      queue_.push_back(x);
    return true;
  }

  bool check(int xi) {
    const ClassicalCrossing &x = d_.crossings()[xi];
    CrossingKind kind = x.sign > 0 ? CrossingKind::positive : CrossingKind::negative;
    Element io = colour_[x.over_in], iu = colour_[x.under_in];
    Element oo = colour_[x.over_out], ou = colour_[x.under_out];
    const Element u = kUndefined;
    if (io != u && iu != u) {
      auto r = try_crossing_rule(table_, kind, io, iu);
      if (kind == CrossingKind::negative && oo != u && ou != u)
        return crossing_holds(table_, kind, io, iu, oo, ou);
      return r && assign(x.over_out, r->over) && assign(x.under_out, r->under);
    }
    if (oo != u && ou != u) {
      auto in = inputs_from_outputs(table_, kind, oo, ou);
      return in && assign(x.over_in, in->first) && assign(x.under_in, in->second);
    }
    int known = (io != u) + (iu != u) + (oo != u) + (ou != u);
    if (known < 2)
      return true;
    // One input and one output known: try every value of the missing input.
    std::optional<std::pair<Element, Element>> match;
    int matches = 0;
    for (Element c = 0; c < table_.size(); ++c) {
      Element o = io != u ? io : c;
      Element i = iu != u ? iu : c;
      auto r = try_crossing_rule(table_, kind, o, i);
      if (!r || (oo != u && r->over != oo) || (ou != u && r->under != ou))
        continue;
      if (kind == CrossingKind::negative && !crossing_holds(table_, kind, o, i, r->over, r->under))
        continue;
      ++matches;
      match = {o, i};
    }
    if (matches == 0)
      return false;
    if (matches > 1)
      return true;
    return assign(x.over_in, match->first) && assign(x.under_in, match->second);
  }

  bool propagate() {
    while (!queue_.empty()) {
      int x = queue_.front();
      queue_.pop_front();
      if (!check(x)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      colour_[trail_.back()] = kUndefined;
      trail_.pop_back();
    }
  }

  void search() {
    auto next = std::find(colour_.begin(), colour_.end(), kUndefined);
    if (next == colour_.end()) {
      if (is_edge_colouring(d_, table_, colour_))
        results_.push_back(colour_);
      return;
    }
    SemiArcId a = static_cast<SemiArcId>(next - colour_.begin());
    for (Element c = 0; c < table_.size(); ++c) {
      std::size_t mark = trail_.size();
      if (assign(a, c) && propagate())
        search();
      undo(mark);
    }
  }

  const Diagram &d_;
  const BirackTable &table_;
  EdgeColouring colour_;
  std::vector<std::vector<int>> incident_;
  std::vector<SemiArcId> trail_;
  std::deque<int> queue_;
  std::vector<EdgeColouring> results_;
};

struct Adjacent {
  SemiArcId arc;
  FaceId face;
  bool from_right; // the known face is the right face of arc
};

std::optional<WholeColouring> transmit(const Diagram &d, const BirackTable &table, const EdgeColouring &ec,
                                       const std::vector<std::pair<FaceId, Element>> &seeds) {
  const auto &all = d.all_faces();
  std::vector<std::vector<Adjacent>> adjacent(all.size());
  for (const SemiArc &arc : d.semi_arcs()) {
    adjacent[arc.right_face].push_back({arc.id, arc.left_face, true});
    adjacent[arc.left_face].push_back({arc.id, arc.right_face, false});
  }
  WholeColouring wc{ec, std::vector<Element>(all.size(), kUndefined)};
  std::deque<FaceId> queue;
  for (auto [face, colour] : seeds) {
    wc.faces[face] = colour;
    queue.push_back(face);
  }
  while (!queue.empty()) {
    FaceId f = queue.front();
    queue.pop_front();
    for (const Adjacent &adj : adjacent[f]) {
      Element b = ec[adj.arc];
      auto c = adj.from_right ? table.try_up(wc.faces[f], b) : table.try_up_inv(wc.faces[f], b);
      if (!c)
        return std::nullopt;
      if (wc.faces[adj.face] == kUndefined) {
        wc.faces[adj.face] = *c;
        queue.push_back(adj.face);
      } else if (wc.faces[adj.face] != *c) {
        return std::nullopt;
      }
    }
  }
  return wc;
}

} // namespace

bool is_edge_colouring(const Diagram &d, const BirackTable &table, const EdgeColouring &ec) {
  if (ec.size() != d.semi_arcs().size())
    return false;
  for (Element c : ec)
    if (c < 0 || c >= table.size())
      return false;
  for (const ClassicalCrossing &x : d.crossings()) {
    CrossingKind kind = x.sign > 0 ? CrossingKind::positive : CrossingKind::negative;
    if (!crossing_holds(table, kind, ec[x.over_in], ec[x.under_in], ec[x.over_out], ec[x.under_out]))
      return false;
  }
  return true;
}

std::vector<EdgeColouring> enumerate_edge_colourings(const Diagram &d, const BirackTable &table) {
  if (d.semi_arcs().empty())
    return {};
  const int n = table.size();
  std::vector<std::vector<EdgeColouring>> parts(n);
  parallel_for(n, [&](int c) { parts[c] = EdgeSearch(d, table).run(c); });
  std::vector<EdgeColouring> all;
  for (auto &part : parts) {
    std::sort(part.begin(), part.end());
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  return all;
}

long long count_colourings(const Diagram &d, const BirackTable &table) {
  return static_cast<long long>(enumerate_edge_colourings(d, table).size());
}

std::optional<WholeColouring> extend_to_whole(const Diagram &d, const BirackTable &table, const EdgeColouring &ec,
                                              FaceId seed_face, Element seed_colour) {
  faces(d); // connectivity check
  if (seed_face < 0 || seed_face >= static_cast<FaceId>(d.all_faces().size()))
    throw Error(ErrorCode::BadParameter, "seed face out of range");
  if (seed_colour < 0 || seed_colour >= table.size())
    throw Error(ErrorCode::BadParameter, "seed colour out of range");
  return transmit(d, table, ec, {{seed_face, seed_colour}});
}

bool is_whole_colouring(const Diagram &d, const BirackTable &table, const WholeColouring &wc) {
  if (!is_edge_colouring(d, table, wc.edge) || wc.faces.size() != d.all_faces().size())
    return false;
  for (const SemiArc &arc : d.semi_arcs()) {
    auto left = table.try_up(wc.faces[arc.right_face], wc.edge[arc.id]);
    if (!left || *left != wc.faces[arc.left_face])
      return false;
  }
  return true;
}

std::vector<WholeColouring> enumerate_whole_colourings(const Diagram &d, const BirackTable &table) {
  // Seed face per piece: the smallest face id on it.
  std::vector<FaceId> seed_faces;
  std::vector<bool> piece_seen(d.piece_count(), false);
  for (FaceId f = 0; f < static_cast<FaceId>(d.all_faces().size()); ++f) {
    int p = d.face_piece()[f];
    if (!piece_seen[p]) {
      piece_seen[p] = true;
      seed_faces.push_back(f);
    }
  }
  const int n = table.size();
  std::vector<WholeColouring> result;
  for (const EdgeColouring &ec : enumerate_edge_colourings(d, table)) {
    std::vector<Element> digits(seed_faces.size(), 0);
    while (true) {
      std::vector<std::pair<FaceId, Element>> seeds;
      for (std::size_t i = 0; i < seed_faces.size(); ++i)
        seeds.emplace_back(seed_faces[i], digits[i]);
      if (auto wc = transmit(d, table, ec, seeds))
        result.push_back(std::move(*wc));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == n)
        digits[i++] = 0;
      if (i == digits.size())
        break;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

EdgeColouring to_pair_colouring(const Diagram &d, const BirackTable &table, const WholeColouring &wc) {
  EdgeColouring pairs(d.semi_arcs().size());
  for (const SemiArc &arc : d.semi_arcs())
    pairs[arc.id] = pair_element(table.size(), wc.faces[arc.right_face], wc.edge[arc.id]);
  return pairs;
}

WholeColouring from_pair_colouring(const Diagram &d, const BirackTable &table, const EdgeColouring &pairs) {
  WholeColouring wc{EdgeColouring(d.semi_arcs().size()), std::vector<Element>(d.all_faces().size(), kUndefined)};
  auto set_face = [&](FaceId f, Element c) {
    if (wc.faces[f] != kUndefined && wc.faces[f] != c)
      throw Error(ErrorCode::NotWholeColoured, "face " + std::to_string(f) + " receives two colours");
    wc.faces[f] = c;
  };
  for (const SemiArc &arc : d.semi_arcs()) {
    auto [right, edge] = split_pair(table.size(), pairs[arc.id]);
    wc.edge[arc.id] = edge;
    set_face(arc.right_face, right);
    auto left = table.try_up(right, edge);
    if (!left)
      throw Error(ErrorCode::NotWholeColoured, "undefined face colour across semi-arc " + std::to_string(arc.id));
    set_face(arc.left_face, *left);
  }
  return wc;
}

std::string triple_pattern(Element region, Element under, Element over) {
  if (region == under && under == over)
    return "aaa";
  if (under == over)
    return "abb";
  if (region == under)
    return "aab";
  if (region == over)
    return "aba";
  return "abc";
}

PairTableReport pair_table_check(const BirackTable &table) {
  if (table.size() != 3 || !table.is_total() || !find_isomorphism(table, builtin::dihedral(3)))
    throw Error(ErrorCode::WrongTable, table.name() + " is not the 3-colour quandle");
  const BirackTable doubled = double_birack(table);
  const int n = table.size();
  PairTableReport report;
  report.domain_size = doubled.domain_size();
  for (const char *pattern : {"abc", "aba", "abb", "aab", "aaa"})
    report.classes[pattern] = 0;
  for (Element over = 0; over < doubled.size(); ++over)
    for (Element under = 0; under < doubled.size(); ++under) {
      if (try_crossing_rule(doubled, CrossingKind::positive, over, under)) {
        ++report.positive;
        auto [p, x] = split_pair(n, under);
        Element y = split_pair(n, over).second;
        report.classes[triple_pattern(p, x, y)]++;
        report.positive_triples.push_back({p, x, y});
      }
      if (try_crossing_rule(doubled, CrossingKind::negative, over, under))
        ++report.negative;
    }
  std::sort(report.positive_triples.begin(), report.positive_triples.end());
  return report;
}

std::string colouring_json(const Diagram &d, const BirackTable &table, const EdgeColouring &edge,
                           const std::vector<Element> *faces) {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["diagram"] = d.name();
  j["birack"] = table.name();
  j["edge"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < edge.size(); ++i)
    j["edge"][std::to_string(i)] = edge[i];
  if (faces) {
    j["faces"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < faces->size(); ++i)
      j["faces"][std::to_string(i)] = (*faces)[i];
  } else {
    j["faces"] = nullptr;
  }
  return j.dump();
}

} // namespace knotkit
