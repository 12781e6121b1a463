#include "knotkit/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "knotkit/error.hpp"

namespace knotkit {

namespace {

int mod4(int s) { return ((s % 4) + 4) % 4; }

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
  std::vector<int> parent_;
};

} // namespace

Diagram::Diagram(DiagramSpec spec) : spec_(std::move(spec)) {
  validate_and_index();
  trace_components();
  trace_faces();
}

const Diagram::DartInfo &Diagram::info(DartId d) const {
  auto it = std::lower_bound(dart_info_.begin(), dart_info_.end(), d,
                             [](const auto &entry, DartId key) { return entry.first < key; });
  if (it == dart_info_.end() || it->first != d)
    throw Error(ErrorCode::MalformedInput, "unknown dart " + std::to_string(d));
  return it->second;
}

DartId Diagram::dart_at(VertexId v, int slot) const { return spec_.vertices[v].darts[mod4(slot)]; }

void Diagram::validate_and_index() {
  if (spec_.free_loops < 0)
    throw Error(ErrorCode::MalformedInput, "free_loops must be non-negative");
  if (spec_.vertices.empty() && spec_.free_loops == 0)
    throw Error(ErrorCode::MalformedInput, "empty diagram");

  std::map<DartId, DartInfo> darts;
  for (VertexId v = 0; v < vertex_count(); ++v)
    for (int slot = 0; slot < 4; ++slot) {
      DartId d = spec_.vertices[v].darts[slot];
      if (d < 0)
        throw Error(ErrorCode::MalformedInput, "dart ids must be non-negative");
      if (!darts.emplace(d, DartInfo{v, slot, false, -1}).second)
        throw Error(ErrorCode::MalformedInput, "dart " + std::to_string(d) + " used twice");
    }

  std::map<DartId, int> seen;
  for (auto [from, to] : spec_.edges) {
    auto f = darts.find(from);
    auto t = darts.find(to);
    if (f == darts.end() || t == darts.end())
      throw Error(ErrorCode::InconsistentRotation, "edge refers to an unknown dart");
    if (from == to || ++seen[from] > 1 || ++seen[to] > 1)
      throw Error(ErrorCode::InconsistentRotation, "edges are not a perfect matching of darts");
    f->second.out = true;
    f->second.partner = to;
    t->second.partner = from;
  }
  if (seen.size() != darts.size())
    throw Error(ErrorCode::InconsistentRotation, "every dart must lie on exactly one edge");

  dart_info_.assign(darts.begin(), darts.end());

  crossing_of_vertex_.assign(vertex_count(), -1);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    const VertexSpec &vs = spec_.vertices[v];
    for (int slot = 0; slot < 2; ++slot)
      if (info(vs.darts[slot]).out == info(vs.darts[slot + 2]).out)
        throw Error(ErrorCode::BadStrandPairing,
                    "vertex " + std::to_string(v) + ": opposite darts must be one in, one out");
    if (vs.kind == CrossingKind::virtual_crossing) {
      if (vs.under_in)
        throw Error(ErrorCode::BadStrandPairing, "virtual vertex " + std::to_string(v) + " has an under strand");
      continue;
    }
    if (!vs.under_in)
      throw Error(ErrorCode::BadStrandPairing, "classical vertex " + std::to_string(v) + " lacks under_in");
    auto pos = std::find(vs.darts.begin(), vs.darts.end(), *vs.under_in);
    if (pos == vs.darts.end() || info(*vs.under_in).out)
      throw Error(ErrorCode::BadStrandPairing,
                  "vertex " + std::to_string(v) + ": under_in must be an incoming dart of the vertex");
    int u = static_cast<int>(pos - vs.darts.begin());
    bool positive = info(dart_at(v, u + 1)).out;
    if (positive != (vs.kind == CrossingKind::positive))
      throw Error(ErrorCode::BadStrandPairing,
                  "vertex " + std::to_string(v) + ": crossing kind disagrees with rotation and under strand");
    crossing_of_vertex_[v] = static_cast<int>(crossings_.size());
    ClassicalCrossing c;
    c.vertex = v;
    c.sign = positive ? 1 : -1;
    crossings_.push_back(c);
  }

  if (spec_.outer_face_dart) {
    const DartInfo &o = info(*spec_.outer_face_dart);
    if (spec_.vertices[o.vertex].kind == CrossingKind::virtual_crossing)
      throw Error(ErrorCode::MalformedInput, "outer_face_dart must belong to a classical crossing");
  }
}

void Diagram::trace_components() {
  const int slots = vertex_count() * 4;
  arc_of_out_.assign(slots, -1);
  arc_of_in_.assign(slots, -1);
  std::vector<bool> used_out(slots, false);
  auto key = [&](DartId d) {
    const DartInfo &i = info(d);
    return i.vertex * 4 + i.slot;
  };
  auto opposite = [&](DartId d) {
    const DartInfo &i = info(d);
    return dart_at(i.vertex, i.slot + 2);
  };
  auto classical = [&](DartId d) {
    return spec_.vertices[info(d).vertex].kind != CrossingKind::virtual_crossing;
  };
  auto visit_of = [&](DartId in) {
    const DartInfo &i = info(in);
    const VertexSpec &vs = spec_.vertices[i.vertex];
    Visit visit{i.vertex, vs.kind, false};
    if (vs.kind != CrossingKind::virtual_crossing)
      visit.over = *vs.under_in != in;
    return visit;
  };

  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (spec_.vertices[v].kind == CrossingKind::virtual_crossing)
      continue;
    for (int slot = 0; slot < 4; ++slot) {
      DartId first = dart_at(v, slot);
      if (!info(first).out || used_out[key(first)])
        continue;
      Component comp;
      comp.visits.push_back(visit_of(opposite(first)));
      DartId cur = first;
      while (true) {
        SemiArc arc;
        arc.id = static_cast<SemiArcId>(semi_arcs_.size());
        arc.component = static_cast<int>(components_.size());
        arc.start = cur;
        used_out[key(cur)] = true;
        DartId in = info(cur).partner;
        while (!classical(in)) {
          arc.virtual_passes.push_back(info(in).vertex);
          comp.visits.push_back(visit_of(in));
          DartId through = opposite(in);
          used_out[key(through)] = true;
          in = info(through).partner;
        }
        arc.end = in;
        arc_of_out_[key(cur)] = arc.id;
        arc_of_in_[key(in)] = arc.id;
        comp.semi_arcs.push_back(arc.id);
        semi_arcs_.push_back(arc);
        DartId next = opposite(in);
        if (next == first)
          break;
        comp.visits.push_back(visit_of(in));
        cur = next;
      }
      components_.push_back(std::move(comp));
    }
  }

  // Components made only of virtual crossings.
  for (VertexId v = 0; v < vertex_count(); ++v)
    for (int slot = 0; slot < 4; ++slot) {
      DartId first = dart_at(v, slot);
      if (!info(first).out || used_out[key(first)])
        continue;
      Component comp;
      SemiArc arc;
      arc.id = static_cast<SemiArcId>(semi_arcs_.size());
      arc.component = static_cast<int>(components_.size());
      DartId cur = first;
      do {
        used_out[key(cur)] = true;
        DartId in = info(cur).partner;
        arc.virtual_passes.push_back(info(in).vertex);
        comp.visits.push_back(visit_of(in));
        cur = opposite(in);
      } while (cur != first);
      comp.semi_arcs.push_back(arc.id);
      semi_arcs_.push_back(arc);
      components_.push_back(std::move(comp));
    }

  for (int i = 0; i < spec_.free_loops; ++i) {
    SemiArc arc;
    arc.id = static_cast<SemiArcId>(semi_arcs_.size());
    arc.component = static_cast<int>(components_.size());
    semi_arcs_.push_back(arc);
    components_.push_back(Component{{arc.id}, {}});
  }

  for (ClassicalCrossing &c : crossings_) {
    const VertexSpec &vs = spec_.vertices[c.vertex];
    const DartInfo &u = info(*vs.under_in);
    DartId under_out = dart_at(c.vertex, u.slot + 2);
    DartId a = dart_at(c.vertex, u.slot + 1);
    DartId b = dart_at(c.vertex, u.slot + 3);
    DartId over_in = info(a).out ? b : a;
    DartId over_out = info(a).out ? a : b;
    c.under_in = arc_of_in_[key(*vs.under_in)];
    c.under_out = arc_of_out_[key(under_out)];
    c.over_in = arc_of_in_[key(over_in)];
    c.over_out = arc_of_out_[key(over_out)];
  }
}

void Diagram::trace_faces() {
  const int slots = vertex_count() * 4;
  std::vector<FaceId> face_of(slots, -1);
  auto classical_vertex = [&](VertexId v) { return spec_.vertices[v].kind != CrossingKind::virtual_crossing; };
  // twin across a semi-arc
  auto twin = [&](VertexId v, int slot) -> std::pair<VertexId, int> {
    DartId d = dart_at(v, slot);
    const DartInfo &i = info(d);
    SemiArcId arc = i.out ? arc_of_out_[v * 4 + slot] : arc_of_in_[v * 4 + slot];
    DartId other = i.out ? *semi_arcs_[arc].end : *semi_arcs_[arc].start;
    const DartInfo &o = info(other);
    return {o.vertex, o.slot};
  };
  auto trace = [&](VertexId v, int slot) {
    if (face_of[v * 4 + slot] != -1)
      return;
    Face face;
    face.id = static_cast<FaceId>(faces_.size());
    while (face_of[v * 4 + slot] == -1) {
      face_of[v * 4 + slot] = face.id;
      face.corners.push_back(dart_at(v, slot));
      auto [w, s] = twin(v, slot);
      v = w;
      slot = mod4(s - 1);
    }
    faces_.push_back(std::move(face));
  };

  if (spec_.outer_face_dart) {
    const DartInfo &o = info(*spec_.outer_face_dart);
    trace(o.vertex, o.slot);
  }
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (classical_vertex(v))
      for (int slot = 0; slot < 4; ++slot)
        trace(v, slot);

  for (SemiArc &arc : semi_arcs_) {
    if (arc.closed()) {
      arc.right_face = static_cast<FaceId>(faces_.size());
      faces_.push_back(Face{arc.right_face, {}});
      arc.left_face = static_cast<FaceId>(faces_.size());
      faces_.push_back(Face{arc.left_face, {}});
      continue;
    }
    const DartInfo &s = info(*arc.start);
    const DartInfo &e = info(*arc.end);
    arc.left_face = face_of[s.vertex * 4 + s.slot];
    arc.right_face = face_of[e.vertex * 4 + e.slot];
  }

  for (ClassicalCrossing &c : crossings_) {
    int u = info(*spec_.vertices[c.vertex].under_in).slot;
    for (int k = 0; k < 4; ++k)
      c.corners[k] = face_of[c.vertex * 4 + mod4(u + k)];
  }

  // Pieces of the abstract surface.
  UnionFind uf(vertex_count() + static_cast<int>(semi_arcs_.size()));
  const int base = vertex_count();
  for (const SemiArc &arc : semi_arcs_) {
    if (arc.closed())
      continue;
    uf.unite(base + arc.id, info(*arc.start).vertex);
    uf.unite(base + arc.id, info(*arc.end).vertex);
  }
  std::map<int, int> piece_id;
  auto piece_of_root = [&](int root) {
    auto [it, inserted] = piece_id.emplace(root, static_cast<int>(piece_id.size()));
    return it->second;
  };
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (classical_vertex(v))
      piece_of_root(uf.find(v));
  for (const SemiArc &arc : semi_arcs_)
    if (arc.closed())
      piece_of_root(uf.find(base + arc.id));
  surface_components_ = static_cast<int>(piece_id.size());

  face_piece_.assign(faces_.size(), -1);
  for (const SemiArc &arc : semi_arcs_) {
    int p = piece_of_root(uf.find(base + arc.id));
    face_piece_[arc.left_face] = p;
    face_piece_[arc.right_face] = p;
  }
}

int Diagram::writhe() const {
  int w = 0;
  for (const ClassicalCrossing &c : crossings_)
    w += c.sign;
  return w;
}

Diagram Diagram::renamed(std::string name) const {
  Diagram copy = *this;
  copy.spec_.name = std::move(name);
  return copy;
}

bool operator==(const Diagram &a, const Diagram &b) {
  return a.spec_.vertices == b.spec_.vertices && a.spec_.edges == b.spec_.edges &&
         a.spec_.outer_face_dart == b.spec_.outer_face_dart && a.spec_.free_loops == b.spec_.free_loops;
}

Diagram Diagram::from_braid(std::string name, int strands, std::span<const BraidLetter> word) {
  if (strands < 1)
    throw Error(ErrorCode::BadParameter, "a braid needs at least one strand");
  // Slots, counterclockwise: 0 = lower right, 1 = upper right, 2 = upper left, 3 = lower left.
  DiagramSpec spec;
  spec.name = std::move(name);
  std::vector<std::optional<DartId>> pending(strands), first(strands);
  auto connect = [&](int p, DartId in) {
    if (!pending[p])
      first[p] = in;
    else
      spec.edges.emplace_back(*pending[p], in);
  };
  bool any_virtual = false;
  for (const BraidLetter &letter : word) {
    int i = letter.position - 1;
    if (i < 0 || i + 1 >= strands)
      throw Error(ErrorCode::BadParameter, "braid letter outside the strand range");
    DartId base = static_cast<DartId>(spec.vertices.size()) * 4;
    VertexSpec v;
    v.kind = letter.kind;
    v.darts = {base, base + 1, base + 2, base + 3};
    if (letter.kind == CrossingKind::positive)
      v.under_in = base; // under strand lower right -> upper left
    else if (letter.kind == CrossingKind::negative)
      v.under_in = base + 3; // under strand lower left -> upper right
    else
      any_virtual = true;
    if (letter.kind != CrossingKind::virtual_crossing && i == 0 && !spec.outer_face_dart)
      spec.outer_face_dart = base + 2;
    spec.vertices.push_back(v);
    connect(i, base + 3);
    connect(i + 1, base);
    pending[i] = base + 2;
    pending[i + 1] = base + 1;
  }
  for (int p = 0; p < strands; ++p) {
    if (!pending[p]) {
      ++spec.free_loops;
      continue;
    }
    spec.edges.emplace_back(*pending[p], *first[p]);
  }
  if (any_virtual)
    spec.outer_face_dart.reset();
  return Diagram(std::move(spec));
}

std::string gauss_code(const Diagram &d) {
  std::map<VertexId, int> label;
  std::string out;
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    if (c > 0)
      out += " | ";
    for (const Visit &visit : d.components()[c].visits) {
      auto [it, inserted] = label.emplace(visit.vertex, static_cast<int>(label.size()) + 1);
      if (visit.kind == CrossingKind::virtual_crossing) {
        out += "V" + std::to_string(it->second);
        continue;
      }
      out += visit.over ? "O" : "U";
      out += std::to_string(it->second);
      out += visit.kind == CrossingKind::positive ? "+" : "-";
    }
  }
  return out;
}

const std::vector<Face> &faces(const Diagram &d) {
  if (!d.is_connected())
    throw Error(ErrorCode::Disconnected, d.name() + " is not connected");
  return d.all_faces();
}

int genus(const Diagram &d) {
  const auto &f = faces(d);
  if (d.classical_count() == 0)
    return 0;
  int chi = d.classical_count() - static_cast<int>(d.semi_arcs().size()) + static_cast<int>(f.size());
  return (2 - chi) / 2;
}

TwoSidedness two_sidedness(const Diagram &d) {
  if (!d.is_connected())
    throw Error(ErrorCode::Disconnected, d.name() + " is not connected");
  TwoSidedness r{true, true};
  for (const SemiArc &arc : d.semi_arcs())
    if (arc.left_face == arc.right_face)
      r.two_sided = false;
  for (const ClassicalCrossing &c : d.crossings()) {
    std::set<FaceId> distinct(c.corners.begin(), c.corners.end());
    if (distinct.size() != 4)
      r.irreducible = false;
  }
  return r;
}

std::string to_string(ChordParity p) {
  switch (p) {
  case ChordParity::even: return "even";
  case ChordParity::odd: return "odd";
  case ChordParity::exterior: return "exterior";
  }
  return "even";
}

ChordDiagram chord_diagram(const Diagram &d) {
  ChordDiagram cd;
  std::map<VertexId, std::vector<std::pair<int, int>>> ends;
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    std::vector<ChordEndpoint> circle;
    for (const Visit &visit : d.components()[c].visits) {
      if (visit.kind == CrossingKind::virtual_crossing)
        continue;
      ends[visit.vertex].emplace_back(static_cast<int>(c), static_cast<int>(circle.size()));
      circle.push_back({visit.vertex, visit.over});
    }
    cd.circles.push_back(std::move(circle));
  }
  for (const ClassicalCrossing &x : d.crossings()) {
    const auto &e = ends.at(x.vertex);
    cd.chords.push_back({x.vertex, e[0].first, e[0].second, e[1].first, e[1].second});
  }
  return cd;
}

ChordParity crossing_parity(const ChordDiagram &cd, VertexId crossing) {
  auto it = std::find_if(cd.chords.begin(), cd.chords.end(), [&](const Chord &c) { return c.crossing == crossing; });
  if (it == cd.chords.end())
    throw Error(ErrorCode::BadParameter, "no chord for vertex " + std::to_string(crossing));
  if (!it->interior())
    return ChordParity::exterior;
  int lo = std::min(it->position_a, it->position_b);
  int hi = std::max(it->position_a, it->position_b);
  // Endpoints strictly between the two ends of this chord.
  int between = hi - lo - 1;
  return between % 2 == 0 ? ChordParity::even : ChordParity::odd;
}

std::string to_string(CrossingFlow f) {
  switch (f) {
  case CrossingFlow::saddle: return "saddle";
  case CrossingFlow::sink: return "sink";
  case CrossingFlow::source: return "source";
  }
  return "saddle";
}

std::vector<OrientationAnalysis> alternate_orientations(const Diagram &d) {
  // Colour relative to the first semi-arc of each component: alternate at
  // every classical passage.
  const auto &arcs = d.semi_arcs();
  std::vector<int> parity(arcs.size(), 0);
  for (const Component &comp : d.components()) {
    if (comp.semi_arcs.size() % 2 == 1 && comp.semi_arcs.size() > 1)
      return {};
    if (comp.semi_arcs.size() == 1 && !arcs[comp.semi_arcs[0]].closed())
      return {}; // one classical passage: the semi-arc meets itself
    for (std::size_t k = 0; k < comp.semi_arcs.size(); ++k)
      parity[comp.semi_arcs[k]] = static_cast<int>(k % 2);
  }

  const int ncomp = d.component_count();
  std::vector<OrientationAnalysis> result;
  for (long mask = 0; mask < (1L << ncomp); ++mask) {
    OrientationAnalysis oa;
    oa.semi_arc_colour.resize(arcs.size());
    for (const SemiArc &arc : arcs)
      oa.semi_arc_colour[arc.id] = parity[arc.id] ^ static_cast<int>((mask >> arc.component) & 1);
    for (const ClassicalCrossing &c : d.crossings()) {
      // A white semi-arc keeps its direction, a black one is reversed.
      int incoming = 0;
      incoming += oa.semi_arc_colour[c.over_in] == 0 ? 1 : 0;
      incoming += oa.semi_arc_colour[c.under_in] == 0 ? 1 : 0;
      incoming += oa.semi_arc_colour[c.over_out] == 1 ? 1 : 0;
      incoming += oa.semi_arc_colour[c.under_out] == 1 ? 1 : 0;
      CrossingFlow f = incoming == 4 ? CrossingFlow::sink : incoming == 0 ? CrossingFlow::source : CrossingFlow::saddle;
      oa.flow.push_back(f);
      (f == CrossingFlow::sink ? oa.sinks : f == CrossingFlow::source ? oa.sources : oa.saddles)++;
    }
    if (oa.sinks != oa.sources)
      throw std::logic_error("alternate orientation with unequal sink and source counts");
    result.push_back(std::move(oa));
  }
  return result;
}

std::optional<std::vector<int>> chessboard(const Diagram &d) {
  const auto &f = faces(d);
  std::vector<std::vector<FaceId>> adjacent(f.size());
  for (const SemiArc &arc : d.semi_arcs()) {
    if (arc.left_face == arc.right_face)
      return std::nullopt;
    adjacent[arc.left_face].push_back(arc.right_face);
    adjacent[arc.right_face].push_back(arc.left_face);
  }
  std::vector<int> colour(f.size(), -1);
  std::deque<FaceId> queue{0};
  colour[0] = 0;
  while (!queue.empty()) {
    FaceId x = queue.front();
    queue.pop_front();
    for (FaceId y : adjacent[x]) {
      if (colour[y] == -1) {
        colour[y] = 1 - colour[x];
        queue.push_back(y);
      } else if (colour[y] == colour[x]) {
        return std::nullopt;
      }
    }
  }
  return colour;
}

Diagram mirror(const Diagram &d) {
  DiagramSpec spec = d.spec();
  spec.name = d.name() + "_mirror";
  for (VertexSpec &v : spec.vertices) {
    if (v.kind == CrossingKind::virtual_crossing)
      continue;
    auto pos = std::find(v.darts.begin(), v.darts.end(), *v.under_in) - v.darts.begin();
    DartId a = v.darts[(pos + 1) % 4];
    DartId b = v.darts[(pos + 3) % 4];
    bool a_in = std::any_of(spec.edges.begin(), spec.edges.end(), [&](const auto &e) { return e.second == a; });
    v.under_in = a_in ? a : b;
    v.kind = v.kind == CrossingKind::positive ? CrossingKind::negative : CrossingKind::positive;
  }
  return Diagram(std::move(spec));
}

} // namespace knotkit
