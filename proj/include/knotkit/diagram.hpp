#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotkit {

using DartId = int;
using VertexId = int;
using SemiArcId = int;
using FaceId = int;

enum class CrossingKind { positive, negative, virtual_crossing };

/// One vertex of a diagram as written in the input format. Darts are listed
/// counterclockwise; opposite darts (slots i, i+2) form a through-strand.
struct VertexSpec {
  CrossingKind kind = CrossingKind::positive;
  std::array<DartId, 4> darts{};
  /// Incoming dart of the under-strand; absent for virtual crossings.
  std::optional<DartId> under_in;

  friend bool operator==(const VertexSpec &, const VertexSpec &) = default;
};

/// Raw input of a diagram: vertices, oriented edges (out dart -> in dart),
/// an optional dart whose left corner is the unbounded face, and the number
/// of crossing-free components.
struct DiagramSpec {
  std::string name;
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<DartId, DartId>> edges;
  std::optional<DartId> outer_face_dart;
  int free_loops = 0;
};

/// Segment of a component between consecutive classical crossings. Virtual
/// crossings do not cut semi-arcs. A component without classical crossings
/// is one closed semi-arc.
struct SemiArc {
  SemiArcId id = 0;
  int component = 0;
  /// Classical out-dart the semi-arc leaves from (absent when closed).
  std::optional<DartId> start;
  /// Classical in-dart the semi-arc arrives at (absent when closed).
  std::optional<DartId> end;
  std::vector<VertexId> virtual_passes;
  FaceId left_face = 0;
  FaceId right_face = 0;

  bool closed() const { return !start.has_value(); }
};

/// Roles of the four semi-arcs at a classical crossing.
struct ClassicalCrossing {
  VertexId vertex = 0;
  int sign = 1;
  SemiArcId over_in = 0;
  SemiArcId under_in = 0;
  SemiArcId over_out = 0;
  SemiArcId under_out = 0;
  /// Faces at the four corners, counterclockwise starting at the corner
  /// between the under-in and the next dart.
  std::array<FaceId, 4> corners{};
};

/// Passage of a component through a crossing.
struct Visit {
  VertexId vertex = 0;
  CrossingKind kind = CrossingKind::positive;
  /// Over-strand passage (classical only).
  bool over = false;
};

struct Component {
  std::vector<SemiArcId> semi_arcs;
  /// Crossing passages in traversal order, starting with the passage out of
  /// which the first semi-arc leaves.
  std::vector<Visit> visits;
};

struct Face {
  FaceId id = 0;
  /// Boundary walk; each dart stands for the corner counterclockwise after it.
  /// Empty for the two faces of a crossing-free component.
  std::vector<DartId> corners;
};

struct BraidLetter {
  /// Crossing between strand positions `position` and `position + 1` (1-based).
  int position = 1;
  CrossingKind kind = CrossingKind::positive;
};

/// Oriented knot or link diagram (classical or virtual) as a combinatorial
/// map. Faces are those of the abstract diagram: virtual crossings are
/// transparent, so the surface is the ribbon neighbourhood of the classical
/// part with its boundary circles capped.
///
/// Sign convention: a classical crossing is positive when, reading the
/// darts counterclockwise from the under-in dart, the next dart is the
/// over-out dart (over strand south-west to north-east, under strand
/// south-east to north-west).
///
/// Immutable after construction.
class Diagram {
public:
  /// Validates; throws InconsistentRotation, BadStrandPairing or MalformedInput.
  explicit Diagram(DiagramSpec spec);

  /// Closure of a braid on `strands` strands, closing arcs to the right.
  static Diagram from_braid(std::string name, int strands, std::span<const BraidLetter> word);

  const DiagramSpec &spec() const noexcept { return spec_; }
  const std::string &name() const noexcept { return spec_.name; }

  int vertex_count() const { return static_cast<int>(spec_.vertices.size()); }
  int classical_count() const { return static_cast<int>(crossings_.size()); }
  int virtual_count() const { return vertex_count() - classical_count(); }
  int component_count() const { return static_cast<int>(components_.size()); }
  int writhe() const;
  bool is_classical() const { return virtual_count() == 0; }
  /// Connected as an abstract diagram: classical crossings joined by
  /// semi-arcs, with each crossing-free component on its own.
  bool is_connected() const { return surface_components_ == 1; }

  const std::vector<SemiArc> &semi_arcs() const noexcept { return semi_arcs_; }
  const std::vector<ClassicalCrossing> &crossings() const noexcept { return crossings_; }
  const std::vector<Component> &components() const noexcept { return components_; }
  /// All faces, also for disconnected diagrams (one capped surface per
  /// connected piece).
  const std::vector<Face> &all_faces() const noexcept { return faces_; }
  /// Connected piece of the abstract surface each face lies on.
  const std::vector<int> &face_piece() const noexcept { return face_piece_; }
  int piece_count() const { return surface_components_; }

  /// Index into crossings() for a classical vertex, or -1.
  int crossing_index(VertexId v) const { return crossing_of_vertex_[v]; }

  Diagram renamed(std::string name) const;

  /// Structural equality; the name is ignored.
  friend bool operator==(const Diagram &a, const Diagram &b);

private:
  struct DartInfo {
    VertexId vertex;
    int slot;
    bool out;
    DartId partner; // other end of the edge
  };

  const DartInfo &info(DartId d) const;
  DartId dart_at(VertexId v, int slot) const;
  void validate_and_index();
  void trace_components();
  void trace_faces();

  DiagramSpec spec_;
  std::vector<std::pair<DartId, DartInfo>> dart_info_; // sorted by dart id
  std::vector<SemiArc> semi_arcs_;
  std::vector<ClassicalCrossing> crossings_;
  std::vector<int> crossing_of_vertex_;
  std::vector<Component> components_;
  std::vector<Face> faces_;
  std::vector<int> face_piece_;
  std::vector<SemiArcId> arc_of_out_; // indexed by dart slot position (vertex*4+slot)
  std::vector<SemiArcId> arc_of_in_;
  int surface_components_ = 0;
};

Diagram parse_diagram(std::string_view json_text);
/// Canonical JSON text (fixed key order, compact).
std::string serialize_diagram(const Diagram &d);

/// Signed over/under Gauss code, one word per component joined by " | ".
/// Crossings are numbered by first visit; virtual passages appear as V<k>.
std::string gauss_code(const Diagram &d);

/// Faces of a connected diagram; throws Disconnected.
const std::vector<Face> &faces(const Diagram &d);
/// Genus of the abstract surface, (2 - V + E - F) / 2; throws Disconnected.
int genus(const Diagram &d);

struct TwoSidedness {
  /// Every semi-arc borders two distinct faces.
  bool two_sided = false;
  /// Every classical crossing touches four distinct faces.
  bool irreducible = false;
};

/// Cellularity additionally needs minimality of the supporting surface,
/// which is not decided here.
TwoSidedness two_sidedness(const Diagram &d);

struct ChordEndpoint {
  VertexId crossing = 0;
  bool over = false;
};

struct Chord {
  VertexId crossing = 0;
  int circle_a = 0;
  int position_a = 0;
  int circle_b = 0;
  int position_b = 0;
  bool interior() const { return circle_a == circle_b; }
};

struct ChordDiagram {
  /// One circle per component: classical visits in traversal order.
  std::vector<std::vector<ChordEndpoint>> circles;
  /// One chord per classical crossing, in vertex order.
  std::vector<Chord> chords;
};

enum class ChordParity { even, odd, exterior };

std::string to_string(ChordParity p);

ChordDiagram chord_diagram(const Diagram &d);
/// Parity of the number of other chord endpoints strictly inside one arc of
/// an interior chord, which for interior-only circles is the parity of the
/// number of interleaving chords. Chords joining two circles are `exterior`.
ChordParity crossing_parity(const ChordDiagram &cd, VertexId crossing);

enum class CrossingFlow { saddle, sink, source };

std::string to_string(CrossingFlow f);

struct OrientationAnalysis {
  /// 0 = white (orientation kept), 1 = black (reversed), per semi-arc.
  std::vector<int> semi_arc_colour;
  /// Per entry of Diagram::crossings().
  std::vector<CrossingFlow> flow;
  int sinks = 0;
  int sources = 0;
  int saddles = 0;

  bool good() const { return sinks == 0 && sources == 0; }
};

/// All alternating black/white semi-arc colourings, two choices per
/// component, ordered by the component choice bits. Empty when some
/// component has an odd number of classical passages.
std::vector<OrientationAnalysis> alternate_orientations(const Diagram &d);

/// Proper 2-colouring of the faces (colour 0 on face 0); nullopt when a
/// semi-arc borders the same face twice or the face graph is not bipartite.
/// Throws Disconnected.
std::optional<std::vector<int>> chessboard(const Diagram &d);

/// Crossing change at every classical crossing; the rotation system and the
/// virtual crossings are unchanged.
Diagram mirror(const Diagram &d);

} // namespace knotkit
