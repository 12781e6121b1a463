#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotkit/algebra.hpp"
#include "knotkit/colouring.hpp"
#include "knotkit/diagram.hpp"
#include "knotkit/homology.hpp"

namespace knotkit {

/// Signed crossing label (p, under, over): p is the source region colour.
struct CrossingTriple {
  Element region = 0;
  Element under = 0;
  Element over = 0;
  int sign = 1;

  friend bool operator==(const CrossingTriple &, const CrossingTriple &) = default;
};

/// One triple per classical crossing, in Diagram::crossings() order.
/// Positive crossings use the under-in semi-arc, its right face and the
/// over-in colour; negative crossings use the under-out semi-arc, its right
/// face and the over-out colour. Throws NotWholeColoured.
std::vector<CrossingTriple> crossing_triples(const Diagram &d, const BirackTable &table, const WholeColouring &wc);

/// Signed sum of crossing_triples as a 3-chain. For racks and quandles the
/// result is checked to be a cycle of the rack complex.
Chain whole_cycle(const Diagram &d, const BirackTable &table, const WholeColouring &wc);

/// Class of whole_cycle in H_3^Q(table) for every whole colouring, as
/// coordinate vectors, sorted.
std::vector<std::vector<long long>> chirality_classes(const Diagram &d, const BirackTable &table);

/// chirality_classes for the 3-colour quandle, one residue in {-1, 0, 1}
/// per whole colouring, sorted.
std::vector<long long> chirality_q3(const Diagram &d);

/// Whole colourings of the braid tangle s1 s2 s1 against s2 s1 s2: free
/// inbound colours x1, x2, x3 and a colour for the region right of the
/// tangle; everything else is transmitted.
struct R3Colouring {
  std::array<Element, 3> inbound{};
  Element seed = 0;
  std::vector<CrossingTriple> left; // s1 s2 s1, bottom to top
  std::vector<CrossingTriple> right; // s2 s1 s2
  /// Sum of the left triples minus the sum of the right triples.
  Chain relation{3};
};

/// Requires a total table; colourings hitting undefined entries are skipped.
std::vector<R3Colouring> r3_colourings(const BirackTable &table);
std::vector<Chain> r3_relations(const BirackTable &table);

/// Chain with the sign chosen so its first nonzero coefficient is positive,
/// divided by the gcd of its coefficients.
Chain normalize_relation(const Chain &c);

/// Quotient of the free abelian group on the n^3 triples by the patterns
/// abb, aaa, aab and all R3 relations.
class CrossingGroup {
public:
  const AbelianGroup &group() const noexcept { return group_; }
  /// Distinct non-zero relations after normalization.
  const std::vector<Chain> &relations() const noexcept { return relations_; }
  int generator_count() const noexcept { return static_cast<int>(generators_.size()); }

  /// Torsion residues then free coordinates.
  std::vector<long long> coordinates(const Chain &c) const;
  /// Additive order of the image of c; 0 when it is infinite.
  long long order_of(const Chain &c) const;

private:
  friend CrossingGroup crossing_invariant_group(const BirackTable &table);

  AbelianGroup group_;
  int n_ = 0;
  std::vector<Tuple> generators_;
  std::vector<Chain> relations_;
  IntegerMatrix transform_;
  std::vector<BigInt> moduli_;
};

CrossingGroup crossing_invariant_group(const BirackTable &table);

struct TwoCycle {
  Chain chain{2};
  /// Coordinates in H_2^BR(table).
  std::vector<long long> homology_class;
};

/// Sum over classical crossings of sign * (under-in, over-out) at positive
/// and sign * (under-out, over-in) at negative crossings. Throws NotACycle
/// when the chain is not a birack 2-cycle.
TwoCycle bw_two_cycle(const Diagram &d, const BirackTable &table, const EdgeColouring &ec);

/// Report JSON: format_version, diagram, writhe, genus, colour_counts,
/// chirality_q3, orientation, two_sided, chessboard.
std::string diagram_report_json(const Diagram &d);
std::string diagram_report_text(const Diagram &d);

} // namespace knotkit
