#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotkit {

/// Positional element of a finite birack; always in [0, n).
using Element = int;

/// Sentinel used in operation tables (and in birack JSON) for "undefined".
inline constexpr Element kUndefined = -1;

enum class Operation { up, down, up_inv, down_inv };

enum class StructureClass { none, birack, biquandle, rack, quandle };

std::string to_string(StructureClass c);

/// Finite, possibly partial, birack given by its up (a^b) and down (a_b)
/// operation tables.
///
/// Partial tables carry a single domain Y of pairs. For (a,b) in Y both
/// b^a and a_b are defined, so the down table is defined on Y itself and the
/// up table on the transpose of Y.
///
/// Instances are immutable after construction.
class BirackTable {
public:
  BirackTable(std::string name, int n, std::vector<std::vector<Element>> up,
              std::vector<std::vector<Element>> down);

  const std::string &name() const noexcept { return name_; }
  int size() const noexcept { return n_; }
  bool is_total() const noexcept { return domain_size_ == n_ * n_; }
  int domain_size() const noexcept { return domain_size_; }

  /// (a,b) in Y, i.e. S(a,b) is defined.
  bool in_domain(Element a, Element b) const;

  bool up_defined(Element a, Element b) const { return up_at(a, b) != kUndefined; }
  bool down_defined(Element a, Element b) const { return down_at(a, b) != kUndefined; }

  /// a^b; throws UndefinedPair.
  Element up(Element a, Element b) const;
  /// a_b; throws UndefinedPair.
  Element down(Element a, Element b) const;
  /// The x with x^b = a; throws NoPreimage.
  Element up_inv(Element a, Element b) const;
  /// The x with x_b = a; throws NoPreimage.
  Element down_inv(Element a, Element b) const;

  Element evaluate(Operation op, Element a, Element b) const;

  std::optional<Element> try_up(Element a, Element b) const;
  std::optional<Element> try_down(Element a, Element b) const;
  std::optional<Element> try_up_inv(Element a, Element b) const;
  std::optional<Element> try_down_inv(Element a, Element b) const;

  /// S(a,b) = (b^a, a_b).
  std::pair<Element, Element> switch_map(Element a, Element b) const;
  std::optional<std::pair<Element, Element>> try_switch(Element a, Element b) const;

  /// The (a,b) in Y with S(a,b) = (x,y), if S hits (x,y). When S is not
  /// injective the smallest preimage is returned.
  std::optional<std::pair<Element, Element>> try_switch_inverse(Element x, Element y) const;
  std::pair<Element, Element> switch_inverse(Element x, Element y) const;

  /// Sideways map F(a, b^a) = (b, a_b).
  std::pair<Element, Element> sideways(Element a, Element c) const;
  std::optional<std::pair<Element, Element>> try_sideways(Element a, Element c) const;

  bool trivial_up() const;
  bool trivial_down() const;
  /// Total, trivial down, and a^a = a for every a. Does not check B2/B3.
  bool is_quandle_table() const;
  bool is_rack_table() const;

  /// Raw table rows with kUndefined for missing entries.
  std::vector<std::vector<Element>> up_rows() const;
  std::vector<std::vector<Element>> down_rows() const;

  BirackTable renamed(std::string name) const;

  friend bool operator==(const BirackTable &a, const BirackTable &b) {
    return a.n_ == b.n_ && a.up_ == b.up_ && a.down_ == b.down_;
  }

private:
  Element up_at(Element a, Element b) const { return up_[index(a, b)]; }
  Element down_at(Element a, Element b) const { return down_[index(a, b)]; }
  std::size_t index(Element a, Element b) const;
  void check_element(Element a) const;

  std::string name_;
  int n_ = 0;
  int domain_size_ = 0;
  std::vector<Element> up_;
  std::vector<Element> down_;
  std::vector<Element> up_inv_;
  std::vector<Element> down_inv_;
  std::vector<Element> switch_inv_; // encoded a*n+b, or kUndefined
};

struct AxiomCheck {
  bool pass = true;
  /// Witnessing tuples (pairs or triples of elements).
  std::vector<std::vector<Element>> counterexamples;

  void fail(std::vector<Element> witness);
};

struct AxiomReport {
  /// F is injective on its domain.
  AxiomCheck b1_sideways_invertible;
  /// a^{a_{a^{-1}}} = a_{a^{-1}} for every a where defined.
  AxiomCheck b1_up_half;
  /// a_{a^{a^{-1}}} = a^{a^{-1}} for every a where defined.
  AxiomCheck b1_down_half;
  /// S is injective on Y and maps Y into Y.
  AxiomCheck b2;
  /// S1 S2 S1 = S2 S1 S2 wherever both sides are defined.
  AxiomCheck b3;
  /// The three derived exchange relations that follow from B3.
  AxiomCheck derived_relations;
  StructureClass structure = StructureClass::none;

  bool b1() const { return b1_sideways_invertible.pass && b1_up_half.pass && b1_down_half.pass; }
};

AxiomReport check_axioms(const BirackTable &table);

namespace builtin {

/// I_n: both operations trivial, S(a,b) = (b,a).
BirackTable twist(int n);
/// R_m: a^b = 2b - a mod m, trivial down.
BirackTable dihedral(int m);
/// Q^3_3: the transpositions of S_3 under conjugation, r=(12), g=(13), b=(23).
BirackTable three_colour();
/// BQ^2_1 on {b=0, w=1}: every element acts by the transposition.
BirackTable black_white();
/// a^b = lambda a + (1 - lambda mu) b, a_b = mu a over Z/m.
BirackTable alexander(int m, int lambda, int mu);

} // namespace builtin

/// Double of a total birack: carrier X^2 with (x,y) encoded x*n+y, domain
/// {((a^b,c),(a,b))}, and operations
///   (a,b)^{(a^b,c)} = (a^{c_b}, b^c),  (a^b,c)_{(a,b)} = (a, c_b).
BirackTable double_birack(const BirackTable &table);

inline Element pair_element(int n, Element first, Element second) { return first * n + second; }
inline std::pair<Element, Element> split_pair(int n, Element e) { return {e / n, e % n}; }

/// Brute-force search for a bijection phi with phi(a^b) = phi(a)^phi(b) and
/// phi(a_b) = phi(a)_phi(b). Intended for n <= 9.
std::optional<std::vector<Element>> find_isomorphism(const BirackTable &from, const BirackTable &to);

/// Birack JSON: {"name": str, "n": int, "up": [[int|-1]], "down": [[int|-1]]}.
/// Serialization is canonical (fixed key order, compact), so
/// serialize_birack(parse_birack(text)) == text for canonical text.
std::string serialize_birack(const BirackTable &table);
BirackTable parse_birack(std::string_view text);

} // namespace knotkit
