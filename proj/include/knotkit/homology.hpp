#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotkit/algebra.hpp"

namespace knotkit {

using Tuple = std::vector<Element>;
using BigInt = boost::multiprecision::cpp_int;

/// Finite integer combination of tuples of one length. Zero coefficients
/// are never stored.
class Chain {
public:
  explicit Chain(int degree = 0) : degree_(degree) {}
  Chain(int degree, std::initializer_list<std::pair<Tuple, long long>> terms);

  int degree() const noexcept { return degree_; }
  const std::map<Tuple, long long> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  long long coefficient(const Tuple &t) const;

  /// Throws BadParameter when the tuple length differs from the degree.
  void add(const Tuple &t, long long coefficient);

  Chain &operator+=(const Chain &other);
  Chain &operator-=(const Chain &other);
  friend Chain operator+(Chain a, const Chain &b) { return a += b; }
  friend Chain operator-(Chain a, const Chain &b) { return a -= b; }
  friend Chain operator*(long long k, const Chain &c);
  friend Chain operator-(const Chain &c) { return -1 * c; }
  friend bool operator==(const Chain &, const Chain &) = default;

private:
  int degree_;
  std::map<Tuple, long long> terms_;
};

/// "2(0,1) - (1,1)", or "0" for the zero chain. Elements are printed with
/// `names` when given.
std::string to_string(const Chain &c, const std::vector<std::string> &names = {});

/// Sum over i of (-1)^(i+1) [ (x1..x^i..xn) - (y1, .., y(i-1), y(i+1), .., yn) ] with
/// yj = xj^(c) for j < i, where c is the preimage of xi under _xj, and yj the
/// preimage of xj under _xi for j > i. On racks this is the usual
/// (x1^xi, .., x(i-1)^xi, x(i+1), .., xn); when every action is an involution
/// it is (x1^xi, .., x(i-1)^xi, x(i+1)_xi, .., xn_xi). Zero in degree 1. Throws DegreeTooLow below degree 1, NotTotal for a
/// partial table.
Chain boundary(const BirackTable &table, const Chain &c);

/// BR: birack complex. R: rack complex (down must be trivial). D: the
/// degenerate subcomplex and Q: the quotient by it (quandles only).
enum class Theory { BR, R, D, Q };

std::string to_string(Theory t);
/// Throws BadParameter.
Theory parse_theory(std::string_view s);

bool is_degenerate(const Tuple &t);

/// Basis tuples of degree n in lexicographic order: all tuples (BR, R),
/// degenerate ones (D) or non-degenerate ones (Q). Throws TheoryMismatch
/// when the table does not support the theory.
std::vector<Tuple> chain_basis(const BirackTable &table, int n, Theory theory);

/// Dense integer matrix, row-major.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static IntegerMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  BigInt &operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt &operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  friend IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b);
  friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

/// Matrix of the boundary map from degree n to degree n-1 in the chain_basis
/// order (rows: degree n-1, columns: degree n). For n = 1 the target is
/// C_0 = Z (one row, or none for theory D) and the matrix is zero.
IntegerMatrix boundary_matrix(const BirackTable &table, int n, Theory theory);

struct SmithForm {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;
  IntegerMatrix v_inverse;
  /// Nonzero diagonal entries d1 | d2 | ..., all positive.
  std::vector<BigInt> invariant_factors;
  int rank() const { return static_cast<int>(invariant_factors.size()); }
};

/// U * m * V = D with U, V unimodular; exact arithmetic.
SmithForm smith_normal_form(const IntegerMatrix &m);

BigInt determinant(const IntegerMatrix &m);

struct AbelianGroup {
  int free_rank = 0;
  /// Invariant factors >= 2, each dividing the next.
  std::vector<long long> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;
};

/// "0", "Z", "Z^2 + Z_2", "Z_3".
std::string to_string(const AbelianGroup &g);

/// H_n of one theory together with the map from cycles to coordinates:
/// one residue per torsion factor (in (-d/2, d/2]) then one integer per free
/// summand.
class HomologyBasis {
public:
  const AbelianGroup &group() const noexcept { return group_; }
  int degree() const noexcept { return degree_; }
  Theory theory() const noexcept { return theory_; }
  const std::string &birack_name() const noexcept { return birack_name_; }

  /// Chain as a coefficient vector in the theory's basis; degenerate terms
  /// are dropped for Q. Throws TheoryMismatch for D when a term is not
  /// degenerate.
  std::vector<BigInt> to_vector(const Chain &c) const;
  bool is_cycle(const Chain &c) const;
  /// Throws NotACycle.
  std::vector<long long> coordinates(const Chain &c) const;

  /// Rescales the first coordinate in which `generator` has a unit entry so
  /// that entry becomes +1. Returns false when no coordinate qualifies.
  bool normalize(const Chain &generator);

private:
  friend HomologyBasis homology_group(const BirackTable &table, int n, Theory theory);

  AbelianGroup group_;
  int degree_ = 0;
  Theory theory_ = Theory::BR;
  std::string birack_name_;
  std::vector<Tuple> basis_;
  std::map<Tuple, int> index_;
  IntegerMatrix boundary_;  // degree n -> n-1
  IntegerMatrix transform_; // rows: torsion then free coordinates
  std::vector<BigInt> moduli_; // per coordinate; 0 for free
};

/// H_n = ker(d_n) / im(d_(n+1)) via two Smith normal forms. For the
/// 3-colour quandle in theory Q, degree 3, coordinates are normalized so
/// the class of (0,1,2)+(0,2,0) is +1.
HomologyBasis homology_group(const BirackTable &table, int n, Theory theory);

/// Free integer combination (0,1,2) + (0,2,0), the named generator of
/// H_3^Q of the 3-colour quandle.
Chain q3_generator();

/// {"birack", "degree", "theory", "free_rank", "torsion"}
std::string homology_json(const HomologyBasis &h);

} // namespace knotkit
