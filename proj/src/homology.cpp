#include "knotkit/homology.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "knotkit/error.hpp"

namespace knotkit {

// ---------------------------------------------------------------- chains

Chain::Chain(int degree, std::initializer_list<std::pair<Tuple, long long>> terms) : degree_(degree) {
  for (const auto &[t, k] : terms)
    add(t, k);
}

long long Chain::coefficient(const Tuple &t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

void Chain::add(const Tuple &t, long long coefficient) {
  if (static_cast<int>(t.size()) != degree_)
    throw Error(ErrorCode::BadParameter, "tuple length " + std::to_string(t.size()) + " in a chain of degree " +
                                             std::to_string(degree_));
  if (coefficient == 0)
    return;
  long long &slot = terms_[t];
  slot += coefficient;
  if (slot == 0)
    terms_.erase(t);
}

Chain &Chain::operator+=(const Chain &other) {
  if (other.degree_ != degree_ && !other.is_zero())
    throw Error(ErrorCode::BadParameter, "adding chains of different degrees");
  for (const auto &[t, k] : other.terms_)
    add(t, k);
  return *this;
}

Chain &Chain::operator-=(const Chain &other) { return *this += -1 * other; }

Chain operator*(long long k, const Chain &c) {
  Chain out(c.degree());
  for (const auto &[t, v] : c.terms())
    out.add(t, k * v);
  return out;
}

std::string to_string(const Chain &c, const std::vector<std::string> &names) {
  if (c.is_zero())
    return "0";
  std::string out;
  for (const auto &[t, k] : c.terms()) {
    if (out.empty())
      out += k < 0 ? "-" : "";
    else
      out += k < 0 ? " - " : " + ";
    long long mag = k < 0 ? -k : k;
    if (mag != 1)
      out += std::to_string(mag);
    out += "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i > 0)
        out += ",";
      out += t[i] < static_cast<Element>(names.size()) ? names[t[i]] : std::to_string(t[i]);
    }
    out += ")";
  }
  return out;
}

Chain boundary(const BirackTable &table, const Chain &c) {
  const int n = c.degree();
  if (n < 1)
    throw Error(ErrorCode::DegreeTooLow, "the boundary needs degree at least 1");
  if (!table.is_total())
    throw Error(ErrorCode::NotTotal, table.name() + " is partial");
  Chain out(n - 1);
  if (n == 1)
    return out;
  Tuple deleted(n - 1), acted(n - 1);
  for (const auto &[t, k] : c.terms()) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0, pos = 0; j < n; ++j) {
        if (j == i)
          continue;
        deleted[pos] = t[j];
        // Front face of the cube in direction i, in the labels of the switch (b^a, a_b).
        acted[pos] = j < i ? table.up(t[j], table.down_inv(t[i], t[j])) : table.down_inv(t[j], t[i]);
        ++pos;
      }
      long long sign = i % 2 == 0 ? 1 : -1;
      out.add(deleted, sign * k);
      out.add(acted, -sign * k);
    }
  }
  return out;
}

// ---------------------------------------------------------------- bases

std::string to_string(Theory t) {
  switch (t) {
  case Theory::BR: return "BR";
  case Theory::R: return "R";
  case Theory::D: return "D";
  case Theory::Q: return "Q";
  }
  return "BR";
}

Theory parse_theory(std::string_view s) {
  if (s == "BR")
    return Theory::BR;
  if (s == "R")
    return Theory::R;
  if (s == "D")
    return Theory::D;
  if (s == "Q")
    return Theory::Q;
  throw Error(ErrorCode::BadParameter, "unknown theory \"" + std::string(s) + "\"");
}

bool is_degenerate(const Tuple &t) {
  return std::adjacent_find(t.begin(), t.end()) != t.end();
}

namespace {

void require_theory(const BirackTable &table, Theory theory) {
  if (!table.is_total())
    throw Error(ErrorCode::NotTotal, table.name() + " is partial");
  if (theory == Theory::R && !table.trivial_down())
    throw Error(ErrorCode::TheoryMismatch, "theory R needs a trivial down operation; " + table.name() + " has none");
  if ((theory == Theory::D || theory == Theory::Q) && !table.is_quandle_table())
    throw Error(ErrorCode::TheoryMismatch, "theory " + to_string(theory) + " needs a quandle; " + table.name() +
                                               " is not one");
}

bool keeps(Theory theory, const Tuple &t) {
  if (theory == Theory::D)
    return is_degenerate(t);
  if (theory == Theory::Q)
    return !is_degenerate(t);
  return true;
}

std::map<Tuple, int> index_of(const std::vector<Tuple> &basis) {
  std::map<Tuple, int> index;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    index.emplace(basis[i], i);
  return index;
}

} // namespace

std::vector<Tuple> chain_basis(const BirackTable &table, int n, Theory theory) {
  require_theory(table, theory);
  if (n < 0)
    throw Error(ErrorCode::DegreeTooLow, "negative degree");
  std::vector<Tuple> basis;
  Tuple t(n, 0);
  const int size = table.size();
  while (true) {
    if (keeps(theory, t))
      basis.push_back(t);
    int i = n - 1;
    while (i >= 0 && ++t[i] == size)
      t[i--] = 0;
    if (i < 0)
      break;
  }
  return basis;
}

// ---------------------------------------------------------------- matrices

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt &x) { return x == 0; });
}

IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::BadParameter, "matrix shapes do not match");
  IntegerMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0)
          out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntegerMatrix boundary_matrix(const BirackTable &table, int n, Theory theory) {
  if (n < 1)
    throw Error(ErrorCode::DegreeTooLow, "the boundary needs degree at least 1");
  const auto columns = chain_basis(table, n, theory);
  if (n == 1)
    return IntegerMatrix(theory == Theory::D ? 0 : 1, static_cast<int>(columns.size()));
  const auto rows = chain_basis(table, n - 1, theory);
  const auto row_index = index_of(rows);
  IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(columns.size()));
  for (int c = 0; c < static_cast<int>(columns.size()); ++c) {
    Chain single(n);
    single.add(columns[c], 1);
    const Chain image = boundary(table, single);
    for (const auto &[t, k] : image.terms()) {
      auto it = row_index.find(t);
      if (it != row_index.end())
        m(it->second, c) += k;
      else if (theory == Theory::D)
        throw std::logic_error("boundary left the degenerate subcomplex");
    }
  }
  return m;
}

namespace {

/// Elementary operations on the working matrix with their effect on U, V
/// and V^-1.
class SmithState {
public:
  explicit SmithState(const IntegerMatrix &m)
      : d(m), u(IntegerMatrix::identity(m.rows())), v(IntegerMatrix::identity(m.cols())),
        v_inv(IntegerMatrix::identity(m.cols())) {}

  void add_row(int target, int source, const BigInt &k) {
    for (int j = 0; j < d.cols(); ++j)
      d(target, j) += k * d(source, j);
    for (int j = 0; j < u.cols(); ++j)
      u(target, j) += k * u(source, j);
  }
  void swap_rows(int a, int b) {
    if (a == b)
      return;
    for (int j = 0; j < d.cols(); ++j)
      std::swap(d(a, j), d(b, j));
    for (int j = 0; j < u.cols(); ++j)
      std::swap(u(a, j), u(b, j));
  }
  void negate_row(int r) {
    for (int j = 0; j < d.cols(); ++j)
      d(r, j) = -d(r, j);
    for (int j = 0; j < u.cols(); ++j)
      u(r, j) = -u(r, j);
  }
  void add_col(int target, int source, const BigInt &k) {
    for (int i = 0; i < d.rows(); ++i)
      d(i, target) += k * d(i, source);
    for (int i = 0; i < v.rows(); ++i)
      v(i, target) += k * v(i, source);
    for (int j = 0; j < v_inv.cols(); ++j)
      v_inv(source, j) -= k * v_inv(target, j);
  }
  void swap_cols(int a, int b) {
    if (a == b)
      return;
    for (int i = 0; i < d.rows(); ++i)
      std::swap(d(i, a), d(i, b));
    for (int i = 0; i < v.rows(); ++i)
      std::swap(v(i, a), v(i, b));
    for (int j = 0; j < v_inv.cols(); ++j)
      std::swap(v_inv(a, j), v_inv(b, j));
  }

  /// Moves the smallest nonzero entry of the block [t.., t..] (or only of
  /// row t and column t) to (t, t). False when there is none.
  bool bring_smallest(int t, bool cross_only) {
    int best_i = -1, best_j = -1;
    BigInt best;
    auto consider = [&](int i, int j) {
      const BigInt &x = d(i, j);
      if (x == 0)
        return;
      BigInt mag = abs(x);
      if (best_i < 0 || mag < best) {
        best = mag;
        best_i = i;
        best_j = j;
      }
    };
    if (cross_only) {
      for (int i = t; i < d.rows(); ++i)
        consider(i, t);
      for (int j = t + 1; j < d.cols(); ++j)
        consider(t, j);
    } else {
      for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j)
          consider(i, j);
    }
    if (best_i < 0)
      return false;
    swap_rows(t, best_i);
    swap_cols(t, best_j);
    return true;
  }

  IntegerMatrix d, u, v, v_inv;
};

} // namespace

SmithForm smith_normal_form(const IntegerMatrix &m) {
  SmithState s(m);
  const int limit = std::min(m.rows(), m.cols());
  std::vector<BigInt> factors;
  for (int t = 0; t < limit; ++t) {
    if (!s.bring_smallest(t, false))
      break;
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < m.rows(); ++i) {
        if (s.d(i, t) == 0)
          continue;
        BigInt q = s.d(i, t) / s.d(t, t);
        s.add_row(i, t, -q);
        clean = clean && s.d(i, t) == 0;
      }
      for (int j = t + 1; j < m.cols(); ++j) {
        if (s.d(t, j) == 0)
          continue;
        BigInt q = s.d(t, j) / s.d(t, t);
        s.add_col(j, t, -q);
        clean = clean && s.d(t, j) == 0;
      }
      if (!clean) {
        s.bring_smallest(t, true);
        continue;
      }
      int bad_row = -1;
      for (int i = t + 1; i < m.rows() && bad_row < 0; ++i)
        for (int j = t + 1; j < m.cols(); ++j)
          if (s.d(i, j) % s.d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0)
        break;
      s.add_row(t, bad_row, 1);
    }
    if (s.d(t, t) < 0)
      s.negate_row(t);
    factors.push_back(s.d(t, t));
  }
  return SmithForm{std::move(s.u), std::move(s.d), std::move(s.v), std::move(s.v_inv), std::move(factors)};
}

BigInt determinant(const IntegerMatrix &m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::BadParameter, "determinant of a non-square matrix");
  // Fraction-free Bareiss elimination.
  IntegerMatrix a = m;
  const int n = m.rows();
  BigInt sign = 1, previous = 1;
  for (int k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n && swap < 0; ++i)
        if (a(i, k) != 0)
          swap = i;
      if (swap < 0)
        return 0;
      for (int j = 0; j < n; ++j)
        std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
    previous = a(k, k);
  }
  return n == 0 ? BigInt(1) : sign * a(n - 1, n - 1);
}

std::string to_string(const AbelianGroup &g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1)
    parts.push_back("Z");
  else if (g.free_rank > 1)
    parts.push_back("Z^" + std::to_string(g.free_rank));
  for (long long d : g.torsion)
    parts.push_back("Z_" + std::to_string(d));
  if (parts.empty())
    return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    out += " + " + parts[i];
  return out;
}

// ---------------------------------------------------------------- homology

namespace {

BigInt symmetric_residue(BigInt x, const BigInt &modulus) {
  x %= modulus;
  if (x < 0)
    x += modulus;
  if (2 * x > modulus)
    x -= modulus;
  return x;
}

std::vector<BigInt> multiply(const IntegerMatrix &m, const std::vector<BigInt> &x) {
  std::vector<BigInt> y(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (x[j] != 0)
        y[i] += m(i, j) * x[j];
  return y;
}

} // namespace

std::vector<BigInt> HomologyBasis::to_vector(const Chain &c) const {
  if (c.degree() != degree_ && !c.is_zero())
    throw Error(ErrorCode::BadParameter, "chain of degree " + std::to_string(c.degree()) + " in H_" +
                                             std::to_string(degree_));
  std::vector<BigInt> x(basis_.size());
  for (const auto &[t, k] : c.terms()) {
    if (theory_ == Theory::Q && is_degenerate(t))
      continue;
    auto it = index_.find(t);
    if (it == index_.end()) {
      if (theory_ == Theory::D)
        throw Error(ErrorCode::TheoryMismatch, "chain has a non-degenerate term");
      throw Error(ErrorCode::BadParameter, "tuple entry outside the birack");
    }
    x[it->second] += k;
  }
  return x;
}

bool HomologyBasis::is_cycle(const Chain &c) const {
  auto y = multiply(boundary_, to_vector(c));
  return std::all_of(y.begin(), y.end(), [](const BigInt &v) { return v == 0; });
}

std::vector<long long> HomologyBasis::coordinates(const Chain &c) const {
  if (!is_cycle(c))
    throw Error(ErrorCode::NotACycle, to_string(c) + " is not a cycle in theory " + to_string(theory_));
  auto y = multiply(transform_, to_vector(c));
  std::vector<long long> out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    BigInt value = moduli_[i] == 0 ? y[i] : symmetric_residue(y[i], moduli_[i]);
    out.push_back(static_cast<long long>(value));
  }
  return out;
}

bool HomologyBasis::normalize(const Chain &generator) {
  if (!is_cycle(generator))
    throw Error(ErrorCode::NotACycle, to_string(generator) + " is not a cycle");
  auto y = multiply(transform_, to_vector(generator));
  for (std::size_t i = 0; i < y.size(); ++i) {
    BigInt scale;
    if (moduli_[i] == 0) {
      if (y[i] != 1 && y[i] != -1)
        continue;
      scale = y[i];
    } else {
      BigInt r = symmetric_residue(y[i], moduli_[i]);
      if (r == 0 || gcd(r, moduli_[i]) != 1)
        continue;
      // Inverse of r modulo the factor by search; factors here are small.
      for (BigInt k = 1; k < moduli_[i]; ++k)
        if (symmetric_residue(k * r, moduli_[i]) == 1) {
          scale = k;
          break;
        }
    }
    for (int j = 0; j < transform_.cols(); ++j)
      transform_(static_cast<int>(i), j) *= scale;
    return true;
  }
  return false;
}

Chain q3_generator() { return Chain(3, {{{0, 1, 2}, 1}, {{0, 2, 0}, 1}}); }

HomologyBasis homology_group(const BirackTable &table, int n, Theory theory) {
  HomologyBasis h;
  h.degree_ = n;
  h.theory_ = theory;
  h.birack_name_ = table.name();
  h.basis_ = chain_basis(table, n, theory);
  h.index_ = index_of(h.basis_);
  h.boundary_ = boundary_matrix(table, n, theory);

  const int m = static_cast<int>(h.basis_.size());
  SmithForm a = smith_normal_form(h.boundary_);
  const int r = a.rank();
  const int k = m - r;
  IntegerMatrix kernel(k, m); // rows r.. of V^-1: coordinates on ker d_n
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j)
      kernel(i, j) = a.v_inverse(r + i, j);

  SmithForm b = smith_normal_form(kernel * boundary_matrix(table, n + 1, theory));
  IntegerMatrix full = b.u * kernel;
  std::vector<int> keep;
  for (int i = 0; i < k; ++i) {
    if (i < b.rank()) {
      if (b.invariant_factors[i] == 1)
        continue;
      h.group_.torsion.push_back(static_cast<long long>(b.invariant_factors[i]));
      h.moduli_.push_back(b.invariant_factors[i]);
    } else {
      ++h.group_.free_rank;
      h.moduli_.push_back(0);
    }
    keep.push_back(i);
  }
  h.transform_ = IntegerMatrix(static_cast<int>(keep.size()), m);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    for (int j = 0; j < m; ++j)
      h.transform_(i, j) = full(keep[i], j);

  if (theory == Theory::Q && n == 3 && table.size() == 3 && find_isomorphism(table, builtin::dihedral(3)))
    h.normalize(q3_generator());
  return h;
}

std::string homology_json(const HomologyBasis &h) {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["birack"] = h.birack_name();
  j["degree"] = h.degree();
  j["theory"] = to_string(h.theory());
  j["free_rank"] = h.group().free_rank;
  j["torsion"] = h.group().torsion;
  return j.dump();
}

} // namespace knotkit
