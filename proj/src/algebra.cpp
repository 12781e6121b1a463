#include "knotkit/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "knotkit/error.hpp"

namespace knotkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::UndefinedPair: return "UndefinedPair";
  case ErrorCode::NoPreimage: return "NoPreimage";
  case ErrorCode::BadParameter: return "BadParameter";
  case ErrorCode::NotTotal: return "NotTotal";
  case ErrorCode::MalformedInput: return "MalformedInput";
  case ErrorCode::InconsistentRotation: return "InconsistentRotation";
  case ErrorCode::BadStrandPairing: return "BadStrandPairing";
  case ErrorCode::Disconnected: return "Disconnected";
  case ErrorCode::DegreeTooLow: return "DegreeTooLow";
  case ErrorCode::TheoryMismatch: return "TheoryMismatch";
  case ErrorCode::NotACycle: return "NotACycle";
  case ErrorCode::NotWholeColoured: return "NotWholeColoured";
  case ErrorCode::WrongTable: return "WrongTable";
  }
  return "Unknown";
}

std::string to_string(StructureClass c) {
  switch (c) {
  case StructureClass::none: return "none";
  case StructureClass::birack: return "birack";
  case StructureClass::biquandle: return "biquandle";
  case StructureClass::rack: return "rack";
  case StructureClass::quandle: return "quandle";
  }
  return "none";
}

namespace {

std::vector<Element> flatten(const std::vector<std::vector<Element>> &rows, int n, const char *which) {
  if (static_cast<int>(rows.size()) != n)
    throw Error(ErrorCode::BadParameter, std::string(which) + " table must have n rows");
  std::vector<Element> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto &row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::BadParameter, std::string(which) + " table must have n columns");
    for (Element e : row) {
      if (e < kUndefined || e >= n)
        throw Error(ErrorCode::BadParameter, std::string(which) + " entry out of range");
      flat.push_back(e);
    }
  }
  return flat;
}

} // namespace

BirackTable::BirackTable(std::string name, int n, std::vector<std::vector<Element>> up,
                         std::vector<std::vector<Element>> down)
    : name_(std::move(name)), n_(n) {
  if (n < 1)
    throw Error(ErrorCode::BadParameter, "carrier size must be positive");
  up_ = flatten(up, n, "up");
  down_ = flatten(down, n, "down");

  // b^a and a_b are defined together, exactly for (a,b) in Y.
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      bool down_def = down_at(a, b) != kUndefined;
      bool up_def = up_at(b, a) != kUndefined;
      if (down_def != up_def)
        throw Error(ErrorCode::BadParameter, "up[b][a] and down[a][b] must be defined together");
      domain_size_ += down_def ? 1 : 0;
    }

  up_inv_.assign(static_cast<std::size_t>(n) * n, kUndefined);
  down_inv_.assign(static_cast<std::size_t>(n) * n, kUndefined);
  for (Element b = 0; b < n; ++b)
    for (Element x = 0; x < n; ++x) {
      if (Element y = up_at(x, b); y != kUndefined) {
        if (up_inv_[index(y, b)] != kUndefined)
          throw Error(ErrorCode::BadParameter, "up action of an element is not injective");
        up_inv_[index(y, b)] = x;
      }
      if (Element y = down_at(x, b); y != kUndefined) {
        if (down_inv_[index(y, b)] != kUndefined)
          throw Error(ErrorCode::BadParameter, "down action of an element is not injective");
        down_inv_[index(y, b)] = x;
      }
    }

  switch_inv_.assign(static_cast<std::size_t>(n) * n, kUndefined);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!in_domain(a, b))
        continue;
      auto [x, y] = switch_map(a, b);
      auto &slot = switch_inv_[index(x, y)];
      if (slot == kUndefined)
        slot = a * n + b;
    }
}

std::size_t BirackTable::index(Element a, Element b) const {
  check_element(a);
  check_element(b);
  return static_cast<std::size_t>(a) * n_ + b;
}

void BirackTable::check_element(Element a) const {
  if (a < 0 || a >= n_)
    throw Error(ErrorCode::BadParameter, "element " + std::to_string(a) + " outside carrier of size " +
                                             std::to_string(n_));
}

bool BirackTable::in_domain(Element a, Element b) const { return down_at(a, b) != kUndefined; }

Element BirackTable::up(Element a, Element b) const {
  Element r = up_at(a, b);
  if (r == kUndefined)
    throw Error(ErrorCode::UndefinedPair, "up(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return r;
}

Element BirackTable::down(Element a, Element b) const {
  Element r = down_at(a, b);
  if (r == kUndefined)
    throw Error(ErrorCode::UndefinedPair, "down(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return r;
}

Element BirackTable::up_inv(Element a, Element b) const {
  Element r = up_inv_[index(a, b)];
  if (r == kUndefined)
    throw Error(ErrorCode::NoPreimage, "up_inv(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return r;
}

Element BirackTable::down_inv(Element a, Element b) const {
  Element r = down_inv_[index(a, b)];
  if (r == kUndefined)
    throw Error(ErrorCode::NoPreimage, "down_inv(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return r;
}

Element BirackTable::evaluate(Operation op, Element a, Element b) const {
  switch (op) {
  case Operation::up: return up(a, b);
  case Operation::down: return down(a, b);
  case Operation::up_inv: return up_inv(a, b);
  case Operation::down_inv: return down_inv(a, b);
  }
  throw Error(ErrorCode::BadParameter, "unknown operation");
}

namespace {
std::optional<Element> opt(Element e) {
  if (e == kUndefined)
    return std::nullopt;
  return e;
}
} // namespace

std::optional<Element> BirackTable::try_up(Element a, Element b) const { return opt(up_at(a, b)); }
std::optional<Element> BirackTable::try_down(Element a, Element b) const { return opt(down_at(a, b)); }
std::optional<Element> BirackTable::try_up_inv(Element a, Element b) const { return opt(up_inv_[index(a, b)]); }
std::optional<Element> BirackTable::try_down_inv(Element a, Element b) const {
  return opt(down_inv_[index(a, b)]);
}

std::pair<Element, Element> BirackTable::switch_map(Element a, Element b) const {
  if (!in_domain(a, b))
    throw Error(ErrorCode::UndefinedPair, "S(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return {up_at(b, a), down_at(a, b)};
}

std::optional<std::pair<Element, Element>> BirackTable::try_switch(Element a, Element b) const {
  if (!in_domain(a, b))
    return std::nullopt;
  return std::pair{up_at(b, a), down_at(a, b)};
}

std::optional<std::pair<Element, Element>> BirackTable::try_switch_inverse(Element x, Element y) const {
  Element code = switch_inv_[index(x, y)];
  if (code == kUndefined)
    return std::nullopt;
  return std::pair{code / n_, code % n_};
}

std::pair<Element, Element> BirackTable::switch_inverse(Element x, Element y) const {
  auto r = try_switch_inverse(x, y);
  if (!r)
    throw Error(ErrorCode::NoPreimage, "S^-1(" + std::to_string(x) + "," + std::to_string(y) + ")");
  return *r;
}

std::optional<std::pair<Element, Element>> BirackTable::try_sideways(Element a, Element c) const {
  auto b = try_up_inv(c, a);
  if (!b)
    return std::nullopt;
  return std::pair{*b, down_at(a, *b)};
}

std::pair<Element, Element> BirackTable::sideways(Element a, Element c) const {
  auto r = try_sideways(a, c);
  if (!r)
    throw Error(ErrorCode::NoPreimage,
                std::to_string(c) + " is not in the image of the up action of " + std::to_string(a));
  return *r;
}

bool BirackTable::trivial_up() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b)
      if (Element r = up_at(a, b); r != kUndefined && r != a)
        return false;
  return true;
}

bool BirackTable::trivial_down() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b)
      if (Element r = down_at(a, b); r != kUndefined && r != a)
        return false;
  return true;
}

bool BirackTable::is_rack_table() const { return is_total() && trivial_down(); }

bool BirackTable::is_quandle_table() const {
  if (!is_rack_table())
    return false;
  for (Element a = 0; a < n_; ++a)
    if (up_at(a, a) != a)
      return false;
  return true;
}

std::vector<std::vector<Element>> BirackTable::up_rows() const {
  std::vector<std::vector<Element>> rows(n_);
  for (Element a = 0; a < n_; ++a)
    rows[a].assign(up_.begin() + static_cast<long>(a) * n_, up_.begin() + static_cast<long>(a + 1) * n_);
  return rows;
}

std::vector<std::vector<Element>> BirackTable::down_rows() const {
  std::vector<std::vector<Element>> rows(n_);
  for (Element a = 0; a < n_; ++a)
    rows[a].assign(down_.begin() + static_cast<long>(a) * n_, down_.begin() + static_cast<long>(a + 1) * n_);
  return rows;
}

BirackTable BirackTable::renamed(std::string name) const {
  BirackTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

void AxiomCheck::fail(std::vector<Element> witness) {
  pass = false;
  // Reports stay readable for large partial tables.
  if (counterexamples.size() < 16)
    counterexamples.push_back(std::move(witness));
}

namespace {

using Triple = std::array<Element, 3>;

std::optional<Triple> s1(const BirackTable &t, const Triple &v) {
  auto s = t.try_switch(v[0], v[1]);
  if (!s)
    return std::nullopt;
  return Triple{s->first, s->second, v[2]};
}

std::optional<Triple> s2(const BirackTable &t, const Triple &v) {
  auto s = t.try_switch(v[1], v[2]);
  if (!s)
    return std::nullopt;
  return Triple{v[0], s->first, s->second};
}

template <typename... Steps>
std::optional<Triple> compose(const BirackTable &t, Triple v, Steps... steps) {
  std::optional<Triple> cur = v;
  ((cur = cur ? steps(t, *cur) : std::nullopt), ...);
  return cur;
}

} // namespace

AxiomReport check_axioms(const BirackTable &table) {
  AxiomReport report;
  const int n = table.size();

  // B1: F(a, b^a) = (b, a_b) injective, and the diagonal conditions.
  std::set<std::pair<Element, Element>> f_image;
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      auto f = table.try_sideways(a, c);
      if (!f)
        continue;
      if (!f_image.insert(*f).second)
        report.b1_sideways_invertible.fail({a, c});
    }
  for (Element a = 0; a < n; ++a) {
    if (auto x = table.try_down_inv(a, a)) {
      if (auto ax = table.try_up(a, *x); ax && *ax != *x)
        report.b1_up_half.fail({a});
    }
    if (auto y = table.try_up_inv(a, a)) {
      if (auto ay = table.try_down(a, *y); ay && *ay != *y)
        report.b1_down_half.fail({a});
    }
  }

  // B2: S is a bijection Y -> Y.
  std::set<std::pair<Element, Element>> s_image;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      auto s = table.try_switch(a, b);
      if (!s)
        continue;
      if (!s_image.insert(*s).second || !table.in_domain(s->first, s->second))
        report.b2.fail({a, b});
    }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        Triple v{a, b, c};
        auto lhs = compose(table, v, s1, s2, s1);
        auto rhs = compose(table, v, s2, s1, s2);
        if (lhs && rhs && *lhs != *rhs)
          report.b3.fail({a, b, c});

        auto up = [&](std::optional<Element> x, std::optional<Element> y) -> std::optional<Element> {
          if (!x || !y)
            return std::nullopt;
          return table.try_up(*x, *y);
        };
        auto down = [&](std::optional<Element> x, std::optional<Element> y) -> std::optional<Element> {
          if (!x || !y)
            return std::nullopt;
          return table.try_down(*x, *y);
        };
        std::optional<Element> oa = a, ob = b, oc = c;
        auto check = [&](std::optional<Element> l, std::optional<Element> r) {
          if (l && r && *l != *r)
            report.derived_relations.fail({a, b, c});
        };
        check(up(up(oa, down(oc, ob)), up(ob, oc)), up(up(oa, ob), oc));
        check(down(up(oa, ob), up(oc, down(ob, oa))), up(down(oa, oc), down(ob, up(oc, oa))));
        check(down(down(oa, up(oc, ob)), down(ob, oc)), down(down(oa, ob), oc));
      }

  bool birack = report.b2.pass && report.b3.pass;
  bool rack_like = table.trivial_down() || table.trivial_up();
  if (!birack)
    report.structure = StructureClass::none;
  else if (report.b1())
    report.structure = rack_like ? StructureClass::quandle : StructureClass::biquandle;
  else
    report.structure = rack_like ? StructureClass::rack : StructureClass::birack;
  return report;
}

namespace builtin {

namespace {

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

using Rows = std::vector<std::vector<Element>>;

template <typename F> Rows tabulate(int n, F f) {
  Rows rows(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      rows[a][b] = f(a, b);
  return rows;
}

} // namespace

BirackTable twist(int n) {
  if (n < 1)
    throw Error(ErrorCode::BadParameter, "twist needs n >= 1");
  auto trivial = tabulate(n, [](Element a, Element) { return a; });
  return BirackTable("twist" + std::to_string(n), n, trivial, trivial);
}

BirackTable dihedral(int m) {
  if (m < 2)
    throw Error(ErrorCode::BadParameter, "dihedral quandle needs modulus >= 2");
  auto up = tabulate(m, [m](Element a, Element b) { return mod(2LL * b - a, m); });
  auto down = tabulate(m, [](Element a, Element) { return a; });
  return BirackTable("dihedral" + std::to_string(m), m, up, down);
}

BirackTable three_colour() {
  using Perm = std::array<int, 3>;
  // r = (12), g = (13), b = (23) on {0,1,2}
  const std::array<Perm, 3> transpositions{Perm{1, 0, 2}, Perm{2, 1, 0}, Perm{0, 2, 1}};
  auto compose = [](const Perm &p, const Perm &q) { // p after q
    Perm r{};
    for (int i = 0; i < 3; ++i)
      r[i] = p[q[i]];
    return r;
  };
  auto up = tabulate(3, [&](Element a, Element b) {
    const Perm &t = transpositions[b];
    Perm conj = compose(t, compose(transpositions[a], t));
    auto it = std::find(transpositions.begin(), transpositions.end(), conj);
    return static_cast<Element>(it - transpositions.begin());
  });
  auto down = tabulate(3, [](Element a, Element) { return a; });
  return BirackTable("three_colour", 3, up, down);
}

BirackTable black_white() {
  auto flip = tabulate(2, [](Element a, Element) { return 1 - a; });
  return BirackTable("black_white", 2, flip, flip);
}

BirackTable alexander(int m, int lambda, int mu) {
  if (m < 2)
    throw Error(ErrorCode::BadParameter, "alexander biquandle needs modulus >= 2");
  if (std::gcd(mod(lambda, m), m) != 1 || std::gcd(mod(mu, m), m) != 1)
    throw Error(ErrorCode::BadParameter, "lambda and mu must be units mod m");
  auto up = tabulate(m, [&](Element a, Element b) {
    return mod(static_cast<long long>(lambda) * a + (1LL - static_cast<long long>(lambda) * mu) * b, m);
  });
  auto down = tabulate(m, [&](Element a, Element) { return mod(static_cast<long long>(mu) * a, m); });
  return BirackTable("alexander" + std::to_string(m) + "_" + std::to_string(lambda) + "_" + std::to_string(mu),
                     m, up, down);
}

} // namespace builtin

BirackTable double_birack(const BirackTable &table) {
  if (!table.is_total())
    throw Error(ErrorCode::NotTotal, "only total biracks can be doubled");
  const int n = table.size();
  const int nn = n * n;
  std::vector<std::vector<Element>> up(nn, std::vector<Element>(nn, kUndefined));
  std::vector<std::vector<Element>> down(nn, std::vector<Element>(nn, kUndefined));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        Element lower = pair_element(n, a, b);
        Element upper = pair_element(n, table.up(a, b), c);
        Element c_b = table.down(c, b);
        up[lower][upper] = pair_element(n, table.up(a, c_b), table.up(b, c));
        down[upper][lower] = pair_element(n, a, c_b);
      }
  return BirackTable("double(" + table.name() + ")", nn, std::move(up), std::move(down));
}

std::optional<std::vector<Element>> find_isomorphism(const BirackTable &from, const BirackTable &to) {
  const int n = from.size();
  if (to.size() != n || from.domain_size() != to.domain_size())
    return std::nullopt;
  std::vector<Element> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  auto same = [&](std::optional<Element> x, std::optional<Element> y) {
    if (!x || !y)
      return !x && !y;
    return phi[*x] == *y;
  };
  do {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b)
        ok = same(from.try_up(a, b), to.try_up(phi[a], phi[b])) &&
             same(from.try_down(a, b), to.try_down(phi[a], phi[b]));
    if (ok)
      return phi;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return std::nullopt;
}

} // namespace knotkit
