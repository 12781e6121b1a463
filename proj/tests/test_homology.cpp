#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "knotkit/error.hpp"
#include "knotkit/homology.hpp"

using namespace knotkit;

namespace {

constexpr Element B = 0, W = 1;

std::vector<BirackTable> builtins() {
  return {builtin::twist(2),     builtin::twist(3),         builtin::dihedral(3),
          builtin::dihedral(5),  builtin::three_colour(),   builtin::black_white(),
          builtin::alexander(5, 2, 3), builtin::alexander(7, 3, 2)};
}

Chain tuple(std::initializer_list<Element> t) { return Chain(static_cast<int>(t.size()), {{Tuple(t), 1}}); }

BirackTable relabel(const BirackTable &t, const std::vector<Element> &phi) {
  const int n = t.size();
  std::vector<std::vector<Element>> up(n, std::vector<Element>(n)), down(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      up[phi[a]][phi[c]] = phi[t.up(a, c)];
      down[phi[a]][phi[c]] = phi[t.down(a, c)];
    }
  return BirackTable(t.name() + "'", n, up, down);
}

bool is_diagonal(const IntegerMatrix &m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0)
        return false;
  return true;
}

std::string group(const BirackTable &t, int n, Theory theory) { return to_string(homology_group(t, n, theory).group()); }

} // namespace

TEST_CASE("boundary worked examples on black_white") {
  const BirackTable bw = builtin::black_white();
  const Chain bb = tuple({B, B}), ww = tuple({W, W});
  CHECK(boundary(bw, bb).is_zero());
  CHECK(boundary(bw, ww).is_zero());
  CHECK(boundary(bw, tuple({B, W})) == 2 * (tuple({W}) - tuple({B})));
  CHECK(boundary(bw, tuple({W, B})) == -boundary(bw, tuple({B, W})));
  const Chain target = bb - ww;
  CHECK(boundary(bw, tuple({B, B, B})) == target);
  CHECK(boundary(bw, tuple({B, B, W})) == target);
  CHECK(boundary(bw, tuple({B, W, B})) == -target);
  CHECK(boundary(bw, tuple({W, B, B})) == target);
  CHECK(boundary(bw, tuple({B})).is_zero());
  CHECK_THROWS_AS(boundary(bw, Chain(0)), Error);
}

TEST_CASE("boundary of a quandle tuple") {
  // In a quandle d(a,b) = (b) - (b) - (a) + (a^b).
  const BirackTable q = builtin::three_colour();
  CHECK(boundary(q, tuple({0, 1})) == tuple({2}) - tuple({0}));
  CHECK(to_string(tuple({0, 1}) + 2 * tuple({1, 1})) == "(0,1) + 2(1,1)");
  CHECK(to_string(Chain(2)) == "0");
  CHECK(to_string(tuple({0, 1}) - tuple({1, 0}), {"r", "g"}) == "(r,g) - (g,r)");
}

TEST_CASE("boundary squares to zero") {
  std::vector<BirackTable> tables = builtins();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Element> phi(5);
    std::iota(phi.begin(), phi.end(), 0);
    std::shuffle(phi.begin(), phi.end(), rng);
    tables.push_back(relabel(builtin::alexander(5, 2, 3), phi));
    tables.push_back(relabel(builtin::alexander(5, 3, 4), phi));
  }
  for (const BirackTable &t : tables) {
    CAPTURE(t.name());
    for (int n = 2; n <= 4; ++n) {
      const IntegerMatrix outer = boundary_matrix(t, n - 1, Theory::BR);
      const IntegerMatrix inner = boundary_matrix(t, n, Theory::BR);
      if (n - 1 >= 1)
        CHECK((outer * inner).is_zero());
    }
    for (const Tuple &x : chain_basis(t, 3, Theory::BR))
      CHECK(boundary(t, boundary(t, Chain(3, {{x, 1}}))).is_zero());
  }
}

TEST_CASE("degenerate tuples span a subcomplex") {
  for (const BirackTable &t : {builtin::three_colour(), builtin::dihedral(5), builtin::twist(3)}) {
    for (int n = 2; n <= 4; ++n)
      for (const Tuple &x : chain_basis(t, n, Theory::D)) {
        const Chain image = boundary(t, Chain(n, {{x, 1}}));
        for (const auto &[y, c] : image.terms())
          CHECK(is_degenerate(y));
      }
  }
  CHECK(is_degenerate({0, 1, 1}));
  CHECK_FALSE(is_degenerate({0, 1, 0}));
}

TEST_CASE("chain bases") {
  const BirackTable q = builtin::three_colour();
  CHECK(chain_basis(q, 3, Theory::BR).size() == 27);
  CHECK(chain_basis(q, 3, Theory::Q).size() == 12);
  CHECK(chain_basis(q, 3, Theory::D).size() == 15);
  auto code_of = [](auto f) {
    try {
      f();
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::WrongTable;
  };
  CHECK(code_of([] { chain_basis(builtin::black_white(), 2, Theory::Q); }) == ErrorCode::TheoryMismatch);
  CHECK(code_of([] { chain_basis(builtin::black_white(), 2, Theory::R); }) == ErrorCode::TheoryMismatch);
  CHECK(code_of([] { homology_group(double_birack(builtin::twist(2)), 2, Theory::BR); }) == ErrorCode::NotTotal);
  CHECK(parse_theory("Q") == Theory::Q);
  CHECK(to_string(Theory::BR) == "BR");
  CHECK_THROWS_AS(parse_theory("X"), Error);
}

TEST_CASE("Smith normal form identities on random matrices") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 6);
    const int spread = trial % 3 == 0 ? 2 : 9;
    IntegerMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m(i, j) = static_cast<long long>(rng() % (2 * spread + 1)) - spread;
    if (trial % 5 == 0 && rows > 1) // force a dependent row
      for (int j = 0; j < cols; ++j)
        m(rows - 1, j) = 2 * m(0, j);
    CAPTURE(trial);
    const SmithForm s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_diagonal(s.d));
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(s.v * s.v_inverse == IntegerMatrix::identity(cols));
    for (int i = 0; i < s.rank(); ++i) {
      CHECK(s.d(i, i) == s.invariant_factors[i]);
      CHECK(s.invariant_factors[i] > 0);
      if (i + 1 < s.rank())
        CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
    }
    for (int i = s.rank(); i < std::min(rows, cols); ++i)
      CHECK(s.d(i, i) == 0);
  }
}

TEST_CASE("determinant") {
  IntegerMatrix m(3, 3);
  const long long values[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = values[i][j];
  CHECK(determinant(m) == 4);
  CHECK(determinant(IntegerMatrix::identity(4)) == 1);
  m(2, 0) = 2;
  m(2, 1) = -1;
  m(2, 2) = 0;
  CHECK(determinant(m) == 0);
}

TEST_CASE("homology of black_white") {
  const BirackTable bw = builtin::black_white();
  CHECK(group(bw, 1, Theory::BR) == "Z + Z_2");
  CHECK(group(bw, 2, Theory::BR) == "Z^2");
  CHECK(group(bw, 3, Theory::BR) == "Z^4 + Z_2");
}

TEST_CASE("homology of the 3-colour quandle") {
  const BirackTable q = builtin::three_colour();
  CHECK(group(q, 1, Theory::Q) == "Z");
  CHECK(group(q, 2, Theory::Q) == "0");
  CHECK(group(q, 3, Theory::Q) == "Z_3");
  CHECK(group(q, 4, Theory::Q) == "Z_3");
  CHECK(group(q, 3, Theory::R) == "Z + Z_3");
  CHECK(group(builtin::dihedral(5), 3, Theory::Q) == "Z_5");

  HomologyBasis h = homology_group(q, 3, Theory::Q);
  const Chain gen = q3_generator();
  CHECK(gen == tuple({0, 1, 2}) + tuple({0, 2, 0}));
  CHECK(h.is_cycle(gen));
  CHECK(h.coordinates(gen) == std::vector<long long>{1});
  CHECK(h.coordinates(2 * gen) == std::vector<long long>{-1});
  CHECK(h.coordinates(3 * gen) == std::vector<long long>{0});
  CHECK(h.coordinates(boundary(q, tuple({0, 1, 2, 0}))) == std::vector<long long>{0});
  try {
    (void)h.coordinates(tuple({0, 1, 2}));
    FAIL("expected NotACycle");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotACycle);
  }
  CHECK(homology_json(h) ==
        R"({"format_version":1,"birack":"three_colour","degree":3,"theory":"Q","free_rank":0,"torsion":[3]})");
}

TEST_CASE("trivial quandles have free homology of known rank") {
  // Rack homology of T_m is Z^(m^n); quandle homology is Z^(m (m-1)^(n-1)).
  for (int m : {2, 3}) {
    const BirackTable t = builtin::twist(m);
    for (int n = 1; n <= 3; ++n) {
      const AbelianGroup rack = homology_group(t, n, Theory::R).group();
      CHECK(rack.torsion.empty());
      CHECK(rack.free_rank == static_cast<int>(std::pow(m, n)));
      const AbelianGroup quandle = homology_group(t, n, Theory::Q).group();
      CHECK(quandle.torsion.empty());
      CHECK(quandle.free_rank == m * static_cast<int>(std::pow(m - 1, n - 1)));
    }
  }
}

TEST_CASE("abelian group text") {
  CHECK(to_string(AbelianGroup{}) == "0");
  CHECK(to_string(AbelianGroup{1, {}}) == "Z");
  CHECK(to_string(AbelianGroup{2, {2}}) == "Z^2 + Z_2");
  CHECK(to_string(AbelianGroup{0, {3}}) == "Z_3");
}

TEST_CASE("boundary squares to zero on every birack of order 3") {
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p{0, 1, 2};
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  int biracks = 0;
  for (int u = 0; u < 216; ++u)
    for (int d = 0; d < 216; ++d) {
      // Column b of each table is one of the six permutations of the carrier.
      std::vector<std::vector<Element>> up(3, std::vector<Element>(3)), down(3, std::vector<Element>(3));
      for (int col = 0, cu = u, cd = d; col < 3; ++col, cu /= 6, cd /= 6)
        for (Element a = 0; a < 3; ++a) {
          up[a][col] = perms[cu % 6][a];
          down[a][col] = perms[cd % 6][a];
        }
      const BirackTable t("order3", 3, up, down);
      const AxiomReport rep = check_axioms(t);
      if (!rep.b2.pass || !rep.b3.pass)
        continue;
      ++biracks;
      for (int n = 2; n <= 4; ++n)
        CHECK((boundary_matrix(t, n - 1, Theory::BR) * boundary_matrix(t, n, Theory::BR)).is_zero());
    }
  CHECK(biracks == 66);
}
