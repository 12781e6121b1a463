#include "knotkit/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "knotkit/catalog.hpp"
#include "knotkit/error.hpp"
#include "knotkit/parallel.hpp"

namespace knotkit {

std::vector<CrossingTriple> crossing_triples(const Diagram &d, const BirackTable &table, const WholeColouring &wc) {
  if (!is_whole_colouring(d, table, wc))
    throw Error(ErrorCode::NotWholeColoured, "not a whole colouring of " + d.name() + " by " + table.name());
  const auto &arcs = d.semi_arcs();
  std::vector<CrossingTriple> out;
  for (const ClassicalCrossing &x : d.crossings()) {
    if (x.sign > 0)
      out.push_back({wc.faces[arcs[x.under_in].right_face], wc.edge[x.under_in], wc.edge[x.over_in], 1});
    else
      out.push_back({wc.faces[arcs[x.under_out].right_face], wc.edge[x.under_out], wc.edge[x.over_out], -1});
  }
  return out;
}

namespace {

Chain sum_of(const std::vector<CrossingTriple> &triples) {
  Chain c(3);
  for (const CrossingTriple &t : triples)
    c.add({t.region, t.under, t.over}, t.sign);
  return c;
}

/// Coordinates on Z^N / (column span of m) from its Smith form.
struct QuotientMap {
  AbelianGroup group;
  IntegerMatrix transform;
  std::vector<BigInt> moduli;

  explicit QuotientMap(const IntegerMatrix &m) {
    SmithForm s = smith_normal_form(m);
    std::vector<int> keep;
    for (int i = 0; i < m.rows(); ++i) {
      if (i < s.rank()) {
        if (s.invariant_factors[i] == 1)
          continue;
        group.torsion.push_back(static_cast<long long>(s.invariant_factors[i]));
        moduli.push_back(s.invariant_factors[i]);
      } else {
        ++group.free_rank;
        moduli.push_back(0);
      }
      keep.push_back(i);
    }
    transform = IntegerMatrix(static_cast<int>(keep.size()), m.rows());
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
      for (int j = 0; j < m.rows(); ++j)
        transform(i, j) = s.u(keep[i], j);
  }
};

long long to_small(const BigInt &x) { return static_cast<long long>(x); }

} // namespace

Chain whole_cycle(const Diagram &d, const BirackTable &table, const WholeColouring &wc) {
  Chain c = sum_of(crossing_triples(d, table, wc));
  if (table.is_rack_table() && !boundary(table, c).is_zero())
    throw std::logic_error("whole colouring chain of " + d.name() + " is not a cycle");
  return c;
}

std::vector<std::vector<long long>> chirality_classes(const Diagram &d, const BirackTable &table) {
  const HomologyBasis h = homology_group(table, 3, Theory::Q);
  const auto colourings = enumerate_whole_colourings(d, table);
  std::vector<std::vector<long long>> classes(colourings.size());
  parallel_for(static_cast<int>(colourings.size()),
               [&](int i) { classes[i] = h.coordinates(whole_cycle(d, table, colourings[i])); });
  std::sort(classes.begin(), classes.end());
  return classes;
}

std::vector<long long> chirality_q3(const Diagram &d) {
  std::vector<long long> out;
  for (const auto &c : chirality_classes(d, builtin::three_colour()))
    out.push_back(c.at(0));
  return out;
}

std::vector<R3Colouring> r3_colourings(const BirackTable &table) {
  if (!table.is_total())
    throw Error(ErrorCode::NotTotal, table.name() + " is partial");
  const int n = table.size();
  // Crossing between positions i and i+1; region[p] lies right of position p.
  auto run = [&](std::array<Element, 3> x, Element seed, std::initializer_list<int> word,
                 std::vector<CrossingTriple> &triples) {
    std::array<Element, 3> region{};
    region[2] = seed;
    region[1] = table.up(region[2], x[2]);
    region[0] = table.up(region[1], x[1]);
    for (int i : word) {
      triples.push_back({region[i + 1], x[i + 1], x[i], 1});
      Element under_out = table.up(x[i + 1], x[i]);
      Element over_out = table.down(x[i], x[i + 1]);
      x[i] = under_out;
      x[i + 1] = over_out;
      region[i] = table.up(region[i + 1], x[i + 1]);
    }
    return std::pair{x, region};
  };
  std::vector<R3Colouring> out;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        for (Element seed = 0; seed < n; ++seed) {
          R3Colouring rc;
          rc.inbound = {a, b, c};
          rc.seed = seed;
          auto left = run(rc.inbound, seed, {0, 1, 0}, rc.left);
          auto right = run(rc.inbound, seed, {1, 0, 1}, rc.right);
          if (left != right)
            continue; // the two sides disagree on the outgoing colours
          rc.relation = sum_of(rc.left) - sum_of(rc.right);
          out.push_back(std::move(rc));
        }
  return out;
}

std::vector<Chain> r3_relations(const BirackTable &table) {
  std::vector<Chain> out;
  for (const R3Colouring &rc : r3_colourings(table))
    out.push_back(rc.relation);
  return out;
}

Chain normalize_relation(const Chain &c) {
  if (c.is_zero())
    return c;
  long long g = 0;
  for (const auto &[t, k] : c.terms())
    g = std::gcd(g, k);
  if (c.terms().begin()->second < 0)
    g = -g;
  Chain out(c.degree());
  for (const auto &[t, k] : c.terms())
    out.add(t, k / g);
  return out;
}

CrossingGroup crossing_invariant_group(const BirackTable &table) {
  CrossingGroup cg;
  const int n = table.size();
  cg.n_ = n;
  cg.generators_ = chain_basis(table, 3, Theory::BR);

  std::set<std::map<Tuple, long long>> seen;
  for (const Chain &r : r3_relations(table)) {
    Chain normal = normalize_relation(r);
    if (!normal.is_zero() && seen.insert(normal.terms()).second)
      cg.relations_.push_back(normal);
  }

  std::vector<Tuple> killed;
  for (const Tuple &t : cg.generators_) {
    std::string p = triple_pattern(t[0], t[1], t[2]);
    if (p == "abb" || p == "aaa" || p == "aab")
      killed.push_back(t);
  }
  const int columns = static_cast<int>(killed.size() + cg.relations_.size());
  IntegerMatrix m(n * n * n, columns);
  auto row = [n](const Tuple &t) { return (t[0] * n + t[1]) * n + t[2]; };
  for (int j = 0; j < static_cast<int>(killed.size()); ++j)
    m(row(killed[j]), j) = 1;
  for (std::size_t r = 0; r < cg.relations_.size(); ++r)
    for (const auto &[t, k] : cg.relations_[r].terms())
      m(row(t), static_cast<int>(killed.size() + r)) += k;

  QuotientMap q(m);
  cg.group_ = q.group;
  cg.transform_ = std::move(q.transform);
  cg.moduli_ = std::move(q.moduli);
  return cg;
}

std::vector<long long> CrossingGroup::coordinates(const Chain &c) const {
  if (c.degree() != 3 && !c.is_zero())
    throw Error(ErrorCode::BadParameter, "crossing sums have degree 3");
  const int n = n_;
  std::vector<BigInt> x(generators_.size());
  for (const auto &[t, k] : c.terms()) {
    for (Element e : t)
      if (e < 0 || e >= n)
        throw Error(ErrorCode::BadParameter, "triple entry outside the quandle");
    x[(t[0] * n + t[1]) * n + t[2]] += k;
  }
  std::vector<long long> out;
  for (int i = 0; i < transform_.rows(); ++i) {
    BigInt y = 0;
    for (int j = 0; j < transform_.cols(); ++j)
      if (x[j] != 0)
        y += transform_(i, j) * x[j];
    if (moduli_[i] != 0) {
      y %= moduli_[i];
      if (y < 0)
        y += moduli_[i];
      if (2 * y > moduli_[i])
        y -= moduli_[i];
    }
    out.push_back(to_small(y));
  }
  return out;
}

long long CrossingGroup::order_of(const Chain &c) const {
  auto y = coordinates(c);
  long long order = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (moduli_[i] == 0) {
      if (y[i] != 0)
        return 0;
      continue;
    }
    long long d = to_small(moduli_[i]);
    order = std::lcm(order, d / std::gcd(d, std::abs(y[i])));
  }
  return order;
}

TwoCycle bw_two_cycle(const Diagram &d, const BirackTable &table, const EdgeColouring &ec) {
  if (!is_edge_colouring(d, table, ec))
    throw Error(ErrorCode::BadParameter, "not an edge colouring of " + d.name() + " by " + table.name());
  TwoCycle out;
  for (const ClassicalCrossing &x : d.crossings()) {
    if (x.sign > 0)
      out.chain.add({ec[x.under_in], ec[x.over_out]}, 1);
    else
      out.chain.add({ec[x.under_out], ec[x.over_in]}, -1);
  }
  if (!boundary(table, out.chain).is_zero())
    throw Error(ErrorCode::NotACycle, to_string(out.chain) + " is not a birack 2-cycle");
  out.homology_class = homology_group(table, 2, Theory::BR).coordinates(out.chain);
  return out;
}

namespace {

struct Report {
  std::string name;
  int writhe = 0;
  std::optional<int> genus;
  std::vector<std::pair<std::string, long long>> colour_counts;
  std::vector<long long> chirality;
  std::vector<OrientationAnalysis> orientations;
  std::optional<bool> two_sided;
  std::optional<bool> chessboard;
};

Report build_report(const Diagram &d) {
  Report r;
  r.name = d.name();
  r.writhe = d.writhe();
  for (const std::string &name : catalog::birack_names())
    r.colour_counts.emplace_back(name, count_colourings(d, catalog::birack(name)));
  r.chirality = chirality_q3(d);
  r.orientations = alternate_orientations(d);
  if (d.is_connected()) {
    r.genus = genus(d);
    r.two_sided = two_sidedness(d).two_sided;
    r.chessboard = chessboard(d).has_value();
  }
  return r;
}

template <typename T> nlohmann::ordered_json optional_json(const std::optional<T> &v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

bool any_good(const std::vector<OrientationAnalysis> &os) {
  return std::any_of(os.begin(), os.end(), [](const OrientationAnalysis &o) { return o.good(); });
}

} // namespace

std::string diagram_report_json(const Diagram &d) {
  Report r = build_report(d);
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["diagram"] = r.name;
  j["writhe"] = r.writhe;
  j["genus"] = optional_json(r.genus);
  j["colour_counts"] = nlohmann::ordered_json::object();
  for (const auto &[name, count] : r.colour_counts)
    j["colour_counts"][name] = count;
  j["chirality_q3"] = r.chirality;
  nlohmann::ordered_json o;
  o["count"] = r.orientations.size();
  o["sinks"] = nlohmann::ordered_json::array();
  o["sources"] = nlohmann::ordered_json::array();
  for (const OrientationAnalysis &a : r.orientations) {
    o["sinks"].push_back(a.sinks);
    o["sources"].push_back(a.sources);
  }
  o["good"] = any_good(r.orientations);
  j["orientation"] = o;
  j["two_sided"] = optional_json(r.two_sided);
  j["chessboard"] = optional_json(r.chessboard);
  return j.dump();
}

std::string diagram_report_text(const Diagram &d) {
  Report r = build_report(d);
  auto yes_no = [](const std::optional<bool> &b) -> std::string { return b ? (*b ? "yes" : "no") : "n/a"; };
  std::ostringstream out;
  out << "# knotkit format 1\n";
  out << "diagram       " << r.name << "\n";
  out << "writhe        " << r.writhe << "\n";
  out << "genus         " << (r.genus ? std::to_string(*r.genus) : "n/a") << "\n";
  out << "colourings   ";
  for (const auto &[name, count] : r.colour_counts)
    out << " " << name << "=" << count;
  out << "\nchirality_q3 ";
  std::map<long long, int> histogram;
  for (long long c : r.chirality)
    histogram[c]++;
  for (const auto &[value, count] : histogram)
    out << " " << (value > 0 ? "+" : "") << value << " x" << count;
  out << "\norientations  " << r.orientations.size();
  for (const OrientationAnalysis &a : r.orientations)
    out << " [" << a.sinks << " sinks, " << a.sources << " sources]";
  out << (any_good(r.orientations) ? " good" : "") << "\n";
  out << "two_sided     " << yes_no(r.two_sided) << "\n";
  out << "chessboard    " << yes_no(r.chessboard) << "\n";
  return out.str();
}

} // namespace knotkit
