#include "knotkit/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotkit/catalog.hpp"
#include "knotkit/colouring.hpp"
#include "knotkit/error.hpp"
#include "knotkit/homology.hpp"
#include "knotkit/invariants.hpp"

namespace knotkit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char *kTextHeader = "# knotkit format 1\n";

struct Options {
  std::string diagram;
  std::string birack;
  int degree = 2;
  std::string theory = "BR";
  bool json = false;
  bool text = false;
  std::string out_path;
  bool all = false;
  bool whole = false;
};

std::vector<std::string> element_names(const BirackTable &t) {
  if (t.name() == "three_colour")
    return {"r", "g", "b"};
  if (t.name() == "black_white")
    return {"b", "w"};
  return {};
}

std::string element_label(const std::vector<std::string> &names, Element e) {
  return e < static_cast<Element>(names.size()) ? names[e] : std::to_string(e);
}

ordered_json check_json(const AxiomCheck &c) {
  ordered_json j;
  j["pass"] = c.pass;
  j["counterexamples"] = c.counterexamples;
  return j;
}

std::string pass_word(bool pass) { return pass ? "pass" : "FAIL"; }

void cmd_catalog(const Options &o, std::ostream &out) {
  if (o.json) {
    ordered_json j;
    j["format_version"] = 1;
    j["diagrams"] = catalog::diagram_names();
    j["biracks"] = catalog::birack_names();
    j["equivalence_pairs"] = catalog::equivalence_pairs();
    out << j.dump() << "\n";
    return;
  }
  out << kTextHeader << "diagrams\n";
  for (const std::string &name : catalog::diagram_names()) {
    Diagram d = catalog::diagram(name);
    out << "  " << name << "  crossings " << d.classical_count() << "+" << d.virtual_count() << "v, components "
        << d.component_count() << "\n";
  }
  out << "biracks\n";
  for (const std::string &name : catalog::birack_names())
    out << "  " << name << "  n=" << catalog::birack(name).size() << "\n";
  out << "  (also twist<n>, dihedral<m>, alexander:<m>:<lambda>:<mu>, or a JSON file path)\n";
  out << "equivalent pairs\n";
  for (const auto &[a, b] : catalog::equivalence_pairs())
    out << "  " << a << " ~ " << b << "\n";
}

void cmd_axioms(const Options &o, std::ostream &out) {
  BirackTable t = catalog::load_birack(o.birack);
  AxiomReport r = check_axioms(t);
  if (o.json) {
    AxiomCheck b1;
    b1.pass = r.b1();
    for (const AxiomCheck *part : {&r.b1_sideways_invertible, &r.b1_up_half, &r.b1_down_half})
      for (const auto &w : part->counterexamples)
        b1.counterexamples.push_back(w);
    ordered_json j;
    j["format_version"] = 1;
    j["birack"] = t.name();
    j["n"] = t.size();
    j["domain_size"] = t.domain_size();
    j["b1"] = check_json(b1);
    j["b1_sideways_invertible"] = check_json(r.b1_sideways_invertible);
    j["b1_up_half"] = check_json(r.b1_up_half);
    j["b1_down_half"] = check_json(r.b1_down_half);
    j["b2"] = check_json(r.b2);
    j["b3"] = check_json(r.b3);
    j["derived_relations"] = check_json(r.derived_relations);
    j["class"] = to_string(r.structure);
    out << j.dump() << "\n";
    return;
  }
  auto line = [&](const char *label, const AxiomCheck &c) {
    out << label << pass_word(c.pass);
    if (!c.pass) {
      out << "  e.g.";
      for (Element e : c.counterexamples.front())
        out << " " << e;
    }
    out << "\n";
  };
  out << kTextHeader;
  out << "birack        " << t.name() << " (n=" << t.size() << ", domain " << t.domain_size() << ")\n";
  line("B1 sideways   ", r.b1_sideways_invertible);
  line("B1 up half    ", r.b1_up_half);
  line("B1 down half  ", r.b1_down_half);
  line("B2            ", r.b2);
  line("B3            ", r.b3);
  line("derived       ", r.derived_relations);
  out << "class         " << to_string(r.structure) << "\n";
}

void cmd_double(const Options &o, std::ostream &out) {
  out << serialize_birack(double_birack(catalog::load_birack(o.birack))) << "\n";
}

void cmd_colour(const Options &o, std::ostream &out) {
  Diagram d = catalog::load_diagram(o.diagram);
  BirackTable t = catalog::load_birack(o.birack);
  const auto names = element_names(t);
  if (o.whole) {
    auto whole = enumerate_whole_colourings(d, t);
    if (o.json) {
      ordered_json j;
      j["format_version"] = 1;
      j["diagram"] = d.name();
      j["birack"] = t.name();
      j["whole_count"] = whole.size();
      if (o.all) {
        j["colourings"] = ordered_json::array();
        for (const WholeColouring &wc : whole)
          j["colourings"].push_back(ordered_json::parse(colouring_json(d, t, wc.edge, &wc.faces)));
      }
      out << j.dump() << "\n";
      return;
    }
    out << kTextHeader << whole.size() << "\n";
    if (o.all)
      for (const WholeColouring &wc : whole) {
        out << "edges";
        for (Element e : wc.edge)
          out << " " << element_label(names, e);
        out << "  faces";
        for (Element f : wc.faces)
          out << " " << element_label(names, f);
        out << "\n";
      }
    return;
  }
  auto edges = enumerate_edge_colourings(d, t);
  if (o.json) {
    ordered_json j;
    j["format_version"] = 1;
    j["diagram"] = d.name();
    j["birack"] = t.name();
    j["count"] = edges.size();
    if (o.all) {
      j["colourings"] = ordered_json::array();
      for (const EdgeColouring &ec : edges)
        j["colourings"].push_back(ordered_json::parse(colouring_json(d, t, ec, nullptr)));
    }
    out << j.dump() << "\n";
    return;
  }
  out << kTextHeader << edges.size() << "\n";
  if (o.all)
    for (const EdgeColouring &ec : edges) {
      out << "edges";
      for (Element e : ec)
        out << " " << element_label(names, e);
      out << "\n";
    }
}

void cmd_homology(const Options &o, std::ostream &out) {
  BirackTable t = catalog::load_birack(o.birack);
  HomologyBasis h = homology_group(t, o.degree, parse_theory(o.theory));
  if (o.json)
    out << homology_json(h) << "\n";
  else
    out << kTextHeader << to_string(h.group()) << "\n";
}

void cmd_chirality(const Options &o, std::ostream &out) {
  Diagram d = catalog::load_diagram(o.diagram);
  BirackTable t = catalog::load_birack(o.birack.empty() ? "q3" : o.birack);
  auto classes = chirality_classes(d, t);
  if (o.json) {
    ordered_json j;
    j["format_version"] = 1;
    j["diagram"] = d.name();
    j["birack"] = t.name();
    j["classes"] = classes;
    out << j.dump() << "\n";
    return;
  }
  std::map<std::vector<long long>, int> histogram;
  for (const auto &c : classes)
    histogram[c]++;
  out << kTextHeader << "diagram " << d.name() << ", H_3^Q(" << t.name() << ")\n";
  for (const auto &[c, count] : histogram) {
    std::string label;
    for (long long v : c)
      label += (label.empty() ? "" : ",") + std::string(v > 0 ? "+" : "") + std::to_string(v);
    out << (label.empty() ? "0" : label) << " x" << count << "\n";
  }
}

void cmd_analyze(const Options &o, std::ostream &out) {
  Diagram d = catalog::load_diagram(o.diagram);
  auto orientations = alternate_orientations(d);
  ChordDiagram cd = chord_diagram(d);
  std::vector<std::string> parity;
  for (const Chord &c : cd.chords)
    parity.push_back(to_string(crossing_parity(cd, c.crossing)));
  std::optional<int> g;
  std::optional<TwoSidedness> sides;
  std::optional<bool> chess;
  if (d.is_connected()) {
    g = genus(d);
    sides = two_sidedness(d);
    chess = chessboard(d).has_value();
  }
  if (o.json) {
    ordered_json j;
    j["format_version"] = 1;
    j["diagram"] = d.name();
    j["gauss_code"] = gauss_code(d);
    j["faces"] = d.all_faces().size();
    j["genus"] = g ? ordered_json(*g) : ordered_json(nullptr);
    j["two_sided"] = sides ? ordered_json(sides->two_sided) : ordered_json(nullptr);
    j["irreducible"] = sides ? ordered_json(sides->irreducible) : ordered_json(nullptr);
    j["chessboard"] = chess ? ordered_json(*chess) : ordered_json(nullptr);
    j["chord_parity"] = parity;
    j["orientations"] = ordered_json::array();
    for (const OrientationAnalysis &a : orientations) {
      ordered_json oj;
      oj["semi_arc_colours"] = a.semi_arc_colour;
      std::vector<std::string> flow;
      for (CrossingFlow f : a.flow)
        flow.push_back(to_string(f));
      oj["crossings"] = flow;
      oj["sinks"] = a.sinks;
      oj["sources"] = a.sources;
      oj["saddles"] = a.saddles;
      oj["good"] = a.good();
      j["orientations"].push_back(oj);
    }
    out << j.dump() << "\n";
    return;
  }
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << kTextHeader;
  out << "diagram       " << d.name() << "\n";
  out << "gauss         " << gauss_code(d) << "\n";
  out << "faces         " << d.all_faces().size() << "\n";
  if (g) {
    out << "genus         " << *g << "\n";
    out << "two_sided     " << yes_no(sides->two_sided) << "\n";
    out << "irreducible   " << yes_no(sides->irreducible) << "\n";
    out << "chessboard    " << yes_no(*chess) << "\n";
  } else {
    out << "genus         n/a (disconnected)\n";
  }
  out << "chord parity ";
  for (const std::string &p : parity)
    out << " " << p;
  out << "\n";
  for (std::size_t i = 0; i < orientations.size(); ++i) {
    const OrientationAnalysis &a = orientations[i];
    out << "orientation " << i << "  sinks " << a.sinks << ", sources " << a.sources << ", saddles " << a.saddles
        << (a.good() ? "  good" : "") << "\n";
  }
  if (orientations.empty())
    out << "no alternate orientation\n";
}

void cmd_report(const Options &o, std::ostream &out) {
  Diagram d = catalog::load_diagram(o.diagram);
  if (o.json)
    out << diagram_report_json(d) << "\n";
  else
    out << diagram_report_text(d);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Finite biracks, knot diagram colourings and birack homology", "knotkit"};
  app.require_subcommand(1, 1);
  Options o;

  auto format_flags = [&](CLI::App *sub) {
    auto *json = sub->add_flag("--json", o.json, "JSON output");
    auto *text = sub->add_flag("--text", o.text, "Text output (default)");
    json->excludes(text);
    sub->add_option("--out", o.out_path, "Write output to a file");
  };
  auto diagram_opt = [&](CLI::App *sub) {
    return sub->add_option("--diagram", o.diagram, "Catalog name or diagram JSON path")->required();
  };
  auto birack_opt = [&](CLI::App *sub) {
    return sub->add_option("--birack", o.birack, "Builtin name or birack JSON path");
  };

  auto *catalog_cmd = app.add_subcommand("catalog", "List builtin diagrams and biracks");
  format_flags(catalog_cmd);

  auto *axioms_cmd = app.add_subcommand("axioms", "Check the birack axioms B1-B3");
  birack_opt(axioms_cmd)->required();
  format_flags(axioms_cmd);

  auto *double_cmd = app.add_subcommand("double", "Write the doubled birack as JSON");
  birack_opt(double_cmd)->required();
  double_cmd->add_option("--out", o.out_path, "Write output to a file");

  auto *colour_cmd = app.add_subcommand("colour", "Count edge (or whole) colourings");
  diagram_opt(colour_cmd);
  birack_opt(colour_cmd)->required();
  colour_cmd->add_flag("--all", o.all, "List every colouring");
  colour_cmd->add_flag("--whole", o.whole, "Whole colourings (edges and faces)");
  format_flags(colour_cmd);

  auto *homology_cmd = app.add_subcommand("homology", "Integer homology of a birack");
  birack_opt(homology_cmd)->required();
  homology_cmd->add_option("--degree", o.degree, "Degree n")->required()->check(CLI::Range(1, 8));
  homology_cmd->add_option("--theory", o.theory, "BR, R, D or Q")->check(CLI::IsMember({"BR", "R", "D", "Q"}));
  format_flags(homology_cmd);

  auto *chirality_cmd = app.add_subcommand("chirality", "Homology classes of all whole colourings");
  diagram_opt(chirality_cmd);
  birack_opt(chirality_cmd);
  format_flags(chirality_cmd);

  auto *analyze_cmd = app.add_subcommand("analyze", "Faces, genus, chord parity, alternate orientations");
  diagram_opt(analyze_cmd);
  format_flags(analyze_cmd);

  auto *report_cmd = app.add_subcommand("report", "Full invariant report of a diagram");
  diagram_opt(report_cmd);
  format_flags(report_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  try {
    if (catalog_cmd->parsed())
      cmd_catalog(o, buffer);
    else if (axioms_cmd->parsed())
      cmd_axioms(o, buffer);
    else if (double_cmd->parsed())
      cmd_double(o, buffer);
    else if (colour_cmd->parsed())
      cmd_colour(o, buffer);
    else if (homology_cmd->parsed())
      cmd_homology(o, buffer);
    else if (chirality_cmd->parsed())
      cmd_chirality(o, buffer);
    else if (analyze_cmd->parsed())
      cmd_analyze(o, buffer);
    else if (report_cmd->parsed())
      cmd_report(o, buffer);
  } catch (const Error &e) {
    err << "knotkit: " << e.what() << "\n";
    return 1;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
    return 0;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file || !(file << buffer.str())) {
    err << "knotkit: cannot write " << o.out_path << "\n";
    return 1;
  }
  return 0;
}

} // namespace knotkit::cli
