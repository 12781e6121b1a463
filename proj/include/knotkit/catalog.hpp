#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotkit/algebra.hpp"
#include "knotkit/diagram.hpp"

namespace knotkit::catalog {

/// Builtin diagram names in listing order.
std::vector<std::string> diagram_names();
/// Throws BadParameter for an unknown name.
Diagram diagram(std::string_view name);
/// Pairs of catalog diagrams that represent the same knot.
std::vector<std::pair<std::string, std::string>> equivalence_pairs();

/// Canonical builtin birack names: q3, bw, twist<n>, dihedral<m>,
/// alexander:<m>:<lambda>:<mu>. The listing shows representative sizes.
std::vector<std::string> birack_names();
/// Resolves a builtin birack name (aliases three_colour, black_white);
/// throws BadParameter.
BirackTable birack(std::string_view name);

/// True when the argument must be read from a file: it contains '/' or '.'.
bool looks_like_path(std::string_view arg);

/// Builtin name or JSON file path.
Diagram load_diagram(std::string_view arg);
BirackTable load_birack(std::string_view arg);

} // namespace knotkit::catalog
