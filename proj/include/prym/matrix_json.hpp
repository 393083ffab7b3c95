#pragma once

#include "prym/int_mat.hpp"
#include "prym/report.hpp"

#include <string>

namespace prym {

// Wire format: {"rows": n, "cols": m, "entries": [[...], ...]} with exact
// integer entries; values outside 64 bits travel as decimal strings.
// Floating-point entries are rejected, including large integer literals
// that only parse as doubles.
IntMat matrix_from_json(const Json& j);
IntMat parse_matrix(const std::string& text);    // throws MalformedInput
IntMat load_matrix_file(const std::string& path);

Json matrix_to_json(const IntMat& m);

} // namespace prym
