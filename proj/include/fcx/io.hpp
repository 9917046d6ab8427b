#pragma once

#include "fcx/complex.hpp"

#include <iosfwd>
#include <string>

namespace fcx {

// Complex file format:
//   n 6            header, required first
//   1 2 3          one facet per line, 1-based vertices
//   456            digit shorthand, accepted when n <= 9
//   # comment      comment and blank lines are skipped
// A file with a header and no facet lines is the empty complex {∅};
// the void complex has no serialization. Duplicate facets (as sets)
// are rejected. Throws parse_error with the offending line number.
Complex parse_complex(std::istream& in);
Complex parse_complex_file(const std::string& path);

// Canonical serialization: header, then facets in canonical order,
// spaced form. Round trips through parse_complex.
std::string write_complex(const Complex& c);
void write_complex_file(const Complex& c, const std::string& path);

} // namespace fcx
