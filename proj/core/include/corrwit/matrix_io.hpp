#pragma once

#include <iosfwd>
#include <string>

#include "corrwit/complex_matrix.hpp"

namespace corrwit {

/// Matrix file format: JSON object {"dim": n, "re": [[...]], "im": [[...]]},
/// row-major, entries as decimal floats, dim 2 or 4.
ComplexMatrix read_matrix(std::istream& in, const std::string& source_name = "<stream>");
ComplexMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

} // namespace corrwit
