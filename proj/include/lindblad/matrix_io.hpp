#pragma once

#include <iosfwd>
#include <string>

#include "lindblad/core.hpp"

namespace lindblad {

// Text format:
//   line 1: D
//   then D lines, each with D entries written as "re im" pairs.
// Values are written with 17 significant digits so that parsing recovers the
// exact doubles.

FockOperator read_matrix(std::istream& in);
FockOperator read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const FockOperator& op);
std::string format_double(double value, int precision = 17);

}  // namespace lindblad
