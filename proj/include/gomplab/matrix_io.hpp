#pragma once

#include <string>

#include "gomplab/types.hpp"

namespace gomplab {

/// Plain-text matrix format: first line "m n", then m lines of n
/// decimal values with 17 significant digits, space separated. The
/// round trip is bit exact for finite doubles.
void write_matrix(const std::string& path, const Matrix& matrix);
Matrix read_matrix(const std::string& path);

/// %.17g formatting shared by the matrix and CSV writers.
std::string format_double(double v);

} // namespace gomplab
