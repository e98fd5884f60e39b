#pragma once

#include <iosfwd>
#include <string>

#include "conelift/types.hpp"

namespace conelift {

// matrix files: "m n" header, then m rows of n decimal integers;
// '#'-prefixed lines are comments
Mat read_matrix(std::istream& in);
Mat read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const Mat& rows, size_t cols);

// "v1,v2,...,vn" with "inf" for unbounded coordinates
Bounds parse_bounds(const std::string& text);

}  // namespace conelift
