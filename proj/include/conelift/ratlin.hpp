#pragma once

#include "conelift/types.hpp"

namespace conelift {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// rank of an integer matrix over the rationals
size_t rational_rank(const Mat& A);

// basis of {x : Ax = 0} over the rationals, entries cleared to
// primitive integer vectors
Mat rational_kernel(const Mat& A);

// unique rational solution of Ax = b; throws degeneracy_error when A
// lacks full column rank or the system is inconsistent
RatVec rational_solve(const Mat& A, const Vec& b);

// clear denominators and divide by the gcd; sign of the input kept
Vec primitive_integer(const RatVec& v);

}  // namespace conelift
