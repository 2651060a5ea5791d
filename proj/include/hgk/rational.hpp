#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hgk/errors.hpp"

namespace hgk {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // rows

Rat rat_parse(const std::string& text);  // "p/q" or integer
std::string rat_string(const Rat& r);

RatMat mat_identity(std::size_t n);
RatVec mat_apply(const RatMat& A, const RatVec& x);          // rows * x
RatMat mat_mul(const RatMat& A, const RatMat& B);
RatMat mat_transpose(const RatMat& A);

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(RatMat& A);
std::size_t rank(RatMat A);

// basis of { x : A x = 0 }, rows of the result
RatMat kernel_basis(const RatMat& A);

// canonical basis of the row space (rref with zero rows dropped)
RatMat row_space_echelon(RatMat A);
bool same_row_space(const RatMat& A, const RatMat& B);
bool in_row_space(const RatMat& A, const RatVec& v);

// rows spanning the intersection of the two row spaces
RatMat intersect_row_spaces(const RatMat& A, const RatMat& B);

}  // namespace hgk
