#include "hgk/rational.hpp"

#include <algorithm>

namespace hgk {

Rat rat_parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ParseError("empty rational");
  try {
    Rat r(t);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + text + "'");
  }
}

std::string rat_string(const Rat& r) { return r.get_str(); }

RatMat mat_identity(std::size_t n) {
  RatMat A(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) A[i][i] = 1;
  return A;
}

RatVec mat_apply(const RatMat& A, const RatVec& x) {
  RatVec y(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (A[i][j] != 0 && x[j] != 0) y[i] += A[i][j] * x[j];
  return y;
}

RatMat mat_mul(const RatMat& A, const RatMat& B) {
  const std::size_t n = A.size(), m = B[0].size(), k = B.size();
  RatMat C(n, RatVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (A[i][t] != 0)
        for (std::size_t j = 0; j < m; ++j)
          if (B[t][j] != 0) C[i][j] += A[i][t] * B[t][j];
  return C;
}

RatMat mat_transpose(const RatMat& A) {
  if (A.empty()) return {};
  RatMat T(A[0].size(), RatVec(A.size(), 0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
  return T;
}

std::vector<std::size_t> rref(RatMat& A) {
  std::vector<std::size_t> pivots;
  if (A.empty()) return pivots;
  const std::size_t rows = A.size(), cols = A[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && A[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(A[pivot], A[r]);
    Rat inv = 1 / A[r][c];
    for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMat A) { return rref(A).size(); }

RatMat kernel_basis(const RatMat& A) {
  if (A.empty()) return {};
  const std::size_t cols = A[0].size();
  RatMat M = A;
  std::vector<std::size_t> pivots = rref(M);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RatMat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat row_space_echelon(RatMat A) {
  rref(A);
  RatMat out;
  for (auto& row : A) {
    bool zero = std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; });
    if (!zero) out.push_back(std::move(row));
  }
  return out;
}

bool same_row_space(const RatMat& A, const RatMat& B) {
  return row_space_echelon(A) == row_space_echelon(B);
}

bool in_row_space(const RatMat& A, const RatVec& v) {
  RatMat M = A;
  M.push_back(v);
  return rank(std::move(M)) == rank(A);
}

RatMat intersect_row_spaces(const RatMat& A, const RatMat& B) {
  // rows x of span(A) with x in span(B): solve with the kernel of [A^T | -B^T]
  RatMat EA = row_space_echelon(A), EB = row_space_echelon(B);
  if (EA.empty() || EB.empty()) return {};
  const std::size_t cols = EA[0].size();
  const std::size_t na = EA.size(), nb = EB.size();
  RatMat M(cols, RatVec(na + nb, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < na; ++i) M[j][i] = EA[i][j];
    for (std::size_t i = 0; i < nb; ++i) M[j][na + i] = -EB[i][j];
  }
  RatMat combos = kernel_basis(M);
  RatMat out;
  for (const RatVec& combo : combos) {
    RatVec x(cols, 0);
    for (std::size_t i = 0; i < na; ++i)
      if (combo[i] != 0)
        for (std::size_t j = 0; j < cols; ++j) x[j] += combo[i] * EA[i][j];
    out.push_back(std::move(x));
  }
  return row_space_echelon(std::move(out));
}

}  // namespace hgk
