#include "halfint/matrix.hpp"

#include "halfint/errors.hpp"

namespace halfint {

ExactMatrix::ExactMatrix(FieldPtr field, long rows, long cols, std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 0 || cols_ < 0) fail(Errc::BadArgument, "negative matrix dimension");
  if (static_cast<long>(entries_.size()) != rows_ * cols_)
    fail(Errc::ShapeMismatch, "entry count does not match rows*cols");
  for (const auto& e : entries_)
    if (!same_field(e.field(), field_)) fail(Errc::FieldMismatch, "matrix entry in a different field");
}

ExactMatrix ExactMatrix::zero(const FieldPtr& field, long rows, long cols) {
  return ExactMatrix(field, rows, cols,
                     std::vector<FieldElement>(rows * cols, FieldElement::zero(field)));
}

ExactMatrix ExactMatrix::identity(const FieldPtr& field, long n) {
  std::vector<FieldElement> e(n * n, FieldElement::zero(field));
  for (long i = 0; i < n; ++i) e[i * n + i] = FieldElement::one(field);
  return ExactMatrix(field, n, n, std::move(e));
}

ExactMatrix ExactMatrix::from_rows(const FieldPtr& field,
                                   const std::vector<std::vector<FieldElement>>& rows) {
  long r = static_cast<long>(rows.size());
  long c = r == 0 ? 0 : static_cast<long>(rows[0].size());
  std::vector<FieldElement> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (static_cast<long>(row.size()) != c) fail(Errc::ShapeMismatch, "ragged rows");
    for (const auto& e : row) entries.push_back(e);
  }
  return ExactMatrix(field, r, c, std::move(entries));
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && same_field(field_, rhs.field_) &&
         entries_ == rhs.entries_;
}

std::pair<ExactMatrix, std::vector<long>> mat_rref(const ExactMatrix& m) {
  ExactMatrix r = m;
  auto& e = r.entries_;
  const long rows = m.rows(), cols = m.cols();
  auto at = [&](long i, long j) -> FieldElement& { return e[i * cols + j]; };

  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < cols && row < rows; ++col) {
    long p = -1;
    for (long i = row; i < rows; ++i) {
      if (!at(i, col).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (long j = 0; j < cols; ++j) std::swap(at(p, j), at(row, j));
    FieldElement inv = at(row, col).inverse();
    for (long j = col; j < cols; ++j) at(row, j) = at(row, j) * inv;
    for (long i = 0; i < rows; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      FieldElement factor = at(i, col);
      for (long j = col; j < cols; ++j) at(i, j) = at(i, j) - factor * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

long mat_rank(const ExactMatrix& m) { return static_cast<long>(mat_rref(m).second.size()); }

std::vector<std::vector<FieldElement>> mat_nullspace(const ExactMatrix& m) {
  auto [r, pivots] = mat_rref(m);
  const long cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (long p : pivots) is_pivot[p] = true;

  std::vector<std::vector<FieldElement>> basis;
  for (long j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<FieldElement> v(cols, FieldElement::zero(m.field()));
    v[j] = FieldElement::one(m.field());
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<long>(i), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FieldElement> mat_solve(const ExactMatrix& m, const std::vector<FieldElement>& rhs) {
  if (m.rows() != m.cols()) fail(Errc::Singular, "mat_solve requires a square matrix");
  if (static_cast<long>(rhs.size()) != m.rows())
    fail(Errc::ShapeMismatch, "right-hand side length does not match matrix");
  const long n = m.rows();
  if (n == 0) return {};
  std::vector<FieldElement> aug;
  aug.reserve(n * (n + 1));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) aug.push_back(m.at(i, j));
    aug.push_back(rhs[i]);
  }
  ExactMatrix a(m.field(), n, n + 1, std::move(aug));
  auto [r, pivots] = mat_rref(a);
  if (static_cast<long>(pivots.size()) < n || pivots.back() == n)
    fail(Errc::Singular, "matrix is singular");
  std::vector<FieldElement> x;
  x.reserve(n);
  for (long i = 0; i < n; ++i) x.push_back(r.at(i, n));
  return x;
}

}  // namespace halfint
