#ifndef HALFINT_MATRIX_HPP
#define HALFINT_MATRIX_HPP

#include <utility>
#include <vector>

#include "halfint/numberfield.hpp"

namespace halfint {

/// Dense row-major matrix over one number field. Immutable after
/// construction; all elimination is exact.
class ExactMatrix {
 public:
  ExactMatrix(FieldPtr field, long rows, long cols, std::vector<FieldElement> entries);

  static ExactMatrix zero(const FieldPtr& field, long rows, long cols);
  static ExactMatrix identity(const FieldPtr& field, long n);
  static ExactMatrix from_rows(const FieldPtr& field, const std::vector<std::vector<FieldElement>>& rows);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  const FieldElement& at(long r, long c) const { return entries_[r * cols_ + c]; }

  bool operator==(const ExactMatrix& rhs) const;

 private:
  friend std::pair<ExactMatrix, std::vector<long>> mat_rref(const ExactMatrix&);
  FieldPtr field_;
  long rows_, cols_;
  std::vector<FieldElement> entries_;
};

/// Reduced row echelon form with deterministic pivoting: first nonzero entry
/// scanning top-to-bottom, left-to-right. Pivot columns come back strictly
/// increasing; pivots are 1 with zeros above and below.
std::pair<ExactMatrix, std::vector<long>> mat_rref(const ExactMatrix& m);

long mat_rank(const ExactMatrix& m);

/// Nullspace basis in rref-canonical form: one vector per free column, that
/// free variable set to 1 and every other free variable 0.
std::vector<std::vector<FieldElement>> mat_nullspace(const ExactMatrix& m);

/// Solves M*x = rhs for square invertible M; throws Singular otherwise.
std::vector<FieldElement> mat_solve(const ExactMatrix& m, const std::vector<FieldElement>& rhs);

}  // namespace halfint

#endif
