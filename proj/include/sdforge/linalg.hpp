#pragma once
// Exact linear algebra over the coefficient field: fraction-free elimination
// with a canonical reduced nullspace basis.

#include "sdforge/coeff.hpp"

#include <vector>

namespace sdf {

using ExactRow = std::vector<CoeffElem>;

struct NullspaceResult {
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
    std::vector<ExactRow> basis;  // canonical: one vector per free column, unit there
};

// Nullspace of the row system rows * v = 0. Bareiss-style forward phase on
// denominator-cleared rows, division back-substitution for the reduced form.
NullspaceResult nullspace(std::vector<ExactRow> rows, size_t cols);

// rank only
size_t row_rank(std::vector<ExactRow> rows, size_t cols);

// v is annihilated by every row
bool annihilates(const std::vector<ExactRow>& rows, const ExactRow& v);

}  // namespace sdf
