#include "sdforge/linalg.hpp"

namespace sdf {

namespace {

// multiply each row through by its denominators so entries become polynomial
void clear_denominators(std::vector<ExactRow>& rows) {
    for (auto& row : rows) {
        CoeffElem scale{Int(1)};
        for (auto& x : row)
            if (!x.den().is_one()) scale *= CoeffElem(x.den(), ParamPoly(Int(1)));
        if (scale.is_one()) continue;
        for (auto& x : row) x *= scale;
    }
}

}  // namespace

NullspaceResult nullspace(std::vector<ExactRow> rows, size_t cols) {
    clear_denominators(rows);
    NullspaceResult out;

    // fraction-free forward elimination (Bareiss one-step): after each pivot
    // the previous pivot divides out exactly
    CoeffElem prev_pivot{Int(1)};
    size_t r = 0;
    std::vector<size_t> pivot_of_row;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev_pivot;
            rows[i][c] = CoeffElem{};
        }
        prev_pivot = rows[r][c];
        out.pivot_cols.push_back(c);
        pivot_of_row.push_back(c);
        ++r;
    }
    out.rank = r;

    // back-substitute to reduced form (field divisions; sizes are tame here)
    for (size_t i = r; i-- > 0;) {
        size_t pc = pivot_of_row[i];
        CoeffElem inv = rows[i][pc].inverse();
        for (size_t j = pc; j < cols; ++j) rows[i][j] *= inv;
        for (size_t k = 0; k < i; ++k) {
            CoeffElem f = rows[k][pc];
            if (f.is_zero()) continue;
            for (size_t j = pc; j < cols; ++j) rows[k][j] = rows[k][j] - f * rows[i][j];
        }
    }

    // canonical basis: one vector per free column
    std::vector<bool> is_pivot(cols, false);
    for (auto c : out.pivot_cols) is_pivot[c] = true;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        ExactRow v(cols, CoeffElem{});
        v[f] = CoeffElem(Int(1));
        for (size_t i = 0; i < r; ++i) v[pivot_of_row[i]] = -rows[i][f];
        out.basis.push_back(std::move(v));
    }
    return out;
}

size_t row_rank(std::vector<ExactRow> rows, size_t cols) {
    return nullspace(std::move(rows), cols).rank;
}

bool annihilates(const std::vector<ExactRow>& rows, const ExactRow& v) {
    for (auto& row : rows) {
        CoeffElem dot;
        for (size_t j = 0; j < row.size(); ++j) dot += row[j] * v[j];
        if (!dot.is_zero()) return false;
    }
    return true;
}

}  // namespace sdf
