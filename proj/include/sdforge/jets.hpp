#pragma once
// Jet spaces of a variety at a point as exact nullspaces, and jet-based
// separation of varieties.

#include "sdforge/groebner.hpp"
#include "sdforge/linalg.hpp"

#include <optional>

namespace sdf {

struct JetSpace {
    uint32_t order = 0;
    Point point;
    std::vector<Variable> ambient;
    std::vector<std::vector<uint32_t>> frame;  // multi-indices 1 <= |s| <= m
    std::vector<ExactRow> rows;                // Taylor-coefficient constraints
    std::vector<ExactRow> basis;               // canonical nullspace basis
    size_t dim() const { return basis.size(); }
};

// Nullspace of the rows D_s((X-a)^alpha * g)(a) over all generators g and
// monomial multipliers with |alpha| <= multiplier_bound (default m-1; the
// enlargement hook exists for the sufficiency validation).
JetSpace jet_space(const IdealPresentation& V, const Point& a, uint32_t m);
JetSpace jet_space(const IdealPresentation& V, const Point& a, uint32_t m,
                   uint32_t multiplier_bound);

struct JetSeparation {
    bool separated = false;
    uint32_t order = 0;  // smallest order at which the jet spaces differ
};

// Smallest m <= m_max with J^m(U)_a != J^m(V)_a as subspaces, compared by
// mutual containment against the constraint rows.
JetSeparation jets_distinguish(const IdealPresentation& U, const IdealPresentation& V,
                               const Point& a, uint32_t m_max);

}  // namespace sdf
