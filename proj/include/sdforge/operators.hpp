#pragma once
// The sigma and D actions on polynomials and varieties, rewrite
// normalization of sigma-powers, and the hidden-relation consequence scan.

#include "sdforge/groebner.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace sdf {

// Leibniz extension of D. Variables must be of SigmaD kind (D raises the
// D-order); coefficients are mapped through their declared d_image.
Poly apply_d(const Poly& p, const ParamTable& params);

// Ring endomorphism raising sigma-powers by k; coefficients through
// sigma_image iterated k times.
Poly apply_sigma(const Poly& p, uint32_t k, const ParamTable& params);

// V with sigma applied to the coefficients of its generators. The ambient
// coordinates of the result are formally the sigma-shifted copies of V's;
// the frame keeps V's variable names.
IdealPresentation variety_sigma(const IdealPresentation& V, const ParamTable& params);

// Oriented rewrite sigma^s D^t x -> rhs with every sigma-power of rhs
// strictly below s. Applies to any sigma^i D^j x with i >= s, j >= t via the
// derived image sigma^(i-s) D^(j-t)(rhs).
struct RewriteRule {
    Variable lhs;
    Poly rhs;

    RewriteRule(Variable lhs_var, Poly rhs_poly);
};

enum class ReduceStrategy { Outermost, Random };

// Unique normal form with all rewritable sigma-powers eliminated. The
// strategy only picks which occurrence fires next; with nested rule sets the
// result is strategy-independent (tested), and any terminating order is
// sound because each step strictly lowers the sigma-power multiset.
Poly sigma_reduce(const Poly& p, const std::vector<RewriteRule>& rules, const ParamTable& params,
                  ReduceStrategy strategy = ReduceStrategy::Outermost, uint64_t seed = 0);

// A finite system of (sigma,D)-polynomial equations over declared base
// variables, optionally carrying rewrite rules.
struct SystemSpec {
    std::vector<std::string> bases;  // base variable names
    std::vector<Poly> generators;
    std::vector<RewriteRule> rules;
};

struct ScanResult {
    std::vector<Poly> new_relations;     // window generators outside the input ideal
    IdealPresentation window_ideal;      // full consequence ideal on the window
    std::vector<Variable> window;
    bool complete = true;                // false when the budget cut the closure short
};

// Closes the generators under apply_d / apply_sigma up to `depth` operator
// applications, normalizes by the rules, and returns the generators of the
// consequence ideal restricted to the original variable window that are not
// already members of the input-generated ideal there.
ScanResult hidden_relation_scan(const SystemSpec& S, uint32_t depth, const ParamTable& params,
                                Budget& budget);
ScanResult hidden_relation_scan(const SystemSpec& S, uint32_t depth, const ParamTable& params);

}  // namespace sdf
