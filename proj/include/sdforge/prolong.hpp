#pragma once
// Prolongation varieties tau_m(V), the normal-form predicate, dominance
// checking, and the DCFA axiom-instance verifier.

#include "sdforge/operators.hpp"

#include <optional>
#include <span>
#include <string>

namespace sdf {

// The formal derivation on prolongation frames: base coordinates map to
// level-1 coordinates, level-k to level-(k+1), coefficients through their
// declared d_image. Applied to G(X, Y_1..Y_i) it yields
// J_G * (Y_1..Y_{i+1})^t + G^D.
Poly prolongation_derivative(const Poly& p, const ParamTable& params);

struct ProlongedVariety {
    IdealPresentation base;
    uint32_t level = 0;
    std::vector<std::vector<Poly>> level_gens;  // level_gens[k] = level-k generators
    IdealPresentation presentation;             // over (X, Y_1, ..., Y_m)

    // presentation of the first `m` levels (m <= level)
    IdealPresentation slice(uint32_t m) const;
};

// Generators of tau_m(V) built by the level recursion; level k is the formal
// derivative of level k-1.
ProlongedVariety tau(const IdealPresentation& V, uint32_t m, const ParamTable& params);

struct NormalFormReport {
    bool normal = true;
    // witness of the first failure
    std::optional<uint32_t> fail_level;
    std::optional<Poly> fail_generator;
    std::optional<Poly> defect;  // normal form of the failing image modulo I(W)
};

// Checks Def.-style normal form of W presented inside a prolongation frame:
// for each i < m and each generator G of the elimination ideal
// I(W) cap K[X, Y_1..Y_i], the formal derivative of G must lie in I(W).
NormalFormReport normal_form_check(const IdealPresentation& W, const ParamTable& params,
                                   Budget& budget);
NormalFormReport normal_form_check(const IdealPresentation& W, const ParamTable& params);

struct DominanceReport {
    bool dominant = true;
    std::string detail;  // failing generator / direction when not dominant
};

// Projection of W onto the target coordinates is dominant iff the
// elimination ideal equals I(V). Stated under the callers' irreducibility
// assertion.
DominanceReport dominance_check(const IdealPresentation& W, const IdealPresentation& V,
                                std::span<const Variable> target, Budget& budget);
DominanceReport dominance_check(const IdealPresentation& W, const IdealPresentation& V,
                                std::span<const Variable> target);

enum class Verdict { True, False, Inconclusive };

struct ConditionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::string detail;
};

struct AxiomReport {
    ConditionReport a_onto_v;       // U dominates V
    ConditionReport a_onto_vsigma;  // U dominates V^sigma
    ConditionReport b_onto_u;       // W dominates U
    ConditionReport c_twist;        // pi_1(W)^sigma = pi_2(W)
    NormalFormReport nf_pi1, nf_pi2;
    std::optional<size_t> dim_v, dim_w;
    std::optional<int64_t> suggested_m;  // dim W - dim V + 1
    bool advisory_ran = false;
    ScanResult advisory;  // hidden-relation findings, ADVISORY only

    bool abc_true() const {
        return a_onto_v.verdict == Verdict::True && a_onto_vsigma.verdict == Verdict::True &&
               b_onto_u.verdict == Verdict::True && c_twist.verdict == Verdict::True;
    }
};

// Verifies conditions (a)-(c) of the DCFA axiom scheme on an instance
// (U, V, W) plus the normal-form sub-checks, dimension data, and an optional
// consequence scan of the induced (sigma,D)-system. Condition (d) is
// semantic and only reflected through the dimension data and the scan.
//
// Frames: V over X; `v_sigma_frame` lists the coordinates X' of V^sigma in
// the order of V's ambient; U over (X, X'); W over (X, X', X@1, X'@1).
AxiomReport dcfa_axiom_check(const IdealPresentation& V, std::span<const Variable> v_sigma_frame,
                             const IdealPresentation& U, const IdealPresentation& W,
                             uint32_t scan_depth, const ParamTable& params, Budget& budget);

}  // namespace sdf
