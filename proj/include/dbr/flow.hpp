#pragma once

#include "dbr/linfty.hpp"

#include <optional>

namespace dbr {

// Degree-0 derivation of h[[t]] given by its t-coefficients. A coefficient
// may be tagged inner with an explicit generator; only then does the
// associated coderivation M(t) get a 0-ary part.
struct TimeDerivation {
    std::vector<LinMap> coeff;                // index = t-order
    std::vector<std::optional<Vec>> inner;    // generator when tagged inner

    int order() const { return static_cast<int>(coeff.size()) - 1; }
    Series<LinMap> as_series(int N) const;
};

// Each coefficient satisfies the Leibniz rule, has degree 0, respects
// Pi_a m Pi_a = Pi_a m (it maps p into p), and matches its inner tag.
Report validate_time_derivation(const VAlgebra& V, const TimeDerivation& m);

struct FlowAutomorphism {
    Series<LinMap> phi;
    Series<LinMap> phi_inv;
};

// Solves d/dt phi = m_t . phi, phi_0 = id, by the coefficient recursion
// (k+1) phi_{k+1} = sum_{i+j=k} m_i . phi_j. Rejects m that fails
// validation before integrating.
FlowAutomorphism integrate_flow(const VAlgebra& V, const TimeDerivation& m, int N);

// Flow equation, bracket-automorphism property on basis pairs, and
// p-preservation, all coefficientwise mod t^{N+1}.
Report check_flow(const VAlgebra& V, const TimeDerivation& m, const FlowAutomorphism& flow);

struct DerivationSeries {
    std::vector<DerivationSpec> coeff;
    int order() const { return static_cast<int>(coeff.size()) - 1; }
};

// E_t = phi . ehat . phi^{-1} + [phi_t(P), .] coefficientwise.
DerivationSeries transport_mc(const VAlgebra& V, const DerivationSpec& E,
                              const FlowAutomorphism& flow);

// Every coefficient adapted, E_t of the original degree, E_t.E_t = 0 mod
// t^{N+1}.
Report check_transport(const VAlgebra& V, const DerivationSeries& Et);

// A t-series of bracket families; index = t-order.
using FamilySeries = std::vector<BracketFamily>;

// Q(t): derived brackets of the transported derivation, coefficientwise.
FamilySeries transported_families(const VAlgebra& V, const DerivationSeries& Et, int n_max);

// M(t): derived brackets of the degree-0 derivation m_t, as a series at
// truncation order N. The 0-ary part is Pi_a of the generator for
// inner-tagged coefficients and zero otherwise.
FamilySeries build_M(const VAlgebra& V, const TimeDerivation& m, int n_max, int N);

Series<Vec> family_eval_series(const FamilySeries& fams, const SymWord& w);

// One-parameter coalgebra morphism U(t): per-word component series.
struct MorphismSeries {
    int order = 0;
    int arity_max = 0;
    std::vector<std::map<SymWord, Series<Vec>>> comps;

    MorphismSeries(int N, int arity) : order(N), arity_max(arity), comps(arity) {}

    Series<Vec> eval_word(const SymWord& w) const;
    Series<Vec> eval_letters(const GradedBasis& basis, const std::vector<int>& letters) const;
    // U(t) at one t-order applied to a word, orders convolved across blocks.
    std::vector<SymVec> apply(const VAlgebra& V, const SymWord& w) const;
    CoalgMorphism at_order(int k) const;
};

// The recursive flow morphism: U^1 = Pi_a phi_t, and U^n the nested-bracket
// recursion with weights 1/(n k! mu_1! ... mu_k!) over all permutations and
// compositions of n-1.
MorphismSeries build_U(const VAlgebra& V, const FlowAutomorphism& flow, int n_max, int N);

// The same morphism obtained by integrating the flow ODE dU/dt = M(t).U(t)
// coefficient by coefficient; the uniqueness cross-check demands bit-exact
// agreement with build_U.
MorphismSeries build_U_by_ode(const VAlgebra& V, const TimeDerivation& m, int n_max, int N);

// Right-hand side of the component flow equation for U:
// sum over sigma, k >= 1, l_1+...+l_k = n of
// sign(sigma)/(k! l_1!...l_k!) D^k_{m_t}(U^{l_1}(...) x ... x U^{l_k}(...)).
Series<Vec> eval_flow_rhs(const VAlgebra& V, const TimeDerivation& m,
                          const MorphismSeries& U, const SymWord& w);

// dU^n/dt = flow rhs, coefficientwise mod t^N, every word up to U's arity.
Report check_U_ode(const VAlgebra& V, const TimeDerivation& m, const MorphismSeries& U);

// dQ/dt = M.Q - Q.M on words up to n_max, coefficientwise mod t^N.
Report check_Q_ode(const VAlgebra& V, const FamilySeries& Q, const FamilySeries& M, int n_max);

// pr.(Q(t).U(t) - U(t).Q(0)) = 0 on words up to n_max mod t^{N+1}; the
// empty word carries the 0-ary component of Z.
Report check_Z(const VAlgebra& V, const MorphismSeries& U, const FamilySeries& Qt,
               const BracketFamily& Q0, int n_max);

// Delta . U = (U x U) . Delta on words up to n_max, every t-order.
Report check_U_coalgebra(const VAlgebra& V, const MorphismSeries& U, int n_max);

// Three independent evaluations of the same map: the composition-weighted
// sum, the recursion-weighted sum, and the set-partition ("boxes") sum.
// All three must agree on the word.
Report appendix_identity(const VAlgebra& V, const TimeDerivation& m,
                         const MorphismSeries& U, const SymWord& w);

} // namespace dbr
