#pragma once

#include "dbr/report.hpp"
#include "dbr/series.hpp"
#include "dbr/symword.hpp"

#include <set>

namespace dbr {

// Finite graded Lie algebra given by structure constants. The table stores
// [e_i, e_j] for i <= j only; the other half is derived through graded
// skew-symmetry and never duplicated.
struct GLA {
    GradedBasis basis;
    std::map<std::pair<int, int>, Vec> table;

    void set_bracket(int i, int j, Vec value);
    Vec bracket_basis(int i, int j) const;
    Vec bracket(const Vec& x, const Vec& y) const;
    Series<Vec> bracket(const Series<Vec>& x, const Series<Vec>& y) const;
};

// Degree homogeneity of every entry, forced vanishing of even diagonals,
// and the graded Jacobi identity on all basis triples.
Report validate_gla(const GLA& A);

// V-algebra: basis-aligned splitting h = a + p with a spanned by the chosen
// index subset. Projections are coordinate projections.
struct VAlgebra {
    GLA gla;
    std::vector<int> a_indices; // ascending
    std::vector<bool> in_a;     // size of basis

    static VAlgebra make(GLA gla, std::vector<int> a_indices);

    const GradedBasis& basis() const { return gla.basis; }
    bool is_a(int i) const { return in_a[i]; }
    Vec proj_a(const Vec& v) const;
    Vec proj_p(const Vec& v) const;
    Series<Vec> proj_a(const Series<Vec>& v) const;
    std::vector<int> p_indices() const;
};

// [a,a] = 0 and [p,p] contained in p, plus the projection identity
// Pi[x,y] = Pi[Pi x,y] + Pi[x,Pi y] on all basis pairs as an independent
// cross-check of the same condition.
Report validate_valgebra(const VAlgebra& V);

// Signed Leibniz rule L[x,y] = [Lx,y] + (-1)^{n|x|}[x,Ly] on basis pairs.
Report check_derivation(const GLA& A, const LinMap& L);

// Adapted derivation E = ehat + [P, .]. The decomposition is part of the
// data: derived brackets for n >= 1 see only the sum, the 0-ary one sees P.
struct DerivationSpec {
    int degree = 1;
    LinMap ehat;   // must preserve p and satisfy the Leibniz rule
    Vec p_element; // the P of the inner part

    Vec apply(const GLA& A, const Vec& x) const;
    Vec apply_basis(const GLA& A, int i) const;
    LinMap as_map(const GLA& A) const;
};

// ehat is a derivation, ehat(p) in p (the kernel form of Def-level
// adaptedness; the projection form is recomputed as a cross-check), and P
// is homogeneous of the derivation degree.
Report check_adapted(const VAlgebra& V, const DerivationSpec& E);

// E' with ehat' = ehat + ad(Pi_p P) and P' = Pi_a P; the same derivation as
// a map, and the same derived brackets.
DerivationSpec decompose_wlog(const VAlgebra& V, const DerivationSpec& E);

struct McResult {
    bool ok = false;
    std::string witness; // first failing basis element, or degree complaint
};

// Degree 1 and E(E(e_i)) = 0 for every basis element.
McResult is_maurer_cartan(const VAlgebra& V, const DerivationSpec& E);

// Graded commutator [E1, E2] with its natural decomposition:
// ehat = [ehat1, ehat2], P = ehat1(P2) - (-1)^{d1 d2} ehat2(P1) + [P1, P2].
DerivationSpec derivation_commutator(const GLA& A, const DerivationSpec& E1,
                                     const DerivationSpec& E2);

// E . E = (1/2)[E, E] for odd E, with decomposition
// (ehat . ehat, ehat(P) + (1/2)[P, P]).
DerivationSpec derivation_square(const GLA& A, const DerivationSpec& E);

// Bracket preservation and Pi_{a2} Phi = Phi Pi_{a1} on the basis.
Report check_v_morphism(const LinMap& phi, const VAlgebra& V1, const VAlgebra& V2);

// E2 Phi = Phi E1 on the basis and Pi_{a2}(P2 - Phi P1) = 0.
Report check_phi_related(const LinMap& phi, const VAlgebra& V1, const VAlgebra& V2,
                         const DerivationSpec& E1, const DerivationSpec& E2);

} // namespace dbr
