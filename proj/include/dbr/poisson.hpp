#pragma once

#include "dbr/flow.hpp"

namespace dbr {

// Monomial multivector: coefficient exponents per coordinate and a strictly
// increasing set of derivation indices (0-based coordinates).
struct MvKey {
    std::vector<int> expo;
    std::vector<int> idx;
    auto operator<=>(const MvKey&) const = default;
};

// Polynomial multivector field on R^dim with exact coefficients. Degree of
// a monomial in h is |idx| - 1.
struct PolyMv {
    int dim = 0;
    std::map<MvKey, Rat> terms;

    explicit PolyMv(int d = 0) : dim(d) {}
    bool is_zero() const { return terms.empty(); }
    void add_term(const MvKey& k, const Rat& c);

    PolyMv& operator+=(const PolyMv& o);
    PolyMv& operator-=(const PolyMv& o);
    PolyMv& operator*=(const Rat& c);
    friend PolyMv operator+(PolyMv a, const PolyMv& b) { return a += b; }
    friend PolyMv operator-(PolyMv a, const PolyMv& b) { return a -= b; }
    friend PolyMv operator*(const Rat& c, PolyMv m) { return m *= c; }
    friend bool operator==(const PolyMv& a, const PolyMv& b)
    {
        return a.dim == b.dim && a.terms == b.terms;
    }
};

// Graded product (wedge on the derivation part).
PolyMv mv_product(const PolyMv& a, const PolyMv& b);

// Schouten bracket, the odd Poisson bracket of the pairs (x_i, dx_i):
// [F,G] = sum_i dF/dxi_r . dG/dx_i - dF/dx_i_r . dG/dxi_l.
// The convention is pinned once and for all by [x d/dx, x] = x; with it,
// [Dx^Dy, x] = -Dy.
PolyMv schouten(const PolyMv& a, const PolyMv& b);

// Submanifold S = zero locus of the normal coordinates (the last
// dim - tangent_count ones). normal_trunc is the power of the vanishing
// ideal cut off (the D of the formal neighbourhood); tangential_trunc caps
// polynomial degree in the tangent coordinates.
struct SubmanifoldContext {
    int dim = 0;
    int tangent_count = 0;
    int normal_trunc = 1;     // D
    int tangential_trunc = 1; // D_tan

    bool is_normal(int coord) const { return coord >= tangent_count; }
    int normal_degree(const MvKey& k) const;
    int tangential_degree(const MvKey& k) const;
    std::string coord_name(int coord) const;
    std::string monomial_name(const MvKey& k) const;
};

// Finite truncated window of the formal-neighbourhood algebra. The window
// keeps monomials with normal degree <= D, tangential degree <= D_tan and
// no mixed normal*tangential coefficients; for the supported parameters
// (D <= 1, D_tan <= 1) this span is closed under the bracket, so the table
// is an honest graded Lie algebra and validate_gla holds exactly.
struct PoissonModel {
    SubmanifoldContext ctx;
    VAlgebra V;
    std::vector<MvKey> keys; // basis index -> monomial

    PolyMv to_poly(const Vec& v) const;
    // Window representation; terms of normal degree > D are dropped
    // (ideal-quotient semantics). Errors distinguish tangential overflow
    // from a genuine window escape.
    Vec to_vec(const PolyMv& p) const;
    // Projection onto Gamma(S, Lambda NS)[1] at the polynomial level:
    // restrict to S and keep purely normal derivation indices.
    PolyMv proj_a_poly(const PolyMv& p) const;
};

PoissonModel build_valgebra(const SubmanifoldContext& ctx);

struct CoisotropyResult {
    Report poisson_check;  // [pi,pi] = 0 in the truncated neighbourhood
    bool coisotropic = false;
    Vec projection;        // Pi_a[pi]
};

CoisotropyResult is_coisotropic(const PoissonModel& model, const PolyMv& pi);

// Derived brackets of ad([pi]) built to arity n_max + 1 (so Jacobiator
// checks run to n_max), plus the structural post-checks: flat iff
// coisotropic, and D1.D1 = 0 in the flat case.
BracketFamily pinfty_brackets(const PoissonModel& model, const PolyMv& pi, int n_max,
                              Report* post = nullptr);

// Inner time derivation from a polynomial vector field series whose
// coefficients are tangent to S. Rejects non-tangent coefficients and
// generators whose flow leaves the finite window.
TimeDerivation embedding_flow(const PoissonModel& model, const std::vector<PolyMv>& field);

// Per-slot Leibniz rule of each D^n (n = 1..3) over the product of
// Gamma(S, Lambda NS), evaluated at the polynomial level on random
// triples. Randomness is seeded and deterministic.
Report check_multiderivation(const PoissonModel& model, const PolyMv& pi, int arity_top,
                             int trials, unsigned long seed);

// Free-bracket consistency of the whole table: the polynomial-level
// bracket reduced into the window must equal the stored table entry.
Report check_truncation_consistency(const PoissonModel& model);

} // namespace dbr
