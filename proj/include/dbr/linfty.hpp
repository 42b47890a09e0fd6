#pragma once

#include "dbr/gla.hpp"

namespace dbr {

// Family {m^n : S^n(a) -> a[degree]} stored by values on canonical words of
// a-basis letters; the 0-ary component is a single vector. Graded symmetry
// is built into the storage: evaluation on an arbitrary tuple routes
// through word normalization. Components beyond arity_max are zero, and
// every check reports "verified up to arity_max", never "for all n".
struct BracketFamily {
    int degree = 1;
    int arity_max = 0;
    Vec m0;
    std::vector<std::map<SymWord, Vec>> comps; // comps[n-1] holds the n-ary map

    explicit BracketFamily(int arity = 0, int deg = 1)
        : degree(deg), arity_max(arity), comps(arity) {}

    void set_value(const SymWord& w, Vec v);
    // Lookup on a canonical word (the empty word returns m0).
    Vec eval_word(const SymWord& w) const;
    // Evaluation on an arbitrary letter tuple: normalize, sign, lookup.
    Vec eval_letters(const GradedBasis& basis, const std::vector<int>& letters) const;

    bool is_zero() const;
    friend bool operator==(const BracketFamily& a, const BracketFamily& b)
    {
        return a.degree == b.degree && a.m0 == b.m0 && a.comps == b.comps;
    }
};

// Letters of the abelian part, ascending; the pool for all word loops.
inline const std::vector<int>& a_letters(const VAlgebra& V) { return V.a_indices; }

std::vector<SymWord> canonical_a_words(const VAlgebra& V, int n);

// Higher derived brackets of an adapted derivation:
// D^n(x_1...x_n) = Pi_a[[...[E(x_1),x_2],...],x_n], D^0 = Pi_a P.
BracketFamily derived_brackets(const VAlgebra& V, const DerivationSpec& E, int n_max);

// The n-th Jacobiator of the family on a canonical word of length n, with
// the r = 0 term included so the curved case satisfies J = pr.Q^2 exactly.
// Needs family components up to arity n + 1. The formula extends to the
// empty word, where it reduces to m^1(m^0).
Vec jacobiator(const VAlgebra& V, const BracketFamily& F, const SymWord& w);

// Evaluates every Jacobiator on every canonical word, arities 0..n_max.
Report check_linfty(const VAlgebra& V, const BracketFamily& F, int n_max);

// J^n_{[P,.]} = D^n_{[(1/2)[P,P],.]} componentwise; P odd degree, not
// necessarily Maurer-Cartan.
Report check_JD(const VAlgebra& V, const Vec& P, int n_max);

// J^n_E = D^n_{E.E} for an adapted odd-degree E.
Report check_JD2(const VAlgebra& V, const DerivationSpec& E, int n_max);

// The coderivation of S(a) with corestriction F:
// Q(x_1...x_n) = sum over r+s=n and (r,s)-shuffles of
// sign(sigma) m^r(x_{sigma(1..r)}) . x_{sigma(r+1..n)}.
struct Coderivation {
    const VAlgebra& V;
    const BracketFamily& fam;

    SymVec apply(const SymWord& w) const;
    SymVec apply(const SymVec& v) const;
    // pr . Q on a word is exactly the family evaluated on it.
    Vec project_apply(const SymWord& w) const { return fam.eval_word(w); }
};

// Co-Leibniz identity Delta.Q = (Q x id + id x Q).Delta expanded in the
// canonical word basis of S(a) x S(a), words up to n_max.
Report check_coderivation(const VAlgebra& V, const BracketFamily& F, int n_max);

// Corestriction of the graded commutator [Q1, Q2]. Exact on arities n with
// component data available up to n + 1.
BracketFamily coderivation_commutator(const VAlgebra& V, const BracketFamily& F1,
                                      const BracketFamily& F2, int n_max);

// pr.(Q.Q) = 0 on words up to n_max, cross-checked verdict-for-verdict
// against check_linfty of the same family.
Report check_codifferential(const VAlgebra& V, const BracketFamily& F, int n_max);

// Degree-0 coalgebra morphism S(a_src) -> S(a_tgt) determined by components
// U^n : S^n -> a_tgt, n >= 1; U^0 is identically zero by construction.
struct CoalgMorphism {
    int arity_max = 0;
    std::vector<std::map<SymWord, Vec>> comps;

    explicit CoalgMorphism(int arity = 0) : arity_max(arity), comps(arity) {}

    static CoalgMorphism identity(const VAlgebra& V, int arity);

    void set_value(const SymWord& w, Vec v);
    Vec eval_word(const SymWord& w) const; // zero above arity_max
    // Multiplicative extension over set partitions with Koszul signs.
    SymVec apply(const GradedBasis& src, const GradedBasis& tgt, const SymWord& w) const;
};

// pr.(Q_tgt.U - U.Q_src) = 0 on words up to n_max.
Report check_linfty_morphism(const VAlgebra& Vsrc, const VAlgebra& Vtgt,
                             const CoalgMorphism& U, const BracketFamily& Fsrc,
                             const BracketFamily& Ftgt, int n_max);

// The coproduct of S(a): all (r, n-r)-unshuffles with Koszul signs.
std::map<std::pair<SymWord, SymWord>, Rat> coproduct(const VAlgebra& V, const SymWord& w);

} // namespace dbr
