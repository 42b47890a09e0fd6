#pragma once

#include "dbr/rational.hpp"

#include <vector>

namespace dbr {

// A permutation of {0..n-1}; img[i] is where position i reads from, i.e.
// the permuted word carries letter sigma(i) at position i.
struct Permutation {
    std::vector<int> img;

    static Permutation identity(int n);
    int size() const { return static_cast<int>(img.size()); }
    bool is_bijection() const;
    // Sign of the permutation (+1 even, -1 odd).
    int parity() const;
};

// (s . t)(i) = s(t(i)).
Permutation compose(const Permutation& s, const Permutation& t);

// Degrees of the permuted word: result[i] = degrees[sigma(i)].
std::vector<int> permute_degrees(const Permutation& sigma, const std::vector<int>& degrees);

// Koszul sign of the even representation: the sign epsilon with
// x_{sigma(1)} ... x_{sigma(n)} = epsilon * x_1 ... x_n in S(V), where each
// adjacent swap of letters of degrees d, e contributes (-1)^{d*e}.
// Satisfies koszul_sign(compose(s,t), d) =
//   koszul_sign(s, d) * koszul_sign(t, permute_degrees(s, d)).
int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

// Odd representation: koszul_sign times the parity of the permutation.
int odd_sign(const Permutation& sigma, const std::vector<int>& degrees);

// Sign of the decalage isomorphism on a word with the given degrees,
// (-1)^{sum_i (n-i)|x_i|} with 1-based i.
int decalage_sign(const std::vector<int>& degrees);

// All (r,s)-shuffles: sigma with sigma(1)<...<sigma(r) and
// sigma(r+1)<...<sigma(r+s), ordered lexicographically by the chosen
// r-subset. Count is binomial(r+s, r).
std::vector<Permutation> shuffles(int r, int s);

// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// Ordered compositions of n into exactly k parts >= 1.
std::vector<std::vector<int>> compositions(int n, int k);

// Partitions of {0..n-1} into nonempty blocks; blocks are ascending and
// listed by their least element, so the output is canonical.
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

} // namespace dbr
