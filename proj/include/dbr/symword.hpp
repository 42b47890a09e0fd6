#pragma once

#include "dbr/grading.hpp"
#include "dbr/perm.hpp"

#include <compare>
#include <map>
#include <optional>

namespace dbr {

// Canonical word in the graded symmetric algebra: letters are basis indices
// in nondecreasing order, and no odd-degree letter repeats (such a word is
// zero and is never materialized).
struct SymWord {
    std::vector<int> letters;

    int size() const { return static_cast<int>(letters.size()); }
    auto operator<=>(const SymWord&) const = default;
};

struct NormalizedWord {
    SymWord word;
    int sign; // +1 or -1
};

// Sorts the letters, tracking the Koszul sign of the sorting permutation.
// Returns nullopt for the zero word (a repeated odd-degree letter).
std::optional<NormalizedWord> normalize_word(const GradedBasis& basis,
                                             const std::vector<int>& letters);

int word_degree(const GradedBasis& basis, const SymWord& w);
std::vector<int> word_degrees(const GradedBasis& basis, const SymWord& w);

std::string format_word(const GradedBasis& basis, const SymWord& w);

// Element of S(V): finite weighted sum of canonical words.
using SymVec = std::map<SymWord, Rat>;

void add_word(SymVec& target, const SymWord& w, const Rat& c);
void add_scaled(SymVec& target, const SymVec& source, const Rat& c);

// All canonical words of length n over the given letter pool (ascending
// basis indices). Pool order fixes the enumeration order.
std::vector<SymWord> canonical_words(const GradedBasis& basis,
                                     const std::vector<int>& pool, int n);

} // namespace dbr
