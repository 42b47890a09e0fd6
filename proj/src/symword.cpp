#include "dbr/symword.hpp"

#include <sstream>

namespace dbr {

std::optional<NormalizedWord> normalize_word(const GradedBasis& basis,
                                             const std::vector<int>& letters)
{
    NormalizedWord out;
    out.word.letters = letters;
    out.sign = 1;
    auto& seq = out.word.letters;
    // insertion sort, stable; each adjacent swap contributes the Koszul sign
    for (size_t i = 1; i < seq.size(); ++i) {
        for (size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
            if ((basis.degree(seq[j - 1]) % 2 != 0) && (basis.degree(seq[j]) % 2 != 0))
                out.sign = -out.sign;
            std::swap(seq[j - 1], seq[j]);
        }
    }
    for (size_t i = 1; i < seq.size(); ++i)
        if (seq[i] == seq[i - 1] && basis.degree(seq[i]) % 2 != 0)
            return std::nullopt;
    return out;
}

int word_degree(const GradedBasis& basis, const SymWord& w)
{
    int d = 0;
    for (int i : w.letters)
        d += basis.degree(i);
    return d;
}

std::vector<int> word_degrees(const GradedBasis& basis, const SymWord& w)
{
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int i : w.letters)
        out.push_back(basis.degree(i));
    return out;
}

std::string format_word(const GradedBasis& basis, const SymWord& w)
{
    if (w.letters.empty())
        return "()";
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            os << " ";
        os << basis.name(w.letters[i]);
    }
    os << ")";
    return os.str();
}

void add_word(SymVec& target, const SymWord& w, const Rat& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = target.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            target.erase(it);
    }
}

void add_scaled(SymVec& target, const SymVec& source, const Rat& c)
{
    for (auto& [w, v] : source)
        add_word(target, w, v * c);
}

namespace {

void words_rec(const GradedBasis& basis, const std::vector<int>& pool, int n,
               size_t from, std::vector<int>& cur, std::vector<SymWord>& out)
{
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(SymWord{cur});
        return;
    }
    for (size_t k = from; k < pool.size(); ++k) {
        int letter = pool[k];
        if (!cur.empty() && cur.back() == letter && basis.degree(letter) % 2 != 0)
            continue; // odd repeat is the zero word
        cur.push_back(letter);
        words_rec(basis, pool, n, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<SymWord> canonical_words(const GradedBasis& basis,
                                     const std::vector<int>& pool, int n)
{
    std::vector<SymWord> out;
    std::vector<int> cur;
    words_rec(basis, pool, n, 0, cur, out);
    return out;
}

} // namespace dbr
