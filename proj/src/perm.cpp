#include "dbr/perm.hpp"

#include <algorithm>
#include <numeric>

namespace dbr {

Permutation Permutation::identity(int n)
{
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool Permutation::is_bijection() const
{
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        if (v < 0 || v >= size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

int Permutation::parity() const
{
    std::vector<bool> seen(img.size(), false);
    int sign = 1;
    for (int i = 0; i < size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

Permutation compose(const Permutation& s, const Permutation& t)
{
    if (s.size() != t.size())
        throw input_error("permutation size mismatch in compose");
    Permutation r;
    r.img.resize(s.size());
    for (int i = 0; i < s.size(); ++i)
        r.img[i] = s.img[t.img[i]];
    return r;
}

std::vector<int> permute_degrees(const Permutation& sigma, const std::vector<int>& degrees)
{
    if (sigma.size() != static_cast<int>(degrees.size()))
        throw input_error("degree list length does not match permutation");
    std::vector<int> out(degrees.size());
    for (int i = 0; i < sigma.size(); ++i)
        out[i] = degrees[sigma.img[i]];
    return out;
}

int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees)
{
    if (sigma.size() != static_cast<int>(degrees.size()))
        throw input_error("degree list length does not match permutation");
    // Bubble the sequence sigma back to the identity; every adjacent swap
    // exchanges the letters at those positions.
    std::vector<int> seq = sigma.img;
    int sign = 1;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        for (size_t j = 0; j + 1 < seq.size() - i; ++j) {
            if (seq[j] > seq[j + 1]) {
                if ((degrees[seq[j]] % 2 != 0) && (degrees[seq[j + 1]] % 2 != 0))
                    sign = -sign;
                std::swap(seq[j], seq[j + 1]);
            }
        }
    }
    return sign;
}

int odd_sign(const Permutation& sigma, const std::vector<int>& degrees)
{
    return koszul_sign(sigma, degrees) * sigma.parity();
}

int decalage_sign(const std::vector<int>& degrees)
{
    int n = static_cast<int>(degrees.size());
    long long expo = 0;
    for (int i = 1; i <= n; ++i)
        expo += static_cast<long long>(n - i) * degrees[i - 1];
    return (expo % 2 == 0) ? 1 : -1;
}

std::vector<Permutation> shuffles(int r, int s)
{
    if (r < 0 || s < 0)
        throw input_error("negative shuffle arity");
    int n = r + s;
    std::vector<Permutation> out;
    std::vector<int> pick(r);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Permutation p;
        p.img.reserve(n);
        std::vector<bool> used(n, false);
        for (int v : pick) {
            p.img.push_back(v);
            used[v] = true;
        }
        for (int v = 0; v < n; ++v)
            if (!used[v])
                p.img.push_back(v);
        out.push_back(std::move(p));
        // next lexicographic r-subset of {0..n-1}
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.img.begin(), p.img.end()));
    return out;
}

namespace {

void compositions_rec(int rest, int slots, std::vector<int>& parts,
                      std::vector<std::vector<int>>& out)
{
    if (slots == 1) {
        parts.push_back(rest);
        out.push_back(parts);
        parts.pop_back();
        return;
    }
    for (int first = 1; first <= rest - (slots - 1); ++first) {
        parts.push_back(first);
        compositions_rec(rest - first, slots - 1, parts, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> compositions(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k <= 0 || n < k)
        return out;
    std::vector<int> parts;
    compositions_rec(n, k, parts, out);
    return out;
}

namespace {

void partitions_rec(int n, int next, std::vector<std::vector<int>>& blocks,
                    std::vector<std::vector<std::vector<int>>>& out)
{
    if (next == n) {
        out.push_back(blocks);
        return;
    }
    for (auto& block : blocks) {
        block.push_back(next);
        partitions_rec(n, next + 1, blocks, out);
        block.pop_back();
    }
    blocks.push_back({next});
    partitions_rec(n, next + 1, blocks, out);
    blocks.pop_back();
}

} // namespace

std::vector<std::vector<std::vector<int>>> set_partitions(int n)
{
    std::vector<std::vector<std::vector<int>>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<std::vector<int>> blocks;
    partitions_rec(n, 0, blocks, out);
    return out;
}

} // namespace dbr
