#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dbr/perm.hpp"
#include "dbr/series.hpp"
#include "dbr/symword.hpp"

#include <random>

using namespace dbr;

namespace {

Permutation transposition(int n, int i, int j)
{
    Permutation p = Permutation::identity(n);
    std::swap(p.img[i], p.img[j]);
    return p;
}

long long binomial(int n, int k)
{
    long long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

TEST_CASE("rational parsing and formatting")
{
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-4") == Rat(-4));
    CHECK(format_rat(Rat(-3, 9)) == "-1/3");
    CHECK(format_rat(Rat(7)) == "7");
    CHECK_THROWS_AS(parse_rat("1/0"), input_error);
    CHECK_THROWS_AS(parse_rat("x"), input_error);
}

TEST_CASE("koszul sign basics")
{
    CHECK(koszul_sign(Permutation::identity(3), {5, -1, 2}) == 1);
    CHECK(koszul_sign(transposition(2, 0, 1), {1, 1}) == -1);
    CHECK(koszul_sign(transposition(2, 0, 1), {1, 2}) == 1);
    CHECK_THROWS_AS(koszul_sign(Permutation::identity(2), {1}), input_error);
}

TEST_CASE("odd sign basics")
{
    CHECK(odd_sign(Permutation::identity(4), {0, 1, 2, 3}) == 1);
    CHECK(odd_sign(transposition(2, 0, 1), {0, 0}) == -1);
    CHECK(odd_sign(transposition(2, 0, 1), {1, 1}) == 1);
}

TEST_CASE("koszul sign is multiplicative under composition")
{
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 5; ++n) {
        auto perms = all_permutations(n);
        for (int trial = 0; trial < 40; ++trial) {
            const Permutation& s = perms[rng() % perms.size()];
            const Permutation& t = perms[rng() % perms.size()];
            std::vector<int> degrees(n);
            for (auto& d : degrees)
                d = static_cast<int>(rng() % 5) - 2;
            int lhs = koszul_sign(compose(s, t), degrees);
            int rhs = koszul_sign(s, degrees) * koszul_sign(t, permute_degrees(s, degrees));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("shuffles")
{
    CHECK(shuffles(1, 1).size() == 2);
    CHECK(shuffles(0, 4).size() == 1);
    CHECK(shuffles(0, 4).front().img == Permutation::identity(4).img);
    CHECK(shuffles(2, 2).size() == 6);
    for (int r = 0; r <= 8; ++r)
        for (int s = 0; r + s <= 8; ++s)
            CHECK(static_cast<long long>(shuffles(r, s).size()) == binomial(r + s, r));
    // each shuffle is ascending on both halves
    for (auto& p : shuffles(3, 2)) {
        for (int i = 1; i < 3; ++i)
            CHECK(p.img[i - 1] < p.img[i]);
        for (int i = 4; i < 5; ++i)
            CHECK(p.img[i - 1] < p.img[i]);
    }
}

TEST_CASE("decalage sign")
{
    CHECK(decalage_sign({3}) == 1);
    CHECK(decalage_sign({1, 1}) == -1);
    CHECK(decalage_sign({2, 1}) == 1);
}

TEST_CASE("symmetric word normalization")
{
    GradedBasis basis({{"u", 1}, {"v", 2}, {"w", 1}});
    auto norm = normalize_word(basis, {2, 0});
    REQUIRE(norm.has_value());
    CHECK(norm->word.letters == std::vector<int>{0, 2});
    CHECK(norm->sign == -1); // both odd
    // renormalizing a canonical word is the identity with sign +1
    auto again = normalize_word(basis, norm->word.letters);
    REQUIRE(again.has_value());
    CHECK(again->word == norm->word);
    CHECK(again->sign == 1);
    // a repeated odd-degree letter is the zero word
    CHECK(!normalize_word(basis, {0, 1, 0}).has_value());
    // repeated even-degree letters are fine
    CHECK(normalize_word(basis, {1, 1}).has_value());
}

TEST_CASE("canonical word enumeration skips odd repeats")
{
    GradedBasis basis({{"u", 1}, {"v", 2}});
    auto words = canonical_words(basis, {0, 1}, 2);
    // uu excluded, uv and vv remain
    REQUIRE(words.size() == 2);
    CHECK(words[0].letters == std::vector<int>{0, 1});
    CHECK(words[1].letters == std::vector<int>{1, 1});
}

TEST_CASE("series arithmetic")
{
    Series<Rat> one_plus_t(2);
    one_plus_t.c[0] = 1;
    one_plus_t.c[1] = 1;
    Series<Rat> inv = invert(one_plus_t);
    CHECK(inv.c[0] == Rat(1));
    CHECK(inv.c[1] == Rat(-1));
    CHECK(inv.c[2] == Rat(1));
    CHECK(one_plus_t * inv == Series<Rat>::constant(Rat(1), 2));

    Series<Rat> t2(2);
    t2.c[2] = 1;
    Series<Rat> d = differentiate_in_t(t2);
    CHECK(d.order == 1);
    CHECK(d.c[0] == Rat(0));
    CHECK(d.c[1] == Rat(2));

    Series<Rat> f(1);
    f.c[0] = 1;
    f.c[1] = 1;
    Series<Rat> sq = f * f;
    CHECK(sq.order == 1);
    CHECK(sq.c[0] == Rat(1));
    CHECK(sq.c[1] == Rat(2)); // truncation drops t^2

    Series<Rat> mixed(3);
    CHECK_THROWS_AS((void)(f + mixed), input_error);
    Series<Rat> zero_const(2);
    zero_const.c[1] = Rat(5);
    zero_const.c[2] = Rat(-7, 3);
    CHECK(differentiate_in_t(integrate_in_t(zero_const)) == zero_const);
    CHECK_THROWS_AS(invert(Series<Rat>(2)), input_error);
}

TEST_CASE("linmap series inverse")
{
    LinMap n;
    n.degree = 0;
    n.set_col(0, basis_vec(1)); // nilpotent shift on a 2-dim space
    Series<LinMap> phi(3);
    phi.c[0] = LinMap::identity(2);
    phi.c[1] = n;
    Series<LinMap> inv = invert(phi, 2);
    CHECK(compose(phi, inv) == Series<LinMap>::constant(LinMap::identity(2), 3));
    CHECK(compose(inv, phi) == Series<LinMap>::constant(LinMap::identity(2), 3));
}
