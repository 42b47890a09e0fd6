#include "dbr/poisson.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace dbr {

void PolyMv::add_term(const MvKey& k, const Rat& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

PolyMv& PolyMv::operator+=(const PolyMv& o)
{
    for (auto& [k, c] : o.terms)
        add_term(k, c);
    return *this;
}

PolyMv& PolyMv::operator-=(const PolyMv& o)
{
    for (auto& [k, c] : o.terms)
        add_term(k, -c);
    return *this;
}

PolyMv& PolyMv::operator*=(const Rat& c)
{
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [k, v] : terms)
        v *= c;
    return *this;
}

namespace {

// Merge two strictly increasing index sets; nullopt when they overlap.
// sign counts the inversions between the two lists (all indices are odd).
std::optional<std::pair<std::vector<int>, int>> merge_idx(const std::vector<int>& a,
                                                          const std::vector<int>& b)
{
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return std::nullopt;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            if ((a.size() - i) % 2 != 0)
                sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size())
        out.push_back(a[i++]);
    while (j < b.size())
        out.push_back(b[j++]);
    return std::make_pair(std::move(out), sign);
}

// Left derivative d/d(xi_i): sign (-1)^{position of i}.
std::optional<std::pair<MvKey, int>> dxi_left(const MvKey& k, int i)
{
    auto it = std::find(k.idx.begin(), k.idx.end(), i);
    if (it == k.idx.end())
        return std::nullopt;
    int pos = static_cast<int>(it - k.idx.begin());
    MvKey out = k;
    out.idx.erase(out.idx.begin() + pos);
    return std::make_pair(std::move(out), pos % 2 == 0 ? 1 : -1);
}

// Right derivative: sign (-1)^{count of letters to the right of i}.
std::optional<std::pair<MvKey, int>> dxi_right(const MvKey& k, int i)
{
    auto it = std::find(k.idx.begin(), k.idx.end(), i);
    if (it == k.idx.end())
        return std::nullopt;
    int pos = static_cast<int>(it - k.idx.begin());
    int behind = static_cast<int>(k.idx.size()) - 1 - pos;
    MvKey out = k;
    out.idx.erase(out.idx.begin() + pos);
    return std::make_pair(std::move(out), behind % 2 == 0 ? 1 : -1);
}

std::optional<std::pair<MvKey, int>> dx(const MvKey& k, int i)
{
    if (k.expo[i] == 0)
        return std::nullopt;
    MvKey out = k;
    out.expo[i] -= 1;
    return std::make_pair(std::move(out), k.expo[i]);
}

} // namespace

PolyMv mv_product(const PolyMv& a, const PolyMv& b)
{
    if (a.dim != b.dim)
        throw input_error("multivector dimension mismatch");
    PolyMv out(a.dim);
    for (auto& [ka, ca] : a.terms)
        for (auto& [kb, cb] : b.terms) {
            auto merged = merge_idx(ka.idx, kb.idx);
            if (!merged)
                continue;
            MvKey k;
            k.expo.resize(a.dim);
            for (int i = 0; i < a.dim; ++i)
                k.expo[i] = ka.expo[i] + kb.expo[i];
            k.idx = merged->first;
            out.add_term(k, ca * cb * Rat(merged->second));
        }
    return out;
}

PolyMv schouten(const PolyMv& a, const PolyMv& b)
{
    if (a.dim != b.dim)
        throw input_error("multivector dimension mismatch");
    PolyMv out(a.dim);
    auto accumulate = [&](const MvKey& k1, const Rat& c1, const MvKey& k2, const Rat& c2,
                          int sign) {
        auto merged = merge_idx(k1.idx, k2.idx);
        if (!merged)
            return;
        MvKey k;
        k.expo.resize(a.dim);
        for (int i = 0; i < a.dim; ++i)
            k.expo[i] = k1.expo[i] + k2.expo[i];
        k.idx = merged->first;
        out.add_term(k, c1 * c2 * Rat(sign * merged->second));
    };
    for (auto& [ka, ca] : a.terms)
        for (auto& [kb, cb] : b.terms)
            for (int i = 0; i < a.dim; ++i) {
                auto fa = dxi_right(ka, i);
                if (fa) {
                    auto gb = dx(kb, i);
                    if (gb)
                        accumulate(fa->first, ca * Rat(fa->second), gb->first,
                                   cb * Rat(gb->second), 1);
                }
                auto fxa = dx(ka, i);
                if (fxa) {
                    auto gxb = dxi_left(kb, i);
                    if (gxb)
                        accumulate(fxa->first, ca * Rat(fxa->second), gxb->first,
                                   cb * Rat(gxb->second), -1);
                }
            }
    return out;
}

int SubmanifoldContext::normal_degree(const MvKey& k) const
{
    int d = 0;
    for (int i = tangent_count; i < dim; ++i)
        d += k.expo[i];
    return d;
}

int SubmanifoldContext::tangential_degree(const MvKey& k) const
{
    int d = 0;
    for (int i = 0; i < tangent_count; ++i)
        d += k.expo[i];
    return d;
}

std::string SubmanifoldContext::coord_name(int coord) const
{
    if (coord < tangent_count)
        return "x" + std::to_string(coord + 1);
    return "y" + std::to_string(coord - tangent_count + 1);
}

std::string SubmanifoldContext::monomial_name(const MvKey& k) const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim; ++i) {
        if (k.expo[i] == 0)
            continue;
        if (!first)
            os << "*";
        first = false;
        os << coord_name(i);
        if (k.expo[i] > 1)
            os << "^" << k.expo[i];
    }
    for (int i : k.idx) {
        if (!first)
            os << "*";
        first = false;
        os << "D" << coord_name(i);
    }
    if (first)
        os << "1";
    return os.str();
}

PolyMv PoissonModel::to_poly(const Vec& v) const
{
    PolyMv out(ctx.dim);
    for (auto& [i, c] : v.terms)
        out.add_term(keys[i], c);
    return out;
}

namespace {

bool in_window(const SubmanifoldContext& ctx, const MvKey& k)
{
    int nd = ctx.normal_degree(k);
    int td = ctx.tangential_degree(k);
    return nd <= ctx.normal_trunc && td <= ctx.tangential_trunc && (nd == 0 || td == 0);
}

} // namespace

Vec PoissonModel::to_vec(const PolyMv& p) const
{
    Vec out;
    for (auto& [k, c] : p.terms) {
        if (ctx.normal_degree(k) > ctx.normal_trunc)
            continue; // the ideal-quotient truncation
        if (ctx.tangential_degree(k) > ctx.tangential_trunc)
            throw input_error("tangential overflow at " + ctx.monomial_name(k) +
                              "; raise D_tan");
        if (!in_window(ctx, k))
            throw input_error("window escape at " + ctx.monomial_name(k));
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        if (it == keys.end() || !(*it == k))
            throw input_error("window escape at " + ctx.monomial_name(k));
        out.add_term(static_cast<int>(it - keys.begin()), c);
    }
    return out;
}

PolyMv PoissonModel::proj_a_poly(const PolyMv& p) const
{
    PolyMv out(ctx.dim);
    for (auto& [k, c] : p.terms) {
        if (ctx.normal_degree(k) != 0)
            continue;
        bool normal_only = true;
        for (int i : k.idx)
            if (!ctx.is_normal(i))
                normal_only = false;
        if (normal_only)
            out.add_term(k, c);
    }
    return out;
}

namespace {

void enumerate_exponents(const SubmanifoldContext& ctx, int coord, MvKey& cur,
                         std::vector<MvKey>& out)
{
    if (coord == ctx.dim) {
        if (in_window(ctx, cur))
            out.push_back(cur);
        return;
    }
    int cap = ctx.is_normal(coord) ? ctx.normal_trunc : ctx.tangential_trunc;
    for (int e = 0; e <= cap; ++e) {
        cur.expo[coord] = e;
        enumerate_exponents(ctx, coord + 1, cur, out);
    }
    cur.expo[coord] = 0;
}

} // namespace

PoissonModel build_valgebra(const SubmanifoldContext& ctx)
{
    if (ctx.dim < 1 || ctx.tangent_count < 0 || ctx.tangent_count > ctx.dim)
        throw input_error("bad submanifold dimensions");
    if (ctx.normal_trunc < 0 || ctx.tangential_trunc < 0)
        throw input_error("negative truncation degree");
    if (ctx.tangent_count < ctx.dim && ctx.normal_trunc > 1)
        throw input_error("normal truncation D > 1 does not give a bracket-closed window; use D <= 1");
    if (ctx.tangent_count > 0 && ctx.tangential_trunc > 1)
        throw input_error("tangential truncation D_tan > 1 does not give a bracket-closed window; use D_tan <= 1");

    PoissonModel model;
    model.ctx = ctx;

    // monomial coefficients in the window, then every derivation subset
    std::vector<MvKey> coeffs;
    MvKey scratch;
    scratch.expo.assign(ctx.dim, 0);
    enumerate_exponents(ctx, 0, scratch, coeffs);
    for (unsigned mask = 0; mask < (1u << ctx.dim); ++mask)
        for (auto& c : coeffs) {
            MvKey k = c;
            for (int i = 0; i < ctx.dim; ++i)
                if (mask & (1u << i))
                    k.idx.push_back(i);
            model.keys.push_back(std::move(k));
        }
    std::sort(model.keys.begin(), model.keys.end());

    std::vector<std::pair<std::string, int>> elements;
    for (auto& k : model.keys)
        elements.emplace_back(ctx.monomial_name(k), static_cast<int>(k.idx.size()) - 1);

    GLA gla;
    gla.basis = GradedBasis(std::move(elements));
    int n = static_cast<int>(model.keys.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            PolyMv fi(ctx.dim), fj(ctx.dim);
            fi.add_term(model.keys[i], 1);
            fj.add_term(model.keys[j], 1);
            Vec entry = model.to_vec(schouten(fi, fj));
            if (!entry.is_zero())
                gla.set_bracket(i, j, std::move(entry));
        }

    std::vector<int> a_indices;
    for (int i = 0; i < n; ++i) {
        const MvKey& k = model.keys[i];
        if (ctx.normal_degree(k) != 0)
            continue;
        bool normal_only = true;
        for (int c : k.idx)
            if (!ctx.is_normal(c))
                normal_only = false;
        if (normal_only)
            a_indices.push_back(i);
    }
    model.V = VAlgebra::make(std::move(gla), std::move(a_indices));
    return model;
}

CoisotropyResult is_coisotropic(const PoissonModel& model, const PolyMv& pi)
{
    for (auto& [k, c] : pi.terms)
        if (k.idx.size() != 2)
            throw input_error("coisotropy check expects a bivector");
    CoisotropyResult res;
    res.poisson_check.title = "Poisson in the formal neighbourhood";
    PolyMv sq = schouten(pi, pi);
    PolyMv reduced(model.ctx.dim);
    for (auto& [k, c] : sq.terms)
        if (model.ctx.normal_degree(k) <= model.ctx.normal_trunc)
            reduced.add_term(k, c);
    if (!reduced.is_zero())
        res.poisson_check.fail("[pi,pi] != 0 mod I^" +
                               std::to_string(model.ctx.normal_trunc + 1));
    res.projection = model.to_vec(model.proj_a_poly(pi));
    res.coisotropic = res.projection.is_zero();
    return res;
}

BracketFamily pinfty_brackets(const PoissonModel& model, const PolyMv& pi, int n_max,
                              Report* post)
{
    CoisotropyResult coiso = is_coisotropic(model, pi);
    if (!coiso.poisson_check.passed())
        throw input_error("bivector is not Poisson in the truncated neighbourhood");
    DerivationSpec E;
    E.degree = 1;
    E.ehat.degree = 1;
    E.p_element = model.to_vec(pi); // D^0 = Pi_a[pi]
    BracketFamily fam = derived_brackets(model.V, E, n_max + 1);
    if (post) {
        post->title = "P-infinity structure";
        McResult mc = is_maurer_cartan(model.V, E);
        if (!mc.ok)
            post->fail("ad([pi]) is not Maurer-Cartan; witness " + mc.witness);
        bool flat = fam.m0.is_zero();
        if (flat != coiso.coisotropic)
            post->fail("flat/coisotropic characterization fails");
        post->note(std::string("instance is ") +
                   (coiso.coisotropic ? "coisotropic (flat)" : "curved (non-coisotropic)"));
        if (flat) {
            for (int x : a_letters(model.V)) {
                Vec once = fam.eval_word(SymWord{{x}});
                Vec twice;
                for (auto& [b, c] : once.terms)
                    twice += c * fam.eval_word(SymWord{{b}});
                if (!twice.is_zero())
                    post->fail("D1.D1 != 0 at " + model.V.basis().name(x));
            }
        }
    }
    return fam;
}

TimeDerivation embedding_flow(const PoissonModel& model, const std::vector<PolyMv>& field)
{
    const auto& ctx = model.ctx;
    TimeDerivation m;
    for (size_t k = 0; k < field.size(); ++k) {
        const PolyMv& Y = field[k];
        std::string at = " in flow coefficient t^" + std::to_string(k);
        for (auto& [key, c] : Y.terms) {
            if (key.idx.size() != 1)
                throw input_error("flow generator is not a vector field" + at);
            if (ctx.is_normal(key.idx[0]) && ctx.normal_degree(key) == 0)
                throw input_error("generator is not tangent to S: normal component " +
                                  ctx.monomial_name(key) + at);
        }
        LinMap ad;
        ad.degree = 0;
        for (int i = 0; i < model.V.basis().size(); ++i) {
            PolyMv e(ctx.dim);
            e.add_term(model.keys[i], 1);
            try {
                ad.set_col(i, model.to_vec(schouten(Y, e)));
            } catch (const input_error& err) {
                throw input_error(std::string(err.what()) + "; generator leaves the window" +
                                  at + " on " + model.V.basis().name(i));
            }
        }
        m.coeff.push_back(std::move(ad));
        m.inner.push_back(model.to_vec(Y));
    }
    return m;
}

namespace {

// Homogeneous element of Gamma(S, Lambda NS): one derivation subset, a
// couple of random tangential coefficient monomials.
PolyMv random_a_element(const PoissonModel& model, std::mt19937_64& rng)
{
    const auto& ctx = model.ctx;
    PolyMv out(ctx.dim);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    std::uniform_int_distribution<int> expo_dist(0, 2);
    std::uniform_int_distribution<int> pick(0, 1);
    std::vector<int> idx;
    for (int i = ctx.tangent_count; i < ctx.dim; ++i)
        if (pick(rng))
            idx.push_back(i);
    int terms = 1 + static_cast<int>(rng() % 2);
    for (int t = 0; t < terms; ++t) {
        MvKey k;
        k.expo.assign(ctx.dim, 0);
        for (int i = 0; i < ctx.tangent_count; ++i)
            k.expo[i] = expo_dist(rng);
        k.idx = idx;
        int c = coeff_dist(rng);
        if (c != 0)
            out.add_term(k, c);
    }
    return out;
}

// D^n at the polynomial level: no window, exact in the free algebra.
PolyMv derived_poly(const PoissonModel& model, const PolyMv& pi,
                    const std::vector<PolyMv>& args)
{
    PolyMv cur = schouten(pi, args[0]);
    for (size_t i = 1; i < args.size(); ++i)
        cur = schouten(cur, args[i]);
    return model.proj_a_poly(cur);
}

} // namespace

Report check_multiderivation(const PoissonModel& model, const PolyMv& pi, int arity_top,
                             int trials, unsigned long seed)
{
    Report rep;
    rep.title = "multiderivation";
    rep.note("arities 1.." + std::to_string(arity_top) + ", " + std::to_string(trials) +
             " random triples per arity, seed " + std::to_string(seed));
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= arity_top; ++n) {
        for (int t = 0; t < trials; ++t) {
            std::vector<PolyMv> fixed;
            int parity = 0;
            for (int i = 0; i + 1 < n; ++i) {
                fixed.push_back(random_a_element(model, rng));
                if (!fixed.back().terms.empty())
                    parity += static_cast<int>(fixed.back().terms.begin()->first.idx.size()) - 1;
            }
            PolyMv u = random_a_element(model, rng);
            PolyMv v = random_a_element(model, rng);
            int deg_u_a = u.terms.empty()
                              ? 0
                              : static_cast<int>(u.terms.begin()->first.idx.size());
            auto args = fixed;
            args.push_back(mv_product(u, v));
            PolyMv lhs = derived_poly(model, pi, args);
            args.back() = u;
            PolyMv rhs = mv_product(derived_poly(model, pi, args), v);
            args.back() = v;
            int sign = ((1 + parity) % 2 != 0 && deg_u_a % 2 != 0) ? -1 : 1;
            rhs += Rat(sign) * mv_product(u, derived_poly(model, pi, args));
            if (!(lhs == rhs))
                rep.fail("Leibniz fails at arity " + std::to_string(n) + ", trial " +
                         std::to_string(t));
        }
    }
    return rep;
}

Report check_truncation_consistency(const PoissonModel& model)
{
    Report rep;
    rep.title = "truncation consistency";
    int n = static_cast<int>(model.keys.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            PolyMv fi(model.ctx.dim), fj(model.ctx.dim);
            fi.add_term(model.keys[i], 1);
            fj.add_term(model.keys[j], 1);
            PolyMv free_bracket = schouten(fi, fj);
            Vec reduced = model.to_vec(free_bracket);
            if (!(reduced == model.V.gla.bracket_basis(i, j))) {
                rep.fail("window bracket differs from the reduced free bracket on (" +
                         model.V.basis().name(i) + "," + model.V.basis().name(j) + ")");
            }
            // the quotient must not have dropped anything for window inputs
            for (auto& [k, c] : free_bracket.terms)
                if (model.ctx.normal_degree(k) > model.ctx.normal_trunc)
                    rep.fail("free bracket of (" + model.V.basis().name(i) + "," +
                             model.V.basis().name(j) + ") leaves the window");
        }
    return rep;
}

} // namespace dbr
