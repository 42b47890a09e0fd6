#include "dbr/fixtures.hpp"

#include <algorithm>

namespace dbr {

namespace {

MvTermData term(const std::string& coeff, std::vector<int> monomial, std::vector<int> indices)
{
    return MvTermData{coeff, std::move(monomial), std::move(indices)};
}

InstanceData r2_coisotropic()
{
    InstanceData d;
    d.has_poisson = true;
    d.dim = 2;
    d.tangent = 1;
    d.normal_trunc = 1;
    d.tangential_trunc = 1;
    // pi = Dx1 ^ Dy1, S = {y1 = 0}
    d.bivector = {term("1", {0, 0}, {1, 2})};
    // m_t = ad(y1 Dy1) + t ad(Dx1), both tangent to S
    d.flow = {{0, {term("1", {0, 1}, {2})}}, {1, {term("1", {0, 0}, {1})}}};
    return d;
}

InstanceData r3_coisotropic()
{
    InstanceData d;
    d.has_poisson = true;
    d.dim = 3;
    d.tangent = 2;
    d.normal_trunc = 1;
    d.tangential_trunc = 1;
    // pi = y1 Dx1 ^ Dx2: the ternary bracket D3(x1, x2, Dy1) is nonzero
    d.bivector = {term("1", {0, 0, 1}, {1, 2})};
    d.flow = {{0, {term("1", {0, 0, 1}, {3})}}, {1, {term("1", {0, 0, 1}, {1})}}};
    return d;
}

InstanceData n4_symplectic()
{
    InstanceData d;
    d.has_poisson = true;
    d.dim = 4;
    d.tangent = 2;
    d.normal_trunc = 1;
    d.tangential_trunc = 1;
    // pi = Dx1 ^ Dy1 + Dx2 ^ Dy2, S = {y1 = y2 = 0} coisotropic
    d.bivector = {term("1", {0, 0, 0, 0}, {1, 3}), term("1", {0, 0, 0, 0}, {2, 4})};
    d.flow = {{0, {term("1", {0, 0, 1, 0}, {1})}}, {1, {term("1", {0, 0, 0, 1}, {4})}}};
    return d;
}

InstanceData point_curved()
{
    InstanceData d;
    d.has_poisson = true;
    d.dim = 2;
    d.tangent = 0;
    d.normal_trunc = 1;
    d.tangential_trunc = 0;
    // symplectic plane, S = origin: not coisotropic, D0 = Dy1 ^ Dy2
    d.bivector = {term("1", {0, 0}, {1, 2})};
    d.flow = {{0, {term("1", {1, 0}, {2})}}};
    return d;
}

// Small hand-built V-algebra on the algebra route: a two-step nilpotent p
// acting on an abelian a, with a curved Maurer-Cartan element and an inner
// gauge flow.
InstanceData heisenberg_module()
{
    InstanceData d;
    d.has_algebra = true;
    d.basis = {{"a0", 0}, {"a1", 1}, {"b0", -1}, {"b1", 0},
               {"g", 1},  {"q", 1},  {"z", 2}};
    // [g, a0] = a1, [g, b0] = b1, [q, q] = z, z central
    d.brackets = {{"a0", "g", {{"a1", "-1"}}},
                  {"b0", "g", {{"b1", "-1"}}},
                  {"q", "q", {{"z", "1"}}}};
    d.abelian = {"a0", "a1", "b0", "b1"};
    // E = ad(g + a1): curved (Pi_a P = a1 != 0), [P, P] = 0
    d.p_element = {{"g", "1"}, {"a1", "1"}};
    // m_t = ad(z) + t ad(q'): z central acts trivially; use the grading
    // derivation at order 0 and ad of a degree-0 combination at order 1
    d.mt = {
        {0,
         std::nullopt,
         std::map<std::string, std::vector<std::pair<std::string, std::string>>>{
             {"a1", {{"a1", "1"}}},
             {"b0", {{"b0", "-1"}}},
             {"g", {{"g", "1"}}},
             {"q", {{"q", "1"}}},
             {"z", {{"z", "2"}}}}},
    };
    return d;
}

InstanceData r2_corrupted()
{
    // the r2 window with one structure constant rescaled: Jacobi fails
    SubmanifoldContext ctx{2, 1, 1, 1};
    PoissonModel model = build_valgebra(ctx);
    InstanceData d = algebra_instance(model.V, nullptr, nullptr);
    bool hit = false;
    for (auto& b : d.brackets)
        if (b.x == "Dy1" && b.y == "y1*Dx1") {
            for (auto& [name, coeff] : b.result)
                coeff = "-7";
            hit = true;
        }
    if (!hit)
        throw input_error("corrupted fixture lost its target entry");
    d.p_element = {{"Dx1*Dy1", "1"}};
    return d;
}

} // namespace

const std::vector<Fixture>& shipped_fixtures()
{
    static const std::vector<Fixture> fixtures = {
        {"r2-coisotropic", "line in the symplectic plane, flat P-infinity structure",
         r2_coisotropic()},
        {"r3-coisotropic", "plane in R^3 with pi = y d/dx1 ^ d/dx2, nonzero ternary bracket",
         r3_coisotropic()},
        {"n4-symplectic", "coisotropic plane in the symplectic R^4", n4_symplectic()},
        {"point-curved", "origin in the symplectic plane, curved structure", point_curved()},
        {"heisenberg-module", "abstract V-algebra with curved Maurer-Cartan element",
         heisenberg_module()},
        {"r2-corrupted", "r2 window with a corrupted structure constant (must fail)",
         r2_corrupted(), true},
    };
    return fixtures;
}

const Fixture& fixture(const std::string& name)
{
    for (auto& f : shipped_fixtures())
        if (f.name == name)
            return f;
    throw input_error("unknown fixture '" + name + "'");
}

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi)
{
    return lo + static_cast<int>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

} // namespace

std::vector<PoolInstance> random_pool(unsigned long seed, int count)
{
    std::mt19937_64 rng(seed);
    std::vector<PoolInstance> pool;
    pool.reserve(count);
    while (static_cast<int>(pool.size()) < count) {
        int n_a = rand_int(rng, 2, 4);
        int n_g = rand_int(rng, 2, 3);
        int n_z = rand_int(rng, 1, 2);

        std::vector<std::pair<std::string, int>> elements;
        std::vector<int> a_deg(n_a), g_deg(n_g), z_deg(n_z);
        a_deg[0] = 0;
        a_deg[1] = 1; // guaranteed target pair for the Maurer-Cartan action
        for (int i = 2; i < n_a; ++i)
            a_deg[i] = rand_int(rng, -1, 2);
        g_deg[0] = 1; // the Maurer-Cartan generator
        for (int i = 1; i < n_g; ++i)
            g_deg[i] = rand_int(rng, -1, 2);

        // central degrees are sums of generator degrees so brackets can hit them
        std::vector<std::pair<int, int>> z_source(n_z);
        for (int i = 0; i < n_z; ++i) {
            int s = rand_int(rng, 0, n_g - 1);
            int t = rand_int(rng, s, n_g - 1);
            if (s == 0 && t == 0)
                t = n_g - 1 > 0 ? 1 : 0; // keep [g0, g0] = 0
            z_source[i] = {s, t};
            z_deg[i] = g_deg[s] + g_deg[t];
        }

        for (int i = 0; i < n_a; ++i)
            elements.emplace_back("a" + std::to_string(i), a_deg[i]);
        for (int i = 0; i < n_g; ++i)
            elements.emplace_back("g" + std::to_string(i), g_deg[i]);
        for (int i = 0; i < n_z; ++i)
            elements.emplace_back("z" + std::to_string(i), z_deg[i]);

        GLA gla;
        gla.basis = GradedBasis(elements);
        auto g_index = [&](int i) { return n_a + i; };
        auto z_index = [&](int i) { return n_a + n_g + i; };

        // two-step nilpotent p: [g_s, g_t] = c z_k, z central
        for (int k = 0; k < n_z; ++k) {
            auto [s, t] = z_source[k];
            if (s == 0 && t == 0)
                continue;
            if (s == t && (g_deg[s] % 2) == 0)
                continue; // even diagonal must vanish
            int c = rand_int(rng, 1, 2) * (rand_int(rng, 0, 1) ? 1 : -1);
            Vec v = gla.bracket_basis(g_index(s), g_index(t));
            v.add_term(z_index(k), c);
            gla.set_bracket(g_index(s), g_index(t), std::move(v));
        }

        // supercommuting single-entry actions on disjoint source/target pairs
        std::vector<bool> used(n_a, false);
        auto assign_action = [&](int gi) -> bool {
            for (int s = 0; s < n_a; ++s)
                for (int t = 0; t < n_a; ++t) {
                    if (s == t || used[s] || used[t])
                        continue;
                    if (a_deg[t] - a_deg[s] != g_deg[gi])
                        continue;
                    used[s] = used[t] = true;
                    int c = rand_int(rng, 1, 3);
                    // store [a_s, g_i] = -(-1)^{|a_s||g_i|} [g_i, a_s]
                    int sign = (a_deg[s] % 2 != 0 && g_deg[gi] % 2 != 0) ? 1 : -1;
                    Vec v;
                    v.add_term(t, Rat(c * sign));
                    gla.set_bracket(s, g_index(gi), std::move(v));
                    return true;
                }
            return false;
        };
        bool mc_acts = assign_action(0);
        for (int gi = 1; gi < n_g; ++gi)
            assign_action(gi);
        if (!mc_acts)
            continue; // want a nontrivial unary bracket; redraw

        std::vector<int> a_indices(n_a);
        for (int i = 0; i < n_a; ++i)
            a_indices[i] = i;
        VAlgebra V = VAlgebra::make(std::move(gla), std::move(a_indices));
        if (!validate_gla(V.gla).passed() || !validate_valgebra(V).passed())
            continue; // construction guarantees validity; redraw defensively

        PoolInstance inst;
        inst.mc.degree = 1;
        inst.mc.ehat.degree = 1;
        inst.mc.p_element = basis_vec(n_a); // g0
        if (rand_int(rng, 0, 1))
            inst.mc.p_element.add_term(1, Rat(rand_int(rng, 1, 2))); // curved: + c a1
        inst.V = std::move(V);
        if (!is_maurer_cartan(inst.V, inst.mc).ok)
            continue;
        pool.push_back(std::move(inst));
    }
    return pool;
}

Vec random_homogeneous(const VAlgebra& V, int degree, std::mt19937_64& rng)
{
    Vec out;
    for (int i = 0; i < V.basis().size(); ++i)
        if (V.basis().degree(i) == degree && rand_int(rng, 0, 1))
            out.add_term(i, Rat(rand_int(rng, -3, 3)));
    return out;
}

Vec random_odd_element(const VAlgebra& V, std::mt19937_64& rng)
{
    std::vector<int> odd_degrees;
    for (int i = 0; i < V.basis().size(); ++i) {
        int d = V.basis().degree(i);
        if (d % 2 != 0 &&
            std::find(odd_degrees.begin(), odd_degrees.end(), d) == odd_degrees.end())
            odd_degrees.push_back(d);
    }
    if (odd_degrees.empty())
        return {};
    std::sort(odd_degrees.begin(), odd_degrees.end());
    for (int attempt = 0; attempt < 16; ++attempt) {
        int d = odd_degrees[rand_int(rng, 0, static_cast<int>(odd_degrees.size()) - 1)];
        Vec v = random_homogeneous(V, d, rng);
        if (!v.is_zero())
            return v;
    }
    return {};
}

DerivationSpec random_adapted(const VAlgebra& V, std::mt19937_64& rng)
{
    DerivationSpec E;
    for (int attempt = 0; attempt < 32; ++attempt) {
        Vec P = random_odd_element(V, rng);
        if (P.is_zero())
            continue;
        int degree = *homogeneous_degree(V.basis(), P);
        Vec q = V.proj_p(random_homogeneous(V, degree, rng));
        E.degree = degree;
        E.p_element = P;
        E.ehat = LinMap{};
        E.ehat.degree = degree;
        for (int i = 0; i < V.basis().size(); ++i)
            E.ehat.set_col(i, V.gla.bracket(q, basis_vec(i)));
        if (check_adapted(V, E).passed())
            return E;
    }
    throw input_error("could not draw a random adapted derivation");
}

TimeDerivation random_time_derivation(const VAlgebra& V, int order, std::mt19937_64& rng)
{
    TimeDerivation m;
    for (int k = 0; k <= order; ++k) {
        LinMap coeff;
        coeff.degree = 0;
        bool pure_inner = rand_int(rng, 0, 1) == 1;
        Rat euler_scale = Rat(rand_int(rng, 1, 2));
        Vec z = V.proj_p(random_homogeneous(V, 0, rng));
        for (int i = 0; i < V.basis().size(); ++i) {
            Vec col = V.gla.bracket(z, basis_vec(i));
            if (!pure_inner) {
                // grading derivation: x -> deg(x) x
                col.add_term(i, Rat(V.basis().degree(i)) * euler_scale);
            }
            coeff.set_col(i, std::move(col));
        }
        m.coeff.push_back(std::move(coeff));
        if (pure_inner)
            m.inner.push_back(z);
        else
            m.inner.push_back(std::nullopt);
    }
    return m;
}

MorphismSeries random_morphism_series(const VAlgebra& V, int arity, int N,
                                      std::mt19937_64& rng)
{
    MorphismSeries U(N, arity);
    for (int n = 1; n <= arity; ++n)
        for (auto& w : canonical_a_words(V, n)) {
            int target = word_degree(V.basis(), w);
            Series<Vec> series(N);
            bool nonzero = false;
            for (int k = 0; k <= N; ++k) {
                Vec v;
                for (int i : V.a_indices)
                    if (V.basis().degree(i) == target && rand_int(rng, 0, 2) == 0)
                        v.add_term(i, Rat(rand_int(rng, -2, 2)));
                if (!v.is_zero())
                    nonzero = true;
                series.c[k] = std::move(v);
            }
            if (nonzero)
                U.comps[n - 1][w] = std::move(series);
        }
    return U;
}

} // namespace dbr
