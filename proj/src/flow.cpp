#include "dbr/flow.hpp"

namespace dbr {

Series<LinMap> TimeDerivation::as_series(int N) const
{
    Series<LinMap> s(N);
    for (int k = 0; k <= std::min(N, order()); ++k)
        s.c[k] = coeff[k];
    return s;
}

Report validate_time_derivation(const VAlgebra& V, const TimeDerivation& m)
{
    Report rep;
    rep.title = "time derivation";
    for (int k = 0; k <= m.order(); ++k) {
        std::string at = " at order t^" + std::to_string(k);
        if (m.coeff[k].degree != 0)
            rep.fail("degree is not 0" + at);
        Report der = check_derivation(V.gla, m.coeff[k]);
        for (auto& f : der.failures)
            rep.fail(f + at);
        for (int i : V.p_indices())
            if (!V.proj_a(m.coeff[k].apply_basis(i)).is_zero()) {
                rep.fail("Pi_a m Pi_a = Pi_a m fails" + at + " on column " +
                         V.basis().name(i));
                break;
            }
        if (m.inner.size() > static_cast<size_t>(k) && m.inner[k]) {
            LinMap ad;
            ad.degree = 0;
            for (int i = 0; i < V.basis().size(); ++i)
                ad.set_col(i, V.gla.bracket(*m.inner[k], basis_vec(i)));
            if (!(ad == m.coeff[k]))
                rep.fail("inner tag does not reproduce the coefficient" + at);
        }
    }
    return rep;
}

FlowAutomorphism integrate_flow(const VAlgebra& V, const TimeDerivation& m, int N)
{
    Report valid = validate_time_derivation(V, m);
    if (!valid.passed())
        throw input_error("time derivation rejected: " + valid.failures.front());
    int dim = V.basis().size();
    FlowAutomorphism flow;
    flow.phi = Series<LinMap>(N);
    flow.phi.c[0] = LinMap::identity(dim);
    for (int k = 0; k < N; ++k) {
        LinMap acc;
        for (int i = 0; i <= k; ++i) {
            if (i > m.order())
                break;
            acc += compose(m.coeff[i], flow.phi.c[k - i]);
        }
        flow.phi.c[k + 1] = Rat(1, k + 1) * acc;
    }
    flow.phi_inv = invert(flow.phi, dim);
    return flow;
}

Report check_flow(const VAlgebra& V, const TimeDerivation& m, const FlowAutomorphism& flow)
{
    Report rep;
    rep.title = "flow automorphism";
    int N = flow.phi.order;
    rep.note("mod t^" + std::to_string(N + 1));
    int dim = V.basis().size();
    if (!(flow.phi.c[0] == LinMap::identity(dim)))
        rep.fail("phi(0) is not the identity");
    if (N > 0) {
        Series<LinMap> lhs = differentiate_in_t(flow.phi);
        Series<LinMap> rhs = truncate(compose(m.as_series(N), flow.phi), N - 1);
        if (!(lhs == rhs))
            rep.fail("flow equation d/dt phi = m_t . phi fails");
    }
    Series<LinMap> unit = compose(flow.phi, flow.phi_inv);
    if (!(unit == Series<LinMap>::constant(LinMap::identity(dim), N)))
        rep.fail("phi . phi^{-1} is not the unit series");
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            Series<Vec> lhs = V.gla.bracket(apply(flow.phi, basis_vec(i)),
                                            apply(flow.phi, basis_vec(j)));
            Series<Vec> rhs = apply(flow.phi, V.gla.bracket_basis(i, j));
            if (!(lhs == rhs)) {
                rep.fail("bracket automorphism fails on (" + V.basis().name(i) + "," +
                         V.basis().name(j) + ")");
                break;
            }
        }
    for (int i : V.p_indices()) {
        Series<Vec> img = apply(flow.phi, basis_vec(i));
        if (!series_is_zero(V.proj_a(img)))
            rep.fail("phi does not preserve p at " + V.basis().name(i));
    }
    return rep;
}

DerivationSeries transport_mc(const VAlgebra& V, const DerivationSpec& E,
                              const FlowAutomorphism& flow)
{
    int N = flow.phi.order;
    Series<LinMap> ehat_t =
        compose(flow.phi, compose(Series<LinMap>::constant(E.ehat, N), flow.phi_inv));
    Series<Vec> p_t = apply(flow.phi, E.p_element);
    DerivationSeries out;
    out.coeff.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        out.coeff[k].degree = E.degree;
        out.coeff[k].ehat = ehat_t.c[k];
        out.coeff[k].ehat.degree = E.degree;
        out.coeff[k].p_element = p_t.c[k];
    }
    return out;
}

Report check_transport(const VAlgebra& V, const DerivationSeries& Et)
{
    Report rep;
    rep.title = "transported derivation";
    int N = Et.order();
    rep.note("mod t^" + std::to_string(N + 1));
    for (int k = 0; k <= N; ++k) {
        Report adapted = check_adapted(V, Et.coeff[k]);
        for (auto& f : adapted.failures)
            rep.fail(f + " at order t^" + std::to_string(k));
    }
    Series<LinMap> as_maps(N);
    for (int k = 0; k <= N; ++k)
        as_maps.c[k] = Et.coeff[k].as_map(V.gla);
    Series<LinMap> sq = compose(as_maps, as_maps);
    if (!series_is_zero(sq))
        rep.fail("E_t . E_t != 0");
    return rep;
}

FamilySeries transported_families(const VAlgebra& V, const DerivationSeries& Et, int n_max)
{
    int N = Et.order();
    FamilySeries out(N + 1, BracketFamily(n_max, Et.coeff[0].degree));
    for (int k = 0; k <= N; ++k)
        out[k].m0 = V.proj_a(Et.coeff[k].p_element);
    for (int n = 1; n <= n_max; ++n)
        for (auto& w : canonical_a_words(V, n)) {
            Series<Vec> cur(N);
            for (int k = 0; k <= N; ++k)
                cur.c[k] = Et.coeff[k].apply_basis(V.gla, w.letters[0]);
            for (int j = 1; j < n; ++j)
                cur = V.gla.bracket(cur, Series<Vec>::constant(basis_vec(w.letters[j]), N));
            for (int k = 0; k <= N; ++k) {
                Vec val = V.proj_a(cur.c[k]);
                if (!val.is_zero())
                    out[k].set_value(w, std::move(val));
            }
        }
    return out;
}

FamilySeries build_M(const VAlgebra& V, const TimeDerivation& m, int n_max, int N)
{
    FamilySeries out(N + 1, BracketFamily(n_max, 0));
    for (int k = 0; k <= std::min(N, m.order()); ++k) {
        if (m.inner.size() > static_cast<size_t>(k) && m.inner[k])
            out[k].m0 = V.proj_a(*m.inner[k]);
        for (int n = 1; n <= n_max; ++n)
            for (auto& w : canonical_a_words(V, n)) {
                Vec cur = m.coeff[k].apply_basis(w.letters[0]);
                for (int j = 1; j < n; ++j)
                    cur = V.gla.bracket(cur, basis_vec(w.letters[j]));
                Vec val = V.proj_a(cur);
                if (!val.is_zero())
                    out[k].set_value(w, std::move(val));
            }
    }
    return out;
}

Series<Vec> family_eval_series(const FamilySeries& fams, const SymWord& w)
{
    Series<Vec> out(static_cast<int>(fams.size()) - 1);
    for (size_t k = 0; k < fams.size(); ++k)
        out.c[k] = fams[k].eval_word(w);
    return out;
}

Series<Vec> MorphismSeries::eval_word(const SymWord& w) const
{
    if (w.size() < 1 || w.size() > arity_max)
        return Series<Vec>(order);
    auto& slot = comps[w.size() - 1];
    auto it = slot.find(w);
    return it == slot.end() ? Series<Vec>(order) : it->second;
}

Series<Vec> MorphismSeries::eval_letters(const GradedBasis& basis,
                                         const std::vector<int>& letters) const
{
    auto norm = normalize_word(basis, letters);
    if (!norm)
        return Series<Vec>(order);
    return Rat(norm->sign) * eval_word(norm->word);
}

std::vector<SymVec> MorphismSeries::apply(const VAlgebra& V, const SymWord& w) const
{
    std::vector<SymVec> out(order + 1);
    int n = w.size();
    if (n == 0) {
        out[0][SymWord{}] = 1;
        return out;
    }
    const auto& basis = V.basis();
    auto degs = word_degrees(basis, w);
    for (auto& blocks : set_partitions(n)) {
        Permutation sigma;
        for (auto& block : blocks)
            for (int pos : block)
                sigma.img.push_back(pos);
        int sign = koszul_sign(sigma, degs);
        std::vector<SymVec> cur(order + 1);
        cur[0][SymWord{}] = 1;
        for (auto& block : blocks) {
            SymWord bw;
            for (int pos : block)
                bw.letters.push_back(w.letters[pos]);
            Series<Vec> val = eval_word(bw);
            std::vector<SymVec> next(order + 1);
            for (int o1 = 0; o1 <= order; ++o1)
                for (auto& [word, c] : cur[o1])
                    for (int o2 = 0; o1 + o2 <= order; ++o2)
                        for (auto& [b, cb] : val.c[o2].terms) {
                            std::vector<int> letters = word.letters;
                            letters.push_back(b);
                            auto norm = normalize_word(basis, letters);
                            if (norm)
                                add_word(next[o1 + o2], norm->word,
                                         c * cb * Rat(norm->sign));
                        }
            cur = std::move(next);
        }
        for (int o = 0; o <= order; ++o)
            add_scaled(out[o], cur[o], Rat(sign));
    }
    return out;
}

CoalgMorphism MorphismSeries::at_order(int k) const
{
    CoalgMorphism U(arity_max);
    for (int n = 1; n <= arity_max; ++n)
        for (auto& [w, series] : comps[n - 1])
            if (!series.at(k).is_zero())
                U.set_value(w, series.at(k));
    return U;
}

MorphismSeries build_U(const VAlgebra& V, const FlowAutomorphism& flow, int n_max, int N)
{
    MorphismSeries U(N, n_max);
    for (int x : a_letters(V)) {
        Series<Vec> u1 = V.proj_a(apply(flow.phi, basis_vec(x)));
        U.comps[0][SymWord{{x}}] = std::move(u1);
    }
    const auto& basis = V.basis();
    for (int n = 2; n <= n_max; ++n) {
        for (auto& w : canonical_a_words(V, n)) {
            Series<Vec> total(N);
            auto degs = word_degrees(basis, w);
            for (auto& sigma : all_permutations(n)) {
                int sgn = koszul_sign(sigma, degs);
                for (int k = 1; k <= n - 1; ++k) {
                    Rat kfact = rat_factorial(k);
                    for (auto& mu : compositions(n - 1, k)) {
                        Rat weight = Rat(1) / (Rat(n) * kfact);
                        for (int part : mu)
                            weight /= rat_factorial(part);
                        Series<Vec> cur = apply(flow.phi, basis_vec(w.letters[sigma.img[0]]));
                        int pos = 1;
                        for (int part : mu) {
                            std::vector<int> block;
                            block.reserve(part);
                            for (int t = 0; t < part; ++t)
                                block.push_back(w.letters[sigma.img[pos + t]]);
                            pos += part;
                            cur = V.gla.bracket(cur, U.eval_letters(basis, block));
                        }
                        total = total + (Rat(sgn) * weight) * V.proj_a(cur);
                    }
                }
            }
            U.comps[n - 1][w] = std::move(total);
        }
    }
    return U;
}

Series<Vec> eval_flow_rhs(const VAlgebra& V, const TimeDerivation& m,
                          const MorphismSeries& U, const SymWord& w)
{
    int N = U.order;
    Series<LinMap> m_series = m.as_series(N);
    const auto& basis = V.basis();
    int n = w.size();
    Series<Vec> total(N);
    auto degs = word_degrees(basis, w);
    for (auto& sigma : all_permutations(n)) {
        int sgn = koszul_sign(sigma, degs);
        for (int k = 1; k <= n; ++k) {
            Rat kfact = rat_factorial(k);
            for (auto& parts : compositions(n, k)) {
                Rat weight = Rat(1) / kfact;
                for (int part : parts)
                    weight /= rat_factorial(part);
                // D^k_{m_t} on the U-blocks, as nested brackets
                Series<Vec> cur;
                int pos = 0;
                bool first = true;
                for (int part : parts) {
                    std::vector<int> block;
                    block.reserve(part);
                    for (int t = 0; t < part; ++t)
                        block.push_back(w.letters[sigma.img[pos + t]]);
                    pos += part;
                    Series<Vec> val = U.eval_letters(basis, block);
                    if (first) {
                        cur = apply(m_series, val);
                        first = false;
                    } else {
                        cur = V.gla.bracket(cur, val);
                    }
                }
                total = total + (Rat(sgn) * weight) * V.proj_a(cur);
            }
        }
    }
    return total;
}

MorphismSeries build_U_by_ode(const VAlgebra& V, const TimeDerivation& m, int n_max, int N)
{
    MorphismSeries U(N, n_max);
    for (int x : a_letters(V))
        U.comps[0][SymWord{{x}}] = Series<Vec>::constant(basis_vec(x), N);
    for (int n = 2; n <= n_max; ++n)
        for (auto& w : canonical_a_words(V, n))
            U.comps[n - 1][w] = Series<Vec>(N);
    for (int n = 1; n <= n_max; ++n)
        for (int ord = 0; ord < N; ++ord)
            for (auto& w : canonical_a_words(V, n)) {
                // coefficient ord of the rhs only reads U-coefficients <= ord
                Series<Vec> rhs = eval_flow_rhs(V, m, U, w);
                U.comps[n - 1][w].c[ord + 1] = Rat(1, ord + 1) * rhs.c[ord];
            }
    return U;
}

Report check_U_ode(const VAlgebra& V, const TimeDerivation& m, const MorphismSeries& U)
{
    Report rep;
    rep.title = "EQN";
    int N = U.order;
    rep.note("mod t^" + std::to_string(N) + ", arities 1.." + std::to_string(U.arity_max));
    for (int n = 1; n <= U.arity_max; ++n)
        for (auto& w : canonical_a_words(V, n)) {
            Series<Vec> lhs = differentiate_in_t(U.eval_word(w));
            Series<Vec> rhs = truncate(eval_flow_rhs(V, m, U, w), N > 0 ? N - 1 : 0);
            if (!(lhs == rhs))
                rep.fail("flow equation fails for U^" + std::to_string(n) + " on " +
                         format_word(V.basis(), w));
        }
    return rep;
}

namespace {

// pr . (F o G) on a word, F and G series of coderivations; pr . F is the
// family evaluation.
Series<Vec> pr_compose(const VAlgebra& V, const FamilySeries& F, const FamilySeries& G,
                       const SymWord& w)
{
    int N = static_cast<int>(F.size()) - 1;
    Series<Vec> out(N);
    for (int j = 0; j <= N; ++j) {
        SymVec gw = Coderivation{V, G[j]}.apply(w);
        for (auto& [u, c] : gw)
            for (int i = 0; i + j <= N; ++i)
                out.c[i + j] += c * F[i].eval_word(u);
    }
    return out;
}

} // namespace

Report check_Q_ode(const VAlgebra& V, const FamilySeries& Q, const FamilySeries& M, int n_max)
{
    Report rep;
    rep.title = "ODE1";
    int N = static_cast<int>(Q.size()) - 1;
    if (M.size() != Q.size())
        throw input_error("ODE1 needs matching truncation orders");
    rep.note("mod t^" + std::to_string(N) + ", words up to length " + std::to_string(n_max));
    for (int n = 0; n <= n_max; ++n)
        for (auto& w : canonical_a_words(V, n)) {
            Series<Vec> lhs = differentiate_in_t(family_eval_series(Q, w));
            Series<Vec> mq = pr_compose(V, M, Q, w);
            Series<Vec> qm = pr_compose(V, Q, M, w);
            Series<Vec> rhs = truncate(mq - qm, N > 0 ? N - 1 : 0);
            if (!(lhs == rhs))
                rep.fail("dQ/dt != M.Q - Q.M on " + format_word(V.basis(), w));
        }
    return rep;
}

Report check_Z(const VAlgebra& V, const MorphismSeries& U, const FamilySeries& Qt,
               const BracketFamily& Q0, int n_max)
{
    Report rep;
    rep.title = "Z";
    int N = U.order;
    if (static_cast<int>(Qt.size()) - 1 != N)
        throw input_error("Z check needs matching truncation orders");
    rep.note("mod t^" + std::to_string(N + 1) + ", words up to length " + std::to_string(n_max));
    Coderivation q0{V, Q0};
    for (int n = 0; n <= n_max; ++n)
        for (auto& w : canonical_a_words(V, n)) {
            // pr . Q(t) . U(t)
            Series<Vec> lhs(N);
            std::vector<SymVec> uw = U.apply(V, w);
            for (int j = 0; j <= N; ++j)
                for (auto& [u, c] : uw[j])
                    for (int i = 0; i + j <= N; ++i)
                        lhs.c[i + j] += c * Qt[i].eval_word(u);
            // pr . U(t) . Q(0)
            Series<Vec> rhs(N);
            for (auto& [u, c] : q0.apply(w))
                rhs = rhs + c * U.eval_word(u);
            Series<Vec> z = lhs - rhs;
            if (!series_is_zero(z))
                rep.fail("Z != 0 on " + format_word(V.basis(), w));
            if (n == 0 && !z.c[0].is_zero())
                rep.fail("Z(0) != 0 on the empty word");
        }
    return rep;
}

Report check_U_coalgebra(const VAlgebra& V, const MorphismSeries& U, int n_max)
{
    Report rep;
    rep.title = "U coalgebra morphism";
    rep.note("every t-order up to " + std::to_string(U.order));
    for (int k = 0; k <= U.order; ++k) {
        // Compare Delta(U w) with (U x U)(Delta w), t-orders convolved.
        for (int n = 0; n <= n_max; ++n)
            for (auto& w : canonical_a_words(V, n)) {
                std::map<std::pair<SymWord, SymWord>, Rat> lhs, rhs;
                std::vector<SymVec> uw = U.apply(V, w);
                for (auto& [u, c] : uw[k])
                    for (auto& [pair, d] : coproduct(V, u)) {
                        auto [it, ins] = lhs.emplace(pair, c * d);
                        if (!ins) {
                            it->second += c * d;
                            if (it->second == 0)
                                lhs.erase(it);
                        }
                    }
                for (auto& [pair, c] : coproduct(V, w)) {
                    std::vector<SymVec> lu = U.apply(V, pair.first);
                    std::vector<SymVec> ru = U.apply(V, pair.second);
                    for (int i = 0; i <= k; ++i)
                        for (auto& [u1, c1] : lu[i])
                            for (auto& [u2, c2] : ru[k - i]) {
                                auto key = std::make_pair(u1, u2);
                                Rat val = c * c1 * c2;
                                auto [it, ins] = rhs.emplace(key, val);
                                if (!ins) {
                                    it->second += val;
                                    if (it->second == 0)
                                        rhs.erase(it);
                                }
                            }
                }
                if (!(lhs == rhs))
                    rep.fail("coproduct compatibility fails on " + format_word(V.basis(), w) +
                             " at order t^" + std::to_string(k));
            }
    }
    return rep;
}

Report appendix_identity(const VAlgebra& V, const TimeDerivation& m,
                         const MorphismSeries& U, const SymWord& w)
{
    Report rep;
    rep.title = "APPX";
    int N = U.order;
    const auto& basis = V.basis();
    int n = w.size();
    if (n < 1)
        throw input_error("appendix identity needs a nonempty word");
    rep.note("word " + format_word(basis, w) + ", mod t^" + std::to_string(N + 1));
    Series<LinMap> m_series = m.as_series(N);
    auto degs = word_degrees(basis, w);

    auto nested = [&](const std::vector<Series<Vec>>& blocks) {
        Series<Vec> cur = apply(m_series, blocks[0]);
        for (size_t i = 1; i < blocks.size(); ++i)
            cur = V.gla.bracket(cur, blocks[i]);
        return V.proj_a(cur);
    };

    // composition-weighted sum: 1/(k! l_1!...l_k!)
    Series<Vec> first_sum = eval_flow_rhs(V, m, U, w);

    // recursion-weighted sum: 1/(n (r-1)! (a_1-1)! a_2!...a_r!)
    Series<Vec> second_sum(N);
    for (auto& sigma : all_permutations(n)) {
        int sgn = koszul_sign(sigma, degs);
        for (int r = 1; r <= n; ++r) {
            for (auto& parts : compositions(n, r)) {
                Rat weight = Rat(1) / (Rat(n) * rat_factorial(r - 1) *
                                       rat_factorial(parts[0] - 1));
                for (size_t j = 1; j < parts.size(); ++j)
                    weight /= rat_factorial(parts[j]);
                std::vector<Series<Vec>> blocks;
                int pos = 0;
                for (int part : parts) {
                    std::vector<int> block;
                    for (int t = 0; t < part; ++t)
                        block.push_back(w.letters[sigma.img[pos + t]]);
                    pos += part;
                    blocks.push_back(U.eval_letters(basis, block));
                }
                second_sum = second_sum + (Rat(sgn) * weight) * nested(blocks);
            }
        }
    }

    // boxes sum: one term per set partition, blocks by least element
    Series<Vec> boxes_sum(N);
    for (auto& blocks : set_partitions(n)) {
        Permutation sigma;
        for (auto& block : blocks)
            for (int pos : block)
                sigma.img.push_back(pos);
        int sgn = koszul_sign(sigma, degs);
        std::vector<Series<Vec>> vals;
        for (auto& block : blocks) {
            std::vector<int> letters;
            for (int pos : block)
                letters.push_back(w.letters[pos]);
            vals.push_back(U.eval_letters(basis, letters));
        }
        boxes_sum = boxes_sum + Rat(sgn) * nested(vals);
    }

    if (!(first_sum == second_sum))
        rep.fail("composition-weighted and recursion-weighted sums differ");
    if (!(first_sum == boxes_sum))
        rep.fail("composition-weighted and set-partition sums differ");
    return rep;
}

} // namespace dbr
