// dbrack: exact checks of higher derived bracket structures and their
// gauge flows on finite graded Lie algebra instances.

#include "dbr/fixtures.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace dbr;

struct RunState {
    bool identity_failure = false;

    void show(const Report& rep)
    {
        std::cout << rep.to_string() << "\n";
        if (!rep.passed())
            identity_failure = true;
    }
};

void emit_family_tables(const VAlgebra& V, const BracketFamily& F, int n_max)
{
    std::cout << "  D0 = " << format_vec(V.basis(), F.m0) << "\n";
    for (int n = 1; n <= n_max; ++n)
        for (auto& w : canonical_a_words(V, n)) {
            Vec val = F.eval_word(w);
            if (!val.is_zero())
                std::cout << "  D" << n << format_word(V.basis(), w) << " = "
                          << format_vec(V.basis(), val) << "\n";
        }
}

void emit_u_tables(const VAlgebra& V, const MorphismSeries& U)
{
    for (int n = 1; n <= U.arity_max; ++n)
        for (auto& w : canonical_a_words(V, n)) {
            Series<Vec> series = U.eval_word(w);
            if (series_is_zero(series))
                continue;
            for (int k = 0; k <= series.order; ++k)
                if (!series.c[k].is_zero())
                    std::cout << "  U" << n << format_word(V.basis(), w) << " t^" << k
                              << " = " << format_vec(V.basis(), series.c[k]) << "\n";
        }
}

bool run_validate(RunState& state, const Instance& inst)
{
    size_t before = 0;
    auto count_fail = [&](const Report& rep) {
        state.show(rep);
        if (!rep.passed())
            ++before;
    };
    count_fail(validate_gla(inst.V.gla));
    count_fail(validate_valgebra(inst.V));
    count_fail(check_adapted(inst.V, inst.E));
    Report mc;
    mc.title = "Maurer-Cartan";
    McResult res = is_maurer_cartan(inst.V, inst.E);
    if (!res.ok)
        mc.fail("E.E != 0; witness " + res.witness);
    if (!inst.E.p_element.is_zero() || !inst.E.ehat.cols.empty())
        count_fail(mc);
    if (inst.mt.order() >= 0)
        count_fail(validate_time_derivation(inst.V, inst.mt));
    return before == 0;
}

void run_brackets(RunState& state, const Instance& inst, int n_max)
{
    BracketFamily F = derived_brackets(inst.V, inst.E, n_max + 1);
    std::cout << "derived brackets up to arity " << n_max << ":\n";
    emit_family_tables(inst.V, F, n_max);
    state.show(check_linfty(inst.V, F, n_max));
    state.show(check_codifferential(inst.V, F, n_max));
    state.show(check_coderivation(inst.V, F, n_max));
    if (inst.E.degree % 2 != 0) {
        state.show(check_JD2(inst.V, inst.E, n_max));
        if (inst.E.ehat.cols.empty())
            state.show(check_JD(inst.V, inst.E.p_element, n_max));
    }
}

void run_flow(RunState& state, const Instance& inst, int n_max, int t_max)
{
    if (inst.mt.order() < 0) {
        std::cout << "[ ok ] flow: no time derivation in the instance; nothing to do\n";
        return;
    }
    const VAlgebra& V = inst.V;
    FlowAutomorphism flow = integrate_flow(V, inst.mt, t_max);
    state.show(check_flow(V, inst.mt, flow));

    DerivationSeries Et = transport_mc(V, inst.E, flow);
    state.show(check_transport(V, Et));

    int arity = n_max + 1;
    FamilySeries Qt = transported_families(V, Et, arity);
    FamilySeries M = build_M(V, inst.mt, arity, t_max);
    BracketFamily Q0 = derived_brackets(V, inst.E, arity);

    std::cout << "E_t components:\n";
    for (int k = 0; k <= Et.order(); ++k)
        std::cout << "  P_t t^" << k << " = " << format_vec(V.basis(), Et.coeff[k].p_element)
                  << "\n";
    std::cout << "M(t) tables:\n";
    for (size_t k = 0; k < M.size(); ++k) {
        std::cout << " order t^" << k << ":\n";
        emit_family_tables(V, M[k], std::min(n_max, M[k].arity_max));
    }

    MorphismSeries U = build_U(V, flow, arity, t_max);
    std::cout << "U(t) tables:\n";
    emit_u_tables(V, U);

    Report unique;
    unique.title = "U uniqueness (recursion vs integrated flow equation)";
    MorphismSeries U2 = build_U_by_ode(V, inst.mt, arity, t_max);
    for (int n = 1; n <= arity; ++n)
        for (auto& w : canonical_a_words(V, n))
            if (!(U.eval_word(w) == U2.eval_word(w)))
                unique.fail("components differ on " + format_word(V.basis(), w));
    state.show(unique);

    state.show(check_U_ode(V, inst.mt, U));
    state.show(check_Q_ode(V, Qt, M, n_max));
    state.show(check_U_coalgebra(V, U, n_max));
    state.show(check_Z(V, U, Qt, Q0, n_max));
    for (int n = 1; n <= std::min(n_max, 3); ++n) {
        auto words = canonical_a_words(V, n);
        if (!words.empty())
            state.show(appendix_identity(V, inst.mt, U, words.front()));
    }
}

void run_poisson_extras(RunState& state, const Instance& inst, int n_max,
                        unsigned long seed)
{
    const PoissonModel& model = *inst.model;
    CoisotropyResult coiso = is_coisotropic(model, *inst.pi);
    state.show(coiso.poisson_check);
    Report verdict;
    verdict.title = "coisotropy";
    verdict.note(coiso.coisotropic ? "S is coisotropic; structure is flat"
                                   : "S is not coisotropic; structure is curved");
    verdict.note("Pi_a[pi] = " + format_vec(model.V.basis(), coiso.projection));
    state.show(verdict);
    Report post;
    pinfty_brackets(model, *inst.pi, n_max, &post);
    state.show(post);
    state.show(check_truncation_consistency(model));
    state.show(check_multiderivation(model, *inst.pi, std::min(n_max, 3), 20, seed));
}

enum class Outcome { Ran, Skipped };

Outcome dispatch(const std::string& command, const Instance& inst, int n_max, int t_max,
                 unsigned long seed, bool skip_missing_poisson, RunState& state)
{
    if (command == "poisson" && !inst.model) {
        if (skip_missing_poisson) {
            std::cout << "(no poisson section; skipped)\n";
            return Outcome::Skipped;
        }
        throw input_error("poisson command needs an instance with a poisson section");
    }
    bool sound = run_validate(state, inst);
    if (command == "validate")
        return Outcome::Ran;
    if (!sound) {
        std::cout << "validation failed; skipping identity checks for this instance\n";
        return Outcome::Ran;
    }
    if (command == "poisson")
        run_poisson_extras(state, inst, n_max, seed);
    run_brackets(state, inst, n_max);
    if (command == "flow" || command == "poisson")
        run_flow(state, inst, n_max, t_max);
    return Outcome::Ran;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact higher derived bracket and gauge flow checks"};
    app.require_subcommand(1);

    std::string file;
    bool fixtures = false;
    int n_max = 3;
    int t_max = 3;
    unsigned long seed = 20250101;
    std::string emit_path;

    auto add_common = [&](CLI::App* cmd, bool with_orders) {
        cmd->add_option("file", file, "instance file (JSON)");
        cmd->add_flag("--fixtures", fixtures, "run every shipped fixture instead");
        if (with_orders) {
            cmd->add_option("--nmax", n_max, "maximal word length / arity checked");
            cmd->add_option("--tmax", t_max, "truncation order N of the formal parameter");
        }
        cmd->add_option("--seed", seed, "seed for randomized property batches");
    };

    add_common(app.add_subcommand("validate", "structure validation only"), false);
    add_common(app.add_subcommand("brackets", "derived brackets and Jacobiator checks"), true);
    add_common(app.add_subcommand("flow", "gauge flow and L-infinity isomorphism checks"), true);
    auto* poisson_cmd =
        app.add_subcommand("poisson", "build the submanifold instance, then everything");
    add_common(poisson_cmd, true);
    poisson_cmd->add_option("--emit", emit_path, "write the generated algebra as an instance file");

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        struct Run {
            std::string name;
            InstanceData data;
            bool expect_failure = false;
        };
        std::vector<Run> runs;
        if (fixtures) {
            for (auto& f : shipped_fixtures())
                runs.push_back({f.name, f.data, f.expect_failure});
        } else {
            if (file.empty())
                throw dbr::input_error("an instance file (or --fixtures) is required");
            runs.push_back({file, dbr::load_instance(file), false});
        }

        bool any_failure = false;
        for (auto& run : runs) {
            std::cout << "== " << run.name << " ==\n";
            RunState state;
            Instance inst = materialize(run.data);
            Outcome outcome = dispatch(command, inst, n_max, t_max, seed, fixtures, state);
            if (outcome == Outcome::Skipped)
                continue;
            if (!emit_path.empty() && inst.model) {
                InstanceData out = algebra_instance(inst.V, &inst.E,
                                                    inst.mt.order() >= 0 ? &inst.mt : nullptr);
                std::ofstream os(emit_path);
                if (!os)
                    throw dbr::input_error("cannot write '" + emit_path + "'");
                os << emit_instance(out);
                std::cout << "emitted algebra instance to " << emit_path << "\n";
            }
            if (run.expect_failure) {
                if (state.identity_failure) {
                    std::cout << "(failure expected for this fixture: ok)\n";
                } else {
                    std::cout << "(expected a failure but everything passed)\n";
                    any_failure = true;
                }
            } else if (state.identity_failure) {
                any_failure = true;
            }
        }
        if (any_failure) {
            std::cout << "RESULT: identity failures present\n";
            return 1;
        }
        std::cout << "RESULT: all checks passed\n";
        return 0;
    } catch (const dbr::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
