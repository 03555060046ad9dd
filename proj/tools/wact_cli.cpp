// Command-line frontend: variety/algebra/action files in, exact reports out.
// Exit codes: 0 success, 1 mathematical negative, 2 input or usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wact/acceptance.hpp"
#include "wact/actions.hpp"
#include "wact/bracket_family.hpp"
#include "wact/report.hpp"

using namespace wact;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

VarietySpec load_variety(const std::string& spec, const FieldSpec& field) {
    if (std::filesystem::exists(spec)) return parse_variety(slurp(spec), field);
    return builtin_variety(spec, field);
}

Algebra load_algebra(const std::string& spec, const FieldSpec& field, bool field_given) {
    if (std::filesystem::exists(spec)) {
        Algebra a = parse_algebra(slurp(spec));
        if (field_given && !(a.field() == field))
            throw std::invalid_argument("algebra file declares field " + a.field().str() +
                                        " but --field says " + field.str());
        return a;
    }
    if (field_given) return fixture_algebra(spec, field);
    return fixture_algebra(spec);
}

BracketRules rules_for(const VarietySpec& v) {
    if (auto rr = reduced_rule(v)) return *rr;
    AccessibilityReport rep = accessibility_check(v);
    if (!rep.accessible)
        throw std::invalid_argument("variety " + v.name + " is not action accessible: " +
                                    rep.failure_reason.value_or(""));
    return *rep.witness;
}

void emit(const Report& rep, bool machine) {
    if (machine)
        std::cout << rep.machine_text();
    else {
        std::cout << rep.human;
        if (!rep.records.empty()) {
            std::cout << "--\n" << rep.machine_text();
        }
    }
}

void add_rules(Report& rep, const LambdaMuRules& r) {
    Vec l(r.lambda.begin(), r.lambda.end()), m(r.mu.begin(), r.mu.end());
    rep.add("lambda", scalar_list(l));
    rep.add("mu", scalar_list(m));
}

struct Options {
    std::string field_name = "Q";
    bool field_given = false;
    bool machine = false;

    FieldSpec field() const {
        auto f = FieldSpec::parse(field_name);
        if (!f) throw std::invalid_argument("bad field '" + field_name + "' (use Q or F<p>)");
        return *f;
    }
};

LambdaMuRules parse_rule_overrides(const VarietySpec& v, const std::string& lambda_txt,
                                   const std::string& mu_txt) {
    Vec l = parse_scalar_list(v.field, lambda_txt);
    Vec m = parse_scalar_list(v.field, mu_txt);
    if (l.size() != 8 || m.size() != 8)
        throw std::invalid_argument("--lambda and --mu need 8 comma-separated scalars each");
    LambdaMuRules rules(v.field);
    for (std::size_t i = 0; i < 8; ++i) {
        rules.lambda[i] = l[i];
        rules.mu[i] = m[i];
    }
    if (!lambda_mu_valid(v, rules))
        throw std::invalid_argument("the supplied rules are not identities of " + v.name);
    return rules;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for weak actors of non-associative algebras"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--field", opt.field_name, "ground field: Q or F<p>")->each([&](const std::string&) {
        opt.field_given = true;
    });
    app.add_flag("--machine", opt.machine, "print only the machine record");

    std::string variety_arg, algebra_arg, action_arg, b_arg, x_arg, params_arg, kind_arg = "structure";
    std::string lambda_arg, mu_arg, actor_kind_arg, out_arg;
    std::int64_t prime_arg = 5;
    int epsilon_arg = 0;
    bool report_dim = false;

    auto* cv = app.add_subcommand("check-variety", "parse a variety, optionally test an algebra against it");
    cv->add_option("--variety", variety_arg)->required();
    cv->add_option("--algebra", algebra_arg);

    auto* acc = app.add_subcommand("accessibility", "decide action accessibility and report the rules");
    acc->add_option("--variety", variety_arg)->required();

    auto* lm = app.add_subcommand("lambda-mu", "print the canonical rule witness");
    lm->add_option("--variety", variety_arg)->required();

    auto* cons = app.add_subcommand("consequences", "degree-4 consequence space of the identities");
    cons->add_option("--variety", variety_arg)->required();

    auto* bf = app.add_subcommand("bracket-family", "the parametric bracket family");
    bf->add_option("--variety", variety_arg)->required();

    auto* cc = app.add_subcommand("closure-check", "totality of the bracket family");
    cc->add_option("--variety", variety_arg)->required();
    cc->add_option("--params", params_arg, "evaluate at one parameter point");

    auto* sc = app.add_subcommand("structure-check", "variety structure of the bracket family");
    sc->add_option("--variety", variety_arg)->required();
    sc->add_option("--params", params_arg, "evaluate at one parameter point");

    auto* sp = app.add_subcommand("solve-params", "brute-force parameter solutions over F_p");
    sp->add_option("--variety", variety_arg)->required();
    sp->add_option("--prime", prime_arg);
    sp->add_option("--kind", kind_arg, "closure or structure");

    auto* ei = app.add_subcommand("emit-ideal", "export the constraint ideal as text");
    ei->add_option("--variety", variety_arg)->required();
    ei->add_option("--kind", kind_arg, "closure or structure");
    ei->add_option("--out", out_arg, "write to a file instead of stdout");

    auto* act = app.add_subcommand("actor", "compute the external weak actor of an algebra");
    act->add_option("--variety", variety_arg)->required();
    act->add_option("--algebra", algebra_arg)->required();
    act->add_flag("--report-dim", report_dim, "only report the dimension");
    act->add_option("--lambda", lambda_arg, "rule override (8 scalars)");
    act->add_option("--mu", mu_arg, "rule override (8 scalars)");

    auto* na = app.add_subcommand("named-actor", "one of the classical operator constructions");
    na->add_option("--kind", actor_kind_arg, "multipliers|bimultipliers|biderivations|antiderivations|derivations|nil2_square_killers|acaa")->required();
    na->add_option("--algebra", algebra_arg)->required();
    na->add_option("--epsilon", epsilon_arg, "pairing sign for nil2_square_killers");

    auto* va = app.add_subcommand("verify-action", "validate a derived action");
    va->add_option("--action", action_arg)->required();
    va->add_option("--B", b_arg)->required();
    va->add_option("--X", x_arg)->required();
    va->add_option("--variety", variety_arg)->required();

    auto* sd = app.add_subcommand("semidirect", "construct the semidirect product of a valid action");
    sd->add_option("--action", action_arg)->required();
    sd->add_option("--B", b_arg)->required();
    sd->add_option("--X", x_arg)->required();
    sd->add_option("--variety", variety_arg)->required();
    sd->add_option("--out", out_arg, "write the algebra file here");

    auto* tc = app.add_subcommand("tau", "the morphism into the weak actor induced by an action");
    tc->add_option("--action", action_arg)->required();
    tc->add_option("--B", b_arg)->required();
    tc->add_option("--X", x_arg)->required();
    tc->add_option("--variety", variety_arg)->required();

    auto* fx = app.add_subcommand("fixtures", "list built-in varieties and algebras");
    auto* ps = app.add_subcommand("paper-suite", "run every reproduction check");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        FieldSpec field = opt.field();
        Report rep;
        rep.add("field", field.str());

        if (cv->parsed()) {
            VarietySpec v = load_variety(variety_arg, field);
            rep.add("variety", v.name);
            rep.add("identities", v.identities.size());
            rep.note("variety " + v.name + " with " + std::to_string(v.identities.size()) + " identities");
            if (!algebra_arg.empty()) {
                Algebra a = load_algebra(algebra_arg, field, true);
                bool member = satisfies_all(a, v);
                rep.add("algebra", a.name());
                rep.add("member", member);
                rep.note(a.name() + (member ? " lies in " : " is NOT in ") + v.name);
                emit(rep, opt.machine);
                return member ? kOk : kNegative;
            }
            emit(rep, opt.machine);
            return kOk;
        }

        if (acc->parsed() || lm->parsed()) {
            VarietySpec v = load_variety(variety_arg, field);
            AccessibilityReport r = accessibility_check(v);
            rep.add("variety", v.name);
            rep.add("rank", r.rank);
            rep.add("accessible", r.accessible);
            if (r.accessible) {
                add_rules(rep, *r.witness);
                rep.note(v.name + ": accessible, rank " + std::to_string(r.rank));
            } else {
                rep.add("failure_reason", *r.failure_reason);
                rep.note(v.name + ": not accessible (" + *r.failure_reason + ")");
            }
            emit(rep, opt.machine);
            return r.accessible ? kOk : kNegative;
        }

        if (cons->parsed()) {
            VarietySpec v = load_variety(variety_arg, field);
            ConsequenceSpace cs = degree4_consequences(v);
            rep.add("variety", v.name);
            rep.add("generators", cs.degree4_matrix.rows());
            rep.add("rank", cs.rank);
            rep.note(v.name + ": " + std::to_string(cs.degree4_matrix.rows()) + " generator rows of rank " +
                     std::to_string(cs.rank));
            emit(rep, opt.machine);
            return kOk;
        }

        if (bf->parsed()) {
            VarietySpec v = load_variety(variety_arg, field);
            ParamBracket fam = build_bracket_family(v);
            rep.add("variety", v.name);
            rep.add("params", fam.param_count());
            add_rules(rep, fam.base);
            for (std::size_t i = 0; i < fam.free_rows.size(); ++i) {
                Vec row(fam.free_rows[i].begin(), fam.free_rows[i].end());
                rep.add("free_row" + std::to_string(i), scalar_list(row));
            }
            rep.note(v.name + ": " + std::to_string(fam.param_count()) + " parameters");
            emit(rep, opt.machine);
            return kOk;
        }

        if (cc->parsed() || sc->parsed()) {
            bool closure = cc->parsed();
            VarietySpec v = load_variety(variety_arg, field);
            ParamBracket fam = build_bracket_family(v);
            ConstraintSystem cs =
                closure ? closure_constraints(v, fam) : structure_constraints(v, fam);
            rep.add("variety", v.name);
            rep.add("kind", std::string(closure ? "closure" : "structure"));
            rep.add("params", fam.param_count());
            rep.add("constraints", cs.polys.size());
            if (!params_arg.empty()) {
                std::vector<Scalar> pt = parse_scalar_list(v.field, params_arg);
                if (pt.size() != fam.param_count())
                    throw std::invalid_argument("--params needs " + std::to_string(fam.param_count()) +
                                                " scalars");
                bool ok = cs.satisfied_by(pt);
                rep.add("satisfied", ok);
                rep.note(std::string(closure ? "closure" : "structure") + " at (" + params_arg + "): " +
                         (ok ? "satisfied" : "violated"));
                emit(rep, opt.machine);
                return ok ? kOk : kNegative;
            }
            if (cs.polys.empty()) {
                rep.note("empty system: every parameter assignment works");
                emit(rep, opt.machine);
                return kOk;
            }
            if (closure) {
                LinearAnalysis lin = analyze_linear(cs);
                rep.add("feasible", lin.consistent);
                if (lin.consistent) rep.add("solution_dim", lin.solution_dim);
                rep.note(lin.consistent
                             ? "solvable, solution dimension " + std::to_string(lin.solution_dim)
                             : "infeasible: no parameter assignment yields a total bracket");
            } else {
                rep.note(std::to_string(cs.polys.size()) + " structure constraints");
            }
            emit(rep, opt.machine);
            return kNegative;
        }

        if (sp->parsed()) {
            VarietySpec v = load_variety(variety_arg, field);
            ParamBracket fam = build_bracket_family(v);
            ConstraintSystem cs = kind_arg == "closure" ? closure_constraints(v, fam)
                                                        : structure_constraints(v, fam);
            auto sols = brute_force_solutions(cs, prime_arg);
            rep.add("variety", v.name);
            rep.add("kind", kind_arg);
            rep.add("prime", std::to_string(prime_arg));
            rep.add("solutions", sols.size());
            for (std::size_t i = 0; i < sols.size(); ++i)
                rep.add("solution" + std::to_string(i), scalar_list(sols[i]));
            rep.note(std::to_string(sols.size()) + " solutions over F" + std::to_string(prime_arg));
            emit(rep, opt.machine);
            return sols.empty() ? kNegative : kOk;
        }

        if (ei->parsed()) {
            VarietySpec v = load_variety(variety_arg, field);
            ParamBracket fam = build_bracket_family(v);
            ConstraintSystem cs = kind_arg == "closure" ? closure_constraints(v, fam)
                                                        : structure_constraints(v, fam);
            std::string text = emit_ideal(cs);
            if (out_arg.empty())
                std::cout << text;
            else {
                std::ofstream out(out_arg);
                if (!out) throw std::invalid_argument("cannot write '" + out_arg + "'");
                out << text;
            }
            return kOk;
        }

        if (act->parsed()) {
            VarietySpec v = load_variety(variety_arg, field);
            Algebra x = load_algebra(algebra_arg, v.field, true);
            if (!satisfies_all(x, v)) {
                rep.add("member", false);
                rep.note(x.name() + " is not in " + v.name);
                emit(rep, opt.machine);
                return kNegative;
            }
            bool override_given = !lambda_arg.empty() || !mu_arg.empty();
            BracketRules rules =
                override_given ? BracketRules{parse_rule_overrides(v, lambda_arg, mu_arg)} : rules_for(v);
            WeakActorSpace space = compute_actor_space(v, x, rules);
            rep.add("variety", v.name);
            rep.add("algebra", x.name());
            rep.add("rules", std::string(override_given ? "override"
                                         : std::holds_alternative<ReducedRule>(rules) ? "reduced"
                                                                                      : "witness"));
            rep.add("dim", space.dim());
            rep.note("dim E(" + x.name() + ") = " + std::to_string(space.dim()));
            if (!report_dim) {
                bool total = is_total(space);
                rep.add("total", total);
                if (total) rep.add("satisfies_variety", satisfies_variety(space));
                for (std::size_t i = 0; i < space.basis.size(); ++i) {
                    add_matrix(rep, "basis" + std::to_string(i) + ".left", space.basis[i].left);
                    add_matrix(rep, "basis" + std::to_string(i) + ".right", space.basis[i].right);
                }
            }
            emit(rep, opt.machine);
            return kOk;
        }

        if (na->parsed()) {
            auto kind = actor_kind_from_name(actor_kind_arg);
            if (!kind) throw std::invalid_argument("unknown actor kind '" + actor_kind_arg + "'");
            Algebra x = load_algebra(algebra_arg, field, opt.field_given);
            WeakActorSpace space = named_actor(*kind, x, epsilon_arg);
            rep.add("kind", actor_kind_arg);
            rep.add("algebra", x.name());
            rep.add("dim", space.dim());
            rep.add("commutative_composition", commutativity_report(space));
            rep.note(actor_kind_arg + "(" + x.name() + ") has dimension " + std::to_string(space.dim()));
            emit(rep, opt.machine);
            return kOk;
        }

        if (va->parsed() || sd->parsed() || tc->parsed()) {
            VarietySpec v = load_variety(variety_arg, field);
            Algebra b = load_algebra(b_arg, v.field, true);
            Algebra x = load_algebra(x_arg, v.field, true);
            DerivedAction action = parse_action(slurp(action_arg), b, x);
            bool valid = validate_action(v, action);
            rep.add("variety", v.name);
            rep.add("B", b.name());
            rep.add("X", x.name());
            rep.add("valid", valid);
            if (!valid) {
                rep.note("not a derived action in " + v.name);
                emit(rep, opt.machine);
                return kNegative;
            }
            if (va->parsed()) {
                rep.note("valid derived action in " + v.name);
                emit(rep, opt.machine);
                return kOk;
            }
            if (sd->parsed()) {
                Algebra s = semidirect(v, action);
                std::string text = algebra_to_text(s);
                if (out_arg.empty())
                    std::cout << text;
                else {
                    std::ofstream out(out_arg);
                    if (!out) throw std::invalid_argument("cannot write '" + out_arg + "'");
                    out << text;
                }
                return kOk;
            }
            WeakActorSpace space = compute_actor_space(v, x, rules_for(v));
            ActorMorphism phi = tau(action, space);
            rep.add("images", phi.images.size());
            for (std::size_t i = 0; i < phi.images.size(); ++i) {
                add_matrix(rep, "tau" + std::to_string(i) + ".left", phi.images[i].left);
                add_matrix(rep, "tau" + std::to_string(i) + ".right", phi.images[i].right);
            }
            rep.note("tau lands in E(X) and is a homomorphism of partial algebras");
            emit(rep, opt.machine);
            return kOk;
        }

        if (fx->parsed()) {
            rep.note("varieties:");
            for (const auto& name : builtin_variety_names()) {
                VarietySpec v = builtin_variety(name, FieldSpec::rationals());
                std::string ids;
                for (const auto& id : v.identities) ids += (ids.empty() ? "" : "; ") + id.str();
                rep.note("  " + name + ": " + ids);
                rep.add("variety." + name, std::to_string(v.identities.size()));
            }
            rep.note("algebras:");
            for (const auto& name : fixture_algebra_names()) {
                Algebra a = fixture_algebra(name);
                rep.note("  " + name + ": dim " + std::to_string(a.dim()) + " over " + a.field().str());
                rep.add("algebra." + name, std::to_string(a.dim()));
            }
            rep.note("actor kinds: multipliers bimultipliers biderivations antiderivations derivations "
                     "nil2_square_killers acaa");
            emit(rep, opt.machine);
            return kOk;
        }

        if (ps->parsed()) {
            bool ok = run_paper_suite(std::cout);
            return ok ? kOk : kNegative;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
