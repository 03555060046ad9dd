#include "wact/bracket_family.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>

namespace wact {

ConsequenceSpace degree4_consequences(const VarietySpec& v) {
    if (v.has_degree2_identity())
        throw std::invalid_argument(
            "degree4_consequences: variety has a degree-2 identity; use the reduced route");
    const FieldSpec& f = v.field;
    IdentityMatrices im = build_m3(v);
    std::vector<Variable> c3 = canonical_vars(3);
    std::vector<Variable> c4 = canonical_vars(4);
    MonomialOrdering ord3 = enumerate_multilinear(c3);
    MonomialOrdering ord4 = enumerate_multilinear(c4);
    Variable g{"g"}, fvar{"f"}, xvar{"x"}, yvar{"y"};
    MagmaWord gl = MagmaWord::leaf(g);
    MagmaWord fg = MagmaWord::node(MagmaWord::leaf(fvar), gl);
    MagmaWord gf = MagmaWord::node(gl, MagmaWord::leaf(fvar));

    ConsequenceSpace cs(f);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < im.rank; ++r) {
        MultilinearPoly p = from_row(im.rm3.row(r), ord3);
        std::vector<std::pair<MultilinearPoly, std::string>> derived;
        derived.emplace_back(border_multiply(p, g, Side::left), "g*(.)");
        derived.emplace_back(border_multiply(p, g, Side::right), "(.)*g");
        derived.emplace_back(substitute(p, xvar, MagmaWord::node(gl, MagmaWord::leaf(xvar))), "x->(g*x)");
        derived.emplace_back(substitute(p, xvar, MagmaWord::node(MagmaWord::leaf(xvar), gl)), "x->(x*g)");
        derived.emplace_back(substitute(p, yvar, MagmaWord::node(gl, MagmaWord::leaf(yvar))), "y->(g*y)");
        derived.emplace_back(substitute(p, yvar, MagmaWord::node(MagmaWord::leaf(yvar), gl)), "y->(y*g)");
        for (const auto& [q, tag] : derived) {
            MultilinearPoly q4 = permute_vars(q, {}, c4);  // same names, canonical order
            std::map<std::string, std::string> swap_fg{{"f", "g"}, {"g", "f"}};
            MultilinearPoly q4s = permute_vars(q4, swap_fg, c4);
            for (const auto& [word, c] : q4.terms())
                if (word.contains_subword(fg) || word.contains_subword(gf))
                    throw std::logic_error("degree4_consequences: unexpected operator-operator monomial");
            rows.push_back(to_row(q4, ord4));
            cs.generators.emplace_back(r, tag);
            rows.push_back(to_row(q4s, ord4));
            cs.generators.emplace_back(r, tag + " +swap");
        }
    }
    cs.degree4_matrix = ExactMatrix::from_rows(rows, 120, f);
    cs.rank = rank(cs.degree4_matrix);
    return cs;
}

std::array<ParamPoly, 8> ParamBracket::mu_expansion() const {
    std::array<ParamPoly, 8> out;
    for (std::size_t i = 0; i < 8; ++i) {
        out[i] = ParamPoly(base.mu[i]);
        for (std::size_t j = 0; j < free_rows.size(); ++j)
            out[i] += ParamPoly::var(j, field).scaled(free_rows[j][i]);
    }
    return out;
}

std::array<ParamPoly, 8> ParamBracket::lambda_expansion() const {
    std::array<ParamPoly, 8> out;
    std::size_t k = free_rows.size();
    for (std::size_t i = 0; i < 8; ++i) {
        out[i] = ParamPoly(base.lambda[i]);
        for (std::size_t j = 0; j < k; ++j)
            out[i] += ParamPoly::var(k + j, field).scaled(free_rows[j][i]);
    }
    return out;
}

LambdaMuRules ParamBracket::at(const std::vector<Scalar>& params) const {
    if (params.size() != param_count()) throw std::invalid_argument("ParamBracket::at: wrong parameter count");
    LambdaMuRules rules(field);
    auto mu = mu_expansion(), lambda = lambda_expansion();
    for (std::size_t i = 0; i < 8; ++i) {
        rules.mu[i] = mu[i].eval(params);
        rules.lambda[i] = lambda[i].eval(params);
    }
    return rules;
}

ParamBracket build_bracket_family(const VarietySpec& v) {
    if (v.has_degree2_identity())
        throw std::invalid_argument("build_bracket_family: variety has a degree-2 identity");
    IdentityMatrices im = build_m3(v);
    for (std::size_t c = 0; c < 4; ++c)
        if (std::find(im.pivot_cols.begin(), im.pivot_cols.end(), c) == im.pivot_cols.end())
            throw std::invalid_argument("build_bracket_family: variety is not action accessible");
    ParamBracket fam;
    fam.field = v.field;
    fam.base = extract_lambda_mu(im, v.field);
    // Free rows enter negated. With this orientation the standard Leibniz
    // biderivation bracket sits at the parameter point (1,0,0,0) instead of
    // its mirror image.
    for (std::size_t r = 0; r < im.rank; ++r) {
        if (im.pivot_cols[r] < 4) continue;
        Vec row = im.rm3.row(r);
        for (std::size_t c = 0; c < 4; ++c)
            if (!row[c].is_zero()) throw std::logic_error("free RM3 row touches a leading monomial");
        std::array<Scalar, 8> retagged;
        for (std::size_t i = 0; i < 8; ++i) retagged[i] = -row[kRuleColumns[i]];
        fam.free_rows.push_back(retagged);
    }
    return fam;
}

namespace {

// The eight expansion monomials as concrete trees: W is the element word the
// bracketed pair acts on, F and G the two factors. Order matches
// LambdaMuRules: (xf)g, (fx)g, g(xf), g(fx), (xg)f, (gx)f, f(xg), f(gx).
MagmaWord rule_pattern(std::size_t i, const MagmaWord& F, const MagmaWord& G, const MagmaWord& W) {
    using MW = MagmaWord;
    switch (i) {
        case 0: return MW::node(MW::node(W, F), G);
        case 1: return MW::node(MW::node(F, W), G);
        case 2: return MW::node(G, MW::node(W, F));
        case 3: return MW::node(G, MW::node(F, W));
        case 4: return MW::node(MW::node(W, G), F);
        case 5: return MW::node(MW::node(G, W), F);
        case 6: return MW::node(F, MW::node(W, G));
        case 7: return MW::node(F, MW::node(G, W));
    }
    throw std::logic_error("rule_pattern: bad index");
}

using ParamRow = std::vector<ParamPoly>;

// Replace the unique (f*g)-headed product in `word` by the eight expansion
// patterns, weighted by the parametric coefficients; rebuilds the enclosing
// context around each pattern.
void expand_fg_term(const MagmaWord& word, const MagmaWord& fg, const ParamPoly& coeff,
                    const std::array<ParamPoly, 8>& mu_exp, const std::array<ParamPoly, 8>& lambda_exp,
                    const MagmaWord& F, const MagmaWord& G,
                    const std::function<MagmaWord(const MagmaWord&)>& rebuild,
                    std::map<MagmaWord, ParamPoly>& acc) {
    if (word.is_leaf()) throw std::logic_error("expand_fg_term: no (f*g) node found");
    const MagmaWord l = word.left(), r = word.right();
    if (l == fg) {
        // (fg)*W: the mu side
        for (std::size_t i = 0; i < 8; ++i) {
            if (mu_exp[i].is_zero()) continue;
            MagmaWord replaced = rebuild(rule_pattern(i, F, G, r));
            acc[replaced] += coeff * mu_exp[i];
        }
        return;
    }
    if (r == fg) {
        // W*(fg): the lambda side
        for (std::size_t i = 0; i < 8; ++i) {
            if (lambda_exp[i].is_zero()) continue;
            MagmaWord replaced = rebuild(rule_pattern(i, F, G, l));
            acc[replaced] += coeff * lambda_exp[i];
        }
        return;
    }
    if (l.contains_subword(fg)) {
        auto rebuild2 = [&](const MagmaWord& w) { return rebuild(MagmaWord::node(w, r)); };
        expand_fg_term(l, fg, coeff, mu_exp, lambda_exp, F, G, rebuild2, acc);
    } else {
        auto rebuild2 = [&](const MagmaWord& w) { return rebuild(MagmaWord::node(l, w)); };
        expand_fg_term(r, fg, coeff, mu_exp, lambda_exp, F, G, rebuild2, acc);
    }
}

}  // namespace

ConstraintSystem closure_constraints(const VarietySpec& v, const ParamBracket& fam) {
    const FieldSpec& f = v.field;
    IdentityMatrices im = build_m3(v);
    ConsequenceSpace cons = degree4_consequences(v);
    RrefResult cons_rref = rref(cons.degree4_matrix);

    std::vector<Variable> c3 = canonical_vars(3);
    std::vector<Variable> c4 = canonical_vars(4);
    MonomialOrdering ord3 = enumerate_multilinear(c3);
    MonomialOrdering ord4 = enumerate_multilinear(c4);
    MagmaWord F = MagmaWord::leaf(Variable{"f"}), G = MagmaWord::leaf(Variable{"g"});
    MagmaWord fg = MagmaWord::node(F, G);

    auto mu_exp = fam.mu_expansion();
    auto lambda_exp = fam.lambda_expansion();

    ConstraintSystem cs;
    cs.param_count = fam.param_count();
    cs.kind = ConstraintKind::closure;
    cs.field = f;

    for (std::size_t r = 0; r < im.rank; ++r) {
        MultilinearPoly p = from_row(im.rm3.row(r), ord3);
        std::map<MagmaWord, ParamPoly> acc;
        for (const auto& [word, c] : p.terms()) {
            MagmaWord with_fg = word.substitute(Variable{"f"}, fg);
            auto identity_ctx = [](const MagmaWord& w) { return w; };
            expand_fg_term(with_fg, fg, ParamPoly(c), mu_exp, lambda_exp, F, G, identity_ctx, acc);
        }
        // parametric row over the 120 monomials
        ParamRow row(120);
        for (const auto& [word, coeff] : acc) {
            if (word.contains_subword(fg)) throw std::logic_error("closure expansion left an (f*g) product");
            row[ord4.position(word)] += coeff;
        }
        // reduce modulo the consequence span
        for (std::size_t i = 0; i < cons_rref.rank; ++i) {
            std::size_t piv = cons_rref.pivot_cols[i];
            if (row[piv].is_zero()) continue;
            ParamPoly c = row[piv];
            for (std::size_t j = piv; j < 120; ++j) {
                const Scalar& entry = cons_rref.matrix.at(i, j);
                if (!entry.is_zero()) row[j] -= c.scaled(entry);
            }
        }
        for (const auto& poly : row) {
            if (poly.is_zero()) continue;
            if (poly.degree() > 1) throw std::logic_error("closure constraint of parameter degree above 1");
            cs.polys.push_back(poly);
        }
    }
    cs.normalize();
    return cs;
}

namespace {

// A composition word: operator applications around a generic element, inner
// first. Entry (s, true) applies operator s from the left.
using CompWord = std::vector<std::pair<std::size_t, bool>>;
using CompExpr = std::map<CompWord, ParamPoly>;

void add_into(CompExpr& acc, const CompExpr& e, const ParamPoly& coeff) {
    for (const auto& [w, c] : e) {
        ParamPoly t = c * coeff;
        if (t.is_zero()) continue;
        auto [it, inserted] = acc.emplace(w, t);
        if (!inserted) {
            it->second += t;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

// Apply the operator word `t` to the expression `e` from the given side,
// expanding bracketed operator products by the parametric rules.
CompExpr apply_op(const MagmaWord& t, bool from_left, const CompExpr& e,
                  const std::array<ParamPoly, 8>& mu_exp, const std::array<ParamPoly, 8>& lambda_exp,
                  const std::map<std::string, std::size_t>& sym_index) {
    CompExpr out;
    if (t.is_leaf()) {
        std::size_t s = sym_index.at(t.var().name);
        for (const auto& [w, c] : e) {
            CompWord w2 = w;
            w2.emplace_back(s, from_left);
            out[w2] = out.count(w2) ? out[w2] + c : c;
        }
        return out;
    }
    const MagmaWord A = t.left(), B = t.right();
    const auto& coefs = from_left ? mu_exp : lambda_exp;
    // pattern table in rule order; (operand, side) applied inner then outer
    struct Step {
        const MagmaWord* op;
        bool left;
    };
    const std::array<std::array<Step, 2>, 8> patterns = {{
        {{{&A, false}, {&B, false}}},  // (xf)g
        {{{&A, true}, {&B, false}}},   // (fx)g
        {{{&A, false}, {&B, true}}},   // g(xf)
        {{{&A, true}, {&B, true}}},    // g(fx)
        {{{&B, false}, {&A, false}}},  // (xg)f
        {{{&B, true}, {&A, false}}},   // (gx)f
        {{{&B, false}, {&A, true}}},   // f(xg)
        {{{&B, true}, {&A, true}}},    // f(gx)
    }};
    for (std::size_t i = 0; i < 8; ++i) {
        if (coefs[i].is_zero()) continue;
        CompExpr inner = apply_op(*patterns[i][0].op, patterns[i][0].left, e, mu_exp, lambda_exp, sym_index);
        CompExpr full = apply_op(*patterns[i][1].op, patterns[i][1].left, inner, mu_exp, lambda_exp, sym_index);
        add_into(out, full, coefs[i]);
    }
    return out;
}

}  // namespace

ConstraintSystem structure_constraints(const VarietySpec& v, const ParamBracket& fam) {
    {
        ConstraintSystem closure = closure_constraints(v, fam);
        if (!analyze_linear(closure).consistent)
            throw std::invalid_argument("structure_constraints: closure system is infeasible");
    }
    const FieldSpec& f = v.field;
    auto mu_exp = fam.mu_expansion();
    auto lambda_exp = fam.lambda_expansion();

    ConstraintSystem cs;
    cs.param_count = fam.param_count();
    cs.kind = ConstraintKind::structure;
    cs.field = f;

    std::map<std::string, std::size_t> sym_index;  // identity variables as operator slots
    std::vector<Variable> c3 = canonical_vars(3);
    for (std::size_t i = 0; i < 3; ++i) sym_index[c3[i].name] = i;

    for (const auto& id : v.identities) {
        if (id.degree() != 3)
            throw std::invalid_argument("structure_constraints: identities must have degree 3");
        for (bool from_left : {true, false}) {
            CompExpr acc;
            for (const auto& [word, c] : id.terms()) {
                CompExpr e0;
                e0[CompWord{}] = ParamPoly(Scalar(f, 1));
                CompExpr expanded = apply_op(word, from_left, e0, mu_exp, lambda_exp, sym_index);
                add_into(acc, expanded, ParamPoly(c));
            }
            for (const auto& [w, poly] : acc) {
                if (poly.is_zero()) continue;
                if (poly.degree() > 2) throw std::logic_error("structure constraint of parameter degree above 2");
                cs.polys.push_back(poly);
            }
        }
    }
    cs.normalize();
    return cs;
}

ConstraintSystem reduce_mod(const ConstraintSystem& cs, std::int64_t p) {
    ConstraintSystem out;
    out.param_count = cs.param_count;
    out.kind = cs.kind;
    out.field = FieldSpec::prime(p);
    for (const auto& poly : cs.polys) {
        ParamPoly q;
        for (const auto& [m, c] : poly.terms()) {
            ParamPoly term(c.reduced_mod(p));
            for (std::size_t idx : m) term = term * ParamPoly::var(idx, out.field);
            q += term;
        }
        if (!q.is_zero()) out.polys.push_back(q);
    }
    out.normalize();
    return out;
}

std::vector<std::vector<Scalar>> brute_force_solutions(const ConstraintSystem& cs, std::int64_t p) {
    ConstraintSystem sys = cs.field.is_rationals() ? reduce_mod(cs, p) : cs;
    if (sys.field.characteristic() != p)
        throw std::invalid_argument("brute_force_solutions: field/characteristic mismatch");
    std::size_t k = sys.param_count;
    if (k > 16) throw std::invalid_argument("brute_force_solutions: too many parameters");
    double space = 1;
    for (std::size_t i = 0; i < k; ++i) {
        space *= (double)p;
        if (space > (double)(1 << 20)) throw std::invalid_argument("brute_force_solutions: search space too large");
    }
    FieldSpec fp = FieldSpec::prime(p);
    std::vector<std::vector<Scalar>> found;
    std::vector<std::int64_t> point(k, 0);
    while (true) {
        std::vector<Scalar> assignment;
        assignment.reserve(k);
        for (std::int64_t x : point) assignment.emplace_back(fp, x);
        if (sys.satisfied_by(assignment)) found.push_back(assignment);
        std::size_t pos = 0;
        while (pos < k && ++point[pos] == p) point[pos++] = 0;
        if (pos == k) break;
        if (k == 0) break;
    }
    return found;
}

std::string emit_ideal(const ConstraintSystem& cs) {
    std::string out;
    std::size_t k = cs.param_count / 2;
    out += "# polynomial ideal over " + cs.field.str() + "\n";
    out += "# kind: " + std::string(cs.kind == ConstraintKind::closure ? "closure" : "structure") + "\n";
    out += "# variables: ";
    for (std::size_t i = 1; i <= k; ++i) out += "a" + std::to_string(i) + " ";
    for (std::size_t i = 1; i <= k; ++i) out += "b" + std::to_string(i) + (i == k ? "" : " ");
    out += "\n";
    if (cs.polys.empty()) {
        out += "# no constraints\n";
        return out;
    }
    for (const auto& p : cs.polys) out += p.str(k) + "\n";
    return out;
}

}  // namespace wact
