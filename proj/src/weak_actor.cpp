#include "wact/weak_actor.hpp"

#include <algorithm>
#include <stdexcept>

namespace wact {

namespace {

// n x U coefficient matrix: row k holds the linear form of component k.
struct SymVec {
    ExactMatrix m;
    explicit SymVec(std::size_t n, std::size_t u, const FieldSpec& f) : m(n, u, f) {}
};

// u * s, bilinear extension with the left factor concrete
SymVec sym_mult_left(const Algebra& a, const Vec& u, const SymVec& s) {
    std::size_t n = a.dim();
    ExactMatrix b(n, n, a.field());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar sum(a.field());
            for (std::size_t i = 0; i < n; ++i)
                if (!u[i].is_zero() && !a.c(i, j, k).is_zero()) sum += a.c(i, j, k) * u[i];
            b.at(k, j) = sum;
        }
    SymVec out(n, s.m.cols(), a.field());
    out.m = b * s.m;
    return out;
}

// s * v, bilinear extension with the right factor concrete
SymVec sym_mult_right(const Algebra& a, const SymVec& s, const Vec& v) {
    std::size_t n = a.dim();
    ExactMatrix b(n, n, a.field());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            Scalar sum(a.field());
            for (std::size_t j = 0; j < n; ++j)
                if (!v[j].is_zero() && !a.c(i, j, k).is_zero()) sum += a.c(i, j, k) * v[j];
            b.at(k, i) = sum;
        }
    SymVec out(n, s.m.cols(), a.field());
    out.m = b * s.m;
    return out;
}

enum class PairSlot { left_of_pair, right_of_pair, single };

// The unknown operator applied to a concrete vector. Unknown layout:
// pair mode [L row-major | R row-major], single mode just F row-major.
SymVec apply_unknown(const Algebra& a, const Vec& v, PairSlot which, std::size_t u_total) {
    std::size_t n = a.dim();
    SymVec out(n, u_total, a.field());
    std::size_t offset = which == PairSlot::right_of_pair ? n * n : 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) out.m.at(k, offset + k * n + i) = v[i];
    return out;
}

struct EvalValue {
    bool symbolic = false;
    bool op_marker = false;
    Vec conc;
    std::optional<SymVec> sym;
};

// Evaluate one identity monomial with the slot variable acting as the
// operator pair and the remaining variables instantiated on basis vectors.
EvalValue eval_slotted(const Algebra& a, const MagmaWord& w, const std::vector<Variable>& vars,
                       const std::vector<std::size_t>& assignment, std::size_t slot, std::size_t u_total) {
    if (w.is_leaf()) {
        std::size_t vi =
            std::find(vars.begin(), vars.end(), w.var()) - vars.begin();
        if (vi >= vars.size()) throw std::logic_error("eval_slotted: unknown variable");
        EvalValue out;
        if (vi == slot) {
            out.op_marker = true;
            return out;
        }
        out.conc = unit_vec(a.dim(), assignment[vi], a.field());
        return out;
    }
    EvalValue l = eval_slotted(a, w.left(), vars, assignment, slot, u_total);
    EvalValue r = eval_slotted(a, w.right(), vars, assignment, slot, u_total);
    EvalValue out;
    if (l.op_marker && !r.symbolic && !r.op_marker) {
        out.symbolic = true;
        out.sym = apply_unknown(a, r.conc, PairSlot::left_of_pair, u_total);
        return out;
    }
    if (r.op_marker && !l.symbolic && !l.op_marker) {
        out.symbolic = true;
        out.sym = apply_unknown(a, l.conc, PairSlot::right_of_pair, u_total);
        return out;
    }
    if (l.op_marker || r.op_marker) throw std::logic_error("eval_slotted: operator beside a symbolic factor");
    if (l.symbolic && r.symbolic) throw std::logic_error("eval_slotted: two symbolic factors");
    if (l.symbolic) {
        out.symbolic = true;
        out.sym = sym_mult_right(a, *l.sym, r.conc);
        return out;
    }
    if (r.symbolic) {
        out.symbolic = true;
        out.sym = sym_mult_left(a, l.conc, *r.sym);
        return out;
    }
    out.conc = multiply(a, l.conc, r.conc);
    return out;
}

void insert_instance_rows(EchelonBasis& eb, const Algebra& a, const MultilinearPoly& id, std::size_t slot,
                          const std::vector<std::size_t>& others, std::size_t u_total) {
    std::size_t deg = id.degree();
    std::vector<std::size_t> assignment(deg, 0);
    std::size_t oi = 0;
    for (std::size_t v = 0; v < deg; ++v)
        if (v != slot) assignment[v] = others[oi++];
    ExactMatrix total(a.dim(), u_total, a.field());
    for (const auto& [word, c] : id.terms()) {
        EvalValue val = eval_slotted(a, word, id.vars(), assignment, slot, u_total);
        if (!val.symbolic) throw std::logic_error("identity instance without the operator");
        total = total + val.sym->m.scaled(c);
    }
    for (std::size_t k = 0; k < a.dim(); ++k) eb.insert(total.row(k));
}

EchelonBasis actor_constraints(const VarietySpec& v, const Algebra& x) {
    std::size_t n = x.dim(), u_total = 2 * n * n;
    EchelonBasis eb(u_total, x.field());
    for (const auto& id : v.identities) {
        std::size_t deg = id.degree();
        for (std::size_t slot = 0; slot < deg; ++slot) {
            std::vector<std::size_t> others(deg - 1, 0);
            while (true) {
                insert_instance_rows(eb, x, id, slot, others, u_total);
                std::size_t pos = 0;
                while (pos < others.size() && ++others[pos] == n) others[pos++] = 0;
                if (pos == others.size()) break;
                if (others.empty()) break;
            }
        }
    }
    return eb;
}

std::vector<BiEndo> kernel_basis_pairs(const ExactMatrix& constraints, std::size_t n, const FieldSpec& f) {
    std::vector<BiEndo> basis;
    for (const auto& vec : nullspace(constraints)) basis.push_back(BiEndo::unflatten(vec, n, f));
    return basis;
}

}  // namespace

bool WeakActorSpace::member(const BiEndo& b) const {
    return is_zero(constraint_matrix.apply(b.flatten()));
}

std::optional<Vec> WeakActorSpace::coordinates(const BiEndo& b) const {
    std::size_t n = algebra.dim();
    ExactMatrix cols(2 * n * n, basis.size(), algebra.field());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Vec fl = basis[j].flatten();
        for (std::size_t i = 0; i < fl.size(); ++i) cols.at(i, j) = fl[i];
    }
    AffineSolution sol = solve_affine(cols, b.flatten());
    if (!sol.consistent) return std::nullopt;
    return sol.particular;
}

WeakActorSpace compute_actor_space_vec(const VarietySpec& v, const Algebra& x) {
    v.ensure_char_ok();
    if (!(x.field() == v.field)) throw std::invalid_argument("compute_actor_space: field mismatch");
    if (!satisfies_all(x, v))
        throw std::invalid_argument("compute_actor_space: " + x.name() + " is not in variety " + v.name);
    WeakActorSpace space(x, v);
    EchelonBasis eb = actor_constraints(v, x);
    space.constraint_matrix = eb.to_matrix();
    space.basis = kernel_basis_pairs(space.constraint_matrix, x.dim(), x.field());
    // the inner pairs always lie in the solution space
    for (std::size_t i = 0; i < x.dim(); ++i) {
        BiEndo inner = mult_ops(x, unit_vec(x.dim(), i, x.field()));
        if (!space.member(inner)) throw std::logic_error("inner multiplication pair escaped the actor space");
    }
    return space;
}

WeakActorSpace compute_actor_space(const VarietySpec& v, const Algebra& x, const BracketRules& rules) {
    WeakActorSpace space = compute_actor_space_vec(v, x);
    space.rules = rules;
    return space;
}

PartialBracketResult bracket(const WeakActorSpace& space, const BiEndo& f, const BiEndo& g) {
    if (!space.rules) throw std::invalid_argument("bracket: no rules attached to this space");
    if (!space.member(f) || !space.member(g)) throw std::invalid_argument("bracket: argument outside the space");
    const FieldSpec& fld = space.algebra.field();
    std::size_t n = space.algebra.dim();
    PartialBracketResult out{BiEndo(n, fld), false};
    if (std::holds_alternative<LambdaMuRules>(*space.rules)) {
        const LambdaMuRules& r = std::get<LambdaMuRules>(*space.rules);
        const ExactMatrix &Lf = f.left, &Rf = f.right, &Lg = g.left, &Rg = g.right;
        const ExactMatrix comps[8] = {Rg * Rf, Rg * Lf, Lg * Rf, Lg * Lf, Rf * Rg, Rf * Lg, Lf * Rg, Lf * Lg};
        for (std::size_t i = 0; i < 8; ++i) {
            if (!r.mu[i].is_zero()) out.value.left = out.value.left + comps[i].scaled(r.mu[i]);
            if (!r.lambda[i].is_zero()) out.value.right = out.value.right + comps[i].scaled(r.lambda[i]);
        }
    } else {
        const ReducedRule& r = std::get<ReducedRule>(*space.rules);
        ExactMatrix h = (f.left * g.left).scaled(r.alpha) + (g.left * f.left).scaled(r.beta);
        out.value.left = h;
        out.value.right = h.scaled(Scalar(fld, r.epsilon));
    }
    out.in_domain = space.member(out.value);
    return out;
}

bool is_total(const WeakActorSpace& space) {
    for (const auto& f : space.basis)
        for (const auto& g : space.basis)
            if (!bracket(space, f, g).in_domain) return false;
    return true;
}

Algebra bracket_algebra(const WeakActorSpace& space) {
    std::size_t d = space.basis.size();
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= d; ++i) labels.push_back("f" + std::to_string(i));
    Algebra alg("actor_of_" + space.algebra.name(), space.algebra.field(), labels);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            PartialBracketResult r = bracket(space, space.basis[i], space.basis[j]);
            if (!r.in_domain) throw std::invalid_argument("bracket_algebra: the bracket is not total");
            auto coords = space.coordinates(r.value);
            if (!coords) throw std::logic_error("bracket_algebra: value in space but without coordinates");
            alg.set_product(i, j, *coords);
        }
    return alg;
}

bool satisfies_variety(const WeakActorSpace& space) {
    Algebra alg = bracket_algebra(space);
    return std::all_of(space.variety.identities.begin(), space.variety.identities.end(),
                       [&](const MultilinearPoly& p) { return check_identity(alg, p); });
}

std::optional<ActorKind> actor_kind_from_name(const std::string& name) {
    if (name == "multipliers") return ActorKind::multipliers;
    if (name == "bimultipliers") return ActorKind::bimultipliers;
    if (name == "biderivations") return ActorKind::biderivations;
    if (name == "antiderivations") return ActorKind::antiderivations;
    if (name == "derivations") return ActorKind::derivations;
    if (name == "nil2_square_killers") return ActorKind::nil2_square_killers;
    if (name == "acaa") return ActorKind::acaa;
    return std::nullopt;
}

std::string actor_kind_name(ActorKind kind) {
    switch (kind) {
        case ActorKind::multipliers: return "multipliers";
        case ActorKind::bimultipliers: return "bimultipliers";
        case ActorKind::biderivations: return "biderivations";
        case ActorKind::antiderivations: return "antiderivations";
        case ActorKind::derivations: return "derivations";
        case ActorKind::nil2_square_killers: return "nil2_square_killers";
        case ActorKind::acaa: return "acaa";
    }
    throw std::logic_error("actor_kind_name");
}

namespace {

int resolve_epsilon(ActorKind kind, const Algebra& x, int requested) {
    switch (kind) {
        case ActorKind::multipliers:
        case ActorKind::antiderivations: return +1;
        case ActorKind::derivations:
        case ActorKind::acaa: return -1;
        case ActorKind::nil2_square_killers: break;
        default: return 0;  // pair kinds carry no pairing sign
    }
    if (requested == +1 || requested == -1) return requested;
    VarietySpec com = builtin_variety("com", x.field());
    VarietySpec acom = builtin_variety("acom", x.field());
    bool is_com = satisfies_all(x, com), is_acom = satisfies_all(x, acom);
    if (is_com && !is_acom) return +1;
    if (is_acom && !is_com) return -1;
    throw std::invalid_argument(
        "nil2_square_killers: ambiguous pairing sign for this algebra, pass epsilon explicitly");
}

std::string kind_variety_name(ActorKind kind, int epsilon) {
    switch (kind) {
        case ActorKind::multipliers: return "cassoc";
        case ActorKind::bimultipliers: return "assoc";
        case ActorKind::biderivations: return "leibniz";
        case ActorKind::antiderivations: return "jjord";
        case ActorKind::derivations: return "lie";
        case ActorKind::nil2_square_killers: return epsilon >= 0 ? "nil2_com" : "nil2_acom";
        case ActorKind::acaa: return "acaassoc";
    }
    throw std::logic_error("kind_variety_name");
}

}  // namespace

WeakActorSpace named_actor(ActorKind kind, const Algebra& x, int epsilon) {
    std::size_t n = x.dim();
    const FieldSpec& f = x.field();
    epsilon = resolve_epsilon(kind, x, epsilon);
    VarietySpec v = builtin_variety(kind_variety_name(kind, epsilon), f);
    if (!satisfies_all(x, v))
        throw std::invalid_argument("named_actor: " + x.name() + " is not in variety " + v.name);

    bool pair_kind = kind == ActorKind::bimultipliers || kind == ActorKind::biderivations;
    std::size_t u_total = pair_kind ? 2 * n * n : n * n;
    EchelonBasis eb(u_total, f);
    auto applyL = [&](const Vec& w) { return apply_unknown(x, w, PairSlot::left_of_pair, u_total); };
    auto applyR = [&](const Vec& w) { return apply_unknown(x, w, PairSlot::right_of_pair, u_total); };
    auto sub = [&](const SymVec& a, const SymVec& b) {
        SymVec out = a;
        out.m = out.m - b.m;
        return out;
    };
    auto add = [&](const SymVec& a, const SymVec& b) {
        SymVec out = a;
        out.m = out.m + b.m;
        return out;
    };
    auto push = [&](const SymVec& s) {
        for (std::size_t k = 0; k < n; ++k) eb.insert(s.m.row(k));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec xv = unit_vec(n, i, f), yv = unit_vec(n, j, f), xy = x.basis_product(i, j);
            SymVec F_xy = applyL(xy);
            SymVec Fx_y = sym_mult_right(x, applyL(xv), yv);
            SymVec Fy_x = sym_mult_right(x, applyL(yv), xv);
            SymVec x_Fy = sym_mult_left(x, xv, applyL(yv));
            switch (kind) {
                case ActorKind::multipliers: push(sub(F_xy, Fx_y)); break;
                case ActorKind::derivations: push(sub(sub(F_xy, Fx_y), x_Fy)); break;
                case ActorKind::antiderivations: push(add(add(F_xy, Fx_y), Fy_x)); break;
                case ActorKind::acaa: push(add(F_xy, Fx_y)); break;
                case ActorKind::nil2_square_killers:
                    push(F_xy);
                    push(Fx_y);
                    break;
                case ActorKind::bimultipliers: {
                    SymVec R_xy = applyR(xy);
                    SymVec x_Ry = sym_mult_left(x, xv, applyR(yv));
                    SymVec Rx_y = sym_mult_right(x, applyR(xv), yv);
                    SymVec x_Ly = sym_mult_left(x, xv, applyL(yv));
                    push(sub(F_xy, Fx_y));   // L(xy) = L(x)y
                    push(sub(R_xy, x_Ry));   // R(xy) = x R(y)
                    push(sub(x_Ly, Rx_y));   // x L(y) = R(x) y
                    break;
                }
                case ActorKind::biderivations: {
                    // classical (d, D) equations written for (L, R) = (-D, d)
                    SymVec R_xy = applyR(xy);
                    SymVec Rx_y = sym_mult_right(x, applyR(xv), yv);
                    SymVec x_Ry = sym_mult_left(x, xv, applyR(yv));
                    SymVec Ly_x = sym_mult_right(x, applyL(yv), xv);
                    push(sub(sub(R_xy, Rx_y), x_Ry));  // R(xy) = R(x)y + x R(y)
                    push(add(sub(F_xy, Fx_y), Ly_x));  // L(xy) = L(x)y - L(y)x
                    push(add(x_Fy, x_Ry));             // x L(y) = -x R(y)
                    break;
                }
            }
        }

    WeakActorSpace space(x, v);
    ExactMatrix constraints = eb.to_matrix();
    if (pair_kind) {
        space.constraint_matrix = constraints;
        space.basis = kernel_basis_pairs(constraints, n, f);
    } else {
        // pair the single-map kernel with (F, epsilon F); the membership
        // matrix enforces R = epsilon L on top of the kind constraints
        std::vector<BiEndo> basis;
        for (const auto& vec : nullspace(constraints)) {
            ExactMatrix F(n, n, f);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) F.at(r, c) = vec[r * n + c];
            basis.emplace_back(F, F.scaled(Scalar(f, epsilon)));
        }
        space.basis = std::move(basis);
        ExactMatrix pair_constraints(constraints.rows() + n * n, 2 * n * n, f);
        for (std::size_t r = 0; r < constraints.rows(); ++r)
            for (std::size_t c = 0; c < n * n; ++c) pair_constraints.at(r, c) = constraints.at(r, c);
        for (std::size_t i = 0; i < n * n; ++i) {
            pair_constraints.at(constraints.rows() + i, i) = Scalar(f, -epsilon);
            pair_constraints.at(constraints.rows() + i, n * n + i) = Scalar(f, 1);
        }
        space.constraint_matrix = rref(pair_constraints).matrix;
    }

    // bracket rules from the matching variety
    if (kind == ActorKind::bimultipliers || kind == ActorKind::biderivations) {
        AccessibilityReport rep = accessibility_check(v);
        if (!rep.accessible) throw std::logic_error("named_actor: matching variety not accessible");
        space.rules = *rep.witness;
    } else {
        auto red = reduced_rule(v);
        if (!red) throw std::logic_error("named_actor: matching variety has no reduced rule");
        space.rules = *red;
    }
    return space;
}

bool commutativity_report(const WeakActorSpace& space) {
    for (const auto& f : space.basis)
        for (const auto& g : space.basis)
            if (!(f.left * g.left == g.left * f.left)) return false;
    return true;
}

bool spaces_agree(const WeakActorSpace& a, const WeakActorSpace& b) {
    if (a.algebra.dim() != b.algebra.dim()) return false;
    std::vector<Vec> fa, fb;
    for (const auto& e : a.basis) fa.push_back(e.flatten());
    for (const auto& e : b.basis) fb.push_back(e.flatten());
    std::size_t n = a.algebra.dim();
    return same_span(fa, fb, 2 * n * n, a.algebra.field());
}

namespace {

Vec eval_concrete(const Algebra& a, const MagmaWord& w, const std::vector<Variable>& vars,
                  const std::vector<std::size_t>& assignment, std::size_t slot, const BiEndo& b) {
    if (w.is_leaf()) {
        std::size_t vi = std::find(vars.begin(), vars.end(), w.var()) - vars.begin();
        if (vi == slot) throw std::logic_error("eval_concrete: bare operator leaf");
        return unit_vec(a.dim(), assignment[vi], a.field());
    }
    bool l_op = w.left().is_leaf() &&
                (std::size_t)(std::find(vars.begin(), vars.end(), w.left().var()) - vars.begin()) == slot;
    bool r_op = w.right().is_leaf() &&
                (std::size_t)(std::find(vars.begin(), vars.end(), w.right().var()) - vars.begin()) == slot;
    if (l_op) return b.left.apply(eval_concrete(a, w.right(), vars, assignment, slot, b));
    if (r_op) return b.right.apply(eval_concrete(a, w.left(), vars, assignment, slot, b));
    return multiply(a, eval_concrete(a, w.left(), vars, assignment, slot, b),
                    eval_concrete(a, w.right(), vars, assignment, slot, b));
}

}  // namespace

bool verify_member_concretely(const VarietySpec& v, const Algebra& x, const BiEndo& b) {
    std::size_t n = x.dim();
    for (const auto& id : v.identities) {
        std::size_t deg = id.degree();
        for (std::size_t slot = 0; slot < deg; ++slot) {
            std::vector<std::size_t> others(deg - 1, 0);
            while (true) {
                std::vector<std::size_t> assignment(deg, 0);
                std::size_t oi = 0;
                for (std::size_t t = 0; t < deg; ++t)
                    if (t != slot) assignment[t] = others[oi++];
                Vec sum(n, Scalar(x.field()));
                for (const auto& [word, c] : id.terms())
                    sum = sum + scaled(eval_concrete(x, word, id.vars(), assignment, slot, b), c);
                if (!is_zero(sum)) return false;
                std::size_t pos = 0;
                while (pos < others.size() && ++others[pos] == n) others[pos++] = 0;
                if (pos == others.size()) break;
                if (others.empty()) break;
            }
        }
    }
    return true;
}

}  // namespace wact
