#pragma once

#include <variant>

#include "wact/algebra.hpp"
#include "wact/bracket_family.hpp"

namespace wact {

using BracketRules = std::variant<LambdaMuRules, ReducedRule>;

/// The solution space of endomorphism pairs (f*-, -*f) satisfying every
/// variety identity with one slot replaced by the operator, together with the
/// rule-induced partial bracket. The constraint matrix is kept in reduced
/// echelon form; its kernel is exactly span(basis).
struct WeakActorSpace {
    Algebra algebra;
    VarietySpec variety;
    std::vector<BiEndo> basis;
    ExactMatrix constraint_matrix;
    std::optional<BracketRules> rules;

    WeakActorSpace(Algebra x, VarietySpec v)
        : algebra(std::move(x)), variety(std::move(v)), constraint_matrix(0, 0, algebra.field()) {}

    std::size_t dim() const { return basis.size(); }
    /// Exact membership in span(basis), decided by the constraint matrix.
    bool member(const BiEndo& b) const;
    /// Coordinates in the basis (absent when outside the span).
    std::optional<Vec> coordinates(const BiEndo& b) const;
};

struct PartialBracketResult {
    BiEndo value;
    bool in_domain = false;
};

/// Solve the defining linear system over all identities, operator slots and
/// basis tuples. Requires X to satisfy the variety's identities.
WeakActorSpace compute_actor_space(const VarietySpec& v, const Algebra& x, const BracketRules& rules);
/// Space only, no bracket attached (works without accessibility).
WeakActorSpace compute_actor_space_vec(const VarietySpec& v, const Algebra& x);

/// The rule-induced bracket. For lambda/mu rules the value is the 16-term
/// composition sum; for a reduced rule (f,g) -> alpha f.g + beta g.f paired
/// with epsilon.
PartialBracketResult bracket(const WeakActorSpace& space, const BiEndo& f, const BiEndo& g);

bool is_total(const WeakActorSpace& space);

/// The total bracket as an algebra on the basis (requires is_total).
Algebra bracket_algebra(const WeakActorSpace& space);

/// Whether the total bracket algebra satisfies the variety's identities.
bool satisfies_variety(const WeakActorSpace& space);

/// Direct constructions used as independent oracles.
enum class ActorKind {
    multipliers,
    bimultipliers,
    biderivations,
    antiderivations,
    derivations,
    nil2_square_killers,
    acaa,
};

std::optional<ActorKind> actor_kind_from_name(const std::string& name);
std::string actor_kind_name(ActorKind kind);

/// epsilon selects the pairing f -> (f, epsilon f) for the single-map kinds;
/// it is only consulted for nil2_square_killers (the other kinds fix it).
WeakActorSpace named_actor(ActorKind kind, const Algebra& x, int epsilon = 0);

/// Composition commutativity of the left components over all basis pairs.
bool commutativity_report(const WeakActorSpace& space);

/// Exact equality of the two spans inside End(X)^2.
bool spaces_agree(const WeakActorSpace& a, const WeakActorSpace& b);

/// Concrete re-verification used by the tests: evaluates every identity
/// instance against the basis pair directly, without the solver's machinery.
bool verify_member_concretely(const VarietySpec& v, const Algebra& x, const BiEndo& b);

}  // namespace wact
