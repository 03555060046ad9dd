#pragma once

#include "wact/weak_actor.hpp"

namespace wact {

/// A candidate derived action of B on X: per-basis matrices of the two
/// bilinear maps, l(b_i, -) and r(-, b_i).
struct DerivedAction {
    Algebra B;
    Algebra X;
    std::vector<ExactMatrix> left;   // left[i] : X -> X, x |-> b_i * x
    std::vector<ExactMatrix> right;  // right[i] : X -> X, x |-> x * b_i

    DerivedAction(Algebra b, Algebra x);

    Vec act_left(const Vec& b, const Vec& x) const;
    Vec act_right(const Vec& x, const Vec& b) const;
};

DerivedAction trivial_action(const Algebra& b, const Algebra& x);
/// X acting on itself by its own multiplication.
DerivedAction regular_action(const Algebra& x);

/// Parse the action file grammar:
///   action NAME of B_NAME on X_NAME
///   b:LABEL * x:LABEL = COMBO-over-X
///   x:LABEL * b:LABEL = COMBO-over-X
DerivedAction parse_action(const std::string& text, const Algebra& b, const Algebra& x);

/// The semidirect candidate B (+) X with
/// (b,x)(b',x') = (bb', xx' + b*x' + x*b'); always constructible.
Algebra semidirect_candidate(const DerivedAction& act);

/// True iff B and X lie in the variety and the semidirect candidate satisfies
/// all of its identities.
bool validate_action(const VarietySpec& v, const DerivedAction& act);

/// The semidirect product; throws when the action is invalid.
Algebra semidirect(const VarietySpec& v, const DerivedAction& act);

/// A linear map into the actor space, one image per basis element of B.
struct ActorMorphism {
    Algebra B;
    std::vector<BiEndo> images;

    BiEndo image_of(const Vec& b, const FieldSpec& f) const;
};

/// b |-> (b*-, -*b). Verifies the images land in the space and that the map
/// is a homomorphism of partial algebras (all image brackets defined and
/// matching the images of products).
ActorMorphism tau(const DerivedAction& act, const WeakActorSpace& space);

/// Reconstruct the action a morphism encodes and validate it.
bool is_acting_morphism(const VarietySpec& v, const ActorMorphism& phi, const Algebra& x);

/// An algebra homomorphism given by its matrix on basis coordinates.
struct AlgebraHom {
    Algebra domain;
    Algebra codomain;
    ExactMatrix matrix;  // codomain_dim x domain_dim

    bool is_homomorphism() const;
};

/// Change of base along f: B' -> B.
DerivedAction pullback_action(const DerivedAction& act, const AlgebraHom& f);

}  // namespace wact
