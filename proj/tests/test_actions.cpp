#include <doctest.h>

#include "wact/actions.hpp"

using namespace wact;

namespace {
const FieldSpec Q = FieldSpec::rationals();

BracketRules rules_for(const VarietySpec& v) {
    if (auto rr = reduced_rule(v)) return *rr;
    AccessibilityReport rep = accessibility_check(v);
    REQUIRE(rep.accessible);
    return *rep.witness;
}
}  // namespace

TEST_CASE("the trivial action validates everywhere and gives the direct product") {
    struct Case {
        const char* vname;
        const char* bname;
        const char* xname;
    };
    const Case cases[] = {
        {"lie", "sl2", "sl2"},
        {"assoc", "mat2", "mat2"},
        {"nil2_com", "abelian2", "kronecker"},
        {"leibniz", "heisenberg3", "sl2"},
        {"cassoc", "dual_numbers", "kronecker"},
    };
    for (const auto& c : cases) {
        CAPTURE(c.vname);
        VarietySpec v = builtin_variety(c.vname, Q);
        DerivedAction act = trivial_action(fixture_algebra(c.bname), fixture_algebra(c.xname));
        CHECK(validate_action(v, act));
        Algebra s = semidirect(v, act);
        CHECK(s.dim() == act.B.dim() + act.X.dim());
        // block structure: b-part multiplies like B, x-part like X, cross terms vanish
        for (std::size_t i = 0; i < act.B.dim(); ++i)
            for (std::size_t j = 0; j < act.X.dim(); ++j) {
                CHECK(is_zero(s.basis_product(i, act.B.dim() + j)));
                CHECK(is_zero(s.basis_product(act.B.dim() + j, i)));
            }
    }
}

TEST_CASE("the Nil2 counterexample morphism is rejected") {
    Algebra b2 = fixture_algebra("abelian2");
    Algebra x1 = fixture_algebra("abelian1");
    for (const char* vname : {"nil2_com", "nil2_acom"}) {
        CAPTURE(vname);
        VarietySpec v = builtin_variety(vname, Q);
        int eps = vname == std::string("nil2_com") ? 1 : -1;
        WeakActorSpace sp = compute_actor_space(v, x1, rules_for(v));
        CHECK(sp.dim() == 1);  // [X]_2 = End(F)
        // phi(b) = phi(b') = 1_X
        BiEndo one(1, Q);
        one.left.at(0, 0) = Scalar(Q, 1);
        one.right.at(0, 0) = Scalar(Q, eps);
        ActorMorphism phi{b2, {one, one}};
        CHECK_FALSE(is_acting_morphism(v, phi, x1));
        // b * (b' * x) = x != 0 is the failing instance; the zero morphism works
        BiEndo zero(1, Q);
        ActorMorphism psi{b2, {zero, zero}};
        CHECK(is_acting_morphism(v, psi, x1));
    }
}

TEST_CASE("action file parsing and the heisenberg extension") {
    Algebra b = fixture_algebra("abelian1");
    Algebra x = fixture_algebra("heisenberg3");
    const char* text =
        "action pad of abelian1 on heisenberg3\n"
        "b:e1 * x:e1 = h\n"
        "x:e1 * b:e1 = - h\n";
    DerivedAction act = parse_action(text, b, x);
    VarietySpec v = builtin_variety("nil2_acom", Q);
    REQUIRE(validate_action(v, act));
    Algebra s = semidirect(v, act);
    CHECK(s.dim() == 4);
    CHECK(satisfies_all(s, v));

    CHECK_THROWS(parse_action("action a of wrong on heisenberg3\n", b, x));
    CHECK_THROWS(parse_action("action a of abelian1 on heisenberg3\nb:e1 * b:e1 = h\n", b, x));
    CHECK_THROWS(parse_action("action a of abelian1 on heisenberg3\nb:e1 * x:zz = h\n", b, x));
}

TEST_CASE("an invalid bilinear pair is caught by the semidirect criterion") {
    // abelian(2) acting on abelian(1) by phi(b) = phi(b') = identity violates
    // two-step nilpotency
    Algebra b2 = fixture_algebra("abelian2");
    Algebra x1 = fixture_algebra("abelian1");
    DerivedAction act(b2, x1);
    for (std::size_t i = 0; i < 2; ++i) {
        act.left[i].at(0, 0) = Scalar(Q, 1);
        act.right[i].at(0, 0) = Scalar(Q, 1);
    }
    CHECK_FALSE(validate_action(builtin_variety("nil2_com", Q), act));
    CHECK_THROWS(semidirect(builtin_variety("nil2_com", Q), act));
}

TEST_CASE("the regular action is valid and tau lands on the inner pairs") {
    struct Case {
        const char* vname;
        const char* xname;
    };
    const Case cases[] = {
        {"assoc", "mat2"}, {"lie", "sl2"}, {"nil2_com", "kronecker"}, {"leibniz", "heisenberg3"},
    };
    for (const auto& c : cases) {
        CAPTURE(c.vname);
        CAPTURE(c.xname);
        VarietySpec v = builtin_variety(c.vname, Q);
        Algebra x = fixture_algebra(c.xname);
        DerivedAction act = regular_action(x);
        REQUIRE(validate_action(v, act));
        WeakActorSpace sp = compute_actor_space(v, x, rules_for(v));
        ActorMorphism phi = tau(act, sp);
        for (std::size_t i = 0; i < x.dim(); ++i)
            CHECK(phi.images[i] == mult_ops(x, unit_vec(x.dim(), i, Q)));
        // round trip: a tau image is an acting morphism
        CHECK(is_acting_morphism(v, phi, x));
    }
}

TEST_CASE("tau of the trivial action is the zero morphism") {
    VarietySpec v = builtin_variety("lie", Q);
    Algebra x = fixture_algebra("sl2");
    WeakActorSpace sp = compute_actor_space(v, x, rules_for(v));
    DerivedAction triv = trivial_action(fixture_algebra("abelian2"), x);
    ActorMorphism phi = tau(triv, sp);
    for (const auto& img : phi.images) {
        CHECK(img.left.is_zero());
        CHECK(img.right.is_zero());
    }
}

TEST_CASE("tau rejects invalid actions up front") {
    VarietySpec v = builtin_variety("nil2_com", Q);
    Algebra x1 = fixture_algebra("abelian1");
    WeakActorSpace sp = compute_actor_space(v, x1, rules_for(v));
    DerivedAction bad(fixture_algebra("abelian2"), x1);
    for (std::size_t i = 0; i < 2; ++i) {
        bad.left[i].at(0, 0) = Scalar(Q, 1);
        bad.right[i].at(0, 0) = Scalar(Q, 1);
    }
    CHECK_THROWS(tau(bad, sp));
}

TEST_CASE("tau is injective on small action spaces over F2") {
    // enumerate all derived actions of B = F b on X = F x in Nil2(Com) over
    // F2 and check distinct actions give distinct morphisms
    FieldSpec f2 = FieldSpec::prime(2);
    VarietySpec v = builtin_variety("nil2_com", f2);
    Algebra b1 = fixture_algebra("abelian1", f2);
    Algebra x1 = fixture_algebra("abelian1", f2);
    WeakActorSpace sp = compute_actor_space(v, x1, rules_for(v));
    std::vector<std::pair<int, int>> valid;
    for (int l = 0; l < 2; ++l)
        for (int r = 0; r < 2; ++r) {
            DerivedAction act(b1, x1);
            act.left[0].at(0, 0) = Scalar(f2, l);
            act.right[0].at(0, 0) = Scalar(f2, r);
            if (validate_action(v, act)) valid.emplace_back(l, r);
        }
    // commutativity forces l = r; nilpotency forces l*l = 0, so only (0,0)
    CHECK(valid == std::vector<std::pair<int, int>>{{0, 0}});

    // on the kronecker algebra the actions of the abelian line are the maps
    // into [X]_2, a genuine 4-element space over F2
    Algebra kron = fixture_algebra("kronecker", f2);
    WeakActorSpace spk = compute_actor_space(v, kron, rules_for(v));
    std::vector<ActorMorphism> images;
    int count = 0;
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) {
            DerivedAction act(b1, kron);
            act.left[0].at(2, 0) = Scalar(f2, a);   // e1 |-> a e3
            act.left[0].at(2, 1) = Scalar(f2, c);   // e2 |-> c e3
            act.right[0] = act.left[0];             // commutative variety
            if (!validate_action(v, act)) continue;
            ++count;
            ActorMorphism phi = tau(act, spk);
            CHECK(is_acting_morphism(v, phi, kron));
            for (const auto& prev : images) CHECK_FALSE(prev.images[0] == phi.images[0]);
            images.push_back(phi);
        }
    CHECK(count == 4);  // distinct actions stay distinct through tau
}

TEST_CASE("pullback composes with tau naturally") {
    VarietySpec v = builtin_variety("nil2_com", Q);
    Algebra kron = fixture_algebra("kronecker");
    DerivedAction act = regular_action(kron);
    REQUIRE(validate_action(v, act));
    WeakActorSpace sp = compute_actor_space(v, kron, rules_for(v));
    ActorMorphism phi = tau(act, sp);

    SUBCASE("identity homomorphism") {
        AlgebraHom id{kron, kron, ExactMatrix::identity(3, Q)};
        REQUIRE(id.is_homomorphism());
        DerivedAction same = pullback_action(act, id);
        ActorMorphism psi = tau(same, sp);
        for (std::size_t i = 0; i < 3; ++i) CHECK(psi.images[i] == phi.images[i]);
    }
    SUBCASE("zero homomorphism gives the trivial action") {
        AlgebraHom zero{kron, kron, ExactMatrix(3, 3, Q)};
        REQUIRE(zero.is_homomorphism());
        DerivedAction triv = pullback_action(act, zero);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(triv.left[i].is_zero());
            CHECK(triv.right[i].is_zero());
        }
    }
    SUBCASE("a one-dimensional corner of the regular action") {
        Algebra b1 = fixture_algebra("abelian1");
        ExactMatrix m(3, 1, Q);
        m.at(2, 0) = Scalar(Q, 1);  // b |-> e3, annihilator so a homomorphism
        AlgebraHom f{b1, kron, m};
        REQUIRE(f.is_homomorphism());
        DerivedAction pulled = pullback_action(act, f);
        REQUIRE(validate_action(v, pulled));
        ActorMorphism psi = tau(pulled, sp);
        // naturality: tau(f^* act) = tau(act) o f
        BiEndo expected = phi.image_of(m.apply(unit_vec(1, 0, Q)), Q);
        CHECK(psi.images[0] == expected);
    }
    SUBCASE("non-homomorphisms are rejected") {
        ExactMatrix m(3, 3, Q);
        m.at(0, 0) = Scalar(Q, 1);
        m.at(1, 1) = Scalar(Q, 1);  // e1,e2 fixed but e3 |-> 0 breaks e1*e2 = e3
        AlgebraHom bad{kron, kron, m};
        CHECK_FALSE(bad.is_homomorphism());
        CHECK_THROWS(pullback_action(act, bad));
    }
}

TEST_CASE("semidirect projection and section laws") {
    VarietySpec v = builtin_variety("leibniz", Q);
    Algebra x = fixture_algebra("sl2");
    DerivedAction act = regular_action(x);
    Algebra s = semidirect(v, act);
    std::size_t m = x.dim();
    // ker(pi) = the x-block: products of x-block elements stay in the block
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j) {
            Vec p = s.basis_product(m + i, m + j);
            for (std::size_t k = 0; k < m; ++k) CHECK(p[k].is_zero());
        }
    // pi(s(b)) = b: the b-block multiplies exactly like B
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec p = s.basis_product(i, j);
            Vec expect = x.basis_product(i, j);
            for (std::size_t k = 0; k < m; ++k) CHECK(p[k] == expect[k]);
        }
}
