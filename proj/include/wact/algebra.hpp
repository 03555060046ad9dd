#pragma once

#include <string>
#include <vector>

#include "wact/variety.hpp"

namespace wact {

/// A finite-dimensional algebra given by structure constants:
/// e_i * e_j = sum_k c[i][j][k] e_k.
class Algebra {
public:
    Algebra(std::string name, const FieldSpec& f, std::vector<std::string> basis_labels);

    const std::string& name() const { return name_; }
    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_[(i * dim() + j) * dim() + k];
    }
    void set_product(std::size_t i, std::size_t j, const Vec& value);
    Vec basis_product(std::size_t i, std::size_t j) const;

    std::size_t label_index(const std::string& label) const;

private:
    std::string name_;
    FieldSpec field_;
    std::vector<std::string> labels_;
    std::vector<Scalar> structure_;
};

/// Bilinear extension of the structure constants.
Vec multiply(const Algebra& a, const Vec& u, const Vec& v);

/// A subspace of the coordinate space of an algebra, by an independent basis.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Vec> basis;

    std::size_t dim() const { return basis.size(); }
    bool contains(const Vec& v, const FieldSpec& f) const;
};

/// A pair of endomorphism matrices (f*-, -*f) acting on an algebra.
struct BiEndo {
    ExactMatrix left;   // f * -
    ExactMatrix right;  // - * f

    BiEndo(std::size_t n, const FieldSpec& f) : left(n, n, f), right(n, n, f) {}
    BiEndo(ExactMatrix l, ExactMatrix r) : left(std::move(l)), right(std::move(r)) {}

    Vec flatten() const;  // row-major left, then row-major right
    static BiEndo unflatten(const Vec& v, std::size_t n, const FieldSpec& f);
    bool operator==(const BiEndo&) const = default;
};

/// True iff p vanishes on every tuple of basis elements (enough, since p is
/// multilinear).
bool check_identity(const Algebra& a, const MultilinearPoly& p);
/// All identities of the variety, plus the characteristic guard.
bool satisfies_all(const Algebra& a, const VarietySpec& v);

/// Two-sided annihilator {x : xy = yx = 0 for all y}.
Subspace annihilator(const Algebra& a);
/// The subalgebra spanned by all products (closed under multiplication).
Subspace product_subspace(const Algebra& a);

/// Left and right multiplication operators of a vector.
BiEndo mult_ops(const Algebra& a, const Vec& x);

/// Parse the algebra file grammar:
///   algebra NAME over (Q|F INT) dim INT
///   basis LABEL+
///   LABEL * LABEL = LINEARCOMBO      (unlisted products are zero)
Algebra parse_algebra(const std::string& text);
std::string algebra_to_text(const Algebra& a);

/// Built-in algebras with the structure constants used throughout the paper
/// trail: octonions, mat2, sl2, kronecker, heisenberg3/heisenberg5/...,
/// engel7_f3, jj2_f3, dual_numbers, abelian1/abelian2/....
Algebra fixture_algebra(const std::string& name);
Algebra fixture_algebra(const std::string& name, const FieldSpec& f);
std::vector<std::string> fixture_algebra_names();

/// Built-in variety catalog (leibniz, assoc, lie, ...).
VarietySpec builtin_variety(const std::string& name, const FieldSpec& f);
std::vector<std::string> builtin_variety_names();

}  // namespace wact
