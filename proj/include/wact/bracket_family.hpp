#pragma once

#include "wact/param_poly.hpp"
#include "wact/variety.hpp"

namespace wact {

/// The degree-4 consequence space of a variety's degree-3 identity rows:
/// every RM3 row is bordered by g on both sides, has x and y substituted by
/// their two bracketings with g, and the f/g swap of each.
struct ConsequenceSpace {
    ExactMatrix degree4_matrix;  // generator rows over the 120-monomial basis
    std::size_t rank = 0;
    std::vector<std::pair<std::size_t, std::string>> generators;  // (RM3 row, operation tag)

    explicit ConsequenceSpace(const FieldSpec& f) : degree4_matrix(0, 120, f) {}
};

ConsequenceSpace degree4_consequences(const VarietySpec& v);

/// The parametric bracket family on operator symbols. The two expansions run
/// over the eight rule monomials (see LambdaMuRules); parameters a1..ak
/// attach to the (fg)x expansion and b1..bk to the x(fg) expansion, one pair
/// per free RM3 row.
struct ParamBracket {
    LambdaMuRules base;
    std::vector<std::array<Scalar, 8>> free_rows;  // retagged, in RM3 row order
    FieldSpec field = FieldSpec::rationals();

    ParamBracket() : base(FieldSpec::rationals()) {}

    std::size_t param_count() const { return 2 * free_rows.size(); }
    std::array<ParamPoly, 8> mu_expansion() const;      // (fg)x, alpha block
    std::array<ParamPoly, 8> lambda_expansion() const;  // x(fg), beta block
    /// The family member at a concrete parameter assignment.
    LambdaMuRules at(const std::vector<Scalar>& params) const;
};

ParamBracket build_bracket_family(const VarietySpec& v);

/// Substitute f by (fg) in every RM3 identity, expand by the parametric
/// bracket, and reduce modulo the consequence span; the residual coefficients
/// are the (affine-linear) closure conditions. Empty system = every parameter
/// assignment yields a total bracket.
ConstraintSystem closure_constraints(const VarietySpec& v, const ParamBracket& fam);

/// Instantiate every variety identity on operator symbols (f,g,h), apply to a
/// generic element from both sides and expand; coefficients over the
/// operator-composition words must vanish. Degree <= 2 in the parameters.
ConstraintSystem structure_constraints(const VarietySpec& v, const ParamBracket& fam);

/// Exhaustive search over F_p^params. Guarded to p^params <= 2^20.
std::vector<std::vector<Scalar>> brute_force_solutions(const ConstraintSystem& cs, std::int64_t p);

/// Plain-text ideal, one polynomial per line, variables a1..ak then b1..bk.
std::string emit_ideal(const ConstraintSystem& cs);

/// Reduce a rational constraint system mod p (for brute force over F_p).
ConstraintSystem reduce_mod(const ConstraintSystem& cs, std::int64_t p);

}  // namespace wact
