#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wact/magma.hpp"

namespace wact {

/// A named set of multilinear identities (implicitly "= 0") together with the
/// characteristics the variety excludes.
struct VarietySpec {
    std::string name;
    FieldSpec field = FieldSpec::rationals();
    std::vector<MultilinearPoly> identities;  // variables in canonical names per degree
    std::set<std::int64_t> excluded_chars;

    bool has_degree2_identity() const;
    std::size_t max_identity_degree() const;
    /// Throws if the spec's field characteristic is excluded by the variety.
    void ensure_char_ok() const;
};

/// Canonical variable lists: (x), (x,y), (f,x,y), (f,g,x,y), (f,g,x,y,z).
std::vector<Variable> canonical_vars(std::size_t degree);

/// Parse the variety file grammar:
///   variety NAME
///   char ("any" | "not" INT+)
///   identity POLY        (one or more)
VarietySpec parse_variety(const std::string& text, const FieldSpec& field);

/// Serialize identities of a variety back to grammar text.
std::string variety_to_text(const VarietySpec& v);

/// The matrix of the S3-orbit of the degree-3 identity span over the
/// 12-monomial basis, and its reduced row echelon form.
struct IdentityMatrices {
    ExactMatrix m3;
    ExactMatrix rm3;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;

    IdentityMatrices(const FieldSpec& f) : m3(0, 12, f), rm3(0, 12, f) {}
};

/// Rows: for each degree-3 identity, its six variable relabelings onto
/// (f,x,y) in lexicographic image order; degree-2 identities enter through
/// their degree-3 liftings (border products and variable-by-product
/// substitutions with the fresh variable, S3-orbited). Identities of degree
/// above 3 have no arity-3 consequences and are skipped.
IdentityMatrices build_m3(const VarietySpec& v);

/// The two rewriting rules of degree 3. The eight coefficients expand over
/// the fixed monomial list
///   (xf)g, (fx)g, g(xf), g(fx), (xg)f, (gx)f, f(xg), f(gx)
/// so that x(fg) = sum lambda_i m_i and (fg)x = sum mu_i m_i.
struct LambdaMuRules {
    std::array<Scalar, 8> lambda;
    std::array<Scalar, 8> mu;

    LambdaMuRules(const FieldSpec& f) { lambda.fill(Scalar(f)), mu.fill(Scalar(f)); }
};

/// Columns of the degree-3 basis carrying the eight expansion monomials after
/// the retagging f->x, x->f, y->g, in rule order (see LambdaMuRules).
inline constexpr std::array<std::size_t, 8> kRuleColumns = {5, 7, 9, 11, 4, 6, 8, 10};

/// For commutative or anti-commutative varieties the rules collapse to
/// x(yz) = alpha (xy)z + beta (xz)y with xy = epsilon yx.
struct ReducedRule {
    int epsilon = 1;  // +1 commutative, -1 anti-commutative
    Scalar alpha, beta;
};

struct AccessibilityReport {
    bool accessible = false;
    std::size_t rank = 0;
    std::optional<LambdaMuRules> witness;
    std::optional<std::string> failure_reason;
};

/// Accessible iff the first four columns of RM3 are pivot columns; the
/// witness rules are read off the rows with pivots in columns 1 and 3.
AccessibilityReport accessibility_check(const VarietySpec& v);

LambdaMuRules extract_lambda_mu(const IdentityMatrices& im, const FieldSpec& f);

/// The degree-3 identity rows of the two rules, relabeled onto (f,x,y);
/// both must lie in the row span of M3 for valid rules.
std::pair<Vec, Vec> lambda_mu_rows(const LambdaMuRules& rules);
bool lambda_mu_valid(const VarietySpec& v, const LambdaMuRules& rules);

std::optional<ReducedRule> reduced_rule(const VarietySpec& v);

}  // namespace wact
