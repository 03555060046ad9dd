#pragma once

#include <map>
#include <string>
#include <vector>

#include "wact/matrix.hpp"

namespace wact {

/// A polynomial in the bracket parameters a1..ak (alpha block) and b1..bk
/// (beta block), indexed 0..k-1 and k..2k-1. Degrees stay at most 2.
class ParamPoly {
public:
    ParamPoly() = default;
    explicit ParamPoly(const Scalar& c);
    /// The monomial p_i.
    static ParamPoly var(std::size_t index, const FieldSpec& f);

    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const;
    const FieldSpec& field() const;
    const std::map<std::vector<std::size_t>, Scalar>& terms() const { return terms_; }

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly scaled(const Scalar& c) const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    bool operator==(const ParamPoly&) const = default;

    Scalar eval(const std::vector<Scalar>& assignment) const;
    /// Coefficients of a degree<=1 poly: (constant, linear part). Throws above degree 1.
    std::pair<Scalar, Vec> affine_parts(std::size_t nparams) const;

    /// Normalize so the leading coefficient is 1 (for deduplication).
    ParamPoly monic() const;

    /// Text with variables named a1..ak, b1..bk.
    std::string str(std::size_t alpha_count) const;

private:
    // key: sorted variable index list of a monomial; empty = constant term
    std::map<std::vector<std::size_t>, Scalar> terms_;
    void add(const std::vector<std::size_t>& mono, const Scalar& c);
};

enum class ConstraintKind { closure, structure };

/// Polynomial conditions on the bracket parameters. An empty list means every
/// assignment works.
struct ConstraintSystem {
    std::vector<ParamPoly> polys;
    std::size_t param_count = 0;  // alpha block then beta block
    ConstraintKind kind = ConstraintKind::closure;
    FieldSpec field = FieldSpec::rationals();

    bool satisfied_by(const std::vector<Scalar>& assignment) const;
    void normalize();  // drop zeros, deduplicate up to scaling, sort
};

/// Exact solution of an affine-linear system (closure systems are linear).
struct LinearAnalysis {
    bool consistent = false;
    std::vector<Scalar> particular;
    std::size_t solution_dim = 0;
};
LinearAnalysis analyze_linear(const ConstraintSystem& cs);

}  // namespace wact
