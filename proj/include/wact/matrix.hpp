#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wact/field.hpp"

namespace wact {

using Vec = std::vector<Scalar>;

/// Dense matrix with exact entries, all in one field.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
        : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar(f)) {}

    static ExactMatrix identity(std::size_t n, const FieldSpec& f);
    static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const FieldSpec& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);

    ExactMatrix transpose() const;
    bool is_zero() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix scaled(const Scalar& c) const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> e_;
};

struct RrefResult {
    ExactMatrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivot rule: leftmost column, first nonzero row.
RrefResult rigid_rref(const ExactMatrix& m);
inline RrefResult rref(const ExactMatrix& m) { return rigid_rref(m); }

std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel in echelon parameterization, one vector per free
/// column, in increasing free-column order.
std::vector<Vec> nullspace(const ExactMatrix& m);

struct AffineSolution {
    bool consistent = false;
    Vec particular;               // free variables set to zero
    std::vector<Vec> kernel;      // basis of the homogeneous solutions
};

/// Exact description of {x : mat x = rhs}.
AffineSolution solve_affine(const ExactMatrix& mat, const Vec& rhs);

/// Coefficients c with c^T rows = v when v lies in the row span, else absent.
std::optional<Vec> span_membership(const ExactMatrix& rows, const Vec& v);

/// Incrementally maintained reduced row echelon basis of a row space.
/// Inserting all rows of a matrix yields exactly rref of that matrix.
class EchelonBasis {
public:
    EchelonBasis(std::size_t cols, const FieldSpec& f) : cols_(cols), field_(f) {}

    /// Returns true if the row enlarged the span.
    bool insert(Vec row);
    /// Reduce a vector against the current basis (in place); returns the residue.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    ExactMatrix to_matrix() const;

private:
    std::size_t cols_;
    FieldSpec field_;
    std::vector<Vec> rows_;            // kept sorted by pivot column
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Scalar& c);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n, const FieldSpec& f);
Vec unit_vec(std::size_t n, std::size_t i, const FieldSpec& f);

/// True when the two row sets span the same subspace.
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t cols, const FieldSpec& f);

}  // namespace wact
