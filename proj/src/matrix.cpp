#include "wact/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace wact {

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldSpec& f) {
    ExactMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(f, 1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, const FieldSpec& f) {
    ExactMatrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec ExactMatrix::row(std::size_t i) const {
    return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void ExactMatrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    std::copy(v.begin(), v.end(), e_.begin() + i * cols_);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    ExactMatrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    ExactMatrix c = a;
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] += b.e_[i];
    return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + b.scaled(Scalar(a.field(), -1)); }

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
    ExactMatrix m = *this;
    for (auto& x : m.e_) x *= c;
    return m;
}

Vec ExactMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    Vec out(rows_, Scalar(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

RrefResult rigid_rref(const ExactMatrix& m) {
    ExactMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(lead, j));
        Scalar inv = r.at(lead, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Scalar factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= factor * r.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return rigid_rref(m).rank; }

std::vector<Vec> nullspace(const ExactMatrix& m) {
    RrefResult r = rigid_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v = zero_vec(m.cols(), m.field());
        v[j] = Scalar(m.field(), 1);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.matrix.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

AffineSolution solve_affine(const ExactMatrix& mat, const Vec& rhs) {
    if (rhs.size() != mat.rows()) throw std::invalid_argument("solve_affine: rhs length mismatch");
    ExactMatrix aug(mat.rows(), mat.cols() + 1, mat.field());
    for (std::size_t i = 0; i < mat.rows(); ++i) {
        for (std::size_t j = 0; j < mat.cols(); ++j) aug.at(i, j) = mat.at(i, j);
        aug.at(i, mat.cols()) = rhs[i];
    }
    RrefResult r = rigid_rref(aug);
    AffineSolution sol;
    for (std::size_t p : r.pivot_cols)
        if (p == mat.cols()) return sol;  // pivot in the augmented column
    sol.consistent = true;
    sol.particular = zero_vec(mat.cols(), mat.field());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        sol.particular[r.pivot_cols[i]] = r.matrix.at(i, mat.cols());
    sol.kernel = nullspace(mat);
    return sol;
}

std::optional<Vec> span_membership(const ExactMatrix& rows, const Vec& v) {
    if (v.size() != rows.cols()) throw std::invalid_argument("span_membership: length mismatch");
    AffineSolution s = solve_affine(rows.transpose(), v);
    if (!s.consistent) return std::nullopt;
    return s.particular;
}

bool EchelonBasis::insert(Vec row) {
    if (row.size() != cols_) throw std::invalid_argument("EchelonBasis: length mismatch");
    row = reduce(std::move(row));
    std::size_t piv = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv == cols_) return false;
    Scalar inv = row[piv].inverse();
    for (auto& x : row) x *= inv;
    // back-substitute into the existing rows to keep the basis reduced
    for (auto& r : rows_) {
        if (r[piv].is_zero()) continue;
        Scalar f = r[piv];
        for (std::size_t j = piv; j < cols_; ++j) r[j] -= f * row[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(row));
    return true;
}

Vec EchelonBasis::reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        Scalar f = c;
        const Vec& r = rows_[i];
        for (std::size_t j = pivots_[i]; j < cols_; ++j)
            if (!r[j].is_zero()) v[j] -= f * r[j];
    }
    return v;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

ExactMatrix EchelonBasis::to_matrix() const { return ExactMatrix::from_rows(rows_, cols_, field_); }

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec sum: length mismatch");
    Vec c = a;
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec diff: length mismatch");
    Vec c = a;
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return c;
}

Vec scaled(const Vec& v, const Scalar& c) {
    Vec out = v;
    for (auto& x : out) x *= c;
    return out;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec zero_vec(std::size_t n, const FieldSpec& f) { return Vec(n, Scalar(f)); }

Vec unit_vec(std::size_t n, std::size_t i, const FieldSpec& f) {
    Vec v(n, Scalar(f));
    v[i] = Scalar(f, 1);
    return v;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t cols, const FieldSpec& f) {
    EchelonBasis ea(cols, f), eb(cols, f);
    for (const auto& r : a) ea.insert(r);
    for (const auto& r : b) eb.insert(r);
    if (ea.rank() != eb.rank()) return false;
    for (const auto& r : a)
        if (!eb.contains(r)) return false;
    return true;
}

}  // namespace wact
