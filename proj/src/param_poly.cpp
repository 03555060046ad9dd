#include "wact/param_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace wact {

ParamPoly::ParamPoly(const Scalar& c) {
    if (!c.is_zero()) terms_[{}] = c;
}

ParamPoly ParamPoly::var(std::size_t index, const FieldSpec& f) {
    ParamPoly p;
    p.terms_[{index}] = Scalar(f, 1);
    return p;
}

std::size_t ParamPoly::degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return d;
}

const FieldSpec& ParamPoly::field() const {
    if (terms_.empty()) {
        static const FieldSpec q = FieldSpec::rationals();
        return q;
    }
    return terms_.begin()->second.field();
}

void ParamPoly::add(const std::vector<std::size_t>& mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly p = *this;
    for (const auto& [m, c] : o.terms_) p.add(m, c);
    return p;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly p = *this;
    for (const auto& [m, c] : o.terms_) p.add(m, -c);
    return p;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly p;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            std::vector<std::size_t> m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            p.add(m, c1 * c2);
        }
    return p;
}

ParamPoly ParamPoly::scaled(const Scalar& c) const {
    ParamPoly p;
    if (c.is_zero()) return p;
    for (const auto& [m, coef] : terms_) p.terms_[m] = coef * c;
    return p;
}

Scalar ParamPoly::eval(const std::vector<Scalar>& assignment) const {
    if (terms_.empty()) {
        if (assignment.empty()) throw std::invalid_argument("ParamPoly::eval: need an assignment field");
        return Scalar(assignment[0].field());
    }
    Scalar sum(field());
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t idx : m) {
            if (idx >= assignment.size()) throw std::invalid_argument("ParamPoly::eval: assignment too short");
            t *= assignment[idx];
        }
        sum += t;
    }
    return sum;
}

std::pair<Scalar, Vec> ParamPoly::affine_parts(std::size_t nparams) const {
    const FieldSpec f = field();
    Scalar constant(f);
    Vec linear = zero_vec(nparams, f);
    for (const auto& [m, c] : terms_) {
        if (m.empty())
            constant = c;
        else if (m.size() == 1)
            linear[m[0]] += c;
        else
            throw std::logic_error("affine_parts: polynomial has degree above 1");
    }
    return {constant, linear};
}

ParamPoly ParamPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.begin()->second.inverse());
}

std::string ParamPoly::str(std::size_t alpha_count) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool need_coef = cs != "1" || m.empty();
        if (need_coef) out += cs;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (need_coef || i > 0) out += "*";
            std::size_t idx = m[i];
            out += idx < alpha_count ? "a" + std::to_string(idx + 1) : "b" + std::to_string(idx - alpha_count + 1);
        }
        first = false;
    }
    return out;
}

bool ConstraintSystem::satisfied_by(const std::vector<Scalar>& assignment) const {
    return std::all_of(polys.begin(), polys.end(),
                       [&](const ParamPoly& p) { return p.eval(assignment).is_zero(); });
}

void ConstraintSystem::normalize() {
    std::vector<ParamPoly> out;
    for (const auto& p : polys)
        if (!p.is_zero()) out.push_back(p.monic());
    std::sort(out.begin(), out.end(), [](const ParamPoly& a, const ParamPoly& b) {
        auto sa = a.str(1000), sb = b.str(1000);
        return sa.size() != sb.size() ? sa.size() < sb.size() : sa < sb;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    polys = std::move(out);
}

LinearAnalysis analyze_linear(const ConstraintSystem& cs) {
    LinearAnalysis out;
    if (cs.polys.empty()) {
        out.consistent = true;
        out.particular = std::vector<Scalar>(cs.param_count, Scalar(cs.field));
        out.solution_dim = cs.param_count;
        return out;
    }
    ExactMatrix m(cs.polys.size(), cs.param_count, cs.field);
    Vec rhs(cs.polys.size(), Scalar(cs.field));
    for (std::size_t i = 0; i < cs.polys.size(); ++i) {
        auto [c, lin] = cs.polys[i].affine_parts(cs.param_count);
        for (std::size_t j = 0; j < cs.param_count; ++j) m.at(i, j) = lin[j];
        rhs[i] = -c;
    }
    AffineSolution sol = solve_affine(m, rhs);
    out.consistent = sol.consistent;
    if (sol.consistent) {
        out.particular = sol.particular;
        out.solution_dim = sol.kernel.size();
    }
    return out;
}

}  // namespace wact
