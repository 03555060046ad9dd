#include "wact/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wact {

Algebra::Algebra(std::string name, const FieldSpec& f, std::vector<std::string> basis_labels)
    : name_(std::move(name)), field_(f), labels_(std::move(basis_labels)) {
    std::set<std::string> dedup(labels_.begin(), labels_.end());
    if (dedup.size() != labels_.size()) throw std::invalid_argument("algebra: duplicate basis labels");
    structure_.assign(dim() * dim() * dim(), Scalar(f));
}

void Algebra::set_product(std::size_t i, std::size_t j, const Vec& value) {
    if (value.size() != dim()) throw std::invalid_argument("set_product: length mismatch");
    for (std::size_t k = 0; k < dim(); ++k) structure_[(i * dim() + j) * dim() + k] = value[k];
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
    Vec out(dim(), Scalar(field_));
    for (std::size_t k = 0; k < dim(); ++k) out[k] = c(i, j, k);
    return out;
}

std::size_t Algebra::label_index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("unknown basis label '" + label + "'");
    return it - labels_.begin();
}

Vec multiply(const Algebra& a, const Vec& u, const Vec& v) {
    std::size_t n = a.dim();
    if (u.size() != n || v.size() != n) throw std::invalid_argument("multiply: length mismatch");
    Vec out(n, Scalar(a.field()));
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            Scalar uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!a.c(i, j, k).is_zero()) out[k] += uv * a.c(i, j, k);
        }
    }
    return out;
}

bool Subspace::contains(const Vec& v, const FieldSpec& f) const {
    EchelonBasis eb(ambient_dim, f);
    for (const auto& b : basis) eb.insert(b);
    return eb.contains(v);
}

Vec BiEndo::flatten() const {
    Vec out;
    out.reserve(2 * left.rows() * left.cols());
    for (std::size_t i = 0; i < left.rows(); ++i)
        for (std::size_t j = 0; j < left.cols(); ++j) out.push_back(left.at(i, j));
    for (std::size_t i = 0; i < right.rows(); ++i)
        for (std::size_t j = 0; j < right.cols(); ++j) out.push_back(right.at(i, j));
    return out;
}

BiEndo BiEndo::unflatten(const Vec& v, std::size_t n, const FieldSpec& f) {
    if (v.size() != 2 * n * n) throw std::invalid_argument("BiEndo::unflatten: length mismatch");
    BiEndo b(n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            b.left.at(i, j) = v[i * n + j];
            b.right.at(i, j) = v[n * n + i * n + j];
        }
    return b;
}

namespace {

Vec eval_word(const Algebra& a, const MagmaWord& w, const std::vector<std::size_t>& assignment,
              const std::vector<Variable>& vars) {
    if (w.is_leaf()) {
        auto it = std::find(vars.begin(), vars.end(), w.var());
        if (it == vars.end()) throw std::invalid_argument("eval_word: unknown variable " + w.var().name);
        return unit_vec(a.dim(), assignment[it - vars.begin()], a.field());
    }
    return multiply(a, eval_word(a, w.left(), assignment, vars), eval_word(a, w.right(), assignment, vars));
}

}  // namespace

bool check_identity(const Algebra& a, const MultilinearPoly& p) {
    std::size_t n = a.dim(), deg = p.degree();
    std::vector<std::size_t> assignment(deg, 0);
    while (true) {
        Vec sum(n, Scalar(a.field()));
        for (const auto& [w, c] : p.terms()) {
            Vec val = eval_word(a, w, assignment, p.vars());
            for (std::size_t k = 0; k < n; ++k)
                if (!val[k].is_zero()) sum[k] += c * val[k];
        }
        if (!is_zero(sum)) return false;
        std::size_t pos = 0;
        while (pos < deg && ++assignment[pos] == n) assignment[pos++] = 0;
        if (pos == deg) break;
    }
    return true;
}

bool satisfies_all(const Algebra& a, const VarietySpec& v) {
    if (!(a.field() == v.field)) return false;
    if (v.excluded_chars.count(a.field().characteristic())) return false;
    return std::all_of(v.identities.begin(), v.identities.end(),
                       [&](const MultilinearPoly& p) { return check_identity(a, p); });
}

Subspace annihilator(const Algebra& a) {
    std::size_t n = a.dim();
    // rows of the combined left/right multiplication constraints on x
    ExactMatrix m(2 * n * n, n, a.field());
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) m.at(r, i) = a.c(i, j, k);
            ++r;
            for (std::size_t i = 0; i < n; ++i) m.at(r, i) = a.c(j, i, k);
            ++r;
        }
    Subspace s;
    s.ambient_dim = n;
    s.basis = nullspace(m);
    return s;
}

Subspace product_subspace(const Algebra& a) {
    std::size_t n = a.dim();
    EchelonBasis eb(n, a.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) eb.insert(a.basis_product(i, j));
    // already multiplicatively closed, but iterate to the stated fixpoint
    bool grew = true;
    while (grew) {
        grew = false;
        auto current = eb.rows();
        for (const auto& u : current)
            for (const auto& v : current)
                if (eb.insert(multiply(a, u, v))) grew = true;
    }
    Subspace s;
    s.ambient_dim = n;
    s.basis = eb.rows();
    return s;
}

BiEndo mult_ops(const Algebra& a, const Vec& x) {
    std::size_t n = a.dim();
    if (x.size() != n) throw std::invalid_argument("mult_ops: length mismatch");
    BiEndo b(n, a.field());
    for (std::size_t j = 0; j < n; ++j) {
        Vec lj = multiply(a, x, unit_vec(n, j, a.field()));
        Vec rj = multiply(a, unit_vec(n, j, a.field()), x);
        for (std::size_t k = 0; k < n; ++k) {
            b.left.at(k, j) = lj[k];
            b.right.at(k, j) = rj[k];
        }
    }
    return b;
}

namespace {

struct AlgebraHeader {
    std::string name;
    FieldSpec field = FieldSpec::rationals();
    std::size_t dim = 0;
};

Vec parse_linear_combo(const std::string& s, const Algebra& a, std::size_t line_no) {
    Vec out(a.dim(), Scalar(a.field()));
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("line " + std::to_string(line_no) + ", column " + std::to_string(pos + 1) +
                                    ": " + what);
    };
    skip_ws();
    if (pos < s.size() && s[pos] == '0' && pos + 1 == s.size()) return out;  // explicit zero
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= s.size()) {
            if (first) fail("empty linear combination");
            break;
        }
        Scalar sign(a.field(), 1);
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = Scalar(a.field(), -1);
            ++pos;
            skip_ws();
        } else if (!first)
            fail("expected '+' or '-'");
        Scalar coef = sign;
        if (pos < s.size() && isdigit((unsigned char)s[pos])) {
            std::size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            std::string num = s.substr(start, pos - start);
            std::string den = "1";
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                std::size_t d0 = pos;
                while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
                if (pos == d0) fail("expected denominator digits");
                den = s.substr(d0, pos - d0);
            }
            coef = coef * Scalar::parse(a.field(), num + "/" + den);
            skip_ws();
        }
        std::size_t start = pos;
        while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_' || s[pos] == ':')) ++pos;
        if (start == pos) fail("expected a basis label");
        out[a.label_index(s.substr(start, pos - start))] += coef;
        first = false;
    }
    return out;
}

}  // namespace

Algebra parse_algebra(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    AlgebraHeader hdr;
    std::vector<std::string> labels;
    std::vector<std::tuple<std::size_t, std::string, std::string, std::string>> products;
    bool saw_header = false, saw_basis = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "algebra") {
            std::string over, fld, dimkw;
            if (!(ls >> hdr.name >> over) || over != "over")
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'algebra NAME over ...'");
            if (!(ls >> fld)) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected field");
            if (fld == "F") {
                std::int64_t p;
                if (!(ls >> p)) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected prime");
                hdr.field = FieldSpec::prime(p);
            } else {
                auto f = FieldSpec::parse(fld);
                if (!f) throw std::invalid_argument("line " + std::to_string(line_no) + ": bad field '" + fld + "'");
                hdr.field = *f;
            }
            if (!(ls >> dimkw >> hdr.dim) || dimkw != "dim")
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'dim N'");
            saw_header = true;
        } else if (first == "basis") {
            std::string lbl;
            while (ls >> lbl) labels.push_back(lbl);
            saw_basis = true;
        } else {
            // LABEL * LABEL = COMBO
            std::string star, lhs2, eq;
            if (!(ls >> star >> lhs2 >> eq) || star != "*" || eq != "=")
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'LABEL * LABEL = ...'");
            std::string rest;
            std::getline(ls, rest);
            products.emplace_back(line_no, first, lhs2, rest);
        }
    }
    if (!saw_header) throw std::invalid_argument("algebra file: missing header line");
    if (!saw_basis) throw std::invalid_argument("algebra file: missing basis line");
    if (labels.size() != hdr.dim) throw std::invalid_argument("algebra file: basis size differs from dim");
    Algebra a(hdr.name, hdr.field, labels);
    for (const auto& [ln, l1, l2, combo] : products)
        a.set_product(a.label_index(l1), a.label_index(l2), parse_linear_combo(combo, a, ln));
    return a;
}

std::string algebra_to_text(const Algebra& a) {
    std::ostringstream out;
    out << "algebra " << a.name() << " over ";
    if (a.field().is_rationals())
        out << "Q";
    else
        out << "F " << a.field().characteristic();
    out << " dim " << a.dim() << "\n";
    out << "basis";
    for (const auto& l : a.basis_labels()) out << " " << l;
    out << "\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec p = a.basis_product(i, j);
            if (is_zero(p)) continue;
            out << a.basis_labels()[i] << " * " << a.basis_labels()[j] << " =";
            bool first = true;
            for (std::size_t k = 0; k < a.dim(); ++k) {
                if (p[k].is_zero()) continue;
                std::string cs = p[k].str();
                bool neg = cs[0] == '-';
                if (neg) cs = cs.substr(1);
                out << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
                if (cs != "1") out << cs << " ";
                out << a.basis_labels()[k];
                first = false;
            }
            out << "\n";
        }
    return out.str();
}

}  // namespace wact
