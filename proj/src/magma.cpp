#include "wact/magma.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wact {

bool valid_variable_name(const std::string& name) {
    if (name.empty() || !islower((unsigned char)name[0])) return false;
    return std::all_of(name.begin(), name.end(),
                       [](unsigned char c) { return islower(c) || isdigit(c); });
}

MagmaWord MagmaWord::leaf(const Variable& v) {
    if (!valid_variable_name(v.name)) throw std::invalid_argument("bad variable name: " + v.name);
    auto n = std::make_shared<Node>();
    n->leaf = true;
    n->v = v;
    n->degree = 1;
    n->text = v.name;
    return MagmaWord(std::move(n));
}

MagmaWord MagmaWord::node(const MagmaWord& l, const MagmaWord& r) {
    auto n = std::make_shared<Node>();
    n->leaf = false;
    n->l = l.n_;
    n->r = r.n_;
    n->degree = l.degree() + r.degree();
    n->text = "(" + l.str() + "*" + r.str() + ")";
    return MagmaWord(std::move(n));
}

const Variable& MagmaWord::var() const {
    if (!n_->leaf) throw std::logic_error("var() on a product word");
    return n_->v;
}

const MagmaWord MagmaWord::left() const {
    if (n_->leaf) throw std::logic_error("left() on a leaf");
    return MagmaWord(n_->l);
}

const MagmaWord MagmaWord::right() const {
    if (n_->leaf) throw std::logic_error("right() on a leaf");
    return MagmaWord(n_->r);
}

void MagmaWord::leaves(std::vector<Variable>& out) const {
    if (is_leaf())
        out.push_back(var());
    else {
        left().leaves(out);
        right().leaves(out);
    }
}

std::vector<Variable> MagmaWord::leaves() const {
    std::vector<Variable> out;
    leaves(out);
    return out;
}

MagmaWord MagmaWord::rename(const std::map<std::string, std::string>& subst) const {
    if (is_leaf()) {
        auto it = subst.find(var().name);
        return leaf(it == subst.end() ? var() : Variable{it->second});
    }
    return node(left().rename(subst), right().rename(subst));
}

MagmaWord MagmaWord::substitute(const Variable& v, const MagmaWord& w) const {
    if (is_leaf()) return var() == v ? w : *this;
    return node(left().substitute(v, w), right().substitute(v, w));
}

bool MagmaWord::contains_subword(const MagmaWord& w) const {
    if (*this == w) return true;
    if (is_leaf()) return false;
    return left().contains_subword(w) || right().contains_subword(w);
}

std::string MagmaWord::shape() const {
    if (is_leaf()) return "0";
    return "1" + left().shape() + right().shape();
}

namespace {

struct WordParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("word syntax error at position " + std::to_string(pos) + ": " + what);
    }
    MagmaWord parse() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s[pos] == '(') {
            ++pos;
            MagmaWord l = parse();
            skip_ws();
            if (pos >= s.size() || s[pos] != '*') fail("expected '*'");
            ++pos;
            MagmaWord r = parse();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return MagmaWord::node(l, r);
        }
        if (!islower((unsigned char)s[pos])) fail("expected variable or '('");
        std::size_t start = pos;
        while (pos < s.size() && (islower((unsigned char)s[pos]) || isdigit((unsigned char)s[pos]))) ++pos;
        return MagmaWord::leaf(Variable{s.substr(start, pos - start)});
    }
};

}  // namespace

MagmaWord parse_word(const std::string& text) {
    WordParser p{text};
    MagmaWord w = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return w;
}

MultilinearPoly MultilinearPoly::monomial(const std::vector<Variable>& vars, const FieldSpec& f,
                                          const MagmaWord& w, const Scalar& c) {
    MultilinearPoly p(vars, f);
    p.add_term(w, c);
    return p;
}

void MultilinearPoly::add_term(const MagmaWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& other) const {
    MultilinearPoly out = *this;
    for (const auto& [w, c] : other.terms_) out.add_term(w, c);
    return out;
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& other) const {
    MultilinearPoly out = *this;
    for (const auto& [w, c] : other.terms_) out.add_term(w, -c);
    return out;
}

MultilinearPoly MultilinearPoly::scaled(const Scalar& c) const {
    MultilinearPoly out(vars_, field_);
    if (c.is_zero()) return out;
    for (const auto& [w, coef] : terms_) out.terms_.emplace(w, coef * c);
    return out;
}

bool MultilinearPoly::is_multilinear() const {
    std::vector<Variable> sorted_vars = vars_;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    for (const auto& [w, c] : terms_) {
        std::vector<Variable> ls = w.leaves();
        std::sort(ls.begin(), ls.end());
        if (ls != sorted_vars) return false;
    }
    return true;
}

std::string MultilinearPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += first ? (neg ? "- " : "") : (neg ? " - " : " + ");
        if (cs != "1") out += cs + " ";
        out += w.str();
        first = false;
    }
    return out;
}

std::size_t MonomialOrdering::position(const MagmaWord& w) const {
    auto it = index.find(w.str());
    if (it == index.end()) throw std::invalid_argument("word not in ordering: " + w.str());
    return it->second;
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

// All shapes with the given number of leaves; leaves are filled with the slot
// names in order. Sorted afterwards so that the left comb comes first.
std::vector<MagmaWord> shapes_rec(std::size_t leaves, std::size_t offset, const std::vector<Variable>& slots) {
    std::vector<MagmaWord> out;
    if (leaves == 1) {
        out.push_back(MagmaWord::leaf(slots[offset]));
        return out;
    }
    for (std::size_t k = 1; k < leaves; ++k)
        for (const auto& l : shapes_rec(k, offset, slots))
            for (const auto& r : shapes_rec(leaves - k, offset + k, slots)) out.push_back(MagmaWord::node(l, r));
    return out;
}

}  // namespace

std::vector<MagmaWord> tree_shapes(std::size_t leaves, const std::vector<Variable>& slot_names) {
    auto out = shapes_rec(leaves, 0, slot_names);
    // '1' (node) before '0' (leaf) puts deeper-left shapes first
    std::sort(out.begin(), out.end(), [](const MagmaWord& a, const MagmaWord& b) {
        return a.shape() > b.shape();
    });
    return out;
}

MonomialOrdering enumerate_multilinear(const std::vector<Variable>& vars) {
    std::size_t n = vars.size();
    if (n < 1 || n > 5) throw std::invalid_argument("enumerate_multilinear: degree must be 1..5");
    {
        std::set<Variable> dedup(vars.begin(), vars.end());
        if (dedup.size() != n) throw std::invalid_argument("enumerate_multilinear: duplicate variables");
    }
    MonomialOrdering ord;
    ord.vars = vars;
    if (n == 3) {
        const Variable &a = vars[0], &b = vars[1], &c = vars[2];
        auto L = [](const Variable& v) { return MagmaWord::leaf(v); };
        auto N = [](const MagmaWord& l, const MagmaWord& r) { return MagmaWord::node(l, r); };
        ord.words = {
            N(L(a), N(L(b), L(c))), N(L(a), N(L(c), L(b))), N(N(L(b), L(c)), L(a)), N(N(L(c), L(b)), L(a)),
            N(N(L(a), L(c)), L(b)), N(N(L(a), L(b)), L(c)), N(N(L(c), L(a)), L(b)), N(N(L(b), L(a)), L(c)),
            N(L(b), N(L(a), L(c))), N(L(c), N(L(a), L(b))), N(L(b), N(L(c), L(a))), N(L(c), N(L(b), L(a)))};
    } else {
        std::vector<Variable> slots;
        for (std::size_t i = 0; i < n; ++i) slots.push_back(Variable{"s" + std::to_string(i)});
        auto shapes = tree_shapes(n, slots);
        for (const auto& shape : shapes)
            for (const auto& perm : all_permutations(n)) {
                std::map<std::string, std::string> subst;
                for (std::size_t i = 0; i < n; ++i) subst[slots[i].name] = vars[perm[i]].name;
                ord.words.push_back(shape.rename(subst));
            }
    }
    for (std::size_t i = 0; i < ord.words.size(); ++i) ord.index[ord.words[i].str()] = i;
    return ord;
}

MultilinearPoly substitute(const MultilinearPoly& p, const Variable& v, const MagmaWord& w) {
    auto it = std::find(p.vars().begin(), p.vars().end(), v);
    if (it == p.vars().end()) throw std::invalid_argument("substitute: unknown variable " + v.name);
    std::vector<Variable> merged;
    for (const auto& pv : p.vars())
        if (pv == v)
            for (const auto& wl : w.leaves()) merged.push_back(wl);
        else
            merged.push_back(pv);
    {
        std::set<Variable> dedup(merged.begin(), merged.end());
        if (dedup.size() != merged.size()) throw std::invalid_argument("substitute: variable collision");
    }
    MultilinearPoly out(merged, p.field());
    for (const auto& [word, c] : p.terms()) out.add_term(word.substitute(v, w), c);
    return out;
}

MultilinearPoly border_multiply(const MultilinearPoly& p, const Variable& w, Side side) {
    for (const auto& pv : p.vars())
        if (pv == w) throw std::invalid_argument("border_multiply: variable collision on " + w.name);
    std::vector<Variable> merged = p.vars();
    merged.push_back(w);
    MultilinearPoly out(merged, p.field());
    MagmaWord lw = MagmaWord::leaf(w);
    for (const auto& [word, c] : p.terms())
        out.add_term(side == Side::left ? MagmaWord::node(lw, word) : MagmaWord::node(word, lw), c);
    return out;
}

MultilinearPoly permute_vars(const MultilinearPoly& p, const std::map<std::string, std::string>& sigma,
                             const std::vector<Variable>& new_vars) {
    MultilinearPoly out(new_vars, p.field());
    for (const auto& [word, c] : p.terms()) out.add_term(word.rename(sigma), c);
    if (!out.is_multilinear()) throw std::invalid_argument("permute_vars: relabeling is not a bijection");
    return out;
}

Vec to_row(const MultilinearPoly& p, const MonomialOrdering& ord) {
    Vec row = zero_vec(ord.size(), p.field());
    for (const auto& [w, c] : p.terms()) row[ord.position(w)] = c;
    return row;
}

MultilinearPoly from_row(const Vec& row, const MonomialOrdering& ord) {
    if (row.size() != ord.size()) throw std::invalid_argument("from_row: length mismatch");
    FieldSpec f = row.empty() ? FieldSpec::rationals() : row[0].field();
    MultilinearPoly p(ord.vars, f);
    for (std::size_t i = 0; i < row.size(); ++i) p.add_term(ord.words[i], row[i]);
    return p;
}

}  // namespace wact
