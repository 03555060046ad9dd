#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wact/matrix.hpp"

namespace wact {

/// A variable symbol. Names are nonempty, start with a lowercase letter and
/// continue with lowercase letters or digits.
struct Variable {
    std::string name;
    friend auto operator<=>(const Variable&, const Variable&) = default;
};

bool valid_variable_name(const std::string& name);

/// A non-associative word: a leaf variable or a product of two words.
/// Immutable; subtrees are shared.
class MagmaWord {
public:
    static MagmaWord leaf(const Variable& v);
    static MagmaWord node(const MagmaWord& l, const MagmaWord& r);

    bool is_leaf() const { return n_->leaf; }
    const Variable& var() const;          // leaves only
    const MagmaWord left() const;         // nodes only
    const MagmaWord right() const;        // nodes only
    std::size_t degree() const { return n_->degree; }

    /// The interchange form, e.g. "((x*y)*z)".
    const std::string& str() const { return n_->text; }
    void leaves(std::vector<Variable>& out) const;
    std::vector<Variable> leaves() const;

    /// Structural relabeling of every leaf.
    MagmaWord rename(const std::map<std::string, std::string>& subst) const;
    /// Replace every leaf v by the word w.
    MagmaWord substitute(const Variable& v, const MagmaWord& w) const;
    bool contains_subword(const MagmaWord& w) const;

    friend bool operator==(const MagmaWord& a, const MagmaWord& b) { return a.str() == b.str(); }
    friend bool operator<(const MagmaWord& a, const MagmaWord& b) { return a.str() < b.str(); }

    /// Shape encoding: '1' for a node, '0' for a leaf, preorder.
    std::string shape() const;

private:
    struct Node {
        bool leaf;
        Variable v;
        std::shared_ptr<const Node> l, r;
        std::size_t degree;
        std::string text;
    };
    explicit MagmaWord(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

/// Parse the word grammar: word := variable | '(' word '*' word ')'.
MagmaWord parse_word(const std::string& text);

/// A linear combination of multilinear words over an ordered variable list:
/// every stored word uses each variable exactly once. Zero coefficients are
/// never stored.
class MultilinearPoly {
public:
    MultilinearPoly(std::vector<Variable> vars, const FieldSpec& f)
        : vars_(std::move(vars)), field_(f) {}

    static MultilinearPoly monomial(const std::vector<Variable>& vars, const FieldSpec& f, const MagmaWord& w,
                                    const Scalar& c);

    const std::vector<Variable>& vars() const { return vars_; }
    const FieldSpec& field() const { return field_; }
    std::size_t degree() const { return vars_.size(); }
    const std::map<MagmaWord, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MagmaWord& w, const Scalar& c);

    MultilinearPoly operator+(const MultilinearPoly& other) const;
    MultilinearPoly operator-(const MultilinearPoly& other) const;
    MultilinearPoly scaled(const Scalar& c) const;

    /// Check the multilinearity invariant (each variable exactly once per word).
    bool is_multilinear() const;

    std::string str() const;

private:
    std::vector<Variable> vars_;
    FieldSpec field_;
    std::map<MagmaWord, Scalar> terms_;
};

/// The ordered basis of all multilinear words of a given degree.
struct MonomialOrdering {
    std::vector<Variable> vars;
    std::vector<MagmaWord> words;
    std::map<std::string, std::size_t> index;  // word text -> position

    std::size_t size() const { return words.size(); }
    std::size_t position(const MagmaWord& w) const;
};

/// All multilinear words on the given variables, each exactly once, in the
/// canonical order. Degree 3 uses the fixed order
///   v1(v2 v3), v1(v3 v2), (v2 v3)v1, (v3 v2)v1, (v1 v3)v2, (v1 v2)v3,
///   (v3 v1)v2, (v2 v1)v3, v2(v1 v3), v3(v1 v2), v2(v3 v1), v3(v2 v1);
/// other degrees enumerate tree shapes (left comb first) and then leaf
/// labelings in lexicographic position order. Degrees 1..5 supported.
MonomialOrdering enumerate_multilinear(const std::vector<Variable>& vars);

MultilinearPoly substitute(const MultilinearPoly& p, const Variable& v, const MagmaWord& w);
enum class Side { left, right };
MultilinearPoly border_multiply(const MultilinearPoly& p, const Variable& w, Side side);
/// Relabel leaves; sigma maps each of p's variables to a distinct target.
MultilinearPoly permute_vars(const MultilinearPoly& p, const std::map<std::string, std::string>& sigma,
                             const std::vector<Variable>& new_vars);

Vec to_row(const MultilinearPoly& p, const MonomialOrdering& ord);
MultilinearPoly from_row(const Vec& row, const MonomialOrdering& ord);

/// All permutations of 0..n-1 in lexicographic order.
std::vector<std::vector<std::size_t>> all_permutations(std::size_t n);

/// All binary tree shapes on `leaves` ordered leaf slots, canonical order.
std::vector<MagmaWord> tree_shapes(std::size_t leaves, const std::vector<Variable>& slot_names);

}  // namespace wact
