#include "wact/variety.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wact {

bool VarietySpec::has_degree2_identity() const {
    return std::any_of(identities.begin(), identities.end(),
                       [](const MultilinearPoly& p) { return p.degree() == 2; });
}

std::size_t VarietySpec::max_identity_degree() const {
    std::size_t d = 0;
    for (const auto& p : identities) d = std::max(d, p.degree());
    return d;
}

void VarietySpec::ensure_char_ok() const {
    if (excluded_chars.count(field.characteristic()))
        throw std::invalid_argument("variety " + name + " excludes characteristic " +
                                    std::to_string(field.characteristic()));
}

std::vector<Variable> canonical_vars(std::size_t degree) {
    static const std::vector<std::vector<std::string>> names = {
        {"x"}, {"x", "y"}, {"f", "x", "y"}, {"f", "g", "x", "y"}, {"f", "g", "x", "y", "z"}};
    if (degree < 1 || degree > 5) throw std::invalid_argument("canonical_vars: degree must be 1..5");
    std::vector<Variable> out;
    for (const auto& n : names[degree - 1]) out.push_back(Variable{n});
    return out;
}

namespace {

struct LineParser {
    std::string text;
    std::size_t line_no = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
    }
};

// TERM := [COEF] WORD ; COEF := INT["/"INT]. Words collect first-occurrence
// variable order into `order`.
MultilinearPoly parse_poly(const std::string& s, const FieldSpec& field, const LineParser& ctx,
                           std::vector<Variable>& order) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    };
    auto fail_at = [&](const std::string& what) -> void {
        throw std::invalid_argument("line " + std::to_string(ctx.line_no) + ", column " +
                                    std::to_string(pos + 1) + ": " + what);
    };

    struct RawTerm {
        Scalar coef;
        MagmaWord word;
    };
    std::vector<RawTerm> terms;

    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= s.size()) {
            if (first) fail_at("empty polynomial");
            break;
        }
        Scalar sign(field, 1);
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = Scalar(field, -1);
            ++pos;
            skip_ws();
        } else if (!first) {
            fail_at("expected '+' or '-' between terms");
        }
        Scalar coef = sign;
        if (pos < s.size() && isdigit((unsigned char)s[pos])) {
            std::size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            std::string num = s.substr(start, pos - start);
            std::string den = "1";
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                std::size_t dstart = pos;
                while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
                if (pos == dstart) fail_at("expected denominator digits");
                den = s.substr(dstart, pos - dstart);
            }
            coef = coef * Scalar::parse(field, num + "/" + den);
            skip_ws();
        }
        if (pos >= s.size() || (s[pos] != '(' && !islower((unsigned char)s[pos])))
            fail_at("expected a word");
        // find the word extent: a variable, or balanced parentheses
        std::size_t start = pos;
        if (s[pos] == '(') {
            int depth = 0;
            do {
                if (s[pos] == '(') ++depth;
                if (s[pos] == ')') --depth;
                ++pos;
                if (pos > s.size()) fail_at("unbalanced parentheses");
            } while (depth > 0 && pos < s.size());
            if (depth != 0) fail_at("unbalanced parentheses");
        } else {
            while (pos < s.size() && (islower((unsigned char)s[pos]) || isdigit((unsigned char)s[pos]))) ++pos;
        }
        MagmaWord w = parse_word(s.substr(start, pos - start));
        for (const auto& v : w.leaves())
            if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
        terms.push_back(RawTerm{coef, w});
        first = false;
    }

    MultilinearPoly p(order, field);
    for (const auto& t : terms) p.add_term(t.word, t.coef);
    return p;
}

MultilinearPoly canonicalize_identity(const MultilinearPoly& p, const std::vector<Variable>& order,
                                      const LineParser& ctx) {
    std::size_t deg = order.size();
    if (deg < 2 || deg > 5) ctx.fail("identity degree " + std::to_string(deg) + " unsupported (need 2..5)");
    if (!p.is_multilinear()) ctx.fail("identity is not multilinear");
    std::vector<Variable> target = canonical_vars(deg);
    std::map<std::string, std::string> sigma;
    for (std::size_t i = 0; i < deg; ++i) sigma[order[i].name] = target[i].name;
    return permute_vars(p, sigma, target);
}

}  // namespace

VarietySpec parse_variety(const std::string& text, const FieldSpec& field) {
    VarietySpec v;
    v.field = field;
    std::istringstream in(text);
    std::string line;
    LineParser ctx;
    bool saw_name = false;
    while (std::getline(in, line)) {
        ++ctx.line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "variety") {
            if (!(ls >> v.name)) ctx.fail("expected variety name");
            saw_name = true;
        } else if (kw == "char") {
            std::string what;
            if (!(ls >> what)) ctx.fail("expected 'any' or 'not'");
            if (what == "any") continue;
            if (what != "not") ctx.fail("expected 'any' or 'not'");
            std::int64_t c;
            while (ls >> c) v.excluded_chars.insert(c);
        } else if (kw == "identity") {
            std::string rest;
            std::getline(ls, rest);
            std::vector<Variable> order;
            MultilinearPoly p = parse_poly(rest, field, ctx, order);
            v.identities.push_back(canonicalize_identity(p, order, ctx));
        } else {
            ctx.fail("unknown keyword '" + kw + "'");
        }
    }
    if (!saw_name) throw std::invalid_argument("variety file: missing 'variety NAME' line");
    if (v.identities.empty()) throw std::invalid_argument("variety file: no identities");
    v.ensure_char_ok();
    return v;
}

std::string variety_to_text(const VarietySpec& v) {
    std::ostringstream out;
    out << "variety " << v.name << "\n";
    if (v.excluded_chars.empty())
        out << "char any\n";
    else {
        out << "char not";
        for (auto c : v.excluded_chars) out << " " << c;
        out << "\n";
    }
    for (const auto& id : v.identities) {
        out << "identity ";
        bool first = true;
        for (const auto& [w, c] : id.terms()) {
            Scalar a = c;
            bool neg = false;
            std::string cs = a.str();
            if (cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            out << (first ? (neg ? "- " : "") : (neg ? " - " : " + "));
            if (cs != "1") out << cs << " ";
            out << w.str();
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

namespace {

// Degree-3 liftings of a degree-2 identity with a fresh third variable.
std::vector<MultilinearPoly> lift_degree2(const MultilinearPoly& p) {
    Variable z{"z"};
    const Variable& a = p.vars()[0];
    const Variable& b = p.vars()[1];
    MagmaWord lz = MagmaWord::leaf(z);
    std::vector<MultilinearPoly> out;
    out.push_back(border_multiply(p, z, Side::left));
    out.push_back(border_multiply(p, z, Side::right));
    out.push_back(substitute(p, a, MagmaWord::node(lz, MagmaWord::leaf(a))));
    out.push_back(substitute(p, a, MagmaWord::node(MagmaWord::leaf(a), lz)));
    out.push_back(substitute(p, b, MagmaWord::node(lz, MagmaWord::leaf(b))));
    out.push_back(substitute(p, b, MagmaWord::node(MagmaWord::leaf(b), lz)));
    return out;
}

}  // namespace

IdentityMatrices build_m3(const VarietySpec& v) {
    const FieldSpec& f = v.field;
    std::vector<Variable> c3 = canonical_vars(3);
    MonomialOrdering ord = enumerate_multilinear(c3);
    std::vector<Vec> rows;
    auto orbit = [&](const MultilinearPoly& q) {
        for (const auto& perm : all_permutations(3)) {
            std::map<std::string, std::string> sigma;
            for (std::size_t i = 0; i < 3; ++i) sigma[q.vars()[i].name] = c3[perm[i]].name;
            rows.push_back(to_row(permute_vars(q, sigma, c3), ord));
        }
    };
    for (const auto& id : v.identities) {
        if (id.degree() == 3)
            orbit(id);
        else if (id.degree() == 2)
            for (const auto& q : lift_degree2(id)) orbit(q);
        // higher degrees contribute nothing in arity 3
    }
    IdentityMatrices im(f);
    im.m3 = ExactMatrix::from_rows(rows, 12, f);
    RrefResult r = rref(im.m3);
    im.rm3 = std::move(r.matrix);
    im.rank = r.rank;
    im.pivot_cols = std::move(r.pivot_cols);
    return im;
}

LambdaMuRules extract_lambda_mu(const IdentityMatrices& im, const FieldSpec& f) {
    LambdaMuRules rules(f);
    std::optional<std::size_t> row_l, row_m;
    for (std::size_t i = 0; i < im.pivot_cols.size(); ++i) {
        if (im.pivot_cols[i] == 0) row_l = i;
        if (im.pivot_cols[i] == 2) row_m = i;
    }
    if (!row_l || !row_m) throw std::logic_error("extract_lambda_mu: accessibility pivots missing");
    for (std::size_t i = 0; i < 8; ++i) {
        rules.lambda[i] = -im.rm3.at(*row_l, kRuleColumns[i]);
        rules.mu[i] = -im.rm3.at(*row_m, kRuleColumns[i]);
    }
    return rules;
}

AccessibilityReport accessibility_check(const VarietySpec& v) {
    IdentityMatrices im = build_m3(v);
    AccessibilityReport rep;
    rep.rank = im.rank;
    bool top_left = true;
    for (std::size_t c = 0; c < 4; ++c)
        if (std::find(im.pivot_cols.begin(), im.pivot_cols.end(), c) == im.pivot_cols.end()) top_left = false;
    if (im.rank >= 4 && top_left) {
        rep.accessible = true;
        rep.witness = extract_lambda_mu(im, v.field);
    } else {
        std::ostringstream why;
        why << "rank " << im.rank << ", pivot columns {";
        for (std::size_t i = 0; i < im.pivot_cols.size(); ++i) why << (i ? "," : "") << im.pivot_cols[i] + 1;
        why << "} do not cover the four leading monomials";
        rep.failure_reason = why.str();
    }
    return rep;
}

std::pair<Vec, Vec> lambda_mu_rows(const LambdaMuRules& rules) {
    const FieldSpec f = rules.lambda[0].field();
    Vec lrow = zero_vec(12, f), mrow = zero_vec(12, f);
    lrow[0] = Scalar(f, 1);  // f(xy), the relabeled x(yz)
    mrow[2] = Scalar(f, 1);  // (xy)f, the relabeled (yz)x
    for (std::size_t i = 0; i < 8; ++i) {
        lrow[kRuleColumns[i]] -= rules.lambda[i];
        mrow[kRuleColumns[i]] -= rules.mu[i];
    }
    return {lrow, mrow};
}

bool lambda_mu_valid(const VarietySpec& v, const LambdaMuRules& rules) {
    IdentityMatrices im = build_m3(v);
    auto [lrow, mrow] = lambda_mu_rows(rules);
    return span_membership(im.m3, lrow).has_value() && span_membership(im.m3, mrow).has_value();
}

std::optional<ReducedRule> reduced_rule(const VarietySpec& v) {
    const FieldSpec& f = v.field;
    // degree-2 span over the basis [xy, yx], closed under the swap
    EchelonBasis deg2(2, f);
    std::vector<Variable> c2 = canonical_vars(2);
    MagmaWord xy = MagmaWord::node(MagmaWord::leaf(c2[0]), MagmaWord::leaf(c2[1]));
    MagmaWord yx = MagmaWord::node(MagmaWord::leaf(c2[1]), MagmaWord::leaf(c2[0]));
    for (const auto& id : v.identities) {
        if (id.degree() != 2) continue;
        Vec row = zero_vec(2, f), srow = zero_vec(2, f);
        for (const auto& [w, c] : id.terms()) {
            if (w == xy) row[0] = c, srow[1] = c;
            if (w == yx) row[1] = c, srow[0] = c;
        }
        deg2.insert(row);
        deg2.insert(srow);
    }
    int epsilon = 0;
    for (int e : {+1, -1}) {
        Vec probe = zero_vec(2, f);
        probe[0] = Scalar(f, 1);
        probe[1] = Scalar(f, -e);
        if (deg2.contains(probe)) {
            epsilon = e;
            break;
        }
    }
    if (epsilon == 0) return std::nullopt;

    // solve f(xy) = alpha (fx)y + beta (fy)x modulo the identity span
    IdentityMatrices im = build_m3(v);
    MonomialOrdering ord = enumerate_multilinear(canonical_vars(3));
    Vec target = unit_vec(12, 0, f);                    // f(xy)
    Vec col_alpha = unit_vec(12, 5, f);                 // (fx)y
    Vec col_beta = unit_vec(12, 4, f);                  // (fy)x
    std::size_t nrows = im.m3.rows();
    ExactMatrix sys(12, nrows + 2, f);
    for (std::size_t j = 0; j < nrows; ++j)
        for (std::size_t i = 0; i < 12; ++i) sys.at(i, j) = im.m3.at(j, i);
    for (std::size_t i = 0; i < 12; ++i) {
        sys.at(i, nrows) = col_alpha[i];
        sys.at(i, nrows + 1) = col_beta[i];
    }
    AffineSolution sol = solve_affine(sys, target);
    if (!sol.consistent) return std::nullopt;
    Scalar alpha = sol.particular[nrows], beta = sol.particular[nrows + 1];
    // canonical representative: push beta, then alpha, to zero along the kernel
    std::vector<std::pair<Scalar, Scalar>> dirs;
    for (const auto& k : sol.kernel) dirs.emplace_back(k[nrows], k[nrows + 1]);
    std::optional<std::pair<Scalar, Scalar>> pivot_b;
    for (const auto& d : dirs)
        if (!d.second.is_zero()) {
            pivot_b = d;
            break;
        }
    if (pivot_b) {
        Scalar t = beta / pivot_b->second;
        alpha -= t * pivot_b->first;
        beta = Scalar(f);
    }
    for (const auto& d : dirs) {
        Scalar da = d.first, db = d.second;
        if (pivot_b && !db.is_zero()) {
            Scalar u = db / pivot_b->second;
            da -= u * pivot_b->first;
            db = Scalar(f);
        }
        if (db.is_zero() && !da.is_zero()) {
            alpha = Scalar(f);
            break;
        }
    }
    return ReducedRule{epsilon, alpha, beta};
}

}  // namespace wact
