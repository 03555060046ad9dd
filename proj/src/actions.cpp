#include "wact/actions.hpp"

#include <sstream>
#include <stdexcept>

namespace wact {

DerivedAction::DerivedAction(Algebra b, Algebra x) : B(std::move(b)), X(std::move(x)) {
    if (!(B.field() == X.field())) throw std::invalid_argument("derived action: field mismatch");
    left.assign(B.dim(), ExactMatrix(X.dim(), X.dim(), X.field()));
    right.assign(B.dim(), ExactMatrix(X.dim(), X.dim(), X.field()));
}

Vec DerivedAction::act_left(const Vec& b, const Vec& x) const {
    Vec out(X.dim(), Scalar(X.field()));
    for (std::size_t i = 0; i < B.dim(); ++i) {
        if (b[i].is_zero()) continue;
        out = out + scaled(left[i].apply(x), b[i]);
    }
    return out;
}

Vec DerivedAction::act_right(const Vec& x, const Vec& b) const {
    Vec out(X.dim(), Scalar(X.field()));
    for (std::size_t i = 0; i < B.dim(); ++i) {
        if (b[i].is_zero()) continue;
        out = out + scaled(right[i].apply(x), b[i]);
    }
    return out;
}

DerivedAction trivial_action(const Algebra& b, const Algebra& x) { return DerivedAction(b, x); }

DerivedAction regular_action(const Algebra& x) {
    DerivedAction act(x, x);
    for (std::size_t i = 0; i < x.dim(); ++i) {
        BiEndo ops = mult_ops(x, unit_vec(x.dim(), i, x.field()));
        act.left[i] = ops.left;
        act.right[i] = ops.right;
    }
    return act;
}

namespace {

std::pair<char, std::string> split_prefixed(const std::string& token, std::size_t line_no) {
    if (token.size() < 3 || (token[0] != 'b' && token[0] != 'x') || token[1] != ':')
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected b:LABEL or x:LABEL, got '" +
                                    token + "'");
    return {token[0], token.substr(2)};
}

Vec parse_x_combo(const std::string& s, const Algebra& x, std::size_t line_no) {
    // LINEARCOMBO over X's basis labels
    Vec out(x.dim(), Scalar(x.field()));
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("line " + std::to_string(line_no) + ", column " + std::to_string(pos + 1) +
                                    ": " + what);
    };
    skip_ws();
    if (pos < s.size() && s[pos] == '0' && pos + 1 >= s.size()) return out;
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= s.size()) {
            if (first) fail("empty linear combination");
            break;
        }
        Scalar sign(x.field(), 1);
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = Scalar(x.field(), -1);
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
            coef = coef * Scalar::parse(x.field(), num + "/" + den);
            skip_ws();
        }
        std::string label;
        if (pos + 1 < s.size() && s[pos] == 'x' && s[pos + 1] == ':') pos += 2;
        std::size_t start = pos;
        while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (start == pos) fail("expected a basis label");
        out[x.label_index(s.substr(start, pos - start))] += coef;
        first = false;
    }
    return out;
}

}  // namespace

DerivedAction parse_action(const std::string& text, const Algebra& b, const Algebra& x) {
    DerivedAction act(b, x);
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "action") {
            std::string name, of, bname, on, xname;
            if (!(ls >> name >> of >> bname >> on >> xname) || of != "of" || on != "on")
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": expected 'action NAME of B on X'");
            if (bname != b.name() || xname != x.name())
                throw std::invalid_argument("line " + std::to_string(line_no) + ": action references " + bname +
                                            "/" + xname + " but got algebras " + b.name() + "/" + x.name());
            saw_header = true;
            continue;
        }
        std::string star, second, eq, rest;
        if (!(ls >> star >> second >> eq) || star != "*" || eq != "=")
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'TOKEN * TOKEN = ...'");
        std::getline(ls, rest);
        auto [k1, l1] = split_prefixed(first, line_no);
        auto [k2, l2] = split_prefixed(second, line_no);
        Vec combo = parse_x_combo(rest, x, line_no);
        if (k1 == 'b' && k2 == 'x') {
            std::size_t bi = b.label_index(l1), xj = x.label_index(l2);
            for (std::size_t kk = 0; kk < x.dim(); ++kk) act.left[bi].at(kk, xj) = combo[kk];
        } else if (k1 == 'x' && k2 == 'b') {
            std::size_t xi = x.label_index(l1), bj = b.label_index(l2);
            for (std::size_t kk = 0; kk < x.dim(); ++kk) act.right[bj].at(kk, xi) = combo[kk];
        } else {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": products must mix one b: and one x: factor");
        }
    }
    if (!saw_header) throw std::invalid_argument("action file: missing 'action ...' header");
    return act;
}

Algebra semidirect_candidate(const DerivedAction& act) {
    const Algebra &B = act.B, &X = act.X;
    std::size_t m = B.dim(), n = X.dim();
    const FieldSpec& f = X.field();
    std::vector<std::string> labels;
    for (const auto& l : B.basis_labels()) labels.push_back("b:" + l);
    for (const auto& l : X.basis_labels()) labels.push_back("x:" + l);
    Algebra s(B.name() + "_semidirect_" + X.name(), f, labels);
    auto embed_x = [&](const Vec& v) {
        Vec out(m + n, Scalar(f));
        for (std::size_t k = 0; k < n; ++k) out[m + k] = v[k];
        return out;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec bb = B.basis_product(i, j);
            Vec out(m + n, Scalar(f));
            for (std::size_t k = 0; k < m; ++k) out[k] = bb[k];
            s.set_product(i, j, out);
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s.set_product(i, m + j, embed_x(act.left[i].apply(unit_vec(n, j, f))));
            s.set_product(m + j, i, embed_x(act.right[i].apply(unit_vec(n, j, f))));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.set_product(m + i, m + j, embed_x(X.basis_product(i, j)));
    return s;
}

bool validate_action(const VarietySpec& v, const DerivedAction& act) {
    if (!(act.B.field() == v.field)) throw std::invalid_argument("validate_action: field mismatch");
    if (!satisfies_all(act.B, v) || !satisfies_all(act.X, v)) return false;
    Algebra cand = semidirect_candidate(act);
    return std::all_of(v.identities.begin(), v.identities.end(),
                       [&](const MultilinearPoly& p) { return check_identity(cand, p); });
}

Algebra semidirect(const VarietySpec& v, const DerivedAction& act) {
    if (!validate_action(v, act)) throw std::invalid_argument("semidirect: not a derived action in " + v.name);
    return semidirect_candidate(act);
}

BiEndo ActorMorphism::image_of(const Vec& b, const FieldSpec& f) const {
    std::size_t n = images.empty() ? 0 : images[0].left.rows();
    BiEndo out(n, f);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (b[i].is_zero()) continue;
        out.left = out.left + images[i].left.scaled(b[i]);
        out.right = out.right + images[i].right.scaled(b[i]);
    }
    return out;
}

ActorMorphism tau(const DerivedAction& act, const WeakActorSpace& space) {
    if (!(space.algebra.dim() == act.X.dim()) || !(space.algebra.field() == act.X.field()))
        throw std::invalid_argument("tau: actor space built for a different algebra");
    if (!validate_action(space.variety, act)) throw std::invalid_argument("tau: not a derived action");
    ActorMorphism phi{act.B, {}};
    for (std::size_t i = 0; i < act.B.dim(); ++i) {
        BiEndo img(act.left[i], act.right[i]);
        if (!space.member(img))
            throw std::logic_error("tau: image of a valid action escaped the actor space");
        phi.images.push_back(img);
    }
    // partial algebra homomorphism: brackets of images are defined and equal
    // the images of the products
    const FieldSpec& f = act.X.field();
    for (std::size_t i = 0; i < act.B.dim(); ++i)
        for (std::size_t j = 0; j < act.B.dim(); ++j) {
            PartialBracketResult r = bracket(space, phi.images[i], phi.images[j]);
            if (!r.in_domain) throw std::logic_error("tau: image bracket left the actor space");
            BiEndo expected = phi.image_of(act.B.basis_product(i, j), f);
            if (!(r.value == expected))
                throw std::logic_error("tau: morphism is not a partial algebra homomorphism");
        }
    return phi;
}

bool is_acting_morphism(const VarietySpec& v, const ActorMorphism& phi, const Algebra& x) {
    DerivedAction act(phi.B, x);
    for (std::size_t i = 0; i < phi.B.dim(); ++i) {
        act.left[i] = phi.images[i].left;
        act.right[i] = phi.images[i].right;
    }
    return validate_action(v, act);
}

bool AlgebraHom::is_homomorphism() const {
    std::size_t m = domain.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec lhs = matrix.apply(domain.basis_product(i, j));
            Vec rhs = multiply(codomain, matrix.apply(unit_vec(m, i, domain.field())),
                               matrix.apply(unit_vec(m, j, domain.field())));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

DerivedAction pullback_action(const DerivedAction& act, const AlgebraHom& f) {
    if (!(f.codomain.name() == act.B.name()) || f.codomain.dim() != act.B.dim())
        throw std::invalid_argument("pullback_action: homomorphism codomain is not the acting algebra");
    if (!f.is_homomorphism()) throw std::invalid_argument("pullback_action: the map is not a homomorphism");
    DerivedAction out(f.domain, act.X);
    std::size_t m2 = f.domain.dim();
    for (std::size_t i = 0; i < m2; ++i) {
        Vec img = f.matrix.apply(unit_vec(m2, i, f.domain.field()));
        ExactMatrix l(act.X.dim(), act.X.dim(), act.X.field());
        ExactMatrix r(act.X.dim(), act.X.dim(), act.X.field());
        for (std::size_t j = 0; j < act.B.dim(); ++j) {
            if (img[j].is_zero()) continue;
            l = l + act.left[j].scaled(img[j]);
            r = r + act.right[j].scaled(img[j]);
        }
        out.left[i] = l;
        out.right[i] = r;
    }
    return out;
}

}  // namespace wact
