#include <sstream>
#include <stdexcept>

#include "wact/algebra.hpp"

namespace wact {

namespace {

Algebra make_octonions(const FieldSpec& f) {
    std::vector<std::string> labels;
    for (int i = 1; i <= 8; ++i) labels.push_back("e" + std::to_string(i));
    Algebra a("octonions", f, labels);
    // imaginary units u1..u7 sit at indices 1..7; index 0 is the unit e1
    auto set = [&](std::size_t i, std::size_t j, std::int64_t coef, std::size_t k) {
        Vec v(8, Scalar(f));
        v[k] = Scalar(f, coef);
        a.set_product(i, j, v);
    };
    for (std::size_t k = 0; k < 8; ++k) {
        set(0, k, 1, k);
        if (k != 0) set(k, 0, 1, k);
    }
    for (std::size_t i = 1; i <= 7; ++i) set(i, i, -1, 0);
    const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
    for (const auto& t : triples) {
        int p = t[0], q = t[1], r = t[2];
        set(p, q, 1, r), set(q, p, -1, r);
        set(q, r, 1, p), set(r, q, -1, p);
        set(r, p, 1, q), set(p, r, -1, q);
    }
    return a;
}

Algebra make_sl2(const FieldSpec& f) {
    Algebra a("sl2", f, {"e", "h", "f"});
    auto set = [&](std::size_t i, std::size_t j, std::int64_t coef, std::size_t k) {
        Vec v(3, Scalar(f));
        v[k] = Scalar(f, coef);
        a.set_product(i, j, v);
    };
    set(1, 0, 2, 0), set(0, 1, -2, 0);   // [h,e] = 2e
    set(1, 2, -2, 2), set(2, 1, 2, 2);   // [h,f] = -2f
    set(0, 2, 1, 1), set(2, 0, -1, 1);   // [e,f] = h
    return a;
}

Algebra make_kronecker(const FieldSpec& f) {
    Algebra a("kronecker", f, {"e1", "e2", "e3"});
    Vec e3 = unit_vec(3, 2, f);
    a.set_product(0, 1, e3);
    a.set_product(1, 0, e3);
    return a;
}

Algebra make_heisenberg(std::size_t dim, const FieldSpec& f) {
    if (dim < 3 || dim % 2 == 0) throw std::invalid_argument("heisenberg: dimension must be odd and >= 3");
    std::size_t n = (dim - 1) / 2;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("f" + std::to_string(i));
    labels.push_back("h");
    Algebra a("heisenberg" + std::to_string(dim), f, labels);
    Vec h = unit_vec(dim, dim - 1, f);
    for (std::size_t i = 0; i < n; ++i) {
        a.set_product(i, n + i, h);
        a.set_product(n + i, i, scaled(h, Scalar(f, -1)));
    }
    return a;
}

Algebra make_engel7(const FieldSpec& f) {
    std::vector<std::string> labels;
    for (int i = 1; i <= 7; ++i) labels.push_back("e" + std::to_string(i));
    Algebra a("engel7_f3", f, labels);
    auto set_anti = [&](std::size_t i, std::size_t j, std::int64_t coef, std::size_t k) {
        Vec v(7, Scalar(f));
        v[k] = Scalar(f, coef);
        a.set_product(i, j, v);
        v[k] = Scalar(f, -coef);
        a.set_product(j, i, v);
    };
    set_anti(0, 1, 1, 3);   // e1 e2 = e4
    set_anti(0, 2, -1, 5);  // e1 e3 = -e6
    set_anti(1, 2, 1, 4);   // e2 e3 = e5
    set_anti(0, 4, 1, 6);   // e1 e5 = e7
    set_anti(1, 5, 1, 6);   // e2 e6 = e7
    set_anti(2, 3, 1, 6);   // e3 e4 = e7
    return a;
}

Algebra make_jj2(const FieldSpec& f) {
    Algebra a("jj2_f3", f, {"e1", "e2"});
    Vec e2 = unit_vec(2, 1, f);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) a.set_product(i, j, e2);
    return a;
}

Algebra make_mat2(const FieldSpec& f) {
    Algebra a("mat2", f, {"e11", "e12", "e21", "e22"});
    auto idx = [](std::size_t r, std::size_t c) { return r * 2 + c; };
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    if (j != k) continue;
                    Vec v(4, Scalar(f));
                    v[idx(i, l)] = Scalar(f, 1);
                    a.set_product(idx(i, j), idx(k, l), v);
                }
    return a;
}

Algebra make_dual_numbers(const FieldSpec& f) {
    Algebra a("dual_numbers", f, {"u", "t"});
    a.set_product(0, 0, unit_vec(2, 0, f));
    a.set_product(0, 1, unit_vec(2, 1, f));
    a.set_product(1, 0, unit_vec(2, 1, f));
    return a;
}

Algebra make_abelian(std::size_t n, const FieldSpec& f) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    return Algebra("abelian" + std::to_string(n), f, labels);
}

std::optional<std::size_t> numeric_suffix(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    std::size_t n = 0;
    for (std::size_t i = prefix.size(); i < name.size(); ++i) {
        if (!isdigit((unsigned char)name[i])) return std::nullopt;
        n = n * 10 + (name[i] - '0');
    }
    return n;
}

}  // namespace

std::vector<std::string> fixture_algebra_names() {
    return {"octonions", "mat2",      "sl2",          "kronecker", "heisenberg3",
            "heisenberg5", "engel7_f3", "jj2_f3",       "dual_numbers", "abelian1",
            "abelian2",    "abelian3"};
}

Algebra fixture_algebra(const std::string& name, const FieldSpec& f) {
    if (name == "octonions") return make_octonions(f);
    if (name == "mat2") return make_mat2(f);
    if (name == "sl2") return make_sl2(f);
    if (name == "kronecker") return make_kronecker(f);
    if (name == "engel7_f3") return make_engel7(f);
    if (name == "jj2_f3") return make_jj2(f);
    if (name == "dual_numbers") return make_dual_numbers(f);
    if (auto n = numeric_suffix(name, "abelian")) return make_abelian(*n, f);
    if (auto n = numeric_suffix(name, "heisenberg")) return make_heisenberg(*n, f);
    throw std::invalid_argument("unknown fixture algebra '" + name + "'");
}

Algebra fixture_algebra(const std::string& name) {
    if (name == "engel7_f3" || name == "jj2_f3") return fixture_algebra(name, FieldSpec::prime(3));
    return fixture_algebra(name, FieldSpec::rationals());
}

namespace {

const char* kLeibniz =
    "variety leibniz\n"
    "char any\n"
    "identity ((x*y)*z) - ((x*z)*y) - (x*(y*z))\n";

const char* kSymmetricLeibniz =
    "variety symmetric_leibniz\n"
    "char any\n"
    "identity ((x*y)*z) - ((x*z)*y) - (x*(y*z))\n"
    "identity (z*(x*y)) - ((z*x)*y) - (x*(z*y))\n";

const char* kAssoc =
    "variety assoc\n"
    "char any\n"
    "identity (x*(y*z)) - ((x*y)*z)\n";

const char* kAAssoc =
    "variety aassoc\n"
    "char any\n"
    "identity (x*(y*z)) + ((x*y)*z)\n";

const char* kCom =
    "variety com\n"
    "char any\n"
    "identity (x*y) - (y*x)\n";

const char* kACom =
    "variety acom\n"
    "char any\n"
    "identity (x*y) + (y*x)\n";

const char* kCAssoc =
    "variety cassoc\n"
    "char any\n"
    "identity (x*y) - (y*x)\n"
    "identity (x*(y*z)) - ((x*y)*z)\n";

const char* kACAAssoc =
    "variety acaassoc\n"
    "char any\n"
    "identity (x*y) + (y*x)\n"
    "identity (x*(y*z)) + ((x*y)*z)\n";

const char* kLie =
    "variety lie\n"
    "char any\n"
    "identity (x*y) + (y*x)\n"
    "identity (x*(y*z)) + (y*(z*x)) + (z*(x*y))\n";

const char* kJJord =
    "variety jjord\n"
    "char any\n"
    "identity (x*y) - (y*x)\n"
    "identity (x*(y*z)) + (y*(z*x)) + (z*(x*y))\n";

const char* kAlt =
    "variety alt\n"
    "char not 2\n"
    "identity ((x*y)*z) + ((x*z)*y) - (x*(y*z)) - (x*(z*y))\n"
    "identity ((x*y)*z) + ((y*x)*z) - (x*(y*z)) - (y*(x*z))\n";

const char* kAbAlg =
    "variety abalg\n"
    "char any\n"
    "identity (x*y)\n";

const char* kNil2Alg =
    "variety nil2_alg\n"
    "char any\n"
    "identity (x*(y*z))\n"
    "identity ((x*y)*z)\n";

const char* kNil2Com =
    "variety nil2_com\n"
    "char any\n"
    "identity (x*y) - (y*x)\n"
    "identity (x*(y*z))\n"
    "identity ((x*y)*z)\n";

const char* kNil2ACom =
    "variety nil2_acom\n"
    "char any\n"
    "identity (x*y) + (y*x)\n"
    "identity (x*(y*z))\n"
    "identity ((x*y)*z)\n";

const char* kNovikov =
    "variety novikov\n"
    "char any\n"
    "identity ((x*y)*z) - ((x*z)*y)\n"
    "identity ((x*y)*z) - (x*(y*z)) - ((y*x)*z) + (y*(x*z))\n";

// Depolarized commutative Poisson presentation: xy = (commutative part) +
// (bracket part). The three generators span the full degree-3 identity space
// of the one-operation form; the polarization oracle in the tests checks this
// span against the two-operation axioms.
const char* kCPoisson =
    "variety cpoisson\n"
    "char not 2\n"
    "identity ((x*y)*z) - (x*(y*z)) + ((z*y)*x) - (z*(y*x))\n"
    "identity ((x*y)*z) - (x*(y*z)) + ((y*z)*x) - (y*(z*x)) + ((z*x)*y) - (z*(x*y))\n"
    "identity (x*(y*z)) + (x*(z*y)) + ((y*z)*x) + ((z*y)*x) - ((x*y)*z) - ((y*x)*z) - (z*(x*y)) - (z*(y*x))\n";

VarietySpec make_nilk_assoc(std::size_t k, const FieldSpec& f) {
    VarietySpec v = parse_variety(kAssoc, f);
    v.name = "nil" + std::to_string(k) + "_assoc";
    std::vector<Variable> vars = canonical_vars(k + 1);
    for (const auto& shape : tree_shapes(k + 1, vars))
        v.identities.push_back(MultilinearPoly::monomial(vars, f, shape, Scalar(f, 1)));
    return v;
}

}  // namespace

std::vector<std::string> builtin_variety_names() {
    return {"leibniz",  "symmetric_leibniz", "assoc",    "aassoc",    "cassoc",  "acaassoc",
            "lie",      "jjord",             "alt",      "abalg",     "com",     "acom",
            "nil2_alg", "nil2_com",          "nil2_acom", "nil3_assoc", "nil4_assoc", "novikov",
            "cpoisson"};
}

VarietySpec builtin_variety(const std::string& name, const FieldSpec& f) {
    if (name == "leibniz") return parse_variety(kLeibniz, f);
    if (name == "symmetric_leibniz") return parse_variety(kSymmetricLeibniz, f);
    if (name == "assoc") return parse_variety(kAssoc, f);
    if (name == "aassoc") return parse_variety(kAAssoc, f);
    if (name == "com") return parse_variety(kCom, f);
    if (name == "acom") return parse_variety(kACom, f);
    if (name == "cassoc") return parse_variety(kCAssoc, f);
    if (name == "acaassoc") return parse_variety(kACAAssoc, f);
    if (name == "lie") return parse_variety(kLie, f);
    if (name == "jjord") return parse_variety(kJJord, f);
    if (name == "alt") return parse_variety(kAlt, f);
    if (name == "abalg") return parse_variety(kAbAlg, f);
    if (name == "nil2_alg") return parse_variety(kNil2Alg, f);
    if (name == "nil2_com") return parse_variety(kNil2Com, f);
    if (name == "nil2_acom") return parse_variety(kNil2ACom, f);
    if (name == "nil3_assoc") return make_nilk_assoc(3, f);
    if (name == "nil4_assoc") return make_nilk_assoc(4, f);
    if (name == "novikov") return parse_variety(kNovikov, f);
    if (name == "cpoisson") return parse_variety(kCPoisson, f);
    throw std::invalid_argument("unknown builtin variety '" + name + "'");
}

}  // namespace wact
