#include "wact/field.hpp"

namespace wact {

namespace {

bool is_prime_u64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>((__int128)a * b % p);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero residue mod a prime is always invertible
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("non-invertible residue");
    return mod_pos(t, p);
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("FieldSpec: " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

std::string FieldSpec::str() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

std::optional<FieldSpec> FieldSpec::parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    if (!text.empty() && (text[0] == 'F' || text[0] == 'f')) {
        std::size_t start = 1;
        if (start < text.size() && text[start] == '_') ++start;
        if (start >= text.size()) return std::nullopt;
        std::int64_t p = 0;
        for (std::size_t i = start; i < text.size(); ++i) {
            if (!isdigit((unsigned char)text[i])) return std::nullopt;
            p = p * 10 + (text[i] - '0');
            if (p > (1LL << 40)) return std::nullopt;
        }
        if (!is_prime_u64(p)) return std::nullopt;
        return prime(p);
    }
    return std::nullopt;
}

Scalar::Scalar(const FieldSpec& f, std::int64_t n) : field_(f) {
    if (f.is_rationals())
        q_ = n;
    else
        r_ = mod_pos(n, f.characteristic());
}

Scalar::Scalar(const FieldSpec& f, std::int64_t num, std::int64_t den) : field_(f) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    if (f.is_rationals()) {
        q_ = mpq_class(num, den);
        q_.canonicalize();
    } else {
        std::int64_t p = f.characteristic();
        std::int64_t d = mod_pos(den, p);
        if (d == 0) throw std::domain_error("Scalar: denominator divisible by " + std::to_string(p));
        r_ = mul_mod(mod_pos(num, p), inv_mod(d, p), p);
    }
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& q) {
    Scalar s(f);
    if (f.is_rationals()) {
        s.q_ = q;
        s.q_.canonicalize();
    } else {
        std::int64_t p = f.characteristic();
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class dm = den % p;
        if (dm == 0) throw std::domain_error("Scalar: denominator divisible by " + std::to_string(p));
        mpz_class nm = num % p;
        std::int64_t n = mod_pos(nm.get_si(), p);
        std::int64_t d = mod_pos(dm.get_si(), p);
        s.r_ = mul_mod(n, inv_mod(d, p), p);
    }
    return s;
}

void Scalar::check_same(const Scalar& other) const {
    if (!(field_ == other.field_)) throw std::invalid_argument("Scalar: field mismatch");
}

bool Scalar::is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rationals())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar s(field_);
    if (field_.is_rationals())
        s.q_ = 1 / q_;
    else
        s.r_ = inv_mod(r_, field_.characteristic());
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    Scalar s(a.field_);
    if (a.field_.is_rationals())
        s.q_ = a.q_ + b.q_;
    else {
        s.r_ = a.r_ + b.r_;
        if (s.r_ >= a.field_.characteristic()) s.r_ -= a.field_.characteristic();
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    Scalar s(a.field_);
    if (a.field_.is_rationals())
        s.q_ = a.q_ * b.q_;
    else
        s.r_ = mul_mod(a.r_, b.r_, a.field_.characteristic());
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rationals()) throw std::logic_error("Scalar: not a rational");
    return q_;
}

std::int64_t Scalar::residue() const {
    if (field_.is_rationals()) throw std::logic_error("Scalar: not a residue");
    return r_;
}

Scalar Scalar::reduced_mod(std::int64_t p) const {
    if (field_.is_prime_field()) {
        if (field_.characteristic() != p) throw std::invalid_argument("Scalar: characteristic mismatch");
        return *this;
    }
    return from_mpq(FieldSpec::prime(p), q_);
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    mpq_class q(text);
    q.canonicalize();
    return from_mpq(f, q);
}

}  // namespace wact
