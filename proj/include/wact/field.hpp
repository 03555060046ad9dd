#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace wact {

/// Ground field of all computations: the rationals, or a prime field F_p
/// with p a machine-word prime.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime(std::int64_t p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    /// 0 for Q, p for F_p.
    std::int64_t characteristic() const { return p_; }

    bool operator==(const FieldSpec&) const = default;

    std::string str() const;
    /// Accepts "Q", "F<p>" or "F_<p>".
    static std::optional<FieldSpec> parse(const std::string& text);

private:
    explicit FieldSpec(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

/// An exact field element. Fractions are kept in lowest terms with positive
/// denominator (mpq_class canonicalizes), residues in [0, p).
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()) {}
    explicit Scalar(const FieldSpec& f) : field_(f) {}
    Scalar(const FieldSpec& f, std::int64_t n);
    Scalar(const FieldSpec& f, std::int64_t num, std::int64_t den);
    static Scalar from_mpq(const FieldSpec& f, const mpq_class& q);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// The rational value (Q scalars only).
    const mpq_class& rational() const;
    /// The canonical residue (F_p scalars only).
    std::int64_t residue() const;

    /// Reduce a rational scalar mod p. Throws if a denominator is divisible by p.
    Scalar reduced_mod(std::int64_t p) const;

    /// Canonical text form: "7", "-3/2" over Q; the residue over F_p.
    std::string str() const;
    /// Inverse of str(), in the given field.
    static Scalar parse(const FieldSpec& f, const std::string& text);

private:
    FieldSpec field_;
    mpq_class q_;        // used over Q
    std::int64_t r_ = 0; // used over F_p
    void check_same(const Scalar& other) const;
};

}  // namespace wact
