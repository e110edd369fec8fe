#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace asreg {

struct FieldSpec {
    enum class Kind { rationals, cyclotomic3, primefield };

    Kind kind = Kind::rationals;
    std::uint64_t modulus = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec cyclotomic3() { return {Kind::cyclotomic3, 0}; }
    // Throws InvalidField unless p is a prime above 5 and below 2^62.
    static FieldSpec prime(std::uint64_t p);
    // Accepts "q", "q-zeta3" and "fp:<prime>".
    static FieldSpec parse(const std::string& text);

    std::string name() const;
    bool operator==(const FieldSpec&) const = default;
};

bool is_prime_u64(std::uint64_t n);

// a + b*zeta with zeta^2 = -zeta - 1.
struct Cyclo {
    mpq_class a;
    mpq_class b;
};

struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 0;
};

// An exact scalar. Plain rationals carry no field tag and promote into
// Q(zeta3) or F_p on contact; the other two kinds never mix.
class Scalar {
public:
    Scalar() : rep_(mpq_class(0)) {}
    Scalar(int v) : rep_(mpq_class(v)) {}
    Scalar(long v) : rep_(mpq_class(v)) {}
    Scalar(const mpq_class& q) : rep_(canonical(q)) {}
    Scalar(const mpz_class& z) : rep_(mpq_class(z)) {}

    static Scalar rational(long num, long den);
    static Scalar cyclo(const mpq_class& a, const mpq_class& b);
    static Scalar zeta3() { return cyclo(0, 1); }
    static Scalar residue(std::uint64_t v, std::uint64_t p);
    static Scalar residue(const mpz_class& v, std::uint64_t p);
    static Scalar zero(const FieldSpec& f) { return Scalar(0).in(f); }
    static Scalar one(const FieldSpec& f) { return Scalar(1).in(f); }

    // The field this value lives in; plain rationals report rationals.
    FieldSpec field() const;
    bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
    bool is_cyclo() const { return std::holds_alternative<Cyclo>(rep_); }
    bool is_residue() const { return std::holds_alternative<Residue>(rep_); }

    const mpq_class& as_rational() const;
    const Cyclo& as_cyclo() const;
    const Residue& as_residue() const;
    // True for a rational, or a cyclotomic element with zero zeta part.
    bool rational_value(mpq_class& out) const;

    // Coerce into the target field. Rationals go anywhere; otherwise the
    // field must match.
    Scalar in(const FieldSpec& f) const;

    bool is_zero() const;
    bool is_one() const;

    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    using Rep = std::variant<mpq_class, Cyclo, Residue>;
    explicit Scalar(Rep r) : rep_(std::move(r)) {}
    static mpq_class canonical(mpq_class q) {
        q.canonicalize();
        return q;
    }

    Rep rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Common field of two values, throwing FieldMismatch when incompatible.
FieldSpec join(const FieldSpec& a, const FieldSpec& b);

// Exact rational cube root if one exists.
bool rational_cube_root(const mpq_class& q, mpq_class& root);

// F_p helpers shared by the field and elliptic-curve code.
namespace modp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
// Square root by Tonelli-Shanks; returns false for non-residues.
bool sqrt(std::uint64_t a, std::uint64_t p, std::uint64_t& root);
}  // namespace modp

}  // namespace asreg
