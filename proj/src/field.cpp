#include "asreg/field.hpp"

#include "asreg/errors.hpp"

#include <ostream>

namespace asreg {

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
    return pow(a, p - 2, p);
}

bool sqrt(std::uint64_t a, std::uint64_t p, std::uint64_t& root) {
    a %= p;
    if (a == 0) {
        root = 0;
        return true;
    }
    if (p == 2) {
        root = a;
        return true;
    }
    if (pow(a, (p - 1) / 2, p) != 1) return false;
    if (p % 4 == 3) {
        root = pow(a, (p + 1) / 4, p);
        return true;
    }
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = pow(z, q, p);
    std::uint64_t t = pow(a, q, p);
    std::uint64_t r = pow(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
            tt = mul(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b, p);
        m = i;
        c = mul(b, b, p);
        t = mul(t, c, p);
        r = mul(r, b, p);
    }
    root = r;
    return true;
}

}  // namespace modp

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = modp::pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = modp::mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p <= 5) throw InvalidField("modulus must exceed 5, got " + std::to_string(p));
    if (p >= (1ull << 62)) throw InvalidField("modulus must be below 2^62");
    if (!is_prime_u64(p)) throw InvalidField(std::to_string(p) + " is not prime");
    return {Kind::primefield, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text == "q-zeta3" || text == "Q-zeta3") return cyclotomic3();
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidField("bad prime in field spec '" + text + "'");
        }
        return prime(std::stoull(digits));
    }
    throw InvalidField("unknown field '" + text + "' (expected q, q-zeta3 or fp:<prime>)");
}

std::string FieldSpec::name() const {
    switch (kind) {
        case Kind::rationals: return "q";
        case Kind::cyclotomic3: return "q-zeta3";
        case Kind::primefield: return "fp:" + std::to_string(modulus);
    }
    return "?";
}

FieldSpec join(const FieldSpec& a, const FieldSpec& b) {
    if (a == b) return a;
    if (a.kind == FieldSpec::Kind::rationals) return b;
    if (b.kind == FieldSpec::Kind::rationals) return a;
    throw FieldMismatch(a.name() + " vs " + b.name());
}

bool rational_cube_root(const mpq_class& q, mpq_class& root) {
    mpz_class num = abs(q.get_num());
    mpz_class den = q.get_den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3) == 0) return false;
    root = mpq_class(sgn(q) < 0 ? mpz_class(-rn) : rn, rd);
    root.canonicalize();
    return true;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::cyclo(const mpq_class& a, const mpq_class& b) {
    Cyclo c{a, b};
    c.a.canonicalize();
    c.b.canonicalize();
    return Scalar(Rep(std::move(c)));
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
    return Scalar(Rep(Residue{v % p, p}));
}

Scalar Scalar::residue(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % mpz_class(std::to_string(p));
    if (r < 0) r += mpz_class(std::to_string(p));
    return Scalar(Rep(Residue{std::stoull(r.get_str()), p}));
}

FieldSpec Scalar::field() const {
    if (is_cyclo()) return FieldSpec::cyclotomic3();
    if (is_residue()) return FieldSpec{FieldSpec::Kind::primefield, std::get<Residue>(rep_).modulus};
    return FieldSpec::rationals();
}

const mpq_class& Scalar::as_rational() const { return std::get<mpq_class>(rep_); }
const Cyclo& Scalar::as_cyclo() const { return std::get<Cyclo>(rep_); }
const Residue& Scalar::as_residue() const { return std::get<Residue>(rep_); }

bool Scalar::rational_value(mpq_class& out) const {
    if (is_rational()) {
        out = as_rational();
        return true;
    }
    if (is_cyclo() && as_cyclo().b == 0) {
        out = as_cyclo().a;
        return true;
    }
    return false;
}

Scalar Scalar::in(const FieldSpec& f) const {
    const FieldSpec own = field();
    if (own == f) return *this;
    if (!is_rational()) throw FieldMismatch("cannot move " + own.name() + " value into " + f.name());
    const mpq_class& q = as_rational();
    switch (f.kind) {
        case FieldSpec::Kind::rationals: return *this;
        case FieldSpec::Kind::cyclotomic3: return cyclo(q, 0);
        case FieldSpec::Kind::primefield: {
            const std::uint64_t p = f.modulus;
            Scalar den = residue(q.get_den(), p);
            if (den.as_residue().value == 0) {
                throw DivisionByZero("denominator of " + q.get_str() + " is divisible by " + std::to_string(p));
            }
            Scalar num = residue(q.get_num(), p);
            return Scalar(Rep(Residue{modp::mul(num.as_residue().value, modp::inv(den.as_residue().value, p), p), p}));
        }
    }
    return *this;
}

bool Scalar::is_zero() const {
    if (is_rational()) return as_rational() == 0;
    if (is_cyclo()) return as_cyclo().a == 0 && as_cyclo().b == 0;
    return as_residue().value == 0;
}

bool Scalar::is_one() const {
    if (is_rational()) return as_rational() == 1;
    if (is_cyclo()) return as_cyclo().a == 1 && as_cyclo().b == 0;
    return as_residue().value == 1;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) return Scalar(mpq_class(mpq_class(1) / as_rational()));
    if (is_cyclo()) {
        // (a + b z)^-1 = ((a - b) - b z) / (a^2 - ab + b^2)
        const Cyclo& c = as_cyclo();
        mpq_class norm = c.a * c.a - c.a * c.b + c.b * c.b;
        return cyclo((c.a - c.b) / norm, -c.b / norm);
    }
    const Residue& r = as_residue();
    return Scalar(Rep(Residue{modp::inv(r.value, r.modulus), r.modulus}));
}

Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar result = Scalar::one(field());
    while (n) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(mpq_class(-as_rational()));
    if (is_cyclo()) return cyclo(-as_cyclo().a, -as_cyclo().b);
    const Residue& r = as_residue();
    return Scalar(Rep(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus}));
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.as_rational() + y.as_rational()));
    const FieldSpec f = join(x.field(), y.field());
    const Scalar a = x.in(f), b = y.in(f);
    if (f.kind == FieldSpec::Kind::cyclotomic3) {
        return Scalar::cyclo(a.as_cyclo().a + b.as_cyclo().a, a.as_cyclo().b + b.as_cyclo().b);
    }
    std::uint64_t s = a.as_residue().value + b.as_residue().value;
    if (s >= f.modulus) s -= f.modulus;
    return Scalar::residue(s, f.modulus);
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.as_rational() * y.as_rational()));
    const FieldSpec f = join(x.field(), y.field());
    const Scalar a = x.in(f), b = y.in(f);
    if (f.kind == FieldSpec::Kind::cyclotomic3) {
        const Cyclo& u = a.as_cyclo();
        const Cyclo& v = b.as_cyclo();
        mpq_class bd = u.b * v.b;
        return Scalar::cyclo(u.a * v.a - bd, u.a * v.b + u.b * v.a - bd);
    }
    return Scalar::residue(modp::mul(a.as_residue().value, b.as_residue().value, f.modulus), f.modulus);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) throw DivisionByZero("division by zero");
    return x * y.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return x.as_rational() == y.as_rational();
    const FieldSpec f = join(x.field(), y.field());
    const Scalar a = x.in(f), b = y.in(f);
    if (f.kind == FieldSpec::Kind::cyclotomic3) {
        return a.as_cyclo().a == b.as_cyclo().a && a.as_cyclo().b == b.as_cyclo().b;
    }
    return a.as_residue().value == b.as_residue().value;
}

std::string Scalar::str() const {
    if (is_rational()) return as_rational().get_str();
    if (is_residue()) return std::to_string(as_residue().value);
    const Cyclo& c = as_cyclo();
    if (c.b == 0) return c.a.get_str();
    std::string zeta_part;
    if (c.b == 1) {
        zeta_part = "zeta";
    } else if (c.b == -1) {
        zeta_part = "-zeta";
    } else {
        zeta_part = c.b.get_str() + "*zeta";
    }
    if (c.a == 0) return zeta_part;
    std::string out = c.a.get_str();
    if (zeta_part[0] == '-') return out + zeta_part;
    return out + "+" + zeta_part;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace asreg
