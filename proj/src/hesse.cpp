#include "asreg/hesse.hpp"

#include "asreg/errors.hpp"

namespace asreg {

namespace {

Triple combine(const Scalar& s, const Triple& p, const Scalar& t, const Triple& q) {
    return {s * p[0] + t * q[0], s * p[1] + t * q[1], s * p[2] + t * q[2]};
}

Scalar dot(const Triple& u, const Triple& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Triple cross(const Triple& u, const Triple& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero(const Triple& t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

bool proportional(const Triple& u, const Triple& v) { return is_zero(cross(u, v)); }

Triple in_field(const Triple& t, const FieldSpec& f) { return {t[0].in(f), t[1].in(f), t[2].in(f)}; }

std::uint64_t modulus_of(const HesseCurve& e) {
    if (e.field().kind != FieldSpec::Kind::primefield) {
        throw InvalidField("point sampling needs a prime field, got " + e.field().name());
    }
    return e.field().modulus;
}

Scalar random_residue(std::uint64_t p, Rng& rng) { return Scalar::residue(rng.below(p), p); }

// Cube roots of unity available in the field.
std::vector<Scalar> cube_roots_of_unity(const FieldSpec& f) {
    std::vector<Scalar> out{Scalar::one(f)};
    if (f.kind == FieldSpec::Kind::cyclotomic3) {
        out.push_back(Scalar::zeta3());
        out.push_back(Scalar::zeta3().pow(2));
    } else if (f.kind == FieldSpec::Kind::primefield && f.modulus % 3 == 1) {
        const std::uint64_t p = f.modulus;
        for (std::uint64_t g = 2;; ++g) {
            const std::uint64_t r = modp::pow(g, (p - 1) / 3, p);
            if (r != 1) {
                out.push_back(Scalar::residue(r, p));
                out.push_back(Scalar::residue(modp::mul(r, r, p), p));
                break;
            }
        }
    }
    return out;
}

Triple map_point(const Matrix& m, const Triple& q) {
    Triple out;
    for (std::size_t r = 0; r < 3; ++r) out[r] = m.at(r, 0) * q[0] + m.at(r, 1) * q[1] + m.at(r, 2) * q[2];
    return out;
}

HessePoint apply_tau(const HesseCurve& e, const CurveAutomorphism& sigma, const HessePoint& q) {
    if (sigma.tau_power == 0) return q;
    if (sigma.tau_matrix) {
        Triple t = q.coords();
        const int reps = ((sigma.tau_power % 6) + 6) % 6;
        for (int k = 0; k < reps; ++k) t = map_point(*sigma.tau_matrix, t);
        return HessePoint(t);
    }
    const Scalar j = e.j_invariant();
    if (j.is_zero() || j == Scalar(1728).in(e.field())) {
        throw TauOrderUnsupported("j(E) = " + j.str() + " needs an explicit tau matrix");
    }
    return (sigma.tau_power % 2 == 0) ? q : neg(e, q);
}

}  // namespace

HessePoint::HessePoint(const Triple& coords) : coords_(coords) {
    int last = 2;
    while (last >= 0 && coords_[static_cast<std::size_t>(last)].is_zero()) --last;
    if (last < 0) throw ZeroTriple("(0:0:0) is not a projective point");
    const Scalar scale = coords_[static_cast<std::size_t>(last)].inverse();
    for (Scalar& c : coords_) c *= scale;
}

std::string HessePoint::str() const {
    return "(" + coords_[0].str() + ":" + coords_[1].str() + ":" + coords_[2].str() + ")";
}

HesseCurve::HesseCurve(const Scalar& lambda, const FieldSpec& field) : lambda_(lambda.in(field)), field_(field) {
    if (lambda_.pow(3).is_one()) throw SingularCurve("lambda^3 = 1 gives a singular cubic");
}

HessePoint HesseCurve::origin() const { return HessePoint(Scalar::one(field_), -Scalar::one(field_), Scalar::zero(field_)); }

Scalar HesseCurve::j_invariant() const {
    const Scalar l3 = lambda_.pow(3);
    return Scalar(27) * l3 * (l3 + Scalar(8)).pow(3) / (l3 - Scalar(1)).pow(3);
}

Scalar HesseCurve::evaluate(const Triple& p) const {
    return p[0].pow(3) + p[1].pow(3) + p[2].pow(3) - Scalar(3) * lambda_ * p[0] * p[1] * p[2];
}

Triple HesseCurve::gradient(const Triple& p) const {
    const Scalar three(3);
    return {three * (p[0] * p[0] - lambda_ * p[1] * p[2]), three * (p[1] * p[1] - lambda_ * p[0] * p[2]),
            three * (p[2] * p[2] - lambda_ * p[0] * p[1])};
}

bool HesseCurve::on_curve(const Triple& p) const {
    if (is_zero(p)) throw ZeroTriple("(0:0:0) is not a projective point");
    return evaluate(in_field(p, field_)).is_zero();
}

HessePoint HesseCurve::point(const Scalar& a, const Scalar& b, const Scalar& c) const {
    const Triple t = in_field({a, b, c}, field_);
    if (!on_curve(t)) throw NotOnCurve("(" + a.str() + ":" + b.str() + ":" + c.str() + ") is not on E");
    return HessePoint(t);
}

// Restricting F to the line s*u + t*v gives a binary cubic whose s^2 t and
// s t^2 coefficients are grad F(u).v and grad F(v).u. Removing the known
// roots leaves a linear factor whose root is the third point.
HessePoint third_intersection(const HesseCurve& e, const HessePoint& p, const HessePoint& q) {
    const Triple& u = p.coords();
    if (p != q) {
        const Triple& v = q.coords();
        const Scalar b = dot(e.gradient(u), v);
        const Scalar c = dot(e.gradient(v), u);
        return HessePoint(combine(c, u, -b, v));
    }
    // Tangent line: pick a second point r on it; F(s u + t r) = t^2 (c s + d t).
    const Triple grad = e.gradient(u);
    const Scalar one = Scalar::one(e.field()), zero = Scalar::zero(e.field());
    const Triple basis[3] = {{one, zero, zero}, {zero, one, zero}, {zero, zero, one}};
    Triple r;
    for (const Triple& b : basis) {
        r = cross(grad, b);
        if (!is_zero(r) && !proportional(r, u)) break;
    }
    const Scalar c = dot(e.gradient(r), u);
    const Scalar d = e.evaluate(r);
    return HessePoint(combine(d, u, -c, r));
}

HessePoint neg(const HesseCurve& e, const HessePoint& p) { return third_intersection(e, e.origin(), p); }

HessePoint add(const HesseCurve& e, const HessePoint& p, const HessePoint& q) {
    return neg(e, third_intersection(e, p, q));
}

HessePoint smul(const HesseCurve& e, long n, const HessePoint& p) {
    HessePoint base = n < 0 ? neg(e, p) : p;
    unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
    HessePoint acc = e.origin();
    while (k > 0) {
        if (k & 1) acc = add(e, acc, base);
        base = add(e, base, base);
        k >>= 1;
    }
    return acc;
}

bool is_n_torsion(const HesseCurve& e, const HessePoint& p, long n) { return smul(e, n, p) == e.origin(); }

std::vector<HessePoint> inflection_points(const HesseCurve& e) {
    const FieldSpec& f = e.field();
    const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    std::vector<HessePoint> out;
    for (const Scalar& w : cube_roots_of_unity(f)) {
        out.emplace_back(one, -w, zero);
        out.emplace_back(zero, one, -w);
        out.emplace_back(-w, zero, one);
    }
    return out;
}

HessePoint sample_point(const HesseCurve& e, Rng& rng) {
    const std::uint64_t p = modulus_of(e);
    const Triple o = e.origin().coords();
    constexpr int attempts = 1000;
    for (int k = 0; k < attempts; ++k) {
        const Triple d{random_residue(p, rng), random_residue(p, rng), random_residue(p, rng)};
        if (is_zero(d) || proportional(d, o)) continue;
        // F(s o + d) = s^2 B + s C + D after dropping the root at o.
        const Scalar b = dot(e.gradient(o), d);
        const Scalar c = dot(e.gradient(d), o);
        const Scalar dd = e.evaluate(d);
        if (b.is_zero()) continue;
        const Scalar disc = c * c - Scalar(4) * b * dd;
        std::uint64_t root = 0;
        if (!modp::sqrt(disc.as_residue().value, p, root)) continue;
        const Scalar sq = Scalar::residue(root, p);
        const Scalar s = (rng.below(2) ? -c + sq : -c - sq) / (Scalar(2) * b);
        const Triple t = combine(s, o, Scalar::one(e.field()), d);
        if (is_zero(t)) continue;
        if (!e.evaluate(t).is_zero()) continue;
        return HessePoint(t);
    }
    throw SamplingExhausted("no point found after " + std::to_string(attempts) + " lines");
}

Scalar sample_generic_lambda(const FieldSpec& field, Rng& rng) {
    if (field.kind != FieldSpec::Kind::primefield) throw InvalidField("lambda sampling needs a prime field");
    for (int k = 0; k < 1000; ++k) {
        const Scalar l = random_residue(field.modulus, rng);
        if (l.pow(3).is_one()) continue;
        const Scalar j = HesseCurve(l, field).j_invariant();
        if (j.is_zero() || j == Scalar(1728).in(field)) continue;
        return l;
    }
    throw SamplingExhausted("no generic lambda found");
}

CurveAutomorphism translation_by(const HessePoint& p, int tau_power) { return {p, tau_power, std::nullopt}; }

HessePoint apply_automorphism(const HesseCurve& e, const CurveAutomorphism& sigma, const HessePoint& q) {
    return add(e, sigma.translation, apply_tau(e, sigma, q));
}

Tensor sklyanin_potential(const HessePoint& p) {
    const Scalar& a = p[0];
    const Scalar& b = p[1];
    const Scalar& c = p[2];
    Tensor w(3);
    for (const char* word : {"xyz", "yzx", "zxy"}) w.add(Word::parse(word), a);
    for (const char* word : {"xzy", "zyx", "yxz"}) w.add(Word::parse(word), b);
    for (const char* word : {"xxx", "yyy", "zzz"}) w.add(Word::parse(word), c);
    return w;
}

QuadraticAlgebra sklyanin(const HesseCurve& e, const HessePoint& p) {
    if (!e.on_curve(p.coords())) throw NotOnCurve(p.str() + " is not on E");
    if (is_n_torsion(e, p, 3)) throw ThreeTorsionPoint(p.str() + " lies in E[3]");
    const Scalar& a = p[0];
    const Scalar& b = p[1];
    const Scalar& c = p[2];
    std::vector<Tensor> rels;
    const char* rows[3][3] = {{"yz", "zy", "xx"}, {"zx", "xz", "yy"}, {"xy", "yx", "zz"}};
    for (const auto& row : rows) {
        Tensor f(2);
        f.add(Word::parse(row[0]), a);
        f.add(Word::parse(row[1]), b);
        f.add(Word::parse(row[2]), c);
        rels.push_back(std::move(f));
    }
    return QuadraticAlgebra(std::move(rels));
}

bool relations_vanish_on_graph(const QuadraticAlgebra& a, const HesseCurve& e, const CurveAutomorphism& sigma,
                               const HessePoint& q) {
    const HessePoint r = apply_automorphism(e, sigma, q);
    for (const Tensor& f : a.relations()) {
        Scalar total = Scalar::zero(e.field());
        for (const auto& [code, c] : f.terms()) total += c * q[code / 3] * r[code % 3];
        if (!total.is_zero()) return false;
    }
    return true;
}

bool g1_graph_check(const QuadraticAlgebra& a, const HesseCurve& e, const CurveAutomorphism& sigma,
                    std::size_t samples, Rng& rng) {
    for (std::size_t k = 0; k < samples; ++k) {
        const HessePoint q = sample_point(e, rng);
        if (!relations_vanish_on_graph(a, e, sigma, q)) return false;
    }
    return true;
}

bool ec_regular(const HesseCurve& e, const HessePoint& p, int i, const std::optional<Matrix>& tau_matrix) {
    if (is_n_torsion(e, p, 3)) throw ThreeTorsionPoint(p.str() + " lies in E[3]");
    CurveAutomorphism tau{e.origin(), i, tau_matrix};
    const HessePoint image = apply_tau(e, tau, p);
    return is_n_torsion(e, add(e, p, neg(e, image)), 3);
}

QuadraticAlgebra ec_algebra(const HesseCurve& e, const HessePoint& p, int i) {
    if (is_n_torsion(e, p, 3)) throw ThreeTorsionPoint(p.str() + " lies in E[3]");
    const Tensor w = sklyanin_potential(p);
    const Tensor twisted = i % 2 == 0 ? w : ms_twist(w, swap_map(Var::x, Var::y));
    return QuadraticAlgebra({partial(twisted, Var::x), partial(twisted, Var::y), partial(twisted, Var::z)});
}

std::optional<Matrix> linear_extension(const HesseCurve& e, const CurveAutomorphism& sigma, std::size_t samples,
                                       Rng& rng) {
    const std::size_t n = samples < 8 ? 8 : samples;
    // Unknown N(r, c) is column 3r + c; (N q) x sigma(q) = 0 gives three rows.
    Matrix eq(3 * n, 9);
    for (std::size_t k = 0; k < n; ++k) {
        const HessePoint q = sample_point(e, rng);
        const HessePoint s = apply_automorphism(e, sigma, q);
        for (std::size_t comp = 0; comp < 3; ++comp) {
            const std::size_t i1 = (comp + 1) % 3, i2 = (comp + 2) % 3;
            for (std::size_t c = 0; c < 3; ++c) {
                eq.at(3 * k + comp, 3 * i1 + c) += q[c] * s[i2];
                eq.at(3 * k + comp, 3 * i2 + c) -= q[c] * s[i1];
            }
        }
    }
    const std::vector<Matrix> ker = kernel(eq);
    if (ker.size() != 1) return std::nullopt;
    Matrix m(3, 3);
    for (std::size_t r = 0; r < 9; ++r) m.at(r / 3, r % 3) = ker[0].at(r, 0);
    if (!m.invertible()) return std::nullopt;
    for (std::size_t r = 0; r < 9; ++r)
        if (!m.at(r / 3, r % 3).is_zero()) {
            m = m.scaled(m.at(r / 3, r % 3).inverse());
            break;
        }
    for (std::size_t k = 0; k < n; ++k) {
        const HessePoint q = sample_point(e, rng);
        if (!proportional(map_point(m, q.coords()), apply_automorphism(e, sigma, q).coords())) return std::nullopt;
    }
    return m;
}

}  // namespace asreg
