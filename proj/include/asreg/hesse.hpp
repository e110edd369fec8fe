#pragma once

#include "asreg/field.hpp"
#include "asreg/matrix.hpp"
#include "asreg/quadratic.hpp"
#include "asreg/random.hpp"
#include "asreg/tensor.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace asreg {

using Triple = std::array<Scalar, 3>;

// A projective point, scaled so its last nonzero coordinate is 1.
class HessePoint {
public:
    // Throws ZeroTriple.
    explicit HessePoint(const Triple& coords);
    HessePoint(const Scalar& a, const Scalar& b, const Scalar& c) : HessePoint(Triple{a, b, c}) {}

    const Triple& coords() const { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    friend bool operator==(const HessePoint& p, const HessePoint& q) { return p.coords_ == q.coords_; }
    friend bool operator!=(const HessePoint& p, const HessePoint& q) { return !(p == q); }
    std::string str() const;

private:
    Triple coords_;
};

// x^3 + y^3 + z^3 = 3 lambda xyz with lambda^3 != 1; zero element (1:-1:0).
class HesseCurve {
public:
    // Throws SingularCurve when lambda^3 = 1.
    HesseCurve(const Scalar& lambda, const FieldSpec& field);

    const Scalar& lambda() const { return lambda_; }
    const FieldSpec& field() const { return field_; }
    HessePoint origin() const;

    Scalar j_invariant() const;
    // Throws ZeroTriple.
    bool on_curve(const Triple& p) const;
    // Checked constructor for a point of this curve. Throws NotOnCurve.
    HessePoint point(const Scalar& a, const Scalar& b, const Scalar& c) const;

    Scalar evaluate(const Triple& p) const;
    Triple gradient(const Triple& p) const;

private:
    Scalar lambda_;
    FieldSpec field_;
};

// Third point of the chord through p and q, or of the tangent at p when q = p.
HessePoint third_intersection(const HesseCurve& e, const HessePoint& p, const HessePoint& q);
HessePoint neg(const HesseCurve& e, const HessePoint& p);
HessePoint add(const HesseCurve& e, const HessePoint& p, const HessePoint& q);
// [n]p by double-and-add; negative n multiplies the inverse.
HessePoint smul(const HesseCurve& e, long n, const HessePoint& p);
bool is_n_torsion(const HesseCurve& e, const HessePoint& p, long n);

// The flexes (1:-w:0), (0:1:-w), (-w:0:1) for cube roots of unity w that
// exist in the curve's field. All nine together form E[3].
std::vector<HessePoint> inflection_points(const HesseCurve& e);

// Random point over a prime field: a random line through the origin meets E
// in the origin and two further points, found with a square root.
// Throws SamplingExhausted, or InvalidField outside prime fields.
HessePoint sample_point(const HesseCurve& e, Rng& rng);
// Random lambda with lambda^3 != 1 and j not in {0, 1728}.
Scalar sample_generic_lambda(const FieldSpec& field, Rng& rng);

// sigma = sigma_p tau^i. Without an explicit matrix, tau is inversion, which
// requires j(E) not in {0, 1728}.
struct CurveAutomorphism {
    HessePoint translation;
    int tau_power = 0;
    std::optional<Matrix> tau_matrix;  // acts on coordinate columns
};

CurveAutomorphism translation_by(const HessePoint& p, int tau_power = 0);
// Throws TauOrderUnsupported.
HessePoint apply_automorphism(const HesseCurve& e, const CurveAutomorphism& sigma, const HessePoint& q);

Tensor sklyanin_potential(const HessePoint& p);
// Relations a yz + b zy + c x^2, a zx + b xz + c y^2, a xy + b yx + c z^2.
// Throws ThreeTorsionPoint.
QuadraticAlgebra sklyanin(const HesseCurve& e, const HessePoint& p);

// f(q, sigma(q)) = 0 for every relation f of `a`.
bool relations_vanish_on_graph(const QuadraticAlgebra& a, const HesseCurve& e, const CurveAutomorphism& sigma,
                               const HessePoint& q);

// Samples q on E and checks f(q, sigma(q)) = 0 for every relation f, with
// f(u, v) = sum over words ij of coeff(ij) u_i v_j. Throws SamplingExhausted.
bool g1_graph_check(const QuadraticAlgebra& a, const HesseCurve& e, const CurveAutomorphism& sigma,
                    std::size_t samples, Rng& rng);

// Criterion (2) of the regularity theorem: p - tau^i(p) lies in E[3].
// Throws ThreeTorsionPoint and TauOrderUnsupported.
bool ec_regular(const HesseCurve& e, const HessePoint& p, int i, const std::optional<Matrix>& tau_matrix = {});

// The algebra A(E, sigma_p tau^i) for i in {0, 1}: the Sklyanin algebra D(w)
// for i = 0 and D(w^theta) with theta the swap of x and y for i = 1.
QuadraticAlgebra ec_algebra(const HesseCurve& e, const HessePoint& p, int i);

// N with N q proportional to sigma(q) on sampled points, confirmed on fresh
// samples; nullopt when no such matrix exists. Throws SamplingExhausted.
std::optional<Matrix> linear_extension(const HesseCurve& e, const CurveAutomorphism& sigma, std::size_t samples,
                                       Rng& rng);

}  // namespace asreg
