#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asreg/errors.hpp"
#include "asreg/hesse.hpp"
#include "asreg/parse.hpp"
#include "asreg/regularity.hpp"
#include "support.hpp"

using namespace asreg;
using namespace asreg::testing;

namespace {

const FieldSpec q = FieldSpec::rationals();

HesseCurve random_curve(Rng& rng, const FieldSpec& f = large_prime) { return HesseCurve(sample_generic_lambda(f, rng), f); }

HessePoint non_torsion_point(const HesseCurve& e, Rng& rng) {
    for (;;) {
        HessePoint p = sample_point(e, rng);
        if (!is_n_torsion(e, p, 3)) return p;
    }
}

// The curve through (1 : 1 : c), a point of order 2.
HesseCurve curve_with_two_torsion(const Scalar& c) { return HesseCurve((c * c * c + 2) / (c * 3), c.field()); }

}  // namespace

TEST_CASE("curve membership") {
    for (const Scalar& lambda : {Scalar(0), Scalar(2), Scalar::rational(-1, 3)}) {
        const HesseCurve e(lambda, q);
        CHECK(e.on_curve({1, -1, 0}));
        CHECK(e.on_curve({1, 0, -1}));
        CHECK_FALSE(e.on_curve({1, 1, 1}));
    }
    CHECK_THROWS_AS(HesseCurve(1, q), SingularCurve);
    CHECK_THROWS_AS(HesseCurve(Scalar::zeta3(), FieldSpec::cyclotomic3()), SingularCurve);
    CHECK_THROWS_AS(HesseCurve(0, q).on_curve({0, 0, 0}), ZeroTriple);
    CHECK_THROWS_AS(HesseCurve(0, q).point(1, 1, 1), NotOnCurve);
    CHECK(HessePoint(2, -2, 0) == HessePoint(1, -1, 0));
}

TEST_CASE("j-invariant") {
    CHECK(HesseCurve(0, q).j_invariant() == Scalar(0));
    CHECK(HesseCurve(2, q).j_invariant() == Scalar::rational(884736, 343));
    CHECK(HesseCurve(-1, q).j_invariant() == Scalar::rational(9261, 8));
}

TEST_CASE("chords and tangents over the rationals") {
    const HesseCurve e(0, q);
    const HessePoint o = e.origin();
    CHECK(o == HessePoint(1, -1, 0));
    CHECK(third_intersection(e, o, o) == o);
    CHECK(third_intersection(e, HessePoint(1, -1, 0), HessePoint(1, 0, -1)) == HessePoint(0, 1, -1));
    for (const HessePoint& p : inflection_points(e)) {
        CHECK(third_intersection(e, p, p) == p);
        CHECK(is_n_torsion(e, p, 3));
    }
    CHECK(inflection_points(e).size() == 3);
    CHECK(smul(e, 3, HessePoint(1, 0, -1)) == o);
    CHECK(is_n_torsion(e, o, 1));
    CHECK(is_n_torsion(e, o, 7));
}

TEST_CASE("group law over F_p") {
    Rng rng(2024);
    const HesseCurve e = random_curve(rng);
    const HessePoint o = e.origin();
    for (int k = 0; k < 100; ++k) {
        const HessePoint p = sample_point(e, rng), r = sample_point(e, rng), s = sample_point(e, rng);
        CHECK(e.on_curve(third_intersection(e, p, r).coords()));
        CHECK(neg(e, p) == HessePoint(p[1], p[0], p[2]));
        CHECK(add(e, p, o) == p);
        CHECK(add(e, p, neg(e, p)) == o);
        CHECK(add(e, p, r) == add(e, r, p));
        CHECK(add(e, add(e, p, r), s) == add(e, p, add(e, r, s)));
    }
    const HessePoint p = non_torsion_point(e, rng);
    CHECK_FALSE(is_n_torsion(e, p, 3));
    HessePoint sum = o;
    for (long n = 1; n <= 12; ++n) {
        sum = add(e, sum, p);
        CHECK(smul(e, n, p) == sum);
    }
    CHECK(smul(e, -5, p) == neg(e, smul(e, 5, p)));
}

TEST_CASE("rational 3-torsion is the set of flexes") {
    Rng rng(6);
    for (std::uint64_t prime : {1000003ULL, 1000037ULL}) {
        const FieldSpec f = FieldSpec::prime(prime);
        const HesseCurve e = random_curve(rng, f);
        const auto flexes = inflection_points(e);
        CHECK((flexes.size() == 1 || flexes.size() == 3 || flexes.size() == 9));
        CHECK(flexes.size() == (prime % 3 == 1 ? 9u : 3u));
        for (const HessePoint& p : flexes) {
            CHECK(is_n_torsion(e, p, 3));
            CHECK(third_intersection(e, p, p) == p);
        }
    }
}

TEST_CASE("automorphisms") {
    Rng rng(8);
    const HesseCurve e = random_curve(rng);
    const HessePoint p = sample_point(e, rng), r = sample_point(e, rng);
    CHECK(apply_automorphism(e, translation_by(p), e.origin()) == p);
    CHECK(apply_automorphism(e, translation_by(e.origin(), 1), r) == neg(e, r));
    CHECK(apply_automorphism(e, translation_by(p, 1), r) == add(e, p, neg(e, r)));
    const HesseCurve j0(0, large_prime);
    CHECK_THROWS_AS(apply_automorphism(j0, translation_by(j0.origin(), 1), j0.origin()), TauOrderUnsupported);
    const CurveAutomorphism explicit_tau{j0.origin(), 1, swap_map(Var::x, Var::y)};
    CHECK(apply_automorphism(j0, explicit_tau, HessePoint(1, 0, -1)) == HessePoint(0, 1, -1));
}

TEST_CASE("Sklyanin algebras") {
    const HesseCurve e0(0, q);
    CHECK_THROWS_AS(sklyanin(e0, e0.origin()), ThreeTorsionPoint);

    Rng rng(10);
    const HesseCurve e = random_curve(rng);
    for (int k = 0; k < 3; ++k) {
        const HessePoint p = non_torsion_point(e, rng);
        const QuadraticAlgebra s = sklyanin(e, p);
        CHECK(as_regular_check(s).verdict == Verdict::regular);
        const Tensor w = sklyanin_potential(p);
        CHECK(is_superpotential(w));
        CHECK(derivation_quotient(w).space() == s.space());
    }
}

TEST_CASE("graph condition") {
    // Over Q on the curve through the 2-torsion point (1 : 1 : 2).
    const HesseCurve e = curve_with_two_torsion(2);
    const HessePoint p = e.point(1, 1, 2);
    const QuadraticAlgebra s = sklyanin(e, p);
    // At q = o_E the first relation reads a(-1)c + b*0*b + c*1*a = 0.
    CHECK(relations_vanish_on_graph(s, e, translation_by(p), e.origin()));
    for (const HessePoint& flex : inflection_points(e))
        CHECK(relations_vanish_on_graph(s, e, translation_by(p), flex));

    Rng rng(12);
    const HesseCurve ep = random_curve(rng);
    const HessePoint pp = non_torsion_point(ep, rng);
    const QuadraticAlgebra sp = sklyanin(ep, pp);
    CHECK(g1_graph_check(sp, ep, translation_by(pp), 50, rng));
    CHECK_FALSE(g1_graph_check(sp, ep, translation_by(neg(ep, pp)), 20, rng));

    const Bindings abc{{"a", pp[0]}, {"b", pp[1]}, {"c", pp[2] + Scalar::one(large_prime)}};
    std::vector<Tensor> perturbed = sp.relations();
    perturbed[0] = parse_potential("a*y*z + b*z*y + c*x*x", abc, large_prime);
    CHECK_FALSE(g1_graph_check(QuadraticAlgebra(perturbed), ep, translation_by(pp), 20, rng));
}

TEST_CASE("regularity criterion agrees with the regularity engine") {
    Rng rng(14);
    const HesseCurve e = random_curve(rng);
    CHECK_THROWS_AS(ec_regular(e, e.origin(), 0), ThreeTorsionPoint);
    for (int k = 0; k < 4; ++k) {
        const HessePoint p = non_torsion_point(e, rng);
        CHECK(ec_regular(e, p, 0));
        CHECK(ec_regular(e, p, 1) == is_n_torsion(e, p, 6));
        for (int i : {0, 1})
            CHECK(ec_regular(e, p, i) == (as_regular_check(ec_algebra(e, p, i)).verdict == Verdict::regular));
    }
    // A point of E[6] outside E[3]: a 2-torsion point plus a flex.
    const HesseCurve e6 = curve_with_two_torsion(Scalar::residue(5, large_prime.modulus));
    const HessePoint p = add(e6, e6.point(1, 1, Scalar::residue(5, large_prime.modulus)), inflection_points(e6)[1]);
    CHECK(is_n_torsion(e6, p, 6));
    CHECK_FALSE(is_n_torsion(e6, p, 3));
    CHECK(ec_regular(e6, p, 1));
    CHECK(as_regular_check(ec_algebra(e6, p, 1)).verdict == Verdict::regular);
}

TEST_CASE("linear extensions of curve automorphisms") {
    Rng rng(16);
    const HesseCurve e = random_curve(rng);
    Scalar c;
    const auto id = linear_extension(e, translation_by(e.origin()), 8, rng);
    REQUIRE(id.has_value());
    CHECK(proportional(*id, Matrix::identity(3), c));
    const auto tau = linear_extension(e, translation_by(e.origin(), 1), 8, rng);
    REQUIRE(tau.has_value());
    CHECK(proportional(*tau, swap_map(Var::x, Var::y), c));
    const HessePoint p = non_torsion_point(e, rng);
    CHECK_FALSE(linear_extension(e, translation_by(p, 1), 8, rng).has_value());
}
