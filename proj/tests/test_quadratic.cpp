#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asreg/catalog.hpp"
#include "asreg/errors.hpp"
#include "asreg/parse.hpp"
#include "asreg/quadratic.hpp"
#include "support.hpp"

using namespace asreg;
using namespace asreg::testing;

namespace {

Tensor t(const std::string& text, const Bindings& b = {}, const FieldSpec& f = FieldSpec::rationals()) {
    return parse_potential(text, b, f);
}

const Tensor w0 = t("x*y*z + y*z*x + z*x*y - z*y*x - y*x*z - x*z*y");
const std::vector<Tensor> commutators{t("y*z - z*y"), t("z*x - x*z"), t("x*y - y*x")};
const QuadraticAlgebra polynomial_ring{commutators};
const QuadraticAlgebra left_x{{t("x*x"), t("x*y"), t("x*z")}};

QuadraticAlgebra skew(const Scalar& a, const Scalar& b, const Scalar& c) {
    const Bindings v{{"a", a}, {"b", b}, {"c", c}};
    const FieldSpec f = join(a.field(), join(b.field(), c.field()));
    return QuadraticAlgebra({t("b*y*z - c*z*y", v, f), t("c*z*x - a*x*z", v, f), t("a*x*y - b*y*x", v, f)});
}

LinearForm form(const Scalar& x, const Scalar& y, const Scalar& z) { return LinearForm{{x, y, z}}; }

}  // namespace

TEST_CASE("derivation quotient") {
    CHECK(derivation_quotient(w0).space() == polynomial_ring.space());
    CHECK(derivation_quotient(ms_twist(w0, diag(2, 3, 5))).space() == skew(2, 3, 5).space());
    CHECK_THROWS_AS(derivation_quotient(t("x*x*x")), DegeneratePotential);
    CHECK_THROWS_AS(derivation_quotient(t("x*y")), DegreeMismatch);
}

TEST_CASE("relation matrix") {
    // f_i = sum_j M(i, j) (x) x_j. On the commutator basis this is minus the
    // cross-product matrix; the same convention reproduces the T1 matrix below.
    const LinearFormMatrix m = relation_matrix(polynomial_ring, commutators);
    CHECK(m[0][0].is_zero());
    CHECK(m[0][1] == form(0, 0, -1));
    CHECK(m[0][2] == form(0, 1, 0));
    CHECK(m[1][0] == form(0, 0, 1));
    CHECK(m[1][2] == form(-1, 0, 0));
    CHECK(m[2][0] == form(0, -1, 0));
    CHECK(m[2][1] == form(1, 0, 0));

    const std::vector<Tensor> t1 = derivation_quotient(t(table1_row(TypeId::T1).table3.w0)).relations();
    const LinearFormMatrix mt = relation_matrix(QuadraticAlgebra(t1), t1);
    CHECK(mt[0][0] == form(0, 1, 0));
    CHECK(mt[0][1] == form(1, -1, -1));
    CHECK(mt[0][2] == form(0, 1, 0));
    CHECK(mt[1][0] == form(1, -1, 1));
    CHECK(mt[1][1] == form(-1, 0, 0));
    CHECK(mt[1][2] == form(-1, 0, 0));
    CHECK(mt[2][0] == form(0, -1, 0));
    CHECK(mt[2][1] == form(1, 0, 0));
    CHECK(mt[2][2].is_zero());

    const LinearFormMatrix mx = relation_matrix(left_x, left_x.relations());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(mx[i][j] == (i == j ? form(1, 0, 0) : form(0, 0, 0)));

    CHECK_THROWS_AS(relation_matrix(polynomial_ring, {t("x*x"), t("y*y"), t("z*z")}), NotABasis);
}

TEST_CASE("standardness") {
    const std::vector<Tensor> t1 = derivation_quotient(t(table1_row(TypeId::T1).table3.w0)).relations();
    const StandardResult s = is_standard(QuadraticAlgebra(t1), t1);
    CHECK(s.standard);
    CHECK(row_vector_times(relation_matrix(QuadraticAlgebra(t1), t1)) == t1);
    CHECK(is_standard(polynomial_ring).standard);
    CHECK_FALSE(is_standard(left_x).standard);
}

TEST_CASE("Zhang twist") {
    CHECK(zhang_twist(polynomial_ring, Matrix::identity(3)).space() == polynomial_ring.space());
    CHECK(zhang_twist(polynomial_ring, diag(2, 3, 5)).space() == skew(2, 3, 5).space());
    CHECK_THROWS_AS(zhang_twist(polynomial_ring, Matrix(3, 3)), SingularMap);

    Rng rng(4);
    for (const FieldSpec& f : all_fields()) {
        const LinearMap theta = random_invertible(rng, f);
        const QuadraticAlgebra a = skew(random_nonzero(rng, f), random_nonzero(rng, f), random_nonzero(rng, f));
        CHECK(zhang_twist(zhang_twist(a, theta), theta).space() == zhang_twist(a, theta * theta).space());
    }
}

TEST_CASE("quadratic dual and Nakayama") {
    CHECK(quadratic_dual(polynomial_ring).dims == std::vector<std::size_t>{1, 3, 3, 1, 0});
    // Only the Table 1 potential: the Table 3 data of S3 needs a cube root of abc.
    const QuadraticAlgebra s3_algebra =
        derivation_quotient(t(table1_row(TypeId::S3).potential, {{"a", 2}, {"b", 3}, {"c", 5}}));
    CHECK(quadratic_dual(s3_algebra).dims == std::vector<std::size_t>{1, 3, 3, 1, 0});
    CHECK_THROWS_AS(quadratic_dual(left_x), NotFrobeniusShape);

    Scalar c;
    CHECK(proportional(nakayama(s3_algebra).nu, Matrix::identity(3), c));
    CHECK(proportional(nakayama(polynomial_ring).nu, Matrix::identity(3), c));
    const Instance p1 = instantiate(TypeId::P1, {{"a", 1}, {"b", 2}, {"c", 3}});
    CHECK(proportional(nakayama(derivation_quotient(p1.potential)).nu,
                       diag(Scalar::rational(1, 6), Scalar::rational(4, 3), Scalar::rational(9, 2)), c));
}

TEST_CASE("Hilbert dimensions") {
    CHECK(hilbert_dims(polynomial_ring, 4) == std::vector<std::size_t>{1, 3, 6, 10, 15});
    const Instance p1 = instantiate(TypeId::P1, {{"a", 1}, {"b", 2}, {"c", 3}});
    CHECK(hilbert_dims(derivation_quotient(p1.potential), 4) == std::vector<std::size_t>{1, 3, 6, 10, 15});
    const QuadraticAlgebra squares({t("x*x"), t("y*y"), t("z*z")});
    CHECK(hilbert_dims(squares, 3) == std::vector<std::size_t>{1, 3, 6, 12});
    CHECK_THROWS_AS(hilbert_dims(polynomial_ring, 7), DegreeTooLarge);
}

TEST_CASE("relation spaces up to a change of basis") {
    CHECK(relations_equal_up_to(polynomial_ring, polynomial_ring, Matrix::identity(3)));
    CHECK_FALSE(relations_equal_up_to(polynomial_ring, skew(1, 1, 2), Matrix::identity(3)));

    const Bindings b{{"a", 1}, {"b", 2}, {"c", 4}};
    const Table3Instance t1 = instantiate_table3(TypeId::T1, b);
    CHECK(relations_equal_up_to(derivation_quotient(ms_twist(t1.w0, t1.theta)),
                                derivation_quotient(instantiate(TypeId::T1, b).potential), t1.g));
    CHECK_THROWS_AS(relations_equal_up_to(polynomial_ring, polynomial_ring, Matrix(3, 3)), SingularMap);
}

TEST_CASE("canonical form and double dual") {
    for (const FieldSpec& f : all_fields()) {
        CAPTURE(f.name());
        Rng rng(17);
        for (int k = 0; k < 20; ++k) {
            // A skew polynomial ring in random coordinates.
            const LinearMap g = random_invertible(rng, f);
            const QuadraticAlgebra base = skew(random_nonzero(rng, f), random_nonzero(rng, f), random_nonzero(rng, f));
            std::vector<Tensor> basis;
            for (const Tensor& r : base.relations()) basis.push_back(gl_apply(r, g));
            const RelationSpace r(basis);
            REQUIRE(r.dimension() == 3);

            const Matrix change = random_invertible(rng, f);
            std::vector<Tensor> mixed;
            for (int i = 0; i < 3; ++i) {
                Tensor sum(2);
                for (int j = 0; j < 3; ++j) sum = sum + basis[j].scaled(change(i, j));
                mixed.push_back(sum);
            }
            CHECK(RelationSpace(mixed) == r);

            const FrobeniusData dual = quadratic_dual(QuadraticAlgebra(basis));
            CHECK(dual.perp.dimension() == 6);
            std::vector<Tensor> perp_perp;
            for (const Matrix& v : kernel(dual.perp.canonical())) {
                std::vector<Scalar> coords(9);
                for (std::size_t i = 0; i < 9; ++i) coords[i] = v(i, 0);
                perp_perp.push_back(Tensor::from_coordinates(2, coords));
            }
            CHECK(RelationSpace(perp_perp) == r);
        }
    }
}

TEST_CASE("twisting commutes with the derivation quotient for diagonal automorphisms") {
    Rng rng(12);
    for (const FieldSpec& f : all_fields()) {
        for (int k = 0; k < 10; ++k) {
            const LinearMap theta = diag(random_nonzero(rng, f), random_nonzero(rng, f), random_nonzero(rng, f));
            CHECK(derivation_quotient(ms_twist(w0, theta)).space() ==
                  zhang_twist(derivation_quotient(w0), theta).space());
        }
    }
}

TEST_CASE("Nakayama is the identity exactly on the Calabi-Yau rows") {
    Rng rng(31);
    for (TypeId type : table2_types()) {
        const FieldSpec f = type == TypeId::P1 ? FieldSpec::cyclotomic3() : FieldSpec::rationals();
        const Table2Instance in = instantiate_table2(type, sample_table2_binding(type, rng, f), f);
        CHECK(is_superpotential(in.w0));
        CHECK(nakayama(derivation_quotient(in.w0)).nu == Matrix::identity(3).in(f));
    }
    // A Table 1 potential that is not a superpotential has a non-scalar Nakayama map.
    const Instance p1 = instantiate(TypeId::P1, {{"a", 1}, {"b", 2}, {"c", 3}});
    CHECK_FALSE(is_superpotential(p1.potential));
    Scalar c;
    CHECK_FALSE(proportional(nakayama(derivation_quotient(p1.potential)).nu, Matrix::identity(3), c));
}
