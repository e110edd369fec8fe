#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asreg/errors.hpp"
#include "support.hpp"

using namespace asreg;
using namespace asreg::testing;

TEST_CASE("arithmetic examples") {
    CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 3) == Scalar::rational(5, 6));
    const Scalar z = Scalar::zeta3();
    CHECK(z * z == Scalar(-1) - z);
    CHECK(z * z * z == Scalar(1));
    const std::uint64_t p = 7;
    CHECK(Scalar::residue(3, p) / Scalar::residue(5, p) == Scalar::residue(2, p));
}

TEST_CASE("normal forms") {
    CHECK(Scalar::rational(4, -6).str() == "-2/3");
    CHECK(Scalar::residue(mpz_class(-1), 11).as_residue().value == 10);
    CHECK(Scalar::cyclo(2, 0).is_rational() == false);
    CHECK(Scalar::cyclo(2, 0) == Scalar(2).in(FieldSpec::cyclotomic3()));
    CHECK(Scalar(5).in(FieldSpec::prime(7)) == Scalar::residue(5, 7));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(Scalar::residue(1, 7) + Scalar::residue(1, 11), FieldMismatch);
    CHECK_THROWS_AS(Scalar::zeta3() + Scalar::residue(1, 7), FieldMismatch);
    CHECK_THROWS_AS(FieldSpec::prime(9), InvalidField);
    CHECK_THROWS_AS(FieldSpec::prime(3), InvalidField);
    CHECK_THROWS_AS(FieldSpec::parse("r"), InvalidField);
    // A denominator divisible by p has no image in F_p.
    CHECK_THROWS_AS(Scalar::rational(1, 7).in(FieldSpec::prime(7)), DivisionByZero);
}

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("q-zeta3") == FieldSpec::cyclotomic3());
    CHECK(FieldSpec::parse("fp:1000003") == large_prime);
    CHECK(large_prime.name() == "fp:1000003");
}

TEST_CASE("field axioms on random triples") {
    for (const FieldSpec& f : all_fields()) {
        CAPTURE(f.name());
        Rng rng(11);
        for (int k = 0; k < 200; ++k) {
            const Scalar a = random_scalar(rng, f).in(f);
            const Scalar b = random_scalar(rng, f).in(f);
            const Scalar c = random_scalar(rng, f).in(f);
            CHECK((a + b) - b == a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
        }
    }
}

TEST_CASE("cube roots and square roots") {
    mpq_class root;
    CHECK(rational_cube_root(mpq_class(-8, 27), root));
    CHECK(root == mpq_class(-2, 3));
    CHECK_FALSE(rational_cube_root(mpq_class(2), root));
    const std::uint64_t p = 1000003;
    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        const std::uint64_t a = rng.below(p);
        std::uint64_t r = 0;
        const bool residue = modp::sqrt(modp::mul(a, a, p), p, r);
        CHECK(residue);
        CHECK(modp::mul(r, r, p) == modp::mul(a, a, p));
    }
}

TEST_CASE("rref examples") {
    const RrefResult id = rref(Matrix::identity(3));
    CHECK(id.matrix == Matrix::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(id.rank == 3);
    CHECK(rref(Matrix(3, 3)).rank == 0);
    const RrefResult r = rref(Matrix::from_rows({{1, 2}, {2, 4}}));
    CHECK(r.matrix == Matrix::from_rows({{1, 2}, {0, 0}}));
    CHECK(r.rank == 1);
}

TEST_CASE("solve examples") {
    const Matrix v = Matrix::column({1, 2, 3});
    const Solution unique = solve(Matrix::identity(3), v);
    REQUIRE(std::holds_alternative<Unique>(unique));
    CHECK(std::get<Unique>(unique).solution == v);

    CHECK(std::holds_alternative<Inconsistent>(solve(Matrix(2, 2), Matrix::column({1, 0}))));

    const Solution under = solve(Matrix::from_rows({{1, 1}}), Matrix::column({2}));
    REQUIRE(std::holds_alternative<Underdetermined>(under));
    const auto& u = std::get<Underdetermined>(under);
    REQUIRE(u.kernel.size() == 1);
    Scalar c;
    CHECK(proportional(u.kernel[0], Matrix::column({1, -1}), c));
    CHECK(Matrix::from_rows({{1, 1}}) * u.particular == Matrix::column({2}));

    CHECK_THROWS_AS(solve(Matrix(2, 2), Matrix::column({1, 2, 3})), ShapeMismatch);
}

TEST_CASE("rref is idempotent and solve is consistent on images") {
    for (const FieldSpec& f : all_fields()) {
        CAPTURE(f.name());
        Rng rng(7);
        for (int k = 0; k < 40; ++k) {
            const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
            const Matrix m = random_matrix(rng, f, rows, cols);
            const Matrix once = rref(m).matrix;
            CHECK(rref(once).matrix == once);

            const Matrix v = random_matrix(rng, f, cols, 1);
            const Matrix rhs = m * v;
            const Solution s = solve(m, rhs);
            REQUIRE_FALSE(std::holds_alternative<Inconsistent>(s));
            const Matrix u = std::holds_alternative<Unique>(s) ? std::get<Unique>(s).solution
                                                               : std::get<Underdetermined>(s).particular;
            CHECK(m * u == rhs);
            for (const Matrix& kv : kernel(m)) CHECK((m * kv).is_zero());
            CHECK(kernel(m).size() + rank(m) == cols);
        }
    }
}

TEST_CASE("inverse and determinant") {
    Rng rng(3);
    for (const FieldSpec& f : all_fields()) {
        const Matrix m = random_invertible(rng, f);
        CHECK(m * m.inverse() == Matrix::identity(3).in(f));
        CHECK((m * m).determinant() == m.determinant() * m.determinant());
    }
    CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {2, 4}}).inverse(), SingularMap);
}
