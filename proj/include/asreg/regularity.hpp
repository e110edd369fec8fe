#pragma once

#include "asreg/quadratic.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace asreg {

using Exponent = std::array<int, 3>;

// Graded reverse lexicographic order with x > y > z.
struct Grevlex {
    bool operator()(const Exponent& a, const Exponent& b) const;  // a < b
};

// A commutative polynomial in x, y, z. Terms are kept in decreasing grevlex
// order, zero coefficients are never stored.
class CommPoly {
public:
    CommPoly() = default;
    static CommPoly monomial(const Exponent& e, const Scalar& c = 1);
    static CommPoly from_form(const LinearForm& f);

    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    int degree() const;  // total degree of the leading term
    const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
    const Scalar& leading_coeff() const { return terms_.rbegin()->second; }
    const std::map<Exponent, Scalar, Grevlex>& terms() const { return terms_; }
    Scalar coeff(const Exponent& e) const;

    void add(const Exponent& e, const Scalar& c);
    CommPoly scaled(const Scalar& s) const;
    CommPoly shifted(const Exponent& e) const;  // multiply by a monomial
    CommPoly monic() const;

    friend CommPoly operator+(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator-(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend bool operator==(const CommPoly& a, const CommPoly& b);

    Scalar evaluate(const std::array<Scalar, 3>& point) const;
    std::string str() const;

private:
    std::map<Exponent, Scalar, Grevlex> terms_;
};

CommPoly commutative_image(const Tensor& t);

// Delta(i, j): the minor deleting row i and column j, with cofactor sign.
std::array<std::array<CommPoly, 3>, 3> minors_2x2(const LinearFormMatrix& m);

struct GroebnerBasis {
    std::vector<CommPoly> generators;  // reduced and monic, sorted by leading term
};

GroebnerBasis buchberger(const std::vector<CommPoly>& gens);
CommPoly normal_form(const CommPoly& p, const std::vector<CommPoly>& basis);

// True iff the homogeneous ideal has no zero in P^2 over the algebraic closure.
bool projective_locus_empty(const std::vector<CommPoly>& gens);

enum class Verdict { regular, not_standard, non_empty_minor_locus, degenerate_relations };

std::string to_string(Verdict v);

struct RegularityReport {
    Verdict verdict = Verdict::degenerate_relations;
    std::size_t relation_dimension = 0;
    bool standard = false;
    std::vector<Tensor> standard_basis;
    std::vector<CommPoly> minors;  // row-major Delta(i, j)
    GroebnerBasis groebner;
    bool locus_empty = false;
};

RegularityReport as_regular_check(const QuadraticAlgebra& a);

}  // namespace asreg
