#pragma once

#include "asreg/matrix.hpp"
#include "asreg/sparse.hpp"
#include "asreg/tensor.hpp"

#include <array>
#include <optional>
#include <vector>

namespace asreg {

// A subspace of V(x)V (or of any V^{(x)d}) stored as its reduced row-echelon
// basis, so equal subspaces compare equal structurally.
class RelationSpace {
public:
    RelationSpace() = default;
    explicit RelationSpace(const std::vector<Tensor>& spanning, int degree = 2);

    int degree() const { return degree_; }
    std::size_t dimension() const { return canonical_.rows(); }
    const Matrix& canonical() const { return canonical_; }
    std::vector<Tensor> basis() const;
    bool contains(const Tensor& t) const;

    friend bool operator==(const RelationSpace& a, const RelationSpace& b) {
        return a.degree_ == b.degree_ && a.canonical_ == b.canonical_;
    }

private:
    int degree_ = 2;
    Matrix canonical_{0, 9};
};

class QuadraticAlgebra {
public:
    // `relations` is kept as given (its order defines M); the span is canonicalized.
    explicit QuadraticAlgebra(std::vector<Tensor> relations);

    const RelationSpace& space() const { return space_; }
    const std::vector<Tensor>& relations() const { return relations_; }
    std::size_t relation_dimension() const { return space_.dimension(); }
    FieldSpec field() const;

private:
    std::vector<Tensor> relations_;
    RelationSpace space_;
};

// A linear form c0 x + c1 y + c2 z.
struct LinearForm {
    std::array<Scalar, 3> c;
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
    std::string str() const;
    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c == b.c; }
};

using LinearFormMatrix = std::array<std::array<LinearForm, 3>, 3>;

// D(w): relations are the three partials. Throws DegeneratePotential when they
// are dependent.
QuadraticAlgebra derivation_quotient(const Tensor& w);

// f_i = sum_j M(i, j) (x) x_j for the given ordered basis of the relations.
LinearFormMatrix relation_matrix(const QuadraticAlgebra& a, const std::vector<Tensor>& basis);
// The entries of (x, y, z) M.
std::vector<Tensor> row_vector_times(const LinearFormMatrix& m);

struct StandardResult {
    bool standard = false;
    // Basis of R whose x^t M entries are again a basis of R (when standard).
    std::vector<Tensor> basis;
};

StandardResult is_standard(const QuadraticAlgebra& a, const std::vector<Tensor>& basis);
StandardResult is_standard(const QuadraticAlgebra& a);

// R(A^theta) = (id (x) theta^-1)(R).
QuadraticAlgebra zhang_twist(const QuadraticAlgebra& a, const LinearMap& theta);

struct FrobeniusData {
    std::vector<std::size_t> dims;  // dim A^!_n for n = 0..4
    RelationSpace perp;             // R^perp inside V*(x)V*
    std::vector<SparseEchelon> ideal;  // echelon basis of the dual ideal in degrees 0..4
    std::vector<std::vector<std::uint32_t>> normal_words;  // standard monomials per degree
};

FrobeniusData quadratic_dual(const QuadraticAlgebra& a);

struct NakayamaResult {
    LinearMap nu;  // induced map on V, comparable with the catalog matrices
};

NakayamaResult nakayama(const QuadraticAlgebra& a);

std::vector<std::size_t> hilbert_dims(const QuadraticAlgebra& a, int max_degree);

// (g (x) g)(R_A) == R_B.
bool relations_equal_up_to(const QuadraticAlgebra& a, const QuadraticAlgebra& b, const LinearMap& g);

// Degree-n piece of the two-sided ideal generated by a degree-2 subspace.
SparseEchelon ideal_component(const RelationSpace& r, int n);

}  // namespace asreg
