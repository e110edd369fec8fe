#pragma once

#include "asreg/field.hpp"
#include "asreg/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace asreg {

enum class Var { x = 0, y = 1, z = 2 };

char letter(Var v);

// A word over {x, y, z}. Letters are packed base 3 with the first letter most
// significant, so comparing codes of equal-length words is lexicographic order.
class Word {
public:
    Word() = default;
    Word(std::uint32_t code, int length) : code_(code), length_(length) {}
    static Word parse(const std::string& letters);
    static Word of(std::initializer_list<Var> letters);

    std::uint32_t code() const { return code_; }
    int length() const { return length_; }
    Var at(int i) const;
    Word concat(const Word& tail) const;
    std::string str() const;

    auto operator<=>(const Word&) const = default;

private:
    std::uint32_t code_ = 0;
    int length_ = 0;
};

std::uint32_t pow3(int n);

// A homogeneous element of V^{(x)d}. Zero coefficients are never stored.
class Tensor {
public:
    explicit Tensor(int degree = 0) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    FieldSpec field() const;

    Scalar coeff(const Word& w) const;
    void add(const Word& w, const Scalar& c);
    void add_code(std::uint32_t code, const Scalar& c);

    Tensor operator-() const;
    Tensor scaled(const Scalar& s) const;
    friend Tensor operator+(const Tensor& a, const Tensor& b);
    friend Tensor operator-(const Tensor& a, const Tensor& b);
    friend bool operator==(const Tensor& a, const Tensor& b);
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    // Coordinates in V^{(x)d} with words in lexicographic order.
    std::vector<Scalar> coordinates() const;
    static Tensor from_coordinates(int degree, const std::vector<Scalar>& coords);

    // Scaled so the lexicographically smallest word has coefficient 1.
    Tensor normalized() const;

    // Grammar form, e.g. "2*x*y*z - x*z*y". Zero renders as "0".
    std::string str() const;

private:
    int degree_;
    std::map<std::uint32_t, Scalar> terms_;
};

Tensor monomial(const Word& w, const Scalar& c = 1);
// (v (x) t): prepend a letter.
Tensor left_multiply(Var v, const Tensor& t);
// Concatenation product of two tensors.
Tensor tensor_product(const Tensor& a, const Tensor& b);

using LinearMap = Matrix;  // 3x3, row convention: theta(x_i) = sum_j M(i, j) x_j

// phi(abc) = cab.
Tensor cyclic(const Tensor& w);
// w = x (x) w_x + y (x) w_y + z (x) w_z; returns w_v.
Tensor partial(const Tensor& w, Var v);
// Applies maps[k] to slot k of every word.
Tensor gl_apply(const Tensor& w, const std::vector<LinearMap>& maps);
// Same map on every slot.
Tensor gl_apply(const Tensor& w, const LinearMap& map);
// w^theta = (theta^2 (x) theta (x) id)(w).
Tensor ms_twist(const Tensor& w, const LinearMap& theta);

bool is_superpotential(const Tensor& w);

struct WitnessResult {
    enum class Status { found, none, undetermined_invertibility };
    Status status = Status::none;
    std::optional<LinearMap> theta;
    std::size_t solution_dimension = 0;  // affine dimension of the solution set

    bool found() const { return status == Status::found; }
};

// Solves (theta' (x) id (x) id)(phi(w)) = w for an invertible theta'.
WitnessResult twisted_witness(const Tensor& w);
bool is_witness(const Tensor& w, const LinearMap& theta);

// lambda with theta^{(x)3}(w) = lambda w, or nullopt when not proportional.
// Throws ZeroPotential and SingularMap.
std::optional<Scalar> aut_scalar(const Tensor& w, const LinearMap& theta);

// c with a = c * b, if any (b nonzero).
std::optional<Scalar> proportional(const Tensor& a, const Tensor& b);

LinearMap swap_map(Var a, Var b);

}  // namespace asreg
