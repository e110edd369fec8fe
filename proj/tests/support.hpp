#pragma once

#include "asreg/field.hpp"
#include "asreg/matrix.hpp"
#include "asreg/random.hpp"
#include "asreg/tensor.hpp"

#include <vector>

namespace asreg::testing {

inline const FieldSpec large_prime = FieldSpec::prime(1000003);

inline std::vector<FieldSpec> all_fields() {
    return {FieldSpec::rationals(), FieldSpec::cyclotomic3(), large_prime};
}

// A small random element of `f`, zero allowed.
inline Scalar random_scalar(Rng& rng, const FieldSpec& f) {
    auto q = [&rng] { return Scalar::rational(rng.between(-9, 9), rng.between(1, 5)); };
    switch (f.kind) {
        case FieldSpec::Kind::rationals: return q();
        case FieldSpec::Kind::cyclotomic3: return q() + q() * Scalar::zeta3();
        case FieldSpec::Kind::primefield: return Scalar::residue(rng.below(f.modulus), f.modulus);
    }
    return 0;
}

inline Scalar random_nonzero(Rng& rng, const FieldSpec& f) {
    for (;;) {
        Scalar s = random_scalar(rng, f);
        if (!s.is_zero()) return s;
    }
}

inline Matrix random_matrix(Rng& rng, const FieldSpec& f, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, f).in(f);
    return m;
}

inline Matrix random_invertible(Rng& rng, const FieldSpec& f) {
    for (;;) {
        Matrix m = random_matrix(rng, f, 3, 3);
        if (m.invertible()) return m;
    }
}

inline Tensor random_tensor(Rng& rng, const FieldSpec& f, int degree) {
    std::vector<Scalar> coords(pow3(degree));
    for (Scalar& c : coords) c = rng.below(3) == 0 ? random_scalar(rng, f).in(f) : Scalar::zero(f);
    return Tensor::from_coordinates(degree, coords);
}

inline Matrix diag(const Scalar& a, const Scalar& b, const Scalar& c) {
    return Matrix::from_rows({{a, 0, 0}, {0, b, 0}, {0, 0, c}});
}

}  // namespace asreg::testing
