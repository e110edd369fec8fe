#pragma once

#include "asreg/field.hpp"
#include "asreg/matrix.hpp"
#include "asreg/tensor.hpp"

#include <map>
#include <string>

namespace asreg {

using Bindings = std::map<std::string, Scalar>;

// Scalar expression over rational literals, bound names, `zeta`, + - * /,
// integer powers `^` and `cbrt(...)`. The result is coerced into `field`.
Scalar evaluate(const std::string& text, const Bindings& bindings, const FieldSpec& field = FieldSpec::rationals());

// Potential grammar: terms joined by + and -, each a product of coefficient
// factors and letters x, y, z separated by `*`. Letters may carry a power
// (`x^2` means x*x). Text after `#` on a line is ignored.
Tensor parse_potential(const std::string& text, const Bindings& bindings = {},
                       const FieldSpec& field = FieldSpec::rationals());

// Nine comma-separated expressions, row-major.
Matrix parse_matrix(const std::string& text, const Bindings& bindings = {},
                    const FieldSpec& field = FieldSpec::rationals());

// "name=expr" pairs; each expression is evaluated with the pairs before it.
Bindings parse_bindings(const std::vector<std::string>& pairs, const FieldSpec& field = FieldSpec::rationals());

}  // namespace asreg
