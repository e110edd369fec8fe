#pragma once

#include "asreg/field.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace asreg {

using SparseVector = std::map<std::uint32_t, Scalar>;

// Row echelon basis over sparse rows, keyed by pivot column. Each stored row
// is monic and has its pivot as its smallest column.
class SparseEchelon {
public:
    // Returns true when the vector was independent of the current rows.
    bool insert(SparseVector v);
    // Remainder of v modulo the span; supported on non-pivot columns only.
    SparseVector reduce(SparseVector v) const;

    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(std::uint32_t col) const { return rows_.count(col) != 0; }
    const std::map<std::uint32_t, SparseVector>& rows() const { return rows_; }

private:
    std::map<std::uint32_t, SparseVector> rows_;
};

void axpy(SparseVector& v, const Scalar& f, const SparseVector& row);

}  // namespace asreg
