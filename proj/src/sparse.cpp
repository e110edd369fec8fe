#include "asreg/sparse.hpp"

namespace asreg {

void axpy(SparseVector& v, const Scalar& f, const SparseVector& row) {
    for (const auto& [col, s] : row) {
        auto [it, inserted] = v.try_emplace(col, f * s);
        if (!inserted) {
            it->second += f * s;
            if (it->second.is_zero()) v.erase(it);
        } else if (it->second.is_zero()) {
            v.erase(it);
        }
    }
}

SparseVector SparseEchelon::reduce(SparseVector v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        const std::uint32_t col = it->first;
        const Scalar f = -it->second;
        axpy(v, f, row->second);
        it = v.upper_bound(col);
    }
    return v;
}

bool SparseEchelon::insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Scalar lead_inv = v.begin()->second.inverse();
    for (auto& [col, s] : v) s *= lead_inv;
    const std::uint32_t pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

}  // namespace asreg
