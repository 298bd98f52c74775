#include "cablefloer/gf2.hpp"

#include <bit>

namespace cablefloer {

void BitVec::xor_with(const BitVec& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
}

bool BitVec::any() const {
    for (auto x : w_)
        if (x) return true;
    return false;
}

std::optional<size_t> BitVec::lowest() const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return k * 64 + static_cast<size_t>(std::countr_zero(w_[k]));
    return std::nullopt;
}

std::optional<size_t> BitVec::highest() const {
    for (size_t k = w_.size(); k-- > 0;)
        if (w_[k]) return k * 64 + 63 - static_cast<size_t>(std::countl_zero(w_[k]));
    return std::nullopt;
}

void EchelonBasis::reduce(BitVec& v) const {
    // Each row has its pivot as lowest bit, so one upward sweep clears every pivot position.
    auto lo = v.lowest();
    if (!lo) return;
    for (size_t i = *lo; i < n_; ++i) {
        if (!v.get(i)) continue;
        long r = pivot_row_[i];
        if (r >= 0) v.xor_with(rows_[static_cast<size_t>(r)]);
    }
}

bool EchelonBasis::insert(BitVec v) {
    reduce(v);
    if (!v.any()) return false;
    size_t p = *v.lowest();
    pivot_row_[p] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

bool EchelonBasis::contains(BitVec v) const {
    reduce(v);
    return !v.any();
}

size_t gf2_rank(const std::vector<BitVec>& vs, size_t n) {
    EchelonBasis b(n);
    for (const auto& v : vs) b.insert(v);
    return b.rank();
}

std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& cols, size_t n) {
    size_t m = cols.size();
    // Echelon reduction of the column vectors while tracking their combinations.
    std::vector<BitVec> rows;
    std::vector<BitVec> combos;
    std::vector<long> pivot(n, -1);
    std::vector<BitVec> kernel;
    for (size_t j = 0; j < m; ++j) {
        BitVec v = cols[j];
        BitVec c(m);
        c.set(j);
        if (auto lo = v.lowest()) {
            for (size_t i = *lo; i < n; ++i) {
                if (!v.get(i) || pivot[i] < 0) continue;
                v.xor_with(rows[static_cast<size_t>(pivot[i])]);
                c.xor_with(combos[static_cast<size_t>(pivot[i])]);
            }
        }
        if (auto lo = v.lowest()) {
            pivot[*lo] = static_cast<long>(rows.size());
            rows.push_back(std::move(v));
            combos.push_back(std::move(c));
        } else {
            kernel.push_back(std::move(c));
        }
    }
    return kernel;
}

}  // namespace cablefloer
