#pragma once
#include <cstdint>
#include <optional>
#include <vector>

namespace cablefloer {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool get(size_t i) const { return w_[i >> 6] >> (i & 63) & 1u; }
    void set(size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
    void xor_with(const BitVec& o);
    bool any() const;
    std::optional<size_t> lowest() const;
    std::optional<size_t> highest() const;
    bool operator==(const BitVec& o) const = default;

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Incremental row-echelon basis of a subspace of F2^n.
class EchelonBasis {
public:
    explicit EchelonBasis(size_t n) : n_(n), pivot_row_(n, -1) {}

    // Reduces v in place against the basis; returns true if v was independent (and adds it).
    bool insert(BitVec v);
    bool contains(BitVec v) const;
    size_t rank() const { return rows_.size(); }

private:
    void reduce(BitVec& v) const;
    size_t n_;
    std::vector<BitVec> rows_;
    std::vector<long> pivot_row_;
};

size_t gf2_rank(const std::vector<BitVec>& vs, size_t n);

// Basis of {a in F2^m : sum_j a_j cols[j] = 0}, each cols[j] in F2^n.
std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& cols, size_t n);

}  // namespace cablefloer
