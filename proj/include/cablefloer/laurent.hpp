#pragma once
#include <cstdint>
#include <map>
#include <string>

namespace cablefloer {

// Integer Laurent polynomial in t.
class Laurent {
public:
    Laurent() = default;
    static Laurent monomial(int64_t coeff, int64_t exp);
    static Laurent constant(int64_t c) { return monomial(c, 0); }

    int64_t coeff(int64_t e) const;
    const std::map<int64_t, int64_t>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int64_t min_exp() const;
    int64_t max_exp() const;
    int64_t eval_at_one() const;

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    bool operator==(const Laurent& o) const = default;

    Laurent shift(int64_t k) const;       // t^k * this
    Laurent substitute(int64_t p) const;  // this(t^p)
    Laurent symmetrized() const;          // shift so that min = -max; throws if impossible
    bool is_symmetric() const;

    // Exact division; throws Domain error on a nonzero remainder.
    Laurent divexact(const Laurent& d) const;

    std::string str() const;  // "t-1+t^-1"

    void add_term(int64_t coeff, int64_t exp);

private:
    std::map<int64_t, int64_t> c_;
};

Laurent torus_alexander(int64_t p, int64_t q);
Laurent cable_alexander(const Laurent& delta_k, int64_t p, int64_t q);

}  // namespace cablefloer
