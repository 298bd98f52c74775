#include "cablefloer/laurent.hpp"

#include <cstdlib>
#include <numeric>

#include "cablefloer/error.hpp"

namespace cablefloer {

Laurent Laurent::monomial(int64_t coeff, int64_t exp) {
    Laurent l;
    l.add_term(coeff, exp);
    return l;
}

void Laurent::add_term(int64_t coeff, int64_t exp) {
    if (coeff == 0) return;
    auto& v = c_[exp];
    v += coeff;
    if (v == 0) c_.erase(exp);
}

int64_t Laurent::coeff(int64_t e) const {
    auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
}

int64_t Laurent::min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
int64_t Laurent::max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

int64_t Laurent::eval_at_one() const {
    int64_t s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.c_) r.add_term(c, e);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.c_) r.add_term(-c, e);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) r.add_term(c1 * c2, e1 + e2);
    return r;
}

Laurent Laurent::shift(int64_t k) const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

Laurent Laurent::substitute(int64_t p) const {
    Laurent r;
    for (auto& [e, c] : c_) r.add_term(c, e * p);
    return r;
}

bool Laurent::is_symmetric() const {
    for (auto& [e, c] : c_)
        if (coeff(-e) != c) return false;
    return true;
}

Laurent Laurent::symmetrized() const {
    if (c_.empty()) return *this;
    int64_t s = min_exp() + max_exp();
    if (s % 2 != 0) throw Error(ErrorKind::Domain, "polynomial has odd span, cannot symmetrize");
    return shift(-s / 2);
}

Laurent Laurent::divexact(const Laurent& d) const {
    if (d.is_zero()) throw Error(ErrorKind::Domain, "division by zero polynomial");
    Laurent rem = *this, quo;
    int64_t dlead = d.max_exp();
    int64_t dc = d.coeff(dlead);
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= d.max_exp() - d.min_exp()) {
        int64_t e = rem.max_exp();
        int64_t c = rem.coeff(e);
        if (c % dc != 0) break;
        Laurent m = monomial(c / dc, e - dlead);
        quo = quo + m;
        rem = rem - m * d;
    }
    if (!rem.is_zero()) throw Error(ErrorKind::Domain, "polynomial division has nonzero remainder");
    return quo;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [e, c] = *it;
        int64_t a = std::llabs(c);
        if (c < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (e == 0) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1) s += std::to_string(a);
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Laurent torus_alexander(int64_t p, int64_t q) {
    p = std::llabs(p);
    q = std::llabs(q);
    if (p == 0 || q == 0 || std::gcd(p, q) != 1) throw Error(ErrorKind::Domain, "torus knot needs coprime nonzero p,q");
    if (p == 1 || q == 1) return Laurent::constant(1);
    Laurent one = Laurent::constant(1);
    Laurent num = (Laurent::monomial(1, p * q) - one) * (Laurent::monomial(1, 1) - one);
    Laurent den = (Laurent::monomial(1, p) - one) * (Laurent::monomial(1, q) - one);
    return num.divexact(den).symmetrized();
}

Laurent cable_alexander(const Laurent& delta_k, int64_t p, int64_t q) {
    return (delta_k.substitute(p) * torus_alexander(p, q)).symmetrized();
}

}  // namespace cablefloer
