#ifndef KCANON_LAURENT_HPP
#define KCANON_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "kcanon/errors.hpp"

namespace kcanon {

using Int = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial over Z in the formal variable v.
// Canonical form: the coefficient map never stores a zero, so equality of
// the maps is equality of polynomials.
class LaurentPoly {
public:
    using Map = std::map<std::int64_t, Int>;

    LaurentPoly() = default;

    // c * v^k
    static LaurentPoly monomial(Int c, std::int64_t k = 0);
    static LaurentPoly one() { return monomial(1, 0); }
    // (-v)^k, any integer k
    static LaurentPoly minus_v_pow(std::int64_t k);

    bool is_zero() const { return coeffs_.empty(); }
    const Map& coeffs() const { return coeffs_; }
    Int coeff(std::int64_t k) const;

    // Lowest/highest exponent with nonzero coefficient; requires !is_zero().
    std::int64_t min_exp() const;
    std::int64_t max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly operator-() const;

    LaurentPoly scaled(const Int& c) const;
    // Multiply by v^k (exponent shift).
    LaurentPoly shifted(std::int64_t k) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ < b.coeffs_;
    }

    // Substitute v := 1 (sum of coefficients).
    Int eval_at_one() const;

    // v -> v^{-1} on every term.
    LaurentPoly bar() const;

    // True iff every exponent in the support is <= -1 (zero passes).
    bool is_strictly_negative() const;

    // Readable form, terms in descending exponent order, e.g. "v^-1 + v^-3".
    std::string str() const;

    void set_coeff(std::int64_t k, Int c);

private:
    Map coeffs_;
};

// The unique g in v^{-1}Z[v^{-1}] with g - bar(g) = f.
// Throws NotAntiInvariant unless bar(f) == -f.
LaurentPoly solve_antiinvariant(const LaurentPoly& f);

} // namespace kcanon

#endif
