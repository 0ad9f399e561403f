#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace handleknot {

using Int = boost::multiprecision::cpp_int;

struct ExpPair {
    long a = 0, b = 0;
    auto operator<=>(const ExpPair&) const = default;
};

// Elements of the group ring Z[t1^{±1}, t2^{±1}].
class LaurentPoly2 {
public:
    LaurentPoly2() = default;
    static LaurentPoly2 constant(Int c);
    static LaurentPoly2 monomial(Int c, long a, long b);

    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpPair, Int>& terms() const { return terms_; }
    Int coeff(long a, long b) const;
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly2 operator+(const LaurentPoly2&) const;
    LaurentPoly2 operator-(const LaurentPoly2&) const;
    LaurentPoly2 operator-() const;
    LaurentPoly2 operator*(const LaurentPoly2&) const;
    LaurentPoly2 operator*(const Int& c) const;
    LaurentPoly2& operator+=(const LaurentPoly2& g) { return *this = *this + g; }

    bool operator==(const LaurentPoly2&) const = default;

    void set(long a, long b, Int c);  // overwrite one coefficient

private:
    std::map<ExpPair, Int> terms_;  // nonzero coefficients only
};

// t1 -> t1^{-1}, t2 -> t2^{-1}
LaurentPoly2 involution_sigma(const LaurentPoly2& f);

// f(1,1)
Int augmentation_eval(const LaurentPoly2& f);

// The associate of f with nonnegative exponents, not divisible by t1 or t2,
// with positive coefficient on the lexicographically greatest exponent pair.
LaurentPoly2 preferred_generator(const LaurentPoly2& f);

// GCD in the UFD Λ, returned as its preferred generator.
LaurentPoly2 gcd_lambda(const LaurentPoly2& f, const LaurentPoly2& g);

// t1 -> t1^{m11} t2^{m21}, t2 -> t1^{m12} t2^{m22}; m must have det ±1.
LaurentPoly2 sl2_substitute(const LaurentPoly2& f,
                            const std::array<std::array<long, 2>, 2>& m);

// d | f in Λ (up to units); d must be nonzero.
bool divides_lambda(const LaurentPoly2& d, const LaurentPoly2& f);

// f = ±t1^a t2^b g for some monomial unit?
bool associates(const LaurentPoly2& f, const LaurentPoly2& g);

// Text syntax: sums of terms c*t1^a*t2^b; s,t accepted as input aliases for
// t1,t2.
LaurentPoly2 parse_poly(const std::string& text);
std::string format_poly(const LaurentPoly2& f);

}  // namespace handleknot
