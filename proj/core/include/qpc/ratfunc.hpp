#pragma once

#include <string>

#include "qpc/poly.hpp"

namespace qpc {

// Element of Q(N), kept reduced: den monic, gcd(num, den) = 1.
class RatFuncN {
  public:
    RatFuncN() : num_(), den_(1) {}
    RatFuncN(long v) : num_(v), den_(1) {}
    RatFuncN(const BigRational& v) : num_(v), den_(1) {}
    RatFuncN(PolyN p) : num_(std::move(p)), den_(1) {}
    RatFuncN(PolyN num, PolyN den);

    const PolyN& num() const { return num_; }
    const PolyN& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // numerator scaled by the constant denominator; throws if den has positive degree
    PolyN as_polynomial() const;

    RatFuncN operator-() const;
    RatFuncN& operator+=(const RatFuncN& o);
    RatFuncN& operator-=(const RatFuncN& o);
    RatFuncN& operator*=(const RatFuncN& o);
    RatFuncN& operator/=(const RatFuncN& o);
    friend RatFuncN operator+(RatFuncN a, const RatFuncN& b) { return a += b; }
    friend RatFuncN operator-(RatFuncN a, const RatFuncN& b) { return a -= b; }
    friend RatFuncN operator*(RatFuncN a, const RatFuncN& b) { return a *= b; }
    friend RatFuncN operator/(RatFuncN a, const RatFuncN& b) { return a /= b; }
    friend bool operator==(const RatFuncN& a, const RatFuncN& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // throws specialization_error when the denominator vanishes at x
    BigRational eval(const BigRational& x) const;
    bool defined_at(const BigRational& x) const;

    std::string str() const;  // "num" or "(num)/(den)"

  private:
    void reduce();
    PolyN num_, den_;
};

}  // namespace qpc
