#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qpc/rational.hpp"

namespace qpc {

// Univariate polynomial in the symbolic parameter N over Q.
// Coefficients stored low-to-high degree with no trailing zeros.
class PolyN {
  public:
    PolyN() = default;
    PolyN(long v) { if (v != 0) coeffs_.assign(1, make_rational(v)); }
    PolyN(const BigRational& v) { if (!qpc::is_zero(v)) coeffs_.assign(1, v); }
    explicit PolyN(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    PolyN(std::initializer_list<long> low_to_high);

    static PolyN variable();                 // N
    static PolyN monomial(int degree, const BigRational& coeff = BigRational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const BigRational& coeff(int d) const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    const BigRational& leading() const;
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    PolyN operator-() const;
    PolyN& operator+=(const PolyN& o);
    PolyN& operator-=(const PolyN& o);
    PolyN& operator*=(const PolyN& o);
    friend PolyN operator+(PolyN a, const PolyN& b) { return a += b; }
    friend PolyN operator-(PolyN a, const PolyN& b) { return a -= b; }
    friend PolyN operator*(const PolyN& a, const PolyN& b);
    friend bool operator==(const PolyN& a, const PolyN& b) { return a.coeffs_ == b.coeffs_; }

    BigRational eval(const BigRational& x) const;  // Horner

    // Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
    static void divmod(const PolyN& a, const PolyN& b, PolyN& q, PolyN& r);
    // Exact division; throws if the remainder is nonzero.
    PolyN divexact(const PolyN& b) const;
    // Monic gcd over Q[N]; gcd(0,0) = 0.
    static PolyN gcd(PolyN a, PolyN b);

    // gcd of numerators / lcm of denominators; positive. content(0) = 0.
    BigRational content() const;
    // this / content: integer coprime coefficients.
    PolyN primitive_part() const;
    PolyN monic() const;

    // "N^2-3*N+1"; zero prints "0".
    std::string str() const;

    // degree-then-lexicographic order, for deterministic containers
    static int cmp(const PolyN& a, const PolyN& b);
    friend bool operator<(const PolyN& a, const PolyN& b) { return cmp(a, b) < 0; }

  private:
    void trim();
    std::vector<BigRational> coeffs_;
};

}  // namespace qpc
