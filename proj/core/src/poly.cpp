#include "qpc/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qpc {

PolyN::PolyN(std::initializer_list<long> low_to_high) {
    coeffs_.reserve(low_to_high.size());
    for (long v : low_to_high) coeffs_.push_back(make_rational(v));
    trim();
}

PolyN PolyN::variable() { return monomial(1); }

PolyN PolyN::monomial(int degree, const BigRational& coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    PolyN p;
    if (qpc::is_zero(coeff)) return p;
    p.coeffs_.assign(degree + 1, BigRational(0));
    p.coeffs_[degree] = coeff;
    return p;
}

void PolyN::trim() {
    while (!coeffs_.empty() && qpc::is_zero(coeffs_.back())) coeffs_.pop_back();
}

const BigRational& PolyN::coeff(int d) const {
    static const BigRational zero(0);
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[d];
}

const BigRational& PolyN::leading() const {
    if (is_zero()) throw std::logic_error("leading() of zero polynomial");
    return coeffs_.back();
}

PolyN PolyN::operator-() const {
    PolyN out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

PolyN& PolyN::operator+=(const PolyN& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyN& PolyN::operator-=(const PolyN& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyN operator*(const PolyN& a, const PolyN& b) {
    if (a.is_zero() || b.is_zero()) return {};
    PolyN out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (qpc::is_zero(a.coeffs_[i])) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (qpc::is_zero(b.coeffs_[j])) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

PolyN& PolyN::operator*=(const PolyN& o) {
    *this = *this * o;
    return *this;
}

BigRational PolyN::eval(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void PolyN::divmod(const PolyN& a, const PolyN& b, PolyN& q, PolyN& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = PolyN();
    r = a;
    const int db = b.degree();
    const BigRational& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int d = r.degree() - db;
        BigRational c = r.leading() / lb;
        // q += c*N^d; r -= c*N^d * b
        if (q.coeffs_.size() < static_cast<size_t>(d + 1)) q.coeffs_.resize(d + 1, BigRational(0));
        q.coeffs_[d] += c;
        for (int i = 0; i <= db; ++i) r.coeffs_[d + i] -= c * b.coeffs_[i];
        r.trim();
    }
    q.trim();
}

PolyN PolyN::divexact(const PolyN& b) const {
    PolyN q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::domain_error("divexact: inexact polynomial division");
    return q;
}

PolyN PolyN::gcd(PolyN a, PolyN b) {
    while (!b.is_zero()) {
        PolyN q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

BigRational PolyN::content() const {
    if (is_zero()) return BigRational(0);
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        if (qpc::is_zero(c)) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    BigRational out(num_gcd, den_lcm);
    out.canonicalize();
    return out;
}

PolyN PolyN::primitive_part() const {
    if (is_zero()) return *this;
    BigRational c = content();
    PolyN out(*this);
    for (auto& x : out.coeffs_) x /= c;
    return out;
}

PolyN PolyN::monic() const {
    if (is_zero()) return *this;
    PolyN out(*this);
    BigRational l = leading();
    for (auto& x : out.coeffs_) x /= l;
    return out;
}

std::string PolyN::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const BigRational& c = coeffs_[d];
        if (qpc::is_zero(c)) continue;
        BigRational a = c;
        if (first) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) < 0 ? "-" : "+");
            if (sgn(a) < 0) a = -a;
        }
        bool unit = (a == 1);
        if (d == 0 || !unit) os << rational_str(a);
        if (d > 0) {
            if (!unit) os << "*";
            os << "N";
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

int PolyN::cmp(const PolyN& a, const PolyN& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int d = a.degree(); d >= 0; --d) {
        int c = ::cmp(a.coeffs_[d], b.coeffs_[d]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace qpc
