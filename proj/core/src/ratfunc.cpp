#include "qpc/ratfunc.hpp"

#include "qpc/error.hpp"

namespace qpc {

RatFuncN::RatFuncN(PolyN num, PolyN den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFuncN: zero denominator");
    reduce();
}

void RatFuncN::reduce() {
    if (num_.is_zero()) {
        den_ = PolyN(1);
        return;
    }
    PolyN g = PolyN::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    BigRational lead = den_.leading();
    if (lead != 1) {
        den_ = den_.monic();
        std::vector<BigRational> cs = num_.coeffs();
        for (auto& c : cs) c /= lead;
        num_ = PolyN(std::move(cs));
    }
}

PolyN RatFuncN::as_polynomial() const {
    if (den_.degree() != 0) throw std::domain_error("as_polynomial: nonconstant denominator");
    return num_;  // den is monic constant = 1
}

RatFuncN RatFuncN::operator-() const {
    RatFuncN out(*this);
    out.num_ = -out.num_;
    return out;
}

RatFuncN& RatFuncN::operator+=(const RatFuncN& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFuncN& RatFuncN::operator-=(const RatFuncN& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFuncN& RatFuncN::operator*=(const RatFuncN& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RatFuncN& RatFuncN::operator/=(const RatFuncN& o) {
    if (o.is_zero()) throw std::domain_error("RatFuncN: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

BigRational RatFuncN::eval(const BigRational& x) const {
    BigRational d = den_.eval(x);
    if (qpc::is_zero(d))
        throw specialization_error("denominator " + den_.str() + " vanishes at N=" + rational_str(x));
    return num_.eval(x) / d;
}

bool RatFuncN::defined_at(const BigRational& x) const { return !qpc::is_zero(den_.eval(x)); }

std::string RatFuncN::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qpc
