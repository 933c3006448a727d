#include "lieclass/ratfunc.hpp"

#include <sstream>

namespace lieclass {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) { den_ = Poly(1); return; }
    if (!den_.is_one()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    Rat lc = den_.leading_coeff();
    if (lc != 1) {
        den_ = den_.divided_by(lc);
        num_ = num_.divided_by(lc);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // cross-cancel first to keep intermediates small
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : num_.exact_div(g1);
    Poly d2 = g1.is_constant() ? o.den_ : o.den_.exact_div(g1);
    Poly n2 = g2.is_constant() ? o.num_ : o.num_.exact_div(g2);
    Poly d1 = g2.is_constant() ? den_ : den_.exact_div(g2);
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derive_x() const {
    if (den_.is_one()) return RatFunc(num_.derive_x());
    return RatFunc(num_.derive_x() * den_ - num_ * den_.derive_x(), den_ * den_);
}

RatFunc RatFunc::derive_y() const {
    if (den_.is_one()) return RatFunc(num_.derive_y());
    return RatFunc(num_.derive_y() * den_ - num_ * den_.derive_y(), den_ * den_);
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    bool np = num_.terms().size() > 1;
    os << (np ? "(" : "") << num_.str() << (np ? ")" : "");
    os << "/";
    // the denominator is monic, so a single term is unambiguous unless it
    // mixes both variables
    Mono lm = den_.leading_mono();
    bool dp = den_.terms().size() > 1 || (lm.i > 0 && lm.j > 0);
    os << (dp ? "(" : "") << den_.str() << (dp ? ")" : "");
    return os.str();
}

}  // namespace lieclass
