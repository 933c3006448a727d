#include "lieclass/upoly.hpp"

#include <cassert>

namespace lieclass {

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::shift(unsigned k, RatFunc c) {
    UPoly p;
    if (!c.is_zero()) {
        p.c_.assign(k + 1, RatFunc());
        p.c_[k] = std::move(c);
    }
    return p;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r = *this;
    if (o.c_.size() > r.c_.size()) r.c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) r.c_[k] += o.c_[k];
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    UPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, RatFunc());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UPoly UPoly::scaled(const RatFunc& c) const {
    if (c.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& v : r.c_) v *= c;
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inverse());
}

UPoly UPoly::derivative() const {
    UPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = RatFunc(Rat(long(k))) * c_[k];
    r.trim();
    return r;
}

UPoly UPoly::antiderivative() const {
    UPoly r;
    if (is_zero()) return r;
    r.c_.resize(c_.size() + 1);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k + 1] = c_[k] / RatFunc(Rat(long(k + 1)));
    r.trim();
    return r;
}

RatFunc UPoly::eval(const RatFunc& t) const {
    RatFunc s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + *it;
    return s;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    assert(!b.is_zero());
    UPoly q, r = a;
    RatFunc binv = b.lc().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        unsigned k = unsigned(r.degree() - b.degree());
        RatFunc c = r.lc() * binv;
        UPoly t = UPoly::shift(k, c);
        q = q + t;
        r = r - b * t;
    }
    return {q, r};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = UPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatFunc upoly_resultant(UPoly a, UPoly b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    RatFunc res(1);
    bool neg = false;
    while (b.degree() > 0) {
        UPoly r = UPoly::divmod(a, b).second;
        int m = a.degree(), n = b.degree(), d = r.degree();
        if ((m & 1) && (n & 1)) neg = !neg;
        RatFunc lb = b.lc();
        for (int k = 0; k < m - (d < 0 ? 0 : d); ++k) res *= lb;
        if (r.is_zero()) return RatFunc();  // common factor
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant now
    RatFunc c = b.coeff(0);
    for (int k = 0; k < a.degree(); ++k) res *= c;
    return neg ? -res : res;
}

std::vector<std::pair<UPoly, unsigned>> upoly_squarefree(const UPoly& a) {
    std::vector<std::pair<UPoly, unsigned>> out;
    if (a.is_zero() || a.degree() == 0) return out;
    std::vector<UPoly> chain;
    UPoly b = a.monic();
    while (b.degree() > 0) {
        UPoly g = upoly_gcd(b, b.derivative());
        chain.push_back(UPoly::divmod(b, g).first.monic());
        b = g;
    }
    for (unsigned t = 0; t < chain.size(); ++t) {
        UPoly f = (t + 1 < chain.size()) ? UPoly::divmod(chain[t], chain[t + 1]).first.monic()
                                         : chain[t];
        if (f.degree() > 0) out.push_back({f, t + 1});
    }
    return out;
}

}  // namespace lieclass
