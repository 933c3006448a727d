#ifndef LIECLASS_UPOLY_HPP
#define LIECLASS_UPOLY_HPP

#include "lieclass/ratfunc.hpp"

#include <utility>
#include <vector>

namespace lieclass {

// Dense univariate polynomial over the field Q(x,y). The main variable is
// abstract; callers keep track of what it stands for (x, y or a resultant
// variable). Coefficient index = power of the main variable.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(RatFunc c) { c_.push_back(std::move(c)); trim(); }
    explicit UPoly(std::vector<RatFunc> c) : c_(std::move(c)) { trim(); }

    static UPoly shift(unsigned k, RatFunc c = RatFunc(1));  // c * t^k

    const std::vector<RatFunc>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    const RatFunc& lc() const { return c_.back(); }
    RatFunc coeff(unsigned k) const { return k < c_.size() ? c_[k] : RatFunc(); }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const RatFunc& c) const;
    UPoly monic() const;

    friend bool operator==(const UPoly&, const UPoly&) = default;

    // Formal derivative in the main variable.
    UPoly derivative() const;
    // Coefficient-wise antiderivative in the main variable.
    UPoly antiderivative() const;

    RatFunc eval(const RatFunc& t) const;

    // Division with remainder (field coefficients).
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

private:
    std::vector<RatFunc> c_;
    void trim();
};

UPoly upoly_gcd(UPoly a, UPoly b);                      // monic gcd
RatFunc upoly_resultant(UPoly a, UPoly b);
std::vector<std::pair<UPoly, unsigned>> upoly_squarefree(const UPoly& a);

}  // namespace lieclass

#endif
