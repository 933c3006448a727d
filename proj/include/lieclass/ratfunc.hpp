#ifndef LIECLASS_RATFUNC_HPP
#define LIECLASS_RATFUNC_HPP

#include "lieclass/poly.hpp"

#include <stdexcept>

namespace lieclass {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

// Element of Q(x,y), kept fully cancelled with the denominator normalized to
// leading coefficient 1 (grlex, x before y). Equality is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly(1)) {}
    explicit RatFunc(const Rat& c) : num_(Poly(c)), den_(Poly(1)) {}
    explicit RatFunc(long c) : num_(Poly(c)), den_(Poly(1)) {}
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly(1)) {}
    RatFunc(Poly num, Poly den);

    static RatFunc var_x() { return RatFunc(Poly::var_x()); }
    static RatFunc var_y() { return RatFunc(Poly::var_y()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    Rat constant_value() const { return num_.constant_value(); }
    bool depends_on_x() const { return num_.depends_on_x() || den_.depends_on_x(); }
    bool depends_on_y() const { return num_.depends_on_y() || den_.depends_on_y(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
    RatFunc inverse() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    bool operator<(const RatFunc& o) const {
        if (num_ == o.num_) return den_ < o.den_;
        return num_ < o.num_;
    }

    RatFunc derive_x() const;
    RatFunc derive_y() const;
    RatFunc swap_xy() const { return RatFunc(num_.swap_xy(), den_.swap_xy()); }

    std::string str() const;

private:
    Poly num_, den_;
    void normalize();
};

inline RatFunc operator*(const Rat& c, const RatFunc& f) { return RatFunc(Rat(c)) * f; }

}  // namespace lieclass

#endif
