#ifndef LIECLASS_TESTS_SUPPORT_HPP
#define LIECLASS_TESTS_SUPPORT_HPP

#include "lieclass/diffop.hpp"

#include <initializer_list>

namespace lieclass::testing {

inline RatFunc rf(long num) { return RatFunc(Rat(num)); }
inline RatFunc rf(long num, long den) { return RatFunc(Rat(num, den)); }
inline RatFunc rx() { return RatFunc::var_x(); }
inline RatFunc ry() { return RatFunc::var_y(); }

// q(p, q) = p/q as rational functions of x, y built by small expressions
struct OpTerm {
    unsigned i, j;
    RatFunc c;
};

inline DiffOp op(std::initializer_list<OpTerm> ts) {
    DiffOp d;
    for (auto& t : ts) d.set_coeff(t.i, t.j, d.coeff(t.i, t.j) + t.c);
    return d;
}

inline DiffOp dpow(unsigned i, unsigned j) { return DiffOp::mono(i, j); }

}  // namespace lieclass::testing

#endif
