#ifndef LIECLASS_DIFFOP_HPP
#define LIECLASS_DIFFOP_HPP

#include "lieclass/ratfunc.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieclass {

struct ZeroOperator : std::runtime_error {
    ZeroOperator() : std::runtime_error("zero operator has no symbol") {}
};
struct ZeroGauge : std::runtime_error {
    ZeroGauge() : std::runtime_error("conjugation by zero") {}
};

// Derivative monomial Dx^i Dy^j. The term order used throughout the formal
// theory is graded with Dy-degree major: compare total order, then j.
struct DMono {
    unsigned i = 0, j = 0;
    unsigned ord() const { return i + j; }
    friend bool operator==(const DMono&, const DMono&) = default;
};

struct DMonoOrder {
    bool operator()(const DMono& a, const DMono& b) const {
        if (a.ord() != b.ord()) return a.ord() < b.ord();
        return a.j < b.j;
    }
};

// Homogeneous binary form of the symbol variables: coeffs[k] multiplies
// xi^k eta^(degree-k), xi dual to Dx.
struct BinaryForm {
    unsigned degree = 0;
    std::vector<RatFunc> coeffs;  // size degree+1

    bool is_zero() const;
    BinaryForm operator*(const BinaryForm& o) const;
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
    std::string str() const;
};

// Linear differential operator in Dx, Dy over Q(x,y). Coefficients sit to
// the left of the derivative monomials; op_mul performs the full Leibniz
// expansion, so the invariant "no zero coefficients stored" is maintained
// by every operation.
class DiffOp {
public:
    using Terms = std::map<DMono, RatFunc, DMonoOrder>;

    DiffOp() = default;
    explicit DiffOp(RatFunc c) { if (!c.is_zero()) terms_[{0, 0}] = std::move(c); }

    static DiffOp mono(unsigned i, unsigned j, RatFunc c = RatFunc(1));
    static DiffOp dx() { return mono(1, 0); }
    static DiffOp dy() { return mono(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const { return terms_.empty() ? -1 : int(terms_.rbegin()->first.ord()); }
    DMono leading_mono() const;   // requires nonzero
    RatFunc leading_coeff() const;
    RatFunc coeff(unsigned i, unsigned j) const;
    void set_coeff(unsigned i, unsigned j, RatFunc c);

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp& operator+=(const DiffOp& o) { *this = *this + o; return *this; }
    DiffOp& operator-=(const DiffOp& o) { *this = *this - o; return *this; }
    DiffOp scaled(const RatFunc& c) const;
    DiffOp monic() const;

    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    Terms terms_;
};

// Operator composition a∘b with full Leibniz expansion.
DiffOp op_mul(const DiffOp& a, const DiffOp& b);
// Exact application to a rational function.
RatFunc op_apply(const DiffOp& a, const RatFunc& f);
// sigma^{-1} ∘ a ∘ sigma.
DiffOp conjugate(const DiffOp& a, const RatFunc& sigma);
// Principal symbol as a binary form of degree order(a).
BinaryForm principal_symbol(const DiffOp& a);
// Replace x<->y in all coefficients and swap Dx<->Dy.
DiffOp op_swap_xy(const DiffOp& a);

// First-order frame X = Dx + a, Y = Dy + b (order-1 parts fixed as Dx, Dy).
struct Frame {
    RatFunc a, b;
    DiffOp X() const;
    DiffOp Y() const;
    friend bool operator==(const Frame&, const Frame&) = default;
};

// Framed coefficient map of a in ordered monomials Y^j X^i (Y to the left):
// key (j, i). Round-trips exactly with frame_expand.
using FramedOp = std::map<std::pair<unsigned, unsigned>, RatFunc>;
FramedOp rewrite_in_frame(const DiffOp& a, const Frame& fr);
DiffOp frame_expand(const FramedOp& fo, const Frame& fr);

// Right division by X = Dx + a: f = quot ∘ X + rem with rem free of Dx.
// rem is exactly the pure-Y part of the framed expansion when fr.b = 0.
struct RightDiv {
    DiffOp quot, rem;
};
RightDiv right_divide_x(const DiffOp& f, const RatFunc& a);

}  // namespace lieclass

#endif
