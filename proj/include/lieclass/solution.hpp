#ifndef LIECLASS_SOLUTION_HPP
#define LIECLASS_SOLUTION_HPP

#include "lieclass/diffop.hpp"
#include "lieclass/integrate.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieclass {

struct ApplyToResidual : std::runtime_error {
    ApplyToResidual() : std::runtime_error("cannot differentiate an unevaluated quadrature") {}
};

// Opaque unevaluated integral factor: quad = ∫ integrand d(var), or
// exp(∫ integrand d(var)) when in_exp. Differentiation is only defined in
// the integration variable.
struct Quad {
    char var = 'x';
    RatFunc integrand;
    bool in_exp = false;
    friend bool operator==(const Quad&, const Quad&) = default;
};

enum class BaseKind { One, Func, Constant };

// One summand of a closed-form solution: a rational coefficient times
// optional scalar factors exp(arg), prod arg^e, prod log(arg)^m, an optional
// quadrature, and a base symbol (1, f^(j)(y), or a free constant C_k).
struct SolTerm {
    RatFunc coeff = RatFunc(1);
    RatFunc exp_arg;                 // exp(exp_arg); zero argument = factor 1
    std::map<Poly, RatFunc> pows;    // arg^e with non-integer exponent e
    std::map<Poly, unsigned> logs;   // log(arg)^m
    BaseKind kind = BaseKind::One;
    int index = 0;                   // Func: derivative order; Constant: id
    std::optional<Quad> quad;

    bool scalar_factors_trivial() const { return exp_arg.is_zero() && pows.empty() && logs.empty() && !quad; }
    friend bool operator==(const SolTerm&, const SolTerm&) = default;
};

class SolutionExpr {
public:
    SolutionExpr() = default;
    static SolutionExpr zero() { return {}; }
    static SolutionExpr one() { return from_ratfunc(RatFunc(1)); }
    static SolutionExpr from_ratfunc(RatFunc c);
    static SolutionExpr func(int deriv_order, RatFunc coeff = RatFunc(1));
    static SolutionExpr constant(int id, RatFunc coeff = RatFunc(1));
    // exp(of the integral): exp(rational_part + sum c_i log p_i) + quad residual
    static SolutionExpr exp_of_integral_x(const IntegralX& ix);
    static SolutionExpr exp_of_integral_y(const IntegralX& iy);

    const std::vector<SolTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_quadrature() const;

    SolutionExpr operator-() const;
    SolutionExpr operator+(const SolutionExpr& o) const;
    SolutionExpr operator-(const SolutionExpr& o) const;
    SolutionExpr& operator+=(const SolutionExpr& o) { *this = *this + o; return *this; }
    SolutionExpr scaled(const RatFunc& c) const;
    // product; at most one factor may carry Func/Constant bases per term pair
    SolutionExpr operator*(const SolutionExpr& o) const;

    SolutionExpr derive(char var) const;  // 'x' or 'y'

    // max derivative order of the arbitrary function, -1 if absent
    int max_func_derivative() const;
    std::vector<int> constant_ids() const;

    // substitute f^(j) -> d^j/dy^j of expr (expr must be Func/Constant-free)
    SolutionExpr substitute_func(const SolutionExpr& expr) const;

    std::string str(const std::string& func_name = "f") const;

    friend bool operator==(const SolutionExpr& a, const SolutionExpr& b) {
        return a.terms_ == b.terms_;
    }

    void push_term(SolTerm t);  // normalizing insert

private:
    std::vector<SolTerm> terms_;  // kept normalized and canonically sorted
    void normalize();
};

SolutionExpr op_apply(const DiffOp& a, const SolutionExpr& e);

// Termwise integration in x (f^(j) and constants are x-independent).
// Terms whose scalar factors depend on x in a non-rational way produce
// quadrature terms.
SolutionExpr integrate_expr_x(const SolutionExpr& e);
// Termwise integration in y, using integration by parts on f^(j) factors.
SolutionExpr integrate_expr_y(const SolutionExpr& e);

}  // namespace lieclass

#endif
