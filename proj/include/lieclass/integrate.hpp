#ifndef LIECLASS_INTEGRATE_HPP
#define LIECLASS_INTEGRATE_HPP

#include "lieclass/ratfunc.hpp"

#include <optional>
#include <vector>

namespace lieclass {

struct LogTerm {
    RatFunc coeff;  // residue; a rational function of the non-integration variable
    Poly arg;       // primitive polynomial argument of the logarithm
};

// Antiderivative of a rational function with respect to x:
//   integrand = d/dx(rational_part + sum coeff_i * log(arg_i)) + residual.
// The residual is present exactly when some residue would require an
// algebraic extension of the rationals.
struct IntegralX {
    RatFunc rational_part;
    std::vector<LogTerm> log_terms;
    std::optional<RatFunc> residual;

    bool closed_form() const { return !residual.has_value(); }
    // d/dx of the integrated part (for verification).
    RatFunc derivative_x() const;
};

IntegralX integrate_x(const RatFunc& f);
// Same computation with the roles of x and y exchanged; residues are then
// rational functions of x and derivative_x is read as d/dy.
IntegralX integrate_y(const RatFunc& f);

}  // namespace lieclass

#endif
