#ifndef LIECLASS_PARSE_HPP
#define LIECLASS_PARSE_HPP

#include "lieclass/diffop.hpp"

#include <map>
#include <string>
#include <vector>

namespace lieclass {

struct ParseError : std::runtime_error {
    int line, col;
    std::string code;  // "syntax", "nonlinear", "unknown-symbol", "inhomogeneous"
    ParseError(std::string code_, int line_, int col_, const std::string& what_)
        : std::runtime_error(what_ + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_), col(col_), code(std::move(code_)) {}
};

struct InputDocument {
    std::string unknown = "u";
    std::vector<DiffOp> equations;            // lhs - rhs, linear homogeneous in u
    std::map<std::string, std::string> options;  // @key value directives
};

// Parse a .pde document: '#' comments, one equation per line, '=' optional
// (a bare expression is an equation equal to zero), directives '@key value'.
InputDocument parse_document(const std::string& text);

// Parse a single scalar expression in x, y (no unknown); the shared grammar:
// integers, x, y, + - * / ^, parentheses, ^ with nonnegative integer exponents.
RatFunc parse_ratfunc(const std::string& text);

// Parse one operator expression; tokens Dx, Dy are accepted alongside
// u-derivative notation, e.g. "Dx^2*Dy + (x/y)*Dx" or "u_xxy + y*u_x".
DiffOp parse_operator(const std::string& text, const std::string& unknown = "u");

std::string render_document(const InputDocument& doc);  // print form, reparsable

}  // namespace lieclass

#endif
