#ifndef LIECLASS_LINALG_HPP
#define LIECLASS_LINALG_HPP

#include "lieclass/ratfunc.hpp"

#include <optional>
#include <vector>

namespace lieclass {

// Dense matrices over Q(x,y). Elimination is deterministic: pivots are the
// first nonzero entry scanning rows top-down, columns left-right.
using Row = std::vector<RatFunc>;
using Mat = std::vector<Row>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Solve A x = b. Returns a solution with all free variables set to zero
// (so the support prefers the leftmost columns), or nullopt if inconsistent.
std::optional<Row> solve(Mat a, Row b);

// Basis of the right nullspace of A (each vector has size = #columns).
std::vector<Row> nullspace(Mat a);

}  // namespace lieclass

#endif
