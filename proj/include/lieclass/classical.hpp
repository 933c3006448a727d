#ifndef LIECLASS_CLASSICAL_HPP
#define LIECLASS_CLASSICAL_HPP

#include "lieclass/diffop.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieclass {

struct ZeroInvariant : std::runtime_error {
    ZeroInvariant()
        : std::runtime_error("k0 = 0: an intermediate integral exists instead") {}
};

// u_xy + a u_x + b u_y + c u = 0 in characteristic coordinates.
struct HyperbolicE2 {
    RatFunc a, b, c;
    DiffOp op() const;  // Dx Dy + a Dx + b Dy + c
    friend bool operator==(const HyperbolicE2&, const HyperbolicE2&) = default;
};

RatFunc invariant_k0(const HyperbolicE2& e);  // b_y + a b - c
RatFunc invariant_h0(const HyperbolicE2& e);  // a_x + a b - c

// The y-side transform: requires k0 != 0; builds the transformed equation by
// operator composition and reads its coefficients back.
HyperbolicE2 laplace_transform_y(const HyperbolicE2& e);
// The x-side transform is the x<->y swap conjugate of the y-side one.
HyperbolicE2 laplace_transform_x(const HyperbolicE2& e);

enum class Truncation { HitZero, DepthReached };

struct LaplaceSeq {
    std::vector<RatFunc> k, h;  // k_0, k_1, ... and h_0, h_1, ...
    unsigned depth = 0;
    Truncation k_stop = Truncation::DepthReached;
    Truncation h_stop = Truncation::DepthReached;
};

LaplaceSeq invariant_sequence(const HyperbolicE2& e, unsigned depth);

struct DarbouxPair {
    // the intermediate-integral companion: {original E2, companion operator},
    // a compatible pair of class 1 handed to the formal module for the check
    DiffOp original;
    DiffOp companion;
    unsigned integral_order = 0;
};

struct DarbouxStatus {
    enum Kind { IntegrableBothSides, SemiIntegrable, Inconclusive } kind;
    char side = 0;        // 'k' or 'h' for SemiIntegrable
    unsigned level = 0;   // n with k_n = 0 (or h_n = 0)
    unsigned depth = 0;   // for Inconclusive
    std::vector<DarbouxPair> pairs;  // one per terminating side
};

DarbouxStatus darboux_status(const HyperbolicE2& e, const LaplaceSeq& seq);

}  // namespace lieclass

#endif
