#include "lieclass/classical.hpp"

#include "lieclass/check.hpp"

namespace lieclass {

DiffOp HyperbolicE2::op() const {
    DiffOp d = DiffOp::mono(1, 1);
    d += DiffOp::mono(1, 0, a);
    d += DiffOp::mono(0, 1, b);
    d += DiffOp(c);
    return d;
}

RatFunc invariant_k0(const HyperbolicE2& e) { return e.b.derive_y() + e.a * e.b - e.c; }
RatFunc invariant_h0(const HyperbolicE2& e) { return e.a.derive_x() + e.a * e.b - e.c; }

HyperbolicE2 laplace_transform_y(const HyperbolicE2& e) {
    RatFunc k0 = invariant_k0(e);
    if (k0.is_zero()) throw ZeroInvariant();
    // Delta_1 = (Dx + b) ∘ k0^{-1} (Dy + a) - 1, normalized to u_xy coeff 1
    DiffOp left = DiffOp::mono(1, 0) + DiffOp(e.b);
    DiffOp right = (DiffOp::mono(0, 1) + DiffOp(e.a)).scaled(k0.inverse());
    DiffOp d = op_mul(left, right) - DiffOp(RatFunc(1));
    RatFunc lead = d.coeff(1, 1);
    lc_check(!lead.is_zero(), "transformed equation keeps the u_xy symbol");
    d = d.scaled(lead.inverse());
    HyperbolicE2 out{d.coeff(1, 0), d.coeff(0, 1), d.coeff(0, 0)};
    // defining identity: the rebuilt operator equals the normalized one
    lc_check(out.op() == d, "transformed equation is in u_xy normal form");
    return out;
}

HyperbolicE2 laplace_transform_x(const HyperbolicE2& e) {
    // x-side by the symmetry swap (x<->y, a<->b); the swap is an involution
    HyperbolicE2 sw{e.b.swap_xy(), e.a.swap_xy(), e.c.swap_xy()};
    HyperbolicE2 t = laplace_transform_y(sw);
    return HyperbolicE2{t.b.swap_xy(), t.a.swap_xy(), t.c.swap_xy()};
}

LaplaceSeq invariant_sequence(const HyperbolicE2& e, unsigned depth) {
    LaplaceSeq seq;
    seq.depth = depth;
    HyperbolicE2 cur = e;
    for (unsigned n = 0; n <= depth; ++n) {
        RatFunc k = invariant_k0(cur);
        seq.k.push_back(k);
        if (k.is_zero()) { seq.k_stop = Truncation::HitZero; break; }
        if (n == depth) break;
        cur = laplace_transform_y(cur);
    }
    cur = e;
    for (unsigned n = 0; n <= depth; ++n) {
        RatFunc h = invariant_h0(cur);
        seq.h.push_back(h);
        if (h.is_zero()) { seq.h_stop = Truncation::HitZero; break; }
        if (n == depth) break;
        cur = laplace_transform_x(cur);
    }
    return seq;
}

namespace {

DarbouxPair side_pair(const HyperbolicE2& e, char side, unsigned level) {
    // companion operator: the composite substitution down the chain, ending
    // with the factor whose invariant vanished; order = level + 1
    DarbouxPair p;
    p.original = e.op();
    p.integral_order = level + 1;
    HyperbolicE2 cur = e;
    DiffOp comp = DiffOp(RatFunc(1));
    for (unsigned n = 0; n < level; ++n) {
        DiffOp sub = side == 'k' ? DiffOp::mono(1, 0) + DiffOp(cur.b)
                                 : DiffOp::mono(0, 1) + DiffOp(cur.a);
        comp = op_mul(sub, comp);
        cur = side == 'k' ? laplace_transform_y(cur) : laplace_transform_x(cur);
    }
    DiffOp last = side == 'k' ? DiffOp::mono(1, 0) + DiffOp(cur.b)
                              : DiffOp::mono(0, 1) + DiffOp(cur.a);
    p.companion = op_mul(last, comp);
    return p;
}

}  // namespace

DarbouxStatus darboux_status(const HyperbolicE2& e, const LaplaceSeq& seq) {
    DarbouxStatus st{DarbouxStatus::Inconclusive, 0, 0, seq.depth, {}};
    bool kz = seq.k_stop == Truncation::HitZero;
    bool hz = seq.h_stop == Truncation::HitZero;
    if (kz && hz) {
        st.kind = DarbouxStatus::IntegrableBothSides;
        st.level = unsigned(seq.k.size()) - 1;
        st.pairs.push_back(side_pair(e, 'k', unsigned(seq.k.size()) - 1));
        st.pairs.push_back(side_pair(e, 'h', unsigned(seq.h.size()) - 1));
    } else if (kz || hz) {
        st.kind = DarbouxStatus::SemiIntegrable;
        st.side = kz ? 'k' : 'h';
        st.level = unsigned((kz ? seq.k.size() : seq.h.size())) - 1;
        st.pairs.push_back(side_pair(e, st.side, st.level));
    }
    return st;
}

}  // namespace lieclass
