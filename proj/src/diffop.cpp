#include "lieclass/diffop.hpp"

#include <cassert>
#include <sstream>

namespace lieclass {

namespace {

Rat binom(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

}  // namespace

bool BinaryForm::is_zero() const {
    for (auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    BinaryForm r;
    r.degree = degree + o.degree;
    r.coeffs.assign(r.degree + 1, RatFunc());
    for (unsigned a = 0; a < coeffs.size(); ++a)
        for (unsigned b = 0; b < o.coeffs.size(); ++b)
            r.coeffs[a + b] += coeffs[a] * o.coeffs[b];
    return r;
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned k = coeffs.size(); k-- > 0;) {
        if (coeffs[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!coeffs[k].is_one()) os << "(" << coeffs[k].str() << ")*";
        unsigned e = degree - k;
        if (k > 0) { os << "xi"; if (k > 1) os << "^" << k; }
        if (k > 0 && e > 0) os << "*";
        if (e > 0) { os << "eta"; if (e > 1) os << "^" << e; }
        if (k == 0 && e == 0) os << "1";
    }
    if (first) os << "0";
    return os.str();
}

DiffOp DiffOp::mono(unsigned i, unsigned j, RatFunc c) {
    DiffOp d;
    if (!c.is_zero()) d.terms_[{i, j}] = std::move(c);
    return d;
}

DMono DiffOp::leading_mono() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

RatFunc DiffOp::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

RatFunc DiffOp::coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? RatFunc() : it->second;
}

void DiffOp::set_coeff(unsigned i, unsigned j, RatFunc c) {
    if (c.is_zero()) terms_.erase({i, j});
    else terms_[{i, j}] = std::move(c);
}

DiffOp DiffOp::operator-() const {
    DiffOp r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp r = *this;
    for (auto& [m, c] : o.terms_) {
        auto [it, fresh] = r.terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::scaled(const RatFunc& c) const {
    DiffOp r;
    if (c.is_zero()) return r;
    for (auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

DiffOp DiffOp::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

std::string DiffOp::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool has_d = m.i + m.j > 0;
        if (!c.is_one() || !has_d) {
            bool par = c.num().terms().size() > 1 || !c.den().is_one();
            os << (par ? "(" : "") << c.str() << (par ? ")" : "");
            if (has_d) os << "*";
        }
        if (m.i > 0) { os << "Dx"; if (m.i > 1) os << "^" << m.i; }
        if (m.i > 0 && m.j > 0) os << "*";
        if (m.j > 0) { os << "Dy"; if (m.j > 1) os << "^" << m.j; }
    }
    return os.str();
}

DiffOp op_mul(const DiffOp& a, const DiffOp& b) {
    DiffOp r;
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            // Dx^i Dy^j ∘ (cb Dx^p Dy^q) via the generalized Leibniz rule
            for (unsigned s = 0; s <= ma.i; ++s) {
                for (unsigned t = 0; t <= ma.j; ++t) {
                    RatFunc d = cb;
                    for (unsigned k = 0; k < s; ++k) d = d.derive_x();
                    for (unsigned k = 0; k < t; ++k) d = d.derive_y();
                    if (d.is_zero()) continue;
                    RatFunc c = ca * d * RatFunc(binom(ma.i, s) * binom(ma.j, t));
                    DMono m{ma.i - s + mb.i, ma.j - t + mb.j};
                    r.set_coeff(m.i, m.j, r.coeff(m.i, m.j) + c);
                }
            }
        }
    }
    return r;
}

RatFunc op_apply(const DiffOp& a, const RatFunc& f) {
    RatFunc out;
    for (auto& [m, c] : a.terms()) {
        RatFunc d = f;
        for (unsigned k = 0; k < m.i; ++k) d = d.derive_x();
        for (unsigned k = 0; k < m.j; ++k) d = d.derive_y();
        out += c * d;
    }
    return out;
}

DiffOp conjugate(const DiffOp& a, const RatFunc& sigma) {
    if (sigma.is_zero()) throw ZeroGauge();
    DiffOp as = op_mul(a, DiffOp(sigma));
    return as.scaled(sigma.inverse());
}

BinaryForm principal_symbol(const DiffOp& a) {
    if (a.is_zero()) throw ZeroOperator();
    BinaryForm f;
    f.degree = unsigned(a.order());
    f.coeffs.assign(f.degree + 1, RatFunc());
    for (auto& [m, c] : a.terms())
        if (m.ord() == f.degree) f.coeffs[m.i] = c;
    return f;
}

DiffOp op_swap_xy(const DiffOp& a) {
    DiffOp r;
    for (auto& [m, c] : a.terms()) r.set_coeff(m.j, m.i, c.swap_xy());
    return r;
}

DiffOp Frame::X() const { return DiffOp::mono(1, 0) + DiffOp(a); }
DiffOp Frame::Y() const { return DiffOp::mono(0, 1) + DiffOp(b); }

FramedOp rewrite_in_frame(const DiffOp& a, const Frame& fr) {
    FramedOp out;
    DiffOp rest = a;
    // cache powers of X and Y
    std::vector<DiffOp> xp{DiffOp(RatFunc(1))}, yp{DiffOp(RatFunc(1))};
    auto xpow = [&](unsigned k) -> const DiffOp& {
        while (xp.size() <= k) xp.push_back(op_mul(xp.back(), fr.X()));
        return xp[k];
    };
    auto ypow = [&](unsigned k) -> const DiffOp& {
        while (yp.size() <= k) yp.push_back(op_mul(yp.back(), fr.Y()));
        return yp[k];
    };
    while (!rest.is_zero()) {
        DMono m = rest.leading_mono();
        RatFunc c = rest.leading_coeff();
        out[{m.j, m.i}] = c;
        rest -= op_mul(ypow(m.j), xpow(m.i)).scaled(c);
    }
    return out;
}

DiffOp frame_expand(const FramedOp& fo, const Frame& fr) {
    DiffOp out;
    std::vector<DiffOp> xp{DiffOp(RatFunc(1))}, yp{DiffOp(RatFunc(1))};
    auto xpow = [&](unsigned k) -> const DiffOp& {
        while (xp.size() <= k) xp.push_back(op_mul(xp.back(), fr.X()));
        return xp[k];
    };
    auto ypow = [&](unsigned k) -> const DiffOp& {
        while (yp.size() <= k) yp.push_back(op_mul(yp.back(), fr.Y()));
        return yp[k];
    };
    for (auto& [ji, c] : fo)
        out += op_mul(ypow(ji.first), xpow(ji.second)).scaled(c);
    return out;
}

RightDiv right_divide_x(const DiffOp& f, const RatFunc& a) {
    RightDiv rd;
    DiffOp x = DiffOp::mono(1, 0) + DiffOp(a);
    DiffOp rest = f;
    while (true) {
        // highest term containing Dx
        DMono pick{0, 0};
        bool found = false;
        for (auto it = rest.terms().rbegin(); it != rest.terms().rend(); ++it) {
            if (it->first.i >= 1) { pick = it->first; found = true; break; }
        }
        if (!found) break;
        RatFunc c = rest.coeff(pick.i, pick.j);
        DiffOp g = DiffOp::mono(pick.i - 1, pick.j, c);
        rd.quot += g;
        rest -= op_mul(g, x);
    }
    rd.rem = rest;
    return rd;
}

}  // namespace lieclass
