#include "lieclass/poly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace lieclass {

Poly Poly::mono(unsigned i, unsigned j, Rat c) {
    Poly p;
    if (c != 0) p.terms_[{i, j}] = std::move(c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0} && terms_.begin()->second == 1;
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    return terms_.empty() ? 0u : terms_.rbegin()->first.deg();
}

unsigned Poly::degree_x() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.i);
    return d;
}

unsigned Poly::degree_y() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.j);
    return d;
}

Mono Poly::leading_mono() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

Rat Poly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

Rat Poly::coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::set_coeff(unsigned i, unsigned j, const Rat& c) {
    if (c == 0) terms_.erase({i, j});
    else terms_[{i, j}] = c;
}

void Poly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [m, c] : o.terms_) {
        auto [it, fresh] = r.terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            Mono m{m1.i + m2.i, m1.j + m2.j};
            auto [it, fresh] = r.terms_.try_emplace(m, c1 * c2);
            if (!fresh) it->second += c1 * c2;
        }
    r.prune();
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

bool Poly::operator<(const Poly& o) const {
    auto a = terms_.rbegin(), b = o.terms_.rbegin();
    MonoGrlex lt;
    for (; a != terms_.rend() && b != o.terms_.rend(); ++a, ++b) {
        if (lt(a->first, b->first)) return true;
        if (lt(b->first, a->first)) return false;
        if (a->second != b->second) return a->second < b->second;
    }
    return b != o.terms_.rend();
}

Poly Poly::derive_x() const {
    Poly r;
    for (auto& [m, c] : terms_)
        if (m.i > 0) r.terms_[{m.i - 1, m.j}] = c * m.i;
    return r;
}

Poly Poly::derive_y() const {
    Poly r;
    for (auto& [m, c] : terms_)
        if (m.j > 0) r.terms_[{m.i, m.j - 1}] = c * m.j;
    return r;
}

Poly Poly::swap_xy() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_[{m.j, m.i}] = c;
    return r;
}

Rat Poly::eval(const Rat& x, const Rat& y) const {
    Rat s(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (unsigned k = 0; k < m.i; ++k) t *= x;
        for (unsigned k = 0; k < m.j; ++k) t *= y;
        s += t;
    }
    return s;
}

Poly Poly::divided_by(const Rat& c) const {
    assert(c != 0);
    Poly r = *this;
    for (auto& [m, v] : r.terms_) v /= c;
    return r;
}

bool Poly::divisible_by(const Poly& d) const {
    if (d.is_zero()) return is_zero();
    Poly r = *this;
    Mono dm = d.leading_mono();
    Rat dc = d.leading_coeff();
    while (!r.is_zero()) {
        Mono m = r.leading_mono();
        if (m.i < dm.i || m.j < dm.j) return false;
        Rat q = r.leading_coeff() / dc;
        r -= d * Poly::mono(m.i - dm.i, m.j - dm.j, q);
    }
    return true;
}

Poly Poly::exact_div(const Poly& d) const {
    assert(!d.is_zero());
    Poly r = *this, q;
    Mono dm = d.leading_mono();
    Rat dc = d.leading_coeff();
    while (!r.is_zero()) {
        Mono m = r.leading_mono();
        if (m.i < dm.i || m.j < dm.j)
            throw std::logic_error("Poly::exact_div: not divisible");
        Rat c = r.leading_coeff() / dc;
        Poly t = Poly::mono(m.i - dm.i, m.j - dm.j, c);
        q += t;
        r -= d * t;
    }
    return q;
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    // content over Q: gcd of numerators / lcm of denominators, sign of lc
    mpz_class num_gcd(0), den_lcm(1);
    for (auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading_coeff() < 0) content = -content;
    return divided_by(content);
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return divided_by(leading_coeff());
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = m.i + m.j > 0;
        if (a != 1 || !has_var) {
            os << a.get_str();
            if (has_var) os << "*";
        }
        if (m.i > 0) { os << "x"; if (m.i > 1) os << "^" << m.i; }
        if (m.i > 0 && m.j > 0) os << "*";
        if (m.j > 0) { os << "y"; if (m.j > 1) os << "^" << m.j; }
    }
    return os.str();
}

namespace {

// Univariate view in x: coefficients are polynomials in y alone.
std::vector<Poly> x_coeffs(const Poly& p) {
    std::vector<Poly> out(p.degree_x() + 1);
    for (auto& [m, c] : p.terms()) {
        Poly& t = out[m.i];
        t += Poly::mono(0, m.j, c);
    }
    return out;
}

// gcd of univariate polynomials in y over Q (monic Euclid).
Poly gcd_univ_y(Poly a, Poly b) {
    while (!b.is_zero()) {
        // remainder of a by b as univariate in y
        Poly r = a;
        unsigned db = b.degree_y();
        Rat lb = b.coeff(0, db);
        while (!r.is_zero() && r.degree_y() >= db) {
            unsigned dr = r.degree_y();
            Rat lr = r.coeff(0, dr);
            if (lr == 0) break;  // cannot happen: degree_y is max over terms
            r -= b * Poly::mono(0, dr - db, lr / lb);
        }
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.primitive();
}

Poly content_y(const Poly& p) {
    // gcd over Q[y] of the x-coefficients
    Poly g;
    for (auto& c : x_coeffs(p)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive() : gcd_univ_y(g, c);
        if (g.is_constant()) return Poly(1);
    }
    return g.is_zero() ? Poly() : g;
}

// Dense univariate polynomials over Q, coefficient index = x-power.
using UQ = std::vector<Rat>;

void uq_trim(UQ& p) { while (!p.empty() && p.back() == 0) p.pop_back(); }

UQ uq_eval_y(const Poly& p, const Rat& y0) {
    UQ out(p.degree_x() + 1, Rat(0));
    for (auto& [m, c] : p.terms()) {
        Rat t = c;
        for (unsigned k = 0; k < m.j; ++k) t *= y0;
        out[m.i] += t;
    }
    uq_trim(out);
    return out;
}

UQ uq_gcd(UQ a, UQ b) {
    while (!b.empty()) {
        // a mod b
        Rat lb = b.back();
        while (a.size() >= b.size() && !a.empty()) {
            Rat q = a.back() / lb;
            size_t off = a.size() - b.size();
            for (size_t k = 0; k < b.size(); ++k) a[off + k] -= q * b[k];
            a.pop_back();
            uq_trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        Rat la = a.back();
        for (auto& c : a) c /= la;
    }
    return a;
}

}  // namespace

// Bivariate gcd by evaluation/interpolation on y with verification, the
// content split done in Q[y]. Falls back to nothing: a failed interpolation
// only adds more sample points.
Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(1);
    auto mono_gcd = [](const Poly& p) {
        Mono g = p.terms().begin()->first;
        for (auto& [m, c] : p.terms()) { g.i = std::min(g.i, m.i); g.j = std::min(g.j, m.j); }
        return g;
    };
    if (a.terms().size() == 1 || b.terms().size() == 1) {
        Mono ga = mono_gcd(a), gb = mono_gcd(b);
        return Poly::mono(std::min(ga.i, gb.i), std::min(ga.j, gb.j));
    }
    if (a == b) return a.monic();
    if (!a.depends_on_x() && !b.depends_on_x()) return gcd_univ_y(a, b).monic();
    if (!a.depends_on_y() && !b.depends_on_y())
        return gcd_univ_y(a.swap_xy(), b.swap_xy()).swap_xy().monic();

    Poly ca = content_y(a), cb = content_y(b);
    Poly pa = a.exact_div(ca), pb = b.exact_div(cb);
    Poly cg = gcd_univ_y(ca, cb);

    // leading x-coefficients (in Q[y]) control which sample points are usable
    auto lc_x = [](const Poly& p) {
        unsigned d = p.degree_x();
        Poly l;
        for (auto& [m, c] : p.terms())
            if (m.i == d) l += Poly::mono(0, m.j, c);
        return l;
    };
    Poly la = lc_x(pa), lb = lc_x(pb);
    Poly lam = gcd_univ_y(la, lb);  // lc_x of the gcd divides this

    unsigned ybound = std::min(pa.degree_y(), pb.degree_y()) + lam.degree_y() + 1;
    int dmin = int(std::min(pa.degree_x(), pb.degree_x()));
    std::vector<Rat> pts;
    std::vector<UQ> imgs;
    long next = 0;
    while (true) {
        // next usable sample point
        Rat y0;
        while (true) {
            y0 = Rat(next);
            ++next;
            if (la.eval(Rat(0), y0) != 0 && lb.eval(Rat(0), y0) != 0) break;
        }
        UQ g0 = uq_gcd(uq_eval_y(pa, y0), uq_eval_y(pb, y0));
        int d0 = int(g0.size()) - 1;
        if (d0 == 0) return cg.monic();  // primitive parts coprime
        if (d0 < dmin) { dmin = d0; pts.clear(); imgs.clear(); }
        if (d0 > dmin) continue;  // unlucky point
        // scale image so its lc equals lam(y0)
        Rat s = lam.eval(Rat(0), y0);
        for (auto& c : g0) c *= s;
        pts.push_back(y0);
        imgs.push_back(std::move(g0));
        if (pts.size() < ybound + 1) continue;
        // interpolate coefficient-wise: G(x,y) with lc_x(G) = lam
        Poly G;
        bool ok = true;
        for (int xi = 0; xi <= dmin && ok; ++xi) {
            // Lagrange in y through (pts[k], imgs[k][xi])
            for (size_t k = 0; k < pts.size(); ++k) {
                Rat val = xi < int(imgs[k].size()) ? imgs[k][xi] : Rat(0);
                if (val == 0) continue;
                Poly term = Poly::mono(unsigned(xi), 0, Rat(1));
                Rat denom(1);
                for (size_t t = 0; t < pts.size(); ++t) {
                    if (t == k) continue;
                    term *= Poly::mono(0, 1) - Poly(pts[t]);
                    denom *= pts[k] - pts[t];
                }
                G += term.divided_by(denom / val);
            }
        }
        if (G.is_zero()) { ok = false; }
        if (ok) {
            Poly Gc = content_y(G);
            if (!Gc.is_constant()) G = G.exact_div(Gc);
            G = G.primitive();
            if (pa.divisible_by(G) && pb.divisible_by(G)) return (cg * G).monic();
        }
        // not enough information: demand one more point
        ++ybound;
    }
}

Poly squarefree_part(const Poly& a) {
    if (a.is_zero() || a.is_constant()) return a.is_zero() ? a : Poly(1);
    Poly gx = poly_gcd(a, a.derive_x());
    Poly g = poly_gcd(gx, a.derive_y());
    return a.exact_div(g).monic();
}

std::vector<std::pair<Poly, unsigned>> squarefree_decompose(const Poly& a) {
    std::vector<std::pair<Poly, unsigned>> out;
    if (a.is_zero() || a.is_constant()) return out;
    // chain[t] = monic product of the distinct prime factors of multiplicity > t
    std::vector<Poly> chain;
    Poly b = a.monic();
    while (!b.is_constant()) {
        Poly g = poly_gcd(poly_gcd(b, b.derive_x()), b.derive_y());
        chain.push_back(b.exact_div(g).monic());
        b = g.monic();
    }
    for (unsigned t = 0; t < chain.size(); ++t) {
        Poly f = (t + 1 < chain.size()) ? chain[t].exact_div(chain[t + 1]).monic() : chain[t];
        if (!f.is_constant()) out.push_back({f, t + 1});
    }
    return out;
}

}  // namespace lieclass
