#include "lieclass/integrate.hpp"

#include "lieclass/linalg.hpp"
#include "lieclass/upoly.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>

namespace lieclass {

namespace {

// View a bivariate polynomial as univariate in x with Q(y) coefficients.
UPoly as_upoly_x(const Poly& p) {
    std::vector<RatFunc> c(p.degree_x() + 1, RatFunc());
    for (auto& [m, v] : p.terms()) c[m.i] += RatFunc(Poly::mono(0, m.j, v));
    return UPoly(std::move(c));
}

// Back-conversion: t -> x. Coefficients must be rational functions of y only;
// denominators are cleared, returning (numerator poly, common denominator in y).
std::pair<Poly, Poly> clear_denominators_x(const UPoly& u) {
    Poly den(1);
    for (auto& c : u.coeffs())
        den = den * c.den().exact_div(poly_gcd(den, c.den()));
    Poly num;
    for (size_t k = 0; k < u.coeffs().size(); ++k) {
        const RatFunc& c = u.coeff(unsigned(k));
        if (c.is_zero()) continue;
        num += Poly::mono(unsigned(k), 0) * c.num() * den.exact_div(c.den());
    }
    return {num, den};
}

RatFunc upoly_to_ratfunc_x(const UPoly& u) {
    auto [num, den] = clear_denominators_x(u);
    return RatFunc(num, den);
}

// Hermite reduction of A/D (deg A < deg D, D monic): returns (U, V, W, Dstar)
// with A/D = (U/V)' + W/Dstar, V = D/Dstar, deg U < deg V, deg W < deg Dstar.
// Solved as a linear system over Q(y); existence and uniqueness are standard.
struct HermiteParts {
    UPoly u, v, w, dstar;
};

HermiteParts hermite_reduce(const UPoly& a, const UPoly& d) {
    UPoly dstar = UPoly::divmod(d, upoly_gcd(d, d.derivative())).first.monic();
    UPoly v = UPoly::divmod(d, dstar).first.monic();
    int nu = std::max(v.degree(), 0);      // unknown coeffs of U
    int nw = std::max(dstar.degree(), 0);  // unknown coeffs of W
    if (v.degree() == 0) {
        // already square-free
        return {UPoly(), UPoly(RatFunc(1)), a, dstar};
    }
    // A * V = Dstar*V*U' - Dstar*V'*U + V^2*W  (in Q(y)[x])
    UPoly lhs = a * v;
    UPoly dv = dstar * v, dvp = dstar * v.derivative(), v2 = v * v;
    int maxdeg = std::max({lhs.degree(), dv.degree() + nu - 2, dvp.degree() + nu - 1,
                           v2.degree() + nw - 1});
    Mat m;
    Row b;
    auto at = [](const UPoly& p, int k) { return k < 0 ? RatFunc() : p.coeff(unsigned(k)); };
    for (int r = 0; r <= maxdeg; ++r) {
        Row row;
        for (int k = 0; k < nu; ++k) {
            // U = sum u_k x^k; U' contributes k*u_k x^{k-1}
            RatFunc c;
            if (k >= 1) c += RatFunc(Rat(long(k))) * at(dv, r - (k - 1));
            c -= at(dvp, r - k);
            row.push_back(c);
        }
        for (int k = 0; k < nw; ++k) row.push_back(at(v2, r - k));
        m.push_back(std::move(row));
        b.push_back(lhs.coeff(unsigned(r)));
    }
    auto sol = solve(std::move(m), std::move(b));
    if (!sol) throw std::logic_error("hermite_reduce: inconsistent system");
    std::vector<RatFunc> uc(sol->begin(), sol->begin() + nu);
    std::vector<RatFunc> wc(sol->begin() + nu, sol->end());
    return {UPoly(std::move(uc)), v, UPoly(std::move(wc)), dstar};
}

// Square root of a polynomial over Q when one exists (monic-factor square
// detection via square-free decomposition plus a rational-square constant).
std::optional<Poly> poly_sqrt(const Poly& p) {
    if (p.is_zero()) return Poly();
    Rat lc = p.leading_coeff();
    if (lc < 0) return std::nullopt;
    mpz_class sn, sd;
    if (!mpz_perfect_square_p(lc.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(lc.get_den().get_mpz_t()))
        return std::nullopt;
    mpz_sqrt(sn.get_mpz_t(), lc.get_num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), lc.get_den().get_mpz_t());
    Poly root(Rat(sn, sd));
    for (auto& [f, mult] : squarefree_decompose(p)) {
        if (mult % 2) return std::nullopt;
        for (unsigned k = 0; k < mult / 2; ++k) root *= f;
    }
    if (!(root * root == p)) return std::nullopt;
    return root;
}

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f) {
    auto n = poly_sqrt(f.num());
    if (!n) return std::nullopt;
    auto d = poly_sqrt(f.den());
    if (!d) return std::nullopt;
    return RatFunc(*n, *d);
}

// Rational roots of a square-free resultant factor of z-degree 1 or 2; the
// quadratic case is decided by testing the discriminant for a rational
// square root. Higher z-degrees would need an algebraic extension.
std::vector<RatFunc> rational_roots(const UPoly& s) {
    std::vector<RatFunc> roots;
    if (s.degree() == 1) {
        roots.push_back(-s.coeff(0) / s.coeff(1));
    } else if (s.degree() == 2) {
        RatFunc a = s.coeff(2), b = s.coeff(1), c = s.coeff(0);
        RatFunc disc = b * b - RatFunc(Rat(4)) * a * c;
        if (auto sq = ratfunc_sqrt(disc)) {
            RatFunc two_a = RatFunc(Rat(2)) * a;
            roots.push_back((-b + *sq) / two_a);
            roots.push_back((-b - *sq) / two_a);
        }
    }
    return roots;
}

// Rothstein-Trager resultant r(z) = res_x(A - z*Dstar', Dstar), computed by
// evaluation at deterministic rational z-points and Lagrange interpolation.
// Returned as a UPoly in z with Q(y) coefficients.
UPoly rt_resultant(const UPoly& a, const UPoly& dstar) {
    int n = dstar.degree();
    int npts = n + 1;  // deg_z of the resultant is at most deg Dstar
    std::vector<RatFunc> zs, vals;
    UPoly dp = dstar.derivative();
    for (int t = 0; t <= npts; ++t) {
        RatFunc z{Rat(long(t))};
        UPoly p = a - dp.scaled(z);
        vals.push_back(upoly_resultant(p, dstar));
        zs.push_back(z);
    }
    // Lagrange interpolation in z
    UPoly r;
    for (size_t i = 0; i < zs.size(); ++i) {
        UPoly li(RatFunc(1));
        RatFunc denom(1);
        for (size_t j = 0; j < zs.size(); ++j) {
            if (i == j) continue;
            li = li * (UPoly::shift(1) - UPoly(zs[j]));
            denom *= zs[i] - zs[j];
        }
        r = r + li.scaled(vals[i] / denom);
    }
    return r;
}

}  // namespace

RatFunc IntegralX::derivative_x() const {
    RatFunc d = rational_part.derive_x();
    for (auto& lt : log_terms) d += lt.coeff * RatFunc(lt.arg.derive_x(), lt.arg);
    return d;
}

IntegralX integrate_x(const RatFunc& f) {
    IntegralX out;
    if (f.is_zero()) return out;
    UPoly num = as_upoly_x(f.num());
    UPoly den = as_upoly_x(f.den());
    RatFunc lc = den.lc();
    num = num.scaled(lc.inverse());
    den = den.monic();

    auto [q, r] = UPoly::divmod(num, den);
    RatFunc rat = upoly_to_ratfunc_x(q.antiderivative());

    if (!r.is_zero() && den.degree() > 0) {
        HermiteParts h = hermite_reduce(r, den);
        if (!h.u.is_zero()) rat += upoly_to_ratfunc_x(h.u) / upoly_to_ratfunc_x(h.v);
        if (!h.w.is_zero()) {
            // log part of W/Dstar
            UPoly rz = rt_resultant(h.w, h.dstar);
            if (rz.is_zero()) throw std::logic_error("integrate_x: zero resultant");
            for (auto& [s, mult] : upoly_squarefree(rz)) {
                // z-degree > 2 would need an algebraic extension: leave to residual
                for (const RatFunc& z0 : rational_roots(s)) {
                    if (z0.is_zero()) continue;
                    UPoly arg = upoly_gcd(h.dstar, h.w - h.dstar.derivative().scaled(z0));
                    if (arg.degree() <= 0) continue;
                    auto [an, ad] = clear_denominators_x(arg);
                    (void)ad;
                    out.log_terms.push_back({z0, an.primitive()});
                }
            }
        }
    }
    out.rational_part = rat;
    // residual = integrand - d/dx(found parts); zero in the closed-form case
    RatFunc resid = f - out.derivative_x();
    if (!resid.is_zero()) out.residual = resid;
    return out;
}

IntegralX integrate_y(const RatFunc& f) {
    IntegralX ix = integrate_x(f.swap_xy());
    IntegralX out;
    out.rational_part = ix.rational_part.swap_xy();
    for (auto& lt : ix.log_terms) out.log_terms.push_back({lt.coeff.swap_xy(), lt.arg.swap_xy()});
    if (ix.residual) out.residual = ix.residual->swap_xy();
    return out;
}

}  // namespace lieclass
