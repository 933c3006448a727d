#include "lieclass/solution.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace lieclass {

namespace {

// canonical key order for terms (coefficient excluded)
int cmp_rf(const RatFunc& a, const RatFunc& b) {
    if (a == b) return 0;
    return a < b ? -1 : 1;
}

int cmp_quad(const std::optional<Quad>& a, const std::optional<Quad>& b) {
    if (!a && !b) return 0;
    if (!a) return -1;
    if (!b) return 1;
    if (a->var != b->var) return a->var < b->var ? -1 : 1;
    if (a->in_exp != b->in_exp) return a->in_exp < b->in_exp ? -1 : 1;
    return cmp_rf(a->integrand, b->integrand);
}

int cmp_key(const SolTerm& a, const SolTerm& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.index != b.index) return a.index < b.index ? -1 : 1;
    if (int c = cmp_rf(a.exp_arg, b.exp_arg)) return c;
    if (a.pows != b.pows) return a.pows < b.pows ? -1 : 1;
    if (a.logs != b.logs) return a.logs < b.logs ? -1 : 1;
    return cmp_quad(a.quad, b.quad);
}

// fold integer-constant pow exponents into the rational coefficient
void fold_pows(SolTerm& t) {
    for (auto it = t.pows.begin(); it != t.pows.end();) {
        const RatFunc& e = it->second;
        if (e.is_zero()) { it = t.pows.erase(it); continue; }
        if (e.is_constant() && e.constant_value().get_den() == 1) {
            long n = e.constant_value().get_num().get_si();
            RatFunc base{it->first};
            if (n > 0)
                for (long k = 0; k < n; ++k) t.coeff *= base;
            else
                for (long k = 0; k < -n; ++k) t.coeff /= base;
            it = t.pows.erase(it);
            continue;
        }
        ++it;
    }
    for (auto it = t.logs.begin(); it != t.logs.end();)
        it = it->second == 0 ? t.logs.erase(it) : std::next(it);
}

}  // namespace

void SolutionExpr::push_term(SolTerm t) {
    if (t.coeff.is_zero()) return;
    fold_pows(t);
    terms_.push_back(std::move(t));
    normalize();
}

void SolutionExpr::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const SolTerm& a, const SolTerm& b) { return cmp_key(a, b) < 0; });
    std::vector<SolTerm> out;
    for (auto& t : terms_) {
        if (!out.empty() && cmp_key(out.back(), t) == 0) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(t);
        }
    }
    terms_ = std::move(out);
}

SolutionExpr SolutionExpr::from_ratfunc(RatFunc c) {
    SolutionExpr e;
    SolTerm t;
    t.coeff = std::move(c);
    e.push_term(std::move(t));
    return e;
}

SolutionExpr SolutionExpr::func(int deriv_order, RatFunc coeff) {
    SolutionExpr e;
    SolTerm t;
    t.coeff = std::move(coeff);
    t.kind = BaseKind::Func;
    t.index = deriv_order;
    e.push_term(std::move(t));
    return e;
}

SolutionExpr SolutionExpr::constant(int id, RatFunc coeff) {
    SolutionExpr e;
    SolTerm t;
    t.coeff = std::move(coeff);
    t.kind = BaseKind::Constant;
    t.index = id;
    e.push_term(std::move(t));
    return e;
}

SolutionExpr SolutionExpr::exp_of_integral_x(const IntegralX& ix) {
    SolTerm t;
    t.exp_arg = ix.rational_part;
    for (auto& lt : ix.log_terms) {
        auto [it, fresh] = t.pows.try_emplace(lt.arg, lt.coeff);
        if (!fresh) it->second += lt.coeff;
    }
    if (ix.residual) t.quad = Quad{'x', *ix.residual, true};
    SolutionExpr e;
    e.push_term(std::move(t));
    return e;
}

SolutionExpr SolutionExpr::exp_of_integral_y(const IntegralX& iy) {
    SolTerm t;
    t.exp_arg = iy.rational_part;
    for (auto& lt : iy.log_terms) {
        auto [it, fresh] = t.pows.try_emplace(lt.arg, lt.coeff);
        if (!fresh) it->second += lt.coeff;
    }
    if (iy.residual) t.quad = Quad{'y', *iy.residual, true};
    SolutionExpr e;
    e.push_term(std::move(t));
    return e;
}

bool SolutionExpr::has_quadrature() const {
    for (auto& t : terms_)
        if (t.quad) return true;
    return false;
}

SolutionExpr SolutionExpr::operator-() const {
    SolutionExpr e = *this;
    for (auto& t : e.terms_) t.coeff = -t.coeff;
    return e;
}

SolutionExpr SolutionExpr::operator+(const SolutionExpr& o) const {
    SolutionExpr e = *this;
    for (auto& t : o.terms_) e.terms_.push_back(t);
    e.normalize();
    return e;
}

SolutionExpr SolutionExpr::operator-(const SolutionExpr& o) const { return *this + (-o); }

SolutionExpr SolutionExpr::scaled(const RatFunc& c) const {
    SolutionExpr e;
    if (c.is_zero()) return e;
    e.terms_ = terms_;
    for (auto& t : e.terms_) t.coeff *= c;
    return e;
}

SolutionExpr SolutionExpr::operator*(const SolutionExpr& o) const {
    SolutionExpr e;
    for (auto& s : terms_) {
        for (auto& t : o.terms_) {
            SolTerm r;
            if (s.kind != BaseKind::One && t.kind != BaseKind::One)
                throw std::logic_error("SolutionExpr: product of two non-scalar terms");
            r.kind = s.kind == BaseKind::One ? t.kind : s.kind;
            r.index = s.kind == BaseKind::One ? t.index : s.index;
            r.coeff = s.coeff * t.coeff;
            r.exp_arg = s.exp_arg + t.exp_arg;
            r.pows = s.pows;
            for (auto& [p, ex] : t.pows) {
                auto [it, fresh] = r.pows.try_emplace(p, ex);
                if (!fresh) it->second += ex;
            }
            r.logs = s.logs;
            for (auto& [p, m] : t.logs) r.logs[p] += m;
            if (s.quad && t.quad) throw std::logic_error("SolutionExpr: product of quadratures");
            r.quad = s.quad ? s.quad : t.quad;
            e.push_term(std::move(r));
        }
    }
    e.normalize();
    return e;
}

SolutionExpr SolutionExpr::derive(char var) const {
    SolutionExpr out;
    auto d = [var](const RatFunc& f) { return var == 'x' ? f.derive_x() : f.derive_y(); };
    auto dp = [var](const Poly& p) { return var == 'x' ? p.derive_x() : p.derive_y(); };
    for (const SolTerm& t : terms_) {
        if (t.quad && t.quad->var != var) throw ApplyToResidual();
        // product rule over all factors
        // 1. coefficient
        {
            SolTerm r = t;
            r.coeff = d(t.coeff);
            if (!r.coeff.is_zero()) out.push_term(std::move(r));
        }
        // 2. exp factor
        if (!t.exp_arg.is_zero()) {
            SolTerm r = t;
            r.coeff = t.coeff * d(t.exp_arg);
            if (!r.coeff.is_zero()) out.push_term(std::move(r));
        }
        // 3. pow factors: d(arg^e) = (e' log arg + e arg'/arg) arg^e
        for (auto& [arg, e] : t.pows) {
            RatFunc de = d(e);
            if (!de.is_zero()) {
                SolTerm r = t;
                r.coeff = t.coeff * de;
                r.logs[arg] += 1;
                out.push_term(std::move(r));
            }
            RatFunc darg{dp(arg)};
            if (!darg.is_zero()) {
                SolTerm r = t;
                r.coeff = t.coeff * e * darg / RatFunc(arg);
                out.push_term(std::move(r));
            }
        }
        // 4. log factors: d(log^m arg) = m arg'/arg log^{m-1}
        for (auto& [arg, m] : t.logs) {
            RatFunc darg{dp(arg)};
            if (darg.is_zero()) continue;
            SolTerm r = t;
            r.coeff = t.coeff * RatFunc(Rat(long(m))) * darg / RatFunc(arg);
            auto it = r.logs.find(arg);
            if (it->second == 1) r.logs.erase(it);
            else it->second -= 1;
            out.push_term(std::move(r));
        }
        // 5. quadrature factor
        if (t.quad) {
            SolTerm r = t;
            r.coeff = t.coeff * t.quad->integrand;
            if (!t.quad->in_exp) r.quad.reset();
            out.push_term(std::move(r));
        }
        // 6. base symbol
        if (t.kind == BaseKind::Func && var == 'y') {
            SolTerm r = t;
            r.index += 1;
            out.push_term(std::move(r));
        }
    }
    return out;
}

int SolutionExpr::max_func_derivative() const {
    int m = -1;
    for (auto& t : terms_)
        if (t.kind == BaseKind::Func) m = std::max(m, t.index);
    return m;
}

std::vector<int> SolutionExpr::constant_ids() const {
    std::vector<int> ids;
    for (auto& t : terms_)
        if (t.kind == BaseKind::Constant) ids.push_back(t.index);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

SolutionExpr SolutionExpr::substitute_func(const SolutionExpr& expr) const {
    // pre-compute y-derivatives of expr
    std::vector<SolutionExpr> ders{expr};
    int maxd = max_func_derivative();
    for (int k = 1; k <= maxd; ++k) ders.push_back(ders.back().derive('y'));
    SolutionExpr out;
    for (auto& t : terms_) {
        if (t.kind != BaseKind::Func) {
            out.push_term(t);
            continue;
        }
        SolTerm scal = t;
        scal.kind = BaseKind::One;
        scal.index = 0;
        SolutionExpr se;
        se.push_term(std::move(scal));
        out += se * ders[size_t(t.index)];
    }
    return out;
}

SolutionExpr op_apply(const DiffOp& a, const SolutionExpr& e) {
    SolutionExpr out;
    for (auto& [m, c] : a.terms()) {
        SolutionExpr d = e;
        for (unsigned k = 0; k < m.i; ++k) d = d.derive('x');
        for (unsigned k = 0; k < m.j; ++k) d = d.derive('y');
        out += d.scaled(c);
    }
    return out;
}

SolutionExpr integrate_expr_x(const SolutionExpr& e) {
    SolutionExpr out;
    for (const SolTerm& t : e.terms()) {
        bool xfree_factors = !t.exp_arg.depends_on_x() && !t.quad;
        for (auto& [p, ex] : t.pows)
            if (p.depends_on_x() || ex.depends_on_x()) xfree_factors = false;
        for (auto& [p, m] : t.logs)
            if (p.depends_on_x()) xfree_factors = false;
        if (!xfree_factors) {
            SolTerm r = t;
            r.quad = Quad{'x', t.coeff, false};  // opaque leftover
            r.coeff = RatFunc(1);
            out.push_term(std::move(r));
            continue;
        }
        IntegralX ix = integrate_x(t.coeff);
        if (!ix.rational_part.is_zero()) {
            SolTerm r = t;
            r.coeff = ix.rational_part;
            out.push_term(std::move(r));
        }
        for (auto& lt : ix.log_terms) {
            SolTerm r = t;
            r.coeff = lt.coeff;
            r.logs[lt.arg] += 1;
            out.push_term(std::move(r));
        }
        if (ix.residual) {
            SolTerm r = t;
            r.coeff = RatFunc(1);
            r.quad = Quad{'x', *ix.residual, false};
            out.push_term(std::move(r));
        }
    }
    return out;
}

SolutionExpr integrate_expr_y(const SolutionExpr& e) {
    SolutionExpr out;
    for (const SolTerm& t : e.terms()) {
        bool yfree_factors = !t.exp_arg.depends_on_y() && !t.quad;
        for (auto& [p, ex] : t.pows)
            if (p.depends_on_y() || ex.depends_on_y()) yfree_factors = false;
        for (auto& [p, m] : t.logs)
            if (p.depends_on_y()) yfree_factors = false;
        if (!yfree_factors || t.coeff.depends_on_x()) {
            SolTerm r = t;
            r.quad = Quad{'y', t.coeff, false};
            r.coeff = RatFunc(1);
            out.push_term(std::move(r));
            continue;
        }
        if (t.kind == BaseKind::Func) {
            // integration by parts: ∫ rho f^(j) dy
            // = sum_{s=0}^{j-1} (-1)^s rho^(s) f^(j-1-s) + (-1)^j ∫ rho^(j) f dy
            RatFunc rho = t.coeff;
            int j = t.index;
            bool closed = false;
            RatFunc sign(1);
            for (int s = 0; s < j; ++s) {
                SolTerm r = t;
                r.coeff = sign * rho;
                r.index = j - 1 - s;
                out.push_term(std::move(r));
                rho = rho.derive_y();
                sign = -sign;
                if (rho.is_zero()) { closed = true; break; }
            }
            if (j == 0 || (!closed && !rho.is_zero())) {
                // leftover ∫ rho f dy
                if (!rho.is_zero()) {
                    SolTerm r = t;
                    r.index = 0;
                    r.coeff = RatFunc(1);
                    r.quad = Quad{'y', sign * rho, false};
                    out.push_term(std::move(r));
                }
            }
            continue;
        }
        IntegralX iy = integrate_y(t.coeff);
        if (!iy.rational_part.is_zero()) {
            SolTerm r = t;
            r.coeff = iy.rational_part;
            out.push_term(std::move(r));
        }
        for (auto& lt : iy.log_terms) {
            SolTerm r = t;
            r.coeff = lt.coeff;
            r.logs[lt.arg] += 1;
            out.push_term(std::move(r));
        }
        if (iy.residual) {
            SolTerm r = t;
            r.coeff = RatFunc(1);
            r.quad = Quad{'y', *iy.residual, false};
            out.push_term(std::move(r));
        }
    }
    return out;
}

namespace {

std::string primes(int n) {
    if (n <= 3) return std::string(size_t(n), '\'');
    std::ostringstream os;
    os << "^(" << n << ")";
    return os.str();
}

}  // namespace

std::string SolutionExpr::str(const std::string& func_name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print Func terms by descending derivative, then constants, then scalars
    std::vector<SolTerm> ordered = terms_;
    std::stable_sort(ordered.begin(), ordered.end(), [](const SolTerm& a, const SolTerm& b) {
        auto rank = [](const SolTerm& t) {
            return t.kind == BaseKind::Func ? 0 : t.kind == BaseKind::Constant ? 1 : 2;
        };
        if (rank(a) != rank(b)) return rank(a) < rank(b);
        return a.index > b.index;
    });
    for (auto& t : ordered) {
        RatFunc c = t.coeff;
        bool neg = c.num().leading_coeff() < 0 && c.num().terms().size() == 1;
        if (neg) c = -c;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        std::ostringstream fac;
        bool any = false;
        if (!t.exp_arg.is_zero()) { fac << (any ? "*" : "") << "exp(" << t.exp_arg.str() << ")"; any = true; }
        for (auto& [p, e] : t.pows) {
            fac << (any ? "*" : "") << "(" << p.str() << ")^(" << e.str() << ")";
            any = true;
        }
        for (auto& [p, m] : t.logs) {
            fac << (any ? "*" : "") << "log(" << p.str() << ")";
            if (m > 1) fac << "^" << m;
            any = true;
        }
        if (t.quad) {
            fac << (any ? "*" : "") << (t.quad->in_exp ? "exp(" : "") << "Int[("
                << t.quad->integrand.str() << ") d" << t.quad->var << "]"
                << (t.quad->in_exp ? ")" : "");
            any = true;
        }
        if (t.kind == BaseKind::Func) {
            fac << (any ? "*" : "") << func_name << primes(t.index) << "(y)";
            any = true;
        } else if (t.kind == BaseKind::Constant) {
            fac << (any ? "*" : "") << "C" << t.index;
            any = true;
        }
        if (!c.is_one() || !any) {
            bool par = c.num().terms().size() > 1 || !c.den().is_one();
            os << (par ? "(" : "") << c.str() << (par ? ")" : "");
            if (any) os << "*";
        }
        os << fac.str();
    }
    return os.str();
}

}  // namespace lieclass
