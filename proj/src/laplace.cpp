#include "lieclass/laplace.hpp"

#include "lieclass/check.hpp"
#include "lieclass/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace lieclass {

namespace {

bool is_xi_simple(const SymbolProfile& sp) {
    // divisor == {xi : 1}
    if (sp.omega != 1 || sp.char_divisor.size() != 1) return false;
    const DivisorPoint& d = sp.char_divisor[0];
    return d.multiplicity == 1 && d.factor.degree == 1 && d.factor.coeffs[1].is_one() &&
           d.factor.coeffs[0].is_zero();
}

// Select Spencer-minimal generators from the completed basis, sorted by
// ascending Dy-degree of the leading monomial.
std::vector<DiffOp> minimal_generators(const CompletedIdeal& ci, const SpencerData& sd) {
    std::vector<DiffOp> out;
    unsigned maxord = 0;
    for (auto& b : ci.basis) maxord = std::max(maxord, unsigned(b.order()));
    for (unsigned k = 1; k <= maxord; ++k) {
        auto it = sd.m.find(k);
        if (it == sd.m.end()) continue;
        unsigned want = it->second;
        // prolongation span of lower-order symbols at degree k
        Mat rows;
        for (const DiffOp& g : ci.basis) {
            unsigned kg = unsigned(g.order());
            if (kg >= k) continue;
            BinaryForm s = principal_symbol(g);
            for (unsigned t = 0; t + kg <= k; ++t) {
                Row row(k + 1, RatFunc());
                for (unsigned c = 0; c < s.coeffs.size(); ++c) row[c + t] = s.coeffs[c];
                rows.push_back(std::move(row));
            }
        }
        unsigned got = 0;
        for (const DiffOp& g : ci.basis) {
            if (unsigned(g.order()) != k || got == want) continue;
            BinaryForm s = principal_symbol(g);
            Row row(k + 1, RatFunc());
            for (unsigned c = 0; c < s.coeffs.size(); ++c) row[c] = s.coeffs[c];
            int before = rank(rows);
            rows.push_back(row);
            if (rank(rows) > before) {
                out.push_back(g);
                ++got;
            } else {
                rows.pop_back();
            }
        }
        lc_check(got == want, "Spencer-minimal generator selection");
    }
    std::sort(out.begin(), out.end(), [](const DiffOp& a, const DiffOp& b) {
        return a.leading_mono().j < b.leading_mono().j;
    });
    return out;
}

Prepared prepare_impl(const PDESystem& sys, bool require_class1) {
    Prepared p;
    p.ci = complete(sys);
    Compatibility c = is_compatible(sys, p.ci);
    if (!c.compatible) throw IncompatibleSystem(c);
    p.profile = symbol_profile(p.ci);
    p.spencer = spencer_numbers(sys, p.ci);
    if (require_class1) {
        if (p.profile.omega != 1) throw NotClassOne(p.profile.omega);
        if (!is_xi_simple(p.profile)) throw CharNotStraightened();
    }
    p.sys.frame = sys.frame;
    p.sys.generators = minimal_generators(p.ci, p.spencer);
    return p;
}

// Scan elements of the ideal up to the given order, Gauss-eliminating their
// framed pure-Y remainders in a deterministic order. Calls `hit` for every
// element whose reduced remainder is nonzero; `hit` returns true to stop.
// Elements with remainder reduced to zero go to `kernel` when given.
void scan_remainders(const std::vector<DiffOp>& basis, const RatFunc& a, unsigned bound,
                     const std::function<bool(const DiffOp&, const DiffOp&)>& hit,
                     std::vector<DiffOp>* kernel) {
    std::vector<std::pair<DiffOp, DiffOp>> pivots;  // (remainder, element)
    for (const DiffOp& e0 : ideal_span_echelon(basis, bound)) {
        DiffOp rem = right_divide_x(e0, a).rem;
        DiffOp e = e0;
        bool again = true;
        while (again && !rem.is_zero()) {
            again = false;
            for (auto& [prem, pe] : pivots) {
                DMono pm = prem.leading_mono();
                RatFunc c = rem.coeff(pm.i, pm.j);
                if (c.is_zero()) continue;
                RatFunc f = c / prem.leading_coeff();
                rem -= prem.scaled(f);
                e -= pe.scaled(f);
                again = true;
                break;
            }
        }
        if (rem.is_zero()) {
            if (kernel && !e.is_zero()) kernel->push_back(e);
            continue;
        }
        if (hit && hit(rem, e)) return;
        pivots.push_back({rem, e});
    }
}

std::string upsilon_family_name(const std::vector<unsigned>& sig, bool class2) {
    if (sig == std::vector<unsigned>{2, 2}) return "U22";
    if (sig == std::vector<unsigned>{2, 3}) return class2 ? "U23-2" : "U23-1";
    if (sig == std::vector<unsigned>{3, 3, 3}) return "U333";
    if (sig == std::vector<unsigned>{3, 3}) return class2 ? "U33-2" : "U33-1";
    return "";
}

}  // namespace

std::string inverse_kind_name(InverseKind k) {
    switch (k) {
        case InverseKind::Differential: return "differential";
        case InverseKind::Frobenius: return "frobenius";
        case InverseKind::Integral: return "integral";
    }
    return "?";
}

Prepared normalize_generators(const PDESystem& sys) { return prepare_impl(sys, true); }
Prepared prepare_any(const PDESystem& sys) { return prepare_impl(sys, false); }

std::pair<GaugeChoice, Prepared> basic_gauge(const Prepared& p) {
    const std::vector<DiffOp>& gens = p.sys.generators;
    assert(!gens.empty());
    const DiffOp& last = gens.back();
    DMono lm = last.leading_mono();
    if (lm.i != 1) throw CharNotStraightened();
    unsigned jr = lm.j;
    // in the current frame
    const RatFunc a0 = p.sys.frame.a;
    for (const DiffOp& g : gens) {
        FramedOp fo = rewrite_in_frame(g, p.sys.frame);
        for (auto& [ji, c] : fo) {
            auto [j, i] = ji;
            if (i != 0 || c.is_zero()) continue;
            if (j > jr) throw GaugeEquationDifferential();  // unreachable for
                                                            // inter-reduced input
            if (j == jr && !(g == last))
                throw GaugeEquationDifferential();
        }
    }
    FramedOp fo = rewrite_in_frame(last, p.sys.frame);
    RatFunc beta;
    auto it = fo.find({jr, 0});
    if (it != fo.end()) beta = it->second;
    // the coefficient of Y^jr X in the monic last generator is 1, so the
    // shifted coefficient is beta - a and the solution set is the single
    // point a = beta
    GaugeChoice gc{a0 + beta, RatFunc(1)};
    Prepared gauged = p;
    gauged.sys.frame.a = gc.a;
    return {gc, gauged};
}

std::vector<DiffOp> inverse_operators(const CompletedIdeal& ci, const RatFunc& a,
                                      unsigned order_bound, unsigned max_count) {
    std::vector<DiffOp> found;
    for (unsigned n = 1; n <= order_bound && found.empty(); ++n) {
        scan_remainders(ci.basis, a, n,
                        [&](const DiffOp& rem, const DiffOp& e) {
                            if (rem.order() != 0) return false;
                            // rem = c * 1 with c != 0: u = -(quot/c)[v]
                            RatFunc c = rem.coeff(0, 0);
                            DiffOp el = e.scaled(c.inverse());
                            DiffOp quot = right_divide_x(el, a).quot;
                            found.push_back(-quot);
                            return found.size() >= max_count;
                        },
                        nullptr);
    }
    return found;
}

std::optional<DiffOp> inverse_operator(const Prepared& gauged, const GaugeChoice& gauge) {
    auto v = inverse_operators(gauged.ci, gauge.a, gauged.profile.k_stab + 1, 1);
    if (v.empty()) return std::nullopt;
    return v[0];
}

bool inverse_unique_check(const DiffOp& l1, const DiffOp& l2, const CompletedIdeal& transformed) {
    return reduce(l1 - l2, transformed.basis).is_zero();
}

RelativeInvariants relative_invariants(const Prepared& gauged, const GaugeChoice& gauge) {
    RelativeInvariants out;
    const auto& sig = gauged.spencer.type_sig;
    out.type = type_name(sig);
    const std::vector<DiffOp>& gens = gauged.sys.generators;
    const RatFunc& a = gauge.a;
    auto rrem = [&](const DiffOp& g) { return right_divide_x(g, a).rem; };
    auto framed = [&](const DiffOp& g, unsigned j, unsigned i) {
        FramedOp fo = rewrite_in_frame(g, gauged.sys.frame);
        auto it = fo.find({j, i});
        return it == fo.end() ? RatFunc() : it->second;
    };
    auto nonzero = [](const RatFunc& f) { return !f.is_zero(); };

    if (sig == std::vector<unsigned>{2, 2}) {
        out.family = "U22";
        DiffOp r = rrem(gens[1]);
        RatFunc c2 = r.coeff(0, 0);
        out.values.push_back({"c2", c2, ""});
        out.branch = nonzero(c2) ? "U22a" : "U22b";
        return out;
    }
    if (sig == std::vector<unsigned>{2, 3}) {
        // order the generator pair as (order-2, order-3)
        DiffOp g2 = gens[0].order() == 2 ? gens[0] : gens[1];
        DiffOp g3 = gens[0].order() == 2 ? gens[1] : gens[0];
        bool corner_class2 = g2.leading_mono() == DMono{2, 0};
        bool mixed = !corner_class2 && !g2.coeff(2, 0).is_zero();
        bool class2 = corner_class2 || mixed;
        out.family = upsilon_family_name(sig, class2);
        if (!class2) {
            RatFunc e1 = rrem(g2).coeff(0, 0);
            out.values.push_back({"e1", e1, ""});
            out.branch = nonzero(e1) ? "U23-1a" : "U23-1b";
        } else {
            DiffOp r = rrem(g3);
            RatFunc d2 = r.coeff(0, 1), e2 = r.coeff(0, 0);
            out.values.push_back({"d2", d2, ""});
            out.values.push_back({"e2", e2, "d2 = 0"});
            if (mixed) {
                // the double-characteristic component sits inside a Dy-major
                // E2 generator: an invertible constant part there gives the
                // differential branch (letter b in this family's lettering)
                RatFunc e1 = rrem(g2).coeff(0, 0);
                out.values.push_back({"e1", e1, ""});
                out.branch = nonzero(e1)  ? "U23-2b"
                             : nonzero(d2) ? "U23-2a"
                             : nonzero(e2) ? "U23-2b"
                                           : "U23-2c";
            } else {
                out.branch = nonzero(d2) ? "U23-2a" : nonzero(e2) ? "U23-2b" : "U23-2c";
            }
        }
        return out;
    }
    if (sig == std::vector<unsigned>{3, 3, 3}) {
        out.family = "U333";
        DiffOp r1 = rrem(gens[0]), r2 = rrem(gens[1]), r3 = rrem(gens[2]);
        RatFunc f1 = r1.coeff(0, 0), f2 = r2.coeff(0, 0);
        RatFunc e3 = r3.coeff(0, 1), f3 = r3.coeff(0, 0);
        RatFunc b1 = framed(gens[0], 1, 1), b2 = framed(gens[1], 1, 1);
        out.values.push_back({"e3", e3, ""});
        out.values.push_back({"b1", b1, ""});
        out.values.push_back({"f1", f1, ""});
        out.values.push_back({"f2", f2, "f1 = 0"});
        out.values.push_back({"f3", f3, "f1 = f2 = 0"});
        // compatibility ties: f1 = b1 e3, f2 = b2 e3 + (e3)_x
        out.ties_ok = (f1 == b1 * e3) && (f2 == b2 * e3 + e3.derive_x());
        if (nonzero(e3) && nonzero(f1)) out.branch = "U333a";
        else if (nonzero(e3) && nonzero(f2)) out.branch = "U333b";
        else if (nonzero(e3)) out.branch = "U333c";
        else if (nonzero(f3)) out.branch = "U333d";
        else out.branch = "U333e";
        return out;
    }
    if (sig == std::vector<unsigned>{3, 3}) {
        bool class2 = gens[0].leading_mono() == DMono{3, 0};
        out.family = upsilon_family_name(sig, class2);
        DiffOp r1 = rrem(gens[0]), r2 = rrem(gens[1]);
        RatFunc f1 = r1.coeff(0, 0);
        RatFunc e2 = r2.coeff(0, 1), f2 = r2.coeff(0, 0);
        RatFunc b1 = framed(gens[0], 1, 1);
        out.values.push_back({"e2", e2, ""});
        out.values.push_back({"b1", b1, ""});
        out.values.push_back({"f1", f1, ""});
        out.values.push_back({"f2", f2, "e2 = 0"});
        out.ties_ok = (f1 == b1 * e2);
        std::string pre = class2 ? "U33-2" : "U33-1";
        if (nonzero(f1)) out.branch = pre + "a";
        else if (nonzero(e2)) out.branch = pre + "b";
        else if (nonzero(f2)) out.branch = pre + "c";
        else out.branch = pre + "d";
        return out;
    }
    throw UnsupportedType(out.type);
}

namespace {

std::vector<DiffOp> transformed_generators(const CompletedIdeal& ci, const RatFunc& a,
                                           unsigned bound) {
    std::vector<DiffOp> kernel;
    scan_remainders(ci.basis, a, bound, nullptr, &kernel);
    std::vector<DiffOp> quots;
    for (const DiffOp& e : kernel) {
        DiffOp q = right_divide_x(e, a).quot;
        if (!q.is_zero()) quots.push_back(q);
    }
    return quots;
}

}  // namespace

LaplaceStep laplace_step(const Prepared& gauged, const GaugeChoice& gauge) {
    LaplaceStep step;
    step.gauge = gauge;
    step.type = type_name(gauged.spencer.type_sig);
    step.kappa_before = gauged.profile.kappa;
    try {
        RelativeInvariants ri = relative_invariants(gauged, gauge);
        step.branch = ri.branch;
    } catch (const UnsupportedType&) {
        step.branch.clear();
    }

    unsigned bound = gauged.profile.k_stab + 1;
    // transformed system
    std::vector<DiffOp> gens = transformed_generators(gauged.ci, gauge.a, bound);
    step.transformed_ci = complete(gens);
    SymbolProfile tp = symbol_profile(step.transformed_ci);
    SpencerData tsd = spencer_numbers(PDESystem{gens, Frame{}}, step.transformed_ci);
    step.transformed.frame = Frame{};
    step.transformed.generators = minimal_generators(step.transformed_ci, tsd);
    step.kappa_after = tp.kappa;

    // inverse
    auto invs = inverse_operators(gauged.ci, gauge.a, bound, 1);
    if (!invs.empty()) {
        step.inverse_kind = InverseKind::Differential;
        step.inverse_op = invs[0];
        step.inverse_order = invs[0].order();
        // contract: L∘X = 1 and X∘L = 1 modulo the respective ideals
        DiffOp X = DiffOp::mono(1, 0) + DiffOp(gauge.a);
        lc_check(reduce(op_mul(*step.inverse_op, X) - DiffOp(RatFunc(1)), gauged.ci.basis).is_zero(),
                 "L∘X = 1 mod the source ideal");
        lc_check(reduce(op_mul(X, *step.inverse_op) - DiffOp(RatFunc(1)),
                        step.transformed_ci.basis).is_zero(),
                 "X∘L = 1 mod the transformed ideal");
    } else {
        // first-order pin: ideal element with remainder p*Y + q, p != 0
        std::optional<FrobeniusInverse> pin;
        for (unsigned n = 1; n <= bound && !pin; ++n) {
            scan_remainders(gauged.ci.basis, gauge.a, n,
                            [&](const DiffOp& rem, const DiffOp& e) {
                                if (!(rem.leading_mono() == DMono{0, 1})) return false;
                                RatFunc p = rem.coeff(0, 1), q = rem.coeff(0, 0);
                                DiffOp B = -right_divide_x(e, gauge.a).quot.scaled(p.inverse());
                                pin = FrobeniusInverse{gauge.a, q / p, B};
                                return true;
                            },
                            nullptr);
        }
        if (pin) {
            step.inverse_kind = InverseKind::Frobenius;
            step.inverse_system = pin;
            step.inverse_order = 0;
        } else {
            step.inverse_kind = InverseKind::Integral;
            step.inverse_order = -1;
        }
    }

    // the complexity strictly decreases; class-0 results are lower than any
    // class-1 system by definition
    if (tp.omega != 0)
        lc_check(step.kappa_after < step.kappa_before, "complexity decrease");
    // branch (3) leaves the class-1 table; branches (1)-(2) stay in it
    if (step.inverse_kind == InverseKind::Integral)
        lc_check(tp.omega == 0, "integral inverse only at class 0");
    else
        lc_check(tp.omega == 1, "differential/frobenius branches stay in class 1");
    return step;
}

namespace {

struct TerminalSolution {
    SolutionExpr expr;
    std::string kind;  // "E1" or "frobenius"
};

// mu_y / mu for a single-term scalar factor, when it is rational.
std::optional<RatFunc> log_derivative_y(const SolTerm& t) {
    if (t.quad) return std::nullopt;
    RatFunc out = t.coeff.derive_y() / t.coeff;
    out += t.exp_arg.derive_y();
    for (auto& [p, e] : t.pows) {
        if (!e.derive_y().is_zero()) return std::nullopt;  // would need a log
        out += e * RatFunc(p.derive_y()) / RatFunc(p);
    }
    if (!t.logs.empty()) return std::nullopt;
    return out;
}

SolutionExpr invert_scalar(const SolutionExpr& mu) {
    assert(mu.terms().size() == 1);
    SolTerm t = mu.terms()[0];
    assert(t.kind == BaseKind::One && !t.quad);
    SolTerm r;
    r.coeff = t.coeff.inverse();
    r.exp_arg = -t.exp_arg;
    for (auto& [p, e] : t.pows) r.pows[p] = -e;
    assert(t.logs.empty());
    SolutionExpr e;
    e.push_term(std::move(r));
    return e;
}

// exp(-∫ a dx) as a solution factor
SolutionExpr homogeneous_factor_x(const RatFunc& a) {
    return SolutionExpr::exp_of_integral_x(integrate_x(-a));
}

SolutionExpr homogeneous_factor_y(const RatFunc& w) {
    return SolutionExpr::exp_of_integral_y(integrate_y(-w));
}

// Solve u_x + a u = v, u_y + rho u = B[v]; adds the constant C_{cid}.
SolutionExpr solve_frobenius(const FrobeniusInverse& fi, const SolutionExpr& v, int cid) {
    SolutionExpr mu = homogeneous_factor_x(fi.a);
    SolutionExpr P = integrate_expr_x(v * invert_scalar(mu));
    auto muy = log_derivative_y(mu.terms()[0]);
    if (!muy) {
        // non-rational integrating factor: leave the y-resolution unevaluated
        SolutionExpr gq;
        SolTerm c;
        c.kind = BaseKind::Constant;
        c.index = cid;
        c.quad = Quad{'y', fi.rho, false};
        gq.push_term(std::move(c));
        return mu * P + mu * gq;
    }
    RatFunc w = *muy + fi.rho;
    lc_check(!w.depends_on_x(), "frobenius integrating factor is a function of y");
    SolutionExpr upart = mu * P;
    SolutionExpr S = (op_apply(fi.B, v) - (upart.derive('y') + upart.scaled(fi.rho))) *
                     invert_scalar(mu);
    // S must be x-free by the compatibility of the pair; checked term by term
    for (auto& t : S.terms()) lc_check(!t.coeff.depends_on_x(), "frobenius consistency");
    SolutionExpr nu = homogeneous_factor_y(w);
    SolutionExpr g = nu * (integrate_expr_y(S * invert_scalar(nu)) +
                           SolutionExpr::constant(cid));
    return mu * (P + g);
}

// Solve u_x + a u = v with the arbitrary function as the complementary part.
SolutionExpr solve_integral(const RatFunc& a, const SolutionExpr& v) {
    SolutionExpr mu = homogeneous_factor_x(a);
    SolutionExpr P = integrate_expr_x(v * invert_scalar(mu));
    return mu * (P + SolutionExpr::func(0));
}

}  // namespace

IntegrateResult integrate(const PDESystem& sys) {
    IntegrateResult out;
    std::vector<LaplaceStep> steps;
    PDESystem cur = sys;
    int next_const = 1;
    TerminalSolution terminal;
    for (;;) {
        Prepared p = prepare_any(cur);
        if (p.profile.omega == 0) {
            // finite type: order-1 systems solve by quadratures
            unsigned maxord = 0;
            for (auto& b : p.ci.basis) maxord = std::max(maxord, unsigned(b.order()));
            if (maxord >= 2) throw ReducedToODE(p.ci.basis);
            // basis is {Dx + alpha, Dy + beta}
            RatFunc alpha, beta;
            for (auto& b : p.ci.basis) {
                if (b.leading_mono() == DMono{1, 0}) alpha = b.coeff(0, 0);
                else beta = b.coeff(0, 0);
            }
            SolutionExpr mu = homogeneous_factor_x(alpha);
            auto muy = log_derivative_y(mu.terms()[0]);
            SolutionExpr h;
            if (muy) {
                RatFunc wy = beta + *muy;
                lc_check(!wy.depends_on_x(), "first-order class-0 consistency");
                h = homogeneous_factor_y(wy);
            } else {
                SolTerm t;
                t.quad = Quad{'y', beta, false};
                h.push_term(std::move(t));
            }
            terminal.expr = mu * h * SolutionExpr::constant(next_const);
            ++next_const;
            terminal.kind = "frobenius";
            break;
        }
        if (p.profile.omega == 1 && p.profile.kappa == 0) {
            if (!is_xi_simple(p.profile)) throw CharNotStraightened();
            const DiffOp& g = p.ci.basis[0];
            lc_check(g.order() == 1 && g.leading_mono() == DMono{1, 0}, "E1 terminal shape");
            RatFunc alpha = g.coeff(0, 0);
            terminal.expr = homogeneous_factor_x(alpha) * SolutionExpr::func(0);
            terminal.kind = "E1";
            break;
        }
        Prepared norm = normalize_generators(cur);
        auto [gauge, gauged] = basic_gauge(norm);
        LaplaceStep step = laplace_step(gauged, gauge);
        out.trace.push_back({step.type, step.kappa_before, step.branch, step.inverse_kind,
                             step.inverse_order});
        cur = step.transformed;
        steps.push_back(std::move(step));
    }
    out.terminal = terminal.kind;

    // compose inverses front-to-back
    SolutionExpr v = terminal.expr;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->inverse_kind) {
            case InverseKind::Differential:
                v = op_apply(*it->inverse_op, v);
                break;
            case InverseKind::Frobenius:
                v = solve_frobenius(*it->inverse_system, v, next_const++);
                break;
            case InverseKind::Integral:
                v = solve_integral(it->gauge.a, v);
                break;
        }
    }
    out.solution = v;
    out.q = std::max(v.max_func_derivative(), 0);
    out.n_constants = int(v.constant_ids().size());
    if (!v.has_quadrature()) out.verified = verify_solution(sys, v);
    return out;
}

bool verify_solution(const PDESystem& sys, const SolutionExpr& sol) {
    for (const DiffOp& g : sys.generators) {
        if (!op_apply(g, sol).is_zero()) return false;
    }
    return true;
}

std::vector<TraceEntry> complexity_trace(const PDESystem& sys) {
    std::vector<TraceEntry> trace;
    PDESystem cur = sys;
    unsigned prev_kappa = 0;
    bool have_prev = false;
    for (;;) {
        Prepared p = prepare_any(cur);
        if (p.profile.omega != 1 || p.profile.kappa == 0) break;
        Prepared norm = normalize_generators(cur);
        auto [gauge, gauged] = basic_gauge(norm);
        LaplaceStep step = laplace_step(gauged, gauge);
        trace.push_back({step.type, step.kappa_before, step.branch, step.inverse_kind,
                         step.inverse_order});
        lc_check(!have_prev || step.kappa_before < prev_kappa, "trace is a descending route");
        have_prev = true;
        prev_kappa = step.kappa_before;
        cur = step.transformed;
    }
    return trace;
}

}  // namespace lieclass
