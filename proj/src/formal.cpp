#include "lieclass/formal.hpp"

#include "lieclass/linalg.hpp"
#include "lieclass/upoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace lieclass {

namespace {

bool divides(const DMono& a, const DMono& b) { return a.i <= b.i && a.j <= b.j; }

// One reduction pass: eliminate the highest reducible term of f.
bool reduce_step(DiffOp& f, const std::vector<DiffOp>& basis) {
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const DMono t = it->first;
        for (const DiffOp& g : basis) {
            if (g.is_zero()) continue;
            DMono lm = g.leading_mono();
            if (!divides(lm, t)) continue;
            DiffOp shift = op_mul(DiffOp::mono(t.i - lm.i, t.j - lm.j), g);
            RatFunc c = f.coeff(t.i, t.j) / shift.coeff(t.i, t.j);
            f -= shift.scaled(c);
            return true;
        }
    }
    return false;
}

std::vector<DiffOp> interreduce(std::vector<DiffOp> basis) {
    for (auto& b : basis)
        if (!b.is_zero()) b = b.monic();
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const DiffOp& d) { return d.is_zero(); }),
                basis.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            std::vector<DiffOp> rest;
            for (size_t t = 0; t < basis.size(); ++t)
                if (t != k) rest.push_back(basis[t]);
            DiffOp r = reduce(basis[k], rest);
            if (!(r == basis[k])) {
                basis = std::move(rest);
                if (!r.is_zero()) basis.push_back(r.monic());
                changed = true;
                break;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const DiffOp& a, const DiffOp& b) {
        DMono ma = a.leading_mono(), mb = b.leading_mono();
        return DMonoOrder{}(ma, mb);
    });
    return basis;
}

DiffOp s_pair(const DiffOp& f, const DiffOp& g) {
    DMono mf = f.leading_mono(), mg = g.leading_mono();
    DMono l{std::max(mf.i, mg.i), std::max(mf.j, mg.j)};
    DiffOp a = op_mul(DiffOp::mono(l.i - mf.i, l.j - mf.j), f);
    DiffOp b = op_mul(DiffOp::mono(l.i - mg.i, l.j - mg.j), g);
    return a.scaled(a.coeff(l.i, l.j).inverse()) - b.scaled(b.coeff(l.i, l.j).inverse());
}

// dims of the span of prolonged symbols of gens at degree k
int prolonged_symbol_dim(const std::vector<DiffOp>& gens, unsigned k) {
    Mat rows;
    for (const DiffOp& g : gens) {
        if (g.is_zero()) continue;
        unsigned kg = unsigned(g.order());
        if (kg > k) continue;
        BinaryForm s = principal_symbol(g);
        for (unsigned t = 0; t + kg <= k; ++t) {
            // multiply by xi^t eta^(k-kg-t)
            Row row(k + 1, RatFunc());
            for (unsigned c = 0; c < s.coeffs.size(); ++c)
                row[c + t] = s.coeffs[c];
            rows.push_back(std::move(row));
        }
    }
    return rank(std::move(rows));
}

}  // namespace

DiffOp reduce(const DiffOp& f, const std::vector<DiffOp>& basis) {
    DiffOp r = f;
    while (!r.is_zero() && reduce_step(r, basis)) {}
    return r;
}

CompletedIdeal complete(const std::vector<DiffOp>& gens) {
    CompletedIdeal ci;
    std::vector<DiffOp> basis = interreduce(gens);
    auto lcm_ord = [&](size_t i, size_t j) {
        DMono ma = basis[i].leading_mono(), mb = basis[j].leading_mono();
        return std::max(ma.i, mb.i) + std::max(ma.j, mb.j);
    };
    std::vector<std::pair<size_t, size_t>> queue;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) queue.push_back({i, j});
    while (!queue.empty()) {
        // normal selection: smallest lcm order first
        size_t best = 0;
        for (size_t t = 1; t < queue.size(); ++t)
            if (lcm_ord(queue[t].first, queue[t].second) <
                lcm_ord(queue[best].first, queue[best].second))
                best = t;
        auto [i, j] = queue[best];
        queue.erase(queue.begin() + long(best));
        DiffOp r = reduce(s_pair(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        r = r.monic();
        ci.witnesses.push_back({r.order(), r});
        basis.push_back(r);
        for (size_t t = 0; t + 1 < basis.size(); ++t) queue.push_back({t, basis.size() - 1});
    }
    ci.basis = interreduce(basis);
    ci.trivial = ci.basis.size() == 1 && ci.basis[0].order() == 0;
    return ci;
}

CompletedIdeal complete(const PDESystem& sys) { return complete(sys.generators); }

std::vector<BinaryForm> symbol_space(const CompletedIdeal& ci, unsigned k) {
    Mat rows;
    for (const DiffOp& g : ci.basis) {
        unsigned kg = unsigned(g.order());
        if (int(kg) > int(k)) continue;
        BinaryForm s = principal_symbol(g);
        for (unsigned t = 0; t + kg <= k; ++t) {
            Row row(k + 1, RatFunc());
            for (unsigned c = 0; c < s.coeffs.size(); ++c) row[c + t] = s.coeffs[c];
            rows.push_back(std::move(row));
        }
    }
    rref(rows);
    std::vector<BinaryForm> out;
    for (auto& row : rows) {
        bool nz = false;
        for (auto& v : row)
            if (!v.is_zero()) { nz = true; break; }
        if (!nz) continue;
        BinaryForm f;
        f.degree = k;
        f.coeffs = row;
        out.push_back(std::move(f));
    }
    return out;
}

int symbol_space_dim(const CompletedIdeal& ci, unsigned k) {
    // equals the staircase count of degree-k leading monomials; computed by
    // rank as the specification of the operation demands, with the staircase
    // count asserted as a cross-check
    Mat rows;
    for (const DiffOp& g : ci.basis) {
        if (g.is_zero()) continue;
        unsigned kg = unsigned(g.order());
        if (kg > k) continue;
        BinaryForm s = principal_symbol(g);
        for (unsigned t = 0; t + kg <= k; ++t) {
            Row row(k + 1, RatFunc());
            for (unsigned c = 0; c < s.coeffs.size(); ++c) row[c + t] = s.coeffs[c];
            rows.push_back(std::move(row));
        }
    }
    int r = rank(std::move(rows));
    int stair = 0;
    for (unsigned i = 0; i <= k; ++i) {
        DMono m{i, k - i};
        for (const DiffOp& g : ci.basis)
            if (divides(g.leading_mono(), m)) { ++stair; break; }
    }
    assert(r == stair);
    return r;
}

namespace {

// gcd of a list of binary forms over Q(x,y). Each form factors as
// xi^lo * eta^(d-hi) * P(t) with t = xi/eta and P(0) != 0; the gcd is
// xi^min(lo) * eta^min(d-hi) * gcd(P).
BinaryForm form_gcd(const std::vector<BinaryForm>& forms) {
    assert(!forms.empty());
    unsigned xi_pow = ~0u, eta_pow = ~0u;
    UPoly g;
    bool have_g = false;
    for (auto& f : forms) {
        if (f.is_zero()) continue;
        unsigned lo = 0, hi = f.degree;
        while (f.coeffs[lo].is_zero()) ++lo;
        while (f.coeffs[hi].is_zero()) --hi;
        xi_pow = std::min(xi_pow, lo);
        eta_pow = std::min(eta_pow, f.degree - hi);
        std::vector<RatFunc> c(f.coeffs.begin() + lo, f.coeffs.begin() + hi + 1);
        UPoly u{std::move(c)};
        g = have_g ? upoly_gcd(g, u) : u.monic();
        have_g = true;
    }
    assert(have_g);
    unsigned gd = unsigned(std::max(g.degree(), 0));
    BinaryForm out;
    out.degree = xi_pow + eta_pow + gd;
    out.coeffs.assign(out.degree + 1, RatFunc());
    for (unsigned k = 0; k <= gd; ++k) out.coeffs[k + xi_pow] = g.coeff(k);
    return out;
}

}  // namespace

CharData char_divisor(const CompletedIdeal& ci) {
    if (ci.trivial) return {};
    unsigned maxord = 0;
    for (auto& b : ci.basis) maxord = std::max(maxord, unsigned(b.order()));
    std::vector<int> dims;
    unsigned k = 0, kstab = 0;
    for (;; ++k) {
        dims.push_back(int(k) + 1 - symbol_space_dim(ci, k));
        size_t n = dims.size();
        if (k > maxord && n >= 2 && dims[n - 1] == dims[n - 2]) { kstab = k - 1; break; }
        if (k > maxord + 64) throw NonDiscreteCharVariety();
    }
    CharData cd;
    if (dims[kstab] == 0) { cd.omega = 0; return cd; }  // finite type
    std::vector<BinaryForm> jk = symbol_space(ci, kstab);
    BinaryForm g = form_gcd(jk);
    cd.omega = g.degree;
    // square-free factorization of g: split off xi^a, eta^b powers, then the
    // bivariate polynomial content in (xi, eta) treated via Poly with x=xi,y=eta
    unsigned lo = 0, hi = g.degree;
    while (lo <= g.degree && g.coeffs[lo].is_zero()) ++lo;
    while (hi > lo && g.coeffs[hi].is_zero()) --hi;
    auto push_power = [&](unsigned xi_e, unsigned eta_e, unsigned mult) {
        BinaryForm f;
        f.degree = xi_e + eta_e;
        f.coeffs.assign(f.degree + 1, RatFunc());
        f.coeffs[xi_e] = RatFunc(1);
        cd.divisor.push_back({f, mult});
    };
    if (lo > 0) push_power(1, 0, lo);
    if (g.degree - hi > 0) push_power(0, 1, g.degree - hi);
    if (hi > lo) {
        // middle part as polynomial in t = xi/eta with Q(x,y) coefficients:
        // square-free decompose over the field
        std::vector<RatFunc> c(g.coeffs.begin() + lo, g.coeffs.begin() + hi + 1);
        UPoly mid{std::vector<RatFunc>(c)};
        for (auto& [f, mult] : upoly_squarefree(mid)) {
            BinaryForm bf;
            bf.degree = unsigned(f.degree());
            bf.coeffs.assign(bf.degree + 1, RatFunc());
            for (unsigned t = 0; t <= bf.degree; ++t) bf.coeffs[t] = f.coeff(t);
            cd.divisor.push_back({bf, mult});
        }
    }
    return cd;
}

SymbolProfile symbol_profile(const CompletedIdeal& ci) {
    SymbolProfile sp;
    unsigned maxord = 0;
    for (auto& b : ci.basis) maxord = std::max(maxord, unsigned(b.order()));
    std::vector<int> dims;
    for (unsigned k = 0;; ++k) {
        dims.push_back(int(k) + 1 - symbol_space_dim(ci, k));
        size_t n = dims.size();
        // stabilization guard: constant for 2 consecutive orders past max order
        if (k >= maxord + 2 && dims[n - 1] == dims[n - 2] && dims[n - 2] == dims[n - 3]) {
            sp.k_stab = k - 2;
            break;
        }
        if (k > maxord + 64) throw NonDiscreteCharVariety();
    }
    CharData cd = char_divisor(ci);
    sp.omega = cd.omega;
    sp.char_divisor = std::move(cd.divisor);
    sp.gdims.assign(dims.begin(), dims.begin() + sp.k_stab + 2);
    long kap = 0;
    for (unsigned k = 0; k <= sp.k_stab; ++k) kap += dims[k] - int(sp.omega);
    kap += long(sp.omega) * (long(sp.omega) - 1) / 2;
    sp.kappa = unsigned(kap);
    return sp;
}

Compatibility is_compatible(const PDESystem& sys, const CompletedIdeal& ci) {
    Compatibility out;
    unsigned maxk = 0;
    for (auto& b : ci.basis) maxk = std::max(maxk, unsigned(b.order()));
    for (auto& g : sys.generators) maxk = std::max(maxk, unsigned(g.order()));
    maxk += 2;
    bool ok = true;
    for (unsigned k = 0; k <= maxk && ok; ++k) {
        if (symbol_space_dim(ci, k) != prolonged_symbol_dim(sys.generators, k)) ok = false;
    }
    if (ok) return out;
    out.compatible = false;
    // first chronological completion element whose symbol escapes the input span
    for (auto& w : ci.witnesses) {
        unsigned k = unsigned(w.order);
        Mat rows;
        for (const DiffOp& g : sys.generators) {
            unsigned kg = unsigned(g.order());
            if (kg > k) continue;
            BinaryForm s = principal_symbol(g);
            for (unsigned t = 0; t + kg <= k; ++t) {
                Row row(k + 1, RatFunc());
                for (unsigned c = 0; c < s.coeffs.size(); ++c) row[c + t] = s.coeffs[c];
                rows.push_back(std::move(row));
            }
        }
        int before = rank(rows);
        BinaryForm s = principal_symbol(w.element);
        Row row(k + 1, RatFunc());
        for (unsigned c = 0; c < s.coeffs.size(); ++c) row[c] = s.coeffs[c];
        rows.push_back(std::move(row));
        if (rank(rows) > before) {
            out.order = w.order;
            out.witness = w.element;
            return out;
        }
    }
    // fall back to the first witness
    if (!ci.witnesses.empty()) {
        out.order = ci.witnesses.front().order;
        out.witness = ci.witnesses.front().element;
    }
    return out;
}

SpencerData spencer_numbers(const PDESystem& sys, const CompletedIdeal& ci) {
    (void)sys;
    SpencerData sd;
    unsigned maxord = 0;
    for (auto& b : ci.basis) maxord = std::max(maxord, unsigned(b.order()));
    for (unsigned k = 1; k <= maxord; ++k) {
        int dk = symbol_space_dim(ci, k);
        // span of S_1 * J_{k-1}
        Mat rows;
        for (const DiffOp& g : ci.basis) {
            unsigned kg = unsigned(g.order());
            if (kg + 1 > k) continue;
            BinaryForm s = principal_symbol(g);
            for (unsigned t = 0; t + kg <= k - 1; ++t) {
                Row r1(k + 1, RatFunc()), r2(k + 1, RatFunc());
                for (unsigned c = 0; c < s.coeffs.size(); ++c) {
                    r1[c + t] = s.coeffs[c];      // * eta
                    r2[c + t + 1] = s.coeffs[c];  // * xi
                }
                rows.push_back(std::move(r1));
                rows.push_back(std::move(r2));
            }
        }
        int pk = rank(std::move(rows));
        if (dk - pk > 0) sd.m[k] = unsigned(dk - pk);
    }
    for (auto& [k, cnt] : sd.m) {
        sd.h1 += cnt;
        for (unsigned t = 0; t < cnt; ++t) sd.type_sig.push_back(k);
    }
    std::sort(sd.type_sig.begin(), sd.type_sig.end());
    sd.h2 = sd.h1 > 0 ? sd.h1 - 1 : 0;
    return sd;
}

std::string type_name(const std::vector<unsigned>& orders) {
    if (orders.empty()) return "0";
    std::ostringstream os;
    unsigned k = orders[0], cnt = 0;
    bool first = true;
    auto flush = [&]() {
        if (!cnt) return;
        if (!first) os << "+";
        first = false;
        if (cnt > 1) os << cnt;
        os << "E" << k;
    };
    for (unsigned o : orders) {
        if (o == k) { ++cnt; continue; }
        flush();
        k = o;
        cnt = 1;
    }
    flush();
    return os.str();
}

std::vector<DiffOp> ideal_span_echelon(const std::vector<DiffOp>& basis, unsigned n) {
    std::vector<DiffOp> ech;
    // multiples sorted so leading monomials arrive in ascending order
    std::vector<DiffOp> mults;
    for (const DiffOp& b : basis) {
        unsigned kb = unsigned(b.order());
        if (kb > n) continue;
        for (unsigned i = 0; i + kb <= n; ++i)
            for (unsigned j = 0; i + j + kb <= n; ++j)
                mults.push_back(op_mul(DiffOp::mono(i, j), b));
    }
    std::sort(mults.begin(), mults.end(), [](const DiffOp& a, const DiffOp& b) {
        return DMonoOrder{}(a.leading_mono(), b.leading_mono());
    });
    std::map<DMono, DiffOp, DMonoOrder> pivots;
    for (DiffOp e : mults) {
        while (!e.is_zero()) {
            auto it = pivots.find(e.leading_mono());
            if (it == pivots.end()) break;
            e -= it->second.scaled(e.leading_coeff());
        }
        if (!e.is_zero()) pivots[e.leading_mono()] = e.monic();
    }
    for (auto& [m, e] : pivots) ech.push_back(e);
    return ech;
}

}  // namespace lieclass
