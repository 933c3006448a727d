#include "lieclass/zoo.hpp"

#include "lieclass/formal.hpp"

#include <algorithm>
#include <functional>
#include <cassert>
#include <map>
#include <sstream>

namespace lieclass {

std::string TypeSig::name() const { return type_name(orders); }

bool DimProfile::valid() const {
    if (d.empty()) return true;
    if (d[0] != 0) return false;
    bool seen_zero = false;
    for (size_t i = 1; i < d.size(); ++i) {
        if (d[i] > d[i - 1] + 1) return false;
        if (d[i] == 0) seen_zero = true;
        else if (seen_zero) return false;  // no interior zeros
    }
    return true;
}

unsigned kappa_of_profile(const DimProfile& p) {
    unsigned s = 0;
    for (unsigned v : p.d) s += v;
    return s;
}

ComplexityBound complexity_bound(const TypeSig& t) {
    ComplexityBound out{0, false, std::nullopt};
    const auto& k = t.orders;
    unsigned r = unsigned(k.size());
    long b = 0;
    for (unsigned i = 0; i < r; ++i) b += long(k[i]) - long(i + 1);
    b += (long(k[0]) - long(r)) * (long(k[r - 1]) - long(r));
    out.bound = unsigned(b);
    if (r == 2 || r == k[0]) out.equality = true;
    if (r == k[0]) {
        long e = -long(r) * long(r + 1) / 2;
        for (unsigned v : k) e += long(v);
        out.exact = unsigned(e);
    }
    return out;
}

unsigned generalized_kappa(const std::vector<int>& gdims, unsigned omega) {
    long s = 0;
    for (size_t i = omega; i < gdims.size(); ++i) s += gdims[i] - int(omega);
    return unsigned(s);
}

namespace {

// --- symbolic oracle over Q -------------------------------------------------
//
// A candidate is a batch list {(degree, count)} of symbol cofactors h_j (the
// symbols are xi*h_j) together with the chain of cumulative gcd degrees after
// each batch. The oracle builds a generic rational instance subject to the
// gcd constraints and measures colength, minimal generator degrees and the
// class by exact linear algebra. Genericity is derandomized by taking the
// maximal rank over a fixed deterministic coefficient sequence.

struct QPoly {  // univariate over Q, coefficient index = xi-power
    std::vector<Rat> c;
    int degree() const { return int(c.size()) - 1; }
};

QPoly qmul(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

int qrank(std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t cc = c; cc < cols; ++cc) m[i][cc] -= f * m[r][cc];
        }
        ++r;
    }
    return int(r);
}

struct OracleResult {
    unsigned colength = 0;
    std::vector<unsigned> gen_degrees;  // minimal generator degrees of J'
    bool artinian = false;              // gcd of the cofactor ideal is 1
};

// deterministic "generic" coefficient stream (small integers, so the exact
// ranks stay cheap)
struct CoefStream {
    long state;
    explicit CoefStream(long seed) : state(seed) {}
    long next_int() {
        state = (state * 48271) % 2147483647;
        long v = (state % 37) - 18;
        if (v == 0) v = 7;
        return v;
    }
    Rat next() { return Rat(next_int()); }
};

// --- fast mod-p pre-filter ---------------------------------------------------
// Candidate screening runs over a fixed prime field with machine integers;
// accepted candidates are then re-verified over Q.
constexpr uint64_t kP = 2147483629ull;

uint64_t modpow(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    b %= kP;
    while (e) {
        if (e & 1) r = r * b % kP;
        b = b * b % kP;
        e >>= 1;
    }
    return r;
}

int prank(std::vector<std::vector<uint64_t>>& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        uint64_t inv = modpow(m[r][c], kP - 2);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            uint64_t f = m[i][c] * inv % kP;
            for (size_t cc = c; cc < cols; ++cc)
                m[i][cc] = (m[i][cc] + (kP - f) * m[r][cc]) % kP;
        }
        ++r;
    }
    return int(r);
}

using PPoly = std::vector<uint64_t>;

PPoly pmul(const PPoly& a, const PPoly& b) {
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % kP;
    return r;
}

OracleResult run_oracle_modp(const std::vector<std::pair<unsigned, unsigned>>& batches,
                             const std::vector<unsigned>& chain, long seed) {
    CoefStream cs(seed);
    std::vector<std::pair<unsigned, PPoly>> cof;
    for (size_t b = 0; b < batches.size(); ++b) {
        auto [deg, cnt] = batches[b];
        unsigned g = chain[b];
        PPoly shared{1};
        for (unsigned t = 0; t < g; ++t) shared = pmul(shared, PPoly{kP - (t + 2), 1});
        for (unsigned c = 0; c < cnt; ++c) {
            PPoly rest(deg - g + 1);
            for (auto& v : rest) {
                long x = cs.next_int();
                v = x >= 0 ? uint64_t(x) : kP - uint64_t(-x);
            }
            cof.push_back({deg, pmul(shared, rest)});
        }
    }
    OracleResult out;
    unsigned maxd = 0;
    for (auto& [d, f] : cof) maxd = std::max(maxd, d);
    unsigned prev_dim = 0;
    for (unsigned m = 0;; ++m) {
        std::vector<std::vector<uint64_t>> rows, prol;
        for (auto& [d, f] : cof) {
            if (d <= m)
                for (unsigned t = 0; t + d <= m; ++t) {
                    std::vector<uint64_t> row(m + 1, 0);
                    for (size_t k = 0; k < f.size(); ++k) row[k + t] = f[k];
                    rows.push_back(std::move(row));
                }
            if (m >= 1 && d <= m - 1)
                for (unsigned t = 0; t + d <= m - 1; ++t) {
                    std::vector<uint64_t> r1(m + 1, 0), r2(m + 1, 0);
                    for (size_t k = 0; k < f.size(); ++k) {
                        r1[k + t] = f[k];
                        r2[k + t + 1] = f[k];
                    }
                    prol.push_back(std::move(r1));
                    prol.push_back(std::move(r2));
                }
        }
        int dim = prank(rows);
        int p = prank(prol);
        if (dim - p > 0 && m > 0)
            for (int t = 0; t < dim - p; ++t) out.gen_degrees.push_back(m);
        unsigned c = m + 1 - unsigned(dim);
        out.colength += c;
        if (m >= maxd + 1 && (m + 1 - unsigned(dim)) == (m - prev_dim)) {
            out.artinian = (c == 0);
            break;
        }
        prev_dim = unsigned(dim);
        if (m > maxd + 40) break;
    }
    return out;
}

OracleResult run_oracle(const std::vector<std::pair<unsigned, unsigned>>& batches,
                        const std::vector<unsigned>& chain, long seed) {
    CoefStream cs(seed);
    // shared linear factors (xi - t*eta), t = 2, 3, ...
    auto linear = [](long t) { return QPoly{{Rat(-t), Rat(1)}}; };
    std::vector<std::pair<unsigned, QPoly>> cof;  // (degree, cofactor)
    for (size_t b = 0; b < batches.size(); ++b) {
        auto [deg, cnt] = batches[b];
        unsigned g = chain[b];
        QPoly shared{{Rat(1)}};
        for (unsigned t = 0; t < g; ++t) shared = qmul(shared, linear(long(t) + 2));
        for (unsigned c = 0; c < cnt; ++c) {
            QPoly rest;
            rest.c.resize(deg - g + 1);
            for (auto& v : rest.c) v = cs.next();
            cof.push_back({deg, qmul(shared, rest)});
        }
    }
    OracleResult out;
    unsigned maxd = 0;
    for (auto& [d, f] : cof) maxd = std::max(maxd, d);
    unsigned prev_dim = 0;
    for (unsigned m = 0;; ++m) {
        std::vector<std::vector<Rat>> rows, prol;
        for (auto& [d, f] : cof) {
            if (d <= m)
                for (unsigned t = 0; t + d <= m; ++t) {
                    std::vector<Rat> row(m + 1, Rat(0));
                    for (size_t k = 0; k < f.c.size(); ++k) row[k + t] = f.c[k];
                    rows.push_back(std::move(row));
                }
        }
        // prolongation span: S_1 * J'_{m-1}
        for (auto& [d, f] : cof) {
            if (m >= 1 && d <= m - 1)
                for (unsigned t = 0; t + d <= m - 1; ++t) {
                    std::vector<Rat> r1(m + 1, Rat(0)), r2(m + 1, Rat(0));
                    for (size_t k = 0; k < f.c.size(); ++k) {
                        r1[k + t] = f.c[k];      // * eta
                        r2[k + t + 1] = f.c[k];  // * xi
                    }
                    prol.push_back(std::move(r1));
                    prol.push_back(std::move(r2));
                }
        }
        int dim = qrank(rows);
        int p = qrank(prol);
        if (dim - p > 0 && m > 0)
            for (int t = 0; t < dim - p; ++t) out.gen_degrees.push_back(m);
        unsigned c = m + 1 - unsigned(dim);
        out.colength += c;
        if (m >= maxd + 1 && (m + 1 - unsigned(dim)) == (m - prev_dim)) {
            out.artinian = (c == 0);
            // correct the colength: the tail repeats c forever; a nonzero
            // stable c means the ideal is not artinian and the count is moot
            break;
        }
        prev_dim = unsigned(dim);
        if (m > maxd + 40) break;
    }
    return out;
}

std::map<unsigned, std::vector<ZooEntry>>& zoo_cache() {
    static std::map<unsigned, std::vector<ZooEntry>> cache;
    return cache;
}

// measure the dim profile of an accepted instance (for the ZooEntry)
DimProfile profile_of(const std::vector<std::pair<unsigned, unsigned>>& batches,
                      const std::vector<unsigned>& chain, long seed) {
    CoefStream cs(seed);
    auto linear = [](long t) { return QPoly{{Rat(-t), Rat(1)}}; };
    std::vector<std::pair<unsigned, QPoly>> cof;
    for (size_t b = 0; b < batches.size(); ++b) {
        auto [deg, cnt] = batches[b];
        unsigned g = chain[b];
        QPoly shared{{Rat(1)}};
        for (unsigned t = 0; t < g; ++t) shared = qmul(shared, linear(long(t) + 2));
        for (unsigned c = 0; c < cnt; ++c) {
            QPoly rest;
            rest.c.resize(deg - g + 1);
            for (auto& v : rest.c) v = cs.next();
            cof.push_back({deg, qmul(shared, rest)});
        }
    }
    unsigned maxd = 0;
    for (auto& [d, f] : cof) maxd = std::max(maxd, d);
    DimProfile prof;
    // d_i of the differential system = colength of J' in degree i-1;
    // profile entry d_0 = 0 then c_{i-1}
    prof.d.push_back(0);
    for (unsigned m = 0; m <= maxd + 40; ++m) {
        std::vector<std::vector<Rat>> rows;
        for (auto& [d, f] : cof)
            if (d <= m)
                for (unsigned t = 0; t + d <= m; ++t) {
                    std::vector<Rat> row(m + 1, Rat(0));
                    for (size_t k = 0; k < f.c.size(); ++k) row[k + t] = f.c[k];
                    rows.push_back(std::move(row));
                }
        unsigned c = m + 1 - unsigned(qrank(rows));
        if (c == 0 && m > maxd) break;
        prof.d.push_back(c);
    }
    while (!prof.d.empty() && prof.d.back() == 0) prof.d.pop_back();
    return prof;
}

}  // namespace

std::vector<ZooEntry> enumerate_types(unsigned n) {
    auto& cache = zoo_cache();
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    std::vector<ZooEntry> out;
    if (n == 0) {
        out.push_back({TypeSig{{1}, {0}, ""}, 0, DimProfile{{0}}, false});
        cache[n] = out;
        return out;
    }
    // enumerate batch structures (ascending distinct J'-degrees with counts)
    // J'-degree d corresponds to equation order d+1
    unsigned maxdeg = n + 1;
    std::vector<std::vector<std::pair<unsigned, unsigned>>> shapes;
    std::vector<std::pair<unsigned, unsigned>> cur;
    std::function<void(unsigned)> rec = [&](unsigned from) {
        if (!cur.empty()) shapes.push_back(cur);
        if (cur.size() >= 5) return;
        for (unsigned d = from; d <= maxdeg; ++d) {
            unsigned d1 = cur.empty() ? d : cur[0].first;
            // colength >= d1(d1+1)/2 (below the first generator) plus one per
            // degree between the first and the last generator
            if (d1 * (d1 + 1) / 2 + (d - d1) > n) break;
            unsigned have = 0;
            for (auto& [dd, cc] : cur) have += cc;
            for (unsigned c = 1; c <= 8; ++c) {
                // a height-2 ideal has at most d1 + 1 minimal generators
                if (have + c > d1 + 1) break;
                cur.push_back({d, c});
                rec(d + 1);
                cur.pop_back();
            }
        }
    };
    rec(1);
    std::vector<std::pair<TypeSig, std::pair<unsigned, DimProfile>>> found;
    for (auto& bs : shapes) {
        // chains: gamma per batch, non-increasing, last = 0;
        // a single-generator first batch has gamma_1 = its degree
        std::vector<std::vector<unsigned>> opts;
        size_t B = bs.size();
        for (size_t t = 0; t < B; ++t) {
            std::vector<unsigned> o;
            if (t == B - 1) o = {0};
            else if (t == 0 && bs[0].second == 1) o = {bs[0].first};
            else
                for (unsigned g = 0; g < bs[t].first; ++g) o.push_back(g);
            opts.push_back(o);
        }
        std::vector<size_t> idx(B, 0);
        for (;;) {
            std::vector<unsigned> chain;
            for (size_t t = 0; t < B; ++t) chain.push_back(opts[t][idx[t]]);
            bool mono = true;
            for (size_t t = 1; t < B; ++t)
                if (chain[t] > chain[t - 1]) mono = false;
            if (mono) {
                // derandomized genericity: maximal observed behavior over a
                // deterministic seed sequence. A fast prime-field screen picks
                // candidates; acceptance is certified by the exact ranks.
                for (long seed : {11, 23, 37}) {
                    OracleResult pre = run_oracle_modp(bs, chain, seed);
                    if (!pre.artinian || pre.colength != n) continue;
                    std::vector<unsigned> sig;
                    for (auto& [d, c] : bs)
                        for (unsigned k = 0; k < c; ++k) sig.push_back(d);
                    if (pre.gen_degrees != sig) continue;
                    OracleResult res = run_oracle(bs, chain, seed);
                    if (!res.artinian || res.colength != n || res.gen_degrees != sig) continue;
                    std::vector<unsigned> orders;
                    for (unsigned d : sig) orders.push_back(d + 1);
                    TypeSig ts{orders, chain, ""};
                    found.push_back({ts, {n, profile_of(bs, chain, seed)}});
                    break;
                }
            }
            size_t t = 0;
            while (t < B && ++idx[t] == opts[t].size()) idx[t++] = 0;
            if (t == B) break;
        }
    }
    std::sort(found.begin(), found.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    found.erase(std::unique(found.begin(), found.end(),
                            [](auto& a, auto& b) { return a.first == b.first; }),
                found.end());
    for (auto& [sig, np] : found) {
        ZooEntry e;
        e.sig = sig;
        // stratum label: when another entry shares the signature, name the
        // gcd structure of the lowest batch
        e.kappa = np.first;
        e.profile = np.second;
        e.extrapolated = n > 6;
        out.push_back(std::move(e));
    }
    // human labels for strata shared by several entries of one signature
    for (size_t i = 0; i < out.size(); ++i) {
        bool dup = false;
        for (size_t j = 0; j < out.size(); ++j)
            if (i != j && out[j].sig.orders == out[i].sig.orders) dup = true;
        if (dup) {
            unsigned g = out[i].sig.gcd_chain.empty() ? 0 : out[i].sig.gcd_chain[0];
            out[i].sig.stratum =
                g == 0 ? "cofactors share no characteristic"
                       : "cofactors share " + std::to_string(g) +
                             (g == 1 ? " characteristic" : " characteristics");
        }
    }
    cache[n] = out;
    return out;
}

unsigned zoo_count(unsigned n) { return unsigned(enumerate_types(n).size()); }

std::optional<unsigned> kappa_of_signature(const std::vector<unsigned>& orders) {
    // search the enumeration for this signature; complexity is bounded by the
    // Proposition bound, so the search range is finite
    TypeSig probe{orders, {}, ""};
    unsigned bound = complexity_bound(probe).bound;
    std::optional<unsigned> best;
    for (unsigned n = 0; n <= bound; ++n) {
        for (auto& e : enumerate_types(n))
            if (e.sig.orders == orders && (!best || e.kappa < *best)) best = e.kappa;
        if (best) break;  // smallest complexity first
    }
    return best;
}

bool valid_arrow(const TypeSig& from, const TypeSig& to) {
    auto kf = kappa_of_signature(from.orders);
    auto kt = kappa_of_signature(to.orders);
    if (!kf || !kt) return false;
    return *kt < *kf;
}

}  // namespace lieclass
