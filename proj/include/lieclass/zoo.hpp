#ifndef LIECLASS_ZOO_HPP
#define LIECLASS_ZOO_HPP

#include "lieclass/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieclass {

// Type signature sum m_i E_i of a class-1 system: the sorted multiset of
// generator orders, plus a discrete stratum label distinguishing symbol
// strata of equal signature (the chain of cumulative gcd degrees of the
// symbol cofactors, batch by batch).
struct TypeSig {
    std::vector<unsigned> orders;      // k_1 <= ... <= k_r
    std::vector<unsigned> gcd_chain;   // one entry per distinct order; last is 0
    std::string stratum;               // human label, empty when unambiguous

    std::string name() const;  // e.g. "2E3+E4"
    friend bool operator==(const TypeSig&, const TypeSig&) = default;
    bool operator<(const TypeSig& o) const {
        if (orders != o.orders) return orders < o.orders;
        return gcd_chain < o.gcd_chain;
    }
};

// d_i = dim g_i - 1, trailing zeros trimmed.
struct DimProfile {
    std::vector<unsigned> d;
    bool valid() const;  // d0 = 0, rises by at most 1, no interior zeros
};

unsigned kappa_of_profile(const DimProfile& p);

struct ComplexityBound {
    unsigned bound;          // sum (k_i - i) + (k_1 - r)(k_r - r)
    bool equality;           // attained: r = 2 or r = k_min
    std::optional<unsigned> exact;  // sum k_j - r(r+1)/2 when r = k_min
};

ComplexityBound complexity_bound(const TypeSig& t);

struct ZooEntry {
    TypeSig sig;
    unsigned kappa;
    DimProfile profile;
    bool extrapolated;  // n > 6: beyond the strata the paper lists explicitly
};

// All realizable (signature, stratum) pairs of complexity n, verified by the
// symbolic oracle; R(n) is the number of entries.
std::vector<ZooEntry> enumerate_types(unsigned n);
unsigned zoo_count(unsigned n);

// kappa = sum_{i >= omega} (dim g_i - omega); gdims must be stabilized.
unsigned generalized_kappa(const std::vector<int>& gdims, unsigned omega);

// kappa(to) < kappa(from) under the exact complexity values.
bool valid_arrow(const TypeSig& from, const TypeSig& to);
// exact complexity of a realizable signature (smallest realizable stratum
// complexity when several strata exist)
std::optional<unsigned> kappa_of_signature(const std::vector<unsigned>& orders);

}  // namespace lieclass

#endif
