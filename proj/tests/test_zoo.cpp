#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lieclass/zoo.hpp"

#include <set>

using namespace lieclass;

namespace {

std::set<std::string> names(unsigned n) {
    std::set<std::string> out;
    for (auto& e : enumerate_types(n)) out.insert(e.sig.name());
    return out;
}

}  // namespace

TEST_CASE("kappa of a profile") {
    CHECK(kappa_of_profile({{0, 1}}) == 1);
    CHECK(kappa_of_profile({{0, 1, 2}}) == 3);
    CHECK(kappa_of_profile({{0}}) == 0);
    CHECK(DimProfile{{0, 1, 2, 1}}.valid());
    CHECK(!DimProfile{{0, 2}}.valid());
    CHECK(!DimProfile{{0, 1, 0, 1}}.valid());
}

TEST_CASE("complexity bound examples") {
    // kE_k: equality with kappa = k(k-1)/2
    ComplexityBound b4 = complexity_bound(TypeSig{{4, 4, 4, 4}, {}, ""});
    CHECK(b4.bound == 6);
    CHECK(b4.equality);
    REQUIRE(b4.exact.has_value());
    CHECK(*b4.exact == 6);
    ComplexityBound b = complexity_bound(TypeSig{{3, 4, 4}, {}, ""});
    CHECK(b.bound == 5);
    ComplexityBound b2 = complexity_bound(TypeSig{{2, 5}, {}, ""});
    CHECK(b2.bound == 4);
    CHECK(b2.equality);
}

TEST_CASE("R(n) matches the published table for n = 1..10") {
    const unsigned expect[] = {0, 1, 1, 2, 3, 3, 5, 6, 9, 11, 13};
    for (unsigned n = 1; n <= 10; ++n) CHECK(zoo_count(n) == expect[n]);
}

TEST_CASE("kappa = 4 and kappa = 6 membership lists") {
    CHECK(names(4) == std::set<std::string>{"E2+E5", "2E3", "2E3+E4"});
    CHECK(names(6) == std::set<std::string>{"E2+E7", "2E3+E6", "E3+E4", "E3+E4+E5", "4E4"});
}

TEST_CASE("every enumerated signature satisfies r <= k_min and its profile") {
    for (unsigned n = 1; n <= 8; ++n) {
        for (auto& e : enumerate_types(n)) {
            CHECK(e.sig.orders.size() <= e.sig.orders.front());
            CHECK(e.profile.valid());
            CHECK(kappa_of_profile(e.profile) == n);
            ComplexityBound b = complexity_bound(e.sig);
            CHECK(n <= b.bound);
            if (b.equality) {
                // equality honored whenever r = 2 or r = k_min
                unsigned r = unsigned(e.sig.orders.size());
                if (r == e.sig.orders.front()) CHECK(*b.exact == n);
            }
        }
    }
}

TEST_CASE("generalized kappa") {
    // single E2, omega = 2: dims 1,2,2,2,...
    CHECK(generalized_kappa({1, 2, 2, 2, 2}, 2) == 0);
    // 2E3 with omega = 2: dims 1,2,3,2,2
    CHECK(generalized_kappa({1, 2, 3, 2, 2}, 2) == 1);
    // omega = 1 agrees with the profile sum
    CHECK(generalized_kappa({1, 2, 1, 1}, 1) == 1);
}

TEST_CASE("valid arrows") {
    TypeSig t3e3{{3, 3, 3}, {}, ""}, e23{{2, 3}, {}, ""}, e1{{1}, {}, ""}, t2e3{{3, 3}, {}, ""};
    CHECK(valid_arrow(t3e3, e23));
    CHECK(!valid_arrow(e23, t2e3));  // kappa rises 2 -> 4
    CHECK(!valid_arrow(e1, e23));    // E1 is terminal
    // sample routes from the table, toward the top-left corner
    std::vector<TypeSig> route = {TypeSig{{2, 6}, {}, ""}, TypeSig{{2, 5}, {}, ""},
                                  TypeSig{{2, 4}, {}, ""}, TypeSig{{2, 3}, {}, ""},
                                  TypeSig{{2, 2}, {}, ""}, e1};
    for (size_t k = 0; k + 1 < route.size(); ++k) CHECK(valid_arrow(route[k], route[k + 1]));
}

TEST_CASE("the kappa = 8 doubling carries stratum labels") {
    auto entries = enumerate_types(8);
    int with_label = 0;
    for (auto& e : entries)
        if (e.sig.name() == "2E4+E5") {
            CHECK(!e.sig.stratum.empty());
            ++with_label;
        }
    CHECK(with_label == 2);
}
