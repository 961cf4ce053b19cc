#include "doctest.h"
#include "dj/groups.hpp"

using namespace dj;
using G = AbelianGroupExpr;

TEST_CASE("normal form splits cyclic groups by CRT") {
    CHECK(G::cyclic(24) == G::cyclic(8) + G::cyclic(3));
    CHECK(G::cyclic(1).is_zero());
    CHECK(G::cyclic(24).str() == "Z/8 + Z/3");
    CHECK(G::cyclic(24).pretty() == "Z/24");
    CHECK((G::Z() + G::cyclic(2)).str() == "Z + Z/2");
    CHECK(G::Z(2).str() == "Z^2");
    CHECK(G::Zp(5).str() == "Z_5");
    CHECK(G::QZ().str() == "Q/Z");
    CHECK(G::Zhat().str() == "Zhat");
    CHECK(G::QpZp(2).str() == "Q_2/Z_2");
    CHECK(G::zero().str() == "0");
    CHECK((G::cyclic(2) + G::cyclic(2)).str() == "Z/2 + Z/2");
    CHECK((G::cyclic(4) + G::cyclic(6)).pretty() == "Z/2 + Z/12");
}

TEST_CASE("crt split brute force up to 10^4") {
    for (long m = 1; m <= 10000; ++m) {
        auto g = G::cyclic(m);
        CHECK(g.order() == m);
        // primary atoms have distinct primes, so the invariant factor is m itself
        if (m > 1) CHECK(g.invariant_factors() == std::vector<BigInt>{m});
    }
}

TEST_CASE("invert primes") {
    LocalizationSpec none;
    CHECK(invert_primes(G::cyclic(24), none) == G::cyclic(24));
    CHECK(invert_primes(G::cyclic(24), {{2}}) == G::cyclic(3));
    CHECK(invert_primes(G::cyclic(5), {{2}}) == G::cyclic(5));
    CHECK(invert_primes(G::Zp(2) + G::Z(), {{2}}) == G::Z());
    CHECK(invert_primes(G::QZ(), {{2}}).str() == "Q/Z[1/2]");
}

TEST_CASE("sums are order independent") {
    auto a = G::cyclic(12) + G::Z() + G::Zp(3);
    auto b = G::Zp(3) + G::cyclic(4) + G::Z() + G::cyclic(3);
    CHECK(a == b);
    CHECK(a.str() == b.str());
}
