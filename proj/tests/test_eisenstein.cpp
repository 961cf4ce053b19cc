#include "doctest.h"
#include "dj/eisenstein.hpp"

#include <numeric>

using namespace dj;

namespace {

DirichletCharacter of_order(long N, long ord) {
    for (auto& c : enumerate(N))
        if (c.order() == ord && c.is_primitive()) return c;
    throw std::runtime_error("no such character");
}

CycElement rat(const DirichletCharacter& c, long q) { return CycElement::rational(c.value_field(), q); }

}  // namespace

TEST_CASE("twisted divisor sums") {
    auto one = DirichletCharacter::trivial(1);
    CHECK(sigma_chi(one, 1, 6) == rat(one, 12));
    auto odd4 = enumerate(4)[1];
    CHECK(sigma_chi(odd4, 0, 5) == rat(odd4, 2));
    CHECK(sigma_chi(odd4, 0, 3).is_zero());
    for (long N : {5L, 7L, 8L, 12L})
        for (auto& c : enumerate(N)) CHECK(sigma_chi(c, 3, 1) == rat(c, 1));
    // multiplicative on coprime arguments
    for (long N : {4L, 5L, 7L, 9L})
        for (auto& c : enumerate(N)) {
            if (!c.is_primitive()) continue;
            for (long a = 1; a <= 20; ++a)
                for (long b = 1; a * b <= 200; ++b)
                    if (std::gcd(a, b) == 1) CHECK(sigma_chi(c, 2, a * b) == sigma_chi(c, 2, a) * sigma_chi(c, 2, b));
        }
    CHECK_THROWS(sigma_chi(one, 1, 0));
}

TEST_CASE("eisenstein coefficients") {
    auto one = DirichletCharacter::trivial(1);
    auto e4 = eisenstein_coeffs(one, 4, 5);
    CHECK(e4[0] == rat(one, 1));
    CHECK(e4[1] == rat(one, 240));
    CHECK(e4[2] == rat(one, 240 * 9));
    auto e2 = eisenstein_coeffs(one, 2, 3);
    CHECK(e2[1] == rat(one, -24));
    auto odd4 = enumerate(4)[1];
    auto f = eisenstein_coeffs(odd4, 1, 10);
    CHECK(f[1] == rat(odd4, 4));
    for (long n = 1; n <= 10; ++n) CHECK(f[static_cast<std::size_t>(n)] == sigma_chi(odd4, 0, n) * BigRational(4));
    auto q5 = of_order(5, 2);
    auto g = eisenstein_coeffs(q5, 2, 10);
    for (long n = 1; n <= 10; ++n) CHECK(g[static_cast<std::size_t>(n)] == sigma_chi(q5, 1, n) * BigRational(-5));
    CHECK_THROWS(eisenstein_coeffs(odd4, 2, 5));
    CHECK_THROWS(eisenstein_coeffs(one, 3, 5));
    // E_{2k} = 1 - (4k / B_{2k}) sum sigma_{2k-1}
    for (long j = 1; j <= 6; ++j) {
        auto e = eisenstein_coeffs(one, 2 * j, 6);
        for (long n = 1; n <= 6; ++n) {
            BigRational s = 0;
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) {
                    BigInt dm;
                    mpz_pow_ui(dm.get_mpz_t(), BigInt(d).get_mpz_t(), static_cast<unsigned long>(2 * j - 1));
                    s += BigRational(dm);
                }
            BigRational expect = -BigRational(4 * j) / bernoulli_number(2 * j) * s;
            expect.canonicalize();
            CHECK(e[static_cast<std::size_t>(n)] == CycElement::rational(CyclotomicField(1), expect));
        }
    }
}

TEST_CASE("local membership") {
    CyclotomicField q(1);
    auto I = IdealLattice::generated(q, {CycElement::rational(q, 12)});
    CHECK(local_membership(CycElement::rational(q, 4), I, 2));
    CHECK(!local_membership(CycElement::rational(q, 4), I, 3));
    CHECK(local_membership(CycElement::rational(q, make_rational(3, 5)), I, 3));
    CHECK(!local_membership(CycElement::rational(q, make_rational(3, 5)), I, 5));
}

TEST_CASE("congruence examples") {
    auto one = DirichletCharacter::trivial(1);
    auto r = congruence_check(one, 4, 200);
    CHECK(r.mandatory.pass());
    CHECK(r.full.pass());
    auto odd4 = enumerate(4)[1];
    auto s = congruence_check(odd4, 1, 200);
    CHECK(s.ideal.str() == "(4)");
    CHECK(s.mandatory.pass());
    CHECK(s.full.pass());
    auto t = congruence_check(of_order(5, 2), 2, 200);
    CHECK(t.mandatory.pass());
    CHECK(t.full.pass());
    CHECK_THROWS(congruence_check(odd4, 2, 10));
}

TEST_CASE("classical E_2k = 1 mod D_2k, 2k <= 20") {
    auto one = DirichletCharacter::trivial(1);
    for (long k = 2; k <= 20; k += 2) {
        auto r = congruence_check(one, k, 200);
        INFO(r.mandatory.summary());
        CHECK(r.mandatory.pass());
    }
}

TEST_CASE("p-primary congruence for conductors 1, 3, 4, 5, 7") {
    for (long N : {1L, 3L, 4L, 5L, 7L})
        for (auto& c : enumerate(N)) {
            if (!c.is_primitive()) continue;
            for (long k = 1; k <= 9; ++k) {
                if ((k % 2 == 0 ? 1 : -1) != c.parity()) continue;
                auto r = congruence_check(c, k, 200);
                INFO(r.mandatory.summary());
                CHECK(r.mandatory.pass());
            }
        }
}
