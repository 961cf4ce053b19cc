#include "doctest.h"
#include "dj/exactalg.hpp"

#include <random>

using namespace dj;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

bool is_hnf(const IntMatrix& h) {
    long prev = -1;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t j = 0;
        while (j < h.cols() && h.at(i, j) == 0) ++j;
        if (j == h.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row || static_cast<long>(j) <= prev) return false;
        if (h.at(i, j) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h.at(k, j) < 0 || h.at(k, j) >= h.at(i, j)) return false;
        prev = static_cast<long>(j);
    }
    return true;
}

// Bernoulli numbers from the recurrence sum_{j<=k} C(k+1,j) B_j = k+1 (B_1 = +1/2 form)
std::vector<BigRational> bernoulli_recurrence(int n) {
    std::vector<BigRational> b;
    for (int k = 0; k <= n; ++k) {
        BigRational s = 0;
        for (int j = 0; j < k; ++j) s += BigRational(binomial(k + 1, j)) * b[j];
        BigRational bk = (BigRational(k + 1) - s) / BigRational(k + 1);
        b.push_back(bk);
    }
    return b;
}

PowerSeries<BigRational> bernoulli_series(std::size_t order) {
    std::vector<BigRational> num, den;
    for (std::size_t j = 0; j < order; ++j) {
        num.push_back(make_rational(1, factorial(j)));
        den.push_back(make_rational(1, factorial(j + 1)));
    }
    return series_quotient(PowerSeries<BigRational>(num), PowerSeries<BigRational>(den));
}

}  // namespace

TEST_CASE("rational canonical form") {
    BigRational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK(make_rational(0, 7).get_den() == 1);
    CHECK_THROWS_AS(make_rational(1, 0), ArithmeticError);
}

TEST_CASE("hnf examples") {
    auto id = IntMatrix::identity(2);
    auto r = hermite_normal_form(id);
    CHECK(r.h == id);
    CHECK(r.u == id);

    auto m = IntMatrix::from_rows({{2, 1}, {0, 3}});
    auto h = hermite_normal_form(m).h;
    CHECK(h == IntMatrix::from_rows({{2, 1}, {0, 3}}));

    auto z = IntMatrix(2, 2);
    CHECK(hermite_normal_form(z).h.is_zero());

    auto m2 = IntMatrix::from_rows({{4, 7}, {0, 3}});
    CHECK(hermite_normal_form(m2).h == IntMatrix::from_rows({{4, 1}, {0, 3}}));
}

TEST_CASE("hnf properties on random matrices") {
    std::mt19937 rng(7);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + it % 5, c = 1 + (it / 5) % 5;
        auto m = random_matrix(rng, r, c, -9, 9);
        auto res = hermite_normal_form(m);
        CHECK(res.u * m == res.h);
        CHECK(abs(determinant(res.u)) == 1);
        CHECK(is_hnf(res.h));
    }
}

TEST_CASE("modular hnf agrees with plain hnf on full-rank lattices") {
    std::mt19937 rng(17);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 1 + it % 6, extra = it % 4;
        auto top = random_matrix(rng, n, n, -9, 9);
        BigInt D = determinant(top);
        if (D == 0) continue;
        IntMatrix m = top;
        auto more = random_matrix(rng, extra, n, -40, 40);
        for (std::size_t r = 0; r < extra; ++r) m.append_row(more.row(r));
        auto h = hermite_normal_form(m);
        IntMatrix expect(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) expect.at(i, j) = h.h.at(i, j);
        CHECK(hermite_normal_form_mod(m, D) == expect);
    }
}

TEST_CASE("snf examples") {
    auto s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CHECK(s.diagonal() == std::vector<BigInt>{1, 6});
    CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal() == std::vector<BigInt>{1, 1, 1});
    CHECK(smith_invariants(IntMatrix::from_rows({{4, 0}, {0, 6}})) == std::vector<BigInt>{2, 12});
}

TEST_CASE("snf properties on random matrices") {
    std::mt19937 rng(11);
    for (int it = 0; it < 80; ++it) {
        std::size_t r = 1 + it % 5, c = 1 + (it / 3) % 5;
        auto m = random_matrix(rng, r, c, -20, 20);
        auto s = smith_normal_form(m);
        CHECK(s.l * m * s.r == s.d);
        CHECK(abs(determinant(s.l)) == 1);
        CHECK(abs(determinant(s.r)) == 1);
        for (std::size_t i = 0; i < s.d.rows(); ++i)
            for (std::size_t j = 0; j < s.d.cols(); ++j)
                if (i != j) CHECK(s.d.at(i, j) == 0);
        auto d = s.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
            else CHECK(d[i + 1] == 0);
        }
        if (r == c) {
            BigInt prod = 1;
            for (auto& x : d) prod *= x;
            CHECK(prod == abs(determinant(m)));
        }
    }
}

TEST_CASE("local smith valuations agree with integer snf") {
    std::mt19937 rng(5);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 1 + it % 5;
        auto m = random_matrix(rng, n, n, -30, 30);
        auto inv = smith_invariants(m);
        for (long p : {2L, 3L, 5L}) {
            auto loc = local_smith_valuations(m, p, 12);
            std::vector<int> expect;
            for (auto& d : inv) expect.push_back(d == 0 ? 12 : std::min(valuation(d, BigInt(p)), 12));
            std::sort(expect.begin(), expect.end());
            std::sort(loc.begin(), loc.end());
            CHECK(loc == expect);
        }
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(IntMatrix::from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(IntMatrix::from_rows({{2, 0, 0}, {0, 3, 0}, {1, 1, 5}})) == 30);
}

TEST_CASE("series quotient examples") {
    PowerSeries<BigRational> one({1, 0, 0, 0});
    auto q = series_quotient(one, one);
    CHECK(q.c == std::vector<BigRational>{1, 0, 0, 0});

    PowerSeries<BigRational> s({3, 1, -2, 5});
    CHECK(series_quotient(s, s).c == std::vector<BigRational>{1, 0, 0, 0});

    auto b = bernoulli_series(4);
    CHECK(b.c[0] * BigRational(factorial(0)) == 1);
    CHECK(b.c[1] * BigRational(factorial(1)) == make_rational(1, 2));
    CHECK(b.c[2] * BigRational(factorial(2)) == make_rational(1, 6));

    PowerSeries<BigRational> bad({0, 1});
    CHECK_THROWS_AS(series_quotient(one, bad), ArithmeticError);
}

TEST_CASE("series quotient inverts multiplication") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int it = 0; it < 30; ++it) {
        std::vector<BigRational> a, b;
        for (int j = 0; j < 8; ++j) {
            a.push_back(d(rng));
            b.push_back(d(rng));
        }
        if (b[0] == 0) b[0] = 1;
        PowerSeries<BigRational> A(a), B(b);
        CHECK(series_quotient(A * B, B).c == A.c);
    }
}

TEST_CASE("bernoulli from series match recurrence to k=30") {
    auto rec = bernoulli_recurrence(30);
    auto s = bernoulli_series(31);
    for (int k = 0; k <= 30; ++k) CHECK(s.c[k] * BigRational(factorial(k)) == rec[k]);
    CHECK(rec[4] == make_rational(-1, 30));
}

TEST_CASE("poly inverse mod") {
    auto m = RationalPoly({1, 0, 1});  // t^2 + 1
    CHECK(poly_inverse_mod(RationalPoly::constant(1), m) == RationalPoly::constant(1));
    CHECK(poly_inverse_mod(RationalPoly({0, 1}), m) == RationalPoly({0, -1}));

    auto m3 = RationalPoly({1, 1, 1});
    auto a = RationalPoly({1, 1});
    auto inv = poly_inverse_mod(a, m3);
    CHECK(poly_mod(a * inv, m3) == RationalPoly::constant(1));
    CHECK(inv == RationalPoly({0, -1}));

    CHECK_THROWS_AS(poly_inverse_mod(RationalPoly({1, 1}), RationalPoly({-1, 0, 1})), ArithmeticError);
}
