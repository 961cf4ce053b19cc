#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dj {

using BigInt = mpz_class;
using BigRational = mpq_class;

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigRational make_rational(const BigInt& num, const BigInt& den);
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);
BigInt lcm_denominators(const std::vector<BigRational>& v);

// Row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::vector<BigInt> row(std::size_t r) const;
    void append_row(const std::vector<BigInt>& r);

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    bool is_zero() const;
    IntMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[a] += f * row[b]
    void add_row_multiple(std::size_t a, std::size_t b, const BigInt& f);
    void add_col_multiple(std::size_t a, std::size_t b, const BigInt& f);
    void negate_row(std::size_t a);
    void negate_col(std::size_t a);

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

// Exact determinant via fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

// Row-style HNF: h = u*m, h upper echelon (zero rows last), pivots positive,
// entries above each pivot reduced into [0, pivot).
struct HermiteResult {
    IntMatrix h, u;
    std::size_t rank = 0;
};
HermiteResult hermite_normal_form(const IntMatrix& m);
// HNF of a full-rank lattice known to contain D*Z^n, without the transform.
IntMatrix hermite_normal_form_mod(const IntMatrix& m, const BigInt& D);

// d = l*m*r, diagonal, nonnegative, d_i | d_{i+1}.
struct SmithResult {
    IntMatrix d, l, r;
    std::vector<BigInt> diagonal() const;
};
SmithResult smith_normal_form(const IntMatrix& m);
// Invariant factors only, without tracking transforms.
std::vector<BigInt> smith_invariants(const IntMatrix& m);

// SNF over the local ring Z/p^M: returns min(v_p(d_i), M) for each of the
// min(rows, cols) diagonal slots.
std::vector<int> local_smith_valuations(const IntMatrix& m, const BigInt& p, int M);

int valuation(const BigInt& n, const BigInt& p);
int valuation(long n, long p);

class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<BigRational> c);
    static RationalPoly monomial(const BigRational& c, std::size_t deg);
    static RationalPoly constant(const BigRational& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational coeff(std::size_t i) const;
    BigRational leading() const;
    BigRational eval(const BigRational& x) const;

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator*(const BigRational& s) const;
    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigRational> c_;
};

void poly_divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& q, RationalPoly& r);
RationalPoly poly_mod(const RationalPoly& a, const RationalPoly& m);
RationalPoly poly_gcd(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_inverse_mod(const RationalPoly& a, const RationalPoly& m);

inline BigRational ring_inverse(const BigRational& x) {
    if (x == 0) throw ArithmeticError("inverse of zero");
    BigRational r = 1 / x;
    return r;
}

// Truncated power series over a commutative ring R.
template <class R>
struct PowerSeries {
    std::vector<R> c;  // c.size() is the truncation order

    PowerSeries() = default;
    explicit PowerSeries(std::vector<R> coeffs) : c(std::move(coeffs)) {}
    std::size_t order() const { return c.size(); }

    PowerSeries operator*(const PowerSeries& o) const {
        std::size_t n = std::min(order(), o.order());
        std::vector<R> out;
        out.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            R s = c[0] * o.c[k];
            for (std::size_t j = 1; j <= k; ++j) s = s + c[j] * o.c[k - j];
            out.push_back(s);
        }
        return PowerSeries(std::move(out));
    }
};

template <class R>
PowerSeries<R> series_quotient(const PowerSeries<R>& num, const PowerSeries<R>& den) {
    std::size_t n = std::min(num.order(), den.order());
    if (n == 0) return PowerSeries<R>{};
    R inv0 = ring_inverse(den.c[0]);
    std::vector<R> q;
    q.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        R s = num.c[k];
        for (std::size_t j = 1; j <= k; ++j) s = s - den.c[j] * q[k - j];
        q.push_back(s * inv0);
    }
    return PowerSeries<R>(std::move(q));
}

BigInt binomial(long n, long k);
BigInt factorial(long n);

}  // namespace dj
