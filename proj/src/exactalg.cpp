#include "dj/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace dj {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt lcm_denominators(const std::vector<BigRational>& v) {
    BigInt l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

int valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw ArithmeticError("valuation of zero");
    BigInt m = abs(n);
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

int valuation(long n, long p) { return valuation(BigInt(n), BigInt(p)); }

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t r) const {
    return std::vector<BigInt>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void IntMatrix::append_row(const std::vector<BigInt>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const BigInt& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
        if (at(b, j) != 0) at(a, j) += f * at(b, j);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const BigInt& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
        if (at(i, b) != 0) at(i, a) += f * at(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

BigInt determinant(const IntMatrix& m0) {
    if (m0.rows() != m0.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m0.rows();
    if (n == 0) return 1;
    IntMatrix m = m0;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m.at(s, k) == 0) ++s;
            if (s == n) return 0;
            m.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = v;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// ---------------------------------------------------------------- HNF

HermiteResult hermite_normal_form(const IntMatrix& m) {
    HermiteResult res;
    res.h = m;
    res.u = IntMatrix::identity(m.rows());
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    std::size_t nr = h.rows(), nc = h.cols();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < nc && pr < nr; ++c) {
        while (true) {
            std::size_t best = nr;
            for (std::size_t r = pr; r < nr; ++r)
                if (h.at(r, c) != 0 && (best == nr || abs(h.at(r, c)) < abs(h.at(best, c)))) best = r;
            if (best == nr) break;
            h.swap_rows(pr, best);
            u.swap_rows(pr, best);
            bool done = true;
            for (std::size_t r = pr + 1; r < nr; ++r) {
                if (h.at(r, c) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(r, c).get_mpz_t(), h.at(pr, c).get_mpz_t());
                h.add_row_multiple(r, pr, -q);
                u.add_row_multiple(r, pr, -q);
                if (h.at(r, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(pr, c) == 0) continue;
        if (h.at(pr, c) < 0) {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        for (std::size_t r = 0; r < pr; ++r) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(r, c).get_mpz_t(), h.at(pr, c).get_mpz_t());
            h.add_row_multiple(r, pr, -q);
            u.add_row_multiple(r, pr, -q);
        }
        ++pr;
    }
    res.rank = pr;
    return res;
}

IntMatrix hermite_normal_form_mod(const IntMatrix& m, const BigInt& D0) {
    BigInt D = abs(D0);
    if (D == 0) throw ArithmeticError("hermite_normal_form_mod: zero modulus");
    std::size_t n = m.cols();
    auto reduce = [&](std::vector<BigInt>& r, std::size_t from) {
        for (std::size_t j = from; j < n; ++j) mpz_fdiv_r(r[j].get_mpz_t(), r[j].get_mpz_t(), D.get_mpz_t());
    };
    std::vector<std::vector<BigInt>> pool;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        reduce(r, 0);
        pool.push_back(std::move(r));
    }
    IntMatrix h(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<BigInt> de(n, 0);
        de[c] = D;
        pool.push_back(std::move(de));
        while (true) {
            std::size_t best = pool.size();
            for (std::size_t r = 0; r < pool.size(); ++r)
                if (pool[r][c] != 0 && (best == pool.size() || abs(pool[r][c]) < abs(pool[best][c]))) best = r;
            bool done = true;
            for (std::size_t r = 0; r < pool.size(); ++r) {
                if (r == best || pool[r][c] == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), pool[r][c].get_mpz_t(), pool[best][c].get_mpz_t());
                for (std::size_t j = c; j < n; ++j) pool[r][j] -= q * pool[best][j];
                reduce(pool[r], c + 1);
                if (pool[r][c] != 0) done = false;
            }
            if (done) {
                auto piv = std::move(pool[best]);
                pool.erase(pool.begin() + static_cast<long>(best));
                if (piv[c] < 0)
                    for (auto& x : piv) x = -x;
                reduce(piv, c + 1);
                for (std::size_t j = 0; j < n; ++j) h.at(c, j) = piv[j];
                break;
            }
        }
        std::vector<std::vector<BigInt>> rest;
        for (auto& r : pool) {
            bool zero = true;
            for (std::size_t j = c + 1; j < n && zero; ++j) zero = r[j] == 0;
            if (!zero) rest.push_back(std::move(r));
        }
        pool = std::move(rest);
    }
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < c; ++r) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(r, c).get_mpz_t(), h.at(c, c).get_mpz_t());
            if (q != 0) h.add_row_multiple(r, c, -q);
        }
    return h;
}

// ---------------------------------------------------------------- SNF

namespace {

void smith_core(IntMatrix& d, IntMatrix* l, IntMatrix* r) {
    std::size_t nr = d.rows(), nc = d.cols();
    std::size_t n = std::min(nr, nc);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block
            std::size_t bi = nr, bj = nc;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j)
                    if (d.at(i, j) != 0 && (bi == nr || abs(d.at(i, j)) < abs(d.at(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == nr) return;
            d.swap_rows(t, bi);
            if (l) l->swap_rows(t, bi);
            d.swap_cols(t, bj);
            if (r) r->swap_cols(t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d.at(i, t) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_row_multiple(i, t, -q);
                if (l) l->add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d.at(t, j) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_col_multiple(j, t, -q);
                if (r) r->add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: pull an offending row into the pivot row
            std::size_t bad = nr;
            for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == nr) break;
            d.add_row_multiple(t, bad, 1);
            if (l) l->add_row_multiple(t, bad, 1);
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            if (l) l->negate_row(t);
        }
    }
}

}  // namespace

std::vector<BigInt> SmithResult::diagonal() const {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d.at(i, i));
    return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    smith_core(s.d, &s.l, &s.r);
    return s;
}

std::vector<BigInt> smith_invariants(const IntMatrix& m) {
    IntMatrix d = m;
    smith_core(d, nullptr, nullptr);
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d.at(i, i));
    return out;
}

std::vector<int> local_smith_valuations(const IntMatrix& m0, const BigInt& p, int M) {
    BigInt mod;
    mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(M));
    IntMatrix m = m0;
    std::size_t nr = m.rows(), nc = m.cols();
    auto vp = [&](const BigInt& x) { return x == 0 ? M : std::min(valuation(x, p), M); };
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) mpz_fdiv_r(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), mod.get_mpz_t());

    std::vector<int> out;
    std::size_t n = std::min(nr, nc);
    for (std::size_t t = 0; t < n; ++t) {
        int bv = M;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                int v = vp(m.at(i, j));
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bv == M) {
            out.resize(n, M);
            return out;
        }
        m.swap_rows(t, bi);
        m.swap_cols(t, bj);
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(bv));
        BigInt unit = m.at(t, t) / pe, uinv;
        mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
        for (std::size_t i = t + 1; i < nr; ++i) {
            if (m.at(i, t) == 0) continue;
            BigInt f = (m.at(i, t) / pe) * uinv;
            for (std::size_t j = t; j < nc; ++j) {
                m.at(i, j) -= f * m.at(t, j);
                mpz_fdiv_r(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), mod.get_mpz_t());
            }
        }
        // column clearing does not alter the trailing block once column t is cleared
        out.push_back(bv);
    }
    return out;
}

// ---------------------------------------------------------------- RationalPoly

RationalPoly::RationalPoly(std::vector<BigRational> c) : c_(std::move(c)) { trim(); }

RationalPoly RationalPoly::monomial(const BigRational& c, std::size_t deg) {
    std::vector<BigRational> v(deg + 1, 0);
    v[deg] = c;
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::constant(const BigRational& c) { return RationalPoly(std::vector<BigRational>{c}); }

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational RationalPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }

BigRational RationalPoly::leading() const { return c_.empty() ? BigRational(0) : c_.back(); }

BigRational RationalPoly::eval(const BigRational& x) const {
    BigRational s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<BigRational> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + o * BigRational(-1); }

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigRational> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const BigRational& s) const {
    std::vector<BigRational> v = c_;
    for (auto& x : v) x *= s;
    return RationalPoly(std::move(v));
}

std::string RationalPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << to_string(c_[i]);
        if (i == 1) os << "*" << var;
        if (i > 1) os << "*" << var << "^" << i;
    }
    return os.str();
}

void poly_divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& q, RationalPoly& r) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    std::vector<BigRational> rem = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    std::vector<BigRational> quo(da >= db ? da - db + 1 : 0, 0);
    BigRational lb = b.leading();
    for (int i = da; i >= db; --i) {
        if (rem[i] == 0) continue;
        BigRational f = rem[i] / lb;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
    }
    q = RationalPoly(std::move(quo));
    r = RationalPoly(std::move(rem));
}

RationalPoly poly_mod(const RationalPoly& a, const RationalPoly& m) {
    RationalPoly q, r;
    poly_divmod(a, m, q, r);
    return r;
}

RationalPoly poly_gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly x = a, y = b;
    while (!y.is_zero()) {
        RationalPoly r = poly_mod(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x * (1 / x.leading());
}

RationalPoly poly_inverse_mod(const RationalPoly& a, const RationalPoly& m) {
    // extended Euclid tracking the coefficient of a
    RationalPoly r0 = m, r1 = poly_mod(a, m);
    RationalPoly s0, s1 = RationalPoly::constant(1);
    while (!r1.is_zero()) {
        RationalPoly q, r;
        poly_divmod(r0, r1, q, r);
        RationalPoly s = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if (r0.degree() != 0) throw ArithmeticError("poly_inverse_mod: inputs not coprime");
    return poly_mod(s0 * (1 / r0.leading()), m);
}

}  // namespace dj
