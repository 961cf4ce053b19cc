#include "dj/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dj {

long gcd_l(long a, long b) { return std::gcd(a, b); }

long euler_phi(long n) {
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

long mod_pow(long base, long exp, long mod) {
    if (mod == 1) return 0;
    __int128 r = 1, b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<long>(r);
}

long multiplicative_order(long a, long n) {
    if (n == 1) return 1;
    if (gcd_l(a, n) != 1) throw ArithmeticError("multiplicative_order: not a unit");
    long phi = euler_phi(n);
    long ord = phi;
    for (long q : prime_factors(phi))
        while (ord % q == 0 && mod_pow(a, ord / q, n) == 1) ord /= q;
    return ord;
}

RationalPoly cyclotomic_poly(long n) {
    static std::mutex mu;
    static std::map<long, RationalPoly> cache;
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n >= 1 required");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    RationalPoly num = RationalPoly::monomial(1, static_cast<std::size_t>(n)) - RationalPoly::constant(1);
    for (long d = 1; d < n; ++d) {
        if (n % d) continue;
        RationalPoly q, r;
        poly_divmod(num, cyclotomic_poly(d), q, r);
        num = q;
    }
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(n, num);
    return num;
}

// ---------------------------------------------------------------- fields

namespace {

std::shared_ptr<const CyclotomicFieldData> field_data(long n) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const CyclotomicFieldData>> cache;
    if (n < 1) throw std::invalid_argument("cyclotomic field: n >= 1 required");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto d = std::make_shared<CyclotomicFieldData>();
    d->n = n;
    d->phi = cyclotomic_poly(n);
    d->degree = d->phi.degree();
    int deg = d->degree;
    std::vector<BigInt> cur(deg, 0);
    cur[0] = 1;
    for (long j = 0; j < n; ++j) {
        d->zeta_pow.push_back(cur);
        // multiply by zeta: shift up, fold the t^deg term using phi (monic)
        BigInt top = cur[deg - 1];
        for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg; ++i) cur[i] -= top * d->phi.coeffs()[i].get_num();
    }
    std::lock_guard<std::mutex> lk(mu);
    auto [it, ok] = cache.emplace(n, d);
    return it->second;
}

}  // namespace

CyclotomicField::CyclotomicField(long n) : d_(field_data(n)) {}

const std::vector<BigInt>& CyclotomicField::zeta_pow(long j) const {
    long n = d_->n;
    return d_->zeta_pow[static_cast<std::size_t>(((j % n) + n) % n)];
}

// ---------------------------------------------------------------- elements

CycElement::CycElement(CyclotomicField f) : f_(std::move(f)), c_(static_cast<std::size_t>(f_.degree()), 0) {}

CycElement::CycElement(CyclotomicField f, std::vector<BigRational> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != f_.degree()) {
        // reduce a longer coefficient vector through the power table
        std::vector<BigRational> red(static_cast<std::size_t>(f_.degree()), 0);
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            const auto& z = f_.zeta_pow(static_cast<long>(j));
            for (std::size_t i = 0; i < red.size(); ++i)
                if (z[i] != 0) red[i] += c_[j] * z[i];
        }
        c_ = std::move(red);
    }
}

CycElement CycElement::rational(CyclotomicField f, const BigRational& q) {
    CycElement e(std::move(f));
    e.c_[0] = q;
    return e;
}

CycElement CycElement::zeta_power(CyclotomicField f, long j) {
    CycElement e(f);
    const auto& z = f.zeta_pow(j);
    for (std::size_t i = 0; i < z.size(); ++i) e.c_[i] = z[i];
    return e;
}

void CycElement::check_same(const CycElement& o) const {
    if (f_ != o.f_) throw ArithmeticError("cyclotomic field mismatch");
}

CycElement CycElement::operator+(const CycElement& o) const {
    check_same(o);
    CycElement r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycElement CycElement::operator-(const CycElement& o) const {
    check_same(o);
    CycElement r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycElement CycElement::operator-() const {
    CycElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycElement CycElement::operator*(const CycElement& o) const {
    check_same(o);
    std::size_t d = c_.size();
    std::vector<BigRational> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    return CycElement(f_, std::move(prod));
}

CycElement CycElement::operator*(const BigRational& s) const {
    CycElement r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

CycElement CycElement::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero in Q(zeta)");
    RationalPoly inv = poly_inverse_mod(RationalPoly(c_), f_.phi());
    std::vector<BigRational> c(c_.size(), 0);
    for (std::size_t i = 0; i < inv.coeffs().size(); ++i) c[i] = inv.coeffs()[i];
    return CycElement(f_, std::move(c));
}

CycElement CycElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycElement r = rational(f_, 1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool CycElement::operator==(const CycElement& o) const { return f_ == o.f_ && c_ == o.c_; }

bool CycElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& x) { return x == 0; });
}

bool CycElement::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const BigRational& x) { return x == 0; });
}

bool CycElement::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& x) { return x.get_den() == 1; });
}

BigRational CycElement::rational_value() const {
    if (!is_rational()) throw ArithmeticError("element is not rational: " + str());
    return c_[0];
}

BigInt CycElement::denominator() const { return lcm_denominators(c_); }

std::vector<BigInt> CycElement::integer_coeffs() const {
    if (!is_integral()) throw ArithmeticError("element is not integral: " + str());
    std::vector<BigInt> out;
    for (const auto& x : c_) out.push_back(x.get_num());
    return out;
}

CycElement CycElement::coerce(const CyclotomicField& target) const {
    long n = f_.n(), m = target.n();
    if (m % n) throw ArithmeticError("coerce: Q(zeta_" + std::to_string(n) + ") is not a subfield of Q(zeta_" + std::to_string(m) + ")");
    CycElement r(target);
    long s = m / n;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& z = target.zeta_pow(static_cast<long>(j) * s);
        for (std::size_t i = 0; i < z.size(); ++i)
            if (z[i] != 0) r.c_[i] += c_[j] * z[i];
    }
    return r;
}

std::string CycElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const BigRational& c = c_[i];
        if (c == 0) continue;
        BigRational a = abs(c);
        std::string mag = to_string(a);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (a != 1) os << mag << "*";
        os << "z";
        if (i > 1) os << "^" << i;
    }
    return first ? "0" : os.str();
}

CycElement cyc_add(const CycElement& a, const CycElement& b) { return a + b; }
CycElement cyc_mul(const CycElement& a, const CycElement& b) { return a * b; }
CycElement cyc_inv(const CycElement& a) { return a.inverse(); }
bool cyc_eq(const CycElement& a, const CycElement& b) { return a == b; }

CycElement galois_apply(const CycElement& a, long sigma) {
    long n = a.field().n();
    if (gcd_l(sigma, n) != 1) throw ArithmeticError("galois_apply: sigma not coprime to n");
    std::vector<BigRational> c(static_cast<std::size_t>(n), 0);
    long s = ((sigma % n) + n) % n;
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) c[static_cast<std::size_t>((static_cast<long>(j) * s) % n)] += a.coeffs()[j];
    return CycElement(a.field(), std::move(c));
}

std::vector<std::vector<BigRational>> multiplication_matrix(const CycElement& a) {
    std::vector<std::vector<BigRational>> rows;
    for (int j = 0; j < a.field().degree(); ++j) rows.push_back((a * CycElement::zeta_power(a.field(), j)).coeffs());
    return rows;
}

BigRational norm(const CycElement& a) {
    auto m = multiplication_matrix(a);
    std::vector<BigRational> flat;
    for (auto& r : m) flat.insert(flat.end(), r.begin(), r.end());
    BigInt c = lcm_denominators(flat);
    std::size_t d = m.size();
    IntMatrix im(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            BigRational x = m[i][j] * c;
            im.at(i, j) = x.get_num();
        }
    BigInt cd;
    mpz_pow_ui(cd.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(d));
    return make_rational(determinant(im), cd);
}

// ---------------------------------------------------------------- ideals

IdealLattice::IdealLattice(CyclotomicField f, IntMatrix hnf_basis) : f_(std::move(f)), b_(std::move(hnf_basis)) {
    int d = f_.degree();
    if (static_cast<int>(b_.rows()) != d || static_cast<int>(b_.cols()) != d) throw ArithmeticError("ideal basis must be square of size phi(n)");
    if (determinant(b_) == 0) throw ArithmeticError("ideal basis is singular");
}

IdealLattice IdealLattice::unit(const CyclotomicField& f) {
    return IdealLattice(f, IntMatrix::identity(static_cast<std::size_t>(f.degree())));
}

namespace {

IdealLattice from_rows(const CyclotomicField& f, const IntMatrix& rows) {
    std::size_t d = static_cast<std::size_t>(f.degree());
    // the first d rows are a * zeta^j for a single nonzero a, hence independent
    if (rows.rows() >= d) {
        IntMatrix top(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) top.at(i, j) = rows.at(i, j);
        BigInt D = determinant(top);
        if (D != 0) return IdealLattice(f, hermite_normal_form_mod(rows, D));
    }
    auto h = hermite_normal_form(rows);
    if (h.rank != d) throw ArithmeticError("ideal generators do not span a full-rank lattice");
    IntMatrix b(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) b.at(i, j) = h.h.at(i, j);
    return IdealLattice(f, std::move(b));
}

CycElement row_element(const CyclotomicField& f, const IntMatrix& m, std::size_t r) {
    std::vector<BigRational> c;
    for (std::size_t j = 0; j < m.cols(); ++j) c.push_back(BigRational(m.at(r, j)));
    return CycElement(f, std::move(c));
}

}  // namespace

IdealLattice IdealLattice::generated(const CyclotomicField& f, const std::vector<CycElement>& gens) {
    IntMatrix rows;
    for (const auto& g : gens) {
        if (g.field() != f) throw ArithmeticError("ideal generator field mismatch");
        for (int j = 0; j < f.degree(); ++j) rows.append_row((g * CycElement::zeta_power(f, j)).integer_coeffs());
    }
    if (rows.rows() == 0) throw ArithmeticError("ideal needs at least one generator");
    return from_rows(f, rows);
}

bool IdealLattice::is_unit() const { return b_ == IntMatrix::identity(b_.rows()); }

BigInt IdealLattice::index() const { return abs(determinant(b_)); }

bool IdealLattice::closed_under_zeta() const {
    CycElement z = CycElement::zeta_power(f_, 1);
    for (std::size_t r = 0; r < b_.rows(); ++r)
        if (!ideal_membership(row_element(f_, b_, r) * z, *this)) return false;
    return true;
}

std::string IdealLattice::str() const {
    // a rational-integer ideal (m) prints as "(m)", otherwise the HNF basis
    std::size_t d = b_.rows();
    bool scalar = true;
    for (std::size_t i = 0; i < d && scalar; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if ((i == j && b_.at(i, j) != b_.at(0, 0)) || (i != j && b_.at(i, j) != 0)) {
                scalar = false;
                break;
            }
    if (scalar) return "(" + b_.at(0, 0).get_str() + ")";
    return "HNF" + b_.str();
}

IdealLattice denominator_ideal(const CycElement& a) {
    if (a.is_zero()) throw ArithmeticError("denominator_ideal of zero");
    const auto& f = a.field();
    auto m = multiplication_matrix(a);
    std::size_t d = m.size();
    std::vector<BigRational> flat;
    for (auto& r : m) flat.insert(flat.end(), r.begin(), r.end());
    BigInt c = lcm_denominators(flat);
    if (c == 1) return IdealLattice::unit(f);
    IntMatrix A(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            BigRational x = m[i][j] * c;
            mpz_fdiv_r(A.at(i, j).get_mpz_t(), x.get_num_mpz_t(), c.get_mpz_t());
        }
    // x A = 0 mod c  <=>  (x l^{-1}) D = 0 mod c with D = l A r
    auto s = smith_normal_form(A);
    IntMatrix rows(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), s.d.at(i, i).get_mpz_t(), c.get_mpz_t());
        BigInt scale = c / g;
        for (std::size_t j = 0; j < d; ++j) rows.at(i, j) = scale * s.l.at(i, j);
    }
    return from_rows(f, rows);
}

IdealLattice ideal_product(const IdealLattice& a, const IdealLattice& b) {
    if (a.field() != b.field()) throw ArithmeticError("ideal field mismatch");
    const auto& f = a.field();
    IntMatrix rows;
    for (std::size_t i = 0; i < a.basis().rows(); ++i) {
        CycElement x = row_element(f, a.basis(), i);
        for (std::size_t j = 0; j < b.basis().rows(); ++j) rows.append_row((x * row_element(f, b.basis(), j)).integer_coeffs());
    }
    return from_rows(f, rows);
}

IdealLattice ideal_sum(const IdealLattice& a, const IdealLattice& b) {
    if (a.field() != b.field()) throw ArithmeticError("ideal field mismatch");
    IntMatrix rows = a.basis();
    for (std::size_t j = 0; j < b.basis().rows(); ++j) rows.append_row(b.basis().row(j));
    return from_rows(a.field(), rows);
}

IdealLattice ideal_power(const IdealLattice& a, int e) {
    IdealLattice r = IdealLattice::unit(a.field());
    for (int i = 0; i < e; ++i) r = ideal_product(r, a);
    return r;
}

bool ideal_membership(const CycElement& x, const IdealLattice& I) {
    if (x.field() != I.field()) throw ArithmeticError("ideal field mismatch");
    if (!x.is_integral()) return false;
    std::vector<BigInt> v = x.integer_coeffs();
    const IntMatrix& b = I.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        const BigInt& piv = b.at(i, i);
        if (!mpz_divisible_p(v[i].get_mpz_t(), piv.get_mpz_t())) return false;
        BigInt q = v[i] / piv;
        if (q == 0) continue;
        for (std::size_t j = i; j < b.cols(); ++j) v[j] -= q * b.at(i, j);
    }
    return true;
}

bool ideal_eq(const IdealLattice& a, const IdealLattice& b) { return a == b; }

std::vector<BigInt> quotient_invariants(const IdealLattice& i) {
    std::vector<BigInt> out;
    for (auto& d : smith_invariants(i.basis()))
        if (d != 1) out.push_back(d);
    return out;
}

AbelianGroupExpr quotient_group(const IdealLattice& i) { return AbelianGroupExpr::from_invariants(quotient_invariants(i)); }

// ---------------------------------------------------------------- Frobenius data

FrobeniusData frobenius_data(long n, long p) {
    if (!is_prime(p)) throw std::invalid_argument("frobenius_data: p must be prime");
    FrobeniusData fd;
    fd.n = n;
    fd.p = p;
    long np = n;
    while (np % p == 0) {
        np /= p;
        ++fd.v;
    }
    fd.n_prime = np;
    fd.m = multiplicative_order(p % np, np);
    long pv = 1;
    for (int i = 0; i < fd.v; ++i) pv *= p;
    fd.ramification = euler_phi(pv);
    if (np == 1) {
        fd.coset_reps = {1};
        return fd;
    }
    std::vector<bool> seen(static_cast<std::size_t>(np), false);
    for (long b = 1; b < np; ++b) {
        if (gcd_l(b, np) != 1 || seen[static_cast<std::size_t>(b)]) continue;
        fd.coset_reps.push_back(b);
        long x = b;
        do {
            seen[static_cast<std::size_t>(x)] = true;
            x = x * (p % np) % np;
        } while (x != b);
    }
    return fd;
}

std::vector<long> padic_splitting(long chi_order, long p) { return frobenius_data(chi_order, p).coset_reps; }

// ---------------------------------------------------------------- F_p polynomials

namespace {

using Fp = std::vector<long>;

void fp_trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long fp_inv(long a, long p) { return mod_pow(a, p - 2, p); }

Fp fp_mod(Fp a, const Fp& m, long p) {
    fp_trim(a);
    long inv = fp_inv(m.back(), p);
    while (a.size() >= m.size()) {
        long f = a.back() * inv % p;
        std::size_t sh = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[sh + i] = ((a[sh + i] - f * m[i]) % p + p) % p;
        fp_trim(a);
    }
    return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& m, long p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_mod(r, m, p);
}

Fp fp_powmod(Fp b, long e, const Fp& m, long p) {
    Fp r = {1};
    b = fp_mod(b, m, p);
    while (e > 0) {
        if (e & 1) r = fp_mulmod(r, b, m, p);
        b = fp_mulmod(b, b, m, p);
        e >>= 1;
    }
    return r;
}

Fp fp_gcd(Fp a, Fp b, long p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        Fp r = fp_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

Fp fp_div(Fp a, const Fp& b, long p) {
    fp_trim(a);
    Fp q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    long inv = fp_inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        long f = a.back() * inv % p;
        std::size_t sh = a.size() - b.size();
        q[sh] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = ((a[sh + i] - f * b[i]) % p + p) % p;
        fp_trim(a);
    }
    fp_trim(q);
    return q;
}

}  // namespace

std::vector<int> factor_degrees_mod_p(const RationalPoly& f0, long p) {
    Fp f;
    for (const auto& c : f0.coeffs()) {
        if (c.get_den() != 1) throw ArithmeticError("factor_degrees_mod_p: non-integral polynomial");
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(p));
        f.push_back(r.get_si());
    }
    fp_trim(f);
    std::vector<int> degs;
    if (f.size() <= 1) return degs;
    Fp h = {0, 1};
    for (int i = 1; static_cast<int>(f.size()) - 1 >= 2 * i; ++i) {
        h = fp_powmod(h, p, f, p);
        Fp hx = h;
        hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
        hx[1] = (hx[1] - 1 + p) % p;
        fp_trim(hx);
        Fp g = fp_gcd(f, hx, p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0) {
            for (int k = 0; k < dg / i; ++k) degs.push_back(i);
            f = fp_div(f, g, p);
            h = fp_mod(h, f, p);
        }
    }
    if (f.size() > 1) degs.push_back(static_cast<int>(f.size()) - 1);
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace dj
