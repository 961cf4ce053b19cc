#pragma once

#include "dj/exactalg.hpp"
#include "dj/groups.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dj {

long euler_phi(long n);
long gcd_l(long a, long b);
long mod_pow(long base, long exp, long mod);
long multiplicative_order(long a, long n);

RationalPoly cyclotomic_poly(long n);

struct CyclotomicFieldData {
    long n = 1;
    int degree = 1;
    RationalPoly phi;
    std::vector<std::vector<BigInt>> zeta_pow;  // zeta^j in the power basis, j in [0, n)
};

// Q(zeta_n); handles are cached and immutable.
class CyclotomicField {
public:
    CyclotomicField() : CyclotomicField(1) {}
    explicit CyclotomicField(long n);
    long n() const { return d_->n; }
    int degree() const { return d_->degree; }
    const RationalPoly& phi() const { return d_->phi; }
    const std::vector<BigInt>& zeta_pow(long j) const;
    bool operator==(const CyclotomicField& o) const { return d_->n == o.d_->n; }
    bool operator!=(const CyclotomicField& o) const { return !(*this == o); }

private:
    std::shared_ptr<const CyclotomicFieldData> d_;
};

class CycElement {
public:
    CycElement() : CycElement(CyclotomicField(1)) {}
    explicit CycElement(CyclotomicField f);
    CycElement(CyclotomicField f, std::vector<BigRational> coeffs);
    static CycElement rational(CyclotomicField f, const BigRational& q);
    static CycElement zeta_power(CyclotomicField f, long j);

    const CyclotomicField& field() const { return f_; }
    const std::vector<BigRational>& coeffs() const { return c_; }

    CycElement operator+(const CycElement& o) const;
    CycElement operator-(const CycElement& o) const;
    CycElement operator-() const;
    CycElement operator*(const CycElement& o) const;
    CycElement operator*(const BigRational& s) const;
    CycElement inverse() const;
    CycElement pow(long e) const;
    bool operator==(const CycElement& o) const;
    bool operator!=(const CycElement& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_rational() const;
    bool is_integral() const;
    BigRational rational_value() const;  // requires is_rational()
    BigInt denominator() const;           // lcm of coordinate denominators
    std::vector<BigInt> integer_coeffs() const;  // requires is_integral()

    // embed into Q(zeta_m) with n | m
    CycElement coerce(const CyclotomicField& target) const;
    std::string str() const;

private:
    void check_same(const CycElement& o) const;
    CyclotomicField f_;
    std::vector<BigRational> c_;
};

inline CycElement ring_inverse(const CycElement& x) { return x.inverse(); }

CycElement cyc_add(const CycElement& a, const CycElement& b);
CycElement cyc_mul(const CycElement& a, const CycElement& b);
CycElement cyc_inv(const CycElement& a);
bool cyc_eq(const CycElement& a, const CycElement& b);
CycElement galois_apply(const CycElement& a, long sigma);
BigRational norm(const CycElement& a);

// rows: coordinates of a * zeta^j
std::vector<std::vector<BigRational>> multiplication_matrix(const CycElement& a);

// Full-rank sublattice of Z[zeta_n], rows in HNF.
class IdealLattice {
public:
    IdealLattice(CyclotomicField f, IntMatrix hnf_basis);
    static IdealLattice unit(const CyclotomicField& f);
    static IdealLattice generated(const CyclotomicField& f, const std::vector<CycElement>& gens);

    const CyclotomicField& field() const { return f_; }
    const IntMatrix& basis() const { return b_; }
    bool is_unit() const;
    bool closed_under_zeta() const;
    BigInt index() const;
    bool operator==(const IdealLattice& o) const { return f_ == o.f_ && b_ == o.b_; }
    bool operator!=(const IdealLattice& o) const { return !(*this == o); }
    std::string str() const;

private:
    CyclotomicField f_;
    IntMatrix b_;
};

IdealLattice denominator_ideal(const CycElement& a);
IdealLattice ideal_product(const IdealLattice& a, const IdealLattice& b);
IdealLattice ideal_sum(const IdealLattice& a, const IdealLattice& b);
IdealLattice ideal_power(const IdealLattice& a, int e);
bool ideal_membership(const CycElement& x, const IdealLattice& i);
bool ideal_eq(const IdealLattice& a, const IdealLattice& b);
AbelianGroupExpr quotient_group(const IdealLattice& i);
std::vector<BigInt> quotient_invariants(const IdealLattice& i);

struct FrobeniusData {
    long n = 1, p = 2;
    int v = 0;
    long n_prime = 1;
    long m = 1;
    long ramification = 1;
    std::vector<long> coset_reps;
};

FrobeniusData frobenius_data(long n, long p);
std::vector<long> padic_splitting(long chi_order, long p);

// Independent check: degrees of the irreducible factors of an integral
// polynomial mod p via distinct-degree factorization (input squarefree mod p).
std::vector<int> factor_degrees_mod_p(const RationalPoly& f, long p);

}  // namespace dj
