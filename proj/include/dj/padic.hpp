#pragma once

#include "dj/characters.hpp"
#include "dj/groups.hpp"

#include <optional>
#include <stdexcept>

namespace dj {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Z/p^M standing for a p-adic integer known to precision M.
class PAdicInt {
public:
    PAdicInt(long p, int M, const BigInt& residue);
    long p() const { return p_; }
    int precision() const { return M_; }
    const BigInt& residue() const { return r_; }
    BigInt modulus() const;

    PAdicInt operator+(const PAdicInt& o) const;
    PAdicInt operator-(const PAdicInt& o) const;
    PAdicInt operator*(const PAdicInt& o) const;
    PAdicInt pow(long e) const;  // negative e needs a unit
    bool is_unit() const;
    int valuation() const;  // M when zero
    bool operator==(const PAdicInt& o) const { return p_ == o.p_ && M_ == o.M_ && r_ == o.r_; }

private:
    void check(const PAdicInt& o) const;
    long p_;
    int M_;
    BigInt r_;
};

PAdicInt teichmuller(long p, long a, int M);
long topological_generator(long p);

struct PrimeToPData {
    long N_prime = 1;
    int n = 0;  // v_p of |image chi'|
    bool image_is_p_power = true;
};

struct PAdicCharacterData {
    long p = 2;
    int v = 0;     // conductor exponent of the p-part
    int tame = 0;  // a in [0, p-2] for odd p; parity bit (1 = odd) for p = 2
    bool wild_primitive = true;
    std::optional<PrimeToPData> prime_to_p;
};

// p-adic data of chi at p, read off its primitive representative; the tame
// exponent uses the embedding zeta_{p-1} -> omega(g) for the canonical generator g.
PAdicCharacterData padic_character_data(const DirichletCharacter& chi, long p);

constexpr int kDefaultPrecision = 15;

// Z_p[zeta_{p^{v-1}}] / (omega^a(g) zeta - g^t)
AbelianGroupExpr quotient_oracle(long p, int v, int a, long t, int M = kDefaultPrecision);
// Z_2[zeta_{2^{v-2}}] / (zeta - 5^t); the answer does not depend on the parity bit
AbelianGroupExpr quotient_oracle_2(int v, long t, int M = kDefaultPrecision, int parity = 0);

// E_2^{s,t} of the descent spectral sequence for a pure p-power conductor
AbelianGroupExpr e2_page(const PAdicCharacterData& d, int s, long t);

}  // namespace dj
