#pragma once

#include "dj/cyclotomic.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dj {

// An element of Q/Z, num/den reduced with 0 <= num < den.
struct Fraction {
    long num = 0, den = 1;
    static Fraction make(long n, long d);
    Fraction operator+(const Fraction& o) const;
    Fraction times(long k) const;
    bool operator==(const Fraction& o) const = default;
};

struct UnitGenerator {
    long p = 0;
    long local = 0;   // generator mod p^v
    long lifted = 0;  // CRT lift: local mod p^v, 1 mod the rest of N
    long order = 1;
    std::size_t factor = 0;
};

struct PrimePowerFactor {
    long p = 0;
    int v = 0;
    long q = 1;  // p^v
    std::vector<std::size_t> gens;          // indices into generators()
    std::vector<std::vector<long>> dlog;    // dlog[j][a mod q], -1 for non-units
};

struct UnitGroupData {
    long N = 1;
    std::vector<PrimePowerFactor> factors;
    std::vector<UnitGenerator> gens;
};

// (Z/N)^x with canonical generators; handles are cached and immutable.
class UnitGroupStructure {
public:
    UnitGroupStructure() : UnitGroupStructure(1) {}
    explicit UnitGroupStructure(long N);
    long modulus() const { return d_->N; }
    const std::vector<PrimePowerFactor>& factors() const { return d_->factors; }
    const std::vector<UnitGenerator>& generators() const { return d_->gens; }
    long order() const;
    // exponent tuple of a unit a on the generators; empty when gcd(a, N) > 1
    std::optional<std::vector<long>> log(long a) const;
    bool operator==(const UnitGroupStructure& o) const { return d_->N == o.d_->N; }

private:
    std::shared_ptr<const UnitGroupData> d_;
};

long smallest_primitive_root(long p, int v);

class DirichletCharacter {
public:
    DirichletCharacter() : DirichletCharacter(UnitGroupStructure(1), {}) {}
    DirichletCharacter(UnitGroupStructure s, std::vector<long> exponents);
    static DirichletCharacter trivial(long N);
    static DirichletCharacter from_index(long N, long index);
    // values on the generators, given in Q/Z; each must be killed by the generator order
    static DirichletCharacter from_generator_values(UnitGroupStructure s, const std::vector<Fraction>& vals);

    const UnitGroupStructure& structure() const { return s_; }
    long modulus() const { return s_.modulus(); }
    const std::vector<long>& exponents() const { return e_; }
    long order() const { return order_; }
    long index() const;
    bool is_trivial() const { return order_ == 1; }

    // chi(a) as an element of Q/Z; nullopt when gcd(a, N) > 1
    std::optional<Fraction> value_fraction(long a) const;
    // chi(a) = zeta_n^k with n = order(); returns k in [0, n)
    std::optional<long> value_exponent(long a) const;
    std::optional<CycElement> evaluate(long a) const;
    CyclotomicField value_field() const { return CyclotomicField(order_); }

    long conductor() const;
    bool is_primitive() const { return conductor() == modulus(); }
    DirichletCharacter primitive() const;
    DirichletCharacter lift(long M) const;  // induced character mod a multiple M of N
    int parity() const;

    std::string name() const;  // "N:i"
    std::string str() const;
    bool operator==(const DirichletCharacter& o) const { return s_ == o.s_ && e_ == o.e_; }
    bool operator!=(const DirichletCharacter& o) const { return !(*this == o); }

private:
    UnitGroupStructure s_;
    std::vector<long> e_;
    long order_ = 1;
};

std::vector<DirichletCharacter> enumerate(long N);
std::optional<CycElement> evaluate(const DirichletCharacter& chi, long a);
inline long conductor(const DirichletCharacter& chi) { return chi.conductor(); }
inline bool is_primitive(const DirichletCharacter& chi) { return chi.is_primitive(); }
inline int parity(const DirichletCharacter& chi) { return chi.parity(); }

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b);
DirichletCharacter char_inv(const DirichletCharacter& a);
DirichletCharacter char_pow(const DirichletCharacter& a, long k);

// p -> chi_p of modulus p^{v_p(N)}
std::map<long, DirichletCharacter> factor_local(const DirichletCharacter& chi);

long ell_of_chi(const DirichletCharacter& chi);
bool kernel_order_match(long k, long p, long chi_tame_order);

// parses "N:i"
DirichletCharacter parse_character(const std::string& s);

}  // namespace dj
