#pragma once

#include "dj/exactalg.hpp"

#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace dj {

// A formal direct sum of the atoms that occur as homotopy groups here.
// Cyclic atoms are kept primary (p^e); Q/Z and Zhat carry the primes that
// were inverted away.
struct Atom {
    enum class Kind { FreeZ, RationalVS, FreePadic, ProfiniteZ, QmodZ, QpmodZp, Cyclic };
    Atom(Kind k, long prime = 0, int exponent = 0) : kind(k), p(prime), e(exponent) {}
    Kind kind;
    long p = 0;  // FreePadic, QpmodZp, Cyclic
    int e = 0;   // Cyclic exponent
    std::vector<long> excluded;  // QmodZ, ProfiniteZ

    auto operator<=>(const Atom&) const = default;
    std::string str() const;
};

class AbelianGroupExpr {
public:
    AbelianGroupExpr() = default;

    static AbelianGroupExpr zero() { return {}; }
    static AbelianGroupExpr Z(int rank = 1);
    static AbelianGroupExpr Q(int rank = 1);
    static AbelianGroupExpr Zp(long p, int rank = 1);
    static AbelianGroupExpr Zhat(int count = 1);
    static AbelianGroupExpr QZ(int count = 1);
    static AbelianGroupExpr QpZp(long p, int count = 1);
    static AbelianGroupExpr cyclic(const BigInt& m);
    static AbelianGroupExpr cyclic(long m) { return cyclic(BigInt(m)); }
    static AbelianGroupExpr cyclic_pow(long p, int e);  // Z/p^e
    static AbelianGroupExpr from_invariants(const std::vector<BigInt>& d);

    AbelianGroupExpr operator+(const AbelianGroupExpr& o) const;
    AbelianGroupExpr& operator+=(const AbelianGroupExpr& o);
    AbelianGroupExpr times(int r) const;  // r-fold direct sum
    bool operator==(const AbelianGroupExpr& o) const { return atoms_ == o.atoms_; }
    bool operator!=(const AbelianGroupExpr& o) const { return atoms_ != o.atoms_; }

    bool is_zero() const { return atoms_.empty(); }
    bool is_finite() const;
    BigInt order() const;  // finite groups only
    const std::vector<Atom>& atoms() const { return atoms_; }

    AbelianGroupExpr invert_primes(const std::set<long>& primes) const;
    AbelianGroupExpr finite_part() const;
    AbelianGroupExpr p_part(long p) const;
    AbelianGroupExpr without_2_torsion() const;
    AbelianGroupExpr without_Z2_summands() const;  // drops Z/2 atoms only

    // canonical primary form, e.g. "Z + Z/2 + Z/3 + Z/8"
    std::string str() const;
    // invariant-factor rendering of the torsion, e.g. "Z + Z/2 + Z/24"
    std::string pretty() const;
    std::vector<BigInt> invariant_factors() const;

private:
    void normalize();
    std::vector<Atom> atoms_;
};

inline std::ostream& operator<<(std::ostream& os, const AbelianGroupExpr& g) { return os << g.str(); }

struct LocalizationSpec {
    std::set<long> inverted_primes;
};

inline AbelianGroupExpr invert_primes(const AbelianGroupExpr& g, const LocalizationSpec& loc) {
    return g.invert_primes(loc.inverted_primes);
}

std::vector<long> prime_factors(long n);
bool is_prime(long n);

}  // namespace dj
