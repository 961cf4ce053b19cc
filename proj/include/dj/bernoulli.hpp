#pragma once

#include "dj/characters.hpp"
#include "dj/report.hpp"

namespace dj {

// B_k with B_1 = +1/2, from t e^t / (e^t - 1)
BigRational bernoulli_number(long k);

// B_{k,chi} of the primitive representative, via the generating function
CycElement gbn(const DirichletCharacter& chi, long k);
// independent path: N^{k-1} sum_a chi(a) B_k(a/N) with Bernoulli polynomials
CycElement gbn_oracle(const DirichletCharacter& chi, long k);
// B_k(x) with B_1(x) = x - 1/2
RationalPoly bernoulli_polynomial(long k);

// L(s; chi) at s = 1 - k, k >= 1, for the primitive representative
CycElement l_value(const DirichletCharacter& chi, long s);

BigInt d2k(long k);

// denominator ideal of B_{k,chi}/2k in Z[zeta_{ord chi}]; (1) on parity mismatch
IdealLattice denom_ideal(const DirichletCharacter& chi, long k);

Report verify_von_staudt(long k_max);
Report verify_carlitz(const DirichletCharacter& chi, long k);

}  // namespace dj
