#pragma once

#include "dj/bernoulli.hpp"
#include "dj/report.hpp"

#include <vector>

namespace dj {

// sum over 0 < d | n of chi(d) d^m
CycElement sigma_chi(const DirichletCharacter& chi, long m, long n);

// c_0..c_{n_max} of E_{k,chi} = 1 - (2k / B_{k,chi}) sum sigma_{k-1,chi}(n) q^n, chi read at its conductor
std::vector<CycElement> eisenstein_coeffs(const DirichletCharacter& chi, long k, long n_max);

// y in I after localizing at q
bool local_membership(const CycElement& y, const IdealLattice& I, long q);

struct CongruenceRow {
    long n = 0;
    CycElement c;
    bool primary = true;  // c_n in the p-primary part of D_{k,chi}
    bool full = true;     // c_n in D_{k,chi}
};

struct CongruenceResult {
    IdealLattice ideal = IdealLattice::unit(CyclotomicField(1));
    std::vector<long> primes;  // primes where membership is mandatory
    Report mandatory;
    Report full;  // findings only
    std::vector<CongruenceRow> rows;
};

CongruenceResult congruence_check(const DirichletCharacter& chi, long k, long n_max);

}  // namespace dj
