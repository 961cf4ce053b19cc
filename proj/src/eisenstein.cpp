#include "dj/eisenstein.hpp"

#include <stdexcept>

namespace dj {

namespace {

BigInt strip(BigInt x, long q) {
    if (x < 0) x = -x;
    BigInt Q(q);
    while (x != 0 && x % Q == 0) x /= Q;
    return x;
}

void require_parity(const DirichletCharacter& chi, long k, const char* who) {
    if (k < 1) throw std::invalid_argument(std::string(who) + ": k >= 1 required");
    if ((k % 2 == 0 ? 1 : -1) != chi.parity())
        throw std::invalid_argument(std::string(who) + ": parity mismatch, B_{k,chi} = 0");
}

}  // namespace

CycElement sigma_chi(const DirichletCharacter& chi, long m, long n) {
    if (n < 1 || m < 0) throw std::invalid_argument("sigma_chi: n >= 1 and m >= 0 required");
    CycElement s(chi.value_field());
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        auto v = chi.evaluate(d);
        if (!v) continue;
        BigInt dm;
        mpz_pow_ui(dm.get_mpz_t(), BigInt(d).get_mpz_t(), static_cast<unsigned long>(m));
        s = s + *v * BigRational(dm);
    }
    return s;
}

std::vector<CycElement> eisenstein_coeffs(const DirichletCharacter& chi0, long k, long n_max) {
    auto chi = chi0.primitive();
    require_parity(chi, k, "eisenstein_coeffs");
    CycElement B = gbn(chi, k);
    if (B.is_zero()) throw std::invalid_argument("eisenstein_coeffs: B_{k,chi} = 0");
    CycElement scale = (B * make_rational(1, 2 * k)).inverse() * BigRational(-1);
    std::vector<CycElement> c{CycElement::rational(chi.value_field(), 1)};
    for (long n = 1; n <= n_max; ++n) c.push_back(scale * sigma_chi(chi, k - 1, n));
    return c;
}

bool local_membership(const CycElement& y, const IdealLattice& I, long q) {
    // clear denominators and the part of I away from q with q-adic units
    BigInt s = strip(y.denominator(), q) * strip(I.index(), q);
    return ideal_membership(y * BigRational(s), I);
}

CongruenceResult congruence_check(const DirichletCharacter& chi0, long k, long n_max) {
    auto chi = chi0.primitive();
    require_parity(chi, k, "congruence_check");
    CongruenceResult r;
    r.ideal = denom_ideal(chi, k);
    std::string tag = chi.name() + " k=" + std::to_string(k);
    r.mandatory = Report("eisenstein p-primary " + tag);
    r.full = Report("eisenstein full ideal " + tag);
    long N = chi.modulus();
    if (N == 1) {
        BigInt idx = r.ideal.index();
        if (!idx.fits_slong_p()) throw std::overflow_error("congruence_check: ideal index too large");
        r.primes = prime_factors(idx.get_si());
    } else {
        r.primes = prime_factors(N);
    }
    auto c = eisenstein_coeffs(chi, k, n_max);
    for (long n = 1; n <= n_max; ++n) {
        CongruenceRow row;
        row.n = n;
        row.c = c[static_cast<std::size_t>(n)];
        for (long q : r.primes) row.primary = row.primary && local_membership(row.c, r.ideal, q);
        row.full = ideal_membership(row.c, r.ideal);
        r.mandatory.check(row.primary, "n=" + std::to_string(n) + " c_n=" + row.c.str());
        r.full.check(row.full, "n=" + std::to_string(n) + " c_n=" + row.c.str());
        r.rows.push_back(row);
    }
    return r;
}

}  // namespace dj
