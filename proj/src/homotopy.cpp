#include "dj/homotopy.hpp"

#include "dj/bernoulli.hpp"
#include "dj/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dj {

namespace {

using G = AbelianGroupExpr;

long mod(long x, long m) { return ((x % m) + m) % m; }

int vp(long x, long p) { return valuation(x < 0 ? -x : x, p); }

bool is_p_power(long x, long p) {
    while (x % p == 0) x /= p;
    return x == 1;
}

G z2(int r = 1) { return G::cyclic(2).times(r); }

BigInt dkn(long k, long N, bool four_divides) {
    long kk = k < 0 ? -k : k;
    BigInt D = d2k(kk) * N;
    long pi = 1;
    for (long p : prime_factors(N))
        if ((2 * kk) % (p - 1) == 0) pi *= p;
    if (four_divides) pi *= 2;
    if (D % pi != 0) throw std::logic_error("D_{2k,N} is not an integer");
    return D / pi;
}

}  // namespace

G pi_J(long i) {
    if (i == 0) return G::Z() + z2();
    if (i == -2) return G::QZ();
    if (mod(i, 4) == 3 && i != -1) {
        long k = (i + 1) / 4;
        return G::cyclic(d2k(k < 0 ? -k : k));
    }
    long r = mod(i, 8);
    if (r == 1) return z2(2);
    if (r == 0 || r == 2) return z2();
    return G::zero();
}

G pi_JN(long N, long i) {
    if (N < 1) throw std::invalid_argument("pi_JN: N >= 1 required");
    if (N % 4 == 2) N /= 2;
    if (i == -2) return G::QZ();
    if (N % 4 == 0) {
        if (i == 0) return G::Z();
        if (mod(i, 4) == 3 && i != -1) return G::cyclic(dkn((i + 1) / 4, N, true));
        if (mod(i, 4) == 1) return G::cyclic(N);
        return G::zero();
    }
    if (i == 0) return G::Z() + z2();
    if (mod(i, 4) == 3 && i != -1) return G::cyclic(dkn((i + 1) / 4, N, false));
    long r = mod(i, 8);
    if (r == 1) return G::cyclic(N) + z2(2);
    if (r == 5) return G::cyclic(N);
    if (r == 0 || r == 2) return z2();
    return G::zero();
}

G pi_K1(long p, long i) {
    if (!is_prime(p)) throw std::invalid_argument("pi_K1: prime required");
    if (p == 2) {
        if (i == 0) return G::Zp(2) + z2();
        if (i == -1) return G::Zp(2);
        long r = mod(i, 8);
        if (r == 1) return z2(2);
        if (r == 0 || r == 2) return z2();
        if (mod(i, 4) == 3) return G::cyclic_pow(2, vp((i + 1) / 4, 2) + 3);
        return G::zero();
    }
    if (i == 0 || i == -1) return G::Zp(p);
    if (mod(i + 1, 2 * (p - 1)) == 0) return G::cyclic_pow(p, vp((i + 1) / (2 * (p - 1)), p) + 1);
    return G::zero();
}

G pi_K1_pv(long p, int v, long i) {
    if (!is_prime(p)) throw std::invalid_argument("pi_K1_pv: prime required");
    if (v < 1 || (p == 2 && v < 2)) throw std::invalid_argument("pi_K1_pv: unsupported (p, v)");
    if (i == 0 || i == -1) return G::Zp(p);
    if (mod(i, 2) == 1) return G::cyclic_pow(p, vp((i + 1) / 2, p) + v);
    return G::zero();
}

G pi_K1_pv_tame(long p, int v, int a, long i) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("pi_K1_pv_tame: odd prime required");
    if (v < 1 || a < 0 || a > p - 2) throw std::invalid_argument("pi_K1_pv_tame: unsupported (v, a)");
    if (a == 0 && (i == 0 || i == -1)) return G::Zp(p);
    if (mod(i, 2) != 1 || i == -1) return G::zero();
    long k = (i + 1) / 2;
    if (mod(k - a, p - 1) != 0) return G::zero();
    return G::cyclic_pow(p, vp(k, p) + v);
}

G pi_exotic(long i) {
    if (i == 0 || i == -1) return G::Zp(2);
    long r = mod(i, 8);
    if (r == 4 || r == 6) return z2();
    if (r == 5) return z2(2);
    if (mod(i, 4) == 3) return G::cyclic_pow(2, vp((i + 1) / 4, 2) + 3);
    return G::zero();
}

namespace {

// Eigen-spectra with a nontrivial prime-to-p part whose image is cyclic of order p^n.
G dk1_with_prime_to_p(const PAdicCharacterData& d, long i) {
    long p = d.p;
    int v = d.v, n = d.prime_to_p->n;
    if (n < 1) throw std::invalid_argument("pi_DK1: p-power image of order 1");
    if (p != 2) {
        if (d.tame == 0 && (i == 0 || i == 1)) return G::Zp(p, static_cast<int>(p));
        if (i == 0 || mod(i, 2) != 0) return G::zero();
        long k = i / 2;
        if (mod(k - d.tame, p - 1) != 0) return G::zero();
        int e = n >= v - 1 ? vp(k, p) + 1 : vp(k, p) + v - n;
        return G::cyclic_pow(p, e).times(static_cast<int>(p));
    }
    long r = mod(i, 8);
    if (d.tame == 0) {
        if (i == 0) return G::Zp(2, 2);
        if (i == 1) return G::Zp(2, 2) + z2(2);
        if (r == 2) return z2(4);
        if (r == 1 || r == 3) return z2(2);
        if (mod(i, 4) == 0) {
            long k = i / 4;
            int e = n >= v - 2 ? vp(k, 2) + 3 : vp(k, 2) + v - n + 1;
            return G::cyclic_pow(2, e).times(2);
        }
        return G::zero();
    }
    if (r == 3 || r == 5) return z2(2);
    if (r == 4) return z2(4);
    if (mod(i, 4) == 2) return G::cyclic_pow(2, n >= v - 2 ? 2 : v - n).times(2);
    return G::zero();
}

void check_data(const PAdicCharacterData& d) {
    if (!is_prime(d.p)) throw std::invalid_argument("PAdicCharacterData: p must be prime");
    if (d.v < 0) throw std::invalid_argument("PAdicCharacterData: negative conductor exponent");
    if (d.p == 2) {
        if (d.v == 1) throw std::invalid_argument("PAdicCharacterData: conductor 2 does not occur");
        if (d.tame != 0 && d.tame != 1) throw std::invalid_argument("PAdicCharacterData: parity bit must be 0 or 1");
        if ((d.v == 0 && d.tame != 0) || (d.v == 2 && d.tame != 1))
            throw std::invalid_argument("PAdicCharacterData: parity inconsistent with conductor");
    } else {
        if (d.tame < 0 || d.tame > d.p - 2) throw std::invalid_argument("PAdicCharacterData: tame exponent out of range");
        if ((d.v == 0 && d.tame != 0) || (d.v == 1 && d.tame == 0))
            throw std::invalid_argument("PAdicCharacterData: tame exponent inconsistent with conductor");
    }
}

}  // namespace

G pi_DK1(const PAdicCharacterData& d, long i) {
    check_data(d);
    if (d.prime_to_p) {
        if (!d.prime_to_p->image_is_p_power) return G::zero();
        return dk1_with_prime_to_p(d, i);
    }
    long p = d.p;
    if (d.v == 0) return pi_K1(p, i);
    if (p != 2) {
        if (d.v == 1) return pi_K1_pv_tame(p, 1, d.tame, i);
        if (mod(i, 2) == 1 && mod((i + 1) / 2 - d.tame, p - 1) == 0) return G::cyclic(p);
        return G::zero();
    }
    long r = mod(i, 8);
    if (d.v == 2) {
        if (mod(i, 4) == 1) return G::cyclic(4);
        if (r == 2 || r == 4) return z2();
        if (r == 3) return z2(2);
        return G::zero();
    }
    if (d.tame == 0) {
        if (r == 1) return z2(2);
        if (r == 0 || r == 2 || r == 3 || r == 7) return z2();
        return G::zero();
    }
    if (r == 3) return z2(2);
    if (r == 1 || r == 2 || r == 4 || r == 5) return z2();
    return G::zero();
}

G pi_DK1_primed(const PAdicCharacterData& d, long i) {
    if (d.p != 2) throw std::invalid_argument("pi_DK1_primed: p = 2 only");
    check_data(d);
    if (d.prime_to_p) throw std::invalid_argument("pi_DK1_primed: pure 2-power conductor required");
    if (d.v == 0) return pi_exotic(i);
    long r = mod(i, 8);
    if (d.v == 2) {
        if (mod(i, 4) == 1) return G::cyclic(4);
        if (r == 6 || r == 0) return z2();
        if (r == 7) return z2(2);
        return G::zero();
    }
    if (d.tame == 0) {
        if (r == 5) return z2(2);
        if (r == 3 || r == 4 || r == 6 || r == 7) return z2();
        return G::zero();
    }
    if (r == 7) return z2(2);
    if (r == 0 || r == 1 || r == 5 || r == 6) return z2();
    return G::zero();
}

std::vector<PAdicCharacterData> decompose_p(const DirichletCharacter& chi, long p) {
    if (!chi.is_primitive()) throw std::invalid_argument("decompose_p: primitive character required");
    if (!is_prime(p)) throw std::invalid_argument("decompose_p: prime required");
    long ord = chi.order(), pp = 1;
    while (ord % (pp * p) == 0) pp *= p;
    long d = ord / pp;
    std::vector<PAdicCharacterData> out;
    for (long b : padic_splitting(d, p)) {
        // lift b mod d to a unit mod ord that is 1 on the p-part
        long B = mod(b, d);
        while (B % pp != 1 % pp) B += d;
        if (std::gcd(B, ord) != 1) throw std::logic_error("decompose_p: coset representative is not a unit");
        out.push_back(padic_character_data(char_pow(chi, B), p));
    }
    return out;
}

namespace {

void require_nontrivial_primitive(const DirichletCharacter& chi, const char* who) {
    if (!chi.is_primitive()) throw std::invalid_argument(std::string(who) + ": primitive character required");
    if (chi.modulus() == 1) throw std::invalid_argument(std::string(who) + ": nontrivial character required");
}

long prime_to_p_part(long x, long p) {
    while (x % p == 0) x /= p;
    return x;
}

// case N = p odd prime
G direct_prime(const DirichletCharacter& chi, long p, long i) {
    long ord = chi.order();
    G g;
    if (mod(i, 2) == 1) {
        long k = (i + 1) / 2;
        if (kernel_order_match(k, p, ord)) g += G::cyclic_pow(p, vp(k, p) + 1);
    }
    auto q = prime_factors(ord);
    if (q.size() != 1) return g;
    long l = q[0];
    int li = static_cast<int>(l);
    if (l > 2) {
        if (i == 0 || i == 1) g += G::Zp(l, li);
        if (i != 0 && mod(i, 2) == 0 && mod(i / 2, l - 1) == 0) g += G::cyclic_pow(l, vp(i / 2, l) + 1).times(li);
        return g;
    }
    long r = mod(i, 8);
    if (i == 0) g += G::Zp(2, 2);
    else if (i == 1) g += G::Zp(2, 2) + z2(2);
    else if (r == 2) g += z2(4);
    // the 2-completed summand has (Z/2)^2 here whether or not the p-part is present
    else if (r == 1 || r == 3) g += z2(2);
    else if (mod(i, 4) == 0) g += G::cyclic_pow(2, vp(i / 4, 2) + 3).times(2);
    return g;
}

G direct_two_power(const DirichletCharacter& chi, int v, long i) {
    long r = mod(i, 8);
    if (v == 2) {
        if (mod(i, 4) == 1) return G::cyclic(4);
        if (r == 2 || r == 4) return z2();
        if (r == 3) return z2(2);
        return G::zero();
    }
    if (chi.parity() == 1) {
        if (r == 0 || r == 2 || r == 3 || r == 7) return z2();
        if (r == 1) return z2(2);
        return G::zero();
    }
    if (r == 1 || r == 2 || r == 4 || r == 5) return z2();
    if (r == 3) return z2(2);
    return G::zero();
}

G direct_composite(const DirichletCharacter& chi, long i) {
    long N = chi.modulus();
    auto loc = factor_local(chi);
    std::set<long> cands;
    for (long q : prime_factors(N)) cands.insert(q);
    for (long q : prime_factors(chi.order())) cands.insert(q);
    long p = 0, rest_order = 1;
    for (long q : cands) {
        long o = 1;
        for (auto& [r, c] : loc)
            if (r != q) o = std::lcm(o, c.order());
        if (o > 1 && is_p_power(o, q)) {
            if (p != 0) throw std::logic_error("pi_JN_chi: two primes with p-power prime-to-p image");
            p = q;
            rest_order = o;
        }
    }
    if (p == 0) return G::zero();
    int v = N % p == 0 ? valuation(N, p) : 0;
    int n = valuation(rest_order, p);
    auto it = loc.find(p);
    int pi = static_cast<int>(p);
    if (p != 2) {
        long tame_order = it == loc.end() ? 1 : prime_to_p_part(it->second.order(), p);
        if (tame_order == 1 && (i == 0 || i == 1)) return G::Zp(p, pi);
        if (i == 0 || mod(i, 2) != 0) return G::zero();
        long k = i / 2;
        if (!kernel_order_match(k, p, tame_order)) return G::zero();
        int e = n >= v - 1 ? vp(k, p) + 1 : vp(k, p) + v - n;
        return G::cyclic_pow(p, e).times(pi);
    }
    bool trivial_on_4 = it == loc.end() || it->second.parity() == 1;
    long r = mod(i, 8);
    if (trivial_on_4) {
        if (i == 0) return G::Zp(2, 2);
        if (i == 1) return (G::Zp(2) + z2()).times(2);
        if (r == 2) return z2(4);
        if (r == 1 || r == 3) return z2(2);
        if (mod(i, 4) == 0) {
            int e = n >= v - 2 ? vp(i / 4, 2) + 3 : vp(i / 4, 2) + v - n + 1;
            return G::cyclic_pow(2, e).times(2);
        }
        return G::zero();
    }
    if ((r == 3 || r == 5) && i != 1) return z2(2);
    if (r == 4) return z2(4);
    if (mod(i, 4) == 2) return G::cyclic_pow(2, n >= v - 2 ? 2 : v - n).times(2);
    return G::zero();
}

}  // namespace

G pi_JN_chi_direct(const DirichletCharacter& chi, long i) {
    require_nontrivial_primitive(chi, "pi_JN_chi");
    long N = chi.modulus();
    auto ps = prime_factors(N);
    if (ps.size() > 1) return direct_composite(chi, i);
    long p = ps[0];
    int v = valuation(N, p);
    if (p == 2) return direct_two_power(chi, v, i);
    if (v == 1) return direct_prime(chi, p, i);
    if (mod(i, 2) != 1) return G::zero();
    long tame_order = prime_to_p_part(chi.order(), p);
    return kernel_order_match((i + 1) / 2, p, tame_order) ? G::cyclic(p) : G::zero();
}

G pi_JN_chi_assembled(const DirichletCharacter& chi, long i) {
    require_nontrivial_primitive(chi, "pi_JN_chi");
    std::set<long> primes;
    for (long q : prime_factors(chi.modulus())) primes.insert(q);
    for (long q : prime_factors(chi.order())) primes.insert(q);
    // other primes see a prime-to-p image that is not a p-power, and the rational part is zero
    G g;
    for (long p : primes)
        for (const auto& d : decompose_p(chi, p)) g += pi_DK1(d, i);
    return g;
}

G pi_JN_chi(const DirichletCharacter& chi, long i, const LocalizationSpec& loc) {
    G a = pi_JN_chi_direct(chi, i), b = pi_JN_chi_assembled(chi, i);
    if (a != b)
        throw std::logic_error("pi_JN_chi(" + chi.name() + ", " + std::to_string(i) + "): direct " + a.str() + " vs assembled " + b.str());
    return invert_primes(a, loc);
}

long subgroup_order(long N, const std::vector<long>& gens) {
    if (N < 1) throw std::invalid_argument("subgroup_order: N >= 1 required");
    std::set<long> H{1 % N};
    std::vector<long> frontier{1 % N};
    while (!frontier.empty()) {
        long x = frontier.back();
        frontier.pop_back();
        for (long g : gens) {
            long gg = mod(g, N);
            if (std::gcd(gg, N) != 1) throw std::invalid_argument("subgroup_order: generator is not a unit");
            long y = (x * gg) % N;
            if (H.insert(y).second) frontier.push_back(y);
        }
    }
    return static_cast<long>(H.size());
}

G pi_JK(long N, const std::vector<long>& gens, long i, bool invert_G) {
    if (N < 1) throw std::invalid_argument("pi_JK: N >= 1 required");
    auto ps = prime_factors(N);
    if (ps.size() > 1) throw std::invalid_argument("pi_JK: N must be a prime power");
    long h = subgroup_order(N, gens);
    if (!invert_G && h > 1)
        throw std::invalid_argument("pi_JK: homotopy fixed points at primes dividing |G| are not modelled; invert |G|");
    std::set<long> inv;
    if (invert_G)
        for (long q : prime_factors(h)) inv.insert(q);
    G g;
    if (i == 0) g += G::Z();
    if (i == -2) g += G::QZ();
    long p = ps.empty() ? 0 : ps[0];
    int v = p ? valuation(N, p) : 0;
    long bound = std::max({2L, p, (i + 1 < 0 ? -(i + 1) : i + 1) / 2 + 1});
    for (long l = 2; l <= bound; ++l) {
        if (!is_prime(l) || inv.count(l)) continue;
        if (l != p) {
            g += pi_K1(l, i).finite_part();
            continue;
        }
        if (p == 2) {
            g += (v >= 2 ? pi_K1_pv(2, v, i) : pi_K1(2, i)).finite_part();
            continue;
        }
        // p does not divide |G| here, so G is the order-h subgroup of the tame part;
        // omega^a kills it iff h | a
        for (int a = 0; a <= p - 2; ++a)
            if (a % h == 0) g += pi_K1_pv_tame(p, v, a, i).finite_part();
    }
    return g.invert_primes(inv);
}

Report check_duality_dirichlet(const DirichletCharacter& chi, long t_lo, long t_hi) {
    require_nontrivial_primitive(chi, "check_duality_dirichlet");
    auto ps = prime_factors(chi.modulus());
    if (ps.size() != 1) throw std::invalid_argument("check_duality_dirichlet: prime-power conductor required");
    long p = ps[0];
    Report r("duality " + chi.name());
    LocalizationSpec loc;
    long l = ell_of_chi(chi);
    if (p != 2 && l > 1 && l != p) loc.inverted_primes.insert(l);
    auto inv = char_inv(chi);
    bool primed = p == 2 && chi.parity() == 1;
    for (long t = t_lo; t <= t_hi; ++t) {
        G lhs = pi_JN_chi(chi, t, loc);
        G rhs = primed ? pi_DK1_primed(padic_character_data(inv, 2), -2 - t) : pi_JN_chi(inv, -2 - t, loc);
        if (!lhs.is_finite() || !rhs.is_finite()) r.notes.push_back("t=" + std::to_string(t) + ": infinite atoms compared formally");
        r.check(lhs == rhs, "t=" + std::to_string(t) + ": " + lhs.str() + " vs " + (primed ? "primed " : "") + rhs.str());
    }
    return r;
}

Report check_duality_JN(long N, long t_lo, long t_hi) {
    if (N < 1) throw std::invalid_argument("check_duality_JN: N >= 1 required");
    bool strict = N % 4 == 0;
    Report r("duality J(" + std::to_string(N) + ")" + (strict ? "" : " up to Z/2"));
    auto same = [&](const G& a, const G& b) { return strict ? a == b : a.without_Z2_summands() == b.without_Z2_summands(); };
    bool lookup_done = false;
    for (long t = t_lo; t <= t_hi; ++t) {
        if (t == 0 || t == -2) {
            if (lookup_done) continue;
            lookup_done = true;
            G a = pi_JN(N, 0), b = pi_JN(N, -2);
            long z = 0, qz = 0;
            for (const auto& at : a.atoms()) z += at.kind == Atom::Kind::FreeZ;
            for (const auto& at : b.atoms()) qz += at.kind == Atom::Kind::QmodZ;
            r.check(z == 1 && qz == 1 && same(a.finite_part(), b.finite_part()), "degrees 0/-2 lookup: " + a.str() + " vs " + b.str());
            r.notes.push_back("degrees 0 and -2 paired by lookup (Z <-> Q/Z); convention-dependent");
            continue;
        }
        G a = pi_JN(N, t), b = pi_JN(N, -2 - t);
        bool ok = a.is_finite() && b.is_finite() && same(a, b);
        r.check(ok, "t=" + std::to_string(t) + ": Hom(" + a.str() + ", Q/Z) vs " + b.str());
        if (ok && a != b) r.notes.push_back("t=" + std::to_string(t) + ": differs by Z/2 summands");
    }
    return r;
}

}  // namespace dj
