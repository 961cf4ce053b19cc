#include "dj/suites.hpp"

#include "dj/bernoulli.hpp"
#include "dj/eisenstein.hpp"
#include "dj/homotopy.hpp"
#include "dj/padic.hpp"

#include <functional>
#include <map>

namespace dj {

namespace {

using G = AbelianGroupExpr;

long mod(long x, long m) { return ((x % m) + m) % m; }

std::string join(const std::vector<long>& xs) {
    std::string s;
    for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::vector<DirichletCharacter> primitive_of(long N) {
    std::vector<DirichletCharacter> out;
    for (auto& c : enumerate(N))
        if (c.is_primitive()) out.push_back(c);
    return out;
}

}  // namespace

Report suite_von_staudt(long k_max) {
    Report r = verify_von_staudt(k_max);
    r.name = "von-staudt k<=" + std::to_string(k_max);
    return r;
}

Report suite_gbn_oracle(long max_modulus, long k_max) {
    Report r("gbn-oracle modulus<=" + std::to_string(max_modulus) + " k<=" + std::to_string(k_max));
    for (long N = 1; N <= max_modulus; ++N)
        for (auto& c : enumerate(N))
            for (long k = 0; k <= k_max; ++k) {
                auto a = gbn(c, k), b = gbn_oracle(c, k);
                r.check(a == b, c.name() + " k=" + std::to_string(k) + ": " + a.str() + " vs " + b.str());
            }
    return r;
}

Report suite_carlitz(const std::vector<long>& conductors, long k_max) {
    Report r("carlitz conductors " + join(conductors) + " k<=" + std::to_string(k_max));
    for (long N : conductors)
        for (auto& c : primitive_of(N))
            for (long k = 1; k <= k_max; ++k) {
                if ((k % 2 == 0 ? 1 : -1) != c.parity()) continue;
                r.merge(verify_carlitz(c, k));
            }
    return r;
}

Report suite_gbn_theorem(const std::vector<long>& conductors, long max_weight) {
    Report r("gbn-theorem conductors " + join(conductors) + " |k|<=" + std::to_string(max_weight));
    for (long N : conductors) {
        auto ps = prime_factors(N);
        bool extra2 = ps.size() == 1 && ps[0] != 2 && valuation(N, ps[0]) >= 2;
        for (auto& c : primitive_of(N)) {
            std::set<long> inv;
            for (long q : prime_factors(ell_of_chi(c))) inv.insert(q);
            if (extra2) inv.insert(2);
            LocalizationSpec loc{inv};
            for (long k = -max_weight; k <= max_weight; ++k) {
                // k = 0 has no denominator ideal
                if (k == 0 || (mod(k, 2) == 0 ? 1 : -1) != c.parity()) continue;
                auto lhs = invert_primes(quotient_group(denom_ideal(char_inv(c), std::labs(k))), loc);
                auto rhs = pi_JN_chi(c, 2 * k - 1, loc);
                r.check(lhs == rhs, c.name() + " k=" + std::to_string(k) + ": " + lhs.pretty() + " vs " + rhs.pretty());
            }
        }
    }
    return r;
}

Report suite_e2_oracle() {
    Report r("e2-oracle");
    for (long p : {3L, 5L, 7L})
        for (int v : {2, 3})
            for (int a = 0; a <= p - 2; ++a)
                for (long t = -10; t <= 10; ++t) {
                    auto expect = mod(t - a, p - 1) == 0 ? G::cyclic(p) : G::zero();
                    auto got = quotient_oracle(p, v, a, t);
                    r.check(got == expect, "p=" + std::to_string(p) + " v=" + std::to_string(v) + " a=" + std::to_string(a) +
                                               " t=" + std::to_string(t) + ": " + got.pretty());
                }
    for (int v : {3, 4})
        for (long t = -5; t <= 5; ++t) {
            auto got = quotient_oracle_2(v, t);
            r.check(got == G::cyclic(2), "p=2 v=" + std::to_string(v) + " t=" + std::to_string(t) + ": " + got.pretty());
        }
    return r;
}

Report suite_consistency(long max_conductor, long i_lo, long i_hi) {
    Report r("consistency conductor<=" + std::to_string(max_conductor) + " i in [" + std::to_string(i_lo) + "," + std::to_string(i_hi) + "]");
    for (long N = 2; N <= max_conductor; ++N)
        for (auto& c : primitive_of(N))
            for (long i = i_lo; i <= i_hi; ++i) {
                auto a = pi_JN_chi_direct(c, i), b = pi_JN_chi_assembled(c, i);
                r.check(a == b, c.name() + " i=" + std::to_string(i) + ": " + a.pretty() + " vs " + b.pretty());
            }
    return r;
}

Report suite_duality_dirichlet(long t_lo, long t_hi) {
    Report r("duality-dirichlet t in [" + std::to_string(t_lo) + "," + std::to_string(t_hi) + "]");
    for (long N : {3L, 9L, 5L, 25L, 7L, 49L, 4L, 8L, 16L})
        for (auto& c : primitive_of(N)) r.merge(check_duality_dirichlet(c, t_lo, t_hi));
    return r;
}

Report suite_duality_jn(long t_lo, long t_hi) {
    Report r("duality-jn t in [" + std::to_string(t_lo) + "," + std::to_string(t_hi) + "]");
    for (long N : {4L, 8L, 12L, 1L, 3L, 5L}) r.merge(check_duality_JN(N, t_lo, t_hi));
    return r;
}

Report suite_eisenstein(const std::vector<long>& conductors, long k_max, long n_max) {
    Report r("eisenstein conductors " + join(conductors) + " k<=" + std::to_string(k_max) + " n<=" + std::to_string(n_max));
    for (long N : conductors) {
        auto chars = N == 1 ? std::vector<DirichletCharacter>{DirichletCharacter::trivial(1)} : primitive_of(N);
        for (auto& c : chars) {
            long top = N == 1 ? 2 * k_max + 2 : k_max;
            for (long k = N == 1 ? 2 : 1; k <= top; ++k) {
                if ((k % 2 == 0 ? 1 : -1) != c.parity()) continue;
                auto res = congruence_check(c, k, n_max);
                for (auto& row : res.rows) {
                    std::string tag = c.name() + " k=" + std::to_string(k) + " n=" + std::to_string(row.n) + " c=" + row.c.str() +
                                      " ideal " + res.ideal.str();
                    r.check(row.primary, tag);
                    if (row.primary && !row.full) r.findings.push_back(tag);
                }
            }
        }
    }
    return r;
}

Report suite_dedekind_jk(const std::vector<AbelianFieldSpec>& fields, const std::vector<long>& ts) {
    Report r("dedekind-jk");
    for (auto& f : fields)
        for (long t : ts) r.merge(verify_JK(f, t));
    return r;
}

Report suite_splitting(long n_max, long p_max) {
    Report r("splitting n'<=" + std::to_string(n_max) + " p<=" + std::to_string(p_max));
    for (long n = 1; n <= n_max; ++n)
        for (long p = 2; p <= p_max; ++p) {
            if (!is_prime(p) || n % p == 0) continue;
            auto comps = padic_splitting(n, p);
            auto degs = factor_degrees_mod_p(cyclotomic_poly(n), p);
            auto fd = frobenius_data(n, p);
            bool ok = comps.size() == degs.size();
            for (int d : degs) ok = ok && d == fd.m;
            r.check(ok, "n'=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + std::to_string(comps.size()) + " components, " +
                            std::to_string(degs.size()) + " factors");
        }
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"von-staudt",       "gbn-oracle",  "carlitz",   "gbn-theorem", "duality-dirichlet",
                                                "duality-jn",       "e2-oracle",   "consistency", "eisenstein", "dedekind-jk",
                                                "splitting"};
    return names;
}

Report run_suite(const std::string& name) {
    static const std::map<std::string, std::function<Report()>> table{
        {"von-staudt", [] { return suite_von_staudt(); }},
        {"gbn-oracle", [] { return suite_gbn_oracle(); }},
        {"carlitz", [] { return suite_carlitz(); }},
        {"gbn-theorem", [] { return suite_gbn_theorem(); }},
        {"duality-dirichlet", [] { return suite_duality_dirichlet(); }},
        {"duality-jn", [] { return suite_duality_jn(); }},
        {"e2-oracle", [] { return suite_e2_oracle(); }},
        {"consistency", [] { return suite_consistency(); }},
        {"eisenstein", [] { return suite_eisenstein(); }},
        {"dedekind-jk", [] { return suite_dedekind_jk(); }},
        {"splitting", [] { return suite_splitting(); }},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
    return it->second();
}

}  // namespace dj
