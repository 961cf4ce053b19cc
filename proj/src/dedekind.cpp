#include "dj/dedekind.hpp"

#include "dj/bernoulli.hpp"
#include "dj/homotopy.hpp"

#include <numeric>
#include <set>

namespace dj {

std::vector<long> subgroup_elements(const AbelianFieldSpec& spec) {
    long N = spec.N;
    if (N < 1) throw std::invalid_argument("AbelianFieldSpec: N >= 1 required");
    std::set<long> H{1 % N};
    std::vector<long> frontier{1 % N};
    while (!frontier.empty()) {
        long x = frontier.back();
        frontier.pop_back();
        for (long g : spec.subgroup_gens) {
            long gg = ((g % N) + N) % N;
            if (std::gcd(gg, N) != 1) throw std::invalid_argument("AbelianFieldSpec: generator " + std::to_string(g) + " is not a unit");
            long y = (x * gg) % N;
            if (H.insert(y).second) frontier.push_back(y);
        }
    }
    return {H.begin(), H.end()};
}

std::vector<DirichletCharacter> field_characters(const AbelianFieldSpec& spec) {
    auto H = subgroup_elements(spec);
    std::vector<DirichletCharacter> out;
    for (auto& c : enumerate(spec.N)) {
        bool kills = true;
        for (long h : H)
            if (*c.value_exponent(h) != 0) kills = false;
        if (kills) out.push_back(c);
    }
    return out;
}

BigRational zeta_special_value(const AbelianFieldSpec& spec, long k) {
    if (k < 1) throw std::invalid_argument("zeta_special_value: k >= 1 required");
    auto chars = field_characters(spec);
    long M = 1;
    for (auto& c : chars) M = std::lcm(M, c.order());
    CyclotomicField F(M);
    CycElement prod = CycElement::rational(F, 1);
    for (auto& c : chars) {
        auto L = l_value(c, 1 - k);
        if (L.is_zero()) return 0;
        prod = prod * L.coerce(F);
    }
    if (!prod.is_rational()) throw std::logic_error("zeta_special_value: product is not rational: " + prod.str());
    return prod.rational_value();
}

bool is_totally_real(const AbelianFieldSpec& spec) {
    if (spec.N <= 2) return true;
    auto H = subgroup_elements(spec);
    return std::find(H.begin(), H.end(), spec.N - 1) != H.end();
}

Report verify_JK(const AbelianFieldSpec& spec, long t) {
    if (t < 1) throw std::invalid_argument("verify_JK: t >= 1 required");
    if (prime_factors(spec.N).size() > 1) throw std::invalid_argument("verify_JK: N must be a prime power");
    if (!is_totally_real(spec)) throw std::invalid_argument("verify_JK: field is not totally real");
    long h = static_cast<long>(subgroup_elements(spec).size());
    std::set<long> inv;
    for (long q : prime_factors(h)) inv.insert(q);
    LocalizationSpec loc{inv};

    Report r("verify_JK N=" + std::to_string(spec.N) + " |H|=" + std::to_string(h) + " t=" + std::to_string(t));
    BigRational z = zeta_special_value(spec, 2 * t);
    auto zeta_side = invert_primes(AbelianGroupExpr::cyclic(z.get_den()), loc);
    auto homotopy_side = pi_JK(spec.N, spec.subgroup_gens, 4 * t - 1, true);
    r.check(homotopy_side == zeta_side, "zeta_K(" + std::to_string(1 - 2 * t) + ") = " + z.get_str() + " gives " + zeta_side.pretty() +
                                            ", pi_" + std::to_string(4 * t - 1) + " = " + homotopy_side.pretty());
    return r;
}

}  // namespace dj
