#include "dj/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dj {

Fraction Fraction::make(long n, long d) {
    if (d <= 0) throw std::invalid_argument("Fraction: positive denominator required");
    n %= d;
    if (n < 0) n += d;
    long g = std::gcd(n, d);
    if (g == 0) g = d;
    return {n / g, d / g};
}

Fraction Fraction::operator+(const Fraction& o) const {
    long l = std::lcm(den, o.den);
    __int128 n = static_cast<__int128>(num) * (l / den) + static_cast<__int128>(o.num) * (l / o.den);
    return make(static_cast<long>(n % l), l);
}

Fraction Fraction::times(long k) const {
    __int128 n = static_cast<__int128>(num) * (k % den);
    return make(static_cast<long>(n % den), den);
}

long smallest_primitive_root(long p, int v) {
    long q = 1;
    for (int i = 0; i < v; ++i) q *= p;
    if (q == 2) return 1;
    if (p == 2 && v > 2) throw ArithmeticError("no primitive root mod 2^v for v > 2");
    long phi = q / p * (p - 1);
    auto qs = prime_factors(phi);
    for (long g = 1; g < q; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (long r : qs)
            if (mod_pow(g, phi / r, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw ArithmeticError("primitive root search failed");
}

namespace {

long crt_lift(long local, long q, long N) {
    long rest = N / q;
    if (rest == 1) return local % N;
    // x = local mod q, x = 1 mod rest
    for (long t = 0; t < q; ++t) {
        long x = 1 + t * rest;
        if (x % q == ((local % q) + q) % q) return x % N;
    }
    throw ArithmeticError("crt_lift failed");
}

std::shared_ptr<const UnitGroupData> build_structure(long N) {
    if (N < 1) throw std::invalid_argument("UnitGroupStructure: N >= 1 required");
    auto d = std::make_shared<UnitGroupData>();
    d->N = N;
    long rest = N;
    for (long p : prime_factors(N)) {
        PrimePowerFactor f;
        f.p = p;
        while (rest % p == 0) {
            rest /= p;
            ++f.v;
            f.q *= p;
        }
        std::vector<std::pair<long, long>> gl;  // (generator, order)
        if (p != 2) {
            long g = smallest_primitive_root(p, f.v);
            long phi = f.q / p * (p - 1);
            if (multiplicative_order(g, f.q) != phi) throw ArithmeticError("generator has wrong order");
            gl.push_back({g, phi});
        } else if (f.v == 2) {
            gl.push_back({3, 2});
        } else if (f.v >= 3) {
            gl.push_back({f.q - 1, 2});
            gl.push_back({5, f.q / 4});
        }
        for (auto [g, o] : gl) {
            if (multiplicative_order(g, f.q) != o) throw ArithmeticError("generator has wrong order");
            f.gens.push_back(d->gens.size());
            d->gens.push_back({p, g, crt_lift(g, f.q, N), o, d->factors.size()});
        }
        f.dlog.assign(f.gens.size(), std::vector<long>(static_cast<std::size_t>(f.q), -1));
        if (f.gens.size() == 1) {
            long x = 1;
            for (long k = 0; k < gl[0].second; ++k) {
                f.dlog[0][static_cast<std::size_t>(x)] = k;
                x = x * gl[0].first % f.q;
            }
        } else if (f.gens.size() == 2) {
            long x = 1;
            for (long k = 0; k < gl[1].second; ++k) {
                f.dlog[0][static_cast<std::size_t>(x)] = 0;
                f.dlog[1][static_cast<std::size_t>(x)] = k;
                long y = f.q - x;
                f.dlog[0][static_cast<std::size_t>(y)] = 1;
                f.dlog[1][static_cast<std::size_t>(y)] = k;
                x = x * 5 % f.q;
            }
        }
        d->factors.push_back(std::move(f));
    }
    return d;
}

}  // namespace

UnitGroupStructure::UnitGroupStructure(long N) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const UnitGroupData>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, build_structure(N)).first;
    d_ = it->second;
}

long UnitGroupStructure::order() const {
    long r = 1;
    for (auto& g : d_->gens) r *= g.order;
    return r;
}

std::optional<std::vector<long>> UnitGroupStructure::log(long a) const {
    long N = d_->N;
    long r = ((a % N) + N) % N;
    if (std::gcd(r, N) != 1 && N != 1) return std::nullopt;
    std::vector<long> out(d_->gens.size(), 0);
    for (auto& f : d_->factors) {
        auto idx = static_cast<std::size_t>(r % f.q);
        for (std::size_t j = 0; j < f.gens.size(); ++j) out[f.gens[j]] = f.dlog[j][idx];
    }
    return out;
}

DirichletCharacter::DirichletCharacter(UnitGroupStructure s, std::vector<long> exponents)
    : s_(std::move(s)), e_(std::move(exponents)) {
    const auto& g = s_.generators();
    if (e_.size() != g.size()) throw std::invalid_argument("DirichletCharacter: exponent count mismatch");
    order_ = 1;
    for (std::size_t j = 0; j < g.size(); ++j) {
        e_[j] = ((e_[j] % g[j].order) + g[j].order) % g[j].order;
        order_ = std::lcm(order_, g[j].order / std::gcd(e_[j], g[j].order));
    }
}

DirichletCharacter DirichletCharacter::trivial(long N) {
    UnitGroupStructure s(N);
    return {s, std::vector<long>(s.generators().size(), 0)};
}

DirichletCharacter DirichletCharacter::from_index(long N, long index) {
    UnitGroupStructure s(N);
    if (index < 0 || index >= s.order()) throw std::out_of_range("character index out of range");
    const auto& g = s.generators();
    std::vector<long> e(g.size(), 0);
    for (std::size_t j = g.size(); j-- > 0;) {
        e[j] = index % g[j].order;
        index /= g[j].order;
    }
    return {s, e};
}

DirichletCharacter DirichletCharacter::from_generator_values(UnitGroupStructure s, const std::vector<Fraction>& vals) {
    const auto& g = s.generators();
    if (vals.size() != g.size()) throw std::invalid_argument("from_generator_values: count mismatch");
    std::vector<long> e(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j].order % vals[j].den != 0) throw ArithmeticError("generator value is not a root of unity of the right order");
        e[j] = vals[j].num * (g[j].order / vals[j].den);
    }
    return {s, e};
}

long DirichletCharacter::index() const {
    long idx = 0;
    const auto& g = s_.generators();
    for (std::size_t j = 0; j < g.size(); ++j) idx = idx * g[j].order + e_[j];
    return idx;
}

std::optional<Fraction> DirichletCharacter::value_fraction(long a) const {
    auto lg = s_.log(a);
    if (!lg) return std::nullopt;
    Fraction f;
    const auto& g = s_.generators();
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (e_[j] == 0) continue;
        f = f + Fraction::make(static_cast<long>(static_cast<__int128>(e_[j]) * (*lg)[j] % g[j].order), g[j].order);
    }
    return f;
}

std::optional<long> DirichletCharacter::value_exponent(long a) const {
    auto f = value_fraction(a);
    if (!f) return std::nullopt;
    return f->num * (order_ / f->den);
}

std::optional<CycElement> DirichletCharacter::evaluate(long a) const {
    auto k = value_exponent(a);
    if (!k) return std::nullopt;
    return CycElement::zeta_power(CyclotomicField(order_), *k);
}

namespace {

// conductor exponent of the local piece on factor f
int local_conductor_exponent(const UnitGroupStructure& s, const PrimePowerFactor& f, const std::vector<long>& e) {
    const auto& g = s.generators();
    if (f.p != 2) {
        long o = g[f.gens[0]].order;
        long ord = o / std::gcd(e[f.gens[0]], o);
        if (ord == 1) return 0;
        return 1 + static_cast<int>(valuation(ord, f.p));
    }
    if (f.v <= 1) return 0;
    long sign = e[f.gens[0]];
    long o5 = 1;
    if (f.v >= 3) {
        long o = g[f.gens[1]].order;
        o5 = o / std::gcd(e[f.gens[1]], o);
    }
    if (o5 > 1) return 2 + static_cast<int>(valuation(o5, 2));
    return sign != 0 ? 2 : 0;
}

std::vector<long> slice(const std::vector<long>& e, const PrimePowerFactor& f) {
    std::vector<long> r;
    for (auto j : f.gens) r.push_back(e[j]);
    return r;
}

DirichletCharacter local_primitive(const DirichletCharacter& loc, long p, int c) {
    long q = 1;
    for (int i = 0; i < c; ++i) q *= p;
    UnitGroupStructure t(q);
    std::vector<Fraction> vals;
    for (auto& g : t.generators()) vals.push_back(*loc.value_fraction(g.local));
    return DirichletCharacter::from_generator_values(t, vals);
}

}  // namespace

long DirichletCharacter::conductor() const {
    long c = 1;
    for (auto& f : s_.factors()) {
        int k = local_conductor_exponent(s_, f, e_);
        for (int i = 0; i < k; ++i) c *= f.p;
    }
    return c;
}

DirichletCharacter DirichletCharacter::primitive() const {
    long M = conductor();
    std::vector<long> e;
    for (auto& f : s_.factors()) {
        int k = local_conductor_exponent(s_, f, e_);
        if (k == 0) continue;
        DirichletCharacter loc(UnitGroupStructure(f.q), slice(e_, f));
        auto pr = local_primitive(loc, f.p, k);
        e.insert(e.end(), pr.exponents().begin(), pr.exponents().end());
    }
    return {UnitGroupStructure(M), e};
}

DirichletCharacter DirichletCharacter::lift(long M) const {
    if (M % modulus() != 0) throw std::invalid_argument("lift: modulus must divide target");
    UnitGroupStructure t(M);
    std::vector<Fraction> vals;
    for (auto& g : t.generators()) vals.push_back(*value_fraction(g.lifted));
    return from_generator_values(t, vals);
}

int DirichletCharacter::parity() const {
    auto f = value_fraction(-1);
    if (f->num == 0) return 1;
    if (f->den == 2) return -1;
    throw ArithmeticError("chi(-1) is not +-1");
}

std::string DirichletCharacter::name() const { return std::to_string(modulus()) + ":" + std::to_string(index()); }

std::string DirichletCharacter::str() const {
    std::ostringstream os;
    os << "chi[" << name() << "](";
    for (std::size_t j = 0; j < e_.size(); ++j) os << (j ? "," : "") << e_[j];
    os << ")";
    return os.str();
}

std::vector<DirichletCharacter> enumerate(long N) {
    UnitGroupStructure s(N);
    std::vector<DirichletCharacter> out;
    long n = s.order();
    out.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) out.push_back(DirichletCharacter::from_index(N, i));
    return out;
}

std::optional<CycElement> evaluate(const DirichletCharacter& chi, long a) { return chi.evaluate(a); }

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("char_mul: modulus mismatch");
    std::vector<long> e = a.exponents();
    for (std::size_t j = 0; j < e.size(); ++j) e[j] += b.exponents()[j];
    return {a.structure(), e};
}

DirichletCharacter char_inv(const DirichletCharacter& a) { return char_pow(a, -1); }

DirichletCharacter char_pow(const DirichletCharacter& a, long k) {
    std::vector<long> e = a.exponents();
    const auto& g = a.structure().generators();
    for (std::size_t j = 0; j < e.size(); ++j) {
        long kk = ((k % g[j].order) + g[j].order) % g[j].order;
        e[j] = static_cast<long>(static_cast<__int128>(e[j]) * kk % g[j].order);
    }
    return {a.structure(), e};
}

std::map<long, DirichletCharacter> factor_local(const DirichletCharacter& chi) {
    std::map<long, DirichletCharacter> out;
    for (auto& f : chi.structure().factors())
        out.emplace(f.p, DirichletCharacter(UnitGroupStructure(f.q), slice(chi.exponents(), f)));
    return out;
}

long ell_of_chi(const DirichletCharacter& chi) {
    long c = chi.conductor();
    auto cp = prime_factors(c);
    if (cp.size() > 1) throw std::invalid_argument("ell_of_chi: conductor is not a prime power");
    long n = chi.order();
    auto np = prime_factors(n);
    if (np.size() != 1) return 1;
    if (!cp.empty() && np[0] == cp[0]) return 1;
    return np[0];
}

bool kernel_order_match(long k, long p, long chi_tame_order) {
    long m = p - 1;
    if (chi_tame_order <= 0 || m % chi_tame_order != 0) throw std::invalid_argument("kernel_order_match: order must divide p-1");
    return std::gcd(((k % m) + m) % m, m) == m / chi_tame_order;
}

DirichletCharacter parse_character(const std::string& s) {
    auto pos = s.find(':');
    if (pos == std::string::npos) throw std::invalid_argument("character must be written N:i");
    long N = std::stol(s.substr(0, pos));
    long i = std::stol(s.substr(pos + 1));
    if (N < 1) throw std::invalid_argument("modulus must be positive");
    return DirichletCharacter::from_index(N, i);
}

}  // namespace dj
