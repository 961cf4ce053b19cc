#include "dj/padic.hpp"

#include <numeric>

namespace dj {

namespace {

BigInt pow_p(long p, int M) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(M));
    return r;
}

BigInt reduce(const BigInt& x, const BigInt& mod) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// g^t mod m, t may be negative
BigInt powmod(const BigInt& g, long t, const BigInt& m) {
    BigInt base = g, r;
    if (t < 0) {
        if (!mpz_invert(base.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t())) throw ArithmeticError("powmod: not a unit");
        t = -t;
    }
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(t), m.get_mpz_t());
    return r;
}

int vp_long(long x, long p) { return x == 0 ? 1000 : valuation(x, p); }

}  // namespace

PAdicInt::PAdicInt(long p, int M, const BigInt& residue) : p_(p), M_(M) {
    if (M < 1) throw std::invalid_argument("PAdicInt: precision >= 1 required");
    r_ = reduce(residue, modulus());
}

BigInt PAdicInt::modulus() const { return pow_p(p_, M_); }

void PAdicInt::check(const PAdicInt& o) const {
    if (p_ != o.p_ || M_ != o.M_) throw ArithmeticError("PAdicInt: prime or precision mismatch");
}

PAdicInt PAdicInt::operator+(const PAdicInt& o) const {
    check(o);
    return {p_, M_, r_ + o.r_};
}

PAdicInt PAdicInt::operator-(const PAdicInt& o) const {
    check(o);
    return {p_, M_, r_ - o.r_};
}

PAdicInt PAdicInt::operator*(const PAdicInt& o) const {
    check(o);
    return {p_, M_, r_ * o.r_};
}

PAdicInt PAdicInt::pow(long e) const { return {p_, M_, powmod(r_, e, modulus())}; }

bool PAdicInt::is_unit() const { return mpz_divisible_ui_p(r_.get_mpz_t(), static_cast<unsigned long>(p_)) == 0; }

int PAdicInt::valuation() const { return r_ == 0 ? M_ : dj::valuation(r_, BigInt(p_)); }

PAdicInt teichmuller(long p, long a, int M) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("teichmuller: odd prime required");
    if (a % p == 0) throw ArithmeticError("teichmuller: a divisible by p");
    PAdicInt x(p, M, BigInt(a));
    // x -> x^p is a contraction on the residue class of a; M steps reach the fixed point
    for (int i = 0; i < M; ++i) x = x.pow(p);
    return x;
}

long topological_generator(long p) {
    if (!is_prime(p)) throw std::invalid_argument("topological_generator: prime required");
    if (p == 2) return 5;
    return smallest_primitive_root(p, 2);
}

PAdicCharacterData padic_character_data(const DirichletCharacter& chi, long p) {
    if (!is_prime(p)) throw std::invalid_argument("padic_character_data: prime required");
    PAdicCharacterData d;
    d.p = p;
    auto pr = chi.primitive();
    auto loc = factor_local(pr);
    int vN = chi.modulus() % p == 0 ? valuation(chi.modulus(), p) : 0;
    auto it = loc.find(p);
    if (it != loc.end()) {
        const auto& cp = it->second;
        d.v = valuation(cp.modulus(), p);
        if (p == 2) d.tame = cp.parity() == -1 ? 1 : 0;
        else d.tame = static_cast<int>(cp.exponents()[0] % (p - 1));
    }
    d.wild_primitive = d.v == vN;
    long order_rest = 1, Np = 1;
    for (auto& [q, c] : loc) {
        if (q == p) continue;
        order_rest = std::lcm(order_rest, c.order());
        Np *= c.modulus();
    }
    if (Np > 1) {
        PrimeToPData r;
        r.N_prime = Np;
        r.n = order_rest % p == 0 ? valuation(order_rest, p) : 0;
        long o = order_rest;
        while (o % p == 0) o /= p;
        r.image_is_p_power = o == 1;
        d.prime_to_p = r;
    }
    return d;
}

namespace {

// SNF valuations of the multiplication matrix of (c x - h) on Z[x]/(Phi) mod p^M;
// nullopt when some diagonal entry vanishes at this precision
std::optional<std::vector<int>> local_quotient(long p, const RationalPoly& phi, const BigInt& c, const BigInt& h, int M) {
    auto d = static_cast<std::size_t>(phi.degree());
    IntMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        // c * x^{j+1} mod Phi
        if (j + 1 < d) {
            m.at(j, j + 1) += c;
        } else {
            for (std::size_t i = 0; i < d; ++i) m.at(j, i) -= c * phi.coeff(i).get_num();
        }
        m.at(j, j) -= h;
    }
    auto vals = local_smith_valuations(m, BigInt(p), M);
    for (int v : vals)
        if (v >= M) return std::nullopt;
    return vals;
}

AbelianGroupExpr group_from_valuations(long p, const std::vector<int>& vals) {
    AbelianGroupExpr g;
    for (int v : vals)
        if (v > 0) g += AbelianGroupExpr::cyclic_pow(p, v);
    return g;
}

template <class F>
AbelianGroupExpr stabilize(long p, int M, F compute) {
    for (int cur = M; cur <= 400; cur += 5) {
        auto a = compute(cur), b = compute(cur + 5);
        if (a && b && *a == *b) return group_from_valuations(p, *a);
    }
    throw PrecisionError("quotient did not stabilize; retry with a larger precision");
}

}  // namespace

AbelianGroupExpr quotient_oracle(long p, int v, int a, long t, int M) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("quotient_oracle: odd prime required");
    if (v < 1) throw std::invalid_argument("quotient_oracle: v >= 1 required");
    if (a < 0 || a > p - 2) throw std::invalid_argument("quotient_oracle: tame exponent out of range");
    long q = 1;
    for (int i = 1; i < v; ++i) q *= p;
    auto phi = cyclotomic_poly(q);
    long g = topological_generator(p);
    return stabilize(p, M, [&](int prec) {
        BigInt mod = pow_p(p, prec);
        BigInt c = teichmuller(p, g, prec).pow(a).residue();
        BigInt h = powmod(BigInt(g), t, mod);
        return local_quotient(p, phi, c, h, prec);
    });
}

AbelianGroupExpr quotient_oracle_2(int v, long t, int M, int /*parity*/) {
    if (v < 3) throw std::invalid_argument("quotient_oracle_2: v >= 3 required");
    long q = 1;
    for (int i = 2; i < v; ++i) q *= 2;
    auto phi = cyclotomic_poly(q);
    return stabilize(2, M, [&](int prec) {
        BigInt mod = pow_p(2, prec);
        return local_quotient(2, phi, BigInt(1), powmod(BigInt(5), t, mod), prec);
    });
}

AbelianGroupExpr e2_page(const PAdicCharacterData& d, int s, long t) {
    using G = AbelianGroupExpr;
    if (d.prime_to_p) throw std::invalid_argument("e2_page: prime-to-p payload not supported");
    if (s < 0) return G::zero();
    long p = d.p;
    auto mod = [](long x, long m) { return ((x % m) + m) % m; };
    if (p != 2) {
        if (mod(t, 2) != 0) throw std::invalid_argument("e2_page: t must be even for odd p");
        long w = t / 2;
        if (d.v == 0 || (d.v == 1 && d.tame == 0)) {
            if (t == 0) return s <= 1 ? G::Zp(p) : G::zero();
            if (s == 1 && mod(w, p - 1) == 0) return G::cyclic_pow(p, vp_long(w, p) + 1);
            return G::zero();
        }
        if (d.v == 1) {
            if (s == 1 && mod(w - d.tame, p - 1) == 0) return G::cyclic_pow(p, vp_long(w, p) + 1);
            return G::zero();
        }
        if (s == 1 && mod(w - d.tame, p - 1) == 0) return G::cyclic_pow(p, 1);
        return G::zero();
    }
    if (d.v == 1) throw std::invalid_argument("e2_page: conductor 2 does not occur");
    if (d.v == 0) {
        if (t == 0) return s <= 1 ? G::Zp(2) : G::zero();
        if (s <= 1 && (mod(t, 8) == 1 || mod(t, 8) == 2)) return G::cyclic(2);
        if (s == 1 && mod(t, 4) == 0) return G::cyclic_pow(2, vp_long(t / 4, 2) + 3);
        return G::zero();
    }
    if (d.v == 2) {
        if (s < 1) return G::zero();
        if (mod(t, 4) == 2) return s == 1 ? G::cyclic(4) : G::cyclic(2);
        if (mod(t, 4) == 0) return G::cyclic(2);
        return G::zero();
    }
    long r = mod(t, 8);
    if (d.tame == 0) {
        if (s == 1 && mod(t, 4) == 0) return G::cyclic(2);
        if (s <= 1 && (r == 1 || r == 2)) return G::cyclic(2);
        return G::zero();
    }
    if (s == 1 && mod(t, 4) == 2) return G::cyclic(2);
    if (s <= 1 && (r == 3 || r == 4)) return G::cyclic(2);
    return G::zero();
}

}  // namespace dj
