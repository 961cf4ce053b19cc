#include "dj/groups.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dj {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    if (n < 0) n = -n;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

std::map<long, int> factor_big(BigInt m) {
    std::map<long, int> f;
    m = abs(m);
    for (long d = 2; m > 1 && d < 1000000; ++d) {
        if (static_cast<BigInt>(d) * d > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d))) {
            m /= d;
            ++f[d];
        }
    }
    if (m > 1) {
        if (!m.fits_slong_p()) throw ArithmeticError("cyclic order has a prime factor too large to factor: " + m.get_str());
        ++f[m.get_si()];
    }
    return f;
}

std::string excl_suffix(const std::vector<long>& ex) {
    if (ex.empty()) return "";
    std::string s = "[1/";
    for (std::size_t i = 0; i < ex.size(); ++i) s += (i ? "," : "") + std::to_string(ex[i]);
    return s + "]";
}

}  // namespace

std::string Atom::str() const {
    switch (kind) {
        case Kind::FreeZ: return "Z";
        case Kind::RationalVS: return "Q";
        case Kind::FreePadic: return "Z_" + std::to_string(p);
        case Kind::ProfiniteZ: return "Zhat" + excl_suffix(excluded);
        case Kind::QmodZ: return "Q/Z" + excl_suffix(excluded);
        case Kind::QpmodZp: return "Q_" + std::to_string(p) + "/Z_" + std::to_string(p);
        case Kind::Cyclic: {
            BigInt m;
            mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
            return "Z/" + m.get_str();
        }
    }
    return "?";
}

AbelianGroupExpr AbelianGroupExpr::Z(int rank) {
    AbelianGroupExpr g;
    for (int i = 0; i < rank; ++i) g.atoms_.push_back({Atom::Kind::FreeZ});
    return g;
}

AbelianGroupExpr AbelianGroupExpr::Q(int rank) {
    AbelianGroupExpr g;
    for (int i = 0; i < rank; ++i) g.atoms_.push_back({Atom::Kind::RationalVS});
    return g;
}

AbelianGroupExpr AbelianGroupExpr::Zp(long p, int rank) {
    AbelianGroupExpr g;
    for (int i = 0; i < rank; ++i) g.atoms_.push_back({Atom::Kind::FreePadic, p});
    return g;
}

AbelianGroupExpr AbelianGroupExpr::Zhat(int count) {
    AbelianGroupExpr g;
    for (int i = 0; i < count; ++i) g.atoms_.push_back({Atom::Kind::ProfiniteZ});
    return g;
}

AbelianGroupExpr AbelianGroupExpr::QZ(int count) {
    AbelianGroupExpr g;
    for (int i = 0; i < count; ++i) g.atoms_.push_back({Atom::Kind::QmodZ});
    return g;
}

AbelianGroupExpr AbelianGroupExpr::QpZp(long p, int count) {
    AbelianGroupExpr g;
    for (int i = 0; i < count; ++i) g.atoms_.push_back({Atom::Kind::QpmodZp, p});
    return g;
}

AbelianGroupExpr AbelianGroupExpr::cyclic(const BigInt& m) {
    if (m == 0) return Z();
    AbelianGroupExpr g;
    for (auto [p, e] : factor_big(m)) g.atoms_.push_back({Atom::Kind::Cyclic, p, e});
    g.normalize();
    return g;
}

AbelianGroupExpr AbelianGroupExpr::cyclic_pow(long p, int e) {
    AbelianGroupExpr g;
    if (e > 0) g.atoms_.push_back({Atom::Kind::Cyclic, p, e});
    return g;
}

AbelianGroupExpr AbelianGroupExpr::from_invariants(const std::vector<BigInt>& d) {
    AbelianGroupExpr g;
    for (const auto& x : d) g += cyclic(x);
    return g;
}

void AbelianGroupExpr::normalize() { std::sort(atoms_.begin(), atoms_.end()); }

AbelianGroupExpr AbelianGroupExpr::operator+(const AbelianGroupExpr& o) const {
    AbelianGroupExpr g = *this;
    g += o;
    return g;
}

AbelianGroupExpr& AbelianGroupExpr::operator+=(const AbelianGroupExpr& o) {
    atoms_.insert(atoms_.end(), o.atoms_.begin(), o.atoms_.end());
    normalize();
    return *this;
}

AbelianGroupExpr AbelianGroupExpr::times(int r) const {
    AbelianGroupExpr g;
    for (int i = 0; i < r; ++i) g += *this;
    return g;
}

bool AbelianGroupExpr::is_finite() const {
    return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.kind == Atom::Kind::Cyclic; });
}

BigInt AbelianGroupExpr::order() const {
    if (!is_finite()) throw ArithmeticError("order of an infinite group");
    BigInt n = 1;
    for (const auto& a : atoms_) {
        BigInt q;
        mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(a.p), static_cast<unsigned long>(a.e));
        n *= q;
    }
    return n;
}

AbelianGroupExpr AbelianGroupExpr::invert_primes(const std::set<long>& primes) const {
    AbelianGroupExpr g;
    for (Atom a : atoms_) {
        switch (a.kind) {
            case Atom::Kind::Cyclic:
            case Atom::Kind::FreePadic:
            case Atom::Kind::QpmodZp:
                if (primes.count(a.p)) continue;
                break;
            case Atom::Kind::QmodZ:
            case Atom::Kind::ProfiniteZ:
                for (long q : primes)
                    if (std::find(a.excluded.begin(), a.excluded.end(), q) == a.excluded.end()) a.excluded.push_back(q);
                std::sort(a.excluded.begin(), a.excluded.end());
                break;
            default: break;
        }
        g.atoms_.push_back(a);
    }
    g.normalize();
    return g;
}

AbelianGroupExpr AbelianGroupExpr::finite_part() const {
    AbelianGroupExpr g;
    for (const auto& a : atoms_)
        if (a.kind == Atom::Kind::Cyclic) g.atoms_.push_back(a);
    return g;
}

AbelianGroupExpr AbelianGroupExpr::p_part(long p) const {
    AbelianGroupExpr g;
    for (const auto& a : atoms_)
        if (a.kind == Atom::Kind::Cyclic && a.p == p) g.atoms_.push_back(a);
    return g;
}

AbelianGroupExpr AbelianGroupExpr::without_2_torsion() const {
    AbelianGroupExpr g;
    for (const auto& a : atoms_)
        if (!(a.kind == Atom::Kind::Cyclic && a.p == 2)) g.atoms_.push_back(a);
    return g;
}

AbelianGroupExpr AbelianGroupExpr::without_Z2_summands() const {
    AbelianGroupExpr g;
    for (const auto& a : atoms_)
        if (!(a.kind == Atom::Kind::Cyclic && a.p == 2 && a.e == 1)) g.atoms_.push_back(a);
    return g;
}

std::string AbelianGroupExpr::str() const {
    if (atoms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < atoms_.size();) {
        std::size_t j = i;
        while (j < atoms_.size() && atoms_[j] == atoms_[i]) ++j;
        std::size_t r = j - i;
        std::string s = atoms_[i].str();
        if (atoms_[i].kind == Atom::Kind::Cyclic) {
            for (std::size_t k = 0; k < r; ++k) {
                os << (first ? "" : " + ") << s;
                first = false;
            }
        } else {
            os << (first ? "" : " + ") << s;
            if (r > 1) os << "^" << r;
            first = false;
        }
        i = j;
    }
    return os.str();
}

std::vector<BigInt> AbelianGroupExpr::invariant_factors() const {
    std::map<long, std::vector<int>> by_p;
    for (const auto& a : atoms_)
        if (a.kind == Atom::Kind::Cyclic) by_p[a.p].push_back(a.e);
    std::size_t len = 0;
    for (auto& [p, es] : by_p) {
        std::sort(es.rbegin(), es.rend());
        len = std::max(len, es.size());
    }
    // largest invariant factor first, then reverse to ascending
    std::vector<BigInt> d(len, 1);
    for (auto& [p, es] : by_p)
        for (std::size_t i = 0; i < es.size(); ++i) {
            BigInt q;
            mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(es[i]));
            d[i] *= q;
        }
    std::reverse(d.begin(), d.end());
    return d;
}

std::string AbelianGroupExpr::pretty() const {
    AbelianGroupExpr inf;
    for (const auto& a : atoms_)
        if (a.kind != Atom::Kind::Cyclic) inf.atoms_.push_back(a);
    std::string s = inf.is_zero() ? "" : inf.str();
    for (const auto& d : invariant_factors()) s += (s.empty() ? "" : " + ") + ("Z/" + d.get_str());
    return s.empty() ? "0" : s;
}

}  // namespace dj
