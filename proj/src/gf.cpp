#include "dft/gf.hpp"

#include <algorithm>
#include <cassert>

namespace dft {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Fp = std::vector<u64>;  // dense poly over F_p, low-to-high

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 inv_mod(u64 a, u64 p) {
    // extended Euclid
    long long t = 0, nt = 1;
    long long r = (long long)p, nr = (long long)(a % p);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DomainError(ErrorTag::DEGENERATE_INPUT, "non-invertible residue");
    if (t < 0) t += (long long)p;
    return (u64)t;
}

void trim(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Fp poly_mul(const Fp& a, const Fp& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (u128)a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

// remainder of a mod m, m monic
Fp poly_rem(Fp a, const Fp& m, u64 p) {
    trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        u64 lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (size_t i = 0; i <= dm; ++i) {
                u64 sub = mulmod(lead, m[i], p);
                u64& t = a[shift + i];
                t = (t + p - sub) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() <= dm) break;
    }
    trim(a);
    return a;
}

Fp poly_powmod(Fp base, Integer e, const Fp& m, u64 p) {
    Fp r{1};
    base = poly_rem(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_rem(poly_mul(r, base, p), m, p);
        base = poly_rem(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

Fp poly_gcd(Fp a, Fp b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic for poly_rem
        u64 lc = b.back();
        Fp bm = b;
        if (lc != 1) {
            u64 il = inv_mod(lc, p);
            for (auto& c : bm) c = mulmod(c, il, p);
        }
        Fp r = poly_rem(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<u64>& f, u64 p) {
    Fp g = f;
    trim(g);
    if (g.size() < 2) return false;
    unsigned k = (unsigned)g.size() - 1;
    if (g.back() != 1) return false;  // monic only
    if (k == 1) return true;
    // x^{p^k} == x mod f, and gcd(x^{p^{k/t}} - x, f) = 1 for prime t | k
    Integer P((unsigned long)p);
    Fp x{0, 1};
    Fp xq = poly_powmod(x, int_pow(P, k), g, p);
    // xq - x
    Fp diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    unsigned rem = k;
    for (unsigned t = 2; t <= rem; ++t) {
        if (rem % t != 0) continue;
        while (rem % t == 0) rem /= t;
        Fp xd = poly_powmod(x, int_pow(P, k / t), g, p);
        Fp d = xd;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        Fp gg = poly_gcd(g, d, p);
        if (gg.size() != 1) return false;
    }
    return true;
}

std::vector<u64> find_irreducible(u64 p, unsigned k) {
    if (k == 0) throw DomainError(ErrorTag::DEGENERATE_INPUT, "degree 0");
    if (k == 1) return {0, 1};  // X
    // ascending counter over the k lower coefficients, c_0 least significant
    std::vector<u64> f(k + 1, 0);
    f[k] = 1;
    u128 total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    for (u128 m = 0; m < total; ++m) {
        u128 v = m;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = (u64)(v % p);
            v /= p;
        }
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "no irreducible found");
}

GF::GF(u64 p, unsigned k, std::vector<u64> modulus) : p_(p), k_(k), mod_(std::move(modulus)) {
    if (!is_prime(Integer((unsigned long)p)))
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "characteristic not prime");
    if (mod_.size() != k_ + 1 || mod_.back() != 1)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "modulus must be monic of degree k");
    if (!is_irreducible_mod_p(mod_, p_))
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "modulus reducible");
    u128 o = 1;
    for (unsigned i = 0; i < k_; ++i) {
        o *= p_;
        if (o > ((u128)1 << 62)) throw DomainError(ErrorTag::SEARCH_TOO_LARGE, "field too large");
    }
    order_ = (u64)o;
}

GFPtr GF::make(u64 p, unsigned k) {
    return std::make_shared<const GF>(p, k, find_irreducible(p, k));
}

GFElem GF::one() const {
    GFElem a = zero();
    a.c[0] = 1;
    return a;
}

GFElem GF::from_int(const Integer& n) const {
    Integer r = n % Integer((unsigned long)p_);
    if (r < 0) r += (unsigned long)p_;
    GFElem a = zero();
    a.c[0] = r.get_ui();
    return a;
}

GFElem GF::from_index(u64 idx) const {
    GFElem a = zero();
    for (unsigned i = 0; i < k_; ++i) {
        a.c[i] = idx % p_;
        idx /= p_;
    }
    return a;
}

u64 GF::index_of(const GFElem& a) const {
    u64 idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.c[i];
    return idx;
}

bool GF::is_zero(const GFElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](u64 x) { return x == 0; });
}

GFElem GF::add(const GFElem& a, const GFElem& b) const {
    GFElem r = a;
    for (unsigned i = 0; i < k_; ++i) r.c[i] = (r.c[i] + b.c[i]) % p_;
    return r;
}

GFElem GF::sub(const GFElem& a, const GFElem& b) const {
    GFElem r = a;
    for (unsigned i = 0; i < k_; ++i) r.c[i] = (r.c[i] + p_ - b.c[i]) % p_;
    return r;
}

GFElem GF::neg(const GFElem& a) const { return sub(zero(), a); }

GFElem GF::mul(const GFElem& a, const GFElem& b) const {
    if (k_ == 1) return GFElem{{mulmod(a.c[0], b.c[0], p_)}};
    std::vector<u64> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + (u128)a.c[i] * b.c[j]) % p_;
    }
    // reduce by monic modulus
    for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
        u64 lead = prod[d];
        if (lead) {
            for (unsigned i = 0; i <= k_; ++i) {
                u64 sub = mulmod(lead, mod_[i], p_);
                prod[d - k_ + i] = (prod[d - k_ + i] + p_ - sub) % p_;
            }
        }
        if (d == k_) break;
    }
    GFElem r = zero();
    for (unsigned i = 0; i < k_; ++i) r.c[i] = prod[i];
    return r;
}

GFElem GF::pow(const GFElem& a, const Integer& e) const {
    Integer ee = e;
    if (ee < 0) {
        GFElem ia = inv(a);
        return pow(ia, -ee);
    }
    GFElem base = a;
    GFElem r = one();
    while (ee > 0) {
        if (mpz_odd_p(ee.get_mpz_t())) r = mul(r, base);
        base = mul(base, base);
        ee >>= 1;
    }
    return r;
}

GFElem GF::inv(const GFElem& a) const {
    if (is_zero(a)) throw DomainError(ErrorTag::DEGENERATE_INPUT, "inverse of zero");
    return pow(a, Integer((unsigned long)(order_ - 2)));
}

GFElem GF::frobenius(const GFElem& a) const { return pow(a, Integer((unsigned long)p_)); }

unsigned GF::degree_of(const GFElem& a) const {
    GFElem x = frobenius(a);
    unsigned d = 1;
    while (!(x == a)) {
        x = frobenius(x);
        ++d;
        if (d > k_) throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "degree_of runaway");
    }
    return d;
}

std::vector<GFElem> GF::nth_roots(const GFElem& e, unsigned long n) const {
    if (is_zero(e)) throw DomainError(ErrorTag::DEGENERATE_INPUT, "nth_roots of zero");
    if (order_ > (1u << 22)) throw DomainError(ErrorTag::SEARCH_TOO_LARGE, "nth_roots enumeration");
    std::vector<GFElem> out;
    Integer en((unsigned long)n);
    for (u64 i = 1; i < order_; ++i) {
        GFElem y = from_index(i);
        if (pow(y, en) == e) out.push_back(y);
    }
    return out;
}

std::string GF::to_string(const GFElem& a) const {
    std::string s = "[";
    for (unsigned i = 0; i < k_; ++i) {
        if (i) s += ",";
        s += std::to_string(a.c[i]);
    }
    return s + "]";
}

}  // namespace dft
