#include "dft/families.hpp"

#include <iomanip>
#include <sstream>

namespace dft {

// --- QuotientRing ---------------------------------------------------------

QuotientRing::QuotientRing(Poly<RationalRing> modulus) : mod_(std::move(modulus)) {
    RationalRing q;
    poly_trim(q, mod_);
    if (mod_.size() < 2)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "quotient modulus must have degree >= 1");
    // Monicize.
    Rational lc = mod_.back();
    for (auto& c : mod_) c /= lc;
    d_ = mod_.size() - 1;
}

QuotientRing::Elem QuotientRing::one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
}

QuotientRing::Elem QuotientRing::gen() const {
    Elem e = zero();
    if (d_ == 1) {
        // x reduces to -mod_[0]
        e[0] = -mod_[0];
    } else {
        e[1] = 1;
    }
    return e;
}

QuotientRing::Elem QuotientRing::from_int(const Integer& n) const {
    Elem e = zero();
    e[0] = Rational(n);
    return e;
}

QuotientRing::Elem QuotientRing::from_rational(const Rational& q) const {
    Elem e = zero();
    e[0] = q;
    return e;
}

QuotientRing::Elem QuotientRing::add(const Elem& a, const Elem& b) const {
    Elem r(d_);
    for (size_t i = 0; i < d_; ++i) r[i] = a[i] + b[i];
    return r;
}

QuotientRing::Elem QuotientRing::sub(const Elem& a, const Elem& b) const {
    Elem r(d_);
    for (size_t i = 0; i < d_; ++i) r[i] = a[i] - b[i];
    return r;
}

QuotientRing::Elem QuotientRing::neg(const Elem& a) const {
    Elem r(d_);
    for (size_t i = 0; i < d_; ++i) r[i] = -a[i];
    return r;
}

QuotientRing::Elem QuotientRing::mul(const Elem& a, const Elem& b) const {
    std::vector<Rational> prod(2 * d_ - 1, Rational(0));
    for (size_t i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < d_; ++j) prod[i + j] += a[i] * b[j];
    }
    for (size_t k = 2 * d_ - 2; k + 1 > d_; --k) {
        if (prod[k] == 0) continue;
        for (size_t i = 0; i < d_; ++i) prod[k - d_ + i] -= prod[k] * mod_[i];
        prod[k] = 0;
    }
    prod.resize(d_);
    return prod;
}

bool QuotientRing::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

namespace {

// Extended Euclid in Q[X]: returns (g, s) with s*a == g mod m, g monic gcd.
std::pair<Poly<RationalRing>, Poly<RationalRing>> half_ext_gcd(Poly<RationalRing> a,
                                                               Poly<RationalRing> m) {
    RationalRing q;
    Poly<RationalRing> r0 = std::move(m), r1 = std::move(a);
    Poly<RationalRing> s0, s1{Rational(1)};  // track coefficient of `a` only
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        Poly<RationalRing> quot, rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            size_t shift = rem.size() - r1.size();
            Rational c = rem.back() / r1.back();
            Poly<RationalRing> term(shift + 1, Rational(0));
            term[shift] = c;
            quot = poly_add(q, quot, term);
            rem = poly_sub(q, rem, poly_mul(q, term, r1));
        }
        Poly<RationalRing> s2 = poly_sub(q, s0, poly_mul(q, quot, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!r0.empty()) {
        Rational lc = r0.back();
        for (auto& c : r0) c /= lc;
        for (auto& c : s0) c /= lc;
    }
    return {r0, s0};
}

}  // namespace

bool QuotientRing::is_unit(const Elem& a) const {
    RationalRing q;
    Poly<RationalRing> ap(a.begin(), a.end());
    poly_trim(q, ap);
    if (ap.empty()) return false;
    auto [g, s] = half_ext_gcd(ap, mod_);
    return g.size() == 1;
}

QuotientRing::Elem QuotientRing::inv(const Elem& a) const {
    RationalRing q;
    Poly<RationalRing> ap(a.begin(), a.end());
    poly_trim(q, ap);
    if (ap.empty()) throw DomainError(ErrorTag::SINGULAR_POINT, "inverse of zero");
    auto [g, s] = half_ext_gcd(ap, mod_);
    if (g.size() != 1)
        throw DomainError(ErrorTag::SINGULAR_POINT, "zero divisor in quotient ring");
    s.resize(d_, Rational(0));
    return Elem(s.begin(), s.end());
}

std::string QuotientRing::key(const Elem& a) const {
    std::ostringstream os;
    for (const auto& c : a) os << c.get_str() << ",";
    return os.str();
}

std::string QuotientRing::to_string(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        os << a[i].get_str();
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// --- closed-form families -------------------------------------------------

Model<RationalRing> family_ab(const Integer& a, const Integer& b) {
    if (a < 1 || a >= b) throw DomainError(ErrorTag::DEGENERATE_INPUT, "need 0 < a < b");
    Model<RationalRing> m{ValencyType({a, b}), {Rational(b), Rational(-a)},
                          ModelKind::STANDARD, 0};
    return m;
}

Integer family_abc_disc(const Integer& a, const Integer& b, const Integer& c) {
    if (a < 1 || b < 1 || c < 1)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "valencies must be positive");
    return -a * b * c * (a + b + c);
}

AbcTrichotomy family_abc_fp_trichotomy(const Integer& a, const Integer& b, const Integer& c,
                                       const Integer& p) {
    if ((Integer(6) * a * b * c * (a + b + c)) % p == 0)
        throw DomainError(ErrorTag::WILD_PRIME, "p divides 6abc(a+b+c)");
    AbcTrichotomy r;
    r.D = (a + b) * (b + c) * (c + a);
    r.d = int_gcd(a + b, b + c) * int_gcd(b + c, c + a) * int_gcd(c + a, a + b);
    r.disc = family_abc_disc(a, b, c);
    r.disc_square_mod_p = false;
    if (r.d % p == 0) {
        r.tag = AbcCase::EMPTY;
    } else if (r.D % p == 0) {
        r.tag = AbcCase::UNIQUE_RATIONAL;
    } else {
        r.tag = AbcCase::SPLIT_AS_CHAR0;
        Integer e = (p - 1) / 2;
        Integer w;
        mpz_powm(w.get_mpz_t(), r.disc.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        r.disc_square_mod_p = (w == 1) || (p == 2);
    }
    return r;
}

Poly<IntegerRing> family_ones_ab_hpoly(unsigned long n, const Integer& a, const Integer& b) {
    if (n < 3 || a <= 1 || b <= a)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "need n >= 3 and 1 < a < b");
    Poly<IntegerRing> h(n);
    for (unsigned long k = 0; k < n; ++k) {
        // C(a+k-1, a-1) = C(a+k-1, k); C(b+n-2-k, b-1) = C(b+n-2-k, n-1-k)
        h[k] = binomial(a + Integer(k) - 1, k) *
               binomial(b + Integer(n) - 2 - Integer(k), n - 1 - k);
    }
    return h;
}

RegularityConstants family_regularity_constants(unsigned long n, const Integer& a,
                                                const Integer& b) {
    if (n < 3 || a <= 1)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "need n >= 3 and a > 1");
    auto rising = [](const Integer& from, unsigned long count) {
        Integer r = 1;
        for (unsigned long j = 0; j < count; ++j) r *= from + Integer(j);
        return r;
    };
    RegularityConstants rc;
    Integer base = factorial(n - 2);
    rc.c = base * rising(a, n - 1);  // (n-2)! (a+n-2)!/(a-1)!
    rc.c_factorization = factorize(rc.c);
    if (b > a) {
        rc.u = base * rising(a, n - 1) * rising(b, n - 1) * rising(a + b, n - 2);
        rc.u_factorization = factorize(rc.u);
    } else {
        rc.u = 0;
    }
    return rc;
}

// --- numeric sanity layer (multi-precision complex) ----------------------

namespace {

constexpr unsigned long kFloatBits = 384;

struct Cpx {
    mpf_class re{0, kFloatBits}, im{0, kFloatBits};
};

Cpx cadd(const Cpx& a, const Cpx& b) { return {a.re + b.re, a.im + b.im}; }
Cpx csub(const Cpx& a, const Cpx& b) { return {a.re - b.re, a.im - b.im}; }
Cpx cmul(const Cpx& a, const Cpx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cpx cdiv(const Cpx& a, const Cpx& b) {
    mpf_class den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
mpf_class cabs2(const Cpx& a) { return a.re * a.re + a.im * a.im; }

std::vector<Cpx> durand_kerner(const Poly<IntegerRing>& f) {
    const size_t d = f.size() - 1;
    std::vector<Cpx> c(d + 1);
    for (size_t i = 0; i <= d; ++i) c[i].re = mpf_class(f[i], kFloatBits);
    // Monicize.
    Cpx lc = c[d];
    for (auto& x : c) x = cdiv(x, lc);
    auto eval = [&](const Cpx& z) {
        Cpx r;
        for (size_t i = d + 1; i-- > 0;) r = cadd(cmul(r, z), c[i]);
        return r;
    };
    std::vector<Cpx> z(d);
    Cpx seed;
    seed.re = mpf_class("0.4", kFloatBits);
    seed.im = mpf_class("0.9", kFloatBits);
    Cpx acc{mpf_class(1, kFloatBits), mpf_class(0, kFloatBits)};
    for (size_t i = 0; i < d; ++i) {
        acc = cmul(acc, seed);
        z[i] = acc;
    }
    mpf_class tol(1, kFloatBits);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), 300);
    for (int iter = 0; iter < 2000; ++iter) {
        mpf_class worst(0, kFloatBits);
        for (size_t i = 0; i < d; ++i) {
            Cpx denom{mpf_class(1, kFloatBits), mpf_class(0, kFloatBits)};
            for (size_t j = 0; j < d; ++j)
                if (j != i) denom = cmul(denom, csub(z[i], z[j]));
            Cpx delta = cdiv(eval(z[i]), denom);
            z[i] = csub(z[i], delta);
            mpf_class m = cabs2(delta);
            if (m > worst) worst = m;
        }
        if (worst < tol) break;
    }
    std::sort(z.begin(), z.end(), [](const Cpx& a, const Cpx& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return z;
}

std::string cpx_string(const Cpx& z) {
    std::ostringstream os;
    os << std::setprecision(30) << z.re << "," << z.im;
    return os.str();
}

}  // namespace

std::vector<std::string> numeric_roots(const Poly<IntegerRing>& f) {
    if (f.size() < 2) throw DomainError(ErrorTag::DEGENERATE_INPUT, "need degree >= 1");
    auto roots = durand_kerner(f);
    std::vector<std::string> out;
    for (const auto& z : roots) out.push_back(cpx_string(z));
    return out;
}

// --- exact (1,...,1,a,b) model -------------------------------------------

OnesAbModel family_ones_ab_model(unsigned long n, const Integer& a, const Integer& b,
                                 size_t root_index) {
    OnesAbModel out;
    out.n = n;
    out.a = a;
    out.b = b;
    out.h = family_ones_ab_hpoly(n, a, b);
    if (root_index + 1 >= out.h.size())
        throw DomainError(ErrorTag::BAD_ROOT, "root index out of range");
    out.root_index = root_index;

    RationalRing qq;
    Poly<RationalRing> modq;
    for (const auto& c : out.h) modq.push_back(Rational(c));
    QuotientRing R(modq);
    using E = QuotientRing::Elem;
    const E x = R.gen();

    // integrand g(t) = t^{n-1} (1 - x t)^{a-1} (1 - t)^{b-1}
    Poly<QuotientRing> g = linear_factor_power(R, x, a - 1);
    g = poly_mul(R, g, linear_factor_power(R, R.one(), b - 1));
    g.insert(g.begin(), n - 1, R.zero());

    // S = integral over [0,1]; beta = 1 + u * integral, u = -1/S
    E S = R.zero();
    for (size_t k = 0; k < g.size(); ++k)
        S = R.add(S, R.mul(g[k], R.from_rational(make_rational(1, Integer(k + 1)))));
    if (!R.is_unit(S))
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "boundary integral not invertible");
    out.u = R.neg(R.inv(S));

    const Integer Nbig = Integer(n) - 2 + a + b;
    const size_t N = (size_t)Nbig.get_ui();
    out.beta.assign(N + 1, R.zero());
    out.beta[0] = R.one();
    for (size_t k = 0; k < g.size(); ++k)
        out.beta[k + 1] =
            R.mul(out.u, R.mul(g[k], R.from_rational(make_rational(1, Integer(k + 1)))));

    // beta(1) = 1 + u*S = 0 by construction; evaluate anyway.
    E at1 = R.zero();
    for (const auto& c : out.beta) at1 = R.add(at1, c);
    out.beta_at_one_zero = R.is_zero(at1);

    // x^N beta(1/x) = sum beta_k x^{N-k}: Horner from the top.
    E atinv = R.zero();
    for (size_t k = 0; k <= N; ++k) atinv = R.add(R.mul(atinv, x), out.beta[k]);
    out.beta_at_root_inv_zero = R.is_zero(atinv);

    // Exact division: beta / ((1-xX)^a (1-X)^b), expected remainder zero and
    // quotient of degree n-2 carrying the simple roots.
    Poly<QuotientRing> den = linear_factor_power(R, x, a);
    den = poly_mul(R, den, linear_factor_power(R, R.one(), b));
    Poly<QuotientRing> rem(out.beta.begin(), out.beta.end());
    poly_trim(R, rem);
    Poly<QuotientRing> quot;
    const E lead_inv = R.inv(den.back());
    while (rem.size() >= den.size() && !rem.empty()) {
        size_t shift = rem.size() - den.size();
        E cq = R.mul(rem.back(), lead_inv);
        Poly<QuotientRing> term(shift + 1, R.zero());
        term[shift] = cq;
        quot = poly_add(R, quot, term);
        rem = poly_sub(R, rem, poly_mul(R, term, den));
    }
    out.division_exact = rem.empty() && quot.size() == n - 1;
    out.cofactor.assign(quot.begin(), quot.end());

    auto roots = numeric_roots(out.h);
    out.root_approx = roots[root_index];
    // Residual: |h(z)| for each numeric root, re-evaluated.
    {
        auto zs = durand_kerner(out.h);
        mpf_class worst(0, kFloatBits);
        for (const auto& z : zs) {
            Cpx r;
            for (size_t i = out.h.size(); i-- > 0;) {
                Cpx c;
                c.re = mpf_class(out.h[i], kFloatBits);
                r = cadd(cmul(r, z), c);
            }
            mpf_class m = cabs2(r);
            if (m > worst) worst = m;
        }
        std::ostringstream os;
        os << std::setprecision(6) << worst;
        out.numeric_residual = os.str();
    }
    return out;
}

}  // namespace dft
