#include "dft/localring.hpp"

#include <numeric>
#include <sstream>

#include "dft/errors.hpp"

namespace dft {

LocalRingContext::LocalRingContext(Integer p, unsigned M, GFPtr k, unsigned long e, Integer c)
    : p_(std::move(p)), M_(M), k_(std::move(k)), e_(e), c_(std::move(c)) {
    if (M_ == 0) throw DomainError(ErrorTag::DEGENERATE_INPUT, "precision must be positive");
    if (!k_ || k_->p() != p_)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "residue field characteristic mismatch");
    f_ = k_->k();
    mpz_pow_ui(pM_.get_mpz_t(), p_.get_mpz_t(), M_);
    // Lift the residue-field modulus coefficientwise; it stays monic.
    gu_.assign(f_ + 1, Integer(0));
    const auto& mod = k_->modulus();
    for (unsigned long i = 0; i <= f_; ++i) gu_[i] = Integer(mod[i]);
    if (e_ == 1) {
        h_ = 0;
        c_ = 0;
    } else {
        if (c_ % p_ != 0 || (c_ == 0))
            throw DomainError(ErrorTag::UNSUPPORTED_RAMIFICATION,
                              "Eisenstein-type constant must be a nonzero non-unit");
        h_ = p_valuation(c_, p_);
        if (std::gcd(e_, h_) != 1)
            throw DomainError(ErrorTag::UNSUPPORTED_RAMIFICATION,
                              "ramification index and gcd(e, v_p(c)) must be coprime");
        if (h_ >= (unsigned long)M_)
            throw DomainError(ErrorTag::DEGENERATE_INPUT, "precision below v_p(c)");
        c_ %= pM_;
        if (c_ < 0) c_ += pM_;
    }
}

LocalRingPtr LocalRingContext::make_unramified(const Integer& p, unsigned M,
                                               const GFPtr& residue_field) {
    return LocalRingPtr(new LocalRingContext(p, M, residue_field, 1, Integer(0)));
}

LocalRingPtr LocalRingContext::make_ramified(const Integer& p, unsigned M,
                                             const GFPtr& residue_field, unsigned long e,
                                             const Integer& constant) {
    if (e < 2) throw DomainError(ErrorTag::DEGENERATE_INPUT, "ramification index must be >= 2");
    return LocalRingPtr(new LocalRingContext(p, M, residue_field, e, constant));
}

// --- unramified component arithmetic -------------------------------------

LocalRingContext::UnramElem LocalRingContext::u_add(const UnramElem& a, const UnramElem& b) const {
    UnramElem r(f_);
    for (unsigned long i = 0; i < f_; ++i) {
        r[i] = a[i] + b[i];
        if (r[i] >= pM_) r[i] -= pM_;
    }
    return r;
}

LocalRingContext::UnramElem LocalRingContext::u_sub(const UnramElem& a, const UnramElem& b) const {
    UnramElem r(f_);
    for (unsigned long i = 0; i < f_; ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) r[i] += pM_;
    }
    return r;
}

LocalRingContext::UnramElem LocalRingContext::u_scale(const Integer& s, const UnramElem& a) const {
    UnramElem r(f_);
    for (unsigned long i = 0; i < f_; ++i) {
        r[i] = (s * a[i]) % pM_;
        if (r[i] < 0) r[i] += pM_;
    }
    return r;
}

LocalRingContext::UnramElem LocalRingContext::u_mul(const UnramElem& a, const UnramElem& b) const {
    std::vector<Integer> prod(2 * f_ - 1, Integer(0));
    for (unsigned long i = 0; i < f_; ++i) {
        if ((a[i] == 0)) continue;
        for (unsigned long j = 0; j < f_; ++j) prod[i + j] += a[i] * b[j];
    }
    // Reduce by the monic modulus, high coefficients first.
    for (unsigned long d = 2 * f_ - 2; d + 1 > f_; --d) {
        Integer q = prod[d] % pM_;
        if ((q == 0)) continue;
        for (unsigned long i = 0; i < f_; ++i) prod[d - f_ + i] -= q * gu_[i];
        prod[d] = 0;
    }
    UnramElem r(f_);
    for (unsigned long i = 0; i < f_; ++i) {
        r[i] = prod[i] % pM_;
        if (r[i] < 0) r[i] += pM_;
    }
    return r;
}

bool LocalRingContext::u_is_zero(const UnramElem& a) const {
    for (const auto& x : a)
        if (!(x == 0)) return false;
    return true;
}

std::optional<unsigned long> LocalRingContext::u_valuation(const UnramElem& a) const {
    std::optional<unsigned long> best;
    for (const auto& x : a) {
        if ((x == 0)) continue;
        unsigned long v = p_valuation(x, p_);
        if (!best || v < *best) best = v;
    }
    return best;
}

// --- full-ring operations -------------------------------------------------

LocalRingContext::Elem LocalRingContext::zero() const {
    return Elem{std::vector<UnramElem>(e_, u_zero())};
}

LocalRingContext::Elem LocalRingContext::one() const {
    Elem r = zero();
    r.t[0][0] = 1;
    return r;
}

LocalRingContext::Elem LocalRingContext::from_int(const Integer& n) const {
    Elem r = zero();
    Integer v = n % pM_;
    if (v < 0) v += pM_;
    r.t[0][0] = v;
    return r;
}

LocalRingContext::Elem LocalRingContext::uniformizer_t() const {
    if (e_ < 2) throw DomainError(ErrorTag::DEGENERATE_INPUT, "unramified ring has no T");
    Elem r = zero();
    r.t[1][0] = 1;
    return r;
}

LocalRingContext::Elem LocalRingContext::add(const Elem& a, const Elem& b) const {
    Elem r;
    r.t.reserve(e_);
    for (unsigned long j = 0; j < e_; ++j) r.t.push_back(u_add(a.t[j], b.t[j]));
    return r;
}

LocalRingContext::Elem LocalRingContext::sub(const Elem& a, const Elem& b) const {
    Elem r;
    r.t.reserve(e_);
    for (unsigned long j = 0; j < e_; ++j) r.t.push_back(u_sub(a.t[j], b.t[j]));
    return r;
}

LocalRingContext::Elem LocalRingContext::neg(const Elem& a) const { return sub(zero(), a); }

LocalRingContext::Elem LocalRingContext::mul(const Elem& a, const Elem& b) const {
    std::vector<UnramElem> prod(2 * e_ - 1, u_zero());
    for (unsigned long i = 0; i < e_; ++i) {
        if (u_is_zero(a.t[i])) continue;
        for (unsigned long j = 0; j < e_; ++j)
            prod[i + j] = u_add(prod[i + j], u_mul(a.t[i], b.t[j]));
    }
    Elem r = zero();
    for (unsigned long j = 0; j < e_; ++j) r.t[j] = prod[j];
    // Fold T^{e+j} = -c T^j.
    const Integer mc = pM_ - c_;  // -c mod p^M (c != 0 here whenever e > 1)
    for (unsigned long j = e_; j < 2 * e_ - 1; ++j)
        r.t[j - e_] = u_add(r.t[j - e_], u_scale(mc, prod[j]));
    return r;
}

LocalRingContext::Elem LocalRingContext::pow(const Elem& a, const Integer& n) const {
    if (n < 0) return pow(inv(a), -n);
    Elem base = a;
    Elem r = one();
    Integer m = n;
    while (m > 0) {
        if (mpz_odd_p(m.get_mpz_t())) r = mul(r, base);
        m >>= 1;
        if (m > 0) base = mul(base, base);
    }
    return r;
}

bool LocalRingContext::is_zero(const Elem& a) const {
    for (const auto& u : a.t)
        if (!u_is_zero(u)) return false;
    return true;
}

std::optional<long> LocalRingContext::valuation(const Elem& a) const {
    std::optional<long> best;
    for (unsigned long j = 0; j < e_; ++j) {
        auto vu = u_valuation(a.t[j]);
        if (!vu) continue;
        long v = (long)(e_ * *vu) + (long)(j * h_);
        if (!best || v < *best) best = v;
    }
    return best;
}

bool LocalRingContext::is_unit(const Elem& a) const {
    auto v = valuation(a);
    return v && *v == 0;
}

LocalRingContext::Elem LocalRingContext::inv(const Elem& a) const {
    if (!is_unit(a)) throw DomainError(ErrorTag::SINGULAR_POINT, "inverting a non-unit");
    // Newton: v <- v(2 - a v), starting from the residue-field inverse.
    Elem v = lift(k_->inv(reduce(a)));
    const Elem two = from_int(2);
    // Precision doubles each step; e*M digits of T-adic precision suffice.
    unsigned steps = 1;
    while ((1ul << steps) < (unsigned long)(e_ * M_)) ++steps;
    for (unsigned s = 0; s <= steps; ++s) v = mul(v, sub(two, mul(a, v)));
    if (!eq(mul(a, v), one()))
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "inverse iteration did not converge");
    return v;
}

GFElem LocalRingContext::reduce(const Elem& a) const { return reduce_t_coeff(a, 0); }

GFElem LocalRingContext::reduce_t_coeff(const Elem& a, unsigned long j) const {
    if (j >= e_) throw DomainError(ErrorTag::DEGENERATE_INPUT, "T-coefficient out of range");
    GFElem r;
    r.c.assign(f_, 0);
    for (unsigned long i = 0; i < f_; ++i) {
        Integer m = a.t[j][i] % p_;
        r.c[i] = m.get_ui();
    }
    return r;
}

LocalRingContext::Elem LocalRingContext::lift(const GFElem& a) const {
    Elem r = zero();
    for (unsigned long i = 0; i < f_ && i < a.c.size(); ++i) r.t[0][i] = Integer(a.c[i]);
    return r;
}

std::string LocalRingContext::key(const Elem& a) const {
    std::ostringstream os;
    for (unsigned long j = 0; j < e_; ++j)
        for (unsigned long i = 0; i < f_; ++i) os << a.t[j][i].get_str() << ",";
    return os.str();
}

std::string LocalRingContext::to_string(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (unsigned long j = 0; j < e_; ++j) {
        if (u_is_zero(a.t[j])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(";
        bool ufirst = true;
        for (unsigned long i = 0; i < f_; ++i) {
            if ((a.t[j][i] == 0)) continue;
            if (!ufirst) os << "+";
            ufirst = false;
            os << a.t[j][i].get_str();
            if (i == 1) os << "*u";
            if (i > 1) os << "*u^" << i;
        }
        os << ")";
        if (j == 1) os << "*T";
        if (j > 1) os << "*T^" << j;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<LocalRingContext::Elem> solve_linear_system(
    const LocalRing& ring, std::vector<std::vector<LocalRingContext::Elem>> A,
    std::vector<LocalRingContext::Elem> b) {
    const size_t n = A.size();
    if (n == 0 || b.size() != n)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "malformed linear system");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t r = col; r < n; ++r)
            if (ring.is_unit(A[r][col])) {
                piv = r;
                break;
            }
        if (piv == n)
            throw DomainError(ErrorTag::SINGULAR_POINT, "no unit pivot: Jacobian not invertible");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        const auto ipiv = ring.inv(A[col][col]);
        for (size_t j = col; j < n; ++j) A[col][j] = ring.mul(ipiv, A[col][j]);
        b[col] = ring.mul(ipiv, b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || ring.is_zero(A[r][col])) continue;
            const auto fac = A[r][col];
            for (size_t j = col; j < n; ++j)
                A[r][j] = ring.sub(A[r][j], ring.mul(fac, A[col][j]));
            b[r] = ring.sub(b[r], ring.mul(fac, b[col]));
        }
    }
    return b;
}

}  // namespace dft
