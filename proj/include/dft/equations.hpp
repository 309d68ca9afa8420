#ifndef DFT_EQUATIONS_HPP
#define DFT_EQUATIONS_HPP

#include <vector>

#include "dft/poly.hpp"
#include "dft/trees.hpp"

namespace dft {

enum class ModelKind { STANDARD, NORMALIZED, AI_NORMALIZED, KUMMER, CANONICAL };

inline const char* kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::STANDARD: return "standard";
        case ModelKind::NORMALIZED: return "normalized";
        case ModelKind::AI_NORMALIZED: return "ai-normalized";
        case ModelKind::KUMMER: return "kummer";
        case ModelKind::CANONICAL: return "canonical";
    }
    return "?";
}

/// Root tuple aligned slot-by-slot with the exponents of its valency type.
template <class R>
struct Model {
    ValencyType type;
    std::vector<typename R::Elem> roots;
    ModelKind kind = ModelKind::STANDARD;
    size_t ai_slot = 0;  // meaningful for AI_NORMALIZED / CANONICAL

    size_t n() const { return roots.size(); }
};

template <class R>
void require_valid_roots(const R& ring, const std::vector<typename R::Elem>& roots) {
    for (size_t i = 0; i < roots.size(); ++i) {
        if (!ring.is_unit(roots[i]))
            throw DomainError(ErrorTag::NOT_A_MODEL, "root not a unit");
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (ring.eq(roots[i], roots[j]))
                throw DomainError(ErrorTag::NOT_A_MODEL, "repeated root");
    }
}

/// (1 - xX)^a via binary powering.
template <class R>
Poly<R> linear_factor_power(const R& ring, const typename R::Elem& x, const Integer& a) {
    Poly<R> base{ring.one(), ring.neg(x)};
    Poly<R> r{ring.one()};
    Integer e = a;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mul(ring, r, base);
        base = poly_mul(ring, base, base);
        e >>= 1;
    }
    return r;
}

/// beta(X) = prod (1 - x_i X)^{a_i}; degree N, constant term 1.
template <class R>
Poly<R> expand(const R& ring, const Model<R>& m) {
    Poly<R> r{ring.one()};
    for (size_t i = 0; i < m.n(); ++i)
        r = poly_mul(ring, r, linear_factor_power(ring, m.roots[i], m.type.a[i]));
    return r;
}

namespace detail {

/// Truncated series of (1 + x X)^a ... here of sum_k C(a,k) x^k X^k up to
/// degree cap.
template <class R>
Poly<R> binom_series(const R& ring, const typename R::Elem& x, const Integer& a, size_t cap) {
    size_t top = cap;
    if (a >= 0 && a < Integer((unsigned long)cap)) top = (size_t)a.get_ui();
    Poly<R> f(top + 1, ring.zero());
    typename R::Elem xp = ring.one();
    for (size_t k = 0; k <= top; ++k) {
        f[k] = ring.mul(ring.from_int(binomial(a, (unsigned long)k)), xp);
        xp = ring.mul(xp, x);
    }
    poly_trim(ring, f);
    return f;
}

template <class R>
Poly<R> series_mul(const R& ring, const Poly<R>& a, const Poly<R>& b, size_t cap) {
    Poly<R> r(cap + 1, ring.zero());
    for (size_t i = 0; i < a.size() && i <= cap; ++i) {
        if (ring.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size() && i + j <= cap; ++j)
            r[i + j] = ring.add(r[i + j], ring.mul(a[i], b[j]));
    }
    poly_trim(ring, r);
    return r;
}

}  // namespace detail

/// psi_m: sum over k_1+...+k_n = m of prod C(a_i,k_i) x_i^{k_i}, evaluated by
/// truncated series convolution.
template <class R>
typename R::Elem psi(const R& ring, size_t m_index, const Model<R>& m) {
    if (m_index < 1) throw DomainError(ErrorTag::DEGENERATE_INPUT, "psi index >= 1");
    Poly<R> prod{ring.one()};
    for (size_t i = 0; i < m.n(); ++i)
        prod = detail::series_mul(ring, prod,
                                  detail::binom_series(ring, m.roots[i], m.type.a[i], m_index),
                                  m_index);
    return m_index < prod.size() ? prod[m_index] : ring.zero();
}

/// phi_m: weighted power sum sum a_i x_i^m.
template <class R>
typename R::Elem phi(const R& ring, size_t m_index, const Model<R>& m) {
    if (m_index < 1) throw DomainError(ErrorTag::DEGENERATE_INPUT, "phi index >= 1");
    typename R::Elem s = ring.zero();
    for (size_t i = 0; i < m.n(); ++i) {
        typename R::Elem xp = ring.one();
        for (size_t k = 0; k < m_index; ++k) xp = ring.mul(xp, m.roots[i]);
        s = ring.add(s, ring.mul(ring.from_int(m.type.a[i]), xp));
    }
    return s;
}

struct ConditionRecord {
    bool i = false, ii = false, iii = false, iv = false;
};

template <class R>
ConditionRecord check_conditions(const R& ring, const Model<R>& m) {
    require_valid_roots(ring, m.roots);
    const size_t n = m.n();
    ConditionRecord rec;

    Poly<R> beta = expand(ring, m);
    Poly<R> beta_m1 = poly_sub(ring, beta, Poly<R>{ring.one()});
    auto v0 = poly_valuation_at_zero(ring, beta_m1);
    rec.i = v0.has_value() && *v0 == n;

    rec.ii = true;
    for (size_t k = 1; k < n; ++k)
        if (!ring.is_zero(psi(ring, k, m))) {
            rec.ii = false;
            break;
        }
    rec.iii = true;
    for (size_t k = 1; k < n; ++k)
        if (!ring.is_zero(phi(ring, k, m))) {
            rec.iii = false;
            break;
        }

    rec.iv = true;
    typename R::Elem N = ring.from_int(m.type.N());
    for (size_t i = 0; i < n && rec.iv; ++i) {
        typename R::Elem lhs = ring.from_int(m.type.a[i]);
        typename R::Elem rhs = N;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            lhs = ring.mul(lhs, ring.sub(m.roots[j], m.roots[i]));
            rhs = ring.mul(rhs, m.roots[j]);
        }
        rec.iv = ring.eq(lhs, rhs);
    }
    return rec;
}

/// beta'(X) = (-1)^n x_1...x_n N X^{n-1} prod (1 - x_i X)^{a_i - 1}.
template <class R>
bool derivative_identity_check(const R& ring, const Model<R>& m) {
    const size_t n = m.n();
    Poly<R> lhs = poly_derivative(ring, expand(ring, m));
    typename R::Elem c = ring.from_int(m.type.N());
    for (size_t i = 0; i < n; ++i) c = ring.mul(c, m.roots[i]);
    if (n % 2 == 1) c = ring.neg(c);
    Poly<R> rhs(n - 1, ring.zero());
    rhs.push_back(c);  // c * X^{n-1}
    Poly<R> tail{ring.one()};
    for (size_t i = 0; i < n; ++i)
        tail = poly_mul(ring, tail, linear_factor_power(ring, m.roots[i], m.type.a[i] - 1));
    rhs = poly_mul(ring, rhs, tail);
    return poly_eq(ring, lhs, rhs);
}

/// t(beta) = (-1)^{n-1} x_1...x_n N; checked against phi_n.
template <class R>
typename R::Elem kummer_invariant(const R& ring, const Model<R>& m) {
    const size_t n = m.n();
    typename R::Elem t = ring.from_int(m.type.N());
    for (size_t i = 0; i < n; ++i) t = ring.mul(t, m.roots[i]);
    if (n % 2 == 0) t = ring.neg(t);
    typename R::Elem pn = phi(ring, n, m);
    if (!ring.eq(t, pn))
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY,
                          "kummer invariant formulas disagree (condition iii fails)");
    return t;
}

/// Verifies sum_i y_i prod_{j != i} (1 - x_j X) = X^{n-1} with
/// y_i = prod_{j != i} (x_i - x_j)^{-1}.
template <class R>
bool partial_fraction_identity_check(const R& ring, const std::vector<typename R::Elem>& roots) {
    const size_t n = roots.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!ring.is_unit(ring.sub(roots[i], roots[j])))
                throw DomainError(ErrorTag::NOT_A_MODEL, "root difference not invertible");
    Poly<R> lhs;
    for (size_t i = 0; i < n; ++i) {
        typename R::Elem y = ring.one();
        for (size_t j = 0; j < n; ++j)
            if (j != i) y = ring.mul(y, ring.inv(ring.sub(roots[i], roots[j])));
        Poly<R> term{y};
        for (size_t j = 0; j < n; ++j)
            if (j != i) term = poly_mul(ring, term, Poly<R>{ring.one(), ring.neg(roots[j])});
        lhs = poly_add(ring, lhs, term);
    }
    Poly<R> rhs(n - 1, ring.zero());
    rhs.push_back(ring.one());
    return poly_eq(ring, lhs, rhs);
}

// ---- Jacobians -----------------------------------------------------------

/// J_psi: (d psi_m / d x_j), m, j in 1..n-1, slot n held fixed.
template <class R>
std::vector<std::vector<typename R::Elem>> psi_jacobian(const R& ring, const Model<R>& m) {
    const size_t n = m.n();
    const size_t dim = n - 1;
    std::vector<std::vector<typename R::Elem>> J(dim,
                                                 std::vector<typename R::Elem>(dim, ring.zero()));
    const size_t cap = dim;
    // series f_i and d f_j / d x_j
    std::vector<Poly<R>> f(n);
    for (size_t i = 0; i < n; ++i) f[i] = detail::binom_series(ring, m.roots[i], m.type.a[i], cap);
    for (size_t j = 0; j < dim; ++j) {
        // derivative series: sum_k k C(a_j,k) x_j^{k-1} X^k
        Poly<R> df(cap + 1, ring.zero());
        typename R::Elem xp = ring.one();
        for (size_t k = 1; k <= cap; ++k) {
            Integer kc = Integer((unsigned long)k) * binomial(m.type.a[j], (unsigned long)k);
            df[k] = ring.mul(ring.from_int(kc), xp);
            xp = ring.mul(xp, m.roots[j]);
        }
        poly_trim(ring, df);
        Poly<R> prod = df;
        for (size_t i = 0; i < n; ++i)
            if (i != j) prod = detail::series_mul(ring, prod, f[i], cap);
        for (size_t row = 1; row <= dim; ++row)
            J[row - 1][j] = row < prod.size() ? prod[row] : ring.zero();
    }
    return J;
}

/// J_phi: (d phi_m / d x_j) = m a_j x_j^{m-1}, m, j in 1..n (full system).
template <class R>
std::vector<std::vector<typename R::Elem>> phi_jacobian(const R& ring, const Model<R>& m) {
    const size_t n = m.n();
    std::vector<std::vector<typename R::Elem>> J(n, std::vector<typename R::Elem>(n, ring.zero()));
    for (size_t j = 0; j < n; ++j) {
        typename R::Elem xp = ring.one();
        for (size_t row = 1; row <= n; ++row) {
            Integer c = Integer((unsigned long)row) * m.type.a[j];
            J[row - 1][j] = ring.mul(ring.from_int(c), xp);
            xp = ring.mul(xp, m.roots[j]);
        }
    }
    return J;
}

/// Division-free determinant by expansion on the first column (sizes <= 6).
template <class R>
typename R::Elem det_by_minors(const R& ring, std::vector<std::vector<typename R::Elem>> M) {
    const size_t n = M.size();
    if (n == 0) return ring.one();
    if (n == 1) return M[0][0];
    typename R::Elem acc = ring.zero();
    for (size_t r = 0; r < n; ++r) {
        if (ring.is_zero(M[r][0])) continue;
        std::vector<std::vector<typename R::Elem>> sub;
        sub.reserve(n - 1);
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<typename R::Elem> row(M[i].begin() + 1, M[i].end());
            sub.push_back(std::move(row));
        }
        typename R::Elem term = ring.mul(M[r][0], det_by_minors(ring, std::move(sub)));
        acc = r % 2 == 0 ? ring.add(acc, term) : ring.sub(acc, term);
    }
    return acc;
}

/// Closed form det(J_psi) = a_1...a_{n-1} prod_{i<j<=n-1} (x_i - x_j).
template <class R>
typename R::Elem psi_jacobian_closed_form(const R& ring, const Model<R>& m) {
    const size_t dim = m.n() - 1;
    typename R::Elem d = ring.one();
    for (size_t i = 0; i < dim; ++i) d = ring.mul(d, ring.from_int(m.type.a[i]));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j) d = ring.mul(d, ring.sub(m.roots[i], m.roots[j]));
    return d;
}

/// Closed form det(J_phi) = n! a_1...a_n prod_{i<j<=n} (x_i - x_j).
template <class R>
typename R::Elem phi_jacobian_closed_form(const R& ring, const Model<R>& m) {
    const size_t n = m.n();
    typename R::Elem d = ring.from_int(factorial((unsigned long)n));
    for (size_t i = 0; i < n; ++i) d = ring.mul(d, ring.from_int(m.type.a[i]));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) d = ring.mul(d, ring.sub(m.roots[j], m.roots[i]));
    return d;
}

}  // namespace dft

#endif
