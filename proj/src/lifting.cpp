#include "dft/lifting.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace dft {

namespace {

using LE = LocalRingContext::Elem;
using Matrix = std::vector<std::vector<LE>>;

/// Newton iteration with exact verification: converges quadratically, so a
/// generous iteration cap plus an exact residual check is enough.
std::vector<LE> newton_solve(const LocalRing& ring,
                             const std::function<std::vector<LE>(const std::vector<LE>&)>& system,
                             const std::function<Matrix(const std::vector<LE>&)>& jacobian,
                             std::vector<LE> x) {
    const unsigned cap = 8 + (unsigned)std::bit_width(
                                 (unsigned long)(ring.R->e() * ring.R->precision()));
    for (unsigned it = 0; it <= cap; ++it) {
        std::vector<LE> f = system(x);
        bool done = true;
        for (const auto& v : f)
            if (!ring.is_zero(v)) {
                done = false;
                break;
            }
        if (done) return x;
        std::vector<LE> rhs(f.size());
        for (size_t i = 0; i < f.size(); ++i) rhs[i] = ring.neg(f[i]);
        std::vector<LE> delta = solve_linear_system(ring, jacobian(x), rhs);
        for (size_t i = 0; i < x.size(); ++i) x[i] = ring.add(x[i], delta[i]);
    }
    throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "Newton iteration did not converge");
}

/// d psi_m / d x_j for the variable slots in `vars`, rows m = 1..|vars|.
Matrix psi_jacobian_vars(const LocalRing& ring, const Model<LocalRing>& m,
                         const std::vector<size_t>& vars) {
    const size_t n = m.n();
    const size_t dim = vars.size();
    const size_t cap = dim;
    std::vector<Poly<LocalRing>> f(n);
    for (size_t i = 0; i < n; ++i)
        f[i] = detail::binom_series(ring, m.roots[i], m.type.a[i], cap);
    Matrix J(dim, std::vector<LE>(dim, ring.zero()));
    for (size_t col = 0; col < dim; ++col) {
        const size_t j = vars[col];
        Poly<LocalRing> df(cap + 1, ring.zero());
        LE xp = ring.one();
        for (size_t k = 1; k <= cap; ++k) {
            Integer kc = Integer((unsigned long)k) * binomial(m.type.a[j], (unsigned long)k);
            df[k] = ring.mul(ring.from_int(kc), xp);
            xp = ring.mul(xp, m.roots[j]);
        }
        poly_trim(ring, df);
        Poly<LocalRing> prod = df;
        for (size_t i = 0; i < n; ++i)
            if (i != j) prod = detail::series_mul(ring, prod, f[i], cap);
        for (size_t row = 1; row <= dim; ++row)
            J[row - 1][col] = row < prod.size() ? prod[row] : ring.zero();
    }
    return J;
}

LE vandermonde_product(const LocalRing& ring, const std::vector<LE>& xs) {
    LE d = ring.one();
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) d = ring.mul(d, ring.sub(xs[j], xs[i]));
    return d;
}

LE require_witness(const LocalRing& ring, const LE& closed, const LE& direct) {
    if (!ring.eq(closed, direct))
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY,
                          "closed-form and direct Jacobian determinants differ");
    if (!ring.is_unit(closed))
        throw DomainError(ErrorTag::SINGULAR_POINT, "Jacobian determinant is not a unit");
    return closed;
}

Model<GFRing> reduce_model(const LocalRing& ring, const Model<LocalRing>& m, ModelKind kind) {
    std::vector<GFElem> r;
    r.reserve(m.n());
    for (const auto& x : m.roots) r.push_back(ring.R->reduce(x));
    return Model<GFRing>{m.type, std::move(r), kind, m.ai_slot};
}

}  // namespace

LiftResult hensel_lift_normalized(const GFPtr& F, const Model<GFRing>& residue, unsigned M) {
    const size_t n = residue.n();
    GFRing gf{F};
    require_valid_roots(gf, residue.roots);
    size_t fixed = n;
    for (size_t i = 0; i < n; ++i)
        if (residue.roots[i] == F->one()) fixed = i;
    if (fixed == n) throw DomainError(ErrorTag::NOT_A_MODEL, "no root equal to 1");
    for (size_t k = 1; k < n; ++k)
        if (!gf.is_zero(psi(gf, k, residue)))
            throw DomainError(ErrorTag::NOT_A_MODEL, "residue tuple is not a model");

    LocalRingPtr R = LocalRingContext::make_unramified(Integer(F->p()), M, F);
    LocalRing ring{R};
    std::vector<size_t> vars;
    for (size_t i = 0; i < n; ++i)
        if (i != fixed) vars.push_back(i);

    Model<LocalRing> cur{residue.type, {}, ModelKind::NORMALIZED, fixed};
    cur.roots.reserve(n);
    for (const auto& r : residue.roots) cur.roots.push_back(R->lift(r));

    auto system = [&](const std::vector<LE>& v) {
        for (size_t c = 0; c < vars.size(); ++c) cur.roots[vars[c]] = v[c];
        std::vector<LE> f;
        for (size_t m = 1; m < n; ++m) f.push_back(psi(ring, m, cur));
        return f;
    };
    auto jac = [&](const std::vector<LE>& v) {
        for (size_t c = 0; c < vars.size(); ++c) cur.roots[vars[c]] = v[c];
        return psi_jacobian_vars(ring, cur, vars);
    };
    std::vector<LE> v0;
    for (size_t c : vars) v0.push_back(cur.roots[c]);
    std::vector<LE> sol = newton_solve(ring, system, jac, std::move(v0));
    for (size_t c = 0; c < vars.size(); ++c) cur.roots[vars[c]] = sol[c];

    // det(J_psi) = prod a_j * prod_{i<j} (x_i - x_j) over the variable slots.
    LE closed = ring.one();
    std::vector<LE> xs;
    for (size_t c : vars) {
        closed = ring.mul(closed, ring.from_int(cur.type.a[c]));
        xs.push_back(cur.roots[c]);
    }
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            closed = ring.mul(closed, ring.sub(xs[i], xs[j]));
    LE witness = require_witness(ring, closed, det_by_minors(ring, psi_jacobian_vars(ring, cur, vars)));

    Model<GFRing> red = reduce_model(ring, cur, residue.kind);
    if (!(red.roots == residue.roots))
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "reduction of lift differs from input");
    return LiftResult{R, std::move(cur), M, std::move(witness), residue, F};
}

LiftResult hensel_lift_kummer(const GFPtr& F, const Model<GFRing>& residue, unsigned M) {
    const size_t n = residue.n();
    if (Integer(F->p()) <= Integer((unsigned long)n))
        throw DomainError(ErrorTag::WILD_PRIME, "Kummer lifting needs p > n");
    GFRing gf{F};
    require_valid_roots(gf, residue.roots);
    for (size_t k = 1; k < n; ++k)
        if (!gf.is_zero(phi(gf, k, residue)))
            throw DomainError(ErrorTag::NOT_A_MODEL, "phi_m != 0 below n");
    if (!(phi(gf, n, residue) == F->one()))
        throw DomainError(ErrorTag::NOT_A_MODEL, "phi_n != 1: not a Kummer model");

    LocalRingPtr R = LocalRingContext::make_unramified(Integer(F->p()), M, F);
    LocalRing ring{R};
    Model<LocalRing> cur{residue.type, {}, ModelKind::KUMMER, 0};
    for (const auto& r : residue.roots) cur.roots.push_back(R->lift(r));

    auto system = [&](const std::vector<LE>& v) {
        cur.roots = v;
        std::vector<LE> f;
        for (size_t m = 1; m < n; ++m) f.push_back(phi(ring, m, cur));
        f.push_back(ring.sub(phi(ring, n, cur), ring.one()));
        return f;
    };
    auto jac = [&](const std::vector<LE>& v) {
        cur.roots = v;
        return phi_jacobian(ring, cur);
    };
    std::vector<LE> sol = newton_solve(ring, system, jac, cur.roots);
    cur.roots = sol;

    LE closed = ring.from_int(factorial((unsigned long)n));
    for (size_t i = 0; i < n; ++i) closed = ring.mul(closed, ring.from_int(cur.type.a[i]));
    closed = ring.mul(closed, vandermonde_product(ring, cur.roots));
    LE witness = require_witness(ring, closed, det_by_minors(ring, phi_jacobian(ring, cur)));

    Model<GFRing> red = reduce_model(ring, cur, residue.kind);
    if (!(red.roots == residue.roots))
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "reduction of lift differs from input");
    return LiftResult{R, std::move(cur), M, std::move(witness), residue, F};
}

TwistedLift lift_phi_twisted_system(const GFPtr& F, const std::vector<GFElem>& residue_ys,
                                    const ValencyType& t, size_t slot, Locus mode, unsigned M) {
    const size_t n = t.n();
    if (n < 3) throw DomainError(ErrorTag::DEGENERATE_INPUT, "twisted systems need n >= 3");
    if (slot >= n || residue_ys.size() != n)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "bad slot or y-vector length");
    const Integer p(F->p());
    if (p <= Integer((unsigned long)n))
        throw DomainError(ErrorTag::WILD_PRIME, "twisted lifting needs p > n");
    Integer constant = t.a[slot];
    if (mode == Locus::INFINITY_) {
        constant = t.N();  // c = (-1)^n N
        if (n % 2 == 1) constant = -constant;
    }
    LocalRingPtr R = LocalRingContext::make_ramified(p, M, F, n - 1, constant);
    LocalRing ring{R};
    const LE T = R->uniformizer_t();

    std::vector<size_t> vars;
    for (size_t j = 0; j < n; ++j)
        if (j != slot) vars.push_back(j);
    // Residue y's in the retained slots: distinct, nonzero.
    for (size_t a = 0; a < vars.size(); ++a) {
        if (F->is_zero(residue_ys[vars[a]]))
            throw DomainError(ErrorTag::NOT_A_MODEL, "zero residue y");
        for (size_t b = a + 1; b < vars.size(); ++b)
            if (residue_ys[vars[a]] == residue_ys[vars[b]])
                throw DomainError(ErrorTag::NOT_A_MODEL, "repeated residue y");
    }

    std::vector<LE> ys(n, ring.zero());
    ys[slot] = mode == Locus::ZERO ? ring.one() : ring.zero();
    for (size_t j : vars) ys[j] = R->lift(residue_ys[j]);

    // Constant terms: ZERO has phi~_m = sum a_j y_j^m - T^{n-1-m};
    // INFINITY has chi_m = sum a_j y_j^m + (-1)^{m+n} T^{n-1-m}.
    auto tail = [&](size_t m) {
        LE tp = ring.one();
        for (size_t s = 0; s < n - 1 - m; ++s) tp = ring.mul(tp, T);
        if (mode == Locus::ZERO) return ring.neg(tp);
        return (m + n) % 2 == 0 ? tp : ring.neg(tp);
    };

    auto system = [&](const std::vector<LE>& v) {
        std::vector<LE> f;
        for (size_t m = 1; m < n; ++m) {
            LE s = tail(m);
            for (size_t c = 0; c < vars.size(); ++c) {
                LE yp = ring.one();
                for (size_t e = 0; e < m; ++e) yp = ring.mul(yp, v[c]);
                s = ring.add(s, ring.mul(ring.from_int(t.a[vars[c]]), yp));
            }
            f.push_back(s);
        }
        return f;
    };
    auto jac = [&](const std::vector<LE>& v) {
        Matrix J(n - 1, std::vector<LE>(n - 1, ring.zero()));
        for (size_t c = 0; c < vars.size(); ++c) {
            LE yp = ring.one();
            for (size_t m = 1; m < n; ++m) {
                J[m - 1][c] =
                    ring.mul(ring.from_int(Integer((unsigned long)m) * t.a[vars[c]]), yp);
                yp = ring.mul(yp, v[c]);
            }
        }
        return J;
    };

    std::vector<LE> v0;
    for (size_t j : vars) v0.push_back(ys[j]);
    std::vector<LE> sol = newton_solve(ring, system, jac, std::move(v0));
    for (size_t c = 0; c < vars.size(); ++c) ys[vars[c]] = sol[c];

    LE closed = ring.from_int(factorial((unsigned long)(n - 1)));
    for (size_t j : vars) closed = ring.mul(closed, ring.from_int(t.a[j]));
    closed = ring.mul(closed, vandermonde_product(ring, sol));
    LE witness = require_witness(ring, closed, det_by_minors(ring, jac(sol)));

    return TwistedLift{R, std::move(ys), slot, mode, M, std::move(witness)};
}

namespace {

ValencyType omit_slot(const ValencyType& t, size_t slot) {
    std::vector<Integer> b;
    for (size_t j = 0; j < t.n(); ++j)
        if (j != slot) b.push_back(t.a[j]);
    return ValencyType(std::move(b));
}

Model<GFRing> forward_common(const LocalRing& ring, const Model<LocalRing>& m, size_t slot,
                             Locus mode) {
    const size_t n = m.n();
    const LocalRingPtr& R = ring.R;
    if (n < 3 || R->e() != n - 1)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "model ring is not the n-1 twist");
    if (slot >= n) throw DomainError(ErrorTag::DEGENERATE_INPUT, "slot out of range");
    GFPtr F = R->residue_field();
    GFRing gf{F};
    std::vector<GFElem> ybar;
    for (size_t j = 0; j < n; ++j) {
        if (j == slot) continue;
        LE num = mode == Locus::ZERO ? m.roots[j] : R->sub(m.roots[j], R->one());
        // v(num) = v(T), so the residue of num/T is the T^1 coefficient mod p.
        ybar.push_back(R->reduce_t_coeff(num, 1));
    }
    Model<GFRing> out{omit_slot(m.type, slot), std::move(ybar), ModelKind::KUMMER, 0};
    require_valid_roots(gf, out.roots);
    const size_t n1 = n - 1;
    for (size_t k = 1; k < n1; ++k)
        if (!gf.is_zero(phi(gf, k, out)))
            throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "forward image not Kummer");
    if (!(phi(gf, n1, out) == F->one()))
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "forward image has phi_{n-1} != 1");
    return out;
}

CorrespondenceInverse inverse_common(const GFPtr& F, const Model<GFRing>& kummer,
                                     const ValencyType& full_type, size_t slot, const Integer& p,
                                     unsigned M, Locus mode) {
    const size_t n = full_type.n();
    if (kummer.n() + 1 != n)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "reduced type size mismatch");
    if (!(omit_slot(full_type, slot) == kummer.type))
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "Kummer model type is not the omitted type");
    {
        GFRing gf{F};
        require_valid_roots(gf, kummer.roots);
        const size_t nr = kummer.n();
        for (size_t m = 1; m < nr; ++m)
            if (!gf.is_zero(phi(gf, m, kummer)))
                throw DomainError(ErrorTag::NOT_A_MODEL, "input is not a Kummer model");
        if (!(phi(gf, nr, kummer) == F->one()))
            throw DomainError(ErrorTag::NOT_A_MODEL, "input is not a Kummer model");
    }
    PrimeClassification cls = classify_prime(full_type, p);
    unsigned long h;
    if (mode == Locus::ZERO) {
        if (std::find(cls.ai_regular.begin(), cls.ai_regular.end(), slot) == cls.ai_regular.end())
            throw DomainError(ErrorTag::NOT_REGULAR, "p is not a_i-regular at this slot");
        h = p_valuation(full_type.a[slot], p);
    } else {
        if (!cls.regular_at_infinity)
            throw DomainError(ErrorTag::NOT_REGULAR, "p is not regular at infinity");
        h = p_valuation(full_type.N(), p);
    }
    if (std::gcd((unsigned long)(n - 1), h) != 1)
        throw DomainError(ErrorTag::UNSUPPORTED_RAMIFICATION,
                          "impure twist: gcd(n-1, h) != 1");

    std::vector<GFElem> ys(n, F->zero());
    for (size_t j = 0, c = 0; j < n; ++j)
        if (j != slot) ys[j] = kummer.roots[c++];
    TwistedLift tl = lift_phi_twisted_system(F, ys, full_type, slot, mode, M);
    LocalRing ring{tl.ring};
    const LE T = tl.ring->uniformizer_t();

    Model<LocalRing> model{full_type, std::vector<LE>(n, ring.zero()),
                           mode == Locus::ZERO ? ModelKind::CANONICAL : ModelKind::AI_NORMALIZED,
                           slot};
    for (size_t j = 0; j < n; ++j) {
        if (j == slot) {
            model.roots[j] = ring.one();
        } else if (mode == Locus::ZERO) {
            model.roots[j] = ring.mul(T, tl.ys[j]);
        } else {
            model.roots[j] = ring.add(ring.one(), ring.mul(T, tl.ys[j]));
        }
    }
    for (size_t m = 1; m < n; ++m)
        if (!ring.is_zero(phi(ring, m, model)))
            throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY,
                              "reconstructed model fails phi_m = 0");
    return CorrespondenceInverse{tl.ring, std::move(model), std::move(tl)};
}

}  // namespace

Model<GFRing> phi_forward(const LocalRing& ring, const Model<LocalRing>& canonical, size_t slot) {
    if (!ring.eq(canonical.roots[slot], ring.one()))
        throw DomainError(ErrorTag::NOT_A_MODEL, "distinguished root is not 1");
    return forward_common(ring, canonical, slot, Locus::ZERO);
}

Model<GFRing> psi_forward(const LocalRing& ring, const Model<LocalRing>& ai_normalized,
                          size_t slot) {
    if (!ring.eq(ai_normalized.roots[slot], ring.one()))
        throw DomainError(ErrorTag::NOT_A_MODEL, "distinguished root is not 1");
    return forward_common(ring, ai_normalized, slot, Locus::INFINITY_);
}

CorrespondenceInverse phi_inverse(const GFPtr& F, const Model<GFRing>& kummer,
                                  const ValencyType& full_type, size_t slot, const Integer& p,
                                  unsigned M) {
    return inverse_common(F, kummer, full_type, slot, p, M, Locus::ZERO);
}

CorrespondenceInverse psi_inverse(const GFPtr& F, const Model<GFRing>& kummer,
                                  const ValencyType& full_type, size_t slot, const Integer& p,
                                  unsigned M) {
    return inverse_common(F, kummer, full_type, slot, p, M, Locus::INFINITY_);
}

std::vector<std::tuple<size_t, size_t, long>> valuation_profile(const LocalRing& ring,
                                                                const Model<LocalRing>& m,
                                                                Locus mode, size_t slot) {
    const LocalRingPtr& R = ring.R;
    const size_t n = m.n();
    std::vector<std::tuple<size_t, size_t, long>> out;
    auto val = [&](const LE& x) {
        auto v = R->valuation(x);
        if (!v) throw DomainError(ErrorTag::VALUATION_MISMATCH, "difference vanishes at precision");
        return *v;
    };
    if (mode == Locus::ZERO) {
        const long va = val(ring.from_int(m.type.a[slot]));
        for (size_t j = 0; j < n; ++j) {
            if (j == slot) continue;
            long v = val(ring.sub(m.roots[j], m.roots[slot]));
            out.emplace_back(j, slot, v);
            if (v != 0)
                throw DomainError(ErrorTag::VALUATION_MISMATCH, "v(x_j - x_i) != 0");
            long vr = val(m.roots[j]);
            if ((long)(n - 1) * vr != va)
                throw DomainError(ErrorTag::VALUATION_MISMATCH, "(n-1)v(x_j) != v(a_i)");
        }
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                if (j == slot || k == slot) continue;
                long v = val(ring.sub(m.roots[k], m.roots[j]));
                out.emplace_back(j, k, v);
                if ((long)(n - 1) * v != va)
                    throw DomainError(ErrorTag::VALUATION_MISMATCH, "(n-1)v(x_j - x_k) != v(a_i)");
            }
    } else {
        const long vN = val(ring.from_int(m.type.N()));
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                long v = val(ring.sub(m.roots[k], m.roots[j]));
                out.emplace_back(j, k, v);
                if ((long)(n - 1) * v != vN)
                    throw DomainError(ErrorTag::VALUATION_MISMATCH, "(n-1)v(x_j - x_k) != v(N)");
            }
    }
    return out;
}

LocalRingContext::Elem frobenius_lift(const LocalRingPtr& R, const LocalRingContext::Elem& a) {
    if (R->e() != 1)
        throw DomainError(ErrorTag::UNSUPPORTED_RAMIFICATION,
                          "Frobenius lift implemented on unramified contexts only");
    LocalRing ring{R};
    const GFPtr& F = R->residue_field();
    const unsigned long f = R->f();
    if (f == 1) return a;
    // sigma(u): Hensel root of the modulus above (residue of u)^p.
    std::vector<LE> g;  // modulus coefficients as ring scalars
    {
        GFElem ubar;
        ubar.c.assign(f, 0);
        ubar.c[1] = 1;
        LE s = R->lift(F->frobenius(ubar));
        // g(T) from the residue-field modulus (monic, integer coefficients)
        const auto& mod = F->modulus();
        auto geval = [&](const LE& z) {
            LE r = ring.zero();
            for (size_t i = mod.size(); i-- > 0;)
                r = ring.add(ring.mul(r, z), ring.from_int(Integer(mod[i])));
            return r;
        };
        auto gderiv = [&](const LE& z) {
            LE r = ring.zero();
            for (size_t i = mod.size(); i-- > 1;)
                r = ring.add(ring.mul(r, z),
                             ring.from_int(Integer(mod[i]) * Integer((unsigned long)i)));
            return r;
        };
        unsigned cap = 8 + (unsigned)std::bit_width((unsigned long)R->precision());
        for (unsigned it = 0; it <= cap; ++it) {
            LE gv = geval(s);
            if (ring.is_zero(gv)) break;
            s = ring.sub(s, ring.mul(gv, ring.inv(gderiv(s))));
        }
        if (!ring.is_zero(geval(s)))
            throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "Frobenius root lift failed");
        g.push_back(s);
    }
    const LE& sigma_u = g[0];
    // Apply coefficientwise: sigma(sum c_i u^i) = sum c_i sigma(u)^i.
    LE r = ring.zero();
    LE up = ring.one();
    for (unsigned long i = 0; i < f; ++i) {
        r = ring.add(r, ring.mul(ring.from_int(a.t[0][i]), up));
        up = ring.mul(up, sigma_u);
    }
    return r;
}

}  // namespace dft
