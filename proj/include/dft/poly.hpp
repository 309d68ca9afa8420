#ifndef DFT_POLY_HPP
#define DFT_POLY_HPP

#include <optional>
#include <vector>

#include "dft/ring.hpp"

namespace dft {

// Dense univariate polynomials, coefficients low-to-high, no trailing zeros
// (the zero polynomial is the empty vector).
template <class R>
using Poly = std::vector<typename R::Elem>;

template <class R>
void poly_trim(const R& ring, Poly<R>& f) {
    while (!f.empty() && ring.is_zero(f.back())) f.pop_back();
}

template <class R>
Poly<R> poly_add(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    Poly<R> r(std::max(a.size(), b.size()), ring.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = ring.add(r[i], b[i]);
    poly_trim(ring, r);
    return r;
}

template <class R>
Poly<R> poly_sub(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    Poly<R> r(std::max(a.size(), b.size()), ring.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = ring.sub(r[i], b[i]);
    poly_trim(ring, r);
    return r;
}

template <class R>
Poly<R> poly_mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<R> r(a.size() + b.size() - 1, ring.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (ring.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = ring.add(r[i + j], ring.mul(a[i], b[j]));
    }
    poly_trim(ring, r);
    return r;
}

template <class R>
Poly<R> poly_scale(const R& ring, const typename R::Elem& c, const Poly<R>& a) {
    Poly<R> r = a;
    for (auto& x : r) x = ring.mul(c, x);
    poly_trim(ring, r);
    return r;
}

template <class R>
Poly<R> poly_derivative(const R& ring, const Poly<R>& a) {
    if (a.size() < 2) return {};
    Poly<R> r(a.size() - 1, ring.zero());
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = ring.mul(ring.from_int(Integer((unsigned long)i)), a[i]);
    poly_trim(ring, r);
    return r;
}

template <class R>
typename R::Elem poly_eval(const R& ring, const Poly<R>& a, const typename R::Elem& x) {
    typename R::Elem r = ring.zero();
    for (size_t i = a.size(); i-- > 0;) r = ring.add(ring.mul(r, x), a[i]);
    return r;
}

template <class R>
bool poly_eq(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!ring.eq(a[i], b[i])) return false;
    return true;
}

/// Index of the first nonzero coefficient; nullopt (= infinity) for the zero
/// polynomial.
template <class R>
std::optional<size_t> poly_valuation_at_zero(const R& ring, const Poly<R>& f) {
    for (size_t i = 0; i < f.size(); ++i)
        if (!ring.is_zero(f[i])) return i;
    return std::nullopt;
}

/// Resultant of two nonzero integer polynomials (Sylvester determinant,
/// fraction-free Bareiss elimination).
Integer resultant(const Poly<IntegerRing>& f, const Poly<IntegerRing>& g);

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f); deg f >= 1 required.
Integer discriminant(const Poly<IntegerRing>& f);

/// Reduces an integer polynomial modulo p into the given field (k arbitrary).
Poly<GFRing> poly_mod_p(const Poly<IntegerRing>& f, const GFRing& ring);

}  // namespace dft

#endif
