#include "dft/poly.hpp"

namespace dft {

namespace {

// Bareiss fraction-free determinant; exact over Z.
Integer bareiss_det(std::vector<std::vector<Integer>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Integer resultant(const Poly<IntegerRing>& f, const Poly<IntegerRing>& g) {
    if (f.empty() || g.empty())
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "resultant of zero polynomial");
    const size_t df = f.size() - 1, dg = g.size() - 1;
    if (df == 0 && dg == 0) return 1;
    if (df == 0) return int_pow(f[0], dg);
    if (dg == 0) return int_pow(g[0], df);
    // Sylvester matrix, rows: dg shifts of f then df shifts of g.
    const size_t n = df + dg;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
    for (size_t r = 0; r < dg; ++r)
        for (size_t i = 0; i <= df; ++i) m[r][r + i] = f[df - i];
    for (size_t r = 0; r < df; ++r)
        for (size_t i = 0; i <= dg; ++i) m[dg + r][r + i] = g[dg - i];
    return bareiss_det(std::move(m));
}

Integer discriminant(const Poly<IntegerRing>& f) {
    if (f.size() < 2)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "discriminant needs degree >= 1");
    const size_t d = f.size() - 1;
    IntegerRing Z;
    Poly<IntegerRing> fp = poly_derivative(Z, f);
    Integer res = fp.empty() ? Integer(0) : resultant(f, fp);
    Integer num = res / f.back();
    if (num * f.back() != res)
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "discriminant not integral");
    if (((d * (d - 1)) / 2) % 2 == 1) num = -num;
    return num;
}

Poly<GFRing> poly_mod_p(const Poly<IntegerRing>& f, const GFRing& ring) {
    Poly<GFRing> r;
    r.reserve(f.size());
    for (const auto& c : f) r.push_back(ring.from_int(c));
    poly_trim(ring, r);
    return r;
}

}  // namespace dft
