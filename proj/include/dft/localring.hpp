#ifndef DFT_LOCALRING_HPP
#define DFT_LOCALRING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dft/gf.hpp"
#include "dft/integer.hpp"

namespace dft {

/// Truncated quotient of a p-adic ring:
///
///   unramified part   B = (Z/p^M)[u]/(g_u(u)),  g_u monic irreducible mod p
///   ramified top      R = B[T]/(T^e + c),       v_p(c) = h, gcd(e, h) = 1
///
/// e = 1 gives the plain unramified case. The valuation is normalized so
/// v(p) = e, v(T) = h; for an element sum c_j T^j it is
/// min_j (e * v_u(c_j) + j * h), exact because gcd(e, h) = 1 makes the
/// monomial valuations distinct mod e. Only the pure Eisenstein-type shape
/// T^e + c is supported; anything else is rejected.
class LocalRingContext {
public:
    using UnramElem = std::vector<Integer>;  // length f, entries in [0, p^M)

    struct Elem {
        std::vector<UnramElem> t;  // length e

        bool operator==(const Elem& o) const { return t == o.t; }
    };

    static std::shared_ptr<const LocalRingContext> make_unramified(const Integer& p, unsigned M,
                                                                   const GFPtr& residue_field);
    /// Ramified on top of an unramified base: adjoins T with T^e = -constant.
    static std::shared_ptr<const LocalRingContext> make_ramified(const Integer& p, unsigned M,
                                                                 const GFPtr& residue_field,
                                                                 unsigned long e,
                                                                 const Integer& constant);

    const Integer& p() const { return p_; }
    unsigned precision() const { return M_; }
    const Integer& p_to_M() const { return pM_; }
    unsigned long f() const { return f_; }
    unsigned long e() const { return e_; }
    unsigned long h() const { return h_; }
    const Integer& eisenstein_constant() const { return c_; }
    const GFPtr& residue_field() const { return k_; }
    /// Valuations are trustworthy strictly below this cap (= e * M).
    long valuation_cap() const { return (long)(e_ * M_); }

    Elem zero() const;
    Elem one() const;
    Elem from_int(const Integer& n) const;
    Elem uniformizer_t() const;  // the image of T (requires e > 1)

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, const Integer& n) const;

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    /// nullopt when the element vanishes at this precision.
    std::optional<long> valuation(const Elem& a) const;
    bool is_unit(const Elem& a) const;
    Elem inv(const Elem& a) const;

    /// Reduction modulo the maximal ideal, into the residue field.
    GFElem reduce(const Elem& a) const;
    /// Reduction of the T^j coefficient (an unramified element).
    GFElem reduce_t_coeff(const Elem& a, unsigned long j) const;
    /// Coefficient-wise lift of a residue element.
    Elem lift(const GFElem& a) const;

    std::string key(const Elem& a) const;
    std::string to_string(const Elem& a) const;

private:
    LocalRingContext(Integer p, unsigned M, GFPtr k, unsigned long e, Integer c);

    UnramElem u_zero() const { return UnramElem(f_, Integer(0)); }
    UnramElem u_add(const UnramElem& a, const UnramElem& b) const;
    UnramElem u_sub(const UnramElem& a, const UnramElem& b) const;
    UnramElem u_mul(const UnramElem& a, const UnramElem& b) const;
    UnramElem u_scale(const Integer& s, const UnramElem& a) const;
    bool u_is_zero(const UnramElem& a) const;
    std::optional<unsigned long> u_valuation(const UnramElem& a) const;

    Integer p_;
    unsigned M_;
    Integer pM_;
    GFPtr k_;
    unsigned long f_;
    unsigned long e_;
    Integer c_;        // T^e + c = 0  (c = 0 when e = 1)
    unsigned long h_;  // v_p(c), 0 when e = 1
    std::vector<Integer> gu_;  // monic modulus of the unramified part, length f+1
};

using LocalRingPtr = std::shared_ptr<const LocalRingContext>;

/// Ring-concept adaptor for the templated polynomial/equation machinery.
struct LocalRing {
    LocalRingPtr R;
    using Elem = LocalRingContext::Elem;
    Elem zero() const { return R->zero(); }
    Elem one() const { return R->one(); }
    Elem from_int(const Integer& n) const { return R->from_int(n); }
    Elem add(const Elem& a, const Elem& b) const { return R->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return R->sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return R->mul(a, b); }
    Elem neg(const Elem& a) const { return R->neg(a); }
    bool is_zero(const Elem& a) const { return R->is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return R->eq(a, b); }
    bool is_unit(const Elem& a) const { return R->is_unit(a); }
    Elem inv(const Elem& a) const { return R->inv(a); }
    std::string key(const Elem& a) const { return R->key(a); }
    std::string to_string(const Elem& a) const { return R->to_string(a); }
};

/// Solves A x = b over the local ring by Gaussian elimination with unit
/// pivots; throws SINGULAR_POINT if no unit pivot is available.
std::vector<LocalRingContext::Elem> solve_linear_system(
    const LocalRing& ring, std::vector<std::vector<LocalRingContext::Elem>> A,
    std::vector<LocalRingContext::Elem> b);

}  // namespace dft

#endif
