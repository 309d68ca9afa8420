#ifndef DFT_FAMILIES_HPP
#define DFT_FAMILIES_HPP

#include <map>
#include <string>
#include <vector>

#include "dft/equations.hpp"
#include "dft/poly.hpp"

namespace dft {

/// Q[x]/(mod), mod monic of degree >= 1 over Q. Not necessarily a field; an
/// element is invertible iff it is coprime to mod, which extended Euclid
/// decides exactly.
class QuotientRing {
public:
    using Elem = std::vector<Rational>;  // length deg(mod), low-to-high in x

    explicit QuotientRing(Poly<RationalRing> modulus);

    size_t degree() const { return d_; }
    const Poly<RationalRing>& modulus() const { return mod_; }

    Elem zero() const { return Elem(d_, Rational(0)); }
    Elem one() const;
    Elem gen() const;  // the class of x
    Elem from_int(const Integer& n) const;
    Elem from_rational(const Rational& q) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const;
    Elem inv(const Elem& a) const;  // SINGULAR_POINT if a zero divisor / zero
    std::string key(const Elem& a) const;
    std::string to_string(const Elem& a) const;

private:
    Poly<RationalRing> mod_;  // monic
    size_t d_;
};

/// The standard model of type (a,b): roots (b, -a), exponents (a, b).
Model<RationalRing> family_ab(const Integer& a, const Integer& b);

/// -abc(a+b+c); the splitting/moduli field in characteristic zero is
/// Q(sqrt of this).
Integer family_abc_disc(const Integer& a, const Integer& b, const Integer& c);

enum class AbcCase { SPLIT_AS_CHAR0, EMPTY, UNIQUE_RATIONAL };

struct AbcTrichotomy {
    AbcCase tag;
    Integer D;           // (a+b)(b+c)(c+a)
    Integer d;           // (a+b,b+c)(b+c,c+a)(c+a,a+b)
    Integer disc;        // -abc(a+b+c)
    bool disc_square_mod_p;  // meaningful for SPLIT_AS_CHAR0
};

AbcTrichotomy family_abc_fp_trichotomy(const Integer& a, const Integer& b, const Integer& c,
                                       const Integer& p);

/// h(X) = sum_{k=0}^{n-1} C(a+k-1, a-1) C(b+n-2-k, b-1) X^k for the family
/// (1,...,1,a,b).
Poly<IntegerRing> family_ones_ab_hpoly(unsigned long n, const Integer& a, const Integer& b);

struct RegularityConstants {
    Integer c;  // (n-2)!(a+n-2)!/(a-1)!
    Integer u;  // (n-2)!(a+n-2)!(b+n-2)!(a+b+n-3)!/((a-1)!(b-1)!(a+b-1)!)
    std::map<Integer, unsigned long> c_factorization;
    std::map<Integer, unsigned long> u_factorization;
};

RegularityConstants family_regularity_constants(unsigned long n, const Integer& a,
                                                const Integer& b);

/// Exact reconstruction of the (1,...,1,a,b) normalized model in Q[x]/(h):
/// beta = 1 + u * integral of t^{n-1}(1-xt)^{a-1}(1-t)^{b-1}, u = -1/S with
/// S the integral over [0,1]. Coefficients are polynomials in the h-root x.
struct OnesAbModel {
    unsigned long n;
    Integer a, b;
    Poly<IntegerRing> h;
    size_t root_index;             // under sort by (Re, Im) of the numeric roots
    std::string root_approx;       // "re+im*i" decimal approximation
    std::vector<QuotientRing::Elem> beta;      // length N+1
    std::vector<QuotientRing::Elem> cofactor;  // beta / ((1-xX)^a (1-X)^b), degree n-2
    QuotientRing::Elem u;
    bool beta_at_one_zero;         // exact: beta(1) = 0
    bool beta_at_root_inv_zero;    // exact: x^N * beta(1/x) = 0 in Q[x]/(h)
    bool division_exact;           // exact: (1-xX)^a (1-X)^b divides beta
    std::string numeric_residual;  // max |h(z)| over the approximated roots
};

OnesAbModel family_ones_ab_model(unsigned long n, const Integer& a, const Integer& b,
                                 size_t root_index);

/// Numeric roots of an integer polynomial (multi-precision Durand-Kerner),
/// sorted by (Re, Im); each entry rendered as "re,im". Sanity layer only.
std::vector<std::string> numeric_roots(const Poly<IntegerRing>& f);

}  // namespace dft

#endif
