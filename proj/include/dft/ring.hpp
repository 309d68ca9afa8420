#ifndef DFT_RING_HPP
#define DFT_RING_HPP

#include <string>

#include "dft/gf.hpp"
#include "dft/integer.hpp"

namespace dft {

// The equation/model machinery is templated on a small ring concept:
//   Elem, zero(), one(), from_int(), add, sub, mul, neg, is_zero, eq,
//   is_unit, inv, key() (canonical sort key).

struct RationalRing {
    using Elem = Rational;
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(const Integer& n) const { return Rational(n); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a != 0; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DomainError(ErrorTag::DEGENERATE_INPUT, "inverse of zero");
        return 1 / a;
    }
    std::string key(const Elem& a) const { return a.get_str(); }
    std::string to_string(const Elem& a) const { return a.get_str(); }
};

struct IntegerRing {
    using Elem = Integer;
    Elem zero() const { return Integer(0); }
    Elem one() const { return Integer(1); }
    Elem from_int(const Integer& n) const { return n; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
    Elem inv(const Elem& a) const {
        if (!is_unit(a)) throw DomainError(ErrorTag::DEGENERATE_INPUT, "non-unit integer");
        return a;
    }
    std::string key(const Elem& a) const { return a.get_str(); }
    std::string to_string(const Elem& a) const { return a.get_str(); }
};

struct GFRing {
    GFPtr F;
    using Elem = GFElem;
    Elem zero() const { return F->zero(); }
    Elem one() const { return F->one(); }
    Elem from_int(const Integer& n) const { return F->from_int(n); }
    Elem add(const Elem& a, const Elem& b) const { return F->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return F->sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return F->mul(a, b); }
    Elem neg(const Elem& a) const { return F->neg(a); }
    bool is_zero(const Elem& a) const { return F->is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return !F->is_zero(a); }
    Elem inv(const Elem& a) const { return F->inv(a); }
    std::string key(const Elem& a) const { return std::to_string(F->index_of(a)); }
    std::string to_string(const Elem& a) const { return F->to_string(a); }
};

}  // namespace dft

#endif
