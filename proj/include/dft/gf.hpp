#ifndef DFT_GF_HPP
#define DFT_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dft/errors.hpp"
#include "dft/integer.hpp"

namespace dft {

/// Element of F_{p^k} in the polynomial basis: coefficient vector of length k,
/// low degree first, entries reduced mod p.
struct GFElem {
    std::vector<std::uint64_t> c;

    bool operator==(const GFElem& o) const { return c == o.c; }
    bool operator<(const GFElem& o) const { return c < o.c; }
};

/// Field context for F_{p^k} = F_p[t]/(modulus). Immutable; share freely.
class GF {
public:
    /// modulus: monic irreducible of degree k over F_p, low-to-high, length k+1.
    GF(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

    /// Builds F_{p^k} with the deterministic lex-first irreducible modulus.
    static std::shared_ptr<const GF> make(std::uint64_t p, unsigned k);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }
    /// Field size p^k; throws SEARCH_TOO_LARGE past 2^62.
    std::uint64_t order() const { return order_; }

    GFElem zero() const { return GFElem{std::vector<std::uint64_t>(k_, 0)}; }
    GFElem one() const;
    GFElem from_int(const Integer& n) const;
    GFElem from_index(std::uint64_t idx) const;  // base-p digits of idx
    std::uint64_t index_of(const GFElem& a) const;

    bool is_zero(const GFElem& a) const;
    GFElem add(const GFElem& a, const GFElem& b) const;
    GFElem sub(const GFElem& a, const GFElem& b) const;
    GFElem neg(const GFElem& a) const;
    GFElem mul(const GFElem& a, const GFElem& b) const;
    GFElem pow(const GFElem& a, const Integer& e) const;
    GFElem inv(const GFElem& a) const;
    GFElem frobenius(const GFElem& a) const;  // a^p

    /// Minimal d >= 1 with a^(p^d) = a, i.e. [F_p(a) : F_p].
    unsigned degree_of(const GFElem& a) const;

    /// All y with y^n = e; e must be nonzero. May be empty.
    std::vector<GFElem> nth_roots(const GFElem& e, unsigned long n) const;

    std::string to_string(const GFElem& a) const;

private:
    std::uint64_t p_;
    unsigned k_;
    std::vector<std::uint64_t> mod_;
    std::uint64_t order_;
};

using GFPtr = std::shared_ptr<const GF>;

/// Lex-first monic irreducible of degree k over F_p. Search order: candidate
/// coefficient vectors (c_0,...,c_{k-1}) taken as base-p digits of an
/// ascending counter, c_0 least significant.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned k);

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p);

}  // namespace dft

#endif
