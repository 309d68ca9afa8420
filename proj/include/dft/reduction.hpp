#ifndef DFT_REDUCTION_HPP
#define DFT_REDUCTION_HPP

#include <optional>
#include <set>
#include <vector>

#include "dft/equations.hpp"
#include "dft/trees.hpp"

namespace dft {

enum class DVariant { FULL, OMIT, PROPER };

/// Subset-sum product invariant: FULL = d(a) over all nonempty subsets,
/// OMIT(i) = d_i(a) over subsets avoiding slot i, PROPER = d_inf(a) = d/N
/// over nonempty proper subsets. The exact product easily overflows any fixed
/// budget, so the prime support is primary and the value is only kept while it
/// fits the bit bound.
struct DInvariant {
    std::set<Integer> prime_support;
    std::optional<Integer> value;  // present iff below the size guard
};

DInvariant d_invariant(const ValencyType& t, DVariant variant, size_t omit_slot = 0);

struct PrimeClassification {
    bool good = false;                    // p does not divide d
    std::vector<size_t> ai_regular;       // slots i with p | a_i, p not | d_i
    bool regular_at_infinity = false;     // p | N, p not | d_inf
    bool wild_unclassified = false;       // divides d but no regular slot fits
};

PrimeClassification classify_prime(const ValencyType& t, const Integer& p);

/// Least h with p^h > n.
unsigned long h_p(unsigned long n, const Integer& p);

/// Admissible permutation sigma with a_i == b_sigma(i) mod p^{h_p(n)}, if one
/// exists; the strict variant additionally preserves equality patterns.
std::optional<std::vector<size_t>> p_congruent(const ValencyType& t1, const ValencyType& t2,
                                               const Integer& p, bool strict);

/// Reduces exponents to their least positive residues mod p^{h_p(n)} (the
/// "reduce to small exponents" normalization); re-sorts.
ValencyType reduce_type_mod_p(const ValencyType& t, const Integer& p);

/// Transports a model of type t1 along an admissible permutation: same roots,
/// exponents b_sigma(i). perm[i] is the slot of target taking t1's slot-i root.
template <class R>
Model<R> transport_model(const R& ring, const Model<R>& m, const ValencyType& target,
                         const std::vector<size_t>& perm, const Integer& p) {
    const size_t n = m.n();
    if (target.n() != n || perm.size() != n)
        throw DomainError(ErrorTag::BAD_PERMUTATION, "length mismatch");
    Integer ph = int_pow(p, h_p(n, p));
    std::vector<bool> hit(n, false);
    for (size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || hit[perm[i]])
            throw DomainError(ErrorTag::BAD_PERMUTATION, "not a permutation");
        hit[perm[i]] = true;
        if ((m.type.a[i] - target.a[perm[i]]) % ph != 0)
            throw DomainError(ErrorTag::BAD_PERMUTATION, "residues differ mod p^h");
    }
    Model<R> out{target, std::vector<typename R::Elem>(n, ring.zero()), m.kind, 0};
    for (size_t i = 0; i < n; ++i) out.roots[perm[i]] = m.roots[i];
    return out;
}

enum class Locus { ZERO, INFINITY_ };

struct RamificationIndex {
    unsigned long e;                        // (n-1)/gcd(n-1, h*n0)
    unsigned long n0;
    unsigned long h;                        // nu_p(a_i) resp. nu_p(N)
    std::vector<unsigned long> class_sizes; // equal-valency classes
};

/// Combinatorial ramification index e_i (locus ZERO, slot i) or e_inf.
RamificationIndex combinatorial_ramification_index(const ValencyType& t, Locus locus,
                                                  size_t slot, const Integer& p);

/// (n-1)!/ord_n(p) for generic types p-congruent to (1,...,1).
Integer cyclotomic_orbit_count(const ValencyType& t, const Integer& p);

struct RamificationBound {
    Locus locus;
    size_t slot;  // meaningful for ZERO
    unsigned long lower;  // the combinatorial index e
    unsigned long upper;  // (n-1)/gcd(n-1, h)
    bool totally_determined;
};

/// Bounds at every locus where p is regular; NOT_REGULAR if there is none.
std::vector<RamificationBound> ramification_bound_report(const ValencyType& t, const Integer& p);

}  // namespace dft

#endif
