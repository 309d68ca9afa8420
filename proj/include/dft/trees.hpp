#ifndef DFT_TREES_HPP
#define DFT_TREES_HPP

#include <vector>

#include "dft/integer.hpp"

namespace dft {

/// Valency type (a_1,...,a_n): sorted positive integers, n >= 2 in the
/// geometric setting (n = 1 tolerated where an operation says so).
struct ValencyType {
    std::vector<Integer> a;  // ascending

    explicit ValencyType(std::vector<Integer> v);

    size_t n() const { return a.size(); }
    Integer N() const;
    /// Multiplicity of value v in the type.
    size_t multiplicity(const Integer& v) const;
    bool operator==(const ValencyType& o) const { return a == o.a; }
};

/// One diameter four tree, stored as the necklace of black-vertex valencies
/// around the central white vertex; canonical representative is the
/// lexicographically smallest rotation.
struct PlanarTreeClass {
    std::vector<Integer> necklace;
    unsigned long aut_order;  // order of the cyclic symmetry group; divides n
};

/// All distinct necklaces of the multiset, canonical rotations, sorted.
std::vector<PlanarTreeClass> enumerate_trees(const ValencyType& t);

/// Burnside count over the cyclic group; no necklace materialization.
Integer count_trees(const ValencyType& t);

/// n / aut_order.
Integer normalized_model_count(const ValencyType& t, const PlanarTreeClass& tree);

/// n(a_i) / aut_order, where n(a_i) is the multiplicity of slot i's valency.
Integer ai_normalized_model_count(const ValencyType& t, const PlanarTreeClass& tree, size_t i);

/// Total count of normalized models of the type over an algebraically closed
/// field of good characteristic: sum over trees of n/m = n! / prod(mult!).
Integer total_normalized_models(const ValencyType& t);

}  // namespace dft

#endif
