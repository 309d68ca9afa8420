#ifndef DFT_FQSOLVER_HPP
#define DFT_FQSOLVER_HPP

#include <vector>

#include "dft/equations.hpp"
#include "dft/gf.hpp"
#include "dft/ring.hpp"
#include "dft/trees.hpp"

namespace dft {

/// All normalized models of the type over F_{p^k}: root tuples containing 1,
/// pairwise distinct, solving the psi-system (p <= n) resp. phi-system
/// (p > n), canonicalized by sorting roots inside equal-exponent blocks.
struct SolveResult {
    GFPtr field;
    std::vector<Model<GFRing>> models;
};

SolveResult solve_over_fq(const ValencyType& t, const Integer& p, unsigned k);

struct TreeClass {
    std::vector<size_t> model_indices;  // normalized models of this tree (n/m of them)
    unsigned splitting_degree;          // min over models of [F_p(roots) : F_p]
    size_t frobenius_orbit;             // index into OrbitReport::frobenius_orbits
    size_t moduli_degree;               // size of that orbit
};

struct OrbitReport {
    ValencyType type;
    Integer p;
    unsigned k_used = 0;   // field degree of the reported data
    unsigned k_max;
    bool complete = false; // model count reached the predicted total
    Integer predicted_total;
    GFPtr field;
    std::vector<Model<GFRing>> models;
    std::vector<TreeClass> trees;
    std::vector<std::vector<size_t>> frobenius_orbits;  // partitions tree indices

    OrbitReport(ValencyType t, Integer pp) : type(std::move(t)), p(std::move(pp)) {}
};

/// Raises k until the model count saturates at n!/prod(mult!) or k_max /
/// search bounds stop it; the final report lives in the single field
/// F_{p^k_used}.
OrbitReport orbit_report(const ValencyType& t, const Integer& p, unsigned k_max = 8);

struct Char2Census {
    bool criterion;  // a == b == c mod 4
    bool nonempty;
    GFPtr field;     // F_4
    std::vector<Model<GFRing>> models;
};

Char2Census char2_abc_census(const Integer& a, const Integer& b, const Integer& c);

struct SplitModelResult {
    ValencyType type;
    GFPtr field;  // F_p
    Model<GFRing> model;
    ConditionRecord conditions;
};

/// Example-4.3.3 construction: prescribes roots xs in F_p^* and picks the
/// least positive exponents a_i with a_i = u * prod_{j!=i}(1 - x_i/x_j)^{-1}
/// mod p; the result is a model of degree N = u mod p.
SplitModelResult construct_fp_split_model(const Integer& p, const std::vector<Integer>& xs,
                                          const Integer& u);

}  // namespace dft

#endif
