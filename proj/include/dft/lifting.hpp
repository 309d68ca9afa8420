#ifndef DFT_LIFTING_HPP
#define DFT_LIFTING_HPP

#include <tuple>
#include <vector>

#include "dft/equations.hpp"
#include "dft/localring.hpp"
#include "dft/reduction.hpp"
#include "dft/ring.hpp"

namespace dft {

struct LiftResult {
    LocalRingPtr ring;
    Model<LocalRing> lifted;
    unsigned precision;
    LocalRingContext::Elem jacobian_witness;  // closed form == direct determinant
    Model<GFRing> reduction;                  // the input residue model
    GFPtr residue_field;
};

/// Newton lifting of a normalized residue model (some root = 1, held fixed)
/// through the psi-system into the unramified ring mod p^M.
LiftResult hensel_lift_normalized(const GFPtr& F, const Model<GFRing>& residue, unsigned M);

/// Newton lifting of a Kummer residue model (phi_1..phi_{n-1} = 0, phi_n = 1)
/// through the full n-variable system; needs p > n.
LiftResult hensel_lift_kummer(const GFPtr& F, const Model<GFRing>& residue, unsigned M);

/// y-side lift in the ramified ring B[T]/(T^{n-1}+c): mode ZERO solves
/// phi~_m = sum_{j!=i} a_j y_j^m - T^{n-1-m} (c = a_i); mode INFINITY solves
/// chi_m = sum a_j y_j^m + (-1)^{m+n} T^{n-1-m} (c = (-1)^n N, y_i = 0).
struct TwistedLift {
    LocalRingPtr ring;
    std::vector<LocalRingContext::Elem> ys;  // slot-aligned; ys[slot] is 1 / 0
    size_t slot;
    Locus mode;
    unsigned precision;
    LocalRingContext::Elem jacobian_witness;
};

TwistedLift lift_phi_twisted_system(const GFPtr& F, const std::vector<GFElem>& residue_ys,
                                    const ValencyType& t, size_t slot, Locus mode, unsigned M);

/// Residue-level forward maps of the two correspondences: canonical model ->
/// Kummer model of the omitted type (ZERO), a_i-normalized model with
/// reduction (1-X)^N -> same (INFINITY).
Model<GFRing> phi_forward(const LocalRing& ring, const Model<LocalRing>& canonical, size_t slot);
Model<GFRing> psi_forward(const LocalRing& ring, const Model<LocalRing>& ai_normalized,
                          size_t slot);

struct CorrespondenceInverse {
    LocalRingPtr ring;
    Model<LocalRing> model;  // CANONICAL (ZERO) or AI_NORMALIZED (INFINITY)
    TwistedLift twisted;
};

/// Inverse maps: lift the Kummer residue through the twisted system and
/// reconstruct x_j = T y_j, x_i = 1 (ZERO) resp. x_j = 1 + T y_j (INFINITY).
CorrespondenceInverse phi_inverse(const GFPtr& F, const Model<GFRing>& kummer,
                                  const ValencyType& full_type, size_t slot, const Integer& p,
                                  unsigned M);
CorrespondenceInverse psi_inverse(const GFPtr& F, const Model<GFRing>& kummer,
                                  const ValencyType& full_type, size_t slot, const Integer& p,
                                  unsigned M);

/// Measured (j, k, v(x_j - x_k)) profile; asserts the Lemma 8.2 / 9.2 shapes
/// and throws VALUATION_MISMATCH on violation.
std::vector<std::tuple<size_t, size_t, long>> valuation_profile(const LocalRing& ring,
                                                                const Model<LocalRing>& m,
                                                                Locus mode, size_t slot);

/// The canonical Frobenius lift on an unramified context (fixes Z/p^M, sends
/// the residue generator to the Hensel root of the modulus above its p-th
/// power).
LocalRingContext::Elem frobenius_lift(const LocalRingPtr& R, const LocalRingContext::Elem& a);

}  // namespace dft

#endif
