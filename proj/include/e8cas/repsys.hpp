#ifndef E8CAS_REPSYS_HPP
#define E8CAS_REPSYS_HPP

#include "e8cas/orbitchar.hpp"

#include <functional>
#include <string>
#include <vector>

namespace e8cas {

struct RepOrbit {
    DominantE8 weight;
    Int multiplicity;
};

/// Orbit decomposition of an irreducible representation: the dominant
/// weights it contains with their inner multiplicities (highest weight
/// first, multiplicity 1).
struct RepDecomposition {
    DominantE8 highest;
    std::vector<RepOrbit> orbits;
    Int dim; // sum of multiplicity * orbit size, cross-checked against the
             // Weyl product formula
};

/// The 120 positive roots (length 2, nonnegative in the simple-root basis).
const std::vector<MuVector>& positive_roots();

/// All dominant weights lambda with highest - lambda a nonnegative integer
/// combination of simple roots. Ordered by increasing depth.
std::vector<DominantE8> dominant_weights_below(const DominantE8& highest);

/// Exact inner multiplicity by the Freudenthal recursion.
Int freudenthal_mult(const DominantE8& highest, const DominantE8& lower);

/// Full multiplicity table (memoized); dim is validated against the Weyl
/// dimension formula and the call fails loudly on mismatch.
const RepDecomposition& rep_decomposition(const DominantE8& highest);

/// Dimension via the orbit decomposition.
Int dim_rep(const DominantE8& highest);

/// Dimension via the Weyl product formula over the 120 positive roots
/// (independent path).
Int dim_rep_weyl(const DominantE8& highest);

/// Degree-M character of the full representation at a point: the
/// multiplicity-weighted sum of orbit characters.
Rat char_rep(int M, const DominantE8& highest, const EvalPoint& h);
Rat char_rep(const OrbitCharContext& ctx, const DominantE8& highest);

/// A calibrated closed-form predictor for the mean of <w, h>^degree over
/// the weights of R(highest), i.e. char_rep / dim. Produced by the
/// invariant-polynomial calibration; consumed by solve_multiplicities.
struct EigenvalueModel {
    int degree = 0;
    std::function<Rat(const DominantE8&, const EvalPoint&)> mean_power;
};

struct MultSolveResult {
    bool determined = false;
    bool consistent = false;
    size_t rank = 0;
    size_t unknowns = 0;
    std::vector<RepOrbit> multiplicities; // valid when determined
    std::string note;
};

/// Treats the inner multiplicities below `highest` as unknowns (the
/// highest one fixed to 1) and imposes, for every calibrated model E and
/// every point h,
///   sum_l m_l * char_e8_orbit(M, l, h) = E(highest, h) * sum_l m_l * orbit_size(l).
/// Solves the exact linear system; reports rank and either the unique
/// solution or "insufficient equations". Never guesses.
MultSolveResult solve_multiplicities(const DominantE8& highest,
                                     const std::vector<EigenvalueModel>& models,
                                     const std::vector<EvalPoint>& points);

} // namespace e8cas

#endif
