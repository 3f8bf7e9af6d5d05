#ifndef E8CAS_CASIMIR_HPP
#define E8CAS_CASIMIR_HPP

#include "e8cas/repsys.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace e8cas {

/// Theta(M, r): the M-th power sum of the nine theta coordinates.
/// Vanishes identically for M = 1.
Rat theta(int M, const DominantE8& r);

/// The auxiliary polynomials in the Theta's. Names: "W1_8", "W2_8",
/// "W1_12", "W2_12", "W3_12", "W4_12", "W1_14".
Rat w_aux(const std::string& name, const DominantE8& r);

/// The degree-12 / degree-14 generators built on (Theta(2) - 620).
Rat q12(const DominantE8& r);
Rat q14(const DominantE8& r);

/// Basis functions of degrees 8 (alpha in 1..2), 12 (1..8), 14 (1..19).
/// The first degree-12 function contains a constant whose printed source
/// is unresolved; it enters as an explicit parameter with a documented
/// default (see default_k12_zero).
Rat k8(int alpha, const DominantE8& r);
Rat k12(int alpha, const DominantE8& r);
Rat k12(int alpha, const DominantE8& r, const Rat& k12_zero);
Rat k14(int alpha, const DominantE8& r);

/// Default for the unresolved constant: the self-consistent reading that
/// the symbol denotes the first degree-12 function evaluated at the zero
/// weight, solved from the resulting linear equation. Every published
/// class/span/rank statement is invariant under this choice (the constant
/// is absorbed by the affine term), so it is reported, never asserted.
const Rat& default_k12_zero();

/// Values of the whole family {K_alpha(degree)} at a weight.
std::vector<Rat> k_family(int degree, const DominantE8& r);
std::vector<Rat> k_family(int degree, const DominantE8& r, const Rat& k12_zero);

/// Monomial basis of degree M: the partitions of M into parts 2..9, in
/// descending lexicographic order (for M = 8: p8, p6p2, p5p3, p4^2,
/// p4p2^2, p3^2p2, p2^4).
const std::vector<Partition>& monomial_basis(int M);

/// Coefficients of the degree-M character of R(w) over the monomial
/// basis, extracted by an exact linear solve on seeded random points.
/// Cached per (M, w). Throws if the evaluation matrix stays singular
/// after five re-draws.
const std::vector<Rat>& extract_cofs(int M, const DominantE8& w, uint64_t seed = 0);

/// Invariant polynomial value: cof_alpha(w) * dim R(lambda_1) /
/// (cof_alpha(lambda_1) * dim R(w)), normalized so the value at lambda_1
/// is 1. The trivial representation short-circuits to 0. alpha is a
/// 0-based index into monomial_basis(M).
Rat normalize_P(int M, int alpha, const DominantE8& w);

/// Groups basis indices by exact equality of normalize_P across the
/// sample. Returns the classes (each a sorted list of 0-based indices),
/// largest first, ties by first index.
std::vector<std::vector<int>> distinct_classes(int M, const std::vector<DominantE8>& sample);

struct SpanClassReport {
    std::vector<int> monomials;
    bool in_span = false;
    std::vector<Rat> fit; // constant first, then one coefficient per family member
};

struct SpanReport {
    int degree = 0;
    size_t fit_count = 0;
    size_t verify_count = 0;
    bool pass = false;
    Rat k12_zero;
    std::vector<SpanClassReport> classes;
};

/// Fits each class representative as an exact affine combination of
/// {1} + K-family on the first fit_count sample weights and verifies the
/// fit exactly on the remaining ones.
SpanReport span_check(int M, const std::vector<DominantE8>& sample, size_t fit_count);

/// Exact rank of the evaluation matrix of {1} + K-family over the sample.
size_t independence_rank(int M, const std::vector<DominantE8>& sample);

/// Calibration of per-class eigenvalue predictors. The affine map of each
/// class is pinned on the trivial representation and lambda_1; the
/// matching family member is selected by exact verification on the check
/// weights. Degree 2 uses Theta(2) as its single family function.
struct ClassModel {
    std::vector<int> monomials;
    int k_index = -1; // 0-based into the family; -1 when unmatched
    Rat a, b;         // P = a + b * K
};

struct DegreeCalibration {
    int degree = 0;
    bool complete = false; // every class matched
    std::vector<ClassModel> classes;
    std::vector<Rat> cof_ref; // cof_alpha(lambda_1)
};

DegreeCalibration calibrate_degree(int M, const std::vector<DominantE8>& class_sample,
                                   const std::vector<DominantE8>& check_weights);

/// Assembles solver-ready models for the given degrees (typically
/// {2, 8, 12, 14}) with the default calibration samples.
std::vector<EigenvalueModel> eigenvalue_models(const std::vector<int>& degrees);

} // namespace e8cas

#endif
