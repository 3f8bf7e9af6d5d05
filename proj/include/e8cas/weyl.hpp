#ifndef E8CAS_WEYL_HPP
#define E8CAS_WEYL_HPP

#include "e8cas/lattice.hpp"
#include "e8cas/rat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace e8cas {

/// Thrown when an enumeration would exceed its size guard.
struct OrbitTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SigmaSetMember {
    DominantA8 q;
    Int a8_orbit_size;
};

/// The A8-dominant representatives of one E8 Weyl orbit, with their A8
/// orbit sizes. Sizes add up to the E8 orbit size and all members share
/// the squared length of the source weight.
struct SigmaSet {
    DominantE8 source;
    std::vector<SigmaSetMember> members;
    Int e8_orbit_size;

    std::string to_json_string() const;
};

/// Sorts the nine coordinates into the dominant chamber of A8 (descending,
/// minimum shifted to 0 in the ninth slot) and counts the orbit:
/// 9! / prod(multiplicity!) over repeated coordinate values.
std::pair<DominantA8, Int> a8_dominantize(const MuVector& w);

/// Orbit size of an A8-dominant weight by the same permutation count.
Int a8_orbit_size_of(const DominantA8& q);

/// Reflection in a length-2 root: w - mu_inner(w, root) * root.
MuVector reflect(const MuVector& w, const MuVector& root);

/// All 9!/prod(mult!) distinct permutations of the weight's coordinates.
/// Throws OrbitTooLargeError beyond the guard.
std::vector<MuVector> enumerate_a8_orbit(const DominantA8& q, size_t guard = 1000000);

/// Order of the E8 Weyl group, as the product of the degrees
/// 2*8*12*14*18*20*24*30 = 696729600.
const Int& weyl_group_order_e8();

/// |W(E8)| / |W(stabilizer)|, the stabilizer being the sub-diagram of
/// nodes whose Dynkin label vanishes.
Int e8_orbit_size(const DominantE8& w);

/// Same value by breadth-first orbit enumeration (cross-check; guarded).
Int e8_orbit_size_by_enumeration(const DominantE8& w, size_t guard = 1000000);

/// Ground-truth computation of the Sigma set: closure of the dominant
/// representative under reflections by the permutation images of one E8
/// root outside A8, re-dominantizing after each step. Memoized.
const SigmaSet& sigma_set_transversal(const DominantE8& w);

/// Re-runs the closure with a caller-chosen seed root (must have squared
/// length 2 and not lie in A8). Used to check independence of the choice.
SigmaSet sigma_set_transversal_with_root(const DominantE8& w, const MuVector& root);

struct SumsetDiagnostics {
    bool agrees_with_transversal = false;
    std::vector<DominantA8> missing; // in transversal but not in sumset
    std::vector<DominantA8> extra;   // in sumset but not in transversal
};

/// The sum-set construction: candidate members are sums of fundamental-set
/// members (one per label unit) with the sigma_8 coefficient re-solved as a
/// free integer from the squared-length equality. Compared against the
/// transversal; any discrepancy is reported in the diagnostics.
SigmaSet sigma_set_sumset(const DominantE8& w, SumsetDiagnostics* diag = nullptr);

/// Printed fundamental-set entries as integer coefficient rows over
/// sigma_1..sigma_8, transcribed verbatim (including the known misprint
/// in the first set).
struct FundamentalSetFixture {
    int index = 0;
    std::vector<std::array<int, 8>> entries;
};

const FundamentalSetFixture& fundamental_set_fixture(int i); // 1..8

struct ReconcileEntry {
    std::array<int, 8> sigma_coeffs;
    bool matched = false;
    int member_index = -1; // into the transversal member list
};

struct ReconcileReport {
    int index = 0;
    size_t fixture_count = 0;
    size_t transversal_count = 0;
    bool counts_agree = false;
    bool all_matched = false;
    std::vector<ReconcileEntry> entries;
    std::vector<int> unmatched_members;
};

/// Compares the transversal against the printed fixture modulo adjustment
/// of the sigma_8 coefficient (equivalently, a free ninth coordinate).
ReconcileReport reconcile_fundamental_fixture(int i);

} // namespace e8cas

#endif
