#ifndef E8CAS_ORBITCHAR_HPP
#define E8CAS_ORBITCHAR_HPP

#include "e8cas/symfunc.hpp"
#include "e8cas/weyl.hpp"

#include <map>
#include <vector>

namespace e8cas {

/// One row of an orbit-character table: net integer coefficient times
/// Q(q_part) * mu(mu_part), both in the unordered distinct-support
/// convention (the ordered-tuple generators divided by the symmetry
/// factor of the partition).
struct OmegaRow {
    Int coeff;
    Partition q_part;
    Partition mu_part;
};

struct OmegaTable {
    int degree = 0;
    std::vector<OmegaRow> rows; // sorted by q_part, descending lexicographic

    friend bool operator==(const OmegaTable& a, const OmegaTable& b);
};

/// Exact transcription of the published tables for degrees 8, 12, 14
/// with the block prefactors multiplied through.
const OmegaTable& omega_fixture(int M);

/// Derivation from the multinomial expansion of the permutation sum:
/// coeff(nu) = M! * (9-len)! * prod(mult!) / prod(nu_i!), one row for
/// every partition of M into at most 8 parts. Reproduces the fixtures.
OmegaTable derive_omega(int M);

/// Degree-M character of one A8 Weyl orbit at an evaluation point, via
/// the coefficient table: (1/9!) * dim(orbit) * sum of rows.
Rat char_orbit(int M, const DominantA8& sigma, const EvalPoint& h);

/// Brute-force enumeration oracle (guarded): sums <w, h>^M over all
/// distinct permutations of the orbit representative.
Rat char_orbit_oracle(int M, const DominantA8& sigma, const EvalPoint& h,
                      size_t guard = 1000000);

/// One enumeration pass for several degrees at once.
std::map<int, Rat> char_orbit_oracle_multi(const std::vector<int>& degrees,
                                           const DominantA8& sigma, const EvalPoint& h,
                                           size_t guard = 1000000);

/// Degree-M character of an E8 Weyl orbit: sum of char_orbit over the
/// members of its Sigma set.
Rat char_e8_orbit(int M, const DominantE8& lambda, const EvalPoint& h);

/// Table machinery bound to one degree and one evaluation point, so that
/// repeated orbit evaluations share the mu-side row values.
class OrbitCharContext {
public:
    OrbitCharContext(int M, const EvalPoint& h);

    int degree() const { return degree_; }
    Rat char_orbit(const DominantA8& sigma) const;
    Rat char_e8_orbit(const DominantE8& lambda) const;

private:
    int degree_;
    const OmegaTable* table_;
    std::vector<Rat> mu_values_; // per row, unordered convention
};

} // namespace e8cas

#endif
