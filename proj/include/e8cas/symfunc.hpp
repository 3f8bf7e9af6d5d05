#ifndef E8CAS_SYMFUNC_HPP
#define E8CAS_SYMFUNC_HPP

#include "e8cas/lattice.hpp"
#include "e8cas/rat.hpp"
#include "e8cas/rng.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace e8cas {

/// Integer partition, parts weakly decreasing and positive.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    int weight() const;
    size_t length() const { return parts.size(); }
    /// prod over repeated part values of multiplicity!
    Int symmetry_factor() const;
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

private:
    void validate() const;
};

/// Formal linear combination of products of power sums p_k. Terms are
/// keyed by the multiset of indices (descending); the empty key is the
/// constant term.
class SymExpr {
public:
    using Key = std::vector<int>;

    SymExpr() = default;
    static SymExpr constant(const Rat& c);
    static SymExpr power_sum(int k);

    void add_term(Key k, const Rat& coeff);
    Rat coeff(const Key& k) const;
    size_t monomial_count() const { return terms_.size(); }
    const std::map<Key, Rat>& terms() const { return terms_; }

    SymExpr& operator+=(const SymExpr& o);
    SymExpr& operator-=(const SymExpr& o);
    SymExpr& operator*=(const Rat& s);
    friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
    friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
    friend SymExpr operator*(const Rat& s, SymExpr e) { return e *= s; }
    SymExpr operator*(const SymExpr& o) const;

    /// Evaluates with p_k taken from power_sums[k] (index 0 unused).
    Rat eval(const std::vector<Rat>& power_sums) const;

    int max_index() const;

private:
    std::map<Key, Rat> terms_;
};

/// Nine exact coordinates with zero sum; the formal evaluation points of
/// orbit characters.
struct EvalPoint {
    std::array<Rat, 9> x{};

    EvalPoint() = default;
    /// Last coordinate balances the sum to zero.
    static EvalPoint from_free(const std::array<Rat, 8>& free);
    /// All nine coordinates; must sum to zero.
    static EvalPoint from_all(const std::array<Rat, 9>& coords);
    static EvalPoint random(SplitMix64& rng, long max_num = 999, long max_den = 999);

    /// p_1..p_maxk of the coordinates (p_1 = 0 by construction).
    std::vector<Rat> power_sums(int maxk) const;
};

/// Number of partitions of M into at most 9 parts, every part in {2,...,9}.
int64_t count_partitions_2to9(int M);

/// Expansion of the augmented monomial sum over pairwise-distinct ORDERED
/// index tuples of prod x_{I_j}^{nu_j} into power sums (inclusion-
/// exclusion over set partitions of the positions). Valid in any number
/// of variables; at most 9 parts. Cached.
const SymExpr& aug_monomial_to_power_sums(const Partition& nu);

/// The same augmented monomial evaluated on the eight values q_1..q_8
/// (ordered-tuple convention, at most 8 parts).
Rat q_generator(const Partition& nu, const DominantA8& q);

/// Augmented monomial evaluated at an evaluation point (9 variables).
Rat aug_monomial_value(const Partition& nu, const EvalPoint& h);

/// The reduction identity expressing p_M in lower power sums, transcribed
/// exactly for M in {10, 11, 12, 14} (the prefactors are 1/8!, 1/9!,
/// 1/(2*9!), 1/(24*9!)).
const SymExpr& duality_expr(int M);

struct DualityReport {
    int M = 0;
    std::string mode;       // "exact" or "points"
    bool pass = false;
    size_t monomials = 0;   // in duality_expr(M)
    int points_checked = 0; // points mode only
};

/// Checks p_M - duality_expr(M) == 0 on the zero-sum hyperplane, either
/// by exact polynomial expansion in x_1..x_8 or at seeded random points.
DualityReport verify_duality(int M, bool exact, int npoints = 20, uint64_t seed = 0);

} // namespace e8cas

#endif
