#ifndef E8CAS_LATTICE_HPP
#define E8CAS_LATTICE_HPP

#include "e8cas/rat.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace e8cas {

/// A weight written in the nine-vector basis mu_1..mu_9 with pairing
/// kappa(mu_I, mu_J) = delta_IJ - 1/9. Since the mu_I sum to zero,
/// coordinates are only defined up to adding t*(1,...,1); the canonical
/// gauge fixes the ninth coordinate to 0.
struct MuVector {
    std::array<Rat, 9> c{};

    MuVector() = default;
    explicit MuVector(std::array<Rat, 9> coords) : c(std::move(coords)) {}

    Rat coord_sum() const;

    /// Gauge with c[8] == 0.
    MuVector canonical() const;
    /// Gauge with zero coordinate sum.
    MuVector trace_zero() const;

    MuVector& operator+=(const MuVector& o);
    MuVector& operator-=(const MuVector& o);
    friend MuVector operator+(MuVector a, const MuVector& b) { return a += b; }
    friend MuVector operator-(MuVector a, const MuVector& b) { return a -= b; }
    friend MuVector operator*(const Rat& s, const MuVector& v);

    /// Equality of weights (gauge-independent).
    friend bool operator==(const MuVector& a, const MuVector& b);
    friend bool operator!=(const MuVector& a, const MuVector& b) { return !(a == b); }
};

/// Dominant E8 weight as nonnegative Dynkin labels r_1..r_8.
struct DominantE8 {
    std::array<int64_t, 8> r{};

    DominantE8() = default;
    explicit DominantE8(std::array<int64_t, 8> labels);

    static DominantE8 fundamental(int i); // 1-based
    static DominantE8 zero() { return DominantE8{}; }

    bool is_zero() const;
    friend bool operator==(const DominantE8& a, const DominantE8& b) { return a.r == b.r; }
    friend bool operator!=(const DominantE8& a, const DominantE8& b) { return a.r != b.r; }
    friend bool operator<(const DominantE8& a, const DominantE8& b) { return a.r < b.r; }
    std::string to_string() const;
};

/// Dominant A8 weight: q_1 >= q_2 >= ... >= q_8 >= 0 (ninth coordinate 0).
struct DominantA8 {
    std::array<Rat, 8> q{};

    DominantA8() = default;
    explicit DominantA8(std::array<Rat, 8> values);

    MuVector as_mu() const;
    Rat norm2() const;
    bool is_zero() const;
    friend bool operator==(const DominantA8& a, const DominantA8& b) { return a.q == b.q; }
    friend bool operator!=(const DominantA8& a, const DominantA8& b) { return !(a.q == b.q); }
    friend bool operator<(const DominantA8& a, const DominantA8& b);
    std::string to_string() const;
};

/// kappa-pairing: sum u_I v_I - (sum u)(sum v)/9. Symmetric, bilinear,
/// invariant under gauge shifts of either argument.
Rat mu_inner(const MuVector& u, const MuVector& v);

/// sigma_i = mu_1 + ... + mu_i, the A8 fundamental weights (i in 1..8).
MuVector sigma_to_mu(int i);

/// Embeds a dominant E8 weight via the fundamental-weight dictionary
/// lambda_1 = sigma_1 + sigma_8, ..., lambda_8 = 3 sigma_8.
MuVector e8_weight_to_mu(const DominantE8& r);

/// The E8 simple roots beta_1..beta_8, derived as the unique length-2
/// solutions of mu_inner(lambda_i, beta_j) = delta_ij and validated
/// against the E8 Cartan matrix. Fails loudly if the defining system is
/// singular or the validation does not hold.
const std::array<MuVector, 8>& e8_simple_roots();

/// Cartan matrix A_ij = mu_inner(beta_i, beta_j) of the derived roots.
const std::array<std::array<int, 8>, 8>& e8_cartan_matrix();

/// Inverse of the Cartan matrix; integral for E8 (determinant 1).
const std::array<std::array<int64_t, 8>, 8>& e8_cartan_inverse();

/// The nine affine coordinates theta_1..theta_9 of r + (Weyl vector) in
/// the trace-zero gauge. Their sum vanishes identically.
std::array<Rat, 9> theta_vector(const DominantE8& r);

/// Weyl vector rho = sum of the fundamental weights (all labels 1).
DominantE8 weyl_vector();

} // namespace e8cas

#endif
