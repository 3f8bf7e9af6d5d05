#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e8cas/lattice.hpp"
#include "e8cas/rng.hpp"

using namespace e8cas;

namespace {

MuVector mu_basis(int i) {
    MuVector v;
    v.c[i] = Rat(1);
    return v;
}

MuVector random_vector(SplitMix64& rng) {
    MuVector v;
    for (auto& c : v.c) c = random_rat(rng, 20, 9);
    return v;
}

} // namespace

TEST_CASE("pairing of the basis vectors") {
    CHECK(mu_inner(mu_basis(0), mu_basis(0)) == Rat(8, 9));
    CHECK(mu_inner(mu_basis(0), mu_basis(1)) == Rat(-1, 9));
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            CHECK(mu_inner(mu_basis(i), mu_basis(j)) == (i == j ? Rat(8, 9) : Rat(-1, 9)));
}

TEST_CASE("pairing is symmetric, bilinear and gauge invariant") {
    SplitMix64 rng(7);
    MuVector ones;
    for (auto& c : ones.c) c = Rat(1);
    for (int trial = 0; trial < 25; ++trial) {
        MuVector u = random_vector(rng), v = random_vector(rng), w = random_vector(rng);
        Rat a = random_rat(rng, 9, 5), b = random_rat(rng, 9, 5);
        CHECK(mu_inner(u, v) == mu_inner(v, u));
        MuVector lin = a * u;
        lin += b * v;
        CHECK(mu_inner(lin, w) == a * mu_inner(u, w) + b * mu_inner(v, w));
        MuVector shifted = u;
        shifted += a * ones;
        CHECK(mu_inner(shifted, v) == mu_inner(u, v));
    }
}

TEST_CASE("pairing is invariant under simultaneous coordinate permutation") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        MuVector u = random_vector(rng), v = random_vector(rng);
        Rat base = mu_inner(u, v);
        std::array<int, 9> perm{};
        for (int i = 0; i < 9; ++i) perm[i] = i;
        for (int i = 8; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<uint64_t>(i + 1))]);
        MuVector up, vp;
        for (int i = 0; i < 9; ++i) {
            up.c[perm[i]] = u.c[i];
            vp.c[perm[i]] = v.c[i];
        }
        CHECK(mu_inner(up, vp) == base);
    }
}

TEST_CASE("fundamental A8 weights") {
    MuVector s1 = sigma_to_mu(1);
    for (int i = 0; i < 9; ++i) CHECK(s1.c[i] == Rat(i == 0 ? 1 : 0));
    MuVector s8 = sigma_to_mu(8);
    for (int i = 0; i < 9; ++i) CHECK(s8.c[i] == Rat(i < 8 ? 1 : 0));
    MuVector s6 = sigma_to_mu(6);
    for (int i = 0; i < 9; ++i) CHECK(s6.c[i] == Rat(i < 6 ? 1 : 0));
    MuVector s3 = sigma_to_mu(3);
    CHECK(mu_inner(s3, s3) == Rat(2));
    CHECK_THROWS_AS(sigma_to_mu(0), std::out_of_range);
    CHECK_THROWS_AS(sigma_to_mu(9), std::out_of_range);
}

TEST_CASE("embedding of E8 fundamental weights") {
    MuVector l1 = e8_weight_to_mu(DominantE8::fundamental(1));
    std::array<long, 9> expect1 = {2, 1, 1, 1, 1, 1, 1, 1, 0};
    for (int i = 0; i < 9; ++i) CHECK(l1.c[i] == Rat(expect1[i]));
    CHECK(mu_inner(l1, l1) == Rat(2));

    MuVector l8 = e8_weight_to_mu(DominantE8::fundamental(8));
    for (int i = 0; i < 9; ++i) CHECK(l8.c[i] == Rat(i < 8 ? 3 : 0));

    MuVector zero = e8_weight_to_mu(DominantE8::zero());
    for (int i = 0; i < 9; ++i) CHECK(zero.c[i] == Rat(0));
}

TEST_CASE("derived simple roots") {
    const auto& betas = e8_simple_roots();

    // beta_1..beta_7 are consecutive basis differences
    for (int j = 0; j < 7; ++j) {
        MuVector expect = mu_basis(j);
        expect -= mu_basis(j + 1);
        CHECK(betas[j] == expect);
    }

    // beta_8 in the trace-zero gauge
    MuVector b8 = betas[7].trace_zero();
    std::array<Rat, 9> expect8 = {Rat(-1, 3), Rat(-1, 3), Rat(-1, 3), Rat(-1, 3), Rat(-1, 3),
                                  Rat(2, 3),  Rat(2, 3),  Rat(2, 3),  Rat(-1, 3)};
    for (int i = 0; i < 9; ++i) CHECK(b8.c[i] == expect8[i]);

    // duality with the fundamental weights
    for (int i = 0; i < 8; ++i) {
        MuVector li = e8_weight_to_mu(DominantE8::fundamental(i + 1));
        for (int j = 0; j < 8; ++j) CHECK(mu_inner(li, betas[j]) == Rat(i == j ? 1 : 0));
    }

    // diagram shape: a chain 1-2-...-7 with node 8 attached to node 5
    const auto& cartan = e8_cartan_matrix();
    for (int i = 0; i < 8; ++i) CHECK(cartan[i][i] == 2);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) CHECK(cartan[i][j] == (j == i + 1 ? -1 : 0));
    for (int j = 0; j < 7; ++j) CHECK(cartan[7][j] == (j == 4 ? -1 : 0));
}

TEST_CASE("theta coordinates") {
    auto th0 = theta_vector(DominantE8::zero());
    std::array<long, 9> nums = {19, 16, 13, 10, 7, 4, 1, -2, -68};
    Rat sum, sumsq;
    for (int i = 0; i < 9; ++i) {
        CHECK(th0[i] == Rat(nums[i], 3L));
        sum += th0[i];
        sumsq += th0[i] * th0[i];
    }
    CHECK(sum == Rat(0));
    CHECK(sumsq == Rat(620));

    // theta is the weight plus the Weyl vector, in the trace-zero gauge
    SplitMix64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<int64_t, 8> labels{};
        for (auto& l : labels) l = static_cast<int64_t>(rng.below(5));
        DominantE8 r(labels);
        auto th = theta_vector(r);
        MuVector tz = e8_weight_to_mu(r).trace_zero();
        Rat s;
        for (int i = 0; i < 9; ++i) {
            CHECK(th[i] - th0[i] == tz.c[i]);
            s += th[i];
        }
        CHECK(s == Rat(0));
    }

    auto th1 = theta_vector(DominantE8::fundamental(1));
    std::array<long, 9> shift = {1, 0, 0, 0, 0, 0, 0, 0, -1};
    for (int i = 0; i < 9; ++i) CHECK(th1[i] - th0[i] == Rat(shift[i]));
}

TEST_CASE("weyl vector is the sum of the fundamental weights") {
    MuVector rho = e8_weight_to_mu(weyl_vector());
    MuVector sum;
    for (int i = 1; i <= 8; ++i) sum += e8_weight_to_mu(DominantE8::fundamental(i));
    CHECK(rho == sum);
    // trace-zero form reproduces the constant theta coordinates
    MuVector tz = rho.trace_zero();
    auto th0 = theta_vector(DominantE8::zero());
    for (int i = 0; i < 9; ++i) CHECK(tz.c[i] == th0[i]);
}

TEST_CASE("rational scalar basics") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(6, 4).num() == 3);
    CHECK(Rat(6, 4).den() == 2);
    CHECK(Rat(-6, 4).to_string() == "-3/2");
    CHECK(Rat::from_string("-3/2") == Rat(-3, 2));
    CHECK(Rat::from_string("42") == Rat(42));
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(3, 2).to_int(), std::domain_error);
    CHECK(Rat(10, 5).to_int() == 2);
}
