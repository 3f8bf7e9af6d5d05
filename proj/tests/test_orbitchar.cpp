#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e8cas/orbitchar.hpp"

using namespace e8cas;

namespace {

DominantA8 a8(std::array<long, 8> v) {
    std::array<Rat, 8> q;
    for (int i = 0; i < 8; ++i) q[i] = Rat(v[i]);
    return DominantA8(q);
}

const OmegaRow* find_row(const OmegaTable& t, const Partition& p) {
    for (const auto& row : t.rows)
        if (row.q_part == p) return &row;
    return nullptr;
}

} // namespace

TEST_CASE("fixture tables carry the published net coefficients") {
    const OmegaTable& t8 = omega_fixture(8);
    CHECK(t8.rows.size() == 22);
    CHECK(find_row(t8, Partition{8})->coeff == 40320);
    CHECK(find_row(t8, Partition{5, 3})->coeff == Int(20160) * 14);
    CHECK(find_row(t8, Partition{4, 4})->coeff == Int(20160) * 35);
    CHECK(find_row(t8, Partition{1, 1, 1, 1, 1, 1, 1, 1})->coeff == Int("1625702400"));

    const OmegaTable& t12 = omega_fixture(12);
    CHECK(t12.rows.size() == 70);
    CHECK(find_row(t12, Partition{6, 6})->coeff == Int(5040) * 1848);
    CHECK(find_row(t12, Partition{2, 2, 2, 2, 2, 2})->coeff == Int(570240) * 56700);

    const OmegaTable& t14 = omega_fixture(14);
    CHECK(t14.rows.size() == 116);
    CHECK(find_row(t14, Partition{7, 7})->coeff == Int(5040) * 6864);
    CHECK(find_row(t14, Partition{2, 2, 2, 2, 2, 2, 2})->coeff == Int(34594560) * 198450);

    CHECK_THROWS_AS(omega_fixture(10), std::invalid_argument);
}

TEST_CASE("derived tables reproduce the fixtures row for row") {
    for (int M : {8, 12, 14}) {
        OmegaTable derived = derive_omega(M);
        const OmegaTable& fx = omega_fixture(M);
        REQUIRE(derived.rows.size() == fx.rows.size());
        for (size_t i = 0; i < fx.rows.size(); ++i) {
            CHECK(derived.rows[i].q_part == fx.rows[i].q_part);
            CHECK(derived.rows[i].mu_part == fx.rows[i].mu_part);
            CHECK(derived.rows[i].coeff == fx.rows[i].coeff);
        }
        CHECK(derived == fx);
    }
}

TEST_CASE("derived table at degree 2") {
    OmegaTable t = derive_omega(2);
    REQUIRE(t.rows.size() == 2);
    CHECK(find_row(t, Partition{2})->coeff == 40320);
    CHECK(find_row(t, Partition{1, 1})->coeff == 20160);
    CHECK_THROWS_AS(derive_omega(0), std::invalid_argument);
    CHECK_THROWS_AS(derive_omega(15), std::invalid_argument);
}

TEST_CASE("single-box orbit gives the plain power sum") {
    SplitMix64 rng(11);
    for (int i = 0; i < 5; ++i) {
        EvalPoint h = EvalPoint::random(rng, 30, 7);
        CHECK(char_orbit(2, a8({1, 0, 0, 0, 0, 0, 0, 0}), h) == h.power_sums(2)[2]);
        CHECK(char_orbit(1, a8({1, 0, 0, 0, 0, 0, 0, 0}), h) == Rat(0));
    }
}

TEST_CASE("zero orbit characters vanish") {
    SplitMix64 rng(12);
    EvalPoint h = EvalPoint::random(rng);
    for (int M : {1, 2, 8, 12, 14}) CHECK(char_orbit(M, DominantA8{}, h) == Rat(0));
}

TEST_CASE("table path equals the enumeration oracle") {
    SplitMix64 rng(13);
    std::vector<DominantA8> orbits = {
        a8({1, 1, 1, 0, 0, 0, 0, 0}),       // 84 elements
        a8({2, 1, 1, 1, 1, 1, 1, 1}),       // 72
        a8({1, 1, 1, 1, 1, 1, 0, 0}),       // 84
        a8({3, 3, 2, 2, 2, 2, 2, 2}),       // 252
        a8({2, 2, 1, 1, 0, 0, 0, 0}),       // 3780
    };
    for (const auto& sigma : orbits) {
        for (int trial = 0; trial < 2; ++trial) {
            EvalPoint h = EvalPoint::random(rng, 9, 4);
            auto oracle = char_orbit_oracle_multi({2, 8, 12, 14}, sigma, h);
            for (int M : {2, 8, 12, 14}) CHECK(char_orbit(M, sigma, h) == oracle.at(M));
        }
    }
}

TEST_CASE("oracle guard") {
    SplitMix64 rng(14);
    EvalPoint h = EvalPoint::random(rng);
    CHECK_THROWS_AS(char_orbit_oracle(2, a8({8, 7, 6, 5, 4, 3, 2, 1}), h, 1000), OrbitTooLargeError);
}

TEST_CASE("orbit character of the root system") {
    SplitMix64 rng(15);
    DominantE8 l1 = DominantE8::fundamental(1);
    for (int trial = 0; trial < 3; ++trial) {
        EvalPoint h = EvalPoint::random(rng, 20, 7);
        // direct sum over the 240 roots
        Rat direct;
        for (const auto& m : sigma_set_transversal(l1).members)
            for (const auto& w : enumerate_a8_orbit(m.q)) {
                Rat p = mu_inner(w, MuVector{h.x});
                direct += p * p;
            }
        Rat via_table = char_e8_orbit(2, l1, h);
        CHECK(via_table == direct);
        // trace-form proportionality with Coxeter number factor
        MuVector hv{h.x};
        CHECK(via_table == Rat(60) * mu_inner(hv, hv));
    }
}

TEST_CASE("zero weight orbit of E8") {
    SplitMix64 rng(16);
    EvalPoint h = EvalPoint::random(rng);
    for (int M : {1, 2, 8}) CHECK(char_e8_orbit(M, DominantE8::zero(), h) == Rat(0));
}

TEST_CASE("homogeneity in the evaluation point") {
    SplitMix64 rng(17);
    DominantE8 l7 = DominantE8::fundamental(7);
    EvalPoint h = EvalPoint::random(rng, 9, 4);
    Rat t(3, 7);
    EvalPoint th;
    for (int i = 0; i < 9; ++i) th.x[i] = t * h.x[i];
    for (int M : {2, 8, 12}) {
        CHECK(char_e8_orbit(M, l7, th) ==
              t.pow(static_cast<unsigned long>(M)) * char_e8_orbit(M, l7, h));
    }
}

TEST_CASE("invariance under coordinate permutations of the point") {
    SplitMix64 rng(18);
    DominantE8 l8 = DominantE8::fundamental(8);
    for (int trial = 0; trial < 10; ++trial) {
        EvalPoint h = EvalPoint::random(rng, 9, 4);
        Rat base = char_e8_orbit(8, l8, h);
        for (int p = 0; p < 5; ++p) {
            EvalPoint hp = h;
            std::array<int, 9> perm{};
            for (int i = 0; i < 9; ++i) perm[i] = i;
            for (int i = 8; i > 0; --i)
                std::swap(perm[i], perm[rng.below(static_cast<uint64_t>(i + 1))]);
            for (int i = 0; i < 9; ++i) hp.x[perm[i]] = h.x[i];
            CHECK(char_e8_orbit(8, l8, hp) == base);
        }
    }
}

TEST_CASE("shared context matches one-shot evaluation") {
    SplitMix64 rng(19);
    EvalPoint h = EvalPoint::random(rng, 9, 4);
    OrbitCharContext ctx(8, h);
    DominantE8 l7 = DominantE8::fundamental(7);
    CHECK(ctx.char_e8_orbit(l7) == char_e8_orbit(8, l7, h));
    CHECK(ctx.char_orbit(a8({1, 1, 1, 0, 0, 0, 0, 0})) ==
          char_orbit(8, a8({1, 1, 1, 0, 0, 0, 0, 0}), h));
}
