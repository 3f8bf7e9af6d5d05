#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e8cas/casimir.hpp"
#include "e8cas/repsys.hpp"

#include <set>

using namespace e8cas;

namespace {

DominantE8 e8w(std::array<int64_t, 8> r) { return DominantE8(r); }

Int find_mult(const RepDecomposition& dec, const DominantE8& w) {
    for (const auto& o : dec.orbits)
        if (o.weight == w) return o.multiplicity;
    return Int(0);
}

} // namespace

TEST_CASE("positive roots") {
    const auto& roots = positive_roots();
    REQUIRE(roots.size() == 120);
    const auto& betas = e8_simple_roots();
    std::array<MuVector, 8> lambda;
    for (int i = 0; i < 8; ++i) lambda[i] = e8_weight_to_mu(DominantE8::fundamental(i + 1));

    std::set<std::array<std::string, 9>> seen;
    for (const auto& alpha : roots) {
        CHECK(mu_inner(alpha, alpha) == Rat(2));
        Rat height;
        for (int i = 0; i < 8; ++i) {
            Rat c = mu_inner(lambda[i], alpha);
            CHECK(c.is_integer());
            CHECK(c.sign() >= 0);
            height += c;
        }
        CHECK(height >= Rat(1));
        std::array<std::string, 9> key;
        MuVector tz = alpha.trace_zero();
        for (int i = 0; i < 9; ++i) key[i] = tz.c[i].to_string();
        seen.insert(key);
    }
    CHECK(seen.size() == 120);
    for (const auto& beta : betas) {
        std::array<std::string, 9> key;
        MuVector tz = beta.trace_zero();
        for (int i = 0; i < 9; ++i) key[i] = tz.c[i].to_string();
        CHECK(seen.count(key) == 1);
    }
}

TEST_CASE("dominant weights below a highest weight") {
    auto below0 = dominant_weights_below(DominantE8::zero());
    REQUIRE(below0.size() == 1);
    CHECK(below0[0] == DominantE8::zero());

    auto below1 = dominant_weights_below(DominantE8::fundamental(1));
    REQUIRE(below1.size() == 2);
    CHECK(below1[0] == DominantE8::fundamental(1));
    CHECK(below1[1] == DominantE8::zero());

    auto below7 = dominant_weights_below(DominantE8::fundamental(7));
    REQUIRE(below7.size() == 3);
    CHECK(below7[0] == DominantE8::fundamental(7));
    CHECK(below7[1] == DominantE8::fundamental(1));
    CHECK(below7[2] == DominantE8::zero());
}

TEST_CASE("adjoint multiplicities") {
    const RepDecomposition& adj = rep_decomposition(DominantE8::fundamental(1));
    CHECK(adj.dim == 248);
    CHECK(find_mult(adj, DominantE8::fundamental(1)) == 1);
    CHECK(find_mult(adj, DominantE8::zero()) == 8);
    CHECK(freudenthal_mult(DominantE8::fundamental(1), DominantE8::zero()) == 8);
    CHECK_THROWS_AS(freudenthal_mult(DominantE8::fundamental(1), DominantE8::fundamental(7)),
                    std::invalid_argument);
}

TEST_CASE("known dimensions") {
    CHECK(dim_rep(DominantE8::zero()) == 1);
    CHECK(dim_rep(DominantE8::fundamental(1)) == 248);
    CHECK(dim_rep(DominantE8::fundamental(7)) == 3875);
    CHECK(dim_rep_weyl(DominantE8::fundamental(7)) == 3875);
    CHECK(dim_rep(e8w({2, 0, 0, 0, 0, 0, 0, 0})) == 27000);
    CHECK(dim_rep(DominantE8::fundamental(2)) == 30380);
    CHECK(dim_rep(DominantE8::fundamental(8)) == 147250);
}

TEST_CASE("dimension paths agree for every small representation") {
    std::vector<DominantE8> sample = {
        DominantE8::zero(),          DominantE8::fundamental(1), DominantE8::fundamental(2),
        DominantE8::fundamental(3),  DominantE8::fundamental(6), DominantE8::fundamental(7),
        DominantE8::fundamental(8),  e8w({2, 0, 0, 0, 0, 0, 0, 0}),
        e8w({1, 0, 0, 0, 0, 0, 1, 0}), e8w({0, 0, 0, 0, 0, 0, 2, 0}),
        e8w({0, 0, 0, 0, 0, 0, 1, 1}), e8w({3, 0, 0, 0, 0, 0, 0, 0}),
        e8w({0, 0, 0, 0, 0, 0, 0, 2}), e8w({1, 1, 0, 0, 0, 0, 0, 0}),
        e8w({1, 0, 0, 0, 0, 0, 0, 1}),
    };
    for (const auto& w : sample) {
        if (dominant_weights_below(w).size() > 40) continue;
        // rep_decomposition itself fails loudly if the two paths disagree;
        // check the published value explicitly as well
        CHECK(rep_decomposition(w).dim == dim_rep_weyl(w));
    }
}

TEST_CASE("fundamental representation of dimension 3875") {
    const RepDecomposition& dec = rep_decomposition(DominantE8::fundamental(7));
    // 3875 = 2160 + 240 * m(lambda_1) + m(0)
    Int m1 = find_mult(dec, DominantE8::fundamental(1));
    Int m0 = find_mult(dec, DominantE8::zero());
    CHECK(Int(2160) + Int(240) * m1 + m0 == 3875);
    CHECK(m1 == 7);
    CHECK(m0 == 35);
}

TEST_CASE("representation characters") {
    SplitMix64 rng(31);
    DominantE8 l1 = DominantE8::fundamental(1);

    for (int trial = 0; trial < 10; ++trial) {
        EvalPoint h = EvalPoint::random(rng, 20, 7);
        CHECK(char_rep(1, l1, h) == Rat(0));
        MuVector hv{h.x};
        CHECK(char_rep(2, l1, h) == Rat(60) * mu_inner(hv, hv));
    }

    // degree-2 value relative to the trace form does not depend on the point
    DominantE8 l7 = DominantE8::fundamental(7);
    Rat ratio;
    for (int trial = 0; trial < 10; ++trial) {
        EvalPoint h = EvalPoint::random(rng, 20, 7);
        MuVector hv{h.x};
        Rat r = char_rep(2, l7, h) / mu_inner(hv, hv);
        if (trial == 0)
            ratio = r;
        else
            CHECK(r == ratio);
    }
}

TEST_CASE("degree-8 character equals the weight-by-weight sum") {
    SplitMix64 rng(32);
    DominantE8 l7 = DominantE8::fundamental(7);
    const RepDecomposition& dec = rep_decomposition(l7);
    for (int trial = 0; trial < 2; ++trial) {
        EvalPoint h = EvalPoint::random(rng, 9, 4);
        Rat direct;
        for (const auto& o : dec.orbits) {
            Rat orbit_sum;
            for (const auto& m : sigma_set_transversal(o.weight).members)
                for (const auto& w : enumerate_a8_orbit(m.q))
                    orbit_sum += mu_inner(w, MuVector{h.x}).pow(8);
            direct += Rat(o.multiplicity) * orbit_sum;
        }
        CHECK(char_rep(8, l7, h) == direct);
    }
}

TEST_CASE("multiplicity solver mechanics with the degree-2 model") {
    // closed-form degree-2 predictor: mean of <w,h>^2 over R(w) equals
    // (Theta(2,w) - 620) * p_2(h) / 248
    EigenvalueModel deg2;
    deg2.degree = 2;
    deg2.mean_power = [](const DominantE8& w, const EvalPoint& h) {
        return (theta(2, w) - Rat(620)) * h.power_sums(2)[2] / Rat(248);
    };

    SplitMix64 rng(33);
    std::vector<EvalPoint> pts;
    for (int i = 0; i < 3; ++i) pts.push_back(EvalPoint::random(rng, 9, 4));

    // adjoint: single unknown, determined, m(0) = 8
    auto res1 = solve_multiplicities(DominantE8::fundamental(1), {deg2}, pts);
    REQUIRE(res1.determined);
    CHECK(res1.multiplicities.size() == 2);
    CHECK(res1.multiplicities[1].multiplicity == 8);

    // two unknowns from one functional: reported as underdetermined
    auto res2 = solve_multiplicities(DominantE8::fundamental(7), {deg2}, pts);
    CHECK_FALSE(res2.determined);
    CHECK(res2.consistent);
    CHECK(res2.rank == 1);
    CHECK(res2.unknowns == 2);
    CHECK(res2.note.find("insufficient") != std::string::npos);

    // trivial representation
    auto res0 = solve_multiplicities(DominantE8::zero(), {deg2}, pts);
    CHECK(res0.determined);
    CHECK(res0.multiplicities.size() == 1);
}
