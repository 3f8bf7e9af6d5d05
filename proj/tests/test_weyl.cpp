#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e8cas/rng.hpp"
#include "e8cas/weyl.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <set>

using namespace e8cas;

namespace {

DominantA8 a8(std::array<long, 8> v) {
    std::array<Rat, 8> q;
    for (int i = 0; i < 8; ++i) q[i] = Rat(v[i]);
    return DominantA8(q);
}

DominantE8 e8w(std::array<int64_t, 8> r) { return DominantE8(r); }

} // namespace

TEST_CASE("dominantization and orbit sizes by permutation count") {
    auto [q3, n3] = a8_dominantize(sigma_to_mu(3));
    CHECK(q3 == a8({1, 1, 1, 0, 0, 0, 0, 0}));
    CHECK(n3 == 84);

    auto [q0, n0] = a8_dominantize(MuVector{});
    CHECK(q0.is_zero());
    CHECK(n0 == 1);

    auto [q1, n1] = a8_dominantize(e8_weight_to_mu(DominantE8::fundamental(1)));
    CHECK(q1 == a8({2, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(n1 == 72);

    // arbitrary gauge and order
    MuVector w;
    w.c = {Rat(5), Rat(3), Rat(5), Rat(3), Rat(3), Rat(3), Rat(3), Rat(3), Rat(3)};
    auto [qw, nw] = a8_dominantize(w);
    CHECK(qw == a8({2, 2, 0, 0, 0, 0, 0, 0}));
    CHECK(nw == 36);
}

TEST_CASE("reflection in a root") {
    const auto& betas = e8_simple_roots();
    MuVector l1 = e8_weight_to_mu(DominantE8::fundamental(1));

    MuVector expect = l1;
    expect -= betas[0];
    CHECK(reflect(l1, betas[0]) == expect);

    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        MuVector w;
        for (auto& c : w.c) c = random_rat(rng, 12, 7);
        const MuVector& beta = betas[rng.below(8)];
        MuVector once = reflect(w, beta);
        CHECK(mu_inner(once, once) == mu_inner(w, w));
        CHECK(reflect(once, beta) == w);
    }
    CHECK(reflect(MuVector{}, betas[3]) == MuVector{});

    MuVector not_root = sigma_to_mu(1);
    CHECK_THROWS_AS(reflect(l1, not_root), std::invalid_argument);
}

TEST_CASE("transversal of the root orbit") {
    const SigmaSet& s = sigma_set_transversal(DominantE8::fundamental(1));
    REQUIRE(s.members.size() == 3);
    CHECK(s.e8_orbit_size == 240);

    std::map<DominantA8, Int> got;
    for (const auto& m : s.members) got[m.q] = m.a8_orbit_size;
    CHECK(got.at(a8({2, 1, 1, 1, 1, 1, 1, 1})) == 72);
    CHECK(got.at(a8({1, 1, 1, 0, 0, 0, 0, 0})) == 84);
    CHECK(got.at(a8({1, 1, 1, 1, 1, 1, 0, 0})) == 84);
}

TEST_CASE("fundamental set member counts") {
    const size_t expected[8] = {3, 7, 15, 27, 35, 17, 5, 11};
    for (int i = 1; i <= 8; ++i) {
        const SigmaSet& s = sigma_set_transversal(DominantE8::fundamental(i));
        CHECK(s.members.size() == expected[i - 1]);
        Int total(0);
        for (const auto& m : s.members) {
            total += m.a8_orbit_size;
            CHECK(m.q.norm2() == s.members.front().q.norm2());
        }
        CHECK(total == s.e8_orbit_size);
    }
    const SigmaSet& mixed = sigma_set_transversal(e8w({1, 0, 0, 0, 0, 0, 1, 0}));
    CHECK(mixed.members.size() == 13);
}

TEST_CASE("members share the squared length of the source") {
    SplitMix64 rng(17);
    int done = 0;
    while (done < 50) {
        std::array<int64_t, 8> labels{};
        // keep stabilizers large so the orbits stay small
        labels[rng.below(8)] = 1 + static_cast<int64_t>(rng.below(2));
        labels[rng.below(8)] += 1;
        DominantE8 w(labels);
        const SigmaSet& s = sigma_set_transversal(w);
        Rat len = mu_inner(e8_weight_to_mu(w), e8_weight_to_mu(w));
        for (const auto& m : s.members) CHECK(m.q.norm2() == len);
        ++done;
    }
}

TEST_CASE("orbit sizes from the stabilizer formula") {
    CHECK(weyl_group_order_e8() == 696729600);
    CHECK(e8_orbit_size(DominantE8::fundamental(1)) == 240);
    CHECK(e8_orbit_size(DominantE8::zero()) == 1);
    CHECK(e8_orbit_size(DominantE8::fundamental(7)) == 2160);

    // cross-check against direct enumeration where it is cheap
    for (int i : {1, 2, 3, 7, 8}) {
        DominantE8 w = DominantE8::fundamental(i);
        CHECK(e8_orbit_size(w) == e8_orbit_size_by_enumeration(w));
    }
    CHECK(e8_orbit_size(e8w({1, 0, 0, 0, 0, 0, 1, 0})) ==
          e8_orbit_size_by_enumeration(e8w({1, 0, 0, 0, 0, 0, 1, 0})));

    CHECK_THROWS_AS(e8_orbit_size_by_enumeration(DominantE8::fundamental(5), 1000),
                    OrbitTooLargeError);
}

TEST_CASE("transversal does not depend on the seed root") {
    // conjugate the default seed root by a coordinate permutation
    MuVector conj;
    conj.c = {Rat(1), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)};
    for (int i : {1, 2, 7}) {
        DominantE8 w = DominantE8::fundamental(i);
        SigmaSet a = sigma_set_transversal_with_root(w, conj);
        const SigmaSet& b = sigma_set_transversal(w);
        REQUIRE(a.members.size() == b.members.size());
        for (size_t k = 0; k < a.members.size(); ++k) {
            CHECK(a.members[k].q == b.members[k].q);
            CHECK(a.members[k].a8_orbit_size == b.members[k].a8_orbit_size);
        }
    }
    MuVector a8root;
    a8root.c[0] = Rat(1);
    a8root.c[3] = Rat(-1);
    CHECK_THROWS_AS(sigma_set_transversal_with_root(DominantE8::fundamental(1), a8root),
                    std::invalid_argument);
}

TEST_CASE("sum-set construction agrees with the transversal") {
    SumsetDiagnostics diag;
    SigmaSet s1 = sigma_set_sumset(DominantE8::fundamental(1), &diag);
    CHECK(s1.members.size() == 3);
    CHECK(diag.agrees_with_transversal);

    SigmaSet s17 = sigma_set_sumset(e8w({1, 0, 0, 0, 0, 0, 1, 0}), &diag);
    CHECK(s17.members.size() == 13);
    CHECK(diag.agrees_with_transversal);

    SigmaSet s88 = sigma_set_sumset(e8w({0, 0, 0, 0, 0, 0, 0, 2}), &diag);
    CHECK(diag.agrees_with_transversal);
    const SigmaSet& t88 = sigma_set_transversal(e8w({0, 0, 0, 0, 0, 0, 0, 2}));
    REQUIRE(s88.members.size() == t88.members.size());
    for (size_t k = 0; k < s88.members.size(); ++k) CHECK(s88.members[k].q == t88.members[k].q);

    for (int i = 2; i <= 8; ++i) {
        sigma_set_sumset(DominantE8::fundamental(i), &diag);
        CHECK(diag.agrees_with_transversal);
    }
}

TEST_CASE("the root orbit enumerates the root system") {
    const SigmaSet& s = sigma_set_transversal(DominantE8::fundamental(1));
    std::set<std::array<std::string, 9>> roots;
    std::map<DominantA8, int> per_member;
    for (const auto& m : s.members) {
        auto orbit = enumerate_a8_orbit(m.q);
        per_member[m.q] = static_cast<int>(orbit.size());
        for (const auto& w : orbit) {
            CHECK(mu_inner(w, w) == Rat(2));
            std::array<std::string, 9> key;
            MuVector tz = w.trace_zero();
            for (int i = 0; i < 9; ++i) key[i] = tz.c[i].to_string();
            roots.insert(key);
        }
    }
    CHECK(roots.size() == 240);
    CHECK(per_member.at(a8({2, 1, 1, 1, 1, 1, 1, 1})) == 72);
    CHECK(per_member.at(a8({1, 1, 1, 0, 0, 0, 0, 0})) == 84);
    CHECK(per_member.at(a8({1, 1, 1, 1, 1, 1, 0, 0})) == 84);
    // closure under negation
    for (const auto& key : roots) {
        std::array<std::string, 9> neg;
        for (int i = 0; i < 9; ++i) {
            Rat v = Rat::from_string(key[i]);
            neg[i] = (-v).to_string();
        }
        CHECK(roots.count(neg) == 1);
    }
}

TEST_CASE("printed fundamental sets reconcile with the transversal") {
    const size_t expected[8] = {3, 7, 15, 27, 35, 17, 5, 11};
    for (int i = 1; i <= 8; ++i) CHECK(fundamental_set_fixture(i).entries.size() == expected[i - 1]);

    ReconcileReport r2 = reconcile_fundamental_fixture(2);
    CHECK(r2.counts_agree);
    CHECK(r2.all_matched);

    ReconcileReport r5 = reconcile_fundamental_fixture(5);
    CHECK(r5.fixture_count == 35);
    CHECK(r5.transversal_count == 35);
    CHECK(r5.counts_agree);

    // the first printed set lists sigma_8 where the orbit decomposition
    // has sigma_6; the mismatch must be flagged, not patched
    ReconcileReport r1 = reconcile_fundamental_fixture(1);
    CHECK(r1.counts_agree);
    CHECK_FALSE(r1.all_matched);
    CHECK_FALSE(r1.entries[2].matched);
    CHECK(r1.unmatched_members.size() == 1);
}

TEST_CASE("sigma set serialization") {
    const SigmaSet& s = sigma_set_transversal(DominantE8::fundamental(1));
    auto j = nlohmann::json::parse(s.to_json_string());
    CHECK(j["source"] == nlohmann::json::array({1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(j["e8_orbit_size"] == "240");
    REQUIRE(j["members"].size() == 3);
    for (const auto& m : j["members"]) {
        CHECK(m["q"].size() == 8);
        CHECK(m["q"][0].is_string());
        CHECK(m["orbit_size"].is_string());
    }
}
