#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e8cas/symfunc.hpp"

using namespace e8cas;

namespace {

// Independent oracle: the augmented monomial as a literal sum over
// pairwise-distinct index tuples. Unordered supports are enumerated by
// assigning positions to each distinct part value; the ordered-tuple
// value is that sum times the symmetry factor.
Rat aug_monomial_brute(const Partition& nu, const EvalPoint& h) {
    if (nu.parts.empty()) return Rat(1);
    std::vector<std::pair<int, int>> groups; // (part value, multiplicity)
    for (int p : nu.parts) {
        if (!groups.empty() && groups.back().first == p)
            ++groups.back().second;
        else
            groups.emplace_back(p, 1);
    }
    // power table x_i^k
    std::array<std::array<Rat, 15>, 9> pow;
    for (int i = 0; i < 9; ++i) {
        pow[i][0] = Rat(1);
        for (int k = 1; k <= 14; ++k) pow[i][k] = pow[i][k - 1] * h.x[i];
    }
    Rat total;
    std::function<void(size_t, unsigned, const Rat&)> place = [&](size_t g, unsigned used,
                                                                  const Rat& partial) {
        if (g == groups.size()) {
            total += partial;
            return;
        }
        auto [value, mult] = groups[g];
        // choose `mult` unused positions, ascending, product accumulated
        std::function<void(int, int, unsigned, const Rat&)> choose =
            [&](int from, int left, unsigned taken, const Rat& prod) {
                if (left == 0) {
                    place(g + 1, used | taken, prod);
                    return;
                }
                for (int i = from; i <= 9 - left; ++i) {
                    if (used & (1u << i)) continue;
                    choose(i + 1, left - 1, taken | (1u << i), prod * pow[i][value]);
                }
            };
        choose(0, mult, 0u, partial);
    };
    place(0, 0u, Rat(1));
    return total * Rat(nu.symmetry_factor());
}

std::vector<Partition> partitions_up_to(int max_weight, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (static_cast<int>(cur.size()) <= max_len && !cur.empty()) out.push_back(Partition(cur));
        if (rem == 0 || static_cast<int>(cur.size()) == max_len) return;
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(max_weight, max_weight);
    return out;
}

} // namespace

TEST_CASE("restricted partition counts") {
    // the tabulated even and odd values
    const std::pair<int, long> expected[] = {
        {8, 7},    {10, 11},  {12, 19},  {14, 29},  {16, 44},  {18, 66},
        {20, 94},  {22, 131}, {24, 181}, {26, 239}, {28, 309}, {30, 390},
        {11, 13},  {13, 21},  {15, 34},  {17, 51},  {19, 75},  {21, 109},
        {23, 151}, {25, 204}, {27, 270}, {29, 344},
    };
    for (const auto& [m, count] : expected) CHECK(count_partitions_2to9(m) == count);
    CHECK(count_partitions_2to9(2) == 1);
    CHECK(count_partitions_2to9(0) == 1);
    CHECK(count_partitions_2to9(1) == 0);
    CHECK_THROWS_AS(count_partitions_2to9(-1), std::invalid_argument);
}

TEST_CASE("augmented monomial expansions in closed form") {
    const SymExpr& single = aug_monomial_to_power_sums(Partition{5});
    CHECK(single.monomial_count() == 1);
    CHECK(single.coeff({5}) == Rat(1));

    const SymExpr& pair = aug_monomial_to_power_sums(Partition{3, 2});
    CHECK(pair.monomial_count() == 2);
    CHECK(pair.coeff({3, 2}) == Rat(1));
    CHECK(pair.coeff({5}) == Rat(-1));

    const SymExpr& repeated = aug_monomial_to_power_sums(Partition{2, 2});
    CHECK(repeated.coeff({2, 2}) == Rat(1));
    CHECK(repeated.coeff({4}) == Rat(-1));

    CHECK_THROWS_AS(aug_monomial_to_power_sums(Partition{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
                    std::invalid_argument);
}

TEST_CASE("augmented monomials match the brute-force oracle") {
    SplitMix64 rng(2024);
    std::vector<EvalPoint> points;
    for (int i = 0; i < 25; ++i) points.push_back(EvalPoint::random(rng, 4, 3));

    for (const Partition& nu : partitions_up_to(14, 9)) {
        const SymExpr& expr = aug_monomial_to_power_sums(nu);
        for (const auto& h : points) {
            Rat via_expr = expr.eval(h.power_sums(expr.max_index()));
            CHECK(via_expr == aug_monomial_brute(nu, h));
        }
    }
}

TEST_CASE("q generators on dominant weights") {
    auto q_of = [](std::array<long, 8> v) {
        std::array<Rat, 8> q;
        for (int i = 0; i < 8; ++i) q[i] = Rat(v[i]);
        return DominantA8(q);
    };
    CHECK(q_generator(Partition{8}, q_of({1, 0, 0, 0, 0, 0, 0, 0})) == Rat(1));
    CHECK(q_generator(Partition{1, 1}, q_of({1, 1, 0, 0, 0, 0, 0, 0})) == Rat(2));
    CHECK(q_generator(Partition{4, 4}, q_of({2, 1, 0, 0, 0, 0, 0, 0})) == Rat(32));
    CHECK_THROWS_AS(q_generator(Partition{1, 1, 1, 1, 1, 1, 1, 1, 1}, q_of({1, 1, 1, 1, 1, 1, 1, 1})),
                    std::invalid_argument);
}

TEST_CASE("reduction identities: transcription") {
    // nonzero monomial counts computed by exact reduction (four of the
    // candidate coefficients vanish at degree 12 and six at degree 14)
    CHECK(duality_expr(10).monomial_count() == 11);
    CHECK(duality_expr(11).monomial_count() == 13);
    CHECK(duality_expr(12).monomial_count() == 15);
    CHECK(duality_expr(14).monomial_count() == 23);

    CHECK(duality_expr(10).coeff({8, 2}) == Rat(25200, 40320));
    CHECK(duality_expr(12).coeff({2, 2, 2, 2, 2, 2}) == Rat(-945, 725760));
    CHECK(duality_expr(14).coeff({7, 7}) == Rat(1244160, 8709120));
    CHECK_THROWS_AS(duality_expr(13), std::invalid_argument);
}

TEST_CASE("reduction identities hold at simple points") {
    // x = (1,-1,0,...,0): even power sums are 2, odd ones vanish
    std::array<Rat, 8> free{};
    free[0] = Rat(1);
    free[1] = Rat(-1);
    EvalPoint h = EvalPoint::from_free(free);
    auto ps = h.power_sums(14);
    CHECK(ps[1] == Rat(0));
    CHECK(ps[10] == Rat(2));
    CHECK(duality_expr(10).eval(ps) == Rat(2));

    EvalPoint zero;
    auto zps = zero.power_sums(14);
    for (int m : {10, 11, 12, 14}) CHECK(duality_expr(m).eval(zps) == Rat(0));
}

TEST_CASE("exact verification for degrees 10 and 11") {
    for (int m : {10, 11}) {
        DualityReport rep = verify_duality(m, true);
        CHECK(rep.mode == "exact");
        CHECK(rep.pass);
    }
}

TEST_CASE("point verification for degrees 12 and 14") {
    for (int m : {12, 14}) {
        DualityReport rep = verify_duality(m, false, 20, 0);
        CHECK(rep.mode == "points");
        CHECK(rep.points_checked == 20);
        CHECK(rep.pass);
    }
}

TEST_CASE("evaluation points") {
    SplitMix64 rng(5);
    for (int i = 0; i < 10; ++i) {
        EvalPoint h = EvalPoint::random(rng);
        Rat s;
        for (const auto& x : h.x) s += x;
        CHECK(s == Rat(0));
        CHECK(h.power_sums(3)[1] == Rat(0));
    }
    std::array<Rat, 9> bad{};
    bad[0] = Rat(1);
    CHECK_THROWS_AS(EvalPoint::from_all(bad), std::invalid_argument);
}

TEST_CASE("partition helpers") {
    CHECK(Partition({4, 2, 2, 1}).weight() == 9);
    CHECK(Partition({4, 2, 2, 1}).symmetry_factor() == 2);
    CHECK(Partition({2, 2, 2}).symmetry_factor() == 6);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
}
