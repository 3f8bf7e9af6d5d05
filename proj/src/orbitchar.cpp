#include "e8cas/orbitchar.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace e8cas {

namespace {

Int factorial(int n) {
    Int f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool part_desc_less(const Partition& a, const Partition& b) {
    // Descending lexicographic: (8) before (6,2) before ... before (1,1,...).
    return b.parts < a.parts;
}

void sort_rows(OmegaTable& t) {
    std::sort(t.rows.begin(), t.rows.end(),
              [](const OmegaRow& x, const OmegaRow& y) { return part_desc_less(x.q_part, y.q_part); });
}

struct Block {
    long prefactor;
    std::vector<std::pair<long, std::vector<int>>> rows;
};

OmegaTable from_blocks(int degree, const std::vector<Block>& blocks) {
    OmegaTable t;
    t.degree = degree;
    for (const auto& blk : blocks)
        for (const auto& [c, p] : blk.rows) {
            OmegaRow row;
            row.coeff = Int(blk.prefactor) * Int(c);
            row.q_part = Partition(p);
            row.mu_part = row.q_part;
            t.rows.push_back(std::move(row));
        }
    sort_rows(t);
    return t;
}

OmegaTable build_fixture8() {
    return from_blocks(8, {
        {40320, {{1, {8}}}},
        {20160, {{35, {4, 4}}, {14, {5, 3}}, {7, {6, 2}}, {2, {7, 1}}}},
        {40320, {{20, {3, 3, 2}}, {15, {4, 2, 2}}, {5, {4, 3, 1}}, {3, {5, 2, 1}}, {2, {6, 1, 1}}}},
        {13440, {{540, {2, 2, 2, 2}}, {30, {3, 2, 2, 1}}, {40, {3, 3, 1, 1}},
                 {15, {4, 2, 1, 1}}, {18, {5, 1, 1, 1}}}},
        {483840, {{3, {2, 2, 2, 1, 1}}, {1, {3, 2, 1, 1, 1}}, {2, {4, 1, 1, 1, 1}}}},
        {967680, {{3, {2, 2, 1, 1, 1, 1}}, {5, {3, 1, 1, 1, 1, 1}}}},
        {29030400, {{1, {2, 1, 1, 1, 1, 1, 1}}}},
        {1625702400, {{1, {1, 1, 1, 1, 1, 1, 1, 1}}}},
    });
}

OmegaTable build_fixture12() {
    return from_blocks(12, {
        {40320, {{1, {12}}}},
        {5040, {{1848, {6, 6}}, {792, {7, 5}}, {495, {8, 4}}, {220, {9, 3}},
                {66, {10, 2}}, {12, {11, 1}}}},
        {95040, {{1575, {4, 4, 4}}, {210, {5, 4, 3}}, {252, {5, 5, 2}}, {280, {6, 3, 3}},
                 {105, {6, 4, 2}}, {42, {6, 5, 1}}, {60, {7, 3, 2}}, {30, {7, 4, 1}},
                 {45, {8, 2, 2}}, {15, {8, 3, 1}}, {5, {9, 2, 1}}, {2, {10, 1, 1}}}},
        {95040, {{11200, {3, 3, 3, 3}}, {700, {4, 3, 3, 2}}, {1050, {4, 4, 2, 2}},
                 {350, {4, 4, 3, 1}}, {420, {5, 3, 2, 2}}, {280, {5, 3, 3, 1}},
                 {105, {5, 4, 2, 1}}, {168, {5, 5, 1, 1}}, {630, {6, 2, 2, 2}},
                 {70, {6, 3, 2, 1}}, {70, {6, 4, 1, 1}}, {60, {7, 2, 2, 1}},
                 {40, {7, 3, 1, 1}}, {15, {8, 2, 1, 1}}, {10, {9, 1, 1, 1}}}},
        {380160, {{1260, {3, 3, 2, 2, 2}}, {420, {3, 3, 3, 2, 1}}, {1890, {4, 2, 2, 2, 2}},
                  {105, {4, 3, 2, 2, 1}}, {140, {4, 3, 3, 1, 1}}, {105, {4, 4, 2, 1, 1}},
                  {189, {5, 2, 2, 2, 1}}, {42, {5, 3, 2, 1, 1}}, {63, {5, 4, 1, 1, 1}},
                  {42, {6, 2, 2, 1, 1}}, {42, {6, 3, 1, 1, 1}}, {18, {7, 2, 1, 1, 1}},
                  {18, {8, 1, 1, 1, 1}}}},
        {570240, {{56700, {2, 2, 2, 2, 2, 2}}, {1260, {3, 2, 2, 2, 2, 1}},
                  {280, {3, 3, 2, 2, 1, 1}}, {840, {3, 3, 3, 1, 1, 1}},
                  {315, {4, 2, 2, 2, 1, 1}}, {105, {4, 3, 2, 1, 1, 1}},
                  {420, {4, 4, 1, 1, 1, 1}}, {126, {5, 2, 2, 1, 1, 1}},
                  {168, {5, 3, 1, 1, 1, 1}}, {84, {6, 2, 1, 1, 1, 1}},
                  {120, {7, 1, 1, 1, 1, 1}}}},
        {79833600, {{90, {2, 2, 2, 2, 2, 1, 1}}, {9, {3, 2, 2, 2, 1, 1, 1}},
                    {8, {3, 3, 2, 1, 1, 1, 1}}, {6, {4, 2, 2, 1, 1, 1, 1}},
                    {10, {4, 3, 1, 1, 1, 1, 1}}, {6, {5, 2, 1, 1, 1, 1, 1}},
                    {12, {6, 1, 1, 1, 1, 1, 1}}}},
        {479001600, {{36, {2, 2, 2, 2, 1, 1, 1, 1}}, {10, {3, 2, 2, 1, 1, 1, 1, 1}},
                     {40, {3, 3, 1, 1, 1, 1, 1, 1}}, {15, {4, 2, 1, 1, 1, 1, 1, 1}},
                     {42, {5, 1, 1, 1, 1, 1, 1, 1}}}},
    });
}

OmegaTable build_fixture14() {
    return from_blocks(14, {
        {40320, {{1, {14}}}},
        {5040, {{6864, {7, 7}}, {3003, {8, 6}}, {2002, {9, 5}}, {1001, {10, 4}},
                {364, {11, 3}}, {91, {12, 2}}, {14, {13, 1}}}},
        {65520, {{5544, {5, 5, 4}}, {4620, {6, 4, 4}}, {1848, {6, 5, 3}}, {1848, {6, 6, 2}},
                 {1320, {7, 4, 3}}, {792, {7, 5, 2}}, {264, {7, 6, 1}}, {1320, {8, 3, 3}},
                 {495, {8, 4, 2}}, {198, {8, 5, 1}}, {220, {9, 3, 2}}, {110, {9, 4, 1}},
                 {132, {10, 2, 2}}, {44, {10, 3, 1}}, {12, {11, 2, 1}}, {4, {12, 1, 1}}}},
        {43680, {{46200, {4, 4, 3, 3}}, {51975, {4, 4, 4, 2}}, {55440, {5, 3, 3, 3}},
                 {6930, {5, 4, 3, 2}}, {6930, {5, 4, 4, 1}}, {16632, {5, 5, 2, 2}},
                 {5544, {5, 5, 3, 1}}, {9240, {6, 3, 3, 2}}, {6930, {6, 4, 2, 2}},
                 {2310, {6, 4, 3, 1}}, {1386, {6, 5, 2, 1}}, {1848, {6, 6, 1, 1}},
                 {3960, {7, 3, 2, 2}}, {2640, {7, 3, 3, 1}}, {990, {7, 4, 2, 1}},
                 {792, {7, 5, 1, 1}}, {4455, {8, 2, 2, 2}}, {495, {8, 3, 2, 1}},
                 {495, {8, 4, 1, 1}}, {330, {9, 2, 2, 1}}, {220, {9, 3, 1, 1}},
                 {66, {10, 2, 1, 1}}, {36, {11, 1, 1, 1}}}},
        {1153152, {{16800, {3, 3, 3, 3, 2}}, {2100, {4, 3, 3, 2, 2}}, {2100, {4, 3, 3, 3, 1}},
                   {4725, {4, 4, 2, 2, 2}}, {525, {4, 4, 3, 2, 1}}, {1575, {4, 4, 4, 1, 1}},
                   {1890, {5, 3, 2, 2, 2}}, {420, {5, 3, 3, 2, 1}}, {315, {5, 4, 2, 2, 1}},
                   {210, {5, 4, 3, 1, 1}}, {252, {5, 5, 2, 1, 1}}, {3780, {6, 2, 2, 2, 2}},
                   {210, {6, 3, 2, 2, 1}}, {280, {6, 3, 3, 1, 1}}, {105, {6, 4, 2, 1, 1}},
                   {126, {6, 5, 1, 1, 1}}, {270, {7, 2, 2, 2, 1}}, {60, {7, 3, 2, 1, 1}},
                   {90, {7, 4, 1, 1, 1}}, {45, {8, 2, 2, 1, 1}}, {45, {8, 3, 1, 1, 1}},
                   {15, {9, 2, 1, 1, 1}}, {12, {10, 1, 1, 1, 1}}}},
        {1729728, {{25200, {3, 3, 2, 2, 2, 2}}, {4200, {3, 3, 3, 2, 2, 1}},
                   {11200, {3, 3, 3, 3, 1, 1}}, {47250, {4, 2, 2, 2, 2, 2}},
                   {1575, {4, 3, 2, 2, 2, 1}}, {700, {4, 3, 3, 2, 1, 1}},
                   {1050, {4, 4, 2, 2, 1, 1}}, {1050, {4, 4, 3, 1, 1, 1}},
                   {3780, {5, 2, 2, 2, 2, 1}}, {420, {5, 3, 2, 2, 1, 1}},
                   {840, {5, 3, 3, 1, 1, 1}}, {315, {5, 4, 2, 1, 1, 1}},
                   {1008, {5, 5, 1, 1, 1, 1}}, {630, {6, 2, 2, 2, 1, 1}},
                   {210, {6, 3, 2, 1, 1, 1}}, {420, {6, 4, 1, 1, 1, 1}},
                   {180, {7, 2, 2, 1, 1, 1}}, {240, {7, 3, 1, 1, 1, 1}},
                   {90, {8, 2, 1, 1, 1, 1}}, {100, {9, 1, 1, 1, 1, 1}}}},
        {34594560, {{198450, {2, 2, 2, 2, 2, 2, 2}}, {3150, {3, 2, 2, 2, 2, 2, 1}},
                    {420, {3, 3, 2, 2, 2, 1, 1}}, {420, {3, 3, 3, 2, 1, 1, 1}},
                    {630, {4, 2, 2, 2, 2, 1, 1}}, {105, {4, 3, 2, 2, 1, 1, 1}},
                    {280, {4, 3, 3, 1, 1, 1, 1}}, {210, {4, 4, 2, 1, 1, 1, 1}},
                    {189, {5, 2, 2, 2, 1, 1, 1}}, {84, {5, 3, 2, 1, 1, 1, 1}},
                    {210, {5, 4, 1, 1, 1, 1, 1}}, {84, {6, 2, 2, 1, 1, 1, 1}},
                    {140, {6, 3, 1, 1, 1, 1, 1}}, {60, {7, 2, 1, 1, 1, 1, 1}},
                    {90, {8, 1, 1, 1, 1, 1, 1}}}},
        {7264857600, {{270, {2, 2, 2, 2, 2, 2, 1, 1}}, {18, {3, 2, 2, 2, 2, 1, 1, 1}},
                      {8, {3, 3, 2, 2, 1, 1, 1, 1}}, {40, {3, 3, 3, 1, 1, 1, 1, 1}},
                      {9, {4, 2, 2, 2, 1, 1, 1, 1}}, {5, {4, 3, 2, 1, 1, 1, 1, 1}},
                      {30, {4, 4, 1, 1, 1, 1, 1, 1}}, {6, {5, 2, 2, 1, 1, 1, 1, 1}},
                      {12, {5, 3, 1, 1, 1, 1, 1, 1}}, {6, {6, 2, 1, 1, 1, 1, 1, 1}},
                      {12, {7, 1, 1, 1, 1, 1, 1, 1}}}},
    });
}

void partitions_at_most(int M, int max_len, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            emit(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(M, M);
}

} // namespace

bool operator==(const OmegaTable& a, const OmegaTable& b) {
    if (a.degree != b.degree || a.rows.size() != b.rows.size()) return false;
    for (size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].coeff != b.rows[i].coeff) return false;
        if (!(a.rows[i].q_part == b.rows[i].q_part)) return false;
        if (!(a.rows[i].mu_part == b.rows[i].mu_part)) return false;
    }
    return true;
}

const OmegaTable& omega_fixture(int M) {
    static const OmegaTable t8 = build_fixture8();
    static const OmegaTable t12 = build_fixture12();
    static const OmegaTable t14 = build_fixture14();
    switch (M) {
        case 8: return t8;
        case 12: return t12;
        case 14: return t14;
        default: throw std::invalid_argument("omega_fixture: tables exist for degrees 8, 12, 14");
    }
}

OmegaTable derive_omega(int M) {
    if (M < 1 || M > 14) throw std::invalid_argument("derive_omega: degree must be 1..14");
    OmegaTable t;
    t.degree = M;
    // Q-generators live on 8 values, so only partitions into at most 8
    // parts contribute (nine pairwise-distinct indices cannot fit).
    partitions_at_most(M, 8, [&](const std::vector<int>& parts) {
        Partition nu(parts);
        int l = static_cast<int>(parts.size());
        Int coeff = factorial(M) * factorial(9 - l) * nu.symmetry_factor();
        for (int p : parts) coeff /= factorial(p);
        OmegaRow row;
        row.coeff = coeff;
        row.q_part = nu;
        row.mu_part = nu;
        t.rows.push_back(std::move(row));
    });
    sort_rows(t);
    return t;
}

namespace {

const OmegaTable& derived_table(int M) {
    static std::map<int, OmegaTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    return cache.emplace(M, derive_omega(M)).first->second;
}

// Per-orbit Q-side row values, shared across evaluation points.
const std::vector<Rat>& q_row_values(int M, const DominantA8& sigma) {
    static std::map<std::pair<int, std::array<Rat, 8>>, std::vector<Rat>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(M, sigma.q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const OmegaTable& table = derived_table(M);
    std::vector<Rat> vals;
    vals.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        if (row.q_part.length() > 8) {
            vals.push_back(Rat(0));
            continue;
        }
        // unordered convention: ordered aug monomial / symmetry factor
        Rat v = q_generator(row.q_part, sigma) / Rat(row.q_part.symmetry_factor());
        vals.push_back(v);
    }
    return cache.emplace(std::move(key), std::move(vals)).first->second;
}

} // namespace

OrbitCharContext::OrbitCharContext(int M, const EvalPoint& h) : degree_(M), table_(&derived_table(M)) {
    mu_values_.reserve(table_->rows.size());
    auto ps = h.power_sums(M);
    for (const auto& row : table_->rows) {
        const SymExpr& expr = aug_monomial_to_power_sums(row.mu_part);
        mu_values_.push_back(expr.eval(ps) / Rat(row.mu_part.symmetry_factor()));
    }
}

Rat OrbitCharContext::char_orbit(const DominantA8& sigma) const {
    static const Int fact9 = factorial(9);
    const auto& qv = q_row_values(degree_, sigma);
    Rat sum;
    for (size_t i = 0; i < table_->rows.size(); ++i) {
        if (qv[i].is_zero() || mu_values_[i].is_zero()) continue;
        sum += Rat(table_->rows[i].coeff) * qv[i] * mu_values_[i];
    }
    return sum * Rat(a8_orbit_size_of(sigma), fact9);
}

Rat OrbitCharContext::char_e8_orbit(const DominantE8& lambda) const {
    const SigmaSet& ss = sigma_set_transversal(lambda);
    Rat sum;
    for (const auto& m : ss.members) sum += char_orbit(m.q);
    return sum;
}

Rat char_orbit(int M, const DominantA8& sigma, const EvalPoint& h) {
    return OrbitCharContext(M, h).char_orbit(sigma);
}

std::map<int, Rat> char_orbit_oracle_multi(const std::vector<int>& degrees,
                                           const DominantA8& sigma, const EvalPoint& h,
                                           size_t guard) {
    Int n = a8_orbit_size_of(sigma);
    if (n > static_cast<long>(guard))
        throw OrbitTooLargeError("char_orbit_oracle: orbit of size " + n.get_str() +
                                 " exceeds guard " + std::to_string(guard));
    int maxdeg = 0;
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("char_orbit_oracle: degree must be positive");
        maxdeg = std::max(maxdeg, d);
    }
    std::array<Rat, 9> v = sigma.as_mu().c;
    std::sort(v.begin(), v.end(), [](const Rat& a, const Rat& b) { return b < a; });
    std::map<int, Rat> sums;
    for (int d : degrees) sums[d] = Rat(0);
    std::vector<Rat> pows(static_cast<size_t>(maxdeg) + 1);
    do {
        // Pairing with a zero-sum point is the plain dot product.
        Rat pair;
        for (int i = 0; i < 9; ++i)
            if (!v[i].is_zero()) pair += v[i] * h.x[i];
        pows[0] = Rat(1);
        for (int d = 1; d <= maxdeg; ++d) pows[d] = pows[d - 1] * pair;
        for (auto& [d, s] : sums) s += pows[d];
    } while (std::prev_permutation(v.begin(), v.end()));
    return sums;
}

Rat char_orbit_oracle(int M, const DominantA8& sigma, const EvalPoint& h, size_t guard) {
    return char_orbit_oracle_multi({M}, sigma, h, guard).at(M);
}

Rat char_e8_orbit(int M, const DominantE8& lambda, const EvalPoint& h) {
    return OrbitCharContext(M, h).char_e8_orbit(lambda);
}

} // namespace e8cas
