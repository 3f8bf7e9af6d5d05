#include "e8cas/symfunc.hpp"

#include "e8cas/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace e8cas {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) { g_threads.store(n == 0 ? 1 : n); }
unsigned thread_count() { return g_threads.load(); }

void Partition::validate() const {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Int Partition::symmetry_factor() const {
    Int f(1);
    int run = 1;
    for (size_t i = 1; i <= parts.size(); ++i) {
        if (i < parts.size() && parts[i] == parts[i - 1]) {
            ++run;
            continue;
        }
        for (int k = 2; k <= run; ++k) f *= k;
        run = 1;
    }
    return f;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

SymExpr SymExpr::constant(const Rat& c) {
    SymExpr e;
    e.add_term({}, c);
    return e;
}

SymExpr SymExpr::power_sum(int k) {
    SymExpr e;
    e.add_term({k}, Rat(1));
    return e;
}

void SymExpr::add_term(Key k, const Rat& coeff) {
    if (coeff.is_zero()) return;
    std::sort(k.begin(), k.end(), std::greater<int>());
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rat SymExpr::coeff(const Key& k) const {
    Key sorted = k;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    auto it = terms_.find(sorted);
    return it == terms_.end() ? Rat(0) : it->second;
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

SymExpr& SymExpr::operator*=(const Rat& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

SymExpr SymExpr::operator*(const SymExpr& o) const {
    SymExpr out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            out.add_term(std::move(k), ca * cb);
        }
    return out;
}

Rat SymExpr::eval(const std::vector<Rat>& power_sums) const {
    Rat total;
    for (const auto& [k, c] : terms_) {
        Rat t = c;
        for (int idx : k) {
            if (idx <= 0 || static_cast<size_t>(idx) >= power_sums.size())
                throw std::out_of_range("SymExpr::eval: power sum index out of range");
            t *= power_sums[idx];
        }
        total += t;
    }
    return total;
}

int SymExpr::max_index() const {
    int m = 0;
    for (const auto& [k, c] : terms_)
        if (!k.empty()) m = std::max(m, k.front());
    return m;
}

EvalPoint EvalPoint::from_free(const std::array<Rat, 8>& free) {
    EvalPoint p;
    Rat s;
    for (int i = 0; i < 8; ++i) {
        p.x[i] = free[i];
        s += free[i];
    }
    p.x[8] = -s;
    return p;
}

EvalPoint EvalPoint::from_all(const std::array<Rat, 9>& coords) {
    Rat s;
    for (const auto& c : coords) s += c;
    if (!s.is_zero()) throw std::invalid_argument("EvalPoint: coordinates must sum to zero");
    EvalPoint p;
    p.x = coords;
    return p;
}

EvalPoint EvalPoint::random(SplitMix64& rng, long max_num, long max_den) {
    std::array<Rat, 8> free;
    for (auto& f : free) f = random_rat(rng, max_num, max_den);
    return from_free(free);
}

std::vector<Rat> EvalPoint::power_sums(int maxk) const {
    std::vector<Rat> ps(static_cast<size_t>(maxk) + 1, Rat(0));
    std::array<Rat, 9> pw;
    pw.fill(Rat(1));
    for (int k = 1; k <= maxk; ++k) {
        Rat s;
        for (int i = 0; i < 9; ++i) {
            pw[i] *= x[i];
            s += pw[i];
        }
        ps[k] = s;
    }
    return ps;
}

int64_t count_partitions_2to9(int M) {
    // Parts in {2,...,9} and at most nine of them (nine variables); the
    // length bound only bites for M >= 20.
    if (M < 0) throw std::invalid_argument("count_partitions_2to9: M must be nonnegative");
    constexpr int kMaxParts = 9;
    std::vector<std::array<int64_t, kMaxParts + 1>> dp(static_cast<size_t>(M) + 1);
    for (auto& row : dp) row.fill(0);
    dp[0][0] = 1;
    for (int part = 2; part <= 9; ++part)
        for (int m = part; m <= M; ++m)
            for (int k = 1; k <= kMaxParts; ++k) dp[m][k] += dp[m - part][k - 1];
    int64_t total = 0;
    for (int k = 0; k <= kMaxParts; ++k) total += dp[M][k];
    return total;
}

namespace {

Int factorial(int n) {
    Int f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Enumerates set partitions of {0..l-1} via restricted growth strings and
// accumulates the Moebius-weighted power-sum terms.
SymExpr expand_aug_monomial(const std::vector<int>& nu) {
    int l = static_cast<int>(nu.size());
    SymExpr out;
    if (l == 0) {
        out.add_term({}, Rat(1));
        return out;
    }
    std::vector<int> assign(l, 0);
    std::function<void(int, int)> rec = [&](int pos, int nblocks) {
        if (pos == l) {
            std::vector<int> sums(nblocks, 0);
            std::vector<int> sizes(nblocks, 0);
            for (int i = 0; i < l; ++i) {
                sums[assign[i]] += nu[i];
                ++sizes[assign[i]];
            }
            Int num(1);
            int sign = 0;
            for (int b = 0; b < nblocks; ++b) {
                num *= factorial(sizes[b] - 1);
                sign += sizes[b] - 1;
            }
            if (sign % 2) num = -num;
            out.add_term(std::vector<int>(sums.begin(), sums.end()), Rat(num));
            return;
        }
        for (int b = 0; b <= nblocks; ++b) {
            assign[pos] = b;
            rec(pos + 1, std::max(nblocks, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

} // namespace

const SymExpr& aug_monomial_to_power_sums(const Partition& nu) {
    if (nu.length() > 9)
        throw std::invalid_argument("aug_monomial_to_power_sums: more than 9 parts");
    static std::map<std::vector<int>, SymExpr> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(nu.parts);
    if (it != cache.end()) return it->second;
    return cache.emplace(nu.parts, expand_aug_monomial(nu.parts)).first->second;
}

Rat q_generator(const Partition& nu, const DominantA8& q) {
    if (nu.length() > 8) throw std::invalid_argument("q_generator: more than 8 parts");
    const SymExpr& expr = aug_monomial_to_power_sums(nu);
    int maxk = expr.max_index();
    std::vector<Rat> ps(static_cast<size_t>(maxk) + 1, Rat(0));
    std::array<Rat, 8> pw;
    pw.fill(Rat(1));
    for (int k = 1; k <= maxk; ++k) {
        Rat s;
        for (int i = 0; i < 8; ++i) {
            pw[i] *= q.q[i];
            s += pw[i];
        }
        ps[k] = s;
    }
    return expr.eval(ps);
}

Rat aug_monomial_value(const Partition& nu, const EvalPoint& h) {
    const SymExpr& expr = aug_monomial_to_power_sums(nu);
    return expr.eval(h.power_sums(expr.max_index()));
}

namespace {

SymExpr build_duality(long prefactor_den, std::initializer_list<std::pair<long, std::vector<int>>> rows) {
    SymExpr e;
    for (const auto& [num, key] : rows) e.add_term(key, Rat(num, prefactor_den));
    return e;
}

const SymExpr& duality_table(int M) {
    static const std::map<int, SymExpr> tables = [] {
        std::map<int, SymExpr> t;
        t.emplace(10, build_duality(40320, {
            {25200, {2, 8}},    {19200, {3, 7}},       {16800, {4, 6}},
            {-8400, {2, 2, 6}}, {-13440, {2, 3, 5}},   {8064, {5, 5}},
            {2100, {2, 2, 2, 4}}, {-5600, {3, 3, 4}},  {-6300, {2, 4, 4}},
            {2800, {2, 2, 3, 3}}, {-105, {2, 2, 2, 2, 2}},
        }));
        t.emplace(11, build_duality(362880, {
            {-3465, {2, 2, 2, 2, 3}}, {12320, {2, 3, 3, 3}}, {41580, {2, 2, 3, 4}},
            {-41580, {3, 4, 4}},      {16632, {2, 2, 2, 5}}, {-44352, {3, 3, 5}},
            {-99792, {2, 4, 5}},      {-110880, {2, 3, 6}},  {133056, {5, 6}},
            {-71280, {2, 2, 7}},      {142560, {4, 7}},      {166320, {3, 8}},
            {221760, {2, 9}},
        }));
        t.emplace(12, build_duality(725760, {
            {322560, {3, 9}},        {136080, {2, 2, 8}},   {272160, {4, 8}},
            {248832, {5, 7}},        {-60480, {2, 2, 2, 6}}, {-80640, {3, 3, 6}},
            {120960, {6, 6}},        {-72576, {2, 2, 3, 5}}, {-145152, {3, 4, 5}},
            {17010, {2, 2, 2, 2, 4}}, {-34020, {2, 2, 4, 4}}, {-22680, {4, 4, 4}},
            {20160, {2, 2, 2, 3, 3}}, {4480, {3, 3, 3, 3}},  {-945, {2, 2, 2, 2, 2, 2}},
        }));
        t.emplace(14, build_duality(8709120, {
            {-2835, {2, 2, 2, 2, 2, 2, 2}}, {17640, {2, 2, 2, 2, 3, 3}},
            {125440, {2, 3, 3, 3, 3}},      {39690, {2, 2, 2, 2, 2, 4}},
            {635040, {2, 2, 3, 3, 4}},      {79380, {2, 2, 2, 4, 4}},
            {-635040, {3, 3, 4, 4}},        {-476280, {2, 4, 4, 4}},
            {-301056, {3, 3, 3, 5}},        {-2032128, {2, 3, 4, 5}},
            {-158760, {2, 2, 2, 2, 6}},     {-1128960, {2, 3, 3, 6}},
            {-635040, {2, 2, 4, 6}},        {635040, {4, 4, 6}},
            {-725760, {2, 2, 3, 7}},        {1451520, {3, 4, 7}},
            {1244160, {7, 7}},              {317520, {2, 2, 2, 8}},
            {846720, {3, 3, 8}},            {1905120, {2, 4, 8}},
            {2540160, {6, 8}},              {2257920, {2, 3, 9}},
            {2709504, {5, 9}},
        }));
        return t;
    }();
    auto it = tables.find(M);
    if (it == tables.end())
        throw std::invalid_argument("duality_expr: supported degrees are 10, 11, 12, 14");
    return it->second;
}

// ---- exact expansion engine: sparse polynomials in x_1..x_8 -------------

// Exponents packed 8 bits apiece; total degree <= 14 keeps each below 256.
using Monomial = uint64_t;

struct Poly {
    std::unordered_map<Monomial, Rat> terms;

    void add(Monomial m, const Rat& c) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

Poly poly_mul(const Poly& a, const Poly& b) {
    const Poly& small = a.terms.size() <= b.terms.size() ? a : b;
    const Poly& big = a.terms.size() <= b.terms.size() ? b : a;
    Poly out;
    out.terms.reserve(big.terms.size() * 2);
    for (const auto& [ma, ca] : small.terms)
        for (const auto& [mb, cb] : big.terms) out.add(ma + mb, ca * cb);
    return out;
}

// p_k on the hyperplane: sum x_i^k + (-1)^k (sum x_i)^k over 8 free vars.
Poly power_sum_poly(int k) {
    Poly sum;
    for (int i = 0; i < 8; ++i) sum.add(1ULL << (8 * i), Rat(1));
    Poly spow;
    spow.add(0, Rat(1));
    for (int j = 0; j < k; ++j) spow = poly_mul(spow, sum);
    Poly out;
    for (int i = 0; i < 8; ++i) out.add(static_cast<Monomial>(k) << (8 * i), Rat(1));
    Rat sign((k % 2) ? -1 : 1);
    for (const auto& [m, c] : spow.terms) out.add(m, sign * c);
    return out;
}

} // namespace

const SymExpr& duality_expr(int M) { return duality_table(M); }

DualityReport verify_duality(int M, bool exact, int npoints, uint64_t seed) {
    const SymExpr& rhs = duality_expr(M);
    DualityReport rep;
    rep.M = M;
    rep.monomials = rhs.monomial_count();

    if (exact) {
        rep.mode = "exact";
        std::vector<Poly> pk(static_cast<size_t>(M) + 1);
        for (int k = 2; k <= M; ++k)
            if (k < 10 || k == M) pk[k] = power_sum_poly(k);

        // Expand every monomial of the right side in parallel, merge in a
        // fixed order, subtract from p_M.
        std::vector<std::pair<SymExpr::Key, Rat>> rows(rhs.terms().begin(), rhs.terms().end());
        std::vector<Poly> expanded(rows.size());
        parallel_for(rows.size(), [&](size_t i) {
            Poly prod;
            prod.add(0, rows[i].second);
            for (int idx : rows[i].first) prod = poly_mul(prod, pk[idx]);
            expanded[i] = std::move(prod);
        });
        Poly diff = pk[M];
        for (const auto& e : expanded)
            for (const auto& [m, c] : e.terms) diff.add(m, -c);
        rep.pass = diff.terms.empty();
        return rep;
    }

    rep.mode = "points";
    SplitMix64 rng(seed);
    rep.pass = true;
    rep.points_checked = npoints;
    for (int i = 0; i < npoints; ++i) {
        EvalPoint h = EvalPoint::random(rng);
        auto ps = h.power_sums(M);
        if (rhs.eval(ps) != ps[M]) {
            rep.pass = false;
            break;
        }
    }
    return rep;
}

} // namespace e8cas
