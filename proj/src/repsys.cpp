#include "e8cas/repsys.hpp"

#include "e8cas/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace e8cas {

namespace {

using LabelVec = std::array<int64_t, 8>;

LabelVec labels_of(const DominantE8& w) {
    LabelVec l;
    for (int i = 0; i < 8; ++i) l[i] = w.r[i];
    return l;
}

// <u, v> from Dynkin labels via the inverse Cartan matrix (the Gram
// matrix of the fundamental weights; integral for E8).
Int label_inner(const LabelVec& u, const LabelVec& v) {
    const auto& g = e8_cartan_inverse();
    Int s(0);
    for (int i = 0; i < 8; ++i) {
        if (u[i] == 0) continue;
        int64_t row = 0;
        for (int j = 0; j < 8; ++j) row += g[i][j] * v[j];
        s += Int(static_cast<long>(u[i])) * Int(static_cast<long>(row));
    }
    return s;
}

struct RootInfo {
    LabelVec labels;      // <root, beta_j>
    std::array<int64_t, 8> coords; // expansion in simple roots
    int64_t height;
};

struct RootSystem {
    std::vector<MuVector> mu;      // the 120 positive roots
    std::vector<RootInfo> info;
};

RootSystem build_positive_roots() {
    const auto& betas = e8_simple_roots();
    std::array<MuVector, 8> lambda;
    for (int i = 0; i < 8; ++i) lambda[i] = e8_weight_to_mu(DominantE8::fundamental(i + 1));

    RootSystem rs;
    const SigmaSet& adj = sigma_set_transversal(DominantE8::fundamental(1));
    for (const auto& member : adj.members) {
        for (const auto& w : enumerate_a8_orbit(member.q)) {
            // Coordinates in the simple-root basis are the pairings with
            // the fundamental weights; positive roots have all >= 0.
            std::array<int64_t, 8> coords;
            bool positive = true, integral = true;
            for (int i = 0; i < 8; ++i) {
                Rat c = mu_inner(lambda[i], w);
                if (!c.is_integer()) { integral = false; break; }
                coords[i] = c.to_int().get_si();
                if (coords[i] < 0) positive = false;
            }
            if (!integral) throw std::logic_error("positive_roots: non-integral root coordinate");
            if (!positive) continue;
            RootInfo info;
            info.coords = coords;
            info.height = 0;
            for (int i = 0; i < 8; ++i) info.height += coords[i];
            for (int i = 0; i < 8; ++i) {
                Rat l = mu_inner(w, betas[i]);
                info.labels[i] = l.to_int().get_si();
            }
            rs.mu.push_back(w);
            rs.info.push_back(info);
        }
    }
    if (rs.mu.size() != 120)
        throw std::logic_error("positive_roots: expected 120 roots, found " + std::to_string(rs.mu.size()));
    return rs;
}

const RootSystem& root_system() {
    static const RootSystem rs = build_positive_roots();
    return rs;
}

// Reflect negative labels away; terminates at the dominant representative.
LabelVec dominantize_labels(LabelVec l) {
    const auto& cartan = e8_cartan_matrix();
    for (;;) {
        int neg = -1;
        for (int i = 0; i < 8; ++i)
            if (l[i] < 0) { neg = i; break; }
        if (neg < 0) return l;
        int64_t li = l[neg];
        for (int j = 0; j < 8; ++j) l[j] -= li * cartan[neg][j];
    }
}

DominantE8 from_labels(const LabelVec& l) {
    std::array<int64_t, 8> r;
    for (int i = 0; i < 8; ++i) r[i] = l[i];
    return DominantE8(r);
}

} // namespace

const std::vector<MuVector>& positive_roots() { return root_system().mu; }

std::vector<DominantE8> dominant_weights_below(const DominantE8& highest) {
    const auto& rs = root_system();
    LabelVec top = labels_of(highest);

    // Depth of a subdominant weight in the simple-root basis, for ordering.
    const auto& g = e8_cartan_inverse();
    auto depth_of = [&](const LabelVec& l) {
        int64_t d = 0;
        for (int i = 0; i < 8; ++i) {
            int64_t ki = 0;
            for (int j = 0; j < 8; ++j) ki += g[i][j] * (top[j] - l[j]);
            d += ki;
        }
        return d;
    };

    std::set<LabelVec> seen{top};
    std::vector<LabelVec> work{top};
    while (!work.empty()) {
        LabelVec cur = work.back();
        work.pop_back();
        for (const auto& root : rs.info) {
            LabelVec nxt;
            bool dominant = true;
            for (int i = 0; i < 8; ++i) {
                nxt[i] = cur[i] - root.labels[i];
                if (nxt[i] < 0) dominant = false;
            }
            if (!dominant) continue;
            if (seen.insert(nxt).second) work.push_back(nxt);
        }
    }

    std::vector<DominantE8> out;
    out.reserve(seen.size());
    for (const auto& l : seen) out.push_back(from_labels(l));
    std::stable_sort(out.begin(), out.end(), [&](const DominantE8& a, const DominantE8& b) {
        return depth_of(labels_of(a)) < depth_of(labels_of(b));
    });
    return out;
}

namespace {

RepDecomposition compute_decomposition(const DominantE8& highest) {
    const auto& rs = root_system();
    LabelVec top = labels_of(highest);
    LabelVec rho;
    rho.fill(1);

    auto plus_rho = [&](const LabelVec& l) {
        LabelVec s = l;
        for (int i = 0; i < 8; ++i) s[i] += 1;
        return s;
    };
    Int top_norm = label_inner(plus_rho(top), plus_rho(top));

    std::vector<DominantE8> doms = dominant_weights_below(highest);
    std::map<LabelVec, Int> mult;
    mult[top] = Int(1);

    for (const auto& wdom : doms) {
        LabelVec l = labels_of(wdom);
        if (l == top) continue;
        Int num(0);
        for (const auto& root : rs.info) {
            // Walk the unbroken root string lambda + k*alpha upward.
            // <v, alpha> = sum_i coords_i(alpha) * label_i(v).
            Int pairing(0);
            for (int i = 0; i < 8; ++i)
                pairing += Int(static_cast<long>(root.coords[i])) * Int(static_cast<long>(l[i]));
            LabelVec cur = l;
            for (int64_t k = 1;; ++k) {
                for (int i = 0; i < 8; ++i) cur[i] += root.labels[i];
                auto it = mult.find(dominantize_labels(cur));
                if (it == mult.end()) break;
                num += it->second * (pairing + Int(2 * k));
            }
        }
        Int denom = top_norm - label_inner(plus_rho(l), plus_rho(l));
        if (denom == 0) throw std::logic_error("freudenthal: zero denominator");
        Int m = 2 * num;
        if (!mpz_divisible_p(m.get_mpz_t(), denom.get_mpz_t()))
            throw std::logic_error("freudenthal: non-integral multiplicity");
        m /= denom;
        if (m <= 0) throw std::logic_error("freudenthal: non-positive multiplicity");
        mult[l] = m;
    }

    RepDecomposition dec;
    dec.highest = highest;
    Int dim(0);
    for (const auto& wdom : doms) {
        RepOrbit o;
        o.weight = wdom;
        o.multiplicity = mult.at(labels_of(wdom));
        dim += o.multiplicity * e8_orbit_size(wdom);
        dec.orbits.push_back(std::move(o));
    }
    dec.dim = dim;

    Int check = dim_rep_weyl(highest);
    if (check != dec.dim)
        throw std::logic_error("rep_decomposition: orbit-sum dimension " + dec.dim.get_str() +
                               " disagrees with Weyl formula " + check.get_str());
    return dec;
}

} // namespace

const RepDecomposition& rep_decomposition(const DominantE8& highest) {
    static std::map<DominantE8, RepDecomposition> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(highest);
    if (it != cache.end()) return it->second;
    return cache.emplace(highest, compute_decomposition(highest)).first->second;
}

Int freudenthal_mult(const DominantE8& highest, const DominantE8& lower) {
    const RepDecomposition& dec = rep_decomposition(highest);
    for (const auto& o : dec.orbits)
        if (o.weight == lower) return o.multiplicity;
    throw std::invalid_argument("freudenthal_mult: weight " + lower.to_string() +
                                " is not subdominant to " + highest.to_string());
}

Int dim_rep(const DominantE8& highest) { return rep_decomposition(highest).dim; }

Int dim_rep_weyl(const DominantE8& highest) {
    const auto& rs = root_system();
    LabelVec l = labels_of(highest);
    Int num(1), den(1);
    for (const auto& root : rs.info) {
        int64_t a = 0, b = 0;
        for (int i = 0; i < 8; ++i) {
            a += root.coords[i] * (l[i] + 1);
            b += root.coords[i];
        }
        num *= a;
        den *= b;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("dim_rep_weyl: non-integral dimension");
    return num / den;
}

Rat char_rep(const OrbitCharContext& ctx, const DominantE8& highest) {
    const RepDecomposition& dec = rep_decomposition(highest);
    Rat sum;
    for (const auto& o : dec.orbits) sum += Rat(o.multiplicity) * ctx.char_e8_orbit(o.weight);
    return sum;
}

Rat char_rep(int M, const DominantE8& highest, const EvalPoint& h) {
    OrbitCharContext ctx(M, h);
    return char_rep(ctx, highest);
}

MultSolveResult solve_multiplicities(const DominantE8& highest,
                                     const std::vector<EigenvalueModel>& models,
                                     const std::vector<EvalPoint>& points) {
    MultSolveResult res;
    std::vector<DominantE8> doms = dominant_weights_below(highest);
    std::vector<DominantE8> unknowns;
    for (const auto& w : doms)
        if (!(w == highest)) unknowns.push_back(w);
    res.unknowns = unknowns.size();

    if (unknowns.empty()) {
        res.determined = res.consistent = true;
        res.multiplicities.push_back({highest, Int(1)});
        res.note = "trivial: no subdominant weights";
        return res;
    }

    std::vector<Int> sizes;
    sizes.reserve(unknowns.size());
    for (const auto& w : unknowns) sizes.push_back(e8_orbit_size(w));
    Int top_size = e8_orbit_size(highest);

    RatMatrix a;
    RatVector b;
    for (const auto& model : models) {
        for (const auto& h : points) {
            OrbitCharContext ctx(model.degree, h);
            Rat e = model.mean_power(highest, h);
            RatVector row;
            row.reserve(unknowns.size());
            for (size_t u = 0; u < unknowns.size(); ++u)
                row.push_back(ctx.char_e8_orbit(unknowns[u]) - e * Rat(sizes[u]));
            Rat rhs = -(ctx.char_e8_orbit(highest) - e * Rat(top_size));
            a.push_back(std::move(row));
            b.push_back(rhs);
        }
    }

    auto sol = solve_linear_system(a, b);
    res.rank = sol.rank;
    res.consistent = sol.consistent;
    if (!sol.consistent) {
        res.note = "inconsistent system: calibrated eigenvalue models do not admit any multiplicity vector";
        return res;
    }
    if (!sol.unique) {
        res.note = "insufficient equations: rank " + std::to_string(sol.rank) + " < " +
                   std::to_string(res.unknowns) + " unknowns";
        return res;
    }
    res.determined = true;
    res.multiplicities.push_back({highest, Int(1)});
    for (size_t u = 0; u < unknowns.size(); ++u) {
        const Rat& v = sol.particular[u];
        if (!v.is_integer() || v.sign() <= 0) {
            res.determined = false;
            res.note = "solution is not a positive integer vector (" + v.to_string() + ")";
            return res;
        }
        res.multiplicities.push_back({unknowns[u], v.to_int()});
    }
    return res;
}

} // namespace e8cas
