#include "e8cas/cache.hpp"
#include "e8cas/casimir.hpp"
#include "e8cas/parallel.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace e8cas;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitResourceGuard = 3;

struct GlobalOpts {
    std::string format = "json";
    std::string cache_dir;
    uint64_t seed = 0;
    unsigned threads = 1;

    CacheConfig cache() const { return CacheConfig{cache_dir}; }
};

DominantE8 parse_weight(const std::string& csv) {
    std::array<int64_t, 8> r{};
    std::stringstream ss(csv);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 8) throw std::invalid_argument("weight needs exactly 8 labels");
        size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size() || v < 0) throw std::invalid_argument("invalid Dynkin label '" + item + "'");
        r[i++] = v;
    }
    if (i != 8) throw std::invalid_argument("weight needs exactly 8 labels");
    return DominantE8(r);
}

EvalPoint parse_point(const std::string& csv) {
    std::array<Rat, 8> x;
    std::stringstream ss(csv);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 8) throw std::invalid_argument("point needs exactly 8 coordinates");
        x[i++] = Rat::from_string(item);
    }
    if (i != 8) throw std::invalid_argument("point needs exactly 8 coordinates");
    return EvalPoint::from_free(x);
}

ordered_json weight_json(const DominantE8& w) {
    ordered_json arr = ordered_json::array();
    for (auto v : w.r) arr.push_back(v);
    return arr;
}

ordered_json sigma_set_json(const SigmaSet& s) {
    ordered_json j;
    j["source"] = weight_json(s.source);
    j["members"] = ordered_json::array();
    for (const auto& m : s.members) {
        ordered_json jm;
        std::vector<std::string> qs;
        for (const auto& q : m.q.q) qs.push_back(q.to_string());
        jm["q"] = qs;
        jm["orbit_size"] = m.a8_orbit_size.get_str();
        j["members"].push_back(jm);
    }
    j["e8_orbit_size"] = s.e8_orbit_size.get_str();
    return j;
}

void emit(const GlobalOpts& g, const ordered_json& j) {
    if (g.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        // text: flat key/value rendering
        std::function<void(const std::string&, const ordered_json&)> walk =
            [&](const std::string& prefix, const ordered_json& node) {
                if (node.is_object()) {
                    for (auto it = node.begin(); it != node.end(); ++it)
                        walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
                } else if (node.is_array()) {
                    for (size_t i = 0; i < node.size(); ++i)
                        walk(prefix + "[" + std::to_string(i) + "]", node[i]);
                } else {
                    std::cout << prefix << " = "
                              << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
                }
            };
        walk("", j);
    }
}

ordered_json freudenthal_json(const DominantE8& w) {
    const RepDecomposition& dec = rep_decomposition(w);
    ordered_json j;
    j["weight"] = weight_json(w);
    j["dim"] = dec.dim.get_str();
    j["entries"] = ordered_json::array();
    for (const auto& o : dec.orbits) {
        ordered_json e;
        e["weight"] = weight_json(o.weight);
        e["multiplicity"] = o.multiplicity.get_str();
        e["orbit_size"] = e8_orbit_size(o.weight).get_str();
        j["entries"].push_back(e);
    }
    return j;
}

std::string sigma_set_cache_key(const DominantE8& w) {
    std::string key = "sigma-set/v1?weight=";
    for (int i = 0; i < 8; ++i) key += (i ? "," : "") + std::to_string(w.r[i]);
    return key;
}

std::string freudenthal_cache_key(const DominantE8& w) {
    std::string key = "freudenthal/v1?weight=";
    for (int i = 0; i < 8; ++i) key += (i ? "," : "") + std::to_string(w.r[i]);
    return key;
}

ordered_json cached_sigma_set(const GlobalOpts& g, const DominantE8& w) {
    auto cfg = g.cache();
    std::string key = sigma_set_cache_key(w);
    if (auto hit = cache_get(cfg, key)) return *hit;
    ordered_json j = sigma_set_json(sigma_set_transversal(w));
    cache_put(cfg, key, j);
    return j;
}

ordered_json cached_freudenthal(const GlobalOpts& g, const DominantE8& w) {
    auto cfg = g.cache();
    std::string key = freudenthal_cache_key(w);
    if (auto hit = cache_get(cfg, key)) return *hit;
    ordered_json j = freudenthal_json(w);
    cache_put(cfg, key, j);
    return j;
}

int cmd_sigma_set(const GlobalOpts& g, const std::string& weight_csv, bool sumset) {
    DominantE8 w = parse_weight(weight_csv);
    ordered_json j = cached_sigma_set(g, w);
    if (sumset) {
        SumsetDiagnostics diag;
        sigma_set_sumset(w, &diag);
        ordered_json jd;
        jd["agrees_with_transversal"] = diag.agrees_with_transversal;
        jd["missing"] = ordered_json::array();
        for (const auto& q : diag.missing) jd["missing"].push_back(q.to_string());
        jd["extra"] = ordered_json::array();
        for (const auto& q : diag.extra) jd["extra"].push_back(q.to_string());
        j["sumset"] = jd;
    }
    if (g.format == "csv") {
        std::cout << "q1,q2,q3,q4,q5,q6,q7,q8,orbit_size\n";
        for (const auto& m : j["members"]) {
            for (const auto& q : m["q"]) std::cout << q.get<std::string>() << ",";
            std::cout << m["orbit_size"].get<std::string>() << "\n";
        }
        return kExitOk;
    }
    emit(g, j);
    return kExitOk;
}

int cmd_orbit_size(const GlobalOpts& g, const std::string& weight_csv) {
    DominantE8 w = parse_weight(weight_csv);
    ordered_json j;
    j["weight"] = weight_json(w);
    j["orbit_size"] = e8_orbit_size(w).get_str();
    emit(g, j);
    return kExitOk;
}

int cmd_char(const GlobalOpts& g, int degree, const std::string& weight_csv,
             const std::string& point_csv, bool oracle) {
    DominantE8 w = parse_weight(weight_csv);
    EvalPoint h = parse_point(point_csv);
    Rat value;
    if (oracle) {
        const SigmaSet& ss = sigma_set_transversal(w);
        for (const auto& m : ss.members) value += char_orbit_oracle(degree, m.q, h);
    } else {
        value = char_e8_orbit(degree, w, h);
    }
    ordered_json j;
    j["degree"] = degree;
    j["weight"] = weight_json(w);
    ordered_json pt = ordered_json::array();
    for (const auto& x : h.x) pt.push_back(x.to_string());
    j["point"] = pt;
    j["mode"] = oracle ? "oracle" : "table";
    j["value"] = value.to_string();
    emit(g, j);
    return kExitOk;
}

int cmd_casimir_eval(const GlobalOpts& g, int degree, int alpha, const std::string& weight_csv,
                     const std::string& k12_zero_str) {
    DominantE8 w = parse_weight(weight_csv);
    ordered_json j;
    j["degree"] = degree;
    j["alpha"] = alpha;
    j["weight"] = weight_json(w);
    Rat value;
    if (degree == 8) {
        value = k8(alpha, w);
    } else if (degree == 12) {
        Rat c = k12_zero_str.empty() ? default_k12_zero() : Rat::from_string(k12_zero_str);
        value = k12(alpha, w, c);
        j["k12_zero"] = c.to_string();
        j["k12_zero_is_default"] = k12_zero_str.empty();
    } else if (degree == 14) {
        value = k14(alpha, w);
    } else {
        throw std::invalid_argument("casimir-eval: degree must be 8, 12 or 14");
    }
    j["value"] = value.to_string();
    emit(g, j);
    return kExitOk;
}

int cmd_verify_dualities(const GlobalOpts& g, bool exact, int npoints) {
    ordered_json j;
    j["results"] = ordered_json::array();
    bool all = true;
    for (int M : {10, 11, 12, 14}) {
        bool use_exact = exact || M <= 11;
        DualityReport rep = verify_duality(M, use_exact, npoints, g.seed);
        ordered_json r;
        r["M"] = M;
        r["mode"] = rep.mode;
        r["monomials"] = rep.monomials;
        if (rep.mode == "points") r["points"] = rep.points_checked;
        r["pass"] = rep.pass;
        all = all && rep.pass;
        j["results"].push_back(r);
    }
    j["pass"] = all;
    emit(g, j);
    return all ? kExitOk : kExitVerifyFailed;
}

int cmd_verify_omega(const GlobalOpts& g) {
    ordered_json j;
    j["degrees"] = ordered_json::array();
    bool all = true;
    for (int M : {8, 12, 14}) {
        const OmegaTable& fx = omega_fixture(M);
        OmegaTable derived = derive_omega(M);
        bool match = derived == fx;
        ordered_json r;
        r["M"] = M;
        r["rows"] = fx.rows.size();
        r["match"] = match;
        all = all && match;
        j["degrees"].push_back(r);
    }
    j["pass"] = all;
    emit(g, j);
    return all ? kExitOk : kExitVerifyFailed;
}

std::vector<DominantE8> default_span_sample() {
    auto w = [](std::array<int64_t, 8> r) { return DominantE8(r); };
    return {
        DominantE8::fundamental(1),
        DominantE8::fundamental(7),
        w({2, 0, 0, 0, 0, 0, 0, 0}),
        DominantE8::fundamental(2),
        DominantE8::fundamental(8),
        w({1, 0, 0, 0, 0, 0, 1, 0}),
        w({0, 0, 0, 0, 0, 0, 2, 0}),
        w({3, 0, 0, 0, 0, 0, 0, 0}),
        w({0, 0, 0, 0, 0, 0, 0, 2}),
        w({0, 0, 0, 0, 0, 0, 1, 1}),
    };
}

int cmd_verify_k(const GlobalOpts& g, int degree, int samples) {
    const auto& basis = monomial_basis(degree);
    auto sample = default_span_sample();

    ordered_json j;
    j["degree"] = degree;

    auto classes = distinct_classes(degree, sample);
    j["class_count"] = classes.size();
    j["classes"] = ordered_json::array();
    for (const auto& cls : classes) {
        ordered_json jc = ordered_json::array();
        for (int a : cls) jc.push_back(basis[a].to_string());
        j["classes"].push_back(jc);
    }

    SplitMix64 rng(g.seed);
    std::vector<DominantE8> rank_sample;
    for (int i = 0; i < samples; ++i) {
        std::array<int64_t, 8> r{};
        for (auto& v : r) v = static_cast<int64_t>(rng.below(4));
        rank_sample.push_back(DominantE8(r));
    }
    j["rank_sample_size"] = samples;
    j["independence_rank"] = independence_rank(degree, rank_sample);

    size_t fit = degree == 8 ? 3 : 6;
    SpanReport span = span_check(degree, sample, fit);
    ordered_json js;
    js["fit_count"] = span.fit_count;
    js["verify_count"] = span.verify_count;
    js["pass"] = span.pass;
    if (degree == 12) js["k12_zero"] = span.k12_zero.to_string();
    js["classes"] = ordered_json::array();
    for (const auto& cr : span.classes) {
        ordered_json jc;
        ordered_json mons = ordered_json::array();
        for (int a : cr.monomials) mons.push_back(basis[a].to_string());
        jc["monomials"] = mons;
        jc["in_span"] = cr.in_span;
        ordered_json fitj = ordered_json::array();
        for (const auto& c : cr.fit) fitj.push_back(c.to_string());
        jc["fit"] = fitj;
        j["span_residual_zero"] = cr.in_span;
        js["classes"].push_back(jc);
    }
    j["span"] = js;
    emit(g, j);
    return span.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_multiplicities(const GlobalOpts& g, const std::string& weight_csv, const std::string& method,
                       int npoints) {
    DominantE8 w = parse_weight(weight_csv);
    ordered_json j;
    j["weight"] = weight_json(w);
    j["method"] = method;

    ordered_json freud;
    if (method == "freudenthal" || method == "both") freud = cached_freudenthal(g, w);

    MultSolveResult chars;
    if (method == "chars" || method == "both") {
        auto models = eigenvalue_models({2, 8, 12, 14});
        SplitMix64 rng(g.seed);
        std::vector<EvalPoint> pts;
        for (int i = 0; i < npoints; ++i) pts.push_back(EvalPoint::random(rng, 30, 7));
        chars = solve_multiplicities(w, models, pts);
        ordered_json jc;
        jc["determined"] = chars.determined;
        jc["consistent"] = chars.consistent;
        jc["rank"] = chars.rank;
        jc["unknowns"] = chars.unknowns;
        if (!chars.note.empty()) jc["note"] = chars.note;
        if (chars.determined) {
            jc["entries"] = ordered_json::array();
            for (const auto& o : chars.multiplicities) {
                ordered_json e;
                e["weight"] = weight_json(o.weight);
                e["multiplicity"] = o.multiplicity.get_str();
                jc["entries"].push_back(e);
            }
        }
        j["chars"] = jc;
    }
    if (method == "freudenthal" || method == "both") j["freudenthal"] = freud;

    if (method == "both") {
        bool agree = chars.determined;
        if (chars.determined) {
            for (const auto& o : chars.multiplicities) {
                bool found = false;
                for (const auto& e : freud["entries"])
                    if (e["weight"] == weight_json(o.weight)) {
                        found = e["multiplicity"].get<std::string>() == o.multiplicity.get_str();
                        break;
                    }
                agree = agree && found;
            }
        }
        j["agree"] = agree;
    }

    if (g.format == "csv") {
        std::cout << "r1,r2,r3,r4,r5,r6,r7,r8,multiplicity\n";
        const ordered_json& entries =
            (method == "chars") ? j["chars"]["entries"] : j["freudenthal"]["entries"];
        for (const auto& e : entries) {
            for (const auto& v : e["weight"]) std::cout << v.dump() << ",";
            std::cout << e["multiplicity"].get<std::string>() << "\n";
        }
        return kExitOk;
    }
    emit(g, j);
    return kExitOk;
}

int cmd_dims(const GlobalOpts& g, const std::string& weight_csv) {
    DominantE8 w = parse_weight(weight_csv);
    Int weyl = dim_rep_weyl(w);
    Int orbit = dim_rep(w); // validated against weyl internally
    ordered_json j;
    j["weight"] = weight_json(w);
    j["dim"] = orbit.get_str();
    j["orbit_sum"] = orbit.get_str();
    j["weyl_formula"] = weyl.get_str();
    j["agree"] = orbit == weyl;
    emit(g, j);
    return kExitOk;
}

int cmd_verify_cache(const GlobalOpts& g) {
    auto cfg = g.cache();
    ordered_json j;
    if (!cfg.enabled()) {
        j["checked"] = 0;
        j["pass"] = true;
        j["note"] = "cache disabled (no --cache-dir)";
        emit(g, j);
        return kExitOk;
    }
    auto keys = cache_keys(cfg);
    SplitMix64 rng(g.seed);
    size_t n = std::min<size_t>(5, keys.size());
    std::vector<std::string> chosen;
    {
        std::vector<std::string> pool = keys;
        for (size_t i = 0; i < n; ++i) {
            size_t idx = rng.below(pool.size());
            chosen.push_back(pool[idx]);
            pool.erase(pool.begin() + static_cast<long>(idx));
        }
    }
    bool pass = true;
    j["entries"] = ordered_json::array();
    for (const auto& key : chosen) {
        auto stored = cache_get(cfg, key);
        ordered_json recomputed;
        std::string prefix = key.substr(0, key.find('?'));
        std::string weight_csv = key.substr(key.find("weight=") + 7);
        if (prefix == "sigma-set/v1") {
            recomputed = sigma_set_json(sigma_set_transversal(parse_weight(weight_csv)));
        } else if (prefix == "freudenthal/v1") {
            recomputed = freudenthal_json(parse_weight(weight_csv));
        } else {
            pass = false;
            j["entries"].push_back({{"key", key}, {"status", "unknown key schema"}});
            continue;
        }
        bool same = stored.has_value() && stored->dump() == recomputed.dump();
        pass = pass && same;
        j["entries"].push_back({{"key", key}, {"match", same}});
    }
    j["checked"] = n;
    j["pass"] = pass;
    emit(g, j);
    return pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact E8/A8 Weyl-orbit decompositions, orbit characters, Casimir-eigenvalue "
                 "polynomials and weight multiplicities"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache-dir", g.cache_dir, "Persistent result cache directory");
    app.add_option("--seed", g.seed, "Seed for random evaluation points");
    app.add_option("--threads", g.threads, "Worker threads for pure computations");

    std::string weight_csv, point_csv, method = "both", k12_zero_str;
    int degree = 8, alpha = 1, npoints = 20, samples = 25, mpoints = 6;
    bool exact = false, oracle = false, sumset = false;

    auto* c_sigma = app.add_subcommand("sigma-set", "A8-dominant members of an E8 Weyl orbit");
    c_sigma->add_option("--weight", weight_csv, "Dynkin labels r1,...,r8")->required();
    c_sigma->add_flag("--sumset", sumset, "Also run the sum-set construction and report agreement");

    auto* c_osize = app.add_subcommand("orbit-size", "Size of an E8 Weyl orbit");
    c_osize->add_option("--weight", weight_csv, "Dynkin labels r1,...,r8")->required();

    auto* c_char = app.add_subcommand("char", "Degree-M orbit character of an E8 Weyl orbit");
    c_char->add_option("--degree", degree, "Character degree")->required();
    c_char->add_option("--e8-weight", weight_csv, "Dynkin labels r1,...,r8")->required();
    c_char->add_option("--point", point_csv, "Evaluation point x1,...,x8 (rationals)")->required();
    c_char->add_flag("--oracle", oracle, "Use brute-force orbit enumeration (guarded)");

    auto* c_cas = app.add_subcommand("casimir-eval", "Evaluate a basis function K_alpha(degree)");
    c_cas->add_option("--degree", degree, "8, 12 or 14")->required();
    c_cas->add_option("--alpha", alpha, "Index within the family")->required();
    c_cas->add_option("--weight", weight_csv, "Dynkin labels r1,...,r8")->required();
    c_cas->add_option("--k12-zero", k12_zero_str, "Override the unresolved degree-12 constant");

    auto* c_dual = app.add_subcommand("verify-dualities", "Check the power-sum reduction identities");
    c_dual->add_flag("--exact", exact, "Exact polynomial expansion for all degrees");
    c_dual->add_option("--points", npoints, "Random points for degrees 12 and 14");

    auto* c_omega = app.add_subcommand("verify-omega", "Derive the character tables and compare "
                                                       "with the published fixtures");

    auto* c_vk = app.add_subcommand("verify-k", "Class collapse, span and rank of the basis functions");
    c_vk->add_option("--degree", degree, "8, 12 or 14")->required();
    c_vk->add_option("--samples", samples, "Seeded weights for the rank computation");

    auto* c_mult = app.add_subcommand("multiplicities", "Inner multiplicities of a representation");
    c_mult->add_option("--weight", weight_csv, "Dynkin labels r1,...,r8")->required();
    c_mult->add_option("--method", method, "freudenthal | chars | both")
        ->check(CLI::IsMember({"freudenthal", "chars", "both"}));
    c_mult->add_option("--points", mpoints, "Evaluation points per degree for the linear system");

    auto* c_dims = app.add_subcommand("dims", "Dimension by orbit sums and by the Weyl formula");
    c_dims->add_option("--weight", weight_csv, "Dynkin labels r1,...,r8")->required();

    auto* c_vc = app.add_subcommand("verify-cache", "Recompute random cache entries byte-for-byte");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArgs;
    }

    set_thread_count(g.threads);

    if (g.format == "csv" && !(c_sigma->parsed() || c_mult->parsed())) {
        std::cerr << "csv output is only available for sigma-set and multiplicities\n";
        return kExitBadArgs;
    }

    try {
        if (c_sigma->parsed()) return cmd_sigma_set(g, weight_csv, sumset);
        if (c_osize->parsed()) return cmd_orbit_size(g, weight_csv);
        if (c_char->parsed()) return cmd_char(g, degree, weight_csv, point_csv, oracle);
        if (c_cas->parsed()) return cmd_casimir_eval(g, degree, alpha, weight_csv, k12_zero_str);
        if (c_dual->parsed()) return cmd_verify_dualities(g, exact, npoints);
        if (c_omega->parsed()) return cmd_verify_omega(g);
        if (c_vk->parsed()) return cmd_verify_k(g, degree, samples);
        if (c_mult->parsed()) return cmd_multiplicities(g, weight_csv, method, mpoints);
        if (c_dims->parsed()) return cmd_dims(g, weight_csv);
        if (c_vc->parsed()) return cmd_verify_cache(g);
    } catch (const OrbitTooLargeError& e) {
        std::cerr << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitBadArgs;
}
