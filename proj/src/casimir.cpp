#include "e8cas/casimir.hpp"

#include "e8cas/linalg.hpp"
#include "e8cas/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace e8cas {

Rat theta(int M, const DominantE8& r) {
    if (M < 1) throw std::invalid_argument("theta: degree must be positive");
    auto th = theta_vector(r);
    Rat s;
    for (const auto& t : th) s += t.pow(static_cast<unsigned long>(M));
    return s;
}

namespace {

// Theta(1..9) of one weight, with cheap power access.
struct ThetaValues {
    std::array<Rat, 10> t;

    explicit ThetaValues(const DominantE8& r) {
        auto coords = theta_vector(r);
        std::array<Rat, 9> pw;
        pw.fill(Rat(1));
        for (int m = 1; m <= 9; ++m) {
            Rat s;
            for (int i = 0; i < 9; ++i) {
                pw[i] *= coords[i];
                s += pw[i];
            }
            t[m] = s;
        }
    }

    const Rat& operator[](int m) const { return t[m]; }
};

using Term = std::pair<long, std::vector<int>>;

Rat eval_terms(const ThetaValues& th, std::initializer_list<Term> terms) {
    Rat sum;
    for (const auto& [coeff, degs] : terms) {
        Rat t{Int(coeff)};
        for (int d : degs) t *= th[d];
        sum += t;
    }
    return sum;
}

Rat w1_8(const ThetaValues& th) {
    return eval_terms(th, {
        {68580, {8}}, {-42672, {2, 6}}, {-42672, {3, 5}}, {-13335, {4, 4}},
        {13335, {2, 2, 4}}, {17780, {2, 3, 3}}, {-939, {2, 2, 2, 2}},
    });
}

Rat w2_8(const ThetaValues& th) {
    return eval_terms(th, {
        {76765890960, {8}}, {-47741514624, {2, 6}}, {-47569228416, {3, 5}},
        {-14950629660, {4, 4}}, {14921466630, {2, 2, 4}}, {19832476160, {2, 3, 3}},
        {-1050561847, {2, 2, 2, 2}},
    });
}

Rat w1_12(const ThetaValues& th) {
    return eval_terms(th, {
        {302400, {3, 9}}, {-56700, {4, 8}}, {-51840, {5, 7}}, {-158400, {2, 3, 7}},
        {30240, {6, 6}}, {-168000, {3, 3, 6}}, {33264, {2, 5, 5}}, {-80640, {3, 4, 5}},
        {16275, {4, 4, 4}}, {92400, {2, 3, 3, 4}}, {19600, {3, 3, 3, 3}},
    });
}

Rat w2_12(const ThetaValues& th) {
    return eval_terms(th, {
        {42338419200, {3, 9}}, {-7938453600, {4, 8}}, {-250343238600, {2, 2, 8}},
        {-7258014720, {5, 7}}, {-22177267200, {2, 3, 7}}, {4233841920, {6, 6}},
        {-23521344000, {3, 3, 6}}, {156357159840, {2, 2, 2, 6}}, {4657226112, {2, 5, 5}},
        {-11290245120, {3, 4, 5}}, {160591001760, {2, 2, 3, 5}}, {2278630200, {4, 4, 4}},
        {48089818350, {2, 2, 4, 4}}, {12936739200, {2, 3, 3, 4}}, {-48806484300, {2, 2, 2, 2, 4}},
        {2744156800, {3, 3, 3, 3}}, {-66618900600, {2, 2, 2, 3, 3}}, {3440480295, {2, 2, 2, 2, 2, 2}},
    });
}

Rat w3_12(const ThetaValues& th) {
    return eval_terms(th, {
        {1976486400, {3, 9}}, {-370591200, {4, 8}}, {63622800, {2, 2, 8}},
        {-338826240, {5, 7}}, {-1035302400, {2, 3, 7}}, {197648640, {6, 6}},
        {-1098048000, {3, 3, 6}}, {-12136320, {2, 2, 2, 6}}, {217413504, {2, 5, 5}},
        {-527063040, {3, 4, 5}}, {185512320, {2, 2, 3, 5}}, {106373400, {4, 4, 4}},
        {-39822300, {2, 2, 4, 4}}, {603926400, {2, 3, 3, 4}}, {6366150, {2, 2, 2, 2, 4}},
        {128105600, {3, 3, 3, 3}}, {-63571200, {2, 2, 2, 3, 3}}, {-274935, {2, 2, 2, 2, 2, 2}},
    });
}

Rat w4_12(const ThetaValues& th) {
    return eval_terms(th, {
        {-1501985020838400, {3, 9}}, {192772901311200, {4, 8}}, {2407922770302000, {2, 2, 8}},
        {-13295642434560, {5, 7}}, {760428342950400, {2, 3, 7}}, {-156516673824000, {6, 6}},
        {33565287369600, {2, 4, 6}}, {883577458444800, {3, 3, 6}}, {-1515778400455200, {2, 2, 2, 6}},
        {-53070803904384, {2, 5, 5}}, {579544204861440, {3, 4, 5}}, {-1696086939738240, {2, 2, 3, 5}},
        {-47654628701400, {4, 4, 4}}, {-461057612469300, {2, 2, 4, 4}}, {-463327486742400, {2, 3, 3, 4}},
        {472701971331450, {2, 2, 2, 2, 4}}, {-111245008649600, {3, 3, 3, 3}},
        {684206487048000, {2, 2, 2, 3, 3}}, {-33351005297925, {2, 2, 2, 2, 2, 2}},
    });
}

Rat w1_14(const ThetaValues& th) {
    return eval_terms(th, {
        {211680, {9, 5}}, {26460, {8, 6}}, {-43200, {7, 7}}, {-29400, {8, 3, 3}},
        {58800, {7, 4, 3}}, {-122304, {6, 5, 3}}, {-12495, {6, 4, 4}}, {-91728, {5, 5, 4}},
        {27440, {5, 3, 3, 3}}, {-9800, {4, 4, 3, 3}},
    });
}

Rat q12_of(const ThetaValues& th) {
    const Rat& t2 = th[2];
    Rat poly = Rat(Int(-105)) * t2.pow(5) + Rat(Int(341250)) * t2.pow(4) -
               Rat(Int(443786280)) * t2.pow(3) + Rat(Int(288672359200)) * t2.pow(2) -
               Rat(Int(93922348435072)) * t2 + Rat(Int("12228055880335360"));
    return (t2 - Rat(620)) * poly;
}

Rat q14_of(const ThetaValues& th) {
    const Rat& t2 = th[2];
    Rat poly = Rat(Int(-3)) * t2.pow(6) + Rat(Int(11790)) * t2.pow(5) -
               Rat(Int(19314252)) * t2.pow(4) + Rat(Int("16882085360")) * t2.pow(3) -
               Rat(Int("8303952287424")) * t2.pow(2) + Rat(Int("2179380420445440")) * t2 -
               Rat(Int("238431403767424000"));
    return (t2 - Rat(620)) * poly;
}

Rat k8_of(int alpha, const ThetaValues& th) {
    switch (alpha) {
        case 1: return Rat(729) * th[8] - Rat(Int("71757069294212"));
        case 2: return w1_8(th) + Rat(Int("385526887200"));
        default: throw std::out_of_range("k8: alpha must be 1 or 2");
    }
}

Rat k12_core(int alpha, const ThetaValues& th, const Rat& k12_zero) {
    if (alpha < 1 || alpha > 8) throw std::out_of_range("k12: alpha must be 1..8");
    const Rat& t2 = th[2];
    Rat t2sq = t2 * t2;
    if (alpha == 1) {
        Rat inner = Rat(Int("2327783")) * w2_8(th) * t2sq +
                    Rat(Int("1641651348800")) * w1_8(th) * t2sq +
                    Rat(Int("1853819288565353101504512")) * t2sq -
                    Rat(Int("5646385058438400")) * w1_8(th) * t2 -
                    Rat(Int("2457714965901036308812800000")) * t2 +
                    Rat(Int("1878213525838949376")) * w1_8(th) +
                    Rat(Int("474462162108792")) * k12_zero +
                    Rat(Int("814849980464400425555898009600"));
        return w1_12(th) + Rat(Int(105), Int("1392517035128")) * inner;
    }
    if (alpha == 2) {
        Rat inner = Rat(Int(11)) * w2_8(th) * t2sq -
                    Rat(Int("13946970")) * w1_8(th) * t2sq -
                    Rat(Int("717386789108493504")) * t2sq +
                    Rat(Int("2185025300")) * w1_8(th) * t2 +
                    Rat(Int("951080970408987600000")) * t2 -
                    Rat(Int("726826815792")) * w1_8(th) -
                    Rat(Int("315043889595739569446400"));
        return w1_12(th) + Rat(Int(105), Int(6580376)) * inner;
    }
    struct Combo { const char *a, *b, *c; };
    static const Combo combos[6] = {
        {"-10742925608415/467309767", "6983349/10867669", "3884320/10867669"},
        {"-2898884687985/487195289", "39572311/237932583", "198360272/237932583"},
        {"-511567886115/1063875427", "2327783/173189023", "170861240/173189023"},
        {"-2557839430575/69599327", "11638915/11330123", "-308792/11330123"},
        {"-17904876014025/1362158257", "11638915/31678099", "20039184/31678099"},
        {"-26924625585/9942761", "2327783/30753191", "28425408/30753191"},
    };
    const Combo& cb = combos[alpha - 3];
    return Rat::from_string(cb.a) * q12_of(th) + Rat::from_string(cb.b) * k12_core(1, th, k12_zero) +
           Rat::from_string(cb.c) * k12_core(2, th, k12_zero);
}

Rat k14_core(int alpha, const ThetaValues& th) {
    if (alpha < 1 || alpha > 19) throw std::out_of_range("k14: alpha must be 1..19");
    const Rat& t2 = th[2];
    if (alpha == 1) {
        Rat inner = Rat(Int("-50198389200")) * w2_12(th) * t2 +
                    Rat(Int("1814183745255")) * w3_12(th) * t2 +
                    Rat(Int("719963")) * w4_12(th) * t2 +
                    Rat(Int("114941496614400")) * w2_12(th) -
                    Rat(Int("2663797055081400")) * w3_12(th) +
                    Rat(Int("282784300728374808115200")) * w1_8(th) * t2 -
                    Rat(Int("63215721507749516817408000")) * w1_8(th) -
                    Rat(Int("1088012169332650346400")) * t2.pow(7) +
                    Rat(Int("4950455370463559076120000")) * t2.pow(6) -
                    Rat(Int("9655764190981762706790537600")) * t2.pow(5) +
                    Rat(Int("10465560623426071788759214080000")) * t2.pow(4) -
                    Rat(Int("6807538538432150822570374332825600")) * t2.pow(3) +
                    Rat(Int("2657394331038056352474406872078336000")) * t2.pow(2) -
                    Rat(Int("576387923771111244952245791209505280000")) * t2 +
                    Rat(Int("53583585232103605801009946012851814400000"));
        return w1_14(th) + Rat(Int(1), Int("409396489250473267200")) * inner;
    }
    if (alpha == 2) {
        Rat inner = w4_12(th) * t2 +
                    Rat(Int("19504800")) * w2_12(th) -
                    Rat(Int("10727283367475136000")) * w1_8(th) +
                    Rat(Int("47986596584438400")) * w1_8(th) * t2 +
                    Rat(Int("16539581376126884275200")) * t2.pow(3) -
                    Rat(Int("33154342667599799842560000")) * t2.pow(2) +
                    Rat(Int("22141768911037509306263040000")) * t2 -
                    Rat(Int("4925899975161328995062246400000"));
        return w1_14(th) + Rat(Int(1), Int("568635456614400")) * inner;
    }
    if (alpha == 3) {
        Rat inner = Rat(Int("1639053360")) * w2_12(th) * t2 -
                    Rat(Int("7819677495")) * w3_12(th) * t2 +
                    Rat(Int("168907")) * w4_12(th) * t2 +
                    Rat(Int("52014010923000")) * w3_12(th) -
                    Rat(Int("2304112252773339559835020800000")) * t2 +
                    Rat(Int("1634892368046326720660996352000000"));
        return w1_14(th) + Rat(Int(1), Int("96046509070368460800")) * inner;
    }
    struct Combo { const char *a, *b, *c, *d; };
    static const Combo combos[16] = {
        {"-3518381271825/4968075880576", "341316459225/426944020987", "-522985910360/426944020987", "608613472122/426944020987"},
        {"1555746820875/12804209320064", "-150922243875/1100361738443", "8647219074000/7702532169101", "1668191078/114963166703"},
        {"-6486267514725/15677800418432", "629229662925/1347310973459", "-28104693257260/9431176814213", "33131262430998/9431176814213"},
        {"-674600188425/1456122839168", "588983731225/1126220008419", "-33746326745200/7883540058933", "186601893958/39221592333"},
        {"-6298570125/84286231424", "11609403375/137623612247", "-2012756994830/8670287571561", "9951652153766/8670287571561"},
        {"-15028681275/171940704256", "1457925075/14776154272", "-5220816525/6464567494", "2638218937/1543777312"},
        {"-9597761156475/31040670265216", "931074150675/2667557600917", "-53346689979600/18672903206419", "977642897482/278700047857"},
        {"-378166150305/424558809856", "36685714665/36485522722", "26114321216/383097988581", "-56432673235/766195977162"},
        {"23430680865/381493437568", "-43186980555/622907253529", "2474434996560/4360350774703", "32660069284/65079862309"},
        {"957382659/12109629824", "-92875227/1040671313", "5321365584/7284699191", "2613460196/7284699191"},
        {"1029186358425/5031952172992", "-199681738050/864866779733", "11440936005600/6054067458131", "-59538751957/90359215793"},
        {"-140948002575/553434141824", "41019891925/142682239689", "-2350269799600/998775677823", "15233364348/4969033223"},
        {"-167541965325/110750985344", "16253164725/9517662803", "-250019670828/66623639621", "202871157374/66623639621"},
        {"-1460008554975/2154631950208", "141634721175/185163683221", "-8115082515600/1296145782547", "125668436566/19345459441"},
        {"454756763025/3325977997952", "-44115732825/285826234199", "2527648652400/2000783639393", "-3254550496/29862442379"},
        {"-1971081945/10746294016", "3250632945/15699663914", "-13303413960/7849831957", "582923267/234323342"},
    };
    const Combo& cb = combos[alpha - 4];
    return Rat::from_string(cb.a) * q14_of(th) + Rat::from_string(cb.b) * k14_core(1, th) +
           Rat::from_string(cb.c) * k14_core(2, th) + Rat::from_string(cb.d) * k14_core(3, th);
}

} // namespace

Rat w_aux(const std::string& name, const DominantE8& r) {
    ThetaValues th(r);
    if (name == "W1_8") return w1_8(th);
    if (name == "W2_8") return w2_8(th);
    if (name == "W1_12") return w1_12(th);
    if (name == "W2_12") return w2_12(th);
    if (name == "W3_12") return w3_12(th);
    if (name == "W4_12") return w4_12(th);
    if (name == "W1_14") return w1_14(th);
    throw std::invalid_argument("w_aux: unknown auxiliary '" + name + "'");
}

Rat q12(const DominantE8& r) { return q12_of(ThetaValues(r)); }
Rat q14(const DominantE8& r) { return q14_of(ThetaValues(r)); }

Rat k8(int alpha, const DominantE8& r) { return k8_of(alpha, ThetaValues(r)); }

const Rat& default_k12_zero() {
    // With C denoting the value of the first degree-12 function at the
    // zero weight, the defining formula at r = 0 reads
    //   C = W1_12(0) + (105/D) * (rest(0) + 474462162108792 * C),
    // a linear equation solved here once.
    static const Rat value = [] {
        ThetaValues th0(DominantE8::zero());
        Rat with0 = k12_core(1, th0, Rat(0));
        Rat gamma = Rat(Int(105), Int("1392517035128")) * Rat(Int("474462162108792"));
        return with0 / (Rat(1) - gamma);
    }();
    return value;
}

Rat k12(int alpha, const DominantE8& r, const Rat& k12_zero) {
    return k12_core(alpha, ThetaValues(r), k12_zero);
}

Rat k12(int alpha, const DominantE8& r) { return k12(alpha, r, default_k12_zero()); }

Rat k14(int alpha, const DominantE8& r) { return k14_core(alpha, ThetaValues(r)); }

std::vector<Rat> k_family(int degree, const DominantE8& r, const Rat& k12_zero) {
    ThetaValues th(r);
    std::vector<Rat> out;
    switch (degree) {
        case 2:
            out.push_back(th[2]);
            break;
        case 8:
            for (int a = 1; a <= 2; ++a) out.push_back(k8_of(a, th));
            break;
        case 12:
            for (int a = 1; a <= 8; ++a) out.push_back(k12_core(a, th, k12_zero));
            break;
        case 14:
            for (int a = 1; a <= 19; ++a) out.push_back(k14_core(a, th));
            break;
        default:
            throw std::invalid_argument("k_family: degree must be 2, 8, 12 or 14");
    }
    return out;
}

std::vector<Rat> k_family(int degree, const DominantE8& r) {
    return k_family(degree, r, default_k12_zero());
}

const std::vector<Partition>& monomial_basis(int M) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;

    std::vector<Partition> basis;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            basis.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, max_part); p >= 2; --p) {
            if (rem - p == 1) continue; // no way to finish with parts >= 2
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(M, std::min(M, 9));
    return cache.emplace(M, std::move(basis)).first->second;
}

namespace {

Rat basis_monomial_value(const Partition& part, const std::vector<Rat>& power_sums) {
    Rat v(1);
    for (int p : part.parts) v *= power_sums[p];
    return v;
}

} // namespace

const std::vector<Rat>& extract_cofs(int M, const DominantE8& w, uint64_t seed) {
    static std::map<std::pair<int, DominantE8>, std::vector<Rat>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({M, w});
        if (it != cache.end()) return it->second;
    }

    const auto& basis = monomial_basis(M);
    size_t n = basis.size();
    std::vector<Rat> cofs;

    if (w.is_zero()) {
        cofs.assign(n, Rat(0));
    } else {
        for (int attempt = 0;; ++attempt) {
            if (attempt == 5)
                throw std::logic_error("extract_cofs: evaluation matrix singular after 5 re-draws");
            SplitMix64 rng(seed + 0x9e3779b9ULL * static_cast<uint64_t>(attempt));
            size_t npoints = n + 4;
            std::vector<EvalPoint> pts;
            pts.reserve(npoints);
            for (size_t i = 0; i < npoints; ++i) pts.push_back(EvalPoint::random(rng, 50, 9));

            RatMatrix a(npoints, RatVector(n));
            RatVector b(npoints);
            parallel_for(npoints, [&](size_t i) {
                auto ps = pts[i].power_sums(M);
                for (size_t j = 0; j < n; ++j) a[i][j] = basis_monomial_value(basis[j], ps);
                b[i] = char_rep(M, w, pts[i]);
            });
            auto sol = solve_linear_system(a, b);
            if (sol.consistent && sol.unique) {
                cofs = std::move(sol.particular);
                break;
            }
            if (!sol.consistent)
                throw std::logic_error("extract_cofs: inconsistent system; the degree-" + std::to_string(M) +
                                       " character is not in the span of the monomial basis");
        }
    }

    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::make_pair(M, w), std::move(cofs)).first->second;
}

Rat normalize_P(int M, int alpha, const DominantE8& w) {
    const auto& basis = monomial_basis(M);
    if (alpha < 0 || static_cast<size_t>(alpha) >= basis.size())
        throw std::out_of_range("normalize_P: alpha out of range");
    if (w.is_zero()) return Rat(0);
    DominantE8 ref = DominantE8::fundamental(1);
    const Rat& cof_ref = extract_cofs(M, ref)[alpha];
    if (cof_ref.is_zero())
        throw std::domain_error("normalize_P: reference coefficient vanishes for alpha " +
                                std::to_string(alpha));
    const Rat& cof = extract_cofs(M, w)[alpha];
    return cof * Rat(dim_rep(ref)) / (cof_ref * Rat(dim_rep(w)));
}

std::vector<std::vector<int>> distinct_classes(int M, const std::vector<DominantE8>& sample) {
    if (sample.size() < 5)
        throw std::invalid_argument("distinct_classes: sample must contain at least 5 weights");
    const auto& basis = monomial_basis(M);
    std::vector<std::vector<Rat>> values(basis.size());
    for (size_t a = 0; a < basis.size(); ++a)
        for (const auto& w : sample) values[a].push_back(normalize_P(M, static_cast<int>(a), w));

    std::vector<std::vector<int>> classes;
    std::vector<bool> assigned(basis.size(), false);
    for (size_t a = 0; a < basis.size(); ++a) {
        if (assigned[a]) continue;
        std::vector<int> cls{static_cast<int>(a)};
        assigned[a] = true;
        for (size_t b = a + 1; b < basis.size(); ++b)
            if (!assigned[b] && values[a] == values[b]) {
                cls.push_back(static_cast<int>(b));
                assigned[b] = true;
            }
        classes.push_back(std::move(cls));
    }
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& x, const auto& y) { return x.size() > y.size(); });
    return classes;
}

SpanReport span_check(int M, const std::vector<DominantE8>& sample, size_t fit_count) {
    if (fit_count + 1 > sample.size())
        throw std::invalid_argument("span_check: need held-out weights beyond the fitting subset");
    SpanReport rep;
    rep.degree = M;
    rep.fit_count = fit_count;
    rep.verify_count = sample.size() - fit_count;
    rep.k12_zero = default_k12_zero();

    auto classes = distinct_classes(M, sample);
    std::vector<std::vector<Rat>> kvals; // per sample weight: {1, K_1, ...}
    for (const auto& w : sample) {
        std::vector<Rat> row{Rat(1)};
        for (auto& v : k_family(M, w)) row.push_back(v);
        kvals.push_back(std::move(row));
    }

    rep.pass = true;
    for (const auto& cls : classes) {
        SpanClassReport cr;
        cr.monomials = cls;
        int alpha = cls.front();
        RatMatrix a(fit_count);
        RatVector b(fit_count);
        for (size_t i = 0; i < fit_count; ++i) {
            a[i] = kvals[i];
            b[i] = normalize_P(M, alpha, sample[i]);
        }
        auto sol = solve_linear_system(a, b);
        if (!sol.consistent) {
            cr.in_span = false;
        } else {
            cr.fit = sol.particular;
            cr.in_span = true;
            for (size_t i = fit_count; i < sample.size(); ++i) {
                Rat predicted;
                for (size_t j = 0; j < kvals[i].size(); ++j) predicted += sol.particular[j] * kvals[i][j];
                if (predicted != normalize_P(M, alpha, sample[i])) {
                    cr.in_span = false;
                    break;
                }
            }
        }
        rep.pass = rep.pass && cr.in_span;
        rep.classes.push_back(std::move(cr));
    }
    return rep;
}

size_t independence_rank(int M, const std::vector<DominantE8>& sample) {
    RatMatrix m;
    for (const auto& w : sample) {
        std::vector<Rat> row{Rat(1)};
        for (auto& v : k_family(M, w)) row.push_back(v);
        m.push_back(std::move(row));
    }
    return matrix_rank(std::move(m));
}

DegreeCalibration calibrate_degree(int M, const std::vector<DominantE8>& class_sample,
                                   const std::vector<DominantE8>& check_weights) {
    DegreeCalibration cal;
    cal.degree = M;
    cal.cof_ref = extract_cofs(M, DominantE8::fundamental(1));

    std::vector<std::vector<int>> classes;
    if (M == 2) {
        classes = {{0}};
    } else {
        classes = distinct_classes(M, class_sample);
    }

    DominantE8 ref = DominantE8::fundamental(1);
    std::vector<Rat> k_at_zero = k_family(M, DominantE8::zero());
    std::vector<Rat> k_at_ref = k_family(M, ref);
    std::vector<std::vector<Rat>> k_at_check;
    for (const auto& w : check_weights) k_at_check.push_back(k_family(M, w));

    cal.complete = true;
    for (const auto& cls : classes) {
        ClassModel model;
        model.monomials = cls;
        int alpha = cls.front();
        for (size_t k = 0; k < k_at_zero.size(); ++k) {
            Rat span = k_at_ref[k] - k_at_zero[k];
            if (span.is_zero()) continue;
            // P(0) = 0 and P(lambda_1) = 1 pin the affine map.
            Rat b = Rat(1) / span;
            Rat a = -b * k_at_zero[k];
            bool ok = true;
            for (size_t c = 0; c < check_weights.size(); ++c) {
                if (a + b * k_at_check[c][k] != normalize_P(M, alpha, check_weights[c])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                model.k_index = static_cast<int>(k);
                model.a = a;
                model.b = b;
                break;
            }
        }
        if (model.k_index < 0) cal.complete = false;
        cal.classes.push_back(std::move(model));
    }
    return cal;
}

std::vector<EigenvalueModel> eigenvalue_models(const std::vector<int>& degrees) {
    // Class grouping over small representations; the affine maps are pinned
    // on {trivial, lambda_1} and the matching family member is selected on
    // 2*lambda_1, keeping lambda_7 and larger weights as genuine predictions.
    DominantE8 two_l1(std::array<int64_t, 8>{2, 0, 0, 0, 0, 0, 0, 0});
    std::vector<DominantE8> class_sample = {
        DominantE8::fundamental(1), DominantE8::fundamental(7), two_l1,
        DominantE8::fundamental(2), DominantE8::fundamental(8)};
    std::vector<DominantE8> check_weights = {two_l1};

    std::vector<EigenvalueModel> models;
    for (int M : degrees) {
        DegreeCalibration cal = calibrate_degree(M, class_sample, check_weights);
        if (!cal.complete)
            throw std::logic_error("eigenvalue_models: calibration incomplete for degree " +
                                   std::to_string(M));
        const auto& basis = monomial_basis(M);
        std::vector<int> class_of(basis.size(), -1);
        for (size_t c = 0; c < cal.classes.size(); ++c)
            for (int a : cal.classes[c].monomials) class_of[a] = static_cast<int>(c);

        Rat dim_ref{dim_rep(DominantE8::fundamental(1))};
        EigenvalueModel em;
        em.degree = M;
        em.mean_power = [M, cal, class_of, dim_ref](const DominantE8& w, const EvalPoint& h) {
            const auto& basis = monomial_basis(M);
            std::vector<Rat> kv = k_family(M, w);
            auto ps = h.power_sums(M);
            Rat total;
            for (size_t a = 0; a < basis.size(); ++a) {
                const ClassModel& cm = cal.classes[class_of[a]];
                Rat p_hat = cm.a + cm.b * kv[cm.k_index];
                total += p_hat * cal.cof_ref[a] * basis_monomial_value(basis[a], ps);
            }
            return total / dim_ref;
        };
        models.push_back(std::move(em));
    }
    return models;
}

} // namespace e8cas
