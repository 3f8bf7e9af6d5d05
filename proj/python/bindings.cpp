#include "e8cas/casimir.hpp"
#include "e8cas/parallel.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

namespace py = pybind11;
using namespace e8cas;
using nlohmann::ordered_json;

namespace {

DominantE8 weight_from(const std::vector<int64_t>& labels) {
    if (labels.size() != 8) throw std::invalid_argument("weight needs exactly 8 Dynkin labels");
    std::array<int64_t, 8> r;
    std::copy(labels.begin(), labels.end(), r.begin());
    return DominantE8(r);
}

EvalPoint point_from(const std::vector<std::string>& coords) {
    if (coords.size() != 8) throw std::invalid_argument("point needs exactly 8 coordinates");
    std::array<Rat, 8> x;
    for (int i = 0; i < 8; ++i) x[i] = Rat::from_string(coords[i]);
    return EvalPoint::from_free(x);
}

py::object big_int(const Int& v) {
    // route through the decimal string so arbitrary precision survives
    return py::int_(py::str(v.get_str()));
}

py::dict sigma_set_dict(const SigmaSet& s) {
    py::dict d;
    py::list src;
    for (auto v : s.source.r) src.append(v);
    d["source"] = src;
    py::list members;
    for (const auto& m : s.members) {
        py::dict jm;
        py::list q;
        for (const auto& c : m.q.q) q.append(c.to_string());
        jm["q"] = q;
        jm["orbit_size"] = big_int(m.a8_orbit_size);
        members.append(jm);
    }
    d["members"] = members;
    d["e8_orbit_size"] = big_int(s.e8_orbit_size);
    return d;
}

} // namespace

PYBIND11_MODULE(_e8cas, m) {
    m.doc() = "Exact E8/A8 Weyl-orbit decompositions, orbit characters, Casimir-eigenvalue "
              "polynomials and weight multiplicities";

    m.def("sigma_set", [](const std::vector<int64_t>& w) {
        return sigma_set_dict(sigma_set_transversal(weight_from(w)));
    }, py::arg("weight"), "A8-dominant members of the E8 Weyl orbit with their orbit sizes");

    m.def("e8_orbit_size", [](const std::vector<int64_t>& w) {
        return big_int(e8_orbit_size(weight_from(w)));
    }, py::arg("weight"));

    m.def("dim_rep", [](const std::vector<int64_t>& w) {
        return big_int(dim_rep(weight_from(w)));
    }, py::arg("weight"), "Dimension of the irreducible representation");

    m.def("count_partitions_2to9", &count_partitions_2to9, py::arg("m"));

    m.def("theta", [](int degree, const std::vector<int64_t>& w) {
        return theta(degree, weight_from(w)).to_string();
    }, py::arg("degree"), py::arg("weight"));

    m.def("char_e8_orbit", [](int degree, const std::vector<int64_t>& w,
                              const std::vector<std::string>& point) {
        return char_e8_orbit(degree, weight_from(w), point_from(point)).to_string();
    }, py::arg("degree"), py::arg("weight"), py::arg("point"));

    m.def("char_rep", [](int degree, const std::vector<int64_t>& w,
                         const std::vector<std::string>& point) {
        return char_rep(degree, weight_from(w), point_from(point)).to_string();
    }, py::arg("degree"), py::arg("weight"), py::arg("point"));

    m.def("casimir_eval", [](int degree, int alpha, const std::vector<int64_t>& w) {
        DominantE8 r = weight_from(w);
        Rat v;
        if (degree == 8) v = k8(alpha, r);
        else if (degree == 12) v = k12(alpha, r);
        else if (degree == 14) v = k14(alpha, r);
        else throw std::invalid_argument("degree must be 8, 12 or 14");
        return v.to_string();
    }, py::arg("degree"), py::arg("alpha"), py::arg("weight"));

    m.def("verify_duality", [](int degree, bool exact, int points, uint64_t seed) {
        DualityReport rep = verify_duality(degree, exact, points, seed);
        py::dict d;
        d["M"] = rep.M;
        d["mode"] = rep.mode;
        d["pass"] = rep.pass;
        d["monomials"] = rep.monomials;
        return d;
    }, py::arg("degree"), py::arg("exact") = false, py::arg("points") = 20, py::arg("seed") = 0);

    m.def("verify_omega", [](int degree) {
        return derive_omega(degree) == omega_fixture(degree);
    }, py::arg("degree"));

    m.def("multiplicities", [](const std::vector<int64_t>& w) {
        const RepDecomposition& dec = rep_decomposition(weight_from(w));
        py::list out;
        for (const auto& o : dec.orbits) {
            py::dict e;
            py::list labels;
            for (auto v : o.weight.r) labels.append(v);
            e["weight"] = labels;
            e["multiplicity"] = big_int(o.multiplicity);
            out.append(e);
        }
        return out;
    }, py::arg("weight"), "Inner multiplicities by the Freudenthal recursion");

    m.def("solve_multiplicities", [](const std::vector<int64_t>& w, int points, uint64_t seed) {
        auto models = eigenvalue_models({2, 8, 12, 14});
        SplitMix64 rng(seed);
        std::vector<EvalPoint> pts;
        for (int i = 0; i < points; ++i) pts.push_back(EvalPoint::random(rng, 30, 7));
        MultSolveResult res = solve_multiplicities(weight_from(w), models, pts);
        py::dict d;
        d["determined"] = res.determined;
        d["rank"] = res.rank;
        d["unknowns"] = res.unknowns;
        d["note"] = res.note;
        py::list entries;
        for (const auto& o : res.multiplicities) {
            py::dict e;
            py::list labels;
            for (auto v : o.weight.r) labels.append(v);
            e["weight"] = labels;
            e["multiplicity"] = big_int(o.multiplicity);
            entries.append(e);
        }
        d["entries"] = entries;
        return d;
    }, py::arg("weight"), py::arg("points") = 6, py::arg("seed") = 0,
       "Multiplicities from the calibrated eigenvalue equations");

    m.def("set_thread_count", &set_thread_count, py::arg("n"));
}
