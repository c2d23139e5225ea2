#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liedef/cochain.hpp"
#include "liedef/deformation.hpp"
#include "liedef/lie.hpp"

namespace liedef {

using Json = nlohmann::ordered_json;

struct LabeledCochain {
    std::string label;
    Cochain cochain;
};

/// A loaded problem: the homomorphism, matrix-target metadata, and the
/// optional list of deformation directions shipped with the input.
struct Instance {
    std::string name;
    LieHom rho;
    int matrix_n = 0;  // > 0 when the target is gl(n)
    std::vector<LabeledCochain> cocycles;
};

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return rat(j.get<long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw std::invalid_argument("expected a rational as integer or \"p/q\" string");
}

inline GlElement matrix_from_json(const Json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw std::invalid_argument("matrix must be an n x n array");
    GlElement m(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix must be an n x n array");
        for (int k = 0; k < n; ++k) m.at(i, k) = rational_from_json(row[static_cast<size_t>(k)]);
    }
    return m;
}

inline void load_cocycles(const Json& j, Instance& inst) {
    if (!j.contains("cocycles")) return;
    const int hd = inst.rho.source.dim, gd = inst.rho.target.dim;
    for (const Json& cj : j.at("cocycles")) {
        LabeledCochain lc;
        lc.label = cj.value("label", "c" + std::to_string(inst.cocycles.size() + 1));
        const Json& coords = cj.at("coords");
        lc.cochain = Cochain(1, hd, gd);
        if (static_cast<int>(coords.size()) != static_cast<int>(lc.cochain.coords.size()))
            throw std::invalid_argument("cocycle '" + lc.label + "' has wrong coordinate length");
        for (size_t k = 0; k < lc.cochain.coords.size(); ++k)
            lc.cochain.coords[k] = rational_from_json(coords[k]);
        inst.cocycles.push_back(std::move(lc));
    }
}

/// Two accepted input forms:
///   { "n": k, "generators": [k x k matrices...], "labels"?, "cocycles"? }
///     -- the algebra spanned by the generators, with the inclusion into gl(n)
///   { "dim": d, "labels": [...], "brackets": [{"i","j","coeffs":{label: q}}],
///     "target_n": k, "images"?: [k x k matrices], "cocycles"? }
///     -- structure constants plus an explicit map (zero map if images absent).
/// Bracket indices are 0-based.
inline Instance instance_from_json(const Json& j, std::string name = "instance") {
    Instance inst;
    inst.name = j.value("name", name);

    if (j.contains("generators")) {
        const int n = j.at("n").get<int>();
        std::vector<GlElement> gens;
        for (const Json& gj : j.at("generators")) gens.push_back(matrix_from_json(gj, n));
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        auto [h, rho] = algebra_from_matrices(gens, labels);
        inst.rho = std::move(rho);
        inst.matrix_n = n;
    } else if (j.contains("dim")) {
        const int d = j.at("dim").get<int>();
        LieAlgebra h(d);
        if (j.contains("labels")) {
            auto labels = j.at("labels").get<std::vector<std::string>>();
            if (static_cast<int>(labels.size()) != d) throw std::invalid_argument("label count mismatch");
            h.labels = labels;
        }
        auto label_index = [&](const std::string& lbl) {
            for (int k = 0; k < d; ++k)
                if (h.labels[static_cast<size_t>(k)] == lbl) return k;
            throw std::invalid_argument("unknown basis label '" + lbl + "' in brackets");
        };
        for (const Json& bj : j.value("brackets", Json::array())) {
            int bi = bj.at("i").get<int>(), bjx = bj.at("j").get<int>();
            if (bi < 0 || bi >= d || bjx < 0 || bjx >= d)
                throw std::invalid_argument("bracket index out of range");
            RatVec coords(static_cast<size_t>(d));
            for (const auto& [lbl, val] : bj.at("coeffs").items())
                coords[static_cast<size_t>(label_index(lbl))] = rational_from_json(val);
            h.structure[static_cast<size_t>(bi)][static_cast<size_t>(bjx)] = coords;
            h.structure[static_cast<size_t>(bjx)][static_cast<size_t>(bi)] = vec_scale(-1, coords);
        }
        if (!h.antisymmetry_holds()) throw std::invalid_argument("structure constants violate antisymmetry");
        if (!h.jacobi_holds()) throw std::invalid_argument("structure constants violate the Jacobi identity");

        const int n = j.at("target_n").get<int>();
        inst.rho.source = std::move(h);
        inst.rho.target = gl_algebra(n);
        inst.matrix_n = n;
        if (j.contains("images")) {
            for (const Json& ij : j.at("images"))
                inst.rho.images.push_back(matrix_from_json(ij, n).flat());
            if (static_cast<int>(inst.rho.images.size()) != inst.rho.source.dim)
                throw std::invalid_argument("need one image per basis vector");
        } else {
            inst.rho.images.assign(static_cast<size_t>(inst.rho.source.dim),
                                   RatVec(static_cast<size_t>(n) * n));
        }
        auto chk = check_homomorphism(inst.rho);
        if (!chk.ok) {
            const auto& v = chk.violations.front();
            throw std::invalid_argument("map is not a Lie homomorphism: fails on the pair (" +
                                        inst.rho.source.labels[static_cast<size_t>(v.i)] + "," +
                                        inst.rho.source.labels[static_cast<size_t>(v.j)] + ")");
        }
    } else {
        throw std::invalid_argument("input needs either \"generators\" or \"dim\"");
    }

    load_cocycles(j, inst);
    return inst;
}

/// The built-in reference instance, stored in the same JSON schema that
/// external files use and run through the same loader.
inline const char* builtin_heisenberg_gl3_json() {
    return R"JSON({
  "name": "heisenberg-gl3",
  "n": 3,
  "labels": ["X", "Y", "Z"],
  "generators": [
    [["0","0","0"], ["1","0","0"], ["0","0","0"]],
    [["0","0","0"], ["0","0","0"], ["1","0","0"]],
    [["0","0","0"], ["0","0","0"], ["0","1","0"]]
  ],
  "cocycles": [
    {"label": "rho1",
     "coords": ["0","0","0","0","0","0","0","1","0",
                "0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0"]},
    {"label": "rho2",
     "coords": ["0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0",
                "0","0","0","1","0","0","0","0","0"]},
    {"label": "rho3",
     "coords": ["0","0","0","0","0","0","0","0","0",
                "0","0","0","1","0","0","0","0","0",
                "1","0","0","0","2","0","0","0","0"]},
    {"label": "rho4",
     "coords": ["1","0","0","0","1","0","0","0","1",
                "0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0"]}
  ]
})JSON";
}

/// Loads "builtin:heisenberg-gl3" or a JSON file path.
inline Instance load_instance(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        std::string which = spec.substr(8);
        if (which == "heisenberg-gl3")
            return instance_from_json(Json::parse(builtin_heisenberg_gl3_json()), which);
        throw std::invalid_argument("unknown builtin instance '" + which + "'");
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open input file '" + spec + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + spec + "': " + e.what());
    }
    return instance_from_json(j, spec);
}

/// Deformation directions: the instance's own validated cocycle list when
/// present, the computed representatives otherwise.
inline std::vector<Cochain> deformation_directions(const Instance& inst, const CohomologyReport& rep) {
    if (inst.cocycles.empty()) {
        std::vector<Cochain> dirs;
        for (const auto& r : rep.representatives) dirs.push_back(r);
        return dirs;
    }
    std::vector<RatVec> cls;
    for (const auto& [label, c] : inst.cocycles) {
        if (!delta(1, inst.rho, c).is_zero())
            throw std::invalid_argument("supplied cocycle '" + label + "' is not a 1-cocycle");
        if (rep.coboundary_basis.contains(c.coords))
            throw std::invalid_argument("supplied cocycle '" + label + "' is a coboundary");
        cls.push_back(class_coordinates(c.coords, rep));
    }
    if (rref(QMatrix::from_columns(cls, rep.dim_h)).rank != static_cast<int>(cls.size()))
        throw std::invalid_argument("supplied cocycles have dependent cohomology classes");
    std::vector<Cochain> dirs;
    for (const auto& lc : inst.cocycles) dirs.push_back(lc.cochain);
    return dirs;
}

// ---- JSON report rendering ----------------------------------------------------

inline Json coords_json(const RatVec& v) {
    Json arr = Json::array();
    for (const auto& q : v) arr.push_back(rat_str(q));
    return arr;
}

inline Json cochain_json(const Cochain& c, const Instance& inst) {
    return Json{{"rendering", cochain_str(c, inst.rho.source.labels, inst.rho.target.labels)},
                {"coords", coords_json(c.coords)}};
}

inline Json basis_json(const SubspaceBasis& b, int degree, const Instance& inst) {
    Json arr = Json::array();
    for (const auto& v : b.vectors) {
        Cochain c(degree, inst.rho.source.dim, inst.rho.target.dim);
        c.coords = v;
        arr.push_back(cochain_json(c, inst));
    }
    return arr;
}

inline Json cohomology_report_json(const CohomologyReport& rep, const Instance& inst) {
    Json j;
    j["dims"] = Json{{"Z1", rep.dim_z}, {"B1", rep.dim_b}, {"H1", rep.dim_h}};
    j["cocycle_basis"] = basis_json(rep.cocycle_basis, rep.p, inst);
    j["coboundary_basis"] = basis_json(rep.coboundary_basis, rep.p, inst);
    Json reps = Json::array();
    for (const auto& r : rep.representatives) reps.push_back(cochain_json(r, inst));
    j["representatives"] = reps;
    return j;
}

inline Json deformation_json(const DeformationSeries& d, const Instance& inst) {
    Json j;
    Json params = Json::array();
    for (int i = 1; i <= d.param_count; ++i) params.push_back("t" + std::to_string(i));
    j["parameters"] = params;
    j["max_degree"] = d.max_degree();
    Json terms = Json::object();
    for (const auto& [m, c] : d.terms) terms[m.str()] = cochain_json(c, inst);
    j["terms"] = terms;
    return j;
}

inline Json obstruction_json(const ObstructionReport& ob, const Instance& inst) {
    return Json{{"order", ob.order},
                {"monomial", ob.monomial.str()},
                {"class_coords", coords_json(ob.class_coords)},
                {"cocycle", cochain_json(ob.cocycle, inst)}};
}

}  // namespace liedef
