// Command-line driver: cohomology and deformation reports for a Lie-algebra
// homomorphism given in JSON, plus the full checklist for the built-in
// reference instance.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "liedef/cochain.hpp"
#include "liedef/deformation.hpp"
#include "liedef/instance.hpp"
#include "liedef/reference_case.hpp"

using namespace liedef;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitObstruction = 3;
constexpr int kExitGuard = 4;
constexpr int kExitSuiteFailure = 5;

struct Options {
    std::string input = "builtin:heisenberg-gl3";
    std::string format = "text";
    int max_order = 10;
    std::uint64_t seed = 1;
};

bool json_format(const Options& o) { return o.format == "json"; }

std::string render(const Cochain& c, const Instance& inst) {
    return cochain_str(c, inst.rho.source.labels, inst.rho.target.labels);
}

bool is_reference_instance(const Instance& inst) {
    if (inst.rho.source.dim != 3 || inst.rho.target.dim != 9) return false;
    LieHom ref = refcase::reference_hom();
    if (inst.rho.source.structure != ref.source.structure || inst.rho.images != ref.images) return false;
    auto gens = refcase::h1_generators();
    if (inst.cocycles.size() != gens.size()) return false;
    for (size_t i = 0; i < gens.size(); ++i)
        if (!(inst.cocycles[i].cochain == gens[i])) return false;
    return true;
}

Rational random_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return rat(num(g), den(g));
}

int pointwise_homomorphism_checks(const DeformationSeries& d, std::uint64_t seed, int count) {
    std::mt19937_64 g(seed);
    int passed = 0;
    for (int k = 0; k < count; ++k) {
        RatVec params(static_cast<size_t>(d.param_count));
        for (auto& p : params) p = random_rational(g);
        if (check_homomorphism(evaluate_at(d, params)).ok) ++passed;
    }
    return passed;
}

Json theorem2_json(const refcase::Theorem2Comparison& cmp) {
    Json agree = Json::array(), differ = Json::array();
    for (const auto& e : cmp.entries) {
        std::string key = "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
        if (e.agree)
            agree.push_back(key);
        else
            differ.push_back(Json{{"entry", key}, {"computed", e.computed}, {"reference", e.reference}});
    }
    return Json{{"agree", agree},
                {"differ", differ},
                {"variants", Json{{"t3^2", cmp.variant_t3sq},
                                  {"t1*t3^2", cmp.variant_t1t3sq},
                                  {"residual_zero_with_proof_terms", cmp.residual_zero_with_proof_terms},
                                  {"residual_zero_with_theorem_terms", cmp.residual_zero_with_theorem_terms}}}};
}

// ---- cohomology -------------------------------------------------------------

int run_cohomology(const Options& o) {
    Instance inst = load_instance(o.input);
    CohomologyReport rep = cohomology(1, inst.rho);
    if (json_format(o)) {
        std::cout << cohomology_report_json(rep, inst).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "instance " << inst.name << ": dim h = " << inst.rho.source.dim
              << ", target gl(" << inst.matrix_n << ")\n";
    std::cout << "dim Z1=" << rep.dim_z << " dim B1=" << rep.dim_b << " dim H1=" << rep.dim_h << "\n";
    std::cout << "cocycle basis:\n";
    for (const auto& v : rep.cocycle_basis.vectors) {
        Cochain c(1, inst.rho.source.dim, inst.rho.target.dim);
        c.coords = v;
        std::cout << "  " << render(c, inst) << "\n";
    }
    std::cout << "coboundary basis:\n";
    for (const auto& v : rep.coboundary_basis.vectors) {
        Cochain c(1, inst.rho.source.dim, inst.rho.target.dim);
        c.coords = v;
        std::cout << "  " << render(c, inst) << "\n";
    }
    std::cout << "H1 representatives:\n";
    for (const auto& r : rep.representatives) std::cout << "  " << render(r, inst) << "\n";
    return kExitOk;
}

// ---- deform ------------------------------------------------------------------

int report_obstruction(const ObstructionReport& ob, const Instance& inst, const Options& o) {
    if (json_format(o)) {
        std::cout << Json{{"status", "obstructed"}, {"obstruction", obstruction_json(ob, inst)}}.dump(2)
                  << "\n";
    } else {
        std::cout << "obstruction at order " << ob.order << ", monomial " << ob.monomial.str() << ":\n  "
                  << render(ob.cocycle, inst) << " is a 2-cocycle but not a coboundary\n";
    }
    return kExitObstruction;
}

int run_deform(const Options& o) {
    Instance inst = load_instance(o.input);
    CohomologyReport rep = cohomology(1, inst.rho);
    auto dirs = deformation_directions(inst, rep);
    ExtendResult res = integrate(inst.rho, dirs, o.max_order);
    if (std::holds_alternative<ObstructionReport>(res))
        return report_obstruction(std::get<ObstructionReport>(res), inst, o);
    const auto& d = std::get<DeformationSeries>(res);
    bool residual_zero = mc_residual(d).is_zero();
    if (json_format(o)) {
        Json j = deformation_json(d, inst);
        j["residual_zero"] = residual_zero;
        j["obstructions"] = Json::array();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "deformation of " << inst.name << " with " << d.param_count << " parameter(s)\n";
        for (const auto& [m, c] : d.terms) std::cout << "  " << m.str() << ": " << render(c, inst) << "\n";
        std::cout << "max degree " << d.max_degree() << ", residual "
                  << (residual_zero ? "zero" : "NONZERO") << ", no obstructions\n";
    }
    return residual_zero ? kExitOk : kExitSuiteFailure;
}

// ---- cup ---------------------------------------------------------------------

int run_cup(const Options& o) {
    Instance inst = load_instance(o.input);
    CohomologyReport rep = cohomology(1, inst.rho);
    auto dirs = deformation_directions(inst, rep);
    std::vector<std::string> names;
    if (!inst.cocycles.empty())
        for (const auto& lc : inst.cocycles) names.push_back(lc.label);
    else
        for (size_t i = 0; i < dirs.size(); ++i) names.push_back("h" + std::to_string(i + 1));

    Json arr = Json::array();
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = i; j < dirs.size(); ++j) {
            Cochain v = cup(inst.rho.target, dirs[i], dirs[j]);
            if (json_format(o)) {
                arr.push_back(Json{{"a", names[i]},
                                   {"b", names[j]},
                                   {"rendering", render(v, inst)},
                                   {"coords", coords_json(v.coords)}});
            } else {
                std::cout << "cup(" << names[i] << "," << names[j] << ") = " << render(v, inst) << "\n";
            }
        }
    if (json_format(o)) std::cout << arr.dump(2) << "\n";
    return kExitOk;
}

// ---- verify ------------------------------------------------------------------

int run_verify(const Options& o) {
    Instance inst = load_instance(o.input);
    CohomologyReport rep = cohomology(1, inst.rho);
    auto dirs = deformation_directions(inst, rep);
    ExtendResult res = integrate(inst.rho, dirs, o.max_order);
    if (std::holds_alternative<ObstructionReport>(res))
        return report_obstruction(std::get<ObstructionReport>(res), inst, o);
    const auto& d = std::get<DeformationSeries>(res);

    const int kPointwise = 20;
    bool residual_zero = mc_residual(d).is_zero();
    int pointwise_passed = pointwise_homomorphism_checks(d, o.seed, kPointwise);
    bool ok = residual_zero && pointwise_passed == kPointwise;

    Json j{{"residual_zero", residual_zero},
           {"max_degree", d.max_degree()},
           {"obstructions", Json::array()},
           {"pointwise_checks", Json{{"count", kPointwise}, {"passed", pointwise_passed}}}};
    if (is_reference_instance(inst)) {
        j["theorem2_comparison"] = theorem2_json(refcase::compare_closed_form(d));
    } else {
        j["theorem2_comparison"] = nullptr;
    }

    if (json_format(o)) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verification of " << inst.name << "\n";
        std::cout << "  residual: " << (residual_zero ? "zero" : "NONZERO") << "\n";
        std::cout << "  pointwise homomorphism checks: " << pointwise_passed << "/" << kPointwise << "\n";
        if (!j["theorem2_comparison"].is_null()) {
            const Json& t2 = j["theorem2_comparison"];
            std::cout << "  closed-form matrix: " << t2["agree"].size() << " entries agree, "
                      << t2["differ"].size() << " differ\n";
            for (const auto& dd : t2["differ"])
                std::cout << "    " << dd["entry"].get<std::string>() << ": computed "
                          << dd["computed"].get<std::string>() << ", reference "
                          << dd["reference"].get<std::string>() << "\n";
            std::cout << "  quadratic-term variant: " << t2["variants"]["t3^2"].get<std::string>()
                      << " (residual zero with proof terms: "
                      << (t2["variants"]["residual_zero_with_proof_terms"].get<bool>() ? "yes" : "no")
                      << ", with theorem terms: "
                      << (t2["variants"]["residual_zero_with_theorem_terms"].get<bool>() ? "yes" : "no")
                      << ")\n";
        }
    }
    return ok ? kExitOk : kExitSuiteFailure;
}

// ---- reproduce-paper -----------------------------------------------------------

struct Checklist {
    struct Item {
        std::string name, verdict, detail;
    };
    std::vector<Item> items;
    int fails = 0, discrepancies = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        items.push_back({name, ok ? "PASS" : "FAIL", detail});
        if (!ok) ++fails;
    }
    // a printed value that the computation contradicts, reported and
    // classified rather than scored as a failure
    void classify(const std::string& name, const std::string& verdict, const std::string& detail) {
        items.push_back({name, verdict, detail});
        ++discrepancies;
    }
};

int run_reproduce(const Options& o) {
    Instance inst = load_instance("builtin:heisenberg-gl3");
    const LieHom& rho = inst.rho;
    auto gens = refcase::h1_generators();
    Checklist ck;

    auto slot_cochain = [&](int dual, int gi, int gj) {
        Cochain c(1, 3, 9);
        c.slot(dual, refcase::gl_idx(gi, gj)) = 1;
        return c;
    };
    auto slot_name = [&](int dual, int gi, int gj) {
        return rho.source.labels[static_cast<size_t>(dual)] + "*⊗e" + std::to_string(gi) + std::to_string(gj);
    };

    // dimensions
    CohomologyReport rep = cohomology(1, rho);
    ck.check("dim Z1 = 11", rep.dim_z == 11);
    ck.check("dim B1 = 7", rep.dim_b == 7);
    ck.check("dim H1 = 4", rep.dim_h == 4);

    // listed cocycle basis
    auto z_listed = refcase::z1_basis_listed();
    std::vector<RatVec> z_coords;
    for (size_t i = 0; i < z_listed.size(); ++i) {
        ck.check("e" + std::to_string(i + 1) + " = " + render(z_listed[i], inst) + " is a cocycle",
                 delta(1, rho, z_listed[i]).is_zero());
        z_coords.push_back(z_listed[i].coords);
    }
    ck.check("span{e1..e11} equals the computed Z1 (both inclusions)",
             SubspaceBasis::from_spanning(z_coords, 27) == rep.cocycle_basis);

    // delta1 images
    for (const auto& [dual, gi, gj, image] : refcase::delta1_images_listed()) {
        Cochain got = delta(1, rho, slot_cochain(dual, gi, gj));
        ck.check("delta1(" + slot_name(dual, gi, gj) + ") = " + render(image, inst), got == image,
                 got == image ? "" : "computed " + render(got, inst));
    }
    for (const auto& [dual, gi, gj] : refcase::delta1_zero_slots())
        ck.check("delta1(" + slot_name(dual, gi, gj) + ") = 0",
                 delta(1, rho, slot_cochain(dual, gi, gj)).is_zero());
    {
        std::vector<RatVec> fam;
        for (const auto& s : refcase::delta1_independent_slots())
            fam.push_back(delta(1, rho, slot_cochain(s[0], s[1], s[2])).coords);
        ck.check("the 14 listed delta1 images are independent",
                 SubspaceBasis::from_spanning(fam, 27).dim() == 14);
    }
    for (const auto& rel : refcase::delta1_relations()) {
        Cochain lhs = delta(1, rho, slot_cochain(rel.lhs[0], rel.lhs[1], rel.lhs[2]));
        Cochain rhs(2, 3, 9);
        for (const auto& [coef, s] : rel.rhs)
            rhs = rhs + delta(1, rho, slot_cochain(s[0], s[1], s[2])).scaled(coef);
        ck.check("relation " + rel.name, lhs == rhs);
    }

    // delta0 images
    std::vector<RatVec> b_listed;
    for (const auto& [gi, gj, image] : refcase::delta0_images_independent()) {
        Cochain a0(0, 3, 9);
        a0.slot(0, refcase::gl_idx(gi, gj)) = 1;
        Cochain got = delta(0, rho, a0);
        ck.check("delta0(e" + std::to_string(gi) + std::to_string(gj) + ") = " + render(image, inst),
                 got == image, got == image ? "" : "computed " + render(got, inst));
        b_listed.push_back(image.coords);
    }
    ck.check("the 7 listed delta0 images are independent and span B1",
             SubspaceBasis::from_spanning(b_listed, 27) == rep.coboundary_basis);
    {
        Cochain a31(0, 3, 9), a33(0, 3, 9);
        a31.slot(0, refcase::gl_idx(3, 1)) = 1;
        a33.slot(0, refcase::gl_idx(3, 3)) = 1;
        ck.check("delta0(e31) = 0", delta(0, rho, a31).is_zero());
        Cochain d33 = delta(0, rho, a33);
        ck.check("delta0(e33) = " + render(refcase::delta0_e33(), inst), d33 == refcase::delta0_e33());
        Cochain d11 = refcase::delta0_images_independent()[0].image;
        Cochain d22 = refcase::delta0_images_independent()[4].image;
        // the printed dependence relation contradicts the printed images;
        // delta0 annihilates the identity, forcing the all-minus version
        bool as_printed = d33 == d22 - d11;
        bool corrected = (d11 + d22 + d33).is_zero();
        if (as_printed)
            ck.check("relation delta0(e33) = -delta0(e11) + delta0(e22) (as printed)", true);
        else
            ck.classify("relation delta0(e33) = -delta0(e11) + delta0(e22) (as printed)", "MISPRINT",
                        "computed relation is delta0(e33) = -delta0(e11) - delta0(e22); delta0 of the "
                        "identity is zero, so the printed '+' cannot hold");
        ck.check("corrected relation delta0(e33) = -delta0(e11) - delta0(e22)", corrected);
    }

    // generator classes
    for (size_t i = 0; i < gens.size(); ++i) {
        std::string nm = "rho" + std::to_string(i + 1);
        ck.check(nm + " = " + render(gens[i], inst) + " is a cocycle", delta(1, rho, gens[i]).is_zero());
        ck.check(nm + " is not a coboundary", !rep.coboundary_basis.contains(gens[i].coords));
    }
    {
        std::vector<RatVec> cls;
        for (const auto& g : gens) cls.push_back(class_coordinates(g.coords, rep));
        ck.check("classes of rho1..rho4 form a basis of H1",
                 rref(QMatrix::from_columns(cls, 4)).rank == 4);
        ck.check("rho3 = 2 e4 as coordinates", gens[2] == z_listed[3].scaled(2));
        ck.check("rho4 = e3 as coordinates", gens[3] == z_listed[2]);
        std::vector<RatVec> first_four = rep.coboundary_basis.vectors;
        for (int i = 0; i < 4; ++i) first_four.push_back(z_listed[static_cast<size_t>(i)].coords);
        ck.check("e1..e4 are independent modulo B1",
                 SubspaceBasis::from_spanning(first_four, 27).dim() == 11);
    }

    // cup products
    for (int i = 1; i <= 4; ++i)
        for (int j = i; j <= 4; ++j) {
            Cochain expected(2, 3, 9);
            for (const auto& entry : refcase::cup_table_nonzero())
                if (entry.i == i && entry.j == j) expected = entry.value;
            Cochain got = cup(rho.target, gens[static_cast<size_t>(i - 1)], gens[static_cast<size_t>(j - 1)]);
            std::string nm =
                "cup(rho" + std::to_string(i) + ",rho" + std::to_string(j) + ") = " + render(expected, inst);
            ck.check(nm, got == expected, got == expected ? "" : "computed " + render(got, inst));
        }

    // integration
    ExtendResult res = integrate(rho, gens, o.max_order);
    if (std::holds_alternative<ObstructionReport>(res)) {
        ck.check("integration completes with no obstruction", false);
    } else {
        const auto& d = std::get<DeformationSeries>(res);
        ck.check("integration completes with no obstruction", true);
        std::vector<ParamMonomial> support;
        for (const auto& [m, c] : d.terms) support.push_back(m);
        ck.check("nonzero terms exactly at t1,t2,t3,t4,t1*t2,t1*t3,t3^2,t1*t3^2",
                 support == refcase::expected_support());
        ck.check("t1*t2 term = " + render(refcase::term_t1t2(), inst),
                 d.term_or_zero(refcase::mono({1, 1, 0, 0})) == refcase::term_t1t2());
        ck.check("t1*t3 term = " + render(refcase::term_t1t3(), inst),
                 d.term_or_zero(refcase::mono({1, 0, 1, 0})) == refcase::term_t1t3());
        ck.check("max degree = 3", d.max_degree() == 3);
        ck.check("Maurer-Cartan residual is identically zero", mc_residual(d).is_zero());
        const int kPointwise = 20;
        int pw = pointwise_homomorphism_checks(d, o.seed, kPointwise);
        ck.check("20/20 pointwise homomorphism checks at random rational parameters", pw == kPointwise);

        // closed-form comparison
        auto cmp = refcase::compare_closed_form(d);
        for (const auto& e : cmp.entries) {
            std::string nm = "closed-form matrix entry (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                             ") = " + e.reference;
            if (e.agree)
                ck.check(nm, true);
            else
                ck.classify(nm, "DIFFERS", "computed " + e.computed);
        }
        ck.check("variant resolution is decisive for t3^2 and t1*t3^2",
                 cmp.variant_t3sq != "neither" && cmp.variant_t1t3sq != "neither");
        ck.classify("t3^2 and t1*t3^2 terms match the step-by-step (proof) variant, not the closed-form "
                    "(theorem) variant",
                    "PROOF-VERSION",
                    std::string("residual zero with proof terms: ") +
                        (cmp.residual_zero_with_proof_terms ? "yes" : "no") +
                        "; with theorem terms: " + (cmp.residual_zero_with_theorem_terms ? "yes" : "no"));
        ck.check("residual oracle confirms exactly one variant",
                 cmp.residual_zero_with_proof_terms && !cmp.residual_zero_with_theorem_terms);
    }

    if (json_format(o)) {
        Json items = Json::array();
        for (const auto& it : ck.items) {
            Json ij{{"name", it.name}, {"verdict", it.verdict}};
            if (!it.detail.empty()) ij["detail"] = it.detail;
            items.push_back(ij);
        }
        Json j{{"instance", inst.name},
               {"items", items},
               {"summary", Json{{"total", ck.items.size()},
                                {"fail", ck.fails},
                                {"classified_discrepancies", ck.discrepancies}}}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "reference checklist for builtin:heisenberg-gl3\n";
        for (const auto& it : ck.items) {
            std::cout << "  [" << it.verdict << "] " << it.name;
            if (!it.detail.empty()) std::cout << "  -- " << it.detail;
            std::cout << "\n";
        }
        std::cout << "summary: "
                  << (ck.items.size() - static_cast<size_t>(ck.fails) - static_cast<size_t>(ck.discrepancies))
                  << " pass, " << ck.fails << " fail, " << ck.discrepancies
                  << " classified discrepancies\n";
    }
    return ck.fails == 0 ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact first cohomology and miniversal deformations of Lie-algebra homomorphisms"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input)
            sub->add_option("--input", o.input, "JSON file or builtin:heisenberg-gl3")
                ->capture_default_str();
        sub->add_option("--format", o.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--max-order", o.max_order, "highest order the integrator may examine")
            ->capture_default_str();
        sub->add_option("--seed", o.seed, "seed for the randomized pointwise checks")
            ->capture_default_str();
    };

    CLI::App* c_cohomology = app.add_subcommand("cohomology", "compute Z1, B1 and H1");
    add_common(c_cohomology);
    CLI::App* c_deform = app.add_subcommand("deform", "integrate the miniversal deformation");
    add_common(c_deform);
    CLI::App* c_cup = app.add_subcommand("cup", "cup products of the deformation directions");
    add_common(c_cup);
    CLI::App* c_verify = app.add_subcommand("verify", "integrate and verify the morphism identity");
    add_common(c_verify);
    CLI::App* c_repro =
        app.add_subcommand("reproduce-paper", "run the reference checklist for the builtin instance");
    add_common(c_repro, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(c_cohomology)) return run_cohomology(o);
        if (app.got_subcommand(c_deform)) return run_deform(o);
        if (app.got_subcommand(c_cup)) return run_cup(o);
        if (app.got_subcommand(c_verify)) return run_verify(o);
        if (app.got_subcommand(c_repro)) return run_reproduce(o);
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
