#include <climits>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "trop/json_io.hpp"
#include "trop/mumford.hpp"

using namespace trop;

namespace {

struct Options {
    std::string profiles_text;
    std::string tree_text;
    int degree = 0;
    int genus = INT_MIN;
    std::string export_dir;
    long long refinement_trials = 0;
    long long max_work = 0;
};

struct Instance {
    int d = 0;
    std::vector<Partition> profiles;
    bool has_tree = false;
    BranchTree tree;
    OracleGuard guard;
};

Instance resolve(const Options& opt) {
    Instance inst;
    inst.profiles = parse_profiles(opt.profiles_text);
    inst.d = inst.profiles.front().sum();
    if (opt.degree > 0 && opt.degree != inst.d)
        fail(errk::UnequalSums, "--degree " + std::to_string(opt.degree) + " but profiles sum to " +
                                    std::to_string(inst.d));
    if (opt.genus != INT_MIN) {
        GenusResult g = genus_from_profiles(inst.d, inst.profiles);
        if (!g.ok() || g.genus != opt.genus)
            fail(errk::GenusMismatch, "--genus " + std::to_string(opt.genus) +
                                          " differs from the Riemann-Hurwitz value");
    }
    if (!opt.tree_text.empty()) {
        inst.tree = parse_newick(opt.tree_text, inst.profiles);
        inst.has_tree = true;
    }
    if (opt.max_work > 0) inst.guard.max_work = opt.max_work;
    return inst;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

TropicalHurwitzResult enumerate_instance(const Instance& inst) {
    if (inst.has_tree) return tropical_hurwitz(inst.tree, inst.guard);
    return tropical_hurwitz(inst.d, inst.profiles, inst.guard);
}

Json class_report(const CoverClass& cls) {
    Json c;
    c["canonical_form"] = form_digest(cls.canonical_form);
    c["aut"] = cls.aut_count;
    c["multiplicity"] = cls.multiplicity.str();
    c["betti"] = cls.betti;
    return c;
}

int run_classical(const Options& opt) {
    Instance inst = resolve(opt);
    Json j;
    j["value"] = classical_hurwitz(inst.d, inst.profiles, inst.guard).str();
    emit(j);
    return 0;
}

int run_tropical(const Options& opt) {
    Instance inst = resolve(opt);
    TropicalHurwitzResult r = enumerate_instance(inst);
    Json j;
    j["raw_count"] = r.raw_count;
    j["weighted"] = r.weighted.str();
    j["classes"] = Json::array();
    for (const auto& cls : r.classes) j["classes"].push_back(class_report(cls));
    emit(j);
    return 0;
}

int run_mumford(const Options& opt) {
    Instance inst = resolve(opt);
    BranchTree tree = inst.has_tree ? inst.tree : caterpillar_tree(inst.profiles);
    Json j;
    j["classical"] = classical_hurwitz(inst.d, inst.profiles, inst.guard).str();
    j["wiener_weight"] = wiener_weight(inst.d, inst.profiles, tree, inst.guard).str();
    j["mumford"] = mumford_hurwitz(inst.d, inst.profiles, tree, inst.guard).str();
    bool checked = false;
    if (opt.refinement_trials > 0) {
        if (!refinement_independence_check(inst.d, inst.profiles, tree,
                                           static_cast<size_t>(opt.refinement_trials), inst.guard))
            fail(errk::InternalInconsistency, "wiener weight differed between binary refinements");
        checked = true;
    }
    j["refinement_checked"] = checked;
    emit(j);
    return 0;
}

int run_covers(const Options& opt) {
    Instance inst = resolve(opt);
    if (opt.export_dir.empty()) fail(errk::ParseError, "covers requires --export-dir");
    std::filesystem::create_directories(opt.export_dir);
    TropicalHurwitzResult r = enumerate_instance(inst);
    Json report;
    report["raw_count"] = r.raw_count;
    report["weighted"] = r.weighted.str();
    report["files"] = Json::array();
    for (const auto& cls : r.classes) {
        std::string stem = form_digest(cls.canonical_form).substr(3, 12);
        Json meta = class_report(cls);
        meta["canonical_form_full"] = cls.canonical_form;
        meta["genus_sum"] = cls.genus_sum;
        meta["morphism"] = morphism_to_json(cls.morphism);
        std::ofstream jf(std::filesystem::path(opt.export_dir) / (stem + ".json"));
        jf << meta.dump(2) << "\n";
        std::ofstream df(std::filesystem::path(opt.export_dir) / (stem + ".dot"));
        df << dot_export(cls.morphism);
        report["files"].push_back(stem + ".dot");
        report["files"].push_back(stem + ".json");
    }
    std::ofstream rf(std::filesystem::path(opt.export_dir) / "report.json");
    rf << report.dump(2) << "\n";
    emit(report);
    return 0;
}

int run_verify(const Options& opt) {
    Instance inst = resolve(opt);
    long long checks = 0;
    auto expect = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) fail(errk::InternalInconsistency, "verify failed: " + what);
    };

    Rational classical = classical_hurwitz(inst.d, inst.profiles, inst.guard);
    // non-binary trees are never enumerated directly; verify their canonical
    // binary refinement and the subtraction identities below
    bool refined_instance = inst.has_tree && !is_binary(inst.tree);
    TropicalHurwitzResult r =
        refined_instance ? tropical_hurwitz(binary_refinement(inst.tree).tree, inst.guard)
                         : enumerate_instance(inst);

    Rational mass(0);
    for (const auto& cls : r.classes) {
        int deg = validate_morphism(cls.morphism);
        expect(deg == inst.d, "cover degree");
        RHReport rh = check_riemann_hurwitz(cls.morphism);
        expect(rh.betti_ok, "Betti monotonicity");
        expect(rh.deg_ramification >= 0 && rh.deg_ramification % 2 == 0, "ramification parity");
        expect(is_mumford(cls.morphism) == (cls.genus_sum == 0), "Mumford label coherence");
        for (const auto& tv : cls.morphism.target.vertices()) {
            int fiber = 0;
            for (const auto& sv : cls.morphism.source.vertices())
                if (cls.morphism.vertex_map.at(sv.id) == tv.id)
                    fiber += local_multiplicity(cls.morphism, sv.id);
            expect(fiber == deg, "fiber multiplicity sum");
        }
        for (const auto& sv : cls.morphism.source.vertices()) {
            int lhs = vertex_degree(cls.morphism.source, sv.id);
            int rhs = local_multiplicity(cls.morphism, sv.id) *
                      vertex_degree(cls.morphism.target, cls.morphism.vertex_map.at(sv.id));
            expect(lhs <= rhs, "degree bound");
            auto star = star_profiles(cls.morphism, sv.id);
            for (const auto& [dir, part] : star)
                expect(part.sum() == local_multiplicity(cls.morphism, sv.id), "star profile sums");
        }
        WeightedMorphism back = morphism_from_json(morphism_to_json(cls.morphism));
        expect(canonical_form(back) == cls.canonical_form, "serialization stability");
        mass += cls.multiplicity;
    }
    expect(mass == r.weighted, "weighted total");
    expect(r.weighted == classical, "mass equals the classical count");

    if (!inst.has_tree) {
        // profile order must not matter over the comb
        std::vector<Partition> shuffled = inst.profiles;
        std::mt19937 rng(12345);
        for (int t = 0; t < 3; ++t) {
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            expect(tropical_hurwitz(inst.d, shuffled, inst.guard).weighted == r.weighted,
                   "profile reorder invariance");
        }
        // the rooted tree enumerator must agree with the comb sweep
        auto via_tree = enumerate_binary_tree_covers(caterpillar_tree(inst.profiles), inst.guard);
        expect(via_tree.size() == r.classes.size(), "caterpillar class count");
        for (size_t i = 0; i < via_tree.size(); ++i)
            expect(via_tree[i].canonical_form == r.classes[i].canonical_form &&
                       via_tree[i].multiplicity == r.classes[i].multiplicity,
                   "caterpillar class identity");
    }

    BranchTree tree = inst.has_tree ? inst.tree : caterpillar_tree(inst.profiles);
    Rational w = wiener_weight(inst.d, inst.profiles, tree, inst.guard);
    Rational mumford = mumford_hurwitz(inst.d, inst.profiles, tree, inst.guard);
    expect(mumford == classical - w, "Mumford subtraction");
    size_t trials = opt.refinement_trials > 0 ? static_cast<size_t>(opt.refinement_trials) : 0;
    expect(refinement_independence_check(inst.d, inst.profiles, tree, trials, inst.guard),
           "refinement independence");

    Refinement refined = binary_refinement(tree);
    for (const auto& cls : enumerate_binary_tree_covers(refined.tree, inst.guard)) {
        TropicalCurve contracted = contract_edges(cls, refined.contracted);
        expect(arithmetic_genus(contracted) == arithmetic_genus(cls.morphism.source),
               "contraction preserves genus");
    }

    Json j;
    j["verified"] = true;
    j["checks"] = checks;
    emit(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz numbers of tropical covers and Mumford curves over branch trees"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool tree_opt) {
        sub->add_option("--profiles", opt.profiles_text,
                        "ramification profiles, e.g. \"2,1|3|2,1\" (parts comma-, profiles pipe-separated)")
            ->required();
        sub->add_option("--degree", opt.degree, "cross-check: common profile sum");
        sub->add_option("--genus", opt.genus, "cross-check: genus forced by Riemann-Hurwitz");
        sub->add_option("--max-work", opt.max_work, "search ceiling for the factorization oracle");
        if (tree_opt)
            sub->add_option("--tree", opt.tree_text,
                            "branch tree in Newick form, e.g. \"((0,1),(2,3));\"; caterpillar when absent");
    };

    CLI::App* classical = app.add_subcommand("classical", "classical Hurwitz number by transitive factorizations");
    add_common(classical, false);

    CLI::App* tropical = app.add_subcommand("tropical", "tropical cover classes and their weighted count");
    add_common(tropical, true);

    CLI::App* mumford = app.add_subcommand("mumford", "Mumford-curve Hurwitz number over a branch tree");
    add_common(mumford, true);
    mumford->add_option("--refinement-trials", opt.refinement_trials,
                        "verify the wiener weight over up to N binary refinements");

    CLI::App* covers = app.add_subcommand("covers", "export every cover class as DOT and JSON");
    add_common(covers, true);
    covers->add_option("--export-dir", opt.export_dir, "output directory")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite on one instance");
    add_common(verify, true);
    verify->add_option("--refinement-trials", opt.refinement_trials,
                       "cap on binary refinements checked (0 = all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classical) return run_classical(opt);
        if (*tropical) return run_tropical(opt);
        if (*mumford) return run_mumford(opt);
        if (*covers) return run_covers(opt);
        if (*verify) return run_verify(opt);
    } catch (const Error& e) {
        Json j;
        j["error"] = e.kind();
        j["detail"] = e.what();
        std::cout << j.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = "Unexpected";
        j["detail"] = e.what();
        std::cout << j.dump(2) << "\n";
        return 3;
    }
    return 1;
}
