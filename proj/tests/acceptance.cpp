// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Golden values are frozen from the brute-force factorization
// oracle; everything else is a property checked over exhaustive sweeps.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "trop/mumford.hpp"

using namespace trop;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    try {
        std::string detail = body();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("criterion %2d [%s]: PASS (%lldms) %s\n", number, name.c_str(),
                    static_cast<long long>(ms), detail.c_str());
    } catch (const std::exception& e) {
        ++failures;
        std::printf("criterion %2d [%s]: FAIL — %s\n", number, name.c_str(), e.what());
    }
    std::fflush(stdout);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// All multisets of `count` partitions of d, as sorted profile tuples.
std::vector<std::vector<Partition>> profile_multisets(int d, int count) {
    std::vector<Partition> parts = partitions_of(d);
    std::vector<std::vector<Partition>> out;
    std::vector<size_t> idx(static_cast<size_t>(count), 0);
    auto rec = [&](auto&& self, int pos, size_t min_idx) -> void {
        if (pos == count) {
            std::vector<Partition> tuple;
            for (size_t i : idx) tuple.push_back(parts[i]);
            out.push_back(std::move(tuple));
            return;
        }
        for (size_t i = min_idx; i < parts.size(); ++i) {
            idx[static_cast<size_t>(pos)] = i;
            self(self, pos + 1, i);
        }
    };
    rec(rec, 0, 0);
    return out;
}

struct SweepInstance {
    int d;
    std::vector<Partition> profiles;
    TropicalHurwitzResult result;
};

const std::vector<SweepInstance>& comb_sweep() {
    static const std::vector<SweepInstance> sweep = [] {
        std::vector<SweepInstance> out;
        for (int d = 1; d <= 4; ++d) {
            for (int count = 3; count <= 5; ++count) {
                for (auto& profiles : profile_multisets(d, count)) {
                    if (!genus_from_profiles(d, profiles).ok()) continue;
                    SweepInstance inst{d, profiles, tropical_hurwitz(d, profiles)};
                    out.push_back(std::move(inst));
                }
            }
        }
        return out;
    }();
    return sweep;
}

} // namespace

int main() {
    // 1. Oracle golden values, each under a second.
    criterion(1, "oracle goldens", [] {
        for (int run = 0; run < 3; ++run) {
            auto t0 = std::chrono::steady_clock::now();
            Rational value;
            Rational expect;
            if (run == 0) {
                value = classical_hurwitz(2, {P({2}), P({2})});
                expect = Rational(1, 2);
            } else if (run == 1) {
                value = classical_hurwitz(2, {P({2}), P({2}), P({2}), P({2})});
                expect = Rational(1, 2);
            } else {
                value = classical_hurwitz(3, std::vector<Partition>(4, P({2, 1})));
                expect = Rational(4);
            }
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            require(value == expect, "golden value mismatch");
            require(ms < 1000, "golden value exceeded one second");
        }
        return std::string("H2((2),(2))=1/2, H2((2)^4)=1/2, H3((2,1)^4)=4");
    });

    // 2. Weighted tropical count over the comb equals the classical count for
    //    every genus-admissible profile multiset with d <= 4, <= 5 profiles.
    criterion(2, "comb count = classical", [] {
        auto t0 = std::chrono::steady_clock::now();
        int checked = 0;
        for (const auto& inst : comb_sweep()) {
            Rational classical = classical_hurwitz(inst.d, inst.profiles);
            require(inst.result.weighted == classical,
                    "weighted != classical at d=" + std::to_string(inst.d));
            ++checked;
        }
        auto s = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
                     .count();
        require(s < 300, "sweep exceeded five minutes");
        return std::to_string(checked) + " instances";
    });

    // 3. Tropical Riemann-Hurwitz on every class produced by the sweep.
    criterion(3, "Riemann-Hurwitz on all classes", [] {
        long long classes = 0;
        for (const auto& inst : comb_sweep()) {
            for (const auto& cls : inst.result.classes) {
                RHReport rh = check_riemann_hurwitz(cls.morphism);
                require(rh.lhs == rh.rhs, "equation (1)");
                require(rh.deg_ramification >= 0 && rh.deg_ramification % 2 == 0,
                        "deg R even and non-negative");
                require(rh.betti_ok, "b1 monotone");
                ++classes;
            }
        }
        return std::to_string(classes) + " classes";
    });

    // 4. Reordering profiles never changes the weighted total: exhaustive
    //    over every ordering of the <= 4-profile instances (so together with
    //    criterion 2 literally every such profile tuple is covered), plus 25
    //    random shuffles of the 5-profile layer.
    criterion(4, "profile order invariance", [] {
        const auto& sweep = comb_sweep();
        require(!sweep.empty(), "empty sweep");
        long long orderings = 0;
        for (const auto& inst : sweep) {
            if (inst.profiles.size() > 4) continue;
            std::vector<Partition> perm = inst.profiles;
            std::sort(perm.begin(), perm.end());
            do {
                require(tropical_hurwitz(inst.d, perm).weighted == inst.result.weighted,
                        "reorder changed the weighted total");
                ++orderings;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        std::mt19937 rng(2024);
        for (int t = 0; t < 25; ++t) {
            const auto& inst = sweep[std::uniform_int_distribution<size_t>(0, sweep.size() - 1)(rng)];
            std::vector<Partition> shuffled = inst.profiles;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            require(tropical_hurwitz(inst.d, shuffled).weighted == inst.result.weighted,
                    "reorder changed the weighted total");
        }
        return std::to_string(orderings) + " exhaustive orderings + 25 shuffles";
    });

    // 5. Caterpillar and other binary trees agree with the classical count
    //    for d <= 3 and 5-6 leaves. Non-caterpillar shapes exist from 6
    //    leaves on and are used there; at 5 leaves every binary shape is a
    //    caterpillar, so a differently arranged one stands in.
    criterion(5, "binary tree shapes agree", [] {
        int checked = 0;
        for (int d = 2; d <= 3; ++d) {
            for (int leaves = 5; leaves <= 6; ++leaves) {
                for (auto& profiles : profile_multisets(d, leaves)) {
                    if (!genus_from_profiles(d, profiles).ok()) continue;
                    Rational classical = classical_hurwitz(d, profiles);
                    BranchTree comb = caterpillar_tree(profiles);
                    require(tropical_hurwitz(comb).weighted == classical, "caterpillar total");
                    std::string comb_shape = to_newick(comb);
                    bool found_other = false;
                    bool used_non_caterpillar = false;
                    for (auto& t : all_binary_tree_shapes(profiles)) {
                        if (is_caterpillar(t)) continue;
                        require(tropical_hurwitz(t).weighted == classical, "non-caterpillar total");
                        found_other = true;
                        used_non_caterpillar = true;
                        break;
                    }
                    if (!found_other) {
                        for (auto& t : all_binary_tree_shapes(profiles)) {
                            if (to_newick(t) == comb_shape) continue;
                            require(tropical_hurwitz(t).weighted == classical,
                                    "rearranged caterpillar total");
                            found_other = true;
                            break;
                        }
                    }
                    require(found_other, "no alternative binary shape");
                    require(leaves == 5 || used_non_caterpillar, "6 leaves must test a non-caterpillar");
                    ++checked;
                }
            }
        }
        return std::to_string(checked) + " instances";
    });

    // 6. Edge contraction dichotomy for the elliptic double cover.
    criterion(6, "Tate dichotomy", [] {
        std::vector<Partition> profiles(4, P({2}));
        BranchTree star = star_tree(profiles);
        require(wiener_weight(2, profiles, star) == Rational(1, 2), "star wiener weight");
        require(mumford_hurwitz(2, profiles, star) == Rational(0), "star Mumford count");
        BranchTree binary = parse_newick("((0,1),(2,3));", profiles);
        require(mumford_hurwitz(2, profiles, binary) == Rational(1, 2), "binary Mumford count");
        return std::string("star: 0, binary: 1/2");
    });

    // 7. Wiener weight is identical over every binary refinement.
    criterion(7, "refinement independence", [] {
        int checked = 0;
        auto check_tree = [&](int d, const std::vector<Partition>& profiles, const BranchTree& tree) {
            if (!genus_from_profiles(d, profiles).ok()) return;
            require(refinement_independence_check(d, profiles, tree),
                    "wiener weight depends on the refinement");
            ++checked;
        };
        for (int d = 1; d <= 3; ++d)
            for (auto& profiles : profile_multisets(d, 4)) check_tree(d, profiles, star_tree(profiles));
        for (int d = 1; d <= 3; ++d)
            for (auto& profiles : profile_multisets(d, 5)) {
                check_tree(d, profiles, star_tree(profiles));
                check_tree(d, profiles, parse_newick("(0,1,(2,3,4));", profiles));
            }
        for (int d = 1; d <= 3; ++d)
            for (auto& profiles : profile_multisets(d, 6)) {
                check_tree(d, profiles, star_tree(profiles));
                check_tree(d, profiles, parse_newick("(0,1,(2,3,4,5));", profiles));
                check_tree(d, profiles, parse_newick("((0,1),2,(3,4,5));", profiles));
                check_tree(d, profiles, parse_newick("(0,(1,2),3,(4,5));", profiles));
            }
        return std::to_string(checked) + " trees";
    });

    // 8. RHM coherence: the label is the ramification deficit, and
    //    contraction re-creates it as the Betti number it swallowed.
    criterion(8, "RHM label coherence and contraction", [] {
        long long classes = 0;
        for (const auto& inst : comb_sweep()) {
            for (const auto& cls : inst.result.classes) {
                require(is_mumford(cls.morphism) == (cls.genus_sum == 0), "label coherence");
                auto labels = infer_genus_labels(cls.morphism);
                for (const auto& v : cls.morphism.source.vertices())
                    require(labels.at(v.id) == v.genus, "inferred label");
                ++classes;
            }
        }
        // contraction over refined stars: genus preserved, survivors are
        // exactly the classes whose contraction keeps every label at zero
        for (int d = 2; d <= 3; ++d) {
            for (auto& profiles : profile_multisets(d, 4)) {
                if (!genus_from_profiles(d, profiles).ok()) continue;
                BranchTree star = star_tree(profiles);
                Refinement refined = binary_refinement(star);
                Rational w = wiener_weight(d, profiles, star);
                Rational surviving(0);
                for (const auto& cls : enumerate_binary_tree_covers(refined.tree)) {
                    TropicalCurve contracted = contract_edges(cls, refined.contracted);
                    require(arithmetic_genus(contracted) == arithmetic_genus(cls.morphism.source),
                            "contraction preserves arithmetic genus");
                    bool zero_labels = true;
                    for (const auto& v : contracted.vertices()) zero_labels &= (v.genus == 0);
                    bool counted = cls.genus_sum > 0 ||
                                   preimage_betti(cls.morphism, refined.contracted) > 0;
                    require(counted == !zero_labels, "wiener filter matches contracted labels");
                    if (!counted) surviving += cls.multiplicity;
                }
                require(surviving == classical_hurwitz(d, profiles) - w, "surviving mass");
            }
        }
        return std::to_string(classes) + " classes + star contractions";
    });

    // 9. Harbater-Mumford condition for cyclic-type instances.
    criterion(9, "Harbater-Mumford stars", [] {
        long long stars = 0;
        for (int d = 2; d <= 3; ++d) {
            std::vector<Partition> cyclic{Partition::single(d), Partition::ones(d)};
            for (int count = 3; count <= 5; ++count) {
                std::vector<size_t> pick(static_cast<size_t>(count), 0);
                auto rec = [&](auto&& self, int pos) -> void {
                    if (pos == count) {
                        std::vector<Partition> profiles;
                        for (size_t i : pick) profiles.push_back(cyclic[i]);
                        if (!genus_from_profiles(d, profiles).ok()) return;
                        for (const auto& cls : enumerate_comb_covers(d, profiles)) {
                            if (cls.multiplicity.is_zero() || cls.genus_sum != 0) continue;
                            for (const auto& v : cls.morphism.source.vertices()) {
                                auto star = star_profiles(cls.morphism, v.id);
                                require(harbater_mumford_check(
                                            star, local_multiplicity(cls.morphism, v.id)),
                                        "Mumford cover star fails Harbater-Mumford");
                                ++stars;
                            }
                        }
                        return;
                    }
                    for (size_t i = 0; i < cyclic.size(); ++i) {
                        pick[static_cast<size_t>(pos)] = i;
                        self(self, pos + 1);
                    }
                };
                rec(rec, 0);
            }
        }
        std::map<Direction, Partition> bad;
        bad[{false, 0}] = Partition::single(2);
        bad[{false, 1}] = Partition::single(2);
        bad[{true, 0}] = Partition::single(2);
        require(!harbater_mumford_check(bad, 2), "non-HM star accepted");
        return std::to_string(stars) + " stars, non-HM star rejected";
    });

    // 10. Canonical form soundness.
    criterion(10, "canonical form soundness", [] {
        std::mt19937 rng(777);
        std::vector<const CoverClass*> pool;
        for (const auto& inst : comb_sweep())
            for (const auto& cls : inst.result.classes) pool.push_back(&cls);
        require(!pool.empty(), "no classes to relabel");

        for (int t = 0; t < 1000; ++t) {
            const CoverClass& cls =
                *pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
            WeightedMorphism shuffled = fixtures::relabel_source(cls.morphism, rng);
            require(canonical_form(shuffled) == cls.canonical_form, "relabeling moved the form");
        }

        int distinct = 0;
        for (int t = 0; distinct < 100 && t < 10000; ++t) {
            const CoverClass& cls =
                *pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
            WeightedMorphism bumped = cls.morphism;
            if (!bumped.edge_weights.empty()) {
                auto it = bumped.edge_weights.begin();
                std::advance(it, std::uniform_int_distribution<size_t>(
                                     0, bumped.edge_weights.size() - 1)(rng));
                it->second += 1;
            } else {
                auto it = bumped.puncture_weights.begin();
                std::advance(it, std::uniform_int_distribution<size_t>(
                                     0, bumped.puncture_weights.size() - 1)(rng));
                it->second += 1;
            }
            require(canonical_form(bumped) != cls.canonical_form,
                    "weight change left the form unchanged");
            ++distinct;
        }
        require(distinct == 100, "not enough non-isomorphic pairs");
        return std::string("1000 relabelings, 100 weight perturbations");
    });

    if (failures == 0) std::printf("acceptance: all 10 criteria PASS\n");
    else std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures;
}
