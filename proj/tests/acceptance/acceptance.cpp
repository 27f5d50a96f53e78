// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// if any fails. Runtime limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "radiogram/catalog.hpp"
#include "radiogram/frame.hpp"
#include "radiogram/serialize.hpp"
#include "walks.hpp"

using namespace radiogram;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) detail = "failed: " + what;
        ok = ok && condition;
    }
};

using Check = std::function<Outcome()>;

bool run_criterion(int id, const char* title, double limit_seconds, const Check& check) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.ok;
    std::string timing = std::to_string(secs).substr(0, 6) + " s";
    if (limit_seconds > 0) {
        timing += " / limit " + std::to_string(static_cast<int>(limit_seconds)) + " s";
        if (secs > limit_seconds) {
            pass = false;
            o.detail += " (over time limit)";
        }
    }
    std::printf("%s %d %s: %s [%s]\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
    return pass;
}

std::string counts(const std::array<std::size_t, 4>& c) {
    return std::to_string(c[1]) + "/" + std::to_string(c[2]) + "/" + std::to_string(c[3]);
}

Outcome symmetry_orders() {
    Outcome o;
    const auto& tet = canonical_symmetry_group(ShapeKind::Tet, true);
    const auto& oct = canonical_symmetry_group(ShapeKind::Oct, true);
    const auto& tet_p = canonical_symmetry_group(ShapeKind::Tet, false);
    const auto& oct_p = canonical_symmetry_group(ShapeKind::Oct, false);
    o.require(tet.order() == 24 && oct.order() == 48, "full orders");
    o.require(tet_p.order() == 12 && oct_p.order() == 24, "proper orders");
    o.require(oracle::distance_preserving_permutations(canonical_shape(ShapeKind::Tet).vertices) == 24,
              "tet permutation oracle");
    o.require(oracle::distance_preserving_permutations(canonical_shape(ShapeKind::Oct).vertices) == 48,
              "oct permutation oracle");
    for (const SymmetryGroup* g : {&tet, &oct, &tet_p, &oct_p}) {
        o.require(g->contains(Isometry{}), "identity");
        for (const auto& a : g->elements) {
            o.require(g->contains(a.inverse()), "inverses");
            for (const auto& b : g->elements) o.require(g->contains(compose(a, b)), "closure");
        }
    }
    o.detail = "tet " + std::to_string(tet.order()) + " (proper " + std::to_string(tet_p.order()) + "), oct " +
               std::to_string(oct.order()) + " (proper " + std::to_string(oct_p.order()) + "); closure and inverses exact";
    return o;
}

Outcome labeled_counts() {
    Outcome o;
    std::array<std::uint64_t, 3> n{};
    for (GrammarId g : kAllGrammars) {
        n[static_cast<std::size_t>(g)] = enumerate_labeled({g, 1, ApplyMode::CountOnly}).nominal;
    }
    const std::uint64_t total = n[0] + n[1] + n[2];
    // Independent closed form: faces x 6 labels, TET_OCT as the product.
    o.require(n[0] == 4 * 6 && n[1] == 8 * 6 && n[2] == (4 * 6) * (8 * 6), "closed form");
    o.require(n[0] == 24 && n[1] == 48 && n[2] == 1152 && total == 1224, "published 24 48 1152 | 1224");
    o.detail = std::to_string(n[0]) + " " + std::to_string(n[1]) + " " + std::to_string(n[2]) + " | " +
               std::to_string(total);
    return o;
}

Outcome uniqueness_ladder() {
    Outcome o;
    std::ostringstream ladder;
    std::array<std::size_t, 4> blind_total{}, sensitive_total{};
    for (GrammarId g : kAllGrammars) {
        const Catalog a = build_catalog({g, 1, false, 1});
        const Catalog b = build_catalog({g, 1, false, 2});
        const LadderReport r = ladder_report(a);
        const LadderReport r2 = ladder_report(b);

        o.require(r.blind_counts == r2.blind_counts && r.sensitive_counts == r2.sensitive_counts &&
                      r.representatives == r2.representatives,
                  "determinism");
        o.require(r.labeled.nominal == kPaperTargets.labeled_for(g), "labeled target");
        const auto target = kPaperTargets.unique_for(g);
        for (std::size_t l = 1; l < 4; ++l) {
            o.require(r.blind_unique_match[l] == (r.blind_counts[l] == target), "blind match flag");
            o.require(r.sensitive_unique_match[l] == (r.sensitive_counts[l] == target), "sensitive match flag");
            blind_total[l] += r.blind_counts[l];
            sensitive_total[l] += r.sensitive_counts[l];
        }

        // Monotone refinement: every class at one level lies inside a single
        // class at the next, and label-sensitive refines label-blind.
        for (std::size_t l = 1; l < 4; ++l) {
            std::map<int, int> blind_up, sens_up, sens_to_blind;
            for (const auto& e : a.entries) {
                auto check = [&](std::map<int, int>& m, int from, int to) {
                    auto [it, fresh] = m.emplace(from, to);
                    o.require(fresh || it->second == to, "refinement monotonicity");
                };
                check(blind_up, e.blind_class[l - 1], e.blind_class[l]);
                check(sens_up, e.sensitive_class[l - 1], e.sensitive_class[l]);
                check(sens_to_blind, e.sensitive_class[l], e.blind_class[l]);
            }
        }

        // Class membership against the brute-force congruence oracle, all pairs.
        std::vector<Design> designs;
        for (const auto& e : a.entries) designs.push_back(entry_design(a, e));
        for (std::size_t i = 0; i < designs.size(); ++i) {
            for (std::size_t j = i + 1; j < designs.size(); ++j) {
                const auto& ei = a.entries[i];
                const auto& ej = a.entries[j];
                for (bool labels : {false, true}) {
                    const auto& ki = labels ? ei.sensitive_keys : ei.blind_keys;
                    const auto& kj = labels ? ej.sensitive_keys : ej.blind_keys;
                    o.require((ki[1] == kj[1]) == oracle::same_geometry(designs[i], designs[j], labels), "L1 oracle");
                    const bool proper = oracle::congruent(designs[i], designs[j], true, labels);
                    o.require((ki[2] == kj[2]) == proper, "L2 oracle");
                    o.require((ki[3] == kj[3]) == (proper || oracle::congruent(designs[i], designs[j], false, labels)),
                              "L3 oracle");
                }
            }
        }
        ladder << to_string(g) << " " << counts(r.blind_counts) << "; ";
    }
    const bool match = blind_total[3] == kPaperTargets.unique_total;
    o.detail = (o.ok ? std::string() : o.detail + "; ") + "deterministic, monotone, oracle-verified; L1/L2/L3 blind " +
               ladder.str() + "totals " + counts(blind_total) + ", sensitive totals " + counts(sensitive_total) +
               "; published 3 6 14 | 23: " + (match ? "match" : "mismatch (reported, not a failure)");
    return o;
}

// Depth-first search in enumeration order that stops at the first chiral
// design. Returns its label, or an empty string if the space has none.
std::string find_chiral(const Design& d, ShapeKind initial, int depth, Outcome& o,
                        std::map<std::string, bool>& seen) {
    if (depth == 0) {
        const std::string l1 = canonical_key(d, Level::L1Geometry).hex();
        if (auto it = seen.find(l1); it != seen.end()) return {};
        const MirrorTwin t = mirror_twin(d);
        seen.emplace(l1, t.is_chiral);
        if (!t.is_chiral) return {};
        // Confirm independently: congruent only by an improper motion.
        const bool ok = !oracle::congruent(d, t.twin, true, false) && oracle::congruent(d, t.twin, false, false);
        o.require(ok, "oracle disagrees with chirality of " + trace_label(initial, d.trace));
        return ok ? trace_label(initial, d.trace) : std::string();
    }
    for (const auto& option : applicable_moves(d)) {
        if (!option.feasible) continue;
        std::string found = find_chiral(apply_move(d, option.move), initial, depth - 1, o, seen);
        if (!found.empty()) return found;
    }
    return {};
}

Outcome mirror_twins() {
    Outcome o;
    std::size_t checked = 0, chiral = 0, uncached = 0;
    struct TwinKeys {
        std::string proper, full;
        bool chiral;
    };
    for (GrammarId g : kAllGrammars) {
        for (int depth = 1; depth <= 2; ++depth) {
            const Catalog cat = build_catalog({g, depth});
            // Twin keys depend only on geometry, so they are computed once per
            // L1 class; every 97th design is recomputed from scratch.
            std::map<std::string, TwinKeys> blind;
            std::map<std::string, std::string> sensitive;
            for (std::size_t i = 0; i < cat.entries.size(); ++i) {
                const auto& e = cat.entries[i];
                const bool fresh = i % 97 == 0;
                auto b = blind.find(e.blind_keys[1]);
                auto s = sensitive.find(e.sensitive_keys[1]);
                if (fresh || b == blind.end() || s == sensitive.end()) {
                    const Design d = entry_design(cat, e);
                    const MirrorTwin t = mirror_twin(d);
                    const CongruenceKeys tk = congruence_keys(t.twin);
                    const TwinKeys keys{tk.proper.hex(), tk.full.hex(), t.is_chiral};
                    const std::string sens = congruence_keys(t.twin, LabelMode::Sensitive).full.hex();
                    if (b != blind.end()) {
                        o.require(b->second.proper == keys.proper && b->second.full == keys.full, "twin key cache");
                    }
                    b = blind.insert_or_assign(e.blind_keys[1], keys).first;
                    s = sensitive.insert_or_assign(e.sensitive_keys[1], sens).first;
                    ++uncached;
                }
                o.require(e.blind_keys[3] == b->second.full, "L3(d) == L3(mirror(d))");
                o.require(e.sensitive_keys[3] == s->second, "sensitive L3 twin");
                o.require(b->second.chiral == (e.blind_keys[2] != b->second.proper) && e.chiral == b->second.chiral,
                          "chirality flag");
                ++checked;
                chiral += e.chiral;
            }
        }
    }

    std::string witness;
    std::map<std::string, bool> seen;
    for (ShapeKind k : initial_kinds(GrammarId::TetOct)) {
        if (witness.empty()) witness = find_chiral(initial_design(GrammarId::TetOct, k), k, 3, o, seen);
    }
    o.detail = (o.ok ? std::string() : o.detail + "; ") + std::to_string(checked) + " designs at depth <= 2 (" +
               std::to_string(chiral) + " chiral, " + std::to_string(uncached) +
               " twins keyed from scratch); depth-3 TET_OCT witness: " + (witness.empty() ? "none found" : witness);
    return o;
}

Outcome frame_arithmetic() {
    Outcome o;
    auto nc = [](const Design& d) {
        const FrameGraph f = extract_frame(d);
        return std::make_pair(f.nodes.size(), f.struts.size());
    };
    using P = std::pair<std::size_t, std::size_t>;
    const Design tet = initial_design(GrammarId::TetOct, ShapeKind::Tet);
    // Derived: a glued pair shares 3 nodes and 3 struts.
    o.require(nc(tet) == P{4, 6}, "TET (4,6)");
    o.require(nc(initial_design(GrammarId::TetOct, ShapeKind::Oct)) == P{6, 12}, "OCT (6,12)");
    o.require(nc(apply_move(tet, {0, 0, ShapeKind::Tet, 0, 1})) == P{4 + 4 - 3, 6 + 6 - 3}, "TET+TET (5,9)");
    o.require(nc(apply_move(tet, {0, 0, ShapeKind::Oct, 0, 1})) == P{4 + 6 - 3, 6 + 12 - 3}, "TET+OCT (7,15)");

    std::mt19937_64 rng(2024);
    std::size_t frames = 0, struts = 0;
    for (int depth = 1; depth <= 6; ++depth) {
        for (GrammarId g : kAllGrammars) {
            for (ShapeKind k : initial_kinds(g)) {
                for (int i = 0; i < 6; ++i) {
                    const Design d = testing_support::random_walk(g, k, depth, rng, i % 2 == 1);
                    const FrameGraph f = extract_frame(d);
                    const auto u = oracle::frame_union(d);
                    o.require(f.nodes.size() == u.nodes.size() && f.struts.size() == u.struts.size(),
                              "frame equals union of solids");
                    for (const auto& [a, b] : f.struts) {
                        o.require(distance2(f.nodes[static_cast<std::size_t>(a)], f.nodes[static_cast<std::size_t>(b)]) == 2,
                                  "strut squared length 2");
                    }
                    ++frames;
                    struts += f.struts.size();
                }
            }
        }
    }
    o.detail = (o.ok ? std::string() : o.detail + "; ") + "(4,6) (6,12) (5,9) (7,15); " + std::to_string(struts) +
               " struts in " + std::to_string(frames) + " random frames of depth 1-6 all squared length 2";
    return o;
}

Outcome lattice_residency() {
    Outcome o;
    std::size_t designs = 0;
    auto check = [&](const Design& d) {
        const Vec3 shift = d.initial_kind() == ShapeKind::Oct ? Vec3{1, 0, 0} : Vec3{};
        o.require(oracle::on_fcc(d, shift) && fcc_residency(d), "alternating growth on FCC");
        ++designs;
    };
    for (ShapeKind k : kAllShapeKinds) {
        // Exhaustive to depth 2, then random walks to depth 6.
        Design root = initial_design(GrammarId::TetOct, k, true);
        for (const auto& m1 : applicable_moves(root, false)) {
            const Design d1 = apply_move(root, m1.move);
            check(d1);
            for (const auto& m2 : applicable_moves(d1)) {
                if (m2.feasible) check(apply_move(d1, m2.move));
            }
        }
    }
    std::mt19937_64 rng(6);
    for (int depth = 3; depth <= 6; ++depth) {
        for (int i = 0; i < 40; ++i) {
            check(testing_support::random_walk(GrammarId::TetOct, i % 2 ? ShapeKind::Oct : ShapeKind::Tet, depth, rng, true));
        }
    }
    const Design t = initial_design(GrammarId::TetTet, ShapeKind::Tet);
    bool apex = false;
    const Vec3 target{Scalar(4, 3), Scalar(4, 3), Scalar(4, 3)};
    for (const auto& m : applicable_moves(t)) {
        const Design d = apply_move(t, m.move);
        o.require(!fcc_residency(d) && !oracle::on_fcc(d, {}), "TET-on-TET leaves the lattice");
        for (const Vec3& v : d.shapes[1].vertices) apex = apex || v == target;
    }
    o.require(apex, "apex (4/3,4/3,4/3)");
    o.detail = (o.ok ? std::string() : o.detail + "; ") + std::to_string(designs) +
               " alternating designs on the even-sum lattice; TET-on-TET leaves it at step 1 (apex 4/3,4/3,4/3)";
    return o;
}

Outcome determinism() {
    Outcome o;
    std::size_t replays = 0;
    const Catalog seq = build_catalog({GrammarId::TetOct, 2, false, 1});
    const Catalog again = build_catalog({GrammarId::TetOct, 2, false, 1});
    const Catalog par = build_catalog({GrammarId::TetOct, 2, false, 4});
    o.require(seq.entries.size() == par.entries.size() && seq.entries.size() == again.entries.size(), "entry counts");
    for (std::size_t i = 0; i < seq.entries.size() && o.ok; ++i) {
        const auto& a = seq.entries[i];
        o.require(a.trace == again.entries[i].trace && a.blind_keys == again.entries[i].blind_keys &&
                      a.sensitive_keys == again.entries[i].sensitive_keys,
                  "keys across runs");
        o.require(a.trace == par.entries[i].trace && a.blind_keys == par.entries[i].blind_keys &&
                      a.sensitive_keys == par.entries[i].sensitive_keys && a.blind_class == par.entries[i].blind_class,
                  "keys concurrent vs sequential");
        if (i % 37 == 0) {
            const Design d = entry_design(seq, a);
            const std::string text = design_to_json(d, true).dump(2);
            const Design r = design_from_json(parse_json_text(text));
            o.require(design_to_json(r, true).dump(2) == text, "replayed JSON byte-identical");
            ++replays;
        }
    }
    o.require(catalog_to_json(seq, Level::L0Labeled).dump() == catalog_to_json(par, Level::L0Labeled).dump(),
              "catalog JSON identical");
    std::mt19937_64 rng(77);
    for (int i = 0; i < 60; ++i) {
        const GrammarId g = kAllGrammars[static_cast<std::size_t>(i % 3)];
        Design d = testing_support::random_walk(g, initial_kinds(g).back(), 1 + i % 6, rng);
        if (i % 5 == 0) d = mirror_twin(d).twin;
        const std::string text = design_to_json(d).dump();
        o.require(design_to_json(design_from_json(parse_json_text(text))).dump() == text, "random trace replay");
        ++replays;
    }
    o.detail = (o.ok ? std::string() : o.detail + "; ") + std::to_string(replays) +
               " traces replayed byte-identically; " + std::to_string(seq.entries.size()) +
               " TET_OCT depth-2 keys identical across runs and 1 vs 4 threads";
    return o;
}

Outcome overlap_soundness() {
    Outcome o;
    std::mt19937_64 rng(8);
    std::size_t cases = 0, overlapping = 0, disagreements = 0;
    auto compare = [&](const PolyShape& a, const PolyShape& b) {
        const bool sat = interiors_intersect(a, b);
        if (sat != oracle::hulls_overlap(a.vertices, b.vertices)) ++disagreements;
        overlapping += sat;
        ++cases;
    };
    // Half from grammar placements (touching or crossing neighbours), half
    // from rational translations of symmetric copies.
    while (cases < 500) {
        const GrammarId g = kAllGrammars[rng() % 3];
        const Design d = testing_support::random_walk(g, initial_kinds(g)[rng() % initial_kinds(g).size()],
                                                      1 + static_cast<int>(rng() % 3), rng);
        const auto moves = applicable_moves(d, false);
        const PolyShape added = placed_shape(d, moves[rng() % moves.size()].move);
        compare(d.shapes[rng() % d.shapes.size()], added);
    }
    std::uniform_int_distribution<int> num(-5, 5);
    while (cases < 1000) {
        const ShapeKind ka = rng() % 2 ? ShapeKind::Tet : ShapeKind::Oct;
        const ShapeKind kb = rng() % 2 ? ShapeKind::Tet : ShapeKind::Oct;
        const auto& sym = canonical_symmetry_group(kb, true).elements;
        const Isometry g = compose(
            Isometry::translation({testing_support::frac(num(rng), 4), testing_support::frac(num(rng), 4), testing_support::frac(num(rng), 4)}), sym[rng() % sym.size()]);
        compare(PolyShape::place(ka, Isometry{}), PolyShape::place(kb, g));
    }
    o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    o.detail = (o.ok ? std::string() : o.detail + "; ") + std::to_string(cases) + " placements, " +
               std::to_string(overlapping) + " overlapping, " + std::to_string(disagreements) + " disagreements";
    return o;
}

}  // namespace

int main() {
    bool all = true;
    all &= run_criterion(1, "symmetry orders", 1, symmetry_orders);
    all &= run_criterion(2, "labeled counts", 1, labeled_counts);
    all &= run_criterion(3, "uniqueness ladder", 30, uniqueness_ladder);
    all &= run_criterion(4, "mirror twins", 120, mirror_twins);
    all &= run_criterion(5, "frame arithmetic", 10, frame_arithmetic);
    all &= run_criterion(6, "lattice residency", 10, lattice_residency);
    all &= run_criterion(7, "determinism and exactness", 0, determinism);
    all &= run_criterion(8, "overlap soundness", 0, overlap_soundness);
    return all ? 0 : 1;
}
