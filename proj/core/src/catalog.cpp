#include "radiogram/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <compare>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <openssl/evp.h>

#include "radiogram/frame.hpp"

namespace radiogram {

std::string_view to_string(Level level) {
    switch (level) {
        case Level::L0Labeled: return "l0";
        case Level::L1Geometry: return "l1";
        case Level::L2ProperCongruence: return "l2";
        case Level::L3FullCongruence: return "l3";
    }
    return "?";
}

Level parse_level(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (Level l : kAllLevels) {
        if (lower == to_string(l)) return l;
    }
    throw Error(ErrorCode::ParseError, "unknown equivalence level '" + std::string(text) + "'");
}

std::string_view to_string(LabelMode labels) { return labels == LabelMode::Blind ? "blind" : "sensitive"; }

LabelMode parse_label_mode(std::string_view text) {
    if (text == "blind") return LabelMode::Blind;
    if (text == "sensitive") return LabelMode::Sensitive;
    throw Error(ErrorCode::ParseError, "unknown label mode '" + std::string(text) + "'");
}

namespace {

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
    std::ostringstream out;
    out << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < length; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
    return out.str();
}

// One solid in a candidate pose: sorted vertices and, when labels count,
// the sorted USED faces.
struct ShapeRep {
    int kind = 0;
    std::vector<Vec3> vertices;
    std::vector<std::array<Vec3, 3>> used;

    friend std::strong_ordering operator<=>(const ShapeRep& a, const ShapeRep& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = std::lexicographical_compare_three_way(a.vertices.begin(), a.vertices.end(),
                                                            b.vertices.begin(), b.vertices.end());
            c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.used.begin(), a.used.end(), b.used.begin(), b.used.end());
    }
    friend bool operator==(const ShapeRep& a, const ShapeRep& b) { return (a <=> b) == 0; }
};

struct DesignRep {
    int anchor_kind = -1;
    std::vector<ShapeRep> shapes;

    friend std::strong_ordering operator<=>(const DesignRep& a, const DesignRep& b) {
        if (auto c = a.anchor_kind <=> b.anchor_kind; c != 0) return c;
        return std::lexicographical_compare_three_way(a.shapes.begin(), a.shapes.end(), b.shapes.begin(),
                                                      b.shapes.end());
    }
};

// positions[s][v]: vertex v of solid s in some pose.
DesignRep make_rep(const Design& d, const std::vector<std::vector<Vec3>>& positions, LabelMode labels,
                   int anchor_kind) {
    DesignRep rep;
    rep.anchor_kind = anchor_kind;
    rep.shapes.reserve(d.shapes.size());
    for (std::size_t s = 0; s < d.shapes.size(); ++s) {
        const PolyShape& shape = d.shapes[s];
        ShapeRep sr;
        sr.kind = static_cast<int>(shape.kind);
        sr.vertices = positions[s];
        std::sort(sr.vertices.begin(), sr.vertices.end());
        if (labels == LabelMode::Sensitive) {
            const Mesh& mesh = canonical_shape(shape.kind);
            for (std::size_t f = 0; f < shape.faces.size(); ++f) {
                if (shape.faces[f] != FaceState::Used) continue;
                std::array<Vec3, 3> face{positions[s][mesh.faces[f][0]], positions[s][mesh.faces[f][1]],
                                         positions[s][mesh.faces[f][2]]};
                std::sort(face.begin(), face.end());
                sr.used.push_back(std::move(face));
            }
            std::sort(sr.used.begin(), sr.used.end());
        }
        rep.shapes.push_back(std::move(sr));
    }
    std::sort(rep.shapes.begin(), rep.shapes.end());
    return rep;
}

void append(std::string& out, const Vec3& v) {
    out += to_string(v.x);
    out += ',';
    out += to_string(v.y);
    out += ',';
    out += to_string(v.z);
    out += ';';
}

std::string serialize(const DesignRep& rep) {
    std::string out;
    if (rep.anchor_kind >= 0) {
        out += "anchor=";
        out += to_string(static_cast<ShapeKind>(rep.anchor_kind));
        out += '\n';
    }
    for (const auto& s : rep.shapes) {
        out += to_string(static_cast<ShapeKind>(s.kind));
        out += ':';
        for (const auto& v : s.vertices) append(out, v);
        if (!s.used.empty()) {
            out += "used:";
            for (const auto& f : s.used) {
                for (const auto& v : f) append(out, v);
                out += '|';
            }
        }
        out += '\n';
    }
    return out;
}

std::string key_prefix(Level level, LabelMode labels) {
    return std::string(to_string(level)) + "/" + std::string(to_string(labels)) + "\n";
}

// Linear part of a canonical symmetry written as a signed permutation:
// (Q p)[r] = sign[r] * p[perm[r]].
struct SignedPermutation {
    std::array<int, 3> perm{};
    std::array<int, 3> sign{};
    bool proper = true;
};

std::vector<SignedPermutation> signed_permutations(ShapeKind kind) {
    std::vector<SignedPermutation> out;
    for (const Isometry& g : canonical_symmetry_group(kind, true).elements) {
        SignedPermutation sp;
        sp.proper = g.is_proper();
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                int s = sgn(g.linear()(r, c));
                if (s != 0) {
                    sp.perm[static_cast<std::size_t>(r)] = c;
                    sp.sign[static_cast<std::size_t>(r)] = s;
                }
            }
        }
        out.push_back(sp);
    }
    return out;
}

const std::vector<SignedPermutation>& canonical_signed_permutations(ShapeKind kind) {
    static const std::vector<SignedPermutation> tet = signed_permutations(ShapeKind::Tet);
    static const std::vector<SignedPermutation> oct = signed_permutations(ShapeKind::Oct);
    return kind == ShapeKind::Tet ? tet : oct;
}

std::vector<std::vector<Vec3>> positions_of(const Design& d) {
    std::vector<std::vector<Vec3>> out;
    out.reserve(d.shapes.size());
    for (const auto& s : d.shapes) out.push_back(s.vertices);
    return out;
}

}  // namespace

std::string CanonicalKey::hex() const { return sha256_hex(bytes); }

std::string trace_label(ShapeKind initial, std::span<const Move> trace) {
    std::string out(to_string(initial));
    for (const Move& m : trace) {
        out += '|';
        out += std::to_string(m.host_shape);
        out += '.';
        out += std::to_string(m.host_face);
        out += '.';
        out += to_string(m.kind);
        out += '.';
        out += std::to_string(m.alignment);
        out += '.';
        out += m.orientation > 0 ? "+1" : "-1";
    }
    return out;
}

CongruenceKeys congruence_keys(const Design& d, LabelMode labels) {
    // Every motion carrying some solid of `d` onto the canonical pose of its
    // kind is a candidate; the minimal candidate pose is the canonical form.
    // Candidates are compared relative to the canonical centroid.
    std::optional<DesignRep> best_proper;
    std::optional<DesignRep> best_full;

    for (const auto& anchor : d.shapes) {
        const Isometry to_canonical = anchor.placement.inverse();
        const Vec3 centroid = canonical_shape(anchor.kind).centroid();
        std::vector<std::vector<Vec3>> centered;
        centered.reserve(d.shapes.size());
        for (const auto& s : d.shapes) {
            std::vector<Vec3> pts;
            pts.reserve(s.vertices.size());
            for (const auto& v : s.vertices) pts.push_back(to_canonical.apply(v) - centroid);
            centered.push_back(std::move(pts));
        }

        std::vector<std::vector<Vec3>> posed = centered;
        for (const SignedPermutation& g : canonical_signed_permutations(anchor.kind)) {
            for (std::size_t s = 0; s < centered.size(); ++s) {
                for (std::size_t v = 0; v < centered[s].size(); ++v) {
                    const Vec3& p = centered[s][v];
                    Vec3& q = posed[s][v];
                    for (std::size_t r = 0; r < 3; ++r) {
                        const Scalar& src = p[static_cast<std::size_t>(g.perm[r])];
                        if (g.sign[r] > 0) {
                            q[r] = src;
                        } else {
                            q[r] = -src;
                        }
                    }
                }
            }
            DesignRep rep = make_rep(d, posed, labels, static_cast<int>(anchor.kind));
            const bool proper = g.proper == anchor.placement.is_proper();
            if (proper && (!best_proper || rep < *best_proper)) best_proper = rep;
            if (!best_full || rep < *best_full) best_full = std::move(rep);
        }
    }

    CongruenceKeys keys;
    keys.proper = {Level::L2ProperCongruence, labels,
                   key_prefix(Level::L2ProperCongruence, labels) + serialize(*best_proper)};
    keys.full = {Level::L3FullCongruence, labels, key_prefix(Level::L3FullCongruence, labels) + serialize(*best_full)};
    return keys;
}

CanonicalKey canonical_key(const Design& d, Level level, LabelMode labels) {
    switch (level) {
        case Level::L0Labeled: {
            std::string bytes = key_prefix(level, labels);
            bytes += to_string(d.grammar);
            bytes += d.alternate ? " alternate" : "";
            bytes += d.mirrored ? " mirrored\n" : "\n";
            bytes += trace_label(d.initial_kind(), d.trace);
            return {level, labels, std::move(bytes)};
        }
        case Level::L1Geometry:
            return {level, labels, key_prefix(level, labels) + serialize(make_rep(d, positions_of(d), labels, -1))};
        case Level::L2ProperCongruence: return congruence_keys(d, labels).proper;
        case Level::L3FullCongruence: return congruence_keys(d, labels).full;
    }
    return {};
}

// --- enumeration -----------------------------------------------------------

std::uint64_t nominal_labeled_count(GrammarId grammar, int depth) {
    if (grammar == GrammarId::TetOct) {
        return nominal_labeled_count(GrammarId::TetTet, depth) * nominal_labeled_count(GrammarId::OctOct, depth);
    }
    const std::uint64_t faces = canonical_shape(grammar == GrammarId::TetTet ? ShapeKind::Tet : ShapeKind::Oct)
                                    .faces.size();
    std::uint64_t free_faces = faces;
    std::uint64_t total = 1;
    for (int step = 0; step < depth; ++step) {
        total *= free_faces * kLabelsPerFace;
        free_faces += faces - 2;
    }
    return total;
}

namespace {

template <typename Leaf>
void descend(const Design& d, ShapeKind initial, std::vector<Move>& trace, int remaining, ApplyMode mode,
             EnumerationSummary& summary, const Leaf& leaf) {
    if (remaining == 0) {
        ++summary.traversed;
        ++summary.realized;
        leaf(initial, std::span<const Move>(trace), &d);
        return;
    }
    for (const MoveOption& option : applicable_moves(d, mode == ApplyMode::Strict)) {
        trace.push_back(option.move);
        if (!option.feasible) {
            ++summary.traversed;
            ++summary.infeasible;
            leaf(initial, std::span<const Move>(trace), nullptr);
        } else {
            const Design next = apply_move(d, option.move, ApplyMode::CountOnly);
            descend(next, initial, trace, remaining - 1, mode, summary, leaf);
        }
        trace.pop_back();
    }
}

}  // namespace

EnumerationSummary enumerate_labeled(const EnumerationConfig& config, const EnumerationVisitor& visit) {
    if (config.depth < 1) throw Error(ErrorCode::MoveNotApplicable, "depth must be at least 1");
    EnumerationSummary summary;
    summary.nominal = nominal_labeled_count(config.grammar, config.depth);
    auto leaf = [&](ShapeKind initial, std::span<const Move> trace, const Design* d) {
        if (visit) visit(initial, trace, d);
    };
    for (ShapeKind initial : initial_kinds(config.grammar)) {
        std::vector<Move> trace;
        const Design start = initial_design(config.grammar, initial, config.alternate);
        descend(start, initial, trace, config.depth, config.mode, summary, leaf);
    }
    return summary;
}

// --- catalog ---------------------------------------------------------------

namespace {

struct GeometryInfo {
    std::string l2;
    std::string l3;
    bool chiral = false;
    std::size_t point_group_order = 0;
};

struct LabelInfo {
    std::string l2;
    std::string l3;
};

// Per-worker memo: many labeled traces share one geometry.
struct KeyCache {
    std::unordered_map<std::string, GeometryInfo> geometry;
    std::unordered_map<std::string, LabelInfo> labeled;

    CatalogEntry entry_for(ShapeKind initial, std::span<const Move> trace, const Design& d) {
        CatalogEntry e;
        e.initial = initial;
        e.trace.assign(trace.begin(), trace.end());
        const std::string l0 = canonical_key(d, Level::L0Labeled).hex();
        e.blind_keys[0] = l0;
        e.sensitive_keys[0] = l0;

        CanonicalKey l1_blind = canonical_key(d, Level::L1Geometry, LabelMode::Blind);
        auto g = geometry.find(l1_blind.bytes);
        if (g == geometry.end()) {
            GeometryInfo info;
            CongruenceKeys keys = congruence_keys(d, LabelMode::Blind);
            CongruenceKeys twin_keys = congruence_keys(mirror_twin(d).twin, LabelMode::Blind);
            info.l2 = keys.proper.hex();
            info.l3 = keys.full.hex();
            info.chiral = keys.proper != twin_keys.proper;
            info.point_group_order = design_point_group(d).order();
            g = geometry.emplace(l1_blind.bytes, std::move(info)).first;
        }
        e.blind_keys[1] = l1_blind.hex();
        e.blind_keys[2] = g->second.l2;
        e.blind_keys[3] = g->second.l3;
        e.chiral = g->second.chiral;
        e.point_group_order = g->second.point_group_order;

        CanonicalKey l1_sensitive = canonical_key(d, Level::L1Geometry, LabelMode::Sensitive);
        auto s = labeled.find(l1_sensitive.bytes);
        if (s == labeled.end()) {
            CongruenceKeys keys = congruence_keys(d, LabelMode::Sensitive);
            s = labeled.emplace(l1_sensitive.bytes, LabelInfo{keys.proper.hex(), keys.full.hex()}).first;
        }
        e.sensitive_keys[1] = l1_sensitive.hex();
        e.sensitive_keys[2] = s->second.l2;
        e.sensitive_keys[3] = s->second.l3;
        return e;
    }
};

struct WorkUnit {
    ShapeKind initial;
    MoveOption first;
};

struct UnitResult {
    EnumerationSummary summary;
    std::vector<CatalogEntry> entries;
};

}  // namespace

Catalog build_catalog(const CatalogConfig& config) {
    if (config.depth < 1) throw Error(ErrorCode::MoveNotApplicable, "depth must be at least 1");
    Catalog catalog;
    catalog.config = config;

    // Partition the trace tree by (initial solid, first move).
    std::vector<WorkUnit> units;
    std::vector<Design> starts;
    for (ShapeKind initial : initial_kinds(config.grammar)) {
        starts.push_back(initial_design(config.grammar, initial, config.alternate));
        for (const MoveOption& option : applicable_moves(starts.back(), true)) units.push_back({initial, option});
    }
    auto start_for = [&](ShapeKind kind) -> const Design& {
        return *std::find_if(starts.begin(), starts.end(), [&](const Design& d) { return d.initial_kind() == kind; });
    };

    std::vector<UnitResult> results(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        KeyCache cache;
        for (std::size_t i = next++; i < units.size(); i = next++) {
            const WorkUnit& unit = units[i];
            UnitResult& out = results[i];
            std::vector<Move> trace{unit.first.move};
            auto leaf = [&](ShapeKind initial, std::span<const Move> t, const Design* d) {
                if (d != nullptr) out.entries.push_back(cache.entry_for(initial, t, *d));
            };
            if (!unit.first.feasible) {
                ++out.summary.traversed;
                ++out.summary.infeasible;
                continue;
            }
            const Design next_design = apply_move(start_for(unit.initial), unit.first.move, ApplyMode::CountOnly);
            descend(next_design, unit.initial, trace, config.depth - 1, ApplyMode::Strict, out.summary, leaf);
        }
    };
    const unsigned threads = std::max(1u, config.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    catalog.summary.nominal = nominal_labeled_count(config.grammar, config.depth);
    for (auto& r : results) {
        catalog.summary.traversed += r.summary.traversed;
        catalog.summary.realized += r.summary.realized;
        catalog.summary.infeasible += r.summary.infeasible;
        std::move(r.entries.begin(), r.entries.end(), std::back_inserter(catalog.entries));
    }

    std::array<std::unordered_map<std::string, int>, 4> blind_ids;
    std::array<std::unordered_map<std::string, int>, 4> sensitive_ids;
    for (auto& e : catalog.entries) {
        for (std::size_t l = 0; l < 4; ++l) {
            e.blind_class[l] = blind_ids[l].emplace(e.blind_keys[l], static_cast<int>(blind_ids[l].size())).first->second;
            e.sensitive_class[l] =
                sensitive_ids[l].emplace(e.sensitive_keys[l], static_cast<int>(sensitive_ids[l].size())).first->second;
        }
    }
    for (std::size_t l = 0; l < 4; ++l) {
        catalog.blind_classes[l] = blind_ids[l].size();
        catalog.sensitive_classes[l] = sensitive_ids[l].size();
    }
    return catalog;
}

Design entry_design(const Catalog& catalog, const CatalogEntry& entry) {
    return replay(catalog.config.grammar, entry.initial, entry.trace, catalog.config.alternate);
}

// --- ladder ----------------------------------------------------------------

LadderReport ladder_report(const Catalog& catalog) {
    LadderReport report;
    report.grammar = catalog.config.grammar;
    report.depth = catalog.config.depth;
    report.labeled = catalog.summary;
    report.blind_counts = catalog.blind_classes;
    report.sensitive_counts = catalog.sensitive_classes;

    std::array<std::unordered_set<int>, 4> seen;
    std::unordered_set<int> chiral_l3;
    for (const auto& e : catalog.entries) {
        for (std::size_t l = 0; l < 4; ++l) {
            if (seen[l].insert(e.blind_class[l]).second) {
                report.representatives[l].push_back(trace_label(e.initial, e.trace));
            }
        }
        if (e.chiral) chiral_l3.insert(e.blind_class[3]);
    }
    report.chiral_pair_count = chiral_l3.size();

    const std::uint64_t labeled_target = kPaperTargets.labeled_for(report.grammar);
    const std::uint64_t unique_target = kPaperTargets.unique_for(report.grammar);
    report.labeled_match = report.depth == 1 && report.labeled.nominal == labeled_target;
    bool any = false;
    for (std::size_t l = 1; l < 4; ++l) {
        report.blind_unique_match[l] = report.blind_counts[l] == unique_target;
        report.sensitive_unique_match[l] = report.sensitive_counts[l] == unique_target;
        any = any || report.blind_unique_match[l] || report.sensitive_unique_match[l];
    }
    std::ostringstream note;
    if (any) {
        note << "published unique count " << unique_target << " reproduced at:";
        for (std::size_t l = 1; l < 4; ++l) {
            if (report.blind_unique_match[l]) note << ' ' << to_string(static_cast<Level>(l)) << "/blind";
            if (report.sensitive_unique_match[l]) note << ' ' << to_string(static_cast<Level>(l)) << "/sensitive";
        }
    } else {
        note << "mismatch: published unique count " << unique_target << " not reproduced at any level; computed"
             << " blind l1/l2/l3 = " << report.blind_counts[1] << '/' << report.blind_counts[2] << '/'
             << report.blind_counts[3] << ", sensitive l1/l2/l3 = " << report.sensitive_counts[1] << '/'
             << report.sensitive_counts[2] << '/' << report.sensitive_counts[3];
    }
    report.note = note.str();
    return report;
}

LadderReport ladder_report(GrammarId grammar, int depth, unsigned threads) {
    return ladder_report(build_catalog({grammar, depth, false, threads}));
}

// --- twins and point groups ------------------------------------------------

MirrorTwin mirror_twin(const Design& d) {
    // Mirror through the first solid's own x = y plane. That plane is a
    // symmetry plane of both canonical solids, so the first solid keeps its
    // vertex set, and applying this twice is the identity.
    static const Isometry mirror = reflection_through_plane({1, -1, 0}, 0);
    const Isometry& p0 = d.shapes.front().placement;
    const Isometry g = compose(p0, compose(mirror, p0.inverse()));
    MirrorTwin out;
    out.twin = transformed(d, g);
    out.twin.mirrored = !d.mirrored;
    out.is_chiral = congruence_keys(d).proper != congruence_keys(out.twin).proper;
    return out;
}

SymmetryGroup design_point_group(const Design& d) { return SymmetryGroup{frame_symmetries(extract_frame(d))}; }

}  // namespace radiogram
