#pragma once

// Design enumeration and the equivalence ladder.
//
//   L0  labeled trace
//   L1  exact geometry: multiset of (kind, vertex set)
//   L2  L1 up to proper rigid motions
//   L3  L1 up to all rigid motions (mirror images merged)
//
// Each level comes in a label-blind and a label-sensitive flavour; the
// sensitive one also records which faces carry the USED marker.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radiogram/grammar.hpp"
#include "radiogram/polyhedra.hpp"

namespace radiogram {

enum class Level : std::uint8_t { L0Labeled, L1Geometry, L2ProperCongruence, L3FullCongruence };
enum class LabelMode : std::uint8_t { Blind, Sensitive };

inline constexpr std::array<Level, 4> kAllLevels{Level::L0Labeled, Level::L1Geometry, Level::L2ProperCongruence,
                                                 Level::L3FullCongruence};

/// "l0".."l3".
std::string_view to_string(Level level);
Level parse_level(std::string_view text);
std::string_view to_string(LabelMode labels);
LabelMode parse_label_mode(std::string_view text);

struct CanonicalKey {
    Level level = Level::L0Labeled;
    LabelMode labels = LabelMode::Blind;
    std::string bytes;

    /// SHA-256 of the key bytes, lowercase hex.
    std::string hex() const;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const Design& d, Level level, LabelMode labels = LabelMode::Blind);

struct CongruenceKeys {
    CanonicalKey proper;  ///< L2
    CanonicalKey full;    ///< L3
};

/// L2 and L3 keys from a single pass over the normalizing motions.
CongruenceKeys congruence_keys(const Design& d, LabelMode labels = LabelMode::Blind);

// --- enumeration -----------------------------------------------------------

struct EnumerationConfig {
    GrammarId grammar = GrammarId::TetTet;
    int depth = 1;  ///< number of rule applications
    ApplyMode mode = ApplyMode::Strict;
    bool alternate = false;
};

struct EnumerationSummary {
    /// Size of the labeled space under the counting convention: free faces x
    /// attachable kinds x 6 labels per step, occupancy and overlap ignored.
    /// TET_OCT is the product of the TET_TET and OCT_OCT spaces.
    std::uint64_t nominal = 0;
    /// Labeled traces of full depth that were visited.
    std::uint64_t traversed = 0;
    /// Visited traces that produced a design.
    std::uint64_t realized = 0;
    /// Traces cut off by an overlapping move (strict mode only).
    std::uint64_t infeasible = 0;
};

std::uint64_t nominal_labeled_count(GrammarId grammar, int depth);

/// Called once per labeled trace; `design` is null for a trace cut off by an
/// overlapping move. `initial` is the trace's starting solid.
using EnumerationVisitor = std::function<void(ShapeKind initial, std::span<const Move> trace, const Design* design)>;

/// Visits every labeled trace in deterministic order: initial kind, then
/// moves in applicable_moves order, depth first.
EnumerationSummary enumerate_labeled(const EnumerationConfig& config, const EnumerationVisitor& visit = {});

// --- catalog ---------------------------------------------------------------

struct CatalogConfig {
    GrammarId grammar = GrammarId::TetTet;
    int depth = 1;
    bool alternate = false;
    /// Worker threads; the result does not depend on this.
    unsigned threads = 1;
};

struct CatalogEntry {
    ShapeKind initial = ShapeKind::Tet;
    std::vector<Move> trace;
    /// Key digests (hex) per level.
    std::array<std::string, 4> blind_keys;
    std::array<std::string, 4> sensitive_keys;
    /// Class ids per level, numbered by first appearance.
    std::array<int, 4> blind_class{};
    std::array<int, 4> sensitive_class{};
    bool chiral = false;
    std::size_t point_group_order = 0;
};

struct Catalog {
    CatalogConfig config;
    EnumerationSummary summary;
    std::vector<CatalogEntry> entries;
    std::array<std::size_t, 4> blind_classes{};
    std::array<std::size_t, 4> sensitive_classes{};
};

/// Strict-mode enumeration of every realized design at exactly `depth`
/// applications, keyed at all levels.
Catalog build_catalog(const CatalogConfig& config);

/// Rebuilds the design an entry describes.
Design entry_design(const Catalog& catalog, const CatalogEntry& entry);

// --- ladder ----------------------------------------------------------------

struct PaperTargets {
    std::array<std::uint64_t, 3> labeled{24, 48, 1152};
    std::uint64_t labeled_total = 1224;
    std::array<std::uint64_t, 3> unique{3, 6, 14};
    std::uint64_t unique_total = 23;

    std::uint64_t labeled_for(GrammarId id) const { return labeled[static_cast<std::size_t>(id)]; }
    std::uint64_t unique_for(GrammarId id) const { return unique[static_cast<std::size_t>(id)]; }
};

inline constexpr PaperTargets kPaperTargets{};

struct LadderReport {
    GrammarId grammar = GrammarId::TetTet;
    int depth = 1;
    EnumerationSummary labeled;
    std::array<std::size_t, 4> blind_counts{};
    std::array<std::size_t, 4> sensitive_counts{};
    /// First trace of each class, per level (label-blind).
    std::array<std::vector<std::string>, 4> representatives;
    /// L3 classes whose members are chiral (each splits into a mirror pair at L2).
    std::size_t chiral_pair_count = 0;
    bool labeled_match = false;
    std::array<bool, 4> blind_unique_match{};
    std::array<bool, 4> sensitive_unique_match{};
    std::string note;
};

LadderReport ladder_report(const Catalog& catalog);
LadderReport ladder_report(GrammarId grammar, int depth, unsigned threads = 1);

/// Short text form of a trace: "tet|0.1.oct.2.-1|..." for logs and reports.
std::string trace_label(ShapeKind initial, std::span<const Move> trace);

// --- mirror twins and point groups ----------------------------------------

struct MirrorTwin {
    Design twin;
    bool is_chiral = false;
};

/// Mirror image of `d`, renormalized so that its first solid occupies the
/// canonical vertex set again.
MirrorTwin mirror_twin(const Design& d);

/// Rigid motions mapping the design's node/strut frame onto itself.
SymmetryGroup design_point_group(const Design& d);

}  // namespace radiogram
