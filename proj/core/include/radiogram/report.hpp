#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "radiogram/catalog.hpp"
#include "radiogram/serialize.hpp"

namespace radiogram {

/// Reproduction of the published catalog figures: labeled design counts,
/// symmetry orders, and the uniqueness ladder for every grammar at depth 1.
struct PaperCheckResult {
    std::array<std::uint64_t, 3> labeled{};  ///< per grammar, counting convention
    std::uint64_t labeled_total = 0;
    std::array<std::size_t, 2> symmetry_orders{};         ///< full group, tet / oct
    std::array<std::size_t, 2> proper_symmetry_orders{};  ///< rotation subgroup
    std::array<LadderReport, 3> ladders;
    /// Sum over grammars of the class counts per level.
    std::array<std::size_t, 4> blind_unique_totals{};
    std::array<std::size_t, 4> sensitive_unique_totals{};
    bool labeled_match = false;
    bool symmetry_match = false;
    /// Some level reproduces every published unique count at once.
    bool unique_match = false;
    double runtime_seconds = 0.0;
};

PaperCheckResult paper_check(unsigned threads = 1);

json paper_check_to_json(const PaperCheckResult& r);

/// Fixed-width table for terminals. The first row reads
/// "labeled  24 48 1152 | 1224" when the counts are reproduced.
std::string paper_check_table(const PaperCheckResult& r);

}  // namespace radiogram
