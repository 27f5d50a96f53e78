#include "radiogram/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace radiogram {

PaperCheckResult paper_check(unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    PaperCheckResult r;
    for (GrammarId g : kAllGrammars) {
        const auto i = static_cast<std::size_t>(g);
        r.labeled[i] = enumerate_labeled({g, 1, ApplyMode::CountOnly}).nominal;
        r.labeled_total += r.labeled[i];
        r.ladders[i] = ladder_report(g, 1, threads);
        for (std::size_t l = 0; l < 4; ++l) {
            r.blind_unique_totals[l] += r.ladders[i].blind_counts[l];
            r.sensitive_unique_totals[l] += r.ladders[i].sensitive_counts[l];
        }
    }
    for (ShapeKind k : kAllShapeKinds) {
        const auto i = static_cast<std::size_t>(k);
        r.symmetry_orders[i] = canonical_symmetry_group(k, true).order();
        r.proper_symmetry_orders[i] = canonical_symmetry_group(k, false).order();
    }

    r.labeled_match = r.labeled_total == kPaperTargets.labeled_total;
    for (GrammarId g : kAllGrammars) {
        r.labeled_match = r.labeled_match && r.labeled[static_cast<std::size_t>(g)] == kPaperTargets.labeled_for(g);
    }
    r.symmetry_match = r.symmetry_orders[0] == 24 && r.symmetry_orders[1] == 48;
    for (std::size_t l = 1; l < 4; ++l) {
        bool blind = true;
        bool sensitive = true;
        for (const auto& ladder : r.ladders) {
            blind = blind && ladder.blind_unique_match[l];
            sensitive = sensitive && ladder.sensitive_unique_match[l];
        }
        r.unique_match = r.unique_match || blind || sensitive;
    }
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

json paper_check_to_json(const PaperCheckResult& r) {
    json ladders = json::array();
    for (const auto& l : r.ladders) ladders.push_back(ladder_to_json(l));
    auto totals = [](const std::array<std::size_t, 4>& t) {
        return json{{"l0", t[0]}, {"l1", t[1]}, {"l2", t[2]}, {"l3", t[3]}};
    };
    return json{
        {"labeled", json{{"TET_TET", r.labeled[0]}, {"OCT_OCT", r.labeled[1]}, {"TET_OCT", r.labeled[2]},
                         {"total", r.labeled_total}}},
        {"symmetry_orders", json{{"tet", r.symmetry_orders[0]}, {"oct", r.symmetry_orders[1]},
                                 {"tet_proper", r.proper_symmetry_orders[0]},
                                 {"oct_proper", r.proper_symmetry_orders[1]}}},
        {"ladders", std::move(ladders)},
        {"unique_totals", json{{"blind", totals(r.blind_unique_totals)},
                               {"sensitive", totals(r.sensitive_unique_totals)}}},
        {"paper_targets",
         json{{"labeled", json{{"TET_TET", kPaperTargets.labeled[0]}, {"OCT_OCT", kPaperTargets.labeled[1]},
                               {"TET_OCT", kPaperTargets.labeled[2]}, {"total", kPaperTargets.labeled_total}}},
              {"unique", json{{"TET_TET", kPaperTargets.unique[0]}, {"OCT_OCT", kPaperTargets.unique[1]},
                              {"TET_OCT", kPaperTargets.unique[2]}, {"total", kPaperTargets.unique_total}}},
              {"symmetry_orders", json{{"tet", 24}, {"oct", 48}}}}},
        {"match", json{{"labeled", r.labeled_match}, {"symmetry", r.symmetry_match}, {"unique", r.unique_match}}},
        {"runtime_seconds", r.runtime_seconds}};
}

std::string paper_check_table(const PaperCheckResult& r) {
    std::ostringstream out;
    auto yes_no = [](bool b) { return b ? "match" : "MISMATCH"; };
    out << "labeled  " << r.labeled[0] << ' ' << r.labeled[1] << ' ' << r.labeled[2] << " | " << r.labeled_total
        << "   (published 24 48 1152 | 1224)  " << yes_no(r.labeled_match) << '\n';
    out << "symmetry tet " << r.symmetry_orders[0] << " oct " << r.symmetry_orders[1] << " (proper "
        << r.proper_symmetry_orders[0] << ' ' << r.proper_symmetry_orders[1] << ")   (published 24 48)  "
        << yes_no(r.symmetry_match) << '\n';
    out << "unique   published 3 6 14 | 23\n";
    for (LabelMode mode : {LabelMode::Blind, LabelMode::Sensitive}) {
        for (std::size_t l = 1; l < 4; ++l) {
            out << "  " << std::left << std::setw(10) << to_string(mode) << to_string(static_cast<Level>(l)) << "  ";
            std::size_t total = 0;
            for (const auto& ladder : r.ladders) {
                const std::size_t c =
                    mode == LabelMode::Blind ? ladder.blind_counts[l] : ladder.sensitive_counts[l];
                total += c;
                out << c << ' ';
            }
            out << "| " << total << '\n';
        }
    }
    out << "unique counts " << (r.unique_match ? "reproduced at some level" : "not reproduced at any level")
        << " (advisory)\n";
    out << std::fixed << std::setprecision(3) << "runtime " << r.runtime_seconds << " s\n";
    return out.str();
}

}  // namespace radiogram
