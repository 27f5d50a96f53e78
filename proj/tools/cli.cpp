#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "radiogram/catalog.hpp"
#include "radiogram/frame.hpp"
#include "radiogram/report.hpp"
#include "radiogram/serialize.hpp"
#include "radiogram/service.hpp"

namespace radiogram::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << content;
}

json read_json_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_json_text(text);
    } catch (const Error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void configure_logging() {
    spdlog::set_level(spdlog::level::warn);
    if (const char* level = std::getenv("RADIOGRAM_LOG")) {
        spdlog::set_level(spdlog::level::from_str(level));
    }
}

Design load_design(const json& j) {
    // A design file, or a derivation script to replay.
    if (j.is_array() || (j.is_object() && j.contains("moves"))) {
        const DerivationScript s = script_from_json(j);
        return replay(s.grammar, s.initial_kind, s.moves, s.alternate);
    }
    return design_from_json(j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    configure_logging();

    CLI::App app{"radiogram: shape grammars over tetrahedra and octahedra"};
    app.require_subcommand(1);

    std::string grammar_name = "tet";
    std::string dedupe = "l0";
    std::string label_mode = "blind";
    std::string out_path;
    int depth = 1;
    bool count_only = false;
    bool strict = false;
    bool alternate = false;
    unsigned threads = 1;

    auto* enumerate = app.add_subcommand("enumerate", "enumerate labeled designs and key them");
    enumerate->add_option("--grammar", grammar_name, "tet | oct | tet-oct")
        ->check(CLI::IsMember({"tet", "oct", "tet-oct", "TET_TET", "OCT_OCT", "TET_OCT"}));
    enumerate->add_option("--depth", depth, "number of rule applications")->check(CLI::Range(1, 8));
    enumerate->add_option("--dedupe", dedupe, "keep one design per class at this level")
        ->check(CLI::IsMember({"l0", "l1", "l2", "l3"}));
    auto* strict_flag = enumerate->add_flag("--strict", strict, "realize designs, refusing overlaps (default)");
    enumerate->add_flag("--count-only", count_only, "count the nominal labeled space only")->excludes(strict_flag);
    enumerate->add_flag("--alternate", alternate, "TET_OCT: attach only the other kind");
    enumerate->add_option("--threads", threads, "worker threads");
    enumerate->add_option("--out", out_path, "output file (default stdout)");

    bool paper = false;
    bool fail_on_mismatch = false;
    bool require_unique = false;
    auto* report = app.add_subcommand("report", "uniqueness ladder and published-figure check");
    report->add_flag("--paper-check", paper, "reproduce the published catalog figures");
    report->add_option("--grammar", grammar_name, "grammar for a single ladder report");
    report->add_option("--depth", depth, "depth for a single ladder report")->check(CLI::Range(1, 8));
    report->add_option("--threads", threads, "worker threads");
    report->add_option("--out", out_path, "JSON output file");
    report->add_flag("--fail-on-mismatch", fail_on_mismatch, "exit 3 if labeled counts or symmetry orders differ");
    report->add_flag("--require-unique-match", require_unique,
                     "with --fail-on-mismatch, also require the unique counts");

    std::string script_path;
    std::string initial_name = "tet";
    auto* derive = app.add_subcommand("derive", "replay a derivation script");
    derive->add_option("--script", script_path, "JSON move list or {grammar, initial_kind, moves}")->required();
    derive->add_option("--grammar", grammar_name, "grammar for a bare move list");
    derive->add_option("--initial", initial_name, "initial solid for a bare move list");
    derive->add_option("--out", out_path, "output design file (default stdout)");

    std::string design_path;
    std::string format = "obj";
    double scale = 1.0;
    auto* exporter = app.add_subcommand("export", "export a design's space frame");
    exporter->add_option("--design", design_path, "design JSON (or derivation script)")->required();
    exporter->add_option("--format", format, "obj | json")->check(CLI::IsMember({"obj", "json"}));
    exporter->add_option("--scale", scale, "physical strut length in meters")->check(CLI::PositiveNumber);
    exporter->add_option("--out", out_path, "output file (default stdout)");

    std::string shape_name = "tet";
    bool proper_only = false;
    auto* symmetry = app.add_subcommand("symmetry", "print a solid's symmetry group");
    symmetry->add_option("--shape", shape_name, "tet | oct")->check(CLI::IsMember({"tet", "oct"}));
    symmetry->add_flag("--proper-only", proper_only, "rotations only");

    int port = 8080;
    std::string host = "127.0.0.1";
    std::string persist_dir;
    std::string static_dir;
    auto* serve = app.add_subcommand("serve", "run the session API");
    serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
    serve->add_option("--host", host, "bind address");
    serve->add_option("--persist", persist_dir, "snapshot sessions as JSON in this directory");
    serve->add_option("--static", static_dir, "serve explorer assets from this directory");
    serve->add_option("--threads", threads, "catalog worker threads");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
        return kUsage;
    }

    try {
        if (enumerate->parsed()) {
            const GrammarId grammar = parse_grammar_id(grammar_name);
            if (count_only) {
                const EnumerationSummary s = enumerate_labeled({grammar, depth, ApplyMode::CountOnly, alternate});
                const json result{{"grammar", to_string(grammar)},
                                  {"depth", depth},
                                  {"mode", "count-only"},
                                  {"labeled", summary_to_json(s)}};
                write_output(out_path, result.dump(2) + "\n", out);
                if (!out_path.empty()) out << "labeled " << s.nominal << " (traversed " << s.traversed << ")\n";
                return kOk;
            }
            const Catalog catalog = build_catalog({grammar, depth, alternate, threads});
            write_output(out_path, catalog_to_json(catalog, parse_level(dedupe)).dump(2) + "\n", out);
            if (!out_path.empty()) {
                out << "labeled " << catalog.summary.realized << " realized, " << catalog.summary.infeasible
                    << " infeasible; classes l1 " << catalog.blind_classes[1] << " l2 " << catalog.blind_classes[2]
                    << " l3 " << catalog.blind_classes[3] << '\n';
            }
            return kOk;
        }

        if (report->parsed()) {
            if (paper) {
                const PaperCheckResult r = paper_check(threads);
                if (!out_path.empty()) write_output(out_path, paper_check_to_json(r).dump(2) + "\n", out);
                out << paper_check_table(r);
                if (fail_on_mismatch && (!r.labeled_match || !r.symmetry_match || (require_unique && !r.unique_match))) {
                    return kPaperMismatch;
                }
                return kOk;
            }
            const LadderReport r = ladder_report(parse_grammar_id(grammar_name), depth, threads);
            const std::string text = ladder_to_json(r).dump(2) + "\n";
            if (out_path.empty()) {
                out << text;
            } else {
                write_output(out_path, text, out);
                out << r.note << '\n';
            }
            return kOk;
        }

        if (derive->parsed()) {
            DerivationScript defaults;
            defaults.grammar = parse_grammar_id(grammar_name);
            defaults.initial_kind = parse_shape_kind(initial_name);
            const DerivationScript script = script_from_json(read_json_file(script_path), defaults);
            const Design d = replay(script.grammar, script.initial_kind, script.moves, script.alternate);
            write_output(out_path, design_to_json(d).dump(2) + "\n", out);
            return kOk;
        }

        if (exporter->parsed()) {
            const Design d = load_design(read_json_file(design_path));
            const FrameGraph frame = extract_frame(d, scale);
            if (format == "obj") {
                write_output(out_path, frame_to_obj(frame), out);
            } else {
                const json result{{"frame", frame_to_json(frame)},
                                  {"stats", frame_stats_to_json(frame_stats(frame))},
                                  {"fcc_residency", fcc_residency(d)}};
                write_output(out_path, result.dump(2) + "\n", out);
            }
            return kOk;
        }

        if (symmetry->parsed()) {
            const SymmetryGroup& group = canonical_symmetry_group(parse_shape_kind(shape_name), !proper_only);
            out << "order " << group.order() << '\n';
            for (std::size_t i = 0; i < group.elements.size(); ++i) {
                const Isometry& g = group.elements[i];
                out << i << ": det " << (g.is_proper() ? "+1" : "-1") << " q [";
                for (std::size_t k = 0; k < 9; ++k) out << (k ? " " : "") << to_string(g.linear().m[k]);
                out << "] t " << to_string(g.offset()) << '\n';
            }
            return kOk;
        }

        if (serve->parsed()) {
            service::ServiceOptions options;
            if (!persist_dir.empty()) options.persist_dir = persist_dir;
            options.catalog_threads = threads;
            service::SessionService sessions(options);
            service::HttpServer server(sessions, static_dir.empty() ? std::nullopt
                                                                    : std::optional<std::filesystem::path>(static_dir));
            const int bound = server.bind(host, port);
            if (bound < 0) {
                err << "cannot bind " << host << ':' << port << '\n';
                return kInvalidInput;
            }
            spdlog::info("serving on {}:{}", host, bound);
            out << "listening on http://" << host << ':' << bound << '\n' << std::flush;
            server.listen();
            return kOk;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kUsage;
}

}  // namespace radiogram::cli
