#include "radiogram/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace radiogram {

namespace {

[[noreturn]] void parse_fail(const std::string& message) { throw Error(ErrorCode::ParseError, message); }

const json& field(const json& j, const char* name) {
    if (!j.is_object()) parse_fail(std::string("expected an object holding '") + name + "'");
    auto it = j.find(name);
    if (it == j.end()) parse_fail(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer()) parse_fail(std::string("field '") + name + "' must be an integer");
    return v.get<int>();
}

std::string string_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string()) parse_fail(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

bool bool_field_or(const json& j, const char* name, bool fallback) {
    auto it = j.find(name);
    if (it == j.end()) return fallback;
    if (!it->is_boolean()) parse_fail(std::string("field '") + name + "' must be a boolean");
    return it->get<bool>();
}

std::string_view face_state_name(FaceState s) { return s == FaceState::Free ? "free" : "used"; }

json approx_point(const Vec3& v) { return json::array({approx(v.x), approx(v.y), approx(v.z)}); }

}  // namespace

double approx(const Scalar& s) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.9g", s.get_d());
    return std::strtod(buffer, nullptr);
}

json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    parse_fail("expected a rational string such as \"4/3\"");
}

void to_json(json& j, const Vec3& v) { j = json::array({to_string(v.x), to_string(v.y), to_string(v.z)}); }

void from_json(const json& j, Vec3& v) {
    if (!j.is_array() || j.size() != 3) parse_fail("expected a 3-vector");
    v = Vec3(scalar_from_json(j[0]), scalar_from_json(j[1]), scalar_from_json(j[2]));
}

void to_json(json& j, const Isometry& m) {
    json q = json::array();
    for (const auto& e : m.linear().m) q.push_back(to_string(e));
    j = json{{"q", std::move(q)}, {"t", m.offset()}, {"det_sign", m.det_sign()}};
}

void from_json(const json& j, Isometry& m) {
    const json& q = field(j, "q");
    if (!q.is_array() || q.size() != 9) parse_fail("isometry 'q' must hold 9 entries");
    Mat3 mat;
    for (std::size_t i = 0; i < 9; ++i) mat.m[i] = scalar_from_json(q[i]);
    m = Isometry(std::move(mat), field(j, "t").get<Vec3>());
}

void to_json(json& j, const Move& m) {
    j = json{{"host_shape", m.host_shape},
             {"host_face", m.host_face},
             {"kind", to_string(m.kind)},
             {"alignment", m.alignment},
             {"orientation", m.orientation}};
}

void from_json(const json& j, Move& m) {
    m.host_shape = int_field(j, "host_shape");
    m.host_face = int_field(j, "host_face");
    m.kind = parse_shape_kind(string_field(j, "kind"));
    m.alignment = int_field(j, "alignment");
    m.orientation = int_field(j, "orientation");
}

json mesh_to_json(const Mesh& mesh) {
    json faces = json::array();
    for (const auto& f : mesh.faces) faces.push_back(json::array({f[0], f[1], f[2]}));
    return json{{"kind", to_string(mesh.kind)}, {"vertices", mesh.vertices}, {"faces", std::move(faces)}};
}

json design_to_json(const Design& d, bool with_render) {
    json shapes = json::array();
    for (const auto& s : d.shapes) {
        json states = json::array();
        for (FaceState f : s.faces) states.push_back(face_state_name(f));
        shapes.push_back(json{{"kind", to_string(s.kind)},
                              {"placement", s.placement},
                              {"vertices", s.vertices},
                              {"face_states", std::move(states)}});
    }
    json out{{"grammar", to_string(d.grammar)},
             {"alternate", d.alternate},
             {"mirrored", d.mirrored},
             {"initial_kind", to_string(d.initial_kind())},
             {"trace", d.trace},
             {"shapes", std::move(shapes)}};
    if (with_render) {
        json render = json::array();
        for (std::size_t s = 0; s < d.shapes.size(); ++s) {
            const PolyShape& shape = d.shapes[s];
            const Mesh& mesh = canonical_shape(shape.kind);
            json vertices = json::array();
            for (const auto& v : shape.vertices) vertices.push_back(approx_point(v));
            json faces = json::array();
            for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
                // Winding as seen from outside the placed solid.
                auto idx = mesh.faces[f];
                if (!shape.placement.is_proper()) std::swap(idx[1], idx[2]);
                faces.push_back(json{{"id", json::array({s, f})},
                                     {"vertices", json::array({idx[0], idx[1], idx[2]})},
                                     {"state", face_state_name(shape.faces[f])}});
            }
            render.push_back(json{{"kind", to_string(shape.kind)}, {"vertices", std::move(vertices)},
                                  {"faces", std::move(faces)}});
        }
        out["render"] = std::move(render);
        out["l1_key"] = canonical_key(d, Level::L1Geometry).hex();
    }
    return out;
}

Design design_from_json(const json& j) {
    if (!j.is_object()) parse_fail("design must be a JSON object");
    const GrammarId grammar = parse_grammar_id(string_field(j, "grammar"));
    const ShapeKind initial = parse_shape_kind(string_field(j, "initial_kind"));
    const bool alternate = bool_field_or(j, "alternate", false);
    const bool mirrored = bool_field_or(j, "mirrored", false);
    const json& trace_json = field(j, "trace");
    if (!trace_json.is_array()) parse_fail("'trace' must be an array of moves");
    std::vector<Move> trace;
    for (const auto& m : trace_json) trace.push_back(m.get<Move>());

    Design d = replay(grammar, initial, trace, alternate);
    if (mirrored) d = mirror_twin(d).twin;

    if (auto it = j.find("shapes"); it != j.end()) {
        if (!it->is_array() || it->size() != d.shapes.size()) parse_fail("'shapes' does not match the trace");
        for (std::size_t s = 0; s < d.shapes.size(); ++s) {
            const json& vertices = field((*it)[s], "vertices");
            if (!vertices.is_array() || vertices.size() != d.shapes[s].vertices.size()) {
                parse_fail("'shapes' does not match the trace");
            }
            for (std::size_t v = 0; v < vertices.size(); ++v) {
                if (!(vertices[v].get<Vec3>() == d.shapes[s].vertices[v])) {
                    parse_fail("shape " + std::to_string(s) + " does not match the replayed trace");
                }
            }
        }
    }
    return d;
}

DerivationScript script_from_json(const json& j, const DerivationScript& defaults) {
    DerivationScript script = defaults;
    const json* moves = &j;
    if (j.is_object()) {
        if (j.contains("grammar")) script.grammar = parse_grammar_id(string_field(j, "grammar"));
        if (j.contains("initial_kind")) script.initial_kind = parse_shape_kind(string_field(j, "initial_kind"));
        script.alternate = bool_field_or(j, "alternate", script.alternate);
        moves = &field(j, "moves");
    }
    if (!moves->is_array()) parse_fail("a derivation script is an array of moves");
    script.moves.clear();
    for (const auto& m : *moves) script.moves.push_back(m.get<Move>());
    return script;
}

json script_to_json(const DerivationScript& s) {
    return json{{"grammar", to_string(s.grammar)},
                {"initial_kind", to_string(s.initial_kind)},
                {"alternate", s.alternate},
                {"moves", s.moves}};
}

json frame_to_json(const FrameGraph& g) {
    json nodes = json::array();
    for (const auto& n : g.nodes) nodes.push_back(json{{"exact", n}, {"approx", approx_point(n)}});
    json struts = json::array();
    for (const auto& [a, b] : g.struts) struts.push_back(json::array({a, b}));
    return json{{"nodes", std::move(nodes)}, {"struts", std::move(struts)}, {"scale", g.scale}};
}

json frame_stats_to_json(const FrameStats& s) {
    json histogram = json::object();
    for (const auto& [degree, count] : s.degree_histogram) histogram[std::to_string(degree)] = count;
    return json{{"node_count", s.node_count},
                {"strut_count", s.strut_count},
                {"degree_histogram", std::move(histogram)},
                {"connected", s.connected},
                {"bbox_min", s.bbox_min},
                {"bbox_max", s.bbox_max},
                {"chiral", s.chiral},
                {"point_group_order", s.point_group_order}};
}

std::string frame_to_obj(const FrameGraph& g) {
    const double factor = g.scale / std::sqrt(2.0);
    std::ostringstream out;
    out << "# space frame: " << g.nodes.size() << " nodes, " << g.struts.size() << " struts, strut length "
        << g.scale << " m\n";
    char line[128];
    for (const auto& n : g.nodes) {
        std::snprintf(line, sizeof line, "v %.9f %.9f %.9f\n", n.x.get_d() * factor, n.y.get_d() * factor,
                      n.z.get_d() * factor);
        out << line;
    }
    for (const auto& [a, b] : g.struts) out << "l " << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

json summary_to_json(const EnumerationSummary& s) {
    return json{{"nominal", s.nominal}, {"traversed", s.traversed}, {"realized", s.realized}, {"infeasible", s.infeasible}};
}

json catalog_to_json(const Catalog& catalog, Level dedupe) {
    const auto level = static_cast<std::size_t>(dedupe);
    json out = json::array();
    int next_class = 0;
    for (const auto& e : catalog.entries) {
        if (e.blind_class[level] != next_class) continue;
        ++next_class;
        json keys = json::object();
        json sensitive_keys = json::object();
        json classes = json::object();
        json sensitive_classes = json::object();
        for (Level l : kAllLevels) {
            const auto i = static_cast<std::size_t>(l);
            keys[std::string(to_string(l))] = e.blind_keys[i];
            sensitive_keys[std::string(to_string(l))] = e.sensitive_keys[i];
            classes[std::string(to_string(l))] = e.blind_class[i];
            sensitive_classes[std::string(to_string(l))] = e.sensitive_class[i];
        }
        out.push_back(json{{"initial_kind", to_string(e.initial)},
                           {"trace", e.trace},
                           {"label", trace_label(e.initial, e.trace)},
                           {"level_keys", std::move(keys)},
                           {"level_keys_sensitive", std::move(sensitive_keys)},
                           {"class_id", std::move(classes)},
                           {"class_id_sensitive", std::move(sensitive_classes)},
                           {"chiral", e.chiral},
                           {"point_group_order", e.point_group_order}});
    }
    return out;
}

json ladder_to_json(const LadderReport& r) {
    auto counts = [](const std::array<std::size_t, 4>& c) {
        return json{{"l0", c[0]}, {"l1", c[1]}, {"l2", c[2]}, {"l3", c[3]}};
    };
    auto matches = [](const std::array<bool, 4>& m) { return json{{"l1", m[1]}, {"l2", m[2]}, {"l3", m[3]}}; };
    json reps = json::object();
    for (Level l : kAllLevels) reps[std::string(to_string(l))] = r.representatives[static_cast<std::size_t>(l)];
    return json{{"grammar", to_string(r.grammar)},
                {"depth", r.depth},
                {"labeled", summary_to_json(r.labeled)},
                {"counts", json{{"blind", counts(r.blind_counts)}, {"sensitive", counts(r.sensitive_counts)}}},
                {"representatives", std::move(reps)},
                {"chiral_pair_count", r.chiral_pair_count},
                {"paper_targets", json{{"labeled", kPaperTargets.labeled_for(r.grammar)},
                                       {"unique", kPaperTargets.unique_for(r.grammar)}}},
                {"paper_match", json{{"labeled", r.labeled_match},
                                     {"unique_blind", matches(r.blind_unique_match)},
                                     {"unique_sensitive", matches(r.sensitive_unique_match)}}},
                {"note", r.note}};
}

std::string describe_position(std::string_view text, std::size_t byte_offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte_offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports the offset one past the offending byte.
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        throw Error(ErrorCode::ParseError, "malformed JSON at " + describe_position(text, offset));
    }
}

}  // namespace radiogram
