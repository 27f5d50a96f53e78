#include "radiogram/service.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "radiogram/frame.hpp"

namespace radiogram::service {

namespace {

Response error_response(int status, std::string_view code, const std::string& message) {
    return {status, json{{"error", code}, {"message", message}}};
}

int status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::FaceOccupied:
        case ErrorCode::OverlapCreated:
        case ErrorCode::MoveNotApplicable: return 409;
        default: return 400;
    }
}

Response from_error(const Error& e) { return error_response(status_for(e.code()), to_string(e.code()), e.what()); }

std::string new_session_id() {
    static std::mutex mutex;
    static std::mt19937_64 rng{std::random_device{}()};
    std::lock_guard lock(mutex);
    std::ostringstream out;
    out << std::hex;
    for (int i = 0; i < 2; ++i) out << rng();
    return out.str();
}

std::vector<std::string> split_path(std::string_view path) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos < path.size()) {
        if (path[pos] == '/') {
            ++pos;
            continue;
        }
        std::size_t end = path.find('/', pos);
        if (end == std::string_view::npos) end = path.size();
        parts.emplace_back(path.substr(pos, end - pos));
        pos = end;
    }
    return parts;
}

int int_param(const Request& r, const std::string& name, int fallback) {
    auto it = r.query.find(name);
    if (it == r.query.end()) return fallback;
    try {
        std::size_t used = 0;
        int v = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(name);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "query parameter '" + name + "' must be an integer");
    }
}

std::string string_param(const Request& r, const std::string& name, std::string fallback) {
    auto it = r.query.find(name);
    return it == r.query.end() ? fallback : it->second;
}

json moves_json(const Design& d) {
    json moves = json::array();
    for (const MoveOption& option : applicable_moves(d)) {
        json m = option.move;
        m["feasible"] = option.feasible;
        moves.push_back(std::move(m));
    }
    return json{{"count", moves.size()}, {"moves", std::move(moves)}};
}

}  // namespace

SessionService::SessionService(ServiceOptions options) : options_(std::move(options)) {
    if (options_.persist_dir) {
        std::filesystem::create_directories(*options_.persist_dir);
        restore();
    }
}

std::size_t SessionService::session_count() const {
    std::shared_lock lock(sessions_mutex_);
    return sessions_.size();
}

std::shared_ptr<Session> SessionService::find(const std::string& id) const {
    std::shared_lock lock(sessions_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

Response SessionService::handle(const Request& request) {
    try {
        const auto parts = split_path(request.path);
        if (parts.size() == 1 && parts[0] == "health" && request.method == "GET") {
            return {200, json{{"status", "ok"}, {"sessions", session_count()}}};
        }
        if (parts.size() == 1 && parts[0] == "sessions" && request.method == "POST") return create_session(request);
        if (parts.size() == 1 && parts[0] == "catalog" && request.method == "GET") return catalog(request);
        if (parts.size() == 3 && parts[0] == "sessions") return session_route(parts[1], parts[2], request);
        return error_response(404, "NotFound", "no route for " + request.method + " " + request.path);
    } catch (const Error& e) {
        return from_error(e);
    } catch (const json::exception& e) {
        return error_response(400, "ParseError", e.what());
    }
}

Response SessionService::create_session(const Request& request) {
    const json body = request.body.empty() ? json::object() : parse_json_text(request.body);
    if (!body.is_object()) throw Error(ErrorCode::ParseError, "expected {grammar, initial_kind}");
    const GrammarId grammar = parse_grammar_id(body.value("grammar", std::string("TET_TET")));
    const std::string default_kind = grammar == GrammarId::OctOct ? "oct" : "tet";
    const ShapeKind kind = parse_shape_kind(body.value("initial_kind", default_kind));
    const bool alternate = body.value("alternate", false);

    auto session = std::make_shared<Session>();
    session->id = new_session_id();
    session->current = initial_design(grammar, kind, alternate);
    session->created_at = std::chrono::system_clock::now();
    {
        std::unique_lock lock(sessions_mutex_);
        sessions_[session->id] = session;
    }
    persist(*session);
    return {201, json{{"session_id", session->id}, {"design", design_to_json(session->current, true)}}};
}

Response SessionService::session_route(const std::string& id, std::string_view action, const Request& request) {
    auto session = find(id);
    if (!session) return error_response(404, "UnknownSession", "no session '" + id + "'");
    std::lock_guard lock(session->mutex);
    Design& current = session->current;

    if (request.method == "GET") {
        if (action == "design") return {200, design_to_json(current, true)};
        if (action == "moves") return {200, moves_json(current)};
        if (action == "frame") {
            const FrameGraph frame = extract_frame(current);
            return {200, json{{"frame", frame_to_json(frame)},
                              {"stats", frame_stats_to_json(frame_stats(frame))},
                              {"fcc_residency", fcc_residency(current)}}};
        }
        if (action == "twin") {
            MirrorTwin twin = mirror_twin(current);
            return {200, json{{"design", design_to_json(twin.twin, true)}, {"is_chiral", twin.is_chiral}}};
        }
    } else if (request.method == "POST") {
        if (action == "apply") {
            const json body = parse_json_text(request.body);
            const json& move_json = body.is_object() && body.contains("move") ? body["move"] : body;
            const Move move = move_json.get<Move>();
            Design next = apply_move(current, move);
            session->undo.push_back(std::move(current));
            session->redo.clear();
            current = std::move(next);
            persist(*session);
            return {200, design_to_json(current, true)};
        }
        if (action == "undo" || action == "redo") {
            auto& from = action == "undo" ? session->undo : session->redo;
            auto& to = action == "undo" ? session->redo : session->undo;
            if (from.empty()) {
                return error_response(409, action == "undo" ? "NothingToUndo" : "NothingToRedo",
                                      "history is empty");
            }
            to.push_back(std::move(current));
            current = std::move(from.back());
            from.pop_back();
            persist(*session);
            return {200, design_to_json(current, true)};
        }
    }
    return error_response(404, "NotFound", "no route for " + request.method + " " + request.path);
}

std::shared_ptr<const Catalog> SessionService::cached_catalog(GrammarId grammar, int depth) {
    std::lock_guard lock(catalog_mutex_);
    auto key = std::make_tuple(grammar, depth);
    auto it = catalogs_.find(key);
    if (it != catalogs_.end()) return it->second;
    auto built = std::make_shared<const Catalog>(build_catalog({grammar, depth, false, options_.catalog_threads}));
    catalogs_.emplace(key, built);
    return built;
}

Response SessionService::catalog(const Request& request) {
    const GrammarId grammar = parse_grammar_id(string_param(request, "grammar", "TET_TET"));
    const int depth = int_param(request, "depth", 1);
    const Level level = parse_level(string_param(request, "level", "l3"));
    const LabelMode labels = parse_label_mode(string_param(request, "labels", "blind"));
    const int offset = int_param(request, "offset", 0);
    const int limit = int_param(request, "limit", 50);
    if (depth < 1 || depth > options_.max_catalog_depth) {
        return error_response(400, "DepthOutOfRange",
                              "depth must be within 1.." + std::to_string(options_.max_catalog_depth));
    }
    if (offset < 0 || limit < 1 || limit > 500) {
        return error_response(400, "BadPagination", "offset >= 0 and 1 <= limit <= 500");
    }

    const auto cat = cached_catalog(grammar, depth);
    const auto l = static_cast<std::size_t>(level);
    std::vector<const CatalogEntry*> representatives;
    std::vector<std::size_t> sizes;
    for (const auto& e : cat->entries) {
        const int cls = labels == LabelMode::Blind ? e.blind_class[l] : e.sensitive_class[l];
        if (cls == static_cast<int>(representatives.size())) {
            representatives.push_back(&e);
            sizes.push_back(0);
        }
        ++sizes[static_cast<std::size_t>(cls)];
    }
    json items = json::array();
    for (std::size_t i = static_cast<std::size_t>(offset);
         i < representatives.size() && i < static_cast<std::size_t>(offset + limit); ++i) {
        const CatalogEntry& e = *representatives[i];
        items.push_back(json{{"class_id", i},
                             {"size", sizes[i]},
                             {"initial_kind", to_string(e.initial)},
                             {"trace", e.trace},
                             {"label", trace_label(e.initial, e.trace)},
                             {"key", labels == LabelMode::Blind ? e.blind_keys[l] : e.sensitive_keys[l]},
                             {"chiral", e.chiral},
                             {"point_group_order", e.point_group_order}});
    }
    return {200, json{{"grammar", to_string(grammar)},
                      {"depth", depth},
                      {"level", to_string(level)},
                      {"labels", to_string(labels)},
                      {"total", representatives.size()},
                      {"offset", offset},
                      {"limit", limit},
                      {"items", std::move(items)}}};
}

void SessionService::persist(const Session& s) const {
    if (!options_.persist_dir) return;
    json history_undo = json::array();
    for (const auto& d : s.undo) history_undo.push_back(design_to_json(d));
    json history_redo = json::array();
    for (const auto& d : s.redo) history_redo.push_back(design_to_json(d));
    const json snapshot{
        {"id", s.id},
        {"created_at", std::chrono::duration_cast<std::chrono::seconds>(s.created_at.time_since_epoch()).count()},
        {"current", design_to_json(s.current)},
        {"undo", std::move(history_undo)},
        {"redo", std::move(history_redo)}};
    const auto path = *options_.persist_dir / (s.id + ".json");
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << snapshot.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

void SessionService::restore() {
    for (const auto& entry : std::filesystem::directory_iterator(*options_.persist_dir)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        std::stringstream buffer;
        buffer << in.rdbuf();
        const json snapshot = parse_json_text(buffer.str());
        auto session = std::make_shared<Session>();
        session->id = snapshot.at("id").get<std::string>();
        session->created_at =
            std::chrono::system_clock::time_point(std::chrono::seconds(snapshot.at("created_at").get<long>()));
        session->current = design_from_json(snapshot.at("current"));
        for (const auto& d : snapshot.at("undo")) session->undo.push_back(design_from_json(d));
        for (const auto& d : snapshot.at("redo")) session->redo.push_back(design_from_json(d));
        sessions_[session->id] = std::move(session);
    }
}

}  // namespace radiogram::service
