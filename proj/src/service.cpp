// Copyright 2026 The qcvine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcvine/service.hpp"

#include <charconv>
#include <iomanip>
#include <limits>
#include <sstream>

#include "qcvine/errors.hpp"

namespace qcvine {

namespace {

// Top-level components are visible by default.
constexpr std::uint32_t kDefaultFoldDepth = 1;

// The root is always open; it is left out of responses.
Json foldJson(const FoldState &fold) {
    Json ids = Json::array();
    for (NodeId id : fold.unfolded) {
        if (id != SemanticTree::root()) {
            ids.push_back(id);
        }
    }
    return ids;
}

HttpResponse jsonResponse(int status, const Json &body) {
    return {status, "application/json", dumpJson(body)};
}

HttpResponse errorResponse(int status, const std::string &message) {
    return jsonResponse(status, Json{{"error", message}});
}

HttpResponse sourceErrorResponse(const SourceError &e) {
    Json diag;
    diag["line"] = e.location().line;
    diag["col"] = e.location().column;
    diag["message"] = e.message();
    diag["expected"] = e.expected();
    Json body;
    body["error"] = e.format("<source>");
    body["diagnostics"] = Json::array({diag});
    return jsonResponse(422, body);
}

std::vector<std::string> splitPath(const std::string &path) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start < path.size()) {
        const std::size_t end = std::min(path.find('/', start), path.size());
        if (end > start) {
            parts.push_back(path.substr(start, end - start));
        }
        start = end + 1;
    }
    return parts;
}

template <typename T>
std::optional<T> queryInt(const Query &query, const std::string &key) {
    auto it = query.find(key);
    if (it == query.end()) {
        return std::nullopt;
    }
    T value{};
    const auto &text = it->second;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidInputError("query parameter " + key + " must be an integer, got '" + text + "'");
    }
    return value;
}

}  // namespace

Service::Service(RenderTheme theme) : theme_(std::move(theme)) {
    theme_.validate();
}

std::string Service::modelId(const dsl::SourceProgram &program) {
    std::uint64_t h = 14695981039346656037ULL;
    auto feed = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0xFFU;  // separator that cannot occur in text
        h *= 1099511628211ULL;
    };
    feed(program.text);
    for (const auto &[name, value] : program.params) {
        feed(name);
        feed(std::to_string(value));
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::shared_ptr<Service::Session> Service::session(const std::string &id) const {
    std::lock_guard lock(sessionsMutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) {
        throw NotFoundError("unknown model: " + id);
    }
    return it->second;
}

std::shared_ptr<const Service::Snapshot> Service::snapshot(Session &session) const {
    std::lock_guard lock(session.mutex);
    return session.current;
}

void Service::publish(Session &session, std::shared_ptr<const Snapshot> next) const {
    std::lock_guard lock(session.mutex);
    if (!session.current || session.current->model != next->model) {
        session.diagrams.clear();
    }
    session.current = std::move(next);
}

std::shared_ptr<const ComponentDiagram> Service::diagramFor(Session &session, const Snapshot &snap) const {
    const auto &key = snap.fold.unfolded;
    {
        std::lock_guard lock(session.mutex);
        // Only trust the cache while the snapshot's model is still current.
        if (session.current && session.current->model == snap.model) {
            auto it = session.diagrams.find(key);
            if (it != session.diagrams.end()) {
                return it->second;
            }
        }
    }
    auto diagram = std::make_shared<const ComponentDiagram>(segment(*snap.model, snap.fold));
    std::lock_guard lock(session.mutex);
    if (session.current && session.current->model == snap.model) {
        session.diagrams.emplace(key, diagram);
    }
    return diagram;
}

std::string Service::loadProgram(const dsl::SourceProgram &program) {
    auto model = std::make_shared<const CircuitModel>(dsl::compileProgram(program));
    const std::string id = modelId(program);
    std::lock_guard writer(writer_);
    std::shared_ptr<Session> target;
    {
        std::lock_guard lock(sessionsMutex_);
        auto &slot = sessions_[id];
        if (!slot) {
            slot = std::make_shared<Session>();
        }
        target = slot;
    }
    auto next = std::make_shared<Snapshot>();
    next->model = model;
    next->fold = FoldState::toDepth(model->semanticTree(), kDefaultFoldDepth);
    if (auto previous = snapshot(*target)) {
        // Keep the user's fold when it still names valid nodes.
        try {
            previous->fold.check(model->semanticTree());
            next->fold = previous->fold;
        } catch (const NotFoundError &) {
        }
    }
    publish(*target, std::move(next));
    return id;
}

HttpResponse Service::postProgram(const std::string &body) {
    const Json request = parseJson(body);
    if (!request.is_object() || !request.contains("source") || !request.at("source").is_string()) {
        throw InvalidInputError("request needs a string field 'source'");
    }
    dsl::SourceProgram program;
    program.text = request.at("source").get<std::string>();
    if (request.contains("params")) {
        const auto &params = request.at("params");
        if (!params.is_object()) {
            throw InvalidInputError("'params' must be an object of integers");
        }
        for (const auto &[name, value] : params.items()) {
            if (!value.is_number_integer()) {
                throw InvalidInputError("parameter " + name + " must be an integer");
            }
            program.params[name] = value.get<std::int64_t>();
        }
    }
    return jsonResponse(200, Json{{"modelId", loadProgram(program)}});
}

HttpResponse Service::postFold(Session &session, const std::string &body) {
    const Json request = parseJson(body);
    std::lock_guard writer(writer_);
    const auto current = snapshot(session);
    const SemanticTree &tree = current->model->semanticTree();
    FoldState fold;
    if (request.is_object() && request.contains("depth")) {
        const auto &depth = request.at("depth");
        if (!depth.is_number_unsigned()) {
            throw InvalidInputError("'depth' must be a non-negative integer");
        }
        fold = FoldState::toDepth(tree, depth.get<std::uint32_t>());
    } else if (request.is_object() && request.contains("unfolded") && request.at("unfolded").is_array()) {
        for (const auto &v : request.at("unfolded")) {
            if (!v.is_number_integer()) {
                throw InvalidInputError("'unfolded' must list node ids");
            }
            const auto id = v.get<std::int64_t>();
            if (id < 0 || id > std::numeric_limits<NodeId>::max()) {
                throw NotFoundError("unknown tree node: " + std::to_string(id));
            }
            fold.unfolded.insert(static_cast<NodeId>(id));
        }
        fold.check(tree);
    } else {
        throw InvalidInputError("request needs 'unfolded' (array of node ids) or 'depth'");
    }
    auto next = std::make_shared<Snapshot>();
    next->model = current->model;
    next->fold = fold;
    publish(session, next);
    return jsonResponse(200, Json{{"unfolded", foldJson(fold)}});
}

HttpResponse Service::getView(Session &session, const std::string &viewName, const Query &query) {
    const auto snap = snapshot(session);
    ViewOptions options;
    if (viewName == "model") {
        return jsonResponse(200, toJson(*snap->model));
    }
    options.view = parseView(viewName);
    auto format = query.find("format");
    options.json = format == query.end() || format->second == "json";
    if (!options.json && format->second != "svg") {
        throw InvalidInputError("format must be json or svg");
    }
    if (auto q = queryInt<std::int64_t>(query, "qubit")) {
        if (*q < 0 || *q >= snap->model->qubitCount) {
            throw NotFoundError("qubit index out of range: " + std::to_string(*q) + " (circuit has " +
                                std::to_string(snap->model->qubitCount) + " qubits)");
        }
        options.qubit = static_cast<QubitId>(*q);
    }
    if (auto t = queryInt<std::int64_t>(query, "threshold")) {
        if (*t < 1 || *t > std::numeric_limits<std::uint32_t>::max()) {
            throw InvalidInputError("threshold must be a positive integer");
        }
        options.threshold = static_cast<std::uint32_t>(*t);
    }
    if (auto g = queryInt<std::int64_t>(query, "gate")) {
        if (*g < 0 || *g > std::numeric_limits<SuperGateId>::max()) {
            throw NotFoundError("unknown super gate: " + std::to_string(*g));
        }
        options.gate = static_cast<SuperGateId>(*g);
    }
    if (auto n = queryInt<std::int64_t>(query, "node")) {
        if (*n < 0 || *n > std::numeric_limits<NodeId>::max()) {
            throw NotFoundError("unknown tree node: " + std::to_string(*n));
        }
        options.node = static_cast<NodeId>(*n);
    }
    if (options.view == View::Structure) {
        Json tree = toJson(snap->model->semanticTree());
        tree["unfolded"] = foldJson(snap->fold);
        return jsonResponse(200, tree);
    }
    const auto diagram = diagramFor(session, *snap);
    auto out = produceView(*snap->model, *diagram, options, theme_);
    return {200, out.contentType, std::move(out.body)};
}

HttpResponse Service::handle(const std::string &method, const std::string &path, const Query &query,
                             const std::string &body) {
    try {
        const auto parts = splitPath(path);
        if (parts.size() == 1 && parts[0] == "health" && method == "GET") {
            return jsonResponse(200, Json{{"status", "ok"}});
        }
        if (parts.size() == 1 && parts[0] == "program") {
            if (method != "POST") {
                return errorResponse(405, "method not allowed");
            }
            return postProgram(body);
        }
        if (parts.size() == 3 && parts[0] == "model") {
            auto s = session(parts[1]);
            if (parts[2] == "fold") {
                if (method != "POST") {
                    return errorResponse(405, "method not allowed");
                }
                return postFold(*s, body);
            }
            if (method != "GET") {
                return errorResponse(405, "method not allowed");
            }
            try {
                return getView(*s, parts[2], query);
            } catch (const InvalidInputError &e) {
                // Unknown view names are unknown routes.
                if (std::string_view(e.what()).starts_with("unknown view")) {
                    return errorResponse(404, e.what());
                }
                throw;
            }
        }
        return errorResponse(404, "no route for " + method + " " + path);
    } catch (const SourceError &e) {
        return sourceErrorResponse(e);
    } catch (const NotFoundError &e) {
        return errorResponse(404, e.what());
    } catch (const InvalidInputError &e) {
        return errorResponse(400, e.what());
    } catch (const Error &e) {
        return errorResponse(422, e.what());
    }
}

}  // namespace qcvine
