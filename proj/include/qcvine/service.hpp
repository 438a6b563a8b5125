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

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>

#include "qcvine/dsl.hpp"
#include "qcvine/views.hpp"

namespace qcvine {

struct HttpResponse {
    int status = 200;
    std::string contentType = "application/json";
    std::string body;
};

using Query = std::map<std::string, std::string>;

/// Session store and request router behind the HTTP API. Transport-free so
/// it can be exercised directly; serve() wires it to a socket.
///
/// Reads work on immutable snapshots. Writers (program upload, fold change)
/// serialize on one mutex and publish a new snapshot by pointer swap.
class Service {
   public:
    explicit Service(RenderTheme theme = {});

    HttpResponse handle(const std::string &method, const std::string &path, const Query &query,
                        const std::string &body);

    /// Compiles and (re)publishes a program; returns its model id. Throws
    /// SourceError on compile errors.
    std::string loadProgram(const dsl::SourceProgram &program);

    static std::string modelId(const dsl::SourceProgram &program);

   private:
    struct Snapshot {
        std::shared_ptr<const CircuitModel> model;
        FoldState fold;
    };

    struct Session {
        std::mutex mutex;  // guards `current` and `diagrams`
        std::shared_ptr<const Snapshot> current;
        std::map<std::set<NodeId>, std::shared_ptr<const ComponentDiagram>> diagrams;  // by unfolded set
    };

    std::shared_ptr<Session> session(const std::string &id) const;
    std::shared_ptr<const Snapshot> snapshot(Session &session) const;
    std::shared_ptr<const ComponentDiagram> diagramFor(Session &session, const Snapshot &snap) const;
    void publish(Session &session, std::shared_ptr<const Snapshot> next) const;

    HttpResponse postProgram(const std::string &body);
    HttpResponse postFold(Session &session, const std::string &body);
    HttpResponse getView(Session &session, const std::string &view, const Query &query);

    RenderTheme theme_;
    std::mutex writer_;                                  // serializes mutations
    mutable std::mutex sessionsMutex_;                   // guards the map itself
    std::map<std::string, std::shared_ptr<Session>> sessions_;
};

/// HTTP transport for a Service. Binds in the constructor (port 0 picks a
/// free port); run() blocks until stop() is called from another thread.
class HttpServer {
   public:
    HttpServer(Service &service, const std::string &host, int port);
    ~HttpServer();
    HttpServer(const HttpServer &) = delete;
    HttpServer &operator=(const HttpServer &) = delete;

    int port() const;
    void run();
    void stop();

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Blocks serving `service` over HTTP until the process is stopped.
void serve(Service &service, const std::string &host, int port);

}  // namespace qcvine
