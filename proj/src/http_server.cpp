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

// The only translation unit that includes httplib.

#include <httplib.h>

#include "qcvine/errors.hpp"
#include "qcvine/service.hpp"

namespace qcvine {

namespace {

void dispatch(Service &service, const httplib::Request &req, httplib::Response &res) {
    Query query;
    for (const auto &[key, value] : req.params) {
        query.emplace(key, value);  // first value wins for repeated keys
    }
    const auto out = service.handle(req.method, req.path, query, req.body);
    res.status = out.status;
    res.set_content(out.body, out.contentType);
}

}  // namespace

struct HttpServer::Impl {
    httplib::Server server;
    int port = 0;
};

HttpServer::HttpServer(Service &service, const std::string &host, int port) : impl_(std::make_unique<Impl>()) {
    auto handler = [&service](const httplib::Request &req, httplib::Response &res) { dispatch(service, req, res); };
    impl_->server.Get(R"(/.*)", handler);
    impl_->server.Post(R"(/.*)", handler);
    impl_->server.Put(R"(/.*)", handler);
    impl_->server.Delete(R"(/.*)", handler);
    impl_->port = port == 0 ? impl_->server.bind_to_any_port(host) : port;
    if (port != 0 && !impl_->server.bind_to_port(host, port)) {
        impl_->port = -1;
    }
    if (impl_->port < 0) {
        throw Error("cannot bind " + host + ":" + std::to_string(port));
    }
}

HttpServer::~HttpServer() {
    stop();
}

int HttpServer::port() const {
    return impl_->port;
}

void HttpServer::run() {
    impl_->server.listen_after_bind();
}

void HttpServer::stop() {
    impl_->server.stop();
}

void serve(Service &service, const std::string &host, int port) {
    HttpServer(service, host, port).run();
}

}  // namespace qcvine
