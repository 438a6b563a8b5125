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

#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <thread>

#include "generators.hpp"
#include "qcvine/service.hpp"

using namespace qcvine;

namespace {

Json programBody(const std::string &source, const Json &params = Json::object()) {
    return Json{{"source", source}, {"params", params}};
}

std::string load(Service &service, const std::string &source, const Json &params = Json::object()) {
    const auto r = service.handle("POST", "/program", {}, programBody(source, params).dump());
    REQUIRE(r.status == 200);
    return parseJson(r.body).at("modelId").get<std::string>();
}

HttpResponse get(Service &service, const std::string &path, const Query &query = {}) {
    return service.handle("GET", path, query, "");
}

}  // namespace

TEST_SUITE("service") {
    TEST_CASE("health") {
        Service service;
        const auto r = get(service, "/health");
        CHECK(r.status == 200);
        CHECK(parseJson(r.body).at("status") == "ok");
    }

    TEST_CASE("program upload and structure") {
        Service service;
        const auto id = load(service, testing::readFixture("qugan.qv"), {{"n", 4}});
        CHECK(id == Service::modelId({testing::readFixture("qugan.qv"), {{"n", 4}}}));
        CHECK(id != Service::modelId({testing::readFixture("qugan.qv"), {{"n", 5}}}));
        const auto r = get(service, "/model/" + id + "/structure");
        REQUIRE(r.status == 200);
        CHECK(r.contentType == "application/json");
        const auto tree = parseJson(r.body);
        CHECK(tree.at("nodes")[1].at("label") == "qugan");
        // Default: the circuit is unfolded so its components show.
        CHECK(tree.at("unfolded") == Json::array({1}));
    }

    TEST_CASE("fold round trip") {
        Service service;
        const auto id = load(service, testing::readFixture("qugan.qv"), {{"n", 4}});
        const std::string base = "/model/" + id;
        auto fold = [&](const Json &body) {
            const auto r = service.handle("POST", base + "/fold", {}, body.dump());
            REQUIRE(r.status == 200);
        };
        fold({{"unfolded", {1}}});
        const auto first = get(service, base + "/component");
        REQUIRE(first.status == 200);
        CHECK(parseJson(first.body).at("superGates").size() == 4);  // h, Generator, Discriminator, SWAP Test

        fold({{"unfolded", {1, 2}}});
        const auto second = get(service, base + "/component");
        CHECK(second.body != first.body);
        // Generator unfolded: its Unitary and Entanglement parts appear.
        bool sawUnitary = false;
        const auto doc = parseJson(second.body);
        for (const auto &sg : doc.at("superGates")) {
            sawUnitary = sawUnitary || sg.at("label") == "Unitary";
        }
        CHECK(sawUnitary);

        fold({{"unfolded", {1}}});
        CHECK(get(service, base + "/component").body == first.body);

        fold({{"depth", 1}});
        CHECK(get(service, base + "/component").body == first.body);
    }

    TEST_CASE("reads are idempotent") {
        Service service;
        const auto id = load(service, testing::readFixture("multiplier.qv"));
        for (const std::string view : {"structure", "component", "abstraction", "connectivity", "entanglement",
                                       "model", "placement"}) {
            const auto a = get(service, "/model/" + id + "/" + view);
            const auto b = get(service, "/model/" + id + "/" + view);
            CHECK(a.status == 200);
            CHECK(a.body == b.body);
        }
        const Query svg{{"format", "svg"}};
        const auto a = get(service, "/model/" + id + "/abstraction", svg);
        CHECK(a.contentType == "image/svg+xml");
        CHECK(a.body == get(service, "/model/" + id + "/abstraction", svg).body);
    }

    TEST_CASE("view parameters") {
        Service service;
        const auto id = load(service, testing::readFixture("qugan.qv"), {{"n", 4}});
        const std::string base = "/model/" + id;
        const auto p = get(service, base + "/placement", {{"threshold", "3"}});
        REQUIRE(p.status == 200);
        CHECK(parseJson(p.body).at("threshold") == 3);
        const auto prov = get(service, base + "/provenance", {{"qubit", "0"}});
        REQUIRE(prov.status == 200);
        CHECK(parseJson(prov.body).at("qubit") == 0);
        const auto sug = get(service, base + "/suggest", {{"gate", "0"}});
        CHECK(sug.status == 200);
        const auto con = get(service, base + "/connectivity", {{"node", "2"}});
        CHECK(con.status == 200);
    }

    TEST_CASE("status codes") {
        Service service;
        const auto id = load(service, testing::readFixture("ghz.qv"), {{"n", 3}});
        const std::string base = "/model/" + id;
        CHECK(get(service, "/model/nope/component").status == 404);
        CHECK(get(service, base + "/nosuchview").status == 404);
        CHECK(get(service, "/elsewhere").status == 404);
        CHECK(get(service, base + "/provenance", {{"qubit", "9"}}).status == 404);
        CHECK(get(service, base + "/provenance").status == 400);
        CHECK(get(service, base + "/provenance", {{"qubit", "x"}}).status == 400);
        CHECK(get(service, base + "/placement", {{"threshold", "0"}}).status == 400);
        CHECK(get(service, base + "/suggest", {{"gate", "77"}}).status == 404);
        CHECK(get(service, base + "/connectivity", {{"node", "77"}}).status == 404);
        CHECK(get(service, base + "/component", {{"format", "png"}}).status == 400);
        CHECK(service.handle("GET", "/program", {}, "").status == 405);
        CHECK(service.handle("POST", base + "/component", {}, "").status == 405);
        CHECK(service.handle("GET", base + "/fold", {}, "").status == 405);
        CHECK(service.handle("POST", "/program", {}, "{not json").status == 400);
        CHECK(service.handle("POST", "/program", {}, R"({"src": "x"})").status == 400);
        CHECK(service.handle("POST", base + "/fold", {}, R"({"unfolded": [99]})").status == 404);
        CHECK(service.handle("POST", base + "/fold", {}, R"({"folded": []})").status == 400);
    }

    TEST_CASE("compile errors carry diagnostics") {
        Service service;
        const auto r = service.handle("POST", "/program", {}, programBody("circuit m(2) {\n h q[0]\n}").dump());
        CHECK(r.status == 422);
        const auto body = parseJson(r.body);
        REQUIRE(body.at("diagnostics").size() == 1);
        CHECK(body.at("diagnostics")[0].at("line") == 3);
        const auto unbound = service.handle("POST", "/program", {}, programBody(testing::readFixture("ghz.qv")).dump());
        CHECK(unbound.status == 422);
        CHECK(parseJson(unbound.body).at("error").get<std::string>().find("parameter unbound: n") !=
              std::string::npos);
    }

    TEST_CASE("recompile keeps a valid fold and clears the cache") {
        Service service;
        const std::string source = testing::readFixture("qugan.qv");
        const auto id = load(service, source, {{"n", 4}});
        service.handle("POST", "/model/" + id + "/fold", {}, R"({"unfolded": [1, 2]})");
        const auto before = get(service, "/model/" + id + "/component").body;
        CHECK(load(service, source, {{"n", 4}}) == id);
        CHECK(get(service, "/model/" + id + "/component").body == before);
        CHECK(parseJson(get(service, "/model/" + id + "/structure").body).at("unfolded") == Json::array({1, 2}));
    }

    TEST_CASE("concurrent readers see whole snapshots") {
        Service service;
        const auto id = load(service, testing::readFixture("qugan.qv"), {{"n", 4}});
        const std::string base = "/model/" + id;
        service.handle("POST", base + "/fold", {}, R"({"depth": 1})");
        const auto shallow = get(service, base + "/component").body;
        service.handle("POST", base + "/fold", {}, R"({"depth": 3})");
        const auto deep = get(service, base + "/component").body;
        std::atomic<bool> done{false};
        std::atomic<int> bad{0};
        std::thread writer([&] {
            for (int i = 0; i < 50; ++i) {
                service.handle("POST", base + "/fold", {}, i % 2 ? R"({"depth": 1})" : R"({"depth": 3})");
            }
            done = true;
        });
        std::vector<std::thread> readers;
        for (int t = 0; t < 3; ++t) {
            readers.emplace_back([&] {
                while (!done) {
                    const auto r = get(service, base + "/component");
                    if (r.status != 200 || (r.body != shallow && r.body != deep)) {
                        ++bad;
                    }
                }
            });
        }
        writer.join();
        for (auto &r : readers) {
            r.join();
        }
        CHECK(bad == 0);
    }

    TEST_CASE("http transport") {
        Service service;
        HttpServer server(service, "127.0.0.1", 0);
        REQUIRE(server.port() > 0);
        std::thread loop([&] { server.run(); });
        httplib::Client client("127.0.0.1", server.port());
        client.set_connection_timeout(5);
        httplib::Result health;
        for (int attempt = 0; attempt < 50 && !health; ++attempt) {
            health = client.Get("/health");
            if (!health) {
                std::this_thread::sleep_for(std::chrono::milliseconds(20));
            }
        }
        REQUIRE(health);
        CHECK(health->status == 200);

        const auto posted = client.Post("/program", programBody(testing::readFixture("ghz.qv"), {{"n", 3}}).dump(),
                                        "application/json");
        REQUIRE(posted);
        REQUIRE(posted->status == 200);
        const auto id = parseJson(posted->body).at("modelId").get<std::string>();

        const auto folded = client.Post("/model/" + id + "/fold", R"({"unfolded": [1, 2]})", "application/json");
        REQUIRE(folded);
        CHECK(folded->status == 200);
        const auto comp = client.Get("/model/" + id + "/component");
        REQUIRE(comp);
        CHECK(comp->status == 200);
        CHECK(parseJson(comp->body).at("superGates").size() == 3);

        const auto svg = client.Get("/model/" + id + "/provenance?qubit=1&format=svg");
        REQUIRE(svg);
        CHECK(svg->status == 200);
        CHECK(svg->get_header_value("Content-Type") == "image/svg+xml");
        CHECK(svg->body.find("<svg") != std::string::npos);

        const auto missing = client.Get("/model/" + id + "/provenance?qubit=7");
        REQUIRE(missing);
        CHECK(missing->status == 404);
        const auto wrong = client.Put("/program", "{}", "application/json");
        REQUIRE(wrong);
        CHECK(wrong->status == 405);

        server.stop();
        loop.join();
    }
}
