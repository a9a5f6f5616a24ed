#include "al/service/http.hpp"
#include "service/service_fixtures.hpp"

#include <doctest.h>

#include <thread>

using namespace al;
using namespace al::service;
using al::testing::session_config;
using al::testing::TempDir;
using al::testing::truth;

namespace {

class LiveServer {
  public:
    explicit LiveServer(SessionStore& store) {
        mount_routes(server_, store);
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~LiveServer() {
        server_.stop();
        thread_.join();
    }
    int port() const { return port_; }

  private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
};

json body_of(const httplib::Result& res) {
    REQUIRE(res);
    return res->body.empty() ? json() : json::parse(res->body);
}

}  // namespace

TEST_CASE("the HTTP endpoints drive a labeling session end to end") {
    TempDir dir;
    SessionStore store(dir.path());
    LiveServer server(store);
    httplib::Client client("127.0.0.1", server.port());

    auto created = client.Post("/sessions", session_config(12, "least_confident", "gnb", 2).dump(), "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
    const std::string id = body_of(created)["id"];
    const std::string base = "/sessions/" + id;

    auto summary = client.Get(base.c_str());
    CHECK(summary->status == 200);
    CHECK(body_of(summary)["pool_size"] == 8);

    auto queried = client.Post((base + "/query?n=3").c_str(), "", "application/json");
    CHECK(queried->status == 200);
    const json rows = body_of(queried)["rows"];
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].contains("features"));
    CHECK(rows[0]["proba"].size() == 2);

    auto repeat = client.Post((base + "/query?n=3").c_str(), "", "application/json");
    CHECK(repeat->status == 200);
    CHECK(body_of(repeat)["rows"] == rows);
    CHECK(client.Post((base + "/query?n=1").c_str(), "", "application/json")->status == 409);
    CHECK(client.Post((base + "/query?n=abc").c_str(), "", "application/json")->status == 400);

    json labels = json::array();
    for (const auto& row : rows) labels.push_back({{"id", row["id"]}, {"label", truth(row["id"].get<Index>())}});
    auto labeled = client.Post((base + "/labels").c_str(), json{{"labels", labels}}.dump(), "application/json");
    CHECK(labeled->status == 200);
    const json m = body_of(labeled);
    CHECK(m["labeled"] == 7);
    CHECK(m["pool_remaining"] == 5);
    CHECK(m["accuracy_series"].size() == 2);

    CHECK(client.Post((base + "/labels").c_str(), json{{"labels", labels}}.dump(), "application/json")->status == 409);
    CHECK(client.Post((base + "/labels").c_str(), "{not json", "application/json")->status == 400);

    client.Post((base + "/query").c_str(), "", "application/json");
    auto cancelled = client.Delete((base + "/pending").c_str());
    CHECK(cancelled->status == 204);

    auto metrics = client.Get((base + "/metrics").c_str());
    CHECK(metrics->status == 200);
    CHECK(body_of(metrics)["pending"] == 0);

    auto all = client.Post((base + "/query?n=50").c_str(), "", "application/json");
    const json remaining = body_of(all)["rows"];
    json rest = json::array();
    for (const auto& row : remaining) rest.push_back({{"id", row["id"]}, {"label", 0}});
    CHECK(rest.size() == 5);
    CHECK(client.Post((base + "/labels").c_str(), json{{"labels", rest}}.dump(), "application/json")->status == 200);
    CHECK(client.Post((base + "/query").c_str(), "", "application/json")->status == 410);

    auto missing = client.Get("/sessions/nope/metrics");
    CHECK(missing->status == 404);
    CHECK(body_of(missing).contains("error"));

    auto bad_strategy = session_config();
    bad_strategy["strategy"] = "psychic";
    auto rejected = client.Post("/sessions", bad_strategy.dump(), "application/json");
    CHECK(rejected->status == 422);
    CHECK(body_of(rejected)["valid"].is_array());
    CHECK(client.Post("/sessions", "[]", "application/json")->status == 400);

    auto preflight = client.Options((base + "/labels").c_str());
    CHECK(preflight->status == 204);
    CHECK(preflight->get_header_value("Access-Control-Allow-Methods").find("POST") != std::string::npos);
}
