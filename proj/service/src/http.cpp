#include "al/service/http.hpp"

#include <charconv>
#include <iostream>

namespace al::service {

namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, const std::string& message, const json& detail = json::object()) {
    json body = detail.is_object() ? detail : json::object();
    body["error"] = message;
    send(res, status, body);
}

template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
    try {
        fn();
    } catch (const ServiceError& e) {
        send_error(res, e.status(), e.what(), e.detail());
    } catch (const json::exception& e) {
        send_error(res, 400, std::string("malformed JSON: ") + e.what());
    } catch (const UnknownNameError& e) {
        send_error(res, 422, e.what(), {{"valid", e.valid()}});
    } catch (const DataError& e) {
        send_error(res, 400, e.what());
    } catch (const std::exception& e) {
        std::cerr << "alserve: internal error: " << e.what() << '\n';
        send_error(res, 500, e.what());
    }
}

json parse_body(const httplib::Request& req) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) throw ServiceError(400, "request body is not valid JSON");
    return body;
}

std::optional<Index> parse_n(const httplib::Request& req) {
    if (!req.has_param("n")) return std::nullopt;
    const std::string text = req.get_param_value("n");
    long long value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw ServiceError(400, "query parameter n must be an integer");
    }
    return static_cast<Index>(value);
}

}  // namespace

void mount_routes(httplib::Server& server, SessionStore& store) {
    server.set_default_headers({
        {"Access-Control-Allow-Origin", "*"},
        {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
        {"Access-Control-Allow-Headers", "Content-Type"},
    });

    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    server.Post("/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const std::string id = store.create(parse_body(req));
            send(res, 201, {{"id", id}});
        });
    });

    server.Get(R"(/sessions/([^/]+))", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send(res, 200, store.find(req.matches[1])->summary()); });
    });

    server.Get(R"(/sessions/([^/]+)/metrics)", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send(res, 200, store.find(req.matches[1])->metrics()); });
    });

    server.Post(R"(/sessions/([^/]+)/query)", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            auto session = store.find(req.matches[1]);
            send(res, 200, session->query(parse_n(req)));
        });
    });

    server.Post(R"(/sessions/([^/]+)/labels)", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            auto session = store.find(req.matches[1]);
            send(res, 200, session->submit(parse_body(req)));
        });
    });

    server.Delete(R"(/sessions/([^/]+)/pending)", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            store.find(req.matches[1])->cancel();
            res.status = 204;
        });
    });

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) send_error(res, res.status, res.status == 404 ? "no such route" : "request failed");
    });
}

}  // namespace al::service
