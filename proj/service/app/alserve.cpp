#include "al/service/http.hpp"
#include "al/service/store.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Active learning annotation server"};
    int port = 8080;
    std::string bind = "127.0.0.1";
    std::string static_dir;
    app.add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
    app.add_option("--bind", bind, "Address to listen on");
    app.add_option("--static", static_dir, "Directory served at / (labeling UI build)")->check(CLI::ExistingDirectory);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    std::optional<std::filesystem::path> data_dir;
    if (const char* dir = std::getenv("ALSERVE_DATA_DIR"); dir != nullptr && *dir != '\0') data_dir = dir;

    try {
        al::service::SessionStore store(data_dir);
        const auto restored = store.restore();
        httplib::Server server;
        al::service::mount_routes(server, store);
        if (!static_dir.empty()) server.set_mount_point("/", static_dir);

        if (port == 0) {
            port = server.bind_to_any_port(bind);
        } else if (!server.bind_to_port(bind, port)) {
            std::cerr << "alserve: cannot bind " << bind << ":" << port << '\n';
            return 2;
        }
        std::cout << "alserve listening on " << bind << ":" << port;
        if (data_dir) std::cout << " (data " << data_dir->string() << ", " << restored << " sessions restored)";
        std::cout << std::endl;
        server.listen_after_bind();
    } catch (const std::exception& e) {
        std::cerr << "alserve: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
