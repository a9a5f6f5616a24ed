#include "al/service/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <system_error>

namespace al::service {

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open event log " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Drops a partial trailing line left by an interrupted append.
void repair_tail(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return;
    const std::string text = slurp(path);
    if (text.empty() || text.back() == '\n') return;
    const auto cut = text.rfind('\n');
    const std::size_t keep = cut == std::string::npos ? 0 : cut + 1;
    if (json::accept(text.substr(keep))) {
        std::ofstream(path, std::ios::app | std::ios::binary) << '\n';
    } else {
        std::filesystem::resize_file(path, keep);
    }
}

}  // namespace

EventLog::EventLog(const std::filesystem::path& path) : path_(path) {
    repair_tail(path);
    fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd_ < 0) throw std::system_error(errno, std::generic_category(), "open " + path.string());
}

EventLog::~EventLog() {
    if (fd_ >= 0) ::close(fd_);
}

void EventLog::append(const json& event) {
    const std::string line = event.dump() + "\n";
    std::size_t written = 0;
    while (written < line.size()) {
        const auto n = ::write(fd_, line.data() + written, line.size() - written);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw std::system_error(errno, std::generic_category(), "write " + path_.string());
        }
        written += static_cast<std::size_t>(n);
    }
    if (::fdatasync(fd_) != 0) throw std::system_error(errno, std::generic_category(), "fdatasync " + path_.string());
}

std::vector<json> EventLog::read(const std::filesystem::path& path) {
    const std::string text = slurp(path);
    std::vector<json> events;
    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start < text.size()) {
        ++line_no;
        const auto end = text.find('\n', start);
        const bool last = end == std::string::npos;
        const std::string line = text.substr(start, last ? std::string::npos : end - start);
        start = last ? text.size() : end + 1;
        if (line.empty()) continue;
        json event = json::parse(line, nullptr, false);
        if (event.is_discarded()) {
            if (last) break;
            throw DataError(path.string() + ":" + std::to_string(line_no) + ": unparsable event");
        }
        events.push_back(std::move(event));
    }
    return events;
}

SessionStore::SessionStore(std::optional<std::filesystem::path> data_dir) : data_dir_(std::move(data_dir)) {
    if (data_dir_) std::filesystem::create_directories(*data_dir_);
}

std::string SessionStore::fresh_id() {
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    static constexpr char digits[] = "0123456789abcdef";
    for (;;) {
        std::string id(16, '0');
        auto bits = rng();
        for (char& c : id) {
            c = digits[bits & 0xF];
            bits >>= 4;
        }
        if (sessions_.count(id) == 0) return id;
    }
}

Session::EventSink SessionStore::sink_for(const std::string& id) {
    if (!data_dir_) return {};
    auto log = std::make_shared<EventLog>(*data_dir_ / (id + ".jsonl"));
    logs_[id] = log;
    return [log](const json& event) { log->append(event); };
}

std::string SessionStore::create(const json& config) {
    std::unique_lock lock(mutex_);
    const std::string id = fresh_id();
    Session::EventSink sink = sink_for(id);
    std::shared_ptr<Session> session;
    try {
        session = std::make_shared<Session>(id, config, sink);
        if (sink) sink(session->creation_event());
    } catch (...) {
        logs_.erase(id);
        if (data_dir_) std::filesystem::remove(*data_dir_ / (id + ".jsonl"));
        throw;
    }
    sessions_[id] = std::move(session);
    return id;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
    std::shared_lock lock(mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ServiceError(404, "no session '" + id + "'");
    return it->second;
}

std::size_t SessionStore::size() const {
    std::shared_lock lock(mutex_);
    return sessions_.size();
}

std::size_t SessionStore::restore() {
    if (!data_dir_) return 0;
    std::unique_lock lock(mutex_);
    std::size_t restored = 0;
    for (const auto& entry : std::filesystem::directory_iterator(*data_dir_)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".jsonl") continue;
        const auto events = EventLog::read(entry.path());
        if (events.empty()) continue;
        auto log = std::make_shared<EventLog>(entry.path());
        std::unique_ptr<Session> session;
        try {
            session = Session::replay(events, [log](const json& event) { log->append(event); });
        } catch (const std::exception& e) {
            throw DataError(entry.path().string() + ": " + e.what());
        }
        const std::string id = session->id();
        if (id + ".jsonl" != entry.path().filename().string()) {
            throw DataError(entry.path().string() + ": session id '" + id + "' does not match the file name");
        }
        logs_[id] = log;
        sessions_[id] = std::move(session);
        ++restored;
    }
    return restored;
}

}  // namespace al::service
