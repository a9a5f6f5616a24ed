#pragma once

#include "al/service/session.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

namespace al::service {

/// Append-only JSON-lines file. Each append is written with a single
/// write(2) and flushed to disk before returning.
class EventLog {
  public:
    explicit EventLog(const std::filesystem::path& path);
    ~EventLog();
    EventLog(const EventLog&) = delete;
    EventLog& operator=(const EventLog&) = delete;

    void append(const json& event);

    /// Reads every event. A final line cut short by a crash is ignored; any
    /// other unparsable line throws DataError.
    static std::vector<json> read(const std::filesystem::path& path);

  private:
    int fd_ = -1;
    std::filesystem::path path_;
};

/// Owns all sessions. With a data directory, each session logs its events
/// to `<dir>/<id>.jsonl` and restore() reloads them.
class SessionStore {
  public:
    explicit SessionStore(std::optional<std::filesystem::path> data_dir = std::nullopt);

    /// Creates a session from a JSON config and returns its id.
    std::string create(const json& config);

    /// Throws ServiceError 404 for unknown ids.
    std::shared_ptr<Session> find(const std::string& id) const;

    std::size_t size() const;

    /// Replays every log in the data directory; returns the number of
    /// sessions restored.
    std::size_t restore();

  private:
    Session::EventSink sink_for(const std::string& id);
    std::string fresh_id();

    std::optional<std::filesystem::path> data_dir_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::map<std::string, std::shared_ptr<EventLog>> logs_;
    mutable std::shared_mutex mutex_;
};

}  // namespace al::service
