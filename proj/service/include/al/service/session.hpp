#pragma once

#include "al/registry.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace al::service {

using json = nlohmann::json;

/// An error with the HTTP status it maps to and an optional JSON detail
/// object merged into the error body.
class ServiceError : public std::runtime_error {
  public:
    ServiceError(int status, const std::string& message, json detail = json::object())
        : std::runtime_error(message), status_(status), detail_(std::move(detail)) {}
    int status() const { return status_; }
    const json& detail() const { return detail_; }

  private:
    int status_;
    json detail_;
};

/// Session parameters decoded from the creation request.
///
/// Dataset rows come inline (`dataset.features`) or from a server-side CSV
/// (`dataset.path`, label columns ignored). `initial.rows` are dataset row
/// ids taught with `initial.labels` before the first query; the remaining
/// rows form the pool. Labels are integers; when `class_names` is given the
/// label universe is 0..K-1, otherwise it is the set of initial labels.
struct SessionConfig {
    std::string strategy = "least_confident";
    std::string estimator = "gnb";
    Index batch_size = 1;
    std::uint64_t seed = 0;
    std::vector<std::string> class_names;
    FeatureMatrix rows;
    IndexList initial_rows;
    LabelArray initial_labels;
    FeatureMatrix holdout_X;
    LabelArray holdout_y;

    static SessionConfig from_json(const json& body);
};

struct LabelRecord {
    Index row = 0;
    int label = 0;
    std::int64_t timestamp_ms = 0;
    Index step = 0;
};

/// One live labeling session. Every public member is thread-safe: reads
/// share a lock, mutations take it exclusively and are applied in order.
///
/// Queried rows are staged as pending and stay in the pool until labeled.
/// Each mutation is reported to the event sink after it has been applied;
/// replaying the reported events through Session::replay rebuilds the same
/// state.
class Session {
  public:
    using EventSink = std::function<void(const json&)>;

    /// Throws ServiceError 400 on an invalid config and 422 on unknown
    /// strategy or estimator names.
    Session(std::string id, const json& config, EventSink sink = {});

    const std::string& id() const { return id_; }

    json summary() const;
    json metrics() const;

    /// Stages up to n rows (batch size when absent). Repeating the request
    /// with the same n returns the staged batch; 409 for a different n while
    /// rows are pending, 410 when nothing is left to query.
    json query(std::optional<Index> n);

    /// Body `{labels: [{id, label}]}`. 409 for ids that are not pending,
    /// 400 for malformed bodies or labels outside the class universe.
    json submit(const json& body);

    /// Returns pending rows to the pool; a no-op when nothing is pending.
    void cancel();

    /// Rebuilds a session from its event log. The first event must be the
    /// creation event.
    static std::unique_ptr<Session> replay(const std::vector<json>& events, EventSink sink = {});

    /// Creation event for this session, as written to the log.
    json creation_event() const;

    /// Throws std::logic_error if pool, pending and taught rows do not
    /// partition the non-initial dataset rows.
    void check_invariants() const;

    /// Predicted probabilities over every dataset row; used to compare
    /// learner state across replays.
    ProbabilityMatrix predict_all() const;

    std::vector<LabelRecord> history() const;

  private:
    struct SeriesPoint {
        Index step;
        Index labeled;
        std::optional<double> accuracy;
    };
    enum class RowState : std::uint8_t { initial, pool, pending, taught };

    void commit_query(Index requested, const IndexList& rows);
    void commit_labels(const std::vector<LabelRecord>& records);
    void commit_cancel();
    void emit(const json& event) const;
    void record_point();
    json pending_payload() const;
    json metrics_locked() const;
    IndexList available_rows() const;
    Index count(RowState s) const;
    bool valid_label(int label) const;
    std::string class_name(int label) const;

    std::string id_;
    json config_json_;
    SessionConfig config_;
    std::int64_t created_ms_ = 0;
    std::unique_ptr<AnyLearner> learner_;
    LabelArray universe_;
    std::vector<RowState> state_;
    IndexList pending_;
    Index pending_request_ = 0;
    ProbabilityMatrix pending_proba_;
    std::vector<LabelRecord> history_;
    std::vector<SeriesPoint> series_;
    Index step_ = 0;
    EventSink sink_;
    mutable std::shared_mutex mutex_;
};

}  // namespace al::service
