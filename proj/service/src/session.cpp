#include "al/service/session.hpp"

#include "al/bench/dataset.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>

namespace al::service {

namespace {

std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

[[noreturn]] void bad_request(const std::string& message) { throw ServiceError(400, message); }

const json& member(const json& obj, const char* key) {
    if (!obj.contains(key)) bad_request(std::string("missing field '") + key + "'");
    return obj.at(key);
}

FeatureMatrix matrix_from(const json& rows, const char* what) {
    if (!rows.is_array() || rows.empty()) bad_request(std::string(what) + " must be a non-empty array of rows");
    const auto cols = rows.front().is_array() ? rows.front().size() : 0;
    if (cols == 0) bad_request(std::string(what) + " rows must be non-empty arrays of numbers");
    FeatureMatrix X(static_cast<Index>(rows.size()), static_cast<Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != cols) {
            bad_request(std::string(what) + " row " + std::to_string(i) + " has the wrong length");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (!row[j].is_number()) {
                bad_request(std::string(what) + " row " + std::to_string(i) + " has a non-numeric entry");
            }
            X(static_cast<Index>(i), static_cast<Index>(j)) = row[j].get<double>();
        }
    }
    if (!X.allFinite()) bad_request(std::string(what) + " contains non-finite values");
    return X;
}

LabelArray labels_from(const json& arr, const char* what) {
    if (!arr.is_array()) bad_request(std::string(what) + " must be an array of integers");
    LabelArray out;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) bad_request(std::string(what) + " must be an array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

bench::Dataset load(const json& path) {
    if (!path.is_string()) bad_request("dataset path must be a string");
    try {
        return bench::load_csv(path.get<std::string>());
    } catch (const DataError& e) {
        bad_request(e.what());
    }
}

}  // namespace

SessionConfig SessionConfig::from_json(const json& body) {
    if (!body.is_object()) bad_request("session config must be a JSON object");
    SessionConfig c;
    try {
        c.strategy = body.value("strategy", c.strategy);
        c.estimator = body.value("estimator", c.estimator);
        c.batch_size = body.value("batch_size", c.batch_size);
        c.seed = body.value("seed", c.seed);
        c.class_names = body.value("class_names", c.class_names);
    } catch (const json::exception& e) {
        bad_request(std::string("invalid config field: ") + e.what());
    }
    if (c.batch_size < 1) bad_request("batch_size must be at least 1");

    const json& dataset = member(body, "dataset");
    if (!dataset.is_object()) bad_request("dataset must be an object");
    if (dataset.contains("features")) {
        c.rows = matrix_from(dataset.at("features"), "dataset.features");
    } else if (dataset.contains("path")) {
        c.rows = load(dataset.at("path")).X;
    } else {
        bad_request("dataset needs 'features' or 'path'");
    }

    const json& initial = member(body, "initial");
    if (!initial.is_object()) bad_request("initial must be an object");
    const LabelArray ids = labels_from(member(initial, "rows"), "initial.rows");
    c.initial_labels = labels_from(member(initial, "labels"), "initial.labels");
    if (ids.empty()) bad_request("initial.rows must not be empty");
    if (ids.size() != c.initial_labels.size()) bad_request("initial.rows and initial.labels differ in length");
    std::set<int> seen;
    for (int id : ids) {
        if (id < 0 || id >= c.rows.rows()) bad_request("initial row id " + std::to_string(id) + " out of range");
        if (!seen.insert(id).second) bad_request("initial row id " + std::to_string(id) + " repeated");
        c.initial_rows.push_back(id);
    }
    if (static_cast<Index>(ids.size()) == c.rows.rows()) bad_request("initial rows leave an empty pool");

    if (body.contains("holdout")) {
        const json& h = body.at("holdout");
        if (!h.is_object()) bad_request("holdout must be an object");
        if (h.contains("path")) {
            auto data = load(h.at("path"));
            const auto* y = std::get_if<LabelArray>(&data.y);
            if (y == nullptr) bad_request("holdout file must have a single label column");
            c.holdout_X = std::move(data.X);
            c.holdout_y = *y;
        } else {
            c.holdout_X = matrix_from(member(h, "features"), "holdout.features");
            c.holdout_y = labels_from(member(h, "labels"), "holdout.labels");
        }
        if (c.holdout_X.rows() != static_cast<Index>(c.holdout_y.size())) {
            bad_request("holdout features and labels differ in length");
        }
        if (c.holdout_X.cols() != c.rows.cols()) bad_request("holdout feature count differs from dataset");
    }
    return c;
}

Session::Session(std::string id, const json& config, EventSink sink)
    : id_(std::move(id)), config_json_(config), config_(SessionConfig::from_json(config)),
      created_ms_(now_ms()), sink_(std::move(sink)) {
    try {
        learner_ = make_learner({.strategy = config_.strategy, .estimator = config_.estimator, .seed = config_.seed});
    } catch (const UnknownNameError& e) {
        throw ServiceError(422, e.what(), {{"valid", e.valid()}});
    }

    if (!config_.class_names.empty()) {
        for (int k = 0; k < static_cast<int>(config_.class_names.size()); ++k) universe_.push_back(k);
    } else {
        universe_ = config_.initial_labels;
        std::sort(universe_.begin(), universe_.end());
        universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
    }
    for (int label : config_.initial_labels) {
        if (!valid_label(label)) bad_request("initial label " + std::to_string(label) + " outside the class names");
    }
    for (int label : config_.holdout_y) {
        if (!valid_label(label)) bad_request("holdout label " + std::to_string(label) + " outside the class universe");
    }

    try {
        learner_->fit(take_rows(config_.rows, config_.initial_rows), config_.initial_labels);
    } catch (const std::exception& e) {
        bad_request(std::string("initial fit failed: ") + e.what());
    }

    state_.assign(static_cast<std::size_t>(config_.rows.rows()), RowState::pool);
    for (Index r : config_.initial_rows) state_[static_cast<std::size_t>(r)] = RowState::initial;
    record_point();
}

json Session::creation_event() const {
    std::shared_lock lock(mutex_);
    return {{"type", "create"}, {"id", id_}, {"ts", created_ms_}, {"config", config_json_}};
}

bool Session::valid_label(int label) const {
    return std::binary_search(universe_.begin(), universe_.end(), label);
}

std::string Session::class_name(int label) const {
    if (!config_.class_names.empty()) return config_.class_names[static_cast<std::size_t>(label)];
    return std::to_string(label);
}

Index Session::count(RowState s) const {
    return static_cast<Index>(std::count(state_.begin(), state_.end(), s));
}

IndexList Session::available_rows() const {
    IndexList out;
    for (std::size_t r = 0; r < state_.size(); ++r) {
        if (state_[r] == RowState::pool) out.push_back(static_cast<Index>(r));
    }
    return out;
}

void Session::emit(const json& event) const {
    if (sink_) sink_(event);
}

void Session::record_point() {
    std::optional<double> accuracy;
    if (config_.holdout_X.rows() > 0) accuracy = learner_->score(config_.holdout_X, config_.holdout_y);
    series_.push_back({step_, learner_->labeled_count(), accuracy});
}

json Session::pending_payload() const {
    const LabelArray learned = learner_->classes();
    json rows = json::array();
    for (std::size_t k = 0; k < pending_.size(); ++k) {
        const Index r = pending_[k];
        const Eigen::RowVectorXd x = config_.rows.row(r);
        json proba = json::array();
        if (pending_proba_.rows() > 0) {
            for (int label : universe_) {
                const auto it = std::find(learned.begin(), learned.end(), label);
                proba.push_back(it == learned.end()
                                    ? 0.0
                                    : pending_proba_(static_cast<Index>(k), it - learned.begin()));
            }
        }
        rows.push_back({{"id", r}, {"features", std::vector<double>(x.data(), x.data() + x.size())}, {"proba", proba}});
    }
    return {{"rows", rows}};
}

json Session::summary() const {
    std::shared_lock lock(mutex_);
    json names = json::array();
    for (int label : universe_) names.push_back(class_name(label));
    return {
        {"id", id_},
        {"strategy", config_.strategy},
        {"estimator", config_.estimator},
        {"batch_size", config_.batch_size},
        {"seed", config_.seed},
        {"rows", config_.rows.rows()},
        {"features", config_.rows.cols()},
        {"initial", config_.initial_rows.size()},
        {"classes", universe_},
        {"class_names", names},
        {"pool_size", count(RowState::pool) + count(RowState::pending)},
        {"pending", pending_},
        {"labeled", learner_->labeled_count()},
        {"has_holdout", config_.holdout_X.rows() > 0},
        {"created_ms", created_ms_},
    };
}

json Session::metrics_locked() const {
    json counts = json::object();
    for (int label : universe_) counts[class_name(label)] = 0;
    for (int label : config_.initial_labels) counts[class_name(label)] = counts[class_name(label)].get<int>() + 1;
    for (const auto& h : history_) counts[class_name(h.label)] = counts[class_name(h.label)].get<int>() + 1;

    json series = json::array();
    for (const auto& p : series_) {
        series.push_back({{"step", p.step}, {"labeled", p.labeled},
                          {"accuracy", p.accuracy ? json(*p.accuracy) : json(nullptr)}});
    }
    const auto& last = series_.back().accuracy;
    return {
        {"labeled", learner_->labeled_count()},
        {"taught", history_.size()},
        {"pool_remaining", count(RowState::pool) + count(RowState::pending)},
        {"available", count(RowState::pool)},
        {"pending", pending_.size()},
        {"steps", step_},
        {"class_counts", counts},
        {"accuracy", last ? json(*last) : json(nullptr)},
        {"accuracy_series", series},
    };
}

json Session::metrics() const {
    std::shared_lock lock(mutex_);
    return metrics_locked();
}

json Session::query(std::optional<Index> n) {
    std::unique_lock lock(mutex_);
    const Index requested = n.value_or(config_.batch_size);
    if (requested < 1) bad_request("n must be at least 1");
    if (!pending_.empty()) {
        if (requested == pending_request_) return pending_payload();
        throw ServiceError(409, "a batch of " + std::to_string(pending_.size()) +
                                    " rows is pending; label or cancel it first",
                           {{"pending", pending_}});
    }
    const IndexList available = available_rows();
    if (available.empty()) throw ServiceError(410, "pool exhausted");

    const Index k = std::min<Index>(requested, static_cast<Index>(available.size()));
    IndexList picked;
    try {
        picked = learner_->query(take_rows(config_.rows, available), k);
    } catch (const ContractError& e) {
        throw ServiceError(422, std::string("strategy cannot run on this session: ") + e.what());
    }
    IndexList rows;
    for (Index p : picked) rows.push_back(available[static_cast<std::size_t>(p)]);
    commit_query(requested, rows);
    emit({{"type", "query"}, {"n", requested}, {"rows", rows}});
    return pending_payload();
}

void Session::commit_query(Index requested, const IndexList& rows) {
    for (Index r : rows) {
        if (r < 0 || r >= static_cast<Index>(state_.size()) || state_[static_cast<std::size_t>(r)] != RowState::pool) {
            throw DataError("query event names row " + std::to_string(r) + " which is not in the pool");
        }
    }
    for (Index r : rows) state_[static_cast<std::size_t>(r)] = RowState::pending;
    pending_ = rows;
    pending_request_ = requested;
    pending_proba_ = learner_->predict_proba(take_rows(config_.rows, rows));
}

json Session::submit(const json& body) {
    std::unique_lock lock(mutex_);
    if (!body.is_object() || !body.contains("labels") || !body.at("labels").is_array() || body.at("labels").empty()) {
        bad_request("body must be {labels: [{id, label}, ...]} with at least one entry");
    }
    std::vector<LabelRecord> records;
    std::set<Index> seen;
    const auto ts = now_ms();
    for (const auto& item : body.at("labels")) {
        if (!item.is_object() || !item.contains("id") || !item.contains("label") ||
            !item.at("id").is_number_integer() || !item.at("label").is_number_integer()) {
            bad_request("each label entry needs integer 'id' and 'label'");
        }
        const Index id = item.at("id").get<Index>();
        if (!seen.insert(id).second) bad_request("row " + std::to_string(id) + " labeled twice in one request");
        records.push_back({id, item.at("label").get<int>(), ts, step_ + 1});
    }
    for (const auto& r : records) {
        if (std::find(pending_.begin(), pending_.end(), r.row) == pending_.end()) {
            throw ServiceError(409, "row " + std::to_string(r.row) + " is not pending", {{"pending", pending_}});
        }
    }
    for (const auto& r : records) {
        if (!valid_label(r.label)) {
            throw ServiceError(400, "label " + std::to_string(r.label) + " is outside the class universe",
                               {{"classes", universe_}});
        }
    }
    try {
        commit_labels(records);
    } catch (const ServiceError&) {
        throw;
    } catch (const std::exception& e) {
        bad_request(std::string("teaching failed: ") + e.what());
    }
    json event = {{"type", "label"}, {"labels", json::array()}};
    for (const auto& r : records) event["labels"].push_back({{"id", r.row}, {"label", r.label}, {"ts", r.timestamp_ms}});
    emit(event);
    return metrics_locked();
}

void Session::commit_labels(const std::vector<LabelRecord>& records) {
    IndexList rows;
    LabelArray labels;
    for (const auto& r : records) {
        if (r.row < 0 || r.row >= static_cast<Index>(state_.size()) ||
            state_[static_cast<std::size_t>(r.row)] != RowState::pending) {
            throw DataError("label event names row " + std::to_string(r.row) + " which is not pending");
        }
        rows.push_back(r.row);
        labels.push_back(r.label);
    }
    learner_->teach(take_rows(config_.rows, rows), labels);

    ++step_;
    for (const auto& r : records) {
        state_[static_cast<std::size_t>(r.row)] = RowState::taught;
        history_.push_back({r.row, r.label, r.timestamp_ms, step_});
    }
    std::erase_if(pending_, [&](Index p) { return state_[static_cast<std::size_t>(p)] == RowState::taught; });
    if (pending_.empty()) {
        pending_request_ = 0;
        pending_proba_.resize(0, 0);
    } else {
        pending_proba_ = learner_->predict_proba(take_rows(config_.rows, pending_));
    }
    record_point();
}

void Session::cancel() {
    std::unique_lock lock(mutex_);
    if (pending_.empty()) return;
    commit_cancel();
    emit({{"type", "cancel"}});
}

void Session::commit_cancel() {
    for (Index r : pending_) state_[static_cast<std::size_t>(r)] = RowState::pool;
    pending_.clear();
    pending_request_ = 0;
    pending_proba_.resize(0, 0);
}

std::unique_ptr<Session> Session::replay(const std::vector<json>& events, EventSink sink) {
    if (events.empty() || events.front().value("type", "") != "create") {
        throw DataError("event log does not start with a creation event");
    }
    const json& head = events.front();
    auto session = std::make_unique<Session>(head.at("id").get<std::string>(), head.at("config"));
    session->created_ms_ = head.at("ts").get<std::int64_t>();
    for (std::size_t i = 1; i < events.size(); ++i) {
        const json& e = events[i];
        const std::string type = e.value("type", "");
        if (type == "query") {
            session->commit_query(e.at("n").get<Index>(), e.at("rows").get<IndexList>());
        } else if (type == "label") {
            std::vector<LabelRecord> records;
            for (const auto& l : e.at("labels")) {
                records.push_back({l.at("id").get<Index>(), l.at("label").get<int>(), l.at("ts").get<std::int64_t>(), 0});
            }
            session->commit_labels(records);
        } else if (type == "cancel") {
            session->commit_cancel();
        } else {
            throw DataError("unknown event type '" + type + "' at position " + std::to_string(i));
        }
    }
    session->sink_ = std::move(sink);
    return session;
}

void Session::check_invariants() const {
    std::shared_lock lock(mutex_);
    std::set<Index> pending(pending_.begin(), pending_.end());
    if (pending.size() != pending_.size()) throw std::logic_error("pending batch repeats a row");
    std::set<Index> taught;
    for (const auto& h : history_) {
        if (!taught.insert(h.row).second) throw std::logic_error("row taught twice");
        if (pending.count(h.row) != 0) throw std::logic_error("row both pending and taught");
    }
    for (std::size_t r = 0; r < state_.size(); ++r) {
        const auto row = static_cast<Index>(r);
        const bool in_pending = pending.count(row) != 0;
        const bool in_taught = taught.count(row) != 0;
        switch (state_[r]) {
            case RowState::initial:
                if (in_pending || in_taught) throw std::logic_error("initial row reused");
                break;
            case RowState::pool:
                if (in_pending || in_taught) throw std::logic_error("pool row also pending or taught");
                break;
            case RowState::pending:
                if (!in_pending) throw std::logic_error("pending row missing from batch");
                break;
            case RowState::taught:
                if (!in_taught) throw std::logic_error("taught row missing from history");
                break;
        }
    }
    const Index expected = static_cast<Index>(config_.initial_rows.size() + history_.size());
    if (learner_->labeled_count() != expected) throw std::logic_error("learner labeled count out of step");
}

ProbabilityMatrix Session::predict_all() const {
    std::shared_lock lock(mutex_);
    return learner_->predict_proba(config_.rows);
}

std::vector<LabelRecord> Session::history() const {
    std::shared_lock lock(mutex_);
    return history_;
}

}  // namespace al::service
