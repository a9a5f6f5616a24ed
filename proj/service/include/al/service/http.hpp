#pragma once

#include "al/service/store.hpp"

#include <httplib.h>

#include <string>

namespace al::service {

/// Registers the session endpoints on `server`:
///
///   POST   /sessions                   201 {id}
///   GET    /sessions/{id}              session summary
///   POST   /sessions/{id}/query?n=k    {rows: [{id, features, proba}]}
///   POST   /sessions/{id}/labels       metrics
///   DELETE /sessions/{id}/pending      204
///   GET    /sessions/{id}/metrics      metrics
///
/// Errors are returned as `{error: message, ...}` with the status carried
/// by ServiceError. Responses allow cross-origin requests.
void mount_routes(httplib::Server& server, SessionStore& store);

}  // namespace al::service
