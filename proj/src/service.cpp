#include "mathpar/service.hpp"

#include <httplib.h>

#include <cstdlib>
#include <json.hpp>
#include <random>

#ifndef MATHPAR_VERSION
#define MATHPAR_VERSION "0.0.0"
#endif

namespace mathpar {

using json = nlohmann::json;
using SteadyClock = std::chrono::steady_clock;

namespace {

std::optional<long> envNumber(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0) return std::nullopt;
  return v;
}

std::string randomId() {
  static std::mutex m;
  static std::mt19937_64 rng{[] {
    std::random_device rd;
    std::seed_seq seq{rd(), rd(), rd(), rd(), rd(), rd(), rd(), rd()};
    return std::mt19937_64(seq);
  }()};
  std::lock_guard lock(m);
  static constexpr char hex[] = "0123456789abcdef";
  std::string id;
  for (int part = 0; part < 2; ++part) {
    std::uint64_t v = rng();
    for (int k = 0; k < 16; ++k, v >>= 4) id.push_back(hex[v & 0xF]);
  }
  return id;
}

HttpReply errorReply(int status, std::string_view error, std::string_view message) {
  return {status, json{{"error", error}, {"message", message}}.dump()};
}

HttpReply sessionError(SessionStore::Status s, const std::string& id) {
  if (s == SessionStore::Status::Expired) return errorReply(410, "ExpiredSession", "session " + id + " has expired");
  return errorReply(404, "UnknownSession", "no session with id " + id);
}

}  // namespace

ServiceConfig ServiceConfig::fromEnvironment() {
  ServiceConfig c;
  if (auto v = envNumber("MATHPAR_PORT"); v && *v < 65536) c.port = static_cast<int>(*v);
  if (auto v = envNumber("MATHPAR_SESSION_TTL_SECONDS")) c.sessionTtl = std::chrono::seconds(*v);
  if (auto v = envNumber("MATHPAR_EVAL_TIMEOUT_SECONDS")) c.evalTimeout = std::chrono::seconds(*v);
  return c;
}

// --- SessionStore ------------------------------------------------------------

SessionStore::SessionStore(std::chrono::seconds ttl, ClockFn clock)
    : ttl_(ttl), clock_(clock ? std::move(clock) : ClockFn([] { return SteadyClock::now(); })) {}

bool SessionStore::expired(const Session& s, SteadyClock::time_point now) const { return s.lastUsed + ttl_ < now; }

std::string SessionStore::create() {
  auto session = std::make_shared<Session>();
  const auto now = clock_();
  session->lastUsed = now;
  std::lock_guard lock(mutex_);
  std::erase_if(sessions_, [&](const auto& kv) { return expired(*kv.second, now); });
  std::string id;
  do id = randomId();
  while (sessions_.count(id));
  sessions_.emplace(id, std::move(session));
  return id;
}

std::pair<SessionStore::Status, std::shared_ptr<Session>> SessionStore::acquire(const std::string& id) {
  const auto now = clock_();
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return {Status::Unknown, nullptr};
  if (expired(*it->second, now)) {
    sessions_.erase(it);
    return {Status::Expired, nullptr};
  }
  it->second->lastUsed = now;
  return {Status::Found, it->second};
}

bool SessionStore::erase(const std::string& id) {
  std::lock_guard lock(mutex_);
  return sessions_.erase(id) > 0;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

// --- Api -----------------------------------------------------------------------

Api::Api(ServiceConfig config, ClockFn clock) : config_(std::move(config)), store_(config_.sessionTtl, std::move(clock)) {}

HttpReply Api::health() const { return {200, json{{"status", "ok"}, {"version", MATHPAR_VERSION}}.dump()}; }

HttpReply Api::createSession() { return {201, json{{"sessionId", store_.create()}}.dump()}; }

HttpReply Api::run(const std::string& id, const std::string& body) {
  auto [status, session] = store_.acquire(id);
  if (!session) return sessionError(status, id);

  json request = json::parse(body, nullptr, false);
  if (request.is_discarded() || !request.is_object()) return errorReply(400, "BadRequest", "body must be a JSON object");
  if (!request.contains("source") || !request["source"].is_string())
    return errorReply(400, "BadRequest", "'source' must be a string");
  const std::string source = request["source"].get<std::string>();
  if (source.size() > kMaxSourceBytes) return errorReply(413, "PayloadTooLarge", "source exceeds 256 KiB");
  std::string mode = "both";
  if (request.contains("outputMode")) {
    if (!request["outputMode"].is_string()) return errorReply(400, "BadRequest", "'outputMode' must be a string");
    mode = request["outputMode"].get<std::string>();
    if (mode != "both" && mode != "mathpar" && mode != "latex")
      return errorReply(400, "BadRequest", "'outputMode' must be both, mathpar or latex");
  }

  std::lock_guard lock(session->mutex);
  const CancelToken cancel = CancelToken::withTimeout(config_.evalTimeout);
  ExecutionResult result = executeSection(session->env, source, cancel);

  json outputs = json::array();
  for (const auto& o : result.outputs) {
    outputs.push_back({{"label", o.label ? json(*o.label) : json(nullptr)},
                       {"mathpar", mode != "latex" ? json(o.mathpar) : json(nullptr)},
                       {"latex", mode != "mathpar" ? json(o.latex) : json(nullptr)}});
  }
  json diagnostics = json::array();
  for (const auto& d : result.diagnostics) {
    diagnostics.push_back({{"severity", severityName(d.severity)},
                           {"code", d.code ? json(errorCodeName(*d.code)) : json(nullptr)},
                           {"message", d.message},
                           {"line", d.line},
                           {"column", d.column}});
  }
  json response = {{"outputs", std::move(outputs)},
                   {"diagnostics", std::move(diagnostics)},
                   {"spaceName", session->env.space.name()},
                   {"floatpos", session->env.space.floatpos}};
  return {200, response.dump()};
}

HttpReply Api::clear(const std::string& id) {
  auto [status, session] = store_.acquire(id);
  if (!session) return sessionError(status, id);
  std::lock_guard lock(session->mutex);
  clearEnvironment(session->env);
  return {204, ""};
}

HttpReply Api::remove(const std::string& id) {
  auto [status, session] = store_.acquire(id);
  if (!session) return sessionError(status, id);
  store_.erase(id);
  return {204, ""};
}

// --- HttpService -----------------------------------------------------------------

struct HttpService::Server {
  httplib::Server http;
};

HttpService::HttpService(ServiceConfig config, ClockFn clock)
    : config_(config), api_(config, std::move(clock)), server_(std::make_unique<Server>()) {
  auto& http = server_->http;
  http.set_payload_max_length(16 * kMaxSourceBytes);

  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    if (!reply.body.empty()) res.set_content(reply.body, "application/json");
  };
  http.Get("/api/health", [this, send](const httplib::Request&, httplib::Response& res) { send(res, api_.health()); });
  http.Post("/api/sessions",
            [this, send](const httplib::Request&, httplib::Response& res) { send(res, api_.createSession()); });
  http.Post(R"(/api/sessions/([0-9A-Za-z]+)/run)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, api_.run(req.matches[1], req.body));
  });
  http.Post(R"(/api/sessions/([0-9A-Za-z]+)/clear)",
            [this, send](const httplib::Request& req, httplib::Response& res) { send(res, api_.clear(req.matches[1])); });
  http.Delete(R"(/api/sessions/([0-9A-Za-z]+))",
              [this, send](const httplib::Request& req, httplib::Response& res) { send(res, api_.remove(req.matches[1])); });
  http.set_error_handler([send](const httplib::Request&, httplib::Response& res) {
    if (res.status == 413 && res.body.empty()) send(res, errorReply(413, "PayloadTooLarge", "request body is too large"));
    else if (res.status == 404 && res.body.empty()) send(res, errorReply(404, "NotFound", "no such endpoint"));
  });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind() {
  if (config_.port == 0) return server_->http.bind_to_any_port(config_.host);
  return server_->http.bind_to_port(config_.host, config_.port) ? config_.port : -1;
}

bool HttpService::serve() { return server_->http.listen_after_bind(); }

void HttpService::stop() {
  if (server_ && server_->http.is_running()) server_->http.stop();
}

}  // namespace mathpar
