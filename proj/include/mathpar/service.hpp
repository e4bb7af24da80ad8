#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "mathpar/engine.hpp"

namespace mathpar {

inline constexpr std::size_t kMaxSourceBytes = 256 * 1024;

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::chrono::seconds sessionTtl{3600};
  std::chrono::seconds evalTimeout{30};

  /// Reads MATHPAR_PORT, MATHPAR_SESSION_TTL_SECONDS and
  /// MATHPAR_EVAL_TIMEOUT_SECONDS; unset or malformed values keep defaults.
  static ServiceConfig fromEnvironment();
};

using ClockFn = std::function<std::chrono::steady_clock::time_point()>;

struct Session {
  std::mutex mutex;  // serializes runs against env
  Environment env;
  std::chrono::steady_clock::time_point lastUsed;
};

/// Thread-safe registry of sessions with lazy expiry.
class SessionStore {
 public:
  enum class Status { Found, Unknown, Expired };

  explicit SessionStore(std::chrono::seconds ttl, ClockFn clock = {});

  std::string create();
  /// Looks up and touches a session. An expired session is removed and
  /// reported once as Expired; later lookups see Unknown.
  std::pair<Status, std::shared_ptr<Session>> acquire(const std::string& id);
  bool erase(const std::string& id);
  std::size_t size() const;

 private:
  bool expired(const Session& s, std::chrono::steady_clock::time_point now) const;

  std::chrono::seconds ttl_;
  ClockFn clock_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

struct HttpReply {
  int status = 200;
  std::string body;  // JSON, empty for 204
};

/// The JSON API, independent of the transport.
class Api {
 public:
  explicit Api(ServiceConfig config, ClockFn clock = {});

  HttpReply health() const;
  HttpReply createSession();
  HttpReply run(const std::string& id, const std::string& body);
  HttpReply clear(const std::string& id);
  HttpReply remove(const std::string& id);

  SessionStore& store() { return store_; }

 private:
  ServiceConfig config_;
  SessionStore store_;
};

/// An HTTP/1.1 server exposing Api under /api.
class HttpService {
 public:
  explicit HttpService(ServiceConfig config, ClockFn clock = {});
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds to config.port (0 picks a free port) and returns the bound port,
  /// or -1 on failure.
  int bind();
  /// Serves until stop(); call after bind().
  bool serve();
  void stop();

  Api& api() { return api_; }

 private:
  struct Server;
  ServiceConfig config_;
  Api api_;
  std::unique_ptr<Server> server_;
};

}  // namespace mathpar
