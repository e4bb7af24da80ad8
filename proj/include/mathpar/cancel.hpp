#pragma once

#include <atomic>
#include <chrono>
#include <memory>
#include <optional>

#include "mathpar/error.hpp"

namespace mathpar {

/// Cooperative cancellation: long-running routines call check() once per
/// reduction step or sweep. A default-constructed token never fires.
class CancelToken {
 public:
  using Clock = std::chrono::steady_clock;

  CancelToken() = default;

  static CancelToken withDeadline(Clock::time_point deadline) {
    CancelToken t;
    t.flag_ = std::make_shared<std::atomic<bool>>(false);
    t.deadline_ = deadline;
    return t;
  }

  static CancelToken withTimeout(Clock::duration budget) {
    return withDeadline(Clock::now() + budget);
  }

  static CancelToken manual() {
    CancelToken t;
    t.flag_ = std::make_shared<std::atomic<bool>>(false);
    return t;
  }

  void cancel() const {
    if (flag_) flag_->store(true);
  }

  bool cancelled() const {
    if (flag_ && flag_->load()) return true;
    return deadline_ && Clock::now() >= *deadline_;
  }

  void check() const {
    if (cancelled()) throw MathparError(ErrorCode::Cancelled, "evaluation cancelled (time budget exceeded)");
  }

 private:
  std::shared_ptr<std::atomic<bool>> flag_;
  std::optional<Clock::time_point> deadline_;
};

}  // namespace mathpar
