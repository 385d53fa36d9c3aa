#pragma once

#include "mackey/integer.hpp"

#include <atomic>
#include <memory>

namespace mackey {

class Cancelled : public Error {
 public:
  Cancelled() : Error("computation cancelled") {}
};

/// Shared flag polled by long-running eliminations.
class CancellationToken {
 public:
  CancellationToken() : flag_(std::make_shared<std::atomic<bool>>(false)) {}
  void cancel() const { flag_->store(true, std::memory_order_relaxed); }
  bool cancelled() const { return flag_->load(std::memory_order_relaxed); }

 private:
  std::shared_ptr<std::atomic<bool>> flag_;
};

/// Installs `token` as the current thread's cancellation token for the
/// lifetime of the scope.  Scopes nest.
class CancellationScope {
 public:
  explicit CancellationScope(const CancellationToken& token);
  ~CancellationScope();
  CancellationScope(const CancellationScope&) = delete;
  CancellationScope& operator=(const CancellationScope&) = delete;

 private:
  const CancellationToken* previous_;
  CancellationToken token_;
};

/// Throws Cancelled if the current thread's token has been cancelled.
void throw_if_cancelled();

}  // namespace mackey
