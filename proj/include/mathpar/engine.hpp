#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mathpar/cancel.hpp"
#include "mathpar/value.hpp"

namespace mathpar {

struct Binding {
  Value value;
  SpaceContext space;  // the space the value was computed in
};

/// Per-session state: named values plus the active space.
struct Environment {
  std::map<std::string, Binding> bindings;
  SpaceContext space = SpaceContext::defaults();
  std::chrono::steady_clock::time_point createdAt = std::chrono::steady_clock::now();
  std::chrono::steady_clock::time_point lastUsedAt = createdAt;
};

/// Empties the bindings and restores the default space.
void clearEnvironment(Environment& env);

struct Output {
  std::optional<std::string> label;
  std::string mathpar;
  std::string latex;

  /// `label = value`, or the bare value.
  std::string mathparLine() const;
  std::string latexLine() const;
};

enum class Severity { Error, Warning, Info };
std::string_view severityName(Severity s) noexcept;

struct Diagnostic {
  Severity severity = Severity::Error;
  std::optional<ErrorCode> code;
  std::string message;
  int line = 0;
  int column = 0;
};

struct ExecutionResult {
  std::vector<Output> outputs;
  std::vector<Diagnostic> diagnostics;

  bool hasErrors() const;
};

/// Parses and runs a section against `env`. Statements run in order; the
/// first error stops the section and is reported as a diagnostic, keeping
/// bindings made before it. Without \print the value of the last statement
/// is the single output.
ExecutionResult executeSection(Environment& env, std::string_view source, const CancelToken& cancel = {});

}  // namespace mathpar
