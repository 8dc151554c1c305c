#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace twistcoh {

  struct Diagnostic {
    enum class Severity { warning, error };

    Severity    severity;
    std::string message;
  };

  struct DiagnosticReport {
    std::vector<Diagnostic> entries;

    void warn(std::string message) {
      entries.push_back({Diagnostic::Severity::warning, std::move(message)});
    }
    void error(std::string message) {
      entries.push_back({Diagnostic::Severity::error, std::move(message)});
    }

    // No errors; warnings are allowed.
    bool ok() const {
      return std::none_of(entries.begin(), entries.end(), [](auto const& d) {
        return d.severity == Diagnostic::Severity::error;
      });
    }

    bool empty() const noexcept {
      return entries.empty();
    }

    std::size_t count(Diagnostic::Severity s) const {
      return std::count_if(entries.begin(), entries.end(), [s](auto const& d) {
        return d.severity == s;
      });
    }

    void append(DiagnosticReport const& other) {
      entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
  };

  inline char const* to_string(Diagnostic::Severity s) {
    return s == Diagnostic::Severity::error ? "error" : "warning";
  }

}  // namespace twistcoh
