#pragma once

#include <string>
#include <vector>

namespace hsg {

enum class Severity { error, warning, info };

inline const char *severity_name(Severity s) {
  switch (s) {
  case Severity::error:
    return "error";
  case Severity::warning:
    return "warning";
  case Severity::info:
    return "info";
  }
  return "unknown";
}

struct Finding {
  std::string code;     // stable machine code, e.g. "identity-law"
  std::string message;  // human-readable, names the offending ids
  std::string location; // subject id ("category c", "token x", ...)
  Severity severity = Severity::error;
};

// Law report: empty (no error findings) means the checked laws hold.
struct Report {
  std::vector<Finding> findings;

  bool pass() const {
    for (const auto &f : findings)
      if (f.severity == Severity::error)
        return false;
    return true;
  }

  void add(std::string code, std::string message, std::string location = "",
           Severity severity = Severity::error) {
    findings.push_back(
        {std::move(code), std::move(message), std::move(location), severity});
  }

  void merge(const Report &other) {
    findings.insert(findings.end(), other.findings.begin(),
                    other.findings.end());
  }
};

} // namespace hsg
