#pragma once

#include <string>
#include <vector>

#include "hsg/document.hpp"
#include "hsg/report.hpp"

namespace hsg::doc {

enum class Suite {
  all,
  category,
  adjunction,
  kan,
  grid,
  temporal,
  jguard,
  tower,
  registry
};

Suite suite_from_name(const std::string &name);

struct DocumentResult {
  std::string path;
  std::string verdict; // pass | fail | warn
  Report report;
};

struct SuiteResult {
  std::vector<DocumentResult> documents;
  int exit_code = 0;          // 0 pass, 2 validation failure, 4 io
  std::string rendered;       // canonical machine-readable report
};

// Dispatches every document to its owning checker and aggregates findings
// deterministically (sorted by path, then finding code, then message).
SuiteResult run_suite(const std::vector<std::string> &paths, Suite suite);

// Single-document checking, shared between run_suite and the tests.
Report check_document(const Document &d, Suite suite);

} // namespace hsg::doc
