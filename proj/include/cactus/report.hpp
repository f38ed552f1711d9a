#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cactus {

// Outcome of a verification sweep. Failures are data, not exceptions.
struct VerificationReport {
  std::vector<std::string> failures;  // one `FAIL ...` line each
  std::size_t total = 0;

  bool ok() const noexcept { return failures.empty(); }

  // Failure lines, then `OK <total> cases` or `FAIL <failed>/<total>`.
  std::string to_text() const;
};

}  // namespace cactus
