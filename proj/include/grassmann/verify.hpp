#ifndef GRASSMANN_VERIFY_HPP
#define GRASSMANN_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace grassmann::verify {

enum class Status { Pass, Fail, Skip };
const char* to_string(Status status) noexcept;

struct Options {
  /// Search-oracle rows above this n are skipped; randomized loops over n stop here.
  int upto_n = 7;
  std::uint64_t seed = 20240611;
  /// Anchors whose inputs are deliberately corrupted (negative controls).
  std::set<std::string> mutate;
};

/// Collects failed expectations; the first few are kept for the report.
class Outcome {
 public:
  void require(bool condition, const std::string& what);
  void note(const std::string& text);
  /// Run statistics (search node counts); shown only on request.
  void stat(const std::string& text) { stats_ = text; }
  const std::string& stats() const noexcept { return stats_; }

  bool passed() const noexcept { return failures_ == 0; }
  std::string detail() const;

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> failure_text_;
  std::vector<std::string> notes_;
  std::string stats_;
};

class Context;

struct Check {
  std::string anchor;
  /// Acceptance criterion (1..8) this check belongs to; 0 for supplementary checks.
  int criterion = 0;
  /// Skipped when Options::upto_n is below this.
  int min_n = 1;
  /// Honours Options::mutate.
  bool mutable_input = false;
  std::function<void(Context&, Outcome&)> run;
};

struct CheckResult {
  std::string anchor;
  int criterion = 0;
  Status status = Status::Skip;
  std::string detail;
  std::string stats;
  double seconds = 0.0;
};

const std::vector<Check>& checks();

/// Runs the selected checks (all when `select` is empty) in registry order.
std::vector<CheckResult> run(const Options& options,
                             const std::function<bool(const Check&)>& select = nullptr);

/// [{anchor, status, detail}, ...]
nlohmann::json report(const std::vector<CheckResult>& results);

/// Human-readable summary of one acceptance criterion.
std::string criterion_title(int criterion);

}  // namespace grassmann::verify

#endif  // GRASSMANN_VERIFY_HPP
