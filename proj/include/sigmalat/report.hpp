#ifndef SIGMALAT_REPORT_HPP
#define SIGMALAT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmalat/classify.hpp"

namespace sigmalat {

extern const char* const kEngineVersion;

// One JSON-lines verdict record. Field order is fixed so report files are
// byte-stable; records compare by (group, sigma, property).
struct ReportRecord {
  std::string group;
  std::uint64_t order = 0;
  std::string sigma;
  std::string property;
  Verdict verdict = Verdict::kUndefined;
  std::optional<std::vector<std::string>> witness;
  ordered_json details;  // null unless the checker produced condition flags
  std::int64_t elapsed_ms = 0;

  std::string to_line() const;
  static ReportRecord from_line(const std::string& line);

  std::tuple<const std::string&, const std::string&, const std::string&> sort_key() const {
    return {group, sigma, property};
  }
};

// Evaluate one (group, sigma, property) cell; elapsed_ms filled with wall time.
ReportRecord evaluate_record(GroupCtx& ctx, const SigmaPartition& sigma, TransProperty p,
                             const EngineOptions& opt);

// 64-bit FNV-1a over the canonical element encoding; stable across runs.
std::string group_content_hash(const Group& g);
std::string cache_key(const Group& g, const std::string& sigma_canonical,
                      const std::string& property);

}  // namespace sigmalat

#endif
