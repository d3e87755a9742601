#ifndef SIGMALAT_CORPUS_HPP
#define SIGMALAT_CORPUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "sigmalat/report.hpp"

namespace sigmalat {

struct CorpusEntry {
  std::string name;
  std::uint64_t expected_order;
  std::function<Group(const Limits&)> build;
};

// Deterministic built-in corpus filtered by max_order (boundary inclusive).
std::vector<CorpusEntry> builtin_corpus(std::uint64_t max_order);
Group build_builtin(const std::string& name, const Limits& limits = {});

// Group file format: "degree N", then "gen (a b c)(d e)" lines (1-indexed
// disjoint cycles); '#' comments and blank lines ignored.
Group parse_group_text(const std::string& text, const Limits& limits = {});
Group load_group_file(const std::string& path, const Limits& limits = {});

extern const char* const kDefaultSigmaGrid[4];
extern const char* const kDefaultProperties[8];

struct CorpusOptions {
  std::uint64_t max_order = 1000;
  std::vector<std::string> sigmas;      // defaults to kDefaultSigmaGrid
  std::vector<std::string> properties;  // defaults to kDefaultProperties
  unsigned workers = 0;                 // 0 = hardware concurrency
  std::string out_path;                 // empty = stdout
  std::string cache_dir;                // empty = $SIGMALAT_CACHE_DIR if set
  Limits limits;
  bool oracle = false;
};

// Full grid run: corpus x sigma grid x properties, cache-aware, records
// sorted by (group, sigma, property), elapsed_ms pinned to 0 for determinism.
// Returns the report lines (also written to out_path when set).
std::vector<std::string> run_corpus(const CorpusOptions& opt);

// Semantic report comparison: elapsed_ms is ignored, everything else must
// match record-for-record (after canonical sorting). Returns true when equal.
bool report_diff(const std::string& path_a, const std::string& path_b,
                 std::string& message);

}  // namespace sigmalat

#endif
