#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// Ordered key=value block.
class Report {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }
  void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
  void set(const std::string& key, double value);
  template <class I>
    requires std::is_integral_v<I>
  void set(const std::string& key, I value) {
    set(key, std::to_string(value));
  }
  void merge(const Report& other, const std::string& prefix = "");

  std::optional<std::string> get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return kv_; }
  std::string to_string() const;

 private:
  std::vector<std::pair<std::string, std::string>> kv_;
};

std::string format_double(double x);

struct ConstructionReport {
  std::string construction;
  std::vector<std::pair<std::string, std::int64_t>> phases;  // edge delta per phase
  Report info;
  std::size_t edges_before_patch = 0;
  std::size_t patch_added = 0;
  std::size_t edges_final = 0;
  std::size_t uncompleted_before_patch = 0;
  std::string verified = "skipped";
  double runtime_ms = 0;
  std::vector<std::string> warnings;

  std::int64_t phase_sum() const;
  Report to_report() const;
};

// Records the edge-count change of h between successive marks.
class PhaseTracker {
 public:
  PhaseTracker(ConstructionReport& r, const Graph& h) : r_(r), h_(h), last_(h.edge_count()) {}
  void mark(const std::string& name);

 private:
  ConstructionReport& r_;
  const Graph& h_;
  std::size_t last_;
};

struct ConstructionResult {
  Graph h;
  ConstructionReport report;
};

}  // namespace satlab
