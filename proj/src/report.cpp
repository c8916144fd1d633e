#include "satlab/report.hpp"

#include <charconv>

namespace satlab {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void Report::set(const std::string& key, const std::string& value) {
  for (auto& kv : kv_)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  kv_.emplace_back(key, value);
}

void Report::set(const std::string& key, double value) { set(key, format_double(value)); }

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& [k, v] : other.kv_) set(prefix + k, v);
}

std::optional<std::string> Report::get(const std::string& key) const {
  for (const auto& kv : kv_)
    if (kv.first == key) return kv.second;
  return std::nullopt;
}

std::string Report::to_string() const {
  std::string s;
  for (const auto& [k, v] : kv_) s += k + "=" + v + "\n";
  return s;
}

std::int64_t ConstructionReport::phase_sum() const {
  std::int64_t s = 0;
  for (const auto& ph : phases) s += ph.second;
  return s;
}

Report ConstructionReport::to_report() const {
  Report r;
  r.set("construction", construction);
  for (const auto& [name, delta] : phases) r.set("phase." + name, delta);
  r.merge(info);
  r.set("edges_before_patch", edges_before_patch);
  r.set("patch_added", patch_added);
  r.set("edges_final", edges_final);
  r.set("uncompleted_before_patch", uncompleted_before_patch);
  r.set("verified", verified);
  r.set("runtime_ms", runtime_ms);
  for (std::size_t i = 0; i < warnings.size(); ++i) r.set("warning." + std::to_string(i), warnings[i]);
  return r;
}

void PhaseTracker::mark(const std::string& name) {
  const auto now = h_.edge_count();
  r_.phases.emplace_back(name, static_cast<std::int64_t>(now) - static_cast<std::int64_t>(last_));
  last_ = now;
}

}  // namespace satlab
