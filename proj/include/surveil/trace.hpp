#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace surveil::sim {

enum class EventKind {
  detect,
  dispatch,
  enqueue,
  infer_start,
  infer_end,
  upload_start,
  upload_end,
  verdict,
};

const char* kind_name(EventKind k);
EventKind kind_from_name(const std::string& name);

// Device index of the cloud in trace records.
inline constexpr int kCloudDevice = -1;

struct TraceRecord {
  double t = 0.0;
  EventKind kind = EventKind::detect;
  std::uint64_t pkg = 0;
  int dev = 0;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

using EventTrace = std::vector<TraceRecord>;

// One JSON object per line, keys t, kind, pkg, dev, extra. Doubles are
// serialized with shortest round-trip formatting, so a parsed trace
// reproduces the original values exactly.
void write_jsonl(std::ostream& out, const EventTrace& trace);
EventTrace read_jsonl(std::istream& in);

}  // namespace surveil::sim
