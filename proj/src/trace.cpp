#include "surveil/trace.hpp"

#include <stdexcept>

namespace surveil::sim {

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::detect: return "detect";
    case EventKind::dispatch: return "dispatch";
    case EventKind::enqueue: return "enqueue";
    case EventKind::infer_start: return "infer_start";
    case EventKind::infer_end: return "infer_end";
    case EventKind::upload_start: return "upload_start";
    case EventKind::upload_end: return "upload_end";
    case EventKind::verdict: return "verdict";
  }
  throw std::logic_error("unknown event kind");
}

EventKind kind_from_name(const std::string& name) {
  if (name == "detect") return EventKind::detect;
  if (name == "dispatch") return EventKind::dispatch;
  if (name == "enqueue") return EventKind::enqueue;
  if (name == "infer_start") return EventKind::infer_start;
  if (name == "infer_end") return EventKind::infer_end;
  if (name == "upload_start") return EventKind::upload_start;
  if (name == "upload_end") return EventKind::upload_end;
  if (name == "verdict") return EventKind::verdict;
  throw std::runtime_error("trace: unknown event kind '" + name + "'");
}

void write_jsonl(std::ostream& out, const EventTrace& trace) {
  for (const TraceRecord& r : trace) {
    nlohmann::ordered_json j;
    j["t"] = r.t;
    j["kind"] = kind_name(r.kind);
    j["pkg"] = r.pkg;
    j["dev"] = r.dev;
    j["extra"] = r.extra;
    out << j.dump() << "\n";
  }
}

EventTrace read_jsonl(std::istream& in) {
  EventTrace trace;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error("trace: parse error at line " + std::to_string(line_no) +
                               ": " + e.what());
    }
    TraceRecord r;
    r.t = j.at("t").get<double>();
    r.kind = kind_from_name(j.at("kind").get<std::string>());
    r.pkg = j.at("pkg").get<std::uint64_t>();
    r.dev = j.at("dev").get<int>();
    r.extra = j.at("extra");
    trace.push_back(std::move(r));
  }
  return trace;
}

}  // namespace surveil::sim
