#include "vmcsim/events.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace vmcsim {

const char* event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::kPlacement: return "placement";
    case EventKind::kMigration: return "migration";
    case EventKind::kPowerOn: return "power_on";
    case EventKind::kPowerOff: return "power_off";
    case EventKind::kSlaViolation: return "sla_violation";
  }
  return "?";
}

namespace {

EventKind kind_from_name(const std::string& name) {
  if (name == "placement") return EventKind::kPlacement;
  if (name == "migration") return EventKind::kMigration;
  if (name == "power_on") return EventKind::kPowerOn;
  if (name == "power_off") return EventKind::kPowerOff;
  if (name == "sla_violation") return EventKind::kSlaViolation;
  throw std::runtime_error("unknown event kind: " + name);
}

}  // namespace

void EventLog::write_jsonl(std::ostream& out) const {
  for (const Event& e : events) {
    nlohmann::json j;
    j["t"] = e.t;
    j["kind"] = event_kind_name(e.kind);
    switch (e.kind) {
      case EventKind::kPlacement:
        j["vm"] = e.vm;
        j["host"] = e.host;
        break;
      case EventKind::kMigration:
        j["vm"] = e.vm;
        j["from"] = e.from;
        j["to"] = e.to;
        break;
      case EventKind::kPowerOn:
      case EventKind::kPowerOff:
        j["host"] = e.host;
        break;
      case EventKind::kSlaViolation:
        j["host"] = e.host;
        j["requested"] = e.requested_mips;
        j["allocated"] = e.allocated_mips;
        break;
    }
    out << j.dump() << '\n';
  }
}

EventLog EventLog::read_jsonl(std::istream& in) {
  EventLog log;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    Event e;
    e.t = j.at("t").get<int>();
    e.kind = kind_from_name(j.at("kind").get<std::string>());
    if (j.contains("vm")) e.vm = j["vm"].get<int>();
    if (j.contains("host")) e.host = j["host"].get<int>();
    if (j.contains("from")) e.from = j["from"].get<int>();
    if (j.contains("to")) e.to = j["to"].get<int>();
    if (j.contains("requested")) e.requested_mips = j["requested"].get<double>();
    if (j.contains("allocated")) e.allocated_mips = j["allocated"].get<double>();
    log.events.push_back(e);
  }
  return log;
}

}  // namespace vmcsim
