#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vmcsim {

enum class EventKind { kPlacement, kMigration, kPowerOn, kPowerOff, kSlaViolation };

// One simulation event. Placements happen before interval 0; migrations and
// the power transitions they cause take effect at the END of interval t.
struct Event {
  int t = 0;
  EventKind kind = EventKind::kPlacement;
  int vm = -1;
  int host = -1;
  int from = -1;
  int to = -1;
  double requested_mips = 0;  // SlaViolation: host demand sum
  double allocated_mips = 0;  // SlaViolation: host capacity

  bool operator==(const Event&) const = default;
};

const char* event_kind_name(EventKind kind);

struct EventLog {
  std::vector<Event> events;

  void append(const Event& e) { events.push_back(e); }
  // Line-delimited JSON, one event per line.
  void write_jsonl(std::ostream& out) const;
  static EventLog read_jsonl(std::istream& in);
};

}  // namespace vmcsim
