#ifndef RESKIT_EVENTS_HPP
#define RESKIT_EVENTS_HPP

#include <set>
#include <span>
#include <string>
#include <vector>

#include "reskit/ingest.hpp"

namespace reskit {

// A resilience event: outage times and restore times, each sorted
// independently, so restore k is generally not the restore of outage k.
// Times are minutes since the epoch; parsed data keeps them integral,
// simulated events may carry fractional minutes.
struct ResilienceEvent {
  std::string event_id;
  std::string interconnection;
  std::vector<double> outage_times;
  std::vector<double> restore_times;
  std::vector<std::string> member_record_ids;
  bool weather_related = false;
  std::set<std::string> weather_codes_present;
  std::vector<std::string> cause_codes;  // every member cause, for report bucketing

  int n() const { return static_cast<int>(outage_times.size()); }
};

// Hour-axis view consumed by fitting and metrics. Offsets are taken in
// minutes first so that minute-resolution data stays exact, then divided
// by 60 once.
struct EventHours {
  std::vector<double> outages;   // sorted, relative to o_1 (outages.front() == 0)
  std::vector<double> restores;  // sorted, same origin
};

EventHours to_hours(const ResilienceEvent& event);

struct EventView {
  std::span<const double> outages;
  std::span<const double> restores;

  EventView() = default;
  EventView(std::span<const double> o, std::span<const double> r) : outages(o), restores(r) {}
  EventView(const EventHours& h) : outages(h.outages), restores(h.restores) {}

  int n() const { return static_cast<int>(outages.size()); }
};

// Grouping parameters from the extraction rule: join on start within 5
// minutes of any member, or duration overlap with a member whose start is
// within one hour. Both bounds inclusive.
struct ExtractOptions {
  Minutes start_window = 5;
  Minutes overlap_window = 60;
  std::string event_id_prefix = "E";
};

// Drops a momentary outage that starts within 5 minutes of the previously
// retained momentary outage of the same element. Input must share one
// element_id and be sorted by outage_start.
std::vector<OutageRecord> dedup_momentary(std::vector<OutageRecord> records_of_one_element,
                                          Minutes window = 5);

// Splits a dataset into resilience events, per interconnection, after
// momentary deduplication. Deterministic: ties in outage_start break on
// record_id.
std::vector<ResilienceEvent> extract_events(const Dataset& dataset, const ExtractOptions& opts = {});

std::vector<ResilienceEvent> filter_events(std::vector<ResilienceEvent> events, int min_n,
                                           bool weather_only);

std::string events_to_json(const std::vector<ResilienceEvent>& events);

}  // namespace reskit

#endif
