#include "reskit/events.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "json.hpp"
#include "reskit/time.hpp"

namespace reskit {

EventHours to_hours(const ResilienceEvent& event) {
  EventHours h;
  h.outages.reserve(event.outage_times.size());
  h.restores.reserve(event.restore_times.size());
  const double origin = event.outage_times.empty() ? 0.0 : event.outage_times.front();
  for (double t : event.outage_times) h.outages.push_back((t - origin) / 60.0);
  for (double t : event.restore_times) h.restores.push_back((t - origin) / 60.0);
  return h;
}

std::vector<OutageRecord> dedup_momentary(std::vector<OutageRecord> records, Minutes window) {
  std::vector<OutageRecord> kept;
  kept.reserve(records.size());
  bool have_anchor = false;
  Minutes anchor = 0;  // start of the last retained momentary outage
  for (auto& rec : records) {
    if (rec.momentary()) {
      if (have_anchor && rec.outage_start - anchor <= window) continue;
      have_anchor = true;
      anchor = rec.outage_start;
    }
    kept.push_back(std::move(rec));
  }
  return kept;
}

namespace {

bool record_order(const OutageRecord* a, const OutageRecord* b) {
  if (a->outage_start != b->outage_start) return a->outage_start < b->outage_start;
  return a->record_id < b->record_id;
}

}  // namespace

std::vector<ResilienceEvent> extract_events(const Dataset& dataset, const ExtractOptions& opts) {
  // Per-element dedup of momentary repeats first.
  std::map<std::string, std::vector<OutageRecord>> by_element;
  for (const auto& rec : dataset.records) by_element[rec.element_id].push_back(rec);

  std::map<std::string, std::vector<OutageRecord>> by_interconnection;
  for (auto& [element, recs] : by_element) {
    std::sort(recs.begin(), recs.end(), [](const OutageRecord& a, const OutageRecord& b) {
      if (a.outage_start != b.outage_start) return a.outage_start < b.outage_start;
      return a.record_id < b.record_id;
    });
    for (auto& rec : dedup_momentary(std::move(recs)))
      by_interconnection[rec.interconnection].push_back(std::move(rec));
  }

  std::vector<ResilienceEvent> events;
  for (auto& [interconnection, recs] : by_interconnection) {
    std::vector<const OutageRecord*> sorted;
    sorted.reserve(recs.size());
    for (const auto& r : recs) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), record_order);

    std::vector<std::vector<const OutageRecord*>> groups;
    for (const OutageRecord* rec : sorted) {
      bool joined = false;
      if (!groups.empty()) {
        auto& current = groups.back();
        // (a) starts within the start window of any member; since members
        // are in start order the latest member start is the binding one.
        if (rec->outage_start - current.back()->outage_start <= opts.start_window) {
          joined = true;
        } else {
          // (b) overlaps a member whose start is within the overlap window.
          for (auto it = current.rbegin(); it != current.rend(); ++it) {
            const OutageRecord* m = *it;
            if (rec->outage_start - m->outage_start > opts.overlap_window) break;
            if (m->restore_time >= rec->outage_start) {
              joined = true;
              break;
            }
          }
        }
        if (joined) current.push_back(rec);
      }
      if (!joined) groups.push_back({rec});
    }

    int seq = 0;
    for (auto& group : groups) {
      ResilienceEvent ev;
      char id[64];
      std::snprintf(id, sizeof id, "%s-%s-%04d", opts.event_id_prefix.c_str(),
                    interconnection.c_str(), seq++);
      ev.event_id = id;
      ev.interconnection = interconnection;
      for (const OutageRecord* rec : group) {
        ev.outage_times.push_back(static_cast<double>(rec->outage_start));
        ev.restore_times.push_back(static_cast<double>(rec->restore_time));
        ev.member_record_ids.push_back(rec->record_id);
        for (const std::string* cause :
             {&rec->initiating_cause, rec->sustained_cause ? &*rec->sustained_cause : nullptr}) {
          if (!cause) continue;
          ev.cause_codes.push_back(*cause);
          if (is_weather_cause(*cause)) {
            ev.weather_related = true;
            ev.weather_codes_present.insert(*cause);
          }
        }
      }
      std::sort(ev.outage_times.begin(), ev.outage_times.end());
      std::sort(ev.restore_times.begin(), ev.restore_times.end());
      events.push_back(std::move(ev));
    }
  }
  return events;
}

std::vector<ResilienceEvent> filter_events(std::vector<ResilienceEvent> events, int min_n,
                                           bool weather_only) {
  std::erase_if(events, [&](const ResilienceEvent& ev) {
    return ev.n() < min_n || (weather_only && !ev.weather_related);
  });
  return events;
}

std::string events_to_json(const std::vector<ResilienceEvent>& events) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& ev : events) {
    nlohmann::ordered_json j;
    j["event_id"] = ev.event_id;
    j["interconnection"] = ev.interconnection;
    j["n"] = ev.n();
    j["weather_related"] = ev.weather_related;
    auto times = [](const std::vector<double>& ts) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (double t : ts) a.push_back(format_timestamp(t));
      return a;
    };
    j["outage_times"] = times(ev.outage_times);
    j["restore_times"] = times(ev.restore_times);
    j["member_record_ids"] = ev.member_record_ids;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace reskit
