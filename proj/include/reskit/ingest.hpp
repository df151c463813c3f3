#ifndef RESKIT_INGEST_HPP
#define RESKIT_INGEST_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "reskit/time.hpp"

namespace reskit {

enum class ElementType { AcCircuit, Transformer, DcCircuit, BackToBackConverter, Other };

std::string_view to_string(ElementType type);
ElementType element_type_from_string(std::string_view text, bool* known = nullptr);

// One element outage as reported: the unit of raw data.
struct OutageRecord {
  std::string record_id;
  std::string element_id;
  ElementType element_type = ElementType::Other;
  std::string interconnection;
  Minutes outage_start = 0;
  Minutes restore_time = 0;
  std::string initiating_cause;
  std::optional<std::string> sustained_cause;

  Minutes duration_minutes() const { return restore_time - outage_start; }
  bool momentary() const { return restore_time == outage_start; }
};

struct ParseWarning {
  int line = 0;
  std::string message;
};

struct Dataset {
  std::vector<OutageRecord> records;
  std::string source_path;
  std::vector<ParseWarning> warnings;
};

// Canonical column names with optional per-dataset renames. An empty mapping
// entry means the canonical name itself appears in the header.
struct CsvSchema {
  std::string record_id = "record_id";
  std::string element_id = "element_id";
  std::string element_type = "element_type";
  std::string interconnection = "interconnection";
  std::string outage_start = "outage_start";
  std::string restore_time = "restore_time";
  std::string initiating_cause = "initiating_cause";
  std::string sustained_cause = "sustained_cause";  // optional column
};

// Parses outage records. In lenient mode (default) malformed rows are skipped
// with a warning; in strict mode the first malformed row throws ParseError.
Dataset parse_csv(const std::string& path, const CsvSchema& schema = {}, bool strict = false);
Dataset parse_csv_stream(std::istream& in, const std::string& source_name,
                         const CsvSchema& schema = {}, bool strict = false);

// Canonical-schema writer; parse_csv_stream(write_dataset(d)) round-trips.
void write_dataset(const Dataset& dataset, std::ostream& out);

// True iff the code names one of the weather-related causes
// (lightning, weather excluding lightning, fire, environmental).
bool is_weather_cause(std::string_view code);

void print_warnings(const Dataset& dataset, std::ostream& diag);

}  // namespace reskit

#endif
