#include "reskit/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "reskit/csv.hpp"
#include "reskit/errors.hpp"

namespace reskit {

namespace {

std::string normalize(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out(s.substr(b, e - b));
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(ElementType type) {
  switch (type) {
    case ElementType::AcCircuit: return "AC_CIRCUIT";
    case ElementType::Transformer: return "TRANSFORMER";
    case ElementType::DcCircuit: return "DC_CIRCUIT";
    case ElementType::BackToBackConverter: return "BACK_TO_BACK_CONVERTER";
    case ElementType::Other: return "OTHER";
  }
  return "OTHER";
}

ElementType element_type_from_string(std::string_view text, bool* known) {
  const std::string t = normalize(text);
  if (known) *known = true;
  if (t == "ac_circuit") return ElementType::AcCircuit;
  if (t == "transformer") return ElementType::Transformer;
  if (t == "dc_circuit") return ElementType::DcCircuit;
  if (t == "back_to_back_converter") return ElementType::BackToBackConverter;
  if (t == "other") return ElementType::Other;
  if (known) *known = false;
  return ElementType::Other;
}

bool is_weather_cause(std::string_view code) {
  const std::string c = normalize(code);
  return c == "lightning" || c == "weather excluding lightning" || c == "fire" ||
         c == "environmental";
}

Dataset parse_csv(const std::string& path, const CsvSchema& schema, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open " + path);
  return parse_csv_stream(in, path, schema, strict);
}

Dataset parse_csv_stream(std::istream& in, const std::string& source_name,
                         const CsvSchema& schema, bool strict) {
  Dataset ds;
  ds.source_path = source_name;

  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw HeaderMismatch(source_name + ": empty input, header row required");

  std::unordered_map<std::string, int> col;
  for (std::size_t i = 0; i < fields.size(); ++i) col[normalize(fields[i])] = static_cast<int>(i);

  auto require = [&](const std::string& name) {
    auto it = col.find(normalize(name));
    if (it == col.end())
      throw HeaderMismatch(source_name + ": required column '" + name + "' not found");
    return it->second;
  };
  const int c_id = require(schema.record_id);
  const int c_el = require(schema.element_id);
  const int c_ty = require(schema.element_type);
  const int c_ic = require(schema.interconnection);
  const int c_os = require(schema.outage_start);
  const int c_rt = require(schema.restore_time);
  const int c_cc = require(schema.initiating_cause);
  int c_sc = -1;
  if (auto it = col.find(normalize(schema.sustained_cause)); it != col.end()) c_sc = it->second;

  std::unordered_set<std::string> seen_ids;
  auto fail_row = [&](int line, const std::string& message) {
    if (strict) throw ParseError(source_name + " line " + std::to_string(line) + ": " + message);
    ds.warnings.push_back({line, message});
  };

  while (reader.next(fields)) {
    const int line = reader.record_line();
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank trailing line
    const int needed = std::max({c_id, c_el, c_ty, c_ic, c_os, c_rt, c_cc, c_sc});
    if (static_cast<int>(fields.size()) <= needed) {
      fail_row(line, "row has " + std::to_string(fields.size()) + " fields, expected at least " +
                         std::to_string(needed + 1));
      continue;
    }

    OutageRecord rec;
    rec.record_id = fields[c_id];
    rec.element_id = fields[c_el];
    rec.interconnection = fields[c_ic];
    rec.initiating_cause = fields[c_cc];
    if (c_sc >= 0 && !fields[c_sc].empty()) rec.sustained_cause = fields[c_sc];

    if (rec.record_id.empty()) {
      fail_row(line, "missing record_id");
      continue;
    }
    if (!seen_ids.insert(rec.record_id).second) {
      fail_row(line, "duplicate record_id '" + rec.record_id + "'");
      continue;
    }

    bool type_known = true;
    rec.element_type = element_type_from_string(fields[c_ty], &type_known);
    if (!type_known)
      ds.warnings.push_back({line, "unknown element_type '" + fields[c_ty] + "', using OTHER"});

    const auto start = parse_timestamp(fields[c_os]);
    if (!start) {
      fail_row(line, "unparseable outage_start '" + fields[c_os] + "'");
      seen_ids.erase(rec.record_id);
      continue;
    }
    if (fields[c_rt].empty()) {
      fail_row(line, "missing restore_time");
      seen_ids.erase(rec.record_id);
      continue;
    }
    const auto restore = parse_timestamp(fields[c_rt]);
    if (!restore) {
      fail_row(line, "unparseable restore_time '" + fields[c_rt] + "'");
      seen_ids.erase(rec.record_id);
      continue;
    }
    if (start->truncated_seconds || restore->truncated_seconds)
      ds.warnings.push_back({line, "sub-minute precision truncated to the minute"});

    rec.outage_start = start->minutes;
    rec.restore_time = restore->minutes;
    if (rec.restore_time < rec.outage_start) {
      fail_row(line, "restore_time precedes outage_start");
      seen_ids.erase(rec.record_id);
      continue;
    }
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

void write_dataset(const Dataset& dataset, std::ostream& out) {
  write_csv_row(out, {"record_id", "element_id", "element_type", "interconnection",
                      "outage_start", "restore_time", "initiating_cause", "sustained_cause"});
  for (const auto& r : dataset.records) {
    write_csv_row(out, {r.record_id, r.element_id, std::string(to_string(r.element_type)),
                        r.interconnection, format_timestamp(r.outage_start),
                        format_timestamp(r.restore_time), r.initiating_cause,
                        r.sustained_cause.value_or("")});
  }
}

void print_warnings(const Dataset& dataset, std::ostream& diag) {
  for (const auto& w : dataset.warnings)
    diag << "line " << w.line << ": " << w.message << '\n';
}

}  // namespace reskit
