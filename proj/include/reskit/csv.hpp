#ifndef RESKIT_CSV_HPP
#define RESKIT_CSV_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace reskit {

// RFC-4180 reader: comma-delimited, double-quote quoting, quoted fields may
// contain commas, quotes ("") and line breaks. Bare CR before LF is eaten.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Reads one record into `fields`. Returns false at end of input.
  bool next(std::vector<std::string>& fields);

  // 1-based line number on which the last record started.
  int record_line() const { return record_line_; }

 private:
  std::istream& in_;
  int line_ = 1;
  int record_line_ = 0;
};

std::string csv_escape(const std::string& field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace reskit

#endif
