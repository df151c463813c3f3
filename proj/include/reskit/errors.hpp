#ifndef RESKIT_ERRORS_HPP
#define RESKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reskit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ingest
struct FileNotFound : Error { using Error::Error; };
struct HeaderMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };  // fatal row in strict mode

// fitting / metrics
struct DegenerateOutageWindow : Error { using Error::Error; };
struct NoPositiveRestores : Error { using Error::Error; };
struct SigmaUndefined : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct OutOfQuantileRange : Error { using Error::Error; };

// gof / variability / simulate
struct TooFewPoints : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NumericalFailure : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct MetricUndefined : Error { using Error::Error; };

}  // namespace reskit

#endif
