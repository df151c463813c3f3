#ifndef RESKIT_REPORT_HPP
#define RESKIT_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reskit/events.hpp"
#include "reskit/fitting.hpp"
#include "reskit/gof.hpp"
#include "reskit/variability.hpp"

namespace reskit {

// ordered category -> keywords matched as substrings of normalized causes
using WeatherCategoryMap = std::vector<std::pair<std::string, std::vector<std::string>>>;
WeatherCategoryMap default_weather_categories();

struct RunConfig {
  std::string input_path;
  CsvSchema schema;
  int min_n = 10;
  bool weather_only = false;
  std::vector<double> x_grid = {50.0, 90.0, 95.0};
  double confidence = 0.10;
  GofOptions gof;
  WeatherCategoryMap weather_categories = default_weather_categories();
};

// Artifact set keyed by filename; map order fixes the write order, and a
// rerun with the same config and seeds is byte-identical.
struct PipelineResult {
  std::map<std::string, std::string> artifacts;
  std::vector<std::string> diagnostics;
};

// Rounding used at every emission point: durations 4 decimals, rates 3,
// p-values 4.
double round_to(double v, int digits);

// Named metric values for one event, in report order; undefined metrics stay
// empty and serialize as null / empty cells.
std::vector<std::pair<std::string, std::optional<double>>> metric_rows(
    EventView view, const FittedModels& fit, const std::vector<double>& x_grid);

std::string fits_to_json(const std::vector<ResilienceEvent>& events,
                         const std::vector<FittedModels>& fits);
std::string metrics_to_json(const std::vector<ResilienceEvent>& events,
                            const std::vector<FittedModels>& fits,
                            const std::vector<double>& x_grid);

std::vector<ResilienceEvent> load_events(const RunConfig& config, Dataset* dataset_out = nullptr);

PipelineResult run_extract(const RunConfig& config);
PipelineResult run_fit(const RunConfig& config);
PipelineResult run_metrics(const RunConfig& config);
PipelineResult run_gof(const RunConfig& config);
PipelineResult run_report(const RunConfig& config);
PipelineResult run_plotdata(const RunConfig& config);

struct VariabilityRow {
  int n = 0;
  double mu = 0.0;
  double sigma = 0.0;
};

// The half-width grid: one row per (n, mu, sigma), one column per metric.
std::string variability_table_csv(const std::vector<VariabilityRow>& rows, double confidence,
                                  const std::vector<double>& x_grid);

void write_artifacts(const PipelineResult& result, const std::string& out_dir);

}  // namespace reskit

#endif
