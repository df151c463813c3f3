// reskit: turns transmission outage records into resilience events, fits the
// outage/restore process models, and reports duration metrics with their
// statistical variability.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "reskit/errors.hpp"
#include "reskit/report.hpp"
#include "reskit/simulate.hpp"

namespace {

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("RESKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring unparseable RESKIT_SEED\n";
    }
  }
  return fallback;
}

void emit(const reskit::PipelineResult& result, const std::string& out_dir) {
  reskit::write_artifacts(result, out_dir);
  for (const auto& d : result.diagnostics) std::cerr << d << '\n';
}

reskit::WeatherCategoryMap load_weather_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw reskit::FileNotFound("cannot open weather map " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  reskit::WeatherCategoryMap map;
  for (const auto& [category, keywords] : j.items()) {
    std::vector<std::string> kws;
    for (const auto& kw : keywords) kws.push_back(kw.get<std::string>());
    map.emplace_back(category, std::move(kws));
  }
  return map;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transmission resilience event analytics"};
  app.require_subcommand(1);
  app.fallthrough();

  reskit::RunConfig config;
  std::string out_dir = "reskit_out";
  std::string gof_method = "bootstrap";
  std::string weather_map_path;
  std::uint64_t seed = seed_from_env_or(0);

  app.add_option("--input", config.input_path, "input outage CSV");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--min-n", config.min_n, "minimum outages per event")->capture_default_str();
  app.add_flag("--weather-only", config.weather_only, "keep only weather-related events");
  app.add_option("--confidence", config.confidence, "c for 100(1-c)% intervals")
      ->capture_default_str();
  app.add_option("--seed", seed, "RNG seed (RESKIT_SEED env is the fallback)");
  app.add_option("--gof-method", gof_method, "bootstrap|asymptotic")->capture_default_str();
  app.add_option("--gof-reps", config.gof.bootstrap_reps, "bootstrap replicates")
      ->capture_default_str();
  app.add_option("--x-grid", config.x_grid, "quantile percents")->delimiter(',');
  app.add_option("--map-record-id", config.schema.record_id, "header for record_id");
  app.add_option("--map-element-id", config.schema.element_id, "header for element_id");
  app.add_option("--map-element-type", config.schema.element_type, "header for element_type");
  app.add_option("--map-interconnection", config.schema.interconnection,
                 "header for interconnection");
  app.add_option("--map-outage-start", config.schema.outage_start, "header for outage_start");
  app.add_option("--map-restore-time", config.schema.restore_time, "header for restore_time");
  app.add_option("--map-initiating-cause", config.schema.initiating_cause,
                 "header for initiating_cause");
  app.add_option("--map-sustained-cause", config.schema.sustained_cause,
                 "header for sustained_cause");
  app.add_option("--weather-map", weather_map_path,
                 "JSON file of weather category -> keyword list");

  auto* extract = app.add_subcommand("extract", "group records into resilience events");
  auto* fit = app.add_subcommand("fit", "fit outage and restore models per event");
  auto* metrics = app.add_subcommand("metrics", "duration metrics per event");
  auto* gof = app.add_subcommand("gof", "goodness-of-fit tests and pooled samples");
  auto* report = app.add_subcommand("report", "summary tables by interconnection and weather");
  auto* plotdata = app.add_subcommand("plotdata", "step and mean-curve CSVs per event");

  auto* variability = app.add_subcommand("variability", "confidence-interval machinery");
  auto* vtable = variability->add_subcommand("table", "half-width grid for (n, mu, sigma) rows");
  std::vector<std::string> row_specs;
  vtable->add_option("--rows", row_specs,
                     "rows as n:mu:sigma (default: a grid of typical fitted values)")
      ->delimiter(',');

  auto* simulate = app.add_subcommand("simulate", "generate synthetic events");
  reskit::SimSpec sim;
  int sim_events = 1;
  std::string sim_format = "csv";
  std::string sim_model = "lognormal";
  simulate->add_option("--n", sim.n, "outages per event")->capture_default_str();
  simulate->add_option("--z", sim.z, "restores coincident with r_1")->capture_default_str();
  simulate->add_option("--window", sim.outage_window_hours, "outage window, hours")
      ->capture_default_str();
  simulate->add_option("--mu", sim.mu, "lognormal mu")->capture_default_str();
  simulate->add_option("--sigma", sim.sigma, "lognormal sigma")->capture_default_str();
  simulate->add_option("--tau", sim.tau, "exponential time constant, hours")
      ->capture_default_str();
  simulate->add_option("--model", sim_model, "lognormal|exponential")->capture_default_str();
  simulate->add_option("--r1-offset", sim.r1_offset_hours, "time to first restore, hours")
      ->capture_default_str();
  simulate->add_option("--events", sim_events, "number of events")->capture_default_str();
  simulate->add_option("--format", sim_format, "csv|json")->capture_default_str();
  simulate->add_flag("--quantize", sim.quantize_minutes, "round times to whole minutes");

  CLI11_PARSE(app, argc, argv);

  config.gof.seed = seed;
  sim.seed = seed;
  try {
    if (gof_method == "asymptotic") config.gof.method = reskit::PValueMethod::Asymptotic;
    else if (gof_method == "bootstrap") config.gof.method = reskit::PValueMethod::Bootstrap;
    else throw reskit::Error("unknown --gof-method '" + gof_method + "'");
    if (!weather_map_path.empty()) config.weather_categories = load_weather_map(weather_map_path);

    if (extract->parsed()) emit(reskit::run_extract(config), out_dir);
    if (fit->parsed()) emit(reskit::run_fit(config), out_dir);
    if (metrics->parsed()) emit(reskit::run_metrics(config), out_dir);
    if (gof->parsed()) emit(reskit::run_gof(config), out_dir);
    if (report->parsed()) emit(reskit::run_report(config), out_dir);
    if (plotdata->parsed()) emit(reskit::run_plotdata(config), out_dir);

    if (variability->parsed()) {
      std::vector<reskit::VariabilityRow> rows;
      for (const auto& spec : row_specs) {
        reskit::VariabilityRow row;
        if (std::sscanf(spec.c_str(), "%d:%lf:%lf", &row.n, &row.mu, &row.sigma) != 3)
          throw reskit::Error("row spec must be n:mu:sigma, got '" + spec + "'");
        rows.push_back(row);
      }
      if (rows.empty())
        rows = {{10, 1.18, 1.72}, {20, 1.60, 1.58}, {50, 2.20, 1.35},
                {100, 2.52, 1.35}, {200, 3.15, 1.33}};
      reskit::PipelineResult result;
      result.artifacts["variability_table.csv"] =
          reskit::variability_table_csv(rows, config.confidence, config.x_grid);
      emit(result, out_dir);
    }

    if (simulate->parsed()) {
      sim.restore_model = sim_model == "exponential" ? reskit::RestoreModel::Exponential
                                                     : reskit::RestoreModel::Lognormal;
      if (sim_format == "csv" && !sim.quantize_minutes) sim.quantize_minutes = true;
      const auto events = reskit::generate_events(sim, sim_events);
      reskit::PipelineResult result;
      if (sim_format == "json") {
        result.artifacts["simulated_events.json"] = reskit::events_to_json(events);
      } else {
        std::ostringstream os;
        reskit::write_dataset(reskit::to_dataset(events), os);
        result.artifacts["simulated_records.csv"] = os.str();
      }
      emit(result, out_dir);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
