#include "reskit/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "reskit/errors.hpp"
#include "reskit/metrics.hpp"
#include "reskit/processes.hpp"

namespace reskit {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string fmt(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int digits_for(const std::string& metric) {
  if (metric == "lambda_O") return 3;
  if (metric == "n" || metric == "z") return 0;
  return 4;
}

struct Stats {
  std::optional<double> mean, sd, median;
};

Stats summarize(std::vector<double> values) {
  Stats s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  s.mean = mean;
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    s.sd = std::sqrt(ss / (n - 1.0));
  }
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size();
  s.median = m % 2 == 1 ? values[m / 2] : 0.5 * (values[m / 2 - 1] + values[m / 2]);
  return s;
}

}  // namespace

double round_to(double v, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(v * scale) / scale;
}

WeatherCategoryMap default_weather_categories() {
  return {
      {"lightning", {"lightning"}},
      {"weather excluding lightning", {"weather excluding lightning"}},
      {"fire", {"fire"}},
      {"environmental", {"environmental"}},
      {"hurricane", {"hurricane"}},
      {"tornado", {"tornado"}},
      {"winter", {"winter", "ice storm", "snow", "blizzard"}},
  };
}

std::vector<std::pair<std::string, std::optional<double>>> metric_rows(
    EventView view, const FittedModels& fit, const std::vector<double>& x_grid) {
  std::vector<std::pair<std::string, std::optional<double>>> rows;
  auto push = [&](const std::string& name, std::optional<double> v) { rows.emplace_back(name, v); };
  auto guarded = [&](auto&& compute) -> std::optional<double> {
    try {
      return compute();
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  const StraightforwardMetrics sm = straightforward_metrics(view);
  push("n", view.n());
  push("z", fit.z);
  push("D_O", sm.d_o);
  push("lambda_O", fit.lambda_o);
  push("D_r1", sm.d_r1);
  push("D_E", sm.d_e);
  push("D_n", sm.d_n);
  push("D_n-1", guarded([&] { return restore_time_k(view, view.n() - 1); }));
  push("D_95%_ge", guarded([&] { return quantile_ge(view, 95.0); }));
  for (double x : x_grid)
    push("D_" + fmt(x, x == std::floor(x) ? 0 : 1) + "%",
         guarded([&] { return quantile_interp(view, x); }));
  push("mu", fit.mu);
  push("sigma", fit.sigma);
  push("D_GM", guarded([&] { return geometric_mean_restore(fit); }));
  for (double x : x_grid)
    push("D_" + fmt(x, x == std::floor(x) ? 0 : 1) + "%_ln",
         guarded([&] { return quantile_lognormal(fit, x); }));
  push("tau", fit.tau);
  for (double x : x_grid)
    push("D_" + fmt(x, x == std::floor(x) ? 0 : 1) + "%_exp",
         guarded([&] { return quantile_exponential(fit, x); }));
  return rows;
}

std::string fits_to_json(const std::vector<ResilienceEvent>& events,
                         const std::vector<FittedModels>& fits) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < events.size(); ++i) {
    const FittedModels& f = fits[i];
    nlohmann::ordered_json j;
    j["event_id"] = events[i].event_id;
    j["n"] = f.n;
    j["z"] = f.z;
    auto set = [&](const char* key, const std::optional<double>& v, int digits) {
      if (v) j[key] = round_to(*v, digits);
      else j[key] = nullptr;
    };
    set("lambda_O", f.lambda_o, 3);
    set("mu", f.mu, 4);
    set("sigma", f.sigma, 4);
    set("tau", f.tau, 4);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string metrics_to_json(const std::vector<ResilienceEvent>& events,
                            const std::vector<FittedModels>& fits,
                            const std::vector<double>& x_grid) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < events.size(); ++i) {
    const EventHours hours = to_hours(events[i]);
    nlohmann::ordered_json j;
    j["event_id"] = events[i].event_id;
    j["interconnection"] = events[i].interconnection;
    j["weather_related"] = events[i].weather_related;
    for (const auto& [name, value] : metric_rows(EventView(hours), fits[i], x_grid)) {
      if (!value) j[name] = nullptr;
      else if (digits_for(name) == 0) j[name] = static_cast<long long>(std::llround(*value));
      else j[name] = round_to(*value, digits_for(name));
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<ResilienceEvent> load_events(const RunConfig& config, Dataset* dataset_out) {
  Dataset ds = parse_csv(config.input_path, config.schema);
  std::vector<ResilienceEvent> events =
      filter_events(extract_events(ds), config.min_n, config.weather_only);
  std::sort(events.begin(), events.end(),
            [](const ResilienceEvent& a, const ResilienceEvent& b) { return a.event_id < b.event_id; });
  if (dataset_out) *dataset_out = std::move(ds);
  return events;
}

namespace {

std::vector<FittedModels> fit_all(const std::vector<ResilienceEvent>& events) {
  std::vector<FittedModels> fits;
  fits.reserve(events.size());
  for (const auto& ev : events) fits.push_back(fit_models(EventView(to_hours(ev))));
  return fits;
}

void add_dataset_diagnostics(const Dataset& ds, PipelineResult& out) {
  for (const auto& w : ds.warnings)
    out.diagnostics.push_back("line " + std::to_string(w.line) + ": " + w.message);
}

}  // namespace

PipelineResult run_extract(const RunConfig& config) {
  PipelineResult out;
  Dataset ds;
  const auto events = load_events(config, &ds);
  add_dataset_diagnostics(ds, out);
  out.artifacts["events.json"] = events_to_json(events);
  return out;
}

PipelineResult run_fit(const RunConfig& config) {
  PipelineResult out;
  Dataset ds;
  const auto events = load_events(config, &ds);
  add_dataset_diagnostics(ds, out);
  out.artifacts["fits.json"] = fits_to_json(events, fit_all(events));
  return out;
}

PipelineResult run_metrics(const RunConfig& config) {
  PipelineResult out;
  Dataset ds;
  const auto events = load_events(config, &ds);
  add_dataset_diagnostics(ds, out);
  out.artifacts["metrics.json"] = metrics_to_json(events, fit_all(events), config.x_grid);
  return out;
}

PipelineResult run_gof(const RunConfig& config) {
  PipelineResult out;
  Dataset ds;
  const auto events = load_events(config, &ds);
  add_dataset_diagnostics(ds, out);
  const auto fits = fit_all(events);

  std::ostringstream csv;
  csv << "event_id,model,test,statistic,p_value,method,satisfied\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    const EventHours hours = to_hours(events[i]);
    const EventView view(hours);
    auto emit = [&](auto&& run) {
      try {
        GofResult r = run();
        r.event_id = events[i].event_id;
        csv << r.event_id << ',' << to_string(r.model) << ',' << to_string(r.test) << ','
            << fmt(r.statistic, 4) << ',' << fmt(r.p_value, 4) << ',' << to_string(r.method) << ','
            << (r.satisfied ? "true" : "false") << '\n';
      } catch (const Error& e) {
        out.diagnostics.push_back(events[i].event_id + ": gof skipped: " + e.what());
      }
    };
    emit([&] { return test_uniform_outages(view, config.gof); });
    emit([&] { return test_lognormal_restores(view, fits[i], config.gof); });
    emit([&] { return test_exponential_restores(view, fits[i], config.gof); });
  }
  out.artifacts["gof.csv"] = csv.str();

  const std::pair<PooledKind, std::string> kinds[] = {
      {PooledKind::OutageUniform, "pooled_uniform_outages.csv"},
      {PooledKind::RestoreLognormal, "pooled_lognormal_restores.csv"},
      {PooledKind::RestoreExponential, "pooled_exponential_restores.csv"},
  };
  for (const auto& [kind, filename] : kinds) {
    std::vector<std::string> warnings;
    std::ostringstream pooled;
    pooled << "normalized_sample\n";
    for (double v : pooled_normalized_samples(events, fits, kind, &warnings))
      pooled << fmt(v, 6) << '\n';
    out.artifacts[filename] = pooled.str();
    for (auto& w : warnings) out.diagnostics.push_back(std::move(w));
  }
  return out;
}

PipelineResult run_report(const RunConfig& config) {
  PipelineResult out;
  Dataset ds;
  const auto events = load_events(config, &ds);
  add_dataset_diagnostics(ds, out);
  const auto fits = fit_all(events);

  out.artifacts["metrics.json"] = metrics_to_json(events, fits, config.x_grid);

  // Collect named metric values per event once; aggregation reuses them so
  // summaries cannot drift from the per-event file.
  std::vector<std::vector<std::pair<std::string, std::optional<double>>>> rows;
  rows.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i)
    rows.push_back(metric_rows(EventView(to_hours(events[i])), fits[i], config.x_grid));
  const std::vector<std::pair<std::string, std::optional<double>>> names =
      rows.empty() ? std::vector<std::pair<std::string, std::optional<double>>>{} : rows.front();

  // Per-interconnection summary: mean, SD, median of each metric.
  std::vector<std::string> interconnections;
  for (const auto& ev : events)
    if (std::find(interconnections.begin(), interconnections.end(), ev.interconnection) ==
        interconnections.end())
      interconnections.push_back(ev.interconnection);
  std::sort(interconnections.begin(), interconnections.end());

  std::ostringstream s;
  s << "interconnection,events,metric,mean,sd,median\n";
  for (const auto& ic : interconnections) {
    std::size_t count = 0;
    for (const auto& ev : events) count += ev.interconnection == ic;
    for (std::size_t mi = 0; mi < names.size(); ++mi) {
      std::vector<double> vals;
      for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i].interconnection == ic && rows[i][mi].second)
          vals.push_back(*rows[i][mi].second);
      const Stats st = summarize(std::move(vals));
      const int digits = digits_for(names[mi].first);
      s << ic << ',' << count << ',' << names[mi].first << ','
        << (st.mean ? fmt(*st.mean, digits) : "") << ',' << (st.sd ? fmt(*st.sd, digits) : "")
        << ',' << (st.median ? fmt(*st.median, digits) : "") << '\n';
    }
  }
  out.artifacts["summary_by_interconnection.csv"] = s.str();

  // Median metrics by dominant weather category.
  auto dominant_category = [&](const ResilienceEvent& ev) -> std::string {
    std::string best = "none";
    int best_count = 0;
    for (const auto& [category, keywords] : config.weather_categories) {
      int count = 0;
      for (const auto& cause : ev.cause_codes) {
        const std::string c = lower(cause);
        for (const auto& kw : keywords)
          if (c.find(kw) != std::string::npos) {
            ++count;
            break;
          }
      }
      if (count > best_count) {
        best = category;
        best_count = count;
      }
    }
    return best;
  };

  std::vector<std::string> categories;
  std::vector<std::string> event_category(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    event_category[i] = dominant_category(events[i]);
    if (std::find(categories.begin(), categories.end(), event_category[i]) == categories.end())
      categories.push_back(event_category[i]);
  }
  std::sort(categories.begin(), categories.end());

  std::ostringstream w;
  w << "weather_type,events,metric,median\n";
  for (const auto& cat : categories) {
    std::size_t count = 0;
    for (const auto& c : event_category) count += c == cat;
    for (std::size_t mi = 0; mi < names.size(); ++mi) {
      std::vector<double> vals;
      for (std::size_t i = 0; i < events.size(); ++i)
        if (event_category[i] == cat && rows[i][mi].second) vals.push_back(*rows[i][mi].second);
      const Stats st = summarize(std::move(vals));
      w << cat << ',' << count << ',' << names[mi].first << ','
        << (st.median ? fmt(*st.median, digits_for(names[mi].first)) : "") << '\n';
    }
  }
  out.artifacts["medians_by_weather_type.csv"] = w.str();
  return out;
}

PipelineResult run_plotdata(const RunConfig& config) {
  PipelineResult out;
  Dataset ds;
  const auto events = load_events(config, &ds);
  add_dataset_diagnostics(ds, out);

  for (const auto& ev : events) {
    const EventHours hours = to_hours(ev);
    const EventView view(hours);
    const FittedModels fit = fit_models(view);

    auto step_csv = [&](const StepProcess& p) {
      std::ostringstream os;
      p.write_plot_csv(os);
      return os.str();
    };
    out.artifacts[ev.event_id + "_outage.csv"] = step_csv(outage_process(ev));
    out.artifacts[ev.event_id + "_restore.csv"] = step_csv(restore_process(ev));
    out.artifacts[ev.event_id + "_performance.csv"] = step_csv(performance_curve(ev));

    auto curve_csv = [&](double t0, double t1, auto&& f) {
      std::ostringstream os;
      os << "time_hours,value\n";
      for (int i = 0; i < 200; ++i) {
        // endpoints exact so the curve domain is never overshot by rounding
        const double t = i == 0 ? t0 : (i == 199 ? t1 : t0 + (t1 - t0) * i / 199.0);
        os << fmt(t, 4) << ',' << fmt(f(t), 4) << '\n';
      }
      return os.str();
    };

    if (fit.lambda_o) {
      out.artifacts[ev.event_id + "_mean_outage.csv"] =
          curve_csv(view.outages.front(), view.outages.back(),
                    [&](double t) { return mean_outage_curve(fit, view, t); });
    } else {
      out.diagnostics.push_back(ev.event_id + ": outage rate undefined, step data only");
    }
    if (fit.mu && fit.sigma && fit.tau) {
      const double r1 = view.restores.front();
      const double cap = std::min(r1 + 4.0 * std::exp(*fit.mu + *fit.sigma * *fit.sigma),
                                  view.restores.back());
      const double t1 = std::max(cap, r1);
      out.artifacts[ev.event_id + "_mean_restore_ln.csv"] = curve_csv(r1, t1, [&](double t) {
        return mean_restore_curve(fit, view, t, RestoreModel::Lognormal);
      });
      out.artifacts[ev.event_id + "_mean_restore_exp.csv"] = curve_csv(r1, t1, [&](double t) {
        return mean_restore_curve(fit, view, t, RestoreModel::Exponential);
      });
    } else {
      out.diagnostics.push_back(ev.event_id + ": restore fit undefined, step data only");
    }
  }
  return out;
}

std::string variability_table_csv(const std::vector<VariabilityRow>& rows, double confidence,
                                  const std::vector<double>& x_grid) {
  std::ostringstream os;
  os << "n,mu,sigma,D_GM,D_50%,tau";
  for (double x : x_grid)
    if (x != 50.0) os << ",D_" << fmt(x, x == std::floor(x) ? 0 : 1) << "%_ln,D_"
                      << fmt(x, x == std::floor(x) ? 0 : 1) << "%";
  os << ",D_n-1,D_n\n";
  for (const auto& row : rows) {
    VariabilityQuery q{row.n, row.mu, row.sigma, confidence};
    os << row.n << ',' << fmt(row.mu, 4) << ',' << fmt(row.sigma, 4);
    os << ',' << fmt(ci_dgm(q).half_width, 4);
    os << ',' << fmt(ci_dx_interp(q, 50.0).half_width, 4);
    os << ',' << fmt(ci_tau(q).half_width, 4);
    for (double x : x_grid)
      if (x != 50.0)
        os << ',' << fmt(ci_dx_ln(q, x).half_width, 4) << ','
           << fmt(ci_dx_interp(q, x).half_width, 4);
    os << ',' << fmt(ci_order_statistic(q, row.n - 1).half_width, 4) << ','
       << fmt(ci_order_statistic(q, row.n).half_width, 4) << '\n';
  }
  return os.str();
}

void write_artifacts(const PipelineResult& result, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const auto& [name, content] : result.artifacts) {
    std::ofstream f(std::filesystem::path(out_dir) / name, std::ios::binary);
    if (!f) throw Error("cannot write " + name + " under " + out_dir);
    f << content;
  }
}

}  // namespace reskit
