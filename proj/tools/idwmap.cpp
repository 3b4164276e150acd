// Copyright 2026 The idwmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// idwmap command line: serve | validate | bench | export

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "idwmap/bench.hpp"
#include "idwmap/config.hpp"
#include "idwmap/error.hpp"
#include "idwmap/ingest.hpp"
#include "idwmap/service.hpp"
#include "idwmap/validate.hpp"
#include "idwmap/wire.hpp"

namespace {

int run_validate(const std::string& config_path, bool as_json) {
  using namespace idwmap;
  AppConfig config = load_config(config_path);
  Dataset data = load_dataset(config.dataset.path, config.dataset.format, config.schema_hints());
  const auto diagnostics = validate_config(config, data.schema(), &data);
  if (as_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& d : diagnostics) out.push_back(wire::to_json(d));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& d : diagnostics) {
      std::cout << to_string(d.severity) << " " << d.rule << " [" << d.location << "] " << d.message << "\n";
    }
    std::size_t errors = 0;
    for (const auto& d : diagnostics) errors += d.severity == Severity::error;
    std::cout << config_path << ": " << errors << " error(s), " << diagnostics.size() - errors
              << " warning(s), " << data.record_count() << " records\n";
  }
  return has_errors(diagnostics) ? 1 : 0;
}

int run_bench(std::size_t records, std::size_t dims, std::size_t iters, std::uint64_t seed) {
  idwmap::BenchOptions opts{records, dims, iters, seed};
  const auto report = idwmap::run_bench(opts);
  std::cout << std::fixed << std::setprecision(3);
  std::cout << "records        " << report.records << "\n"
            << "dimensions     " << report.dims << "\n"
            << "iterations     " << report.samples_ms.size() << "\n"
            << "generate_ms    " << report.generate_ms << "\n"
            << "build_ms       " << report.build_ms << "\n"
            << "median_ms      " << report.median_ms << "\n"
            << "p95_ms         " << report.p95_ms << "\n"
            << "max_ms         " << report.max_ms << "\n";
  return 0;
}

int run_export(const std::string& config_path, const std::string& out_path,
               const std::vector<std::string>& filters) {
  using namespace idwmap;
  auto app = load_app(config_path);
  Engine engine = app->pristine;
  for (const auto& f : filters) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidFilter, "--filter expects dim=<json>");
    const auto dim = app->index->find_dimension(f.substr(0, eq));
    if (!dim) throw Error(ErrorCode::UnknownDimension, "no dimension '" + f.substr(0, eq) + "'");
    engine.set_filter(*dim, wire::filter_from_json(nlohmann::json::parse(f.substr(eq + 1))));
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + out_path + "'");
  engine.export_csv(out);
  const auto counter = engine.visible_count();
  std::cerr << "exported " << counter.selected << " of " << counter.total << " records to " << out_path << "\n";
  return 0;
}

int run_serve(const std::vector<std::string>& configs, const std::string& host, int port, long ttl,
              const std::string& static_dir) {
  using namespace idwmap;
  std::vector<std::shared_ptr<const App>> apps;
  for (const auto& c : configs) {
    apps.push_back(load_app(c));
    const auto& app = *apps.back();
    std::cerr << "loaded app '" << app.config.name << "' (" << app.index->record_count() << " records, "
              << app.index->dimension_count() << " dimensions)\n";
  }
  Api api(std::move(apps), std::chrono::seconds(ttl));
  std::optional<std::filesystem::path> statics;
  if (!static_dir.empty()) statics = static_dir;
  HttpServer server(api, statics);
  std::cerr << "listening on " << host << ":" << port << "\n";
  return server.listen(host, port) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"idwmap: cross-filtering map dashboard engine"};
  cli.require_subcommand(1);

  auto* serve = cli.add_subcommand("serve", "Serve one or more apps over HTTP");
  std::vector<std::string> serve_configs;
  std::string host = "0.0.0.0";
  int port = 8080;
  if (const char* env = std::getenv("PORT")) port = std::atoi(env);
  long ttl = 1800;
  std::string static_dir;
  serve->add_option("--config", serve_configs, "App config file (repeatable)")->required();
  serve->add_option("--port", port, "Listen port (default $PORT or 8080)");
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--session-ttl", ttl, "Idle session lifetime in seconds")->check(CLI::PositiveNumber);
  serve->add_option("--static", static_dir, "Directory served under /")->check(CLI::ExistingDirectory);

  auto* validate = cli.add_subcommand("validate", "Check a config against its dataset");
  std::string validate_config;
  bool validate_json = false;
  validate->add_option("--config", validate_config, "App config file")->required();
  validate->add_flag("--json", validate_json, "Print diagnostics as JSON");

  auto* bench = cli.add_subcommand("bench", "Measure filter-to-groups latency on synthetic data");
  std::size_t records = 1'000'000;
  std::size_t dims = 8;
  std::size_t iters = 50;
  std::uint64_t seed = 42;
  bench->add_option("--records", records, "Synthetic record count");
  bench->add_option("--dims", dims, "Dimension count")->check(CLI::Range(1, 64));
  bench->add_option("--iters", iters, "Timed iterations")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "RNG seed");

  auto* exp = cli.add_subcommand("export", "Write the (optionally filtered) records as CSV");
  std::string export_config;
  std::string export_out;
  std::vector<std::string> export_filters;
  exp->add_option("--config", export_config, "App config file")->required();
  exp->add_option("--out", export_out, "Output CSV path")->required();
  exp->add_option("--filter", export_filters, "dim=<filter json> (repeatable)");

  CLI11_PARSE(cli, argc, argv);

  try {
    if (*serve) return run_serve(serve_configs, host, port, ttl, static_dir);
    if (*validate) return run_validate(validate_config, validate_json);
    if (*bench) return run_bench(records, dims, iters, seed);
    if (*exp) return run_export(export_config, export_out, export_filters);
  } catch (const idwmap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
