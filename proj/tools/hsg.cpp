// hsg: command-line front end for the grid/category checkers, the axiom
// registry, the renderer and the neural-world simulator.
//
// Exit codes: 0 pass, 2 validation failure, 3 registry conflict, 4 I/O.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsg/document.hpp"
#include "hsg/error.hpp"
#include "hsg/neuro.hpp"
#include "hsg/registry.hpp"
#include "hsg/render.hpp"
#include "hsg/suite.hpp"

using nlohmann::json;

namespace {

int exit_code_for(const hsg::Error &e) {
  switch (e.code()) {
  case hsg::ErrorCode::conflict:
    return 3;
  case hsg::ErrorCode::io:
    return 4;
  default:
    return 2;
  }
}

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    hsg::fail(hsg::ErrorCode::io, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    hsg::fail(hsg::ErrorCode::io, "cannot write " + path);
  out << content;
}

std::uint64_t effective_seed(std::uint64_t doc_seed, bool seed_set,
                             std::uint64_t flag_seed) {
  if (seed_set)
    return flag_seed;
  if (const char *env = std::getenv("HSG_SEED"))
    return std::strtoull(env, nullptr, 10);
  return doc_seed;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int cmd_check(const std::string &suite_name,
              const std::vector<std::string> &files) {
  hsg::doc::SuiteResult result =
      hsg::doc::run_suite(files, hsg::doc::suite_from_name(suite_name));
  std::cout << result.rendered;
  return result.exit_code;
}

int cmd_registry(const std::string &action, const std::string &registry_path,
                 const std::string &argument, unsigned long long counter) {
  using namespace hsg::reg;
  if (action == "init") {
    spit(registry_path, canonical_serialization(init_registry()));
    std::cout << registry_path << "\n";
    return 0;
  }
  Registry r = hsg::doc::registry_from_text(slurp(registry_path));
  if (action == "attach") {
    hsg::doc::Document d = hsg::doc::parse_document(slurp(argument));
    if (d.kind != "package")
      hsg::fail(hsg::ErrorCode::malformed_input,
                "attach expects a package document");
    AttachResult attached =
        attach_package(r, hsg::doc::package_from_body(d.body));
    for (const auto &f : attached.report.findings)
      std::cerr << severity_name(f.severity) << ": " << f.message << "\n";
    spit(registry_path, canonical_serialization(attached.registry));
    std::cout << "attached " << hsg::doc::package_from_body(d.body).id << "\n";
    return 0;
  }
  if (action == "detach") {
    Registry r2 = detach_package(r, argument);
    spit(registry_path, canonical_serialization(r2));
    std::cout << "detached " << argument << "\n";
    return 0;
  }
  if (action == "list") {
    for (const auto &p : r.packages)
      std::cout << p.id << " " << p.version << "\n";
    return 0;
  }
  if (action == "order") {
    for (const auto &id : resolve_order(r))
      std::cout << id << "\n";
    return 0;
  }
  if (action == "attest") {
    Attestation a = attest_internal(r, argument, counter);
    json out;
    out["instance"] = a.instance_id;
    out["digest"] = a.package_digest;
    out["statement"] = a.statement;
    out["echo"] = a.echo;
    out["verified"] = verify_attestation(a);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  hsg::fail(hsg::ErrorCode::not_found, "unknown registry action " + action);
}

int cmd_sim_run(const std::string &world_path, long long ticks,
                const std::string &trace_path, bool seed_set,
                std::uint64_t seed_flag) {
  hsg::doc::Document d = hsg::doc::parse_document(slurp(world_path));
  if (d.kind != "world")
    hsg::fail(hsg::ErrorCode::malformed_input, "sim run expects a world document");
  hsg::sim::World w = hsg::doc::world_from_body(d.body);
  w.seed = effective_seed(w.seed, seed_set, seed_flag);
  if (ticks < 0 || ticks > 100000)
    hsg::fail(hsg::ErrorCode::capacity, "tick count outside the configured cap");

  hsg::sim::World finished = hsg::sim::run_world(w, ticks);

  // one record per (tick, point, channel) for ticks 0..ticks-1
  std::string trace;
  for (long long t = 0; t < ticks; ++t)
    for (const auto &p : finished.body.points) {
      const auto &carrier = finished.base.at({p.id, t});
      for (const auto &[channel, value] : carrier.values)
        trace += std::to_string(t) + "," + p.id + "," + channel + "," +
                 format_value(value) + "\n";
    }
  if (!trace_path.empty())
    spit(trace_path, trace);
  else
    std::cout << trace;

  json summary;
  summary["ticks"] = ticks;
  summary["seed"] = finished.seed;
  if (ticks > 0) {
    hsg::sim::ActivityDensity act =
        hsg::sim::activity_density(finished, 0, ticks - 1);
    json per_point;
    for (const auto &[id, density] : act.density_per_point)
      per_point[id] = density;
    summary["activity"] = {{"total", act.total},
                           {"total_density", act.total_density},
                           {"per_point", per_point}};
  } else {
    summary["activity"] = {{"total", 0},
                           {"total_density", 0.0},
                           {"per_point", json::object()}};
  }
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_sim_probe(const std::string &world_path, const std::string &point,
                  long long tick, const std::string &channel, double magnitude,
                  long long horizon) {
  hsg::doc::Document d = hsg::doc::parse_document(slurp(world_path));
  if (d.kind != "world")
    hsg::fail(hsg::ErrorCode::malformed_input,
              "sim probe expects a world document");
  hsg::sim::World w = hsg::doc::world_from_body(d.body);
  hsg::sim::DivergenceReport r = hsg::sim::causality_probe(
      w, {point, tick, channel, magnitude}, horizon);
  json out;
  out["diverged"] = r.diverged;
  if (r.diverged) {
    out["point"] = r.point;
    out["tick"] = r.tick;
    out["channel"] = r.channel;
  }
  out["min_delay"] = r.min_delay;
  out["bound"] = tick + r.min_delay;
  out["bound_ok"] = !r.diverged || r.tick >= tick + r.min_delay;
  std::cout << out.dump(2) << "\n";
  return out["bound_ok"].get<bool>() ? 0 : 2;
}

int cmd_render(const std::string &grid_path, const std::string &rows,
               const std::string &cols) {
  hsg::doc::Document d = hsg::doc::parse_document(slurp(grid_path));
  if (d.kind != "grid")
    hsg::fail(hsg::ErrorCode::malformed_input, "render expects a grid document");
  hsg::doc::GridBundle g = hsg::doc::grid_from_body(d.body);
  std::cout << hsg::doc::render_grid_table(g.grid, rows, cols);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"hierarchical state grid toolkit"};
  app.require_subcommand(1);

  // check
  std::string suite_name;
  std::vector<std::string> files;
  CLI::App *check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite_name,
                    "all|category|adjunction|kan|grid|temporal|jguard|tower|registry")
      ->required();
  check->add_option("files", files, "document files")->required();

  // registry
  std::string reg_action, reg_path = "registry.json", reg_arg;
  unsigned long long counter = 0;
  CLI::App *registry = app.add_subcommand("registry", "axiom package registry");
  registry->add_option("action", reg_action,
                       "init|attach|detach|list|order|attest")
      ->required();
  registry->add_option("argument", reg_arg,
                       "package file, package id, or instance id");
  registry->add_option("--registry", reg_path, "registry document path");
  registry->add_option("--counter", counter, "logical counter for attest");

  // sim
  CLI::App *sim = app.add_subcommand("sim", "neural world simulation");
  sim->require_subcommand(1);
  std::string world_path, trace_path;
  long long ticks = 0;
  std::uint64_t seed_flag = 0;
  bool seed_set = false;
  CLI::App *sim_run = sim->add_subcommand("run", "run and trace a world");
  sim_run->add_option("world", world_path, "world document")->required();
  sim_run->add_option("--ticks", ticks, "number of ticks")->required();
  sim_run->add_option("--trace", trace_path, "trace output file");
  sim_run->add_option("--seed", seed_flag, "seed override (or HSG_SEED)")
      ->each([&seed_set](const std::string &) { seed_set = true; });

  std::string probe_point, probe_channel = "potential";
  long long probe_tick = 0, horizon = 10;
  double magnitude = 0.0;
  CLI::App *sim_probe = sim->add_subcommand("probe", "causality probe");
  sim_probe->add_option("world", world_path, "world document")->required();
  sim_probe->add_option("--point", probe_point)->required();
  sim_probe->add_option("--tick", probe_tick)->required();
  sim_probe->add_option("--channel", probe_channel);
  sim_probe->add_option("--magnitude", magnitude)->required();
  sim_probe->add_option("--horizon", horizon)->required();

  // render
  std::string grid_path, rows, cols;
  CLI::App *render = app.add_subcommand("render", "render tables");
  render->require_subcommand(1);
  CLI::App *render_table = render->add_subcommand("table", "grid table");
  render_table->add_option("grid", grid_path, "grid document")->required();
  render_table->add_option("--rows", rows, "row axis")->required();
  render_table->add_option("--cols", cols, "column axis")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check)
      return cmd_check(suite_name, files);
    if (*registry)
      return cmd_registry(reg_action, reg_path, reg_arg, counter);
    if (*sim_run)
      return cmd_sim_run(world_path, ticks, trace_path, seed_set, seed_flag);
    if (*sim_probe)
      return cmd_sim_probe(world_path, probe_point, probe_tick, probe_channel,
                           magnitude, horizon);
    if (*render_table)
      return cmd_render(grid_path, rows, cols);
  } catch (const hsg::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
