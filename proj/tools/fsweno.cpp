// fsweno: run the benchmark cases, write residue histories, fields and
// accuracy tables.
//
//   fsweno list
//   fsweno run --case 1 --scheme fe-sweep --cfl 1.0 --nx 40 --out out/
//   fsweno table --case 1 --scheme fe-sweep --cfl 1.0 --meshes 10,20,40,80

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsweno/fsweno.hpp"

namespace fs = std::filesystem;
using namespace fsweno;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNotConvergent = 2;
constexpr int kExitDiverged = 3;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

void write_residue(const fs::path& path, const ResidueHistory& history) {
  std::ofstream out(path);
  out << "iteration,resA,dt,time\n";
  for (const ResidueRecord& r : history) {
    out << r.iteration << ',' << num(r.resA) << ',' << num(r.dt) << ',' << num(r.time) << '\n';
  }
}

void write_field(const fs::path& path, const FieldSnapshot& f, ModelId model) {
  std::ofstream out(path);
  const Grid& g = f.grid;
  out << "x";
  if (g.dim() == 2) out << ",y";
  for (const std::string& name : component_names(model)) out << ',' << name;
  out << '\n';
  int p = 0;
  for (int j = 1; j <= g.ny(); ++j) {
    for (int i = 1; i <= g.nx(); ++i, ++p) {
      out << num(g.x(i));
      if (g.dim() == 2) out << ',' << num(g.y(j));
      for (int c = 0; c < f.components; ++c) out << ',' << num(f.at(p, c));
      out << '\n';
    }
  }
}

void write_summary(const fs::path& path, const CaseRun& run) {
  nlohmann::ordered_json j;
  j["case"] = run.spec.id;
  j["name"] = run.spec.name;
  j["scheme"] = std::string(to_string(run.scheme.kind));
  j["cfl"] = run.scheme.cfl;
  j["grid"] = run.field.grid.dim() == 2
                  ? std::to_string(run.field.grid.nx()) + "x" + std::to_string(run.field.grid.ny())
                  : std::to_string(run.field.grid.nx());
  j["tol"] = run.scheme.tol;
  j["outcome"] = std::string(to_string(run.summary.outcome));
  j["iterations"] = run.summary.iterations;
  j["final_time"] = run.summary.final_time;
  j["final_resA"] = run.summary.final_resA;
  if (!run.summary.message.empty()) j["message"] = run.summary.message;
  if (run.errors) {
    j["errors"] = {{"component", component_names(run.spec.model)[static_cast<std::size_t>(run.spec.error_component)]},
                   {"l1", run.errors->l1},
                   {"linf", run.errors->linf}};
  }
  j["wall_seconds"] = run.wall_seconds;
  std::ofstream(path) << j.dump(2) << '\n';
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::converged: return 0;
    case Outcome::not_convergent: return kExitNotConvergent;
    case Outcome::diverged: return kExitDiverged;
  }
  return kExitUsage;
}

struct CommonFlags {
  int case_id = 0;
  std::string scheme = "fe-sweep";
  std::optional<double> cfl;
  std::optional<double> tol;
  std::optional<long> max_iters;
  int threads = 1;
  std::string shock_boundary = "fixed";
  std::string out = "out";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--case", f.case_id, "Case id")->required()->check(CLI::Range(1, kCaseCount));
  cmd->add_option("--scheme", f.scheme, "fe-jacobi | rk3-jacobi | fe-sweep")
      ->check(CLI::IsMember({"fe-jacobi", "rk3-jacobi", "fe-sweep"}));
  cmd->add_option("--cfl", f.cfl, "CFL number (default: the case's)")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", f.tol, "ResA threshold (default: the case's)")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iters", f.max_iters, "Iteration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", f.threads, "Worker threads for the Jacobi drivers")->check(CLI::PositiveNumber);
  cmd->add_option("--shock-boundary", f.shock_boundary, "Outer boundary of cases 6 and 7: fixed | periodic")
      ->check(CLI::IsMember({"fixed", "periodic"}));
  cmd->add_option("--out", f.out, "Output directory");
}

SchemeConfig scheme_config(const CommonFlags& f, const CaseSpec& c) {
  SchemeConfig s;
  s.kind = *scheme_from_string(f.scheme);
  s.cfl = f.cfl.value_or(c.cfl);
  if (f.max_iters) s.max_iterations = *f.max_iters;
  s.threads = f.threads;
  return s;
}

CaseOptions case_options(const CommonFlags& f) {
  CaseOptions o;
  o.shock_boundary = f.shock_boundary == "periodic" ? ShockBoundary::periodic : ShockBoundary::dirichlet;
  return o;
}

int run_command(const CommonFlags& f, std::optional<int> nx, std::optional<int> ny, long dump_every,
                const std::string& preset) {
  RunRequest req;
  req.case_id = f.case_id;
  req.options = case_options(f);
  const CaseSpec spec = case_spec(f.case_id, req.options);
  req.scheme = scheme_config(f, spec);
  req.scheme.validate();
  req.preset = preset == "desk" ? Preset::desk : Preset::full;
  req.nx = nx;
  req.ny = ny;
  req.tol = f.tol;

  const fs::path out(f.out);
  fs::create_directories(out);
  req.dump_every = dump_every;
  req.dump = [&](long iteration, const FieldSnapshot& s) {
    write_field(out / ("field_" + std::to_string(iteration) + ".csv"), s, spec.model);
  };

  const CaseRun run = run_case(req);
  write_residue(out / "residue.csv", run.history);
  write_field(out / "field.csv", run.field, spec.model);
  write_summary(out / "summary.json", run);

  std::printf("case %d  %s  %s  cfl=%g  tol=%g\n", spec.id, spec.name.c_str(), f.scheme.c_str(), run.scheme.cfl,
              run.scheme.tol);
  std::printf("%s after %ld iterations, time %.4f, ResA %.3e\n", std::string(to_string(run.summary.outcome)).c_str(),
              run.summary.iterations, run.summary.final_time, run.summary.final_resA);
  if (!run.summary.message.empty()) std::printf("  %s\n", run.summary.message.c_str());
  if (run.errors) std::printf("L1 %.3e  Linf %.3e\n", run.errors->l1, run.errors->linf);
  return exit_code(run.summary.outcome);
}

int table_command(const CommonFlags& f, const std::vector<int>& meshes) {
  const CaseOptions opts = case_options(f);
  const CaseSpec spec = case_spec(f.case_id, opts);
  if (!spec.exact) {
    std::fprintf(stderr, "case %d has no exact steady solution; no error table\n", f.case_id);
    return kExitUsage;
  }
  SchemeConfig s = scheme_config(f, spec);
  s.tol = f.tol.value_or(spec.tol);
  s.validate();
  const std::vector<AccuracyRow> rows = accuracy_table(f.case_id, s, meshes.empty() ? spec.meshes : meshes, opts);

  const fs::path out(f.out);
  fs::create_directories(out);
  std::ofstream csv(out / "accuracy.csv");
  csv << "N,L1,L1_order,Linf,Linf_order,iterations,wall_seconds\n";
  std::printf("%6s %12s %7s %12s %7s %8s %9s\n", "N", "L1", "order", "Linf", "order", "iter", "wall[s]");
  for (const AccuracyRow& r : rows) {
    const bool ok = r.outcome == Outcome::converged;
    csv << r.n << ',' << num(r.l1) << ',' << opt_num(r.l1_order) << ',' << num(r.linf) << ','
        << opt_num(r.linf_order) << ',' << (ok ? std::to_string(r.iterations) : std::string(to_string(r.outcome)))
        << ',' << num(r.wall_seconds) << '\n';
    std::printf("%6d %12.3e %7s %12.3e %7s %8s %9.2f\n", r.n, r.l1,
                r.l1_order ? std::to_string(*r.l1_order).substr(0, 4).c_str() : "-", r.linf,
                r.linf_order ? std::to_string(*r.linf_order).substr(0, 4).c_str() : "-",
                ok ? std::to_string(r.iterations).c_str() : std::string(to_string(r.outcome)).c_str(),
                r.wall_seconds);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state WENO solvers: fixed-point Jacobi and fast sweeping"};
  app.require_subcommand(1);

  app.add_subcommand("list", "List the benchmark cases");

  CommonFlags run_flags;
  std::optional<int> nx, ny;
  long dump_every = 0;
  std::string preset = "full";
  CLI::App* run = app.add_subcommand("run", "Iterate one case to steady state");
  add_common(run, run_flags);
  run->add_option("--nx", nx, "Grid points in x")->check(CLI::Range(7, 100000));
  run->add_option("--ny", ny, "Grid points in y")->check(CLI::Range(7, 100000));
  run->add_option("--dump-every", dump_every, "Write field_<n>.csv every n iterations")->check(CLI::NonNegativeNumber);
  run->add_option("--preset", preset, "full | desk")->check(CLI::IsMember({"full", "desk"}));

  CommonFlags table_flags;
  std::vector<int> meshes;
  CLI::App* table = app.add_subcommand("table", "Accuracy table over a mesh sequence");
  add_common(table, table_flags);
  table->add_option("--meshes", meshes, "Comma-separated N values")->delimiter(',')->check(CLI::Range(7, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("list")) {
      for (int id = 1; id <= kCaseCount; ++id) std::printf("%s\n", catalog_line(case_spec(id)).c_str());
      return 0;
    }
    if (run->parsed()) return run_command(run_flags, nx, ny, dump_every, preset);
    return table_command(table_flags, meshes);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
