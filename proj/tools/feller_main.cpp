// Copyright 2026 The Feller Lab Authors.
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

// Command line front end. Exit codes: 0 success, 1 internal failure,
// 2 malformed input. Output is deterministic: measures print in sorted
// support order, reals carry 12 significant digits, rationals print as
// "p/q" in lowest terms.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "feller/feller.hpp"

namespace {

using nlohmann::json;

struct KernelSetup {
  feller::TransitionKernel kernel;
  feller::MetricSpace space = feller::MetricSpace::real_line();
};

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
}

feller::DiscreteMeasure load_measure(const std::string& path) {
  try {
    return feller::measure_from_json(load_json(path));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
}

KernelSetup make_kernel(const std::string& example, const std::string& kernel_file,
                        int depth) {
  KernelSetup setup;
  if (!kernel_file.empty()) {
    feller::KernelPackage pkg = feller::kernel_from_json(load_json(kernel_file));
    setup.kernel = std::move(pkg.kernel);
    setup.space = std::move(pkg.space);
    return setup;
  }
  if (example == "ex1") {
    setup.kernel = feller::doubling_reset_kernel();
    setup.space = feller::MetricSpace::circle();
  } else if (example == "ex2") {
    setup.kernel = feller::svc_interval_kernel(depth);
    setup.space = feller::MetricSpace::interval_union();
  } else {
    throw std::invalid_argument("unknown example '" + example +
                                "' (expected ex1 or ex2, or pass --kernel FILE)");
  }
  return setup;
}

feller::ScalarField make_field(const std::string& name) {
  if (name == "hat") return feller::ScalarField::hat();
  if (name == "coord") return feller::ScalarField::coordinate();
  if (name == "sin") {
    feller::ScalarField f;
    f.label = "sin";
    f.eval = [](const feller::Rational& x) { return std::sin(2.0 * M_PI * x.get_d()); };
    f.bound = 1.0;
    return f;
  }
  throw std::invalid_argument("unknown field '" + name + "' (expected hat, coord or sin)");
}

// Writes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct CommonFlags {
  std::string emit = "csv";
  std::string out;
  std::string example = "ex1";
  std::string kernel_file;
  int depth = 12;
  std::size_t cap = feller::kDefaultSupportCap;
};

void print_measure_lines(std::ostream& os, const feller::DiscreteMeasure& mu) {
  for (const auto& [point, weight] : mu.entries()) {
    os << "delta at " << feller::format_rational(point) << " with weight "
       << feller::format_rational(weight) << "\n";
  }
}

int run_fm(const CommonFlags& common, const std::string& mu_file, const std::string& nu_file,
           const std::string& space_name, bool witness) {
  feller::DiscreteMeasure mu = load_measure(mu_file);
  if (!space_name.empty() && feller::space_kind_from_string(space_name) != mu.space()) {
    throw std::invalid_argument("measure in '" + mu_file + "' lives on " +
                                std::string(feller::space_kind_name(mu.space())) +
                                ", not " + space_name);
  }
  if (!nu_file.empty()) {
    mu = feller::combine(feller::Rational(1), mu, feller::Rational(-1),
                         load_measure(nu_file));
  }
  feller::MetricSpace space = feller::MetricSpace::real_line();
  switch (mu.space()) {
    case feller::SpaceKind::kCircle: space = feller::MetricSpace::circle(); break;
    case feller::SpaceKind::kIntervalUnion: space = feller::MetricSpace::interval_union(); break;
    case feller::SpaceKind::kRealLine: space = feller::MetricSpace::real_line(); break;
    case feller::SpaceKind::kFinite:
      throw std::invalid_argument("fm on finite spaces needs a kernel table; not supported here");
  }
  feller::FmOptions options;
  options.support_cap = common.cap < 1000 ? common.cap : 1000;
  const feller::FmResult result = feller::fm_norm(mu, space, options);
  Sink sink(common.out);
  if (common.emit == "json") {
    json j;
    j["value"] = result.value;
    if (witness) {
      auto rows = json::array();
      for (std::size_t i = 0; i < result.support.size(); ++i) {
        rows.push_back({{"point", feller::format_rational(result.support[i])},
                        {"f", result.witness[i]}});
      }
      j["witness"] = std::move(rows);
      j["sign"] = result.sign;
    }
    sink.stream() << j.dump(2) << "\n";
  } else {
    sink.stream() << feller::format_real(result.value) << "\n";
    if (witness) {
      sink.stream() << "point,f\n";
      for (std::size_t i = 0; i < result.support.size(); ++i) {
        sink.stream() << feller::format_rational(result.support[i]) << ","
                      << feller::format_real(result.witness[i]) << "\n";
      }
    }
  }
  return 0;
}

int run_iterate(const CommonFlags& common, const std::string& x_text,
                const std::string& mu_file, long steps) {
  const KernelSetup setup = make_kernel(common.example, common.kernel_file, common.depth);
  feller::DiscreteMeasure mu =
      mu_file.empty()
          ? feller::DiscreteMeasure::delta(setup.kernel.space, feller::parse_rational(x_text))
          : load_measure(mu_file);
  mu = feller::iterate(setup.kernel, std::move(mu), steps, common.cap);
  Sink sink(common.out);
  if (common.emit == "json") {
    sink.stream() << feller::measure_to_json(mu).dump(2) << "\n";
  } else {
    print_measure_lines(sink.stream(), mu);
  }
  return 0;
}

int run_eprobe(const CommonFlags& common, const std::string& z_text,
               const std::string& field_name, const std::string& approach, long mmax,
               long nmax) {
  const feller::Rational z = feller::parse_rational(z_text);
  const feller::ScalarField f = make_field(field_name);
  Sink sink(common.out);

  if (approach == "dyadic") {
    if (common.example != "ex1" || !common.kernel_file.empty()) {
      throw std::invalid_argument("the dyadic approach probes the ex1 kernel only");
    }
    json rows = json::array();
    std::ostringstream csv;
    csv << "n,x,value\n";
    for (long n = 1; n <= mmax; ++n) {
      const feller::DyadicWitness w = feller::dyadic_witness(z, f, n);
      csv << n << "," << feller::format_rational(w.x) << ","
          << feller::format_rational(w.value) << "\n";
      rows.push_back({{"n", n},
                      {"x", feller::format_rational(w.x)},
                      {"steps", w.steps},
                      {"value", feller::format_rational(w.value)}});
    }
    if (common.emit == "json") {
      sink.stream() << json{{"z", feller::format_rational(z)}, {"witness", rows}}.dump(2)
                    << "\n";
    } else {
      sink.stream() << csv.str();
    }
    return 0;
  }

  const KernelSetup setup = make_kernel(common.example, common.kernel_file, common.depth);
  std::vector<feller::Rational> approach_points;
  if (approach == "halving") {
    approach_points = feller::halving_approach(z, mmax);
  } else if (approach == "truncation") {
    std::vector<long> bits;
    for (long k = 1; k <= mmax; ++k) bits.push_back(k);
    approach_points = feller::truncation_approach(z, bits);
  } else {
    throw std::invalid_argument("unknown approach '" + approach +
                                "' (expected dyadic, halving or truncation)");
  }
  const feller::ModulusReport report =
      feller::equicontinuity_modulus(setup.kernel, f, z, approach_points, nmax, common.cap);
  if (common.emit == "json") {
    json rows = json::array();
    for (std::size_t m = 0; m < report.approach.size(); ++m) {
      rows.push_back({{"m", m + 1},
                      {"x", feller::format_rational(report.approach[m])},
                      {"modulus", report.modulus[m]}});
    }
    sink.stream() << json{{"z", feller::format_rational(z)},
                          {"n_max", report.n_max},
                          {"rows", rows}}
                         .dump(2)
                  << "\n";
  } else {
    sink.stream() << "m,x,modulus\n";
    for (std::size_t m = 0; m < report.approach.size(); ++m) {
      sink.stream() << (m + 1) << "," << feller::format_rational(report.approach[m]) << ","
                    << feller::format_real(report.modulus[m]) << "\n";
    }
  }
  return 0;
}

int run_stability(const CommonFlags& common, const std::string& x_text,
                  const std::string& mu_file, const std::string& target_file, long nmax) {
  const KernelSetup setup = make_kernel(common.example, common.kernel_file, common.depth);
  feller::DiscreteMeasure start =
      mu_file.empty()
          ? feller::DiscreteMeasure::delta(setup.kernel.space, feller::parse_rational(x_text))
          : load_measure(mu_file);
  feller::DiscreteMeasure target =
      target_file.empty() ? feller::DiscreteMeasure::delta(setup.kernel.space, feller::Rational(0))
                          : load_measure(target_file);
  const feller::StabilityTrace trace =
      feller::stability_trace(setup.kernel, start, target, setup.space, nmax, {}, common.cap);
  Sink sink(common.out);
  if (common.emit == "json") {
    sink.stream() << json{{"distances", trace.distances}}.dump(2) << "\n";
  } else {
    sink.stream() << "n,distance\n";
    for (std::size_t n = 0; n < trace.distances.size(); ++n) {
      sink.stream() << n << "," << feller::format_real(trace.distances[n]) << "\n";
    }
  }
  return 0;
}

int run_basin(const CommonFlags& common, const std::string& x_text,
              const std::string& radius_text, long grid, const std::string& field_name,
              double epsilon, long nmin, long nmax, const std::string& target_file) {
  const KernelSetup setup = make_kernel(common.example, common.kernel_file, common.depth);
  const feller::ScalarField f = make_field(field_name);
  feller::DiscreteMeasure target =
      target_file.empty() ? feller::DiscreteMeasure::delta(setup.kernel.space, feller::Rational(0))
                          : load_measure(target_file);
  const feller::BasinReport report = feller::basin_probe(
      setup.kernel, f, target, feller::parse_rational(x_text),
      feller::parse_rational(radius_text), grid, epsilon, nmin, nmax, common.cap);
  Sink sink(common.out);
  if (common.emit == "json") {
    sink.stream() << json{{"within", report.within},
                          {"worst", report.worst},
                          {"worst_point", feller::format_rational(report.worst_point)},
                          {"worst_n", report.worst_n}}
                         .dump(2)
                  << "\n";
  } else {
    sink.stream() << "within,worst,worst_point,worst_n\n";
    sink.stream() << (report.within ? "true" : "false") << ","
                  << feller::format_real(report.worst) << ","
                  << feller::format_rational(report.worst_point) << "," << report.worst_n
                  << "\n";
  }
  return 0;
}

int run_svc(const CommonFlags& common, int depth) {
  const feller::SvcTree tree = feller::SvcTree::build(depth);
  Sink sink(common.out);
  if (common.emit == "json") {
    json kept = json::array();
    json removed = json::array();
    for (int n = 0; n <= tree.depth(); ++n) {
      json level = json::array();
      for (const feller::SvcInterval& iv : tree.kept()[n]) {
        level.push_back({{"a", feller::format_rational(iv.a)},
                         {"b", feller::format_rational(iv.b)}});
      }
      kept.push_back(std::move(level));
      json rlevel = json::array();
      for (const feller::SvcInterval& iv : tree.removed()[n]) {
        rlevel.push_back({{"a", feller::format_rational(iv.a)},
                          {"b", feller::format_rational(iv.b)}});
      }
      removed.push_back(std::move(rlevel));
    }
    sink.stream() << json{{"depth", tree.depth()},
                          {"kept", kept},
                          {"removed", removed},
                          {"kept_total", feller::format_rational(tree.kept_total(tree.depth()))}}
                         .dump(2)
                  << "\n";
  } else {
    sink.stream() << "level,kind,index,a,b\n";
    for (int n = 0; n <= tree.depth(); ++n) {
      for (std::size_t i = 0; i < tree.kept()[n].size(); ++i) {
        const feller::SvcInterval& iv = tree.kept()[n][i];
        sink.stream() << n << ",kept," << (i + 1) << "," << feller::format_rational(iv.a)
                      << "," << feller::format_rational(iv.b) << "\n";
      }
      for (std::size_t i = 0; i < tree.removed()[n].size(); ++i) {
        const feller::SvcInterval& iv = tree.removed()[n][i];
        sink.stream() << n << ",removed," << (i + 1) << "," << feller::format_rational(iv.a)
                      << "," << feller::format_rational(iv.b) << "\n";
      }
    }
  }
  return 0;
}

int run_t_eval(const CommonFlags& common, const std::string& x_text, int depth) {
  const feller::SvcTree tree = feller::SvcTree::build(depth);
  const feller::SvcMapResult result = feller::svc_map(tree, feller::parse_rational(x_text));
  Sink sink(common.out);
  const bool removed = result.cls.status == feller::SvcStatus::kRemoved;
  if (common.emit == "json") {
    sink.stream() << json{{"value", feller::format_rational(result.value)},
                          {"status", removed ? "removed" : "kept"},
                          {"level", result.cls.level},
                          {"index", result.cls.index},
                          {"exact", result.exact},
                          {"error_bound", feller::format_rational(result.error_bound)}}
                         .dump(2)
                  << "\n";
  } else {
    sink.stream() << feller::format_rational(result.value) << "\n";
    sink.stream() << "status=" << (removed ? "removed" : "kept")
                  << " level=" << result.cls.level << " index=" << result.cls.index
                  << " exact=" << (result.exact ? "true" : "false")
                  << " error_bound=" << feller::format_rational(result.error_bound) << "\n";
  }
  return 0;
}

int run_lipapprox(const CommonFlags& common, const std::string& field_name, long grid_count,
                  double r, double epsilon) {
  if (grid_count < 2) throw std::invalid_argument("grid must have at least 2 points");
  const feller::MetricSpace space = feller::MetricSpace::circle();
  const feller::ScalarField f = make_field(field_name);
  std::vector<feller::Rational> grid;
  grid.reserve(grid_count);
  for (long i = 0; i < grid_count; ++i) {
    grid.push_back(feller::make_rational(i, grid_count));
  }
  const feller::CoverSpec spec = feller::make_cover_spec(grid, f, r, epsilon, space);
  const double bound = feller::error_bound(spec.delta, spec.fbound, spec.centers.size(),
                                           spec.r, spec.c, spec.l);
  Sink sink(common.out);
  if (common.emit == "json") {
    json rows = json::array();
    for (const feller::Rational& x : grid) {
      rows.push_back({{"x", feller::format_rational(x)},
                      {"f", f.eval(x)},
                      {"L", feller::lip_eval(spec, x, space)}});
    }
    sink.stream() << json{{"centers", spec.centers.size()},
                          {"delta", spec.delta},
                          {"c", spec.c},
                          {"l", spec.l},
                          {"bound", bound},
                          {"rows", rows}}
                         .dump(2)
                  << "\n";
  } else {
    sink.stream() << "x,f,L,bound\n";
    for (const feller::Rational& x : grid) {
      sink.stream() << feller::format_rational(x) << "," << feller::format_real(f.eval(x))
                    << "," << feller::format_real(feller::lip_eval(spec, x, space)) << ","
                    << feller::format_real(bound) << "\n";
    }
  }
  return 0;
}

int run_remark1(const CommonFlags& common, const std::string& z_text, long m) {
  const feller::Rational gap =
      feller::translation_bump_gap(feller::parse_rational(z_text), m);
  Sink sink(common.out);
  if (common.emit == "json") {
    sink.stream() << json{{"m", m}, {"gap", feller::format_rational(gap)}}.dump(2) << "\n";
  } else {
    sink.stream() << feller::format_real(gap.get_d()) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification laboratory for Markov-Feller operator dynamics"};
  app.require_subcommand(1);

  CommonFlags common;
  long seed = 0;
  app.add_option("--seed", seed, "seed for randomized sampling (reserved; core is deterministic)");

  auto add_common = [&common](CLI::App* sub, bool with_kernel = true) {
    sub->add_option("--emit", common.emit, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out, "write output to a file instead of stdout");
    if (with_kernel) {
      sub->add_option("--example", common.example, "built-in kernel: ex1 or ex2");
      sub->add_option("--kernel", common.kernel_file, "JSON kernel table over a finite space");
      sub->add_option("--depth", common.depth, "tree depth for the ex2 kernel");
      sub->add_option("--cap", common.cap, "support cap for iterated measures");
    }
  };

  // fm
  std::string fm_mu, fm_nu, fm_space;
  bool fm_witness = false;
  CLI::App* fm = app.add_subcommand("fm", "Fortet-Mourier norm or distance of measure files");
  fm->add_option("--mu", fm_mu, "measure JSON file")->required();
  fm->add_option("--nu", fm_nu, "second measure; the distance |mu - nu| is computed");
  fm->add_option("--space", fm_space, "expected space of the inputs (validated)");
  fm->add_flag("--witness", fm_witness, "also print the optimal test function");
  add_common(fm, false);
  fm->add_option("--cap", common.cap, "support cap for the LP");

  // iterate
  std::string it_x = "0/1", it_mu;
  long it_steps = 1;
  CLI::App* it = app.add_subcommand("iterate", "push a measure forward n steps");
  it->add_option("--x", it_x, "start from a delta at this rational point");
  it->add_option("--mu", it_mu, "start from a measure JSON file");
  it->add_option("--steps", it_steps, "number of forward steps");
  add_common(it);

  // eprobe
  std::string ep_z = "0/1", ep_f = "hat", ep_approach = "dyadic";
  long ep_mmax = 8, ep_nmax = feller::kDefaultNMax;
  CLI::App* ep = app.add_subcommand("eprobe", "equicontinuity probes around a point");
  ep->add_option("--z", ep_z, "probe center");
  ep->add_option("--f", ep_f, "field: hat, coord or sin");
  ep->add_option("--approach", ep_approach, "dyadic, halving or truncation");
  ep->add_option("--mmax", ep_mmax, "number of approach points");
  ep->add_option("--nmax", ep_nmax, "dual power truncation");
  add_common(ep);

  // stability
  std::string st_x = "0/1", st_mu, st_target;
  long st_nmax = 30;
  CLI::App* st = app.add_subcommand("stability", "FM distance of iterates to a target");
  st->add_option("--x", st_x, "start from a delta at this rational point");
  st->add_option("--mu", st_mu, "start from a measure JSON file");
  st->add_option("--target", st_target, "target measure file (default: delta at 0)");
  st->add_option("--nmax", st_nmax, "trace length");
  add_common(st);

  // basin
  std::string ba_x = "0/1", ba_radius = "1/1024", ba_f = "hat", ba_target;
  long ba_grid = 16, ba_nmin = 20, ba_nmax = feller::kDefaultNMax;
  double ba_epsilon = 0.1;
  CLI::App* ba = app.add_subcommand("basin", "dual deviation over a ball of start points");
  ba->add_option("--x", ba_x, "ball center");
  ba->add_option("--radius", ba_radius, "ball radius (rational)");
  ba->add_option("--grid", ba_grid, "number of subdivisions of the ball");
  ba->add_option("--f", ba_f, "field: hat, coord or sin");
  ba->add_option("--epsilon", ba_epsilon, "deviation tolerance");
  ba->add_option("--nmin", ba_nmin, "first dual power checked");
  ba->add_option("--nmax", ba_nmax, "last dual power checked");
  ba->add_option("--target", ba_target, "target measure file (default: delta at 0)");
  add_common(ba);

  // svc
  int svc_depth = 6;
  CLI::App* svc = app.add_subcommand("svc", "dump the fat-Cantor interval tree");
  svc->add_option("--depth", svc_depth, "tree depth")->required();
  add_common(svc, false);

  // t-eval
  std::string te_x;
  int te_depth = 12;
  CLI::App* te = app.add_subcommand("t-eval", "evaluate the jump map on [-2,-1]");
  te->add_option("--x", te_x, "evaluation point")->required();
  te->add_option("--depth", te_depth, "tree depth");
  add_common(te, false);

  // lipapprox
  std::string la_f = "sin";
  long la_grid = 1000;
  double la_r = 0.2, la_epsilon = 0.05;
  CLI::App* la = app.add_subcommand("lipapprox", "Lipschitz blend of a field over a circle grid");
  la->add_option("--f", la_f, "field: hat, coord or sin");
  la->add_option("--grid", la_grid, "grid resolution");
  la->add_option("--r", la_r, "cover scale");
  la->add_option("--epsilon", la_epsilon, "target uniform error");
  add_common(la, false);

  // remark1
  std::string r1_z = "0/1";
  long r1_m = 1;
  CLI::App* r1 = app.add_subcommand("remark1", "translation bump gap at offset m");
  r1->add_option("--z", r1_z, "bump train anchor");
  r1->add_option("--m", r1_m, "bump index");
  add_common(r1, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fm->parsed()) return run_fm(common, fm_mu, fm_nu, fm_space, fm_witness);
    if (it->parsed()) return run_iterate(common, it_x, it_mu, it_steps);
    if (ep->parsed()) return run_eprobe(common, ep_z, ep_f, ep_approach, ep_mmax, ep_nmax);
    if (st->parsed()) return run_stability(common, st_x, st_mu, st_target, st_nmax);
    if (ba->parsed()) {
      return run_basin(common, ba_x, ba_radius, ba_grid, ba_f, ba_epsilon, ba_nmin, ba_nmax,
                       ba_target);
    }
    if (svc->parsed()) return run_svc(common, svc_depth);
    if (te->parsed()) return run_t_eval(common, te_x, te_depth);
    if (la->parsed()) return run_lipapprox(common, la_f, la_grid, la_r, la_epsilon);
    if (r1->parsed()) return run_remark1(common, r1_z, r1_m);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
