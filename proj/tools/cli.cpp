#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sumrecon/bounds.hpp"
#include "sumrecon/errors.hpp"
#include "sumrecon/format.hpp"
#include "sumrecon/linear_codes.hpp"
#include "sumrecon/montecarlo.hpp"

namespace sumrecon::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Flags shared by simulate-lkm and simulate-csr.
struct SimulateFlags {
  double p = 0.2;
  std::size_t n = 7;
  std::string code = "hamming7";
  std::optional<std::size_t> r;
  std::optional<std::size_t> k;
  std::size_t trials = 1000;
  std::string seed;
  std::string v_seed = "1";
  bool no_dither = false;
  unsigned threads = 0;
  std::string config;
  std::string format = "json";
  std::string out;
  std::string scheme = "lkm";
  std::string variant;
};

void add_simulate_flags(CLI::App* cmd, SimulateFlags& f) {
  auto* config = cmd->add_option("--config", f.config, "JSON scheme configuration file")->check(CLI::ExistingFile);
  std::vector<CLI::Option*> scheme_opts;
  scheme_opts.push_back(cmd->add_option("--p", f.p, "DSBS crossover probability"));
  scheme_opts.push_back(cmd->add_option("--n", f.n, "block length"));
  scheme_opts.push_back(cmd->add_option("--code", f.code, "none | repetition | hamming7 | random:<m>:<seed>"));
  scheme_opts.push_back(cmd->add_option("--r", f.r, "rows of V (bits per encoder per block)"));
  scheme_opts.push_back(cmd->add_option("--trials", f.trials, "number of blocks"));
  scheme_opts.push_back(cmd->add_option("--seed", f.seed, "master seed (decimal or 0x hex)"));
  scheme_opts.push_back(cmd->add_option("--v-seed", f.v_seed, "seed of the random V rows when r < n"));
  scheme_opts.push_back(cmd->add_flag("--no-dither", f.no_dither, "disable dithering (negative control)"));
  for (auto* o : scheme_opts) config->excludes(o);
  cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
  cmd->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", f.out, "output path (default stdout)");
}

TrialConfig build_config(const SimulateFlags& f, SchemeKind kind) {
  if (!f.config.empty()) {
    TrialConfig c = trial_config_from_json(read_file(f.config));
    return c;
  }
  TrialConfig c;
  c.scheme.scheme = kind;
  c.scheme.p = f.p;
  c.scheme.n = f.n;
  c.scheme.code = CodeSpec::parse(f.code, f.n);
  c.scheme.r = f.r;
  c.scheme.k = f.k;
  c.scheme.dither = !f.no_dither;
  c.scheme.v_seed = parse_unsigned(f.v_seed);
  if (f.variant == "binned") {
    c.scheme.variant = CrVariant::syndrome_binned;
  } else if (f.variant == "full-index") {
    c.scheme.variant = CrVariant::full_index;
    if (f.k) throw InvalidArgument("--k only applies to --variant binned");
  } else if (f.k) {
    c.scheme.variant = CrVariant::syndrome_binned;
  }
  if (kind == SchemeKind::csr_steinberg && f.r) throw InvalidArgument("--r does not apply to the steinberg scheme");
  if (kind != SchemeKind::csr_steinberg && !f.r) c.scheme.r = f.n;
  c.trials = f.trials;
  c.master_seed = f.seed.empty() ? entropy_seed() : parse_unsigned(f.seed);
  return c;
}

std::string membership_json(const RegionTriple& t, SourceParam p) {
  const Membership m = membership(t, p);
  nlohmann::ordered_json j;
  j["r1"] = t.r1;
  j["r2"] = t.r2;
  j["d"] = t.d;
  j["p"] = p.value();
  j["in_R_A"] = m.in_r_a;
  j["in_R_B"] = m.in_r_b;
  j["in_R_C"] = m.in_r_c;
  j["in_TSE_outer"] = m.in_tse_outer;
  return j.dump(2) + "\n";
}

std::string code_info_json(const CodeSpec& spec) {
  const LinearCode code = LinearCode::build(spec);
  nlohmann::ordered_json j;
  j["code"] = spec.name();
  j["n"] = code.n();
  j["m"] = code.m();
  j["rate"] = static_cast<double>(code.m()) / static_cast<double>(code.n());
  j["q_eff"] = code.q_eff();
  j["marginals"] = code.marginals();
  j["covering_radius"] = code.covering_radius();
  return j.dump(2) + "\n";
}

}  // namespace

std::string bounds_csv(SourceParam p, std::size_t grid_size) {
  const BoundCurve wz = wz_outer_curve(p, grid_size);
  const BoundCurve st = steinberg_inner_curve(p, grid_size);
  const BoundCurve lk = lkm_inner_curve(p, grid_size);

  const auto cell = [](std::optional<double> v) { return v ? format_double(*v) : std::string(); };
  std::string csv = "D,wz_outer,steinberg_inner,lkm_inner,wz_pre_envelope,steinberg_prehull,lkm_prehull\n";
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double d = grid_point(p.value(), i, grid_size);
    csv += format_double(d);
    for (const auto* c : {&wz.hulled, &st.hulled, &lk.hulled}) csv += "," + format_double((*c)(d));
    csv += "," + format_double(wz_g(p, d));
    csv += "," + cell(st.prehull.try_eval(d));
    csv += "," + cell(lk.prehull.try_eval(d));
    csv += "\n";
  }
  return csv;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rate-distortion bounds and code simulations for estimating X xor Y", "sumrecon"};
  app.require_subcommand(1);

  double bounds_p = 0.0;
  std::size_t grid = kDefaultGridSize;
  std::string bounds_out;
  auto* bounds = app.add_subcommand("bounds", "emit inner/outer bound curves on R1 = R2 as CSV");
  bounds->add_option("--p", bounds_p, "DSBS crossover probability, 0 < p <= 1/2")->required();
  bounds->add_option("--grid", grid, "grid points on [0, p]")->check(CLI::Range(std::size_t{3}, std::size_t{10000000}));
  bounds->add_option("--out", bounds_out, "output path (default stdout)");

  SimulateFlags lkm_flags;
  lkm_flags.code = "none";
  lkm_flags.n = 20;
  auto* sim_lkm = app.add_subcommand("simulate-lkm", "Monte Carlo run of the lossy modulo-two sum scheme");
  add_simulate_flags(sim_lkm, lkm_flags);

  SimulateFlags csr_flags;
  auto* sim_csr = app.add_subcommand("simulate-csr", "Monte Carlo run of a common sum reconstruction scheme");
  add_simulate_flags(sim_csr, csr_flags);
  sim_csr->add_option("--scheme", csr_flags.scheme, "lkm or steinberg")->check(CLI::IsMember({"lkm", "steinberg"}));
  sim_csr->add_option("--variant", csr_flags.variant, "CR code variant")->check(CLI::IsMember({"full-index", "binned"}));
  sim_csr->add_option("--k", csr_flags.k, "bin bits for the binned CR variant");

  double r1 = 0, r2 = 0, d = 0, triple_p = 0;
  auto* check = app.add_subcommand("check-triple", "region membership of (R1, R2, D)");
  check->add_option("--r1", r1)->required();
  check->add_option("--r2", r2)->required();
  check->add_option("--d", d)->required();
  check->add_option("--p", triple_p)->required();

  std::string info_code = "hamming7";
  std::size_t info_n = 7;
  auto* info = app.add_subcommand("code-info", "coset-leader statistics of a quantizing code");
  info->add_option("--code", info_code, "none | repetition | hamming7 | random:<m>:<seed>");
  info->add_option("--n", info_n, "block length");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*bounds) {
      if (!(bounds_p > 0.0)) throw InvalidArgument("--p must be in (0, 1/2]");
      write_output(bounds_csv(SourceParam{bounds_p}, grid), bounds_out, out);
    } else if (*sim_lkm || *sim_csr) {
      const bool is_csr = static_cast<bool>(*sim_csr);
      const SimulateFlags& f = is_csr ? csr_flags : lkm_flags;
      SchemeKind kind = SchemeKind::lkm;
      if (is_csr) kind = f.scheme == "steinberg" ? SchemeKind::csr_steinberg : SchemeKind::csr_lkm;
      const TrialReport report = run_experiment(build_config(f, kind), f.threads);
      write_output(f.format == "csv" ? report_to_csv(report) : report_to_json(report) + "\n", f.out, out);
    } else if (*check) {
      out << membership_json(RegionTriple::make(r1, r2, d), SourceParam{triple_p});
    } else if (*info) {
      out << code_info_json(CodeSpec::parse(info_code, info_n));
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "infeasible design: " << e.what() << "\n";
    return kInfeasible;
  } catch (const ConstructionError& e) {
    err << "infeasible design: " << e.what() << "\n";
    return kInfeasible;
  }
  return kOk;
}

}  // namespace sumrecon::cli
