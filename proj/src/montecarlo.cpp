#include "sumrecon/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>
#include <thread>

#include "json.hpp"

#include "sumrecon/errors.hpp"
#include "sumrecon/format.hpp"
#include "sumrecon/schemes.hpp"
#include "sumrecon/sources.hpp"

namespace sumrecon {

namespace {

constexpr double kZ95 = 1.96;

struct TrialOutcome {
  std::uint32_t errors_1 = 0;
  std::uint32_t errors_2 = 0;
  std::uint32_t w_1 = 0;
  std::uint32_t w_2 = 0;
  std::uint32_t w_both = 0;
  bool mismatch = false;
  bool psi_mismatch = false;
  bool decode_failed = false;
  bool success = false;
};

// A scheme built once per experiment; trials only vary sources and dithers.
struct PreparedScheme {
  SchemeConfig config;
  std::shared_ptr<const LinearCode> code;
  std::optional<LkmDesign> design;
  std::optional<CrCode> cr;
  double rate1 = 0.0;
  double rate2 = 0.0;
};

PreparedScheme prepare(const SchemeConfig& config) {
  (void)SourceParam{config.p};
  if (config.n == 0) throw InvalidArgument("block length n must be at least 1");
  CodeSpec spec = config.code;
  spec.n = config.n;
  if (spec.kind == CodeSpec::Kind::repetition) spec.m = config.n - 1;
  if (spec.kind == CodeSpec::Kind::hamming74 && config.n != 7) throw InvalidArgument("hamming7 code requires n = 7");

  PreparedScheme ps;
  ps.config = config;
  ps.code = std::make_shared<const LinearCode>(LinearCode::build(spec));

  if (config.scheme == SchemeKind::csr_steinberg) {
    const bool binned = config.variant == CrVariant::syndrome_binned || config.k.has_value();
    ps.config.variant = binned ? CrVariant::syndrome_binned : CrVariant::full_index;
    if (binned) {
      if (!config.k) throw InvalidArgument("syndrome-binned CR codes need k");
      ps.cr = CrCode::syndrome_binned(ps.code, CrCode::information_bin_matrix(*ps.code, *config.k), 0, config.dither);
    } else {
      ps.cr = CrCode::full_index(ps.code, 0, config.dither);
    }
    ps.rate1 = ps.rate2 = ps.cr->rate();
  } else {
    if (!config.r) throw InvalidArgument("sum schemes need r");
    if (*config.r > config.n) throw InvalidArgument("r must not exceed n");
    BitMatrix v = *config.r == config.n ? BitMatrix::identity(config.n)
                                        : LkmDesign::nested_random_v(*config.r, config.n, config.v_seed);
    ps.design.emplace(ps.code, std::move(v));
    ps.rate1 = ps.rate2 = ps.design->rate_per_encoder();
  }
  return ps;
}

TrialOutcome run_trial(const PreparedScheme& ps, std::uint64_t trial_seed) {
  const std::size_t n = ps.config.n;
  const DsbsSample sample = sample_dsbs(SourceParam{ps.config.p}, n, derive_seed(trial_seed, 0));
  const DitherPair dither = ps.config.dither ? sample_dither(n, derive_seed(trial_seed, 1))
                                             : DitherPair{BitVector(n), BitVector(n)};

  SchemeOutput out;
  if (ps.design) {
    out = csr_via_lkm(*ps.design, sample, dither);
  } else {
    out = csr_via_steinberg(ps.cr->with_dither(dither.d_x), ps.cr->with_dither(dither.d_y), sample);
  }

  const BitVector z = sample.x ^ sample.y;
  TrialOutcome t;
  t.errors_1 = static_cast<std::uint32_t>(hamming_distance(z, out.z_hat_1));
  t.errors_2 = static_cast<std::uint32_t>(hamming_distance(z, out.z_hat_2));
  t.w_1 = static_cast<std::uint32_t>(out.w_1.weight());
  t.w_2 = static_cast<std::uint32_t>(out.w_2.weight());
  t.w_both = static_cast<std::uint32_t>((out.w_1 ^ out.w_2).weight());
  t.mismatch = out.z_hat_1 != out.z_hat_2;
  t.psi_mismatch = out.psi_mismatch;
  t.decode_failed = out.decode_failed;
  t.success = out.exact_recovery;
  return t;
}

struct Moments {
  long double sum = 0;
  long double sum_sq = 0;

  void add(long double v) {
    sum += v;
    sum_sq += v * v;
  }
  // Mean of v / scale and the 95% half-width of that mean.
  std::pair<double, double> summarize(std::size_t trials, long double scale) const {
    const long double t = static_cast<long double>(trials);
    const long double mean = sum / t;
    double ci = 0.0;
    if (trials > 1) {
      const long double var = std::max<long double>(0, (sum_sq - sum * sum / t) / (t - 1));
      ci = static_cast<double>(kZ95 * std::sqrt(var / t) / scale);
    }
    return {static_cast<double>(mean / scale), ci};
  }
};

TrialReport aggregate(const PreparedScheme& ps, const std::vector<TrialOutcome>& outcomes,
                      std::uint64_t master_seed) {
  Moments e1, e2, mismatch, psi, failed, success;
  long double ones_1 = 0, ones_2 = 0, ones_sum = 0;
  for (const auto& t : outcomes) {
    e1.add(t.errors_1);
    e2.add(t.errors_2);
    mismatch.add(t.mismatch ? 1 : 0);
    psi.add(t.psi_mismatch ? 1 : 0);
    failed.add(t.decode_failed ? 1 : 0);
    success.add(t.success ? 1 : 0);
    ones_1 += t.w_1;
    ones_2 += t.w_2;
    ones_sum += t.w_both;
  }

  const std::size_t trials = outcomes.size();
  const auto n = static_cast<long double>(ps.config.n);
  TrialReport r;
  r.scheme = std::string(to_string(ps.config.scheme));
  r.code = ps.config.code.name();
  r.p = ps.config.p;
  r.n = ps.config.n;
  if (ps.design) r.r = ps.config.r;
  if (ps.cr && ps.config.variant == CrVariant::syndrome_binned) r.k = ps.config.k;
  r.dither = ps.config.dither;
  std::tie(r.distortion_z1, r.ci95.distortion_z1) = e1.summarize(trials, n);
  std::tie(r.distortion_z2, r.ci95.distortion_z2) = e2.summarize(trials, n);
  std::tie(r.mismatch_rate, r.ci95.mismatch_rate) = mismatch.summarize(trials, 1);
  std::tie(r.psi_mismatch_rate, r.ci95.psi_mismatch_rate) = psi.summarize(trials, 1);
  std::tie(r.decode_failure_rate, r.ci95.decode_failure_rate) = failed.summarize(trials, 1);
  std::tie(r.decode_success_rate, r.ci95.decode_success_rate) = success.summarize(trials, 1);

  // E[W1 W2] from popcounts: |w1| + |w2| - |w1 ^ w2| = 2 |w1 & w2|.
  const long double symbols = n * static_cast<long double>(trials);
  const long double m1 = ones_1 / symbols;
  const long double m2 = ones_2 / symbols;
  const long double m12 = (ones_1 + ones_2 - ones_sum) / (2 * symbols);
  const long double var = m1 * (1 - m1) * m2 * (1 - m2);
  r.quantization_error_correlation = var > 0 ? static_cast<double>((m12 - m1 * m2) / std::sqrt(var)) : 0.0;

  r.rate1 = ps.rate1;
  r.rate2 = ps.rate2;
  r.trials = trials;
  r.master_seed = master_seed;
  return r;
}

}  // namespace

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::lkm:
      return "lkm";
    case SchemeKind::csr_lkm:
      return "csr-lkm";
    case SchemeKind::csr_steinberg:
      return "csr-steinberg";
  }
  return "unknown";
}

SchemeKind parse_scheme_kind(std::string_view text) {
  if (text == "lkm") return SchemeKind::lkm;
  if (text == "csr-lkm") return SchemeKind::csr_lkm;
  if (text == "csr-steinberg") return SchemeKind::csr_steinberg;
  throw InvalidArgument("unknown scheme '" + std::string(text) + "'");
}

TrialReport run_experiment(const TrialConfig& config, unsigned threads) {
  if (config.trials == 0) throw InvalidArgument("trials must be at least 1");
  const PreparedScheme ps = prepare(config.scheme);

  std::vector<TrialOutcome> outcomes(config.trials);
  unsigned workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, config.trials));

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) outcomes[k] = run_trial(ps, derive_seed(config.master_seed, k));
  };

  if (workers <= 1) {
    run_range(0, config.trials);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (config.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(config.trials, w * chunk);
      const std::size_t end = std::min(config.trials, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          run_range(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return aggregate(ps, outcomes, config.master_seed);
}

SweepAxis parse_sweep_axis(std::string_view text) {
  if (text == "r") return SweepAxis::r;
  if (text == "k") return SweepAxis::k;
  if (text == "p") return SweepAxis::p;
  if (text == "n") return SweepAxis::n;
  if (text == "trials") return SweepAxis::trials;
  throw InvalidArgument("unknown sweep axis '" + std::string(text) + "'");
}

std::vector<TrialReport> sweep(const TrialConfig& config, SweepAxis axis, const std::vector<double>& values,
                               unsigned threads) {
  auto as_count = [](double v) {
    if (!(v >= 0) || v != std::floor(v)) throw InvalidArgument("sweep value must be a non-negative integer");
    return static_cast<std::size_t>(v);
  };
  std::vector<TrialReport> reports;
  reports.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    TrialConfig point = config;
    point.master_seed = derive_seed(config.master_seed, i);
    switch (axis) {
      case SweepAxis::r:
        point.scheme.r = as_count(values[i]);
        break;
      case SweepAxis::k:
        point.scheme.k = as_count(values[i]);
        break;
      case SweepAxis::p:
        point.scheme.p = values[i];
        break;
      case SweepAxis::n:
        point.scheme.n = as_count(values[i]);
        break;
      case SweepAxis::trials:
        point.trials = as_count(values[i]);
        break;
    }
    reports.push_back(run_experiment(point, threads));
  }
  return reports;
}

namespace {

std::uint64_t json_unsigned(const nlohmann::json& j, const char* field) {
  if (j.is_string()) return parse_unsigned(j.get<std::string>());
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw InvalidArgument(std::string("field '") + field + "' must be a non-negative integer");
}

CodeSpec json_code(const nlohmann::json& j, std::size_t n) {
  if (j.is_string()) return CodeSpec::parse(j.get<std::string>(), n);
  if (!j.is_object() || !j.contains("kind")) throw InvalidArgument("code must be a string or an object with 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "random") {
    return CodeSpec::random(json_unsigned(j.value("m", nlohmann::json(0)), "code.m"), n,
                            json_unsigned(j.value("seed", nlohmann::json(0)), "code.seed"));
  }
  return CodeSpec::parse(kind, n);
}

}  // namespace

TrialConfig trial_config_from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("invalid JSON config: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  static const std::vector<std::string> known = {"scheme", "p",    "n",      "code",    "r",     "k",
                                                 "trials", "seed", "dither", "variant", "v_seed"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw InvalidArgument("unknown config field '" + key + "'");
    }
  }

  try {
    TrialConfig c;
    c.scheme.scheme = parse_scheme_kind(j.at("scheme").get<std::string>());
    c.scheme.p = j.at("p").get<double>();
    c.scheme.n = json_unsigned(j.at("n"), "n");
    c.scheme.code = json_code(j.at("code"), c.scheme.n);
    if (j.contains("r")) c.scheme.r = json_unsigned(j.at("r"), "r");
    if (j.contains("k")) c.scheme.k = json_unsigned(j.at("k"), "k");
    if (j.contains("variant")) {
      const auto v = j.at("variant").get<std::string>();
      if (v == "full-index" || v == "full_index") {
        c.scheme.variant = CrVariant::full_index;
      } else if (v == "binned" || v == "syndrome-binned" || v == "syndrome_binned") {
        c.scheme.variant = CrVariant::syndrome_binned;
      } else {
        throw InvalidArgument("unknown variant '" + v + "'");
      }
    } else if (c.scheme.k) {
      c.scheme.variant = CrVariant::syndrome_binned;
    }
    c.scheme.dither = j.value("dither", true);
    if (j.contains("v_seed")) c.scheme.v_seed = json_unsigned(j.at("v_seed"), "v_seed");
    c.trials = json_unsigned(j.at("trials"), "trials");
    c.master_seed = json_unsigned(j.at("seed"), "seed");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("invalid config: ") + e.what());
  }
}

std::string report_to_json(const TrialReport& r, int indent) {
  nlohmann::ordered_json j;
  j["scheme"] = r.scheme;
  j["code"] = r.code;
  j["p"] = r.p;
  j["n"] = r.n;
  if (r.r) j["r"] = *r.r;
  if (r.k) j["k"] = *r.k;
  j["dither"] = r.dither;
  j["distortion_z1"] = r.distortion_z1;
  j["distortion_z2"] = r.distortion_z2;
  j["mismatch_rate"] = r.mismatch_rate;
  j["psi_mismatch_rate"] = r.psi_mismatch_rate;
  j["decode_failure_rate"] = r.decode_failure_rate;
  j["decode_success_rate"] = r.decode_success_rate;
  j["quantization_error_correlation"] = r.quantization_error_correlation;
  j["rate1"] = r.rate1;
  j["rate2"] = r.rate2;
  j["ci95"] = {
      {"distortion_z1", r.ci95.distortion_z1},
      {"distortion_z2", r.ci95.distortion_z2},
      {"mismatch_rate", r.ci95.mismatch_rate},
      {"psi_mismatch_rate", r.ci95.psi_mismatch_rate},
      {"decode_failure_rate", r.ci95.decode_failure_rate},
      {"decode_success_rate", r.ci95.decode_success_rate},
  };
  j["trials"] = r.trials;
  j["master_seed"] = r.master_seed;
  return j.dump(indent);
}

std::string report_to_csv(const TrialReport& r) {
  const auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
  std::string header =
      "scheme,code,p,n,r,k,dither,distortion_z1,distortion_z2,mismatch_rate,psi_mismatch_rate,"
      "decode_failure_rate,decode_success_rate,quantization_error_correlation,rate1,rate2,"
      "ci95_distortion_z1,ci95_distortion_z2,ci95_mismatch_rate,ci95_psi_mismatch_rate,"
      "ci95_decode_failure_rate,ci95_decode_success_rate,trials,master_seed\n";
  std::vector<std::string> cells = {r.scheme,
                                    r.code,
                                    format_double(r.p),
                                    std::to_string(r.n),
                                    opt(r.r),
                                    opt(r.k),
                                    r.dither ? "true" : "false",
                                    format_double(r.distortion_z1),
                                    format_double(r.distortion_z2),
                                    format_double(r.mismatch_rate),
                                    format_double(r.psi_mismatch_rate),
                                    format_double(r.decode_failure_rate),
                                    format_double(r.decode_success_rate),
                                    format_double(r.quantization_error_correlation),
                                    format_double(r.rate1),
                                    format_double(r.rate2),
                                    format_double(r.ci95.distortion_z1),
                                    format_double(r.ci95.distortion_z2),
                                    format_double(r.ci95.mismatch_rate),
                                    format_double(r.ci95.psi_mismatch_rate),
                                    format_double(r.ci95.decode_failure_rate),
                                    format_double(r.ci95.decode_success_rate),
                                    std::to_string(r.trials),
                                    std::to_string(r.master_seed)};
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  return header + row + "\n";
}

}  // namespace sumrecon
