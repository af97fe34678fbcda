#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumrecon/linear_codes.hpp"

namespace sumrecon {

enum class SchemeKind {
  lkm,            // one central lossy sum decoder
  csr_lkm,        // the same decoder run at both terminals
  csr_steinberg,  // two common-reconstruction codes
};

enum class CrVariant { full_index, syndrome_binned };

std::string_view to_string(SchemeKind kind);
SchemeKind parse_scheme_kind(std::string_view text);

/// Everything needed to build one scheme instance.
///
/// V for the sum schemes is the identity when r == n and otherwise the
/// first r rows of a random invertible matrix drawn from v_seed. CR codes
/// use the information-position bin matrix with k rows.
struct SchemeConfig {
  SchemeKind scheme = SchemeKind::csr_lkm;
  double p = 0.2;
  std::size_t n = 7;
  CodeSpec code = CodeSpec::hamming74();
  std::optional<std::size_t> r;
  std::optional<std::size_t> k;
  CrVariant variant = CrVariant::full_index;
  bool dither = true;
  std::uint64_t v_seed = 1;
};

struct TrialConfig {
  SchemeConfig scheme;
  std::size_t trials = 1000;
  std::uint64_t master_seed = 0;
};

struct ConfidenceIntervals {
  double distortion_z1 = 0.0;
  double distortion_z2 = 0.0;
  double mismatch_rate = 0.0;
  double psi_mismatch_rate = 0.0;
  double decode_failure_rate = 0.0;
  double decode_success_rate = 0.0;
};

/// Aggregate of one experiment. Distortions are mean per-symbol Hamming
/// distortion of Z against each terminal's output; ci95 half-widths are
/// 1.96 * sqrt(sample variance / trials).
struct TrialReport {
  std::string scheme;
  std::string code;
  double p = 0.0;
  std::size_t n = 0;
  std::optional<std::size_t> r;
  std::optional<std::size_t> k;
  bool dither = true;
  double distortion_z1 = 0.0;
  double distortion_z2 = 0.0;
  double mismatch_rate = 0.0;
  double psi_mismatch_rate = 0.0;
  double decode_failure_rate = 0.0;
  /// Fraction of trials where every decoder recovered its intended target.
  double decode_success_rate = 0.0;
  /// Pearson correlation of the two encoders' quantization-error symbols,
  /// pooled over all trials and positions.
  double quantization_error_correlation = 0.0;
  double rate1 = 0.0;
  double rate2 = 0.0;
  ConfidenceIntervals ci95;
  std::size_t trials = 0;
  std::uint64_t master_seed = 0;
};

/// Builds the scheme once (so configuration errors surface before any
/// trial runs), then executes trials k = 0..trials-1 with per-trial seed
/// derive_seed(master_seed, k). Within a trial the source pair uses
/// derive_seed(trial_seed, 0) and the dithers derive_seed(trial_seed, 1).
/// threads == 0 means hardware concurrency. Results do not depend on
/// the thread count.
TrialReport run_experiment(const TrialConfig& config, unsigned threads = 0);

enum class SweepAxis { r, k, p, n, trials };
SweepAxis parse_sweep_axis(std::string_view text);

/// One report per value; point i runs with master seed
/// derive_seed(config.master_seed, i).
std::vector<TrialReport> sweep(const TrialConfig& config, SweepAxis axis, const std::vector<double>& values,
                               unsigned threads = 0);

/// Parses the JSON scheme document
///   {scheme, p, n, code, r | k, trials, seed, dither, variant?, v_seed?}.
/// `code` is a string ("hamming7", "random:<m>:<seed>", ...) or an object
/// {"kind": ..., "m": ..., "seed": ...}; seeds may be numbers or strings.
TrialConfig trial_config_from_json(std::string_view json_text);

std::string report_to_json(const TrialReport& report, int indent = 2);
/// Header line plus one data row.
std::string report_to_csv(const TrialReport& report);

}  // namespace sumrecon
