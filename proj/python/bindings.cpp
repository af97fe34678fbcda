#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sumrecon/bounds.hpp"
#include "sumrecon/entropy.hpp"
#include "sumrecon/errors.hpp"
#include "sumrecon/linear_codes.hpp"
#include "sumrecon/montecarlo.hpp"

namespace py = pybind11;
using namespace sumrecon;

namespace {

using Points = std::vector<std::pair<double, double>>;

Points to_pairs(const PiecewiseLinearCurve& c) {
  Points out;
  for (const auto& p : c.points()) out.emplace_back(p.x, p.y);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "sumrecon native core";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);
  // InvalidArgument derives from std::invalid_argument and maps to ValueError.

  m.def("binary_entropy", &binary_entropy, py::arg("x"));
  m.def("inverse_binary_entropy", &inverse_binary_entropy, py::arg("y"));
  m.def("bconv", &bconv, py::arg("a"), py::arg("b"));
  m.def("rate_cr", [](double p, double d) { return rate_cr(SourceParam{p}, d); }, py::arg("p"), py::arg("d"));

  m.def(
      "lower_convex_envelope",
      [](const Points& pts) {
        std::vector<CurvePoint> samples;
        for (const auto& [x, y] : pts) samples.push_back({x, y});
        return to_pairs(lower_convex_envelope(samples));
      },
      py::arg("points"), "Vertices of the lower convex envelope of (x, y) samples.");

  m.def(
      "bound_curves",
      [](double p, std::size_t grid) {
        const SourceParam sp{p};
        py::dict d;
        for (const auto& c : {wz_outer_curve(sp, grid), steinberg_inner_curve(sp, grid), lkm_inner_curve(sp, grid)}) {
          py::dict entry;
          entry["prehull"] = to_pairs(c.prehull);
          entry["hulled"] = to_pairs(c.hulled);
          d[py::str(std::string(to_string(c.kind)))] = entry;
        }
        return d;
      },
      py::arg("p"), py::arg("grid") = kDefaultGridSize,
      "Vertices of the outer and both inner bound curves on R1 = R2.");

  m.def(
      "membership",
      [](double r1, double r2, double d, double p) {
        const Membership mm = membership(RegionTriple::make(r1, r2, d), SourceParam{p});
        py::dict out;
        out["in_R_A"] = mm.in_r_a;
        out["in_R_B"] = mm.in_r_b;
        out["in_R_C"] = mm.in_r_c;
        out["in_TSE_outer"] = mm.in_tse_outer;
        return out;
      },
      py::arg("r1"), py::arg("r2"), py::arg("d"), py::arg("p"));

  m.def(
      "code_info",
      [](const std::string& code, std::size_t n) {
        const CodeSpec spec = CodeSpec::parse(code, n);
        const LinearCode c = LinearCode::build(spec);
        py::dict out;
        out["code"] = spec.name();
        out["n"] = c.n();
        out["m"] = c.m();
        out["q_eff"] = c.q_eff();
        out["marginals"] = c.marginals();
        out["covering_radius"] = c.covering_radius();
        out["parity_check"] = c.parity_check().to_strings();
        return out;
      },
      py::arg("code"), py::arg("n"));

  m.def(
      "quantize",
      [](const std::string& code, const std::string& x) {
        const BitVector v = BitVector::from_string(x);
        return LinearCode::build(CodeSpec::parse(code, v.size())).quantize(v).to_string();
      },
      py::arg("code"), py::arg("x"), "Nearest codeword to the '0'/'1' string x.");

  m.def(
      "min_weight_solve",
      [](const std::vector<std::string>& rows, const std::string& b) -> std::optional<std::string> {
        const auto z = min_weight_solve(BitMatrix::from_rows(rows), BitVector::from_string(b));
        if (!z) return std::nullopt;
        return z->to_string();
      },
      py::arg("rows"), py::arg("b"));

  m.def(
      "run_experiment_json",
      [](const std::string& config, unsigned threads) {
        const TrialConfig c = trial_config_from_json(config);
        py::gil_scoped_release release;
        return report_to_json(run_experiment(c, threads), -1);
      },
      py::arg("config"), py::arg("threads") = 0);
}
