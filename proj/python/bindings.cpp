#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cubicmcm/betti.hpp"
#include "cubicmcm/charge_lattice.hpp"
#include "cubicmcm/cli.hpp"
#include "cubicmcm/error.hpp"
#include "cubicmcm/matfac.hpp"
#include "cubicmcm/mf_document.hpp"

namespace py = pybind11;
using namespace cubicmcm;

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

Charge charge(const Pair& c) { return {c.first, c.second}; }
Pair pair(const Charge& c) { return {c.r, c.d}; }

ObjectDescriptor descriptor(std::int64_t r, std::int64_t d, const std::string& variant) {
  ObjectDescriptor desc{{r, d}, parse_variant(variant), std::nullopt};
  desc.validate();
  return desc;
}

py::dict table_dict(const BettiTable& t) {
  py::dict out;
  for (const auto& [key, value] : t.entries()) out[py::make_tuple(key.first, key.second)] = value;
  return out;
}

py::dict report_dict(const MfReport& rep) {
  py::dict out;
  out["ok"] = rep.ok();
  out["ab"] = rep.ab_ok;
  out["ba"] = rep.ba_ok;
  out["f_homogeneous"] = rep.f_homogeneous;
  out["graded"] = rep.grading_ok;
  out["minimal"] = rep.minimal;
  out["failures"] = rep.failures;
  if (rep.grading) out["degrees"] = py::make_tuple(rep.grading->row_degrees, rep.grading->col_degrees);
  return out;
}

CurvePoint to_point(const Field& k, const std::vector<std::string>& coords) {
  if (coords.size() != 3) throw py::value_error("a point has three coordinates");
  return CurvePoint{{Scalar::parse(k, coords[0]), Scalar::parse(k, coords[1]), Scalar::parse(k, coords[2])}};
}

std::vector<std::string> from_point(const CurvePoint& p) {
  return {p[0].to_string(), p[1].to_string(), p[2].to_string()};
}

std::string build_mf(const std::string& kind, const std::string& field, const std::string& psi,
                     const std::optional<std::vector<std::string>>& point, bool explicit_form) {
  const Field k = Field::parse(field);
  const HesseCubic curve = hesse(Scalar::parse(k, psi));
  auto pick = [&](bool nonzero) {
    if (point) return to_point(k, *point);
    const auto pts = k.is_rational() ? rational_point_search(curve, 10, nonzero) : point_search(curve, nonzero);
    if (pts.empty()) fail(ErrorKind::NotOnCurve, "no suitable point found by search");
    return pts.front();
  };
  std::optional<MatrixFactorization> mf;
  if (kind == "koszul") {
    mf = koszul_hesse(curve);
  } else if (kind == "moore") {
    mf = moore_mf(curve, pick(true));
  } else if (kind == "skyscraper") {
    const CurvePoint p = pick(explicit_form);
    mf = explicit_form ? skyscraper_explicit(curve, p) : skyscraper_mf(curve, p);
  } else {
    throw py::value_error("kind must be koszul, moore or skyscraper");
  }
  mf->A.set_grading(infer_pair_grading(*mf));
  return encode_mf(make_document(*mf, curve.psi, kind));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Betti tables and matrix factorizations for MCM modules over a plane cubic";
  py::register_exception<Error>(m, "CubicMcmError", PyExc_ValueError);

  m.def("euler_form", [](const Pair& a, const Pair& b) { return euler_form(charge(a), charge(b)); });
  m.def("sigma_power", [](std::int64_t k, const Pair& c) { return pair(sigma_power(k, charge(c))); });
  m.def("reduce3", [](const Pair& c) {
    const Reduction red = reduce3(charge(c));
    return py::make_tuple(red.k, pair(red.charge));
  });
  m.def("reduce6", [](const Pair& c) {
    const Reduction red = reduce6(charge(c));
    return py::make_tuple(red.k, pair(red.charge));
  });
  m.def("orbit_V", [](std::int64_t j) {
    const OrbitEntry v = orbit_V(j);
    return py::make_tuple(pair(v.sheaf), v.shift);
  }, "V_j as (sheaf charge, cohomological shift)");

  m.def("h0", &h0, py::arg("r"), py::arg("d"), py::arg("atiyah") = false);
  m.def("betti_table", [](std::int64_t r, std::int64_t d, const std::string& variant) {
    return table_dict(betti_table(descriptor(r, d, variant)));
  }, py::arg("r"), py::arg("d"), py::arg("variant") = "generic",
        "{(i, j): beta_ij} for i in {0, 1}; a fundamental-domain charge is required");
  m.def("betti_general", [](std::int64_t r, std::int64_t d, const std::string& variant) {
    const GeneralBetti g = betti_general({r, d}, parse_variant(variant));
    py::dict out;
    out["table"] = table_dict(g.table);
    out["representative"] = to_string(g.representative);
    out["internal_shift"] = g.internal_shift;
    out["degree_shift"] = g.degree_shift;
    return out;
  }, py::arg("r"), py::arg("d"), py::arg("variant") = "generic");
  m.def("betti_at", [](std::int64_t r, std::int64_t d, std::int64_t i, std::int64_t j, const std::string& variant) {
    return betti_at(betti_general({r, d}, parse_variant(variant)), i, j);
  }, py::arg("r"), py::arg("d"), py::arg("i"), py::arg("j"), py::arg("variant") = "generic");
  m.def("hilbert", [](std::int64_t r, std::int64_t d, const std::string& variant) {
    const HilbertData h = hilbert_data(descriptor(r, d, variant));
    py::dict out;
    out["P"] = py::make_tuple(h.p.low, h.p.coeffs);
    out["e"] = h.multiplicity;
    out["mu"] = h.generators;
    out["rank"] = h.module_rank;
    return out;
  }, py::arg("r"), py::arg("d"), py::arg("variant") = "generic");
  m.def("hilbert_coefficients", [](std::int64_t r, std::int64_t d, std::int64_t n, const std::string& variant) {
    return hilbert_coefficients(descriptor(r, d, variant), n);
  }, py::arg("r"), py::arg("d"), py::arg("n"), py::arg("variant") = "generic");
  m.def("syzygy", [](std::int64_t r, std::int64_t d, const std::string& variant) {
    const SyzygyResult s = descriptor_syzygy(descriptor(r, d, variant));
    return py::make_tuple(to_string(s.descriptor), pair(s.descriptor.charge), to_string(s.descriptor.variant),
                          s.degree_shift);
  }, py::arg("r"), py::arg("d"), py::arg("variant") = "generic");
  m.def("is_ulrich", [](std::int64_t r, std::int64_t d, const std::string& variant) {
    return is_ulrich(Charge{r, d}, parse_variant(variant));
  }, py::arg("r"), py::arg("d"), py::arg("variant") = "generic");

  m.def("mf_build", &build_mf, py::arg("kind"), py::arg("field") = "q", py::arg("psi") = "0",
        py::arg("point") = std::nullopt, py::arg("explicit") = false, "factorization document as canonical JSON");
  m.def("mf_verify", [](const std::string& text) { return report_dict(verify_mf(decode_mf(text, false).mf)); });
  m.def("mf_betti", [](const std::string& text, const std::string& side) {
    return table_dict(betti_from_mf(decode_mf(text, true).mf, parse_side(side)));
  }, py::arg("document"), py::arg("side") = "A");
  m.def("points", [](const std::string& field, const std::string& psi, bool nonzero, std::int64_t height) {
    const Field k = Field::parse(field);
    const HesseCubic curve = hesse(Scalar::parse(k, psi));
    const auto pts = k.is_rational() ? rational_point_search(curve, height, nonzero) : point_search(curve, nonzero);
    std::vector<std::vector<std::string>> out;
    for (const auto& p : pts) out.push_back(from_point(p));
    return out;
  }, py::arg("field") = "q", py::arg("psi") = "0", py::arg("nonzero") = false, py::arg("height") = 10);

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "", "(exit code, stdout, stderr) of the command line");
}
