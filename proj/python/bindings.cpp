#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radii/bounds.hpp"
#include "radii/errors.hpp"
#include "radii/extremal.hpp"
#include "radii/radii.hpp"
#include "radii/regions.hpp"
#include "radii/verify.hpp"

namespace py = pybind11;
using namespace radii;

namespace {

Region region_from(const std::string& name, std::optional<double> alpha) {
  const auto kind = parse_region_kind(name);
  if (!kind) throw Error(ErrorKind::DomainError, "unknown region '" + name + "'");
  if (*kind == RegionKind::StarlikeOrder) {
    if (!alpha) throw Error(ErrorKind::DomainError, "the starlike region requires alpha");
    return Region::starlike(*alpha);
  }
  return Region::of(*kind);
}

ClassParams params_from(const std::string& cls, double b, std::optional<double> c, double q) {
  const auto kind = parse_class_kind(cls);
  if (!kind) throw Error(ErrorKind::DomainError, "unknown class '" + cls + "'");
  if (*kind == ClassKind::H3) return ClassParams::h3(b, q);
  if (!c) throw Error(ErrorKind::DomainError, "class " + cls + " requires c");
  return *kind == ClassKind::H1 ? ClassParams::h1(b, *c, q) : ClassParams::h2(b, *c, q);
}

py::dict result_dict(const RadiusResult& r) {
  py::dict d;
  d["region"] = std::string(r.region.name());
  d["class"] = std::string(to_string(r.params.kind()));
  d["radius"] = r.radius;
  d["method"] = std::string(to_string(r.method));
  d["residual"] = r.residual;
  d["crosscheck"] = r.cross_check_discrepancy;
  d["sharp_claimed"] = r.sharp_claimed;
  d["justified"] = r.justified_flag;
  d["flagged"] = r.flagged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Radius constants for classes of analytic functions with fixed second coefficient";

  py::register_exception<Error>(m, "RadiiError", PyExc_ValueError);

  m.def("region_names", [] {
    std::vector<std::string> names;
    for (RegionKind k : all_region_kinds()) names.emplace_back(to_string(k));
    return names;
  });

  m.def("delta", [](const std::string& region, std::optional<double> alpha) {
    return region_from(region, alpha).delta();
  }, py::arg("region"), py::arg("alpha") = py::none());

  m.def("contains", [](const std::string& region, std::complex<double> w, std::optional<double> alpha) {
    return contains(region_from(region, alpha), w);
  }, py::arg("region"), py::arg("w"), py::arg("alpha") = py::none());

  m.def("inclusion_radius", [](const std::string& region, double center, std::optional<double> alpha) {
    return inclusion_radius(region_from(region, alpha), center);
  }, py::arg("region"), py::arg("center"), py::arg("alpha") = py::none());

  m.def("boundary_point", [](const std::string& region, double theta, std::optional<double> alpha) {
    return boundary_point(region_from(region, alpha), theta);
  }, py::arg("region"), py::arg("theta"), py::arg("alpha") = py::none());

  m.def("mccarty_upper", &mccarty_upper, py::arg("b"), py::arg("alpha"), py::arg("r"));
  m.def("mccarty_lower", [](double b, double alpha, double r) {
    const auto lb = mccarty_lower(b, alpha, r);
    py::dict d;
    d["C_b"] = lb.C_b;
    d["D_b"] = lb.D_b;
    d["R_b"] = lb.R_b;
    d["R_alpha"] = lb.R_alpha;
    d["value"] = lb.value;
    d["branch"] = lb.branch == LowerBranch::Small ? "small" : "large";
    return d;
  }, py::arg("b"), py::arg("alpha"), py::arg("r"));
  m.def("lemma2_condition", &lemma2_condition, py::arg("b"), py::arg("r"));

  m.def("disc_bound", [](const std::string& cls, double b, std::optional<double> c, double q, double r) {
    return disc_bound(params_from(cls, b, c, q), r);
  }, py::arg("cls"), py::arg("b"), py::arg("c"), py::arg("q"), py::arg("r"));

  m.def("theorem_coefficients", [](const std::string& region, const std::string& cls, double b,
                                   std::optional<double> c, double q, std::optional<double> alpha) {
    return theorem_equation(region_from(region, alpha), params_from(cls, b, c, q)).polynomial().coeffs();
  }, py::arg("region"), py::arg("cls"), py::arg("b"), py::arg("c"), py::arg("q"),
     py::arg("alpha") = py::none());

  m.def("compute_radius", [](const std::string& region, const std::string& cls, double b,
                             std::optional<double> c, double q, std::optional<double> alpha, double tol) {
    return result_dict(compute_radius(region_from(region, alpha), params_from(cls, b, c, q), tol));
  }, py::arg("region"), py::arg("cls"), py::arg("b"), py::arg("c"), py::arg("q"),
     py::arg("alpha") = py::none(), py::arg("tol") = kDefaultTolerance);

  m.def("sharpness_residual", [](const std::string& region, const std::string& cls, double b,
                                 std::optional<double> c, double q, double rho, std::optional<double> alpha) {
    const Region reg = region_from(region, alpha);
    const ClassParams params = params_from(cls, b, c, q);
    const auto witness = sharpness_witness(reg.kind(), params.kind());
    if (!witness) throw Error(ErrorKind::InvalidExtremal, "pair is not claimed sharp");
    return sharpness_residual(reg, witness->kind, params, rho);
  }, py::arg("region"), py::arg("cls"), py::arg("b"), py::arg("c"), py::arg("q"), py::arg("rho"),
     py::arg("alpha") = py::none());

  m.def("_verify_lemmas", [](std::size_t samples, std::uint64_t seed, double scale) {
    return to_json(verify_lemma_bounds(samples, seed, scale));
  }, py::arg("samples"), py::arg("seed"), py::arg("scale") = 1.0);
  m.def("_verify_crosscheck", [](std::size_t grid, std::uint64_t seed) {
    return to_json(verify_polynomial_crosscheck(grid, seed));
  }, py::arg("grid_size"), py::arg("seed"));
  m.def("_verify_tightness", [](const std::string& region, const std::string& cls, double b,
                                std::optional<double> c, double q, double margin, std::optional<double> alpha) {
    return to_json(verify_radius_tightness(region_from(region, alpha), params_from(cls, b, c, q), margin));
  }, py::arg("region"), py::arg("cls"), py::arg("b"), py::arg("c"), py::arg("q"),
     py::arg("margin") = kDefaultMargin, py::arg("alpha") = py::none());
}
