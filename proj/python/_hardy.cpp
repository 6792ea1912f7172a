#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hardy/blaschke.hpp"
#include "hardy/errors.hpp"
#include "hardy/identities.hpp"
#include "hardy/io.hpp"
#include "hardy/mtbasis.hpp"
#include "hardy/multiscale.hpp"
#include "hardy/special.hpp"
#include "hardy/torus.hpp"
#include "hardy/unwind.hpp"

namespace py = pybind11;
using namespace hardy;
using torus::GridFunction;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

std::vector<Complex> to_vector(const ComplexArray& a) {
  if (a.ndim() != 1) throw DomainError("expected a one-dimensional array");
  return {a.data(), a.data() + a.size()};
}

ComplexArray to_array(std::span<const Complex> v) {
  ComplexArray out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

GridFunction grid(const ComplexArray& a) { return GridFunction(to_vector(a)); }

ComplexArray samples(const GridFunction& f) { return to_array(f.samples()); }

torus::FactorMethod factor_method(const std::string& name) {
  if (name == "automatic") return torus::FactorMethod::automatic;
  if (name == "cepstral") return torus::FactorMethod::cepstral;
  if (name == "roots") return torus::FactorMethod::roots;
  throw DomainError("method must be 'automatic', 'cepstral' or 'roots'");
}

mt::Domain domain(const std::string& name) {
  if (name == "disk") return mt::Domain::disk;
  if (name == "halfplane") return mt::Domain::halfplane;
  throw DomainError("domain must be 'disk' or 'halfplane'");
}

identities::DiracVariant dirac_variant(const std::string& name) {
  if (name == "inner") return identities::DiracVariant::inner;
  if (name == "reflected") return identities::DiracVariant::reflected;
  if (name == "literal") return identities::DiracVariant::literal;
  throw DomainError("variant must be 'inner', 'reflected' or 'literal'");
}

py::dict factor_pair(const torus::InnerOuterPair& p) {
  py::dict d;
  d["inner"] = samples(p.inner);
  d["outer"] = samples(p.outer);
  d["method"] = p.method == torus::FactorMethod::roots ? "roots" : "cepstral";
  d["modulus_deviation"] = p.modulus_deviation;
  d["reconstruction_error"] = p.reconstruction_error;
  d["inner_negative_spectrum"] = p.inner_negative_spectrum;
  return d;
}

py::dict expansion(const unwind::UnwindExpansion& e) {
  py::list terms;
  for (const auto& t : e.terms) {
    py::dict term;
    term["g"] = samples(t.g);
    term["cumulative_inner"] = samples(t.cumulative_inner);
    term["point"] = t.point ? py::cast(*t.point) : py::none();
    terms.append(term);
  }
  py::dict d;
  d["terms"] = terms;
  d["residual"] = samples(e.residual);
  d["residual_inner"] = samples(e.residual_inner);
  d["stopped"] = e.stopped;
  d["max_divisibility_defect"] = e.max_divisibility_defect;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hardy, m) {
  m.doc() = "Hardy-space toolkit: inner-outer factorization, unwinding, Malmquist-Takenaka bases";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto domain_error = py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<PoleError>(m, "PoleError", domain_error.ptr());
  py::register_exception<NearSingularError>(m, "NearSingularError", domain_error.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", error.ptr());
  py::register_exception<IndexError>(m, "IndexError", error.ptr());
  py::register_exception<GridMismatchError>(m, "GridMismatchError", error.ptr());
  py::register_exception<NotInnerError>(m, "NotInnerError", error.ptr());
  py::register_exception<ZeroFunctionError>(m, "ZeroFunctionError", error.ptr());
  py::register_exception<IllConditionedError>(m, "IllConditionedError", error.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", error.ptr());
  py::register_exception<QuadratureError>(m, "QuadratureError", error.ptr());
  py::register_exception<io::ParseError>(m, "ParseError", error.ptr());

  m.def("gamma", py::vectorize([](Complex z) { return special::gamma(z); }), py::arg("z"));
  m.def("log_gamma", py::vectorize([](Complex z) { return special::log_gamma(z); }), py::arg("z"));
  m.def("sin_pi", py::vectorize([](Complex z) { return special::sin_pi(z); }), py::arg("z"));

  m.def("grid_points", [](std::size_t n) {
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = GridFunction::point(n, k);
    return to_array(z);
  }, py::arg("n"), "e^{2 pi i k / n} for k = 0..n-1");
  m.def("from_coefficients", [](const ComplexArray& c, int first_index, std::size_t n) {
    return samples(GridFunction::from_coefficients(to_vector(c), first_index, n));
  }, py::arg("coeffs"), py::arg("first_index") = 0, py::arg("n") = torus::kDefaultGridSize);
  m.def("coefficients", [](const ComplexArray& f) { return to_array(grid(f).coefficients()); },
        py::arg("samples"), "Fourier coefficients in FFT order (index k at position k mod N).");
  m.def("riesz_project", [](const ComplexArray& f) { return samples(torus::riesz_project(grid(f))); },
        py::arg("samples"));
  m.def("project_invariant", [](const ComplexArray& f, const ComplexArray& u) {
    return samples(torus::project_invariant(grid(f), grid(u)));
  }, py::arg("f"), py::arg("u"));
  m.def("inner_outer_factor", [](const ComplexArray& f, double floor_eps, const std::string& method) {
    return factor_pair(torus::inner_outer_factor(grid(f), floor_eps, factor_method(method)));
  }, py::arg("samples"), py::arg("floor_eps") = torus::kDefaultFloorEps, py::arg("method") = "automatic");
  m.def("polynomial_degree", [](const ComplexArray& f) { return torus::polynomial_degree(grid(f)); },
        py::arg("samples"));
  m.def("lp_norm", [](const ComplexArray& f, double p) { return torus::lp_norm(grid(f), p); },
        py::arg("samples"), py::arg("p") = 2.0);
  m.def("inner_product", [](const ComplexArray& f, const ComplexArray& g) {
    return torus::inner_product(grid(f), grid(g));
  }, py::arg("f"), py::arg("g"));

  m.def("moebius", py::vectorize([](Complex a, Complex z) { return blaschke::moebius(a, z); }),
        py::arg("a"), py::arg("z"));
  m.def("disk_blaschke", [](const ComplexArray& zeros, const ComplexArray& z) {
    const blaschke::DiskBlaschke b(to_vector(zeros));
    std::vector<Complex> out;
    for (const Complex& w : to_vector(z)) out.push_back(blaschke::eval_disk(b, w));
    return to_array(out);
  }, py::arg("zeros"), py::arg("z"));
  m.def("sample_disk_blaschke", [](const ComplexArray& zeros, std::size_t n) {
    return samples(blaschke::sample(blaschke::DiskBlaschke(to_vector(zeros)), n));
  }, py::arg("zeros"), py::arg("n"));
  m.def("halfplane_blaschke", [](const ComplexArray& zeros, const ComplexArray& x, bool standard_factor) {
    const blaschke::HalfPlaneBlaschke b(to_vector(zeros), standard_factor ? blaschke::Convention::standard_factor
                                                                          : blaschke::Convention::none);
    std::vector<Complex> out;
    for (const Complex& w : to_vector(x)) out.push_back(blaschke::eval_halfplane(b, w));
    return to_array(out);
  }, py::arg("zeros"), py::arg("x"), py::arg("standard_factor") = true);

  py::class_<mt::MTSystem>(m, "MTSystem")
      .def(py::init([](const std::string& d, const ComplexArray& points) {
             return mt::MTSystem(domain(d), to_vector(points));
           }),
           py::arg("domain"), py::arg("points"))
      .def_property_readonly("domain", [](const mt::MTSystem& s) {
        return s.domain() == mt::Domain::disk ? "disk" : "halfplane";
      })
      .def_property_readonly("points", [](const mt::MTSystem& s) { return to_array(s.points()); })
      .def("__len__", &mt::MTSystem::size)
      .def("divergence_indicator", [](const mt::MTSystem& s) { return s.divergence_indicator(); })
      .def("function", [](const mt::MTSystem& s, std::size_t n, const ComplexArray& x) {
        std::vector<Complex> out;
        for (const Complex& w : to_vector(x)) out.push_back(mt::mt_function(s, n, w));
        return to_array(out);
      }, py::arg("n"), py::arg("x"))
      .def("sample_disk", [](const mt::MTSystem& s, std::size_t n, std::size_t grid_size) {
        return samples(mt::sample_disk(s, n, grid_size));
      }, py::arg("n"), py::arg("grid_size"))
      .def("analyze_disk", [](const mt::MTSystem& s, const ComplexArray& f, std::size_t count) {
        const auto c = mt::analyze_disk(grid(f), s, count);
        return py::make_tuple(to_array(c.values), c.residual_norms);
      }, py::arg("samples"), py::arg("count"), "Returns (coefficients, residual norms).")
      .def("synthesize", [](const mt::MTSystem& s, const ComplexArray& values, std::size_t grid_size) {
        mt::MTCoefficients c;
        c.values = to_vector(values);
        return samples(mt::synthesize(s, c, c.values.size(), grid_size));
      }, py::arg("coefficients"), py::arg("grid_size"));

  m.def("periodic_blaschke", py::vectorize([](Complex x) { return multiscale::periodic_blaschke(x); }),
        py::arg("x"));
  m.def("scaling_atom", py::vectorize([](Complex x) { return multiscale::scaling_atom(x); }), py::arg("x"));
  m.def("dyadic_inner", [](Complex x, int scales, bool include_j0) {
    const auto v = multiscale::dyadic_inner(x, {.scales = scales, .include_j0 = include_j0});
    return py::make_tuple(v.value, v.tail_bound);
  }, py::arg("x"), py::arg("scales") = 40, py::arg("include_j0") = false,
     "Returns (value, truncation bound).");
  m.def("wavelet", [](int n, int j, Complex x, int scales, bool include_j0) {
    return multiscale::wavelet({n, j}, x, {.scales = scales, .include_j0 = include_j0});
  }, py::arg("n"), py::arg("j"), py::arg("x"), py::arg("scales") = 40, py::arg("include_j0") = false);

  m.def("unwind_json", [](const ComplexArray& f, const std::string& strategy, std::size_t max_terms,
                          double stop_tol) {
    const auto s = io::strategy_from_json(io::Json::parse(strategy));
    return expansion(unwind::unwind(grid(f), s, max_terms, stop_tol));
  }, py::arg("samples"), py::arg("strategy"), py::arg("max_terms") = unwind::kDefaultMaxTerms,
     py::arg("stop_tol") = unwind::kDefaultStopTol);

  m.def("recur_residual", &identities::recur_residual, py::arg("x"));
  m.def("pro_unwinding_coefficients", &identities::pro_unwinding_coefficients, py::arg("terms"));
  m.def("pro_unwinding_partial", &identities::pro_unwinding_partial, py::arg("x"), py::arg("terms"));
  m.def("pro_unwinding_tail_bound", &identities::pro_unwinding_tail_bound, py::arg("terms"));
  m.def("dirac_inner_residual", [](double x, const std::string& variant) {
    return identities::dirac_inner_residual(x, dirac_variant(variant));
  }, py::arg("x"), py::arg("variant") = "inner");
}
