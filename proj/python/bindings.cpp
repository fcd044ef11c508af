#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mopuc/campaign.hpp"
#include "mopuc/khrushchev.hpp"
#include "mopuc/overlap.hpp"
#include "mopuc/pathcount.hpp"
#include "mopuc/random.hpp"
#include "mopuc/reference_cases.hpp"

namespace py = pybind11;
using namespace mopuc;

namespace {

using Coeffs = std::vector<Matrix>;

SchurParameterSequence make_params(const Coeffs& alphas, const std::optional<Matrix>& terminal) {
  const std::size_t d = !alphas.empty() ? alphas[0].rows() : terminal ? terminal->rows() : 0;
  return SchurParameterSequence(d, alphas, terminal);
}

py::object to_python(const io::json& j) { return py::module_::import("json").attr("loads")(io::dump(j)); }

IndexSubspace subspace(const std::vector<std::size_t>& idx, const Matrix& u) {
  return IndexSubspace(idx, static_cast<std::size_t>(u.rows()));
}

SubspacePartition partition(const Matrix& u, const std::vector<std::size_t>& l, const std::vector<std::size_t>& c,
                            const std::vector<std::size_t>& r) {
  return SubspacePartition(subspace(l, u), subspace(c, u), subspace(r, u));
}

VerifyOptions options(std::size_t order, double tolerance, bool oracle) { return {order, tolerance, oracle}; }

}  // namespace

PYBIND11_MODULE(_mopuc, m) {
  m.doc() = "Block CMV / Hessenberg operators, matrix Schur functions and overlapping factorizations";

  py::register_exception<InvariantError>(m, "InvariantError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def(
      "random_parameters",
      [](std::size_t d, std::size_t length, std::uint64_t seed, bool terminal) {
        const auto p = random_parameters(d, length, seed, terminal);
        return py::make_tuple(p.alphas(), p.terminal());
      },
      py::arg("d"), py::arg("length"), py::arg("seed"), py::arg("terminal") = false);

  m.def(
      "build_operator",
      [](const Coeffs& alphas, const std::optional<Matrix>& terminal, const std::string& family,
         std::optional<std::size_t> blocks) {
        const auto p = make_params(alphas, terminal);
        const std::size_t n = blocks.value_or(p.size() + 1);
        return build_operator(BlockOperatorSpec::padded(p, parse_family(family), n)).matrix;
      },
      py::arg("alphas"), py::arg("terminal") = py::none(), py::arg("family") = "C", py::arg("blocks") = py::none());

  m.def(
      "synthesize",
      [](const Coeffs& alphas, const std::optional<Matrix>& terminal, std::size_t order) {
        return synthesize(make_params(alphas, terminal), order).coefficients();
      },
      py::arg("alphas"), py::arg("terminal") = py::none(), py::arg("order") = 16);

  m.def(
      "schur_parameters",
      [](const Coeffs& coeffs, std::size_t steps) {
        const auto p = schur_forward(MatrixSeries(coeffs), steps);
        return py::make_tuple(p.alphas(), p.terminal());
      },
      py::arg("coeffs"), py::arg("steps"));

  m.def(
      "schur_of_subspace",
      [](const Matrix& u, const std::vector<std::size_t>& v, std::size_t order) {
        return schur_of_subspace(u, subspace(v, u), order).f.coefficients();
      },
      py::arg("u"), py::arg("subspace"), py::arg("order") = 16);

  m.def(
      "first_return_amplitudes",
      [](const Matrix& u, const std::vector<std::size_t>& v, std::size_t horizon) {
        return first_return_amplitudes(u, subspace(v, u), horizon).a;
      },
      py::arg("u"), py::arg("subspace"), py::arg("horizon"));

  m.def(
      "oracle_first_return",
      [](const Matrix& u, const std::vector<std::size_t>& v, std::size_t n) {
        return oracle_first_return(u, subspace(v, u), n);
      },
      py::arg("u"), py::arg("subspace"), py::arg("n"));

  m.def(
      "return_probabilities",
      [](const Matrix& u, const std::vector<std::size_t>& v, const Vector& psi, std::size_t horizon) {
        return return_statistics(u, subspace(v, u), psi, horizon).probability;
      },
      py::arg("u"), py::arg("subspace"), py::arg("state"), py::arg("horizon"));

  m.def(
      "check_overlap",
      [](const Matrix& u, const std::vector<std::size_t>& l, const std::vector<std::size_t>& c,
         const std::vector<std::size_t>& r) { return to_python(io::to_json(check_overlap(u, partition(u, l, c, r)))); },
      py::arg("u"), py::arg("left"), py::arg("center"), py::arg("right"));

  m.def(
      "construct_overlap",
      [](const Matrix& u, const std::vector<std::size_t>& l, const std::vector<std::size_t>& c,
         const std::vector<std::size_t>& r) {
        const auto f = construct_overlap(u, partition(u, l, c, r));
        return py::make_tuple(f.u_lc, f.u_cr);
      },
      py::arg("u"), py::arg("left"), py::arg("center"), py::arg("right"));

  m.def(
      "verify_site",
      [](const Coeffs& alphas, const std::optional<Matrix>& terminal, const std::string& family, std::size_t j,
         std::size_t order, double tolerance, bool oracle) {
        return to_python(io::to_json(verify_site_formula(make_params(alphas, terminal), parse_family(family), j,
                                                         options(order, tolerance, oracle))));
      },
      py::arg("alphas"), py::arg("terminal") = py::none(), py::arg("family") = "C", py::arg("j") = 0,
      py::arg("order") = 12, py::arg("tolerance") = tol::series, py::arg("oracle") = false);

  m.def(
      "verify_range",
      [](const Coeffs& alphas, const std::optional<Matrix>& terminal, const std::string& family, std::size_t j,
         std::size_t k, std::size_t order, double tolerance) {
        const auto p = make_params(alphas, terminal);
        const Family f = parse_family(family);
        const auto opt = options(order, tolerance, false);
        return to_python(io::to_json(is_cmv(f) ? verify_range_formula(p, f, j, k, opt)
                                               : verify_hessenberg_formula(p, f, j, k, opt)));
      },
      py::arg("alphas"), py::arg("terminal") = py::none(), py::arg("family") = "C", py::arg("j") = 0,
      py::arg("k") = 1, py::arg("order") = 12, py::arg("tolerance") = tol::series);

  m.def(
      "verify_superposition",
      [](const Coeffs& alphas, const std::optional<Matrix>& terminal, std::size_t j, cplx beta, cplx gamma,
         bool hessenberg, std::size_t order, double tolerance) {
        const auto p = make_params(alphas, terminal);
        const auto opt = options(order, tolerance, false);
        return to_python(io::to_json(hessenberg ? verify_hessenberg_superposition(p, j, beta, gamma, opt)
                                                : verify_superposition(p, j, beta, gamma, opt)));
      },
      py::arg("alphas"), py::arg("terminal") = py::none(), py::arg("j") = 0, py::arg("beta") = cplx(1.0),
      py::arg("gamma") = cplx(0.0), py::arg("hessenberg") = false, py::arg("order") = 12,
      py::arg("tolerance") = tol::series);

  m.def("example_names", &cases::names);
  m.def(
      "verify_example",
      [](const std::string& name, std::size_t order, double tolerance) {
        return to_python(io::to_json(cases::verify(name, order, tolerance)));
      },
      py::arg("name"), py::arg("order") = 20, py::arg("tolerance") = 1e-10);

  m.def(
      "run_campaign",
      [](const std::string& text, std::size_t threads) {
        auto cfg = parse_campaign(io::json::parse(text));
        if (threads) cfg.threads = threads;
        const auto out = run_campaign(cfg);
        return py::make_tuple(out.exit_code, to_python(out.report));
      },
      py::arg("config"), py::arg("threads") = 0);
}
