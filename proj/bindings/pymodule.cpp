// pymodule.cpp
// ------------
// Python bindings for the toda-networks library. Exact polynomials cross the
// boundary as strings or JSON; numerical trajectories as plain lists.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "annular/annular.hpp"
#include "cluster/cluster.hpp"
#include "exactalg/laurent.hpp"
#include "jacobian/jacobian.hpp"
#include "network/network.hpp"
#include "toda/toda.hpp"

namespace py = pybind11;
using exactalg::LaurentPoly;
using network::Angle;

namespace {

Angle parse_angle(double turns) {
  // Snap a double phase to a rational with denominator 10^6.
  long long num = (long long)std::llround(turns * 1000000.0);
  return Angle(num, 1000000);
}

LaurentPoly hamiltonian_poly(int n, int k, const std::string& method, char coords) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (method == "matrix") return todasys::hamiltonian_matrix(n, k, coords);
  if (coords != 'x')
    throw std::invalid_argument("only the matrix method supports y-coordinates");
  if (method == "paths") {
    LaurentPoly hy = annular::hamiltonian_paths(n, k);
    return exactalg::substitute(hy, todasys::y_to_x(n), todasys::x_ring(n));
  }
  if (method == "cc") return jacobian::cluster_character(n, k);
  if (method == "network") return network::holonomy_trace(n + 1, k, Angle(1, 1000));
  throw std::invalid_argument("unknown method: " + method);
}

}  // namespace

PYBIND11_MODULE(_todanets, m) {
  m.doc() = "Exact relativistic Toda Hamiltonians and spectral networks";

  m.def(
      "hamiltonian",
      [](int n, int k, const std::string& method, const std::string& coords) {
        return exactalg::to_string(hamiltonian_poly(n, k, method, coords.at(0)));
      },
      py::arg("n"), py::arg("k"), py::arg("method") = "matrix", py::arg("coords") = "x",
      "Hamiltonian H_k of the rank-n chain as a canonical string.");

  m.def(
      "hamiltonian_json",
      [](int n, int k, const std::string& method) {
        return exactalg::to_json(hamiltonian_poly(n, k, method, 'x')).dump();
      },
      py::arg("n"), py::arg("k"), py::arg("method") = "matrix",
      "Hamiltonian H_k in x-coordinates as a JSON string.");

  m.def(
      "submodule_count",
      [](int n, int i) {
        return jacobian::enumerate_submodules(jacobian::build_coefficient_quiver(n, i))
            .size();
      },
      py::arg("n"), py::arg("i"),
      "Number of successor-closed subsets of the coefficient quiver of M_i.");

  m.def(
      "submodule_dimension_vectors",
      [](int n, int i) {
        return jacobian::enumerate_submodules(jacobian::build_coefficient_quiver(n, i));
      },
      py::arg("n"), py::arg("i"),
      "Sorted dimension vectors over the 2n quiver vertices.");

  m.def(
      "mutate",
      [](int n, const std::vector<int>& seq) {
        cluster::Quiver q = cluster::build_Qn(n);
        for (int k : seq) q = cluster::mutate_quiver(q, k);
        return q.adj;
      },
      py::arg("n"), py::arg("sequence"),
      "Signed adjacency matrix of Q_n after a 1-based mutation sequence.");

  m.def(
      "quiver_dot", [](int n) { return cluster::quiver_dot(cluster::build_Qn(n)); },
      py::arg("n"), "Graphviz DOT source for Q_n.");

  m.def(
      "bps_quiver",
      [](int N, double theta) {
        return network::bps_spectrum(N, parse_angle(theta)).quiver.adj;
      },
      py::arg("N"), py::arg("theta") = 0.001,
      "Signed adjacency matrix of the BPS quiver at phase theta (turns).");

  m.def(
      "trace",
      [](int N, double phi, std::complex<double> z0, double step, double t_max) {
        network::Trajectory tr = network::trace_trajectory(N, phi, z0, step, t_max);
        py::dict out;
        out["t"] = tr.t;
        out["z"] = tr.z;
        out["branch"] = tr.w;
        out["monotonicity"] = tr.monotonicity;
        out["termination"] = tr.termination;
        return out;
      },
      py::arg("N"), py::arg("phi"), py::arg("z0"), py::arg("step") = 0.01,
      py::arg("t_max") = 10.0,
      "Trace a wall trajectory; returns dict of samples and classification.");
}
