// toda_cli.cpp
// ------------
// Command-line front end: Hamiltonians by four methods, quiver/seed
// mutation, submodule listings, BPS spectra, wall trajectories, the
// cross-method verification driver, and DOT/CSV export.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <atomic>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "annular/annular.hpp"
#include "cluster/cluster.hpp"
#include "exactalg/polymatrix.hpp"
#include "jacobian/jacobian.hpp"
#include "network/network.hpp"
#include "toda/toda.hpp"

using exactalg::LaurentPoly;
using exactalg::Ring;
using nlohmann::json;

namespace {

int max_threads() {
  if (const char* s = std::getenv("TODA_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? (int)hc : 1;
}

network::Angle parse_turns(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long p = std::stoll(s.substr(0, slash));
    long long q = std::stoll(s.substr(slash + 1));
    return network::Angle(p, q);
  }
  // Decimal turns with up to 6 digits kept exactly.
  double v = std::stod(s);
  return network::Angle((long long)std::llround(v * 1000000), 1000000);
}

std::complex<double> parse_complex(std::string s) {
  // Accepts forms like "0.3+0.4i", "-0.3-0.4i", "0.5", "0.7i".
  if (!s.empty() && (s.back() == 'i' || s.back() == 'j')) {
    s.pop_back();
    size_t split = s.find_last_of("+-");
    if (split == std::string::npos || split == 0)
      return {0.0, std::stod(s.empty() || s == "+" ? "1" : (s == "-" ? "-1" : s))};
    return {std::stod(s.substr(0, split)), std::stod(s.substr(split))};
  }
  return {std::stod(s), 0.0};
}

LaurentPoly hamiltonian_by(const std::string& method, int n, int k, char coords) {
  if (method == "matrix") return todasys::hamiltonian_matrix(n, k, coords);
  if (method == "paths") {
    LaurentPoly p = annular::hamiltonian_paths(n, k);
    if (coords == 'y') return p;
    return exactalg::substitute(p, todasys::y_to_x(n), todasys::x_ring(n));
  }
  if (method == "cc") {
    if (coords != 'x') throw CLI::ValidationError("--method cc supports --coords x only");
    return jacobian::cluster_character(n, k);
  }
  if (method == "network") {
    if (coords != 'x') throw CLI::ValidationError("--method network supports --coords x only");
    return network::holonomy_trace(n + 1, k, network::Angle(1, 1000));
  }
  throw CLI::ValidationError("unknown method " + method);
}

LaurentPoly hamiltonian_cc(int n, int k) {
  // H_k = sum over i with the prop applied? The k-th Hamiltonian is the
  // cluster character of M over J(Q_n, W_n) at i = n+1-k.
  return jacobian::cluster_character(n, k);
}

void emit_poly(const LaurentPoly& p, bool as_json) {
  if (as_json)
    std::cout << exactalg::to_json(p).dump() << "\n";
  else
    std::cout << exactalg::to_string(p) << "\n";
}

json quiver_json(const cluster::Quiver& q) {
  json j;
  j["n"] = q.n;
  j["adj"] = q.adj;
  return j;
}

// ---- verify driver ---------------------------------------------------------

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

std::string first_difference(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly d = a - b;
  if (d.is_zero()) return "";
  const auto& [e, c] = *d.terms().begin();
  std::ostringstream os;
  os << "first differing monomial has exponent numerators (";
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ") coefficient delta " << c.str();
  return os.str();
}

int run_verify(int n_max, int N_max) {
  std::vector<std::function<Check()>> jobs;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k)
      jobs.push_back([n, k] {
        LaurentPoly m = todasys::hamiltonian_matrix(n, k, 'x');
        LaurentPoly p = exactalg::substitute(annular::hamiltonian_paths(n, k),
                                             todasys::y_to_x(n), todasys::x_ring(n));
        LaurentPoly c = hamiltonian_cc(n, k);
        std::ostringstream name;
        name << "hamiltonian n=" << n << " k=" << k << " matrix=paths=cc";
        if (!(m == p)) return Check{name.str(), false, "matrix vs paths: " + first_difference(m, p)};
        if (!(m == c)) return Check{name.str(), false, "matrix vs cc: " + first_difference(m, c)};
        return Check{name.str(), true, ""};
      });
  for (int n = 1; n <= n_max; ++n)
    for (int i = 1; i <= n; ++i)
      jobs.push_back([n, i] {
        auto g = jacobian::build_coefficient_quiver(n, i);
        auto dims = jacobian::submodule_mtuples(g);
        auto oracle = annular::mtuple_oracle(n, i);
        std::ostringstream name, det;
        name << "submodules n=" << n << " i=" << i;
        det << dims.size() - 2 << " proper submodules (" << dims.size() << " total)";
        return Check{name.str(), dims == oracle, det.str()};
      });
  for (int N = 2; N <= N_max; ++N)
    jobs.push_back([N] {
      auto d = network::bps_spectrum(N, network::Angle(1, 1000));
      std::ostringstream name;
      name << "bps quiver N=" << N << " = Q_" << N - 1;
      return Check{name.str(), d.quiver == cluster::build_Qn(N - 1), ""};
    });
  for (int N = 2; N <= N_max; ++N)
    for (int k = 1; k <= N - 1; ++k)
      jobs.push_back([N, k] {
        LaurentPoly t = network::holonomy_trace(N, k, network::Angle(1, 1000));
        LaurentPoly m = todasys::hamiltonian_matrix(N - 1, k, 'x');
        std::ostringstream name;
        name << "holonomy N=" << N << " k=" << k;
        return Check{name.str(), t == m, first_difference(t, m)};
      });

  // Fan out with a bounded pool; assemble output in submission order.
  int pool = max_threads();
  std::vector<Check> results(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t j; (j = next.fetch_add(1)) < jobs.size();) results[j] = jobs[j]();
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < std::min<int>(pool, (int)jobs.size()); ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  bool all_ok = true;
  for (const Check& c : results) {
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic Toda Hamiltonians, cluster characters, and spectral networks"};
  app.require_subcommand(1);

  // hamiltonian
  int h_n = 1, h_k = 1, h_N = 0;
  std::string h_method = "matrix", h_coords = "x";
  bool h_json = false;
  auto* cmd_h = app.add_subcommand("hamiltonian", "Compute H_k for the rank-n chain");
  cmd_h->add_option("--n", h_n, "chain rank n >= 1");
  cmd_h->add_option("--N", h_N, "gauge rank N (network method; n = N-1)");
  cmd_h->add_option("--k", h_k, "Hamiltonian index, 1 <= k <= n")->required();
  cmd_h->add_option("--method", h_method)->check(CLI::IsMember({"matrix", "paths", "cc", "network"}));
  cmd_h->add_option("--coords", h_coords)->check(CLI::IsMember({"x", "y"}));
  cmd_h->add_flag("--json", h_json);

  // mutate
  std::string m_quiver = "Q2", m_seq;
  bool m_json = false;
  auto* cmd_m = app.add_subcommand("mutate", "Mutate Q_n and its seed along a vertex sequence");
  cmd_m->add_option("--quiver", m_quiver, "Qn, e.g. Q3");
  cmd_m->add_option("--seq", m_seq, "comma-separated 1-based vertices");
  cmd_m->add_flag("--json", m_json);

  // submodules
  int s_n = 2, s_i = 1;
  std::string s_lambda;
  bool s_json = false;
  auto* cmd_s = app.add_subcommand("submodules", "Submodule dimension vectors of M_i over J(Q_n, W_n)");
  cmd_s->add_option("--n", s_n)->required();
  cmd_s->add_option("--i", s_i)->required();
  cmd_s->add_option("--lambda", s_lambda, "p:q, cross-check via explicit matrices");
  cmd_s->add_flag("--json", s_json);

  // bps
  int b_N = 3;
  std::string b_theta = "1/1000";
  bool b_dot = false;
  auto* cmd_b = app.add_subcommand("bps", "Strong-coupling BPS spectrum and quiver");
  cmd_b->add_option("--N", b_N)->required();
  cmd_b->add_option("--theta", b_theta, "phase in turns (rational p/q or decimal)");
  cmd_b->add_flag("--dot", b_dot, "print the BPS quiver in DOT");

  // trace
  int t_N = 2;
  double t_phi = -1.5707963267948966, t_step = 0.02, t_tmax = 30.0;
  std::string t_z0 = "0.3+0.4i", t_csv;
  auto* cmd_t = app.add_subcommand("trace", "Trace one wall trajectory");
  cmd_t->add_option("--N", t_N)->required();
  cmd_t->add_option("--phi", t_phi, "phase in radians");
  cmd_t->add_option("--z0", t_z0, "start point, e.g. 0.3+0.4i");
  cmd_t->add_option("--step", t_step);
  cmd_t->add_option("--tmax", t_tmax);
  cmd_t->add_option("--csv", t_csv, "output CSV path (stdout if omitted)");

  // verify
  int v_nmax = 3, v_Nmax = 4;
  auto* cmd_v = app.add_subcommand("verify", "Cross-method verification suite");
  cmd_v->add_option("--n-max", v_nmax)->check(CLI::Range(1, 7));
  cmd_v->add_option("--N-max", v_Nmax)->check(CLI::Range(2, 8));

  // export
  std::string e_kind, e_out;
  int e_n = 2;
  auto* cmd_e = app.add_subcommand("export", "Deterministic DOT/CSV export");
  cmd_e->add_option("--kind", e_kind)->required()->check(CLI::IsMember({"quiver-dot", "graph-dot", "traj-csv"}));
  cmd_e->add_option("--n", e_n);
  cmd_e->add_option("--N", t_N);
  cmd_e->add_option("--phi", t_phi);
  cmd_e->add_option("--z0", t_z0);
  cmd_e->add_option("--step", t_step);
  cmd_e->add_option("--tmax", t_tmax);
  cmd_e->add_option("--out", e_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_h->parsed()) {
      if (h_N > 0) h_n = h_N - 1;
      if (h_n < 1 || h_k < 1 || h_k > h_n) {
        std::cerr << "hamiltonian: need n >= 1 and 1 <= k <= n\n";
        return 2;
      }
      char coords = h_coords[0];
      if ((h_method == "cc" || h_method == "network") && coords != 'x') {
        std::cerr << "hamiltonian: method " << h_method << " supports --coords x only\n";
        return 2;
      }
      emit_poly(hamiltonian_by(h_method, h_n, h_k, coords), h_json);
      return 0;
    }
    if (cmd_m->parsed()) {
      if (m_quiver.size() < 2 || m_quiver[0] != 'Q') {
        std::cerr << "mutate: --quiver must look like Q3\n";
        return 2;
      }
      int n = std::stoi(m_quiver.substr(1));
      cluster::SeedA seed = cluster::initial_seed_a(cluster::build_Qn(n));
      std::stringstream seq(m_seq);
      std::string tok;
      while (std::getline(seq, tok, ',')) {
        if (tok.empty()) continue;
        int k = std::stoi(tok);
        if (k < 1 || k > seed.quiver.n) {
          std::cerr << "mutate: vertex " << k << " out of range\n";
          return 2;
        }
        seed = cluster::mutate_seed_a(seed, k);
      }
      json out;
      out["quiver"] = quiver_json(seed.quiver);
      json vars = json::array();
      for (const auto& v : seed.vars) vars.push_back(exactalg::to_json(v));
      out["cluster_vars"] = vars;
      if (m_json)
        std::cout << out.dump() << "\n";
      else {
        std::cout << cluster::quiver_dot(seed.quiver);
        for (size_t j = 0; j < seed.vars.size(); ++j)
          std::cout << "x" << j + 1 << " = " << exactalg::to_string(seed.vars[j]) << "\n";
      }
      return 0;
    }
    if (cmd_s->parsed()) {
      if (s_n < 1 || s_i < 1 || s_i > s_n) {
        std::cerr << "submodules: need 1 <= i <= n\n";
        return 2;
      }
      auto g = jacobian::build_coefficient_quiver(s_n, s_i);
      auto dims = jacobian::enumerate_submodules(g);
      if (!s_lambda.empty()) {
        auto colon = s_lambda.find(':');
        if (colon == std::string::npos) {
          std::cerr << "submodules: --lambda must be p:q\n";
          return 2;
        }
        long long p = std::stoll(s_lambda.substr(0, colon));
        long long q = std::stoll(s_lambda.substr(colon + 1));
        auto mod = jacobian::build_module_matrices(s_n, s_i, p, q);
        auto sups = jacobian::submodule_supports_from_matrices(mod);
        std::vector<std::vector<int>> dims2;
        for (const auto& m : sups) {
          std::vector<int> dv(2 * s_n, 0);
          for (size_t j = 0; j < m.size(); ++j)
            if (m[j]) dv[mod.basis[j].first - 1]++;
          dims2.push_back(dv);
        }
        std::sort(dims2.begin(), dims2.end());
        if (dims != dims2) {
          std::cerr << "submodules: matrix-based enumeration disagrees\n";
          return 1;
        }
      }
      if (s_json) {
        json out;
        out["n"] = s_n;
        out["i"] = s_i;
        out["dimension"] = g.verts.size();
        out["count"] = dims.size();
        out["dimension_vectors"] = dims;
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "dim M = " << g.verts.size() << ", " << dims.size() << " submodules\n";
        for (const auto& d : dims) {
          for (size_t j = 0; j < d.size(); ++j) std::cout << (j ? " " : "") << d[j];
          std::cout << "\n";
        }
      }
      return 0;
    }
    if (cmd_b->parsed()) {
      if (b_N < 2) {
        std::cerr << "bps: need N >= 2\n";
        return 2;
      }
      auto d = network::bps_spectrum(b_N, parse_turns(b_theta));
      if (b_dot) {
        std::cout << cluster::quiver_dot(d.quiver);
        return 0;
      }
      auto show_pairs = [](const char* tag, const std::vector<network::Pair>& v) {
        std::cout << tag << " = {";
        for (size_t j = 0; j < v.size(); ++j)
          std::cout << (j ? ", " : "") << v[j].first << v[j].second;
        std::cout << "}\n";
      };
      std::cout << "sigma = ";
      for (int x : d.split.sigma) std::cout << x;
      std::cout << "\n";
      show_pairs("Delta_a", d.split.Delta_a);
      show_pairs("Delta_b", d.split.Delta_b);
      show_pairs("Phi", d.split.Phi);
      auto show_class = [](const network::HomologyClass& c) {
        for (int j = 0; j < c.N - 1; ++j)
          std::cout << " " << c.A[j] << "A" << j + 1 << (c.B[j] >= 0 ? "+" : "") << c.B[j]
                    << "B" << j + 1;
        std::cout << "\n";
      };
      for (int k = 1; k <= b_N - 1; ++k) {
        std::cout << "gamma_" << k << " (vertex " << d.vertex_gamma[k - 1] << "):";
        show_class(d.gamma[k - 1]);
        std::cout << "gamma'_" << k << " (vertex " << d.vertex_gammap[k - 1] << "):";
        show_class(d.gammap[k - 1]);
      }
      std::cout << d.positive.size() << " positive classes\n";
      return 0;
    }
    if (cmd_t->parsed()) {
      auto tr = network::trace_trajectory(t_N, t_phi, parse_complex(t_z0), t_step, t_tmax);
      std::string csv = network::trajectory_csv(tr);
      if (t_csv.empty()) {
        std::cout << csv;
      } else {
        std::ofstream f(t_csv, std::ios::binary);
        f << csv;
      }
      std::cerr << "monotonicity=" << tr.monotonicity << " termination=" << tr.termination
                << "\n";
      return 0;
    }
    if (cmd_v->parsed()) return run_verify(v_nmax, v_Nmax);
    if (cmd_e->parsed()) {
      std::string data;
      if (e_kind == "quiver-dot")
        data = cluster::quiver_dot(cluster::build_Qn(e_n));
      else if (e_kind == "graph-dot")
        data = annular::graph_dot(annular::build_Ni(e_n));
      else
        data = network::trajectory_csv(
            network::trace_trajectory(t_N, t_phi, parse_complex(t_z0), t_step, t_tmax));
      std::ofstream f(e_out, std::ios::binary);
      if (!f) {
        std::cerr << "export: cannot open " << e_out << "\n";
        return 1;
      }
      f << data;
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
