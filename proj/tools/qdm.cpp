// qdm: density-matrix parametrization toolbox.
//
// Subcommands: check | simulate | sample | family | basis | jarlskog | invariants
// Exit codes: 0 success, 1 domain failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qdm/basis.hpp"
#include "qdm/bloch.hpp"
#include "qdm/composite.hpp"
#include "qdm/dynamics.hpp"
#include "qdm/jarlskog.hpp"
#include "qdm/matrix.hpp"
#include "qdm/polarization.hpp"
#include "qdm/two_qubit.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  // unreadable input files are usage errors (exit 2), not domain failures
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw qdm::Error("cannot open output file: " + out_path);
    out << text;
  }
}

qdm::BasisSet make_basis(const std::string& tag, int n) {
  auto ordering = qdm::basis_ordering_from_string(tag);
  switch (ordering) {
    case qdm::BasisOrdering::Ggm:
      return qdm::ggm_basis(n);
    case qdm::BasisOrdering::PaperGellMann3:
      if (n != 3) throw qdm::BasisInvalid("paper-gellmann3 requires n = 3");
      return qdm::paper_gellmann3();
    case qdm::BasisOrdering::PauliTensor2Q:
      if (n != 4) throw qdm::BasisInvalid("pauli-tensor-2q requires n = 4");
      return qdm::two_qubit_basis();
  }
  throw qdm::BasisInvalid("unknown basis");
}

json coeffs_to_json(const qdm::CharCoeffs& c) {
  std::vector<double> a(c.a.data(), c.a.data() + c.a.size());
  return json(a);
}

int cmd_check(const std::string& basis_tag, int n, const std::string& vec_file,
              const std::string& matrix_file, double eps) {
  qdm::Matrix rho;
  if (!matrix_file.empty()) {
    rho = qdm::matrix_from_json(read_file(matrix_file));
    n = static_cast<int>(rho.rows());
  } else {
    auto v = qdm::BlochVector::from_json(read_file(vec_file));
    auto basis = make_basis(basis_tag.empty() ? qdm::to_string(v.basis) : basis_tag, v.n);
    rho = qdm::to_density(v, basis);
  }
  qdm::CharCoeffs coeffs;
  bool physical = qdm::is_physical(rho, eps, &coeffs);
  json out;
  out["physical"] = physical;
  out["coeffs"] = coeffs_to_json(coeffs);
  out["min_eig"] = qdm::min_eigenvalue(rho);
  std::cout << out.dump() << "\n";
  return 0;  // "physical": false is not an error
}

int cmd_simulate(double a, double b, double delta, const std::string& omega0_kind, double T,
                 double dt, const std::string& init_file, const std::string& out_csv) {
  qdm::ThreeLevelModel model;
  model.a = a;
  model.b = b;
  model.delta = delta;
  if (omega0_kind == "const")
    model.omega0 = [](double) { return 1.0; };
  else if (omega0_kind == "sin")
    model.omega0 = [](double t) { return std::sin(t); };
  else
    throw CLI::ValidationError("--omega0 must be 'const' or 'sin'");

  qdm::BlochVector v0;
  if (init_file.empty()) {
    // ground-level population: rho = diag(1,0,0)
    auto basis = qdm::paper_gellmann3();
    qdm::Matrix rho = qdm::Matrix::Zero(3, 3);
    rho(0, 0) = 1.0;
    v0 = qdm::from_density(rho, basis);
  } else {
    v0 = qdm::BlochVector::from_json(read_file(init_file));
  }
  auto basis = qdm::paper_gellmann3();
  auto h = [&](double t) { return qdm::hamiltonian_bloch(qdm::three_level_hamiltonian(model, t), basis); };
  auto traj = qdm::integrate(v0, h, basis, T, dt);
  if (!out_csv.empty()) write_output(traj.to_csv(&model), out_csv);

  auto lengths = qdm::conserved_lengths(traj, model);
  double dl3 = 0, dl4 = 0, dl1 = 0, d2 = 0, d3 = 0;
  for (size_t i = 0; i < lengths.size(); ++i) {
    dl3 = std::max(dl3, std::abs(lengths[i].l3 - lengths[0].l3));
    dl4 = std::max(dl4, std::abs(lengths[i].l4 - lengths[0].l4));
    dl1 = std::max(dl1, std::abs(lengths[i].l1 - lengths[0].l1));
    d2 = std::max(d2, std::abs(traj.tr2[i] - traj.tr2[0]));
    d3 = std::max(d3, std::abs(traj.tr3[i] - traj.tr3[0]));
  }
  json out;
  out["samples"] = traj.times.size();
  out["max_drift"] = {{"len_L3", dl3}, {"len_L4", dl4}, {"len_L1", dl1},
                      {"tr_rho2", d2}, {"tr_rho3", d3}};
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_sample(int n, std::uint64_t seed, int count, const std::string& composite_dims) {
  json states = json::array();
  if (composite_dims.empty()) {
    for (int i = 0; i < count; ++i) {
      auto p = qdm::sample(n, seed + static_cast<std::uint64_t>(i));
      auto rho = qdm::density_from_params(p);
      json e;
      e["params"] = json::parse(p.to_json());
      e["matrix"] = json::parse(qdm::matrix_to_json(rho));
      states.push_back(std::move(e));
    }
  } else {
    auto comma = composite_dims.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("--composite expects n,m");
    int cn = std::stoi(composite_dims.substr(0, comma));
    int cm = std::stoi(composite_dims.substr(comma + 1));
    for (int i = 0; i < count; ++i) {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
      // composite sampler: scalar Jarlskog levels on nm plus Haar-free local
      // rotations from the same stream
      qdm::CompositeParams p;
      p.n = cn;
      p.m = cm;
      auto base = qdm::sample(cn * cm, rng());
      p.eigenvalues = base.eigenvalues;
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (int k = 0; k < cn; ++k) {
        qdm::Matrix g(cm, cm);
        for (int r = 0; r < cm; ++r)
          for (int c = 0; c < cm; ++c) g(r, c) = qdm::cxd(gauss(rng), gauss(rng));
        Eigen::HouseholderQR<qdm::Matrix> qr(g);
        qdm::Matrix q = qr.householderQ();
        p.local_unitaries.push_back(q);
      }
      for (int j = 2; j <= cn; ++j) {
        std::vector<qdm::Matrix> col;
        for (int i2 = 0; i2 < j - 1; ++i2) {
          qdm::Matrix z(cm, cm);
          for (int r = 0; r < cm; ++r)
            for (int c = 0; c < cm; ++c) z(r, c) = 0.5 * qdm::cxd(gauss(rng), gauss(rng));
          col.push_back(z);
        }
        p.z_blocks.push_back(std::move(col));
      }
      auto rho = qdm::composite_density(p);
      json e;
      e["n"] = cn;
      e["m"] = cm;
      e["matrix"] = json::parse(qdm::matrix_to_json(rho));
      states.push_back(std::move(e));
    }
  }
  json out;
  out["states"] = std::move(states);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_family(const std::string& name, double x, double p, double alpha, double beta,
               const std::vector<double>& probs, bool ppt) {
  qdm::Matrix rho;
  if (name == "werner")
    rho = qdm::werner(x);
  else if (name == "werner-pt")
    rho = qdm::family_werner_pt(p);
  else if (name == "projector")
    rho = qdm::family_projector(alpha);
  else if (name == "two-param")
    rho = qdm::family_two_param(p, alpha);
  else if (name == "five-param") {
    if (probs.size() != 4) throw qdm::InvalidSimplex("five-param needs --probs p1,p2,p3,p4");
    rho = qdm::family_five_param(probs[0], probs[1], probs[2], probs[3], alpha, beta);
  } else if (name == "bell-diag") {
    if (probs.size() != 4) throw qdm::InvalidSimplex("bell-diag needs --probs p1,p2,p3,p4");
    rho = qdm::bell_diag(probs[0], probs[1], probs[2], probs[3]);
  } else {
    throw CLI::ValidationError("unknown family: " + name);
  }
  json out;
  out["matrix"] = json::parse(qdm::matrix_to_json(rho));
  if (ppt) {
    auto verdict = qdm::ppt_separable(rho, 2, 2);
    out["separable"] = verdict == qdm::Separability::Separable;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_basis(const std::string& tag, int n) {
  auto basis = make_basis(tag, n);
  std::cout << basis.to_json() << "\n";
  return 0;
}

int cmd_jarlskog_build(const std::string& params_file) {
  auto p = qdm::JarlskogParams::from_json(read_file(params_file));
  json out;
  out["unitary"] = json::parse(qdm::matrix_to_json(qdm::su_from_params(p)));
  out["density"] = json::parse(qdm::matrix_to_json(qdm::density_from_params(p)));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_invariants(const std::string& matrix_file, int kmax) {
  auto rho = qdm::matrix_from_json(read_file(matrix_file));
  json inv = json::array();
  for (int k = 1; k <= kmax; ++k) inv.push_back(qdm::trace_invariant(rho, k));
  json out;
  out["trace_invariants"] = std::move(inv);
  out["coeffs"] = coeffs_to_json(qdm::char_coeffs_newton(rho));
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"density-matrix parametrization toolbox"};
  app.require_subcommand(1);

  double eps = qdm::kPhysicalityTol;
  app.add_option("--eps", eps, "physicality tolerance")->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "test positivity of a state");
  int check_n = 0;
  std::string check_basis, check_vec, check_matrix;
  check->add_option("--n", check_n, "level count (Bloch-vector input)");
  check->add_option("--basis", check_basis, "basis ordering tag");
  check->add_option("--vec", check_vec, "Bloch vector JSON file");
  check->add_option("--matrix", check_matrix, "matrix JSON file");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "integrate three-level Bloch dynamics");
  std::string sim_model = "three-level", sim_omega0 = "const", sim_init, sim_out;
  double sim_a = 1, sim_b = 1, sim_delta = 0, sim_T = 10, sim_dt = 1e-3;
  simulate->add_option("--model", sim_model, "model name")->capture_default_str();
  simulate->add_option("--a", sim_a, "Rabi amplitude ratio a")->capture_default_str();
  simulate->add_option("--b", sim_b, "Rabi amplitude ratio b")->capture_default_str();
  simulate->add_option("--delta", sim_delta, "detuning")->capture_default_str();
  simulate->add_option("--omega0", sim_omega0, "const | sin")->capture_default_str();
  simulate->add_option("--t", sim_T, "duration")->capture_default_str();
  simulate->add_option("--dt", sim_dt, "step")->capture_default_str();
  simulate->add_option("--init", sim_init, "initial Bloch vector JSON file");
  simulate->add_option("--out", sim_out, "trajectory CSV output path");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw random density matrices");
  int sam_n = 2, sam_count = 1;
  std::uint64_t sam_seed = 0;
  std::string sam_composite;
  sample_cmd->add_option("--n", sam_n, "dimension")->capture_default_str();
  sample_cmd->add_option("--seed", sam_seed, "RNG seed")->capture_default_str();
  sample_cmd->add_option("--count", sam_count, "number of draws")->capture_default_str();
  sample_cmd->add_option("--composite", sam_composite, "composite dims n,m");

  // family
  auto* family = app.add_subcommand("family", "emit a named example state family");
  std::string fam_name;
  double fam_x = 0, fam_p = 0, fam_alpha = 0, fam_beta = 0;
  std::vector<double> fam_probs;
  bool fam_ppt = false;
  family->add_option("name", fam_name,
                     "werner | werner-pt | projector | two-param | five-param | bell-diag")
      ->required();
  family->add_option("--x", fam_x, "Werner parameter");
  family->add_option("--p", fam_p, "mixture parameter");
  family->add_option("--alpha", fam_alpha, "angle (rad)");
  family->add_option("--beta", fam_beta, "angle (rad)");
  family->add_option("--probs", fam_probs, "p1 p2 p3 p4")->expected(4);
  family->add_flag("--ppt", fam_ppt, "append PPT separability verdict");

  // basis
  auto* basis_cmd = app.add_subcommand("basis", "emit a generator basis");
  std::string bas_tag = "ggm";
  int bas_n = 2;
  basis_cmd->add_option("--ordering", bas_tag, "ggm | paper-gellmann3 | pauli-tensor-2q")
      ->capture_default_str();
  basis_cmd->add_option("--n", bas_n, "level count")->capture_default_str();

  // jarlskog build
  auto* jar = app.add_subcommand("jarlskog", "Jarlskog parametrization tools");
  auto* jar_build = jar->add_subcommand("build", "build SU(n) element and density matrix");
  std::string jar_params;
  jar_build->add_option("--params", jar_params, "JarlskogParams JSON file")->required();
  jar->require_subcommand(1);

  // invariants
  auto* inv = app.add_subcommand("invariants", "trace invariants of a matrix");
  std::string inv_matrix;
  int inv_kmax = 4;
  inv->add_option("--matrix", inv_matrix, "matrix JSON file")->required();
  inv->add_option("--kmax", inv_kmax, "highest power")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      if (check_vec.empty() == check_matrix.empty()) {
        std::cerr << "check: exactly one of --vec / --matrix is required\n";
        return 2;
      }
      return cmd_check(check_basis, check_n, check_vec, check_matrix, eps);
    }
    if (*simulate) {
      if (sim_model != "three-level") {
        std::cerr << "simulate: only --model three-level is supported\n";
        return 2;
      }
      return cmd_simulate(sim_a, sim_b, sim_delta, sim_omega0, sim_T, sim_dt, sim_init,
                          sim_out);
    }
    if (*sample_cmd) return cmd_sample(sam_n, sam_seed, sam_count, sam_composite);
    if (*family) return cmd_family(fam_name, fam_x, fam_p, fam_alpha, fam_beta, fam_probs,
                                   fam_ppt);
    if (*basis_cmd) return cmd_basis(bas_tag, bas_n);
    if (*jar_build) return cmd_jarlskog_build(jar_params);
    if (*inv) return cmd_invariants(inv_matrix, inv_kmax);
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const qdm::DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const qdm::Error& e) {
    nlohmann::json out;
    out["error"] = e.what();
    std::cout << out.dump() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
