// starlat command line: load algebra/lattice files, run the verification
// suites, emit deterministic JSON or text reports.
//
// Exit codes: 0 all expected outcomes, 1 verification failure, 2 input or
// usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starlat/fixtures.hpp"
#include "starlat/locality.hpp"
#include "starlat/ortholattice.hpp"
#include "starlat/report.hpp"
#include "starlat/star_algebra.hpp"
#include "starlat/states.hpp"
#include "starlat/subspace.hpp"
#include "starlat/wedderburn.hpp"

namespace {

using namespace starlat;

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

// exit code under --expect-fail: named checks must fail, all others must pass
int report_exit_code(const Report& rep, const std::vector<std::string>& expect_fail) {
  for (const auto& c : rep.cases) {
    bool expected_fail =
        std::find(expect_fail.begin(), expect_fail.end(), c.check) != expect_fail.end();
    if (c.pass == expected_fail) return 1;
  }
  return 0;
}

void print_report(const Report& rep, const std::string& format,
                  const std::vector<std::pair<std::string, nlohmann::ordered_json>>& extra = {}) {
  if (format == "text") {
    std::cout << rep.to_text();
    for (const auto& [k, v] : extra) std::cout << k << ": " << v.dump() << "\n";
  } else {
    nlohmann::ordered_json j = rep.to_json();
    for (const auto& [k, v] : extra) j[k] = v;
    std::cout << j.dump(2) << "\n";
  }
}

int cmd_verify_algebra(const std::string& path, std::uint64_t seed, long samples, long forms,
                       int workers, const std::string& format,
                       const std::vector<std::string>& expect_fail) {
  StarAlgebra a = algebra_from_json(load_json_file(path));
  Report rep = verify_algebra_axioms(a);
  rep.suite = "verify-algebra";
  rep.seed = seed;

  if (rep.all_pass()) {
    try {
      Report norms = verify_banach_cstar(a, samples, seed, workers);
      rep.merge(norms);
      rep.add("faithful_state_exists", true, 0.0);

      long disagreements = 0;
      std::optional<std::vector<double>> witness;
      for (long s = 0; s < forms; ++s) {
        Rng rng = sample_rng(seed ^ 0xf0f0f0f0ULL, static_cast<std::uint64_t>(s));
        Eigen::VectorXd f = random_symmetric_form(a, rng);
        Report eq = check_positivity_equivalence(a, f);
        if (!eq.find("agreement")->pass) {
          ++disagreements;
          if (!witness) witness = std::vector<double>(f.data(), f.data() + f.size());
        }
      }
      rep.add("positivity_equivalence_sweep", disagreements == 0, double(disagreements), witness);
    } catch (const NoStateError&) {
      rep.add("faithful_state_exists", false, 1.0);
    }
  }

  print_report(rep, format);
  return report_exit_code(rep, expect_fail);
}

int cmd_decompose(const std::string& path, std::uint64_t seed, const std::string& format) {
  StarAlgebra a = algebra_from_json(load_json_file(path));
  try {
    BlockDecomposition d = block_diagonalize(a, seed);
    nlohmann::ordered_json j = decomposition_to_json(d);
    if (format == "text") {
      std::cout << "blocks:";
      for (const auto& b : d.blocks) std::cout << " M_" << b.n << "(" << ring_name(b.ring) << ")";
      std::cout << "\nresidual: " << d.residual << "\nseed: " << d.seed << "\n";
    } else {
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  } catch (const NonSemisimpleError& e) {
    nlohmann::ordered_json j;
    j["error"] = e.what();
    j["radical_dim"] = e.radical_dim;
    std::cout << j.dump(2) << "\n";
    return 1;
  }
}

int cmd_tensor_deficit(const std::string& ring_str, int n, int m, const std::string& format) {
  Ring ring = ring_from_name(ring_str);
  DeficitRow row = deficit_row(ring, n, m);
  if (format == "text") {
    std::cout << "ring  n  m  sym_dim  span_dim  deficit\n";
    std::printf("%4s %2d %2d %8d %9d %8d\n", ring_name(ring), n, m, row.sym_dim, row.span_dim,
                row.deficit);
  } else {
    nlohmann::ordered_json j;
    j["ring"] = ring_name(ring);
    j["n"] = n;
    j["m"] = m;
    j["sym_dim"] = row.sym_dim;
    j["span_dim"] = row.span_dim;
    j["deficit"] = row.deficit;
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify_state(const std::string& path, const std::string& format,
                     const std::vector<std::string>& expect_fail) {
  StateFile sf = state_file_from_json(load_json_file(path));
  std::filesystem::path algebra_path = std::filesystem::path(sf.algebra_ref);
  if (algebra_path.is_relative())
    algebra_path = std::filesystem::path(path).parent_path() / algebra_path;
  StarAlgebra a = algebra_from_json(load_json_file(algebra_path.string()));
  if (sf.form.size() != a.dim) throw ParseError("state form length != algebra dim");

  Report rep = is_state(a, sf.form);
  rep.suite = "verify-state";
  if (rep.all_pass()) {
    rep.merge(check_positivity_equivalence(a, sf.form));
    State phi(a, sf.form);
    GnsRepresentation gns = gns_representation(a, phi);
    rep.merge(gns_contract_report(a, phi, gns));
    rep.add("gns_well_conditioned", !gns.ill_conditioned, gns.ill_conditioned ? 1.0 : 0.0);
    print_report(rep, format,
                 {{"gns_carrier_dim", nlohmann::ordered_json(gns.carrier_dim)}});
  } else {
    print_report(rep, format);
  }
  return report_exit_code(rep, expect_fail);
}

int cmd_verify_lattice(const std::string& path, const std::string& format,
                       const std::vector<std::string>& expect_fail, const std::string& dot_path) {
  FiniteOrtholattice l = lattice_from_json(load_json_file(path));
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw ParseError("cannot write '" + dot_path + "'");
    dot << lattice_to_dot(l);
  }
  Report rep;
  rep.suite = "verify-lattice";
  rep.merge(verify_poset(l));
  rep.merge(verify_lattice(l));
  if (l.complement) {
    rep.merge(verify_orthocomplement(l));
    Report om = verify_orthomodular(l);
    rep.merge(om);
  }
  rep.merge(verify_atomistic(l));
  rep.merge(verify_covering(l));

  auto [distributive, witness] = is_distributive(l);
  nlohmann::ordered_json dist;
  dist["holds"] = distributive;
  if (witness)
    dist["witness"] = nlohmann::ordered_json::array({(*witness)[0], (*witness)[1], (*witness)[2]});
  print_report(rep, format, {{"distributive", dist}});
  return report_exit_code(rep, expect_fail);
}

int cmd_subspace(const std::string& ring_str, int dim, long samples, std::uint64_t seed,
                 const std::string& format, const std::vector<std::string>& expect_fail) {
  Ring ring = ring_from_name(ring_str);
  Report rep = verify_pointwise_axioms(ring, dim, samples, seed);
  print_report(rep, format,
               {{"ring", nlohmann::ordered_json(ring_name(ring))},
                {"ambient_dim", nlohmann::ordered_json(dim)}});
  return report_exit_code(rep, expect_fail);
}

int cmd_list_fixtures() {
  for (const auto& f : bundled_fixtures())
    std::cout << f.name << "  [" << f.kind << "]  " << f.description << "\n";
  return 0;
}

int cmd_write_fixtures(const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const auto& f : bundled_fixtures()) {
    std::filesystem::path p = std::filesystem::path(out_dir) / f.name;
    std::ofstream out(p);
    if (!out) throw ParseError("cannot write '" + p.string() + "'");
    out << f.make().dump(2) << "\n";
    std::cout << "wrote " << p.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"starlat: finite-dimensional verification workbench for real *-algebras "
               "and quantum-logic lattices"};
  app.require_subcommand(1);

  std::string path, ring = "R", format = "json", out_dir = "fixtures";
  std::uint64_t seed = 0;
  long samples = 1000, forms = 2000;
  int workers = 1, n = 2, m = 2, dim = 3;
  std::vector<std::string> expect_fail;

  auto* va = app.add_subcommand("verify-algebra",
                                "run the *-algebra axiom, Banach/C*-norm and positivity checks");
  va->add_option("file", path, "algebra JSON file")->required();
  va->add_option("--seed", seed, "random seed")->required();
  va->add_option("--samples", samples, "norm-sweep sample count");
  va->add_option("--forms", forms, "positivity-equivalence form count");
  va->add_option("--workers", workers, "worker threads for the norm sweep");
  va->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  va->add_option("--expect-fail", expect_fail, "check name expected to fail");

  auto* de = app.add_subcommand("decompose", "Wedderburn block decomposition of an algebra");
  de->add_option("file", path, "algebra JSON file")->required();
  de->add_option("--seed", seed, "random seed")->required();
  de->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* td = app.add_subcommand("tensor-deficit",
                                "observable span deficit of M_n(K) (x) M_m(K)");
  td->add_option("--ring", ring, "R, C or H")->required();
  td->add_option("n", n, "first factor size")->required()->check(CLI::Range(1, 4));
  td->add_option("m", m, "second factor size")->required()->check(CLI::Range(1, 4));
  td->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* vs = app.add_subcommand("verify-state",
                                "check a state file against its referenced algebra");
  vs->add_option("file", path, "state JSON file")->required();
  vs->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  vs->add_option("--expect-fail", expect_fail, "check name expected to fail");

  std::string dot_path;
  auto* vl = app.add_subcommand("verify-lattice", "run the quantum-logic axiom battery");
  vl->add_option("file", path, "lattice JSON file")->required();
  vl->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  vl->add_option("--expect-fail", expect_fail, "check name expected to fail");
  vl->add_option("--dot", dot_path, "write the Hasse diagram as DOT to this path");

  auto* su = app.add_subcommand("subspace", "sampled axiom battery for subspace lattices of K^n");
  su->add_option("--ring", ring, "R, C or H")->required();
  su->add_option("--dim", dim, "ambient dimension")->required();
  su->add_option("--samples", samples, "sample count")->required();
  su->add_option("--seed", seed, "random seed")->required();
  su->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  su->add_option("--expect-fail", expect_fail, "check name expected to fail");

  auto* lf = app.add_subcommand("list-fixtures", "list the bundled fixtures");
  auto* wf = app.add_subcommand("write-fixtures", "regenerate the bundled fixture files");
  wf->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (va->parsed())
      return cmd_verify_algebra(path, seed, samples, forms, workers, format, expect_fail);
    if (de->parsed()) return cmd_decompose(path, seed, format);
    if (td->parsed()) return cmd_tensor_deficit(ring, n, m, format);
    if (vs->parsed()) return cmd_verify_state(path, format, expect_fail);
    if (vl->parsed()) return cmd_verify_lattice(path, format, expect_fail, dot_path);
    if (su->parsed()) return cmd_subspace(ring, dim, samples, seed, format, expect_fail);
    if (lf->parsed()) return cmd_list_fixtures();
    if (wf->parsed()) return cmd_write_fixtures(out_dir);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
