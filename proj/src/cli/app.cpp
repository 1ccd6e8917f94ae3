#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "shc/charstack/enumerate.hpp"
#include "shc/cli/app.hpp"
#include "shc/cobcat/parser.hpp"
#include "shc/exactalg/fp.hpp"

namespace shc::cli {

namespace {

using nlohmann::json;

void common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--samples", c.samples, "Random sample points per check");
  sub->add_option("--seed", c.seed, "Seed for sample points");
  sub->add_option("--p", c.p, "Prime modulus");
  sub->add_option("--budget", c.budget, "Largest brute-force search space");
  sub->add_option("--out", c.out, "Write the JSON report here");
  sub->add_option("--spec", c.spec_path, "JSON spec file; explicit flags take precedence");
}

// Spec values apply unless the same flag was given on the command line.
template <typename T>
void fill(const json& j, const char* key, T& field, const CLI::App* sub) {
  const CLI::Option* flag = sub->get_option_no_throw(std::string("--") + key);
  if (j.contains(key) && (flag == nullptr || flag->count() == 0)) field = j.at(key).get<T>();
}

void load_spec(RunConfig& c, const CLI::App* sub) {
  std::ifstream in(c.spec_path);
  if (!in) throw UsageError("cannot read spec file " + c.spec_path);
  json j;
  try {
    j = json::parse(in);
    if (!j.is_object()) throw UsageError("spec file must hold a JSON object");
    fill(j, "preset", c.preset, sub);
    fill(j, "samples", c.samples, sub);
    fill(j, "seed", c.seed, sub);
    fill(j, "p", c.p, sub);
    fill(j, "budget", c.budget, sub);
    fill(j, "perturb", c.perturb, sub);
    fill(j, "cob", c.cob, sub);
    fill(j, "group", c.group, sub);
    fill(j, "n", c.n, sub);
    const CLI::Option* shift = sub->get_option_no_throw("--shift");
    if (j.contains("shift") && (shift == nullptr || shift->count() == 0)) c.shift = j.at("shift").get<int>();
    if (j.contains("inputs") && c.inputs.empty()) c.inputs = j.at("inputs").get<std::vector<std::string>>();
    if (j.contains("gram")) c.gram = j.at("gram").get<std::vector<std::vector<std::string>>>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed spec file: ") + e.what());
  }
}

void validate(const RunConfig& c) {
  if (c.samples == 0) throw UsageError("--samples must be positive");
  if (c.seed == 0) throw UsageError("--seed must be positive");
  if (!is_prime(c.p) || c.p >= Fp::kMaxModulus) throw UsageError("--p must be a prime below 65536");
  if (c.budget == 0) throw UsageError("--budget must be positive");
}

void apply_threads() {
  const char* env = std::getenv("SHIFTED_CARTAN_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n <= 0) throw UsageError("SHIFTED_CARTAN_THREADS must be a positive integer");
  omp_set_num_threads(static_cast<int>(n));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact checks of shifted symplectic and Lagrangian structures", "shifted-cartan"};
  app.require_subcommand(1);

  auto* sym = app.add_subcommand("check-symplectic", "Nondegeneracy and closedness of shifted forms");
  common(sym, c);
  sym->add_option("--preset", c.preset, "adjoint-sl2, bg-sl2, coadjoint or point");
  sym->add_option("--shift", c.shift, "Shift for bg-sl2 and point");

  auto* lag = app.add_subcommand("check-lagrangian", "Hamiltonian and quasi-Hamiltonian identities");
  common(lag, c);
  lag->add_option("--preset", c.preset, "double-sl2, conjclass-sl2, cotangent or point");
  lag->add_option("--perturb", c.perturb, "none, mu, gamma or omega1");

  auto* fu = app.add_subcommand("fuse", "Internal fusion of two quasi-Hamiltonian presets");
  common(fu, c);
  fu->add_option("--in", c.inputs, "Two presets")->expected(2);

  auto* tft = app.add_subcommand("tft", "Evaluate the TFT on a cobordism");
  common(tft, c);
  tft->add_option("--cob", c.cob, "Cobordism expression");
  tft->add_option("--group", c.group, "sl2, gl1, sym, alt or cyclic");
  tft->add_option("--n", c.n, "Degree for sym and alt, order for cyclic");
  tft->add_flag("--verify-gluing", c.verify_gluing, "Certify every top-level composition");

  auto* cobc = app.add_subcommand("cob", "Cobordism expressions");
  cobc->require_subcommand(1);
  auto* cparse = cobc->add_subcommand("parse", "Normal form, presentation and orientation");
  common(cparse, c);
  cparse->add_option("expr", c.cob, "Cobordism expression");
  cparse->add_option("--cob", c.cob, "Cobordism expression");

  auto* reps = app.add_subcommand("reps", "Representation counts");
  reps->require_subcommand(1);
  auto* rcount = reps->add_subcommand("count", "Count homomorphisms into a finite group");
  common(rcount, c);
  rcount->add_option("--cob", c.cob, "Cobordism expression");
  rcount->add_option("--group", c.group, "sl2, gl1, sym, alt or cyclic");
  rcount->add_option("--n", c.n, "Degree for sym and alt, order for cyclic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    apply_threads();
    CommandResult result;
    const CLI::App* active = app.get_subcommands().front();
    while (!active->get_subcommands().empty()) active = active->get_subcommands().front();
    if (!c.spec_path.empty()) load_spec(c, active);
    validate(c);
    if (sym->parsed()) {
      c.command = "check-symplectic";
      result = cmd_check_symplectic(c);
    } else if (lag->parsed()) {
      c.command = "check-lagrangian";
      result = cmd_check_lagrangian(c);
    } else if (fu->parsed()) {
      c.command = "fuse";
      result = cmd_fuse(c);
    } else if (tft->parsed()) {
      c.command = "tft";
      result = cmd_tft(c);
    } else if (cparse->parsed()) {
      c.command = "cob parse";
      result = cmd_cob_parse(c);
    } else {
      c.command = "reps count";
      result = cmd_reps_count(c);
    }
    std::string text = result.report.dump(2) + "\n";
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream file(c.out);
      if (!file) throw UsageError("cannot write " + c.out);
      file << text;
      out << (result.passed ? "PASS " : "FAIL ") << c.command << " -> " << c.out << "\n";
    }
    return result.passed ? 0 : 1;
  } catch (const cob::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!c.cob.empty()) err << "  " << c.cob << "\n  " << std::string(e.position(), ' ') << "^\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace shc::cli
