#include <algorithm>

#include "shc/charstack/serialize.hpp"
#include "shc/cli/app.hpp"
#include "shc/cobcat/parser.hpp"
#include "shc/cobcat/serialize.hpp"
#include "shc/lagstruct/presets.hpp"
#include "shc/liecore/sampling.hpp"

namespace shc::cli {

using nlohmann::json;

namespace {

json verdict_json(const Verdict& v) {
  json checks = json::array();
  char label = 'a';
  for (const auto& c : v.checks) {
    json j = {{"label", std::string(1, label++)},
              {"identity", c.name},
              {"holds", c.holds},
              {"points", c.points},
              {"evaluations", c.evaluations}};
    if (!c.holds) j["counterexample"] = c.counterexample;
    checks.push_back(j);
  }
  json failed = json::array();
  label = 'a';
  for (const auto& c : v.checks) {
    if (!c.holds) failed.push_back("(" + std::string(1, label) + ") " + c.name);
    ++label;
  }
  return {{"structure", v.structure}, {"checks", checks}, {"failed", failed}, {"passed", v.passed()}};
}

Perturbation perturbation(const std::string& name) {
  for (auto p : {Perturbation::None, Perturbation::ScaleMu, Perturbation::ScaleGamma, Perturbation::DropOmega1})
    if (name == perturbation_name(p)) return p;
  throw UsageError("unknown perturbation '" + name + "' (none, mu, gamma, omega1)");
}

LagrangianCheckOptions lag_options(const RunConfig& c) {
  LagrangianCheckOptions o;
  o.base.samples = c.samples;
  o.base.seed = c.seed;
  return o;
}

struct Sl2 {
  GroupPtr group = MatrixGroup::special_linear(2);
  InvariantPairing pairing = group->trace_pairing();
};

// Base point of the conjugacy-class preset: a regular hyperbolic element.
QMat class_base() { return QMat{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}}; }

QuasiHamiltonianSpace quasi_preset(const std::string& name) {
  Sl2 s;
  if (name == "double-sl2") return double_preset(s.group, s.pairing);
  if (name == "conjclass-sl2") return conjugacy_class_preset(s.group, s.pairing, class_base());
  if (name == "point") return identity_point(s.group, s.pairing);
  throw UsageError("unknown quasi-Hamiltonian preset '" + name + "' (double-sl2, conjclass-sl2, point)");
}

QMat parse_gram(const std::vector<std::vector<std::string>>& rows) {
  QMat m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw UsageError("gram must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      try {
        m(i, j) = Rational(rows[i][j]);
      } catch (const std::exception&) {
        throw UsageError("gram entry '" + rows[i][j] + "' is not a rational");
      }
    }
  }
  return m;
}

json form_verdict(const QForm& w, const std::string& where) {
  bool closed = is_closed(w), nondeg = nondegenerate(w);
  return {{"at", where},
          {"shift", w.shift},
          {"closed", closed},
          {"nondegenerate", nondeg},
          {"passed", closed && nondeg}};
}

std::string point_string(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

chars::FiniteGroup finite_group(const RunConfig& c) {
  if (c.group == "sl2") return chars::FiniteGroup::special_linear_2(c.p);
  if (c.group == "gl1") return chars::FiniteGroup::general_linear_1(c.p);
  if (c.group == "sym") return chars::FiniteGroup::symmetric(c.n);
  if (c.group == "alt") return chars::FiniteGroup::alternating(c.n);
  if (c.group == "cyclic") return chars::FiniteGroup::cyclic(c.n);
  throw UsageError("unknown group '" + c.group + "' (sl2, gl1, sym, alt, cyclic)");
}

// Top-level ';' pieces of an expression, with their offsets.
std::vector<std::pair<std::string, std::size_t>> split_composition(const std::string& e) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= e.size(); ++i) {
    if (i < e.size() && e[i] == '(') ++depth;
    if (i < e.size() && e[i] == ')') --depth;
    if (i == e.size() || (e[i] == ';' && depth == 0)) {
      out.emplace_back(e.substr(start, i - start), start);
      start = i + 1;
    }
  }
  return out;
}

cob::Cobordism parse_cob(const std::string& e) {
  if (e.empty()) throw UsageError("--cob is required");
  return cob::parse(e);
}

}  // namespace

json envelope(const RunConfig& c) {
  json config = {{"samples", c.samples}, {"seed", c.seed}, {"p", c.p}, {"n", c.n}, {"budget", c.budget}};
  if (!c.preset.empty()) config["preset"] = c.preset;
  if (!c.inputs.empty()) config["inputs"] = c.inputs;
  if (c.shift) config["shift"] = *c.shift;
  if (c.perturb != "none") config["perturb"] = c.perturb;
  if (!c.cob.empty()) config["cob"] = c.cob;
  return {{"schema", "shifted-cartan-report"},
          {"version", kReportVersion},
          {"command", c.command},
          {"conventions",
           {{"d_LR", "-iota_{v_x}"},
            {"action_field", "v_x(g) = x g - g x"},
            {"cotangent_form", "sum dq_i ^ dp_i"},
            {"class_form", "1/2 (<y, Ad_g x> - <x, Ad_g y>)"},
            {"double_form", "three-term"},
            {"fusion_correction", "+1/2 <mu_1^* theta, mu_2^* theta_bar>"},
            {"presentation", cob::kPresentationConvention},
            {"cocycle", "u(xy) = u(x) + Ad_x u(y)"}}},
          {"config", config}};
}

CommandResult cmd_check_symplectic(const RunConfig& c) {
  Sl2 s;
  json verdicts = json::array();
  const std::string& p = c.preset;
  if (c.shift && p != "bg-sl2" && p != "point") throw UsageError("preset '" + p + "' has fixed shift 1");
  json notes = json::array();
  if (p == "bg-sl2") {
    int n = c.shift.value_or(2);
    QMat gram = c.gram ? parse_gram(*c.gram) : s.pairing.gram;
    if (gram.rows() != s.group->lie().dim()) throw UsageError("gram must be 3 x 3 for sl2");
    verdicts.push_back(form_verdict(build_bg(s.group->lie(), gram, n), "BG"));
    if (n != 2) notes.push_back("the pairing on BG sits in degree -2 and is nondegenerate only at shift 2");
  } else if (p == "adjoint-sl2") {
    for (const auto& g : sample_points(*s.group, c.samples, c.seed))
      verdicts.push_back(form_verdict(build_adjoint_group(s.group, s.pairing, g.data()).form, point_string(g.data())));
  } else if (p == "coadjoint") {
    CoadjointSpace co(s.group);
    for (const auto& xi : co.sample_points(c.samples, c.seed))
      verdicts.push_back(form_verdict(build_coadjoint(s.group->lie(), xi), point_string(xi)));
  } else if (p == "point") {
    verdicts.push_back(form_verdict(build_point(c.shift.value_or(1)), "pt"));
  } else {
    throw UsageError("unknown symplectic preset '" + p + "' (adjoint-sl2, bg-sl2, coadjoint, point)");
  }
  bool passed = std::all_of(verdicts.begin(), verdicts.end(), [](const json& v) { return v["passed"].get<bool>(); });
  json r = envelope(c);
  r["verdicts"] = verdicts;
  r["notes"] = notes;
  r["passed"] = passed;
  return {r, passed};
}

CommandResult cmd_check_lagrangian(const RunConfig& c) {
  Perturbation pert = perturbation(c.perturb);
  LagrangianCheckOptions o = lag_options(c);
  Verdict v;
  if (c.preset == "cotangent") {
    if (pert == Perturbation::DropOmega1) throw UsageError("omega1 perturbation applies to group-valued moments only");
    v = check_hamiltonian(perturb(cotangent_preset(Sl2().group), pert), o);
  } else {
    v = check_perturbed(quasi_preset(c.preset), pert, o);
  }
  json r = envelope(c);
  r["verdicts"] = json::array({verdict_json(v)});
  if (pert != Perturbation::None) r["perturbation_target"] = perturbation_target(pert);
  r["passed"] = v.passed();
  return {r, v.passed()};
}

CommandResult cmd_fuse(const RunConfig& c) {
  if (c.inputs.size() != 2) throw UsageError("fuse needs exactly two --in presets");
  LagrangianCheckOptions o = lag_options(c);
  QuasiHamiltonianSpace a = quasi_preset(c.inputs[0]), b = quasi_preset(c.inputs[1]);
  json r = envelope(c);
  json verdicts = json::array();
  Verdict va = check_quasi_hamiltonian(a, o), vb = check_quasi_hamiltonian(b, o);
  verdicts.push_back(verdict_json(va));
  verdicts.push_back(verdict_json(vb));
  bool passed = va.passed() && vb.passed();
  if (passed) {
    QuasiHamiltonianSpace f = fuse(product(a, b), o);
    Verdict vf = check_quasi_hamiltonian(f, o);
    verdicts.push_back(verdict_json(vf));
    r["fused"] = f.name;
    passed = vf.passed();
  } else {
    r["fused"] = nullptr;
    r["notes"] = json::array({"fusion refused: an input fails its own check"});
  }
  r["verdicts"] = verdicts;
  r["passed"] = passed;
  return {r, passed};
}

CommandResult cmd_tft(const RunConfig& c) {
  cob::Cobordism whole = parse_cob(c.cob);
  chars::FiniteGroup g = finite_group(c);
  json r = envelope(c);
  r["group"] = {{"name", g.name()}, {"order", g.order()}};
  r["cobordism"] = cob::to_json(whole);
  chars::CorrespondenceValue v = chars::tft_evaluate(whole, g, c.budget);
  r["correspondence"] = chars::to_json(v);
  bool passed = v.legs_consistent;
  if (c.verify_gluing) {
    json certs = json::array();
    auto pieces = split_composition(c.cob);
    cob::Cobordism acc = cob::parse(pieces[0].first);
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      cob::Cobordism next = cob::parse(pieces[i].first);
      chars::GluingCertificate cert = chars::gluing_certificate(acc, next, g, c.budget);
      certs.push_back(chars::to_json(cert));
      passed = passed && cert.holds();
      acc = cob::compose(acc, next);
    }
    json mono = json::array();
    std::uint64_t product = 1;
    for (auto n : v.component_counts) product *= n;
    mono.push_back({{"check", "apex count is the product of component counts"}, {"holds", product == v.apex_count}});
    passed = passed && product == v.apex_count;
    r["certificates"] = certs;
    r["monoidal"] = mono;
  }
  r["passed"] = passed;
  return {r, passed};
}

CommandResult cmd_cob_parse(const RunConfig& c) {
  cob::Cobordism x = parse_cob(c.cob);
  json r = envelope(c);
  r["normal_form"] = cob::print(x);
  r["cobordism"] = cob::to_json(x);
  r["presentation"] = cob::to_json(cob::to_cospan(x));
  r["orientation"] = cob::to_json(cob::relative_orientation(x));
  r["passed"] = true;
  return {r, true};
}

CommandResult cmd_reps_count(const RunConfig& c) {
  cob::Cobordism x = parse_cob(c.cob);
  chars::FiniteGroup g = finite_group(c);
  cob::CospanPresentation p = cob::to_cospan(x);
  json comps = json::array();
  std::uint64_t total = 1;
  for (const auto& comp : p.components) {
    auto reps = chars::enumerate_reps(g, comp, c.budget, false);
    comps.push_back({{"genus", comp.genus}, {"generators", comp.rank()}, {"relators", comp.relators.size()},
                     {"count", reps.count}});
    total *= reps.count;
  }
  json r = envelope(c);
  r["group"] = {{"name", g.name()}, {"order", g.order()}, {"conjugacy_classes", g.conjugacy_class_count()}};
  r["normal_form"] = cob::print(x);
  r["components"] = comps;
  r["count"] = total;
  r["passed"] = true;
  return {r, true};
}

}  // namespace shc::cli
