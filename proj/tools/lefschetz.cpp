#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lefschetz/bounds.hpp"
#include "lefschetz/dynkin.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/homology0.hpp"
#include "lefschetz/join1.hpp"
#include "lefschetz/petrov.hpp"
#include "lefschetz/scenario.hpp"

using namespace lefschetz;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string scenarioPath;
  int a = 1, n = 2;
  std::string format = "json";
  std::string dumpTrajectories;
  double tol = 0;
};

// A verification whose verdict is negative; exit code 1 after printing the report.
struct CheckFailed {};

json readJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path, {{"path", path}});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what(), {{"path", path}});
  }
}

Scenario loadScenario(const RunConfig& cfg) {
  if (!cfg.scenarioPath.empty()) return scenario_from_json(readJson(cfg.scenarioPath));
  return default_scenario(cfg.a, cfg.n);
}

void requireFormat(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw Error(ErrorKind::InvalidInput, "format " + cfg.format + " is not available for this command");
}

void printJson(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string matrixText(const IntMatrix& m, const std::vector<std::string>& labels) {
  size_t w = 3;
  for (const auto& l : labels) w = std::max(w, l.size() + 1);
  std::ostringstream os;
  os << std::setw(static_cast<int>(w)) << "";
  for (const auto& l : labels) os << std::setw(static_cast<int>(w)) << l;
  os << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    os << std::setw(static_cast<int>(w)) << labels[i];
    for (int j = 0; j < m.cols(); ++j) os << std::setw(static_cast<int>(w)) << m(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

std::string matrixCsv(const IntMatrix& m, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "label";
  for (const auto& l : labels) os << "," << l;
  os << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    os << labels[i];
    for (int j = 0; j < m.cols(); ++j) os << "," << m(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

void emitMatrix(const RunConfig& cfg, const json& report, const IntMatrix& m, const std::vector<std::string>& labels) {
  requireFormat(cfg, {"json", "text", "csv"});
  if (cfg.format == "json")
    printJson(report);
  else if (cfg.format == "csv")
    std::cout << matrixCsv(m, labels);
  else
    std::cout << matrixText(m, labels);
}

std::vector<std::string> labelsOf(const Basis0& b) {
  std::vector<std::string> out;
  for (const auto& l : b.labels) out.push_back(l.str());
  return out;
}

std::vector<std::string> labelsOf(const JoinBasis& b) {
  std::vector<std::string> out;
  for (const auto& l : b.labels) out.push_back(l.str());
  return out;
}

enum class Target { GR, HS, F, FF };

Target parseWhich(const std::string& w) {
  if (w == "gR") return Target::GR;
  if (w == "hS") return Target::HS;
  if (w == "f") return Target::F;
  if (w == "fF") return Target::FF;
  throw Error(ErrorKind::InvalidInput, "--which must be one of gR, hS, f, fF");
}

const char* whichName(Target t) {
  switch (t) {
    case Target::GR: return "gR";
    case Target::HS: return "hS";
    case Target::F: return "f";
    case Target::FF: return "fF";
  }
  return "";
}

// Value labels c.. / a.. belong to g∘R / h∘S, "c1+a2" to a join basis.
Target inferFromValue(const std::string& label) {
  if (label.find('+') != std::string::npos) return Target::FF;
  if (!label.empty() && label[0] == 'a') return Target::HS;
  return Target::GR;
}

Target inferFromCycle(const std::string& label) {
  if (label.find('*') != std::string::npos) return Target::FF;
  if (!label.empty() && label[0] == 'g') return Target::HS;
  return Target::GR;
}

Basis0 sideBasis(const Scenario& s, Target t) { return basis0(s, t == Target::GR ? SideId::Left : SideId::Right); }

// ---------------------------------------------------------------- commands

void cmdValidate(const RunConfig& cfg, const std::string& file) {
  RunConfig c = cfg;
  if (!file.empty()) c.scenarioPath = file;
  Scenario s = loadScenario(c);
  json j = {{"valid", true},
            {"conditions", {{"1", true}, {"2", true}, {"3", true}, {"4", true}, {"morse", true}}},
            {"scenario", s.toJson()},
            {"critical_data", critical_data(s).toJson()}};
  requireFormat(cfg, {"json", "text"});
  if (cfg.format == "json")
    printJson(j);
  else
    std::cout << "valid scenario a=" << s.a << " n=" << s.n << "\n";
}

void cmdBasis(const RunConfig& cfg, const std::string& which) {
  Scenario s = loadScenario(cfg);
  Target t = parseWhich(which);
  requireFormat(cfg, {"json", "text", "csv"});
  json j;
  std::vector<std::pair<std::string, std::string>> rows;  // label, value label
  if (t == Target::GR || t == Target::HS) {
    Basis0 b = sideBasis(s, t);
    j = b.toJson();
    for (int i = 0; i < b.size(); ++i) rows.push_back({b.labels[i].str(), b.values[b.valueOf[i]].label});
  } else {
    JoinBasis b = join_basis(s, t == Target::F ? Which::F : Which::FcompF);
    j = b.toJson();
    for (int i = 0; i < b.size(); ++i) rows.push_back({b.labels[i].str(), b.valueLabel(b.valueOf[i])});
  }
  if (cfg.format == "json") {
    printJson(j);
  } else {
    std::cout << (cfg.format == "csv" ? "index,label,value\n" : "");
    for (size_t i = 0; i < rows.size(); ++i) {
      if (cfg.format == "csv")
        std::cout << i << "," << rows[i].first << "," << rows[i].second << "\n";
      else
        std::cout << std::setw(4) << i << "  " << std::setw(14) << std::left << rows[i].first << std::right
                  << rows[i].second << "\n";
    }
  }
}

void cmdGram(const RunConfig& cfg, const std::string& which) {
  Scenario s = loadScenario(cfg);
  Target t = parseWhich(which);
  json j = {{"which", whichName(t)}};
  IntMatrix form;
  std::vector<std::string> labels;
  bool ok = true;
  if (t == Target::GR || t == Target::HS) {
    Basis0 b = sideBasis(s, t);
    labels = labelsOf(b);
    form = b.gram();
    auto corrected = compare_tables(form, pullback_table_reference(s, b, true), labels);
    auto verbatim = compare_tables(form, pullback_table_reference(s, b, false), labels);
    ok = corrected.match();
    j["check"] = "computed Gram matrix against the encoded pull-back case table";
    j["table_corrected"] = corrected.toJson();
    j["table_verbatim"] = verbatim.toJson();
    j["explained_discrepancies"] = verbatim.mismatches;
  } else if (t == Target::F) {
    JoinBasis b = join_basis(s, Which::F);
    labels = labelsOf(b);
    form = join_form(b);
    auto corrected = compare_tables(form, intersection_f(b, FReading::TableCorrected), labels);
    auto verbatim = compare_tables(form, intersection_f(b, FReading::TableVerbatim), labels);
    ok = corrected.match();
    j["check"] = "join intersection form of f against the encoded case table";
    j["table_corrected"] = corrected.toJson();
    j["table_verbatim"] = verbatim.toJson();
    j["explained_discrepancies"] = verbatim.mismatches;
  } else {
    JoinContext c = join_context(s);
    labels = labelsOf(c.fF);
    form = c.formFF;
    json readings = json::array();
    for (auto r : {FFReading::TableA, FFReading::TableB}) {
      json o = {{"reading", readingName(r)}};
      try {
        IntMatrix q = intersection_fF(c.fF, c.formF, r);
        o["validation"] = validate_form(c.fF, q, c.f, c.formF).toJson();
        o["mismatches_vs_join"] = compare_tables(join_form(c.fF), q, labels).mismatches.size();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InconsistentTable) throw;
        o["error"] = e.toJson();
      }
      readings.push_back(o);
    }
    j["check"] = "candidate readings of the f∘F case table against the consistency validator";
    j["readings"] = readings;
    j["chosen_reading"] = readingName(c.reading);
  }
  j["labels"] = labels;
  j["matrix"] = form.toJson();
  j["verdict"] = ok ? "match" : "mismatch";
  emitMatrix(cfg, j, form, labels);
  if (!ok) throw CheckFailed{};
}

void cmdMonodromy(const RunConfig& cfg, const std::string& value, std::string which, bool oracle) {
  Scenario s = loadScenario(cfg);
  Target t = which.empty() ? inferFromValue(value) : parseWhich(which);
  json j = {{"which", whichName(t)}, {"value", value}};
  IntMatrix m;
  std::vector<std::string> labels;
  bool ok = true;
  if (t == Target::GR || t == Target::HS) {
    Basis0 b = sideBasis(s, t);
    labels = labelsOf(b);
    auto op = monodromy0(b, b.valueIndex(value));
    m = op.matrix;
    IntMatrix Q = b.gram();
    j["preserves_form"] = m.transpose() * Q * m == Q;
    if (oracle) {
      TrackOptions opts;
      std::ofstream dump;
      if (!cfg.dumpTrajectories.empty()) {
        dump.open(cfg.dumpTrajectories);
        if (!dump) throw Error(ErrorKind::InvalidInput, "cannot write " + cfg.dumpTrajectories);
        dump << "t_re,t_im,root,x_re,x_im\n" << std::setprecision(17);
        opts.recorder = [&dump](cplx tt, int k, cplx x) {
          dump << tt.real() << "," << tt.imag() << "," << k << "," << x.real() << "," << x.imag() << "\n";
        };
      }
      auto o = oracle_monodromy0(b, op.valueIndex, opts);
      ok = o.matrix == m;
      j["oracle"] = {{"matrix", o.matrix.toJson()}, {"agrees", ok}};
    }
  } else {
    if (oracle) throw Error(ErrorKind::InvalidInput, "--oracle is available in dimension zero only");
    JoinContext c = join_context(s);
    const JoinBasis& b = t == Target::F ? c.f : c.fF;
    const IntMatrix& Q = t == Target::F ? c.formF : c.formFF;
    labels = labelsOf(b);
    m = monodromy1(b, Q, b.valueIndex(value)).matrix;
    j["preserves_form"] = m.transpose() * Q * m == Q;
  }
  j["labels"] = labels;
  j["matrix"] = m.toJson();
  j["determinant"] = determinant(m).get_str();
  emitMatrix(cfg, j, m, labels);
  if (!ok) throw CheckFailed{};
}

void cmdOrbit(const RunConfig& cfg, const std::string& seed, std::string which) {
  Scenario s = loadScenario(cfg);
  Target t = which.empty() ? inferFromCycle(seed) : parseWhich(which);
  requireFormat(cfg, {"json", "text"});
  json j = {{"which", whichName(t)}, {"seed", seed}};
  Lattice orbit;
  int dim = 0;
  if (t == Target::GR || t == Target::HS) {
    Basis0 b = sideBasis(s, t);
    int k = b.indexOf(seed);
    dim = b.size();
    orbit = orbit_lattice0(all_monodromy0(b), unitVector(dim, k));
    Lattice pushKernel = kernel(pushforward_matrix(side(s, t == Target::GR ? SideId::Left : SideId::Right).inner,
                                                   b, outer_basis0(s, t == Target::GR ? SideId::Left : SideId::Right)));
    j["pushforward_kernel_rank"] = pushKernel.rank();
    j["equals_pushforward_kernel"] = orbit == pushKernel;
  } else {
    JoinContext c = join_context(s);
    const JoinBasis& b = t == Target::F ? c.f : c.fF;
    const IntMatrix& Q = t == Target::F ? c.formF : c.formFF;
    int k = b.indexOf(seed);
    dim = b.size();
    orbit = orbitClosure(matrices(all_monodromy1(b, Q)), unitVector(dim, k));
  }
  j["ambient_rank"] = dim;
  j["orbit_rank"] = orbit.rank();
  j["full"] = orbit.rank() == dim;
  j["orbit"] = orbit.toJson();
  if (cfg.format == "json")
    printJson(j);
  else
    std::cout << "seed " << seed << ": orbit rank " << orbit.rank() << " of " << dim << "\n";
}

void cmdKernel(const RunConfig& cfg, bool lattices) {
  Scenario s = loadScenario(cfg);
  requireFormat(cfg, {"json", "text"});
  auto r = kernel_report(s);
  json j = r.toJson(lattices);
  j["check"] = "rank of ker F_* is (na+n-1)^2 - a^2 and equals the orbit of one tangency join cycle";
  if (cfg.format == "json") {
    printJson(j);
  } else {
    std::cout << "a=" << r.a << " n=" << r.n << " reading=" << readingName(r.chosen) << "\n"
              << "rank " << r.nullity << " (expected " << r.expectedNullity << ")\n"
              << "orbit of " << r.seedLabel << ": rank " << r.orbit.rank() << "\n"
              << "verdict " << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  if (!r.pass()) throw CheckFailed{};
}

void cmdDynkin(const RunConfig& cfg, bool dot, const std::string& which) {
  Scenario s = loadScenario(cfg);
  Target t = parseWhich(which);
  DynkinGraph g;
  json j = {{"which", whichName(t)}};
  if (t == Target::GR || t == Target::HS) {
    g = build(sideBasis(s, t));
    j["max_tangency_pullback_degree"] = max_tangency_pullback_degree(g);
  } else {
    JoinContext c = join_context(s);
    DynkinGraph G = build(c.f, c.formF);
    g = t == Target::F ? G : build(c.fF, c.formFF);
    if (t == Target::FF) {
      try {
        j["subgraph_decomposition"] = subgraph_decomposition(g, G, s.n).toJson();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DecompositionFailure) throw;
        j["subgraph_decomposition"] = {{"error", e.toJson()}};
      }
    }
  }
  if (dot || cfg.format == "dot") {
    std::cout << to_dot(g);
    return;
  }
  requireFormat(cfg, {"json"});
  j["graph"] = g.toJson();
  j["connected"] = g.connected();
  printJson(j);
}

void cmdPetrovDecompose(const RunConfig& cfg, const std::string& formPath, const std::string& lPath) {
  requireFormat(cfg, {"json"});
  BiForm1 omega = BiForm1::fromJson(readJson(formPath));
  BiPoly l = BiPoly::fromJson(readJson(lPath));
  auto d = decompose(omega, l);
  json j = d.toJson();
  j["reconstructs"] = d.reconstruct(l) == omega;
  j["degree_bounds_hold"] = d.degreeBoundsHold(omega.weightedDegree());
  printJson(j);
}

void cmdPetrovTangentCone(const RunConfig& cfg, const std::string& formPath) {
  requireFormat(cfg, {"json"});
  Scenario s = loadScenario(cfg);
  BiForm1 omega = BiForm1::fromJson(readJson(formPath));
  printJson(tangent_cone_membership(omega, s).toJson());
}

void cmdBounds(const RunConfig& cfg, long a, long n, long factorize, bool identity) {
  requireFormat(cfg, {"json", "text", "csv"});
  if (identity) {
    auto c = symbolic_identity_check();
    if (cfg.format != "json") throw Error(ErrorKind::InvalidInput, "--identity prints JSON only");
    printJson(c.toJson());
    return;
  }
  if (factorize > 0) {
    auto t = best_factorization(factorize);
    if (cfg.format == "json")
      printJson(t.toJson());
    else
      std::cout << (cfg.format == "csv" ? t.toCsv() : t.toText());
    return;
  }
  auto r = bound_report(a, n);
  if (cfg.format == "json")
    printJson(r.toJson());
  else
    std::cout << (cfg.format == "csv" ? r.toCsv() : r.toText());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard-Lefschetz computations for pull-back foliations"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--scenario", cfg.scenarioPath, "Scenario JSON file")->check(CLI::ExistingFile);
  app.add_option("--a", cfg.a, "Degree parameter a of the default scenario")->check(CLI::PositiveNumber);
  app.add_option("--n", cfg.n, "Degree n of the default scenario")->check(CLI::Range(2, 64));
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--tol", cfg.tol, "Root tolerance (overrides LEFSCHETZ_TOL)");
  app.add_option("--dump-trajectories", cfg.dumpTrajectories, "CSV file for oracle root trajectories");

  std::string file, which, value, seedLabel, formPath, lPath;
  bool oracle = false, dot = false, lattices = false, identity = false;
  long ba = 0, bn = 0, factorize = 0;

  auto* validate = app.add_subcommand("validate", "Check the genericity conditions of a scenario");
  validate->add_option("file", file, "Scenario JSON")->check(CLI::ExistingFile);

  auto* basis = app.add_subcommand("basis", "List a labeled cycle basis");
  basis->add_option("--which", which, "gR | hS | f | fF")->required();

  auto* gram = app.add_subcommand("gram", "Intersection matrix with the case-table verdict");
  gram->add_option("--which", which, "gR | hS | f | fF")->required();

  auto* mono = app.add_subcommand("monodromy", "Monodromy operator of a simple loop");
  mono->add_option("--value", value, "Critical value label, e.g. c1, a~3, c1+a2")->required();
  mono->add_option("--which", which, "gR | hS | f | fF (inferred from the label by default)");
  mono->add_flag("--oracle", oracle, "Cross-check by root continuation (dimension zero)");

  auto* orbit = app.add_subcommand("orbit", "Monodromy orbit lattice of a cycle");
  orbit->add_option("--seed", seedLabel, "Cycle label, e.g. d1^2 or d3*g1^1")->required();
  orbit->add_option("--which", which, "gR | hS | f | fF (inferred from the label by default)");

  auto* kern = app.add_subcommand("kernel", "Kernel of F_* against the tangency orbit");
  kern->add_flag("--lattices", lattices, "Include the Hermite bases");

  auto* dyn = app.add_subcommand("dynkin", "Dynkin diagram");
  dyn->add_flag("--dot", dot, "Emit Graphviz DOT");
  std::string dynWhich = "fF";
  dyn->add_option("--which", dynWhich, "gR | hS | f | fF");

  auto* petrov = app.add_subcommand("petrov", "Petrov module computations");
  petrov->require_subcommand(1);
  petrov->fallthrough();
  auto* dec = petrov->add_subcommand("decompose", "Decompose a 1-form in the Petrov basis of l");
  dec->add_option("form", formPath, "1-form JSON")->required()->check(CLI::ExistingFile);
  dec->add_option("--l", lPath, "Polynomial JSON")->required()->check(CLI::ExistingFile);
  auto* cone = petrov->add_subcommand("tangent-cone", "Tangent-cone membership certificate");
  cone->add_option("form", formPath, "1-form JSON")->required()->check(CLI::ExistingFile);

  auto* bounds = app.add_subcommand("bounds", "Cyclicity bounds");
  auto* optA = bounds->add_option("--a", ba, "a");
  auto* optN = bounds->add_option("--n", bn, "n");
  auto* optF = bounds->add_option("--factorize", factorize, "d+1: compare all factorizations");
  bounds->add_flag("--identity", identity, "Check the symbolic identity between the two closed forms");
  optA->needs(optN);
  optN->needs(optA);
  optF->excludes(optA)->excludes(optN);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  try {
    if (cfg.tol > 0) set_default_tolerance(cfg.tol);
    if (*validate)
      cmdValidate(cfg, file);
    else if (*basis)
      cmdBasis(cfg, which);
    else if (*gram)
      cmdGram(cfg, which);
    else if (*mono)
      cmdMonodromy(cfg, value, which, oracle);
    else if (*orbit)
      cmdOrbit(cfg, seedLabel, which);
    else if (*kern)
      cmdKernel(cfg, lattices);
    else if (*dyn)
      cmdDynkin(cfg, dot, dynWhich);
    else if (*dec)
      cmdPetrovDecompose(cfg, formPath, lPath);
    else if (*cone)
      cmdPetrovTangentCone(cfg, formPath);
    else if (*bounds) {
      if (!identity && factorize == 0 && ba == 0)
        throw Error(ErrorKind::InvalidInput, "bounds needs --a/--n, --factorize or --identity");
      cmdBounds(cfg, ba, bn, factorize, identity);
    }
  } catch (const CheckFailed&) {
    return 1;
  } catch (const Error& e) {
    std::cerr << e.toJson().dump() << "\n";
    return isValidationError(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
