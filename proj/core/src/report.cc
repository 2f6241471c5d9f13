#include "superkrull/report.h"

#include <chrono>
#include <cstdio>

#include "superkrull/errors.h"
#include "superkrull/kaehler.h"
#include "superkrull/ksdim.h"
#include "superkrull/onerel.h"
#include "superkrull/oracle.h"
#include "superkrull/regular.h"

namespace superkrull {
namespace {

using nlohmann::json;

json Indices(OddMonomial odd) { return odd.Indices(); }

json IndexLists(const std::vector<OddMonomial>& sets) {
  json out = json::array();
  for (OddMonomial s : sets) out.push_back(Indices(s));
  return out;
}

std::string SetText(const SuperPresentation& p, OddMonomial odd) {
  std::string out = "{";
  for (std::size_t i : odd.Indices()) {
    if (out.size() > 1) out += ", ";
    out += p.odd_names()[i - 1];
  }
  return out + "}";
}

std::string SetsText(const SuperPresentation& p, const std::vector<OddMonomial>& sets) {
  std::string out;
  for (OddMonomial s : sets) out += (out.empty() ? "" : " ") + SetText(p, s);
  return out;
}

void Ksdim(const SuperPresentation& p, const CommandOptions& options, CommandReport& r) {
  KsdimSolver solver(p, options.order);
  const SuperDim d = solver.Ksdim();
  r.result = {{"even", d.even}, {"odd", d.odd}, {"witness", Indices(d.witness)}};
  r.lines.push_back("Ksdim = " + d.ToString());
  if (options.witness) r.lines.push_back("odd parameters: " + SetText(p, d.witness));
}

const SuperPolynomial& SingleRelation(const SuperPresentation& p, const std::string& command) {
  if (p.relations().size() != 1) {
    throw ArgumentError(command + " needs exactly one relation, found " +
                        std::to_string(p.relations().size()));
  }
  return p.relations().front();
}

void OneRel(const SuperPresentation& p, CommandReport& r) {
  const SuperPolynomial& f = SingleRelation(p, "onerel");
  const OneRelReport rep = AnalyzeOneRelation(f, p.n());
  r.result = {{"exponents", IndexLists(rep.exponents)},
              {"basement", IndexLists(rep.basement)},
              {"extremal_set", Indices(rep.extremal_set)},
              {"index", rep.index},
              {"bounds", {rep.lower_bound, rep.upper_bound}},
              {"exact", rep.exact_odd_dim ? json(*rep.exact_odd_dim) : json(nullptr)},
              {"method", ToString(rep.method)}};
  r.lines.push_back("basement: " + SetsText(p, rep.basement));
  r.lines.push_back("extremal set: " + SetText(p, rep.extremal_set) +
                    ", index " + std::to_string(rep.index));
  r.lines.push_back("bounds: " + std::to_string(rep.lower_bound) + " <= odd dim <= " +
                    std::to_string(rep.upper_bound));
  r.lines.push_back("odd dim: " +
                    (rep.exact_odd_dim ? std::to_string(*rep.exact_odd_dim) : "unknown") +
                    " (" + ToString(rep.method) + ")");
}

void Regular(const SuperPresentation& p, CommandReport& r) {
  const RegularityVerdict v = IsRegularGlobal(p);
  r.result = {{"verdict", ToString(v.verdict)},
              {"failed_clause", v.failed_clause ? json(ToString(*v.failed_clause)) : json(nullptr)},
              {"failed_degree", v.failed_degree ? json(*v.failed_degree) : json(nullptr)},
              {"certificate", v.certificate}};
  std::string line = "verdict: " + ToString(v.verdict);
  if (v.failed_clause) line += ", clause (" + ToString(*v.failed_clause) + ")";
  r.lines.push_back(line);
  for (const std::string& c : v.certificate) r.lines.push_back("  " + c);
  if (p.EvenReductionIsZero()) {
    const bool generic = GenericNonsingular(p);
    r.result["generic_nonsingular"] = generic;
    r.lines.push_back(std::string("generic point: ") + (generic ? "nonsingular" : "singular"));
  } else {
    r.result["generic_nonsingular"] = nullptr;
  }
}

void Omega(const SuperPresentation& p, CommandReport& r) {
  const OmegaPresentation omega = MakeOmegaPresentation(p);
  json relations = json::array();
  r.lines.push_back("generators: even " + std::to_string(omega.even_generators.size()) +
                    ", odd " + std::to_string(omega.odd_generators.size()));
  for (std::size_t k = 0; k < omega.relations.size(); ++k) {
    const std::string form = FormatOmega(p, omega.relations[k]);
    relations.push_back({{"form", form}, {"parity", ToString(omega.parities[k])}});
    r.lines.push_back("  d0(" + p.Format(p.relations()[k]) + ") = " + form);
  }
  r.result = {{"even_generators", omega.even_generators},
              {"odd_generators", omega.odd_generators},
              {"relations", relations}};
  if (p.EvenReductionIsZero()) {
    const GenericRank g = OmegaGenericRank(p);
    const bool regular = RegularityViaOmega(p);
    r.result["generic_rank"] = {{"p", g.p},
                                {"q", g.q},
                                {"free", g.free},
                                {"algebra_dim", g.algebra_dim},
                                {"omega_dim", g.omega_dim}};
    r.result["regular"] = regular;
    r.lines.push_back("generic rank " + std::to_string(g.p) + "|" + std::to_string(g.q) +
                      (g.free ? ", free" : ", not free"));
    r.lines.push_back(std::string("regular at the generic point: ") + (regular ? "yes" : "no"));
  } else {
    r.result["generic_rank"] = nullptr;
    r.result["regular"] = nullptr;
  }
}

void Oracle(const SuperPresentation& p, CommandReport& r) {
  const ExteriorSpan span = BuildExteriorSpan(p);
  const std::size_t odd = OracleOddDim(span);
  r.result = {{"span_dim", span.dimension()},
              {"exterior_dim", std::size_t{1} << p.n()},
              {"odd_dim", odd}};
  r.lines.push_back("dim J' = " + std::to_string(span.dimension()) + " of " +
                    std::to_string(std::size_t{1} << p.n()));
  r.lines.push_back("odd dim = " + std::to_string(odd));
}

void Experiment(const SuperPresentation& p, const CommandOptions& options, CommandReport& r) {
  const SuperPolynomial& f = SingleRelation(p, "experiment");
  const std::vector<OddMonomial> basement = Basement(f);
  const ExperimentReport rep = BasementExperiment(basement, p.n(), options.trials, options.seed);
  json trials = json::array();
  for (const ExperimentTrial& t : rep.trials) {
    trials.push_back({{"seed", t.seed},
                      {"relation", t.relation.ToString({}, p.odd_names())},
                      {"odd_dim", t.odd_dim}});
  }
  r.seed = options.seed;
  r.result = {{"basement", IndexLists(rep.basement)},
              {"s", rep.s},
              {"trials", trials},
              {"observed", rep.observed}};
  std::string seen;
  for (std::size_t v : rep.observed) seen += (seen.empty() ? "" : ", ") + std::to_string(v);
  r.lines.push_back("basement: " + SetsText(p, rep.basement));
  r.lines.push_back(std::to_string(rep.trials.size()) + " trials, observed odd dims {" + seen +
                    "}");
  if (rep.observed.size() >= 2) {
    r.lines.push_back("the basement does not determine the odd dimension");
  }
}

}  // namespace

const std::vector<std::string>& Commands() {
  static const std::vector<std::string> commands = {"ksdim", "onerel", "regular",
                                                    "omega", "oracle", "experiment"};
  return commands;
}

std::string InputDigest(const SuperPresentation& p) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : p.ToString()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

nlohmann::json CommandReport::ToJson() const {
  return {{"command", command},
          {"input_digest", input_digest},
          {"result", result},
          {"timing", {{"seconds", seconds}}},
          {"tool_version", tool_version},
          {"seed", seed ? json(*seed) : json(nullptr)}};
}

CommandReport RunCommand(const std::string& command, const SuperPresentation& p,
                         const CommandOptions& options) {
  CommandReport r;
  r.command = command;
  r.input_digest = InputDigest(p);
  const auto start = std::chrono::steady_clock::now();
  if (command == "ksdim") {
    Ksdim(p, options, r);
  } else if (command == "onerel") {
    OneRel(p, r);
  } else if (command == "regular") {
    Regular(p, r);
  } else if (command == "omega") {
    Omega(p, r);
  } else if (command == "oracle") {
    Oracle(p, r);
  } else if (command == "experiment") {
    Experiment(p, options, r);
  } else {
    throw ArgumentError("unknown command '" + command + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace superkrull
