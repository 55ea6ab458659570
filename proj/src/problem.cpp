#include "npure/problem.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "npure/purity.hpp"

namespace npure {

namespace {

using nlohmann::json;

Ring parse_ring(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("ring: expected \"Z\" or \"Z/<m>\"");
  std::string s = j.get<std::string>();
  if (s == "Z") return Ring::integers();
  if (s.rfind("Z/", 0) == 0) {
    try {
      return Ring::modular(Int(s.substr(2)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("ring: bad modulus in '" + s + "'");
    }
  }
  throw std::invalid_argument("ring: expected \"Z\" or \"Z/<m>\", got '" + s + "'");
}

IntMatrix parse_matrix(const json& j, long expected_cols, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array of rows");
  IntMatrix out(static_cast<Index>(j.size()), expected_cols);
  Index r = 0;
  for (const json& row : j) {
    if (!row.is_array() || static_cast<long>(row.size()) != expected_cols)
      throw std::invalid_argument(std::string(what) + ": row length must equal ambient_rank");
    Index c = 0;
    for (const json& cell : row) {
      if (!cell.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": entries must be integers");
      out(r, c++) = Int(cell.get<long>());
    }
    ++r;
  }
  return out;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_int64(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string display_name(const CheckRequest& req, int level) {
  if (req.check == "n-pure") return std::to_string(level) + "-pure";
  if (req.check == "fully-n-pure") return "fully-" + std::to_string(level) + "-pure";
  return req.check;
}

json envelope(const std::string& command, const std::string& digest_source, json verdicts,
              json violations, double elapsed, bool timing) {
  json j;
  j["command"] = command;
  j["inputs-digest"] = inputs_digest(digest_source);
  j["verdicts"] = std::move(verdicts);
  j["violations"] = std::move(violations);
  j["timing"] = timing ? elapsed : 0.0;
  return j;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

ModulePresentation ProblemDescription::module() const {
  return ModulePresentation(ring, ambient_rank, relations);
}

Submodule ProblemDescription::named_submodule(const std::string& name) const {
  for (const auto& [n, gens] : submodules)
    if (n == name) return submodule_span(module(), gens);
  throw std::invalid_argument("unknown submodule '" + name + "'");
}

ProblemDescription parse_problem(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("input: expected a JSON object");
  ProblemDescription p;
  if (!doc.contains("ring")) throw std::invalid_argument("input: missing 'ring'");
  p.ring = parse_ring(doc.at("ring"));
  if (!doc.contains("ambient_rank") || !doc.at("ambient_rank").is_number_integer())
    throw std::invalid_argument("input: missing integer 'ambient_rank'");
  p.ambient_rank = doc.at("ambient_rank").get<long>();
  if (p.ambient_rank < 0) throw std::invalid_argument("input: ambient_rank must be >= 0");
  p.relations = doc.contains("relations")
                    ? parse_matrix(doc.at("relations"), p.ambient_rank, "relations")
                    : IntMatrix(0, p.ambient_rank);
  if (doc.contains("submodules")) {
    if (!doc.at("submodules").is_array())
      throw std::invalid_argument("input: 'submodules' must be an array");
    for (const json& entry : doc.at("submodules")) {
      if (!entry.is_object() || !entry.contains("name") || !entry.contains("generators"))
        throw std::invalid_argument("input: submodule entries need 'name' and 'generators'");
      std::string name = entry.at("name").get<std::string>();
      for (const auto& [existing, g] : p.submodules)
        if (existing == name)
          throw std::invalid_argument("input: duplicate submodule name '" + name + "'");
      p.submodules.emplace_back(name,
                                parse_matrix(entry.at("generators"), p.ambient_rank, "generators"));
    }
  }
  if (doc.contains("checks")) {
    if (!doc.at("checks").is_array())
      throw std::invalid_argument("input: 'checks' must be an array");
    for (const json& entry : doc.at("checks")) {
      if (!entry.is_object() || !entry.contains("check"))
        throw std::invalid_argument("input: check entries need a 'check' field");
      CheckRequest req;
      req.check = entry.at("check").get<std::string>();
      if (entry.contains("submodule")) req.submodule = entry.at("submodule").get<std::string>();
      if (entry.contains("n")) req.level = entry.at("n").get<int>();
      if (entry.contains("policy")) req.policy = entry.at("policy").get<std::string>();
      if (entry.contains("prime_powers")) {
        for (const json& pp : entry.at("prime_powers")) {
          if (!pp.is_array() || pp.size() != 2)
            throw std::invalid_argument("input: prime_powers entries are [p, s] pairs");
          req.prime_powers.emplace_back(pp[0].get<long>(), pp[1].get<unsigned long>());
        }
      }
      p.checks.push_back(std::move(req));
    }
  }
  // validate the presentation and submodule names eagerly
  ModulePresentation m = p.module();
  for (const auto& [name, gens] : p.submodules) (void)submodule_span(m, gens);
  return p;
}

ProblemDescription parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_problem(doc);
}

json problem_to_json(const ProblemDescription& p) {
  json doc;
  doc["ring"] = p.ring.to_string();
  doc["ambient_rank"] = p.ambient_rank;
  doc["relations"] = matrix_to_json(p.relations);
  json subs = json::array();
  for (const auto& [name, gens] : p.submodules)
    subs.push_back({{"name", name}, {"generators", matrix_to_json(gens)}});
  doc["submodules"] = std::move(subs);
  json checks = json::array();
  for (const CheckRequest& req : p.checks) {
    json entry;
    entry["check"] = req.check;
    if (!req.submodule.empty()) entry["submodule"] = req.submodule;
    if (req.level != 0) entry["n"] = req.level;
    if (!req.policy.empty()) entry["policy"] = req.policy;
    if (!req.prime_powers.empty()) {
      json pps = json::array();
      for (const auto& [prime, exp] : req.prime_powers) pps.push_back({prime, exp});
      entry["prime_powers"] = std::move(pps);
    }
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

bool problems_equal(const ProblemDescription& a, const ProblemDescription& b) {
  return problem_to_json(a) == problem_to_json(b);
}

QuantificationPolicy resolve_policy(const std::string& name, const ModulePresentation& m) {
  if (name.empty()) return auto_policy(m);
  if (name == "exhaustive") return QuantificationPolicy::exhaustive();
  if (name == "residue") return QuantificationPolicy::residue_reduced();
  if (name.rfind("bounded:", 0) == 0) {
    try {
      return QuantificationPolicy::bounded(Int(name.substr(8)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("policy: bad bound in '" + name + "'");
    }
  }
  throw std::invalid_argument("policy: expected exhaustive|residue|bounded:<B>, got '" + name +
                              "'");
}

std::string inputs_digest(const std::string& canonical) {
  unsigned long long hash = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

json verdict_to_json(const Verdict& verdict) {
  json j;
  j["outcome"] = to_string(verdict.outcome());
  if (verdict.witness()) {
    json w;
    if (!verdict.witness()->ideals.empty()) {
      json ideals = json::array();
      for (const Ideal& i : verdict.witness()->ideals)
        ideals.push_back(to_int64(i.residue_generator()));
      w["ideals"] = std::move(ideals);
    }
    if (!verdict.witness()->elements.empty()) {
      json elems = json::array();
      for (const Int& r : verdict.witness()->elements) elems.push_back(to_int64(r));
      w["elements"] = std::move(elems);
    }
    if (!verdict.witness()->submodules.empty()) {
      json subs = json::array();
      for (const Submodule& s : verdict.witness()->submodules)
        subs.push_back(matrix_to_json(s.lattice().basis()));
      w["submodules"] = std::move(subs);
    }
    j["witness"] = std::move(w);
  }
  if (verdict.bound()) j["bound"] = to_int64(*verdict.bound());
  return j;
}

json violation_to_json(const Violation& violation) {
  json j;
  j["claim"] = violation.claim;
  j["module"] = violation.module_desc;
  j["submodules"] = violation.submodules;
  j["ideals"] = violation.ideals;
  j["detail"] = violation.detail;
  return j;
}

namespace {

Verdict run_one_check(const ProblemDescription& problem, const ModulePresentation& m,
                      const CheckRequest& req, int level, const QuantificationPolicy& policy) {
  auto need_submodule = [&]() -> Submodule {
    if (req.submodule.empty())
      throw std::invalid_argument("check '" + req.check + "' needs a 'submodule'");
    return problem.named_submodule(req.submodule);
  };
  if (req.check == "pure") return is_pure(need_submodule(), m, policy);
  if (req.check == "ribenboim-pure") return is_ribenboim_pure(need_submodule(), m, policy);
  if (req.check == "n-pure")
    return is_n_pure(need_submodule(), m, PurityLevel(level), policy);
  if (req.check == "fully-n-pure") return is_fully_n_pure(m, PurityLevel(level), policy);
  if (req.check == "multiplication") return is_multiplication_module(m, policy);
  if (req.check == "fully-cancellation") return is_fully_cancellation(m, policy);
  if (req.check == "wsas-second")
    return is_weakly_strongly_2_absorbing_second(need_submodule(), m);
  if (req.check == "wsas-identity") return check_wsas_identity(need_submodule(), m);
  if (req.check == "pid-factorization") {
    if (req.prime_powers.empty())
      throw std::invalid_argument("pid-factorization needs 'prime_powers'");
    std::vector<std::pair<Int, unsigned long>> pps;
    for (const auto& [p, s] : req.prime_powers) pps.emplace_back(Int(static_cast<long>(p)), s);
    return check_pid_factorization(need_submodule(), pps);
  }
  if (req.check == "product-characterization")
    return check_product_characterization(m, PurityLevel(level));
  if (req.check == "colon-transfer")
    return check_colon_transfer(need_submodule(), m, PurityLevel(level), policy);
  throw std::invalid_argument("unknown check '" + req.check + "'");
}

}  // namespace

CommandResult cmd_check(const std::string& input_text, const CommonOptions& options) {
  Stopwatch watch;
  ProblemDescription problem = parse_problem_text(input_text);
  ModulePresentation m = problem.module();

  struct Row {
    std::string check, target, verdict;
    Outcome outcome;
    json machine;
  };
  std::vector<Row> rows;
  for (const CheckRequest& req : problem.checks) {
    int level = req.level > 0 ? req.level : options.level;
    QuantificationPolicy policy =
        resolve_policy(!req.policy.empty() ? req.policy : options.policy, m);
    Verdict verdict = run_one_check(problem, m, req, level, policy);
    Row row;
    row.check = display_name(req, level);
    row.target = req.submodule.empty() ? "M" : req.submodule;
    row.verdict = verdict.to_string();
    row.outcome = verdict.outcome();
    row.machine = verdict_to_json(verdict);
    row.machine["check"] = row.check;
    row.machine["target"] = row.target;
    rows.push_back(std::move(row));
  }

  int exit_code = 0;
  for (const Row& row : rows)
    if (row.outcome == Outcome::kFails) exit_code = 1;
  if (exit_code == 0)
    for (const Row& row : rows)
      if (row.outcome == Outcome::kUnknown) exit_code = 2;

  std::ostringstream text;
  text << m.describe() << "  (" << m.structure_name() << ")\n";
  for (const auto& [name, gens] : problem.submodules)
    text << "  " << name << " = " << problem.named_submodule(name).describe() << "\n";
  if (!rows.empty()) {
    text << std::left << std::setw(24) << "check" << std::setw(10) << "target" << "verdict\n";
    for (const Row& row : rows)
      text << std::left << std::setw(24) << row.check << std::setw(10) << row.target
           << row.verdict << "\n";
  }

  json verdicts = json::array();
  for (const Row& row : rows) verdicts.push_back(row.machine);
  CommandResult result;
  result.exit_code = exit_code;
  result.text = text.str();
  result.machine = envelope("check", problem_to_json(problem).dump(), std::move(verdicts),
                            json::array(), watch.seconds(), options.timing);
  return result;
}

SuiteResult run_paper_suite(const std::map<std::string, std::string>& expectation_overrides,
                            int threads) {
  Stopwatch watch;
  SuiteResult result;
  auto add = [&](const std::string& name, std::string expected, const std::string& actual) {
    auto it = expectation_overrides.find(name);
    if (it != expectation_overrides.end()) expected = it->second;
    SuiteEntry entry{name, std::move(expected), actual, false};
    entry.pass = entry.expected == entry.actual;
    result.all_pass = result.all_pass && entry.pass;
    result.entries.push_back(std::move(entry));
  };

  // Z4: 2-pure but not pure (nor Ribenboim pure)
  {
    ModulePresentation m = ModulePresentation::cyclic(Ring::modular(4), 4);
    IntMatrix gen(1, 1);
    gen(0, 0) = 2;
    Submodule n = submodule_span(m, gen);
    auto policy = auto_policy(m);
    add("z4-pure", "Fails [I=(2)]", is_pure(n, m, policy).to_string());
    add("z4-ribenboim-pure", "Fails [r=2]", is_ribenboim_pure(n, m, policy).to_string());
    add("z4-2-pure", "Holds", is_n_pure(n, m, PurityLevel(2), policy).to_string());
  }

  // Z_{2^n}: n-pure but not (n-1)-pure, n = 2..6
  for (int level = 2; level <= 6; ++level) {
    Int order = pow_int(2, static_cast<unsigned long>(level));
    ModulePresentation m = ModulePresentation::cyclic(Ring::modular(order), order);
    IntMatrix gen(1, 1);
    gen(0, 0) = 2;
    Submodule n = submodule_span(m, gen);
    auto policy = auto_policy(m);
    std::string base = "z" + order.get_str();
    add(base + "-" + std::to_string(level) + "-pure", "Holds",
        is_n_pure(n, m, PurityLevel(level), policy).to_string());
    std::string expected = "Fails [I=";
    for (int i = 0; i < level - 1; ++i) expected += std::string(i ? "," : "") + "(2)";
    expected += "]";
    add(base + "-" + std::to_string(level - 1) + "-pure", expected,
        is_n_pure(n, m, PurityLevel(level - 1), policy).to_string());
  }

  // 2Z <= Z under the bounded policy
  {
    ModulePresentation z = ModulePresentation::cyclic(Ring::integers(), 0);
    IntMatrix gen(1, 1);
    gen(0, 0) = 2;
    Submodule n = submodule_span(z, gen);
    add("z-2z-2-pure-bounded:8", "Fails [I=(2),(2)]",
        is_n_pure(n, z, PurityLevel(2), QuantificationPolicy::bounded(8)).to_string());
  }

  // proposition scans, one per registered claim
  struct ScanSpec {
    const char* claim;
    ModuleFamily family;
    int level;
  };
  auto cyclic = [](long max) {
    ModuleFamily f;
    f.kind = ModuleFamily::Kind::kCyclic;
    f.max = max;
    return f;
  };
  auto rank2 = [](long max) {
    ModuleFamily f;
    f.kind = ModuleFamily::Kind::kRankTwo;
    f.max = max;
    return f;
  };
  const std::vector<ScanSpec> scans = {
      {"pure-implies-2pure", cyclic(32), 2},
      {"hierarchy", cyclic(24), 4},
      {"squarefree-coprime-product", cyclic(30), 2},
      {"pid-factorization", cyclic(24), 2},
      {"local-global", rank2(36), 2},
      {"sufficient-intersection", cyclic(16), 2},
      {"sufficient-pure-scalings", cyclic(16), 2},
      {"transitivity", cyclic(16), 2},
      {"hereditary", cyclic(16), 2},
      {"quotient-lifting", cyclic(16), 2},
      {"chain-closure", cyclic(16), 2},
      {"wsas-identity", cyclic(12), 2},
      {"colon-transfer", cyclic(24), 2},
      {"product-characterization", cyclic(24), 2},
      {"maximal-n-pure", cyclic(16), 2},
      {"fields-fully-n-pure", cyclic(13), 3},
      {"oracle-equivalence", cyclic(16), 3},
  };
  for (const ScanSpec& spec : scans) {
    ScanOptions scan_options;
    scan_options.level = spec.level;
    scan_options.threads = threads;
    ScanReport report = conjecture_scan(spec.claim, spec.family, scan_options);
    add(std::string("scan:") + spec.claim + " " + spec.family.to_string(), "0 violations",
        std::to_string(report.violations.size()) + " violations");
  }

  result.elapsed_seconds = watch.seconds();
  return result;
}

CommandResult cmd_paper_suite(const CommonOptions& options) {
  SuiteResult suite = run_paper_suite({}, options.threads);
  std::ostringstream text;
  text << "paper example suite\n";
  for (const SuiteEntry& entry : suite.entries) {
    text << (entry.pass ? "[PASS] " : "[FAIL] ") << entry.name << ": expected " << entry.expected
         << ", got " << entry.actual << "\n";
  }
  text << (suite.all_pass ? "all expectations met" : "UNEXPECTED VERDICTS PRESENT") << "\n";
  text << "suite runtime: " << std::fixed << std::setprecision(2) << suite.elapsed_seconds
       << "s\n";

  json verdicts = json::array();
  for (const SuiteEntry& entry : suite.entries)
    verdicts.push_back({{"check", entry.name},
                        {"outcome", entry.pass ? "pass" : "fail"},
                        {"expected", entry.expected},
                        {"actual", entry.actual}});
  CommandResult result;
  result.exit_code = suite.all_pass ? 0 : 1;
  result.text = text.str();
  result.machine = envelope("paper-suite", "paper-suite", std::move(verdicts), json::array(),
                            suite.elapsed_seconds, options.timing);
  return result;
}

CommandResult cmd_scan(const std::string& claim, const ModuleFamily& family,
                       const CommonOptions& options) {
  ScanOptions scan_options;
  scan_options.level = options.level;
  scan_options.threads = options.threads;
  ScanReport report = conjecture_scan(claim, family, scan_options);

  std::ostringstream text;
  text << "claim " << claim << " over " << report.family << ": scanned "
       << report.scanned_instances << " instances, " << report.violations.size()
       << " violations\n";
  for (const Violation& v : report.violations) {
    text << "  " << v.module_desc << ": " << v.detail;
    if (!v.submodules.empty()) {
      text << " N=";
      for (std::size_t i = 0; i < v.submodules.size(); ++i)
        text << (i ? "," : "") << v.submodules[i];
    }
    if (!v.ideals.empty()) {
      text << " I=";
      for (std::size_t i = 0; i < v.ideals.size(); ++i) text << (i ? "," : "") << v.ideals[i];
    }
    text << "\n";
  }

  json violations = json::array();
  for (const Violation& v : report.violations) violations.push_back(violation_to_json(v));
  json verdicts = json::array();
  verdicts.push_back({{"check", "scan:" + claim},
                      {"outcome", report.violations.empty() ? "Holds" : "Fails"}});
  CommandResult result;
  result.exit_code = report.violations.empty() ? 0 : 1;
  result.text = text.str();
  result.machine =
      envelope("scan", claim + "|" + family.to_string() + "|" + std::to_string(options.level),
               std::move(verdicts), std::move(violations), report.elapsed_seconds,
               options.timing);
  result.machine["claim"] = claim;
  result.machine["family"] = report.family;
  result.machine["scanned_instances"] = report.scanned_instances;
  return result;
}

CommandResult cmd_mine(const std::string& pattern, const ModuleFamily& family,
                       const CommonOptions& options) {
  Stopwatch watch;
  auto witnesses = witness_mine(pattern, family, options.level, options.threads);

  std::ostringstream text;
  text << "pattern " << pattern << " (n=" << options.level << ") over " << family.to_string()
       << ": " << witnesses.size() << " witnesses\n";
  json found = json::array();
  for (const MinedWitness& w : witnesses) {
    text << "  " << w.module.describe() << "  N=" << w.submodule.describe() << "\n";
    found.push_back({{"module", w.module.describe()},
                     {"structure", w.module.structure_name()},
                     {"submodule", matrix_to_json(w.submodule.lattice().basis())},
                     {"n", w.level}});
  }
  CommandResult result;
  result.exit_code = 0;
  result.text = text.str();
  result.machine =
      envelope("mine", pattern + "|" + family.to_string() + "|" + std::to_string(options.level),
               json::array(), json::array(), watch.seconds(), options.timing);
  result.machine["witnesses"] = std::move(found);
  return result;
}

CommandResult cmd_enumerate(const std::string& input_text, const CommonOptions& options) {
  Stopwatch watch;
  ProblemDescription problem = parse_problem_text(input_text);
  ModulePresentation m = problem.module();
  auto subs = enumerate_submodules(m);

  std::ostringstream text;
  text << m.describe() << ": " << subs.size() << " submodules\n";
  json listed = json::array();
  for (const Submodule& s : subs) {
    text << "  " << s.describe() << "  (" << as_module(s).module().structure_name() << ")\n";
    listed.push_back(matrix_to_json(s.lattice().basis()));
  }
  CommandResult result;
  result.exit_code = 0;
  result.text = text.str();
  result.machine = envelope("enumerate", problem_to_json(problem).dump(), json::array(),
                            json::array(), watch.seconds(), options.timing);
  result.machine["submodules"] = std::move(listed);
  return result;
}

CommandResult cmd_maximal_pure(const std::string& input_text, const std::string& submodule_name,
                               bool strict, const CommonOptions& options) {
  Stopwatch watch;
  ProblemDescription problem = parse_problem_text(input_text);
  ModulePresentation m = problem.module();
  Submodule k = submodule_name.empty() ? full_submodule(m)
                                       : problem.named_submodule(submodule_name);
  auto maximal = maximal_pure_submodules(k, m, strict);

  std::ostringstream text;
  text << "maximal pure submodules of " << (submodule_name.empty() ? "M" : submodule_name)
       << " in " << m.describe() << (strict ? " (strict)" : "") << ": " << maximal.size()
       << "\n";
  json listed = json::array();
  for (const Submodule& s : maximal) {
    text << "  " << s.describe() << "\n";
    listed.push_back(matrix_to_json(s.lattice().basis()));
  }
  CommandResult result;
  result.exit_code = 0;
  result.text = text.str();
  result.machine = envelope(
      "maximal-pure",
      problem_to_json(problem).dump() + "|" + submodule_name + "|" + (strict ? "1" : "0"),
      json::array(), json::array(), watch.seconds(), options.timing);
  result.machine["maximal"] = std::move(listed);
  return result;
}

}  // namespace npure
