#include "npure/scan.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace npure {

namespace {

// Re-evaluates a failed n-purity identity with pure set arithmetic; a
// violation that does not replay is an engine inconsistency.
bool oracle_confirms_failure(const Submodule& n, const ModulePresentation& m,
                             const std::vector<Ideal>& ideals) {
  ElementSet n_set = to_element_set(n);
  ElementSet full = full_element_set(m);
  Ideal product = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) product = ideal_product(product, ideals[i]);
  ElementSet rhs = ideals.size() == 1 ? n_set : oracle_scale(ideals[0], n_set);
  if (ideals.size() > 1)
    for (std::size_t i = 1; i < ideals.size(); ++i)
      rhs = oracle_intersect(rhs, oracle_scale(ideals[i], n_set));
  rhs = oracle_intersect(rhs, oracle_scale(product, full));
  return oracle_scale(product, n_set) != rhs;
}

// Collects violations for one family instance; the per-instance index keeps
// merged multi-threaded reports in a canonical order.
class Sink {
 public:
  Sink(std::size_t instance_index, std::string claim, const ModulePresentation& m)
      : index_(instance_index), claim_(std::move(claim)), module_(m) {}

  void count(std::size_t n = 1) { scanned_ += n; }

  void violation(std::string detail, const std::vector<Submodule>& subs = {},
                 const std::vector<Ideal>& ideals = {}) {
    Violation v;
    v.instance_index = index_;
    v.claim = claim_;
    v.module_desc = module_.describe();
    for (const Submodule& s : subs) v.submodules.push_back(s.describe());
    for (const Ideal& i : ideals) v.ideals.push_back(i.to_string());
    v.detail = std::move(detail);
    violations_.push_back(std::move(v));
  }

  std::size_t scanned() const { return scanned_; }
  std::vector<Violation>& violations() { return violations_; }

 private:
  std::size_t index_;
  std::string claim_;
  const ModulePresentation& module_;
  std::size_t scanned_ = 0;
  std::vector<Violation> violations_;
};

using ClaimFn = std::function<void(const ModulePresentation&, const ScanOptions&, Sink&)>;

// ---- claim implementations ----

void claim_pure_implies_2pure(const ModulePresentation& m, const ScanOptions&, Sink& sink) {
  auto policy = auto_policy(m);
  for (const Submodule& n : enumerate_submodules(m)) {
    sink.count();
    if (!is_pure(n, m, policy).is_holds()) continue;
    Verdict two = is_n_pure(n, m, PurityLevel(2), policy);
    if (two.is_holds()) continue;
    if (!oracle_confirms_failure(n, m, two.witness()->ideals))
      throw std::logic_error("scan violation does not replay through the oracle");
    sink.violation("pure but not 2-pure", {n}, two.witness()->ideals);
  }
}

void claim_hierarchy(const ModulePresentation& m, const ScanOptions& options, Sink& sink) {
  auto policy = auto_policy(m);
  for (const Submodule& n : enumerate_submodules(m)) {
    bool prev = is_pure(n, m, policy).is_holds();
    for (int level = 2; level <= options.level; ++level) {
      sink.count();
      Verdict cur = is_n_pure(n, m, PurityLevel(level), policy);
      if (prev && !cur.is_holds()) {
        if (!oracle_confirms_failure(n, m, cur.witness()->ideals))
          throw std::logic_error("scan violation does not replay through the oracle");
        sink.violation(std::to_string(level - 1) + "-pure but not " + std::to_string(level) +
                           "-pure",
                       {n}, cur.witness()->ideals);
      }
      prev = cur.is_holds();
    }
  }
}

void claim_squarefree_coprime(const ModulePresentation& m, const ScanOptions&, Sink& sink) {
  if (m.ring().is_modular()) return;  // statement about Z-modules
  std::vector<std::pair<long, long>> pairs;
  for (long a = 2; a <= 15; ++a)
    for (long b = a + 1; b <= 15; ++b) {
      auto squarefree = [](long x) {
        for (long d = 2; d * d <= x; ++d)
          if (x % (d * d) == 0) return false;
        return true;
      };
      if (squarefree(a) && squarefree(b) && gcd(a, b) == 1) pairs.emplace_back(a, b);
    }
  for (const Submodule& n : enumerate_submodules(m)) {
    for (const auto& [a, b] : pairs) {
      sink.count();
      Submodule lhs = scale_by_ideal(Ideal(m.ring(), Int(a) * Int(b)), n);
      Submodule rhs = submodule_intersect(scale_by_ideal(Ideal(m.ring(), a), n),
                                          scale_by_ideal(Ideal(m.ring(), b), n));
      if (lhs == rhs) continue;
      ElementSet ns = to_element_set(n);
      if (oracle_scale(Ideal(m.ring(), Int(a) * Int(b)), ns) ==
          oracle_intersect(oracle_scale(Ideal(m.ring(), a), ns),
                           oracle_scale(Ideal(m.ring(), b), ns)))
        throw std::logic_error("scan violation does not replay through the oracle");
      sink.violation("(" + std::to_string(a) + ")(" + std::to_string(b) +
                         ")N != intersection",
                     {n}, {Ideal(m.ring(), a), Ideal(m.ring(), b)});
    }
  }
}

void claim_pid_factorization(const ModulePresentation& m, const ScanOptions&, Sink& sink) {
  if (m.ring().is_modular()) return;  // PID statement over Z
  static const std::vector<std::vector<std::pair<Int, unsigned long>>> tuples = [] {
    std::vector<std::vector<std::pair<Int, unsigned long>>> out;
    const long primes[] = {2, 3, 5};
    for (int mask = 1; mask < 8; ++mask) {
      std::vector<long> ps;
      for (int i = 0; i < 3; ++i)
        if (mask & (1 << i)) ps.push_back(primes[i]);
      std::vector<unsigned long> exps(ps.size(), 1);
      for (;;) {
        std::vector<std::pair<Int, unsigned long>> tuple;
        for (std::size_t i = 0; i < ps.size(); ++i) tuple.emplace_back(ps[i], exps[i]);
        out.push_back(std::move(tuple));
        std::size_t pos = 0;
        while (pos < exps.size() && exps[pos] == 2) exps[pos++] = 1;
        if (pos == exps.size()) break;
        ++exps[pos];
      }
    }
    return out;
  }();
  for (const Submodule& n : enumerate_submodules(m)) {
    for (const auto& tuple : tuples) {
      sink.count();
      Verdict v = check_pid_factorization(n, tuple);
      if (v.is_holds()) continue;
      // replay through set arithmetic
      ElementSet ns = to_element_set(n);
      Int total(1);
      for (const auto& [p, s] : tuple) total *= pow_int(p, s);
      ElementSet rhs = oracle_scale(Ideal(m.ring(), pow_int(tuple[0].first, tuple[0].second)), ns);
      for (std::size_t i = 1; i < tuple.size(); ++i)
        rhs = oracle_intersect(
            rhs, oracle_scale(Ideal(m.ring(), pow_int(tuple[i].first, tuple[i].second)), ns));
      if (oracle_scale(Ideal(m.ring(), total), ns) == rhs)
        throw std::logic_error("scan violation does not replay through the oracle");
      sink.violation("prime power factorization identity failed", {n}, v.witness()->ideals);
    }
  }
}

void claim_local_global(const ModulePresentation& m, const ScanOptions& options, Sink& sink) {
  if (m.ring().is_modular()) return;  // localization is presented over Z
  auto policy = auto_policy(m);
  Int e = exponent(m);
  std::vector<Localization> locs;
  for (const auto& [p, ignored] : factorize(e)) {
    (void)ignored;
    locs.push_back(localize(m, p));
  }
  for (const Submodule& n : enumerate_submodules(m)) {
    sink.count();
    bool global = is_n_pure(n, m, PurityLevel(options.level), policy).is_holds();
    bool local = true;
    for (const Localization& loc : locs) {
      Submodule image = loc.transfer(n);
      if (!is_n_pure(image, loc.module(), PurityLevel(options.level), auto_policy(loc.module()))
               .is_holds())
        local = false;
    }
    if (global != local)
      sink.violation(std::string("global ") + (global ? "holds" : "fails") +
                         " but primary components " + (local ? "hold" : "fail"),
                     {n});
  }
}

void claim_sufficient_a(const ModulePresentation& m, const ScanOptions& options, Sink& sink) {
  auto policy = auto_policy(m);
  Int e = exponent(m);
  auto ideals = proper_ideals(m.ring(), policy, e);
  const std::size_t size = static_cast<std::size_t>(options.level);
  for (const Submodule& n : enumerate_submodules(m)) {
    sink.count();
    bool premise = true;
    std::vector<std::size_t> idx(size, 0);
    for (premise = true;;) {
      Ideal product = ideals[idx[0]];
      Submodule rhs = scale_by_ideal(ideals[idx[0]], n);
      for (std::size_t j = 1; j < size; ++j) {
        product = ideal_product(product, ideals[idx[j]]);
        rhs = submodule_intersect(rhs, scale_by_ideal(ideals[idx[j]], n));
      }
      if (scale_by_ideal(product, n) != rhs) {
        premise = false;
        break;
      }
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == ideals.size() - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[pos - 1];
    }
    if (!premise) continue;
    Verdict v = is_n_pure(n, m, PurityLevel(options.level), policy);
    if (!v.is_holds())
      sink.violation("intersection identity holds but n-purity fails", {n},
                     v.witness()->ideals);
  }
}

void claim_sufficient_b(const ModulePresentation& m, const ScanOptions&, Sink& sink) {
  auto policy = auto_policy(m);
  Int e = exponent(m);
  auto ideals = proper_ideals(m.ring(), policy, e);
  for (const Submodule& n : enumerate_submodules(m)) {
    sink.count();
    bool premise = true;
    for (const Ideal& i : ideals)
      if (!is_pure(scale_by_ideal(i, n), m, policy).is_holds()) {
        premise = false;
        break;
      }
    if (!premise) continue;
    Verdict v = is_n_pure(n, m, PurityLevel(2), policy);
    if (!v.is_holds())
      sink.violation("IN pure for all proper I but N not 2-pure", {n}, v.witness()->ideals);
  }
}

void claim_transitivity(const ModulePresentation& m, const ScanOptions& options, Sink& sink) {
  auto policy = auto_policy(m);
  auto subs = enumerate_submodules(m);
  std::vector<bool> pure_in_m(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i)
    pure_in_m[i] = is_n_pure(subs[i], m, PurityLevel(options.level), policy).is_holds();
  for (std::size_t ki = 0; ki < subs.size(); ++ki) {
    if (!pure_in_m[ki]) continue;
    SubmoduleAsModule k_mod = as_module(subs[ki]);
    auto k_policy = auto_policy(k_mod.module());
    for (std::size_t ni = 0; ni < subs.size(); ++ni) {
      if (!submodule_contains(subs[ki], subs[ni])) continue;
      sink.count();
      Submodule inner = k_mod.restrict(subs[ni]);
      if (!is_n_pure(inner, k_mod.module(), PurityLevel(options.level), k_policy).is_holds())
        continue;
      if (!pure_in_m[ni])
        sink.violation("n-pure in K and K n-pure in M, but not n-pure in M",
                       {subs[ni], subs[ki]});
    }
  }
}

void claim_hereditary(const ModulePresentation& m, const ScanOptions& options, Sink& sink) {
  auto policy = auto_policy(m);
  auto subs = enumerate_submodules(m);
  for (const Submodule& k : subs) {
    if (!is_n_pure(k, m, PurityLevel(options.level), policy).is_holds()) continue;
    for (const Submodule& n : subs) {
      if (!submodule_contains(k, n)) continue;
      sink.count();
      ModulePresentation q = quotient(m, n);
      Submodule image = quotient_image(q, k);
      if (!is_n_pure(image, q, PurityLevel(options.level), auto_policy(q)).is_holds())
        sink.violation("K n-pure in M but K/N not n-pure in M/N", {k, n});
    }
  }
}

void claim_quotient_lifting(const ModulePresentation& m, const ScanOptions& options,
                            Sink& sink) {
  auto policy = auto_policy(m);
  auto subs = enumerate_submodules(m);
  for (const Submodule& n : subs) {
    if (!is_pure(n, m, policy).is_holds()) continue;
    ModulePresentation q = quotient(m, n);
    auto q_policy = auto_policy(q);
    for (const Submodule& k : subs) {
      if (!submodule_contains(k, n)) continue;
      sink.count();
      Submodule image = quotient_image(q, k);
      if (!is_n_pure(image, q, PurityLevel(options.level), q_policy).is_holds()) continue;
      Verdict v = is_n_pure(k, m, PurityLevel(options.level), policy);
      if (!v.is_holds())
        sink.violation("K/N n-pure in M/N with N pure in M, but K not n-pure in M", {k, n},
                       v.witness()->ideals);
    }
  }
}

void claim_chain_closure(const ModulePresentation& m, const ScanOptions& options, Sink& sink) {
  auto policy = auto_policy(m);
  auto subs = enumerate_submodules(m);
  std::vector<std::size_t> pure_idx;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (is_n_pure(subs[i], m, PurityLevel(options.level), policy).is_holds())
      pure_idx.push_back(i);
  // finite chains: the union is the top element, which must stay n-pure
  for (std::size_t a : pure_idx)
    for (std::size_t b : pure_idx) {
      if (a == b || !submodule_contains(subs[b], subs[a])) continue;
      sink.count();
      Submodule top = submodule_sum(subs[a], subs[b]);
      if (!is_n_pure(top, m, PurityLevel(options.level), policy).is_holds())
        sink.violation("union of a chain of n-pure submodules is not n-pure",
                       {subs[a], subs[b]});
    }
}

void claim_wsas_identity(const ModulePresentation& m, const ScanOptions&, Sink& sink) {
  if (!m.ring().is_modular()) return;  // elementwise scan needs a finite ring
  for (const Submodule& n : enumerate_submodules(m)) {
    if (n.is_zero()) continue;
    sink.count();
    if (!is_weakly_strongly_2_absorbing_second(n, m).is_holds()) continue;
    Verdict v = check_wsas_identity(n, m);
    if (!v.is_holds())
      sink.violation("weakly strongly 2-absorbing second but abN != aN ∩ bN ∩ abM", {n});
  }
}

void claim_colon_transfer(const ModulePresentation& m, const ScanOptions& options, Sink& sink) {
  auto policy = auto_policy(m);
  if (!colon_ideal(zero_submodule(m), m).is_zero()) return;  // not faithful
  if (!cardinality(m) || !is_multiplication_module(m, policy).is_holds()) return;
  for (const Submodule& n : enumerate_submodules(m)) {
    sink.count();
    Verdict v = check_colon_transfer(n, m, PurityLevel(options.level), policy);
    if (!v.is_holds())
      sink.violation("N n-pure in M does not match (N:M) n-pure in R", {n});
  }
}

void claim_product_characterization(const ModulePresentation& m, const ScanOptions& options,
                                    Sink& sink) {
  auto policy = auto_policy(m);
  if (!cardinality(m) || !is_multiplication_module(m, policy).is_holds()) return;
  sink.count();
  Verdict v = check_product_characterization(m, PurityLevel(options.level));
  if (!v.is_holds())
    sink.violation("product identity and fully-n-pure disagree",
                   v.witness() ? v.witness()->submodules : std::vector<Submodule>{});
}

void claim_maximal_n_pure(const ModulePresentation& m, const ScanOptions& options, Sink& sink) {
  auto policy = auto_policy(m);
  auto subs = enumerate_submodules(m);
  std::vector<bool> npure(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i)
    npure[i] = is_n_pure(subs[i], m, PurityLevel(options.level), policy).is_holds();
  for (std::size_t ni = 0; ni < subs.size(); ++ni) {
    sink.count();
    Submodule best = maximal_n_pure_within(subs[ni], m, PurityLevel(options.level));
    bool best_ok = submodule_contains(subs[ni], best) &&
                   is_n_pure(best, m, PurityLevel(options.level), policy).is_holds();
    bool maximal = true;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!npure[i] || !submodule_contains(subs[ni], subs[i])) continue;
      if (subs[i] != best && submodule_contains(subs[i], best)) maximal = false;
    }
    if (!best_ok || !maximal)
      sink.violation("maximal n-pure submodule not verified maximal", {subs[ni], best});
  }
}

void claim_fields_fully_n_pure(const ModulePresentation& m, const ScanOptions& options,
                               Sink& sink) {
  if (!m.ring().is_modular() || !is_prime(m.ring().modulus())) return;
  auto policy = auto_policy(m);
  for (int level = 1; level <= options.level; ++level) {
    sink.count();
    Verdict v = is_fully_n_pure(m, PurityLevel(level), policy);
    if (!v.is_holds())
      sink.violation("module over a prime field is not fully " + std::to_string(level) +
                     "-pure");
  }
}

void claim_oracle_equivalence(const ModulePresentation& m, const ScanOptions& options,
                              Sink& sink) {
  auto policy = auto_policy(m);
  for (const Submodule& n : enumerate_submodules(m)) {
    ElementSet n_set = to_element_set(n);
    for (int level = 1; level <= options.level; ++level) {
      sink.count();
      Outcome lattice_side = is_n_pure(n, m, PurityLevel(level), policy).outcome();
      Outcome oracle_side = oracle_is_n_pure(n_set, m, PurityLevel(level), policy).outcome();
      if (lattice_side != oracle_side)
        sink.violation("lattice path " + to_string(lattice_side) + " vs oracle " +
                           to_string(oracle_side) + " at level " + std::to_string(level),
                       {n});
    }
  }
}

const std::vector<std::pair<std::string, ClaimFn>>& claim_registry() {
  static const std::vector<std::pair<std::string, ClaimFn>> registry = {
      {"pure-implies-2pure", claim_pure_implies_2pure},
      {"hierarchy", claim_hierarchy},
      {"squarefree-coprime-product", claim_squarefree_coprime},
      {"pid-factorization", claim_pid_factorization},
      {"local-global", claim_local_global},
      {"sufficient-intersection", claim_sufficient_a},
      {"sufficient-pure-scalings", claim_sufficient_b},
      {"transitivity", claim_transitivity},
      {"hereditary", claim_hereditary},
      {"quotient-lifting", claim_quotient_lifting},
      {"chain-closure", claim_chain_closure},
      {"wsas-identity", claim_wsas_identity},
      {"colon-transfer", claim_colon_transfer},
      {"product-characterization", claim_product_characterization},
      {"maximal-n-pure", claim_maximal_n_pure},
      {"fields-fully-n-pure", claim_fields_fully_n_pure},
      {"oracle-equivalence", claim_oracle_equivalence},
  };
  return registry;
}

}  // namespace

std::string ModuleFamily::to_string() const {
  std::ostringstream out;
  out << (kind == Kind::kCyclic ? "cyclic" : "rank2") << "(max=" << max << ",rings=";
  if (over_integers && over_modular) out << "both";
  else if (over_integers) out << "z";
  else out << "zmod";
  out << ")";
  return out.str();
}

std::vector<ModulePresentation> family_instances(const ModuleFamily& family) {
  std::vector<ModulePresentation> out;
  if (family.kind == ModuleFamily::Kind::kCyclic) {
    for (long m = 1; m <= family.max; ++m) {
      if (family.over_integers) out.push_back(ModulePresentation::cyclic(Ring::integers(), m));
      if (family.over_modular && m >= 2)
        out.push_back(ModulePresentation::cyclic(Ring::modular(m), m));
    }
  } else {
    for (long a = 2; a * a <= family.max; ++a)
      for (long b = a; a * b <= family.max; ++b) {
        if (family.over_integers)
          out.push_back(ModulePresentation::direct_sum(Ring::integers(), {a, b}));
        if (family.over_modular) {
          Int l = lcm(a, b);
          out.push_back(ModulePresentation::direct_sum(Ring::modular(l), {a, b}));
        }
      }
  }
  return out;
}

std::vector<std::string> known_claims() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : claim_registry()) out.push_back(name);
  return out;
}

ScanReport conjecture_scan(const std::string& claim, const ModuleFamily& family,
                           const ScanOptions& options) {
  const ClaimFn* fn = nullptr;
  for (const auto& [name, f] : claim_registry())
    if (name == claim) fn = &f;
  if (!fn) {
    std::string message = "conjecture_scan: unknown claim '" + claim + "'; known claims:";
    for (const auto& [name, f] : claim_registry()) message += " " + name;
    throw std::invalid_argument(message);
  }

  auto started = std::chrono::steady_clock::now();
  auto instances = family_instances(family);
  const int workers = std::max(1, options.threads);

  std::vector<std::vector<Violation>> worker_violations(static_cast<std::size_t>(workers));
  std::vector<std::size_t> worker_scanned(static_cast<std::size_t>(workers), 0);
  std::vector<std::string> worker_errors(static_cast<std::size_t>(workers));

  auto run = [&](int w) {
    try {
      for (std::size_t i = static_cast<std::size_t>(w); i < instances.size();
           i += static_cast<std::size_t>(workers)) {
        Sink sink(i, claim, instances[i]);
        (*fn)(instances[i], options, sink);
        worker_scanned[static_cast<std::size_t>(w)] += sink.scanned();
        auto& out = worker_violations[static_cast<std::size_t>(w)];
        out.insert(out.end(), sink.violations().begin(), sink.violations().end());
      }
    } catch (const std::exception& e) {
      worker_errors[static_cast<std::size_t>(w)] = e.what();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (std::thread& t : pool) t.join();
  }
  for (const std::string& err : worker_errors)
    if (!err.empty()) throw std::runtime_error(err);

  ScanReport report;
  report.claim = claim;
  report.family = family.to_string();
  for (int w = 0; w < workers; ++w) {
    report.scanned_instances += worker_scanned[static_cast<std::size_t>(w)];
    auto& v = worker_violations[static_cast<std::size_t>(w)];
    report.violations.insert(report.violations.end(), v.begin(), v.end());
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              if (a.instance_index != b.instance_index) return a.instance_index < b.instance_index;
              if (a.detail != b.detail) return a.detail < b.detail;
              return a.submodules < b.submodules;
            });
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::vector<MinedWitness> witness_mine(const std::string& pattern, const ModuleFamily& family,
                                       int level, int threads) {
  if (pattern != "n-pure-not-(n-1)-pure")
    throw std::invalid_argument("witness_mine: unknown pattern '" + pattern + "'");
  if (level < 2) throw std::invalid_argument("witness_mine: level must be >= 2");

  auto instances = family_instances(family);
  const int workers = std::max(1, threads);
  std::vector<std::vector<std::pair<std::size_t, MinedWitness>>> found(
      static_cast<std::size_t>(workers));
  std::vector<std::string> errors(static_cast<std::size_t>(workers));

  auto run = [&](int w) {
    try {
      for (std::size_t i = static_cast<std::size_t>(w); i < instances.size();
           i += static_cast<std::size_t>(workers)) {
        const ModulePresentation& m = instances[i];
        auto policy = auto_policy(m);
        for (const Submodule& n : enumerate_submodules(m)) {
          if (!is_n_pure(n, m, PurityLevel(level), policy).is_holds()) continue;
          if (is_n_pure(n, m, PurityLevel(level - 1), policy).is_holds()) continue;
          found[static_cast<std::size_t>(w)].emplace_back(i, MinedWitness{m, n, level});
        }
      }
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(w)] = e.what();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (std::thread& t : pool) t.join();
  }
  for (const std::string& err : errors)
    if (!err.empty()) throw std::runtime_error(err);

  std::vector<std::pair<std::size_t, MinedWitness>> merged;
  for (auto& part : found) merged.insert(merged.end(), part.begin(), part.end());
  std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return MatrixLess{}(a.second.submodule.lattice().basis(),
                        b.second.submodule.lattice().basis());
  });
  std::vector<MinedWitness> out;
  out.reserve(merged.size());
  for (auto& [idx, w] : merged) out.push_back(std::move(w));
  return out;
}

}  // namespace npure
