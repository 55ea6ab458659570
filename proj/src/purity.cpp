#include "npure/purity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "npure/enumerate.hpp"

namespace npure {

namespace {

Submodule scale_by_scalar(const Int& c, const Submodule& n) {
  return Submodule(n.parent(),
                   lattice_sum(lattice_scale(c, n.lattice()), n.parent().relations()));
}

// Materialized quantifier plus the modulus that scaling actions factor
// through: over a finite module two generators congruent mod the exponent
// scale every intermediate lattice identically.
struct QuantContext {
  std::vector<Ideal> ideals;
  Int action_modulus = 0;  // 0 = no reduction (infinite module)
  bool bounded = false;
  Int bound = 0;
  Int exponent_hint = 0;
  bool residue = false;
};

QuantContext make_context(const ModulePresentation& m, const QuantificationPolicy& policy) {
  QuantContext ctx;
  ctx.bounded = policy.mode() == QuantificationPolicy::Mode::kBounded;
  ctx.residue = policy.mode() == QuantificationPolicy::Mode::kResidueReduced;
  ctx.bound = policy.bound();
  Int e = exponent(m);
  if (ctx.residue && e == 0)
    throw std::invalid_argument("residue-reduced policy requires a finite module");
  ctx.exponent_hint = e;
  ctx.ideals = proper_ideals(m.ring(), policy, e);
  ctx.action_modulus = e;  // 0 when the module is infinite
  return ctx;
}

Int reduce_action(const Int& g, const Int& modulus) {
  if (modulus == 0) return g;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

// A failing residue class is reported as a genuine proper ideal of Z: the
// class of 1 mod e is represented by (1 + e).
Ideal lift_witness_ideal(const Ideal& ideal, const QuantContext& ctx) {
  if (ctx.residue && ideal.generator() == 1)
    return Ideal(ideal.ring(), ctx.exponent_hint + 1);
  return ideal;
}

// Scalings of a fixed submodule, interned by canonical basis so multiset
// checks can be memoized on small integer keys.
class ScaledCache {
 public:
  ScaledCache(Submodule base, Int action_modulus)
      : base_(std::move(base)), modulus_(std::move(action_modulus)) {}

  long id(const Int& gen) {
    Int key = reduce_action(gen, modulus_);
    auto it = by_gen_.find(key);
    if (it != by_gen_.end()) return it->second;
    Submodule scaled = scale_by_scalar(key, base_);
    auto [pos, inserted] = intern_.emplace(scaled.lattice().basis(),
                                           static_cast<long>(values_.size()));
    if (inserted) values_.push_back(std::move(scaled));
    by_gen_.emplace(std::move(key), pos->second);
    return pos->second;
  }

  const Submodule& value(long id) const { return values_[static_cast<std::size_t>(id)]; }

 private:
  Submodule base_;
  Int modulus_;
  std::map<Int, long> by_gen_;
  std::map<IntMatrix, long, MatrixLess> intern_;
  std::vector<Submodule> values_;
};

// Checks I1...In N = I1 N ∩ ... ∩ In N ∩ (I1...In) M per multiset. The
// verdict for a multiset depends only on the scaled lattices involved, so
// results are memoized on their interned ids; iteration order still
// determines the first witness deterministically. Small moduli take a long
// arithmetic path with the memo key packed into one machine word.
class NPureEngine {
 public:
  NPureEngine(const Submodule& n, const ModulePresentation& m, int level,
              const QuantContext& ctx)
      : ctx_(ctx),
        n_cache_(n, ctx.action_modulus),
        m_cache_(full_submodule(m), ctx.action_modulus) {
    fast_ = level <= 6 && ctx.action_modulus > 0 && ctx.action_modulus.fits_slong_p() &&
            ctx.action_modulus.get_si() <= (1L << 15);
    if (fast_) modulus_ = ctx.action_modulus.get_si();
    ideal_ids_.reserve(ctx.ideals.size());
    for (const Ideal& ideal : ctx.ideals) {
      ideal_ids_.push_back(n_cache_.id(ideal.generator()));
      if (fast_)
        reduced_gens_.push_back(reduce_action(ideal.generator(), ctx.action_modulus).get_si());
    }
  }

  bool identity_holds(const std::vector<std::size_t>& idx) {
    if (fast_) return holds_small(idx);
    Int product(1);
    std::vector<long> ids;
    ids.reserve(idx.size() + 2);
    for (std::size_t i : idx) {
      product = reduce_action(product * ctx_.ideals[i].generator(), ctx_.action_modulus);
      ids.push_back(ideal_ids_[i]);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const long lhs_id = n_cache_.id(product);
    const long m_id = m_cache_.id(product);
    const std::size_t distinct = ids.size();
    ids.push_back(lhs_id);
    ids.push_back(m_id);
    auto it = memo_.find(ids);
    if (it != memo_.end()) return it->second;
    bool ok = evaluate(ids.data(), distinct, lhs_id, m_id);
    memo_.emplace(std::move(ids), ok);
    return ok;
  }

 private:
  bool holds_small(const std::vector<std::size_t>& idx) {
    long product = 1;
    long ids[6];
    const std::size_t size = idx.size();
    for (std::size_t i = 0; i < size; ++i) {
      product = (product * reduced_gens_[idx[i]]) % modulus_;
      long id = ideal_ids_[idx[i]];
      std::size_t pos = i;  // insertion sort
      while (pos > 0 && ids[pos - 1] > id) {
        ids[pos] = ids[pos - 1];
        --pos;
      }
      ids[pos] = id;
    }
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < size; ++i)
      if (i == 0 || ids[i] != ids[distinct - 1]) ids[distinct++] = ids[i];

    const long lhs_id = product_id(n_product_ids_, n_cache_, product);
    const long m_id = product_id(m_product_ids_, m_cache_, product);
    bool packable = lhs_id < 254 && m_id < 254;
    unsigned long long key = 0;
    if (packable) {
      for (std::size_t i = 0; i < distinct && packable; ++i) {
        packable = ids[i] < 254;
        key = (key << 8) | static_cast<unsigned long long>(ids[i] + 1);
      }
      key = (key << 8) | static_cast<unsigned long long>(lhs_id + 1);
      key = (key << 8) | static_cast<unsigned long long>(m_id + 1);
    }
    if (packable) {
      auto it = packed_memo_.find(key);
      if (it != packed_memo_.end()) return it->second;
      bool ok = evaluate(ids, distinct, lhs_id, m_id);
      packed_memo_.emplace(key, ok);
      return ok;
    }
    return evaluate(ids, distinct, lhs_id, m_id);
  }

  bool evaluate(const long* ids, std::size_t distinct, long lhs_id, long m_id) {
    Submodule rhs = m_cache_.value(m_id);
    for (std::size_t i = 0; i < distinct; ++i)
      rhs = submodule_intersect(rhs, n_cache_.value(ids[i]));
    return n_cache_.value(lhs_id) == rhs;
  }

  long product_id(std::map<long, long>& cache, ScaledCache& scaled, long product) {
    auto it = cache.find(product);
    if (it != cache.end()) return it->second;
    long id = scaled.id(Int(product));
    cache.emplace(product, id);
    return id;
  }

  const QuantContext& ctx_;
  ScaledCache n_cache_;
  ScaledCache m_cache_;
  bool fast_ = false;
  long modulus_ = 0;
  std::vector<long> ideal_ids_;
  std::vector<long> reduced_gens_;
  std::map<long, long> n_product_ids_, m_product_ids_;
  std::map<unsigned long long, bool> packed_memo_;
  std::map<std::vector<long>, bool> memo_;
};

// Multisets as non-decreasing index tuples, lexicographically ascending.
template <typename Fn>
void for_each_multiset(std::size_t universe, std::size_t size, Fn&& fn) {
  if (universe == 0) return;
  std::vector<std::size_t> idx(size, 0);
  for (;;) {
    if (!fn(idx)) return;
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == universe - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < size; ++j) idx[j] = idx[pos - 1];
  }
}

void require_same_parent(const Submodule& n, const ModulePresentation& m, const char* op) {
  if (n.parent() != m)
    throw std::invalid_argument(std::string(op) + ": submodule does not live in M");
}

Int require_finite(const ModulePresentation& m, const char* op) {
  auto card = cardinality(m);
  if (!card) throw std::domain_error(std::string(op) + ": module is infinite");
  return *card;
}

}  // namespace

QuantificationPolicy auto_policy(const ModulePresentation& m) {
  if (m.ring().is_modular()) return QuantificationPolicy::exhaustive();
  if (cardinality(m)) return QuantificationPolicy::residue_reduced();
  return QuantificationPolicy::bounded(16);
}

Verdict is_pure(const Submodule& n, const ModulePresentation& m,
                const QuantificationPolicy& policy) {
  require_same_parent(n, m, "is_pure");
  QuantContext ctx = make_context(m, policy);
  Submodule full = full_submodule(m);
  for (const Ideal& ideal : ctx.ideals) {
    Submodule in = scale_by_ideal(ideal, n);
    Submodule im = scale_by_ideal(ideal, full);
    if (in != submodule_intersect(n, im)) {
      Witness w;
      w.ideals.push_back(lift_witness_ideal(ideal, ctx));
      return Verdict::fails(std::move(w));
    }
  }
  return ctx.bounded ? Verdict::unknown(ctx.bound) : Verdict::holds();
}

Verdict is_ribenboim_pure(const Submodule& n, const ModulePresentation& m,
                          const QuantificationPolicy& policy) {
  require_same_parent(n, m, "is_ribenboim_pure");
  Int e = exponent(m);
  if (policy.mode() == QuantificationPolicy::Mode::kResidueReduced && e == 0)
    throw std::invalid_argument("residue-reduced policy requires a finite module");
  Submodule full = full_submodule(m);
  for (const Int& r : ring_elements(m.ring(), policy, e)) {
    Submodule rn = scale_by_scalar(r, n);
    Submodule rm = scale_by_scalar(r, full);
    if (submodule_intersect(rm, n) != rn) {
      Witness w;
      w.elements.push_back(r);
      return Verdict::fails(std::move(w));
    }
  }
  return policy.mode() == QuantificationPolicy::Mode::kBounded ? Verdict::unknown(policy.bound())
                                                               : Verdict::holds();
}

Verdict is_n_pure(const Submodule& n, const ModulePresentation& m, PurityLevel level,
                  const QuantificationPolicy& policy) {
  require_same_parent(n, m, "is_n_pure");
  if (level.n() == 1) return is_pure(n, m, policy);
  QuantContext ctx = make_context(m, policy);
  NPureEngine engine(n, m, level.n(), ctx);
  std::vector<std::size_t> failing;
  for_each_multiset(ctx.ideals.size(), static_cast<std::size_t>(level.n()),
                    [&](const std::vector<std::size_t>& idx) {
                      if (engine.identity_holds(idx)) return true;
                      failing = idx;
                      return false;
                    });
  if (!failing.empty()) {
    Witness w;
    for (std::size_t i : failing) w.ideals.push_back(lift_witness_ideal(ctx.ideals[i], ctx));
    return Verdict::fails(std::move(w));
  }
  return ctx.bounded ? Verdict::unknown(ctx.bound) : Verdict::holds();
}

Verdict is_fully_n_pure(const ModulePresentation& m, PurityLevel level,
                        const QuantificationPolicy& policy) {
  require_finite(m, "is_fully_n_pure");
  bool any_unknown = false;
  Int bound = 0;
  for (const Submodule& n : enumerate_submodules(m)) {
    Verdict v = is_n_pure(n, m, level, policy);
    if (v.is_fails()) {
      Witness w = *v.witness();
      w.submodules.insert(w.submodules.begin(), n);
      return Verdict::fails(std::move(w));
    }
    if (v.is_unknown()) {
      any_unknown = true;
      bound = *v.bound();
    }
  }
  return any_unknown ? Verdict::unknown(bound) : Verdict::holds();
}

Verdict is_multiplication_module(const ModulePresentation& m,
                                 const QuantificationPolicy& policy) {
  (void)policy;
  require_finite(m, "is_multiplication_module");
  for (const Submodule& n : enumerate_submodules(m)) {
    if (scale_module(colon_ideal(n, m), m) != n) {
      Witness w;
      w.submodules.push_back(n);
      return Verdict::fails(std::move(w));
    }
  }
  return Verdict::holds();
}

Verdict is_fully_cancellation(const ModulePresentation& m, const QuantificationPolicy& policy) {
  (void)policy;
  require_finite(m, "is_fully_cancellation");
  std::vector<Ideal> nonzero;
  if (m.ring().is_modular()) {
    for (const Int& d : divisors(m.ring().modulus()))
      if (d != m.ring().modulus()) nonzero.emplace_back(m.ring(), d);
  } else {
    // Residue representatives of the nonzero ideals of Z: the class of 0 is
    // represented by (e) itself, which scales every submodule to zero.
    Int e = exponent(m);
    for (Int g = 1; g <= e; ++g) nonzero.emplace_back(m.ring(), g);
  }
  auto subs = enumerate_submodules(m);
  for (const Ideal& ideal : nonzero) {
    std::vector<Submodule> scaled;
    scaled.reserve(subs.size());
    for (const Submodule& s : subs) scaled.push_back(scale_by_ideal(ideal, s));
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j)
        if (scaled[i] == scaled[j]) {
          Witness w;
          w.ideals.push_back(ideal);
          w.submodules = {subs[i], subs[j]};
          return Verdict::fails(std::move(w));
        }
  }
  return Verdict::holds();
}

Verdict is_weakly_strongly_2_absorbing_second(const Submodule& n,
                                              const ModulePresentation& m) {
  require_same_parent(n, m, "is_weakly_strongly_2_absorbing_second");
  if (n.is_zero())
    throw std::invalid_argument("is_weakly_strongly_2_absorbing_second: N must be nonzero");
  if (!m.ring().is_modular())
    throw std::invalid_argument("is_weakly_strongly_2_absorbing_second: needs a modular ring");
  require_finite(m, "is_weakly_strongly_2_absorbing_second");
  const Int mod = m.ring().modulus();
  Submodule zero = zero_submodule(m);
  Submodule full = full_submodule(m);
  auto subs = enumerate_submodules(m);

  std::map<Int, Submodule> n_scaled, m_scaled;
  auto scaled = [&](std::map<Int, Submodule>& cache, const Submodule& base, const Int& c) {
    Int key = reduce_action(c, mod);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, scale_by_scalar(key, base)).first;
    return it->second;
  };

  for (Int a = 0; a < mod; ++a)
    for (Int b = a; b < mod; ++b) {
      Submodule an = scaled(n_scaled, n, a);
      Submodule bn = scaled(n_scaled, n, b);
      Submodule abn = scaled(n_scaled, n, a * b);
      Submodule abm = scaled(m_scaled, full, a * b);
      if (abn == zero) continue;  // ab ∈ Ann(N)
      for (const Submodule& k : subs) {
        if (submodule_contains(k, abm)) continue;
        if (!submodule_contains(k, abn)) continue;
        if (submodule_contains(k, an) || submodule_contains(k, bn)) continue;
        Witness w;
        w.elements = {a, b};
        w.submodules = {k};
        return Verdict::fails(std::move(w));
      }
    }
  return Verdict::holds();
}

Verdict check_wsas_identity(const Submodule& n, const ModulePresentation& m) {
  if (!is_weakly_strongly_2_absorbing_second(n, m).is_holds())
    throw std::invalid_argument(
        "check_wsas_identity: N is not weakly strongly 2-absorbing second");
  const Int mod = m.ring().modulus();
  Submodule zero = zero_submodule(m);
  Submodule full = full_submodule(m);
  for (Int a = 0; a < mod; ++a)
    for (Int b = a; b < mod; ++b) {
      Submodule abn = scale_by_scalar(reduce_action(a * b, mod), n);
      if (abn == zero) continue;  // ab ∈ Ann(N)
      Submodule an = scale_by_scalar(a, n);
      Submodule bn = scale_by_scalar(b, n);
      Submodule abm = scale_by_scalar(reduce_action(a * b, mod), full);
      if (submodule_intersect(submodule_intersect(an, bn), abm) != abn) {
        Witness w;
        w.elements = {a, b};
        return Verdict::fails(std::move(w));
      }
    }
  return Verdict::holds();
}

Verdict check_pid_factorization(const Submodule& n,
                                const std::vector<std::pair<Int, unsigned long>>& prime_powers) {
  if (n.parent().ring().is_modular())
    throw std::invalid_argument("check_pid_factorization: ring must be Z");
  if (prime_powers.empty())
    throw std::invalid_argument("check_pid_factorization: empty factor list");
  for (std::size_t i = 0; i < prime_powers.size(); ++i) {
    if (!is_prime(prime_powers[i].first) || prime_powers[i].second == 0)
      throw std::invalid_argument("check_pid_factorization: factors must be p^s, p prime, s >= 1");
    for (std::size_t j = i + 1; j < prime_powers.size(); ++j)
      if (prime_powers[i].first == prime_powers[j].first)
        throw std::invalid_argument("check_pid_factorization: repeated primes");
  }
  Int total(1);
  std::vector<Int> powers;
  for (const auto& [p, s] : prime_powers) {
    powers.push_back(pow_int(p, s));
    total *= powers.back();
  }
  Submodule lhs = scale_by_scalar(total, n);
  Submodule rhs = scale_by_scalar(powers[0], n);
  for (std::size_t i = 1; i < powers.size(); ++i)
    rhs = submodule_intersect(rhs, scale_by_scalar(powers[i], n));
  if (lhs == rhs) return Verdict::holds();
  Witness w;
  for (const Int& q : powers) w.ideals.emplace_back(n.parent().ring(), q);
  return Verdict::fails(std::move(w));
}

std::vector<Submodule> maximal_pure_submodules(const Submodule& k, const ModulePresentation& m,
                                               bool strict) {
  require_same_parent(k, m, "maximal_pure_submodules");
  require_finite(m, "maximal_pure_submodules");
  QuantificationPolicy policy = auto_policy(m);
  std::vector<Submodule> pure_in_k;
  for (const Submodule& s : enumerate_submodules(m))
    if (submodule_contains(k, s) && is_pure(s, m, policy).is_holds()) pure_in_k.push_back(s);

  std::vector<Submodule> out;
  for (const Submodule& n : pure_in_k) {
    if (strict && n == k) continue;
    bool blocked = false;
    for (const Submodule& h : pure_in_k) {
      if (h == n || h == k) continue;
      if (submodule_contains(h, n) && submodule_contains(k, h)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) out.push_back(n);
  }
  return out;
}

Submodule maximal_n_pure_within(const Submodule& n, const ModulePresentation& m,
                                PurityLevel level) {
  require_same_parent(n, m, "maximal_n_pure_within");
  require_finite(m, "maximal_n_pure_within");
  QuantificationPolicy policy = auto_policy(m);
  std::vector<Submodule> candidates;
  for (const Submodule& s : enumerate_submodules(m))
    if (submodule_contains(n, s) && is_n_pure(s, m, level, policy).is_holds())
      candidates.push_back(s);

  const Submodule* best = nullptr;
  for (const Submodule& s : candidates) {
    bool maximal = true;
    for (const Submodule& t : candidates)
      if (t != s && submodule_contains(t, s)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    if (!best || MatrixLess{}(s.lattice().basis(), best->lattice().basis())) best = &s;
  }
  return *best;  // zero is always a candidate
}

Verdict check_product_characterization(const ModulePresentation& m, PurityLevel level) {
  QuantificationPolicy policy = auto_policy(m);
  require_finite(m, "check_product_characterization");
  if (!is_multiplication_module(m, policy).is_holds())
    throw std::invalid_argument("check_product_characterization: not a multiplication module");
  // The tuple pool mirrors the ring's ideal quantifier: a tuple slot holding
  // M contributes the unit colon ideal and collapses the identity to a lower
  // arity, so over a modular ring — where only proper ideals are quantified —
  // the tuples range over proper submodules. Over Z the residue quantifier
  // covers unit actions and every submodule belongs in the pool.
  auto subs = enumerate_submodules(m);
  if (m.ring().is_modular())
    std::erase_if(subs, [&](const Submodule& s) { return s == full_submodule(m); });
  std::vector<Int> colon_gens;
  colon_gens.reserve(subs.size());
  for (const Submodule& s : subs) colon_gens.push_back(colon_ideal(s, m).generator());

  std::map<Int, Submodule> products;
  auto product_of = [&](const Int& gen_product) -> const Submodule& {
    Ideal ideal(m.ring(), gen_product);
    auto it = products.find(ideal.generator());
    if (it == products.end())
      it = products.emplace(ideal.generator(), scale_module(ideal, m)).first;
    return it->second;
  };

  const std::size_t p = static_cast<std::size_t>(level.n()) + 1;
  std::optional<Witness> violation;
  for_each_multiset(subs.size(), p, [&](const std::vector<std::size_t>& idx) {
    Int all(1);
    for (std::size_t i : idx) all *= colon_gens[i];
    const Submodule& lhs = product_of(all);
    for (std::size_t pos = 0; pos < p; ++pos) {
      if (pos > 0 && idx[pos] == idx[pos - 1]) continue;  // same distinguished value
      Int rest = exact_div(all, colon_gens[idx[pos]]);
      Submodule rhs = product_of(rest);
      for (std::size_t j = 0; j < p; ++j) {
        if (j == pos) continue;
        rhs = submodule_intersect(rhs, product_of(colon_gens[idx[pos]] * colon_gens[idx[j]]));
      }
      if (lhs != rhs) {
        Witness w;
        w.submodules.push_back(subs[idx[pos]]);
        for (std::size_t j = 0; j < p; ++j)
          if (j != pos) w.submodules.push_back(subs[idx[j]]);
        violation = std::move(w);
        return false;
      }
    }
    return true;
  });

  Verdict fully = is_fully_n_pure(m, level, policy);
  bool identity_holds = !violation.has_value();
  if (identity_holds == fully.is_holds()) return Verdict::holds();
  if (violation) return Verdict::fails(std::move(*violation));
  return Verdict::fails(*fully.witness());
}

Verdict check_colon_transfer(const Submodule& n, const ModulePresentation& m, PurityLevel level,
                             const QuantificationPolicy& policy) {
  require_same_parent(n, m, "check_colon_transfer");
  if (!colon_ideal(zero_submodule(m), m).is_zero())
    throw std::invalid_argument("check_colon_transfer: module is not faithful");
  bool multiplication;
  if (cardinality(m)) {
    multiplication = is_multiplication_module(m, policy).is_holds();
  } else {
    // The only infinite faithful multiplication presentations over Z are the
    // rank-one free ones (≅ Z).
    auto factors = invariant_factors(m);
    multiplication = free_rank(m) == 1 &&
                     std::all_of(factors.begin(), factors.end(),
                                 [](const Int& d) { return d == 1; });
  }
  if (!multiplication)
    throw std::invalid_argument("check_colon_transfer: module is not a multiplication module");

  Verdict module_side = is_n_pure(n, m, level, policy);
  ModulePresentation ring_mod = ModulePresentation::ring_as_module(m.ring());
  IntMatrix gen(1, 1);
  gen(0, 0) = colon_ideal(n, m).generator();
  Submodule ideal_sub = submodule_span(ring_mod, gen);
  Verdict ideal_side = is_n_pure(ideal_sub, ring_mod, level, policy);

  if (module_side.is_unknown() || ideal_side.is_unknown())
    return Verdict::unknown(policy.bound());
  if (module_side.outcome() == ideal_side.outcome()) return Verdict::holds();
  Witness w;
  w.submodules = {n, ideal_sub};
  const auto& failing = module_side.is_fails() ? module_side : ideal_side;
  w.ideals = failing.witness()->ideals;
  return Verdict::fails(std::move(w));
}

}  // namespace npure
