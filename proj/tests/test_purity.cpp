#include <doctest.h>

#include <set>

#include "brute_force.hpp"
#include "npure/enumerate.hpp"
#include "npure/purity.hpp"

using namespace npure;
using namespace npure::testing;

namespace {

const Ring Z = Ring::integers();

ModulePresentation z4m() { return ModulePresentation::cyclic(Ring::modular(4), 4); }
ModulePresentation z8m() { return ModulePresentation::cyclic(Ring::modular(8), 8); }

Submodule two_bar(const ModulePresentation& m) { return submodule_span(m, rows({{2}})); }

}  // namespace

TEST_CASE("auto_policy selection") {
  CHECK(auto_policy(z4m()) == QuantificationPolicy::exhaustive());
  CHECK(auto_policy(ModulePresentation::cyclic(Z, 12)) ==
        QuantificationPolicy::residue_reduced());
  CHECK(auto_policy(ModulePresentation::cyclic(Z, 0)) == QuantificationPolicy::bounded(16));
}

TEST_CASE("is_pure: the Z4 example fails with witness (2)") {
  ModulePresentation m = z4m();
  Verdict v = is_pure(two_bar(m), m, auto_policy(m));
  REQUIRE(v.is_fails());
  REQUIRE(v.witness()->ideals.size() == 1);
  CHECK(v.witness()->ideals[0] == Ideal(Ring::modular(4), 2));
}

TEST_CASE("is_pure: zero submodule and direct summands are pure") {
  ModulePresentation m = z4m();
  CHECK(is_pure(zero_submodule(m), m, auto_policy(m)).is_holds());

  ModulePresentation big(Ring::modular(4), 2, rows({{2, 0}, {0, 4}}));  // Z/2 ⊕ Z/4
  Submodule summand = submodule_span(big, rows({{1, 0}}));
  CHECK(is_pure(summand, big, auto_policy(big)).is_holds());
}

TEST_CASE("is_ribenboim_pure examples") {
  ModulePresentation m = z4m();
  Verdict v = is_ribenboim_pure(two_bar(m), m, auto_policy(m));
  REQUIRE(v.is_fails());
  CHECK(v.witness()->elements == std::vector<Int>{2});
  CHECK(is_ribenboim_pure(zero_submodule(m), m, auto_policy(m)).is_holds());
  CHECK(is_ribenboim_pure(full_submodule(m), m, auto_policy(m)).is_holds());
}

TEST_CASE("is_n_pure: the Z/4 and Z/8 witnesses") {
  ModulePresentation m4 = z4m();
  CHECK(is_n_pure(two_bar(m4), m4, PurityLevel(2), auto_policy(m4)).is_holds());

  ModulePresentation m8 = z8m();
  Verdict v = is_n_pure(two_bar(m8), m8, PurityLevel(2), auto_policy(m8));
  REQUIRE(v.is_fails());
  REQUIRE(v.witness()->ideals.size() == 2);
  CHECK(v.witness()->ideals[0] == Ideal(Ring::modular(8), 2));
  CHECK(v.witness()->ideals[1] == Ideal(Ring::modular(8), 2));
  CHECK(is_n_pure(two_bar(m8), m8, PurityLevel(3), auto_policy(m8)).is_holds());
}

TEST_CASE("is_n_pure: 2Z in Z under the bounded policy") {
  ModulePresentation z = ModulePresentation::cyclic(Z, 0);
  Submodule n = submodule_span(z, rows({{2}}));
  Verdict v = is_n_pure(n, z, PurityLevel(2), QuantificationPolicy::bounded(8));
  REQUIRE(v.is_fails());
  CHECK(v.witness()->ideals[0] == Ideal(Z, 2));
  CHECK(v.witness()->ideals[1] == Ideal(Z, 2));
  // the zero submodule of Z is n-pure for any bound, but only Unknown here
  Verdict u = is_n_pure(zero_submodule(z), z, PurityLevel(2), QuantificationPolicy::bounded(8));
  CHECK(u.is_unknown());
  CHECK(*u.bound() == 8);
}

TEST_CASE("is_n_pure level 1 dispatches to Anderson–Fuller purity") {
  ModulePresentation m = z4m();
  Verdict v = is_n_pure(two_bar(m), m, PurityLevel(1), auto_policy(m));
  CHECK(v.is_fails());
}

TEST_CASE("n-purity agrees between residue reduction over Z and brute ideal lists") {
  // Residue soundness: quantifying over residues mod the exponent equals
  // quantifying over a large explicit generator list.
  for (long mod : {4L, 6L, 8L, 9L, 12L}) {
    ModulePresentation m = ModulePresentation::cyclic(Z, mod);
    for (const Submodule& n : enumerate_submodules(m)) {
      for (int level = 1; level <= 3; ++level) {
        Verdict fast = is_n_pure(n, m, PurityLevel(level),
                                 QuantificationPolicy::residue_reduced());
        Verdict slow = is_n_pure(n, m, PurityLevel(level),
                                 QuantificationPolicy::bounded(2 * mod + 2));
        // bounded never claims Holds, but failures must agree
        CHECK(fast.is_fails() == slow.is_fails());
      }
    }
  }
}

TEST_CASE("residue witnesses are genuine proper ideals of Z") {
  // Z/2 ⊕ Z/8 over Z: scan all submodules; any witness generator must not
  // be a unit, and replaying the identity must reproduce the failure.
  ModulePresentation m = ModulePresentation::direct_sum(Z, {2, 8});
  auto policy = auto_policy(m);
  for (const Submodule& n : enumerate_submodules(m)) {
    Verdict v = is_n_pure(n, m, PurityLevel(2), policy);
    if (!v.is_fails()) continue;
    const auto& ideals = v.witness()->ideals;
    REQUIRE(ideals.size() == 2);
    for (const Ideal& i : ideals) CHECK(i.is_proper());
    Submodule lhs = scale_by_ideal(ideal_product(ideals[0], ideals[1]), n);
    Submodule rhs = submodule_intersect(
        submodule_intersect(scale_by_ideal(ideals[0], n), scale_by_ideal(ideals[1], n)),
        scale_module(ideal_product(ideals[0], ideals[1]), m));
    CHECK(lhs != rhs);
  }
}

TEST_CASE("hierarchy: pure implies 2-pure implies 3-pure on small families") {
  for (long mod = 1; mod <= 20; ++mod) {
    std::vector<ModulePresentation> variants;
    variants.push_back(ModulePresentation::cyclic(Z, mod));
    if (mod >= 2) variants.push_back(ModulePresentation::cyclic(Ring::modular(mod), mod));
    for (const auto& m : variants) {
      auto policy = auto_policy(m);
      for (const Submodule& n : enumerate_submodules(m)) {
        bool prev = is_pure(n, m, policy).is_holds();
        for (int level = 2; level <= 3; ++level) {
          bool cur = is_n_pure(n, m, PurityLevel(level), policy).is_holds();
          if (prev) CHECK(cur);
          prev = cur;
        }
      }
    }
  }
}

TEST_CASE("is_fully_n_pure examples") {
  CHECK(is_fully_n_pure(z4m(), PurityLevel(2), auto_policy(z4m())).is_holds());
  Verdict v = is_fully_n_pure(z8m(), PurityLevel(2), auto_policy(z8m()));
  REQUIRE(v.is_fails());
  CHECK(v.witness()->submodules[0] == two_bar(z8m()));

  ModulePresentation zero_mod(Z, 0, IntMatrix(0, 0));
  CHECK(is_fully_n_pure(zero_mod, PurityLevel(2), auto_policy(zero_mod)).is_holds());
  CHECK_THROWS_AS(
      is_fully_n_pure(ModulePresentation::cyclic(Z, 0), PurityLevel(2),
                      QuantificationPolicy::bounded(4)),
      std::domain_error);
}

TEST_CASE("is_multiplication_module examples") {
  ModulePresentation z12 = ModulePresentation::cyclic(Z, 12);
  CHECK(is_multiplication_module(z12, auto_policy(z12)).is_holds());
  ModulePresentation z12m = ModulePresentation::cyclic(Ring::modular(12), 12);
  CHECK(is_multiplication_module(z12m, auto_policy(z12m)).is_holds());

  ModulePresentation klein = ModulePresentation::direct_sum(Z, {2, 2});
  Verdict v = is_multiplication_module(klein, auto_policy(klein));
  REQUIRE(v.is_fails());
  // witness replays: (N : M) M != N
  const Submodule& w = v.witness()->submodules[0];
  CHECK(scale_module(colon_ideal(w, klein), klein) != w);

  ModulePresentation zero_mod(Z, 0, IntMatrix(0, 0));
  CHECK(is_multiplication_module(zero_mod, auto_policy(zero_mod)).is_holds());
}

TEST_CASE("is_fully_cancellation examples") {
  ModulePresentation m = z4m();
  Verdict v = is_fully_cancellation(m, auto_policy(m));
  REQUIRE(v.is_fails());
  CHECK(v.witness()->ideals[0] == Ideal(Ring::modular(4), 2));
  CHECK(v.witness()->submodules[0] == zero_submodule(m));
  CHECK(v.witness()->submodules[1] == two_bar(m));

  ModulePresentation p5 = ModulePresentation::cyclic(Ring::modular(5), 5);
  CHECK(is_fully_cancellation(p5, auto_policy(p5)).is_holds());
  ModulePresentation zero_mod(Z, 0, IntMatrix(0, 0));
  CHECK(is_fully_cancellation(zero_mod, auto_policy(zero_mod)).is_holds());
}

TEST_CASE("weakly strongly 2-absorbing second: exhaustive cross-check") {
  // Brute-force reference over element sets, fully independent of the
  // lattice predicates.
  for (long mod : {2L, 3L, 4L, 6L, 9L}) {
    ModulePresentation m = ModulePresentation::cyclic(Ring::modular(mod), mod);
    auto subs = enumerate_submodules(m);
    auto members = [&](const Submodule& s) {
      std::set<Int, std::less<Int>> out;
      for (const IntRowVector& v : element_vectors(m))
        if (lattice_contains(s.lattice(), v)) out.insert(v(0));
      return out;
    };
    auto contains_set = [&](const std::set<Int>& outer, const std::set<Int>& inner) {
      for (const Int& x : inner)
        if (!outer.count(x)) return false;
      return true;
    };
    for (const Submodule& n : subs) {
      if (n.is_zero()) continue;
      bool expected = true;
      auto nset = members(n);
      for (long a = 0; a < mod && expected; ++a)
        for (long b = 0; b < mod && expected; ++b) {
          std::set<Int> an, bn, abn, abm;
          for (const Int& x : nset) {
            an.insert((a * x) % mod);
            bn.insert((b * x) % mod);
            abn.insert((a * b * x) % mod);
          }
          for (long x = 0; x < mod; ++x) abm.insert((a * b * x) % mod);
          bool ab_in_ann = abn == std::set<Int>{0};
          for (const Submodule& k : subs) {
            auto kset = members(k);
            if (contains_set(kset, abm)) continue;
            if (!contains_set(kset, abn)) continue;
            if (contains_set(kset, an) || contains_set(kset, bn)) continue;
            if (!ab_in_ann) expected = false;
          }
        }
      CHECK(is_weakly_strongly_2_absorbing_second(n, m).is_holds() == expected);
    }
  }
}

TEST_CASE("weakly strongly 2-absorbing second: pinned instances") {
  for (long p : {2L, 3L}) {
    ModulePresentation m = ModulePresentation::cyclic(Ring::modular(p), p);
    CHECK(is_weakly_strongly_2_absorbing_second(full_submodule(m), m).is_holds());
  }
  ModulePresentation m = z4m();
  CHECK(is_weakly_strongly_2_absorbing_second(full_submodule(m), m).is_holds());
  CHECK_THROWS_AS(is_weakly_strongly_2_absorbing_second(zero_submodule(m), m),
                  std::invalid_argument);
  ModulePresentation zint = ModulePresentation::cyclic(Z, 4);
  CHECK_THROWS_AS(is_weakly_strongly_2_absorbing_second(full_submodule(zint), zint),
                  std::invalid_argument);
}

TEST_CASE("wsas identity holds where the premise holds") {
  for (long p : {2L, 3L}) {
    ModulePresentation m = ModulePresentation::cyclic(Ring::modular(p), p);
    CHECK(check_wsas_identity(full_submodule(m), m).is_holds());
  }
  ModulePresentation m = z4m();
  CHECK(check_wsas_identity(full_submodule(m), m).is_holds());
  // precondition unmet
  ModulePresentation m8 = z8m();
  Submodule n = submodule_span(m8, rows({{4}}));
  if (!is_weakly_strongly_2_absorbing_second(n, m8).is_holds())
    CHECK_THROWS_AS(check_wsas_identity(n, m8), std::invalid_argument);
}

TEST_CASE("pid factorization") {
  ModulePresentation z12 = ModulePresentation::cyclic(Z, 12);
  CHECK(check_pid_factorization(full_submodule(z12), {{2, 2}, {3, 1}}).is_holds());
  CHECK(check_pid_factorization(full_submodule(z12), {{5, 3}}).is_holds());
  ModulePresentation z8 = ModulePresentation::cyclic(Z, 8);
  CHECK(check_pid_factorization(submodule_span(z8, rows({{2}})), {{2, 1}, {3, 1}}).is_holds());
  CHECK_THROWS_AS(check_pid_factorization(full_submodule(z12), {{2, 1}, {2, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_pid_factorization(full_submodule(z12), {{4, 1}}), std::invalid_argument);
}

TEST_CASE("maximal pure submodules") {
  ModulePresentation m = z4m();
  auto maximal = maximal_pure_submodules(full_submodule(m), m, true);
  REQUIRE(maximal.size() == 1);
  CHECK(maximal[0] == zero_submodule(m));

  // K = zero admits only the vacuous N = K case
  CHECK(maximal_pure_submodules(zero_submodule(m), m, true).empty());
  auto for_zero = maximal_pure_submodules(zero_submodule(m), m, false);
  REQUIRE(for_zero.size() == 1);
  CHECK(for_zero[0] == zero_submodule(m));

  ModulePresentation klein = ModulePresentation::direct_sum(Ring::modular(2), {2, 2});
  auto three = maximal_pure_submodules(full_submodule(klein), klein, true);
  CHECK(three.size() == 3);
  for (const Submodule& s : three) CHECK(s.lattice().rank() == 2);  // index-2 sublattices

  // non-strict mode also admits the vacuous N = K case
  auto vacuous = maximal_pure_submodules(full_submodule(klein), klein, false);
  CHECK(vacuous.size() == 4);
  CHECK(std::count(vacuous.begin(), vacuous.end(), full_submodule(klein)) == 1);
}

TEST_CASE("maximal pure submodule counts are finite and stable") {
  for (long mod = 2; mod <= 16; ++mod) {
    ModulePresentation m = ModulePresentation::cyclic(Ring::modular(mod), mod);
    auto first = maximal_pure_submodules(full_submodule(m), m, true);
    auto second = maximal_pure_submodules(full_submodule(m), m, true);
    CHECK(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
  }
}

TEST_CASE("maximal_n_pure_within") {
  ModulePresentation m4 = z4m();
  CHECK(maximal_n_pure_within(two_bar(m4), m4, PurityLevel(2)) == two_bar(m4));
  CHECK(maximal_n_pure_within(zero_submodule(m4), m4, PurityLevel(2)) == zero_submodule(m4));

  ModulePresentation m8 = z8m();
  // among {0, 4Z8, 2Z8} only 0 and 4Z8 are 2-pure; the maximum is 4Z8
  Submodule best = maximal_n_pure_within(two_bar(m8), m8, PurityLevel(2));
  CHECK(best == submodule_span(m8, rows({{4}})));

  // verified maximal: no 2-pure submodule inside N strictly contains it
  auto policy = auto_policy(m8);
  for (const Submodule& s : enumerate_submodules(m8)) {
    if (!submodule_contains(two_bar(m8), s)) continue;
    if (!is_n_pure(s, m8, PurityLevel(2), policy).is_holds()) continue;
    CHECK_FALSE((submodule_contains(s, best) && s != best));
  }
}

TEST_CASE("product characterization equivalence") {
  CHECK(check_product_characterization(z4m(), PurityLevel(2)).is_holds());
  CHECK(check_product_characterization(z8m(), PurityLevel(2)).is_holds());
  for (long p : {2L, 3L, 5L}) {
    ModulePresentation m = ModulePresentation::cyclic(Ring::modular(p), p);
    CHECK(check_product_characterization(m, PurityLevel(2)).is_holds());
    CHECK(check_product_characterization(m, PurityLevel(3)).is_holds());
  }
  ModulePresentation klein = ModulePresentation::direct_sum(Z, {2, 2});
  CHECK_THROWS_AS(check_product_characterization(klein, PurityLevel(2)),
                  std::invalid_argument);
}

TEST_CASE("product characterization at level 3 on the strict-hierarchy modules") {
  // Z/8 and Z/27 are fully 3-pure but not fully 2-pure over their own rings;
  // the 4-fold identity therefore must hold over proper tuples while a tuple
  // slot holding M would falsely drag in the failing 3-fold instances.
  for (long mod : {8L, 27L}) {
    ModulePresentation modular = ModulePresentation::cyclic(Ring::modular(mod), mod);
    CHECK(is_fully_n_pure(modular, PurityLevel(3), auto_policy(modular)).is_holds());
    CHECK_FALSE(is_fully_n_pure(modular, PurityLevel(2), auto_policy(modular)).is_holds());
    CHECK(check_product_characterization(modular, PurityLevel(3)).is_holds());

    // over Z both sides of the equivalence fail together
    ModulePresentation integral = ModulePresentation::cyclic(Z, mod);
    CHECK_FALSE(is_fully_n_pure(integral, PurityLevel(3), auto_policy(integral)).is_holds());
    CHECK(check_product_characterization(integral, PurityLevel(3)).is_holds());
  }
}

TEST_CASE("colon transfer") {
  ModulePresentation z12 = ModulePresentation::cyclic(Ring::modular(12), 12);
  auto policy = auto_policy(z12);
  for (const Submodule& n : enumerate_submodules(z12))
    CHECK(check_colon_transfer(n, z12, PurityLevel(2), policy).is_holds());

  // M = Z over Z, N = 2Z, bounded: both sides fail identically
  ModulePresentation z = ModulePresentation::cyclic(Z, 0);
  Submodule n = submodule_span(z, rows({{2}}));
  CHECK(check_colon_transfer(n, z, PurityLevel(2), QuantificationPolicy::bounded(8)).is_holds());

  // not faithful over Z
  ModulePresentation z4 = ModulePresentation::cyclic(Z, 4);
  CHECK_THROWS_AS(
      check_colon_transfer(zero_submodule(z4), z4, PurityLevel(2), auto_policy(z4)),
      std::invalid_argument);

  // faithful but not multiplication
  ModulePresentation klein = ModulePresentation::direct_sum(Ring::modular(2), {2, 2});
  CHECK_THROWS_AS(check_colon_transfer(zero_submodule(klein), klein, PurityLevel(2),
                                       auto_policy(klein)),
                  std::invalid_argument);
}

TEST_CASE("sufficient conditions for 2-purity") {
  // (a) IJN = IN ∩ JN for all proper ideals forces 2-purity;
  // (b) IN pure for every proper ideal forces 2-purity.
  for (long mod = 2; mod <= 16; ++mod) {
    ModulePresentation m = ModulePresentation::cyclic(Ring::modular(mod), mod);
    auto policy = auto_policy(m);
    auto ideals = proper_ideals(m.ring(), policy);
    for (const Submodule& n : enumerate_submodules(m)) {
      bool premise_a = true;
      for (std::size_t i = 0; i < ideals.size() && premise_a; ++i)
        for (std::size_t j = i; j < ideals.size() && premise_a; ++j) {
          Submodule lhs = scale_by_ideal(ideal_product(ideals[i], ideals[j]), n);
          Submodule rhs = submodule_intersect(scale_by_ideal(ideals[i], n),
                                              scale_by_ideal(ideals[j], n));
          if (lhs != rhs) premise_a = false;
        }
      bool premise_b = true;
      for (const Ideal& i : ideals)
        if (!is_pure(scale_by_ideal(i, n), m, policy).is_holds()) premise_b = false;
      bool two_pure = is_n_pure(n, m, PurityLevel(2), policy).is_holds();
      if (premise_a) CHECK(two_pure);
      if (premise_b) CHECK(two_pure);
    }
  }
}

TEST_CASE("fields are fully n-pure") {
  for (long p : {2L, 3L, 5L, 7L}) {
    ModulePresentation m = ModulePresentation::cyclic(Ring::modular(p), p);
    for (int level = 1; level <= 4; ++level)
      CHECK(is_fully_n_pure(m, PurityLevel(level), auto_policy(m)).is_holds());
  }
}
