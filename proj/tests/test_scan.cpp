#include <doctest.h>

#include "npure/scan.hpp"

using namespace npure;

namespace {

ModuleFamily cyclic(long max, bool z = true, bool zmod = true) {
  ModuleFamily f;
  f.kind = ModuleFamily::Kind::kCyclic;
  f.max = max;
  f.over_integers = z;
  f.over_modular = zmod;
  return f;
}

ModuleFamily rank2(long max) {
  ModuleFamily f;
  f.kind = ModuleFamily::Kind::kRankTwo;
  f.max = max;
  return f;
}

}  // namespace

TEST_CASE("family instances are deterministic and ascend") {
  auto cyc = family_instances(cyclic(4));
  REQUIRE(cyc.size() == 7);  // m=1 (Z only), m=2..4 over both rings
  CHECK(cyc[0].describe() == "Z-module Z^1/[[1]]");
  CHECK(cyc[1].describe() == "Z-module Z^1/[[2]]");
  CHECK(cyc[2].describe() == "Z/2-module Z^1/[[2]]");

  auto r2 = family_instances(rank2(6));
  REQUIRE(r2.size() == 4);  // (2,2), (2,3) over both rings
  CHECK(r2[0].structure_name() == "Z/2 x Z/2");
  CHECK(r2[2].ring() == Ring::integers());
  CHECK(r2[3].ring() == Ring::modular(6));
}

TEST_CASE("proved statements scan clean on small families") {
  for (const char* claim :
       {"pure-implies-2pure", "hierarchy", "squarefree-coprime-product", "pid-factorization",
        "local-global", "sufficient-intersection", "sufficient-pure-scalings", "transitivity",
        "hereditary", "quotient-lifting", "chain-closure", "wsas-identity", "colon-transfer",
        "product-characterization", "maximal-n-pure", "fields-fully-n-pure",
        "oracle-equivalence"}) {
    ScanOptions options;
    options.level = 2;
    ScanReport report = conjecture_scan(claim, cyclic(12), options);
    CHECK(report.violations.empty());
    CHECK(report.scanned_instances > 0);
  }
}

TEST_CASE("hierarchy scan up to level 4 over both shapes") {
  ScanOptions options;
  options.level = 4;
  CHECK(conjecture_scan("hierarchy", cyclic(16), options).violations.empty());
  CHECK(conjecture_scan("hierarchy", rank2(16), options).violations.empty());
}

TEST_CASE("n-ary sufficient intersection condition at level 3") {
  ScanOptions options;
  options.level = 3;
  CHECK(conjecture_scan("sufficient-intersection", cyclic(16), options).violations.empty());
  CHECK(conjecture_scan("sufficient-intersection", rank2(16), options).violations.empty());
}

TEST_CASE("unknown claim is rejected") {
  CHECK_THROWS_AS(conjecture_scan("no-such-claim", cyclic(4)), std::invalid_argument);
  CHECK(known_claims().size() == 17);
}

TEST_CASE("scan reports are identical across thread counts") {
  ScanOptions one;
  one.level = 3;
  one.threads = 1;
  ScanOptions four = one;
  four.threads = 4;
  for (const char* claim : {"hierarchy", "oracle-equivalence", "local-global"}) {
    ScanReport a = conjecture_scan(claim, cyclic(10), one);
    ScanReport b = conjecture_scan(claim, cyclic(10), four);
    CHECK(a.scanned_instances == b.scanned_instances);
    CHECK(a.violations.size() == b.violations.size());
  }
}

TEST_CASE("mining rediscovers the known cyclic witnesses") {
  auto hits2 = witness_mine("n-pure-not-(n-1)-pure", cyclic(16, false, true), 2);
  bool found_z4 = false;
  for (const MinedWitness& w : hits2) {
    if (w.module == ModulePresentation::cyclic(Ring::modular(4), 4) &&
        w.submodule == submodule_span(w.module, [] {
          IntMatrix g(1, 1);
          g(0, 0) = 2;
          return g;
        }()))
      found_z4 = true;
  }
  CHECK(found_z4);

  auto hits3 = witness_mine("n-pure-not-(n-1)-pure", cyclic(16, false, true), 3);
  bool found_z8 = false;
  for (const MinedWitness& w : hits3) {
    if (w.module == ModulePresentation::cyclic(Ring::modular(8), 8) &&
        w.submodule == submodule_span(w.module, [] {
          IntMatrix g(1, 1);
          g(0, 0) = 2;
          return g;
        }()))
      found_z8 = true;
  }
  CHECK(found_z8);
}

TEST_CASE("mining over prime fields finds nothing") {
  ModuleFamily primes = cyclic(13, false, true);
  auto hits = witness_mine("n-pure-not-(n-1)-pure", primes, 2);
  for (const MinedWitness& w : hits)
    CHECK_FALSE(is_prime(w.module.ring().modulus()));
}

TEST_CASE("mining validates its inputs") {
  CHECK_THROWS_AS(witness_mine("bogus", cyclic(4), 2), std::invalid_argument);
  CHECK_THROWS_AS(witness_mine("n-pure-not-(n-1)-pure", cyclic(4), 1), std::invalid_argument);
}

TEST_CASE("mining is stable across thread counts") {
  auto a = witness_mine("n-pure-not-(n-1)-pure", cyclic(16, false, true), 2, 1);
  auto b = witness_mine("n-pure-not-(n-1)-pure", cyclic(16, false, true), 2, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].module == b[i].module);
    CHECK(a[i].submodule == b[i].submodule);
  }
}
