#pragma once

#include <utility>
#include <vector>

#include "npure/verdict.hpp"

namespace npure {

/// Quantification the CLI defaults to: exhaustive for modular rings,
/// residue-reduced for finite Z-modules, bounded:16 otherwise.
QuantificationPolicy auto_policy(const ModulePresentation& m);

/// Anderson–Fuller purity: IN = N ∩ IM for every ideal I materialized by the
/// policy (the unit ideal holds trivially and is not materialized).
Verdict is_pure(const Submodule& n, const ModulePresentation& m,
                const QuantificationPolicy& policy);

/// Ribenboim purity: rM ∩ N = rN for every ring element r from the policy.
Verdict is_ribenboim_pure(const Submodule& n, const ModulePresentation& m,
                          const QuantificationPolicy& policy);

/// n-purity: I1...In N = I1 N ∩ ... ∩ In N ∩ (I1...In) M over every multiset
/// of proper ideals from the policy. Level 1 dispatches to is_pure.
Verdict is_n_pure(const Submodule& n, const ModulePresentation& m, PurityLevel level,
                  const QuantificationPolicy& policy);

/// Every submodule of M is n-pure (finite modules only).
Verdict is_fully_n_pure(const ModulePresentation& m, PurityLevel level,
                        const QuantificationPolicy& policy);

/// N = (N :_R M)M for every submodule N (finite modules only).
Verdict is_multiplication_module(const ModulePresentation& m,
                                 const QuantificationPolicy& policy);

/// I N1 = I N2 implies N1 = N2 for every nonzero ideal I (finite modules only).
Verdict is_fully_cancellation(const ModulePresentation& m, const QuantificationPolicy& policy);

/// Weakly strongly 2-absorbing second: abM ⊄ K and abN ⊆ K imply aN ⊆ K or
/// bN ⊆ K or ab ∈ Ann(N), over all ring elements a, b and submodules K.
/// Requires nonzero N and a finite module over a modular ring.
Verdict is_weakly_strongly_2_absorbing_second(const Submodule& n, const ModulePresentation& m);

/// abN = aN ∩ bN ∩ abM for all a, b with ab outside Ann(N); precondition:
/// is_weakly_strongly_2_absorbing_second holds.
Verdict check_wsas_identity(const Submodule& n, const ModulePresentation& m);

/// p1^s1 ... pt^st N = ∩ pi^si N for distinct primes pi (ring Z).
Verdict check_pid_factorization(const Submodule& n,
                                const std::vector<std::pair<Int, unsigned long>>& prime_powers);

/// All pure submodules N ⊆ K (N ⊊ K when strict) with no pure H strictly
/// between N and K; exhaustive over the submodule lattice of a finite M.
std::vector<Submodule> maximal_pure_submodules(const Submodule& k, const ModulePresentation& m,
                                               bool strict = true);

/// A submodule of N, n-pure in M and maximal such; ties broken by the
/// lexicographically least canonical basis. Exists because zero is n-pure.
Submodule maximal_n_pure_within(const Submodule& n, const ModulePresentation& m,
                                PurityLevel level);

/// Equivalence for finite multiplication modules: the (n+1)-fold submodule
/// product identity N1...Np = N1N2 ∩ ... ∩ N1Np ∩ (N2...Np) holds for all
/// tuples iff M is fully n-pure. Both directions are evaluated.
Verdict check_product_characterization(const ModulePresentation& m, PurityLevel level);

/// For finitely generated faithful multiplication M: N is n-pure in M iff
/// (N :_R M) is an n-pure ideal of R (as a submodule of the ring-as-module).
Verdict check_colon_transfer(const Submodule& n, const ModulePresentation& m, PurityLevel level,
                             const QuantificationPolicy& policy);

}  // namespace npure
