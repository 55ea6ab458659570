#include "npure/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace npure {

namespace {

IntRowVector reduce(const ModulePresentation& m, const IntRowVector& v) {
  return reduce_mod_relations(m, v);
}

Int reduce_action(const Int& g, const Int& modulus) {
  if (modulus == 0) return g;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

ElementSet::Members scale_members(const ModulePresentation& m, const Int& g,
                                  const ElementSet::Members& s) {
  ElementSet::Members out;
  for (const IntRowVector& x : s) out.insert(reduce(m, IntRowVector(g * x)));
  return out;
}

}  // namespace

ElementSet::ElementSet(ModulePresentation parent, Members members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  IntRowVector zero = IntRowVector::Zero(parent_.ambient_rank());
  if (!members_.count(zero)) throw std::invalid_argument("ElementSet: zero is missing");
  for (const IntRowVector& x : members_) {
    if (x != reduce(parent_, x))
      throw std::invalid_argument("ElementSet: member is not canonical");
    if (!members_.count(reduce(parent_, IntRowVector(-x))))
      throw std::invalid_argument("ElementSet: not closed under negation");
    for (const IntRowVector& y : members_)
      if (!members_.count(reduce(parent_, IntRowVector(x + y))))
        throw std::invalid_argument("ElementSet: not closed under addition");
  }
}

ElementSet ElementSet::closure(const ModulePresentation& parent, const IntMatrix& generators) {
  Members members;
  members.insert(IntRowVector::Zero(parent.ambient_rank()));
  std::vector<IntRowVector> gens;
  for (Index i = 0; i < generators.rows(); ++i) {
    gens.push_back(reduce(parent, IntRowVector(generators.row(i))));
    gens.push_back(reduce(parent, IntRowVector(-generators.row(i))));
  }
  std::vector<IntRowVector> frontier(members.begin(), members.end());
  while (!frontier.empty()) {
    std::vector<IntRowVector> next;
    for (const IntRowVector& x : frontier)
      for (const IntRowVector& g : gens) {
        IntRowVector y = reduce(parent, IntRowVector(x + g));
        if (members.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return ElementSet(ElementSet::Trusted{}, parent, std::move(members));
}

bool ElementSet::contains(const ElementSet& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end(), RowVectorLess{});
}

ElementSet zero_element_set(const ModulePresentation& m) {
  ElementSet::Members members;
  members.insert(IntRowVector::Zero(m.ambient_rank()));
  return ElementSet(ElementSet::Trusted{}, m, std::move(members));
}

ElementSet full_element_set(const ModulePresentation& m) {
  ElementSet::Members members;
  for (const IntRowVector& v : element_vectors(m)) members.insert(v);
  return ElementSet(ElementSet::Trusted{}, m, std::move(members));
}

ElementSet oracle_scale(const Ideal& ideal, const ElementSet& s) {
  if (ideal.ring() != s.parent().ring())
    throw std::invalid_argument("oracle_scale: ring mismatch");
  return ElementSet(ElementSet::Trusted{}, s.parent(),
                    scale_members(s.parent(), ideal.generator(), s.members()));
}

ElementSet oracle_intersect(const ElementSet& s1, const ElementSet& s2) {
  if (s1.parent() != s2.parent())
    throw std::invalid_argument("oracle_intersect: parent mismatch");
  ElementSet::Members out;
  std::set_intersection(s1.members().begin(), s1.members().end(), s2.members().begin(),
                        s2.members().end(), std::inserter(out, out.begin()), RowVectorLess{});
  return ElementSet(ElementSet::Trusted{}, s1.parent(), std::move(out));
}

ElementSet oracle_sum(const ElementSet& s1, const ElementSet& s2) {
  if (s1.parent() != s2.parent()) throw std::invalid_argument("oracle_sum: parent mismatch");
  ElementSet::Members out;
  for (const IntRowVector& a : s1.members())
    for (const IntRowVector& b : s2.members())
      out.insert(reduce(s1.parent(), IntRowVector(a + b)));
  return ElementSet(ElementSet::Trusted{}, s1.parent(), std::move(out));
}

namespace {

struct MembersLess {
  bool operator()(const ElementSet::Members& a, const ElementSet::Members& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        RowVectorLess{});
  }
};

// Set-side analogue of the lattice engine: scalings interned by their member
// sets, multiset verdicts memoized on the interned ids.
class OracleEngine {
 public:
  OracleEngine(const ElementSet& n, const ModulePresentation& m, const Int& action_modulus)
      : modulus_(action_modulus),
        parent_(m),
        n_base_(n.members()),
        m_base_(full_element_set(m).members()) {}

  long n_id(const Int& g) { return id_of(n_cache_, n_base_, g); }
  long m_id(const Int& g) { return id_of(m_cache_, m_base_, g); }
  const ElementSet::Members& value(long id) const {
    return values_[static_cast<std::size_t>(id)];
  }

  bool identity_holds(const std::vector<Int>& gens) {
    Int product(1);
    std::vector<long> ids;
    for (const Int& g : gens) {
      product = reduce_action(product * g, modulus_);
      ids.push_back(n_id(g));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const std::size_t distinct = ids.size();
    const long lhs = n_id(product);
    ids.push_back(lhs);
    ids.push_back(m_id(product));
    auto memo = memo_.find(ids);
    if (memo != memo_.end()) return memo->second;

    ElementSet::Members rhs = value(ids[distinct + 1]);
    for (std::size_t i = 0; i < distinct; ++i) {
      ElementSet::Members narrowed;
      std::set_intersection(rhs.begin(), rhs.end(), value(ids[i]).begin(), value(ids[i]).end(),
                            std::inserter(narrowed, narrowed.begin()), RowVectorLess{});
      rhs = std::move(narrowed);
    }
    bool ok = value(lhs) == rhs;
    memo_.emplace(std::move(ids), ok);
    return ok;
  }

 private:
  long id_of(std::map<Int, long>& cache, const ElementSet::Members& base, const Int& g) {
    Int key = reduce_action(g, modulus_);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ElementSet::Members scaled = scale_members(parent_, key, base);
    auto [pos, inserted] = intern_.emplace(scaled, static_cast<long>(values_.size()));
    if (inserted) values_.push_back(pos->first);
    cache.emplace(std::move(key), pos->second);
    return pos->second;
  }

  Int modulus_;
  const ModulePresentation& parent_;
  ElementSet::Members n_base_;
  ElementSet::Members m_base_;
  std::map<Int, long> n_cache_, m_cache_;
  std::map<ElementSet::Members, long, MembersLess> intern_;
  std::vector<ElementSet::Members> values_;
  std::map<std::vector<long>, bool> memo_;
};

}  // namespace

Verdict oracle_is_n_pure(const ElementSet& n, const ModulePresentation& m, PurityLevel level,
                         const QuantificationPolicy& policy) {
  if (n.parent() != m)
    throw std::invalid_argument("oracle_is_n_pure: element set does not live in M");
  Int e = exponent(m);
  if (e == 0) throw std::domain_error("oracle_is_n_pure: module is infinite");
  const bool residue = policy.mode() == QuantificationPolicy::Mode::kResidueReduced;
  const bool bounded = policy.mode() == QuantificationPolicy::Mode::kBounded;
  auto ideals = proper_ideals(m.ring(), policy, e);
  auto lift = [&](const Ideal& ideal) {
    if (residue && ideal.generator() == 1) return Ideal(ideal.ring(), e + 1);
    return ideal;
  };

  if (level.n() == 1) {
    ElementSet full = full_element_set(m);
    for (const Ideal& ideal : ideals) {
      if (oracle_scale(ideal, n) != oracle_intersect(n, oracle_scale(ideal, full))) {
        Witness w;
        w.ideals.push_back(lift(ideal));
        return Verdict::fails(std::move(w));
      }
    }
    return bounded ? Verdict::unknown(policy.bound()) : Verdict::holds();
  }

  OracleEngine engine(n, m, e);
  const std::size_t size = static_cast<std::size_t>(level.n());
  std::vector<std::size_t> idx(size, 0);
  if (ideals.empty()) return bounded ? Verdict::unknown(policy.bound()) : Verdict::holds();
  for (;;) {
    std::vector<Int> gens;
    gens.reserve(size);
    for (std::size_t i : idx) gens.push_back(ideals[i].generator());
    if (!engine.identity_holds(gens)) {
      Witness w;
      for (std::size_t i : idx) w.ideals.push_back(lift(ideals[i]));
      return Verdict::fails(std::move(w));
    }
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == ideals.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < size; ++j) idx[j] = idx[pos - 1];
  }
  return bounded ? Verdict::unknown(policy.bound()) : Verdict::holds();
}

ElementSet to_element_set(const Submodule& n) {
  ElementSet::Members members;
  for (const IntRowVector& v : element_vectors(n.parent()))
    if (lattice_contains(n.lattice(), v)) members.insert(v);
  return ElementSet(ElementSet::Trusted{}, n.parent(), std::move(members));
}

Submodule to_submodule(const ElementSet& s) {
  IntMatrix gens(static_cast<Index>(s.size()), s.parent().ambient_rank());
  Index i = 0;
  for (const IntRowVector& v : s.members()) gens.row(i++) = v;
  return submodule_span(s.parent(), gens);
}

}  // namespace npure
