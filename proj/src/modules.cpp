#include "npure/modules.hpp"

#include <sstream>
#include <stdexcept>

namespace npure {

namespace {

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

}  // namespace

ModulePresentation::ModulePresentation(Ring ring, Index ambient_rank,
                                       const IntMatrix& relation_rows)
    : ring_(std::move(ring)),
      ambient_rank_(ambient_rank),
      relations_(LatticeBasis::zero(ambient_rank)) {
  if (ambient_rank < 0) throw std::invalid_argument("ModulePresentation: negative rank");
  if (relation_rows.rows() > 0 && relation_rows.cols() != ambient_rank)
    throw std::invalid_argument("ModulePresentation: relation row length mismatch");
  IntMatrix rows = relation_rows;
  if (rows.rows() == 0) rows.resize(0, ambient_rank);
  if (ring_.is_modular()) {
    IntMatrix modular = ring_.modulus() * IntMatrix::Identity(ambient_rank, ambient_rank);
    rows = vstack(rows, modular);
  }
  relations_ = LatticeBasis::from_generators(ambient_rank, rows);
}

ModulePresentation ModulePresentation::cyclic(Ring ring, const Int& order) {
  IntMatrix rel(1, 1);
  rel(0, 0) = order;
  return ModulePresentation(std::move(ring), 1, rel);
}

ModulePresentation ModulePresentation::direct_sum(Ring ring, const std::vector<Int>& orders) {
  const Index r = static_cast<Index>(orders.size());
  IntMatrix rel = IntMatrix::Zero(r, r);
  for (Index i = 0; i < r; ++i) rel(i, i) = orders[static_cast<std::size_t>(i)];
  return ModulePresentation(std::move(ring), r, rel);
}

ModulePresentation ModulePresentation::ring_as_module(Ring ring) {
  if (ring.is_modular()) {
    Int m = ring.modulus();
    return cyclic(std::move(ring), m);
  }
  return cyclic(std::move(ring), 0);
}

std::string ModulePresentation::describe() const {
  std::ostringstream out;
  out << ring_.to_string() << "-module Z^" << ambient_rank_;
  if (relations_.rank() > 0) out << "/" << to_string(relations_.basis());
  return out.str();
}

std::string ModulePresentation::structure_name() const {
  const auto factors = invariant_factors(*this);
  const Index free = free_rank(*this);
  std::vector<std::string> parts;
  for (const Int& d : factors)
    if (d != 1) parts.push_back("Z/" + d.get_str());
  if (free == 1) parts.push_back("Z");
  if (free > 1) parts.push_back("Z^" + std::to_string(free));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

Submodule::Submodule(ModulePresentation parent, LatticeBasis lattice)
    : parent_(std::move(parent)), lattice_(std::move(lattice)) {
  if (lattice_.ambient_rank() != parent_.ambient_rank())
    throw std::invalid_argument("Submodule: ambient rank mismatch");
  const LatticeBasis& rel = parent_.relations();
  for (Index i = 0; i < rel.rank(); ++i)
    if (!lattice_contains(lattice_, IntRowVector(rel.basis().row(i))))
      throw std::invalid_argument("Submodule: lattice does not contain the relations");
}

std::string Submodule::describe() const { return to_string(lattice_.basis()); }

IntRowVector reduce_mod_relations(const ModulePresentation& m, const IntRowVector& v) {
  if (v.cols() != m.ambient_rank())
    throw std::invalid_argument("reduce_mod_relations: coordinate length mismatch");
  IntRowVector rest = v;
  const IntMatrix& basis = m.relations().basis();
  for (Index i = 0; i < basis.rows(); ++i) {
    Index col = 0;
    while (basis(i, col) == 0) ++col;
    Int q = fdiv_q(rest(col), basis(i, col));
    if (q != 0) rest -= q * basis.row(i);
  }
  return rest;
}

ModuleElement::ModuleElement(ModulePresentation parent, const IntRowVector& coordinates)
    : parent_(std::move(parent)), coords_(reduce_mod_relations(parent_, coordinates)) {}

ModuleElement element_add(const ModuleElement& a, const ModuleElement& b) {
  if (a.parent() != b.parent()) throw std::invalid_argument("element_add: parent mismatch");
  return ModuleElement(a.parent(), a.coordinates() + b.coordinates());
}

ModuleElement element_negate(const ModuleElement& a) {
  return ModuleElement(a.parent(), -a.coordinates());
}

ModuleElement element_scale(const Int& c, const ModuleElement& a) {
  return ModuleElement(a.parent(), c * a.coordinates());
}

Submodule submodule_span(const ModulePresentation& m, const IntMatrix& generators) {
  if (generators.rows() > 0 && generators.cols() != m.ambient_rank())
    throw std::invalid_argument("submodule_span: generator length mismatch");
  IntMatrix gens = generators;
  if (gens.rows() == 0) gens.resize(0, m.ambient_rank());
  IntMatrix all(gens.rows() + m.relations().rank(), m.ambient_rank());
  all.topRows(gens.rows()) = gens;
  all.bottomRows(m.relations().rank()) = m.relations().basis();
  return Submodule(m, LatticeBasis::from_generators(m.ambient_rank(), all));
}

Submodule zero_submodule(const ModulePresentation& m) {
  return Submodule(m, m.relations());
}

Submodule full_submodule(const ModulePresentation& m) {
  return Submodule(m, LatticeBasis::full(m.ambient_rank()));
}

Submodule scale_by_ideal(const Ideal& i, const Submodule& n) {
  if (i.ring() != n.parent().ring())
    throw std::invalid_argument("scale_by_ideal: ring mismatch");
  LatticeBasis scaled = lattice_scale(i.generator(), n.lattice());
  return Submodule(n.parent(), lattice_sum(scaled, n.parent().relations()));
}

Submodule scale_module(const Ideal& i, const ModulePresentation& m) {
  return scale_by_ideal(i, full_submodule(m));
}

Submodule submodule_intersect(const Submodule& n, const Submodule& k) {
  if (n.parent() != k.parent())
    throw std::invalid_argument("submodule_intersect: parent mismatch");
  return Submodule(n.parent(), lattice_intersect(n.lattice(), k.lattice()));
}

Submodule submodule_sum(const Submodule& n, const Submodule& k) {
  if (n.parent() != k.parent()) throw std::invalid_argument("submodule_sum: parent mismatch");
  return Submodule(n.parent(), lattice_sum(n.lattice(), k.lattice()));
}

bool submodule_contains(const Submodule& outer, const Submodule& inner) {
  if (outer.parent() != inner.parent())
    throw std::invalid_argument("submodule_contains: parent mismatch");
  return lattice_contains(outer.lattice(), inner.lattice());
}

Ideal colon_ideal(const Submodule& n, const ModulePresentation& m) {
  if (n.parent() != m) throw std::invalid_argument("colon_ideal: submodule does not live in M");
  if (n.lattice().rank() < m.ambient_rank()) return Ideal(m.ring(), 0);  // free quotient
  auto factors = snf(n.lattice().basis());
  Int e = factors.empty() ? Int(1) : factors.back();
  return Ideal(m.ring(), e);
}

Ideal annihilator(const Submodule& n) {
  auto abstract = as_module(n);
  return Ideal(n.parent().ring(), exponent(abstract.module()));
}

std::vector<Int> invariant_factors(const ModulePresentation& m) {
  return snf(m.relations().basis());
}

Index free_rank(const ModulePresentation& m) {
  return m.ambient_rank() - m.relations().rank();
}

Int exponent(const ModulePresentation& m) {
  if (free_rank(m) > 0) return 0;
  auto factors = invariant_factors(m);
  return factors.empty() ? Int(1) : factors.back();
}

std::optional<Int> cardinality(const ModulePresentation& m) {
  if (free_rank(m) > 0) return std::nullopt;
  Int card = 1;
  const IntMatrix& basis = m.relations().basis();
  for (Index i = 0; i < basis.rows(); ++i) {
    Index col = 0;
    while (basis(i, col) == 0) ++col;
    card *= basis(i, col);
  }
  return card;
}

Localization::Localization(ModulePresentation original, ModulePresentation component)
    : original_(std::move(original)), component_(std::move(component)) {}

Submodule Localization::transfer(const Submodule& n) const {
  if (n.parent() != original_)
    throw std::invalid_argument("Localization::transfer: submodule of a different module");
  return submodule_span(component_, n.lattice().basis());
}

Localization localize(const ModulePresentation& m, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("localize: p must be prime");
  if (!cardinality(m)) throw std::domain_error("localize: module is infinite");
  unsigned long s = valuation(exponent(m), p);
  Int ps = pow_int(p, s);
  // M/(p^s M) is the p-primary component; p^s M is the complementary summand.
  IntMatrix rel = vstack(IntMatrix(ps * IntMatrix::Identity(m.ambient_rank(), m.ambient_rank())),
                         m.relations().basis());
  return Localization(m, ModulePresentation(Ring::integers(), m.ambient_rank(), rel));
}

Submodule submodule_product(const ModulePresentation& m, const std::vector<Submodule>& factors) {
  if (factors.empty()) throw std::invalid_argument("submodule_product: no factors");
  Ideal acc(m.ring(), 1);
  for (const Submodule& f : factors) {
    if (f.parent() != m) throw std::invalid_argument("submodule_product: parent mismatch");
    acc = ideal_product(acc, colon_ideal(f, m));
  }
  return scale_module(acc, m);
}

Submodule submodule_product(const Submodule& n, const Submodule& k) {
  return submodule_product(n.parent(), {n, k});
}

std::vector<IntRowVector> element_vectors(const ModulePresentation& m, long budget) {
  auto card = cardinality(m);
  if (!card) throw std::domain_error("elements: module is infinite");
  if (*card > budget) throw std::domain_error("elements: module exceeds the element budget");
  const IntMatrix& basis = m.relations().basis();
  const Index k = m.ambient_rank();
  std::vector<Int> bounds(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) bounds[static_cast<std::size_t>(i)] = basis(i, i);
  std::vector<IntRowVector> out;
  out.reserve(static_cast<std::size_t>(card->get_ui()));
  IntRowVector current = IntRowVector::Zero(k);
  for (;;) {
    out.push_back(current);
    Index pos = 0;  // first coordinate varies fastest
    while (pos < k && current(pos) + 1 == bounds[static_cast<std::size_t>(pos)]) {
      current(pos) = 0;
      ++pos;
    }
    if (pos == k) break;
    current(pos) += 1;
  }
  return out;
}

std::vector<ModuleElement> elements(const ModulePresentation& m, long budget) {
  std::vector<ModuleElement> out;
  for (const IntRowVector& v : element_vectors(m, budget)) out.emplace_back(m, v);
  return out;
}

ModulePresentation quotient(const ModulePresentation& m, const Submodule& n) {
  if (n.parent() != m) throw std::invalid_argument("quotient: submodule of a different module");
  return ModulePresentation(m.ring(), m.ambient_rank(), n.lattice().basis());
}

Submodule quotient_image(const ModulePresentation& quotient_module, const Submodule& k) {
  return submodule_span(quotient_module, k.lattice().basis());
}

SubmoduleAsModule::SubmoduleAsModule(Submodule ambient, ModulePresentation module)
    : ambient_(std::move(ambient)), module_(std::move(module)) {}

Submodule SubmoduleAsModule::restrict(const Submodule& inner) const {
  if (inner.parent() != ambient_.parent())
    throw std::invalid_argument("SubmoduleAsModule::restrict: parent mismatch");
  if (!submodule_contains(ambient_, inner))
    throw std::invalid_argument("SubmoduleAsModule::restrict: submodule not contained");
  IntMatrix coords(inner.lattice().rank(), ambient_.lattice().rank());
  for (Index i = 0; i < inner.lattice().rank(); ++i) {
    auto c = lattice_coordinates(ambient_.lattice(), IntRowVector(inner.lattice().basis().row(i)));
    coords.row(i) = *c;
  }
  return submodule_span(module_, coords);
}

SubmoduleAsModule as_module(const Submodule& k) {
  const LatticeBasis& rel = k.parent().relations();
  IntMatrix coords(rel.rank(), k.lattice().rank());
  for (Index i = 0; i < rel.rank(); ++i) {
    auto c = lattice_coordinates(k.lattice(), IntRowVector(rel.basis().row(i)));
    coords.row(i) = *c;
  }
  // Over Z/mZ the constructor re-adjoins m*e_i in K-coordinates; those are
  // the coordinates of m*B_K ⊆ L_rel, already in the span, so the quotient
  // is unchanged.
  ModulePresentation abstract(k.parent().ring(), k.lattice().rank(), coords);
  return SubmoduleAsModule(k, std::move(abstract));
}

}  // namespace npure
