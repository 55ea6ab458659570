#include "npure/rings.hpp"

#include <stdexcept>

namespace npure {

Ring Ring::modular(const Int& m) {
  if (m < 2) throw std::invalid_argument("Ring::modular: modulus must be >= 2");
  return Ring(m);
}

const Int& Ring::modulus() const {
  if (!is_modular()) throw std::logic_error("Ring::modulus: ring is Z");
  return modulus_;
}

std::string Ring::to_string() const {
  return is_modular() ? "Z/" + modulus_.get_str() : "Z";
}

Ideal::Ideal(Ring ring, const Int& generator) : ring_(std::move(ring)), gen_(abs(generator)) {
  if (ring_.is_modular()) {
    gen_ = gcd(gen_, ring_.modulus());
    if (gen_ == 0) gen_ = ring_.modulus();  // zero ideal
  }
}

Ideal Ideal::from_generators(Ring ring, const std::vector<Int>& generators) {
  Int g = 0;
  for (const Int& x : generators) g = gcd(g, x);
  return Ideal(std::move(ring), g);
}

Int Ideal::residue_generator() const {
  if (ring_.is_modular() && gen_ == ring_.modulus()) return 0;
  return gen_;
}

bool Ideal::is_zero() const {
  return ring_.is_modular() ? gen_ == ring_.modulus() : gen_ == 0;
}

bool Ideal::is_proper() const { return gen_ != 1; }

std::string Ideal::to_string() const { return "(" + residue_generator().get_str() + ")"; }

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ideal_product: ring mismatch");
  return Ideal(a.ring(), a.generator() * b.generator());
}

bool is_proper(const Ideal& a) { return a.is_proper(); }

QuantificationPolicy QuantificationPolicy::bounded(const Int& b) {
  if (b < 2) throw std::invalid_argument("QuantificationPolicy::bounded: bound must be >= 2");
  return QuantificationPolicy(Mode::kBounded, b);
}

std::string QuantificationPolicy::to_string() const {
  switch (mode_) {
    case Mode::kExhaustive:
      return "exhaustive";
    case Mode::kResidueReduced:
      return "residue";
    case Mode::kBounded:
      return "bounded:" + bound_.get_str();
  }
  return "?";
}

std::vector<Ideal> proper_ideals(const Ring& ring, const QuantificationPolicy& policy,
                                 const Int& module_exponent) {
  std::vector<Ideal> out;
  switch (policy.mode()) {
    case QuantificationPolicy::Mode::kExhaustive: {
      if (!ring.is_modular())
        throw std::invalid_argument("proper_ideals: exhaustive policy needs a modular ring");
      // One ideal per divisor of m except 1; the divisor m is the zero ideal
      // and is listed last.
      for (const Int& d : divisors(ring.modulus()))
        if (d != 1 && d != ring.modulus()) out.emplace_back(ring, d);
      out.emplace_back(ring, ring.modulus());
      return out;
    }
    case QuantificationPolicy::Mode::kResidueReduced: {
      if (ring.is_modular())
        throw std::invalid_argument("proper_ideals: residue policy needs ring Z");
      if (module_exponent <= 0)
        throw std::invalid_argument("proper_ideals: residue policy needs a finite module");
      for (Int g = 0; g < module_exponent; ++g) out.emplace_back(ring, g);
      return out;
    }
    case QuantificationPolicy::Mode::kBounded: {
      if (ring.is_modular())
        throw std::invalid_argument("proper_ideals: bounded policy needs ring Z");
      out.emplace_back(ring, 0);
      for (Int g = 2; g <= policy.bound(); ++g) out.emplace_back(ring, g);
      return out;
    }
  }
  return out;
}

std::vector<Int> ring_elements(const Ring& ring, const QuantificationPolicy& policy,
                               const Int& module_exponent) {
  std::vector<Int> out;
  switch (policy.mode()) {
    case QuantificationPolicy::Mode::kExhaustive: {
      if (!ring.is_modular())
        throw std::invalid_argument("ring_elements: exhaustive policy needs a modular ring");
      for (Int r = 0; r < ring.modulus(); ++r) out.push_back(r);
      return out;
    }
    case QuantificationPolicy::Mode::kResidueReduced: {
      if (ring.is_modular())
        throw std::invalid_argument("ring_elements: residue policy needs ring Z");
      if (module_exponent <= 0)
        throw std::invalid_argument("ring_elements: residue policy needs a finite module");
      for (Int r = 0; r < module_exponent; ++r) out.push_back(r);
      return out;
    }
    case QuantificationPolicy::Mode::kBounded: {
      if (ring.is_modular())
        throw std::invalid_argument("ring_elements: bounded policy needs ring Z");
      for (Int r = 0; r <= policy.bound(); ++r) out.push_back(r);
      return out;
    }
  }
  return out;
}

}  // namespace npure
