#include "npure/verdict.hpp"

#include <sstream>
#include <stdexcept>

namespace npure {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kHolds:
      return "Holds";
    case Outcome::kFails:
      return "Fails";
    case Outcome::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::string Witness::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " ";
    first = false;
  };
  if (!ideals.empty()) {
    sep();
    out << "I=";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (i) out << ",";
      out << ideals[i].to_string();
    }
  }
  if (!elements.empty()) {
    sep();
    out << "r=";
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (i) out << ",";
      out << elements[i];
    }
  }
  if (!submodules.empty()) {
    sep();
    out << "N=";
    for (std::size_t i = 0; i < submodules.size(); ++i) {
      if (i) out << ",";
      out << submodules[i].describe();
    }
  }
  return out.str();
}

std::string Verdict::to_string() const {
  switch (outcome_) {
    case Outcome::kHolds:
      return "Holds";
    case Outcome::kFails:
      return "Fails [" + witness_->to_string() + "]";
    case Outcome::kUnknown:
      return "Unknown up to " + bound_->get_str();
  }
  return "?";
}

PurityLevel::PurityLevel(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("PurityLevel: n must be >= 1");
}

}  // namespace npure
