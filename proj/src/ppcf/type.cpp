#include "ppcf/type.hpp"

#include <stdexcept>

namespace ppcf {

struct PType::Arrow {
  PType domain;
  PType codomain;
};

PType PType::nat() { return PType(nullptr); }

PType PType::arrow(PType domain, PType codomain) {
  return PType(std::make_shared<const Arrow>(Arrow{std::move(domain), std::move(codomain)}));
}

const PType& PType::domain() const {
  if (!node_) throw std::logic_error("domain() of nat");
  return node_->domain;
}

const PType& PType::codomain() const {
  if (!node_) throw std::logic_error("codomain() of nat");
  return node_->codomain;
}

bool operator==(const PType& a, const PType& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.node_->domain == b.node_->domain && a.node_->codomain == b.node_->codomain;
}

std::string to_string(const PType& t) {
  if (t.is_nat()) return "nat";
  std::string dom = to_string(t.domain());
  if (t.domain().is_arrow()) dom = "(" + dom + ")";
  return dom + " -> " + to_string(t.codomain());
}

}  // namespace ppcf
