#include "fpc/type.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpc {

namespace {

using Names = std::vector<std::string>;

Names merge(const Names& a, const Names& b) {
  Names out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Names without(Names names, const std::string& x) {
  auto it = std::lower_bound(names.begin(), names.end(), x);
  if (it != names.end() && *it == x) names.erase(it);
  return names;
}

}  // namespace

FType FType::var(std::string name) {
  Names fv{name};
  return FType(std::make_shared<const Node>(Node{TVar{std::move(name)}, std::move(fv)}));
}

FType FType::sum(FType left, FType right) {
  Names fv = merge(left.free_vars(), right.free_vars());
  return FType(std::make_shared<const Node>(Node{Sum{std::move(left), std::move(right)}, std::move(fv)}));
}

FType FType::prod(FType left, FType right) {
  Names fv = merge(left.free_vars(), right.free_vars());
  return FType(std::make_shared<const Node>(Node{Prod{std::move(left), std::move(right)}, std::move(fv)}));
}

FType FType::arrow(FType domain, FType codomain) {
  Names fv = merge(domain.free_vars(), codomain.free_vars());
  return FType(std::make_shared<const Node>(Node{Arrow{std::move(domain), std::move(codomain)}, std::move(fv)}));
}

FType FType::mu(std::string binder, FType body) {
  Names fv = without(body.free_vars(), binder);
  return FType(std::make_shared<const Node>(Node{Mu{std::move(binder), std::move(body)}, std::move(fv)}));
}

FType FType::zero() { return mu("X", var("X")); }
FType FType::unit() { return arrow(zero(), zero()); }
FType FType::nat() { return mu("X", sum(unit(), var("X"))); }

const std::vector<std::string>& FType::free_vars() const { return node_->free_vars; }

bool FType::has_free(const std::string& name) const {
  return std::binary_search(node_->free_vars.begin(), node_->free_vars.end(), name);
}

namespace {

bool wf_rec(const TypeCtx& theta, const FType& t) {
  return t.visit([&](const auto& n) -> bool {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, TVar>) {
      return std::find(theta.begin(), theta.end(), n.name) != theta.end();
    } else if constexpr (std::is_same_v<T, Mu>) {
      TypeCtx inner = theta;
      inner.push_back(n.binder);
      return wf_rec(inner, n.body);
    } else if constexpr (std::is_same_v<T, Arrow>) {
      return wf_rec(theta, n.domain) && wf_rec(theta, n.codomain);
    } else {
      return wf_rec(theta, n.left) && wf_rec(theta, n.right);
    }
  });
}

}  // namespace

bool wf_type(const TypeCtx& theta, const FType& t) { return wf_rec(theta, t); }

std::string fresh_name(const std::string& base, std::span<const std::string> taken) {
  auto used = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
  if (!used(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!used(candidate)) return candidate;
  }
}

FType type_subst(const FType& t, const std::string& x, const FType& u) {
  if (!t.has_free(x)) return t;
  return t.visit([&](const auto& n) -> FType {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, TVar>) {
      return u;
    } else if constexpr (std::is_same_v<T, Sum>) {
      return FType::sum(type_subst(n.left, x, u), type_subst(n.right, x, u));
    } else if constexpr (std::is_same_v<T, Prod>) {
      return FType::prod(type_subst(n.left, x, u), type_subst(n.right, x, u));
    } else if constexpr (std::is_same_v<T, Arrow>) {
      return FType::arrow(type_subst(n.domain, x, u), type_subst(n.codomain, x, u));
    } else {
      if (!u.has_free(n.binder)) return FType::mu(n.binder, type_subst(n.body, x, u));
      Names taken = merge(u.free_vars(), n.body.free_vars());
      taken.push_back(x);
      std::string fresh = fresh_name(n.binder, taken);
      FType body = type_subst(n.body, n.binder, FType::var(fresh));
      return FType::mu(fresh, type_subst(body, x, u));
    }
  });
}

FType unfold(const FType& mu_type) {
  auto m = mu_type.get_if<Mu>();
  if (!m) throw std::invalid_argument("unfold of a non-recursive type " + to_string(mu_type));
  return type_subst(m->body, m->binder, mu_type);
}

namespace {

long lookup(const Names& binders, const std::string& name) {
  for (std::size_t i = binders.size(); i-- > 0;) {
    if (binders[i] == name) return static_cast<long>(binders.size() - 1 - i);
  }
  return -1;
}

bool equal_rec(const FType& a, const FType& b, Names& ba, Names& bb) {
  if (auto x = a.get_if<TVar>()) {
    auto y = b.get_if<TVar>();
    if (!y) return false;
    long i = lookup(ba, x->name), j = lookup(bb, y->name);
    return i == j && (i >= 0 || x->name == y->name);
  }
  if (auto x = a.get_if<Sum>()) {
    auto y = b.get_if<Sum>();
    return y && equal_rec(x->left, y->left, ba, bb) && equal_rec(x->right, y->right, ba, bb);
  }
  if (auto x = a.get_if<Prod>()) {
    auto y = b.get_if<Prod>();
    return y && equal_rec(x->left, y->left, ba, bb) && equal_rec(x->right, y->right, ba, bb);
  }
  if (auto x = a.get_if<Arrow>()) {
    auto y = b.get_if<Arrow>();
    return y && equal_rec(x->domain, y->domain, ba, bb) && equal_rec(x->codomain, y->codomain, ba, bb);
  }
  auto x = a.get_if<Mu>();
  auto y = b.get_if<Mu>();
  if (!x || !y) return false;
  ba.push_back(x->binder);
  bb.push_back(y->binder);
  bool ok = equal_rec(x->body, y->body, ba, bb);
  ba.pop_back();
  bb.pop_back();
  return ok;
}

// Precedence: 0 arrow / mu, 1 sum, 2 product, 3 atom.
void print_rec(const FType& t, int prec, std::string& out) {
  if (type_equal(t, FType::zero())) {
    out += "0";
    return;
  }
  auto open = [&](int level) {
    if (prec > level) out += '(';
  };
  auto close = [&](int level) {
    if (prec > level) out += ')';
  };
  t.visit([&](const auto& n) {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, TVar>) {
      out += n.name;
    } else if constexpr (std::is_same_v<T, Sum>) {
      open(1);
      print_rec(n.left, 1, out);
      out += " + ";
      print_rec(n.right, 2, out);
      close(1);
    } else if constexpr (std::is_same_v<T, Prod>) {
      open(2);
      print_rec(n.left, 2, out);
      out += " * ";
      print_rec(n.right, 3, out);
      close(2);
    } else if constexpr (std::is_same_v<T, Arrow>) {
      open(0);
      print_rec(n.domain, 1, out);
      out += " -> ";
      print_rec(n.codomain, 0, out);
      close(0);
    } else {
      open(0);
      out += "mu " + n.binder + ". ";
      print_rec(n.body, 0, out);
      close(0);
    }
  });
}

}  // namespace

bool type_equal(const FType& a, const FType& b) {
  Names ba, bb;
  return equal_rec(a, b, ba, bb);
}

std::string to_string(const FType& t) {
  std::string out;
  print_rec(t, 0, out);
  return out;
}

}  // namespace fpc
