#include "ppcf/term.hpp"

#include <algorithm>
#include <functional>

namespace ppcf {

namespace {

using Names = std::vector<std::string>;

Names merge(const Names& a, const Names& b) {
  Names out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Names without(Names names, const std::string& x) {
  auto it = std::lower_bound(names.begin(), names.end(), x);
  if (it != names.end() && *it == x) names.erase(it);
  return names;
}

bool contains(const Names& names, const std::string& x) { return std::binary_search(names.begin(), names.end(), x); }

}  // namespace

Term Term::num(std::uint64_t n) { return Term(std::make_shared<const Node>(Node{Num{n}, {}})); }

Term Term::var(std::string name) {
  Names fv{name};
  return Term(std::make_shared<const Node>(Node{Var{std::move(name)}, std::move(fv)}));
}

Term Term::succ(Term arg) {
  Names fv = arg.free_vars();
  return Term(std::make_shared<const Node>(Node{Succ{std::move(arg)}, std::move(fv)}));
}

Term Term::if_(Term scrutinee, Term zero_branch, std::string binder, Term succ_branch) {
  Names fv = merge(merge(scrutinee.free_vars(), zero_branch.free_vars()), without(succ_branch.free_vars(), binder));
  return Term(std::make_shared<const Node>(
      Node{If{std::move(scrutinee), std::move(zero_branch), std::move(binder), std::move(succ_branch)}, std::move(fv)}));
}

Term Term::lam(std::string binder, PType annotation, Term body) {
  Names fv = without(body.free_vars(), binder);
  return Term(std::make_shared<const Node>(Node{Lam{std::move(binder), std::move(annotation), std::move(body)}, std::move(fv)}));
}

Term Term::app(Term fun, Term arg) {
  Names fv = merge(fun.free_vars(), arg.free_vars());
  return Term(std::make_shared<const Node>(Node{App{std::move(fun), std::move(arg)}, std::move(fv)}));
}

Term Term::coin(Prob kappa) { return Term(std::make_shared<const Node>(Node{Coin{std::move(kappa)}, {}})); }

Term Term::fix(Term body) {
  Names fv = body.free_vars();
  return Term(std::make_shared<const Node>(Node{Fix{std::move(body)}, std::move(fv)}));
}

const std::vector<std::string>& Term::free_vars() const { return node_->free_vars; }

bool Term::has_free(const std::string& name) const { return contains(node_->free_vars, name); }

// ---------------------------------------------------------------------------

namespace {

// Position of `name` counted from the innermost binder, or -1 when free.
long lookup(const Names& binders, const std::string& name) {
  for (std::size_t i = binders.size(); i-- > 0;) {
    if (binders[i] == name) return static_cast<long>(binders.size() - 1 - i);
  }
  return -1;
}

bool alpha_rec(const Term& a, const Term& b, Names& ba, Names& bb) {
  if (a.id() == b.id() && ba == bb) return true;
  if (auto x = a.get_if<Num>()) {
    auto y = b.get_if<Num>();
    return y && x->value == y->value;
  }
  if (auto x = a.get_if<Var>()) {
    auto y = b.get_if<Var>();
    if (!y) return false;
    long ia = lookup(ba, x->name);
    long ib = lookup(bb, y->name);
    if (ia != ib) return false;
    return ia >= 0 || x->name == y->name;
  }
  if (auto x = a.get_if<Coin>()) {
    auto y = b.get_if<Coin>();
    return y && x->kappa == y->kappa;
  }
  if (auto x = a.get_if<Succ>()) {
    auto y = b.get_if<Succ>();
    return y && alpha_rec(x->arg, y->arg, ba, bb);
  }
  if (auto x = a.get_if<Fix>()) {
    auto y = b.get_if<Fix>();
    return y && alpha_rec(x->body, y->body, ba, bb);
  }
  if (auto x = a.get_if<App>()) {
    auto y = b.get_if<App>();
    return y && alpha_rec(x->fun, y->fun, ba, bb) && alpha_rec(x->arg, y->arg, ba, bb);
  }
  if (auto x = a.get_if<Lam>()) {
    auto y = b.get_if<Lam>();
    if (!y || !(x->annotation == y->annotation)) return false;
    ba.push_back(x->binder);
    bb.push_back(y->binder);
    bool ok = alpha_rec(x->body, y->body, ba, bb);
    ba.pop_back();
    bb.pop_back();
    return ok;
  }
  auto x = a.get_if<If>();
  auto y = b.get_if<If>();
  if (!x || !y) return false;
  if (!alpha_rec(x->scrutinee, y->scrutinee, ba, bb) || !alpha_rec(x->zero_branch, y->zero_branch, ba, bb))
    return false;
  ba.push_back(x->binder);
  bb.push_back(y->binder);
  bool ok = alpha_rec(x->succ_branch, y->succ_branch, ba, bb);
  ba.pop_back();
  bb.pop_back();
  return ok;
}

void key_rec(const Term& m, Names& binders, std::string& out) {
  m.visit([&](const auto& n) {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, Num>) {
      out += 'N';
      out += std::to_string(n.value);
    } else if constexpr (std::is_same_v<T, Var>) {
      long i = lookup(binders, n.name);
      if (i >= 0) {
        out += '#';
        out += std::to_string(i);
      } else {
        out += '$';
        out += n.name;
        out += ';';
      }
    } else if constexpr (std::is_same_v<T, Coin>) {
      out += "C";
      out += kegel::to_string(n.kappa.value());
      out += ';';
    } else if constexpr (std::is_same_v<T, Succ>) {
      out += "S(";
      key_rec(n.arg, binders, out);
      out += ')';
    } else if constexpr (std::is_same_v<T, Fix>) {
      out += "F(";
      key_rec(n.body, binders, out);
      out += ')';
    } else if constexpr (std::is_same_v<T, App>) {
      out += "A(";
      key_rec(n.fun, binders, out);
      out += ',';
      key_rec(n.arg, binders, out);
      out += ')';
    } else if constexpr (std::is_same_v<T, Lam>) {
      out += "L[";
      out += to_string(n.annotation);
      out += "](";
      binders.push_back(n.binder);
      key_rec(n.body, binders, out);
      binders.pop_back();
      out += ')';
    } else {
      out += "I(";
      key_rec(n.scrutinee, binders, out);
      out += ',';
      key_rec(n.zero_branch, binders, out);
      out += ',';
      binders.push_back(n.binder);
      key_rec(n.succ_branch, binders, out);
      binders.pop_back();
      out += ')';
    }
  });
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  Names ba, bb;
  return alpha_rec(a, b, ba, bb);
}

std::string alpha_key(const Term& m) {
  Names binders;
  std::string out;
  key_rec(m, binders, out);
  return out;
}

std::string fresh_name(const std::string& base, std::span<const std::string> taken) {
  auto used = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
  if (!used(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!used(candidate)) return candidate;
  }
}

namespace {

// Renames `binder` in `body` when it would capture a free variable of `n`.
std::pair<std::string, Term> avoid_capture(const std::string& binder, const Term& body, const std::string& x,
                                           const Term& n) {
  if (!n.has_free(binder)) return {binder, body};
  Names taken = merge(n.free_vars(), body.free_vars());
  taken.push_back(x);
  std::string fresh = fresh_name(binder, taken);
  return {fresh, subst(body, binder, Term::var(fresh))};
}

}  // namespace

Term subst(const Term& m, const std::string& x, const Term& n) {
  if (!m.has_free(x)) return m;
  return m.visit([&](const auto& node) -> Term {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Var>) {
      return n;
    } else if constexpr (std::is_same_v<T, Succ>) {
      return Term::succ(subst(node.arg, x, n));
    } else if constexpr (std::is_same_v<T, Fix>) {
      return Term::fix(subst(node.body, x, n));
    } else if constexpr (std::is_same_v<T, App>) {
      return Term::app(subst(node.fun, x, n), subst(node.arg, x, n));
    } else if constexpr (std::is_same_v<T, Lam>) {
      auto [binder, body] = avoid_capture(node.binder, node.body, x, n);
      return Term::lam(binder, node.annotation, subst(body, x, n));
    } else if constexpr (std::is_same_v<T, If>) {
      Term scrutinee = subst(node.scrutinee, x, n);
      Term zero = subst(node.zero_branch, x, n);
      if (node.binder == x) return Term::if_(scrutinee, zero, node.binder, node.succ_branch);
      auto [binder, body] = avoid_capture(node.binder, node.succ_branch, x, n);
      return Term::if_(scrutinee, zero, binder, subst(body, x, n));
    } else {
      // Num and Coin are closed and were returned above.
      return m;
    }
  });
}

Term desugar_pred() {
  return Term::lam("x", PType::nat(), Term::if_(Term::var("x"), Term::num(0), "z", Term::var("z")));
}

Term desugar_choice(const Term& m, const Prob& kappa, const Term& n) {
  std::string z = fresh_name("z", n.free_vars());
  return Term::if_(Term::coin(kappa), m, z, n);
}

Term desugar_let(const std::string& x, const Term& m, const Term& n) {
  Names taken = n.free_vars();
  taken.push_back(x);
  std::string z = fresh_name("z", taken);
  return Term::if_(m, subst(n, x, Term::num(0)), z, subst(n, x, Term::succ(Term::var(z))));
}

namespace {

bool prints_atomic(const Term& m) { return !m.get_if<Lam>() && !m.get_if<App>(); }

void pretty_rec(const Term& m, std::string& out) {
  m.visit([&](const auto& n) {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, Num>) {
      out += std::to_string(n.value);
    } else if constexpr (std::is_same_v<T, Var>) {
      out += n.name;
    } else if constexpr (std::is_same_v<T, Coin>) {
      out += "coin(" + kegel::to_string(n.kappa.value()) + ")";
    } else if constexpr (std::is_same_v<T, Succ>) {
      out += "succ(";
      pretty_rec(n.arg, out);
      out += ')';
    } else if constexpr (std::is_same_v<T, Fix>) {
      out += "fix(";
      pretty_rec(n.body, out);
      out += ')';
    } else if constexpr (std::is_same_v<T, App>) {
      out += '(';
      pretty_rec(n.fun, out);
      out += ')';
      if (prints_atomic(n.arg)) {
        pretty_rec(n.arg, out);
      } else {
        out += '(';
        pretty_rec(n.arg, out);
        out += ')';
      }
    } else if constexpr (std::is_same_v<T, Lam>) {
      out += "\\" + n.binder + ":" + to_string(n.annotation) + ". ";
      pretty_rec(n.body, out);
    } else {
      out += "if(";
      pretty_rec(n.scrutinee, out);
      out += ", ";
      pretty_rec(n.zero_branch, out);
      out += ", " + n.binder + ". ";
      pretty_rec(n.succ_branch, out);
      out += ')';
    }
  });
}

}  // namespace

std::string pretty(const Term& m) {
  std::string out;
  pretty_rec(m, out);
  return out;
}

bool is_value(const Term& m) { return m.get_if<Num>() || m.get_if<Lam>(); }

std::size_t term_size(const Term& m) {
  return m.visit([](const auto& n) -> std::size_t {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, Succ>) {
      return 1 + term_size(n.arg);
    } else if constexpr (std::is_same_v<T, Fix>) {
      return 1 + term_size(n.body);
    } else if constexpr (std::is_same_v<T, App>) {
      return 1 + term_size(n.fun) + term_size(n.arg);
    } else if constexpr (std::is_same_v<T, Lam>) {
      return 1 + term_size(n.body);
    } else if constexpr (std::is_same_v<T, If>) {
      return 1 + term_size(n.scrutinee) + term_size(n.zero_branch) + term_size(n.succ_branch);
    } else {
      return 1;
    }
  });
}

}  // namespace ppcf
