#include "fpc/term.hpp"

#include <algorithm>

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

FTerm FTerm::var(std::string name) {
  Names fv{name};
  return FTerm(std::make_shared<const Node>(Node{Var{std::move(name)}, std::move(fv)}));
}

FTerm FTerm::inl(FType t, FType u, FTerm body) {
  Names fv = body.free_vars();
  return FTerm(std::make_shared<const Node>(Node{Inl{std::move(t), std::move(u), std::move(body)}, std::move(fv)}));
}

FTerm FTerm::inr(FType t, FType u, FTerm body) {
  Names fv = body.free_vars();
  return FTerm(std::make_shared<const Node>(Node{Inr{std::move(t), std::move(u), std::move(body)}, std::move(fv)}));
}

FTerm FTerm::case_(FTerm scrutinee, std::string left_binder, FTerm left, std::string right_binder, FTerm right) {
  Names fv = merge(scrutinee.free_vars(),
                   merge(without(left.free_vars(), left_binder), without(right.free_vars(), right_binder)));
  return FTerm(std::make_shared<const Node>(Node{
      Case{std::move(scrutinee), std::move(left_binder), std::move(left), std::move(right_binder), std::move(right)},
      std::move(fv)}));
}

FTerm FTerm::pair(FTerm first, FTerm second) {
  Names fv = merge(first.free_vars(), second.free_vars());
  return FTerm(std::make_shared<const Node>(Node{Pair{std::move(first), std::move(second)}, std::move(fv)}));
}

FTerm FTerm::lam(std::string binder, FType annotation, FTerm body) {
  Names fv = without(body.free_vars(), binder);
  return FTerm(std::make_shared<const Node>(
      Node{Lam{std::move(binder), std::move(annotation), std::move(body)}, std::move(fv)}));
}

FTerm FTerm::app(FTerm fun, FTerm arg) {
  Names fv = merge(fun.free_vars(), arg.free_vars());
  return FTerm(std::make_shared<const Node>(Node{App{std::move(fun), std::move(arg)}, std::move(fv)}));
}

FTerm FTerm::fst(FTerm arg) {
  Names fv = arg.free_vars();
  return FTerm(std::make_shared<const Node>(Node{Fst{std::move(arg)}, std::move(fv)}));
}

FTerm FTerm::snd(FTerm arg) {
  Names fv = arg.free_vars();
  return FTerm(std::make_shared<const Node>(Node{Snd{std::move(arg)}, std::move(fv)}));
}

FTerm FTerm::intro(FType mu_type, FTerm body) {
  Names fv = body.free_vars();
  return FTerm(std::make_shared<const Node>(Node{Intro{std::move(mu_type), std::move(body)}, std::move(fv)}));
}

FTerm FTerm::elim(FTerm arg) {
  Names fv = arg.free_vars();
  return FTerm(std::make_shared<const Node>(Node{Elim{std::move(arg)}, std::move(fv)}));
}

const std::vector<std::string>& FTerm::free_vars() const { return node_->free_vars; }

bool FTerm::has_free(const std::string& name) const {
  return std::binary_search(node_->free_vars.begin(), node_->free_vars.end(), name);
}

namespace {

long lookup(const Names& binders, const std::string& name) {
  for (std::size_t i = binders.size(); i-- > 0;) {
    if (binders[i] == name) return static_cast<long>(binders.size() - 1 - i);
  }
  return -1;
}

struct AlphaEq {
  Names ba, bb;

  bool under(const std::string& x, const FTerm& a, const std::string& y, const FTerm& b) {
    ba.push_back(x);
    bb.push_back(y);
    bool ok = eq(a, b);
    ba.pop_back();
    bb.pop_back();
    return ok;
  }

  bool eq(const FTerm& a, const FTerm& b) {
    if (auto x = a.get_if<Var>()) {
      auto y = b.get_if<Var>();
      if (!y) return false;
      long i = lookup(ba, x->name), j = lookup(bb, y->name);
      return i == j && (i >= 0 || x->name == y->name);
    }
    if (auto x = a.get_if<Inl>()) {
      auto y = b.get_if<Inl>();
      return y && type_equal(x->t, y->t) && type_equal(x->u, y->u) && eq(x->body, y->body);
    }
    if (auto x = a.get_if<Inr>()) {
      auto y = b.get_if<Inr>();
      return y && type_equal(x->t, y->t) && type_equal(x->u, y->u) && eq(x->body, y->body);
    }
    if (auto x = a.get_if<Case>()) {
      auto y = b.get_if<Case>();
      return y && eq(x->scrutinee, y->scrutinee) && under(x->left_binder, x->left, y->left_binder, y->left) &&
             under(x->right_binder, x->right, y->right_binder, y->right);
    }
    if (auto x = a.get_if<Pair>()) {
      auto y = b.get_if<Pair>();
      return y && eq(x->first, y->first) && eq(x->second, y->second);
    }
    if (auto x = a.get_if<Lam>()) {
      auto y = b.get_if<Lam>();
      return y && type_equal(x->annotation, y->annotation) && under(x->binder, x->body, y->binder, y->body);
    }
    if (auto x = a.get_if<App>()) {
      auto y = b.get_if<App>();
      return y && eq(x->fun, y->fun) && eq(x->arg, y->arg);
    }
    if (auto x = a.get_if<Fst>()) {
      auto y = b.get_if<Fst>();
      return y && eq(x->arg, y->arg);
    }
    if (auto x = a.get_if<Snd>()) {
      auto y = b.get_if<Snd>();
      return y && eq(x->arg, y->arg);
    }
    if (auto x = a.get_if<Intro>()) {
      auto y = b.get_if<Intro>();
      return y && type_equal(x->mu_type, y->mu_type) && eq(x->body, y->body);
    }
    auto x = a.get_if<Elim>();
    auto y = b.get_if<Elim>();
    return x && y && eq(x->arg, y->arg);
  }
};

// Substitution under a binder; renames the binder when it would capture.
std::pair<std::string, FTerm> subst_under(const std::string& binder, const FTerm& body, const std::string& x,
                                          const FTerm& n) {
  if (binder == x || !body.has_free(x)) return {binder, body};
  if (!n.has_free(binder)) return {binder, subst(body, x, n)};
  Names taken = merge(n.free_vars(), body.free_vars());
  taken.push_back(x);
  std::string fresh = fresh_name(binder, taken);
  return {fresh, subst(subst(body, binder, FTerm::var(fresh)), x, n)};
}

}  // namespace

bool alpha_equal(const FTerm& a, const FTerm& b) { return AlphaEq{}.eq(a, b); }

FTerm subst(const FTerm& m, const std::string& x, const FTerm& n) {
  if (!m.has_free(x)) return m;
  return m.visit([&](const auto& t) -> FTerm {
    using T = std::decay_t<decltype(t)>;
    if constexpr (std::is_same_v<T, Var>) {
      return n;
    } else if constexpr (std::is_same_v<T, Inl>) {
      return FTerm::inl(t.t, t.u, subst(t.body, x, n));
    } else if constexpr (std::is_same_v<T, Inr>) {
      return FTerm::inr(t.t, t.u, subst(t.body, x, n));
    } else if constexpr (std::is_same_v<T, Case>) {
      auto [lb, l] = subst_under(t.left_binder, t.left, x, n);
      auto [rb, r] = subst_under(t.right_binder, t.right, x, n);
      return FTerm::case_(subst(t.scrutinee, x, n), lb, l, rb, r);
    } else if constexpr (std::is_same_v<T, Pair>) {
      return FTerm::pair(subst(t.first, x, n), subst(t.second, x, n));
    } else if constexpr (std::is_same_v<T, Lam>) {
      auto [b, body] = subst_under(t.binder, t.body, x, n);
      return FTerm::lam(b, t.annotation, body);
    } else if constexpr (std::is_same_v<T, App>) {
      return FTerm::app(subst(t.fun, x, n), subst(t.arg, x, n));
    } else if constexpr (std::is_same_v<T, Fst>) {
      return FTerm::fst(subst(t.arg, x, n));
    } else if constexpr (std::is_same_v<T, Snd>) {
      return FTerm::snd(subst(t.arg, x, n));
    } else if constexpr (std::is_same_v<T, Intro>) {
      return FTerm::intro(t.mu_type, subst(t.body, x, n));
    } else {
      return FTerm::elim(subst(t.arg, x, n));
    }
  });
}

bool is_value(const FTerm& m) {
  if (auto p = m.get_if<Pair>()) return is_value(p->first) && is_value(p->second);
  if (auto l = m.get_if<Inl>()) return is_value(l->body);
  if (auto r = m.get_if<Inr>()) return is_value(r->body);
  return m.get_if<Intro>() || m.get_if<Lam>();
}

std::size_t term_size(const FTerm& m) {
  return m.visit([](const auto& t) -> std::size_t {
    using T = std::decay_t<decltype(t)>;
    if constexpr (std::is_same_v<T, Var>) {
      return 1;
    } else if constexpr (std::is_same_v<T, Case>) {
      return 1 + term_size(t.scrutinee) + term_size(t.left) + term_size(t.right);
    } else if constexpr (std::is_same_v<T, Pair>) {
      return 1 + term_size(t.first) + term_size(t.second);
    } else if constexpr (std::is_same_v<T, App>) {
      return 1 + term_size(t.fun) + term_size(t.arg);
    } else if constexpr (std::is_same_v<T, Inl> || std::is_same_v<T, Inr> || std::is_same_v<T, Lam> ||
                         std::is_same_v<T, Intro>) {
      return 1 + term_size(t.body);
    } else {
      return 1 + term_size(t.arg);
    }
  });
}

namespace {

bool atomic(const FTerm& m) { return !m.get_if<Lam>() && !m.get_if<App>() && !m.get_if<Case>(); }

void print_rec(const FTerm& m, std::string& out);

void print_atom(const FTerm& m, std::string& out) {
  if (atomic(m)) {
    print_rec(m, out);
  } else {
    out += '(';
    print_rec(m, out);
    out += ')';
  }
}

void print_rec(const FTerm& m, std::string& out) {
  m.visit([&](const auto& t) {
    using T = std::decay_t<decltype(t)>;
    if constexpr (std::is_same_v<T, Var>) {
      out += t.name;
    } else if constexpr (std::is_same_v<T, Inl> || std::is_same_v<T, Inr>) {
      out += std::is_same_v<T, Inl> ? "inl[" : "inr[";
      out += to_string(t.t) + ", " + to_string(t.u) + "](";
      print_rec(t.body, out);
      out += ')';
    } else if constexpr (std::is_same_v<T, Case>) {
      out += "case ";
      print_rec(t.scrutinee, out);
      out += " of inl " + t.left_binder + " => ";
      print_rec(t.left, out);
      out += " | inr " + t.right_binder + " => ";
      print_rec(t.right, out);
    } else if constexpr (std::is_same_v<T, Pair>) {
      out += '(';
      print_rec(t.first, out);
      out += ", ";
      print_rec(t.second, out);
      out += ')';
    } else if constexpr (std::is_same_v<T, Lam>) {
      out += "\\" + t.binder + ":" + to_string(t.annotation) + ". ";
      print_rec(t.body, out);
    } else if constexpr (std::is_same_v<T, App>) {
      out += '(';
      print_rec(t.fun, out);
      out += ')';
      print_atom(t.arg, out);
    } else if constexpr (std::is_same_v<T, Fst> || std::is_same_v<T, Snd> || std::is_same_v<T, Elim>) {
      out += std::is_same_v<T, Fst> ? "fst(" : std::is_same_v<T, Snd> ? "snd(" : "elim(";
      print_rec(t.arg, out);
      out += ')';
    } else {
      out += "intro[" + to_string(t.mu_type) + "](";
      print_rec(t.body, out);
      out += ')';
    }
  });
}

}  // namespace

std::string pretty(const FTerm& m) {
  std::string out;
  print_rec(m, out);
  return out;
}

FTerm unit_value() { return FTerm::lam("x", FType::zero(), FTerm::var("x")); }

FTerm nat_zero() {
  return FTerm::intro(FType::nat(), FTerm::inl(FType::unit(), FType::nat(), unit_value()));
}

FTerm nat_succ(FTerm m) { return FTerm::intro(FType::nat(), FTerm::inr(FType::nat(), FType::unit(), std::move(m))); }

}  // namespace fpc
