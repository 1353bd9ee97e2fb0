#include "fpc/reduction.hpp"

#include <algorithm>
#include <functional>

namespace fpc {

namespace {

void push_unique(std::vector<FTerm>& out, FTerm t) {
  for (const auto& s : out) {
    if (alpha_equal(s, t)) return;
  }
  out.push_back(std::move(t));
}

void lift(std::vector<FTerm>& out, const FTerm& inner, const std::function<FTerm(FTerm)>& wrap) {
  for (auto& s : step_fpc(inner)) push_unique(out, wrap(std::move(s)));
}

}  // namespace

std::vector<FTerm> step_fpc(const FTerm& m) {
  std::vector<FTerm> out;
  m.visit([&](const auto& t) {
    using T = std::decay_t<decltype(t)>;
    if constexpr (std::is_same_v<T, Var>) {
      return;
    } else if constexpr (std::is_same_v<T, Inl>) {
      lift(out, t.body, [&](FTerm b) { return FTerm::inl(t.t, t.u, std::move(b)); });
    } else if constexpr (std::is_same_v<T, Inr>) {
      lift(out, t.body, [&](FTerm b) { return FTerm::inr(t.t, t.u, std::move(b)); });
    } else if constexpr (std::is_same_v<T, Case>) {
      if (auto l = t.scrutinee.template get_if<Inl>()) push_unique(out, subst(t.left, t.left_binder, l->body));
      if (auto r = t.scrutinee.template get_if<Inr>()) push_unique(out, subst(t.right, t.right_binder, r->body));
      lift(out, t.scrutinee,
           [&](FTerm s) { return FTerm::case_(std::move(s), t.left_binder, t.left, t.right_binder, t.right); });
    } else if constexpr (std::is_same_v<T, Pair>) {
      lift(out, t.first, [&](FTerm a) { return FTerm::pair(std::move(a), t.second); });
      lift(out, t.second, [&](FTerm b) { return FTerm::pair(t.first, std::move(b)); });
    } else if constexpr (std::is_same_v<T, Lam>) {
      lift(out, t.body, [&](FTerm b) { return FTerm::lam(t.binder, t.annotation, std::move(b)); });
    } else if constexpr (std::is_same_v<T, App>) {
      if (auto l = t.fun.template get_if<Lam>()) {
        push_unique(out, subst(l->body, l->binder, t.arg));
      } else {
        lift(out, t.fun, [&](FTerm f) { return FTerm::app(std::move(f), t.arg); });
      }
    } else if constexpr (std::is_same_v<T, Fst>) {
      if (auto p = t.arg.template get_if<Pair>()) push_unique(out, p->first);
      lift(out, t.arg, [](FTerm a) { return FTerm::fst(std::move(a)); });
    } else if constexpr (std::is_same_v<T, Snd>) {
      if (auto p = t.arg.template get_if<Pair>()) push_unique(out, p->second);
      lift(out, t.arg, [](FTerm a) { return FTerm::snd(std::move(a)); });
    } else if constexpr (std::is_same_v<T, Intro>) {
      lift(out, t.body, [&](FTerm b) { return FTerm::intro(t.mu_type, std::move(b)); });
    } else {
      if (auto i = t.arg.template get_if<Intro>()) push_unique(out, i->body);
      lift(out, t.arg, [](FTerm a) { return FTerm::elim(std::move(a)); });
    }
  });
  return out;
}

NormalizeResult normalize(const FTerm& m, std::size_t fuel) {
  FTerm current = m;
  for (std::size_t steps = 0;; ++steps) {
    auto next = step_fpc(current);
    if (next.empty()) return Normal{current, steps};
    if (steps == fuel) return OutOfFuel{current};
    current = next.front();
  }
}

}  // namespace fpc
