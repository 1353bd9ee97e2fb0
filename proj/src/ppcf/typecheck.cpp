#include "ppcf/typecheck.hpp"

namespace ppcf {

TypingCtx TypingCtx::extend(std::string name, PType type) const {
  TypingCtx out = *this;
  out.entries_.emplace_back(std::move(name), std::move(type));
  return out;
}

const PType* TypingCtx::lookup(const std::string& name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->first == name) return &it->second;
  }
  return nullptr;
}

TypeError::TypeError(std::string rule, std::string path, const std::string& detail)
    : std::runtime_error("rule '" + rule + "' at " + (path.empty() ? std::string("<root>") : path) + ": " + detail),
      rule_(std::move(rule)),
      path_(std::move(path)) {}

namespace {

std::string child(const std::string& path, const char* step) { return path.empty() ? step : path + "/" + step; }

TypedNode check(const TypingCtx& ctx, const Term& m, const std::string& path) {
  return m.visit([&](const auto& n) -> TypedNode {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, Num>) {
      return {PType::nat(), {}};
    } else if constexpr (std::is_same_v<T, Coin>) {
      return {PType::nat(), {}};
    } else if constexpr (std::is_same_v<T, Var>) {
      const PType* t = ctx.lookup(n.name);
      if (!t) throw TypeError("var", path, "unbound variable '" + n.name + "'");
      return {*t, {}};
    } else if constexpr (std::is_same_v<T, Succ>) {
      TypedNode a = check(ctx, n.arg, child(path, "succ.arg"));
      if (!a.type.is_nat()) throw TypeError("succ", path, "argument has type " + to_string(a.type) + ", not nat");
      return {PType::nat(), {std::move(a)}};
    } else if constexpr (std::is_same_v<T, Lam>) {
      TypedNode b = check(ctx.extend(n.binder, n.annotation), n.body, child(path, "lam.body"));
      PType t = PType::arrow(n.annotation, b.type);
      return {t, {std::move(b)}};
    } else if constexpr (std::is_same_v<T, App>) {
      TypedNode f = check(ctx, n.fun, child(path, "app.fun"));
      if (!f.type.is_arrow()) throw TypeError("app", path, "applying a term of type " + to_string(f.type));
      TypedNode a = check(ctx, n.arg, child(path, "app.arg"));
      if (!(a.type == f.type.domain())) {
        throw TypeError("app", path,
                        "argument has type " + to_string(a.type) + ", expected " + to_string(f.type.domain()));
      }
      PType t = f.type.codomain();
      return {t, {std::move(f), std::move(a)}};
    } else if constexpr (std::is_same_v<T, Fix>) {
      TypedNode b = check(ctx, n.body, child(path, "fix.body"));
      if (!b.type.is_arrow() || !(b.type.domain() == b.type.codomain()))
        throw TypeError("fix", path, "body has type " + to_string(b.type) + ", expected t -> t");
      PType t = b.type.domain();
      return {t, {std::move(b)}};
    } else {
      TypedNode s = check(ctx, n.scrutinee, child(path, "if.scrutinee"));
      if (!s.type.is_nat()) throw TypeError("if", path, "scrutinee has type " + to_string(s.type) + ", not nat");
      TypedNode z = check(ctx, n.zero_branch, child(path, "if.zero"));
      TypedNode q = check(ctx.extend(n.binder, PType::nat()), n.succ_branch, child(path, "if.succ"));
      if (!(z.type == q.type)) {
        throw TypeError("if", path, "branches have types " + to_string(z.type) + " and " + to_string(q.type));
      }
      PType t = z.type;
      return {t, {std::move(s), std::move(z), std::move(q)}};
    }
  });
}

}  // namespace

TypedNode annotate(const TypingCtx& ctx, const Term& m) { return check(ctx, m, ""); }

PType typecheck(const TypingCtx& ctx, const Term& m) { return annotate(ctx, m).type; }

}  // namespace ppcf
