#include "fpc/typecheck.hpp"

namespace fpc {

TypeError::TypeError(std::string rule, std::string path, const std::string& detail)
    : std::runtime_error("type error [" + rule + "] at " + (path.empty() ? "<root>" : path) + ": " + detail),
      rule_(std::move(rule)),
      path_(std::move(path)) {}

namespace {

struct Checker {
  const TypeCtx& theta;
  TermCtx gamma;

  static std::string join(const std::string& path, const char* step) {
    return path.empty() ? step : path + "/" + step;
  }

  void require_wf(const FType& t, const char* rule, const std::string& path) {
    if (!wf_type(theta, t)) throw TypeError(rule, path, "ill-formed type " + to_string(t));
  }

  void expect(const FType& got, const FType& want, const char* rule, const std::string& path) {
    if (!type_equal(got, want)) {
      throw TypeError(rule, path, "expected " + to_string(want) + ", found " + to_string(got));
    }
  }

  FType under(const std::string& x, const FType& t, const FTerm& body, const std::string& path) {
    gamma.emplace_back(x, t);
    FType result = check(body, path);
    gamma.pop_back();
    return result;
  }

  FType check(const FTerm& m, const std::string& path) {
    if (auto v = m.get_if<Var>()) {
      for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) {
        if (it->first == v->name) return it->second;
      }
      throw TypeError("var", path, "unbound variable " + v->name);
    }
    if (auto l = m.get_if<Inl>()) {
      require_wf(l->t, "inl", path);
      require_wf(l->u, "inl", path);
      expect(check(l->body, join(path, "inl.body")), l->t, "inl", join(path, "inl.body"));
      return FType::sum(l->t, l->u);
    }
    if (auto r = m.get_if<Inr>()) {
      require_wf(r->t, "inr", path);
      require_wf(r->u, "inr", path);
      expect(check(r->body, join(path, "inr.body")), r->t, "inr", join(path, "inr.body"));
      return FType::sum(r->u, r->t);
    }
    if (auto c = m.get_if<Case>()) {
      FType s = check(c->scrutinee, join(path, "case.scrutinee"));
      auto sum = s.get_if<Sum>();
      if (!sum) throw TypeError("case", join(path, "case.scrutinee"), "expected a sum type, found " + to_string(s));
      FType left = under(c->left_binder, sum->left, c->left, join(path, "case.inl"));
      FType right = under(c->right_binder, sum->right, c->right, join(path, "case.inr"));
      expect(right, left, "case", join(path, "case.inr"));
      return left;
    }
    if (auto p = m.get_if<Pair>()) {
      FType a = check(p->first, join(path, "pair.fst"));
      FType b = check(p->second, join(path, "pair.snd"));
      return FType::prod(a, b);
    }
    if (auto l = m.get_if<Lam>()) {
      require_wf(l->annotation, "lam", path);
      return FType::arrow(l->annotation, under(l->binder, l->annotation, l->body, join(path, "lam.body")));
    }
    if (auto a = m.get_if<App>()) {
      FType f = check(a->fun, join(path, "app.fun"));
      auto arrow = f.get_if<Arrow>();
      if (!arrow) throw TypeError("app", join(path, "app.fun"), "expected a function type, found " + to_string(f));
      expect(check(a->arg, join(path, "app.arg")), arrow->domain, "app", join(path, "app.arg"));
      return arrow->codomain;
    }
    if (auto f = m.get_if<Fst>()) {
      FType t = check(f->arg, join(path, "fst.arg"));
      auto prod = t.get_if<Prod>();
      if (!prod) throw TypeError("fst", join(path, "fst.arg"), "expected a product type, found " + to_string(t));
      return prod->left;
    }
    if (auto s = m.get_if<Snd>()) {
      FType t = check(s->arg, join(path, "snd.arg"));
      auto prod = t.get_if<Prod>();
      if (!prod) throw TypeError("snd", join(path, "snd.arg"), "expected a product type, found " + to_string(t));
      return prod->right;
    }
    if (auto i = m.get_if<Intro>()) {
      require_wf(i->mu_type, "intro", path);
      if (!i->mu_type.get_if<Mu>()) {
        throw TypeError("intro", path, "annotation is not a recursive type: " + to_string(i->mu_type));
      }
      expect(check(i->body, join(path, "intro.body")), unfold(i->mu_type), "intro", join(path, "intro.body"));
      return i->mu_type;
    }
    auto e = m.get_if<Elim>();
    FType t = check(e->arg, join(path, "elim.arg"));
    if (!t.get_if<Mu>()) throw TypeError("elim", join(path, "elim.arg"), "expected a recursive type, found " + to_string(t));
    return unfold(t);
  }
};

}  // namespace

FType typecheck_fpc(const TypeCtx& theta, const TermCtx& gamma, const FTerm& m) {
  Checker checker{theta, gamma};
  return checker.check(m, "");
}

}  // namespace fpc
