#include "pla/inequalities.hpp"

#include <algorithm>
#include <functional>

#include "pla/charpoly.hpp"

namespace pla {

namespace {

using LinFn = std::function<LinearForm(int n, int m)>;
using EvalFn = std::function<Rational(int n, const TVector& t, const Facts& f)>;
using GateFn = std::function<Tri(int n, int m, const Facts& f)>;

struct Part {
  std::string label;
  Direction dir = Direction::Ge;
  LinFn lin;
  EvalFn eval;
  std::function<bool(int n, int m)> gate;
  std::int64_t modulus = 0;
  std::int64_t forbidden = 0;
};

struct Constraint {
  ConstraintInfo info;
  std::vector<Part> parts;
  GateFn extra;
  std::string extra_text;
};

Tri tri(std::optional<bool> b) { return b ? (*b ? Tri::Yes : Tri::No) : Tri::Unknown; }
Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }

Tri tri_not(Tri a) {
  if (a == Tri::Unknown) return a;
  return a == Tri::Yes ? Tri::No : Tri::Yes;
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::Yes;
}

Tri class_applies(Applicability a, const Facts& f) {
  switch (a) {
    case Applicability::All:
      return Tri::Yes;
    case Applicability::SimplicialNontrivial:
      return tri_and(tri(f.simplicial), tri_not(tri(f.trivial)));
    case Applicability::SplitsOverR:
      return tri(f.splits);
    case Applicability::SimplicialAndSplits:
      return tri_and(tri_and(tri(f.simplicial), tri(f.splits)), tri_not(tri(f.trivial)));
    case Applicability::ExternalAssumed:
      return tri(f.include_external);
    case Applicability::StretchableOnly:
      return tri(f.stretchable);
  }
  return Tri::No;
}

std::string class_requirement(Applicability a) {
  switch (a) {
    case Applicability::All:
      return "";
    case Applicability::SimplicialNontrivial:
      return "requires a simplicial arrangement that is not trivial (near pencil or triangle)";
    case Applicability::SplitsOverR:
      return "requires a characteristic polynomial that splits over R";
    case Applicability::SimplicialAndSplits:
      return "requires simplicial, splitting over R, and not trivial";
    case Applicability::ExternalAssumed:
      return "external assumption, enable with include_external";
    case Applicability::StretchableOnly:
      return "requires a stretchable arrangement";
  }
  return "";
}

Rational R(std::int64_t v) { return Rational(v); }
Rational R(std::int64_t num, std::int64_t den) { return Rational(num, den); }
std::int64_t sq(std::int64_t v) { return v * v; }

LinearForm form(int m) {
  LinearForm f;
  f.coef.assign(static_cast<std::size_t>(std::max(m, 1) + 1), Rational(0));
  return f;
}

void add(LinearForm& f, int w, const Rational& c) {
  if (w >= 2 && w < static_cast<int>(f.coef.size())) f.coef[w] += c;
}

// Chamber count 1 + sum (w-1) t_w added with the given factor.
void add_f2(LinearForm& f, const Rational& factor) {
  f.constant += factor;
  for (int w = 2; w < static_cast<int>(f.coef.size()); ++w) f.coef[w] += factor * (w - 1);
}

Rational evaluate(const LinearForm& f, const TVector& t) {
  Rational s = f.constant;
  for (int w = 2; w < static_cast<int>(f.coef.size()); ++w) {
    if (f.coef[w] != 0 && t[w] != 0) s += f.coef[w] * t[w];
  }
  return s;
}

Rational f2_of(const TVector& t) { return R(f_vector(t).f2); }
Rational max23(const TVector& t) { return R(std::max(t[2], t[3])); }

Part lin_part(std::string label, Direction dir, LinFn fn) {
  Part p;
  p.label = std::move(label);
  p.dir = dir;
  p.lin = std::move(fn);
  return p;
}

Part eval_part(std::string label, Direction dir, EvalFn fn) {
  Part p;
  p.label = std::move(label);
  p.dir = dir;
  p.eval = std::move(fn);
  return p;
}

std::vector<Constraint> build_catalogue() {
  using A = Applicability;
  using K = ConstraintKind;
  using D = Direction;
  std::vector<Constraint> c;

  auto observed = [](const TVector& t, const Facts& f) { return f.observed.value_or(f_vector(t)); };

  c.push_back({{"rel-1", "sum C(i,2) t_i = C(n,2)", A::All, K::Equality},
               {lin_part("pairs", D::Eq,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = R(-binom2(n));
                           for (int w = 2; w <= m; ++w) add(f, w, R(binom2(w)));
                           return f;
                         })},
               {},
               ""});
  c.push_back({{"rel-2", "1 + sum (i-1) t_i = f2 and f0 - f1 + f2 = 1", A::All, K::Equality},
               {eval_part("chambers", D::Eq,
                          [observed](int, const TVector& t, const Facts& f) {
                            std::int64_t s = 1;
                            for (int w = 2; w <= t.multiplicity(); ++w) s += (w - 1) * t[w];
                            return R(s - observed(t, f).f2);
                          }),
                eval_part("euler", D::Eq,
                          [observed](int, const TVector& t, const Facts& f) {
                            FVector o = observed(t, f);
                            return R(o.f0 - o.f1 + o.f2 - 1);
                          })},
               {},
               ""});
  c.push_back({{"rel-3", "sum t_i = f0", A::All, K::Equality},
               {eval_part("vertices", D::Eq,
                          [observed](int, const TVector& t, const Facts& f) {
                            std::int64_t s = 0;
                            for (int w = 2; w <= t.multiplicity(); ++w) s += t[w];
                            return R(s - observed(t, f).f0);
                          })},
               {},
               ""});
  c.push_back({{"rel-4", "sum i t_i = f1", A::All, K::Equality},
               {eval_part("edges", D::Eq,
                          [observed](int, const TVector& t, const Facts& f) {
                            std::int64_t s = 0;
                            for (int w = 2; w <= t.multiplicity(); ++w) s += w * t[w];
                            return R(s - observed(t, f).f1);
                          })},
               {},
               ""});
  c.push_back({{"melchior", "t2 >= 3 + sum_{i>=4} (i-3) t_i", A::All, K::Inequality},
               {lin_part("melchior", D::Ge,
                         [](int, int m) {
                           auto f = form(m);
                           f.constant = R(-3);
                           add(f, 2, R(1));
                           for (int w = 4; w <= m; ++w) add(f, w, R(-(w - 3)));
                           return f;
                         })},
               {},
               ""});
  c.push_back({{"four-t2-le-f2", "4 t2 <= f2", A::SimplicialNontrivial, K::Inequality},
               {lin_part("chambers", D::Ge,
                         [](int, int m) {
                           auto f = form(m);
                           add_f2(f, R(1));
                           add(f, 2, R(-4));
                           return f;
                         })},
               {},
               ""});
  c.push_back({{"simplicial-melchior", "t3 >= 4 + sum_{i>=5} (i-4) t_i", A::SimplicialNontrivial, K::Inequality},
               {lin_part("triples", D::Ge,
                         [](int, int m) {
                           auto f = form(m);
                           f.constant = R(-4);
                           add(f, 3, R(1));
                           for (int w = 5; w <= m; ++w) add(f, w, R(-(w - 4)));
                           return f;
                         })},
               {},
               ""});
  c.push_back({{"t2-upper-seventh", "t2 <= (C(n,2) + 6)/7", A::SimplicialNontrivial, K::Inequality},
               {lin_part("doubles", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = R(binom2(n) + 6, 7);
                           add(f, 2, R(-1));
                           return f;
                         })},
               {},
               ""});
  {
    Part above = lin_part("above-half", D::Eq, [](int n, int m) {
      auto f = form(m);
      for (int w = n / 2 + 1; w <= m; ++w) add(f, w, R(-1));
      return f;
    });
    // Two vertices of weight floor(n/2) are only ruled out once they would
    // force more than n lines.
    Part at = lin_part("at-half", D::Ge, [](int n, int m) {
      auto f = form(m);
      f.constant = R(1);
      add(f, n / 2, R(-1));
      return f;
    });
    at.gate = [](int n, int) { return 3 * (n / 2) - 3 > n; };
    c.push_back({{"mult-half", "t_i = 0 for i > floor(n/2), and t_{floor(n/2)} <= 1 when 3 floor(n/2) - 3 > n",
                  A::SimplicialNontrivial, K::Inequality},
                 {above, at},
                 {},
                 ""});
  }
  c.push_back({{"t2t3-chain", "2(t2 + 2) <= 4 + f2/2 + sum_{i>=5} (i-4) t_i = 2 t2 + t3 <= C(n,2)/3 + 5 - t4/3",
                A::SimplicialNontrivial, K::Inequality},
               {lin_part("lower", D::Ge,
                         [](int, int m) {
                           auto f = form(m);
                           f.constant = R(-4);
                           add(f, 3, R(1));
                           return f;
                         }),
                lin_part("identity", D::Eq,
                         [](int, int m) {
                           auto f = form(m);
                           add_f2(f, R(1, 2));
                           f.constant += R(4);
                           for (int w = 5; w <= m; ++w) add(f, w, R(w - 4));
                           add(f, 2, R(-2));
                           add(f, 3, R(-1));
                           return f;
                         }),
                lin_part("upper", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = R(binom2(n), 3) + R(5);
                           add(f, 2, R(-2));
                           add(f, 3, R(-1));
                           add(f, 4, R(-1, 3));
                           return f;
                         })},
               {},
               ""});
  {
    Part mod = eval_part("t4-mod-3", D::NotCongruent, [](int, const TVector& t, const Facts&) { return R(t[4] % 3); });
    mod.modulus = 3;
    mod.forbidden = 2;
    c.push_back({{"t2t3-equality-mult6", "if t_i = 0 for i > 6: 2 t2 + t3 + t4/3 = C(n,2)/3 + 5 and t4 != 2 mod 3",
                  A::SimplicialNontrivial, K::Modular},
                 {lin_part("identity", D::Eq,
                           [](int n, int m) {
                             auto f = form(m);
                             f.constant = -R(binom2(n), 3) - R(5);
                             add(f, 2, R(2));
                             add(f, 3, R(1));
                             add(f, 4, R(1, 3));
                             return f;
                           }),
                  mod},
                 [](int, int m, const Facts&) { return tri(m <= 6); },
                 "requires multiplicity <= 6"});
  }
  c.push_back({{"minmax", "min(t2,t3) <= (n^2 - n + 30)/18 and max(t2,t3) > f2/6", A::SimplicialNontrivial,
                K::Inequality},
               {eval_part("min",
                          D::Ge,
                          [](int n, const TVector& t, const Facts&) {
                            return R(sq(n) - n + 30, 18) - R(std::min(t[2], t[3]));
                          }),
                eval_part("max", D::Gt,
                          [](int, const TVector& t, const Facts&) { return max23(t) - f2_of(t) / R(6); })},
               {},
               ""});
  c.push_back({{"maxquad-a", "max(t2,t3) > (n^2 - n + 2m)/(3(m + 3))", A::SimplicialNontrivial, K::Inequality},
               {eval_part("max", D::Gt,
                          [](int n, const TVector& t, const Facts&) {
                            std::int64_t m = t.multiplicity();
                            return max23(t) - R(sq(n) - n + 2 * m, 3 * (m + 3));
                          })},
               {},
               ""});
  c.push_back({{"maxquad-b", "max(t2,t3) > (n^2 + 3n)/27", A::StretchableOnly, K::Inequality},
               {eval_part("max", D::Gt,
                          [](int n, const TVector& t, const Facts&) { return max23(t) - R(sq(n) + 3 * n, 27); })},
               [](int, int, const Facts& f) {
                 return tri_and(tri(f.simplicial), tri_not(tri(f.trivial)));
               },
               "requires a simplicial arrangement that is not trivial (near pencil or triangle)"});
  c.push_back({{"f2-le-quarter", "4 f2 <= (n+1)^2", A::SplitsOverR, K::Inequality},
               {lin_part("chambers", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           add_f2(f, R(-4));
                           f.constant += R(sq(n + 1));
                           return f;
                         })},
               {},
               ""});
  c.push_back({{"t2-quad-lower", "t2 >= 3 + ((n-5)^2 - 4)/(4m - 8)", A::SplitsOverR, K::Inequality},
               {lin_part("doubles", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = R(-3) - R(sq(n - 5) - 4, 4 * m - 8);
                           add(f, 2, R(1));
                           return f;
                         })},
               [](int n, int m, const Facts&) { return tri(n >= 4 && m >= 3); },
               "requires n >= 4 and multiplicity >= 3"});
  c.push_back({{"t3-lower-simplicial", "t3 + (2 t4 + t5)/m >= 4 + ((n-5)^2 - 4)/(4m)", A::SimplicialAndSplits,
                K::Inequality},
               {lin_part("triples", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = R(-4) - R(sq(n - 5) - 4, 4 * m);
                           add(f, 3, R(1));
                           add(f, 4, R(2, m));
                           add(f, 5, R(1, m));
                           return f;
                         })},
               {},
               ""});
  c.push_back({{"dm-lower-bound", "t2 >= floor(n/2)", A::SplitsOverR, K::Inequality},
               {lin_part("doubles", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = R(-(n / 2));
                           add(f, 2, R(1));
                           return f;
                         })},
               {},
               ""});

  GateFn small_mult_external = [](int n, int m, const Facts& f) {
    return tri_and(tri(f.include_external), tri(n >= 8 && m <= 5));
  };
  const std::string small_mult_text = "requires n >= 8, multiplicity <= 5 and external assumptions";
  c.push_back({{"notsimp-10", "t4/3 + t5 >= ((n-5)^2 - 4)/24", A::SplitsOverR, K::Inequality},
               {lin_part("high", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = -R(sq(n - 5) - 4, 24);
                           add(f, 4, R(1, 3));
                           add(f, 5, R(1));
                           return f;
                         })},
               small_mult_external,
               small_mult_text});
  c.push_back({{"notsimp-11", "t2 >= (n^2 - 46n + 233)/8 + 2 t4", A::SplitsOverR, K::Inequality},
               {lin_part("doubles", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = -R(sq(n) - 46 * n + 233, 8);
                           add(f, 2, R(1));
                           add(f, 4, R(-2));
                           return f;
                         })},
               small_mult_external,
               small_mult_text});
  c.push_back({{"notsimp-12", "max(t4,t5) >= (n^2 - 10n + 21)/32", A::SplitsOverR, K::Inequality},
               {eval_part("high", D::Ge,
                          [](int n, const TVector& t, const Facts&) {
                            return R(std::max(t[4], t[5])) - R(sq(n) - 10 * n + 21, 32);
                          })},
               small_mult_external,
               small_mult_text});

  GateFn upto6 = [](int, int m, const Facts&) { return tri(m <= 6); };
  const std::string upto6_text = "requires multiplicity <= 6";
  c.push_back({{"sechser-13", "((n-5)^2 + 44)/16 <= t2 <= (n+1)^2/16", A::SimplicialAndSplits, K::Inequality},
               {lin_part("lower", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = -R(sq(n - 5) + 44, 16);
                           add(f, 2, R(1));
                           return f;
                         }),
                lin_part("upper", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = R(sq(n + 1), 16);
                           add(f, 2, R(-1));
                           return f;
                         })},
               upto6,
               upto6_text});
  c.push_back({{"sechser-14", "(n^2 - 22n + 185)/24 <= t3 <= (n^2 + 116n - 597)/24", A::SimplicialAndSplits,
                K::Inequality},
               {lin_part("lower", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = -R(sq(n) - 22 * n + 185, 24);
                           add(f, 3, R(1));
                           return f;
                         }),
                lin_part("upper", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = R(sq(n) + 116 * n - 597, 24);
                           add(f, 3, R(-1));
                           return f;
                         })},
               upto6,
               upto6_text});
  c.push_back({{"sechser-15", "t4 + t5 <= 3n/2 - 17/2", A::SimplicialAndSplits, K::Inequality},
               {lin_part("upper", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = R(3 * std::int64_t{n} - 17, 2);
                           add(f, 4, R(-1));
                           add(f, 5, R(-1));
                           return f;
                         })},
               upto6,
               upto6_text});
  c.push_back({{"sechser-16", "(n^2 - 46n + 225)/48 <= t6 <= (n^2 + 2n - 47)/48", A::SimplicialAndSplits,
                K::Inequality},
               {lin_part("lower", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = -R(sq(n) - 46 * n + 225, 48);
                           add(f, 6, R(1));
                           return f;
                         }),
                lin_part("upper", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = R(sq(n) + 2 * n - 47, 48);
                           add(f, 6, R(-1));
                           return f;
                         })},
               upto6,
               upto6_text});

  c.push_back({{"ext-shnu", "f2 >= (2n^2 - 2n + 4m)/(m + 3)", A::ExternalAssumed, K::Inequality},
               {lin_part("chambers", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           add_f2(f, R(1));
                           f.constant -= R(2 * sq(n) - 2 * n + 4 * m, m + 3);
                           return f;
                         })},
               {},
               ""});
  c.push_back({{"ext-shnu2", "t2 + 3 t3/2 >= 8 + t4/2 + 5 t5/2", A::ExternalAssumed, K::Inequality},
               {lin_part("weighted", D::Ge,
                         [](int, int m) {
                           auto f = form(m);
                           f.constant = R(-8);
                           add(f, 2, R(1));
                           add(f, 3, R(3, 2));
                           add(f, 4, R(-1, 2));
                           add(f, 5, R(-5, 2));
                           return f;
                         })},
               [](int n, int m, const Facts& f) { return tri_and(tri(n >= 8 && m <= 5), tri_not(tri(f.trivial))); },
               "requires n >= 8, multiplicity <= 5 and not trivial"});
  c.push_back({{"ext-langer", "f1 >= (n^2 + 3n)/3", A::ExternalAssumed, K::Inequality},
               {lin_part("edges", D::Ge,
                         [](int n, int m) {
                           auto f = form(m);
                           f.constant = -R(sq(n) + 3 * n, 3);
                           for (int w = 2; w <= m; ++w) add(f, w, R(w));
                           return f;
                         })},
               [](int n, int m, const Facts& f) { return tri_and(tri(f.stretchable), tri(2 * m <= n)); },
               "requires a stretchable arrangement with multiplicity <= n/2"});
  return c;
}

const std::vector<Constraint>& constraints() {
  static const std::vector<Constraint> all = build_catalogue();
  return all;
}

const Constraint& find(const std::string& name) {
  for (const auto& c : constraints()) {
    if (c.info.name == name) return c;
  }
  throw UnknownName("unknown constraint '" + name + "'");
}

Verdict judge(const Part& p, const Rational& slack) {
  bool ok = false;
  switch (p.dir) {
    case Direction::Eq:
      ok = slack == 0;
      break;
    case Direction::Ge:
      ok = slack >= 0;
      break;
    case Direction::Gt:
      ok = slack > 0;
      break;
    case Direction::NotCongruent:
      ok = slack != Rational(p.forbidden);
      break;
  }
  return ok ? Verdict::Pass : Verdict::Fail;
}

Tri applies(const Constraint& c, int n, int m, const Facts& f) {
  Tri a = class_applies(c.info.applicability, f);
  if (c.extra) a = tri_and(a, c.extra(n, m, f));
  return a;
}

const std::map<std::string, std::vector<std::string>>& suites() {
  static const std::map<std::string, std::vector<std::string>> table = [] {
    std::map<std::string, std::vector<std::string>> s;
    s["universal"] = {"rel-1", "rel-2", "rel-3", "rel-4", "melchior"};
    s["simplicial"] = {"four-t2-le-f2", "simplicial-melchior", "t2-upper-seventh", "mult-half", "t2t3-chain",
                       "t2t3-equality-mult6", "minmax", "maxquad-a", "maxquad-b"};
    s["real-rooted"] = {"f2-le-quarter", "t2-quad-lower", "dm-lower-bound", "notsimp-10", "notsimp-11", "notsimp-12"};
    s["simplicial-real-rooted"] = s["real-rooted"];
    for (const char* name : {"t3-lower-simplicial", "sechser-13", "sechser-14", "sechser-15", "sechser-16"}) {
      s["simplicial-real-rooted"].push_back(name);
    }
    s["external"] = {"ext-shnu", "ext-shnu2", "ext-langer"};
    return s;
  }();
  return table;
}

}  // namespace

std::string to_string(Applicability a) {
  switch (a) {
    case Applicability::All:
      return "all";
    case Applicability::SimplicialNontrivial:
      return "simplicial-nontrivial";
    case Applicability::SplitsOverR:
      return "splits-over-R";
    case Applicability::SimplicialAndSplits:
      return "simplicial-and-splits";
    case Applicability::ExternalAssumed:
      return "external-assumed";
    case Applicability::StretchableOnly:
      return "stretchable-only";
  }
  return "?";
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Eq:
      return "=0";
    case Direction::Ge:
      return ">=0";
    case Direction::Gt:
      return ">0";
    case Direction::NotCongruent:
      return "!=2(mod 3)";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

Facts derive_facts(const TVector& t, Facts given) {
  if (!given.simplicial) given.simplicial = is_simplicial(t);
  if (!given.splits) given.splits = splits_over_R(t);
  if (!given.trivial) given.trivial = is_trivial(t);
  if (!given.stretchable) given.stretchable = false;
  return given;
}

const std::vector<ConstraintInfo>& catalogue() {
  static const std::vector<ConstraintInfo> infos = [] {
    std::vector<ConstraintInfo> out;
    for (const auto& c : constraints()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

bool is_constraint(const std::string& name) {
  return std::any_of(constraints().begin(), constraints().end(),
                     [&](const Constraint& c) { return c.info.name == name; });
}

Certificate check(const std::string& name, int n, const TVector& t, const Facts& facts) {
  const Constraint& c = find(name);
  if (n != t.n()) {
    throw RejectedInput("t-vector belongs to n = " + std::to_string(t.n()) + ", not " + std::to_string(n));
  }
  Facts f = derive_facts(t, facts);
  const int m = t.multiplicity();
  Certificate cert;
  cert.name = name;
  if (applies(c, n, m, f) != Tri::Yes) {
    cert.verdict = Verdict::NotApplicable;
    std::string reason = class_applies(c.info.applicability, f) == Tri::Yes ? c.extra_text
                                                                           : class_requirement(c.info.applicability);
    cert.reason = reason;
    return cert;
  }
  const PartCertificate* chosen = nullptr;
  for (const auto& p : c.parts) {
    PartCertificate pc;
    pc.label = p.label;
    pc.direction = p.dir;
    if (p.gate && !p.gate(n, m)) {
      pc.verdict = Verdict::NotApplicable;
      cert.parts.push_back(pc);
      continue;
    }
    pc.slack = p.lin ? evaluate(p.lin(n, m), t) : p.eval(n, t, f);
    pc.verdict = judge(p, pc.slack);
    cert.parts.push_back(pc);
  }
  for (const auto& pc : cert.parts) {
    if (pc.verdict == Verdict::Fail) {
      chosen = &pc;
      break;
    }
  }
  if (!chosen) {
    for (const auto& pc : cert.parts) {
      if (pc.verdict == Verdict::NotApplicable) continue;
      if (!chosen) {
        chosen = &pc;
        continue;
      }
      bool comparable = pc.direction != Direction::NotCongruent && chosen->direction != Direction::NotCongruent;
      if (comparable && pc.slack < chosen->slack) chosen = &pc;
      if (chosen->direction == Direction::NotCongruent && pc.direction != Direction::NotCongruent) chosen = &pc;
    }
  }
  if (!chosen) {
    cert.verdict = Verdict::NotApplicable;
    cert.reason = "no part applies";
    return cert;
  }
  cert.slack = chosen->slack;
  cert.direction = chosen->direction;
  cert.verdict = chosen->verdict;
  return cert;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"universal", "simplicial", "real-rooted", "simplicial-real-rooted",
                                                 "external"};
  return names;
}

const std::vector<std::string>& suite_constraints(const std::string& suite) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw UnknownName("unknown suite '" + suite + "'");
  return it->second;
}

Facts suite_facts(const std::string& suite, Facts given) {
  suite_constraints(suite);
  if (suite == "simplicial" || suite == "simplicial-real-rooted") {
    if (!given.simplicial) given.simplicial = true;
  }
  if (suite == "real-rooted" || suite == "simplicial-real-rooted") {
    if (!given.splits) given.splits = true;
  }
  if (suite == "external") given.include_external = true;
  return given;
}

std::vector<Certificate> run_suite(const std::string& suite, int n, const TVector& t, const Facts& facts) {
  Facts f = suite_facts(suite, facts);
  std::vector<Certificate> out;
  for (const auto& name : suite_constraints(suite)) out.push_back(check(name, n, t, f));
  return out;
}

Tri constraint_applies(const std::string& name, int n, int m, const Facts& facts) {
  return applies(find(name), n, m, facts);
}

std::vector<LinearPart> linear_parts(const std::string& name, int n, int m, const Facts& facts) {
  const Constraint& c = find(name);
  Tri a = applies(c, n, m, facts);
  std::vector<LinearPart> out;
  for (const auto& p : c.parts) {
    LinearPart lp;
    lp.label = p.label;
    lp.direction = p.dir;
    lp.applies = p.gate && !p.gate(n, m) ? Tri::No : a;
    if (p.lin && lp.applies != Tri::No) lp.form = p.lin(n, m);
    out.push_back(std::move(lp));
  }
  return out;
}

GrowthBound growth_bound(const std::map<int, Rational>& alpha) {
  Rational sum = 0;
  for (const auto& [i, a] : alpha) {
    if (i < 6) throw RejectedInput("growth caps apply to weights >= 6, got " + std::to_string(i));
    if (a < 0) throw RejectedInput("growth cap must be non-negative");
    sum += Rational(std::int64_t{i} * i - 3 * std::int64_t{i} - 10, 2) * a;
  }
  GrowthBound g;
  g.radicand = Rational(2056) + Rational(63) * sum;
  // floor(2 sqrt(r)) = isqrt(floor(4r)).
  g.floor_bound = 95 + isqrt(floor(g.radicand * Rational(4)));
  g.text = "n <= 95 + 2*sqrt(" + to_string(g.radicand) + "), floor " + std::to_string(g.floor_bound) +
           " (formula as stated, derivation unverified)";
  return g;
}

}  // namespace pla
