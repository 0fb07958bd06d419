#include "pla/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pla/charpoly.hpp"
#include "pla/families.hpp"
#include "pla/feasibility.hpp"
#include "pla/inequalities.hpp"
#include "pla/io.hpp"
#include "pla/lines.hpp"
#include "pla/report.hpp"
#include "pla/wiring.hpp"

namespace pla {

namespace {

struct Input {
  std::string path;
  FileFormat format = FileFormat::Arrangement;
  std::optional<Arrangement> arr;
  std::optional<std::vector<RationalLine>> lines;
  std::optional<WiringDiagram> wiring;
  std::optional<TVector> t;
};

Input load(const std::string& path, const std::string& format) {
  Input in;
  in.path = path;
  in.format = format.empty() ? format_from_path(path) : parse_format_name(format);
  std::istringstream text(read_file(path));
  switch (in.format) {
    case FileFormat::Arrangement:
      in.arr = read_arrangement(text, path);
      break;
    case FileFormat::Lines:
      in.lines = read_lines(text, path);
      break;
    case FileFormat::Wiring:
      in.wiring = read_wiring(text, path);
      break;
    case FileFormat::TVector:
      in.t = read_tvector(text, path);
      break;
  }
  return in;
}

[[noreturn]] void reject(const ValidationReport& report, const std::string& what) {
  if (report.has(IssueKind::Pencil)) throw PencilError(what + " is a pencil");
  throw RejectedInput(what + " is invalid: " + report.issues.front().message);
}

const WiringDiagram& checked_wiring(Input& in) {
  if (!in.wiring && in.lines) in.wiring = lines_to_wiring(*in.lines).wiring;
  if (!in.wiring) throw RejectedInput(in.path + ": this command needs a .wd or .lines input");
  auto report = validate_wiring(*in.wiring);
  if (!report.ok()) reject(report, "wiring diagram");
  return *in.wiring;
}

bool has_geometry(const Input& in) { return in.arr || in.lines || in.wiring; }

const Arrangement& arrangement_of(Input& in) {
  if (!in.arr) {
    if (in.lines) {
      in.arr = lines_to_arrangement(*in.lines);
    } else if (in.wiring) {
      in.arr = wiring_to_arrangement(checked_wiring(in)).canonical();
    } else {
      throw RejectedInput(in.path + ": this command needs an arrangement, not a bare t-vector");
    }
  } else {
    auto report = validate_arrangement(*in.arr);
    if (!report.ok()) reject(report, "arrangement");
  }
  return *in.arr;
}

TVector tvector_of(Input& in) { return in.t ? *in.t : t_vector(arrangement_of(in)); }

// Counts cells on an actual sweep, independently of the t-vector.
std::optional<FVector> observed_of(Input& in) {
  if (!in.wiring && !in.lines) return std::nullopt;
  const WiringDiagram& w = checked_wiring(in);
  FVector f;
  f.f0 = static_cast<std::int64_t>(wiring_to_arrangement(w).vertices.size());
  for (const auto& along : vertices_along_wires(w)) f.f1 += static_cast<std::int64_t>(along.size());
  f.f2 = static_cast<std::int64_t>(chambers(w).size());
  return f;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string tags_text(const std::vector<FamilyTag>& tags) {
  std::string s;
  for (std::size_t i = 0; i < tags.size(); ++i) s += (i ? ", " : "") + tags[i].to_string();
  return s;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  RecordSink sink;
  std::string format;
};

int cmd_validate(Context& cx, const std::string& path) {
  Input in = load(path, cx.format);
  std::vector<std::string> problems;
  std::optional<TVector> t;
  if (in.arr) {
    for (const auto& issue : validate_arrangement(*in.arr).issues) problems.push_back(issue.message);
  } else if (in.wiring) {
    for (const auto& issue : validate_wiring(*in.wiring).issues) problems.push_back(issue.message);
  } else if (in.lines) {
    try {
      lines_to_arrangement(*in.lines);
    } catch (const RejectedInput& e) {
      problems.push_back(e.what());
    }
  }
  if (problems.empty()) t = tvector_of(in);
  Record r{"validation", {}};
  r.add("source", path).add("valid", bool_text(problems.empty()));
  if (t) {
    cx.out << "valid: n=" << t->n() << " t=" << t->to_string() << '\n';
    r.add("n", std::to_string(t->n())).add("t", t->to_string());
  } else {
    cx.out << "invalid: " << problems.size() << " issue(s)\n";
    for (const auto& p : problems) cx.out << "  " << p << '\n';
    r.add("issues", std::to_string(problems.size()));
  }
  cx.sink.emit(r);
  return problems.empty() ? 0 : 1;
}

// The surd text already starts with "roots:".
std::string roots_line(const RootAnalysis& a) { return a.integral ? "roots: " + a.text : a.text; }

int cmd_invariants(Context& cx, const std::string& path) {
  Input in = load(path, cx.format);
  TVector t = tvector_of(in);
  FVector f = f_vector(t);
  CharPoly closed = charpoly_closed_form(t.n(), f.f2);
  RootAnalysis a = root_analysis(closed);
  cx.out << "source: " << path << '\n'
         << "n: " << t.n() << '\n'
         << "t: " << t.to_string() << '\n'
         << "f: " << fvector_text(f) << '\n'
         << "chi: " << closed.to_string() << '\n'
         << "m: " << a.m << '\n'
         << roots_line(a) << '\n'
         << "simplicial: " << bool_text(is_simplicial(t)) << '\n'
         << "splits: " << bool_text(a.splits) << '\n'
         << "near-pencil: " << bool_text(is_near_pencil(t)) << '\n'
         << "families: " << tags_text(detect_family(t.n(), t)) << '\n';
  int code = 0;
  if (has_geometry(in)) {
    bool agree = charpoly_from_lattice(arrangement_of(in)) == closed;
    cx.out << "chi from lattice: " << (agree ? "agrees" : "DIFFERS") << '\n';
    if (!agree) code = 1;
  }
  cx.sink.emit(invariants_record(path, t, closed, a));
  return code;
}

int cmd_charpoly(Context& cx, const std::string& path) {
  Input in = load(path, cx.format);
  CharPoly p;
  std::string method;
  if (has_geometry(in)) {
    p = charpoly_from_lattice(arrangement_of(in));
    method = "lattice";
  } else {
    p = charpoly_closed_form(in.t->n(), f_vector(*in.t).f2);
    method = "closed form";
  }
  RootAnalysis a = root_analysis(p);
  cx.out << "chi: " << p.to_string() << '\n'
         << "coefficients (t^3..t^0): " << p.coeffs[3] << ' ' << p.coeffs[2] << ' ' << p.coeffs[1] << ' '
         << p.coeffs[0] << '\n'
         << "method: " << method << '\n'
         << "m: " << a.m << '\n'
         << roots_line(a) << '\n'
         << "upper root: " << a.upper.to_string() << '\n'
         << "lower root: " << a.lower.to_string() << '\n'
         << "splits: " << bool_text(a.splits) << '\n';
  Record r{"charpoly", {}};
  r.add("source", path)
      .add("c3", std::to_string(p.coeffs[3]))
      .add("c2", std::to_string(p.coeffs[2]))
      .add("c1", std::to_string(p.coeffs[1]))
      .add("c0", std::to_string(p.coeffs[0]))
      .add("m", std::to_string(a.m))
      .add("roots", a.text)
      .add("method", method);
  cx.sink.emit(r);
  return 0;
}

struct CheckOptions {
  std::string path;
  std::vector<std::string> suites;
  std::vector<std::string> constraints;
  bool simplicial = false;
  bool splits = false;
  bool stretchable = false;
  bool external = false;
};

int cmd_check(Context& cx, const CheckOptions& o) {
  for (const auto& s : o.suites) suite_constraints(s);
  for (const auto& c : o.constraints) {
    if (!is_constraint(c)) throw UnknownName("unknown constraint '" + c + "'");
  }
  Input in = load(o.path, cx.format);
  TVector t = tvector_of(in);
  Facts facts;
  if (o.simplicial) facts.simplicial = true;
  if (o.splits) facts.splits = true;
  if (o.stretchable) facts.stretchable = true;
  facts.include_external = o.external;
  facts.observed = observed_of(in);
  std::vector<Certificate> certs;
  std::vector<std::string> suites = o.suites;
  if (suites.empty() && o.constraints.empty()) suites.push_back("universal");
  for (const auto& s : suites) {
    auto part = run_suite(s, t.n(), t, facts);
    certs.insert(certs.end(), part.begin(), part.end());
  }
  for (const auto& c : o.constraints) certs.push_back(check(c, t.n(), t, facts));
  int pass = 0, fail = 0, na = 0;
  for (const auto& c : certs) {
    if (c.verdict == Verdict::Pass) ++pass;
    if (c.verdict == Verdict::Fail) ++fail;
    if (c.verdict == Verdict::NotApplicable) ++na;
    cx.sink.emit(certificate_record(o.path, c));
  }
  cx.out << "n=" << t.n() << " t=" << t.to_string() << '\n'
         << certificate_table(certs).render() << pass << " pass, " << fail << " fail, " << na
         << " not applicable\n";
  return fail ? 1 : 0;
}

int cmd_chambers(Context& cx, const std::string& path) {
  Input in = load(path, cx.format);
  const WiringDiagram& w = checked_wiring(in);
  Arrangement arr = wiring_to_arrangement(w);
  auto all = chambers(w);
  Table table({"id", "sides", "lines", "vertices", "doubles"});
  std::map<std::size_t, int> by_sides;
  for (const auto& c : all) {
    int doubles = 0;
    for (int v : c.vertices) doubles += arr.vertices[v].size() == 2 ? 1 : 0;
    ++by_sides[c.lines.size()];
    table.add({std::to_string(c.id), std::to_string(c.lines.size()), join(c.lines), join(c.vertices),
               std::to_string(doubles)});
    Record r{"chamber", {}};
    r.add("id", std::to_string(c.id))
        .add("sides", std::to_string(c.lines.size()))
        .add("lines", join(c.lines))
        .add("vertices", join(c.vertices))
        .add("doubles", std::to_string(doubles));
    cx.sink.emit(r);
  }
  cx.out << table.render() << "chambers: " << all.size() << " (f2 from t-vector: " << f_vector(t_vector(arr)).f2
         << ")\n";
  for (const auto& [sides, count] : by_sides) cx.out << "  " << sides << "-gons: " << count << '\n';
  return 0;
}

int cmd_coxeter(Context& cx, const std::optional<std::string>& path, std::optional<int> x_from,
                std::optional<int> x_to) {
  if (!path && !x_from) throw RejectedInput("coxeter-test needs an input file or --x-from");
  if (path) {
    Input in = load(*path, cx.format);
    CoxeterResult r = coxeter_test(checked_wiring(in));
    cx.out << "uniform: " << bool_text(r.uniform) << '\n';
    if (r.x) cx.out << "x: " << *r.x << '\n';
    if (r.identified) cx.out << "identified: " << r.identified->to_string() << '\n';
    cx.out << "detail: " << r.detail << '\n';
    Record rec{"coxeter-test", {}};
    rec.add("source", *path).add("uniform", bool_text(r.uniform));
    if (r.x) rec.add("x", std::to_string(*r.x));
    if (r.identified) rec.add("identified", r.identified->to_string());
    cx.sink.emit(rec);
  }
  if (x_from) {
    int hi = x_to.value_or(*x_from);
    if (*x_from < 4 || hi < *x_from) throw RejectedInput("x range must satisfy 4 <= x-from <= x-to");
    Table table({"x", "feasible", "n", "t", "t2", "t3", "tx", "C(n,2)", "reason"});
    for (int x = *x_from; x <= hi; ++x) {
      CoxSolution s = solve_cox_system(x);
      auto opt = [](const std::optional<Rational>& v) { return v ? to_string(*v) : std::string("-"); };
      table.add({std::to_string(x), bool_text(s.feasible), s.n ? std::to_string(*s.n) : "-",
                 s.t ? s.t->to_string() : "-", opt(s.t2), opt(s.t3), opt(s.tx), opt(s.pairs), s.reason});
      Record rec{"cox-system", {}};
      rec.add("x", std::to_string(x)).add("feasible", bool_text(s.feasible));
      if (s.t) rec.add("n", std::to_string(*s.n)).add("t", s.t->to_string());
      if (!s.reason.empty()) rec.add("reason", s.reason);
      cx.sink.emit(rec);
    }
    cx.out << table.render();
  }
  return 0;
}

int cmd_detect(Context& cx, const std::string& path) {
  Input in = load(path, cx.format);
  TVector t = tvector_of(in);
  auto tags = detect_family(t.n(), t);
  cx.out << "n=" << t.n() << " t=" << t.to_string() << '\n' << "families: " << tags_text(tags) << '\n';
  Record r{"detect", {}};
  r.add("source", path).add("t", t.to_string()).add("families", tags_text(tags));
  cx.sink.emit(r);
  return 0;
}

struct GenerateOptions {
  std::string family;
  std::optional<int> m, k, n;
  std::string emit;
  std::string out_path;
};

int cmd_generate(Context& cx, const GenerateOptions& o) {
  int parameter = 0;
  if (o.n) parameter = *o.n;
  if (o.m) parameter = *o.m;
  if (o.k) parameter = *o.k;
  auto tag = parse_family(o.family, parameter);
  if (!tag) throw RejectedInput("unknown family '" + o.family + "'");
  bool needs = tag->family == Family::NearPencil || tag->family == Family::R1 || tag->family == Family::R2;
  if (needs && !o.n && !o.m && !o.k) throw RejectedInput("family '" + o.family + "' needs a parameter");
  Generated g = generate(*tag);
  std::string emit = o.emit.empty() ? (g.lines ? "lines" : "tvec") : o.emit;
  if (emit != "tvec" && !g.lines) {
    throw RejectedInput(tag->to_string() + " has no coordinates here; use --emit tvec");
  }
  std::ostringstream text;
  if (emit == "tvec") {
    write_tvector(text, g.t);
  } else if (emit == "lines") {
    write_lines(text, *g.lines);
  } else if (emit == "wd") {
    write_wiring(text, lines_to_wiring(*g.lines).wiring);
  } else if (emit == "arr") {
    write_arrangement(text, lines_to_arrangement(*g.lines));
  } else {
    throw RejectedInput("unknown --emit '" + emit + "' (lines, wd, arr, tvec)");
  }
  if (o.out_path.empty()) {
    cx.out << text.str();
  } else {
    std::ofstream file(o.out_path);
    if (!file) throw RejectedInput("cannot write " + o.out_path);
    file << text.str();
    cx.out << "wrote " << tag->to_string() << " t=" << g.t.to_string() << " to " << o.out_path << '\n';
  }
  Record r{"generate", {}};
  r.add("family", tag->to_string()).add("t", g.t.to_string()).add("emit", emit);
  cx.sink.emit(r);
  return 0;
}

struct ProfileOptions {
  std::optional<int> max_mult;
  bool simplicial = false;
  bool splits = false;
  bool chamber_bound = false;
  bool external = false;
  std::vector<std::string> constraints;
  std::optional<std::int64_t> t2;
  bool no_prune = false;
};

FeasibilityQuery profile_query(const ProfileOptions& o, int n) {
  FeasibilityQuery q;
  q.n = n;
  q.max_mult = o.max_mult;
  q.require_simplicial = o.simplicial;
  q.require_splits = o.splits;
  q.require_four_t2_le_f2 = o.chamber_bound;
  q.include_external = o.external;
  q.extra = o.constraints;
  q.fixed_t2 = o.t2;
  return q;
}

int cmd_enumerate(Context& cx, const ProfileOptions& o, int n, bool count_only, bool ratio) {
  FeasibilityQuery q = profile_query(o, n);
  FeasibleSet set = enumerate(q, {!o.no_prune});
  if (!count_only) {
    cx.out << feasible_table(set).render();
    for (const auto& t : set.vectors) cx.sink.emit(feasible_record(t));
  }
  cx.out << "feasible: " << set.vectors.size() << " (nodes " << set.stats.nodes << ", pruned " << set.stats.pruned
         << ")\n";
  cx.sink.emit(enumeration_summary_record(q, set.stats));
  if (!ratio) return 0;
  RatioReport report = conjecture_ratio_check(set.vectors);
  cx.out << ratio_table(report).render() << "ratio violations: " << report.violations << '\n';
  for (const auto& e : report.entries) cx.sink.emit(ratio_record(e));
  return report.violations ? 1 : 0;
}

int cmd_scan(Context& cx, const ProfileOptions& o, std::optional<int> n_from, std::optional<int> n_to,
             std::optional<std::string> eps, int window) {
  if (eps) {
    EpsilonBound b = epsilon_bound(parse_rational(*eps), window);
    cx.out << b.text << '\n';
    if (b.window_to >= b.window_from) {
      cx.out << "feasible vectors for n in [" << b.window_from << ", " << b.window_to << "]: " << b.window_feasible
             << '\n';
    }
    Record r{"epsilon-bound", {}};
    r.add("eps", to_string(b.eps))
        .add("radicand", to_string(b.radicand))
        .add("offset", to_string(b.offset))
        .add("floor", std::to_string(b.floor_bound))
        .add("window_feasible", std::to_string(b.window_feasible));
    cx.sink.emit(r);
    return 0;
  }
  if (!n_from || !n_to) throw RejectedInput("scan needs --n-from and --n-to (or --epsilon)");
  ScanResult scan = scan_bound(profile_query(o, *n_from), *n_from, *n_to, {!o.no_prune});
  cx.out << scan_table(scan).render() << scan_summary(scan) << '\n';
  for (const auto& row : scan.rows) cx.sink.emit(scan_record(row));
  Record r{"scan-summary", {}};
  r.add("largest_feasible", scan.last_feasible ? std::to_string(*scan.last_feasible) : "none");
  cx.sink.emit(r);
  return 0;
}

int cmd_audit(Context& cx, const std::string& path) {
  Input in = load(path, cx.format);
  const WiringDiagram& w = checked_wiring(in);
  ChamberAudit a = double_point_chamber_audit(w);
  bool zweier = double_point_with_triple_neighbours(w);
  Record r{"audit", {}};
  r.add("source", path).add("applicable", bool_text(a.applicable));
  cx.out << "applicable: " << bool_text(a.applicable) << '\n';
  if (!a.applicable) {
    cx.out << "reason: " << a.reason << '\n';
    r.add("reason", a.reason);
  } else {
    cx.out << "chambers: " << a.doubles_per_chamber.size() << '\n'
           << "max double points per chamber: " << a.max_doubles << '\n'
           << "every chamber has a double point: " << bool_text(a.every_chamber_has_one) << '\n';
    r.add("chambers", std::to_string(a.doubles_per_chamber.size()))
        .add("max_doubles", std::to_string(a.max_doubles))
        .add("every_chamber_has_one", bool_text(a.every_chamber_has_one));
  }
  cx.out << "double point with triple neighbours: " << bool_text(zweier) << '\n';
  r.add("double_with_triple_neighbours", bool_text(zweier));
  cx.sink.emit(r);
  return a.applicable && !a.every_chamber_has_one ? 1 : 0;
}

void add_profile(CLI::App* sub, ProfileOptions& o) {
  sub->add_option("--max-mult", o.max_mult, "largest vertex weight (default n-1)");
  sub->add_flag("--simplicial", o.simplicial, "require equality in Melchior's inequality");
  sub->add_flag("--real-rooted", o.splits, "require a characteristic polynomial splitting over R");
  sub->add_flag("--chamber-bound", o.chamber_bound, "impose 4 t2 <= f2");
  sub->add_flag("--external", o.external, "assume externally proven results");
  sub->add_option("--constraint", o.constraints, "extra catalogue constraint (repeatable)")->allow_extra_args(false);
  sub->add_option("--t2", o.t2, "force t2 to this value");
  sub->add_flag("--no-prune", o.no_prune, "disable bound pruning");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudoline arrangement workbench", "pla-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  Context cx{out, err, {}, {}};
  std::string records_path;
  if (const char* env = std::getenv("PLA_RECORDS")) records_path = env;
  app.add_option("--format", cx.format, "input format override: arr, lines, wd, tvec");
  app.add_option("--records", records_path, "write JSON-lines records here (default $PLA_RECORDS)");

  std::string path;
  std::function<int()> action;
  auto file_verb = [&](const char* name, const char* help, int (*fn)(Context&, const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "input file")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(cx, path); }; });
  };
  file_verb("validate", "check that an input describes a valid arrangement", cmd_validate);
  file_verb("invariants", "t-vector, f-vector, characteristic polynomial and flags", cmd_invariants);
  file_verb("charpoly", "characteristic polynomial and its roots", cmd_charpoly);
  file_verb("chambers", "list the chambers of a wiring diagram or line set", cmd_chambers);
  file_verb("detect", "name the known families matching the t-vector", cmd_detect);
  file_verb("audit", "double points per chamber of a simplicial arrangement", cmd_audit);

  CheckOptions check_opts;
  auto* check_cmd = app.add_subcommand("check", "evaluate catalogue constraints");
  check_cmd->add_option("file", check_opts.path, "input file")->required();
  check_cmd->add_option("--suite", check_opts.suites, "suite name (repeatable)")->allow_extra_args(false);
  check_cmd->add_option("--constraint", check_opts.constraints, "constraint name (repeatable)")
      ->allow_extra_args(false);
  check_cmd->add_flag("--simplicial", check_opts.simplicial, "assert simpliciality");
  check_cmd->add_flag("--real-rooted", check_opts.splits, "assert real roots");
  check_cmd->add_flag("--stretchable", check_opts.stretchable, "assert stretchability");
  check_cmd->add_flag("--external", check_opts.external, "assume externally proven results");
  check_cmd->callback([&] { action = [&] { return cmd_check(cx, check_opts); }; });

  std::optional<std::string> cox_path;
  std::optional<int> x_from, x_to;
  auto* cox = app.add_subcommand("coxeter-test", "chamber-graph uniformity and the x-system");
  cox->add_option("file", cox_path, "wiring diagram or line set");
  cox->add_option("--x-from", x_from, "solve the linear system from this x");
  cox->add_option("--x-to", x_to, "... up to this x");
  cox->callback([&] { action = [&] { return cmd_coxeter(cx, cox_path, x_from, x_to); }; });

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "emit a member of a known family");
  gen_cmd->add_option("--family", gen.family, "near-pencil, r1, r2, a61, a91, a151, a132, kelly-moser")->required();
  gen_cmd->add_option("--m", gen.m, "R1 parameter (n = 2m)");
  gen_cmd->add_option("--k", gen.k, "R2 parameter (n = 4k+1)");
  gen_cmd->add_option("--n", gen.n, "near pencil size");
  gen_cmd->add_option("--emit", gen.emit, "lines, wd, arr or tvec");
  gen_cmd->add_option("--out", gen.out_path, "output file (default stdout)");
  gen_cmd->callback([&] { action = [&] { return cmd_generate(cx, gen); }; });

  ProfileOptions enum_opts;
  int enum_n = 0;
  bool count_only = false, ratio = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "list feasible t-vectors for one n");
  enum_cmd->add_option("--n", enum_n, "number of lines")->required();
  add_profile(enum_cmd, enum_opts);
  enum_cmd->add_flag("--count-only", count_only, "print only the summary");
  enum_cmd->add_flag("--ratio", ratio, "report t6/n^2 against its bounds");
  enum_cmd->callback([&] { action = [&] { return cmd_enumerate(cx, enum_opts, enum_n, count_only, ratio); }; });

  ProfileOptions scan_opts;
  std::optional<int> n_from, n_to;
  std::optional<std::string> eps;
  int window = 0;
  auto* scan_cmd = app.add_subcommand("scan", "feasible counts over a range of n");
  scan_cmd->add_option("--n-from", n_from, "first n");
  scan_cmd->add_option("--n-to", n_to, "last n");
  add_profile(scan_cmd, scan_opts);
  scan_cmd->add_option("--epsilon", eps, "evaluate the epsilon bound instead");
  scan_cmd->add_option("--window", window, "with --epsilon: enumerate this many n above the bound");
  scan_cmd->callback([&] { action = [&] { return cmd_scan(cx, scan_opts, n_from, n_to, eps, window); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  int code = 2;
  try {
    code = action();
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (!records_path.empty()) {
    std::ofstream file(records_path);
    if (!file) {
      err << "error: cannot write records to " << records_path << '\n';
      return 2;
    }
    cx.sink.write(file);
  }
  return code;
}

}  // namespace pla
