// galois: batch front end for the library.
//
// Every report is a list of KEY<TAB>VALUE lines on stdout, identical for
// identical inputs. Exit status: 0 all verdicts pass, 1 some verdict fails,
// 2 bad arguments or unreadable/malformed input, 3 a size cap was hit.
// GALOIS_CAP=<n> replaces every default cap (group order, fiber size,
// sheet count, thread-group order).

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "galois/equivalence.hpp"
#include "galois/io.hpp"

namespace fs = std::filesystem;
using namespace galois;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kCap = 3 };

struct Caps {
  std::size_t group = kDefaultGroupCap;
  std::size_t fiber = kDefaultGroupCap;
  std::size_t sheets = 7;
  std::size_t threads = kDefaultGroupCap;
};

class Report {
 public:
  void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void flag(std::string key, bool v) { add(std::move(key), std::string(v ? "true" : "false")); }
  void print(std::ostream& os) const {
    for (const auto& [k, v] : lines_) os << k << '\t' << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string one_line(std::string s) {
  for (auto& ch : s)
    if (ch == '\n' || ch == '\t') ch = ' ';
  return s;
}

std::string hex_digest(const std::string& data) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(data);
  return os.str();
}

std::string join_perm(const std::vector<std::size_t>& p) { return detail::join(p, " "); }

io::GroupResolver resolver_for(const std::string& path, const Caps& caps) {
  return io::default_resolver(fs::path(path).parent_path(), caps.group);
}

// catalog name, or a path to a group file
std::shared_ptr<const FiniteMonoid> load_group_arg(const std::string& arg, const Caps& caps) {
  if (fs::exists(arg)) return io::build_group(io::parse_group(io::read_file(arg), arg), caps.group);
  if (auto g = named_monoid(arg)) {
    if (g->size() > caps.group)
      throw Error(ErrorKind::SizeCapExceeded, arg + " has order " + std::to_string(g->size()), {g->size(), caps.group});
    return g;
  }
  throw Error(ErrorKind::FileNotFound, "no group file or catalog group named " + arg);
}

FiniteConcreteCategory load_category(const std::string& path, const Caps& caps, Report& rep) {
  const auto text = io::read_file(path);
  rep.add("input", path);
  rep.add("input.digest", hex_digest(text));
  auto c = io::build_category(io::parse_category(text, path), resolver_for(path, caps), path);
  for (ObjectId x = 0; x < c.object_count(); ++x)
    if (c.fiber_size(x) > caps.fiber)
      throw Error(ErrorKind::SizeCapExceeded, "object " + c.object_name(x) + " has fiber " +
                                                  std::to_string(c.fiber_size(x)), {x, caps.fiber});
  rep.add("category", c.name());
  rep.add("category.digest", category_digest(c));
  rep.add("objects", c.object_count());
  return c;
}

ObjectId object_arg(const FiniteConcreteCategory& c, const std::string& id) {
  if (auto x = c.find_object(id)) return *x;
  throw Error(ErrorKind::ParseError, "no object named '" + id + "' in " + c.name());
}

void add_verdicts(Report& rep, const FiniteConcreteCategory& c, const std::vector<AxiomVerdict>& vs,
                  const std::string& prefix = {}) {
  for (const auto& v : vs) {
    const auto key = prefix + v.axiom;
    rep.add(key, std::string(v.passed ? "pass" : "fail"));
    rep.add(key + ".checked", v.checked);
    if (v.skipped) rep.add(key + ".skipped", v.skipped);
    if (!v.passed) {
      rep.add(key + ".detail", one_line(v.detail));
      if (v.witness) rep.add(key + ".witness", one_line(describe(c, *v.witness)));
    }
  }
}

int finish(Report& rep, bool ok) {
  rep.add("verdict", std::string(ok ? "pass" : "fail"));
  return ok ? kPass : kFail;
}

// ---- subcommands ----

int cmd_validate(const std::string& path, const Caps& caps, Report& rep) {
  const auto text = io::read_file(path);
  rep.add("input", path);
  rep.add("input.digest", hex_digest(text));
  io::Lexer lx(text, path);
  if (lx.lines().empty()) lx.fail_at_end("empty file");
  const auto kind = lx.lines()[0][0].text;
  rep.add("kind", kind == "monoid" ? std::string("group") : kind);
  if (kind == "group" || kind == "monoid") {
    auto g = io::build_group(io::parse_group(text, path), caps.group);
    rep.add("name", g->name());
    rep.add("order", g->size());
    rep.flag("is_group", g->is_group());
    rep.add("identity", g->identity());
  } else if (kind == "action") {
    auto a = io::build_action(io::parse_action(text, path), resolver_for(path, caps), path);
    rep.add("name", a.name());
    rep.add("actor", a.actor().name());
    rep.add("points", a.points());
    rep.add("orbits", orbits(a).size());
    rep.flag("transitive", is_transitive(a));
  } else if (kind == "category") {
    auto c = io::build_category(io::parse_category(text, path), resolver_for(path, caps), path);
    std::size_t arrows = 0;
    for (ObjectId x = 0; x < c.object_count(); ++x)
      for (ObjectId y = 0; y < c.object_count(); ++y) arrows += c.hom_size(x, y);
    rep.add("name", c.name());
    rep.add("category.digest", category_digest(c));
    rep.add("objects", c.object_count());
    rep.add("arrows", arrows);
    rep.flag("faithful", c.faithful());
  } else if (kind == "system") {
    auto s = io::parse_system(text, resolver_for(path, caps), path);
    rep.add("name", s.name());
    rep.add("nodes", s.size());
    rep.add("edges", s.edges().size());
    rep.add("finest", s.node_name(s.finest()));
  } else if (kind == "graph") {
    auto f = io::parse_graph(text, path);
    rep.add("name", f.base->name());
    rep.add("vertices", f.base->vertex_count());
    rep.add("edges", f.base->edges().size());
    rep.add("rank", f.base->rank());
    if (f.cover) {
      rep.add("sheets", f.cover->sheets);
      const bool conn = is_connected(*f.cover);
      rep.flag("connected", conn);
      if (conn) {
        rep.add("deck.order", deck_transformations(*f.cover).size());
        rep.flag("regular", is_regular(*f.cover));
      }
    }
  } else {
    lx.fail(lx.lines()[0][0], "unknown record kind '" + kind + "'");
  }
  return finish(rep, true);
}

int cmd_check_axioms(const std::string& suite, const std::string& path, const std::string& object, const Caps& caps,
                     Report& rep) {
  auto c = load_category(path, caps, rep);
  rep.add("suite", suite);
  AxiomReport r;
  if (suite == "C") {
    r = check_axioms_C(c);
  } else if (suite == "G") {
    r = check_axioms_G(c);
  } else {
    if (object.empty()) throw Error(ErrorKind::ParseError, "suite " + suite + " needs --object");
    const auto a = object_arg(c, object);
    rep.add("object", c.object_name(a));
    if (suite == "RC") r = check_axioms_RC(c, a);
    else if (suite == "R") r = check_axioms_R(c, a);
    else r = check_axioms_E(c, a);
  }
  add_verdicts(rep, c, r.verdicts);
  return finish(rep, r.passed());
}

int cmd_classify_transitive(const std::string& group, const Caps& caps, Report& rep) {
  auto g = load_group_arg(group, caps);
  rep.add("group", g->name());
  rep.add("order", g->size());
  auto ts = classify_transitive(g);
  rep.add("count", ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto key = "class." + std::to_string(i);
    auto h = stabilizer(ts[i], 0);
    rep.add(key + ".points", ts[i].points());
    rep.add(key + ".stabilizer", join_perm(h.members));
    rep.flag(key + ".normal", is_normal(as_group(*g), h));
  }
  return finish(rep, true);
}

int cmd_closure(const std::string& path, const std::string& object, const Caps& caps, Report& rep) {
  auto c = load_category(path, caps, rep);
  const auto x = object_arg(c, object);
  rep.add("object", c.object_name(x));
  auto cl = galois_closure(c, x);
  const auto& cert = cl.certificate;
  rep.add("closure.object", c.object_name(cert.node.object));
  rep.add("closure.point", cert.node.point);
  rep.add("closure.fiber", c.fiber_size(cert.node.object));
  rep.add("closure.automorphisms", cert.automorphisms.size());
  rep.add("closure.evaluation", join_perm(cert.evaluation));
  for (std::size_t p = 0; p < cl.pi.size(); ++p)
    rep.add("pi." + std::to_string(p), c.describe(cl.pi[p]) + " : " + join_perm(c.fiber(cl.pi[p])));
  return finish(rep, true);
}

int cmd_galois_scan(const std::string& path, const Caps& caps, Report& rep) {
  auto c = load_category(path, caps, rep);
  std::size_t count = 0;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    if (c.fiber_size(x) == 0) continue;
    const auto aut = automorphism_arrows(c, x).size();
    const bool gal = is_galois_object(c, x);
    count += gal;
    rep.add("object." + c.object_name(x), std::string(gal ? "galois" : "not-galois") + " aut=" +
                                              std::to_string(aut) + " fiber=" + std::to_string(c.fiber_size(x)));
  }
  rep.add("galois.count", count);
  return finish(rep, true);
}

int cmd_factor_action(const std::string& system_path, const std::string& action_path, const Caps& caps,
                      Report& rep) {
  const auto stext = io::read_file(system_path), atext = io::read_file(action_path);
  rep.add("system", system_path);
  rep.add("system.digest", hex_digest(stext));
  rep.add("action", action_path);
  rep.add("action.digest", hex_digest(atext));
  auto s = io::parse_system(stext, resolver_for(system_path, caps), system_path);
  auto lim = limit_threads(s, caps.threads);
  rep.add("threads", lim.threads.size());
  // the action names a node (inflated from that level) or the system itself
  auto af = io::parse_action(atext, action_path);
  std::optional<std::size_t> from;
  io::GroupResolver res = [&](const std::string& name) -> std::shared_ptr<const FiniteMonoid> {
    if (name == s.name()) return lim.group;
    if (auto i = s.find_node(name)) {
      from = *i;
      return s.group_ptr(*i);
    }
    return nullptr;
  };
  auto a = io::build_action(af, res, action_path);
  if (from) {
    rep.add("inflated.from", s.node_name(*from));
    a = inflate(lim, *from, a);
  }
  auto f = factor_action(s, lim, a);
  rep.add("level", s.node_name(f.level));
  rep.flag("unique", f.unique);
  std::string adm;
  for (auto i : f.admissible) adm += (adm.empty() ? "" : " ") + s.node_name(i);
  rep.add("admissible", adm);
  for (Element g = 0; g < f.level_action.actor().size(); ++g)
    rep.add("level.row." + std::to_string(g), join_perm(f.level_action.element_map(g)));
  return finish(rep, true);
}

int cmd_classify_covers(const std::string& path, std::size_t sheets, bool unpointed, const Caps& caps, Report& rep) {
  const auto text = io::read_file(path);
  rep.add("base", path);
  rep.add("base.digest", hex_digest(text));
  auto g = io::parse_graph(text, path);
  rep.add("rank", g.base->rank());
  rep.add("sheets", sheets);
  rep.add("mode", std::string(unpointed ? "unpointed" : "pointed"));
  CoverClassOptions opt;
  opt.pointed = !unpointed;
  opt.max_sheets = caps.sheets;
  auto covers = classify_covers(g.base, sheets, opt);
  rep.add("count", covers.size());
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto key = "cover." + std::to_string(i);
    std::string tuple;
    for (const auto& p : canonical_form(covers[i], opt.pointed)) tuple += (tuple.empty() ? "" : " | ") + join_perm(p);
    rep.add(key, tuple);
    rep.flag(key + ".regular", is_regular(covers[i]));
  }
  return finish(rep, true);
}

int cmd_reconstruct(const std::string& path, const std::string& expect, const Caps& caps, Report& rep) {
  auto c = load_category(path, caps, rep);
  std::shared_ptr<const FiniteMonoid> ref;
  if (!expect.empty()) {
    ref = load_group_arg(expect, caps);
    if (!ref->is_group()) throw Error(ErrorKind::MonoidActorUnsupported, expect + " is not a group");
    rep.add("expect", ref->name());
  }
  auto r = reconstruct(c, ref ? &as_group(*ref) : nullptr);
  if (r.system) {
    rep.add("system.nodes", r.system->size());
    for (std::size_t i = 0; i < r.system->size(); ++i)
      rep.add("system.node." + std::to_string(i),
              r.system->node_name(i) + " order=" + std::to_string(r.system->group(i).size()));
    rep.add("system.finest", r.system->node_name(r.system->finest()));
  }
  if (r.thread) {
    if (r.thread->threads.size() > caps.threads)
      throw Error(ErrorKind::SizeCapExceeded, "thread group too large", {r.thread->threads.size(), caps.threads});
    rep.add("thread.order", r.thread->threads.size());
  }
  rep.add("connected", r.connected.size());
  add_verdicts(rep, c, r.verdicts, "check.");
  if (r.iso) rep.add("iso.map", join_perm(r.iso->map));
  return finish(rep, r.passed());
}

std::optional<std::size_t> env_cap() {
  const char* v = std::getenv("GALOIS_CAP");
  if (!v) return std::nullopt;
  std::size_t n = 0;
  std::string s(v);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size() || n == 0)
    throw Error(ErrorKind::ParseError, "GALOIS_CAP must be a positive integer, got '" + s + "'");
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Galois-theory checks over groups, actions, categories and graph covers", "galois"};
  app.require_subcommand(1);

  std::string input, object, suite, group, system, action, base, expect;
  std::size_t sheets = 0;
  bool unpointed = false;

  auto* validate = app.add_subcommand("validate", "parse and validate any input file");
  validate->add_option("--input", input, "group, action, category, system or graph file")->required();

  auto* axioms = app.add_subcommand("check-axioms", "run an axiom suite on a category");
  axioms->add_option("--suite", suite)->required()->check(CLI::IsMember({"RC", "C", "G", "R", "E"}));
  axioms->add_option("--input", input)->required();
  axioms->add_option("--object", object, "representing object for RC, R and E");

  auto* transitive = app.add_subcommand("classify-transitive", "transitive actions of a group up to isomorphism");
  transitive->add_option("--group", group, "catalog name (S3, D4, Q8, ...) or group file")->required();

  auto* closure = app.add_subcommand("closure", "Galois closure of an object");
  closure->add_option("--input", input)->required();
  closure->add_option("--object", object)->required();

  auto* scan = app.add_subcommand("galois-scan", "list Galois objects");
  scan->add_option("--input", input)->required();

  auto* factor = app.add_subcommand("factor-action", "coarsest level an action of the thread group factors through");
  factor->add_option("--system", system)->required();
  factor->add_option("--action", action)->required();

  auto* covers = app.add_subcommand("classify-covers", "connected covers of a graph up to isomorphism");
  covers->add_option("--base", base)->required();
  covers->add_option("--sheets", sheets)->required();
  covers->add_flag("--unpointed", unpointed, "forget the basepoint of the cover");

  auto* recon = app.add_subcommand("reconstruct", "recover the group from a category of actions");
  recon->add_option("--input", input)->required();
  recon->add_option("--expect", expect, "reference group name or file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  Report rep;
  int code = kPass;
  try {
    Caps caps;
    if (auto n = env_cap()) caps = Caps{*n, *n, *n, *n};
    rep.add("command", app.get_subcommands().front()->get_name());
    if (*validate) code = cmd_validate(input, caps, rep);
    else if (*axioms) code = cmd_check_axioms(suite, input, object, caps, rep);
    else if (*transitive) code = cmd_classify_transitive(group, caps, rep);
    else if (*closure) code = cmd_closure(input, object, caps, rep);
    else if (*scan) code = cmd_galois_scan(input, caps, rep);
    else if (*factor) code = cmd_factor_action(system, action, caps, rep);
    else if (*covers) code = cmd_classify_covers(base, sheets, unpointed, caps, rep);
    else if (*recon) code = cmd_reconstruct(input, expect, caps, rep);
  } catch (const Error& e) {
    rep.add("error", to_string(e.kind()));
    rep.add("error.detail", one_line(e.what()));
    if (!e.witness().empty()) rep.add("error.witness", join_perm(e.witness()));
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::FileNotFound: code = kInput; break;
      case ErrorKind::SizeCapExceeded: code = kCap; break;
      default: code = kFail; break;
    }
    rep.add("verdict", std::string(code == kCap ? "cap" : code == kInput ? "error" : "fail"));
  }
  rep.print(std::cout);
  return code;
}
