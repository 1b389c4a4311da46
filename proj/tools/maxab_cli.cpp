#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "maxab/errors.hpp"
#include "maxab/json_io.hpp"

using namespace maxab;

namespace {

struct Options {
  std::string family;
  int n = 0;
  std::string in;
  std::string out;
  int k = -1;
  int s = -1;
  std::size_t cap = 0;
  bool floating = false;
  std::string action;
};

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw ValidationError("cannot open output file " + path);
  }
  void line(const Json& j) { stream() << j.dump() << '\n'; }

 private:
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read input file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One JSON document per non-empty line, or a single document spanning the file.
std::vector<Json> read_documents(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<Json> docs;
  std::istringstream lines(text);
  std::string line;
  bool per_line = true;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      docs.push_back(Json::parse(line));
    } catch (const Json::exception&) {
      per_line = false;
      break;
    }
  }
  if (per_line && !docs.empty()) return docs;
  return {parse_json(text)};
}

AbelianPresentation read_presentation(const Options& o) {
  const auto docs = read_documents(o.in);
  if (docs.size() != 1) throw ValidationError("expected exactly one presentation in " + o.in);
  AbelianPresentation f = presentation_from_json(docs.front());
  if (!o.family.empty() && parse_family(o.family) != f.family)
    throw ValidationError("--family does not match the family of the input");
  return f;
}

std::size_t cap_of(const Options& o) { return o.cap > 0 ? o.cap : default_closure_cap(); }

void require_family_n(const Options& o) {
  if (o.family.empty() || o.n < 1) throw ValidationError("--family and a positive --n are required");
}

void run_enumerate(const Options& o, Sink& out) {
  require_family_n(o);
  for (const auto& inv : enumerate_invariants(parse_family(o.family), o.n)) out.line(to_json(inv));
}

void run_classify(const Options& o, Sink& out) {
  const AbelianPresentation f = read_presentation(o);
  const ClassInvariant inv = classify(f, cap_of(o));
  const FixedAlgebraReport rep = fixed_dim(f, o.floating);
  out.line(to_json(inv));
  out.line(to_json(rep));
}

void run_weyl(const Options& o, Sink& out) {
  std::vector<ClassInvariant> invs;
  if (!o.in.empty()) {
    for (const auto& d : read_documents(o.in)) invs.push_back(invariant_from_json(d));
  } else {
    require_family_n(o);
    for (const auto& inv : enumerate_invariants(parse_family(o.family), o.n))
      if (is_maximal(inv)) invs.push_back(inv);
  }
  for (const auto& inv : invs) {
    Json j = to_json(weyl_description(inv));
    j["invariant"] = to_json(inv);
    out.line(j);
  }
}

void run_msms(const Options& o, Sink& out) {
  if (o.action != "count") throw ValidationError("msms: the only action is 'count'");
  if (o.k < 0 || o.s < 0) throw ValidationError("msms count needs --k and --s");
  ModelTag model = ModelTag::Plus;
  if (o.family == "psp") model = ModelTag::Minus;
  if (o.family == "twisted") model = ModelTag::Twisted;
  std::vector<Msms> reps;
  for (const auto& c : enumerate_classes(o.k, o.s, model)) reps.push_back(canonical_form(c.representative).form);
  std::sort(reps.begin(), reps.end(), [](const Msms& a, const Msms& b) { return a.mus < b.mus; });
  out.line(Json(reps.size()));
  for (const auto& m : reps) out.line(to_json(m));
}

void run_verify_star(const Options& o, Sink& out) {
  if (!o.in.empty()) {
    out.line(to_json(fixed_dim(read_presentation(o), o.floating)));
    return;
  }
  require_family_n(o);
  for (const auto& inv : enumerate_invariants(parse_family(o.family), o.n)) {
    Json j = to_json(fixed_dim(canonical_rep(inv), o.floating));
    j["invariant"] = to_json(inv);
    out.line(j);
  }
}

void run_lift(const Options& o, Sink& out) {
  if (!o.family.empty() && o.family != "twisted") throw ValidationError("lift: --family must be twisted");
  out.line(to_json(lift_twisted(read_presentation(o))));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed abelian subgroups with dim g^F = dim F in PU(n), O(n)/<-I>, Sp(n)/<-I> and PU(n)x|<tau>"};
  Options o;
  bool schema = false;
  app.add_flag("--schema", schema, "Print the JSON schemas");
  app.require_subcommand(0, 1);

  const std::vector<std::string> families{"pu", "po", "psp", "twisted"};
  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", o.family, "pu|po|psp|twisted")->check(CLI::IsMember(families));
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Write JSON lines to PATH"); };
  auto add_cap = [&](CLI::App* c) { c->add_option("--cap", o.cap, "Closure cap (default MAXAB_CAP or 10^6)"); };
  auto add_float = [&](CLI::App* c) { c->add_flag("--float", o.floating, "Force the floating verifier"); };

  auto* enumerate = app.add_subcommand("enumerate", "List the invariants for a family and n");
  add_family(enumerate);
  enumerate->add_option("--n", o.n, "Degree")->required();
  add_out(enumerate);

  auto* cls = app.add_subcommand("classify", "Classify a presentation and check (*)");
  add_family(cls);
  cls->add_option("--in", o.in, "Presentation JSON")->required();
  add_out(cls);
  add_cap(cls);
  add_float(cls);

  auto* weyl = app.add_subcommand("weyl", "Weyl groups of maximal invariants");
  add_family(weyl);
  weyl->add_option("--n", o.n, "Degree");
  weyl->add_option("--in", o.in, "ClassInvariant JSON lines");
  add_out(weyl);

  auto* msms = app.add_subcommand("msms", "Multi-symplectic metric spaces over F2");
  msms->add_option("action", o.action, "count")->required();
  msms->add_option("--k", o.k, "Half the dimension of V")->required();
  msms->add_option("--s", o.s, "Number of refinements")->required();
  add_family(msms);
  add_out(msms);

  auto* verify = app.add_subcommand("verify-star", "Fixed subalgebra dimension against dim F");
  add_family(verify);
  verify->add_option("--n", o.n, "Degree");
  verify->add_option("--in", o.in, "Presentation JSON");
  add_out(verify);
  add_float(verify);

  auto* lift = app.add_subcommand("lift", "Abelian lift of a twisted presentation");
  add_family(lift);
  lift->add_option("--in", o.in, "Presentation JSON")->required();
  add_out(lift);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, std::cerr, std::cerr);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return 2;
  }

  // the flag wins over MAXAB_CAP everywhere a default cap is consulted
  if (o.cap > 0) setenv("MAXAB_CAP", std::to_string(o.cap).c_str(), 1);

  try {
    Sink out(o.out);
    if (schema) {
      const Json all = schemas();
      for (const auto& [name, s] : all.items()) out.line(Json{{"name", name}, {"schema", s}});
      return 0;
    }
    if (app.get_subcommands().empty()) throw ValidationError("a command is required (see --help)");
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "enumerate") run_enumerate(o, out);
    if (cmd == "classify") run_classify(o, out);
    if (cmd == "weyl") run_weyl(o, out);
    if (cmd == "msms") run_msms(o, out);
    if (cmd == "verify-star") run_verify_star(o, out);
    if (cmd == "lift") run_lift(o, out);
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
