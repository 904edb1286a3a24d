#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <optional>

#include "leavitt/checks.hpp"
#include "leavitt/error.hpp"
#include "leavitt/files.hpp"
#include "leavitt/text.hpp"

namespace leavitt::cli {

namespace {

struct Options {
  std::string verb;
  std::vector<std::string> args;
  std::string graph_file;
  std::string ring_name = "int";
  std::optional<std::size_t> depth;
  std::uint64_t seed = 7;
  std::string spec_file;
  std::string suite = "all";
};

// A usage problem; reported like a parse error.
struct Usage {
  std::string message;
};

class Command {
 public:
  Command(Options options, std::ostream& out) : opt_(std::move(options)), out_(out) {}

  int run();

 private:
  void arity(std::size_t lo, std::size_t hi) const {
    if (opt_.args.size() < lo || opt_.args.size() > hi) {
      throw Usage{opt_.verb + " takes " +
                  (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                  " arguments"};
    }
  }
  Ring ring() const {
    if (opt_.ring_name == "int") return Ring::Integer;
    if (opt_.ring_name == "gauss") return Ring::Gaussian;
    throw Usage{"--ring must be int or gauss"};
  }
  const GraphPtr& graph() {
    if (!graph_) {
      if (opt_.graph_file.empty()) throw Usage{opt_.verb + " needs --graph FILE"};
      graph_ = load_graph(opt_.graph_file);
    }
    return graph_;
  }
  const std::string& spec_file() const {
    if (opt_.spec_file.empty()) throw Usage{opt_.verb + " needs --spec FILE"};
    return opt_.spec_file;
  }
  Element element(std::size_t i) { return parse_element(graph(), ring(), opt_.args.at(i)); }
  Lasso lasso(std::size_t i) { return parse_lasso(*graph(), opt_.args.at(i)); }
  int verdict(bool ok, const std::string& yes, const std::string& no) {
    out_ << (ok ? yes : no) << "\n";
    return ok ? kOk : kVerdictFailed;
  }
  std::string weyl_text(const WeylClass& c) {
    return format_element(c.representative()) + " @ " + format_lasso(*graph(), c.base());
  }
  std::string prefix_set(const std::vector<Path>& paths) {
    std::string text = "{";
    for (std::size_t i = 0; i < paths.size(); ++i) {
      text += (i ? ", " : "") + format_path(*graph(), paths[i]);
    }
    return text + "}";
  }

  int element_verb();
  int action_verb();
  int weyl_verb();
  int kappa();
  int stone_check();
  int verify_iso();
  int induce_groupoid_iso();
  int pi_from_omega();
  int check_props();

  Options opt_;
  std::ostream& out_;
  GraphPtr graph_;
};

int Command::element_verb() {
  const std::string& verb = opt_.verb;
  if (verb == "nf") {
    arity(1, 1);
    Element f = element(0);
    out_ << format_element(f.refined(opt_.depth.value_or(1))) << "\n";
  } else if (verb == "mul" || verb == "add") {
    arity(2, 2);
    Element f = element(0);
    Element g = element(1);
    out_ << format_element(verb == "mul" ? f * g : f + g) << "\n";
  } else if (verb == "star") {
    arity(1, 1);
    out_ << format_element(star(element(0))) << "\n";
  } else if (verb == "deg") {
    arity(1, 1);
    Degree d = degree(element(0));
    out_ << (d.is_homogeneous() ? std::to_string(d.value()) : std::string("mixed")) << "\n";
  } else if (verb == "isdiag") {
    arity(1, 1);
    return verdict(is_diagonal(element(0)), "diagonal", "not diagonal");
  }
  return kOk;
}

int Command::action_verb() {
  const std::string& verb = opt_.verb;
  if (verb == "isnorm") {
    arity(1, 1);
    return verdict(is_normalizer(element(0)), "normalizer", "not a normalizer");
  }
  if (verb == "alpha") {
    arity(1, 2);
    PartialMap map = alpha(element(0));
    if (opt_.args.size() == 2) {
      out_ << format_lasso(*graph(), map.apply(lasso(1))) << "\n";
      return kOk;
    }
    for (const RewriteRule& rule : map.rules()) {
      out_ << format_path(*graph(), rule.from) << " -> " << format_path(*graph(), rule.to) << "\n";
    }
  } else if (verb == "dom" || verb == "ran") {
    arity(1, 1);
    Element n = element(0);
    out_ << prefix_set(verb == "dom" ? dom(n) : ran(n)) << "\n";
  } else if (verb == "compress") {
    arity(2, 2);
    auto c = compress(IsolatedPoint::make(*graph(), lasso(0)), element(1));
    if (c) {
      out_ << "r=" << c->coefficient.to_string() << " k=" << c->degree << "\n";
    } else {
      out_ << "0\n";
    }
  }
  return kOk;
}

int Command::weyl_verb() {
  const std::string& verb = opt_.verb;
  if (verb == "weyl-eq") {
    arity(4, 4);
    return verdict(equivalent(element(0), lasso(1), element(2), lasso(3)), "equivalent", "not equivalent");
  }
  if (verb == "phi") {
    arity(3, 3);
    Lag k = 0;
    const std::string& text = opt_.args[1];
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec != std::errc() || end != text.data() + text.size()) {
      fail(ErrorKind::Parse, "expected an integer lag, got '" + text + "'");
    }
    Arrow arrow = make_arrow(*graph(), lasso(0), k, lasso(2));
    out_ << weyl_text(phi(graph(), ring(), arrow)) << "\n";
  } else if (verb == "phi-inv") {
    arity(2, 2);
    out_ << format_arrow(*graph(), phi_inverse(WeylClass::make(element(0), lasso(1)))) << "\n";
  }
  return kOk;
}

int Command::kappa() {
  arity(1, 1);
  VerifiedIso iso = VerifiedIso::verify(load_iso_spec(spec_file()), 4);
  Lasso x = parse_lasso(*iso.spec().source, opt_.args[0]);
  out_ << format_lasso(*iso.spec().target, induce_kappa(iso, x, opt_.depth)) << "\n";
  return kOk;
}

int Command::stone_check() {
  if (!opt_.spec_file.empty()) {
    arity(0, 0);
    VerifiedIso iso = VerifiedIso::verify(load_iso_spec(opt_.spec_file), 4);
    std::size_t depth = opt_.depth.value_or(3);
    LinearityCheck linear = check_kappa_linearity(iso, depth, opt_.seed);
    PropertyResult iff = check_kappa_iff(iso, depth, 20, 50, opt_.seed);
    out_ << (linear.holds ? "PASS kappa-linearity" : "FAIL kappa-linearity: " + linear.witness) << "\n";
    out_ << (iff.passed() ? "PASS" : "FAIL") << " kappa-iff cases=" << iff.cases;
    if (!iff.passed()) out_ << ": " << iff.first_failure;
    out_ << "\n";
    return linear.holds && iff.passed() ? kOk : kVerdictFailed;
  }
  arity(1, 2);
  CompactOpen a = parse_compact_open(graph(), opt_.args[0]);
  if (opt_.args.size() == 1) {
    out_ << "set = " << format_compact_open(a) << "\n";
    out_ << "idempotent = " << format_element(set_to_idempotent(a, ring())) << "\n";
    out_ << "complement = " << format_compact_open(difference(CompactOpen::whole(graph()), a)) << "\n";
    return kOk;
  }
  CompactOpen b = parse_compact_open(graph(), opt_.args[1]);
  out_ << "meet = " << format_compact_open(meet(a, b)) << "\n";
  out_ << "join = " << format_compact_open(join(a, b)) << "\n";
  out_ << "difference = " << format_compact_open(difference(a, b)) << "\n";
  out_ << "leq = " << (leq(a, b) ? "true" : "false") << "\n";
  return kOk;
}

int Command::verify_iso() {
  arity(0, 0);
  std::size_t depth = opt_.depth.value_or(4);
  ValidationReport report = validate_pi(load_iso_spec(spec_file()), depth);
  std::vector<Verdict> failures = report.failures();
  for (const Verdict& v : failures) {
    out_ << "FAIL " << to_string(v.kind) << " (" << v.direction << ") " << v.subject << ": " << v.witness
         << "\n";
  }
  if (failures.empty()) {
    out_ << "PASS verify-iso: " << report.verdicts.size() << " checks at depth " << depth << "\n";
    return kOk;
  }
  out_ << "FAIL verify-iso: " << failures.size() << " of " << report.verdicts.size()
       << " checks failed at depth " << depth << "\n";
  return kVerdictFailed;
}

int Command::induce_groupoid_iso() {
  arity(0, 0);
  VerifiedIso iso = VerifiedIso::verify(load_iso_spec(spec_file()), 4);
  GroupoidIsoSpec omega = groupoid_iso_from_pi(iso, opt_.depth.value_or(3), 100, opt_.seed);
  auto [source, target] = graph_file_names(spec_file());
  out_ << format_groupoid_iso(omega, source, target);
  return kOk;
}

int Command::pi_from_omega() {
  arity(0, 0);
  GroupoidIsoSpec omega = load_groupoid_iso(spec_file(), opt_.depth.value_or(3));
  IsoSpec pi = pi_from_groupoid_iso(omega, ring());
  auto [source, target] = graph_file_names(spec_file());
  out_ << format_iso_spec(pi, source, target);
  return kOk;
}

int Command::check_props() {
  arity(0, 0);
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), opt_.suite) == names.end()) {
    throw Usage{"unknown suite '" + opt_.suite + "'"};
  }
  GraphPtr g;
  if (opt_.suite != "iso") g = graph();
  std::vector<PropertyResult> results = run_suite(opt_.suite, g, ring(), opt_.seed);
  std::size_t cases = 0;
  std::size_t failed = 0;
  for (const PropertyResult& r : results) {
    cases += r.cases;
    failed += r.passed() ? 0 : 1;
    out_ << (r.passed() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases;
    if (!r.passed()) out_ << " failures=" << r.failures << ": " << r.first_failure;
    if (!r.notes.empty()) out_ << " [" << r.notes << "]";
    out_ << "\n";
  }
  out_ << (failed == 0 ? "PASS" : "FAIL") << " suite=" << opt_.suite << " seed=" << opt_.seed << ": "
       << results.size() - failed << "/" << results.size() << " properties, " << cases << " cases\n";
  return failed == 0 ? kOk : kVerdictFailed;
}

int Command::run() {
  const std::string& v = opt_.verb;
  if (v == "nf" || v == "mul" || v == "add" || v == "star" || v == "deg" || v == "isdiag") {
    return element_verb();
  }
  if (v == "isnorm" || v == "alpha" || v == "dom" || v == "ran" || v == "compress") return action_verb();
  if (v == "weyl-eq" || v == "phi" || v == "phi-inv") return weyl_verb();
  if (v == "kappa") return kappa();
  if (v == "stone-check") return stone_check();
  if (v == "verify-iso") return verify_iso();
  if (v == "induce-groupoid-iso") return induce_groupoid_iso();
  if (v == "pi-from-omega") return pi_from_omega();
  if (v == "check-props") return check_props();
  throw Usage{"unknown verb '" + v + "'"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leavitt path algebras as Steinberg algebras of graph groupoids"};
  Options opt;
  app.add_option("verb", opt.verb,
                 "nf, mul, add, star, deg, isdiag, isnorm, alpha, dom, ran, compress, weyl-eq, phi, "
                 "phi-inv, kappa, stone-check, verify-iso, induce-groupoid-iso, pi-from-omega, "
                 "check-props")
      ->required();
  app.add_option("args", opt.args, "Literals for the verb");
  app.add_option("--graph", opt.graph_file, "Graph file");
  app.add_option("--ring", opt.ring_name, "Coefficient ring: int or gauss")->capture_default_str();
  app.add_option("--depth", opt.depth, "Depth: nf refinement, validation, table depth or kappa cap");
  app.add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--spec", opt.spec_file, "Iso spec or groupoid iso file");
  app.add_option("--suite", opt.suite, "check-props suite")->capture_default_str();
  app.positionals_at_end(false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    return Command(std::move(opt), out).run();
  } catch (const Usage& u) {
    err << "error: " << u.message << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kBadInput;
}

}  // namespace leavitt::cli
