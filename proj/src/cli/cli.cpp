#include "bicext/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bicext/classifier.hpp"
#include "bicext/codec.hpp"
#include "bicext/semigroup.hpp"
#include "bicext/window.hpp"

namespace bicext::cli {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::Result: return "result";
  }
  return "result";
}

json to_json(const Report& r) {
  return {{"payload", r.payload}, {"status", to_string(r.status)}};
}

namespace {

const char* const kDefaultFamily = "0,1,2";

struct Args {
  bool json_output = false;
  std::string out_path;

  std::string family = kDefaultFamily;
  std::string x;
  std::string y;
  std::string spec;
  std::string spec2;
  std::string to;
  std::string word;
  Nat window = 6;
  Nat image_bound = 4;
  Nat max_k = 6;
  bool no_pruning = false;
  unsigned threads = 0;
};

Report result(json payload, std::string text) {
  return {Status::Result, std::move(payload), std::move(text), 0, {}};
}

Report verdict(bool passed, json payload, std::string text) {
  return {passed ? Status::Pass : Status::Fail, std::move(payload), std::move(text), passed ? 0 : 1, {}};
}

Report usage_error(std::string message) {
  return {Status::Fail, nullptr, {}, 2, std::move(message)};
}

std::string join_elements(const std::vector<Element>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string check_line(const char* name, const WindowCheck& c) {
  std::ostringstream os;
  os << name << " (window " << c.window << "): " << (c.holds ? "pass" : "fail");
  if (c.witness) os << ", witness " << c.witness->x << ' ' << c.witness->y;
  return os.str();
}

Report cmd_mul(const Args& a) {
  const auto fam = parse_family(a.family);
  const Element z = multiply(parse_element(a.x), parse_element(a.y), fam);
  return result(to_json(z), to_string(z));
}

Report cmd_inv(const Args& a) {
  const auto fam = parse_family(a.family);
  const Element x = parse_element(a.x);
  if (!fam.contains(x)) throw ElementOutsideDomain(x, fam);
  const Element z = invert(x);
  return result(to_json(z), to_string(z));
}

Report cmd_order(const Args& a) {
  const auto fam = parse_family(a.family);
  const bool leq = natural_leq(parse_element(a.x), parse_element(a.y), fam);
  return result({{"leq", leq}}, leq ? "true" : "false");
}

Report cmd_family_check(const Args& a) {
  try {
    const auto fam = parse_family(a.family);
    return verdict(true, {{"valid", true}, {"family", to_json(fam)}, {"witness", nullptr}},
                   "omega-closed: " + to_string(fam));
  } catch (const NotOmegaClosed& e) {
    const auto& w = e.witness();
    std::ostringstream os;
    os << "not omega-closed: witness (" << w.a << ',' << w.b << ',' << w.n << ')';
    return verdict(false, {{"valid", false}, {"witness", {{"a", w.a}, {"b", w.b}, {"n", w.n}}}}, os.str());
  }
}

Report cmd_family_normalize(const Args& a) {
  const auto n = normalize_family(parse_family(a.family));
  return result({{"family", to_json(n.family)}, {"shift", n.shift}},
                to_string(n.family) + " shift " + std::to_string(n.shift));
}

Report cmd_endo_apply(const Args& a) {
  const Element z = apply_endo(parse_spec(a.spec), parse_element(a.x));
  return result(to_json(z), to_string(z));
}

Report cmd_endo_compose(const Args& a) {
  const EndoSpec e = compose_endo(parse_spec(a.spec), parse_spec(a.spec2));
  return result(to_json(e), to_string(e));
}

Report cmd_endo_verify(const Args& a) {
  const EndoSpec e = parse_spec(a.spec);
  const bool monoid = check_monoid(e);
  const WindowCheck hom = check_homomorphism_on_window(e, a.window);
  const WindowCheck inj = check_injective_on_window(e, a.window);
  std::ostringstream os;
  os << "monoid: " << (monoid ? "pass" : "fail") << '\n'
     << check_line("homomorphism", hom) << '\n'
     << check_line("injective", inj);
  return verdict(monoid && hom.holds && inj.holds,
                 {{"spec", to_json(e)}, {"monoid", monoid}, {"homomorphism", to_json(hom)},
                  {"injective", to_json(inj)}},
                 os.str());
}

Report cmd_endo_fixed(const Args& a) {
  const EndoSpec e = parse_spec(a.spec);
  const auto fixed = fixed_points_in_window(e, a.window);
  json list = json::array();
  for (const auto& x : fixed) list.push_back(to_json(x));
  std::ostringstream os;
  os << fixed.size() << " fixed point(s) in window " << a.window;
  if (!fixed.empty()) os << ": " << join_elements(fixed);
  return result({{"window", a.window}, {"count", fixed.size()}, {"fixed", list}}, os.str());
}

Report cmd_endo_restrict(const Args& a) {
  const EndoSpec r = restrict_to(parse_spec(a.spec), parse_family(a.to));
  return result(to_json(r), to_string(r));
}

Report cmd_classify(const Args& a) {
  const SearchBounds b{a.image_bound, a.window};
  const auto report = enumerate_monoid_endos(parse_family(a.family), b, {!a.no_pruning, a.threads});
  std::ostringstream os;
  os << "family " << report.family << ", image bound " << b.image_bound << ", window " << b.window
     << ", pruning " << (report.pruning ? "on" : "off") << '\n'
     << report.candidates.size() << " candidate(s)\n";
  for (const auto& c : report.candidates) {
    os << "  " << to_string(EndoSpec(c.table)) << " = "
       << (c.matched ? to_string(*c.matched) : std::string("unmatched")) << '\n';
  }
  for (const auto& [rule, n] : report.pruned_counts) os << "pruned " << to_string(rule) << ": " << n << '\n';
  for (const auto& [check, n] : report.rejected_counts) os << "rejected " << check << ": " << n << '\n';
  os << "elapsed " << report.elapsed.count() << " ms";
  return verdict(report.all_matched(), to_json(report), os.str());
}

Report cmd_theorems(const Args& a) {
  const SearchBounds b{a.image_bound, a.window};
  validate_bounds(b);
  const std::vector<OracleResult> results{
      verify_classification_f3(b),
      verify_composition_monoid(a.max_k),
      verify_non_extension(b),
      verify_fixed_point_criterion(a.max_k, a.window),
  };
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  json list = json::array();
  std::ostringstream os;
  for (const auto& r : results) {
    list.push_back(to_json(r));
    os << std::left << std::setw(24) << r.name << (r.passed ? "pass  " : "FAIL  ") << r.summary << '\n';
  }
  os << (all ? "all oracles pass" : "some oracle failed");
  return verdict(all,
                 {{"bounds", {{"image_bound", b.image_bound}, {"window", b.window}}},
                  {"max_k", a.max_k},
                  {"oracles", list}},
                 os.str());
}

Report cmd_word(const Args& a) {
  const BicyclicElement z = normalize_bicyclic_word(a.word);
  return result({{"k", z.k}, {"l", z.l}}, "(" + std::to_string(z.k) + "," + std::to_string(z.l) + ")");
}

void add_family(CLI::App* cmd, Args& a) {
  cmd->add_option("--family", a.family, "Lower bounds, e.g. 0,1,2 or 0,1,empty")->capture_default_str();
}

} // namespace

Report run(const std::vector<std::string>& args) {
  Args a;
  CLI::App app{"Bicyclic monoid extensions over omega-closed families"};
  app.name("bicext");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", a.json_output, "Print the canonical JSON document");
  app.add_option("--out", a.out_path, "Also write the JSON document to a file");

  auto* mul = app.add_subcommand("mul", "Multiply two elements");
  add_family(mul, a);
  mul->add_option("x", a.x)->required();
  mul->add_option("y", a.y)->required();

  auto* inv = app.add_subcommand("inv", "Inverse of an element");
  add_family(inv, a);
  inv->add_option("x", a.x)->required();

  auto* order = app.add_subcommand("order", "Natural partial order x <= y");
  add_family(order, a);
  order->add_option("x", a.x)->required();
  order->add_option("y", a.y)->required();

  auto* family = app.add_subcommand("family", "Family validation");
  family->require_subcommand(1);
  auto* fam_check = family->add_subcommand("check", "Check omega-closure");
  fam_check->add_option("family", a.family)->required();
  auto* fam_norm = family->add_subcommand("normalize", "Shift the family so that [0) is a member");
  fam_norm->add_option("family", a.family)->required();

  auto* endo = app.add_subcommand("endo", "Endomorphisms");
  endo->require_subcommand(1);
  auto* apply = endo->add_subcommand("apply", "Apply a spec to an element");
  apply->add_option("--spec", a.spec)->required();
  apply->add_option("x", a.x)->required();
  auto* compose = endo->add_subcommand("compose", "First spec followed by the second");
  compose->add_option("first", a.spec)->required();
  compose->add_option("second", a.spec2)->required();
  auto* verify = endo->add_subcommand("verify", "Monoid, homomorphism and injectivity checks");
  verify->add_option("--spec", a.spec)->required();
  verify->add_option("--window", a.window)->capture_default_str()->check(CLI::NonNegativeNumber);
  auto* fixed = endo->add_subcommand("fixed", "Fixed points on the window");
  fixed->add_option("--spec", a.spec)->required();
  fixed->add_option("--window", a.window)->capture_default_str()->check(CLI::NonNegativeNumber);
  auto* restrict_cmd = endo->add_subcommand("restrict", "Restrict a spec to a subfamily");
  restrict_cmd->add_option("--spec", a.spec)->required();
  restrict_cmd->add_option("--to", a.to)->required();

  auto* classify = app.add_subcommand("classify", "Enumerate injective monoid endomorphisms");
  add_family(classify, a);
  classify->add_option("--image-bound", a.image_bound)->capture_default_str();
  classify->add_option("--window", a.window)->capture_default_str();
  classify->add_flag("--no-pruning", a.no_pruning);
  classify->add_option("--threads", a.threads, "0 = hardware concurrency")->capture_default_str();

  auto* theorems = app.add_subcommand("theorems", "Run the oracle suite");
  theorems->add_option("--image-bound", a.image_bound)->capture_default_str();
  theorems->add_option("--window", a.window)->capture_default_str();
  theorems->add_option("--max-k", a.max_k)->capture_default_str();

  auto* word = app.add_subcommand("word", "Normal form of a word over {p, q}");
  word->add_option("word", a.word)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    if (code == 0) return result(nullptr, out.str());
    return usage_error(err.str());
  }

  Report r;
  try {
    if (mul->parsed()) r = cmd_mul(a);
    else if (inv->parsed()) r = cmd_inv(a);
    else if (order->parsed()) r = cmd_order(a);
    else if (fam_check->parsed()) r = cmd_family_check(a);
    else if (fam_norm->parsed()) r = cmd_family_normalize(a);
    else if (apply->parsed()) r = cmd_endo_apply(a);
    else if (compose->parsed()) r = cmd_endo_compose(a);
    else if (verify->parsed()) r = cmd_endo_verify(a);
    else if (fixed->parsed()) r = cmd_endo_fixed(a);
    else if (restrict_cmd->parsed()) r = cmd_endo_restrict(a);
    else if (classify->parsed()) r = cmd_classify(a);
    else if (theorems->parsed()) r = cmd_theorems(a);
    else r = cmd_word(a);
  } catch (const AlgebraError& e) {
    return usage_error(std::string("error: ") + e.what() + "\n");
  }

  const std::string document = to_json(r).dump(2);
  if (a.json_output) r.text = document;
  if (!a.out_path.empty()) {
    std::ofstream file(a.out_path);
    file << document << '\n';
    if (!file) return usage_error("error: cannot write " + a.out_path + "\n");
  }
  return r;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  const Report r = run(args);
  if (!r.text.empty()) {
    out << r.text;
    if (r.text.back() != '\n') out << '\n';
  }
  err << r.diagnostic;
  return r.exit_code;
}

} // namespace bicext::cli
