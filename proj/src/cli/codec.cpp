#include "bicext/codec.hpp"

#include <cctype>
#include <charconv>

namespace bicext {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Nat parse_nat(std::string_view s, std::string_view what) {
  s = trim(s);
  Nat value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" +
                     std::string(s) + "'");
  }
  return value;
}

bool starts_with_brace(std::string_view s) { return !s.empty() && s.front() == '{'; }

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
}

Nat json_nat(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("missing integer field '") + key + "'");
  }
  const Nat v = j.at(key).get<Nat>();
  if (v < 0) throw ParseError(std::string("field '") + key + "' must be non-negative");
  return v;
}

/// "alpha:3,1" -> {3, 1}
std::vector<Nat> spec_params(std::string_view body, std::size_t count, std::string_view kind) {
  const auto parts = split(body, ',');
  if (parts.size() != count) {
    throw ParseError(std::string(kind) + " takes " + std::to_string(count) + " parameter(s)");
  }
  std::vector<Nat> out;
  for (auto p : parts) out.push_back(parse_nat(p, kind));
  return out;
}

GeneratorTable parse_table_body(std::string_view body) {
  std::optional<OmegaClosedFamily> fam;
  std::optional<Element> plus;
  std::optional<Element> minus;
  std::map<Nat, Element> idempotents;
  for (auto field : split(body, ';')) {
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("table field '" + std::string(field) + "' needs name=value");
    }
    const auto name = trim(field.substr(0, eq));
    const auto value = trim(field.substr(eq + 1));
    if (name == "family") {
      fam = parse_family(value);
    } else if (name == "plus") {
      plus = parse_element(value);
    } else if (name == "minus") {
      minus = parse_element(value);
    } else if (name.size() > 1 && name.front() == 'e') {
      idempotents.emplace(parse_nat(name.substr(1), "idempotent level"), parse_element(value));
    } else {
      throw ParseError("unknown table field '" + std::string(name) + "'");
    }
  }
  if (!fam || !plus || !minus) throw ParseError("a table needs family, plus and minus fields");
  return GeneratorTable(*fam, *plus, *minus, std::move(idempotents));
}

} // namespace

Element parse_element(std::string_view text) {
  const auto s = trim(text);
  if (s == "zero") return Element::zero();
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("expected an element '(i,j,a)' or 'zero', got '" + std::string(s) + "'");
  }
  const auto parts = split(s.substr(1, s.size() - 2), ',');
  if (parts.size() != 3) {
    throw ParseError("an element has three coordinates, got '" + std::string(s) + "'");
  }
  return Element(parse_nat(parts[0], "i"), parse_nat(parts[1], "j"), parse_nat(parts[2], "set"));
}

OmegaClosedFamily parse_family(std::string_view text) {
  const auto s = trim(text);
  if (starts_with_brace(s)) return family_from_json(parse_json_text(s));
  std::vector<Nat> bounds;
  bool empty = false;
  for (auto part : split(s, ',')) {
    if (part == "empty") {
      empty = true;
    } else {
      bounds.push_back(parse_nat(part, "lower bound"));
    }
  }
  return OmegaClosedFamily::validate(std::move(bounds), empty);
}

EndoSpec parse_spec(std::string_view text) {
  const auto s = trim(text);
  if (starts_with_brace(s)) return spec_from_json(parse_json_text(s));
  if (s.starts_with("table(") && s.ends_with(")")) {
    return parse_table_body(s.substr(6, s.size() - 7));
  }
  const auto colon = s.find(':');
  const auto kind = s.substr(0, colon);
  const auto body = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  if (kind == "identity") {
    return identity_table(body.empty() ? families::f3() : parse_family(body));
  }
  if (colon == std::string_view::npos) {
    throw ParseError("expected a spec such as 'alpha_bracket:2', got '" + std::string(s) + "'");
  }
  if (kind == "alpha_bracket") return AlphaBracket(spec_params(body, 1, kind)[0]);
  if (kind == "scale") return Scale(spec_params(body, 1, kind)[0]);
  if (kind == "alpha") {
    const auto kp = spec_params(body, 2, kind);
    return AlphaKP(kp[0], kp[1]);
  }
  if (kind == "beta") {
    const auto kp = spec_params(body, 2, kind);
    return BetaKP(kp[0], kp[1]);
  }
  throw ParseError("unknown spec kind '" + std::string(kind) + "'");
}

json to_json(const Element& x) {
  if (x.is_zero()) return "zero";
  return {{"i", x.i()}, {"j", x.j()}, {"set", x.level()}};
}

json to_json(const OmegaClosedFamily& fam) {
  return {{"bounds", fam.lower_bounds()}, {"empty", fam.contains_empty()}};
}

json to_json(const EndoSpec& e) {
  if (const auto* a = std::get_if<AlphaBracket>(&e)) return {{"kind", "alpha_bracket"}, {"k", a->k()}};
  if (const auto* a = std::get_if<AlphaKP>(&e)) return {{"kind", "alpha"}, {"k", a->k()}, {"p", a->p()}};
  if (const auto* b = std::get_if<BetaKP>(&e)) return {{"kind", "beta"}, {"k", b->k()}, {"p", b->p()}};
  if (const auto* s = std::get_if<Scale>(&e)) return {{"kind", "scale"}, {"k", s->k()}};
  const auto& t = std::get<GeneratorTable>(e);
  json idempotents = json::object();
  for (const auto& [level, image] : t.idempotent_images()) {
    idempotents[std::to_string(level)] = to_json(image);
  }
  return {{"kind", "table"},
          {"family", to_json(t.family())},
          {"images", {{"plus", to_json(t.plus_image())}, {"minus", to_json(t.minus_image())}, {"e", idempotents}}}};
}

json to_json(const WindowCheck& check) {
  json out = {{"holds", check.holds}, {"window", check.window}, {"witness", nullptr}};
  if (check.witness) out["witness"] = {to_json(check.witness->x), to_json(check.witness->y)};
  return out;
}

json to_json(const OracleResult& result) {
  return {{"name", result.name}, {"passed", result.passed}, {"summary", result.summary}};
}

json to_json(const ClassificationReport& report, bool with_timing) {
  json candidates = json::array();
  for (const auto& c : report.candidates) {
    candidates.push_back({{"spec", to_json(EndoSpec(c.table))},
                          {"matched", c.matched ? to_json(*c.matched) : json(nullptr)}});
  }
  json pruned = json::object();
  for (const auto& [rule, n] : report.pruned_counts) pruned[to_string(rule)] = n;
  json out = {{"family", to_json(report.family)},
              {"bounds", {{"image_bound", report.bounds.image_bound}, {"window", report.bounds.window}}},
              {"pruning", report.pruning},
              {"candidates", candidates},
              {"prunedCounts", pruned},
              {"rejectedCounts", report.rejected_counts}};
  if (with_timing) out["elapsed_ms"] = report.elapsed.count();
  return out;
}

Element element_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "zero") return Element::zero();
    throw ParseError("an element string must be \"zero\"");
  }
  if (!j.is_object()) throw ParseError("an element is an object {i, j, set} or \"zero\"");
  return Element(json_nat(j, "i"), json_nat(j, "j"), json_nat(j, "set"));
}

OmegaClosedFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bounds") || !j.at("bounds").is_array()) {
    throw ParseError("a family is an object {bounds: [...], empty: bool}");
  }
  std::vector<Nat> bounds;
  for (const auto& b : j.at("bounds")) {
    if (!b.is_number_integer()) throw ParseError("family bounds must be integers");
    bounds.push_back(b.get<Nat>());
  }
  const bool empty = j.contains("empty") && j.at("empty").is_boolean() && j.at("empty").get<bool>();
  return OmegaClosedFamily::validate(std::move(bounds), empty);
}

EndoSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("a spec is an object with a string field 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "alpha_bracket") return AlphaBracket(json_nat(j, "k"));
  if (kind == "scale") return Scale(json_nat(j, "k"));
  if (kind == "alpha") return AlphaKP(json_nat(j, "k"), json_nat(j, "p"));
  if (kind == "beta") return BetaKP(json_nat(j, "k"), json_nat(j, "p"));
  if (kind == "table") {
    if (!j.contains("family") || !j.contains("images")) {
      throw ParseError("a table spec needs 'family' and 'images'");
    }
    const json& images = j.at("images");
    if (!images.is_object() || !images.contains("plus") || !images.contains("minus") ||
        !images.contains("e") || !images.at("e").is_object()) {
      throw ParseError("table images need 'plus', 'minus' and an object 'e'");
    }
    std::map<Nat, Element> idempotents;
    for (const auto& [level, image] : images.at("e").items()) {
      idempotents.emplace(parse_nat(level, "idempotent level"), element_from_json(image));
    }
    return GeneratorTable(family_from_json(j.at("family")), element_from_json(images.at("plus")),
                          element_from_json(images.at("minus")), std::move(idempotents));
  }
  throw ParseError("unknown spec kind '" + kind + "'");
}

} // namespace bicext
