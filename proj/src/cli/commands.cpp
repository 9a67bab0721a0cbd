#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "branchinv/cli.hpp"
#include "branchinv/expansion.hpp"
#include "branchinv/geometry.hpp"
#include "branchinv/semigroup.hpp"
#include "branchinv/zariski.hpp"

namespace branchinv::cli {

namespace {

constexpr int kFirstPrecision = 32;
constexpr int kMaxPrecision = 4096;

[[noreturn]] void parse_error(const std::string& what) { throw BranchError(ErrorKind::Parse, what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return v.get<int>();
}

Coefficient as_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Coefficient(Integer(v.get<long>()));
  parse_error("coefficient " + v.dump() + " must be a rational string");
}

json rational_json(const Coefficient& c) { return to_string(c); }

std::string class_name(const CharData& cd) {
  std::string s = "K(";
  for (std::size_t i = 0; i < cd.beta.size(); ++i) s += (i ? "," : "") + std::to_string(cd.beta[i]);
  return s + ")";
}

json input_json(const Input& in) {
  return {{"source", in.source},
          {"branch", std::visit([](const auto& b) { return branch_json(b); }, in.branch)}};
}

json document(const std::string& command, std::vector<const Input*> inputs) {
  json doc{{"command", command}, {"inputs", json::array()}, {"results", json::object()},
           {"checks", json::object()}, {"precision_used", nullptr}};
  for (const Input* in : inputs) doc["inputs"].push_back(input_json(*in));
  return doc;
}

// Runs body(T) at the requested precision, or doubling from 32 while the
// precision is insufficient. Returns the precision that succeeded.
int adaptive(const Options& opt, const std::function<void(int)>& body) {
  if (opt.precision) {
    body(*opt.precision);
    return *opt.precision;
  }
  for (int t = kFirstPrecision;; t *= 2) {
    try {
      body(t);
      return t;
    } catch (const BranchError& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted || t >= kMaxPrecision) throw;
    }
  }
}

bool is_polynomial_input(const Input& in) { return std::holds_alternative<BivarPoly>(in.branch); }

BivarPoly input_polynomial(const Input& in, const Options& opt) {
  if (const auto* f = std::get_if<BivarPoly>(&in.branch)) return opt.swap_xy ? f->swap_xy() : *f;
  const BivarPoly f = implicitize(std::get<Parametrization>(in.branch));
  return opt.swap_xy ? f.swap_xy() : f;
}

struct Branch {
  Parametrization phi;
  CharData cd;
};

Branch input_branch(const Input& in, const Options& opt, int precision) {
  Parametrization phi = [&] {
    if (const auto* p = std::get_if<Parametrization>(&in.branch)) {
      return opt.swap_xy ? swap_xy(*p, precision) : *p;
    }
    return puiseux_parametrization(make_monic_y(input_polynomial(in, opt)), precision);
  }();
  try {
    CharData cd = char_sequence(phi);
    return {std::move(phi), std::move(cd)};
  } catch (const BranchError& e) {
    if (e.kind() != ErrorKind::NotTransversal || opt.swap_xy) throw;
    const std::string what = e.what();
    throw BranchError(ErrorKind::NotTransversal,
                      what.substr(to_string(e.kind()).size() + 2) + "; pass --swap-xy to exchange x and y");
  }
}

json contact_json(const ContactOrder& c) { return c.infinite ? json("infinite") : rational_json(c.theta); }

json move_json(const MoveRecord& mv) {
  static const char* names[] = {"QMove", "PMove", "Scale"};
  return {{"kind", names[static_cast<int>(mv.kind)]},
          {"a", mv.a},
          {"b", mv.b},
          {"c", rational_json(mv.c)},
          {"target_exponent", mv.target_exponent}};
}

std::string value_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("kind") && v.contains("terms")) {
    return std::visit([](const auto& b) { return b.to_string(); }, parse_branch(v));
  }
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + value_text(v[i]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      s += (first ? "" : ", ") + k + ": " + value_text(x);
      first = false;
    }
    return s + "}";
  }
  return v.dump();
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::PrecisionExhausted:
      return 4;
    case ErrorKind::HypothesisNotMet:
    case ErrorKind::NonIntegralResult:
    case ErrorKind::WitnessMismatch:
    case ErrorKind::NotRealizable:
    case ErrorKind::BranchesEqual:
      return 5;
    case ErrorKind::CrossCheckFailed:
    case ErrorKind::ZeroLeadingC:
      return 6;
    case ErrorKind::NonRationalCoefficient:
      return 7;
    default:
      return 3;
  }
}

fixtures::Branch parse_branch(const json& doc) {
  try {
    const std::string kind = field(doc, "kind").get<std::string>();
    const json& terms = field(doc, "terms");
    if (!terms.is_array()) parse_error("'terms' must be a list");
    if (kind == "parametrization") {
      const int n = as_int(field(doc, "n"), "n");
      if (n < 1) parse_error("n must be positive");
      TSeries::TermMap map;
      int last = -1;
      for (const json& t : terms) {
        if (!t.is_array() || t.size() != 2) parse_error("term " + t.dump() + " is not [exponent, coefficient]");
        const int e = as_int(t[0], "exponent");
        if (e <= last) parse_error("exponents must be strictly increasing");
        last = e;
        map[e] = as_rational(t[1]);
      }
      if (!doc.contains("trunc")) return Parametrization::from_terms(n, map);
      const int trunc = as_int(doc.at("trunc"), "trunc");
      if (trunc <= last) parse_error("trunc must exceed every exponent");
      return Parametrization(n, TSeries("t", map, trunc), false);
    }
    if (kind == "polynomial") {
      BivarPoly::TermMap map;
      for (const json& t : terms) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 2) {
          parse_error("term " + t.dump() + " is not [[i, j], coefficient]");
        }
        const Monomial mono{as_int(t[0][0], "x exponent"), as_int(t[0][1], "y exponent")};
        if (mono.first < 0 || mono.second < 0) parse_error("negative exponent in " + t.dump());
        if (map.count(mono)) parse_error("repeated monomial " + t[0].dump());
        map[mono] = as_rational(t[1]);
      }
      return BivarPoly(std::move(map));
    }
    parse_error("unknown branch kind '" + kind + "'");
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
}

json branch_json(const Parametrization& phi) {
  json terms = json::array();
  for (const auto& [e, c] : phi.y().terms()) terms.push_back({e, rational_json(c)});
  json out{{"kind", "parametrization"}, {"n", phi.n()}, {"terms", terms}};
  if (!phi.is_polynomial()) out["trunc"] = phi.trunc();
  return out;
}

json branch_json(const BivarPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{m.first, m.second}, rational_json(c)});
  return {{"kind", "polynomial"}, {"terms", terms}};
}

Input load_fixture(const std::string& name) {
  auto b = fixtures::lookup(name);
  if (!b) parse_error("unknown fixture '" + name + "'");
  return {"fixture:" + name, std::move(*b)};
}

Input load_input(const std::string& arg) {
  if (arg.rfind("fixture:", 0) == 0) return load_fixture(arg.substr(8));
  std::string text;
  if (!arg.empty() && arg.front() == '{') {
    text = arg;
  } else {
    std::ifstream file(arg);
    if (!file) parse_error("cannot read '" + arg + "'");
    std::stringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    parse_error(arg + ": " + e.what());
  }
  return {arg.front() == '{' ? "inline" : arg, parse_branch(doc)};
}

json cmd_invariants(const Input& in, const Options& opt) {
  json doc = document("invariants", {&in});
  json& res = doc["results"];
  const int t = adaptive(opt, [&](int precision) {
    const Branch b = input_branch(in, opt, precision);
    const CharData& cd = b.cd;
    res = {{"class", class_name(cd)}, {"n", cd.n},          {"m", cd.m},
           {"beta", cd.beta},         {"e", cd.e},          {"n_i", cd.n_seq},
           {"semigroup", cd.v},       {"conductor", cd.conductor}, {"genus", cd.genus}};
    if (is_polynomial_input(in) || opt.swap_xy) res["parametrization"] = branch_json(b.phi);
  });
  const bool exact = !is_polynomial_input(in) && !opt.swap_xy;
  if (!exact || opt.precision) doc["precision_used"] = t;
  return doc;
}

json cmd_zariski(const Input& in, const Options& opt) {
  json doc = document("zariski", {&in});
  doc["precision_used"] = adaptive(opt, [&](int precision) {
    const Branch b = input_branch(in, opt, precision);
    const ZariskiResult r = zariski_invariant(b.phi);
    json res{{"class", class_name(b.cd)}};
    json checks = json::object();
    if (r.infinite) {
      res["lambda"] = "infinite";
    } else {
      res["lambda"] = r.lambda;
      res["b_lambda"] = rational_json(r.b_lambda);
      res["max_contact"] = rational_json(make_rational(r.lambda, b.cd.n));
    }
    json survivors = json::array();
    for (const auto& s : r.survivors) survivors.push_back({s.exponent, rational_json(s.coefficient)});
    res["survivors"] = survivors;
    res["normal_form"] = branch_json(r.normal_form);
    if (r.witness) res["witness"] = branch_json(*r.witness);
    json moves = json::array();
    for (const auto& mv : r.moves) moves.push_back(move_json(mv));
    res["moves"] = moves;
    if (r.witness_intersection) {
      res["witness_intersection"] = *r.witness_intersection;
      checks["witness_intersection"] = {{"expected", (b.cd.n1() - 1) * b.cd.m + r.lambda},
                                        {"computed", *r.witness_intersection}};
      checks["witness_in_B"] = true;
    }
    doc["results"] = res;
    doc["checks"] = checks;
  });
  return doc;
}

json cmd_pair(const std::string& sub, const Input& a, const Input& b, const Options& opt) {
  json doc = document("pair " + sub, {&a, &b});
  json& res = doc["results"];
  json& checks = doc["checks"];
  if (sub != "intersect" && sub != "contact" && sub != "infer") parse_error("unknown pair command '" + sub + "'");
  doc["precision_used"] = adaptive(opt, [&](int precision) {
    const Branch ba = input_branch(a, opt, precision);
    const Branch bb = input_branch(b, opt, precision);
    if (sub == "intersect") {
      res = {{"intersection", intersection(ba.phi, bb.phi)}};
      return;
    }
    if (sub == "contact") {
      const ContactOrder c = contact(ba.phi, bb.phi);
      res = {{"contact", contact_json(c)}};
      if (!c.infinite) {
        const int i = intersection(ba.phi, bb.phi);
        res["intersection"] = i;
        checks["merle"] = {{"intersection_from_contact",
                            rational_json(intersection_from_contact(ba.cd, c.theta, bb.cd.n))},
                           {"intersection", i}};
      }
      return;
    }
    int lambda = 0;
    if (opt.known_lambda) {
      lambda = *opt.known_lambda;
      res["lambda_source"] = "given";
    } else {
      const ZariskiResult zf = zariski_invariant(ba.phi);
      if (zf.infinite) throw BranchError(ErrorKind::HypothesisNotMet, "lambda of the first branch is infinite");
      lambda = zf.lambda;
      res["lambda_source"] = "computed";
    }
    const int i = intersection(ba.phi, bb.phi);
    res["lambda"] = lambda;
    res["intersection"] = i;
    res["bound"] = rational_json(Coefficient(bb.cd.n) * Coefficient((ba.cd.n1() - 1) * ba.cd.m + lambda) /
                                 ba.cd.n1());
    res["lambda_other"] = infer_zariski(ba.cd, lambda, bb.cd.n, {Evidence::Kind::Intersection, Coefficient(i)});
    try {
      const ZariskiResult zh = zariski_invariant(bb.phi);
      if (!zh.infinite) checks["direct_lambda_other"] = zh.lambda;
    } catch (const BranchError& e) {
      if (e.kind() == ErrorKind::PrecisionExhausted) throw;
    }
  });
  return doc;
}

json cmd_expand(const Input& f_in, const Input& h_in, const Options& opt) {
  json doc = document("expand", {&f_in, &h_in});
  doc["precision_used"] = adaptive(opt, [&](int precision) {
    const BivarPoly f = make_monic_y(input_polynomial(f_in, opt));
    const Branch bf = input_branch(f_in, opt, precision);
    const Branch bh = input_branch(h_in, opt, precision);
    int lambda = 0;
    if (opt.known_lambda) {
      lambda = *opt.known_lambda;
    } else {
      const ZariskiResult z = zariski_invariant(bf.phi);
      if (z.infinite) throw BranchError(ErrorKind::HypothesisNotMet, "lambda of f is infinite");
      lambda = z.lambda;
    }
    const ExpansionResult r = zariski_decomposition(f, bh.phi, bf.cd, lambda);
    json A = json::array();
    for (const auto& a : r.A) A.push_back(branch_json(a));
    doc["results"] = {{"lambda", lambda}, {"h", branch_json(r.h)}, {"A", A},          {"c", rational_json(r.c)},
                      {"p", r.p},         {"q", r.q},              {"h1", branch_json(r.h1)}};
    json checks{{"reconstruction", r.checks.reconstruction},
                {"I(f,h)", r.checks.intersection_f_h},
                {"I(A_0,h)", r.checks.intersection_a0_h},
                {"p n_1 + q m_1", r.checks.weight}};
    checks["I(h,h1)"] = r.checks.intersection_h_h1 ? json(*r.checks.intersection_h_h1) : json("infinite");
    doc["checks"] = checks;
  });
  return doc;
}

json cmd_convert(const std::string& sub, const Input& in, const Options& opt) {
  json doc = document("convert " + sub, {&in});
  if (sub == "implicitize") {
    if (is_polynomial_input(in)) parse_error("implicitize expects a parametrization");
    const BivarPoly f = input_polynomial(in, opt);
    doc["results"] = {{"branch", branch_json(f)}};
    const auto& phi = std::get<Parametrization>(in.branch);
    if (!opt.swap_xy) doc["checks"] = {{"substitution", substitute(f, phi.x_series(), phi.y()).is_zero()}};
    return doc;
  }
  if (sub != "puiseux") parse_error("unknown convert command '" + sub + "'");
  if (!is_polynomial_input(in)) parse_error("puiseux expects a polynomial");
  const BivarPoly f = make_monic_y(input_polynomial(in, opt));
  int precision = 0;
  if (opt.precision) {
    precision = *opt.precision;
  } else {
    // enough for the Zariski reduction of the result
    std::optional<CharData> cd;
    adaptive(opt, [&](int t) { cd = input_branch(in, opt, t).cd; });
    precision = std::max(kFirstPrecision, cd->conductor + 2 * cd->n);
  }
  const Parametrization phi = puiseux_parametrization(f, precision);
  const TSeries residual = substitute(f, phi.x_series(), phi.y());
  doc["results"] = {{"branch", branch_json(phi)}};
  const OrderResult o = residual.order();
  doc["checks"] = {{"residual",
                    residual.is_exact() && residual.is_zero()
                        ? json("exactly zero")
                        : json(o.is_known() ? "order " + std::to_string(o.value)
                                            : "zero below t^" + std::to_string(o.value))}};
  doc["precision_used"] = precision;
  return doc;
}

std::string render_text(const json& doc) {
  std::ostringstream os;
  os << doc.at("command").get<std::string>() << "\n";
  for (const auto& [k, v] : doc.at("results").items()) os << "  " << k << ": " << value_text(v) << "\n";
  if (!doc.at("checks").empty()) {
    os << "checks\n";
    for (const auto& [k, v] : doc.at("checks").items()) os << "  " << k << ": " << value_text(v) << "\n";
  }
  if (!doc.at("precision_used").is_null()) os << "precision: " << doc.at("precision_used").dump() << "\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of plane branches in exact arithmetic", "branchinv"};
  app.require_subcommand(1);
  Options opt;
  bool as_json = false;
  std::vector<std::string> fixture_names;
  int precision = 0;
  int known_lambda = 0;
  auto* precision_opt = app.add_option("--precision", precision, "series precision T (default: adaptive)")
                            ->check(CLI::Range(1, kMaxPrecision * 16));
  app.add_flag("--json", as_json, "emit one JSON document");
  app.add_flag("--swap-xy", opt.swap_xy, "exchange x and y before validation");
  app.add_option("--fixture", fixture_names, "built-in branch, repeatable; taken before positional inputs")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* lambda_opt = app.add_option("--known-lambda", known_lambda, "Zariski invariant of the first branch");

  std::vector<std::string> positional;
  std::string command;
  std::string sub;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& cmd) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    s->add_option("inputs", positional, "branch files, fixture:<name> or inline JSON");
    s->callback([&, cmd, name] {
      command = cmd;
      sub = name;
    });
    return s;
  };
  leaf(&app, "invariants", "characteristic sequence, semigroup and conductor", "invariants");
  leaf(&app, "zariski", "Zariski invariant, witness curve and move log", "zariski");
  leaf(&app, "expand", "h-adic expansion and decomposition of f along h", "expand");
  CLI::App* pair = app.add_subcommand("pair", "two-branch computations");
  pair->fallthrough();
  pair->require_subcommand(1);
  leaf(pair, "intersect", "intersection multiplicity", "pair");
  leaf(pair, "contact", "contact order", "pair");
  leaf(pair, "infer", "Zariski invariant of a close branch", "pair");
  CLI::App* convert = app.add_subcommand("convert", "switch between parametrization and equation");
  convert->fallthrough();
  convert->require_subcommand(1);
  leaf(convert, "implicitize", "implicit equation of a polynomial parametrization", "convert");
  leaf(convert, "puiseux", "Puiseux parametrization of a Weierstrass polynomial", "convert");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (*precision_opt) opt.precision = precision;
  if (*lambda_opt) opt.known_lambda = known_lambda;

  try {
    std::vector<Input> inputs;
    for (const auto& name : fixture_names) inputs.push_back(load_fixture(name));
    for (const auto& arg : positional) inputs.push_back(load_input(arg));
    const std::size_t arity = (command == "pair" || command == "expand") ? 2 : 1;
    if (inputs.size() != arity) {
      parse_error(command + (sub != command ? " " + sub : "") + " takes " + std::to_string(arity) +
                  " branch(es), got " + std::to_string(inputs.size()));
    }
    json doc;
    if (command == "invariants") doc = cmd_invariants(inputs[0], opt);
    if (command == "zariski") doc = cmd_zariski(inputs[0], opt);
    if (command == "expand") doc = cmd_expand(inputs[0], inputs[1], opt);
    if (command == "pair") doc = cmd_pair(sub, inputs[0], inputs[1], opt);
    if (command == "convert") doc = cmd_convert(sub, inputs[0], opt);
    out << (as_json ? doc.dump(2) + "\n" : render_text(doc));
    return 0;
  } catch (const BranchError& e) {
    const int code = exit_code(e.kind());
    if (as_json) {
      json doc{{"command", command + (sub != command ? " " + sub : "")},
               {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}},
               {"exit_code", code}};
      out << doc.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return code;
  }
}

}  // namespace branchinv::cli
