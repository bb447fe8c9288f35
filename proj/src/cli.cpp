#include "fibkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "fibkit/serialize.hpp"

namespace fibkit {

namespace {

struct Output {
  int code = kOk;
  Json json;
  std::string text;
  std::string dot;
};

struct Globals {
  std::string format = "json";
  std::string out;
  int jobs = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string rationals_text(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const auto& q : v) s.push_back(q.get_str());
  return "{" + join(s, ", ") + "}";
}

// ---------------------------------------------------------------- fibcat

Output cmd_pentagon() {
  Output o;
  Json sols = Json::array();
  std::ostringstream text;
  const auto all = solve_pentagon();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto bad = verify_pentagon(all[i]);
    if (!bad.empty()) o.code = kVerificationFailure;
    Json s = to_json(all[i]);
    s["a"] = to_json(all[i].a());
    s["a_approx"] = all[i].a().approx().real();
    s["pentagon_failures"] = bad;
    sols.push_back(s);
    text << "solution " << i << ": a = " << all[i].a() << " (~" << all[i].a().approx().real()
         << "), alpha = " << all[i].alpha << ", A = [[a, 1], [-a, -a]], pentagon "
         << (bad.empty() ? "holds" : "fails: " + join(bad, "; ")) << "\n";
  }
  o.json = Json{{"count", all.size()}, {"solutions", sols}};
  o.text = text.str();
  return o;
}

Output cmd_braidings() {
  Output o;
  Json pairs = Json::array();
  std::ostringstream text;
  const auto all = solve_pentagon();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& b : solve_braidings(all[i])) {
      const auto bad = verify_hexagon(all[i], b);
      if (!bad.empty()) o.code = kVerificationFailure;
      Json p = to_json(b);
      p["associator"] = i;
      p["a"] = to_json(all[i].a());
      p["hexagon_failures"] = bad;
      pairs.push_back(p);
      text << "associator " << i << ", u = z10^" << b.exponent() << ": hexagon "
           << (bad.empty() ? "holds" : "fails: " + join(bad, "; ")) << "\n";
    }
  }
  o.json = Json{{"count", pairs.size()}, {"pairs", pairs}};
  o.text = text.str();
  return o;
}

TConvention parse_convention(const std::string& s) {
  if (s == "u^-2") return TConvention::inverse_square;
  if (s == "u^2") return TConvention::square;
  throw std::invalid_argument("convention must be u^-2 or u^2");
}

Output cmd_modular_data(int m, const std::string& convention) {
  Output o;
  const FibModularData d = modular_data(m, parse_convention(convention));
  o.json = to_json(d);
  std::ostringstream text;
  text << "m = " << d.m << "\n"
       << "a = " << d.a << "\n"
       << "rho = " << d.rho << "\n"
       << "dimX = " << d.dimX << "\n"
       << "DimC = " << d.DimC << "\n"
       << "xi^2 = " << d.xi_squared << "\n"
       << "S = [[" << d.S[0][0] << ", " << d.S[0][1] << "], [" << d.S[1][0] << ", " << d.S[1][1] << "]]\n"
       << "T = diag(" << d.T[0][0] << ", " << d.T[1][1] << ")\n";
  o.text = text.str();
  return o;
}

Output cmd_sl2_check(const std::vector<int>& ms) {
  Output o;
  Json results = Json::array();
  std::ostringstream text;
  std::optional<TConvention> common;
  bool consistent = true;
  for (int m : ms) {
    const FibModularData d = modular_data(m);
    Json row{{"m", m}};
    try {
      const Sl2Report r = verify_sl2(d);
      row["report"] = to_json(r);
      if (!r.s4_identity) consistent = false;
      if (common && *common != *r.selected) consistent = false;
      common = r.selected;
      text << "m = " << m << ": S^4 = 1 " << (r.s4_identity ? "yes" : "no") << ", (TS)^3 = S^2 with t_X = "
           << to_string(*r.selected) << "\n";
    } catch (const MathError& e) {
      row["error"] = e.what();
      consistent = false;
      text << "m = " << m << ": " << e.what() << "\n";
    }
    results.push_back(row);
  }
  o.json = Json{{"results", results},
                {"consistent", consistent},
                {"selected", consistent && common ? Json(to_string(*common)) : Json(nullptr)}};
  if (!consistent) o.code = kVerificationFailure;
  o.text = text.str() + (consistent ? "one convention for all categories\n" : "conventions disagree\n");
  return o;
}

// ---------------------------------------------------------------- nim

void check_ell(int ell, int hi) {
  if (ell < 1 || ell > hi) throw std::invalid_argument("--ell must be between 1 and " + std::to_string(hi));
}

Output nim_listing(int ell, const std::vector<NimRep>& reps, const std::vector<SetPartition>& parts) {
  Output o;
  Json list = Json::array();
  std::ostringstream text, dot;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto bad = verify(reps[i]);
    if (!bad.empty()) o.code = kVerificationFailure;
    Json r{{"partition", parts[i].ell ? to_json(parts[i]) : Json(nullptr)}, {"rank", reps[i].rank()}, {"rep", to_json(reps[i])}};
    if (!bad.empty()) r["failures"] = bad;
    list.push_back(r);
    text << (parts[i].ell ? parts[i].to_string() : std::string("?")) << ": rank " << reps[i].rank() << "\n";
    dot << "// " << (parts[i].ell ? parts[i].to_string() : std::string("unmatched")) << "\n" << to_dot(reps[i]);
  }
  o.json = Json{{"ell", ell}, {"count", reps.size()}, {"bell", bell_number(ell)}, {"reps", list}};
  o.text = text.str() + std::to_string(reps.size()) + " indecomposable NIM-reps\n";
  o.dot = dot.str();
  return o;
}

Output cmd_nim_classify(int ell) {
  check_ell(ell, 6);
  return nim_listing(ell, classify(ell), all_partitions(ell));
}

Output cmd_nim_brute(int ell, int max_rank, int jobs) {
  check_ell(ell, 3);
  const auto found = brute_enumerate(fib_power(ell), "fib^" + std::to_string(ell), max_rank, BruteOptions{2, jobs});
  const auto expected = classify(ell);
  const auto parts = all_partitions(ell);
  std::vector<SetPartition> matched;
  for (const auto& rep : found) {
    SetPartition p;
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (isomorphic(rep, expected[i])) p = parts[i];
    matched.push_back(p);
  }
  Output o = nim_listing(ell, found, matched);
  o.json["max_rank"] = max_rank;
  return o;
}

Output cmd_nim_dot(int ell, const std::string& partition) {
  check_ell(ell, 6);
  if (partition.empty()) return cmd_nim_classify(ell);
  const SetPartition p = SetPartition::parse(ell, partition);
  return nim_listing(ell, {from_partition(ell, p)}, {p});
}

// ---------------------------------------------------------------- aniso

Output cmd_aniso_scan(const std::string& params, int jobs) {
  Output o;
  const ScanReport r = scan_partitions(parse_params(params), jobs);
  o.json = to_json(r);
  std::ostringstream text;
  for (const auto& e : r.entries) {
    text << e.partition.to_string() << ": " << e.cls.to_string() << " -> "
         << (e.check.ribbon ? "ribbon" : "not ribbon (" + monomial_label(*e.check.witness) + ")") << "\n";
  }
  o.text = text.str();
  return o;
}

// ---------------------------------------------------------------- voa

VoaModel parse_model(const std::string& text) {
  const auto names = split(text, '*');
  if (names.empty()) throw std::invalid_argument("empty model name");
  VoaModel m = catalog_model(names[0]);
  for (std::size_t i = 1; i < names.size(); ++i) m = model_product(m, catalog_model(names[i]));
  return m;
}

std::vector<std::size_t> parse_currents(const VoaModel& m, const std::string& text) {
  std::vector<std::size_t> out;
  for (auto label : split(text, ',')) {
    // ':' stands for the product separator on the command line
    std::string full;
    for (char ch : label) full += ch == ':' ? std::string("⊠") : std::string(1, ch);
    try {
      out.push_back(m.index(full));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("unknown label '" + label + "' in " + m.name);
    }
  }
  return out;
}

Output extension_output(const VoaModel& m, const std::vector<std::size_t>& currents) {
  Output o;
  const ExtensionReport r = simple_current_extension(m, currents);
  o.json = to_json(r, m);
  std::ostringstream text;
  text << m.name << " extended by " << r.currents.size() << " currents"
       << (r.currents_integral ? "" : " (currents have non-integer weight)") << "\n";
  for (const auto& orb : r.orbits) {
    std::vector<std::string> labels;
    for (std::size_t i : orb.members) labels.push_back(m.fusion.label(i));
    text << "{" << join(labels, ", ") << "}: " << (orb.local ? "local" : "non-local")
         << ", endomorphisms " << orb.endomorphisms << ", h = " << orb.weight_mod_1.get_str() << " mod 1\n";
  }
  text << "local spectrum " << rationals_text(r.local_spectrum) << "\n";
  o.text = text.str();
  return o;
}

Output model_output(const VoaModel& m, bool fusion, bool weights, bool c) {
  Output o;
  const bool all = !fusion && !weights && !c;
  Json full = to_json(m);
  o.json = Json{{"name", m.name}};
  std::ostringstream text;
  text << m.name << "\n";
  if (all || c) {
    o.json["c"] = full["c"];
    text << "c = " << m.c.get_str() << "\n";
  }
  if (all || weights) {
    o.json["labels"] = full["labels"];
    o.json["weights"] = full["weights"];
    for (std::size_t i = 0; i < m.weights.size(); ++i) text << "h" << m.fusion.label(i) << " = " << m.weights[i].get_str() << "\n";
  }
  if (all || fusion) {
    o.json["fusion"] = full["fusion"];
    for (std::size_t i = 0; i < m.fusion.rank(); ++i)
      for (std::size_t j = i; j < m.fusion.rank(); ++j) {
        std::vector<std::string> terms;
        const auto p = m.fusion.product(i, j);
        for (std::size_t k = 0; k < p.size(); ++k)
          if (p[k]) terms.push_back((p[k] > 1 ? std::to_string(p[k]) + "*" : "") + m.fusion.label(k));
        text << m.fusion.label(i) << " * " << m.fusion.label(j) << " = " << join(terms, " + ") << "\n";
      }
  }
  o.text = text.str();
  return o;
}

Output cmd_voa_fib_type(const std::string& name) {
  Output o;
  FibTypeMatch match;
  std::string route = "model";
  if (name == "a18ext") {
    match = fib_type_match(simple_current_extension(affine_a1(8), {0, 8}), 2);
    route = "extension";
  } else if (name == "g21ext") {
    const VoaModel base = model_product(affine_a1(3), affine_a1(1));
    match = fib_type_match(simple_current_extension(base, {0, base.index("3⊠1")}), 1);
    route = "extension";
  } else {
    match = fib_type_match(parse_model(name));
  }
  o.json = Json{{"model", name}, {"route", route}, {"ell", match.ell}, {"exponents", match.exponents}};
  std::vector<std::string> ms;
  for (int m : match.exponents) ms.push_back(std::to_string(m));
  o.text = name + ": Fib^" + std::to_string(match.ell) + " with m in {" + join(ms, ", ") + "}\n";
  if (match.exponents.empty()) o.code = kVerificationFailure;
  return o;
}

Output cmd_voa_m35() {
  Output o;
  const M35Report r = m35_factorization();
  o.json = to_json(r);
  const bool ok = r.fusion_isomorphic && r.fib_weight_congruence && r.pointed_twist_congruence &&
                  r.product_twist_congruence && r.fib_exponents == std::vector<int>{9};
  if (!ok) o.code = kVerificationFailure;
  std::ostringstream text;
  text << "fusion isomorphic to Fib x Z/2: " << (r.fusion_isomorphic ? "yes" : "no") << "\n"
       << "pointed twist matches h = 3/4: " << (r.pointed_twist_congruence ? "yes" : "no") << "\n"
       << "twists multiply: " << (r.product_twist_congruence ? "yes" : "no") << "\n"
       << "c(pointed) = " << r.c_pointed_mod_4.get_str() << " mod 4, c(Fib) = " << r.c_fib.get_str() << " mod 4\n"
       << "Fibonacci factor m = " << (r.fib_exponents.empty() ? std::string("none") : std::to_string(r.fib_exponents[0]))
       << "\n";
  o.text = text.str();
  return o;
}

Output cmd_voa_catalog() {
  Output o;
  Json checks = Json::array();
  std::ostringstream text;
  for (const auto& c : catalog_checks()) {
    checks.push_back(to_json(c));
    if (!c.holds) o.code = kVerificationFailure;
    text << (c.holds ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  o.json = Json{{"checks", checks}};
  o.text = text.str();
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw_args;
  // "fibcat <cmd>" is an alias group for the category commands
  if (!args.empty() && args[0] == "fibcat") args.erase(args.begin());

  CLI::App app{"Exact computations with Fibonacci modular categories", "fibkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--out", g.out, "Write output to this file");
  app.add_option("--jobs", g.jobs, "Worker threads for searches")->check(CLI::Range(1, 64));

  std::function<Output()> action;
  bool dot_default = false;

  auto* pentagon = app.add_subcommand("pentagon", "Solve and verify the pentagon equations");
  pentagon->callback([&] { action = cmd_pentagon; });

  auto* braidings = app.add_subcommand("braidings", "Solve and verify the hexagon equations");
  braidings->callback([&] { action = cmd_braidings; });

  int m = 0;
  std::string convention = "u^-2";
  auto* md = app.add_subcommand("modular-data", "S and T matrices for u = z10^m");
  md->add_option("--m", m, "Exponent of u")->required()->check(CLI::IsMember({1, 3, 7, 9}));
  md->add_option("--convention", convention, "Diagonal entry of T on X")->check(CLI::IsMember({"u^-2", "u^2"}));
  md->callback([&] { action = [&] { return cmd_modular_data(m, convention); }; });

  int sl2_m = 0;
  auto* sl2 = app.add_subcommand("sl2-check", "Check the SL2(Z) relations for all four categories");
  sl2->add_option("--m", sl2_m, "Only this exponent")->check(CLI::IsMember({1, 3, 7, 9}));
  sl2->callback([&] {
    action = [&] { return cmd_sl2_check(sl2_m ? std::vector<int>{sl2_m} : std::vector<int>{1, 3, 7, 9}); };
  });

  int ell = 0;
  int max_rank = 8;
  std::string partition;
  auto* nim = app.add_subcommand("nim", "NIM-representations of Fib^ell");
  nim->require_subcommand(1);
  auto* nim_classify = nim->add_subcommand("classify", "One representation per set partition");
  nim_classify->add_option("--ell", ell)->required();
  nim_classify->callback([&] { action = [&] { return cmd_nim_classify(ell); }; });
  auto* nim_brute = nim->add_subcommand("brute", "Exhaustive search up to --max-rank");
  nim_brute->add_option("--ell", ell)->required();
  nim_brute->add_option("--max-rank", max_rank)->check(CLI::Range(1, 8));
  nim_brute->callback([&] { action = [&] { return cmd_nim_brute(ell, max_rank, g.jobs); }; });
  auto* nim_dot = nim->add_subcommand("dot", "Graphviz drawing of the NIM-graphs");
  nim_dot->add_option("--ell", ell)->required();
  nim_dot->add_option("--partition", partition, "e.g. 1,2|3");
  nim_dot->callback([&] {
    dot_default = true;
    action = [&] { return cmd_nim_dot(ell, partition); };
  });

  std::string params;
  auto* aniso = app.add_subcommand("aniso", "Ribbon test of candidate algebras");
  aniso->require_subcommand(1);
  auto* scan = aniso->add_subcommand("scan", "Scan all set partitions");
  scan->add_option("--params", params, "Exponents m_i, e.g. 1,9")->required();
  scan->callback([&] { action = [&] { return cmd_aniso_scan(params, g.jobs); }; });

  int p = 0, q = 0, k = 0;
  bool want_fusion = false, want_weights = false, want_c = false;
  std::string extend, model_name, currents;
  auto* voa = app.add_subcommand("voa", "Rational VOA catalog");
  voa->require_subcommand(1);
  auto* minimal = voa->add_subcommand("minimal", "Virasoro minimal model M(p,q)");
  minimal->add_option("--p", p)->required();
  minimal->add_option("--q", q)->required();
  minimal->add_flag("--fusion", want_fusion);
  minimal->add_flag("--weights", want_weights);
  minimal->add_flag("--c", want_c);
  minimal->callback([&] { action = [&] { return model_output(minimal_model(p, q), want_fusion, want_weights, want_c); }; });
  auto* a1 = voa->add_subcommand("a1", "Affine A1 at level k");
  a1->add_option("--k", k)->required()->check(CLI::Range(1, 200));
  a1->add_option("--extend", extend, "Simple currents, e.g. 0,8");
  a1->callback([&] {
    action = [&] {
      const VoaModel model = affine_a1(k);
      return extend.empty() ? model_output(model, false, false, false)
                            : extension_output(model, parse_currents(model, extend));
    };
  });
  auto* ext = voa->add_subcommand("extend", "Simple current extension of a catalog model");
  ext->add_option("--model", model_name, "Catalog names joined by '*', e.g. a1_3*a1_1")->required();
  ext->add_option("--currents", currents, "Labels, ':' separating factors, e.g. 0:0,3:1")->required();
  ext->callback([&] {
    action = [&] {
      const VoaModel model = parse_model(model_name);
      return extension_output(model, parse_currents(model, currents));
    };
  });
  auto* fib = voa->add_subcommand("fib-type", "Identify the Fibonacci parameter of a model");
  fib->add_option("--model", model_name, "m25, g21, f41, a18ext, g21ext, ...")->required();
  fib->callback([&] { action = [&] { return cmd_voa_fib_type(model_name); }; });
  auto* m35 = voa->add_subcommand("m35-factor", "M(3,5) as Fib x C(Z/2, q)");
  m35->callback([&] { action = cmd_voa_m35; });
  auto* cat = voa->add_subcommand("catalog", "Central-charge and weight checks of the catalog");
  cat->callback([&] { action = cmd_voa_catalog; });

  for (auto* sub : {pentagon, braidings, md, sl2, nim, aniso, voa}) sub->fallthrough();
  for (auto* sub : {nim_classify, nim_brute, nim_dot, scan, minimal, a1, ext, fib, m35, cat}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  const bool format_given = app.get_option("--format")->count() > 0;
  const std::string format = format_given ? g.format : (dot_default ? "dot" : "json");

  Output result;
  try {
    result = action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    result.code = kVerificationFailure;
    result.json = Json{{"status", "fail"}, {"error", e.what()}};
    result.text = std::string("failed: ") + e.what() + "\n";
  }

  std::string body;
  if (format == "json") {
    body = result.json.dump(2) + "\n";
  } else if (format == "text") {
    body = result.text;
  } else {
    if (result.dot.empty()) {
      err << "error: --format dot is only available for nim commands\n";
      return kUsageError;
    }
    body = result.dot;
  }

  if (g.out.empty()) {
    out << body;
  } else {
    std::ofstream f(g.out);
    if (!f) {
      err << "error: cannot write " << g.out << "\n";
      return kUsageError;
    }
    f << body;
  }
  return result.code;
}

}  // namespace fibkit
