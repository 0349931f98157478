#include "skewres_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <type_traits>

#include <CLI11.hpp>

#include "skewres/budget.hpp"
#include "skewres/pipeline.hpp"

namespace skewres::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  double timeout = 600;
  std::uint64_t seed = 1;
  std::string cache_dir;

  int n = 0;
  std::string field = "auto";
  std::string ideal = "L";
  std::string order = "lex";
  int del = 0;
  std::string mode = "pipeline";
  std::string out_file;
  std::string in_file;
  std::string conjecture = "all";
  bool exact = false;
  bool lemmas = false;
  bool resolution = false;
  bool paranoid = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// Small n defaults to exact rationals, larger n to the prime field.
FieldSpec choose_field(const std::string& text, int n) {
  if (text == "auto") return n <= 5 ? FieldSpec::rationals() : FieldSpec::prime_field();
  return FieldSpec::parse(text);
}

template <class F>
int with_field(const FieldSpec& field, F&& f) {
  if (field.kind == FieldKind::rational) return f(std::type_identity<Rational>{});
  return f(std::type_identity<ModP>{});
}

std::string generator_name(int k, int n) {
  if (n >= 10) return "g_" + std::to_string(k) + "_" + std::to_string(n);
  return "g" + std::to_string(k) + std::to_string(n);
}

void require_n(const Options& o, int lo) {
  if (o.n < lo || o.n > SkewSystem::kMaxN) {
    throw UsageError("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(SkewSystem::kMaxN) + "]");
  }
}

void print_report_text(std::ostream& out, const ConjectureReport& r) {
  out << "conjecture " << r.conjecture << " at n = " << r.n << " over " << r.field << ": ";
  if (r.vacuous) out << "vacuous";
  else out << (r.equal ? "equal" : "NOT equal");
  out << " (" << r.seconds << " s)\n";
  if (!r.computed.empty()) {
    out << "  computed:   <";
    for (std::size_t i = 0; i < r.computed.size(); ++i) out << (i ? ", " : "") << r.computed[i];
    out << ">\n";
  }
  out << "  conjectured: <";
  for (std::size_t i = 0; i < r.conjectured.size(); ++i) out << (i ? ", " : "") << r.conjectured[i];
  out << ">\n";
  if (!r.note.empty()) out << "  note: " << r.note << "\n";
}

void print_resolution_report(std::ostream& out, const ResolutionReport& r) {
  out << "verification: " << (r.passed() ? "pass" : "FAIL") << "\n";
  out << "  structure: " << (r.structure_ok ? "ok" : "broken") << "\n";
  out << "  cokernel: " << (r.cokernel_ok ? "ok" : "wrong") << "\n";
  if (r.symbolic_ran) {
    bool all = std::all_of(r.exact_at.begin(), r.exact_at.end(), [](bool b) { return b; });
    out << "  syzygy containment: " << (all ? "ok" : "fails") << "\n";
  }
  if (r.probabilistic_ran) {
    out << "  rank checks: " << r.rank_checks.size() << " points, "
        << (std::none_of(r.failures.begin(), r.failures.end(),
                         [](const std::string& f) { return f.rfind("rank", 0) == 0; })
                ? "ok"
                : "fail")
        << "\n";
  }
  for (const auto& f : r.failures) out << "  failure: " << f << "\n";
}

template <class K>
int cmd_generators(const Options& o, std::ostream& out) {
  require_n(o, 2);
  SkewModel<K> model(o.n, choose_field(o.field, o.n));
  json doc{{"n", o.n}, {"generators", json::object()}};
  for (int k = 1; k <= o.n; ++k) {
    auto g = model.generator(k, o.n).to_string();
    if (o.json) doc["generators"][generator_name(k, o.n)] = g;
    else out << generator_name(k, o.n) << " = " << g << "\n";
  }
  if (o.json) out << doc.dump(2) << "\n";
  return kExitOk;
}

template <class K>
int cmd_gb(const Options& o, std::ostream& out) {
  require_n(o, 3);
  auto field = choose_field(o.field, o.n);
  SkewModel<K> model(o.n, field, MonomialOrder::parse(o.order));
  auto named = build_named_ideals(model);
  const Ideal<K>* ideal = nullptr;
  if (o.ideal == "I") ideal = &named.I;
  else if (o.ideal == "L") ideal = &named.L;
  else if (o.ideal == "C-conjectured") ideal = &named.C_conjectured;
  else throw UsageError("--ideal must be one of I, L, C-conjectured");
  auto gb = ideal->groebner_basis();
  if (o.json) {
    json basis = json::array(), leads = json::array();
    for (const auto& e : gb->elements()) {
      basis.push_back(e.to_string());
      leads.push_back(monomial_to_string(e.leading_monomial(), model.ring()->variables()));
    }
    out << json{{"n", o.n}, {"ideal", o.ideal}, {"order", gb->order().to_string()}, {"field", field.name()},
                {"basis", basis}, {"leading_monomials", leads}}
               .dump(2)
        << "\n";
  } else {
    out << "reduced Groebner basis of " << o.ideal << " (n = " << o.n << ", " << gb->order().to_string() << ", "
        << field.name() << "), " << gb->size() << " elements\n";
    for (const auto& e : gb->elements()) out << e.to_string() << "\n";
  }
  return kExitOk;
}

template <class K>
int cmd_colon(const Options& o, std::ostream& out) {
  require_n(o, 3);
  SkewModel<K> model(o.n, choose_field(o.field, o.n), MonomialOrder::degrevlex());
  auto report = verify_conjecture1(model);
  if (o.json) out << to_json(report).dump(2) << "\n";
  else print_report_text(out, report);
  return report.holds() ? kExitOk : kExitFailure;
}

template <class K>
int cmd_pfaffian(const Options& o, std::ostream& out) {
  require_n(o, 2);
  if (o.del < 1 || o.del > o.n) throw UsageError("--delete must lie in [1, n]");
  SkewModel<K> model(o.n, choose_field(o.field, o.n));
  auto p = model.pfaffian_minor(o.del).to_string();
  if (o.json) out << json{{"n", o.n}, {"delete", o.del}, {"pfaffian", p}}.dump(2) << "\n";
  else out << "D(" << o.del << ")" << o.n << " = " << p << "\n";
  return kExitOk;
}

std::optional<ResolutionCache> cache_for(const Options& o) {
  if (!o.cache_dir.empty()) return ResolutionCache(o.cache_dir);
  return ResolutionCache::from_environment();
}

template <class K>
int cmd_resolve(const Options& o, std::ostream& out) {
  require_n(o, 3);
  auto field = choose_field(o.field, o.n);
  PipelineOptions po;
  po.check.symbolic = o.exact;
  po.check.seed = o.seed;
  po.cache = cache_for(o);
  if (!o.json) po.log = [&](const std::string& line) { out << line << "\n" << std::flush; };
  try {
    auto run = resolve_L<K>(o.n, field, parse_mode(o.mode), po);
    const auto& c = run.resolution();
    if (!o.out_file.empty()) {
      std::ofstream file(o.out_file, std::ios::trunc);
      if (!file) throw Error("cannot write " + o.out_file);
      file << serialize_complex(c);
    }
    auto betti = betti_table(c);
    if (o.json) {
      json stages = json::array(), conj = json::array();
      for (const auto& s : run.stages) stages.push_back(stage_to_json(s));
      for (const auto& r : run.conjectures) conj.push_back(to_json(r));
      out << json{{"n", o.n},
                  {"field", field.name()},
                  {"mode", to_string(run.mode)},
                  {"from_cache", run.from_cache},
                  {"ranks", c.ranks()},
                  {"betti", to_json(betti)},
                  {"stages", stages},
                  {"conjectures", conj},
                  {"verification", to_json(*run.verification)},
                  {"seconds", run.seconds}}
                 .dump(2)
          << "\n";
    } else {
      out << "minimal free resolution of R/L" << o.n << " over " << field.name() << " (" << to_string(run.mode)
          << " mode, " << run.seconds << " s)\n";
      out << betti.to_string();
      print_resolution_report(out, *run.verification);
    }
    return run.verification->passed() ? kExitOk : kExitFailure;
  } catch (const ConjectureFailure& e) {
    if (o.json) out << json{{"error", e.what()}, {"report", to_json(e.report())}}.dump(2) << "\n";
    else print_report_text(out, e.report());
    throw;
  }
}

template <class K>
int cmd_verify(const Options& o, std::ostream& out) {
  require_n(o, 3);
  auto field = choose_field(o.field, o.n);
  if (o.conjecture != "1" && o.conjecture != "2" && o.conjecture != "all") {
    throw UsageError("--conjecture must be 1, 2 or all");
  }
  SkewModel<K> model(o.n, field, MonomialOrder::degrevlex());
  bool ok = true;
  json doc{{"n", o.n}, {"field", field.name()}};
  if (o.conjecture != "2") {
    auto r = verify_conjecture1(model);
    ok = ok && r.holds();
    if (o.json) doc["conjecture1"] = to_json(r);
    else print_report_text(out, r);
  }
  if (o.conjecture != "1") {
    auto r = verify_conjecture2(model);
    ok = ok && r.holds();
    if (o.json) doc["conjecture2"] = to_json(r);
    else print_report_text(out, r);
  }
  if (o.lemmas) {
    auto l1 = verify_lemma1(model);
    auto l2 = is_regular_sequence(build_named_ideals(model).I.generators(),
                                  o.exact || o.paranoid ? RegularityCheck::paranoid : RegularityCheck::codimension);
    for (const auto* c : {&l1.i, &l1.ii, &l1.iii}) ok = ok && c->verdict == Verdict::pass;
    ok = ok && l2.regular;
    if (o.json) {
      doc["lemma1"] = to_json(l1);
      doc["regular_sequence"] = to_json(l2);
    } else {
      for (const auto* c : {&l1.i, &l1.ii, &l1.iii}) {
        out << "identity (" << c->id << "): " << to_string(c->verdict) << (c->literal_holds ? " as stated" : "")
            << "\n";
        if (!c->relation.empty()) out << "  " << c->relation << "\n";
        if (!c->note.empty()) out << "  note: " << c->note << "\n";
      }
      out << "g_1" << o.n << " .. g_" << o.n - 1 << o.n << " regular sequence: " << (l2.regular ? "yes" : "no")
          << " (codim " << l2.codimension << " of " << l2.length << ")\n";
    }
  }
  if (o.resolution) {
    PipelineOptions po;
    po.check.symbolic = o.exact;
    po.check.seed = o.seed;
    po.cache = cache_for(o);
    auto run = resolve_L<K>(o.n, field, ResolveMode::pipeline, po);
    ok = ok && run.verification->passed();
    if (o.json) {
      doc["resolution"] = {{"ranks", run.resolution().ranks()}, {"verification", to_json(*run.verification)}};
    } else {
      out << "pipeline resolution ranks (";
      auto ranks = run.resolution().ranks();
      for (std::size_t i = 0; i < ranks.size(); ++i) out << (i ? "," : "") << ranks[i];
      out << ")\n";
      print_resolution_report(out, *run.verification);
    }
  }
  if (o.json) {
    doc["passed"] = ok;
    out << doc.dump(2) << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

template <class K>
int cmd_betti(const Options& o, const json& doc, std::ostream& out) {
  auto c = complex_from_json<K>(doc);
  auto table = betti_table(c);
  if (o.json) out << json{{"ranks", c.ranks()}, {"betti", to_json(table)}}.dump(2) << "\n";
  else out << table.to_string();
  return kExitOk;
}

int cmd_betti_file(const Options& o, std::ostream& out) {
  std::ifstream in(o.in_file);
  if (!in) throw UsageError("cannot read " + o.in_file);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return with_field(complex_field(doc), [&]<class K>(std::type_identity<K>) { return cmd_betti<K>(o, doc, out); });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graded minimal free resolutions of the ideals generated by the entries of X_n Y_n", "skewres"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print machine-readable JSON");
  app.add_option("--timeout", o.timeout, "Time budget per Groebner basis computation, in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for the random evaluation points");
  app.add_option("--cache-dir", o.cache_dir, "Directory for cached resolutions (default: $SKEWRES_CACHE_DIR)");

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "System size")->required(); };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "q, fp, fp:<prime> or auto (QQ for n <= 5, ZZ/32003 above)");
  };

  auto* generators = app.add_subcommand("generators", "Print g_1n .. g_nn");
  add_n(generators);
  add_field(generators);

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of a named ideal");
  add_n(gb);
  add_field(gb);
  gb->add_option("--ideal", o.ideal, "I, L or C-conjectured")->check(CLI::IsMember({"I", "L", "C-conjectured"}));
  gb->add_option("--order", o.order, "lex or degrevlex")->check(CLI::IsMember({"lex", "degrevlex"}));

  auto* colon_cmd = app.add_subcommand("colon", "Compute (I_n : g_nn) and compare with its conjectured value");
  add_n(colon_cmd);
  add_field(colon_cmd);

  auto* pfaffian_cmd = app.add_subcommand("pfaffian", "Pfaffian of X_n with one row and column deleted");
  add_n(pfaffian_cmd);
  add_field(pfaffian_cmd);
  pfaffian_cmd->add_option("--delete", o.del, "Index of the deleted row and column")->required();

  auto* resolve = app.add_subcommand("resolve", "Minimal free resolution of R/L_n");
  add_n(resolve);
  add_field(resolve);
  resolve->add_option("--mode", o.mode, "pipeline or direct")->check(CLI::IsMember({"pipeline", "direct"}));
  resolve->add_option("--out", o.out_file, "Write the resolution to this file");
  resolve->add_flag("--exact", o.exact, "Also check exactness symbolically");

  auto* verify = app.add_subcommand("verify", "Check the conjectured colon ideals");
  add_n(verify);
  add_field(verify);
  verify->add_option("--conjecture", o.conjecture, "1, 2 or all")->check(CLI::IsMember({"1", "2", "all"}));
  verify->add_flag("--lemmas", o.lemmas, "Also check the generator identities and the regular sequence");
  verify->add_flag("--resolution", o.resolution, "Also build and verify the pipeline resolution");
  verify->add_flag("--exact", o.exact, "Symbolic exactness and colon-based regularity checks");
  verify->add_flag("--paranoid", o.paranoid, "Check the regular sequence by successive colons");

  auto* betti = app.add_subcommand("betti", "Betti table of a stored resolution");
  betti->add_option("--in", o.in_file, "Resolution file written by resolve --out")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  GroebnerBudget budget(std::chrono::milliseconds(static_cast<std::int64_t>(o.timeout * 1000)));
  try {
    auto field_of = [&] { return choose_field(o.field, o.n); };
    auto dispatch = [&](auto&& cmd) { return with_field(field_of(), cmd); };
    if (*generators) return dispatch([&]<class K>(std::type_identity<K>) { return cmd_generators<K>(o, out); });
    if (*gb) return dispatch([&]<class K>(std::type_identity<K>) { return cmd_gb<K>(o, out); });
    if (*colon_cmd) return dispatch([&]<class K>(std::type_identity<K>) { return cmd_colon<K>(o, out); });
    if (*pfaffian_cmd) return dispatch([&]<class K>(std::type_identity<K>) { return cmd_pfaffian<K>(o, out); });
    if (*resolve) return dispatch([&]<class K>(std::type_identity<K>) { return cmd_resolve<K>(o, out); });
    if (*verify) return dispatch([&]<class K>(std::type_identity<K>) { return cmd_verify<K>(o, out); });
    if (*betti) return cmd_betti_file(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "timeout: " << e.what() << "\n";
    if (o.json) out << json{{"status", "timeout"}, {"message", e.what()}}.dump(2) << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace skewres::cli
