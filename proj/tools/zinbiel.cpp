// zinbiel: command-line front end. Exit codes: 0 all checks pass or the
// construction succeeded, 1 violations or a failed construction, 2 input
// error, 3 budget exceeded.

#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "zinbiel/json_io.hpp"

using namespace zinbiel;

namespace {

struct Common {
  std::string field;
  bool allow_small_char = false;
  std::uint64_t budget = 390625;
  unsigned jobs = 1;
  std::string format = "json";
  bool typo_strict = false;
};

struct InputError : Error {
  using Error::Error;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--field", c.field, "Field: q or gf<p>; must agree with the input's \"field\"");
  sub->add_flag("--allow-small-char", c.allow_small_char, "Accept gf2 and gf3 (reports are marked non-conforming)");
  sub->add_option("--budget", c.budget, "Maximum number of candidates for exhaustive searches")
      ->check(CLI::PositiveNumber);
  sub->add_option("--jobs", c.jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_flag("--typo-strict", c.typo_strict, "Exit 1 when a typo-suspect condition is noted");
}

FieldChoice field_choice(const Common& c) {
  FieldChoice fc;
  fc.allow_small_char = c.allow_small_char;
  if (!c.field.empty()) {
    try {
      fc.override_field = Field::parse(c.field, c.allow_small_char);
    } catch (const FieldError& e) {
      throw InputError(std::string("--field: ") + e.what());
    }
  }
  return fc;
}

template <class T>
T load_as(const std::string& path, const Common& c, const std::string& expected) {
  Document d = load_document(path, field_choice(c));
  if (auto* v = std::get_if<T>(&d)) return *v;
  throw InputError(path + ": expected kind " + expected + ", got " + document_kind(d));
}

// "(Z14)", "(Z1).2 [i=0]", "V.(CZ3)"; other IDs unchanged.
std::string display_id(const std::string& id) {
  static const std::regex re(R"(^(.*?)((?:ZZ|CZ|BZ|Z|H)\d+)((?:\.\d+)?)((?:\[i=\d\])?)$)");
  std::smatch m;
  if (!std::regex_match(id, m, re)) return id;
  std::string out = m[1].str() + "(" + m[2].str() + ")" + m[3].str();
  if (m[4].length()) out += " " + m[4].str();
  return out;
}

std::string vec_text(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

std::string report_text(const ConditionReport& r, const std::string& title) {
  std::ostringstream o;
  o << title << ": " << (r.ok() ? "OK" : std::to_string(r.total()) + " violation(s)");
  if (!r.conforming_field()) o << " (non-conforming field)";
  o << "\n";
  for (const auto& v : r.violations()) {
    o << "  " << display_id(v.id) << " fails at ";
    if (v.vars.size() == v.witness.size() && !v.vars.empty()) {
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        o << (i ? ", " : "") << v.vars[i] << "=e" << v.witness[i];
    } else {
      o << "(";
      for (std::size_t i = 0; i < v.witness.size(); ++i) o << (i ? "," : "") << v.witness[i];
      o << ")";
    }
    o << ": lhs " << vec_text(v.lhs) << ", rhs " << vec_text(v.rhs) << "\n";
  }
  if (r.truncated()) o << "  ... " << r.total() - r.violations().size() << " more\n";
  for (const auto& n : r.notes()) o << "  note " << display_id(n.id) << " [" << n.kind << "]: " << n.detail << "\n";
  return o.str();
}

bool has_suspect_note(const ConditionReport& r) {
  for (const auto& n : r.notes())
    if (n.kind == "paper-typo-suspect") return true;
  return false;
}

// Named reports; exit 1 if any has violations (or a suspect note under --typo-strict).
int emit_reports(const Common& c, const std::vector<std::pair<std::string, ConditionReport>>& reps,
                 json extra = json::object()) {
  bool ok = true, suspect = false;
  for (const auto& [name, r] : reps) {
    ok = ok && r.ok();
    suspect = suspect || has_suspect_note(r);
  }
  if (c.format == "json") {
    json j;
    if (reps.size() == 1 && extra.empty()) {
      j = to_json(reps[0].second);
    } else {
      j["ok"] = ok;
      for (const auto& [name, r] : reps) j[name] = to_json(r);
      for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    }
    std::cout << pretty(j);
  } else {
    for (const auto& [name, r] : reps) std::cout << report_text(r, name);
    for (auto it = extra.begin(); it != extra.end(); ++it) std::cout << it.key() << ": " << it.value().dump() << "\n";
  }
  if (!ok) return 1;
  return c.typo_strict && suspect ? 1 : 0;
}

int emit_json(const json& j) {
  std::cout << pretty(j);
  return 0;
}

int fail_construction(const Common& c, const char* kind, const std::string& detail) {
  if (c.format == "json") {
    std::cout << pretty(json{{"ok", false}, {"error", kind}, {"detail", detail}});
  } else {
    std::cout << kind << ": " << detail << "\n";
  }
  return 1;
}

LinMap parse_d_option(const std::string& text, const Field& F, std::size_t v0, std::size_t v1) {
  LinMap d(F, v0, v1);
  if (text.empty()) return d;
  std::vector<std::string> rows;
  std::stringstream ss(text);
  for (std::string row; std::getline(ss, row, ';');) rows.push_back(row);
  if (rows.size() != v0) throw InputError("--d: expected " + std::to_string(v0) + " rows separated by ';'");
  for (std::size_t r = 0; r < v0; ++r) {
    std::stringstream rs(rows[r]);
    std::size_t c = 0;
    for (std::string cell; std::getline(rs, cell, ',');) {
      if (c >= v1) throw InputError("--d: row " + std::to_string(r + 1) + " has too many entries");
      try {
        d.set(r, c++, F.parse_scalar(cell));
      } catch (const Error& e) {
        throw InputError(std::string("--d: ") + e.what());
      }
    }
    if (c != v1) throw InputError("--d: row " + std::to_string(r + 1) + " needs " + std::to_string(v1) + " entries");
  }
  return d;
}

json census_json(const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V, const OrbitPartition& part) {
  json j;
  j["field"] = Z.field().name();
  j["Z"] = to_json(Z);
  j["Vdims"] = json::array({V.dim1, V.dim0});
  j["d"] = to_json(V.d);
  j["valid_count"] = part.items.size();
  j["relation"] = relation_name(part.relation);
  j["orbit_count"] = part.orbits.size();
  json sizes = json::array(), reps = json::array();
  for (std::size_t o = 0; o < part.orbits.size(); ++o) {
    sizes.push_back(part.orbits[o].size());
    reps.push_back(to_json(part.items[part.representatives[o]]));
  }
  j["orbit_sizes"] = std::move(sizes);
  j["representatives"] = std::move(reps);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zinbiel 2-algebras: axiom checks, extending structures and classification"};
  app.require_subcommand(1, 1);
  Common c;
  std::string input, zfile, vdims, dtext, relation = "equivalent";

  auto with_input = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("input", input, "Input JSON file")->required();
    add_common(s, c);
    return s;
  };
  auto* check_zinbiel_cmd = with_input("check-zinbiel", "Check the Zinbiel identity (kind zinbiel_algebra)");
  auto* check_2alg_cmd = with_input("check-2alg", "Check the 2-algebra axioms (kind zinbiel_2_algebra)");
  auto* check_datum_cmd = with_input("check-datum", "Check an extending datum by conditions and directly");
  auto* build_cmd = with_input("build-product", "Unified, crossed or bicrossed product of a datum");
  auto* extract_cmd = with_input("extract-datum", "Extending datum of a complement split, with the psi check");
  auto* crossed_cmd = with_input("check-crossed", "Check a crossed system");
  auto* matched_cmd = with_input("check-matched", "Check a matched pair");
  auto* factor_cmd = with_input("factorize", "Factorize a 2-algebra along two subalgebras (kind factorization)");
  auto* morph_cmd = with_input("check-morphism", "Check rs data (kind rs_data) or a 2-algebra morphism (kind two_morphism)");
  auto* classify_cmd = app.add_subcommand("classify", "Enumerate valid data over Z and count equivalence classes");
  classify_cmd->add_option("--z", zfile, "Z as a zinbiel_2_algebra file")->required();
  classify_cmd->add_option("--vdims", vdims, "dim V1,dim V0")->required();
  classify_cmd->add_option("--d", dtext, "d: V1 -> V0 as rows 'a,b;c,d' (default zero)");
  classify_cmd->add_option("--relation", relation, "equivalent, cohomologous or both")
      ->check(CLI::IsMember({"equivalent", "cohomologous", "both"}));
  add_common(classify_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CheckOptions opt;
    SearchOptions sopt;
    sopt.budget = c.budget;
    sopt.jobs = c.jobs;

    if (check_zinbiel_cmd->parsed()) {
      auto A = load_as<ZinbielAlgebra>(input, c, "zinbiel_algebra");
      auto r = check_zinbiel(A, opt);
      r.set_conforming(A.mult.field().conforming());
      return emit_reports(c, {{"zinbiel", r}});
    }
    if (check_2alg_cmd->parsed()) {
      auto T = load_as<ZinbielTwoAlgebra>(input, c, "zinbiel_2_algebra");
      auto r = check_crossed_module(T, opt);
      r.set_conforming(T.field().conforming());
      return emit_reports(c, {{"crossed_module", r}});
    }
    if (check_datum_cmd->parsed()) {
      auto D = load_as<ExtendingDatum>(input, c, "extending_datum");
      std::vector<std::pair<std::string, ConditionReport>> reps = {{"conditions", check_datum_conditions(D, opt)},
                                                                   {"direct", check_datum_direct(D, opt)}};
      if (D.zdim(1) == 0) reps.push_back({"conditions_trivial_z1", check_trivialZ1_conditions(D, opt)});
      for (auto& [n, r] : reps) r.set_conforming(D.field().conforming());
      return emit_reports(c, reps);
    }
    if (build_cmd->parsed()) {
      Document d = load_document(input, field_choice(c));
      if (auto* D = std::get_if<ExtendingDatum>(&d)) return emit_json(to_json(build_unified_product(*D)));
      if (auto* cs = std::get_if<CrossedSystem>(&d)) return emit_json(to_json(build_crossed_product(*cs)));
      if (auto* mp = std::get_if<MatchedPairDatum>(&d)) return emit_json(to_json(build_bicrossed_product(*mp)));
      throw InputError(input + ": expected kind extending_datum, crossed_system or matched_pair, got " +
                       document_kind(d));
    }
    if (extract_cmd->parsed()) {
      auto s = load_as<ComplementSplit>(input, c, "complement_split");
      ExtendingDatum D = extract_datum(s);
      TwoMorphism psi = psi_of(s);
      json extra;
      extra["datum"] = to_json(D);
      extra["psi"] = json{{"phi1", to_json(psi.phi1)}, {"phi0", to_json(psi.phi0)}};
      return emit_reports(c, {{"verify_psi", verify_psi(s, D, opt)}}, extra);
    }
    if (crossed_cmd->parsed()) {
      auto cs = load_as<CrossedSystem>(input, c, "crossed_system");
      return emit_reports(c, {{"conditions", check_crossed_system(cs, opt)},
                              {"direct", check_datum_direct(cs.embed(), opt)}});
    }
    if (matched_cmd->parsed()) {
      auto mp = load_as<MatchedPairDatum>(input, c, "matched_pair");
      return emit_reports(c, {{"conditions", check_matched_pair(mp, opt)},
                              {"direct", check_datum_direct(mp.embed(), opt)}});
    }
    if (factor_cmd->parsed()) {
      auto in = load_as<FactorizationInput>(input, c, "factorization");
      try {
        return emit_json(to_json(factorize(in.E, in.inc)));
      } catch (const NotComplementary& e) {
        return fail_construction(c, "NotComplementary", e.what());
      } catch (const NotSubalgebra& e) {
        return fail_construction(c, "NotSubalgebra", e.what());
      } catch (const ObstructionNonzero& e) {
        return fail_construction(c, "ObstructionNonzero", e.what());
      }
    }
    if (morph_cmd->parsed()) {
      Document d = load_document(input, field_choice(c));
      if (auto* in = std::get_if<RSInput>(&d)) {
        auto direct = check_rs_direct(in->rs, in->D, in->Dp, opt);
        bool iso = direct.ok() && is_isomorphism(morphism_from_rs(in->rs, in->D, in->Dp));
        return emit_reports(c, {{"conditions", check_rs_conditions(in->rs, in->D, in->Dp, opt)}, {"direct", direct}},
                            json{{"isomorphism", iso}});
      }
      if (auto* in = std::get_if<TwoMorphismInput>(&d)) {
        auto r = check_2alg_morphism(in->source, in->target, in->f, opt);
        return emit_reports(c, {{"morphism", r}}, json{{"isomorphism", r.ok() && is_isomorphism(in->f)}});
      }
      throw InputError(input + ": expected kind rs_data or two_morphism, got " + document_kind(d));
    }
    if (classify_cmd->parsed()) {
      auto Z = load_as<ZinbielTwoAlgebra>(zfile, c, "zinbiel_2_algebra");
      std::size_t v1 = 0, v0 = 0;
      {
        std::smatch m;
        static const std::regex re(R"(^\s*(\d{1,2})\s*,\s*(\d{1,2})\s*$)");
        if (!std::regex_match(vdims, m, re)) throw InputError("--vdims: expected 'n1,n0', got '" + vdims + "'");
        v1 = std::stoul(m[1].str());
        v0 = std::stoul(m[2].str());
      }
      TwoVectorSpace V(v1, v0, parse_d_option(dtext, Z.field(), v0, v1));
      if (!Z.field().is_prime()) throw InputError("classify needs a prime field (use --field gf<p>)");
      auto items = enumerate_valid_data(Z, V, sopt);
      std::vector<Relation> modes;
      if (relation != "cohomologous") modes.push_back(Relation::Equivalent);
      if (relation != "equivalent") modes.push_back(Relation::Cohomologous);
      json out = json::array();
      for (Relation m : modes) out.push_back(census_json(Z, V, compute_quotients(items, m, sopt)));
      if (c.format == "text") {
        for (const auto& cj : out)
          std::cout << "relation " << cj["relation"].get<std::string>() << ": " << cj["valid_count"].get<std::size_t>()
                    << " valid data, " << cj["orbit_count"].get<std::size_t>() << " classes\n";
        return 0;
      }
      return emit_json(modes.size() == 1 ? out[0] : out);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    if (c.format == "json") {
      std::cout << pretty(json{{"ok", false}, {"error", "PreconditionError"}, {"detail", e.what()},
                               {"report", to_json(e.report)}});
    } else {
      std::cout << "PreconditionError: " << e.what() << "\n" << report_text(e.report, "precondition");
    }
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SubalgebraError& e) {
    return fail_construction(c, "NotSubalgebra", e.what());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
