#include "cg23/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cg23/certify.hpp"

namespace cg23 {

namespace {

using Json = nlohmann::ordered_json;

std::string modulus_str(const FieldSpec& F) {
  std::string s;
  for (size_t i = 0; i < F.modulus().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(F.modulus()[i]);
  }
  return s;
}

Json field_json(const FieldSpec& F) {
  Json j;
  j["q"] = F.q();
  j["p"] = F.p();
  j["n"] = F.n();
  j["modulus"] = modulus_str(F);
  return j;
}

Json mat_json(const Mat& A) {
  Json rows = Json::array();
  for (int i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < A.cols(); ++j) row.push_back(A(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

void emit(const std::string& s, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output path " + out_path);
  f << s;
}

Family parse_family(const std::string& text) {
  std::optional<Family> f = family_from_name(text);
  if (!f)
    throw std::invalid_argument("unknown family '" + text +
                                "' (expected sp6, o7, u7, sp6-3, su7-4, o7-3, o7-5 or sl7)");
  return *f;
}

// --q gives the field size directly, except for the uniform unitary family
// where it names the base field and the matrices live over GF(q^2). --field
// accepts an explicit p^n/c0,...,1 description. Fixed pairs default to their
// defining field.
const FieldSpec& resolve_field(Family fam, bool have_q, long q, const std::string& field_text) {
  if (have_q && !field_text.empty())
    throw std::invalid_argument("give either --q or --field, not both");
  if (!field_text.empty()) return FieldSpec::parse(field_text);
  if (have_q) {
    if (q < 2) throw std::invalid_argument("--q must be at least 2");
    if (fam == Family::Dim7Unit) {
      long p = 2;
      while (p * p <= q && q % p != 0) ++p;
      if (q % p != 0) p = q;
      long rest = q;
      int m = 0;
      while (rest % p == 0) {
        rest /= p;
        ++m;
      }
      if (rest != 1) throw std::invalid_argument("--q must be a prime power");
      return FieldSpec::get(p, 2 * m);
    }
    return FieldSpec::parse(std::to_string(q));
  }
  switch (fam) {
    case Family::Sp6_3Intro:
    case Family::Om7_3Special: return FieldSpec::get(3, 1);
    case Family::Om7_5Special: return FieldSpec::get(5, 1);
    case Family::SU7_4Special: return FieldSpec::get(2, 2);
    default: throw std::invalid_argument(family_name(fam) + " needs --q or --field");
  }
}

std::optional<Fq> resolve_parameter(Family fam, const FieldSpec& F, const std::string& a_text) {
  if (a_text.empty()) {
    if (family_uses_parameter(fam))
      throw std::invalid_argument(family_name(fam) +
                                  " needs --a (comma-separated coefficients, e.g. 0,1)");
    return std::nullopt;
  }
  return F.parse_element(a_text);
}

std::string pair_header(const GeneratorPair& pr) {
  std::ostringstream os;
  os << "family " << family_name(pr.family) << " over " << pr.field->str();
  if (family_uses_parameter(pr.family))
    os << ", a = " << pr.a.str() << ", b = " << pr.b.str();
  os << "\n";
  return os.str();
}

// the published parameter table for the 7-dimensional unitary construction:
// base size q, the field of the parameter, and its defining modulus
struct TableRow {
  long q;
  long p;
  int n;
  std::vector<long> modulus;
};

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {3, 3, 2, {1, 0, 1}},          {4, 2, 4, {1, 0, 0, 1, 1}},
      {5, 5, 2, {2, 1, 1}},          {7, 7, 2, {3, 1, 1}},
      {8, 2, 6, {1, 1, 0, 0, 0, 0, 1}}, {9, 3, 4, {2, 0, 0, 1, 1}},
      {11, 11, 2, {8, 1, 1}},        {13, 13, 2, {2, 1, 1}},
  };
  return rows;
}

struct Args {
  std::string family_text;
  std::string field_text;
  std::string a_text;
  std::string strategy_text = "exhaustive";
  std::string out_path;
  long q = 0;
  bool have_q = false;
  bool json = false;
  std::uint64_t seed = 0;
  long long budget = 1000000;
  bool keep_going = false;
  long long cap = 2000000;
  long qmax = 13;
  bool text = false;
};

int run_build(const Args& a) {
  Family fam = parse_family(a.family_text);
  const FieldSpec& F = resolve_field(fam, a.have_q, a.q, a.field_text);
  GeneratorPair pr = build_pair(fam, F, resolve_parameter(fam, F, a.a_text));
  if (a.json) {
    Json j = field_json(F);
    Json out;
    out["family"] = family_name(fam);
    for (auto& [k, v] : j.items()) out[k] = v;
    out["a"] = pr.a.str();
    out["b"] = pr.b.str();
    out["x"] = mat_json(pr.x);
    out["y"] = mat_json(pr.y);
    emit(out.dump(2) + "\n", a.out_path);
  } else {
    std::ostringstream os;
    os << pair_header(pr) << "x =\n" << mat_str(pr.x) << "y =\n" << mat_str(pr.y);
    emit(os.str(), a.out_path);
  }
  return 0;
}

int run_conditions(const Args& a) {
  Family fam = parse_family(a.family_text);
  const FieldSpec& F = resolve_field(fam, a.have_q, a.q, a.field_text);
  std::optional<Fq> param;
  if (!a.a_text.empty()) param = F.parse_element(a.a_text);
  ConditionReport rep = check_conditions(fam, F, param);
  if (a.json) {
    Json out;
    out["family"] = family_name(fam);
    Json fj = field_json(F);
    for (auto& [k, v] : fj.items()) out[k] = v;
    out["a"] = param ? Json(param->str()) : Json(nullptr);
    Json arr = Json::array();
    for (const Condition& c : rep.conditions) {
      Json jc;
      jc["name"] = c.name;
      jc["ok"] = c.ok;
      jc["detail"] = c.detail;
      arr.push_back(jc);
    }
    out["conditions"] = arr;
    out["all_ok"] = rep.all_ok();
    emit(out.dump(2) + "\n", a.out_path);
  } else {
    emit(rep.str() + "CONDITIONS: " + (rep.all_ok() ? "PASS" : "FAIL") + "\n", a.out_path);
  }
  return rep.all_ok() ? 0 : 1;
}

int run_search(const Args& a) {
  Family fam = parse_family(a.family_text);
  const FieldSpec& F = resolve_field(fam, a.have_q, a.q, a.field_text);
  std::optional<SearchStrategy> strat = strategy_from_name(a.strategy_text);
  if (!strat)
    throw std::invalid_argument(
        "unknown strategy '" + a.strategy_text +
        "' (expected exhaustive, primitive-first or alpha-squared-plus-one)");
  std::optional<Fq> found = search_parameter(fam, F, *strat);
  if (a.json) {
    Json out;
    out["family"] = family_name(fam);
    Json fj = field_json(F);
    for (auto& [k, v] : fj.items()) out[k] = v;
    out["strategy"] = strategy_name(*strat);
    out["found"] = found.has_value();
    out["a"] = found ? Json(found->str()) : Json(nullptr);
    emit(out.dump(2) + "\n", a.out_path);
  } else {
    emit(found ? "a = " + found->str() + "\n" : std::string("no admissible parameter found\n"),
         a.out_path);
  }
  return found ? 0 : 1;
}

int run_certify(const Args& a) {
  Family fam = parse_family(a.family_text);
  const FieldSpec& F = resolve_field(fam, a.have_q, a.q, a.field_text);
  GeneratorPair pr = build_pair(fam, F, resolve_parameter(fam, F, a.a_text));
  CertifyOptions opts;
  opts.seed = a.seed;
  opts.bsgs_budget = a.budget;
  opts.keep_going = a.keep_going;
  Certificate cert = certify_pair(pr, opts);
  emit(a.json ? cert.to_json() : cert.to_text(), a.out_path);
  return cert.overall ? 0 : 1;
}

int run_sweep(const Args& a) {
  SweepReport rep = proof_identity_sweep(a.qmax);
  if (a.json) {
    Json out;
    out["q_max"] = rep.q_max;
    Json arr = Json::array();
    for (const SweepGroup& g : rep.groups) {
      Json jg;
      jg["name"] = g.name;
      jg["cases"] = g.cases;
      jg["failures"] = g.failures;
      arr.push_back(jg);
    }
    out["groups"] = arr;
    out["all_ok"] = rep.all_ok();
    emit(out.dump(2) + "\n", a.out_path);
  } else {
    emit(rep.str(), a.out_path);
  }
  return rep.all_ok() ? 0 : 1;
}

int run_table(const Args& a) {
  bool all = true;
  Json arr = Json::array();
  std::ostringstream os;
  for (const TableRow& row : table_rows()) {
    const FieldSpec& F = FieldSpec::get(row.p, row.n, row.modulus);
    Fq t = F.element_at(row.p);  // the class of the variable
    ConditionReport rep = check_conditions(Family::Dim7Unit, F, t);
    bool ok = rep.all_ok();
    all = all && ok;
    if (a.json) {
      Json jr;
      jr["q"] = row.q;
      Json fj = field_json(F);
      for (auto& [k, v] : fj.items()) jr[k] = v;
      jr["a"] = t.str();
      jr["pass"] = ok;
      arr.push_back(jr);
    } else {
      os << "ROW q=" << row.q << " field=" << F.str() << " a=" << t.str() << ": "
         << (ok ? "PASS" : "FAIL") << "\n";
    }
  }
  if (a.json) {
    Json out;
    out["rows"] = arr;
    out["all_pass"] = all;
    emit(out.dump(2) + "\n", a.out_path);
  } else {
    os << "TABLE: " << (all ? "PASS" : "FAIL") << "\n";
    emit(os.str(), a.out_path);
  }
  return all ? 0 : 1;
}

int run_enumerate(const Args& a) {
  Family fam = parse_family(a.family_text);
  const FieldSpec& F = resolve_field(fam, a.have_q, a.q, a.field_text);
  GeneratorPair pr = build_pair(fam, F, resolve_parameter(fam, F, a.a_text));
  std::optional<long long> count = bfs_enumerate({pr.x, pr.y}, a.cap);
  if (a.json) {
    Json out;
    out["family"] = family_name(fam);
    Json fj = field_json(F);
    for (auto& [k, v] : fj.items()) out[k] = v;
    out["cap"] = a.cap;
    out["order"] = count ? Json(*count) : Json(nullptr);
    emit(out.dump(2) + "\n", a.out_path);
  } else {
    emit(count ? "order " + std::to_string(*count) + "\n"
               : "enumeration cap " + std::to_string(a.cap) + " exceeded\n",
         a.out_path);
  }
  return count ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"explicit (2,3)-generator pairs for 6- and 7-dimensional classical groups: "
               "construction, invariant checks and order certification"};
  app.require_subcommand(1);
  Args a;

  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", a.family_text,
                  "family: sp6, o7, u7, sp6-3, su7-4, o7-3, o7-5, sl7")
        ->required();
  };
  auto add_field = [&](CLI::App* c) {
    c->add_option("--q", a.q,
                  "field size (u7: base size q, the matrices live over GF(q^2))");
    c->add_option("--field", a.field_text, "explicit field p^n/c0,c1,...,1");
  };
  auto add_param = [&](CLI::App* c) {
    c->add_option("--a", a.a_text, "parameter a, comma-separated coefficients (0,1 = class of t)");
  };
  auto add_io = [&](CLI::App* c) {
    auto* oj = c->add_flag("--json", a.json, "emit JSON");
    auto* ot = c->add_flag("--text", a.text, "emit human-readable text (default)");
    oj->excludes(ot);
    ot->excludes(oj);
    c->add_option("--out", a.out_path, "write output to a file instead of stdout");
  };

  CLI::App* build = app.add_subcommand("build", "construct and print a generator pair");
  add_family(build);
  add_field(build);
  add_param(build);
  add_io(build);

  CLI::App* conditions =
      app.add_subcommand("conditions", "evaluate the family's parameter conditions");
  add_family(conditions);
  add_field(conditions);
  add_param(conditions);
  add_io(conditions);

  CLI::App* search = app.add_subcommand("search", "find an admissible parameter");
  add_family(search);
  add_field(search);
  search->add_option("--strategy", a.strategy_text,
                     "exhaustive | primitive-first | alpha-squared-plus-one");
  add_io(search);

  CLI::App* certify = app.add_subcommand("certify", "run the family's full check pipeline");
  add_family(certify);
  add_field(certify);
  add_param(certify);
  certify->add_option("--seed", a.seed, "seed for the order computation");
  certify->add_option("--budget", a.budget,
                      "largest permutation-point space q^n the order check may enumerate");
  certify->add_flag("--keep-going", a.keep_going, "run every check even after a failure");
  add_io(certify);

  CLI::App* sweep = app.add_subcommand("sweep", "re-derive the closed-form identities");
  sweep->add_option("--qmax", a.qmax, "largest field size to sweep (default 13)");
  add_io(sweep);

  CLI::App* table =
      app.add_subcommand("table", "check the published unitary parameter table row by row");
  add_io(table);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "breadth-first count of the generated matrix group");
  add_family(enumerate);
  add_field(enumerate);
  add_param(enumerate);
  enumerate->add_option("--cap", a.cap, "give up beyond this many elements");
  add_io(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  a.have_q = build->count("--q") || conditions->count("--q") || search->count("--q") ||
             certify->count("--q") || enumerate->count("--q");

  try {
    if (build->parsed()) return run_build(a);
    if (conditions->parsed()) return run_conditions(a);
    if (search->parsed()) return run_search(a);
    if (certify->parsed()) return run_certify(a);
    if (sweep->parsed()) return run_sweep(a);
    if (table->parsed()) return run_table(a);
    if (enumerate->parsed()) return run_enumerate(a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cg23
