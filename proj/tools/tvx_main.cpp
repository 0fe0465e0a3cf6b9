#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tvx/binary_form.hpp"
#include "tvx/suite.hpp"
#include "tvx/symgroup.hpp"
#include "tvx/syzygy.hpp"
#include "tvx/transvectant.hpp"
#include "tvx/wigner.hpp"

using nlohmann::json;
using namespace tvx;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2;

struct Global {
  std::string format = "pretty";
  std::uint64_t seed = 42;
  std::string out;
};

// A JSON document, or a bare list of coefficients separated by commas or spaces.
BinaryForm read_form(const std::string& text, Convention convention) {
  auto start = text.find_first_not_of(" \t\n");
  if (start != std::string::npos && (text[start] == '[' || text[start] == '{'))
    return binary_form_from_json(json::parse(text), convention);
  std::string spaced = text;
  for (auto& c : spaced)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(spaced);
  std::vector<Rational> coeffs;
  for (std::string tok; in >> tok;) coeffs.push_back(parse_rational(tok));
  if (coeffs.empty()) throw Error("empty coefficient list");
  return BinaryForm::from_coeffs(Pair::x, coeffs, convention);
}

void require_order(const BinaryForm& f, int order, const std::string& name) {
  if (f.order() != order)
    throw Error(name + " has order " + std::to_string(f.order()) + ", expected " + std::to_string(order));
}

std::string pretty_form(const BinaryForm& f) {
  auto c = f.coeffs();
  int m = f.order();
  std::string out;
  for (int i = 0; i <= m; ++i) {
    if (c[i] == 0) continue;
    std::string mono;
    if (m - i) mono += " x1" + (m - i > 1 ? "^" + std::to_string(m - i) : std::string());
    if (i) mono += " x2" + (i > 1 ? "^" + std::to_string(i) : std::string());
    out += (out.empty() ? "" : " + ") + to_string(c[i]) + mono;
  }
  return out.empty() ? "0" : out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string pretty_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + to_string(m(r, c));
    out += "\n";
  }
  return out;
}

std::string pretty_table(const SyzygyTable& t) {
  std::ostringstream out;
  out << "(m,n,r) = (" << t.m << "," << t.n << "," << t.r << ")";
  if (t.point) out << "  (a,b) = (" << t.point->a << "," << t.point->b << ")";
  else out << "  closed form";
  out << "\n";
  for (const auto& [k, v] : t.coeffs)
    if (v != 0) out << "  theta(" << k.first << "," << k.second << ") = " << to_string(v) << "\n";
  return out.str();
}

// Writes `doc` to --out when given and prints either the JSON or the pretty text.
void emit(const Global& g, const json& doc, const std::string& pretty) {
  if (!g.out.empty()) {
    std::ofstream file(g.out);
    if (!file) throw Error("cannot write " + g.out);
    file << doc.dump(2) << "\n";
  }
  if (g.format == "json") std::cout << doc.dump(2) << "\n";
  else std::cout << pretty << (pretty.empty() || pretty.back() == '\n' ? "" : "\n");
}

std::vector<HalfInt> parse_halfints(const std::string& text) {
  std::string spaced = text;
  for (auto& c : spaced)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(spaced);
  std::vector<HalfInt> out;
  for (std::string tok; in >> tok;) out.push_back(parse_halfint(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact transvectants, syzygies, 9-j symbols and symmetric group tools"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--seed", g.seed, "Seed for all randomized checks");
  app.add_option("--out", g.out, "Also write the JSON result to this path");

  std::string conv_name = "monomial", a_text, b_text;
  int m = 0, n = 0, r = 0;
  auto* tv = app.add_subcommand("transvect", "The r-th transvectant of two binary forms");
  tv->add_option("--m", m)->required();
  tv->add_option("--n", n)->required();
  tv->add_option("--r", r)->required();
  tv->add_option("--A", a_text, "JSON form or inline coefficients")->required();
  tv->add_option("--B", b_text, "JSON form or inline coefficients")->required();
  tv->add_option("--convention", conv_name)->check(CLI::IsMember({"monomial", "binomial"}));

  int pa = -1, pb = -1, trials = 5;
  bool closed = false, symbolic = false;
  auto* sz = app.add_subcommand("syzygy", "Weight-r syzygy tables");
  sz->add_option("--m", m)->required();
  sz->add_option("--n", n)->required();
  sz->add_option("--r", r)->required();
  auto* opt_a = sz->add_option("--a", pa);
  auto* opt_b = sz->add_option("--b", pb);
  auto* opt_closed = sz->add_flag("--closed", closed, "The closed-form syzygy");
  opt_closed->excludes(opt_a)->excludes(opt_b);
  opt_a->needs(opt_b);
  opt_b->needs(opt_a);
  auto* szv = sz->add_subcommand("verify", "Substitute random forms and check the residual vanishes");
  szv->add_option("--trials", trials)->check(CLI::PositiveNumber);
  szv->add_option("--seed", g.seed);
  szv->add_flag("--symbolic", symbolic, "One deterministic trial with distinct prime coefficients");

  std::string u0_text, u1_text;
  auto* rc = app.add_subcommand("reconstruct", "Higher transvectants from u0 and u1");
  rc->add_option("--m", m)->required();
  rc->add_option("--n", n)->required();
  rc->add_option("--u0", u0_text)->required();
  rc->add_option("--u1", u1_text)->required();

  std::string array_text, method = "triplesum";
  auto* nj = app.add_subcommand("ninej", "Wigner 9-j symbol");
  nj->add_option("--array", array_text, "\"j1 j2 j12; j3 j4 j34; j13 j24 J\"")->required();
  nj->add_option("--method", method)->check(CLI::IsMember({"operator", "triplesum", "both"}));

  std::string j_text, m_text;
  auto* tj = app.add_subcommand("threej", "Wigner 3-j symbol");
  tj->add_option("--j", j_text, "\"j1 j2 j3\"")->required();
  tj->add_option("--mj", m_text, "\"m1 m2 m3\"")->required();

  std::string six_text;
  auto* sj = app.add_subcommand("sixj", "Wigner 6-j symbol");
  sj->add_option("--array", six_text, "\"j1 j2 j12; j3 J j23\"")->required();

  std::string shape, l_text, mu_text, nu_text;
  int d = 5;
  auto* sym = app.add_subcommand("sym", "Symmetric group representations");
  sym->require_subcommand(1);
  auto* st = sym->add_subcommand("tableaux", "Standard tableaux of a shape");
  st->add_option("--shape", shape)->required();
  auto* sm = sym->add_subcommand("mult", "Kronecker multiplicity");
  auto* sp = sym->add_subcommand("projmat", "Equivariant projection matrix");
  for (auto* sub : {sm, sp}) {
    sub->add_option("--l", l_text)->required();
    sub->add_option("--m", mu_text)->required();
    sub->add_option("--n", nu_text)->required();
  }
  auto* sv = sym->add_subcommand("verify", "The d=5 identity or the redundancy conjecture for d=6,7");
  sv->add_option("--d", d)->required()->check(CLI::IsMember({5, 6, 7}));

  std::string suite;
  auto* vf = app.add_subcommand("verify", "Run an acceptance suite");
  vf->add_option("--suite", suite)->required();
  vf->add_option("--trials", trials)->check(CLI::PositiveNumber);
  vf->add_option("--seed", g.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tv) {
      Convention conv = parse_convention(conv_name);
      BinaryForm a = read_form(a_text, conv), b = read_form(b_text, conv);
      require_order(a, m, "A");
      require_order(b, n, "B");
      if (r < 0 || r > std::min(m, n)) throw Error("r must lie in [0, min(m,n)]");
      BinaryForm t = transvect(a, b, r);
      emit(g, to_json(t, conv), pretty_form(t));
      return kOk;
    }
    if (*sz) {
      if (r < 2 || r > std::min(m, n)) throw Error("r must lie in [2, min(m,n)]");
      SyzygyTable t = closed ? closed_form_table(m, n, r)
                     : pa >= 0 ? vartheta_table(m, n, r, LatticePoint{pa, pb})
                               : closed_form_table(m, n, r);
      if (*szv) {
        TableVerdict v = verify_table(t, trials, g.seed, symbolic);
        json doc{{"table", to_json(t)},
                 {"seed", g.seed},
                 {"trials", v.trials},
                 {"symbolic", symbolic},
                 {"status", v.pass ? "pass" : "fail"},
                 {"reason", v.reason}};
        emit(g, doc, pretty_table(t) + (v.pass ? "verified" : "FAILED: " + v.reason) + " (" +
                         std::to_string(v.trials) + " trials)\n");
        return v.pass ? kOk : kCheckFailed;
      }
      emit(g, to_json(t), pretty_table(t));
      return kOk;
    }
    if (*rc) {
      BinaryForm u0 = read_form(u0_text, Convention::monomial), u1 = read_form(u1_text, Convention::monomial);
      require_order(u0, m + n, "u0");
      require_order(u1, m + n - 2, "u1");
      auto forms = reconstruct(u0, u1, m, n);
      json doc = json::array();
      std::string pretty;
      for (std::size_t k = 0; k < forms.size(); ++k) {
        doc.push_back(to_json(forms[k]));
        pretty += "u" + std::to_string(k + 2) + " = " + pretty_form(forms[k]) + "\n";
      }
      emit(g, doc, pretty);
      return kOk;
    }
    if (*nj) {
      NineJArray a = parse_ninej(array_text);
      json doc{{"array", to_string(a)}};
      std::string pretty;
      bool agree = true;
      if (method == "operator" || method == "both") {
        doc["operator"] = to_string(ninej_operator(a));
        pretty += doc["operator"].get<std::string>();
      }
      if (method == "triplesum" || method == "both") {
        doc["triplesum"] = to_string(ninej_triple_sum(a));
        if (!pretty.empty()) pretty += "  ";
        pretty += doc["triplesum"].get<std::string>();
      }
      if (method == "both") {
        agree = doc["operator"] == doc["triplesum"];
        doc["agree"] = agree;
        pretty += agree ? "  (routes agree)" : "  (ROUTES DISAGREE)";
      }
      emit(g, doc, pretty);
      return agree ? kOk : kCheckFailed;
    }
    if (*tj) {
      auto j = parse_halfints(j_text), mj = parse_halfints(m_text);
      if (j.size() != 3 || mj.size() != 3) throw Error("threej takes three j and three m values");
      std::string v = to_string(threej(j[0], j[1], j[2], mj[0], mj[1], mj[2]));
      emit(g, json{{"value", v}}, v);
      return kOk;
    }
    if (*sj) {
      auto j = parse_halfints(six_text);
      if (j.size() != 6) throw Error("sixj takes six values");
      std::string v = to_string(sixj({j[0], j[1], j[2], j[3], j[4], j[5]}));
      emit(g, json{{"value", v}}, v);
      return kOk;
    }
    if (*st) {
      Partition p = parse_partition(shape);
      json doc = json::array();
      std::string pretty;
      for (const auto& t : standard_tableaux(p)) {
        doc.push_back(to_string(t));
        pretty += to_string(t) + "\n";
      }
      emit(g, doc, pretty);
      return kOk;
    }
    if (*sm) {
      Integer k = multiplicity(parse_partition(l_text), parse_partition(mu_text), parse_partition(nu_text));
      emit(g, json{{"multiplicity", k.get_str()}}, k.get_str());
      return kOk;
    }
    if (*sp) {
      Matrix mat = projection_matrix(parse_partition(l_text), parse_partition(mu_text), parse_partition(nu_text));
      emit(g, matrix_json(mat), pretty_matrix(mat));
      return kOk;
    }
    if (*sv) {
      if (d == 5) {
        S5Verdict v = verify_s5_syzygy();
        json coeffs = json::array();
        for (const auto& c : v.relation.coefficients) coeffs.push_back(to_string(c));
        json doc{{"d", 5},
                 {"status", v.pass ? "pass" : "fail"},
                 {"anchored", v.anchored},
                 {"raw", v.raw},
                 {"computed_relation", coeffs},
                 {"detail", v.detail}};
        emit(g, doc, std::string(v.pass ? "pass: " : "fail: ") + v.detail);
        return v.pass ? kOk : kCheckFailed;
      }
      RelationReport rep = test_conjecture(d);
      json coeffs = json::array();
      for (const auto& c : rep.coefficients) coeffs.push_back(to_string(c));
      json anchors = json::array();
      for (const auto& a : rep.anchors)
        anchors.push_back({{"map", a.map}, {"expected", to_string(a.expected)}, {"found", to_string(a.found)}});
      json doc{{"d", d},
               {"status", rep.pass ? "pass" : "fail"},
               {"mult_22", rep.mult_22.get_str()},
               {"mult_211", rep.mult_211.get_str()},
               {"relation_dimension", rep.relation_dimension},
               {"coefficients", coeffs},
               {"anchors", anchors},
               {"detail", rep.detail}};
      std::string pretty = std::string(rep.pass ? "pass: " : "fail: ") + rep.detail + "\ncoefficients:";
      for (const auto& c : coeffs) pretty += " " + c.get<std::string>();
      emit(g, doc, pretty);
      return rep.pass ? kOk : kCheckFailed;
    }
    if (*vf) {
      if (!is_suite(suite)) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kUsage;
      }
      SuiteReport rep = run_suite(suite, g.seed, trials);
      if (!g.out.empty()) {
        std::ofstream file(g.out);
        if (!file) throw Error("cannot write " + g.out);
        file << to_json(rep).dump(2) << "\n";
      }
      std::cout << (g.format == "json" ? to_json(rep).dump(2) + "\n" : to_table(rep));
      return rep.pass() ? kOk : kCheckFailed;
    }
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
