#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bellhopf/boson.hpp"
#include "bellhopf/boson_text.hpp"
#include "bellhopf/combinatorics.hpp"
#include "bellhopf/dobinski.hpp"
#include "bellhopf/egf.hpp"
#include "bellhopf/errors.hpp"
#include "bellhopf/hopf_axioms.hpp"
#include "bellhopf/hopf_text.hpp"
#include "bellhopf/json_io.hpp"
#include "bellhopf/partition_function.hpp"
#include "bellhopf/set_partition.hpp"

namespace {

using namespace bellhopf;
using nlohmann::json;

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResource = 3 };

enum class Format { plain, json, csv };

// Largest nmax accepted by `bell`; the triangle is O(n^2) big integers.
constexpr unsigned kBellMaxN = 1000;

struct Globals {
  Format format = Format::plain;
  std::string out;
  unsigned precision = 50;
  unsigned max_weight = 6;
  double cutoff = 0;
  unsigned order = 40;
};

std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw DomainError("cannot open output file " + g.out);
  f << text;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::vector<Rational> parse_values(const std::vector<std::string>& args) {
  std::vector<Rational> out;
  for (const auto& a : args) out.push_back(parse_rational(a));
  return out;
}

json complex_json(const std::vector<RationalComplex>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

// Index/value listing shared by egf and wv.
std::string sequence_text(const Globals& g, const std::string& name, unsigned first,
                          const std::vector<std::string>& values, const json& doc) {
  std::ostringstream os;
  switch (g.format) {
    case Format::json:
      return dump(doc);
    case Format::csv:
      os << "n," << name << "\n";
      for (std::size_t i = 0; i < values.size(); ++i) os << first + i << ',' << csv_field(values[i]) << "\n";
      return os.str();
    case Format::plain:
      for (std::size_t i = 0; i < values.size(); ++i) os << name << '[' << first + i << "] = " << values[i] << "\n";
      return os.str();
  }
  return {};
}

int cmd_bell(const Globals& g, unsigned nmax) {
  if (nmax > kBellMaxN) throw ResourceLimitError("bell: nmax above " + std::to_string(kBellMaxN));
  StirlingTable table(nmax);
  const auto bells = bell_numbers(nmax);
  std::ostringstream os;
  if (g.format == Format::json) {
    json doc{{"nmax", nmax}, {"bell", json::array()}, {"stirling2", json::array()}};
    for (unsigned n = 0; n <= nmax; ++n) {
      doc["bell"].push_back(bells[n].get_str());
      json row = json::array();
      for (const auto& s : table.row(n)) row.push_back(s.get_str());
      doc["stirling2"].push_back(std::move(row));
    }
    emit(g, dump(doc));
    return kOk;
  }
  if (g.format == Format::csv) os << "n,bell,stirling2\n";
  for (unsigned n = 0; n <= nmax; ++n) {
    std::string row;
    for (unsigned k = 0; k <= n; ++k) row += (k ? " " : "") + table.at(n, k).get_str();
    if (g.format == Format::csv) {
      os << n << ',' << bells[n].get_str() << ',' << row << "\n";
    } else {
      os << "B(" << n << ") = " << bells[n].get_str() << "    S(" << n << ",0.." << n << ") = " << row << "\n";
    }
  }
  emit(g, os.str());
  return kOk;
}

int cmd_stirling(const Globals& g, unsigned n, unsigned k) {
  const Integer s = stirling2(n, k);
  switch (g.format) {
    case Format::json:
      emit(g, dump(json{{"n", n}, {"k", k}, {"stirling2", s.get_str()}}));
      break;
    case Format::csv:
      emit(g, "n,k,stirling2\n" + std::to_string(n) + "," + std::to_string(k) + "," + s.get_str() + "\n");
      break;
    case Format::plain:
      emit(g, s.get_str() + "\n");
      break;
  }
  return kOk;
}

int cmd_normal_order(const Globals& g, const std::string& text, bool forgetful) {
  const auto expr = parse_boson_expression(text);
  const auto form = forgetful ? forgetful_normal_order(expr) : normal_order(expr);
  switch (g.format) {
    case Format::json: {
      auto doc = to_json(form);
      doc["input"] = text;
      doc["ordering"] = forgetful ? "forgetful" : "normal";
      emit(g, dump(doc));
      break;
    }
    case Format::csv: {
      std::ostringstream os;
      os << "create,annihilate,coefficient\n";
      std::vector<std::pair<NormalMonomial, Rational>> terms(form.begin(), form.end());
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        os << it->first.create << ',' << it->first.annihilate << ',' << to_string(it->second) << "\n";
      }
      emit(g, os.str());
      break;
    }
    case Format::plain:
      emit(g, to_string(form) + "\n");
      break;
  }
  return kOk;
}

int cmd_egf(const Globals& g, const std::string& op, const std::vector<std::string>& args) {
  EGFSeries result = EGFSeries::identity(0);
  if (op == "bell") {
    if (!args.empty()) throw DomainError("egf bell takes no coefficients; use --order");
    result = bell_egf(g.order);
  } else {
    if (args.empty()) throw DomainError("egf " + op + ": give coefficients a_0 a_1 ... a_N");
    const EGFSeries input(parse_values(args));
    result = op == "exp" ? egf_exp(input) : egf_log(input);
  }
  std::vector<std::string> text;
  for (const auto& c : result.coefficients()) text.push_back(to_string(c));
  emit(g, sequence_text(g, "a", 0, text, to_json(result)));
  return kOk;
}

int cmd_dobinski(const Globals& g, unsigned n, unsigned terms, const std::string& y_text) {
  const Rational y = parse_rational(y_text);
  const unsigned k = terms ? terms : 2 * n + 40;
  const auto r = dobinski_bell_poly(n, y, k, g.precision);
  const Rational exact = bell_polynomial(n, y);
  const bool ok = r.brackets(exact);
  const unsigned shown = std::min(g.precision, 40u);
  const std::string value = r.value.to_string(shown);
  const std::string tail = r.tail_bound.to_string(6);
  const std::string bound = r.error_bound().to_string(6);
  switch (g.format) {
    case Format::json:
      emit(g, dump(json{{"n", n},
                        {"y", to_string(y)},
                        {"terms", k},
                        {"digits", g.precision},
                        {"value", value},
                        {"tail_bound", tail},
                        {"error_bound", bound},
                        {"exact", to_string(exact)},
                        {"brackets_exact", ok}}));
      break;
    case Format::csv:
      emit(g, "n,y,K,digits,value,tail_bound,error_bound,exact,brackets_exact\n" + std::to_string(n) + "," +
                  to_string(y) + "," + std::to_string(k) + "," + std::to_string(g.precision) + "," + value + "," +
                  tail + "," + bound + "," + to_string(exact) + "," + (ok ? "true" : "false") + "\n");
      break;
    case Format::plain: {
      std::ostringstream os;
      os << "B_" << n << "(" << to_string(y) << ") ~ " << value << "\n"
         << "tail bound   " << tail << "\n"
         << "error bound  " << bound << "\n"
         << "exact        " << to_string(exact) << "\n"
         << (ok ? "PASS" : "FAIL") << ": |value - exact| <= error bound\n";
      emit(g, os.str());
      break;
    }
  }
  return ok ? kOk : kVerificationFailed;
}

QuadratureMethod parse_method(const std::string& m) {
  return m == "analytic" ? QuadratureMethod::analytic : QuadratureMethod::gauss;
}

int cmd_partition_function(const Globals& g, const std::vector<double>& betas, const std::string& method,
                           unsigned panels, double tolerance, unsigned series_order,
                           const std::vector<unsigned>& divergence) {
  TableOptions options;
  options.cutoff = g.cutoff;
  options.order = g.order;
  options.series_order = series_order;
  options.method = parse_method(method);
  options.panels = panels;
  options.tolerance = tolerance;
  options.divergence_terms = divergence;
  const auto rows = partition_function_table(betas, options);
  std::ostringstream os;
  switch (g.format) {
    case Format::csv:
      write_csv(os, rows);
      break;
    case Format::json: {
      json doc = json::array();
      for (const auto& r : rows) {
        doc.push_back({{"beta_epsilon", r.beta_epsilon},
                       {"method", r.method},
                       {"M", r.cutoff},
                       {"N", r.order},
                       {"value", r.value},
                       {"abs_error_vs_closed_form", r.abs_error}});
      }
      os << dump(json{{"rows", doc}});
      break;
    }
    case Format::plain:
      for (const auto& r : rows) {
        os << "beta*eps=" << shortest(r.beta_epsilon) << "  " << r.method << "  M=" << shortest(r.cutoff)
           << "  N=" << r.order << "  Z=" << shortest(r.value) << "  |err|=" << shortest(r.abs_error) << "\n";
      }
      break;
  }
  emit(g, os.str());
  return kOk;
}

int cmd_diagrams(const Globals& g, unsigned n) {
  const auto census = diagram_census(n);
  std::ostringstream os;
  switch (g.format) {
    case Format::json:
      os << dump(to_json(census));
      break;
    case Format::csv:
      os << "monomial,count\n";
      for (const auto& [m, c] : census.counts) os << to_string(m) << ',' << c.get_str() << "\n";
      break;
    case Format::plain:
      for (const auto& [m, c] : census.counts) os << to_string(m) << ": " << c.get_str() << "\n";
      os << "total: " << census.total().get_str() << "\n";
      break;
  }
  emit(g, os.str());
  return kOk;
}

int cmd_hopf_verify(const Globals& g, std::size_t random_elements, std::uint64_t seed, bool corrupt) {
  AxiomConfig config;
  config.max_weight = g.max_weight;
  config.random_elements = random_elements;
  config.seed = seed;
  if (corrupt) config.antipode = corrupted_antipode;
  const auto reports = check_all_axioms(config);
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  std::ostringstream os;
  switch (g.format) {
    case Format::json: {
      json doc{{"max_weight", g.max_weight}, {"passed", all}, {"axioms", json::array()}};
      for (const auto& r : reports) {
        json a{{"axiom", r.axiom}, {"passed", r.passed}, {"cases", r.cases}};
        if (r.counterexample) a["counterexample"] = *r.counterexample;
        doc["axioms"].push_back(std::move(a));
      }
      os << dump(doc);
      break;
    }
    case Format::csv:
      os << "axiom,passed,cases,counterexample\n";
      for (const auto& r : reports) {
        os << r.axiom << ',' << (r.passed ? "true" : "false") << ',' << r.cases << ','
           << csv_field(r.counterexample.value_or("")) << "\n";
      }
      break;
    case Format::plain:
      for (const auto& r : reports) {
        os << (r.passed ? "PASS " : "FAIL ") << r.axiom << " (" << r.cases << " cases)\n";
        if (r.counterexample) os << "  counterexample: " << *r.counterexample << "\n";
      }
      break;
  }
  emit(g, os.str());
  return all ? kOk : kVerificationFailed;
}

RationalComplex parse_z(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return RationalComplex(parse_rational(text));
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

int cmd_wv(const Globals& g, const std::string& op, const std::vector<std::string>& args, const std::string& word,
           const std::string& z_text, unsigned nmax) {
  std::vector<RationalComplex> input;
  if (!word.empty()) {
    if (op != "w_to_v") throw DomainError("--word only makes sense with w_to_v");
    if (!args.empty()) throw DomainError("give either --word or explicit values, not both");
    input = word_moments(parse_boson_expression(word), nmax, parse_z(z_text));
  } else {
    if (args.empty()) throw DomainError("wv " + op + ": give values or --word");
    for (const auto& a : args) input.push_back(parse_z(a));
  }
  const auto result = op == "w_to_v" ? w_to_v<RationalComplex>(input) : v_to_w<RationalComplex>(input);
  const unsigned first = op == "w_to_v" ? 1 : 0;
  const std::string name = op == "w_to_v" ? "V" : "W";
  std::vector<std::string> text;
  for (const auto& v : result) text.push_back(to_string(v));
  json doc{{"operation", op}, {"first_index", first}, {"input", complex_json(input)}, {"values", complex_json(result)}};
  emit(g, sequence_text(g, name, first, text, doc));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell numbers, boson normal ordering, EGF transforms, the free-boson partition function and the "
               "diagram Hopf algebra"};
  app.require_subcommand(1);

  Globals g;
  const std::map<std::string, Format> formats{{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("plain");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--precision", g.precision, "Decimal digits for the Dobinski evaluation")->capture_default_str();
  app.add_option("--max-weight", g.max_weight, "Weight bound for hopf-verify")->capture_default_str();
  app.add_option("--cutoff", g.cutoff, "Integration cutoff M (0: e^{-alpha M} = 1e-12 per row)")
      ->capture_default_str();
  app.add_option("--order", g.order, "Series order N")->capture_default_str();
  app.fallthrough();

  unsigned bell_nmax = 10;
  auto* bell = app.add_subcommand("bell", "Bell numbers B(0..nmax) and the Stirling triangle");
  bell->add_option("nmax", bell_nmax)->capture_default_str();

  unsigned st_n = 0, st_k = 0;
  auto* stirling = app.add_subcommand("stirling", "Stirling number of the second kind S(n,k)");
  stirling->add_option("n", st_n)->required();
  stirling->add_option("k", st_k)->required();

  std::string no_expr;
  bool forgetful = false;
  auto* no = app.add_subcommand("normal-order", "Normal-order a boson expression, e.g. \"(ad a)^3\"");
  no->add_option("expression", no_expr)->required();
  no->add_flag("--forgetful", forgetful, "Reorder without commutator terms");

  std::string egf_op;
  std::vector<std::string> egf_args;
  auto* egf = app.add_subcommand("egf", "EGF transforms on exact coefficients a_0 .. a_N");
  egf->add_option("operation", egf_op)->required()->check(CLI::IsMember({"exp", "log", "bell"}));
  egf->add_option("coefficients", egf_args, "Rationals a_0 a_1 ... (exp, log)");

  unsigned dob_n = 0, dob_terms = 0;
  std::string dob_y = "1";
  auto* dob = app.add_subcommand("dobinski", "Truncated Dobinski sum for B_n(y) with a certified error bound");
  dob->add_option("n", dob_n)->required();
  dob->add_option("--terms", dob_terms, "Truncation index K (0: 2n+40)")->capture_default_str();
  dob->add_option("--y", dob_y, "Positive rational argument")->capture_default_str();

  std::vector<double> pf_betas{0.1, 0.5, 1, 2, 5};
  std::string pf_method = "gauss";
  unsigned pf_panels = 64, pf_series = 0;
  double pf_tol = 1e-10;
  std::vector<unsigned> pf_divergence;
  auto* pf = app.add_subcommand("partition-function", "Compare the routes to the free-boson partition function");
  pf->add_option("--beta-eps", pf_betas, "Values of beta*epsilon")->capture_default_str();
  pf->add_option("--method", pf_method, "Quadrature for the regularized route")
      ->check(CLI::IsMember({"gauss", "analytic"}))
      ->capture_default_str();
  pf->add_option("--panels", pf_panels, "Gauss-Legendre panels")->capture_default_str();
  pf->add_option("--tolerance", pf_tol, "Relative quadrature tolerance")->capture_default_str();
  pf->add_option("--series-order", pf_series, "Order of the regularized series (0: automatic)")
      ->capture_default_str();
  pf->add_option("--divergence", pf_divergence, "Add termwise rows for these n over M = 10..10^4");

  unsigned dia_n = 3;
  auto* dia = app.add_subcommand("diagrams", "Set partitions of {1..n} grouped by diagram monomial");
  dia->add_option("n", dia_n)->required();

  std::size_t hv_random = 100;
  std::uint64_t hv_seed = 0x5eed;
  bool hv_corrupt = false;
  auto* hv = app.add_subcommand("hopf-verify", "Check the Hopf algebra axioms up to --max-weight");
  hv->add_option("--random", hv_random, "Random elements checked after the basis")->capture_default_str();
  hv->add_option("--seed", hv_seed)->capture_default_str();
  hv->add_flag("--corrupt-antipode", hv_corrupt, "Debug: inject a wrong antipode; the check must fail");

  std::string wv_op, wv_word, wv_z = "1";
  std::vector<std::string> wv_args;
  auto* wv = app.add_subcommand("wv", "Moments W_n <-> cumulants V_n");
  wv->add_option("operation", wv_op)->required()->check(CLI::IsMember({"w_to_v", "v_to_w"}));
  wv->add_option("values", wv_args, "Rationals, or re,im pairs");
  wv->add_option("--word", wv_word, "Take W_0..W_N as <z|w^n|z> for this boson expression (N = --order, default 10)");
  wv->add_option("--z", wv_z, "Coherent-state label as re or re,im")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bell) return cmd_bell(g, bell_nmax);
    if (*stirling) return cmd_stirling(g, st_n, st_k);
    if (*no) return cmd_normal_order(g, no_expr, forgetful);
    if (*egf) return cmd_egf(g, egf_op, egf_args);
    if (*dob) return cmd_dobinski(g, dob_n, dob_terms, dob_y);
    if (*pf) return cmd_partition_function(g, pf_betas, pf_method, pf_panels, pf_tol, pf_series, pf_divergence);
    if (*dia) return cmd_diagrams(g, dia_n);
    if (*hv) return cmd_hopf_verify(g, hv_random, hv_seed, hv_corrupt);
    if (*wv) return cmd_wv(g, wv_op, wv_args, wv_word, wv_z, app.count("--order") ? g.order : 10);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const QuadratureError& e) {
    std::cerr << "quadrature: " << e.what() << " (value " << shortest(e.value()) << ", error "
              << shortest(e.achieved_error()) << ")\n";
    return kVerificationFailed;
  }
  return kUsage;
}
