// moduli: command-line front end over the header library.
//
// Exit codes: 0 success, 1 unexpected verification failure, 2 invalid
// parameters or unsupported case.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "moduli/betti.hpp"
#include "moduli/complexes.hpp"
#include "moduli/groups.hpp"
#include "moduli/io.hpp"
#include "moduli/topology.hpp"
#include "moduli/verify.hpp"

namespace {

using moduli::io::json;

constexpr const char* version = "moduli 1.0.0";

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int default_trunc() {
  if (const char* env = std::getenv("MODULI_BETTI_TRUNC")) {
    try {
      std::size_t used = 0;
      int d = std::stoi(env, &used);
      if (used == std::string(env).size() && d >= 0) return d;
    } catch (const std::exception&) {
    }
    throw usage_error(std::string("MODULI_BETTI_TRUNC must be a non-negative integer (got \"") + env + "\")");
  }
  return 40;
}

std::string coefficient_text(const moduli::Rational& q) { return q.str(); }

// Tabular output shared by series-valued commands.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void print_markdown_table(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << c << " |";
    os << "\n";
  };
  line(t.header);
  os << "|";
  for (std::size_t i = 0; i < t.header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : t.rows) line(r);
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

void print_latex(std::ostream& os, const Table& t) {
  os << "\\begin{tabular}{" << std::string(t.header.size(), 'r') << "}\n\\hline\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? " & " : "") << latex_escape(cells[i]);
    os << " \\\\\n";
  };
  line(t.header);
  os << "\\hline\n";
  for (const auto& r : t.rows) line(r);
  os << "\\hline\n\\end{tabular}\n";
}

void print_table(std::ostream& os, const Table& t, const std::string& format) {
  if (format == "csv") print_csv(os, t);
  else if (format == "latex") print_latex(os, t);
  else print_markdown_table(os, t);
}

const std::vector<std::string> formats = {"json", "csv", "markdown", "latex"};

// ---- betti --------------------------------------------------------------

struct BettiArgs {
  int r = 2, g = 2, a = 0, b = 0;
  std::optional<int> eps, d, trunc;
  std::string ch = "2", target = "moduli", format = "markdown", mode = "reconciled";
};

int pick_degree(int r, int b) {
  for (int d = b; d <= b + 2 * r; d += 2)
    if (d != 0 && std::gcd(r, d) == 1) return d;
  throw moduli::invalid_parameters("gcd(r, d) = 1 with d = b (mod 2) has no solution: r = " + std::to_string(r) +
                                   " is even and b = " + std::to_string(b) + " is even");
}

moduli::RealCurveType resolve_curve(int g, int a, std::optional<int> eps) {
  if (eps) return moduli::validate_curve(g, a, *eps);
  if (moduli::curve_violation(g, a, 1).empty()) return moduli::validate_curve(g, a, 1);
  return moduli::validate_curve(g, a, 0);
}

moduli::BettiResult compute_betti(const BettiArgs& x, const moduli::RealCurveType& curve, const moduli::RealBundleTopType& bundle,
                                  int D) {
  using namespace moduli;
  const bool mod2 = x.ch == "2";
  const auto mode = parse_formula_mode(x.mode);
  if (x.target == "bcg") return mod2 ? bcg_z2(x.r, x.g, x.a, D) : bcg_odd(x.r, curve, bundle, D, mode);
  if (x.target == "bsg") {
    if (!mod2) throw unsupported_case("bsg is only tabulated in characteristic 2");
    return bsg_z2(x.r, x.g, x.a, D);
  }
  if (x.target == "bg") {
    if (!mod2) throw unsupported_case("bg is only tabulated in characteristic 2");
    return bg_z2(x.r, x.g, x.a, D);
  }
  // moduli
  if (mod2) {
    if (x.r == 2) return fixed_det_rank2_z2(x.g, x.a, x.mode == "as_printed" ? Rank2Mode::as_printed : Rank2Mode::table_reconciled);
    if (x.r == 3) return fixed_det_rank3_z2(x.g, x.b, D);
    throw unsupported_case("mod 2 moduli Poincare series are available for r = 2, 3 only (r = " + std::to_string(x.r) + ")");
  }
  if (x.r == 2) return fixed_det_rank2_odd(x.g, bundle.c);
  throw unsupported_case("odd characteristic moduli polynomial is available for r = 2 only (r = " + std::to_string(x.r) + ")");
}

int run_betti(const BettiArgs& x, std::ostream& os) {
  using namespace moduli;
  const int D = x.trunc ? *x.trunc : default_trunc();
  if (D < 0) throw invalid_parameters("truncation D >= 0 violated");
  if (x.r < 2) throw invalid_parameters("rank r >= 2 violated (r = " + std::to_string(x.r) + ")");
  auto curve = resolve_curve(x.g, x.a, x.eps);
  if (x.b < 0 || x.b > x.a)
    throw invalid_parameters("0 <= b <= a violated (a = " + std::to_string(x.a) + ", b = " + std::to_string(x.b) + ")");
  const int d = x.d ? *x.d : pick_degree(x.r, x.b);
  auto bundle = validate_bundle(curve, x.r, d, standard_classes(x.a, x.b));
  if (!bundle.coprime()) throw invalid_parameters("gcd(r, d) = 1 violated (r = " + std::to_string(x.r) + ", d = " + std::to_string(d) + ")");
  auto result = compute_betti(x, curve, bundle, D);

  json params = {{"rank", x.r}, {"genus", x.g}, {"circles", x.a}, {"odd", x.b}, {"eps", curve.eps}, {"d", d},
                 {"char", x.ch}, {"target", x.target}, {"trunc", D}};
  if (x.format == "json") {
    os << json({{"params", params}, {"result", io::to_json(result)}}).dump(2) << "\n";
    return 0;
  }
  const auto& coeffs = result.polynomial ? result.polynomial->coefficients() : result.series.coefficients();
  Table t;
  for (const auto& [k, v] : params.items()) t.header.push_back(k);
  t.header.push_back("degree");
  t.header.push_back("coefficient");
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    std::vector<std::string> row;
    for (const auto& [key, v] : params.items()) row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    row.push_back(std::to_string(k));
    row.push_back(coefficient_text(coeffs[k]));
    t.rows.push_back(std::move(row));
  }
  if (x.format == "markdown") {
    os << "P(t) = " << (result.polynomial ? result.polynomial->str() : result.series.str()) << "\n\n";
    if (!result.case_label.empty()) os << "- case: " << result.case_label << "\n";
    for (const auto& w : result.warnings) os << "- warning: " << w << "\n";
    os << "\n";
  } else {
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  }
  print_table(os, t, x.format);
  return 0;
}

// ---- classify -----------------------------------------------------------

int run_classify(int g, const std::string& format, std::ostream& os) {
  using namespace moduli;
  auto curves = enumerate_curves(g);
  if (format == "json") {
    json out = json::array();
    for (const auto& c : curves) out.push_back(io::to_json(c));
    os << out.dump(2) << "\n";
    return 0;
  }
  Table t{{"g", "a", "eps", "complement"}, {}};
  for (const auto& c : curves)
    t.rows.push_back({std::to_string(c.g), std::to_string(c.a), std::to_string(c.eps), c.eps ? "connected" : "disconnected"});
  print_table(os, t, format);
  return 0;
}

// ---- pi1 ----------------------------------------------------------------

int run_pi1(int r, int g, int a, int b, const std::string& format, std::ostream& os) {
  using namespace moduli;
  auto pi1 = pi1_fixed_det_moduli(r, g, a, b);
  auto h1 = h1_fixed_det_moduli(r, g, a, b);
  if (format == "json") {
    os << json({{"pi1", io::to_json(pi1)}, {"pi1_string", to_string(pi1)}, {"h1", io::to_json(h1)}, {"h1_string", to_string(h1)}})
              .dump(2)
       << "\n";
    return 0;
  }
  os << to_string(pi1) << "; H1 = " << to_string(h1) << "\n";
  return 0;
}

// ---- verify -------------------------------------------------------------

int run_verify(const std::string& suite, const std::string& format, std::ostream& os) {
  using namespace moduli;
  std::vector<VerificationReport> reports;
  if (suite == "identities") reports = run_identity_suite();
  else if (suite == "golden") reports = golden_table_suite();
  else if (suite == "oracle") reports = oracle_suite();
  else if (suite == "negative") reports = negative_control_suite();
  else if (suite == "distinguish") reports = distinguish_suite();
  else reports = run_all_suites();
  if (format == "json") os << to_jsonl(reports);
  else os << markdown_summary(reports);
  return unexpected_failures(reports) ? 1 : 0;
}

// ---- distinguish --------------------------------------------------------

moduli::BettiType parse_type(const std::string& spec) {
  std::vector<int> v;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw moduli::invalid_parameters("type \"" + spec + "\" must be four integers g,a,eps,c");
    }
  }
  if (v.size() != 4) throw moduli::invalid_parameters("type \"" + spec + "\" must be four integers g,a,eps,c");
  return {moduli::validate_curve(v[0], v[1], v[2]), v[3]};
}

int run_distinguish(const std::string& A, const std::string& B, int r, std::optional<int> trunc, const std::string& format,
                    std::ostream& os) {
  using namespace moduli;
  const int D = trunc ? *trunc : default_trunc();
  auto x = parse_type(A), y = parse_type(B);
  auto res = distinguish(x, y, r, D);
  json out = {{"a", A}, {"b", B}, {"rank", r}, {"trunc", D}};
  out.update(to_json(res));
  if (format == "json") {
    os << out.dump(2) << "\n";
    return 0;
  }
  os << (res.distinguished ? "distinguished" : "indistinguishable by these invariants");
  if (res.distinguished) {
    os << " at stage " << res.stage << " by " << res.invariant;
    if (res.witness_degree) os << " (degree " << *res.witness_degree << ")";
  }
  os << "\n";
  return 0;
}

// ---- dga ----------------------------------------------------------------

struct DgaArgs {
  std::string complex = "case1";
  int r = 3, n = 1, ghat = 0, a = 0, b = 0, cap = 12;
  std::string field = "Q";
  std::string manifest;
};

moduli::PresentedDGA build_dga(const DgaArgs& x) {
  using namespace moduli;
  if (!x.manifest.empty()) {
    std::ifstream in(x.manifest);
    if (!in) throw invalid_parameters("cannot read manifest " + x.manifest);
    return io::dga_from_json(json::parse(in));
  }
  auto field = CoefficientRing::parse(x.field);
  if (x.complex == "koszul_tate") return koszul_tate(x.r, x.n, x.ghat, field, x.cap);
  if (x.complex == "case1") return case1(x.r, x.n, x.ghat, field, x.cap);
  if (x.complex == "case2_S") return case2_S(x.r, x.n, x.ghat, field, x.cap);
  if (x.complex == "case2_T") return case2_T(x.r, x.n, x.a, x.b, field, x.cap);
  if (x.complex == "lemma314_S") return lemma314_S(x.r, x.n, x.b, field, x.cap);
  if (x.complex == "prop38") return prop38(x.r, x.n, x.a, x.ghat, x.cap);
  throw invalid_parameters("unknown complex " + x.complex);
}

int run_dga_export(const DgaArgs& x, std::ostream& os) {
  os << moduli::io::to_json(build_dga(x)).dump(2) << "\n";
  return 0;
}

int run_dga_homology(const DgaArgs& x, const std::string& format, std::ostream& os) {
  using namespace moduli;
  auto dga = build_dga(x);
  auto H = homology_hilbert(dga, x.cap);
  auto series = H.character_series();
  if (format == "json") {
    os << json({{"id", dga.id}, {"table", io::to_json(H)}, {"series", io::to_json(series)}}).dump(2) << "\n";
    return 0;
  }
  Table t{{"s", "q", "chi", "dim"}, {}};
  for (const auto& [key, dim] : H.dims) {
    auto [s, q, chi] = key;
    t.rows.push_back({std::to_string(s), std::to_string(q), std::to_string(chi), std::to_string(dim)});
  }
  if (format == "markdown") os << "H(t) = " << series.str() << "\n\n";
  print_table(os, t, format);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers, fundamental groups and verification for moduli of Real bundles"};
  app.set_version_flag("--version", version);
  app.require_subcommand(1);

  BettiArgs betti;
  auto* c_betti = app.add_subcommand("betti", "poincare series of a moduli space or gauge classifying space");
  c_betti->add_option("--rank", betti.r, "rank r")->required();
  c_betti->add_option("--genus", betti.g, "genus g")->required();
  c_betti->add_option("--circles", betti.a, "number of real circles a")->required();
  c_betti->add_option("--odd", betti.b, "circles where the bundle is non-orientable (b)")->required();
  c_betti->add_option("--eps", betti.eps, "1 if the complement of the real locus is connected");
  c_betti->add_option("--degree", betti.d, "degree d (default: smallest valid)");
  c_betti->add_option("--char", betti.ch, "coefficient characteristic")->check(CLI::IsMember({"2", "odd"}));
  c_betti->add_option("--trunc", betti.trunc, "truncation degree D");
  c_betti->add_option("--target", betti.target, "moduli|bcg|bsg|bg")->check(CLI::IsMember({"moduli", "bcg", "bsg", "bg"}));
  c_betti->add_option("--mode", betti.mode, "reconciled|as_printed")->check(CLI::IsMember({"reconciled", "as_printed"}));
  c_betti->add_option("--format", betti.format, "output format")->check(CLI::IsMember(formats));

  int cg = 2;
  std::string c_format = "markdown";
  auto* c_classify = app.add_subcommand("classify", "list the topological types of real curves of genus g");
  c_classify->add_option("--genus", cg, "genus g")->required();
  c_classify->add_option("--format", c_format, "output format")->check(CLI::IsMember(formats));

  int pr = 2, pg = 2, pa = 0, pb = 0;
  std::string p_format = "markdown";
  auto* c_pi1 = app.add_subcommand("pi1", "fundamental group and H_1 of the fixed determinant moduli space");
  c_pi1->add_option("--rank", pr, "rank r")->required();
  c_pi1->add_option("--genus", pg, "genus g")->required();
  c_pi1->add_option("--circles", pa, "number of real circles a")->required();
  c_pi1->add_option("--odd", pb, "odd circles b")->required();
  c_pi1->add_option("--format", p_format, "json|markdown")->check(CLI::IsMember({"json", "markdown"}));

  std::string suite = "all", v_format = "markdown";
  auto* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"identities", "golden", "oracle", "negative", "distinguish", "all"}));
  c_verify->add_option("--format", v_format, "json (JSON lines) or markdown")->check(CLI::IsMember({"json", "markdown"}));

  std::string da, db, d_format = "markdown";
  int dr = 2;
  std::optional<int> dtrunc;
  auto* c_dist = app.add_subcommand("distinguish", "compare two types by their Betti numbers");
  c_dist->add_option("--a", da, "first type g,a,eps,c")->required();
  c_dist->add_option("--b", db, "second type g,a,eps,c")->required();
  c_dist->add_option("--rank", dr, "rank r")->required();
  c_dist->add_option("--trunc", dtrunc, "truncation degree D");
  c_dist->add_option("--format", d_format, "json|markdown")->check(CLI::IsMember({"json", "markdown"}));

  DgaArgs dga;
  std::string h_format = "markdown";
  auto* c_dga = app.add_subcommand("dga", "presented complexes");
  c_dga->require_subcommand(1);
  auto add_dga_options = [&](CLI::App* c) {
    c->add_option("--complex", dga.complex, "koszul_tate|case1|case2_S|case2_T|lemma314_S|prop38");
    c->add_option("--rank", dga.r, "rank r");
    c->add_option("--n", dga.n, "number of boundary circles n");
    c->add_option("--ghat", dga.ghat, "genus of the quotient surface");
    c->add_option("--circles", dga.a, "a");
    c->add_option("--odd", dga.b, "b");
    c->add_option("--field", dga.field, "Q or GF(p)");
    c->add_option("--cap", dga.cap, "total degree cap");
    c->add_option("--manifest", dga.manifest, "read the complex from a JSON manifest");
  };
  auto* c_export = c_dga->add_subcommand("export", "print the JSON manifest");
  add_dga_options(c_export);
  auto* c_hom = c_dga->add_subcommand("homology", "homology dimensions through the cap");
  add_dga_options(c_hom);
  c_hom->add_option("--format", h_format, "output format")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*c_betti) return run_betti(betti, std::cout);
    if (*c_classify) return run_classify(cg, c_format, std::cout);
    if (*c_pi1) return run_pi1(pr, pg, pa, pb, p_format, std::cout);
    if (*c_verify) return run_verify(suite, v_format, std::cout);
    if (*c_dist) return run_distinguish(da, db, dr, dtrunc, d_format, std::cout);
    if (*c_export) return run_dga_export(dga, std::cout);
    if (*c_hom) return run_dga_homology(dga, h_format, std::cout);
  } catch (const moduli::invalid_complex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) { // invalid_parameters, unsupported_case, usage errors, JSON schema errors
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
