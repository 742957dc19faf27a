#include "sparkcalc.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

#include "sparks/fuzz.hpp"
#include "sparks/io.hpp"
#include "sparks/oracle.hpp"

namespace sparkcalc {

namespace {

using Report = nlohmann::ordered_json;
using sparks::io::Json;

struct Options {
  std::string lhs, rhs, mode = "all";
  bool check_oracle = false;
  double tol = 1e-8;
  std::string suite;
  long cases = 100;
  std::uint64_t seed = 1;
  std::string nerve, op, cycle;
  std::vector<std::string> cochains;
  std::string output = "text";
};

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15f", x);
  return buf;
}

Report exact_entry(const sparks::CircleNumber& c) {
  return {{"exact", c.to_string()}, {"float", format_float(c.to_float())}};
}

void add_check(Report& report, const std::string& name, bool pass) {
  report["checks"].push_back({{"name", name}, {"pass", pass}});
}

bool all_pass(const Report& report) {
  if (!report.contains("checks")) return true;
  for (const auto& c : report["checks"]) {
    if (!c["pass"].get<bool>()) return false;
  }
  return true;
}

int cmd_product(const Options& o, Report& report) {
  const sparks::CircleSpark0 x = sparks::io::spark0_from_json(sparks::io::read_json_file(o.lhs));
  const sparks::CircleSpark0 y = sparks::io::spark0_from_json(sparks::io::read_json_file(o.rhs));
  report["inputs"] = {{"lhs", sparks::to_string(x)}, {"rhs", sparks::to_string(y)}};
  report["mode"] = o.mode;

  std::vector<std::pair<std::string, sparks::CircleNumber>> results;
  const bool all = o.mode == "all";
  if (all || o.mode == "closed") results.emplace_back("closed", sparks::product_closed_form(x, y));
  if (all || o.mode == "engine") {
    results.emplace_back("engine", sparks::reduce_to_circle(sparks::product_engine(x, y)));
  }
  if (all || o.mode == "deligne") results.emplace_back("deligne", sparks::deligne_product(x, y));

  // Exact renderings first, floats afterwards.
  Report exact = Report::object();
  for (const auto& [name, value] : results) exact[name] = value.to_string();
  report["exact"] = exact;
  Report floats = Report::object();
  for (const auto& [name, value] : results) floats[name] = format_float(value.to_float());
  report["float"] = floats;

  double distance = 0.0;
  if (o.check_oracle) {
    const double quad = sparks::oracle::product_quadrature(sparks::oracle::to_float_fourier(x),
                                                           sparks::oracle::to_float_fourier(y));
    distance = sparks::circle_distance(quad, results.front().second.to_float());
    report["oracle"] = {{"quadrature", format_float(quad)}, {"circle_distance", distance}, {"tol", o.tol}};
  }
  if (results.size() > 1) {
    bool agree = true;
    for (const auto& [name, value] : results) agree = agree && value == results.front().second;
    add_check(report, "pipelines agree exactly", agree);
  }
  if (o.check_oracle) add_check(report, "quadrature oracle within tol", distance < o.tol);
  return all_pass(report) ? kPass : kDisagreement;
}

int cmd_fuzz(const Options& o, Report& report) {
  const sparks::FuzzReport r = sparks::run_fuzz(o.suite, o.cases, o.seed);
  report["inputs"] = {{"suite", r.suite}, {"cases", r.cases}, {"seed", r.seed}};
  report["passed"] = r.passed;
  if (r.counterexample) report["counterexample"] = *r.counterexample;
  add_check(report, o.suite, r.ok());
  return r.ok() ? kPass : kDisagreement;
}

template <typename R>
const sparks::Cochain<R>& as(const sparks::io::AnyCochain& c, const char* what) {
  if (const auto* p = std::get_if<sparks::Cochain<R>>(&c)) return *p;
  throw sparks::io::ParseError(std::string(what) + " has ring " + sparks::io::ring_name(c));
}

int cmd_cech(const Options& o, Report& report) {
  const sparks::Nerve nerve = sparks::io::nerve_from_json(sparks::io::read_json_file(o.nerve));
  std::vector<sparks::io::AnyCochain> cochains;
  for (const std::string& path : o.cochains) {
    cochains.push_back(sparks::io::cochain_from_json(sparks::io::read_json_file(path)));
    std::visit([&](const auto& c) { sparks::check_support(nerve, c); }, cochains.back());
  }
  report["inputs"] = {{"op", o.op}, {"vertices", nerve.vertex_count()}, {"cochains", cochains.size()}};
  const auto need = [&](std::size_t n) {
    if (cochains.size() != n) {
      throw sparks::DegreeError(o.op + " takes " + std::to_string(n) + " cochain(s), got " +
                                std::to_string(cochains.size()));
    }
  };
  if (o.op == "delta") {
    need(1);
    const auto result = std::visit(
        [&](const auto& c) { return sparks::io::AnyCochain(sparks::cech_delta(nerve, c)); }, cochains[0]);
    report["result"] = sparks::io::cochain_to_json(result);
  } else if (o.op == "cup") {
    need(2);
    if (cochains[0].index() != cochains[1].index()) {
      throw sparks::io::ParseError("cup operands have different rings");
    }
    const auto result = std::visit(
        [&](const auto& a) {
          using C = std::decay_t<decltype(a)>;
          return sparks::io::AnyCochain(sparks::cech_cup(nerve, a, std::get<C>(cochains[1])));
        },
        cochains[0]);
    report["result"] = sparks::io::cochain_to_json(result);
  } else if (o.op == "flat-product") {
    need(2);
    if (o.cycle.empty()) throw sparks::io::ParseError("flat-product needs --cycle");
    const auto& r = as<sparks::Integer>(cochains[0], "r");
    sparks::Cochain<sparks::Rational> b10;
    if (const auto* z = std::get_if<sparks::Cochain<sparks::Integer>>(&cochains[1])) {
      b10 = sparks::cochain_cast<sparks::Rational>(*z);
    } else {
      b10 = as<sparks::Rational>(cochains[1], "b10");
    }
    const sparks::Chain cycle = sparks::io::chain_from_json(sparks::io::read_json_file(o.cycle), 3);
    report["result"] = exact_entry(sparks::flat_bundle_product(nerve, r, b10, cycle));
  } else {
    throw sparks::io::ParseError("unknown cech op \"" + o.op + "\"");
  }
  return kPass;
}

void render_text(const Report& report, std::ostream& out) {
  for (const auto& [key, value] : report.items()) {
    if (key == "checks") {
      for (const auto& c : value) {
        out << "check " << c["name"].get<std::string>() << ": " << (c["pass"].get<bool>() ? "pass" : "FAIL")
            << "\n";
      }
    } else if (value.is_object()) {
      for (const auto& [k, v] : value.items()) {
        out << key << "." << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spark and Deligne products on the circle"};
  app.require_subcommand(1);
  Options o;

  auto* product = app.add_subcommand("product", "Product of two degree-0 circle sparks");
  product->add_option("--lhs", o.lhs, "Left spark file")->required();
  product->add_option("--rhs", o.rhs, "Right spark file")->required();
  product->add_option("--mode", o.mode, "Pipeline")->check(CLI::IsMember({"closed", "engine", "deligne", "all"}));
  product->add_flag("--check-oracle", o.check_oracle, "Compare against Gauss-Legendre quadrature");
  product->add_option("--tol", o.tol, "Oracle tolerance (circle distance)")->check(CLI::PositiveNumber);

  auto* fuzz = app.add_subcommand("fuzz", "Run a seeded property suite");
  fuzz->add_option("--suite,suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(sparks::fuzz_suites()));
  fuzz->add_option("--cases", o.cases, "Number of cases")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--seed", o.seed, "Generator seed");

  auto* cech = app.add_subcommand("cech", "Cech cochain operations on a nerve");
  cech->add_option("--nerve", o.nerve, "Nerve file")->required();
  cech->add_option("--cochain", o.cochains, "Cochain file (repeatable)")->required();
  cech->add_option("--op", o.op, "Operation")->required()->check(CLI::IsMember({"delta", "cup", "flat-product"}));
  cech->add_option("--cycle", o.cycle, "Cycle file for flat-product");

  for (auto* sub : {product, fuzz, cech}) {
    sub->add_option("--output", o.output, "Report format")->check(CLI::IsMember({"json", "text"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  Report report;
  report["command"] = app.get_subcommands().front()->get_name();
  int code = kPass;
  try {
    if (product->parsed()) code = cmd_product(o, report);
    if (fuzz->parsed()) code = cmd_fuzz(o, report);
    if (cech->parsed()) code = cmd_cech(o, report);
  } catch (const sparks::io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const sparks::DegreeError& e) {
    err << "invalid degrees: " << e.what() << "\n";
    return kInvalidDegrees;
  } catch (const sparks::PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kDisagreement;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParseError;
  }
  report["status"] = code == kPass ? "pass" : "fail";
  if (o.output == "json") {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out);
  }
  return code;
}

}  // namespace sparkcalc
