// Command-line front end for the negforms library.
//
// Exit status: 0 success, 1 verification failures, 2 unparseable input,
// 3 incompatible operands (chart/parameter mismatch or an operation called
// outside its domain).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "negforms/forms.hpp"
#include "negforms/generalized.hpp"
#include "negforms/pathspace.hpp"
#include "negforms/serialize.hpp"
#include "negforms/verify.hpp"

namespace {

using negforms::json::Json;
namespace nj = negforms::json;

Json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw negforms::ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return nj::parse(buf.str());
}

void write_document(const Json& doc, const std::string& out) {
  const std::string text = nj::dump(doc);
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw negforms::ParseError("cannot write '" + out + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized differential forms and path-space forms"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out;
  app.add_option("--out", out, "Write the result here instead of standard output");

  std::vector<std::string> inputs;
  const auto with_inputs = [&](CLI::App* sub, std::size_t n, const std::string& what) {
    sub->add_option("inputs", inputs, what)->required()->expected(static_cast<int>(n));
    return sub;
  };

  auto* d = with_inputs(app.add_subcommand("d", "Exterior derivative of a form"), 1, "form.json");
  auto* wedge = with_inputs(app.add_subcommand("wedge", "Wedge product of two forms"), 2, "a.json b.json");
  auto* gwedge =
      with_inputs(app.add_subcommand("gwedge", "Product of two generalized forms"), 2, "a.json b.json");
  auto* gd = with_inputs(app.add_subcommand("gd", "Differential of a generalized form"), 1, "alpha.json");
  auto* chen = with_inputs(app.add_subcommand("chen", "First-order Chen integral on a plot"), 2,
                           "form.json plot.json");
  auto* ev = with_inputs(app.add_subcommand("ev", "Endpoint pullback on a plot"), 2, "form.json plot.json");
  int endpoint = 1;
  ev->add_option("--endpoint", endpoint, "Path endpoint")->check(CLI::IsMember({0, 1}));
  auto* imap = with_inputs(app.add_subcommand("imap", "Map I into path-space forms"), 1, "alpha.json");
  auto* wprime = with_inputs(app.add_subcommand("wedge-prime", "Transported product I(a) ^' I(b)"), 2,
                             "a.json b.json");
  auto* eval = with_inputs(app.add_subcommand("eval", "Evaluate a path-space form on a plot"), 2,
                           "expr.json plot.json");

  auto* verify = app.add_subcommand("verify", "Run property suites");
  negforms::verify::GenConfig cfg;
  std::string suite = "all";
  verify->add_option("--suite", suite, "Suite name or 'all'");
  verify->add_option("--seed", cfg.seed, "Random seed");
  verify->add_option("--trials", cfg.trials, "Trials per suite");
  verify->add_option("--chart-dim", cfg.chart_dim, "Maximum chart dimension");
  verify->add_option("--plot-dim", cfg.plot_domain_dim, "Maximum plot domain dimension");
  verify->add_option("--poly-deg", cfg.poly_degree, "Maximum polynomial degree");
  verify->add_option("--koszul-n", cfg.koszul_n, "Maximum Koszul generator count");
  verify->add_option("--coeff-bound", cfg.coeff_bound, "Maximum |numerator| and denominator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Json result;
    if (d->parsed()) {
      result = nj::to_json(differential(nj::form_from_json(read_document(inputs[0]))));
    } else if (wedge->parsed()) {
      result = nj::to_json(negforms::wedge(nj::form_from_json(read_document(inputs[0])),
                                           nj::form_from_json(read_document(inputs[1]))));
    } else if (gwedge->parsed()) {
      result = nj::to_json(negforms::wedge(nj::genform_from_json(read_document(inputs[0])),
                                           nj::genform_from_json(read_document(inputs[1]))));
    } else if (gd->parsed()) {
      result = nj::to_json(differential(nj::genform_from_json(read_document(inputs[0]))));
    } else if (chen->parsed()) {
      result = nj::to_json(negforms::chen_integral(nj::form_from_json(read_document(inputs[0])),
                                                   nj::plot_from_json(read_document(inputs[1]))));
    } else if (ev->parsed()) {
      result = nj::to_json(negforms::ev_pullback(endpoint, nj::form_from_json(read_document(inputs[0])),
                                                 nj::plot_from_json(read_document(inputs[1]))));
    } else if (imap->parsed()) {
      result = nj::to_json(negforms::map_I(nj::genform_from_json(read_document(inputs[0]))));
    } else if (wprime->parsed()) {
      result = nj::to_json(negforms::wedge_prime(nj::genform_from_json(read_document(inputs[0])),
                                                 nj::genform_from_json(read_document(inputs[1]))));
    } else if (eval->parsed()) {
      result = nj::to_json(negforms::evaluate(nj::pathform_from_json(read_document(inputs[0])),
                                              nj::plot_from_json(read_document(inputs[1]))));
    } else if (verify->parsed()) {
      std::vector<std::string> names;
      if (suite == "all") {
        names = negforms::verify::suite_names();
      } else {
        names.push_back(suite);
      }
      bool ok = true;
      Json reports = Json::array();
      for (const auto& name : names) {
        const auto report = negforms::verify::run_suite(name, cfg);
        ok = ok && report.passed();
        reports.push_back(negforms::verify::to_json(report));
      }
      write_document(Json{{"seed", cfg.seed}, {"passed", ok}, {"suites", reports}}, out);
      return ok ? 0 : 1;
    }
    write_document(result, out);
    return 0;
  } catch (const negforms::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const negforms::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
