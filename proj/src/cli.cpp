#include "symdyn/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symdyn/acceptance.hpp"
#include "symdyn/analysis.hpp"
#include "symdyn/freegroup.hpp"
#include "symdyn/recognizability.hpp"
#include "symdyn/serialization.hpp"

namespace symdyn {
namespace {

void write_artifact(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write " + path);
  }
  file << text;
}

std::string table_format(const std::string& format) {
  if (format.empty()) {
    return "csv";
  }
  if (format == "text") {
    throw std::runtime_error("tables and profiles support --format csv or json");
  }
  return format;
}

Json table_to_json(const ComplexityTable& table) {
  Json j = Json::object();
  j["presentation"] = Json::parse(table.presentation);
  Json entries = Json::array();
  for (const auto& [n, p] : table.entries) {
    entries.push_back({{"n", n}, {"p", nat_to_string(p)}});
  }
  j["entries"] = entries;
  return j;
}

std::string emit_table(const ComplexityTable& table, const std::string& format) {
  if (format == "json") {
    return table_to_json(table).dump(2) + "\n";
  }
  return table_to_csv(table);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symdyn: exact factor complexity, recognizability certificates and "
               "free-group basis-change experiments for finitely presented subshifts"};
  app.require_subcommand(1);

  std::string format;
  std::string output_path;
  app.add_option("--format", format,
                 "output format: csv|json for tables and profiles, json|text for reports")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("-o,--output", output_path, "write the artifact to a file instead of stdout");

  // complexity <X.json> -n N
  auto* cmd_complexity = app.add_subcommand("complexity", "exact complexity table of a subshift");
  std::string complexity_path;
  int complexity_n = 8;
  cmd_complexity->add_option("presentation", complexity_path, "subshift JSON file")->required();
  cmd_complexity->add_option("-n,--window", complexity_n, "table window")->required();

  // image <X.json> <sigma.json> -n N
  auto* cmd_image = app.add_subcommand("image", "complexity table of a morphic image subshift");
  std::string image_x_path, image_sigma_path;
  int image_n = 8;
  cmd_image->add_option("presentation", image_x_path, "subshift JSON file")->required();
  cmd_image->add_option("morphism", image_sigma_path, "morphism JSON file")->required();
  cmd_image->add_option("-n,--window", image_n, "table window")->required();

  // recognize <sigma.json> <X.json>
  auto* cmd_recognize = app.add_subcommand("recognize", "recognizability certificate");
  std::string rec_sigma_path, rec_x_path;
  int rec_r_max = 3, rec_window = 10, rec_period_max = 4;
  cmd_recognize->add_option("morphism", rec_sigma_path, "morphism JSON file")->required();
  cmd_recognize->add_option("presentation", rec_x_path, "subshift JSON file")->required();
  cmd_recognize->add_option("--r-max", rec_r_max, "largest repetition bound to certify");
  cmd_recognize->add_option("--window", rec_window, "grouping window (>= 2*r_max+2)");
  cmd_recognize->add_option("--period-max", rec_period_max, "periodic audit window");

  // entropy <X.json> -n N
  auto* cmd_entropy = app.add_subcommand("entropy", "entropy profile n -> log p(n)/n");
  std::string entropy_path;
  int entropy_n = 20;
  cmd_entropy->add_option("presentation", entropy_path, "subshift JSON file")->required();
  cmd_entropy->add_option("-n,--window", entropy_n, "profile window")->required();

  // counterexample --alphabet-size k -n N
  auto* cmd_counter = app.add_subcommand("counterexample",
                                         "doubling-morphism suite on the full k-shift");
  int counter_k = 2, counter_n = 12;
  cmd_counter->add_option("--alphabet-size", counter_k, "full shift alphabet size (>= 2)");
  cmd_counter->add_option("-n,--window", counter_n, "window for the exact equalities");

  // basis-change <X.json> <phi.json> <phi_inv.json> -n N [-L L]
  auto* cmd_basis = app.add_subcommand("basis-change",
                                       "two-basis complexity comparison with chopped images");
  std::string basis_x_path, basis_phi_path, basis_psi_path;
  int basis_n = 10, basis_l = 6;
  cmd_basis->add_option("presentation", basis_x_path, "doubled subshift JSON file")->required();
  cmd_basis->add_option("hom", basis_phi_path, "basis-change hom JSON file")->required();
  cmd_basis->add_option("inverse", basis_psi_path, "declared inverse hom JSON file")->required();
  cmd_basis->add_option("-n,--window", basis_n, "comparison window")->required();
  cmd_basis->add_option("-L,--cancellation-window", basis_l,
                        "word length for the cancellation-bound estimate");

  // verify all
  auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
  std::string verify_what = "all";
  int verify_n = 12;
  cmd_verify->add_option("suite", verify_what, "which suite to run (all)");
  cmd_verify->add_option("-n,--window", verify_n,
                         "extend exact-equality windows beyond the pinned minimum of 12");

  // --format / -o live on the top-level app and apply to every subcommand.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*cmd_complexity) {
      const SubshiftPtr x = load_subshift(complexity_path);
      write_artifact(emit_table(complexity_table(*x, complexity_n), table_format(format)),
                     output_path, out);
      return 0;
    }
    if (*cmd_image) {
      const SubshiftPtr x = load_subshift(image_x_path);
      std::ifstream in(image_sigma_path);
      if (!in) {
        throw std::runtime_error("cannot open " + image_sigma_path);
      }
      const Morphism sigma = morphism_from_json(Json::parse(in));
      const SubshiftPtr y = Subshift::image(x, sigma);
      write_artifact(emit_table(complexity_table(*y, image_n), table_format(format)),
                     output_path, out);
      return 0;
    }
    if (*cmd_recognize) {
      std::ifstream in(rec_sigma_path);
      if (!in) {
        throw std::runtime_error("cannot open " + rec_sigma_path);
      }
      const Morphism sigma = morphism_from_json(Json::parse(in));
      const SubshiftPtr x = load_subshift(rec_x_path);
      const RecognizabilityCertificate cert =
          check_recognizability(sigma, x, rec_r_max, rec_window, rec_period_max);
      write_artifact(certificate_to_json(cert).dump(2) + "\n", output_path, out);
      return 0;  // a verdict, not an error
    }
    if (*cmd_entropy) {
      const SubshiftPtr x = load_subshift(entropy_path);
      const EntropyProfile profile = entropy_profile(*x, 1, entropy_n);
      if (table_format(format) == "json") {
        Json j = Json::object();
        j["presentation"] = Json::parse(profile.presentation);
        Json entries = Json::array();
        for (const auto& e : profile.entries) {
          entries.push_back({{"n", e.n}, {"p", nat_to_string(e.p)},
                             {"log_p_over_n", e.log_p_over_n}});
        }
        j["entries"] = entries;
        j["headline"] = profile.headline();
        j["window"] = profile.window();
        write_artifact(j.dump(2) + "\n", output_path, out);
      } else {
        write_artifact(profile_to_csv(profile), output_path, out);
      }
      return 0;
    }
    if (*cmd_counter) {
      if (format == "csv") {
        throw std::runtime_error("reports support --format json or text");
      }
      const CounterexampleBundle bundle = counterexample_suite(counter_k, counter_n);
      if (format == "text") {
        std::ostringstream text;
        for (const BoundReport& r : bundle.reports) {
          text << bound_report_to_text(r);
        }
        text << "entropy headline  p_X window " << bundle.profile_x.window() << ": "
             << format_double(bundle.profile_x.headline()) << ", p_Y window "
             << bundle.profile_y.window() << ": " << format_double(bundle.profile_y.headline())
             << "\n";
        write_artifact(text.str(), output_path, out);
      } else {
        write_artifact(bundle_to_json(bundle).dump(2) + "\n", output_path, out);
      }
      if (!bundle.pass) {
        std::ostringstream claims;
        for (const BoundReport& r : bundle.reports) {
          if (!r.pass) {
            claims << ' ' << r.claim;
          }
        }
        err << "error: counterexample suite failed:" << claims.str() << "\n";
        return 1;
      }
      return 0;
    }
    if (*cmd_basis) {
      const SubshiftPtr x_pm = load_subshift(basis_x_path);
      const FreeGroupHom phi = load_hom(basis_phi_path);
      const FreeGroupHom psi = load_hom(basis_psi_path);
      if (!compose_check_inverse(phi, psi)) {
        throw std::runtime_error("claim proposition-5.2: homs are not mutually inverse");
      }
      const CancellationEstimate est_ba = cancellation_bound_estimate(phi, basis_l);
      const CancellationEstimate est_ab = cancellation_bound_estimate(psi, basis_l);

      ComplexityTable table_y;
      table_y.presentation = "basis-change image of " + x_pm->describe();
      for (int n = 1; n <= basis_n; ++n) {
        table_y.entries.emplace(
            n, Nat(basis_change_language(*x_pm, phi, psi, est_ba.bound, est_ab.bound, n).size()));
      }
      const int upper_d = phi.sup_norm() * psi.sup_norm() + 1;
      const ComplexityTable table_x = complexity_table(*x_pm, upper_d * basis_n);
      const BasisChangeReport report = verify_basis_change_inequality(
          table_x, table_y, phi.sup_norm(), psi.sup_norm(), est_ba.bound, est_ab.bound, basis_n);

      Json j = basis_change_report_to_json(report);
      j["cancellation"] = {
          {"C_BA", est_ba.bound},
          {"C_BA_maxima", est_ba.maxima_by_length},
          {"C_BA_stabilized", est_ba.stabilized(3)},
          {"C_AB", est_ab.bound},
          {"C_AB_maxima", est_ab.maxima_by_length},
          {"C_AB_stabilized", est_ab.stabilized(3)},
      };
      write_artifact(j.dump(2) + "\n", output_path, out);
      if (!report.pass) {
        err << "error: claim proposition-5.2(1) failed\n";
        return 1;
      }
      return 0;
    }
    if (*cmd_verify) {
      if (verify_what != "all") {
        throw std::runtime_error("unknown verify suite: " + verify_what);
      }
      const std::vector<CriterionResult> results = run_acceptance(verify_n);
      bool all_pass = true;
      std::ostringstream failed;
      for (const CriterionResult& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << ": " << r.detail
            << "\n";
        if (!r.pass) {
          all_pass = false;
          failed << ' ' << r.name;
        }
      }
      if (!all_pass) {
        err << "error: failing criteria:" << failed.str() << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace symdyn
