// Command-line front end for the isotemporal engine: exact class counts,
// class enumeration, formula-vs-oracle verification, symmetry inspection,
// and temporal reachability queries.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "isotemporal/counting.hpp"
#include "isotemporal/enumeration.hpp"
#include "isotemporal/json_io.hpp"

namespace iso = isotemporal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string format_ratio(const iso::ExactCount& num, const iso::ExactCount& den) {
  // six decimals is plenty for eyeballing convergence
  iso::ExactCount scaled = num * 1000000 / den;
  std::string digits = scaled.str();
  while (digits.size() < 7) digits.insert(digits.begin(), '0');
  return digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
}

int run(int argc, char** argv) {
  CLI::App app{"isotemporal: exact counting and enumeration of the "
               "isotemporal classes of temporal n-gons"};
  app.require_subcommand(1);

  int count_n = 0;
  CLI::App* cmd_count = app.add_subcommand("count", "Print the number of isotemporal classes of the n-gon");
  cmd_count->add_option("--n", count_n, "polygon size (n >= 3)")->required();

  int seq_from = 0, seq_to = 0;
  bool seq_ratios = false;
  CLI::App* cmd_sequence = app.add_subcommand("sequence", "CSV of class counts for a range of n");
  cmd_sequence->add_option("--from", seq_from, "first n (>= 3)")->required();
  cmd_sequence->add_option("--to", seq_to, "last n")->required();
  cmd_sequence->add_flag("--ratios", seq_ratios, "append the N(n)/N(n-1) column");

  int enum_n = 0, enum_cap = iso::kDefaultEnumerationCap;
  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "List canonical ±-forms with orbit sizes and symmetry flags");
  cmd_enumerate->add_option("--n", enum_n, "polygon size (n >= 3)")->required();
  cmd_enumerate->add_option("--cap", enum_cap, "enumeration cap (default 20)");

  int verify_from = 0, verify_to = 0, verify_cap = iso::kDefaultEnumerationCap;
  std::string verify_format = "text";
  CLI::App* cmd_verify = app.add_subcommand("verify", "Cross-check the closed formulas against enumeration oracles");
  cmd_verify->add_option("--from", verify_from, "first n (>= 3)")->required();
  cmd_verify->add_option("--to", verify_to, "last n")->required();
  cmd_verify->add_option("--cap", verify_cap, "enumeration cap (default 20)");
  cmd_verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string symmetry_form;
  CLI::App* cmd_symmetry = app.add_subcommand("symmetry", "Symmetry report for a ±-form, as JSON");
  cmd_symmetry->add_option("form", symmetry_form, "form string over + - 0")->required();

  std::string reach_file, reach_source;
  CLI::App* cmd_reach = app.add_subcommand("reach", "Vertices reachable by temporal paths from a source");
  cmd_reach->add_option("network", reach_file, "network JSON file")->required();
  cmd_reach->add_option("source", reach_source, "source vertex")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_count->parsed()) {
    if (count_n < 3) {
      std::cerr << "error: count needs --n >= 3\n";
      return kExitUsage;
    }
    std::cout << iso::isotemporal_class_count(count_n).str() << "\n";
    return kExitOk;
  }

  if (cmd_sequence->parsed()) {
    if (seq_from < 3 || seq_to < seq_from) {
      std::cerr << "error: sequence needs 3 <= from <= to\n";
      return kExitUsage;
    }
    std::cout << (seq_ratios ? "n,count,ratio" : "n,count") << "\n";
    iso::ExactCount prev = 0;
    for (int n = seq_from; n <= seq_to; ++n) {
      iso::ExactCount value = iso::isotemporal_class_count(n);
      std::cout << n << "," << value.str();
      if (seq_ratios) {
        std::cout << ",";
        if (n > 3) {
          if (prev == 0) prev = iso::isotemporal_class_count(n - 1);
          std::cout << format_ratio(value, prev);
        }
      }
      std::cout << "\n";
      prev = value;
    }
    return kExitOk;
  }

  if (cmd_enumerate->parsed()) {
    if (enum_n < 3 || enum_n > enum_cap) {
      std::cerr << "error: enumerate needs 3 <= n <= cap (" << enum_cap << ")\n";
      return kExitUsage;
    }
    iso::ClassCensus census = iso::enumerate_pm_classes(enum_n, enum_cap);
    for (const iso::ClassEntry& entry : census.classes) {
      std::cout << entry.canonical.str() << " orbit=" << entry.orbit_size
                << " sym=" << iso::symmetry_flags(entry.profile) << "\n";
    }
    return kExitOk;
  }

  if (cmd_verify->parsed()) {
    if (verify_from < 3 || verify_to < verify_from || verify_to > verify_cap) {
      std::cerr << "error: verify needs 3 <= from <= to <= cap (" << verify_cap << ")\n";
      return kExitUsage;
    }
    iso::VerificationReport report = iso::verify(verify_from, verify_to, verify_cap);
    if (verify_format == "json") {
      std::cout << iso::verification_report_json(report) << "\n";
    } else {
      std::printf("%4s  %-12s  %-24s  %-24s  %s\n", "n", "check", "formula", "oracle", "status");
      for (const iso::VerificationCheck& check : report.checks) {
        std::printf("%4d  %-12s  %-24s  %-24s  %s\n", check.n, check.check.c_str(),
                    check.formula.str().c_str(), check.oracle.str().c_str(),
                    check.pass ? "pass" : "FAIL");
      }
    }
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
  }

  if (cmd_symmetry->parsed()) {
    iso::PmForm form = iso::validate_pm(symmetry_form);
    std::cout << iso::symmetry_report_json(iso::detect_symmetries(form)) << "\n";
    return kExitOk;
  }

  if (cmd_reach->parsed()) {
    std::ifstream in(reach_file);
    if (!in) {
      std::cerr << "error: cannot open '" << reach_file << "'\n";
      return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    iso::TemporalNetwork net = iso::network_from_json(buffer.str());
    for (const std::string& name : net.temporal_reachable_set(reach_source)) {
      std::cout << name << "\n";
    }
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const iso::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
