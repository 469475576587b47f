// lensform: spectra, isospectrality certificates and lattice invariants of lens spaces.

#include "lensform/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace cli = lensform::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra and isospectrality of lens spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cli::kVersion);

  std::string format = "json";
  bool unsafe = false;
  std::optional<std::int64_t> max_k;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_flag("--unsafe-limits", unsafe, "Disable the default size guards");
  };

  std::string lit_a, lit_b, report;
  std::int64_t q = 0, k = 0;
  std::size_t n = 0;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and multiplicities up to --max-k");
  spectrum->add_option("lens", lit_a, "Lens literal q:p1,...,pn")->required();
  spectrum->add_option("--max-k", max_k, "Largest degree k");
  add_common(spectrum);

  auto* iso = app.add_subcommand("isospectral", "Certified isospectrality test of two lens spaces");
  iso->add_option("a", lit_a, "First lens literal")->required();
  iso->add_option("b", lit_b, "Second lens literal")->required();
  add_common(iso);

  auto* search = app.add_subcommand("search", "Isospectral, non-isometric classes for fixed q and n");
  search->add_option("--q", q, "Group order")->required();
  search->add_option("--n", n, "Number of complex coordinates")->required();
  search->add_option("--report", report, "Write the CSV bucket report to this path");
  add_common(search);

  auto* invariants = app.add_subcommand("invariants", "Lattice, dual basis, Stanley data and series check");
  invariants->add_option("lens", lit_a, "Lens literal")->required();
  invariants->add_option("--max-k", max_k, "Series comparison range");
  add_common(invariants);

  auto* toric = app.add_subcommand("toric", "Section dimensions, Ehrhart data and degree of the lens polytope");
  toric->add_option("lens", lit_a, "Lens literal")->required();
  toric->add_option("--max-k", max_k, "Largest power k of the line bundle");
  add_common(toric);

  auto* oracle = app.add_subcommand("oracle", "Brute-force invariant harmonic dimension at degree --k");
  oracle->add_option("lens", lit_a, "Lens literal")->required();
  oracle->add_option("--k", k, "Degree")->required();
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  cli::Limits limits;
  limits.unsafe = unsafe;
  try {
    cli::Json doc;
    if (spectrum->parsed()) {
      const auto lens = cli::parse_literal(lit_a);
      doc = cli::cmd_spectrum(lens, max_k.value_or(std::min<std::int64_t>(10, 10 * lens.q())), limits);
    } else if (iso->parsed()) {
      doc = cli::cmd_isospectral(cli::parse_literal(lit_a), cli::parse_literal(lit_b), limits);
    } else if (search->parsed()) {
      auto result = cli::cmd_search(q, n, limits);
      if (!report.empty()) cli::write_report(report, result.csv);
      if (format == "csv") {
        std::cout << result.csv;
        return 0;
      }
      doc = std::move(result.document);
    } else if (invariants->parsed()) {
      const auto lens = cli::parse_literal(lit_a);
      doc = cli::cmd_invariants(lens, max_k.value_or(cli::default_invariants_k(lens)), limits);
    } else if (toric->parsed()) {
      doc = cli::cmd_toric(cli::parse_literal(lit_a), max_k.value_or(5), limits);
    } else if (oracle->parsed()) {
      doc = cli::cmd_oracle(cli::parse_literal(lit_a), k, limits);
    }
    std::cout << cli::render(doc, format);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cli::OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
