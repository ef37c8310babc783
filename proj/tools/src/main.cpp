#include <iostream>

#include "CLI11.hpp"

#include "hikita/cli/run.hpp"
#include "hikita/error.hpp"

using hikita::cli::Format;
using hikita::cli::RunConfig;

namespace {

void common_flags(CLI::App* cmd, RunConfig& c, std::string& format, bool& no_timing) {
  cmd->add_option("--seed", c.seed, "64-bit seed for every random draw")->capture_default_str();
  cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  cmd->add_flag("--no-timing", no_timing, "report runtime_ms as 0");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations around fixed-point rings, bouquet quivers and the Gelfand-Graev action"};
  app.require_subcommand(1);

  RunConfig c;
  std::string format = "json";
  bool no_timing = false;
  std::vector<std::pair<CLI::App*, std::string>> leaves;

  auto* ring = app.add_subcommand("ring", "fixed-point and hyperpolygon rings");
  ring->require_subcommand(1);
  auto* hik = ring->add_subcommand("hikita", "Groebner analysis of the fixed-point ring");
  hik->add_option("--n", c.n)->required();
  hik->add_flag("--hilbert", c.hilbert, "include the Hilbert series");
  hik->add_flag("--complement", c.complement, "also check the complement identity");
  hik->add_option("--emit-ideal", c.emit_ideal, "write the ideal to FILE");
  leaves.emplace_back(hik, "ring hikita");
  auto* hyp = ring->add_subcommand("hyperpolygon", "hyperpolygon cohomology presentation");
  hyp->add_option("--n", c.n)->required();
  leaves.emplace_back(hyp, "ring hyperpolygon");

  auto* gb = app.add_subcommand("gb", "Groebner bases");
  gb->require_subcommand(1);
  auto* gbc = gb->add_subcommand("compute", "reduced basis of an ideal file");
  gbc->add_option("--input", c.input)->required();
  leaves.emplace_back(gbc, "gb compute");

  auto* quiver = app.add_subcommand("quiver", "quiver combinatorics");
  quiver->require_subcommand(1);
  auto* qc = quiver->add_subcommand("check", "forms, sigma_0 and the resolution criterion");
  qc->add_option("--family", c.family)->required()->check(CLI::IsMember({"bouquet", "abundant", "star"}));
  qc->add_option("--n", c.n)->required();
  qc->add_flag("--resolution", c.resolution);
  leaves.emplace_back(qc, "quiver check");

  auto* rep = app.add_subcommand("rep", "bouquet representations");
  rep->require_subcommand(1);
  auto* rs = rep->add_subcommand("sample", "solve the moment equations and run the flag pipeline");
  rs->add_option("--n", c.n)->required();
  rs->add_option("--nu", c.nu, "n-1 rationals, comma separated or repeated");
  rs->add_option("--gamma", c.gamma, "n-1 rationals, comma separated or repeated");
  leaves.emplace_back(rs, "rep sample");
  auto* rst = rep->add_subcommand("stability", "key condition and theta-stability from a JSON file");
  rst->add_option("--matrix", c.matrix_file)->required();
  leaves.emplace_back(rst, "rep stability");

  auto* gg = app.add_subcommand("gg", "Gelfand-Graev action");
  gg->require_subcommand(1);
  auto* ggv = gg->add_subcommand("verify", "symbolic checks");
  ggv->add_option("--n", c.n)->required();
  ggv->add_option("--check", c.check)
      ->required()
      ->check(CLI::IsMember({"involution", "braid", "w0", "restrict", "theorem12"}));
  leaves.emplace_back(ggv, "gg verify");

  auto* acc = app.add_subcommand("accept", "acceptance suite");
  acc->add_option("--level", c.level)->check(CLI::IsMember({"quick", "full"}))->default_str("quick");
  leaves.emplace_back(acc, "accept");

  for (auto& [cmd, name] : leaves) common_flags(cmd, c, format, no_timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (auto& [cmd, name] : leaves)
    if (cmd->parsed()) c.verb = name;
  c.format = format == "text" ? Format::text : Format::json;
  c.timing = !no_timing;

  hikita::cli::Envelope e;
  try {
    c.budgets = hikita::cli::budgets_from_env();
    e = hikita::cli::run(c);
  } catch (const hikita::InvalidInput& ex) {
    e.verb = c.verb;
    e.status = hikita::cli::Status::invalid_input;
    e.outputs = {{"error", ex.what()}};
  }
  std::cout << (c.format == Format::text ? hikita::cli::render_text(e) : hikita::cli::serialize(e));
  return hikita::cli::exit_code(e.status);
}
