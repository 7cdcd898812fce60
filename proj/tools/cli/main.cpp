#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using tdga::cli::RunConfig;

  CLI::App app{"Twisted dihedral group algebra key exchange and its linear-algebra attack"};
  app.require_subcommand(1);

  RunConfig config;
  auto add_common = [&config](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "64-bit seed; every run is reproducible from it")->capture_default_str();
    sub->add_option("--in", config.inputs, "Input file(s), in the order the command expects");
    sub->add_option("--out", config.output, "Write the produced file here instead of stdout");
  };
  auto add_shape = [&config](CLI::App* sub) {
    sub->add_option("--n", config.n, "Order n of the rotation subgroup")->capture_default_str();
    sub->add_option("--q", config.q, "Field size (odd prime dividing 2n)")->capture_default_str();
  };
  auto add_trials = [&config](CLI::App* sub) {
    sub->add_option("--trials", config.trials, "Number of Monte Carlo trials")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  auto* params = app.add_subcommand("params", "Generate public parameters (lambda, h)");
  add_shape(params);
  add_common(params);
  params->add_option("--lambda", config.lambda, "Force the cocycle parameter (must be a non-square)");

  auto* keygen = app.add_subcommand("keygen", "Draw a secret key (s, t); --in params");
  add_common(keygen);

  auto* pk = app.add_subcommand("pk", "Compute the public key s h t; --in params --in secret-key");
  add_common(pk);

  auto* exchange = app.add_subcommand("exchange", "Run a full exchange between two parties; --in params");
  add_common(exchange);

  auto* attack = app.add_subcommand("attack", "Recover an equivalent secret key; --in params --in public-key");
  add_common(attack);

  auto* bench = app.add_subcommand("bench", "Measure the attack success rate over random instances");
  add_shape(bench);
  add_trials(bench);
  add_common(bench);

  auto* stats = app.add_subcommand("circulant-stats", "Invertibility statistics of random circulants");
  add_shape(stats);
  add_trials(stats);
  add_common(stats);

  auto* verify = app.add_subcommand("verify-paper-examples",
                                    "Check the bundled worked instances (or --in instance files)");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tdga::cli::kExitError;
  }

  config.command = app.get_subcommands().front()->get_name();
  return tdga::cli::run(config, std::cout, std::cerr);
}
