// Batch front-end: decomposition and Gram matrices, basic sets, blocks,
// LR coefficients, and the brute-force verification suites.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace wreath::cli;

int main(int argc, char** argv) {
  CLI::App app{"Restrictions of (Z_p x| Z_{p-1}) wr S_w characters to Z_{p-1} wr S_w"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "odd prime")->required();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "write to PATH instead of stdout");
    sub->add_flag("--quiet", cfg.quiet, "suppress the summary on stderr");
  };

  auto* kmat = app.add_subcommand("kmatrix", "multiplicities k_{alpha,gamma} of Ind xi^alpha");
  add_common(kmat);
  kmat->add_option("--w", cfg.w, "weight")->required();
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of restricted characters");
  add_common(gram_cmd);
  gram_cmd->add_option("--w", cfg.w, "weight")->required();
  auto* basic = app.add_subcommand("basicset", "partitions of n in the basic set");
  add_common(basic);
  basic->add_option("--n", cfg.n, "size")->required();
  auto* blocks = app.add_subcommand("blocks", "p-blocks of S_n with basic-set membership");
  add_common(blocks);
  blocks->add_option("--n", cfg.n, "size")->required();
  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^outer_{inner,content}");
  lr_cmd->add_option("--outer", cfg.outer)->required();
  lr_cmd->add_option("--inner", cfg.inner)->required();
  lr_cmd->add_option("--content", cfg.content)->required();
  lr_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  lr_cmd->add_option("--out", cfg.out);
  lr_cmd->add_flag("--quiet", cfg.quiet);
  auto* ver = app.add_subcommand("verify", "run the brute-force verification suites");
  add_common(ver);
  ver->add_option("--w", cfg.w, "weight")->required();

  CLI11_PARSE(app, argc, argv);

  std::string output;
  int status = 0;
  try {
    if (kmat->parsed()) {
      check_config(cfg, true, false);
      output = kmatrix(cfg);
    } else if (gram_cmd->parsed()) {
      check_config(cfg, true, false);
      output = gram(cfg);
    } else if (basic->parsed()) {
      check_config(cfg, false, true);
      output = partitions_report(cfg, false);
    } else if (blocks->parsed()) {
      check_config(cfg, false, true);
      output = partitions_report(cfg, true);
    } else if (lr_cmd->parsed()) {
      output = lr(cfg);
    } else if (ver->parsed()) {
      check_config(cfg, true, false);
      bool ok = false;
      output = verify(cfg, ok);
      status = ok ? 0 : 1;
      if (!cfg.quiet) std::cerr << (ok ? "all claims pass" : "some claims FAILED") << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (cfg.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.out << '\n';
      return 2;
    }
    file << output;
  }
  return status;
}
