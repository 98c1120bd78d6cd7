#include <CLI11.hpp>

#include "jacring/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic engine for bigraded quotient rings of cyclic covers "
               "branched along hyperplane arrangements"};
  app.require_subcommand(1);

  jacring::RunConfig cfg;

  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "ambient projective dimension");
    sub->add_option("--k", cfg.k, "number of cover parameters (derived from n, r when omitted)");
    sub->add_option("--r", cfg.r, "cover degree")->capture_default_str();
    sub->add_option("--field", cfg.field, "scalar field: Q or Fp")->capture_default_str();
    sub->add_option("--prime", cfg.prime, "modulus for Fp")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "parameter sampling seed")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "number of sampled parameter blocks")->capture_default_str();
    sub->add_option("--params-file", cfg.params_file,
                    "JSON parameter block; overrides shape, field, and sampling");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "write the JSON report here (default stdout)");
  };

  CLI::App* hodge = app.add_subcommand(
      "hodge-numbers", "graded dimensions of the invariant eigenclass vs the closed form");
  add_shape(hodge);
  add_out(hodge);
  hodge->add_option("--q-max", cfg.q_max, "largest q to compute (default n)");

  CLI::App* relations = app.add_subcommand(
      "verify-relations", "basic and derived relation families reduce to zero");
  add_shape(relations);
  add_out(relations);

  CLI::App* coeffs = app.add_subcommand(
      "verify-coefficients", "computed quadric coefficients vs the displayed closed forms");
  add_shape(coeffs);
  add_out(coeffs);

  CLI::App* resultants = app.add_subcommand(
      "resultants", "closed-form resultant families evaluated at random parameters");
  add_shape(resultants);
  add_out(resultants);

  CLI::App* charvar = app.add_subcommand(
      "charvar-dim", "dimension analysis of the first characteristic subvariety");
  add_shape(charvar);
  add_out(charvar);
  charvar->add_option("--backend", cfg.backend, "groebner, certificate, or both")->capture_default_str();

  CLI::App* certify = app.add_subcommand(
      "certify-generic", "filtration certificate over repeatedly sampled parameters");
  add_shape(certify);
  add_out(certify);

  CLI::App* euler = app.add_subcommand(
      "euler-identity", "staged binomial identity for the twisted Euler characteristic");
  euler->add_option("--n", cfg.n, "single size to check");
  euler->add_option("--n-max", cfg.n_max, "check all sizes 1..n-max");
  add_out(euler);

  CLI::App* rep = app.add_subcommand(
      "rep-check", "wedge weight multiset symmetry and dimension obstructions");
  rep->add_option("--n", cfg.n, "weight multiset size to check");
  rep->add_option("--n-max", cfg.n_max, "obstruction scan upper bound");
  add_out(rep);

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  return jacring::run(cfg);
}
