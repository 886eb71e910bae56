#include <optional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using harmonic::cli::RunConfig;
  RunConfig cfg;
  std::optional<double> half_width;

  CLI::App app{"Numerical harmonic analysis: circle, line, finite groups, almost periodic"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.output, "Write CSV here instead of stdout");
    sub->add_option("--tol-exact", cfg.tol.exact_eps, "Tolerance for exact identities")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--tol-quad", cfg.tol.quad_eps, "Tolerance for quadrature identities")
        ->check(CLI::Range(0.0, 1.0));
  };

  auto* coeffs = app.add_subcommand("circle-coeffs", "Fourier coefficients f̂(j), |j| ≤ J");
  coeffs->add_option("spec", cfg.spec, "cos | sin | expcos | const:c | exp:j | file:path")->required();
  coeffs->add_option("--J", cfg.J, "Window half-width")->capture_default_str();
  coeffs->add_option("--n", cfg.n, "Circle grid size")->capture_default_str();

  auto* abel = app.add_subcommand("abel-mean", "Abel mean A_r f by series and by Poisson integral");
  abel->add_option("spec", cfg.spec, "Circle function")->required();
  abel->add_option("--r", cfg.r, "Radius in [0, 1)")->expected(1);
  abel->add_option("--n", cfg.n, "Circle grid size")->capture_default_str();
  abel->add_option("--points", cfg.points, "Evaluation points on the circle")->capture_default_str();

  auto* kernel = app.add_subcommand("poisson-kernel", "Poisson kernel p_r(1, e^{iθ}) on a grid");
  kernel->add_option("--r", cfg.r, "Radius in [0, 1)")->expected(1);
  kernel->add_option("--n", cfg.n, "Circle grid size")->capture_default_str();

  auto* transform = app.add_subcommand("line-transform", "Closed-form vs quadrature transforms on ℝ");
  transform->add_option("--kind", cfg.kind, "a | b | c")->required();
  transform->add_option("--rate", cfg.rate, "Decay rate r > 0")->capture_default_str();
  transform->add_option("--xi", cfg.xi, "Frequencies")->delimiter(',');
  transform->add_option("--T", half_width, "Truncation half-width");
  transform->add_option("--step", cfg.step, "Panel width")->capture_default_str();

  auto* dft = app.add_subcommand("group-dft", "Fourier transform on a finite abelian group");
  dft->add_option("--group", cfg.group, "Cyclic orders, e.g. 4,3,2")->required();
  dft->add_option("input", cfg.input, "Function CSV, one 're[,im]' row per element")->required();

  auto* ap_mean = app.add_subcommand("ap-mean", "Interval means of a trigonometric polynomial");
  ap_mean->add_option("spec", cfg.spec, "exp:t | const:c | file:path")->required();
  ap_mean->add_option("--T", cfg.T, "Half-widths of [-T, T]")->delimiter(',');

  auto* conv = app.add_subcommand("convergence", "Convergence tables");
  conv->add_option("--kind", cfg.kind, "abel_circle | poisson_line | ap_mean")->required();
  conv->add_option("spec", cfg.spec, "Function (circle spec, catalog name, or AP spec)")->required();
  conv->add_option("--r", cfg.r, "Radii")->delimiter(',');
  conv->add_option("--y", cfg.y, "Heights")->delimiter(',');
  conv->add_option("--T", cfg.T, "Half-widths")->delimiter(',');
  conv->add_option("--x", cfg.x, "Boundary point")->capture_default_str();
  conv->add_option("--n", cfg.n, "Circle grid size")->capture_default_str();

  for (auto* sub : {coeffs, abel, kernel, transform, dft, ap_mean, conv}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.half_width = half_width;
  return harmonic::cli::run(cfg, std::cout, std::cerr);
}
