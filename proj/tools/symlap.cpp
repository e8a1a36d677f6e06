// Command-line front end: forward grids, split and numeric inversion, and the
// verification report.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "symlap/commands.hpp"
#include "symlap/error.hpp"

namespace {

enum Exit : int { kOk = 0, kUsage = 2, kParse = 3, kDivergence = 4, kNumeric = 5 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric Laplace transform toolkit"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  symlap::ForwardOptions fwd;
  double fwd_y = 0.0;
  auto* forward = app.add_subcommand("forward", "Evaluate SL(f)(x1, x2, y) on a y-grid (CSV)");
  forward->add_option("--signal", fwd.signal, "Catalog signal name")->required();
  forward->add_option("--freq", fwd.frequency, "Frequency for sincos/cossin")->capture_default_str();
  forward->add_option("--x1", fwd.x1, "Damping on t >= 0")->capture_default_str();
  forward->add_option("--x2", fwd.x2, "Damping on t < 0")->capture_default_str();
  auto* y_opt = forward->add_option("--y", fwd_y, "Single y value (one row)");
  auto* ymin = forward->add_option("--ymin", fwd.y_min, "Grid start")->excludes(y_opt);
  auto* ymax = forward->add_option("--ymax", fwd.y_max, "Grid end")->excludes(y_opt);
  forward->add_option("--steps", fwd.steps, "Grid intervals (rows = steps + 1)")->capture_default_str()->check(CLI::NonNegativeNumber);
  forward->add_option("--tol", fwd.tol, "Absolute tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  (void)ymin;
  (void)ymax;

  symlap::InvertOptions inv;
  double inv_t = 0.0;
  auto* invert = app.add_subcommand("invert", "Split inversion of a rational expression (CSV)");
  invert->add_option("--expr", inv.expr, "Expression in s and cs")->required();
  auto* t_opt = invert->add_option("--t", inv_t, "Single t value (one row)");
  invert->add_option("--tmin", inv.t_min, "Grid start")->excludes(t_opt);
  invert->add_option("--tmax", inv.t_max, "Grid end")->excludes(t_opt);
  invert->add_option("--steps", inv.steps, "Grid intervals (rows = steps + 1)")->capture_default_str()->check(CLI::NonNegativeNumber);

  symlap::InvertNumericOptions num;
  auto* numeric = app.add_subcommand("invert-numeric", "Fourier-integral inversion at one t");
  numeric->add_option("--expr", num.expr, "Expression in s and cs")->required();
  numeric->add_option("--x1", num.x1, "Damping on t >= 0")->capture_default_str();
  numeric->add_option("--x2", num.x2, "Damping on t < 0")->capture_default_str();
  numeric->add_option("--t", num.t, "Time point")->required();
  numeric->add_option("--A", num.A, "Truncation of the y-integral")->capture_default_str()->check(CLI::PositiveNumber);
  numeric->add_option("--tol", num.tol, "Quadrature tolerance")->capture_default_str()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite and print a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::unique_ptr<std::ofstream> file;
  if (!out_path.empty()) {
    file = std::make_unique<std::ofstream>(out_path);
    if (!*file) {
      std::cerr << "error: cannot open " << out_path << '\n';
      return kUsage;
    }
  }
  std::ostream& out = file ? *file : std::cout;

  try {
    if (*forward) {
      if (*y_opt) {
        fwd.y_min = fwd.y_max = fwd_y;
        fwd.steps = 0;
      }
      symlap::cmd_forward(fwd, out);
    } else if (*invert) {
      if (*t_opt) {
        inv.t_min = inv.t_max = inv_t;
        inv.steps = 0;
      }
      symlap::cmd_invert(inv, out);
    } else if (*numeric) {
      symlap::cmd_invert_numeric(num, out);
    } else if (*verify) {
      return symlap::cmd_verify(out) ? kOk : 1;
    }
  } catch (const symlap::CatalogError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const symlap::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const symlap::PropernessError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const symlap::DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << '\n';
    return kDivergence;
  } catch (const symlap::Error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  }
  return kOk;
}
