#include "symlap/commands.hpp"

#include <charconv>
#include <exception>
#include <vector>

#include "symlap/acceptance.hpp"
#include "symlap/core.hpp"
#include "symlap/error.hpp"
#include "symlap/expr.hpp"
#include "symlap/forward.hpp"
#include "symlap/inversion.hpp"

namespace symlap {

namespace {

std::vector<double> grid(double lo, double hi, int steps) {
  if (steps < 0) throw CatalogError("steps must be >= 0");
  std::vector<double> g(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    g[static_cast<std::size_t>(i)] = steps == 0 ? lo : (i == steps ? hi : lo + (hi - lo) * i / steps);
  }
  return g;
}

// Evaluates row(i) for every grid index in parallel and rethrows the first
// failure in index order.
template <typename Row, typename Fn>
std::vector<Row> evaluate_rows(std::size_t n, Fn&& fn) {
  std::vector<Row> rows(n);
  std::vector<std::exception_ptr> failures(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void cmd_forward(const ForwardOptions& opt, std::ostream& out) {
  const auto f = catalog_signal(opt.signal, opt.frequency);
  if (!(opt.tol > 0.0)) throw CatalogError("tol must be positive");
  const auto ys = grid(opt.y_min, opt.y_max, opt.steps);
  const auto rows = evaluate_rows<TransformSample>(
      ys.size(), [&](std::size_t i) { return sl_forward(f, {opt.x1, opt.x2, ys[i]}, opt.tol); });
  out << "y,re,im,err\n";
  for (const auto& r : rows) {
    out << format_double(r.point.y) << ',' << format_double(r.value.real()) << ','
        << format_double(r.value.imag()) << ',' << format_double(r.abs_error_estimate) << '\n';
  }
}

void cmd_invert(const InvertOptions& opt, std::ostream& out) {
  const auto st = parse_transform(opt.expr);
  const auto ts = grid(opt.t_min, opt.t_max, opt.steps);
  const auto values = evaluate_rows<Complex>(ts.size(), [&](std::size_t i) { return sl_inverse_split(st, ts[i]); });
  out << "t,re,im\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out << format_double(ts[i]) << ',' << format_double(values[i].real()) << ','
        << format_double(values[i].imag()) << '\n';
  }
}

void cmd_invert_numeric(const InvertNumericOptions& opt, std::ostream& out) {
  const auto st = parse_transform(opt.expr);
  const TransformFunction F = [&st](const SLPoint& p) {
    return st(Complex{p.x1, p.y}, Complex{p.x2, -p.y});
  };
  const auto r = sl_inverse_numeric_report(F, opt.x1, opt.x2, opt.t, opt.A, opt.tol);
  out << "t=" << format_double(opt.t) << " re=" << format_double(r.value.real())
      << " im=" << format_double(r.value.imag()) << " quadrature_err=" << format_double(r.quadrature_error)
      << " a_sensitivity=" << format_double(r.truncation_sensitivity) << '\n';
}

bool cmd_verify(std::ostream& out) {
  const auto results = run_acceptance(AcceptanceOptions{});
  out << acceptance_report_json(results) << '\n';
  return all_passed(results);
}

}  // namespace symlap
