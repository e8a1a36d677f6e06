#pragma once

#include <ostream>
#include <string>

namespace symlap {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

struct ForwardOptions {
  std::string signal;
  double frequency = 1.0;
  double x1 = 1.0;
  double x2 = 1.0;
  double y_min = 0.0;
  double y_max = 0.0;
  int steps = 100;
  double tol = 1e-8;
};

/// CSV `y,re,im,err` with steps + 1 rows over [y_min, y_max].
void cmd_forward(const ForwardOptions& opt, std::ostream& out);

struct InvertOptions {
  std::string expr;
  double t_min = 0.0;
  double t_max = 0.0;
  int steps = 100;
};

/// CSV `t,re,im` of the split (partial-fraction) inverse.
void cmd_invert(const InvertOptions& opt, std::ostream& out);

struct InvertNumericOptions {
  std::string expr;
  double x1 = 1.0;
  double x2 = 1.0;
  double t = 0.0;
  double A = 1000.0;
  double tol = 1e-8;
};

/// One line `t=<t> re=<re> im=<im> quadrature_err=<e> a_sensitivity=<d>`.
void cmd_invert_numeric(const InvertNumericOptions& opt, std::ostream& out);

/// Runs the acceptance suite and writes its JSON report. Returns true iff
/// every criterion passed.
bool cmd_verify(std::ostream& out);

}  // namespace symlap
