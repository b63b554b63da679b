#pragma once

#include <string>
#include <vector>

#include "dpp/counting.hpp"
#include "dpp/fredholm.hpp"

namespace dpp {

inline constexpr const char* kVersion = "0.1.0";

// Everything one computation run emits. Values are rounded to their output
// precision (probabilities 6 significant digits, sums and traces 12) before
// serialization, so CSV and JSON carry identical numbers and identical
// configurations produce bit-identical files.
struct RunRecord {
  std::string command;
  std::string kernel;  // kernel or ensemble identifier
  Interval region;
  double s = 0.0;  // the sweep/ensemble parameter as given by the caller
  int order = 0;
  std::vector<double> lambdas;
  double mu = 0.0;
  double sigma2 = 0.0;
  std::vector<double> E;
  double lclt_sup = 0.0;
  double clt_sup = 0.0;
  bool log_concave = true;
  double truncation = 12.0;
  int clamped = 0;
};

// Round v to the given number of significant digits (printf %.*g round trip).
double round_sig(double v, int digits);

// One schema object:
// { command, kernel, region:{a,b}, order, lambdas, mu, sigma2, E,
//   lclt_sup, clt_sup, log_concave, metadata:{truncation, clamped, version} }
std::string to_json(const RunRecord& r);
std::string to_json(const std::vector<RunRecord>& rows);  // sweeps: one per s

// '#' key=value lines for the scalars, then a header row and one record per k.
std::string count_csv(const RunRecord& r);
// per-eigenvalue rows: l, lambda, mu_l = lambda/(1-lambda), zero = -1/mu_l.
std::string eigs_csv(const RunRecord& r);
// sweep rows: s, mu, sigma2, lclt_sup, clt_sup, log_concave.
std::string lclt_csv(const std::vector<RunRecord>& rows);

}  // namespace dpp
