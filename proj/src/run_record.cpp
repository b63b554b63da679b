#include "dpp/run_record.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace dpp {

namespace {

std::string fmt(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

constexpr int kProbDigits = 6;
constexpr int kTraceDigits = 12;

}  // namespace

double round_sig(double v, int digits) {
  if (!std::isfinite(v)) return v;
  return std::strtod(fmt(v, digits).c_str(), nullptr);
}

static nlohmann::json record_json(const RunRecord& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["kernel"] = r.kernel;
  j["region"] = {{"a", round_sig(r.region.a, kTraceDigits)},
                 {"b", round_sig(r.region.b, kTraceDigits)}};
  j["order"] = r.order;
  nlohmann::json lam = nlohmann::json::array();
  for (double l : r.lambdas) lam.push_back(round_sig(l, kTraceDigits));
  j["lambdas"] = std::move(lam);
  j["mu"] = round_sig(r.mu, kTraceDigits);
  j["sigma2"] = round_sig(r.sigma2, kTraceDigits);
  nlohmann::json e = nlohmann::json::array();
  for (double v : r.E) e.push_back(round_sig(v, kProbDigits));
  j["E"] = std::move(e);
  j["lclt_sup"] = round_sig(r.lclt_sup, kProbDigits);
  j["clt_sup"] = round_sig(r.clt_sup, kProbDigits);
  j["log_concave"] = r.log_concave;
  j["metadata"] = {{"truncation", round_sig(r.truncation, kTraceDigits)},
                   {"clamped", r.clamped},
                   {"version", kVersion}};
  return j;
}

std::string to_json(const RunRecord& r) { return record_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<RunRecord>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(record_json(r));
  return arr.dump(2) + "\n";
}

static void scalar_comments(std::ostringstream& out, const RunRecord& r) {
  out << "# command=" << r.command << "\n";
  out << "# kernel=" << r.kernel << "\n";
  out << "# region_a=" << fmt(r.region.a, kTraceDigits) << "\n";
  out << "# region_b=" << fmt(r.region.b, kTraceDigits) << "\n";
  out << "# order=" << r.order << "\n";
  out << "# mu=" << fmt(r.mu, kTraceDigits) << "\n";
  out << "# sigma2=" << fmt(r.sigma2, kTraceDigits) << "\n";
  out << "# lclt_sup=" << fmt(r.lclt_sup, kProbDigits) << "\n";
  out << "# clt_sup=" << fmt(r.clt_sup, kProbDigits) << "\n";
  out << "# log_concave=" << (r.log_concave ? 1 : 0) << "\n";
  out << "# truncation=" << fmt(r.truncation, kTraceDigits) << "\n";
  out << "# clamped=" << r.clamped << "\n";
  out << "# version=" << kVersion << "\n";
}

std::string count_csv(const RunRecord& r) {
  std::ostringstream out;
  scalar_comments(out, r);
  out << "k,E\n";
  for (size_t k = 0; k < r.E.size(); ++k)
    out << k << "," << fmt(r.E[k], kProbDigits) << "\n";
  return out.str();
}

std::string eigs_csv(const RunRecord& r) {
  std::ostringstream out;
  scalar_comments(out, r);
  out << "l,lambda,mu_l,zero\n";
  for (size_t l = 0; l < r.lambdas.size(); ++l) {
    const double lam = r.lambdas[l];
    out << l << "," << fmt(lam, kTraceDigits) << ",";
    if (lam >= 1.0) {
      out << "inf,-0\n";  // clamped eigenvalue: the factor is identically zero
    } else {
      const double mul = lam / (1.0 - lam);
      out << fmt(mul, kTraceDigits) << ","
          << (lam > 0.0 ? fmt(-1.0 / mul, kTraceDigits) : "-inf") << "\n";
    }
  }
  return out.str();
}

std::string lclt_csv(const std::vector<RunRecord>& rows) {
  std::ostringstream out;
  if (!rows.empty()) {
    out << "# command=" << rows.front().command << "\n";
    out << "# kernel=" << rows.front().kernel << "\n";
    out << "# version=" << kVersion << "\n";
  }
  out << "s,mu,sigma2,lclt_sup,clt_sup,log_concave\n";
  for (const auto& r : rows) {
    out << fmt(r.s, kTraceDigits) << "," << fmt(r.mu, kTraceDigits) << ","
        << fmt(r.sigma2, kTraceDigits) << "," << fmt(r.lclt_sup, kProbDigits) << ","
        << fmt(r.clt_sup, kProbDigits) << "," << (r.log_concave ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace dpp
