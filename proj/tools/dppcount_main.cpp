// dppcount: command-line front end for counting statistics of determinantal
// point processes. Subcommands:
//   eigs       operator spectrum of a kernel on a region
//   count      exact counting distribution with Gaussian diagnostics
//   reproduce  built-in reference tables (table1 | table2 | softedge)
//   lclt       per-s sweep of the Gaussian sup-distances
//   spacing    spacing / extreme-value density sweeps
// Exit codes: 0 success, 1 numerical-validation failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpp/counting.hpp"
#include "dpp/ensembles.hpp"
#include "dpp/errors.hpp"
#include "dpp/fredholm.hpp"
#include "dpp/kernels.hpp"
#include "dpp/run_record.hpp"
#include "dpp/special_functions.hpp"

namespace {

using namespace dpp;

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Interval parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("interval must be given as a:b, got '" + text + "'");
  size_t pos = 0;
  Interval iv;
  try {
    iv.a = std::stod(text.substr(0, colon), &pos);
    iv.b = std::stod(text.substr(colon + 1), &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("could not parse interval '" + text + "'");
  }
  return iv;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stod(item));
  return out;
}

// Kernel identifiers: sine | sine-plus | sine-minus | airy |
// airy-conditioned:<p> | sine-conditioned:<p1>[,<p2>] | ginibre-disk.
// The value after the colon is the literal conditioning point.
Kernel make_kernel(const std::string& id) {
  if (id == "sine") return sine_kernel();
  if (id == "sine-plus") return sine_pm_kernel(+1);
  if (id == "sine-minus") return sine_pm_kernel(-1);
  if (id == "airy") return airy_kernel();
  const std::string airy_tag = "airy-conditioned:";
  const std::string sine_tag = "sine-conditioned:";
  if (id.rfind(airy_tag, 0) == 0) {
    const auto pts = parse_list(id.substr(airy_tag.size()));
    if (pts.size() != 1)
      throw std::invalid_argument("airy-conditioned takes exactly one point");
    return deflate(airy_kernel(), pts[0]);
  }
  if (id.rfind(sine_tag, 0) == 0) {
    const auto pts = parse_list(id.substr(sine_tag.size()));
    if (pts.empty() || pts.size() > 2)
      throw std::invalid_argument("sine-conditioned takes one or two points");
    Kernel k = deflate(sine_kernel(), pts[0]);
    if (pts.size() == 2) k = deflate(k, pts[1]);
    return k;
  }
  throw std::invalid_argument("unknown kernel '" + id + "'");
}

struct Sink {
  std::string path;  // empty: stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
  }
};

RunRecord record_from_ensemble(const std::string& command, const std::string& id,
                               const EnsembleResult& r, Interval region, int order,
                               double truncation) {
  RunRecord rec;
  rec.command = command;
  rec.kernel = id;
  rec.region = region;
  rec.s = r.s;
  rec.order = order;
  rec.lambdas = r.spectrum.lambdas;
  rec.mu = r.distribution.mu;
  rec.sigma2 = r.distribution.sigma2;
  rec.E = r.distribution.probabilities;
  rec.lclt_sup = r.lclt.lclt_sup;
  rec.clt_sup = r.lclt.clt_sup;
  rec.log_concave = r.lclt.log_concave;
  rec.truncation = truncation;
  rec.clamped = r.spectrum.clamp_report.clamped;
  return rec;
}

// Shared computation for count/eigs/lclt: one ensemble or kernel run.
RunRecord compute_record(const std::string& command, const std::string& ensemble,
                         const std::string& kernel_id,
                         const std::optional<Interval>& interval,
                         std::optional<double> s, std::optional<double> radius,
                         int order, double truncation) {
  if (!ensemble.empty()) {
    if (ensemble == "ginibre-disk") {
      const double R = radius ? *radius : (s ? *s : 0.0);
      if (!(R > 0.0)) throw std::invalid_argument("ginibre-disk requires --radius");
      EnsembleResult r = ginibre_disk(R);
      return record_from_ensemble(command, ensemble, r, {0.0, R}, 0, truncation);
    }
    if (!s) throw std::invalid_argument("ensemble '" + ensemble + "' requires --s");
    if (ensemble == "gue-bulk") {
      EnsembleResult r = bulk_gue(*s, order);
      return record_from_ensemble(command, ensemble, r, {0.0, *s},
                                  order ? order : default_order(*s), truncation);
    }
    if (ensemble == "gue-soft") {
      EnsembleResult r = soft_edge(*s, order, truncation);
      return record_from_ensemble(command, ensemble, r, {-*s, truncation},
                                  order ? order : default_order(*s + truncation),
                                  truncation);
    }
    if (ensemble == "gse-bulk" || ensemble == "goe-bulk") {
      const bool gse = ensemble == "gse-bulk";
      CountDistribution d = gse ? gse_counts(*s, order) : goe_counts(*s, order);
      RunRecord rec;
      rec.command = command;
      rec.kernel = ensemble;
      rec.region = {0.0, gse ? *s : 2.0 * *s};
      rec.s = *s;
      rec.order = order ? order : default_order(*s);
      rec.mu = d.mu;
      rec.sigma2 = d.sigma2;
      rec.E = d.probabilities;
      const LcltReport rep = make_lclt_report(d);
      rec.lclt_sup = rep.lclt_sup;
      rec.clt_sup = rep.clt_sup;
      rec.log_concave = rep.log_concave;
      rec.truncation = truncation;
      return rec;
    }
    throw std::invalid_argument("unknown ensemble '" + ensemble + "'");
  }

  if (kernel_id.empty())
    throw std::invalid_argument("specify --kernel or --ensemble");
  if (kernel_id == "ginibre-disk") {
    const double R = radius ? *radius : 0.0;
    if (!(R > 0.0)) throw std::invalid_argument("ginibre-disk requires --radius");
    EnsembleResult r = ginibre_disk(R);
    return record_from_ensemble(command, kernel_id, r, {0.0, R}, 0, truncation);
  }
  if (!interval)
    throw std::invalid_argument("kernel '" + kernel_id + "' requires --interval");
  const Kernel k = make_kernel(kernel_id);
  const int n = order ? order : default_order(interval->b - interval->a);
  const Spectrum spec = nystrom_spectrum(k, *interval, n);
  const CountDistribution d = poisson_binomial(spec.retained());
  RunRecord rec;
  rec.command = command;
  rec.kernel = kernel_id;
  rec.region = *interval;
  rec.s = interval->b - interval->a;
  rec.order = n;
  rec.lambdas = spec.lambdas;
  rec.mu = d.mu;
  rec.sigma2 = d.sigma2;
  rec.E = d.probabilities;
  if (d.sigma2 > 0.0) {
    const LcltReport rep = make_lclt_report(d);
    rec.lclt_sup = rep.lclt_sup;
    rec.clt_sup = rep.clt_sup;
    rec.log_concave = rep.log_concave;
  }
  rec.truncation = truncation;
  rec.clamped = spec.clamp_report.clamped;
  return rec;
}

struct ReproRow {
  int k;
  double exact, gaussian;
};

std::vector<ReproRow> density_rows(const CountDistribution& d, int k_lo, int k_hi) {
  std::vector<ReproRow> rows;
  const double sd = std::sqrt(d.sigma2);
  for (int k = k_lo; k <= k_hi; ++k) {
    const double e = static_cast<size_t>(k) < d.probabilities.size()
                         ? d.probabilities[k]
                         : 0.0;
    rows.push_back({k, e, gaussian_pdf((k - d.mu) / sd) / sd});
  }
  return rows;
}

int run_reproduce(const std::string& table, const std::string& format,
                  const Sink& sink) {
  std::ostringstream csv;
  nlohmann::json j;
  j["command"] = "reproduce";
  j["table"] = table;

  if (table == "table1") {
    const EnsembleResult r = bulk_gue(10.0);
    const auto rows = density_rows(r.distribution, 7, 13);
    csv << "# table=table1 (bulk counting, interval length 10)\n";
    csv << "# mu=" << fmt6(r.distribution.mu) << " sigma2=" << fmt6(r.distribution.sigma2)
        << "\n";
    csv << "k,exact,gaussian\n";
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& row : rows) {
      csv << row.k << "," << fmt6(row.exact) << "," << fmt6(row.gaussian) << "\n";
      jr.push_back({{"k", row.k},
                    {"exact", round_sig(row.exact, 6)},
                    {"gaussian", round_sig(row.gaussian, 6)}});
    }
    j["mu"] = round_sig(r.distribution.mu, 12);
    j["sigma2"] = round_sig(r.distribution.sigma2, 12);
    j["rows"] = std::move(jr);
  } else if (table == "table2") {
    const CountDistribution e1 = goe_counts(5.0);
    const CountDistribution e4 = gse_counts(10.0);
    const auto r1 = density_rows(e1, 7, 13);
    const auto r4 = density_rows(e4, 7, 13);
    csv << "# table=table2 (orthogonal and symplectic counting, interval length 10)\n";
    csv << "# sigma2_beta1=" << fmt6(e1.sigma2) << " sigma2_beta4=" << fmt6(e4.sigma2)
        << "\n";
    csv << "k,exact_beta1,gaussian_beta1,exact_beta4,gaussian_beta4\n";
    nlohmann::json jr = nlohmann::json::array();
    for (size_t i = 0; i < r1.size(); ++i) {
      csv << r1[i].k << "," << fmt6(r1[i].exact) << "," << fmt6(r1[i].gaussian) << ","
          << fmt6(r4[i].exact) << "," << fmt6(r4[i].gaussian) << "\n";
      jr.push_back({{"k", r1[i].k},
                    {"exact_beta1", round_sig(r1[i].exact, 6)},
                    {"gaussian_beta1", round_sig(r1[i].gaussian, 6)},
                    {"exact_beta4", round_sig(r4[i].exact, 6)},
                    {"gaussian_beta4", round_sig(r4[i].gaussian, 6)}});
    }
    j["sigma2_beta1"] = round_sig(e1.sigma2, 12);
    j["sigma2_beta4"] = round_sig(e4.sigma2, 12);
    j["rows"] = std::move(jr);
  } else if (table == "softedge") {
    const double s = std::pow(15.0 * M_PI, 2.0 / 3.0);
    const EnsembleResult r = soft_edge(s);
    const auto rows = density_rows(r.distribution, 10, 10);
    csv << "# table=softedge (soft-edge counting, s=" << fmt6(s) << ")\n";
    csv << "# mu=" << fmt6(r.distribution.mu) << " sigma2=" << fmt6(r.distribution.sigma2)
        << "\n";
    csv << "k,exact,gaussian\n";
    csv << rows[0].k << "," << fmt6(rows[0].exact) << "," << fmt6(rows[0].gaussian)
        << "\n";
    j["mu"] = round_sig(r.distribution.mu, 12);
    j["sigma2"] = round_sig(r.distribution.sigma2, 12);
    j["rows"] = {{{"k", 10},
                  {"exact", round_sig(rows[0].exact, 6)},
                  {"gaussian", round_sig(rows[0].gaussian, 6)}}};
  } else {
    throw std::invalid_argument("reproduce: table must be table1, table2 or softedge");
  }

  sink.write(format == "json" ? j.dump(2) + "\n" : csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counting statistics of determinantal point processes"};
  app.require_subcommand(1);

  std::string kernel_id, ensemble_id, interval_text, s_list_text, srange_text;
  std::string format = "csv", out_path, repro_table;
  int order = 0, k_cells = 0;
  double s_value = 0.0, radius = 0.0, truncation = 12.0, smax = 6.0, step = 0.02;
  bool s_given = false, radius_given = false, interval_given = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    cmd->add_option("--order", order, "quadrature order (0: policy default)");
    cmd->add_option("--truncation", truncation, "upper truncation of soft-edge regions");
  };

  CLI::App* eigs = app.add_subcommand("eigs", "operator spectrum of a kernel");
  eigs->add_option("--kernel", kernel_id, "kernel identifier")->required();
  eigs->add_option("--interval", interval_text)->each([&](const std::string&) {
    interval_given = true;
  });
  eigs->add_option("--radius", radius)->each([&](const std::string&) {
    radius_given = true;
  });
  add_common(eigs);

  CLI::App* count = app.add_subcommand("count", "exact counting distribution");
  count->add_option("--kernel", kernel_id);
  count->add_option("--ensemble", ensemble_id);
  count->add_option("--interval", interval_text)->each([&](const std::string&) {
    interval_given = true;
  });
  count->add_option("--s", s_value)->each([&](const std::string&) { s_given = true; });
  count->add_option("--radius", radius)->each([&](const std::string&) {
    radius_given = true;
  });
  add_common(count);

  CLI::App* repro = app.add_subcommand("reproduce", "built-in reference tables");
  repro->add_option("table", repro_table, "table1 | table2 | softedge")->required();
  add_common(repro);

  CLI::App* lclt = app.add_subcommand("lclt", "Gaussian-distance sweep over s");
  lclt->add_option("--ensemble", ensemble_id)->required();
  lclt->add_option("--s", s_list_text, "comma-separated s values")->required();
  lclt->add_option("--radius", radius)->each([&](const std::string&) {
    radius_given = true;
  });
  add_common(lclt);

  CLI::App* spacing = app.add_subcommand("spacing", "spacing-density sweep");
  spacing->add_option("--ensemble", ensemble_id,
                      "spacing-bulk | kth-largest-soft")->required();
  spacing->add_option("--k", k_cells, "cell count of the density");
  spacing->add_option("--smax", smax);
  spacing->add_option("--step", step);
  spacing->add_option("--srange", srange_text, "a:b sweep range");
  add_common(spacing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Sink sink{out_path};
  try {
    std::optional<Interval> interval;
    if (interval_given) interval = parse_interval(interval_text);
    std::optional<double> s_opt, radius_opt;
    if (s_given) s_opt = s_value;
    if (radius_given) radius_opt = radius;

    if (eigs->parsed() || count->parsed()) {
      const std::string command = eigs->parsed() ? "eigs" : "count";
      if (eigs->parsed()) ensemble_id.clear();
      RunRecord rec = compute_record(command, ensemble_id, kernel_id, interval, s_opt,
                                     radius_opt, order, truncation);
      if (format == "json")
        sink.write(to_json(rec));
      else
        sink.write(command == "eigs" ? eigs_csv(rec) : count_csv(rec));
      return 0;
    }

    if (repro->parsed()) return run_reproduce(repro_table, format, sink);

    if (lclt->parsed()) {
      const std::vector<double> ss = parse_list(s_list_text);
      if (ss.empty()) throw std::invalid_argument("lclt: empty s list");
      std::vector<RunRecord> rows;
      for (double s : ss)
        rows.push_back(compute_record("lclt", ensemble_id, "", std::nullopt, s,
                                      radius_opt, order, truncation));
      sink.write(format == "json" ? to_json(rows) : lclt_csv(rows));
      return 0;
    }

    if (spacing->parsed()) {
      if (k_cells < 0) throw std::invalid_argument("spacing: --k must be >= 0");
      std::vector<std::pair<double, double>> rows;
      if (ensemble_id == "spacing-bulk") {
        rows = bulk_spacing_sweep(k_cells, smax, step, order);
      } else if (ensemble_id == "kth-largest-soft") {
        Interval range{-6.0, 6.0};
        if (!srange_text.empty()) range = parse_interval(srange_text);
        rows = soft_spacing_sweep(k_cells, range.a, range.b, step, order, truncation);
      } else {
        throw std::invalid_argument("spacing: ensemble must be spacing-bulk or "
                                    "kth-largest-soft");
      }
      if (format == "json") {
        nlohmann::json j;
        j["command"] = "spacing";
        j["ensemble"] = ensemble_id;
        j["k"] = k_cells;
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& [sv, pv] : rows)
          jr.push_back({{"s", round_sig(sv, 12)}, {"p", round_sig(pv, 6)}});
        j["rows"] = std::move(jr);
        sink.write(j.dump(2) + "\n");
      } else {
        std::ostringstream csv;
        csv << "# command=spacing\n# ensemble=" << ensemble_id << "\n# k=" << k_cells
            << "\n";
        csv << "s,p\n";
        for (const auto& [sv, pv] : rows) {
          char line[64];
          std::snprintf(line, sizeof line, "%.12g,%.6g\n", sv, pv);
          csv << line;
        }
        sink.write(csv.str());
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const dpp::numeric_error& e) {
    std::cerr << "numerical validation failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
