#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "starclt/ccr_gue.hpp"
#include "starclt/errors.hpp"
#include "starclt/finite_scale.hpp"
#include "starclt/limit_moments.hpp"
#include "starclt/verification.hpp"

namespace starclt::cli {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& text) {
  if (text == "text") return Format::kText;
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw InputError("unknown format '" + text + "' (text, json, csv)");
}

bool MomentReport::all_agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const MomentRow& r) { return r.agree; });
}

namespace {

std::vector<char> parse_routes(const std::string& text) {
  std::vector<char> routes;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    const char r = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (r < 'A' || r > 'D') throw InputError(std::string("unknown route '") + c + "'");
    if (std::find(routes.begin(), routes.end(), r) == routes.end()) routes.push_back(r);
  }
  if (routes.empty()) throw InputError("no routes selected");
  std::sort(routes.begin(), routes.end());
  return routes;
}

ExactScalar run_route(char route, const WeightVector& w, int k) {
  switch (route) {
    case 'A': return moment_routeA(w, k);
    case 'B': return moment_routeB(w, k);
    case 'C': return moment_routeC(w, k);
    default: return matrix_moment(w, k);
  }
}

std::string approx_text(const ExactScalar& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", approx(x));
  return buf;
}

ordered_json exact_json(const ExactScalar& x) {
  const auto j = to_json(x);
  ordered_json out;
  out["num"] = j.at("num").get<std::string>();
  out["den"] = j.at("den").get<std::string>();
  out["approx"] = approx(x);
  return out;
}

ordered_json weights_json(const WeightVector& w) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : w.weights()) {
    const auto j = to_json(x);
    arr.push_back({{"num", j.at("num").get<std::string>()},
                   {"den", j.at("den").get<std::string>()}});
  }
  return arr;
}

void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out << line << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
}

std::string ms_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

MomentReport compute_moments(const MomentsOptions& options) {
  if (options.order_cap < 0 || options.order_cap > kMaxMomentOrder) {
    throw InputError("--order-cap must lie in 0.." + std::to_string(kMaxMomentOrder));
  }
  if (options.max_order < 0) throw InputError("--max-order must be >= 0");
  if (options.max_order > options.order_cap) {
    throw InfeasibleError("--max-order " + std::to_string(options.max_order) +
                          " exceeds the order cap " + std::to_string(options.order_cap));
  }
  if (options.threads < 1) throw InputError("--threads must be >= 1");

  MomentReport report{WeightVector::parse(options.weights), parse_routes(options.routes), {}};
  const int orders = options.max_order + 1;
  const int nroutes = static_cast<int>(report.routes.size());
  const int jobs = orders * nroutes;

  std::vector<ExactScalar> values(jobs);
  std::vector<double> elapsed(jobs, 0.0);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int job = next++; job < jobs; job = next++) {
      const int k = job / nroutes;
      const char route = report.routes[job % nroutes];
      const auto start = std::chrono::steady_clock::now();
      try {
        values[job] = run_route(route, report.weights, k);
      } catch (...) {
        errors[job] = std::current_exception();
      }
      elapsed[job] = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    }
  };
  const int workers = std::min(options.threads, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (int k = 0; k < orders; ++k) {
    MomentRow row;
    row.k = k;
    for (int r = 0; r < nroutes; ++r) {
      const int job = k * nroutes + r;
      row.values.emplace(report.routes[r], values[job]);
      row.elapsed_ms.emplace(report.routes[r], elapsed[job]);
    }
    const auto& first = row.values.begin()->second;
    row.agree = std::all_of(row.values.begin(), row.values.end(),
                            [&](const auto& kv) { return kv.second == first; });
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_report(std::ostream& out, const MomentReport& report, Format format,
                  bool timings) {
  if (format == Format::kJson) {
    ordered_json doc;
    doc["weights"] = weights_json(report.weights);
    ordered_json moments = ordered_json::array();
    for (const auto& row : report.rows) {
      ordered_json entry;
      entry["k"] = row.k;
      ordered_json routes;
      for (const auto& [r, v] : row.values) routes[std::string(1, r)] = exact_json(v);
      entry["routes"] = routes;
      entry["agree"] = row.agree;
      if (timings) {
        ordered_json ms;
        for (const auto& [r, t] : row.elapsed_ms) ms[std::string(1, r)] = t;
        entry["elapsed_ms"] = ms;
      }
      moments.push_back(entry);
    }
    doc["moments"] = moments;
    out << doc.dump(2) << '\n';
    return;
  }

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"k"};
  for (char r : report.routes) header.emplace_back(1, r);
  header.emplace_back("agree");
  if (timings) {
    for (char r : report.routes) header.push_back(std::string(1, r) + "_ms");
  }
  cells.push_back(header);
  for (const auto& row : report.rows) {
    std::vector<std::string> line{std::to_string(row.k)};
    for (const auto& [r, v] : row.values) line.push_back(to_string(v));
    line.emplace_back(row.agree ? "yes" : "NO");
    if (timings) {
      for (const auto& [r, t] : row.elapsed_ms) line.push_back(ms_text(t));
    }
    cells.push_back(std::move(line));
  }

  if (format == Format::kCsv) {
    write_csv(out, cells);
    return;
  }
  out << "weights " << report.weights.to_string() << '\n';
  write_table(out, cells);
  out << (report.all_agree() ? "all routes agree" : "ROUTES DISAGREE") << '\n';
}

std::vector<ConvergeRow> compute_convergence(const WeightVector& w, int k,
                                             const std::vector<long long>& ns) {
  if (k < 0 || k % 2) throw InputError("--k must be a non-negative even number");
  if (k > 8) throw InfeasibleError("convergence tables are computed for k <= 8");
  if (ns.empty()) throw InputError("--n needs at least one value");
  const ExactScalar limit = moment_routeA(w, k);
  std::vector<ConvergeRow> rows;
  for (long long n : ns) {
    if (n < 1) throw InputError("--n values must be >= 1");
    if (n > 1'000'000) throw InfeasibleError("--n values are capped at 10^6");
    const ExactScalar m = s_n_moment(w, n, k).value();
    rows.push_back({n, m, limit, abs(m - limit)});
  }
  return rows;
}

void write_convergence(std::ostream& out, const WeightVector& w, int k,
                       const std::vector<ConvergeRow>& rows, Format format) {
  if (format == Format::kJson) {
    ordered_json doc;
    doc["weights"] = weights_json(w);
    doc["k"] = k;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"moment", exact_json(r.moment)},
                     {"limit", exact_json(r.limit)},
                     {"gap", exact_json(r.gap)}});
    }
    doc["rows"] = arr;
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> cells{
      {"n", "moment", "limit", "gap", "moment_approx", "gap_approx"}};
  for (const auto& r : rows) {
    cells.push_back({std::to_string(r.n), to_string(r.moment), to_string(r.limit),
                     to_string(r.gap), approx_text(r.moment), approx_text(r.gap)});
  }
  if (format == Format::kCsv) {
    write_csv(out, cells);
    return;
  }
  out << "weights " << w.to_string() << "  k=" << k << '\n';
  write_table(out, cells);
}

namespace {

std::vector<long long> parse_n_list(const std::string& text) {
  std::vector<long long> ns;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      const long long n = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      ns.push_back(n);
    } catch (const std::logic_error&) {
      throw InputError("bad --n entry '" + piece + "'");
    }
  }
  return ns;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments of the star-generator central limit law"};
  app.require_subcommand(1);

  MomentsOptions mopts;
  std::string format = "text";
  bool timings = false;
  auto* moments = app.add_subcommand("moments", "Moment table from the selected routes");
  moments->add_option("--weights", mopts.weights, "Comma-separated rationals summing to 1")
      ->required();
  moments->add_option("--max-order", mopts.max_order, "Largest order k");
  moments->add_option("--routes", mopts.routes, "Subset of A,B,C,D");
  moments->add_option("--format", format, "text, json or csv");
  moments->add_option("--order-cap", mopts.order_cap, "Guard on --max-order");
  moments->add_option("--threads", mopts.threads, "Worker threads");
  moments->add_flag("--timings", timings, "Report per-route wall time");

  std::string vweights;
  std::string profile = "default";
  bool gue = false;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--weights", vweights, "Comma-separated rationals summing to 1")
      ->required();
  verify->add_option("--profile", profile, "quick, default or deep");
  verify->add_flag("--gue", gue, "Also check the GUE convolution identity");
  verify->add_option("--seed", seed, "Seed for the randomized suites");

  std::string cweights;
  int ck = 4;
  std::string nlist = "8,16,32";
  auto* converge = app.add_subcommand("converge", "Finite-n moments against the limit");
  converge->add_option("--weights", cweights, "Comma-separated rationals summing to 1")
      ->required();
  converge->add_option("--k", ck, "Even moment order, at most 8");
  converge->add_option("--n", nlist, "Comma-separated list of n");
  converge->add_option("--format", format, "text, json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    const Format fmt = parse_format(format);
    if (*moments) {
      const auto report = compute_moments(mopts);
      write_report(out, report, fmt, timings);
      if (!report.all_agree()) {
        err << "error: routes disagree\n";
        return kVerificationFailure;
      }
      return kOk;
    }
    if (*verify) {
      const auto w = WeightVector::parse(vweights);
      const auto results = run_verification(w, profile_by_name(profile), gue, seed);
      int failed = 0;
      out << "weights " << w.to_string() << "  profile " << profile << '\n';
      for (const auto& r : results) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
        if (!r.passed) ++failed;
      }
      if (failed) {
        out << failed << " of " << results.size() << " suites failed\n";
        return kVerificationFailure;
      }
      out << "all " << results.size() << " suites passed\n";
      return kOk;
    }
    const auto w = WeightVector::parse(cweights);
    const auto rows = compute_convergence(w, ck, parse_n_list(nlist));
    write_convergence(out, w, ck, rows, fmt);
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  }
}

}  // namespace starclt::cli
