#include "orlicz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <vector>

#include "orlicz/charseq.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/luxemburg.hpp"
#include "orlicz/nterm.hpp"
#include "orlicz/verify.hpp"
#include "orlicz/widths.hpp"

namespace orlicz::cli {

namespace {

struct Row {
  std::string quantity;
  int order;
  double value;
  bool certified;
  std::string witness;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_rows(std::ostream& out, const std::vector<Row>& rows) {
  out << "quantity,order,value,certified,witness\r\n";
  for (const auto& r : rows) {
    out << csv_field(r.quantity) << ',' << r.order << ',' << format_double(r.value) << ','
        << (r.certified ? "true" : "false") << ',' << csv_field(r.witness) << "\r\n";
  }
}

std::string describe(const IndexSet& g) {
  std::string s = "{";
  bool first = true;
  for (std::size_t k : g) {
    s += (first ? "" : ";") + std::to_string(k + 1);
    first = false;
  }
  return s + "}";
}

std::string describe_witness(const WidthReport& w) {
  if (const auto* g = std::get_if<IndexSet>(&w.attaining_witness)) {
    return (w.quantity == WidthQuantity::d_m ? "span=" : "gamma=") + describe(*g);
  }
  if (const auto* x = std::get_if<FiniteSequence>(&w.attaining_witness)) {
    for (std::size_t k = 0; k < x->dim(); ++k) {
      if ((*x)[k] != 0.0) return "x=e_" + std::to_string(k + 1) + "/||e||";
    }
  }
  return {};
}

Row width_row(const WidthReport& w) {
  return {std::string(to_string(w.quantity)), w.order, w.value, true, describe_witness(w)};
}

WeightSpec weights_for(const RunConfig& c) {
  if (c.weight_spec.empty()) throw ParseError("--weights is required");
  return parse_weight_spec(c.weight_spec, c.d, c.tail_bound);
}

DiagonalOperator operator_for(const RunConfig& c, const WeightSpec& ws) {
  const auto M = parse_orlicz_spec(c.orlicz_spec);
  const auto N = c.target_spec ? parse_orlicz_spec(*c.target_spec) : M;
  return DiagonalOperator(ws.weights, M, N);
}

DiagonalOperator same_space_operator(const RunConfig& c, const WeightSpec& ws) {
  return DiagonalOperator(ws.weights, parse_orlicz_spec(c.orlicz_spec));
}

Row sigma_row(const RunConfig& c, const WeightSpec& ws, int n) {
  if (!c.p) throw ParseError("--p is required for sigma");
  SearchPolicy policy;
  policy.mode = ws.builtin_family ? SearchMode::certified_family : SearchMode::heuristic;
  policy.patience = c.patience;
  policy.s_cap = c.s_cap;
  const auto M = parse_orlicz_spec(c.orlicz_spec);
  const auto res = sigma_exact(M, *c.p, ws.weights, static_cast<std::size_t>(n), policy);
  return {"sigma_n", n, res.value, res.certified, "s*=" + std::to_string(res.s_star)};
}

// Rows are computed concurrently and collected in submission order.
std::vector<Row> collect(std::vector<std::function<Row()>> jobs) {
  std::vector<std::future<Row>> futures;
  futures.reserve(jobs.size());
  for (auto& job : jobs) futures.push_back(std::async(std::launch::async, std::move(job)));
  std::vector<Row> rows;
  rows.reserve(futures.size());
  for (auto& f : futures) rows.push_back(f.get());
  return rows;
}

std::vector<Row> run_norm(const RunConfig& c) {
  const auto M = parse_orlicz_spec(c.orlicz_spec);
  std::vector<double> values;
  if (!c.x_path.empty()) {
    values = read_csv_values(c.x_path);
  } else if (!c.values.empty()) {
    values = parse_value_list(c.values);
  } else {
    throw ParseError("norm needs --x <csv> or --values a,b,c");
  }
  const FiniteSequence x(values);
  std::vector<Row> rows{{"norm", 0, luxemburg_norm(M, x), true, ""}};
  if (!c.gamma.empty()) {
    const auto gamma = parse_index_list(c.gamma);
    if (!gamma.empty() && gamma.indices().back() >= x.dim()) throw ParseError("--gamma index beyond the sequence");
    rows.push_back({"tail_norm", static_cast<int>(gamma.size()), tail_norm(M, x, gamma), true,
                    "gamma=" + describe(gamma)});
  }
  return rows;
}

std::vector<Row> run_charseq(const RunConfig& c) {
  const auto ws = weights_for(c);
  const auto triple = characteristic(ws.weights);
  std::vector<Row> rows;
  for (std::size_t n = 0; n < triple.levels(); ++n) {
    rows.push_back({"epsilon", static_cast<int>(n + 1), triple.epsilon[n], triple.epsilon[n] > ws.weights.tail_bound(),
                    "delta=" + std::to_string(triple.delta[n])});
  }
  return rows;
}

std::vector<std::function<Row()>> width_jobs(const RunConfig& c, const WeightSpec& ws) {
  std::vector<std::function<Row()>> jobs;
  if (c.m_range) {
    auto T = std::make_shared<const DiagonalOperator>(same_space_operator(c, ws));
    for (int m = c.m_range->lo; m <= c.m_range->hi; ++m) {
      jobs.push_back([T, m] { return width_row(kolmogorov_width(*T, m)); });
    }
  }
  if (c.n_range) {
    auto T = std::make_shared<const DiagonalOperator>(operator_for(c, ws));
    for (int n = c.n_range->lo; n <= c.n_range->hi; ++n) {
      jobs.push_back([T, n] { return width_row(basis_width(*T, n)); });
    }
    for (int n = std::max(1, c.n_range->lo); n <= c.n_range->hi; ++n) {
      jobs.push_back([T, n] { return width_row(width_on_char_set(*T, n)); });
    }
  }
  return jobs;
}

std::vector<Row> run_widths(const RunConfig& c) {
  if (!c.m_range && !c.n_range) throw ParseError("widths needs --m-range and/or --n-range");
  return collect(width_jobs(c, weights_for(c)));
}

std::vector<Row> run_sigma(const RunConfig& c) {
  if (!c.n_range) throw ParseError("sigma needs --n or --n-range");
  const auto ws = weights_for(c);
  std::vector<std::function<Row()>> jobs;
  for (int n = c.n_range->lo; n <= c.n_range->hi; ++n) jobs.push_back([&c, ws, n] { return sigma_row(c, ws, n); });
  return collect(std::move(jobs));
}

std::vector<Row> run_table(const RunConfig& c) {
  if (!c.m_range && !c.n_range) throw ParseError("table needs --m-range and/or --n-range");
  const auto ws = weights_for(c);
  auto jobs = width_jobs(c, ws);
  if (c.p && c.n_range) {
    for (int n = c.n_range->lo; n <= c.n_range->hi; ++n) jobs.push_back([&c, ws, n] { return sigma_row(c, ws, n); });
  }
  return collect(std::move(jobs));
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const auto results = verify::run_all(c.seed, c.trials);
  bool ok = true;
  for (const auto& r : results) {
    out << r.log_line() << '\n';
    ok = ok && r.passed();
  }
  out << "verify seed=" << c.seed << " trials=" << c.trials << " result=" << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitFailure;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
    case Command::verify: return run_verify(c, out);
    case Command::norm: write_rows(out, run_norm(c)); break;
    case Command::charseq: write_rows(out, run_charseq(c)); break;
    case Command::widths: write_rows(out, run_widths(c)); break;
    case Command::sigma: write_rows(out, run_sigma(c)); break;
    case Command::table: write_rows(out, run_table(c)); break;
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.d < 1) throw ParseError("--d must be >= 1");
    // Buffer the report so a failing command leaves no partial output.
    std::ostringstream buffer;
    const int code = dispatch(config, buffer);
    if (config.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) throw ParseError("cannot write " + config.output);
      file << buffer.str();
    }
    return code;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisError& e) {
    err << "hypothesis error: " << e.what() << '\n';
    if (e.report()) err << e.report()->describe() << '\n';
    return kExitHypothesis;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitHypothesis;
  }
}

}  // namespace orlicz::cli
