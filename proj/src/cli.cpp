#include "rectcount/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rectcount/asympt.hpp"
#include "rectcount/mary2.hpp"
#include "rectcount/natural.hpp"
#include "rectcount/oracle.hpp"
#include "rectcount/partcore.hpp"
#include "rectcount/qpfit.hpp"
#include "rectcount/restrict2.hpp"
#include "rectcount/seq_table.hpp"
#include "rectcount/tile2.hpp"

namespace rectcount::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string OutputRecord::to_csv() const {
  std::ostringstream out;
  out << "# sequence: " << sequence << "\n";
  for (const auto& [k, v] : args) out << "# arg: " << k << "=" << v << "\n";
  out << "n";
  for (const auto& c : columns) out << "," << csv_escape(c);
  out << "\n";
  for (const auto& [n, cells] : rows) {
    out << n;
    for (const auto& c : cells) out << "," << csv_escape(c);
    out << "\n";
  }
  return out.str();
}

std::string OutputRecord::to_json() const {
  json doc;
  doc["sequence"] = sequence;
  doc["args"] = args;
  doc["columns"] = columns;
  json jrows = json::array();
  for (const auto& [n, cells] : rows) {
    json jr;
    jr["n"] = n;
    jr["values"] = cells;
    jrows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(jrows);
  return doc.dump(2);
}

std::string OutputRecord::to_table() const {
  std::vector<std::size_t> width(columns.size() + 1, 1);
  auto update = [&](std::size_t col, std::size_t len) {
    width[col] = std::max(width[col], len);
  };
  update(0, 1);
  for (std::size_t c = 0; c < columns.size(); ++c) update(c + 1, columns[c].size());
  for (const auto& [n, cells] : rows) {
    update(0, std::to_string(n).size());
    for (std::size_t c = 0; c < cells.size(); ++c) update(c + 1, cells[c].size());
  }
  std::ostringstream out;
  out << "# " << sequence;
  for (const auto& [k, v] : args) out << " " << k << "=" << v;
  out << "\n";
  out << std::setw(static_cast<int>(width[0])) << "n";
  for (std::size_t c = 0; c < columns.size(); ++c)
    out << "  " << std::setw(static_cast<int>(width[c + 1])) << columns[c];
  out << "\n";
  for (const auto& [n, cells] : rows) {
    out << std::setw(static_cast<int>(width[0])) << n;
    for (std::size_t c = 0; c < cells.size(); ++c)
      out << "  " << std::setw(static_cast<int>(width[c + 1])) << cells[c];
    out << "\n";
  }
  return out.str();
}

OutputRecord OutputRecord::from_csv(const std::string& text) {
  OutputRecord rec;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# sequence: ", 0) == 0) {
      rec.sequence = line.substr(12);
      continue;
    }
    if (line.rfind("# arg: ", 0) == 0) {
      const auto body = line.substr(7);
      const auto eq = body.find('=');
      if (eq != std::string::npos) rec.args[body.substr(0, eq)] = body.substr(eq + 1);
      continue;
    }
    if (line[0] == '#') continue;
    // split a CSV row (quotes are only produced around values that need them)
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char ch = line[i];
      if (quoted) {
        if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else if (ch == '"') {
          quoted = false;
        } else {
          cur += ch;
        }
      } else if (ch == '"') {
        quoted = true;
      } else if (ch == ',') {
        cells.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    cells.push_back(std::move(cur));
    if (!header_seen) {
      header_seen = true;
      rec.columns.assign(cells.begin() + 1, cells.end());
      continue;
    }
    std::vector<std::string> rest(cells.begin() + 1, cells.end());
    rec.rows.emplace_back(std::stoull(cells[0]), std::move(rest));
  }
  return rec;
}

OutputRecord OutputRecord::from_json(const std::string& text) {
  OutputRecord rec;
  json doc = json::parse(text);
  rec.sequence = doc.value("sequence", std::string());
  for (auto it = doc["args"].begin(); it != doc["args"].end(); ++it)
    rec.args[it.key()] = it.value().get<std::string>();
  for (const auto& c : doc["columns"]) rec.columns.push_back(c.get<std::string>());
  for (const auto& r : doc["rows"]) {
    std::vector<std::string> cells;
    for (const auto& v : r["values"]) cells.push_back(v.get<std::string>());
    rec.rows.emplace_back(r["n"].get<std::size_t>(), std::move(cells));
  }
  return rec;
}

namespace {

struct GlobalOpts {
  std::string format = "table";
  std::string cache_dir;
  int jobs = 1;
  bool long_running = false;
};

void emit(const OutputRecord& rec, const GlobalOpts& opts, std::ostream& out) {
  if (opts.format == "csv")
    out << rec.to_csv();
  else if (opts.format == "json")
    out << rec.to_json() << "\n";
  else
    out << rec.to_table();
}

// Sequence generators behind the cache.  The fingerprint names the
// algorithm revision; bumping it invalidates stale entries.
SeqTable cached_sequence(const GlobalOpts& opts, const std::string& name,
                         const std::map<std::string, std::string>& args,
                         std::size_t n_max, const std::string& fingerprint,
                         const std::function<std::vector<Natural>(std::size_t)>& gen) {
  auto cache = SeqCache::resolve(opts.cache_dir);
  if (auto hit = cache.load(name, args, fingerprint, n_max)) {
    hit->values.resize(n_max + 1);
    return *hit;
  }
  SeqTable table;
  table.name = name;
  table.args = args;
  table.values = gen(n_max);
  cache.store(table, fingerprint);
  return table;
}

OutputRecord record_of(const SeqTable& table, const std::string& column) {
  OutputRecord rec;
  rec.sequence = table.name;
  rec.args = table.args;
  rec.columns = {column};
  for (std::size_t n = 0; n < table.values.size(); ++n)
    rec.rows.emplace_back(n, std::vector<std::string>{to_decimal(table.values[n])});
  return rec;
}

int cmd_p2(const GlobalOpts& opts, std::size_t max_n, bool diagnostics, std::ostream& out) {
  if (max_n > 36 && !opts.long_running)
    throw std::invalid_argument("--max-n beyond 36 needs --long-running");
  auto table = cached_sequence(opts, "p2", {{"max_n", std::to_string(max_n)}}, max_n, "p2/v1",
                               [&](std::size_t n) { return tile2::p2_table(n, opts.jobs); });
  emit(record_of(table, "value"), opts, out);
  if (diagnostics) {
    auto with = tile2::p_tilde_table(max_n, true, opts.jobs);
    auto without = tile2::p_tilde_table(max_n, false, opts.jobs);
    OutputRecord rec;
    rec.sequence = "p_tilde_domino_diagnostic";
    rec.columns = {"p_tilde", "subsum_only", "difference"};
    for (std::size_t n = 0; n <= max_n; ++n)
      rec.rows.emplace_back(n, std::vector<std::string>{to_decimal(with[n]),
                                                        to_decimal(without[n]),
                                                        to_decimal(with[n] - without[n])});
    emit(rec, opts, out);
  }
  return kExitOk;
}

int cmd_square(const GlobalOpts& opts, std::size_t max_n, std::ostream& out) {
  if (max_n > 4 && !opts.long_running)
    throw std::invalid_argument("--max-n beyond 4 needs --long-running");
  if (max_n > 6) throw std::invalid_argument("--max-n is capped at 6 (area guard)");
  OutputRecord rec;
  rec.sequence = "square";
  rec.columns = {"value"};
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto v = oracle::count_multisets(static_cast<std::uint32_t>(n),
                                     static_cast<std::uint32_t>(n), oracle::allow_all(),
                                     /*allow_large=*/n * n > 30, opts.jobs);
    rec.rows.emplace_back(n, std::vector<std::string>{to_decimal(v)});
  }
  emit(rec, opts, out);
  return kExitOk;
}

int cmd_restricted(const GlobalOpts& opts, std::uint32_t k, std::uint32_t l, std::size_t max_n,
                   std::ostream& out) {
  auto table = cached_sequence(
      opts, "p_kl",
      {{"k", std::to_string(k)}, {"l", std::to_string(l)}, {"max_n", std::to_string(max_n)}},
      max_n, "p_kl/v1", [&](std::size_t n) {
        if (l == 1) return restrict2::p_k1_table(k, n, opts.jobs);
        return restrict2::p_kl_table(k, l, n);
      });
  emit(record_of(table, "value"), opts, out);
  return kExitOk;
}

int cmd_mary(const GlobalOpts& opts, std::uint32_t m, std::uint32_t i, std::uint32_t j,
             std::size_t max_n, const std::string& kind_name, std::ostream& out) {
  mary2::CongruenceKind kind;
  if (kind_name == "alkauskas")
    kind = mary2::CongruenceKind::alkauskas;
  else if (kind_name == "b_i0")
    kind = mary2::CongruenceKind::b_i0;
  else if (kind_name == "b_ij")
    kind = mary2::CongruenceKind::b_ij;
  else
    throw std::invalid_argument("--kind must be alkauskas | b_i0 | b_ij");

  std::vector<Natural> values;
  std::map<std::string, std::string> args{{"m", std::to_string(m)}};
  std::string name;
  switch (kind) {
    case mary2::CongruenceKind::alkauskas:
      name = "b_m";
      values = mary2::b_m_table(m, max_n);
      break;
    case mary2::CongruenceKind::b_i0:
      name = "b_i0";
      args["i"] = std::to_string(i);
      values = mary2::b_i0_table(m, i, max_n);
      break;
    case mary2::CongruenceKind::b_ij:
      name = "b_ij";
      args["i"] = std::to_string(i);
      args["j"] = std::to_string(j);
      values = mary2::b_ij_table(m, i, j, max_n);
      break;
  }
  OutputRecord rec;
  rec.sequence = name;
  rec.args = args;
  rec.columns = {"value", "predicted", "residue", "pass"};
  bool all_ok = true;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const auto predicted = mary2::congruence_predict(kind, m, i, j, n);
    const auto residue = static_cast<std::uint32_t>(mpz_fdiv_ui(values[n].get_mpz_t(), m));
    const bool ok = predicted == residue;
    all_ok = all_ok && ok;
    rec.rows.emplace_back(
        n, std::vector<std::string>{to_decimal(values[n]), std::to_string(predicted),
                                    std::to_string(residue), ok ? "1" : "0"});
  }
  emit(rec, opts, out);
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_fit(const GlobalOpts& opts, std::uint32_t k, std::size_t terms, bool gf_check,
            std::ostream& out) {
  if (k > 8) throw std::invalid_argument("--k is capped at 8");
  if (k >= 7 && !opts.long_running)
    throw std::invalid_argument("k >= 7 needs --long-running (sequence generation cost)");
  SeqTable table;
  table.name = "p_k1";
  table.args = {{"k", std::to_string(k)}};
  table.values = restrict2::p_k1_table(k, terms, opts.jobs);

  auto res = qpfit::fit_min_start(table, k);
  json doc;
  doc["k"] = k;
  doc["N_k"] = res.N_k;
  doc["window"] = {{"start", res.fit.start}, {"end", res.fit.end}};
  doc["bracket"] = res.fit.bracket_notation();
  doc["period"] = res.fit.canonical.period;
  json polys = json::array();
  for (std::size_t rho = 0; rho < res.fit.canonical.polys.size(); ++rho) {
    json coeffs = json::array();
    for (const auto& c : res.fit.canonical.polys[rho]) coeffs.push_back(c.get_str());
    polys.push_back(std::move(coeffs));
  }
  doc["canonical"] = std::move(polys);
  if (gf_check) {
    auto rep = qpfit::rational_gf_check(table, k, 1);
    doc["gf_polynomial_within_range"] = rep.polynomial_within_range;
    if (rep.degree) doc["gf_numerator_degree"] = *rep.degree;
  }
  if (opts.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << "p_{" << k << ",1}(2,n) for n >= " << res.N_k << ":\n  " << res.fit.bracket_notation()
        << "\n";
    out << "fit window [" << res.fit.start << ", " << res.fit.end << "], canonical period "
        << res.fit.canonical.period << "\n";
    if (gf_check)
      out << "series * Q(x) polynomial within range: "
          << (doc["gf_polynomial_within_range"].get<bool>() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_benford(const GlobalOpts& opts, const std::string& seq, std::size_t max_n,
                std::uint32_t base, const std::string& prefix,
                const std::vector<std::size_t>& windows, std::ostream& out) {
  std::vector<Natural> values;
  if (seq == "p") {
    auto t = partcore::euler_p_table(max_n);
    values.assign(t.begin() + 1, t.end());  // skip p(0); sample is n = 1..max_n
  } else if (seq == "p2") {
    if (max_n > 36 && !opts.long_running)
      throw std::invalid_argument("p2 beyond 36 needs --long-running");
    auto t = tile2::p2_table(max_n, opts.jobs);
    values.assign(t.begin() + 1, t.end());
  } else {
    throw std::invalid_argument("--seq must be p | p2");
  }
  OutputRecord rec;
  rec.sequence = "benford_" + seq;
  rec.args = {{"base", std::to_string(base)}, {"prefix", prefix}};
  rec.columns = {"window", "observed", "expected", "abs_distance"};
  std::vector<std::size_t> ws = windows.empty() ? std::vector<std::size_t>{max_n} : windows;
  std::size_t row = 0;
  for (auto w : ws) {
    if (w > values.size()) w = values.size();
    auto rep = asympt::benford_report({values.data(), w}, base, prefix);
    std::ostringstream obs, exp, dist;
    obs << std::setprecision(10) << rep.observed_frequency;
    exp << std::setprecision(10) << rep.expected;
    dist << std::setprecision(10) << std::abs(rep.observed_frequency - rep.expected);
    rec.rows.emplace_back(row++, std::vector<std::string>{std::to_string(w), obs.str(),
                                                          exp.str(), dist.str()});
  }
  emit(rec, opts, out);
  return kExitOk;
}

int cmd_asym(const GlobalOpts& opts, const std::string& preset_name,
             const std::vector<std::size_t>& points, const std::string& murty,
             std::ostream& out) {
  if (!murty.empty()) {
    const auto comma = murty.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--murty wants PRESET,PRESET");
    auto f = asympt::preset_by_name(murty.substr(0, comma));
    auto g = asympt::preset_by_name(murty.substr(comma + 1));
    auto composed = asympt::murty_convolve(f, g);
    json doc;
    doc["c"] = composed.c;
    doc["delta"] = composed.delta;
    doc["lambda"] = composed.lambda;
    if (opts.format == "json")
      out << doc.dump(2) << "\n";
    else
      out << "composed: c = " << std::setprecision(15) << composed.c
          << ", delta = " << composed.delta << ", lambda = " << composed.lambda << "\n";
    return kExitOk;
  }

  auto spec = asympt::preset_by_name(preset_name);
  // exact companions where a table is affordable
  auto exact_of = [&](std::size_t n) -> std::optional<Natural> {
    std::string key = preset_name;
    std::transform(key.begin(), key.end(), key.begin(), ::toupper);
    if (key == "HR_P") return partcore::euler_p(n);
    if (key == "NUCLEAR") return partcore::nuclear_q(n);
    if (key == "Q2") return partcore::two_colored_q2(n);
    if (key == "T") return tile2::t_count(n);
    if (key == "P2" && n <= 140) return tile2::p2(n);
    if (key == "PTILDE" && n <= 140) return tile2::p_tilde(n);
    return std::nullopt;
  };

  OutputRecord rec;
  rec.sequence = "asym_" + preset_name;
  rec.columns = {"log_asym", "exact", "ratio"};
  for (auto n : points) {
    const double la = asympt::log_eval_asym(spec, n);
    std::string exact = "-", ratio = "-";
    if (auto v = exact_of(n)) {
      exact = to_decimal(*v);
      std::ostringstream r;
      r << std::setprecision(10) << std::exp(la - log_natural(*v));
      ratio = r.str();
    }
    std::ostringstream lav;
    lav << std::setprecision(12) << la;
    rec.rows.emplace_back(n, std::vector<std::string>{lav.str(), exact, ratio});
  }
  emit(rec, opts, out);
  return kExitOk;
}

int cmd_oracle(const GlobalOpts& opts, std::uint32_t m, std::uint32_t n,
               const std::string& filter_name, std::uint32_t k, std::uint32_t l,
               const std::string& symmetric, std::size_t dump, std::ostream& out) {
  const bool large = static_cast<std::size_t>(m) * n > 30;
  if (large && !opts.long_running)
    throw std::invalid_argument("areas beyond 30 cells need --long-running");

  if (!symmetric.empty()) {
    if (m != 2) throw std::invalid_argument("--symmetric applies to 2 x n grids");
    const bool with_dominoes = symmetric == "t";
    if (!with_dominoes && symmetric != "s")
      throw std::invalid_argument("--symmetric must be s | t");
    auto v = oracle::count_symmetric_multisets(n, with_dominoes, large);
    OutputRecord rec;
    rec.sequence = symmetric == "s" ? "oracle_symmetric_s" : "oracle_symmetric_t";
    rec.args = {{"n", std::to_string(n)}};
    rec.columns = {"value"};
    rec.rows.emplace_back(n, std::vector<std::string>{to_decimal(v)});
    emit(rec, opts, out);
    return kExitOk;
  }

  oracle::BlockFilter filter = oracle::allow_all();
  if (filter_name == "restricted")
    filter = oracle::allow_restricted(k, l);
  else if (filter_name != "all")
    throw std::invalid_argument("--filter must be all | restricted");

  if (dump > 0) {
    out << oracle::dump_tilings(m, n, filter, dump, large);
    return kExitOk;
  }
  auto v = oracle::count_multisets(m, n, filter, large, opts.jobs);
  OutputRecord rec;
  rec.sequence = "oracle_multisets";
  rec.args = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"filter", filter_name}};
  rec.columns = {"value"};
  rec.rows.emplace_back(n, std::vector<std::string>{to_decimal(v)});
  emit(rec, opts, out);
  return kExitOk;
}

// --- verify suites -----------------------------------------------------

struct SuiteOutcome {
  int checks = 0;
  int failures = 0;
};

void report(std::ostream& out, SuiteOutcome& so, const std::string& name, bool ok) {
  ++so.checks;
  if (!ok) ++so.failures;
  out << (ok ? "PASS " : "FAIL ") << name << "\n";
}

void suite_core(std::ostream& out, SuiteOutcome& so) {
  using namespace partcore;
  auto p = euler_p_table(60);
  bool iter_ok = true;
  for (std::size_t n = 0; n <= 40 && iter_ok; n += 8) {
    std::size_t cnt = 0;
    for_each_partition(n, n ? static_cast<std::uint32_t>(n) : 1,
                       [&](std::span<const std::uint32_t>) { ++cnt; });
    iter_ok = Natural(static_cast<unsigned long>(cnt)) == p[n];
  }
  report(out, so, "partitions_iter count matches euler_p", iter_ok);

  bool q_ok = true;
  Natural acc = 0;
  for (std::size_t n = 0; n <= 60; ++n) {
    acc += nuclear_q(n);
    q_ok = q_ok && nuclear_q(n) >= 0 && acc == p[n];
  }
  report(out, so, "nuclear_q telescopes to euler_p", q_ok);

  bool mono = true;
  for (std::uint32_t l = 1; l <= 30; ++l)
    mono = mono && p_max_part(30, l) <= p_max_part(30, l + 1);
  report(out, so, "p_max_part weakly increasing in l", mono && p_max_part(30, 30) == p[30]);

  auto q2conv = two_colored_q2(200);
  auto q2dp = two_colored_q2_table(200)[200];
  report(out, so, "q2 convolution equals product DP", q2conv == q2dp);
}

void suite_tile2(std::ostream& out, SuiteOutcome& so) {
  using namespace tile2;
  bool sandwich = true;
  for (std::size_t n = 0; n <= 20; ++n) {
    auto pt = p_tilde(n);
    auto p2n = partcore::euler_p(2 * n);
    auto r = r_no_subsum(2 * n, n);
    sandwich = sandwich && p2n - r <= pt && pt <= p2n;
  }
  report(out, so, "p_tilde sandwich p(2n) - R(2n,n) <= p~ <= p(2n)", sandwich);

  bool pairs = true;
  for (std::size_t n = 0; n <= 14; ++n) pairs = pairs && p_tilde_pairs(n) == p_tilde(n);
  report(out, so, "p_tilde equals pair-union dedup", pairs);

  auto p2t = p2_table(25, 1);
  bool mono = true;
  for (std::size_t n = 1; n <= 25; ++n) mono = mono && p2t[n - 1] <= p2t[n];
  report(out, so, "p2 weakly increasing", mono);

  bool partial = true;
  auto s = s_count_table(200);
  auto t = t_count_table(200);
  Natural acc = 0;
  for (std::size_t n = 0; n <= 200; ++n) {
    acc += s[n];
    partial = partial && acc == t[n];
  }
  report(out, so, "t_count equals partial sums of s_count", partial);

  report(out, so, "weighted S recurrence agrees", !s_recurrence_mismatch(120).has_value());

  bool bounds = true;
  for (std::size_t n = 1; n <= 40; ++n)
    for (const auto& c : verify_bounds(n)) bounds = bounds && c.holds;
  report(out, so, "bounds sweep n <= 40", bounds);
}

void suite_restrict(std::ostream& out, SuiteOutcome& so) {
  using namespace restrict2;
  bool closed = true;
  for (std::uint32_t k = 1; k <= 3; ++k)
    for (std::uint32_t l = 1; l <= 3; ++l)
      for (std::size_t n = 1; n <= 60; ++n)
        closed = closed && p_kl(k, l, n) == closed_form_table1(k, l, n);
  report(out, so, "p_kl equals closed forms (k,l <= 3, n <= 60)", closed);

  bool conv = true;
  for (std::uint32_t k = 1; k <= 3; ++k)
    for (std::uint32_t l = 2; l <= 3; ++l)
      for (std::size_t n = 0; n <= 40; ++n)
        conv = conv && p_kl(k, l, n) == p_kl_convolution(k, l, n);
  report(out, so, "p_kl equals convolution route", conv);

  bool rec3 = true;
  for (std::size_t n = 3; n <= 60; ++n)
    rec3 = rec3 && p_k1(3, n) == p_k1(3, n - 3) + 2 * Natural(static_cast<unsigned long>(n));
  report(out, so, "p_31 recurrence p(n) = p(n-3) + 2n", rec3);

  bool ineq = true;
  for (std::uint32_t k = 4; k <= 6; ++k) {
    auto tk = p_k1_table(k, 40, 1);
    auto tk1 = p_k1_table(k - 1, 40, 1);
    auto tk2 = p_k1_table(k - 2, 40, 1);
    for (std::size_t n = k; n <= 40; ++n) {
      Natural lower = tk1[n];
      if (n >= k) lower += (n - k < tk.size() ? tk[n - k] : 0) + tk1[n - k];
      Natural upper = tk[n - k] + 2 * tk1[n] + Natural(static_cast<unsigned long>(k)) *
                                                   k * k * k * k * tk2[n];
      ineq = ineq && lower <= tk[n] && tk[n] <= upper;
    }
  }
  report(out, so, "p_k1 growth inequalities (4 <= k <= 6)", ineq);
}

void suite_mary(std::ostream& out, SuiteOutcome& so) {
  using namespace mary2;
  bool lemma = true;
  for (std::uint32_t m : {2u, 3u, 5u}) {
    auto t = b_m_table(m, 5000);
    for (std::size_t n = 1; n <= 5000; ++n)
      if (n % m) lemma = lemma && t[n] == t[n - 1];
  }
  report(out, so, "b_m constant between multiples of m", lemma);

  bool enum_ok = true;
  for (std::uint32_t m : {2u, 3u})
    for (std::uint32_t i = 0; i <= 3; ++i)
      for (std::size_t n = 0; n <= 60; ++n)
        enum_ok = enum_ok && b_i0(m, i, n) == b_i0_enumerated(m, i, n);
  report(out, so, "b_i0 recurrence equals enumeration", enum_ok);

  bool conv_ok = true;
  for (std::uint32_t m : {2u, 3u})
    for (std::uint32_t i = 0; i <= 2; ++i)
      for (std::uint32_t j = 0; j <= 2; ++j)
        for (std::size_t n = 0; n <= 60; ++n)
          conv_ok = conv_ok && b_ij(m, i, j, n) == b_ij_convolution(m, i, j, n);
  report(out, so, "b_ij recursion equals convolution", conv_ok);

  bool sweeps = true;
  for (std::uint32_t m : {2u, 3u, 5u}) {
    sweeps = sweeps && verify_congruences(CongruenceKind::alkauskas, m, 0, 0, 2000).ok();
    for (std::uint32_t i = m == 2 ? 1u : 0u; i <= 3; ++i) {
      sweeps = sweeps && verify_congruences(CongruenceKind::b_i0, m, i, 0, 500).ok();
      for (std::uint32_t j = 0; j <= 3; ++j)
        sweeps = sweeps && verify_congruences(CongruenceKind::b_ij, m, i, j, 500).ok();
    }
  }
  report(out, so, "congruence sweeps (m in {2,3,5})", sweeps);
}

void suite_asym(std::ostream& out, SuiteOutcome& so) {
  using namespace asympt;
  auto composed = murty_convolve(preset_nuclear(), preset_ptilde());
  auto p2 = preset_p2();
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); };
  report(out, so, "murty composition reproduces the p(2,n) constants",
         close(composed.c, p2.c) && close(composed.delta, p2.delta) &&
             close(composed.lambda, p2.lambda));

  double sum = 0;
  for (int d = 1; d <= 9; ++d) sum += benford_expected(10, std::to_string(d));
  report(out, so, "benford expectations sum to 1", std::abs(sum - 1.0) < 1e-12);

  report(out, so, "p(2,n) growth parameters pass the goodness conditions",
         benford_good_check(preset_p2(), 1, 1000000).ok());
}

void suite_oracle(std::ostream& out, SuiteOutcome& so) {
  using namespace oracle;
  bool squares = true;
  const unsigned long expect[] = {1, 4, 21, 192};
  for (std::uint32_t n = 1; n <= 4; ++n)
    squares = squares && count_multisets(n, n, allow_all()) == Natural(expect[n - 1]);
  report(out, so, "square counts 1, 4, 21, 192", squares);

  bool strip = true;
  auto p2t = tile2::p2_table(6, 1);
  for (std::uint32_t n = 0; n <= 6; ++n)
    strip = strip && count_multisets(2, n, allow_all()) == p2t[n];
  report(out, so, "oracle matches p2 for n <= 6", strip);

  bool sym = true;
  for (std::size_t n = 0; n <= 6; ++n) {
    sym = sym && count_symmetric_multisets(n, false) == tile2::s_count(n);
    sym = sym && count_symmetric_multisets(n, true) == tile2::t_count(n);
  }
  report(out, so, "symmetric variants match s_count/t_count", sym);

  bool rest = true;
  for (std::uint32_t k = 1; k <= 3; ++k)
    for (std::uint32_t l = 1; l <= 3; ++l)
      for (std::uint32_t n = 0; n <= 6; ++n)
        rest = rest && count_multisets(2, n, allow_restricted(k, l)) ==
                           restrict2::p_kl(k, l, n);
  report(out, so, "oracle matches p_kl under block filters", rest);
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  SuiteOutcome so;
  const bool all = suite == "all";
  if (all || suite == "core") suite_core(out, so);
  if (all || suite == "tile2") suite_tile2(out, so);
  if (all || suite == "restrict") suite_restrict(out, so);
  if (all || suite == "mary") suite_mary(out, so);
  if (all || suite == "asym") suite_asym(out, so);
  if (all || suite == "oracle") suite_oracle(out, so);
  if (so.checks == 0) throw std::invalid_argument("unknown suite: " + suite);
  out << so.checks - so.failures << "/" << so.checks << " checks passed\n";
  return so.failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact counts, bounds, asymptotics and congruences for 2 x n "
               "rectangle partitions"};
  app.require_subcommand(1);
  GlobalOpts opts;
  app.add_option("--format", opts.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--cache-dir", opts.cache_dir, "sequence cache directory");
  app.add_option("--jobs", opts.jobs, "worker threads for enumeration-heavy commands")
      ->check(CLI::PositiveNumber);
  app.add_flag("--long-running", opts.long_running,
               "unlock p(2,40)-scale enumerations, 5x5 oracle runs and k >= 7 fits");

  std::size_t max_n = 20;
  bool diagnostics = false;
  auto* p2cmd = app.add_subcommand("p2", "exact p(2,n) table");
  p2cmd->add_option("--max-n", max_n, "largest n (default 20)");
  p2cmd->add_flag("--diagnostics", diagnostics, "emit the vertical-domino diagnostic table");

  std::size_t sq_max = 4;
  auto* sqcmd = app.add_subcommand("square", "oracle p(n,n) values");
  sqcmd->add_option("--max-n", sq_max, "largest n (default 4; 5 needs --long-running)");

  std::uint32_t rk = 2, rl = 1;
  std::size_t rest_max = 40;
  auto* restcmd = app.add_subcommand("restricted", "restricted counts p_{k,l}(2,n)");
  restcmd->add_option("--k", rk, "largest one-row block")->check(CLI::Range(1, 16));
  restcmd->add_option("--l", rl, "largest two-row block (1 = none)")->check(CLI::Range(1, 16));
  restcmd->add_option("--max-n", rest_max, "largest n (default 40)");

  std::uint32_t mm = 2, mi = 1, mj = 0;
  std::size_t mary_max = 100;
  std::string kind = "b_ij";
  auto* marycmd = app.add_subcommand("mary", "m-ary counts and congruence checks");
  marycmd->add_option("--m", mm, "base m >= 2")->check(CLI::Range(2, 64));
  marycmd->add_option("--i", mi, "one-row exponent cap");
  marycmd->add_option("--j", mj, "two-row exponent cap");
  marycmd->add_option("--max-n", mary_max, "largest n (default 100)");
  marycmd->add_option("--kind", kind, "alkauskas | b_i0 | b_ij");

  std::uint32_t fk = 4;
  std::size_t terms = 200;
  bool gf_check = false;
  auto* fitcmd = app.add_subcommand("fit", "quasi-polynomial discovery for p_{k,1}(2,n)");
  fitcmd->add_option("--k", fk, "one-row block bound (4..8 interesting)")
      ->check(CLI::Range(1, 8));
  fitcmd->add_option("--terms", terms, "how many sequence terms to generate");
  fitcmd->add_flag("--gf-check", gf_check, "also run the rational generating function check");

  std::string bseq = "p", bprefix = "1";
  std::uint32_t bbase = 10;
  std::size_t bmax = 10000;
  std::string bwindows;
  auto* bencmd = app.add_subcommand("benford", "leading-digit statistics");
  bencmd->add_option("--seq", bseq, "p | p2");
  bencmd->add_option("--max-n", bmax, "table length (default 10000)");
  bencmd->add_option("--base", bbase, "number base")->check(CLI::Range(2, 64));
  bencmd->add_option("--prefix", bprefix, "digit string, leading digit nonzero");
  bencmd->add_option("--windows", bwindows, "comma-separated window sizes");

  std::string preset = "P2", murty, points = "10,100,1000,10000";
  auto* asymcmd = app.add_subcommand("asym", "asymptotic evaluators");
  asymcmd->add_option("--preset", preset, "HR_P | NUCLEAR | PTILDE | Q2 | T | P2");
  asymcmd->add_option("--points", points, "comma-separated evaluation points");
  asymcmd->add_option("--murty", murty, "compose two presets, e.g. NUCLEAR,PTILDE");

  std::uint32_t om = 2, on = 3, ok = 16, ol = 16;
  std::string ofilter = "all", osym;
  std::size_t odump = 0;
  auto* oraclecmd = app.add_subcommand("oracle", "geometric brute-force ground truth");
  oraclecmd->add_option("--m", om, "rows");
  oraclecmd->add_option("--n", on, "columns");
  oraclecmd->add_option("--filter", ofilter, "all | restricted");
  oraclecmd->add_option("--k", ok, "restricted filter: one-row bound");
  oraclecmd->add_option("--l", ol, "restricted filter: two-row bound");
  oraclecmd->add_option("--symmetric", osym, "s | t symmetric-multiset variant");
  oraclecmd->add_option("--dump", odump, "dump up to N tilings instead of counting");

  std::string suite = "all";
  auto* verifycmd = app.add_subcommand("verify", "invariant sweep suites");
  verifycmd->add_option("--suite", suite, "core | tile2 | restrict | mary | asym | oracle | all");

  try {
    std::vector<std::string> args(argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (p2cmd->parsed()) return cmd_p2(opts, max_n, diagnostics, out);
    if (sqcmd->parsed()) return cmd_square(opts, sq_max, out);
    if (restcmd->parsed()) return cmd_restricted(opts, rk, rl, rest_max, out);
    if (marycmd->parsed()) return cmd_mary(opts, mm, mi, mj, mary_max, kind, out);
    if (fitcmd->parsed()) return cmd_fit(opts, fk, terms, gf_check, out);
    if (bencmd->parsed()) {
      std::vector<std::size_t> windows;
      std::stringstream ss(bwindows);
      std::string tok;
      while (std::getline(ss, tok, ',') ) {
        if (!tok.empty()) windows.push_back(std::stoull(tok));
      }
      return cmd_benford(opts, bseq, bmax, bbase, bprefix, windows, out);
    }
    if (asymcmd->parsed()) {
      std::vector<std::size_t> pts;
      std::stringstream ss(points);
      std::string tok;
      while (std::getline(ss, tok, ',') ) {
        if (!tok.empty()) pts.push_back(std::stoull(tok));
      }
      return cmd_asym(opts, preset, pts, murty, out);
    }
    if (oraclecmd->parsed()) return cmd_oracle(opts, om, on, ofilter, ok, ol, osym, odump, out);
    if (verifycmd->parsed()) return cmd_verify(suite, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace rectcount::cli
