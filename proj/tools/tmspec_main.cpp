// Command-line front end. Subcommands: sigma, valuations, equiv, disjoint,
// correlate, stabilize, orthogonality, rows, counterexample, toeplitz,
// generate. Exit codes: 0 ok, 1 violated invariant, 2 usage/config error.
// Output is byte-identical for identical configurations regardless of the
// thread count (all reductions are exact integer sums).

#include "tmspec/correlation.hpp"
#include "tmspec/counterexample.hpp"
#include "tmspec/experiments.hpp"
#include "tmspec/io.hpp"
#include "tmspec/moebius.hpp"
#include "tmspec/morse.hpp"
#include "tmspec/odd_chain.hpp"
#include "tmspec/rational.hpp"
#include "tmspec/sigma.hpp"
#include "tmspec/toeplitz.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace tmspec;

namespace {

struct GlobalOpts {
  std::string format = "table"; // table | csv | json
  std::string out_path;
  int threads = 0;
  std::uint64_t sieve_limit = 10000000;
};

void emit(const GlobalOpts &g, const std::string &text) {
  if (g.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out_path, std::ios::binary);
  if (!out)
    throw CLI::ValidationError("--out", "cannot open " + g.out_path);
  out << text;
}

// Builds a table no larger than the configured cap; demanding more is a
// loud capacity error, never a silent truncation.
MoebiusTable make_sieve(const GlobalOpts &g, std::uint64_t needed) {
  if (needed > g.sieve_limit)
    throw CLI::ValidationError(
        "capacity", "needs mu up to " + std::to_string(needed) + " but --sieve-limit is " +
                        std::to_string(g.sieve_limit));
  return MoebiusTable(needed);
}

struct Range {
  std::uint64_t lo = 0, hi = 0;
};

// "k" or "a..b", inclusive
Range parse_range(const std::string &text) {
  Range r;
  const auto dots = text.find("..");
  const auto parse_u64 = [](std::string_view s) {
    std::uint64_t v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
      throw CLI::ValidationError("range", "expected a natural number, got '" + std::string(s) +
                                              "'");
    return v;
  };
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_u64(text);
  } else {
    r.lo = parse_u64(std::string_view(text).substr(0, dots));
    r.hi = parse_u64(std::string_view(text).substr(dots + 2));
  }
  if (r.lo > r.hi)
    throw CLI::ValidationError("range", "empty range " + text);
  return r;
}

BitSeq make_bit_seq(const std::string &name) {
  if (name == "tm")
    return [](std::uint64_t n) { return thue_morse_bit(n); };
  if (name == "thue-toeplitz" || name == "thue_toeplitz")
    return [](std::uint64_t n) { return thue_toeplitz_bit(n); };
  const MorseSpec spec = MorseSpec::parse(name);
  return [spec](std::uint64_t n) { return spec.bit(n); };
}

bool seq_is_tm(const std::string &name) {
  return name == "tm" || name == "01*";
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t N) {
  std::vector<std::uint64_t> cps;
  for (std::uint64_t c = 10; c < N; c *= 10)
    cps.push_back(c);
  cps.push_back(N);
  return cps;
}

std::string correlation_csv(std::span<const CorrelationReport> reports) {
  std::string s = "k,N,sum,empirical,exact,deviation\n";
  for (const auto &r : reports) {
    s += std::to_string(r.k) + "," + std::to_string(r.N) + "," + std::to_string(r.sum) + "," +
         r.empirical.str() + "," + (r.exact ? r.exact->str() : "") + "," +
         (r.exact ? format_double(r.deviation) : "") + "\n";
  }
  return s;
}

json correlation_json(const CorrelationReport &r) {
  json j;
  j["k"] = r.k;
  j["N"] = r.N;
  j["sum"] = r.sum;
  j["empirical"] = r.empirical.str();
  j["empirical_float"] = r.empirical.to_double();
  if (r.exact) {
    j["exact"] = r.exact->str();
    j["deviation"] = r.deviation;
  } else {
    j["exact"] = nullptr;
  }
  return j;
}

std::string render_correlations(const GlobalOpts &g, const std::string &experiment,
                                const json &params, std::span<const CorrelationReport> reports) {
  if (g.format == "csv")
    return correlation_csv(reports);
  if (g.format == "json") {
    json j;
    j["experiment"] = experiment;
    j["params"] = params;
    j["checkpoints"] = json::array();
    for (const auto &r : reports)
      j["checkpoints"].push_back(correlation_json(r));
    return j.dump(2) + "\n";
  }
  std::string s;
  for (const auto &r : reports) {
    s += "k=" + std::to_string(r.k) + " N=" + std::to_string(r.N) +
         " empirical=" + r.empirical.str() + " (" + format_double(r.empirical.to_double()) + ")";
    if (r.exact)
      s += " exact=" + r.exact->str() + " deviation=" + format_double(r.deviation);
    s += "\n";
  }
  return s;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact and empirical spectral/Moebius computations for Thue-Morse and "
               "Toeplitz sequences"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "write output to a file instead of stdout");
  app.add_option("--threads", g.threads, "worker threads for the kernels (0 = library default)");
  app.add_option("--sieve-limit", g.sieve_limit, "hard cap for Moebius sieve allocations")
      ->capture_default_str();

  // sigma <k|a..b> [--odd]
  auto *cmd_sigma = app.add_subcommand("sigma", "exact spectral coefficients sigma(k)");
  std::string sigma_range;
  bool sigma_odd = false;
  cmd_sigma->add_option("range", sigma_range, "k or a..b (inclusive)")->required();
  cmd_sigma->add_flag("--odd", sigma_odd, "only odd k");

  // valuations <K|a..b>
  auto *cmd_val = app.add_subcommand("valuations", "2-adic valuation reports for odd K");
  std::string val_range;
  cmd_val->add_option("range", val_range, "odd K or a..b (inclusive)")->required();

  // equiv <K> <L>
  auto *cmd_equiv = app.add_subcommand("equiv", "test sigma(2K+1) = sigma(2L+1)");
  std::uint64_t eq_K = 0, eq_L = 0;
  cmd_equiv->add_option("K", eq_K)->required();
  cmd_equiv->add_option("L", eq_L)->required();

  // disjoint <r> <s>
  auto *cmd_disjoint = app.add_subcommand("disjoint", "witness |sigma(tr)| != |sigma(ts)|");
  std::uint64_t dj_r = 0, dj_s = 0, dj_bound = std::uint64_t(1) << 16;
  cmd_disjoint->add_option("r", dj_r)->required();
  cmd_disjoint->add_option("s", dj_s)->required();
  cmd_disjoint->add_option("--t-bound", dj_bound, "scan cap")->capture_default_str();

  // correlate <seq> <k> <N>
  auto *cmd_corr = app.add_subcommand("correlate", "empirical autocorrelation of a sequence");
  std::string corr_seq;
  std::uint64_t corr_k = 0, corr_N = 0;
  cmd_corr->add_option("seq", corr_seq, "tm | thue-toeplitz | morse spec")->required();
  cmd_corr->add_option("k", corr_k)->required();
  cmd_corr->add_option("N", corr_N)->required();

  // stabilize <seq> <s> <N> --levels
  auto *cmd_stab = app.add_subcommand("stabilize", "correlations at the q_k scales of a "
                                                   "TM-type spec against |sigma(s)|");
  std::string stab_seq;
  std::uint64_t stab_s = 0, stab_N = 0;
  std::vector<unsigned> stab_levels;
  cmd_stab->add_option("seq", stab_seq, "TM-type morse spec")->required();
  cmd_stab->add_option("s", stab_s)->required();
  cmd_stab->add_option("N", stab_N)->required();
  cmd_stab->add_option("--levels", stab_levels, "q_k levels")->required()->delimiter(',');

  // orthogonality <seq> <N> [--checkpoints]
  auto *cmd_orth = app.add_subcommand("orthogonality", "averages of the sequence against mu");
  std::string orth_seq;
  std::uint64_t orth_N = 0;
  std::vector<std::uint64_t> orth_cps;
  cmd_orth->add_option("seq", orth_seq, "tm | thue-toeplitz | morse spec")->required();
  cmd_orth->add_option("N", orth_N)->required();
  cmd_orth->add_option("--checkpoints", orth_cps, "partial-sum checkpoints (default: decades)")
      ->delimiter(',');

  // rows <stage> <N> [--cylinder a:l:v0,v1,...] [--seed]
  auto *cmd_rows = app.add_subcommand("rows", "row decomposition of a weighted Moebius sum "
                                              "on the thue-toeplitz sequence");
  unsigned rows_stage = 4;
  std::uint64_t rows_N = 0;
  std::string rows_cyl;
  std::uint64_t rows_seed = 0;
  cmd_rows->add_option("stage", rows_stage, "stage n (period 2^n)")->required();
  cmd_rows->add_option("N", rows_N)->required();
  cmd_rows->add_option("--cylinder", rows_cyl,
                       "offset:length:v0,v1,... (rationals; default: indicator of 0^l)");
  cmd_rows->add_option("--seed", rows_seed, "random rational cylinder from this seed");

  // counterexample <N> [--base]
  auto *cmd_cex = app.add_subcommand("counterexample", "non-regular Toeplitz sequence whose "
                                                       "correlation with mu stays positive");
  std::uint64_t cex_N = 0, cex_base = 5;
  std::vector<std::uint64_t> cex_cps;
  cmd_cex->add_option("N", cex_N)->required();
  cmd_cex->add_option("--base", cex_base, "progression base (a_n = base^n)")
      ->capture_default_str();
  cmd_cex->add_option("--checkpoints", cex_cps, "report checkpoints (default: decades)")
      ->delimiter(',');

  // toeplitz thue --stage --horizon
  auto *cmd_toep = app.add_subcommand("toeplitz", "progression-fill Toeplitz construction");
  std::string toep_family;
  unsigned toep_stage = 4;
  std::uint64_t toep_horizon = 63;
  cmd_toep->add_option("family", toep_family, "only 'thue' is built in")->required();
  cmd_toep->add_option("--stage", toep_stage, "number of fill stages")->capture_default_str();
  cmd_toep->add_option("--horizon", toep_horizon, "last index")->capture_default_str();

  // generate <seq> <N>
  auto *cmd_gen = app.add_subcommand("generate", "print the first N symbols of a sequence");
  std::string gen_seq;
  std::uint64_t gen_N = 0;
  cmd_gen->add_option("seq", gen_seq, "tm | thue-toeplitz | morse spec")->required();
  cmd_gen->add_option("N", gen_N)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

#ifdef _OPENMP
  if (g.threads > 0)
    omp_set_num_threads(g.threads);
#endif

  try {
    SigmaCache cache;

    if (*cmd_sigma) {
      const Range r = parse_range(sigma_range);
      std::string s;
      json arr = json::array();
      for (std::uint64_t k = r.lo; k <= r.hi; ++k) {
        if (sigma_odd && k % 2 == 0)
          continue;
        const Rational v = sigma_hat(k, cache);
        if (g.format == "json")
          arr.push_back({{"k", k}, {"sigma", v.str()}});
        else if (g.format == "csv")
          s += std::to_string(k) + "," + v.str() + "\n";
        else
          s += std::to_string(k) + ", " + v.str() + "\n";
      }
      if (g.format == "json")
        s = arr.dump(2) + "\n";
      else if (g.format == "csv")
        s = "k,sigma\n" + s;
      emit(g, s);
      return 0;
    }

    if (*cmd_val) {
      const Range r = parse_range(val_range);
      if (r.lo % 2 == 0)
        throw CLI::ValidationError("valuations", "range must start at an odd K");
      bool all_hold = true;
      std::string s;
      json arr = json::array();
      for (std::uint64_t K = r.lo; K <= r.hi; K += 2) {
        const ValuationReport rep = valuation_report(K, cache);
        all_hold = all_hold && rep.lemma_holds;
        if (g.format == "json") {
          json j{{"K", K},
                 {"sigma", rep.sigma.str()},
                 {"is_zero", rep.is_zero},
                 {"l", rep.l},
                 {"lemma_holds", rep.lemma_holds}};
          j["v2"] = rep.v2 ? json(*rep.v2) : json(nullptr);
          arr.push_back(std::move(j));
        } else {
          s += std::to_string(K) + "," + rep.sigma.str() + "," + (rep.is_zero ? "1" : "0") +
               "," + (rep.v2 ? std::to_string(*rep.v2) : "") + "," + std::to_string(rep.l) +
               "," + (rep.lemma_holds ? "1" : "0") + "\n";
        }
      }
      if (g.format == "json")
        s = arr.dump(2) + "\n";
      else
        s = "K,sigma,is_zero,v2,l,lemma_holds\n" + s;
      emit(g, s);
      return all_hold ? 0 : 1;
    }

    if (*cmd_equiv) {
      const bool eq = tm_equivalent(eq_K, eq_L, cache);
      if (g.format == "json")
        emit(g, json{{"K", eq_K}, {"L", eq_L}, {"tm_equivalent", eq}}.dump(2) + "\n");
      else
        emit(g, std::string(eq ? "true" : "false") + "\n");
      return 0;
    }

    if (*cmd_disjoint) {
      DisjointnessWitness w;
      try {
        w = disjointness_witness(dj_r, dj_s, cache, dj_bound);
      } catch (const std::domain_error &e) {
        throw CLI::ValidationError("disjoint", e.what());
      }
      json j{{"r", w.r}, {"s", w.s}, {"found", w.found}};
      if (w.found) {
        j["t"] = w.t;
        j["c1"] = w.c1.str();
        j["c2"] = w.c2.str();
      } else {
        j["scan_bound"] = w.scan_bound;
      }
      emit(g, j.dump(2) + "\n");
      return w.found ? 0 : 1;
    }

    if (*cmd_corr) {
      const BitSeq seq = make_bit_seq(corr_seq);
      std::optional<Rational> exact;
      if (seq_is_tm(corr_seq))
        exact = sigma_hat(corr_k, cache);
      const CorrelationReport rep = empirical_correlation(seq, corr_k, corr_N, exact);
      emit(g, render_correlations(g, "correlate",
                                  json{{"seq", corr_seq}, {"k", corr_k}, {"N", corr_N}},
                                  std::span(&rep, 1)));
      return 0;
    }

    if (*cmd_stab) {
      const MorseSpec spec = MorseSpec::parse(stab_seq);
      const auto reports = stabilization_check(spec, stab_s, stab_levels, stab_N, cache);
      emit(g, render_correlations(
                  g, "stabilize",
                  json{{"seq", spec.str()}, {"s", stab_s}, {"N", stab_N}}, reports));
      return 0;
    }

    if (*cmd_orth) {
      const BitSeq seq = make_bit_seq(orth_seq);
      const auto sign = [&seq](std::uint64_t n) { return 1 - 2 * seq(n); };
      auto cps = orth_cps.empty() ? default_checkpoints(orth_N) : orth_cps;
      const MoebiusTable mu = make_sieve(g, cps.back());
      const auto points = moebius_series(sign, mu, cps);
      if (g.format == "csv") {
        std::string s = "N,value\n";
        for (const auto &p : points)
          s += std::to_string(p.N) + "," + format_double(p.value.to_double()) + "\n";
        emit(g, s);
      } else if (g.format == "json") {
        json j{{"experiment", "orthogonality"},
               {"params", {{"seq", orth_seq}, {"N", orth_N}}},
               {"checkpoints", json::array()}};
        for (const auto &p : points)
          j["checkpoints"].push_back({{"N", p.N},
                                      {"sum", p.sum},
                                      {"value", p.value.str()},
                                      {"abs", std::abs(p.value.to_double())}});
        emit(g, j.dump(2) + "\n");
      } else {
        std::string s;
        for (const auto &p : points)
          s += "N=" + std::to_string(p.N) + " S_N=" + p.value.str() + " |S_N|=" +
               format_double(std::abs(p.value.to_double())) + "\n";
        emit(g, s);
      }
      return 0;
    }

    if (*cmd_rows) {
      CylinderFunction f;
      if (!rows_cyl.empty()) {
        // offset:length:v0,v1,...
        std::istringstream in(rows_cyl);
        std::string off_s, len_s, vals_s;
        if (!std::getline(in, off_s, ':') || !std::getline(in, len_s, ':') ||
            !std::getline(in, vals_s))
          throw CLI::ValidationError("--cylinder", "expected offset:length:v0,v1,...");
        std::vector<Rational> vals;
        std::istringstream vin(vals_s);
        std::string item;
        while (std::getline(vin, item, ','))
          vals.push_back(Rational::parse(item));
        f = CylinderFunction::from_values(std::stoll(off_s),
                                          static_cast<unsigned>(std::stoul(len_s)),
                                          std::move(vals));
      } else if (cmd_rows->count("--seed")) {
        std::mt19937_64 rng(rows_seed);
        const unsigned len = 1 + static_cast<unsigned>(rng() % 6);
        std::vector<Rational> vals(std::size_t(1) << len);
        for (auto &v : vals)
          v = Rational(BigInt(static_cast<long long>(rng() % 17) - 8),
                       BigInt(1 + static_cast<long long>(rng() % 4)));
        f = CylinderFunction::from_values(0, len, std::move(vals));
      } else {
        f = CylinderFunction::from_values(0, 2, {Rational(1)}); // indicator of 00
      }
      const MoebiusTable mu = make_sieve(g, rows_N);
      const auto dec = row_decomposition(
          f, [](std::uint64_t n) { return thue_toeplitz_bit(n); },
          thue_toeplitz_stage(rows_stage), mu, rows_N);
      const Rational F = f.bound();
      const bool boundary_ok =
          abs(dec.prefix_sum + dec.suffix_sum) <= Rational(BigInt(dec.period), 1) * F;
      bool rows_ok = true;
      for (const auto &row : dec.rows)
        rows_ok = rows_ok && abs(row) <= Rational(BigInt(dec.M), 1) * F;
      json j{{"experiment", "rows"},
             {"params",
              {{"stage", rows_stage},
               {"N", rows_N},
               {"period", dec.period},
               {"cylinder_offset", f.offset},
               {"cylinder_length", f.length}}},
             {"prefix_len", dec.prefix_len},
             {"suffix_len", dec.suffix_len},
             {"prefix_sum", dec.prefix_sum.str()},
             {"suffix_sum", dec.suffix_sum.str()},
             {"total", dec.total.str()},
             {"M", dec.M},
             {"hole_free_rows", dec.hole_free_rows},
             {"boundary_bound_ok", boundary_ok},
             {"row_bound_ok", rows_ok}};
      if (g.format == "csv") {
        std::string s = "row,sum,touches_hole\n";
        for (std::size_t i = 0; i < dec.rows.size(); ++i)
          s += std::to_string(i + 1) + "," + dec.rows[i].str() + "," +
               (dec.row_touches_hole[i] ? "1" : "0") + "\n";
        emit(g, s);
      } else {
        json rows = json::array();
        for (std::size_t i = 0; i < dec.rows.size(); ++i)
          rows.push_back({{"row", i + 1},
                          {"sum", dec.rows[i].str()},
                          {"touches_hole", static_cast<bool>(dec.row_touches_hole[i])}});
        j["rows"] = std::move(rows);
        emit(g, j.dump(2) + "\n");
      }
      return boundary_ok && rows_ok ? 0 : 1;
    }

    if (*cmd_cex) {
      if (cex_base < 5)
        throw CLI::ValidationError("--base", "base < 5 gives rho > 1/4");
      const MoebiusTable mu = make_sieve(g, cex_N);
      const auto cs = build_counterexample(cex_base, cex_N, mu);
      auto cps = cex_cps.empty() ? default_checkpoints(cex_N) : cex_cps;
      const auto scan = counterexample_scan(cs, mu, cex_N, cps);
      const bool ok = scan.inequality_ok_all && scan.noninitial_ok_all;
      if (g.format == "csv") {
        std::string s = "N,sum,squarefree,noninitial,average,lower_bound_ok,noninitial_ok\n";
        for (const auto &cp : scan.checkpoints)
          s += std::to_string(cp.N) + "," + std::to_string(cp.sum) + "," +
               std::to_string(cp.squarefree) + "," + std::to_string(cp.noninitial) + "," +
               format_double(cp.average.to_double()) + "," + (cp.lower_bound_ok ? "1" : "0") +
               "," + (cp.noninitial_ok ? "1" : "0") + "\n";
        emit(g, s);
      } else {
        json j{{"experiment", "counterexample"},
               {"params", {{"base", cex_base}, {"N", cex_N}, {"rho", cs.rho.str()}}},
               {"inequality_ok_all", scan.inequality_ok_all},
               {"noninitial_ok_all", scan.noninitial_ok_all},
               {"checkpoints", json::array()}};
        for (const auto &cp : scan.checkpoints)
          j["checkpoints"].push_back({{"N", cp.N},
                                      {"sum", cp.sum},
                                      {"squarefree", cp.squarefree},
                                      {"noninitial", cp.noninitial},
                                      {"average", cp.average.str()},
                                      {"average_float", cp.average.to_double()},
                                      {"lower_bound_ok", cp.lower_bound_ok},
                                      {"noninitial_ok", cp.noninitial_ok}});
        emit(g, j.dump(2) + "\n");
      }
      return ok ? 0 : 1;
    }

    if (*cmd_toep) {
      if (toep_family != "thue")
        throw CLI::ValidationError("toeplitz", "unknown family '" + toep_family + "'");
      const PartialSequence seq = thue_toeplitz_build(toep_stage, toep_horizon);
      const auto stage = seq.stage(toep_stage);
      std::string pattern;
      for (std::uint64_t i = 0; i <= toep_horizon; ++i)
        pattern.push_back(seq.filled(i) ? static_cast<char>('0' + seq.at(i)) : '?');
      if (g.format == "json") {
        json j{{"stage", toep_stage}, {"horizon", toep_horizon}, {"pattern", pattern}};
        if (stage) {
          j["period"] = stage->period;
          j["holes"] = stage->holes;
          std::string b;
          for (std::uint64_t i = 0; i + 1 < stage->period && i <= toep_horizon; ++i)
            b.push_back(static_cast<char>('0' + seq.at(i)));
          j["block"] = b;
        }
        emit(g, j.dump(2) + "\n");
      } else {
        std::string s = "pattern: " + pattern + "\n";
        if (stage) {
          s += "period: " + std::to_string(stage->period) + "\n";
          std::string b;
          for (std::uint64_t i = 0; i + 1 < stage->period && i <= toep_horizon; ++i)
            b.push_back(static_cast<char>('0' + seq.at(i)));
          s += "block: " + b + "\n";
          s += "hole residue: " + std::to_string(stage->holes[0]) + "\n";
        }
        emit(g, s);
      }
      return 0;
    }

    if (*cmd_gen) {
      const BitSeq seq = make_bit_seq(gen_seq);
      std::string s;
      s.reserve(gen_N + 1);
      for (std::uint64_t n = 0; n < gen_N; ++n)
        s.push_back(static_cast<char>('0' + seq(n)));
      s.push_back('\n');
      emit(g, s);
      return 0;
    }
  } catch (const CLI::ValidationError &e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::range_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
