// Command-line front end: fab, f, matrix, atable, vpart, dn, verify, bench.

#include "tautring/json_io.hpp"
#include "tautring/tautring.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tautring;

enum class Format { text, json, csv };

struct RunConfig {
  Format format = Format::text;
  std::string cache_path;
  unsigned threads = 1;
};

std::string csv_params(const CheckResult &c) {
  std::string s;
  for (const auto &p : c.params) {
    if (!s.empty())
      s += ';';
    std::visit(
        [&](const auto &v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, long>)
            s += std::to_string(v);
          else
            s += v;
        },
        p);
  }
  return s;
}

void print_scalar(const RunConfig &cfg, const Json &fields,
                  const std::string &value) {
  switch (cfg.format) {
  case Format::text:
    std::cout << value << '\n';
    break;
  case Format::json:
    std::cout << fields.dump() << '\n';
    break;
  case Format::csv: {
    std::string header, row;
    for (auto it = fields.begin(); it != fields.end(); ++it) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += it.key();
      row += it->is_string() ? it->get<std::string>() : it->dump();
    }
    std::cout << header << '\n' << row << '\n';
    break;
  }
  }
}

void print_matrix(const RunConfig &cfg, const FaberMatrix &fm, bool rank) {
  switch (cfg.format) {
  case Format::json:
    std::cout << to_json(fm).dump() << '\n';
    return;
  case Format::csv:
    std::cout << "L\\L'";
    for (const auto &c : fm.cols)
      std::cout << ',' << c;
    std::cout << '\n';
    for (std::size_t i = 0; i < fm.rows.size(); ++i) {
      std::cout << fm.rows[i];
      for (const auto &x : fm.entries[i])
        std::cout << ',' << to_string(x);
      std::cout << '\n';
    }
    return;
  case Format::text:
    if (rank) {
      std::cout << "rank " << *fm.rank << '\n';
      return;
    }
    std::cout << "V_" << fm.g << "^" << fm.k << " (" << fm.rows.size() << "x"
              << fm.cols.size() << ")\n";
    for (std::size_t i = 0; i < fm.rows.size(); ++i) {
      std::cout << fm.rows[i] << ':';
      for (const auto &x : fm.entries[i])
        std::cout << ' ' << to_string(x);
      std::cout << '\n';
    }
    return;
  }
}

void warn_formal(long g, const MultiIndex &m) {
  if (!is_geometric(g, m))
    std::cerr << "warning: g = " << g << ", |m| = " << m.degree()
              << " is outside 2 <= g, |m| <= g - 2; value is a formal extension\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact top intersections in the tautological ring of M_g"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache", cfg.cache_path,
                 "F-value cache file: loaded before, saved after");
  app.add_option("--threads", cfg.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  long g = 0, k = 0, n = 0, smax = 6;
  std::optional<long> gmax, s_single;
  std::string m_text, suite_name = "all";
  bool relation = false, with_rank = false;

  auto *fab = app.add_subcommand("fab", "Fab_g(m): kappa(m) = Fab_g(m) kappa_{g-2}");
  fab->add_option("--g", g)->required();
  fab->add_option("--m", m_text)->required();
  fab->add_flag("--relation", relation, "Also print the kappa relation");

  auto *f = app.add_subcommand("f", "F_{g,n}(m) by recursion");
  f->add_option("--g", g)->required();
  f->add_option("--m", m_text)->required();
  f->add_option("--n", n, "Number of psi insertions (default 0)")
      ->check(CLI::NonNegativeNumber);

  auto *matrix = app.add_subcommand("matrix", "Faber intersection matrix V_g^k");
  matrix->add_option("--g", g)->required();
  matrix->add_option("--k", k)->required();
  matrix->add_flag("--rank", with_rank, "Compute the exact rank");

  auto *atable = app.add_subcommand("atable", "a(s) for s = 1..smax");
  atable->add_option("--smax", smax, "Largest s (default 6)")
      ->check(CLI::PositiveNumber);
  atable->add_option("--s", s_single, "Compute a single s instead")
      ->check(CLI::PositiveNumber);

  auto *vpart = app.add_subcommand("vpart", "Vector partition number P(m)");
  vpart->add_option("--m", m_text)->required();

  auto *dn = app.add_subcommand("dn", "Double partition number D(n)");
  dn->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

  auto *verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("--suite", suite_name)
      ->check(CLI::IsMember(
          {"all", "fz", "taut", "bern", "zhou", "flemmas", "g6", "positivity"}));
  verify->add_option("--gmax", gmax, "Upper bound applied to every family")
      ->check(CLI::PositiveNumber);

  auto *bench = app.add_subcommand("bench", "Time V_g^k and report cache statistics");
  bench->add_option("--g", g)->required();
  bench->add_option("--k", k)->required();

  CLI11_PARSE(app, argc, argv);
  cfg.format = format_name == "json"  ? Format::json
               : format_name == "csv" ? Format::csv
                                      : Format::text;

  FaberEngine engine;
  int status = 0;
  try {
    if (!cfg.cache_path.empty() && std::filesystem::exists(cfg.cache_path))
      engine.cache().load(cfg.cache_path);

    if (*fab) {
      MultiIndex m = MultiIndex::parse(m_text);
      KappaRelation rel = engine.relation(g, m);
      Json j;
      j["g"] = g;
      j["m"] = m.to_string();
      j["value"] = to_string(rel.coefficient);
      if (relation)
        j["relation"] = rel.to_string();
      if (cfg.format == Format::text) {
        std::cout << to_string(rel.coefficient) << '\n';
        if (relation)
          std::cout << rel.to_string() << '\n';
      } else {
        print_scalar(cfg, j, to_string(rel.coefficient));
      }
    } else if (*f) {
      MultiIndex m = MultiIndex::parse(m_text);
      warn_formal(g, m);
      Rational v = engine.f_n_value(g, n, m);
      Json j;
      j["g"] = g;
      j["n"] = n;
      j["m"] = m.to_string();
      j["value"] = to_string(v);
      print_scalar(cfg, j, to_string(v));
    } else if (*matrix) {
      const bool rank = with_rank || cfg.format == Format::json;
      FaberMatrix fm = build_matrix(engine, g, k, cfg.threads, rank);
      print_matrix(cfg, fm, with_rank);
    } else if (*atable) {
      std::vector<ATableRow> rows;
      if (s_single) {
        const long s = *s_single;
        const long a = a_value(engine, s, std::nullopt, cfg.threads);
        rows.push_back({s, s + 2, 2 * s + 6, a, published_a(s),
                        faber_guess_f(s).get_si()});
      } else {
        rows = a_table(engine, smax, cfg.threads);
      }
      if (cfg.format == Format::csv)
        std::cout << "s,k,g,a,published,f,matches_published,matches_f\n";
      for (const auto &r : rows) {
        if (!r.matches_published())
          status = 1;
        if (cfg.format == Format::json) {
          std::cout << to_json(r).dump() << '\n';
        } else if (cfg.format == Format::csv) {
          std::cout << r.s << ',' << r.k << ',' << r.g << ',' << r.a << ','
                    << (r.published ? std::to_string(*r.published) : "")
                    << ',' << r.guess_f << ','
                    << (r.matches_published() ? "true" : "false") << ','
                    << (r.matches_guess() ? "true" : "false") << '\n';
        } else {
          std::cout << "a(" << r.s << ") = " << r.a << "  [g=" << r.g
                    << ", k=" << r.k << "]";
          if (r.published)
            std::cout << "  table " << *r.published
                      << (r.matches_published() ? " ok" : " MISMATCH");
          std::cout << "  f(s) = " << r.guess_f
                    << (r.matches_guess() ? "" : " (differs)") << '\n';
        }
      }
    } else if (*vpart) {
      MultiIndex m = MultiIndex::parse(m_text);
      Integer p = vector_partition_count(m);
      Json j;
      j["m"] = m.to_string();
      j["value"] = to_string(p);
      print_scalar(cfg, j, to_string(p));
    } else if (*dn) {
      Integer d = double_partition(n);
      Json j;
      j["n"] = n;
      j["value"] = to_string(d);
      print_scalar(cfg, j, to_string(d));
    } else if (*verify) {
      const Suite suite = *parse_suite(suite_name);
      const SuiteBounds bounds = SuiteBounds::with_gmax(gmax);
      auto results = run_checks(engine, suite, bounds, cfg.threads);
      if (cfg.format == Format::csv)
        std::cout << "id,params,lhs,rhs,pass\n";
      for (const auto &c : results) {
        if (!c.pass)
          status = 1;
        if (cfg.format == Format::csv)
          std::cout << c.id << ',' << csv_params(c) << ',' << to_string(c.lhs)
                    << ',' << to_string(c.rhs) << ','
                    << (c.pass ? "true" : "false") << '\n';
        else
          std::cout << to_json(c).dump() << '\n';
      }
      if (suite == Suite::all || suite == Suite::positivity) {
        auto report = positivity_scan(engine.constants(), bounds.positivity_deg,
                                      bounds.positivity_g);
        if (cfg.format != Format::csv)
          std::cout << to_json(report).dump() << '\n';
        for (const auto &v : report.violations)
          std::cerr << "positivity (report only): " << v << '\n';
      }
    } else if (*bench) {
      using clock = std::chrono::steady_clock;
      engine.cache().reset_stats();
      auto t0 = clock::now();
      FaberMatrix fm = build_matrix(engine, g, k, cfg.threads, false);
      auto t1 = clock::now();
      long rank = exact_rank(fm);
      auto t2 = clock::now();
      const auto stats = engine.cache_stats();
      auto ms = [](auto d) {
        return std::chrono::duration<double, std::milli>(d).count();
      };
      Json j;
      j["g"] = g;
      j["k"] = k;
      j["rows"] = fm.rows.size();
      j["cols"] = fm.cols.size();
      j["rank"] = rank;
      j["build_ms"] = ms(t1 - t0);
      j["rank_ms"] = ms(t2 - t1);
      j["cache_hits"] = stats.hits;
      j["cache_misses"] = stats.misses;
      j["cache_entries"] = engine.cache().size();
      j["constant_entries"] = engine.constants().size();
      j["threads"] = cfg.threads;
      if (cfg.format == Format::text) {
        std::cout << "V_" << g << "^" << k << ": " << fm.rows.size() << "x"
                  << fm.cols.size() << ", rank " << rank << "\n"
                  << "build " << j["build_ms"].get<double>() << " ms, rank "
                  << j["rank_ms"].get<double>() << " ms\n"
                  << "F-cache hits " << stats.hits << ", misses "
                  << stats.misses << ", entries " << engine.cache().size()
                  << '\n';
      } else {
        print_scalar(cfg, j, "");
      }
    }

    if (!cfg.cache_path.empty())
      engine.cache().save(cfg.cache_path);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
