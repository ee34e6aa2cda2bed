// pfd: product-free density toolkit.
// Subcommands: search, lp, certify, construct, sweep, bench.
// Exit codes: 0 success, 1 verification failure, 2 precondition/cap,
// 3 precision ambiguity.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pfd/certificate.hpp"
#include "pfd/construction.hpp"
#include "pfd/duality.hpp"
#include "pfd/factorization.hpp"
#include "pfd/floors.hpp"
#include "pfd/lp.hpp"
#include "pfd/search.hpp"
#include "pfd/sieve.hpp"
#include "pfd/simplex.hpp"

namespace {

using namespace pfd;
using nlohmann::json;

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    std::uint64_t n = std::stoull(s);
    return {n, n};
  }
  return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw PreconditionError("cannot open output file " + path);
  return file;
}

// Sieve cache (PFD_CACHE_DIR): magic, version, X, packed table.
constexpr char kCacheMagic[8] = {'P', 'F', 'D', 'O', 'M', 'G', '0', '1'};

OmegaSieve cached_sieve(std::uint64_t X) {
  const char* dir = std::getenv("PFD_CACHE_DIR");
  if (!dir) return OmegaSieve(X);
  std::filesystem::path p =
      std::filesystem::path(dir) / ("omega-" + std::to_string(X) + ".bin");
  // Cache files only witness the table; the sieve is rebuilt if anything is off.
  if (std::ifstream in(p, std::ios::binary); in) {
    char magic[8];
    std::uint32_t version = 0;
    std::uint64_t stored_x = 0;
    in.read(magic, 8);
    in.read(reinterpret_cast<char*>(&version), 4);
    in.read(reinterpret_cast<char*>(&stored_x), 8);
    if (in && std::equal(magic, magic + 8, kCacheMagic) && version == 1 &&
        stored_x == X) {
      std::vector<std::uint8_t> table(X + 1);
      in.read(reinterpret_cast<char*>(table.data()),
              static_cast<std::streamsize>(table.size()));
      if (in) {
        try {
          return OmegaSieve::from_table(X, std::move(table));
        } catch (const VerificationError&) {
          // corrupt table body: fall through and resieve
        }
      }
    }
  }
  OmegaSieve sieve(X);
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  std::uint32_t version = 1;
  out.write(kCacheMagic, 8);
  out.write(reinterpret_cast<const char*>(&version), 4);
  out.write(reinterpret_cast<const char*>(&X), 8);
  out.write(reinterpret_cast<const char*>(sieve.table().data()),
            static_cast<std::streamsize>(sieve.table().size()));
  return sieve;
}

json search_report(const SearchResult& r) {
  json witness = json::array();
  for (auto a : r.best_set.members()) witness.push_back(a);
  return json{{"n", r.n},
              {"density", to_string(r.density)},
              {"witness", witness},
              {"optimal", r.proof_of_optimality},
              {"nodes", r.nodes_explored}};
}

int cmd_search(const std::string& range, std::uint64_t budget,
               const std::string& format, const std::string& out_path) {
  auto [a, b] = parse_range(range);
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);
  if (format == "csv") {
    os << "n,density,optimal\n";
    for (std::uint64_t n = a; n <= b; ++n) {
      auto r = max_product_free(n, budget);
      os << n << "," << r.density << "," << (r.proof_of_optimality ? 1 : 0) << "\n";
    }
    return 0;
  }
  json rows = json::array();
  for (std::uint64_t n = a; n <= b; ++n) rows.push_back(search_report(max_product_free(n, budget)));
  if (format == "json") {
    os << (rows.size() == 1 ? rows[0] : rows).dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      os << "n=" << r["n"] << " density=" << r["density"].get<std::string>()
         << " witness=" << r["witness"].dump()
         << " optimal=" << (r["optimal"].get<bool>() ? "true" : "false")
         << " nodes=" << r["nodes"] << "\n";
  }
  return 0;
}

int cmd_lp(std::uint64_t n, const std::string& export_path,
           const std::string& out_path) {
  LpModel primal = build_primal(n);
  LpModel dual = build_dual(n);
  LpSolution ps = solve(primal);
  LpSolution ds = solve(dual);
  if (!export_path.empty()) {
    std::ofstream ex(export_path);
    if (!ex) throw PreconditionError("cannot open export file " + export_path);
    write_lp(ex, primal);
  }
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);
  Rat gap = ds.objective_value - ps.objective_value;
  os << "n=" << n << " L_P_opt=" << ps.objective_value
     << " L_D_opt=" << ds.objective_value << " duality_gap=" << gap
     << " primal_pivots=" << ps.pivot_count << " dual_pivots=" << ds.pivot_count
     << "\n";
  return gap == 0 ? 0 : 1;
}

int cmd_certify(std::optional<std::uint64_t> X, std::optional<std::uint64_t> k,
                std::optional<std::uint64_t> N_direct, std::optional<std::uint64_t> n,
                const std::string& check_path, const std::string& emit_path,
                const std::string& out_path) {
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);

  if (!check_path.empty()) {
    std::ifstream in(check_path);
    if (!in) throw PreconditionError("cannot open certificate " + check_path);
    std::stringstream buf;
    buf << in.rdbuf();
    DualCertificate cert = certificate_from_json(buf.str());
    FeasibilityReport rep = recheck_certificate(cert);
    for (const auto& line : rep.checks) os << line << "\n";
    if (!rep.feasible) {
      os << "INFEASIBLE: " << rep.witness << "\n";
      return 1;
    }
    os << "certificate verified: objective=" << cert.objective << "\n";
    return 0;
  }

  if (n && !X) {
    BoundReport rep = density_upper_bound(*n);
    os << "n=" << rep.n << " X=" << rep.X << " k=" << rep.k
       << " bound=" << rep.certified_upper_bound_on_DN
       << " mertens_floor~=" << to_double(rep.mertens_floor)
       << " empirical_c~=" << rep.empirical_c << "\n";
    for (const auto& t : rep.trail) os << "  " << t << "\n";
    return 0;
  }

  if (!X) throw PreconditionError("certify: need --X (with --N or --n) or --check");
  Factorization N;
  if (N_direct)
    N = factorize(*N_direct);
  else if (n)
    N = auxiliary_modulus(*n).N;
  else
    throw PreconditionError("certify: need --N or --n alongside --X");
  DualCertificate cert = build_certificate(*X, k, N);
  FeasibilityReport rep = verify_feasibility(cert);
  os << "X=" << cert.X << " k=" << cert.k << " A=" << cert.A
     << " S_k=" << cert.S_k << " objective=" << cert.objective
     << " feasible=" << (rep.feasible ? "true" : "false") << "\n";
  for (const auto& line : rep.checks) os << "  " << line << "\n";
  if (!emit_path.empty()) {
    std::ofstream ef(emit_path);
    if (!ef) throw PreconditionError("cannot open " + emit_path);
    ef << certificate_to_json(cert) << "\n";
  }
  if (!rep.feasible) {
    os << "INFEASIBLE: " << rep.witness << "\n";
    return 1;
  }
  return 0;
}

int cmd_construct(std::uint64_t x, const std::string& interval, bool do_materialize,
                  const std::string& out_path) {
  auto comma = interval.find(',');
  if (comma == std::string::npos)
    throw PreconditionError("construct: --interval expects lo,hi");
  std::uint64_t lo = std::stoull(interval.substr(0, comma));
  std::uint64_t hi = std::stoull(interval.substr(comma + 1));
  IntervalFamily fam = build_family(x, lo, hi);
  StructuralProof proof = verify_product_free_structural(fam);
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);
  os << family_to_json(fam) << "\n";
  if (!proof.valid) return 1;
  if (do_materialize) {
    ResidueSet s = materialize(fam);
    bool ok = is_product_free(s);
    os << "materialized " << s.size() << "/" << s.n
       << " residues, product-free oracle: " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) return 1;
  }
  return 0;
}

int cmd_sweep(const std::string& range, const std::string& out_path) {
  auto [a, b] = parse_range(range);
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);
  os << "n,density,eq_simple_rhs~,bound_ok\n";
  bool all_ok = true;
  for (std::uint64_t n = a; n <= b; ++n) {
    auto r = max_product_free(n);
    std::string rhs = "-";
    bool ok = true;
    if (n >= 8) {
      Rat lower = simple_bound_lower(n);
      ok = r.density <= lower;
      rhs = std::to_string(to_double(lower));
    }
    all_ok = all_ok && ok;
    os << n << "," << r.density << "," << rhs << "," << (ok ? 1 : 0) << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_bench(std::uint64_t sieve_limit, std::uint64_t lp_n, std::uint64_t search_n,
              const std::string& out_path) {
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);
  os << "task,size,wall_ms,rate\n";
  using clock = std::chrono::steady_clock;
  if (sieve_limit >= 2) {
    auto t0 = clock::now();
    OmegaSieve sieve = cached_sieve(sieve_limit);
    double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    os << "sieve," << sieve.limit() << "," << ms << ","
       << static_cast<double>(sieve.limit()) / (ms / 1000.0) << "\n";
  }
  if (lp_n >= 2) {
    auto t0 = clock::now();
    LpSolution s = solve(build_primal(lp_n));
    double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    os << "simplex," << lp_n << "," << ms << ","
       << static_cast<double>(s.pivot_count) / (ms / 1000.0) << "\n";
  }
  if (search_n >= 2) {
    auto t0 = clock::now();
    SearchResult r = max_product_free(search_n);
    double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    os << "search," << search_n << "," << ms << ","
       << static_cast<double>(r.nodes_explored) / (ms / 1000.0) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"product-free density toolkit"};
  app.require_subcommand(1);
  std::string format = "text", out_path, export_path, check_path, emit_path;
  std::string range, interval = "2,3";
  std::uint64_t budget = UINT64_MAX, n_lp = 0, x_construct = 6;
  std::uint64_t bench_sieve = 0, bench_lp = 0, bench_search = 0;
  std::optional<std::uint64_t> X, k, N_direct, n_certify;
  bool do_materialize = false;
  int threads = 1;
  app.add_option("--threads", threads, "worker cap (results are thread-count independent)");

  auto* search = app.add_subcommand("search", "exact D(n) by branch and bound");
  search->add_option("--n,--range", range, "modulus or a..b range")->required();
  search->add_option("--budget", budget, "node budget");
  search->add_option("--format", format, "text|json|csv");
  search->add_option("--output", out_path);

  auto* lp = app.add_subcommand("lp", "solve (P_n) and (D_n) exactly");
  lp->add_option("--n", n_lp)->required();
  lp->add_option("--export", export_path, "write the primal model in pfd-lp format");
  lp->add_option("--output", out_path);

  auto* certify = app.add_subcommand("certify", "mass-shifted dual certificates");
  certify->add_option("--X", X);
  certify->add_option("--k", k);
  certify->add_option("--N", N_direct, "explicit modulus N");
  certify->add_option("--n", n_certify, "derive X, N from n");
  certify->add_option("--check", check_path, "re-verify a certificate file");
  certify->add_option("--emit-certificate", emit_path);
  certify->add_option("--output", out_path);

  auto* construct = app.add_subcommand("construct", "interval family mod ell_x^2");
  construct->add_option("--x", x_construct)->required();
  construct->add_option("--interval", interval, "lo,hi");
  construct->add_flag("--materialize", do_materialize);
  construct->add_option("--output", out_path);

  auto* sweep = app.add_subcommand("sweep", "bound envelopes across an n grid");
  sweep->add_option("--n,--range", range)->required();
  sweep->add_option("--output", out_path);

  auto* bench = app.add_subcommand("bench", "throughput benchmarks");
  bench->add_option("--sieve", bench_sieve);
  bench->add_option("--lp", bench_lp);
  bench->add_option("--search", bench_search);
  bench->add_option("--output", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (search->parsed()) return cmd_search(range, budget, format, out_path);
    if (lp->parsed()) return cmd_lp(n_lp, export_path, out_path);
    if (certify->parsed())
      return cmd_certify(X, k, N_direct, n_certify, check_path, emit_path, out_path);
    if (construct->parsed())
      return cmd_construct(x_construct, interval, do_materialize, out_path);
    if (sweep->parsed()) return cmd_sweep(range, out_path);
    if (bench->parsed()) return cmd_bench(bench_sieve, bench_lp, bench_search, out_path);
  } catch (const pfd::PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return 3;
  } catch (const pfd::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const pfd::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
