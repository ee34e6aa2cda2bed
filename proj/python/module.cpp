// Python bindings for the main operations. Exact rationals cross the
// boundary as "p/q" strings (feed them to fractions.Fraction).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pfd/certificate.hpp"
#include "pfd/construction.hpp"
#include "pfd/duality.hpp"
#include "pfd/factorization.hpp"
#include "pfd/floors.hpp"
#include "pfd/homogeneous.hpp"
#include "pfd/lp.hpp"
#include "pfd/search.hpp"
#include "pfd/sieve.hpp"
#include "pfd/simplex.hpp"

namespace py = pybind11;
using namespace pfd;

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> fact_pairs(const Factorization& f) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& pe : f.pairs) out.emplace_back(pe.prime, pe.exponent);
  return out;
}

Factorization fact_from_pairs(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
  Factorization f;
  for (auto [p, e] : pairs) f.pairs.push_back({p, e});
  return f;
}

ResidueSet set_from_members(std::uint64_t n, const std::vector<std::uint64_t>& ms) {
  ResidueSet s(n);
  for (auto a : ms) s.insert(a);
  return s;
}

}  // namespace

PYBIND11_MODULE(_pfd, m) {
  m.doc() = "exact bounds and certificates for product-free set densities mod n";

  py::register_exception<PreconditionError>(m, "PreconditionError");
  py::register_exception<VerificationError>(m, "VerificationError");
  py::register_exception<PrecisionError>(m, "PrecisionError");

  // arith
  m.def("factorize", [](std::uint64_t n) { return fact_pairs(factorize(n)); });
  m.def("arithmetic_functions", [](std::uint64_t n) {
    auto r = arithmetic_functions(factorize(n));
    return py::dict(py::arg("phi") = r.phi.str(), py::arg("sigma") = r.sigma.str(),
                    py::arg("rad") = r.rad.str(), py::arg("omega") = r.omega,
                    py::arg("big_omega") = r.big_omega);
  });
  m.def("lcm_upto", [](std::uint64_t x) { return fact_pairs(lcm_upto(x)); });
  m.def("auxiliary_modulus", [](std::uint64_t n) {
    auto aux = auxiliary_modulus(n);
    return py::make_tuple(aux.X, fact_pairs(aux.N));
  });
  m.def("prime_pi", &prime_pi);
  m.def("floor_log", &floor_log);
  m.def("critical_k", &critical_k);
  m.def("restricted_reciprocal_sums", [](std::uint64_t X, std::uint64_t k) {
    OmegaSieve sieve(X);
    auto r = restricted_reciprocal_sums(sieve, k);
    return py::make_tuple(to_string(r.S), to_string(r.Q));
  });
  m.def("homogeneous_sums",
        [](const std::vector<std::uint64_t>& primes, std::uint64_t j_max) {
          auto r = homogeneous_sums(primes, j_max);
          std::vector<std::string> h;
          for (const auto& q : r.h) h.push_back(to_string(q));
          return h;
        });

  // pfsearch
  m.def("is_product_free", [](std::uint64_t n, const std::vector<std::uint64_t>& ms) {
    return is_product_free(set_from_members(n, ms));
  });
  m.def(
      "max_product_free",
      [](std::uint64_t n, std::uint64_t budget) {
        auto r = max_product_free(n, budget);
        return py::dict(py::arg("n") = r.n, py::arg("density") = to_string(r.density),
                        py::arg("witness") = r.best_set.members(),
                        py::arg("optimal") = r.proof_of_optimality,
                        py::arg("nodes") = r.nodes_explored);
      },
      py::arg("n"), py::arg("budget") = UINT64_MAX);
  m.def("gcd_profile", [](std::uint64_t n, const std::vector<std::uint64_t>& ms) {
    auto prof = gcd_profile(set_from_members(n, ms));
    py::dict d;
    for (const auto& [u, a] : prof.alpha) d[py::int_(u)] = to_string(a);
    return d;
  });
  m.def("lift_set",
        [](std::uint64_t n, const std::vector<std::uint64_t>& ms, std::uint64_t mult) {
          return lift_set(set_from_members(n, ms), mult).members();
        });

  // lpcore
  m.def("lp_optimum", [](std::uint64_t n) {
    return py::make_tuple(to_string(solve(build_primal(n)).objective_value),
                          to_string(solve(build_dual(n)).objective_value));
  });
  m.def("primal_lower_bound",
        [](std::uint64_t n) { return to_string(primal_lower_bound(n)); });
  m.def("upper_bound_via_lp",
        [](std::uint64_t n) { return to_string(upper_bound_via_lp(n)); });
  m.def("export_lp", [](std::uint64_t n) {
    std::ostringstream os;
    write_lp(os, build_primal(n));
    return os.str();
  });

  // certificate
  m.def(
      "build_certificate",
      [](std::uint64_t X, std::optional<std::uint64_t> k, std::uint64_t N) {
        return certificate_to_json(build_certificate(X, k, factorize(N)));
      },
      py::arg("X"), py::arg("k"), py::arg("N"));
  m.def("check_certificate", [](const std::string& doc) {
    auto rep = recheck_certificate(certificate_from_json(doc));
    return py::make_tuple(rep.feasible, rep.checks, rep.witness);
  });
  m.def("density_upper_bound", [](std::uint64_t n) {
    auto rep = density_upper_bound(n);
    return py::dict(py::arg("n") = rep.n, py::arg("X") = rep.X, py::arg("k") = rep.k,
                    py::arg("bound") = to_string(rep.certified_upper_bound_on_DN),
                    py::arg("mertens_floor") = to_string(rep.mertens_floor),
                    py::arg("empirical_c") = rep.empirical_c, py::arg("trail") = rep.trail);
  });

  // construction
  m.def("build_family", [](std::uint64_t x, std::uint64_t lo, std::uint64_t hi) {
    return family_to_json(build_family(x, lo, hi));
  });
  m.def("lower_bound_formula", [](std::uint64_t x, std::uint64_t lo, std::uint64_t hi) {
    auto c = lower_bound_formula(x, lo, hi);
    return py::make_tuple(to_string(c.family_density), to_string(c.formula_rhs), c.holds);
  });
  m.def("betterest_sum", [](std::uint64_t x, std::uint64_t k) {
    auto r = betterest_sum(x, k);
    return py::dict(py::arg("exact") = r.exact,
                    py::arg("value") = r.exact ? to_string(r.value_exact)
                                               : std::to_string(r.value_fp),
                    py::arg("ratio_to_target") = r.ratio_to_target);
  });
  m.def("tail_sum", [](std::uint64_t x, std::uint64_t J) {
    auto r = tail_sum(x, J);
    return py::dict(py::arg("exact") = r.exact,
                    py::arg("value") = r.exact ? to_string(r.value_exact)
                                               : std::to_string(r.value_fp),
                    py::arg("ratio_to_monitor") = r.ratio_to_monitor);
  });
}
