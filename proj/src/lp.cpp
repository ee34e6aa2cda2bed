#include "pfd/lp.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "pfd/factorization.hpp"

namespace pfd {

std::string LpVar::name() const {
  // primal variables read a<u>; dual pair variables b{u,v}. The leading
  // letter is chosen by the model writer below via the kind; here we emit a
  // kind-neutral spelling and let callers prefix. Simplest: v<u> / v{u,v}.
  if (is_pair()) return "v{" + std::to_string(u) + "," + std::to_string(pair_v) + "}";
  return "v" + std::to_string(u);
}

std::vector<std::uint64_t> proper_divisor_list(std::uint64_t n) {
  std::vector<std::uint64_t> ds;
  for (const Int& d : divisors(factorize(n)))
    if (d > 1) ds.push_back(d.convert_to<std::uint64_t>());
  return ds;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_pairs(std::uint64_t n) {
  auto ds = proper_divisor_list(n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i; j < ds.size(); ++j) {
      std::uint64_t u = ds[i], v = ds[j];
      if (u > n / v) continue;  // uv overflow guard
      if ((u * v <= n) && n % (u * v) == 0) pairs.emplace_back(u, v);
    }
  return pairs;
}

namespace {

std::size_t var_index(const std::vector<LpVar>& vars, std::uint64_t u,
                      std::uint64_t v = 0) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].u == u && vars[i].pair_v == v) return i;
  throw PreconditionError("lp: unknown variable");
}

}  // namespace

LpModel build_primal(std::uint64_t n) {
  if (n < 2) throw PreconditionError("build_primal: n must be >= 2");
  LpModel m{LpKind::primal, n, true, {}, {}, {}};
  auto ds = proper_divisor_list(n);
  if (ds.size() > kLpVarCap) throw PreconditionError("build_primal: variable cap exceeded");
  for (auto u : ds) {
    m.vars.push_back({u, 0});
    m.objective.emplace_back(1, u);
  }
  for (auto u : ds) {
    LpRow row{"C(b" + std::to_string(u) + ")", {}, Relation::le, 1};
    row.coeffs.emplace_back(var_index(m.vars, u), 1);
    m.rows.push_back(std::move(row));
  }
  for (auto [u, v] : divisor_pairs(n)) {
    LpRow row{"C(b{" + std::to_string(u) + "," + std::to_string(v) + "})",
              {}, Relation::le, 2};
    if (u == v) {
      row.coeffs.emplace_back(var_index(m.vars, u), 2);
    } else {
      row.coeffs.emplace_back(var_index(m.vars, u), 1);
      row.coeffs.emplace_back(var_index(m.vars, v), 1);
    }
    row.coeffs.emplace_back(var_index(m.vars, u * v), 1);
    // Collapse duplicate columns (e.g. u*v equal to u or v cannot occur for
    // u,v > 1, but keep the guard simple and sum coefficients).
    std::sort(row.coeffs.begin(), row.coeffs.end());
    m.rows.push_back(std::move(row));
  }
  return m;
}

LpModel build_dual(std::uint64_t n) {
  if (n < 2) throw PreconditionError("build_dual: n must be >= 2");
  LpModel m{LpKind::dual, n, false, {}, {}, {}};
  auto ds = proper_divisor_list(n);
  auto pairs = divisor_pairs(n);
  if (ds.size() + pairs.size() > kLpVarCap)
    throw PreconditionError("build_dual: variable cap exceeded");
  for (auto u : ds) {
    m.vars.push_back({u, 0});
    m.objective.emplace_back(1);
  }
  for (auto [u, v] : pairs) {
    m.vars.push_back({u, v});
    m.objective.emplace_back(2);
  }
  for (auto u : ds) {
    LpRow row{"C(a" + std::to_string(u) + ")", {}, Relation::ge, Rat(1, u)};
    row.coeffs.emplace_back(var_index(m.vars, u), 1);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      auto [a, b] = pairs[pi];
      Rat coef = 0;
      if (a == u && b == u) coef += 2;        // starred sum, v = u counted twice
      else if (a == u || b == u) coef += 1;   // starred sum, v != u
      if (a * b == u) coef += 1;              // sum over factorizations vw = u
      if (coef != 0) row.coeffs.emplace_back(ds.size() + pi, coef);
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

long first_violated_row(const LpModel& model, const std::vector<Rat>& x) {
  if (x.size() != model.vars.size())
    throw PreconditionError("lp: assignment size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0) return static_cast<long>(model.rows.size() + i);  // sign violation
  for (std::size_t r = 0; r < model.rows.size(); ++r) {
    Rat lhs = 0;
    for (const auto& [j, c] : model.rows[r].coeffs) lhs += c * x[j];
    if (model.rows[r].rel == Relation::le ? lhs > model.rows[r].rhs
                                          : lhs < model.rows[r].rhs)
      return static_cast<long>(r);
  }
  return -1;
}

Rat objective_value(const LpModel& model, const std::vector<Rat>& x) {
  Rat v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) v += model.objective[i] * x[i];
  return v;
}

void write_lp(std::ostream& os, const LpModel& model) {
  os << "pfd-lp 1\n";
  os << (model.kind == LpKind::primal ? "primal " : "dual ") << model.n << " "
     << (model.maximize ? "maximize" : "minimize") << "\n";
  os << "vars " << model.vars.size() << "\n";
  for (std::size_t i = 0; i < model.vars.size(); ++i)
    os << model.vars[i].name() << " " << model.objective[i] << "\n";
  os << "rows " << model.rows.size() << "\n";
  for (const auto& row : model.rows) {
    os << row.name << " " << (row.rel == Relation::le ? "<=" : ">=") << " "
       << row.rhs << " :";
    for (const auto& [j, c] : row.coeffs) os << " " << c << " " << model.vars[j].name();
    os << "\n";
  }
}

namespace {

LpVar parse_var(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'v') throw PreconditionError("lp parse: bad variable " + tok);
  if (tok[1] == '{') {
    auto comma = tok.find(',');
    auto close = tok.find('}');
    if (comma == std::string::npos || close == std::string::npos)
      throw PreconditionError("lp parse: bad pair variable " + tok);
    return {std::stoull(tok.substr(2, comma - 2)),
            std::stoull(tok.substr(comma + 1, close - comma - 1))};
  }
  return {std::stoull(tok.substr(1)), 0};
}

}  // namespace

LpModel read_lp(std::istream& is) {
  std::string magic;
  int version = 0;
  is >> magic >> version;
  if (magic != "pfd-lp" || version != 1)
    throw PreconditionError("lp parse: not a pfd-lp v1 stream");
  LpModel m;
  std::string kind, sense, kw;
  is >> kind >> m.n >> sense;
  m.kind = kind == "primal" ? LpKind::primal : LpKind::dual;
  m.maximize = sense == "maximize";
  std::size_t nvars = 0, nrows = 0;
  is >> kw >> nvars;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nvars; ++i) {
    std::string vname, obj;
    is >> vname >> obj;
    m.vars.push_back(parse_var(vname));
    m.objective.push_back(parse_rat(obj));
    index[vname] = i;
  }
  is >> kw >> nrows;
  is.ignore();
  for (std::size_t r = 0; r < nrows; ++r) {
    std::string line;
    std::getline(is, line);
    std::istringstream ls(line);
    LpRow row;
    std::string rel, rhs, colon;
    ls >> row.name >> rel >> rhs >> colon;
    row.rel = rel == "<=" ? Relation::le : Relation::ge;
    row.rhs = parse_rat(rhs);
    std::string coef, vname;
    while (ls >> coef >> vname) row.coeffs.emplace_back(index.at(vname), parse_rat(coef));
    m.rows.push_back(std::move(row));
  }
  return m;
}

}  // namespace pfd
