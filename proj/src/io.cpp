#include "lee/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "lee/errors.hpp"

namespace lee {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

const char* axis_name(int a) {
  static const char* n[3] = {"x", "y", "z"};
  return n[a];
}

std::string join_ints(const int* v, int count) {
  std::string s;
  for (int a = 0; a < count; ++a) {
    if (a) s += ',';
    s += std::to_string(v[a]);
  }
  return s;
}

std::string join_g17(const double* v, int count) {
  std::string s;
  for (int a = 0; a < count; ++a) {
    if (a) s += ',';
    s += format_g17(v[a]);
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw IoError("snapshot: trailing characters in number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw IoError("snapshot: malformed number '" + s + "'");
  }
}

std::string expect_key(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) throw IoError("snapshot: expected '" + key + "=...', got '" + token + "'");
  return token.substr(key.size() + 1);
}

}  // namespace

void write_snapshot_csv(std::ostream& os, const MacroField& field, double time, const std::string& lattice) {
  const Grid& g = field.grid;
  const int D = g.dimension;

  os << "# t=" << format_g17(time) << "\n";
  double origin[3], length[3];
  for (int a = 0; a < D; ++a) {
    origin[a] = g.origin[static_cast<std::size_t>(a)];
    length[a] = g.length[static_cast<std::size_t>(a)];
  }
  os << "# dim=" << D << " extent=" << join_ints(g.extent.data(), D) << " eps=" << format_g17(g.eps)
     << " origin=" << join_g17(origin, D) << " length=" << join_g17(length, D) << " lattice=" << lattice << "\n";

  for (int a = 0; a < D; ++a) os << axis_name(a) << ",";
  os << "rho,";
  for (int a = 0; a < D; ++a) os << "u_" << axis_name(a) << ",";
  os << "theta\n";

  const auto Dz = static_cast<std::size_t>(D);
  std::size_t s = 0;
  for (int z = 0; z < g.extent[2]; ++z)
    for (int y = 0; y < g.extent[1]; ++y)
      for (int x = 0; x < g.extent[0]; ++x, ++s) {
        const int ix[3] = {x, y, z};
        for (int a = 0; a < D; ++a) os << format_g17(g.coord(a, ix[a])) << ",";
        os << format_g17(field.rho[s]) << ",";
        for (std::size_t a = 0; a < Dz; ++a) os << format_g17(field.u[s * Dz + a]) << ",";
        os << format_g17(field.theta[s]) << "\n";
      }
}

Snapshot read_snapshot_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# t=", 0) != 0) throw IoError("snapshot: missing '# t=' header");
  Snapshot snap;
  snap.time = parse_double(line.substr(4));

  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) throw IoError("snapshot: missing metadata line");
  std::istringstream meta(line.substr(2));
  std::string tok;
  Grid g;
  meta >> tok;
  g.dimension = static_cast<int>(parse_double(expect_key(tok, "dim")));
  if (g.dimension < 1 || g.dimension > 3) throw IoError("snapshot: bad dimension");
  meta >> tok;
  {
    const auto parts = split(expect_key(tok, "extent"), ',');
    if (parts.size() != static_cast<std::size_t>(g.dimension)) throw IoError("snapshot: bad extent");
    for (int a = 0; a < g.dimension; ++a)
      g.extent[static_cast<std::size_t>(a)] = static_cast<int>(parse_double(parts[static_cast<std::size_t>(a)]));
  }
  meta >> tok;
  g.eps = parse_double(expect_key(tok, "eps"));
  meta >> tok;
  {
    const auto parts = split(expect_key(tok, "origin"), ',');
    if (parts.size() != static_cast<std::size_t>(g.dimension)) throw IoError("snapshot: bad origin");
    for (int a = 0; a < g.dimension; ++a) g.origin[static_cast<std::size_t>(a)] = parse_double(parts[static_cast<std::size_t>(a)]);
  }
  meta >> tok;
  {
    const auto parts = split(expect_key(tok, "length"), ',');
    if (parts.size() != static_cast<std::size_t>(g.dimension)) throw IoError("snapshot: bad length");
    for (int a = 0; a < g.dimension; ++a) g.length[static_cast<std::size_t>(a)] = parse_double(parts[static_cast<std::size_t>(a)]);
  }
  if (meta >> tok) snap.lattice = expect_key(tok, "lattice");
  try {
    g.validate();
  } catch (const Error& e) {
    throw IoError(std::string("snapshot: inconsistent grid metadata: ") + e.what());
  }

  if (!std::getline(is, line)) throw IoError("snapshot: missing column header");

  snap.field = MacroField::zeros(g);
  const auto D = static_cast<std::size_t>(g.dimension);
  const std::size_t want_cols = 2 * D + 2;
  std::size_t s = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (s >= g.sites()) throw IoError("snapshot: more rows than sites");
    const auto cols = split(line, ',');
    if (cols.size() != want_cols) throw IoError("snapshot: wrong column count");
    snap.field.rho[s] = parse_double(cols[D]);
    for (std::size_t a = 0; a < D; ++a) snap.field.u[s * D + a] = parse_double(cols[D + 1 + a]);
    snap.field.theta[s] = parse_double(cols[2 * D + 1]);
    ++s;
  }
  if (s != g.sites()) throw IoError("snapshot: fewer rows than sites");
  return snap;
}

void write_convergence_csv(std::ostream& os, const ConvergenceTable& table) {
  const int D = table.rows.empty() ? 0 : table.rows.front().error.dimension;
  os << "# lattice=" << table.set_name << " ic=" << table.ic_name << " mode=" << table.mode
     << " tau=" << format_g17(table.tau) << " end_time=" << format_g17(table.end_time) << "\n";
  os << "n,eps,steps,achieved_t,err_rho,";
  for (int a = 0; a < D; ++a) os << "err_u_" << axis_name(a) << ",";
  os << "err_theta,order_rho,";
  for (int a = 0; a < D; ++a) os << "order_u_" << axis_name(a) << ",";
  os << "order_theta\n";
  for (const auto& row : table.rows) {
    os << row.n << "," << format_g17(row.eps) << "," << row.steps << "," << format_g17(row.achieved_t) << ","
       << format_g17(row.error.rho) << ",";
    for (int a = 0; a < D; ++a) os << format_g17(row.error.u[static_cast<std::size_t>(a)]) << ",";
    os << format_g17(row.error.theta) << "," << format_g17(row.order.rho) << ",";
    for (int a = 0; a < D; ++a) os << format_g17(row.order.u[static_cast<std::size_t>(a)]) << ",";
    os << format_g17(row.order.theta) << "\n";
  }
}

namespace {

double finite_or(double v, double fallback) { return std::isfinite(v) ? v : fallback; }

}  // namespace

nlohmann::json to_json(const StructureReport& rep) {
  nlohmann::json j;
  j["set"] = rep.set_name;
  j["projection_defect"] = rep.projection_defect;
  j["symmetry_defect"] = rep.symmetry_defect;
  j["spectrum_defect"] = rep.spectrum_defect;
  j["eigen_multiplicities"] = {{"0", rep.mult_zero}, {"-2", rep.mult_minus_two}};
  j["expected_multiplicities"] = {{"0", rep.expected_zero}, {"-2", rep.expected_minus_two}};
  j["a0"] = rep.a0;
  j["a0_built_in"] = rep.a0_built_in;
  j["pass"] = rep.pass;
  return j;
}

nlohmann::json to_json(const StabilityScan& scan, const StructureReport* structure) {
  nlohmann::json j;
  j["set"] = scan.set_name;
  j["tau"] = scan.tau;
  j["resolution"] = scan.resolution;
  j["dimension"] = scan.dimension;
  j["kappa_cap"] = scan.options.kappa_cap;
  j["samples"] = nlohmann::json::array();
  for (const auto& smp : scan.samples) {
    nlohmann::json s;
    s["keps"] = std::vector<double>(smp.keps.begin(), smp.keps.begin() + scan.dimension);
    s["unitary_defect"] = smp.unitary_defect;
    s["rho"] = finite_or(smp.rho, -1.0);
    s["kappa"] = finite_or(smp.kappa, 1e300);
    s["min_singular"] = smp.min_singular;
    auto flags = nlohmann::json::array();
    if (smp.unitary) flags.push_back("unitary");
    if (smp.defective) flags.push_back("possibly-defective");
    if (smp.eigen_failed) flags.push_back("eigen-failure");
    s["flags"] = flags;
    j["samples"].push_back(std::move(s));
  }
  j["max_unitary_defect"] = scan.max_unitary_defect;
  j["max_rho"] = scan.max_rho;
  j["max_kappa"] = finite_or(scan.max_kappa, 1e300);
  j["min_singular"] = scan.min_singular;
  j["conditions"] = {{"regular", scan.cond_regular},
                     {"spectral_radius", scan.cond_spectral},
                     {"conditioning", scan.cond_conditioning}};
  j["verdict"] = scan.verdict;
  if (structure) j["structure"] = to_json(*structure);
  return j;
}

nlohmann::json to_json(const CompatibilityReport& rep) {
  nlohmann::json j;
  j["set"] = rep.set_name;
  j["checks"] = nlohmann::json::array();
  for (const auto& chk : rep.checks) {
    j["checks"].push_back({{"condition", chk.condition},
                           {"discrete", chk.discrete},
                           {"target", chk.target},
                           {"defect", chk.defect},
                           {"pass", chk.pass}});
  }
  j["max_defect"] = rep.max_defect;
  j["pass"] = rep.pass;
  return j;
}

nlohmann::json to_json(const ConstraintReport& rep) {
  nlohmann::json j;
  j["set"] = rep.set_name;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["checks"] = nlohmann::json::array();
  for (const auto& chk : rep.checks)
    j["checks"].push_back({{"name", chk.name}, {"max_defect", chk.max_defect}, {"pass", chk.pass}});
  j["max_defect"] = rep.max_defect;
  j["pass"] = rep.pass;
  return j;
}

nlohmann::json to_json(const FluxReport& rep) {
  nlohmann::json j;
  j["set"] = rep.set_name;
  j["second_moment"] = rep.second_moment;
  j["second_defect"] = rep.second_defect;
  j["second_pass"] = rep.second_pass;
  j["third_moment_max_abs"] = rep.third_max_abs;
  return j;
}

}  // namespace lee
