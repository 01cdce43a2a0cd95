#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "lee/grid.hpp"
#include "lee/harness.hpp"
#include "lee/kinetic.hpp"
#include "lee/stability.hpp"

namespace lee {

// Lossless float formatting for all text outputs (17 significant digits).
std::string format_g17(double v);

// Snapshot format: '# t=<time>' and a '# dim=...' metadata line, a column
// header, then one row per site with coordinates, rho, velocity components
// and theta.  Rows run x fastest.
void write_snapshot_csv(std::ostream& os, const MacroField& field, double time, const std::string& lattice);

struct Snapshot {
  MacroField field;
  double time = 0;
  std::string lattice;
};
Snapshot read_snapshot_csv(std::istream& is);  // throws IoError on malformed input

void write_convergence_csv(std::ostream& os, const ConvergenceTable& table);

nlohmann::json to_json(const StabilityScan& scan, const StructureReport* structure);
nlohmann::json to_json(const StructureReport& rep);
nlohmann::json to_json(const CompatibilityReport& rep);
nlohmann::json to_json(const ConstraintReport& rep);
nlohmann::json to_json(const FluxReport& rep);

}  // namespace lee
