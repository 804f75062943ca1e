#pragma once

#include <string>
#include <vector>

#include "bisect/adversary.hpp"
#include "bisect/generators.hpp"
#include "bisect/oracle.hpp"
#include "bisect/sdp.hpp"
#include "bisect/structure.hpp"
#include "bisect/solver.hpp"

namespace bisect {

std::string instance_to_json(const PlantedInstance& inst);
PlantedInstance instance_from_json(const std::string& text);

std::string solve_report_to_json(const SolveReport& report);
// Reads back the serialized fields (h_hat, best_cut, status, multiplicity,
// iterations, bisections, d_best); trace and diagnostics are not persisted.
SolveReport solve_report_from_json(const std::string& text);

std::string oracle_to_json(const OracleResult& result);

std::string moves_to_json(const std::vector<MonotoneMove>& moves);
std::vector<MonotoneMove> moves_from_json(const std::string& text);

std::string certificates_to_json(const PrimalCert& primal, const FkDualCert& dual,
                                 const RankOnePoint& rank_one, double gap);

std::string structure_report_to_json(const StructureReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace bisect
