#pragma once

#include "qwcf/adversary.hpp"
#include "qwcf/solver.hpp"

#include <string>
#include <vector>

namespace qwcf {

// 12 significant digits, locale independent (std::to_chars). Used for every
// numeric CSV field so repeated runs are byte identical.
std::string format_sig12(double v);

inline const char* format_bool(bool b) { return b ? "true" : "false"; }

// Column order is part of the tool's contract; the trailing error column is
// empty for rows that solved.
inline constexpr const char* kSweepCsvHeader =
    "d_km,x,y,z,p_h,p_ab,p_d_quantum,p_d_classical,l_one,advantage,converged,"
    "error";

std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);
std::string sweep_to_table(const std::vector<SweepRow>& rows);

std::string solve_to_json(const SolveResult& r, double d_km);
std::string scf_to_json(const ScfResult& r);

} // namespace qwcf
