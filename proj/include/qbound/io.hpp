#pragma once

#include <string>
#include <vector>

#include "qbound/density.hpp"

namespace qbound {

// Density-matrix JSON: {"m":2,"n":4,"re":[[...]],"im":[[...]]}, row-major
// mn x mn in the A-major index convention; "im" may be omitted for real
// matrices. The reader funnels through make_density, so every state
// invariant is enforced on load.
BipartiteDensityMatrix read_state_json(const std::string& path);
void write_state_json(const BipartiteDensityMatrix& rho, const std::string& path);

// 12 significant digits, '.' decimal separator.
std::string format_cell(double x);

// CSV with a header row; written to a temp file and renamed so failures
// leave no partial output.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace qbound
