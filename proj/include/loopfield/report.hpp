#pragma once
// CSV and human-readable emission of charge reports.  CSV bodies are
// deterministic for a fixed configuration (the timestamp lives in a comment
// header line); every quadrature-derived column has a sibling error column.

#include <iosfwd>
#include <string>
#include <vector>

#include "loopfield/charge.hpp"

namespace loopfield {

// "# generated <stamp>" then "name,value,error,nodes,converged" rows
void write_csv(std::ostream& os, const ChargeReport& report,
               const std::string& stamp);

// same layout for scan tables: one row group per scan point
struct ScanRow {
  double param_value = 0.0;
  std::vector<ReportValue> values;
  std::vector<std::string> notes;
};

void write_scan_csv(std::ostream& os, const std::string& param,
                    const std::vector<ScanRow>& rows, const std::string& stamp);

void print_summary(std::ostream& os, const ChargeReport& report);

std::string format_double(double v);  // shortest round-trip formatting

}  // namespace loopfield
