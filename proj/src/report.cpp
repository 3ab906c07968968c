#include "loopfield/report.hpp"

#include <cstdio>
#include <ostream>

namespace loopfield {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const ChargeReport& report,
               const std::string& stamp) {
  os << "# generated " << stamp << "\n";
  for (const auto& n : report.notes) os << "# " << n << "\n";
  os << "name,value,error,nodes,converged\n";
  for (const auto& v : report.values)
    os << v.name << ',' << format_double(v.value) << ','
       << (v.quadrature ? format_double(v.error) : std::string("")) << ','
       << (v.quadrature ? std::to_string(v.nodes) : std::string("")) << ','
       << (v.quadrature ? (v.converged ? "1" : "0") : std::string("")) << "\n";
}

void write_scan_csv(std::ostream& os, const std::string& param,
                    const std::vector<ScanRow>& rows, const std::string& stamp) {
  os << "# generated " << stamp << "\n";
  if (rows.empty()) return;
  os << param;
  for (const auto& v : rows.front().values) {
    os << ',' << v.name;
    if (v.quadrature) os << ',' << v.name << "_err";
  }
  os << ",notes\n";
  for (const auto& r : rows) {
    os << format_double(r.param_value);
    for (const auto& v : r.values) {
      os << ',' << format_double(v.value);
      if (v.quadrature) os << ',' << format_double(v.error);
    }
    os << ',';
    for (std::size_t i = 0; i < r.notes.size(); ++i)
      os << (i ? ";" : "") << r.notes[i];
    os << "\n";
  }
}

void print_summary(std::ostream& os, const ChargeReport& report) {
  os << "== " << report.title << " ==\n";
  for (const auto& n : report.notes) os << "   " << n << "\n";
  for (const auto& v : report.values) {
    os << "   " << v.name << " = " << format_double(v.value);
    if (v.quadrature) {
      os << "  +- " << format_double(v.error) << "  (" << v.nodes << " nodes"
         << (v.converged ? "" : ", NOT CONVERGED") << ")";
    }
    os << "\n";
  }
}

}  // namespace loopfield
