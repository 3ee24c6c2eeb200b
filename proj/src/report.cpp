#include "specsat/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace specsat {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    return buf;
}

double json_real(double x) {
    return std::strtod(format_real(x).c_str(), nullptr);
}

std::string render_summary(const std::vector<SummaryRow>& rows) {
    char line[160];
    std::string out;
    std::snprintf(line, sizeof line, "%-10s %4s %4s %14s %6s %5s %14s\n",
                  "name", "n", "|E|", "rho", "minF", "sat", "rho-delta");
    out += line;
    out += std::string(62, '-') + "\n";
    for (const SummaryRow& r : rows) {
        std::string rho = r.rho ? format_real(*r.rho) : "-";
        std::string minf = r.min_f ? std::to_string(*r.min_f) : "-";
        std::string sat = r.saturated ? (*r.saturated ? "yes" : "no") : "-";
        std::string delta = r.rho_delta ? format_real(*r.rho_delta) : "-";
        std::snprintf(line, sizeof line, "%-10s %4d %4d %14s %6s %5s %14s\n",
                      r.name.c_str(), r.n, r.edges, rho.c_str(), minf.c_str(), sat.c_str(),
                      delta.c_str());
        out += line;
    }
    return out;
}

} // namespace specsat
