#include "steinfix/cli/report.hpp"

#include <algorithm>
#include <cstdio>

namespace steinfix::cli {

void ReportWriter::record(const std::string& kind,
                          std::vector<std::pair<std::string, std::string>> fields) {
    std::sort(fields.begin(), fields.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out_ << kind;
    for (const auto& [k, v] : fields) out_ << ' ' << k << '=' << v;
    out_ << '\n';
}

std::string ReportWriter::real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%#.12g", v);
    return buf;
}

std::string ReportWriter::integer(long long v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", v);
    return buf;
}

std::string ReportWriter::boolean(bool v) { return v ? "1" : "0"; }

}  // namespace steinfix::cli
