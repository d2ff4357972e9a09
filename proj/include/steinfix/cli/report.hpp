#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace steinfix::cli {

/// One structured report line: `KIND k1=v1 k2=v2 ...` with keys sorted.
/// Values are exact integers or reals rendered with 12 significant digits,
/// so identical inputs produce byte-identical reports.
class ReportWriter {
public:
    explicit ReportWriter(std::ostream& out) : out_(out) {}

    void record(const std::string& kind,
                std::vector<std::pair<std::string, std::string>> fields);

    static std::string real(double v);
    static std::string integer(long long v);
    static std::string boolean(bool v);

private:
    std::ostream& out_;
};

}  // namespace steinfix::cli
