#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace shearlet {

struct CaseRow {
    std::string id;
    int j = 0;
    int l = 0;
    double measured = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
};

// Audit outcome: parameters and results keep insertion order so emitted
// reports are byte-stable.  The pass flag must be re-derivable from the table
// and tolerance alone.
struct AuditReport {
    std::string name;
    std::string statement;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::vector<std::pair<std::string, std::string>> params;  // value = JSON token
    std::vector<CaseRow> table;
    std::vector<std::pair<std::string, double>> results;
    bool pass = false;

    void param(const std::string& key, const std::string& text);  // quoted on output
    void param_int(const std::string& key, long long v);
    void param_real(const std::string& key, double v);
    void result(const std::string& key, double v);
    double result_value(const std::string& key) const;  // throws config_error if absent
};

std::string to_json(const AuditReport& r);
std::string to_csv(const AuditReport& r);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace shearlet
