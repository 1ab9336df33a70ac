#include "shearlet/report.hpp"

#include <fstream>

#include "shearlet/common.hpp"

namespace shearlet {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

void AuditReport::param(const std::string& key, const std::string& text) {
    params.emplace_back(key, "\"" + json_escape(text) + "\"");
}

void AuditReport::param_int(const std::string& key, long long v) {
    params.emplace_back(key, std::to_string(v));
}

void AuditReport::param_real(const std::string& key, double v) {
    params.emplace_back(key, fmt_g17(v));
}

void AuditReport::result(const std::string& key, double v) {
    results.emplace_back(key, v);
}

double AuditReport::result_value(const std::string& key) const {
    for (const auto& [k, v] : results)
        if (k == key) return v;
    throw config_error("report '" + name + "' has no result '" + key + "'");
}

std::string to_json(const AuditReport& r) {
    std::string out = "{\n";
    out += "  \"name\": \"" + json_escape(r.name) + "\",\n";
    out += "  \"statement\": \"" + json_escape(r.statement) + "\",\n";
    out += "  \"seed\": " + std::to_string(r.seed) + ",\n";
    out += "  \"tolerance\": " + fmt_g17(r.tolerance) + ",\n";
    out += "  \"params\": {";
    for (size_t t = 0; t < r.params.size(); ++t) {
        out += t ? ", " : "";
        out += "\"" + json_escape(r.params[t].first) + "\": " + r.params[t].second;
    }
    out += "},\n";
    out += "  \"cases\": [";
    for (size_t t = 0; t < r.table.size(); ++t) {
        const CaseRow& c = r.table[t];
        out += t ? "," : "";
        out += "\n    {\"case_id\": \"" + json_escape(c.id) + "\", \"j\": " + std::to_string(c.j) +
               ", \"l\": " + std::to_string(c.l) + ", \"measured\": " + fmt_g17(c.measured) +
               ", \"bound\": " + fmt_g17(c.bound) + ", \"ratio\": " + fmt_g17(c.ratio) + "}";
    }
    out += r.table.empty() ? "],\n" : "\n  ],\n";
    out += "  \"results\": {";
    for (size_t t = 0; t < r.results.size(); ++t) {
        out += t ? ", " : "";
        out += "\"" + json_escape(r.results[t].first) + "\": " + fmt_g17(r.results[t].second);
    }
    out += "},\n";
    out += std::string("  \"pass\": ") + (r.pass ? "true" : "false") + "\n}\n";
    return out;
}

std::string to_csv(const AuditReport& r) {
    std::string out = "case_id,j,l,measured,bound,ratio\n";
    for (const CaseRow& c : r.table) {
        out += c.id + "," + std::to_string(c.j) + "," + std::to_string(c.l) + "," +
               fmt_g17(c.measured) + "," + fmt_g17(c.bound) + "," + fmt_g17(c.ratio) + "\n";
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open '" + path + "' for writing");
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) throw config_error("short write to '" + path + "'");
}

}  // namespace shearlet
