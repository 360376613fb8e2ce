#include "qinfo/report.hpp"

#include <charconv>
#include <sstream>

namespace qinfo {

ReportFormat parse_format(const std::string& name) {
    if (name == "table") return ReportFormat::Table;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw BadParameter("unknown format '" + name + "' (expected table, json or csv)");
}

std::string format_real(double value) {
    // 12 significant digits so every 1e-12 check is visible in the output;
    // std::to_chars is locale-independent by construction.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

void append_report_fields(std::ostringstream& os, const InformationReport& r,
                          const char* sep, const char* kv, bool quote_strings) {
    const char* q = quote_strings ? "\"" : "";
    os << q << "capacity_c" << q << kv << format_real(r.capacity_c) << sep;
    os << q << "i_q" << q << kv << format_real(r.i_q) << sep;
    os << q << "i_tilde" << q << kv << format_real(r.i_tilde) << sep;
    os << q << "k_q" << q << kv << format_real(r.k_q) << sep;
    os << q << "purity" << q << kv << format_real(r.purity) << sep;
    os << q << "classification" << q << kv << q << to_string(r.classification) << q
       << sep;
    os << q << "is_classical" << q << kv << format_bool(r.is_classical);
}

std::string render_table(const ScenarioResult& result) {
    std::ostringstream os;
    os << "scenario: " << result.scenario_name << "\n";
    if (!result.parameters.empty()) {
        os << "parameters:\n";
        for (const auto& [key, value] : result.parameters) {
            os << "  " << key << " = " << format_real(value) << "\n";
        }
    }
    for (const auto& [label, report] : result.reports) {
        os << "report " << label << ":\n";
        os << "  capacity_c     " << format_real(report.capacity_c) << "\n";
        os << "  i_q            " << format_real(report.i_q) << "\n";
        os << "  i_tilde        " << format_real(report.i_tilde) << "\n";
        os << "  k_q            " << format_real(report.k_q) << "\n";
        os << "  purity         " << format_real(report.purity) << "\n";
        os << "  classification " << to_string(report.classification) << "\n";
        os << "  is_classical   " << format_bool(report.is_classical) << "\n";
    }
    if (!result.derived_values.empty()) {
        os << "derived values:\n";
        for (const auto& [key, value] : result.derived_values) {
            os << "  " << key << " = " << format_real(value) << "\n";
        }
    }
    for (const std::string& note : result.notes) {
        os << "note: " << note << "\n";
    }
    return os.str();
}

std::string render_json(const ScenarioResult& result) {
    std::ostringstream os;
    os << "{\"scenario\":\"" << json_escape(result.scenario_name) << "\"";
    os << ",\"parameters\":{";
    bool first = true;
    for (const auto& [key, value] : result.parameters) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(key) << "\":" << format_real(value);
    }
    os << "},\"reports\":[";
    first = true;
    for (const auto& [label, report] : result.reports) {
        if (!first) os << ",";
        first = false;
        os << "{\"label\":\"" << json_escape(label) << "\",";
        append_report_fields(os, report, ",", ":", true);
        os << "}";
    }
    os << "],\"derived_values\":{";
    first = true;
    for (const auto& [key, value] : result.derived_values) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(key) << "\":" << format_real(value);
    }
    os << "},\"notes\":[";
    first = true;
    for (const std::string& note : result.notes) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(note) << "\"";
    }
    os << "]}\n";
    return os.str();
}

std::string render_csv(const ScenarioResult& result) {
    std::ostringstream os;
    os << "section,key,value\n";
    for (const auto& [key, value] : result.parameters) {
        os << "parameter," << key << "," << format_real(value) << "\n";
    }
    for (const auto& [label, report] : result.reports) {
        const std::string section = "report." + label;
        os << section << ",capacity_c," << format_real(report.capacity_c) << "\n";
        os << section << ",i_q," << format_real(report.i_q) << "\n";
        os << section << ",i_tilde," << format_real(report.i_tilde) << "\n";
        os << section << ",k_q," << format_real(report.k_q) << "\n";
        os << section << ",purity," << format_real(report.purity) << "\n";
        os << section << ",classification," << to_string(report.classification) << "\n";
        os << section << ",is_classical," << format_bool(report.is_classical) << "\n";
    }
    for (const auto& [key, value] : result.derived_values) {
        os << "derived," << key << "," << format_real(value) << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_report(const ScenarioResult& result, ReportFormat format) {
    switch (format) {
        case ReportFormat::Table: return render_table(result);
        case ReportFormat::Json: return render_json(result);
        case ReportFormat::Csv: return render_csv(result);
    }
    return {};
}

std::string render_report(const SweepStatistics& stats, ReportFormat format) {
    const std::pair<const char*, std::string> fields[] = {
        {"n_members", std::to_string(stats.n_members)},
        {"trials", std::to_string(stats.trials)},
        {"seed", std::to_string(stats.seed)},
        {"spread", format_real(stats.spread)},
        {"mean_i_q", format_real(stats.mean_i_q)},
        {"mean_k_q", format_real(stats.mean_k_q)},
        {"std_i_q", format_real(stats.std_i_q)},
        {"std_k_q", format_real(stats.std_k_q)},
        {"theoretical_mean_excess", format_real(stats.theoretical_mean_excess)},
    };
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Table:
            os << "decoherence sweep:\n";
            for (const auto& [key, value] : fields) {
                os << "  " << key << " = " << value << "\n";
            }
            break;
        case ReportFormat::Json: {
            os << "{";
            bool first = true;
            for (const auto& [key, value] : fields) {
                if (!first) os << ",";
                first = false;
                os << "\"" << key << "\":" << value;
            }
            os << "}\n";
            break;
        }
        case ReportFormat::Csv: {
            bool first = true;
            for (const auto& [key, value] : fields) {
                os << (first ? "" : ",") << key;
                first = false;
            }
            os << "\n";
            first = true;
            for (const auto& [key, value] : fields) {
                os << (first ? "" : ",") << value;
                first = false;
            }
            os << "\n";
            break;
        }
    }
    return os.str();
}

}  // namespace qinfo
