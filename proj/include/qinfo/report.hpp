#pragma once

#include <string>

#include "qinfo/scenarios.hpp"
#include "qinfo/sweep.hpp"

namespace qinfo {

enum class ReportFormat { Table, Json, Csv };

ReportFormat parse_format(const std::string& name);  // throws BadParameter

// Rendering is fully deterministic: stable field ordering, reals with 12
// significant digits, '.' decimal point, no locale dependence.
std::string render_report(const ScenarioResult& result, ReportFormat format);
std::string render_report(const SweepStatistics& stats, ReportFormat format);

// %.12g with locale-independent formatting.
std::string format_real(double value);

}  // namespace qinfo
