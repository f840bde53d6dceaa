#pragma once

#include <filesystem>
#include <string>

#include "somclass/evaluation.hpp"

namespace somclass {

/// Everything a rendered evaluation needs: the raw table plus the scored
/// summary.
struct ReportDocument {
    ConfusionMatrix cm;
    EvaluationReport report;
};

/// Two aligned text tables: the cluster-by-class counts with the mapped
/// class per cluster, and per-class totals with truncated percent display.
std::string render_text(const ReportDocument& doc);

/// Machine-readable CSV twin of render_text; byte-stable for identical
/// inputs.
void write_report_csv(const ReportDocument& doc, const std::filesystem::path& path);

/// Throws MissingFile / CorruptFile.
ReportDocument read_report_csv(const std::filesystem::path& path);

}  // namespace somclass
