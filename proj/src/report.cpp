#include "somclass/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "somclass/errors.hpp"
#include "somclass/numeric_text.hpp"

namespace somclass {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
    const auto& cm = doc.cm;
    const auto& rep = doc.report;
    const int clusters = static_cast<int>(cm.counts.rows());
    const int classes = static_cast<int>(cm.counts.cols());

    std::size_t name_width = 8;
    for (const auto& name : cm.class_names) {
        name_width = std::max(name_width, name.size());
    }
    const int w = static_cast<int>(name_width) + 2;

    std::ostringstream out;
    out << "Classification result (rows: clusters, columns: class should be)\n";
    out << std::left << std::setw(9) << "cluster";
    for (const auto& name : cm.class_names) {
        out << std::right << std::setw(w) << name;
    }
    out << "  mapped to\n";
    for (int p = 0; p < clusters; ++p) {
        out << std::left << std::setw(9) << p;
        for (int t = 0; t < classes; ++t) {
            out << std::right << std::setw(w) << cm.counts(p, t);
        }
        const int mapped = rep.mapping.to_class[static_cast<std::size_t>(p)];
        out << "  " << (mapped >= 0 ? cm.class_names[static_cast<std::size_t>(mapped)]
                                    : std::string("-"));
        out << "\n";
    }

    out << "\nAccuracy per class\n";
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << "class"
        << std::right << std::setw(8) << "total" << std::setw(9) << "correct"
        << std::setw(11) << "accuracy%" << "\n";
    for (int t = 0; t < classes; ++t) {
        out << std::left << std::setw(static_cast<int>(name_width) + 2)
            << cm.class_names[static_cast<std::size_t>(t)] << std::right
            << std::setw(8) << rep.class_totals[static_cast<std::size_t>(t)]
            << std::setw(9) << rep.per_class_correct[static_cast<std::size_t>(t)]
            << std::setw(11)
            << truncated_percent(rep.per_class_accuracy[static_cast<std::size_t>(t)])
            << "\n";
    }
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << "sum"
        << std::right << std::setw(8) << rep.image_total << std::setw(9)
        << rep.correct_total << std::setw(11)
        << truncated_percent(rep.overall_accuracy) << "\n";
    return out.str();
}

void write_report_csv(const ReportDocument& doc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::io_error, "cannot write report " + path.string());
    }
    const auto& cm = doc.cm;
    const auto& rep = doc.report;

    out << "somclass-report,1\n";
    out << "classes";
    for (const auto& name : cm.class_names) out << "," << name;
    out << "\n";
    for (Eigen::Index p = 0; p < cm.counts.rows(); ++p) {
        out << "confusion," << p;
        for (Eigen::Index t = 0; t < cm.counts.cols(); ++t) {
            out << "," << cm.counts(p, t);
        }
        out << "\n";
    }
    for (std::size_t p = 0; p < rep.mapping.to_class.size(); ++p) {
        out << "mapping," << p << "," << rep.mapping.to_class[p] << "\n";
    }
    for (std::size_t t = 0; t < rep.class_totals.size(); ++t) {
        out << "per_class," << cm.class_names[t] << "," << rep.class_totals[t] << ","
            << rep.per_class_correct[t] << "," << format_double(rep.per_class_accuracy[t])
            << "," << truncated_percent(rep.per_class_accuracy[t]) << "\n";
    }
    out << "overall," << rep.image_total << "," << rep.correct_total << ","
        << format_double(rep.overall_accuracy) << ","
        << truncated_percent(rep.overall_accuracy) << "\n";
    if (!out) {
        throw Error(Errc::io_error, "write failed for " + path.string());
    }
}

ReportDocument read_report_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::missing_file, "cannot open report " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || split_csv(line) != std::vector<std::string>{"somclass-report", "1"}) {
        throw Error(Errc::corrupt_file, path.string() + ": bad report header");
    }

    ReportDocument doc;
    std::vector<std::vector<int>> confusion_rows;
    bool have_overall = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        const std::string& tag = fields[0];
        try {
            if (tag == "classes") {
                doc.cm.class_names.assign(fields.begin() + 1, fields.end());
            } else if (tag == "confusion") {
                std::vector<int> row;
                for (std::size_t i = 2; i < fields.size(); ++i) {
                    row.push_back(static_cast<int>(parse_long(fields[i])));
                }
                confusion_rows.push_back(std::move(row));
            } else if (tag == "mapping") {
                if (fields.size() != 3) throw Error(Errc::corrupt_file, "mapping arity");
                doc.report.mapping.to_class.push_back(
                    static_cast<int>(parse_long(fields[2])));
            } else if (tag == "per_class") {
                if (fields.size() != 6) throw Error(Errc::corrupt_file, "per_class arity");
                doc.report.class_totals.push_back(parse_long(fields[2]));
                doc.report.per_class_correct.push_back(parse_long(fields[3]));
                doc.report.per_class_accuracy.push_back(parse_double(fields[4]));
            } else if (tag == "overall") {
                if (fields.size() != 5) throw Error(Errc::corrupt_file, "overall arity");
                doc.report.image_total = parse_long(fields[1]);
                doc.report.correct_total = parse_long(fields[2]);
                doc.report.overall_accuracy = parse_double(fields[3]);
                have_overall = true;
            } else {
                throw Error(Errc::corrupt_file, "unknown tag '" + tag + "'");
            }
        } catch (const Error& e) {
            throw Error(Errc::corrupt_file, path.string() + ": " + e.what());
        }
    }

    if (doc.cm.class_names.empty() || confusion_rows.empty() || !have_overall) {
        throw Error(Errc::corrupt_file, path.string() + ": incomplete report");
    }
    const auto classes = doc.cm.class_names.size();
    doc.cm.counts.resize(static_cast<Eigen::Index>(confusion_rows.size()),
                         static_cast<Eigen::Index>(classes));
    for (std::size_t p = 0; p < confusion_rows.size(); ++p) {
        if (confusion_rows[p].size() != classes) {
            throw Error(Errc::corrupt_file, path.string() + ": confusion row arity");
        }
        for (std::size_t t = 0; t < classes; ++t) {
            doc.cm.counts(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(t)) =
                confusion_rows[p][t];
        }
    }
    if (doc.report.mapping.to_class.size() != confusion_rows.size() ||
        doc.report.class_totals.size() != classes) {
        throw Error(Errc::corrupt_file, path.string() + ": inconsistent sections");
    }
    doc.report.class_names = doc.cm.class_names;
    return doc;
}

}  // namespace somclass
