#include "maintlab/report.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "maintlab/csv.hpp"

namespace maintlab {

namespace {

using csv::escape;
using csv::format_double;
using csv::format_fixed;

std::string opt_score(const std::optional<double>& value) {
    return value ? format_fixed(*value, 2) : "-";
}

std::vector<std::string> next_row(std::istream& in, bool& ok) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ok = true;
        return csv::split_row(line);
    }
    ok = false;
    return {};
}

double to_double(const std::string& cell, const char* what) {
    try {
        return std::stod(cell);
    } catch (const std::exception&) {
        throw AnalysisError(std::string("bad numeric cell in ") + what + ": '" + cell + "'");
    }
}

}  // namespace

void write_metrics_csv(std::ostream& out, std::span<const FileAnalysis> analyses) {
    out << "path,loc,cc_file,cc_max,n1,n2,N1,N2,volume,mi,mi_band\n";
    for (const FileAnalysis& a : analyses) {
        if (!a.metrics) continue;
        const MetricVector& m = *a.metrics;
        out << escape(a.path) << ',' << m.loc << ',' << m.cc_file << ',' << m.cc_max << ','
            << m.halstead.distinct_operators << ',' << m.halstead.distinct_operands << ','
            << m.halstead.total_operators << ',' << m.halstead.total_operands << ','
            << format_double(m.halstead.volume) << ',' << format_double(m.mi) << ','
            << mi_band_name(m.band) << '\n';
    }
}

void write_metrics_jsonl(std::ostream& out, std::span<const FileAnalysis> analyses) {
    for (const FileAnalysis& a : analyses) {
        if (!a.metrics) continue;
        const MetricVector& m = *a.metrics;
        nlohmann::ordered_json record;
        record["path"] = a.path;
        record["loc"] = m.loc;
        record["cc_file"] = m.cc_file;
        record["cc_max"] = m.cc_max;
        record["n1"] = m.halstead.distinct_operators;
        record["n2"] = m.halstead.distinct_operands;
        record["N1"] = m.halstead.total_operators;
        record["N2"] = m.halstead.total_operands;
        record["volume"] = m.halstead.volume;
        record["mi"] = m.mi;
        record["mi_band"] = std::string(mi_band_name(m.band));
        out << record.dump() << '\n';
    }
}

void write_sqale_jsonl(std::ostream& out, std::span<const FileAnalysis> analyses) {
    for (const FileAnalysis& a : analyses) {
        if (!a.sqale) continue;
        nlohmann::ordered_json record;
        record["path"] = a.path;
        record["td_time_minutes"] = a.sqale->td_time_minutes;
        record["code_lines"] = a.loc.code_lines;
        record["td_ratio"] = a.sqale->td_ratio;
        record["rating"] = std::string(rating_name(a.sqale->rating));
        out << record.dump() << '\n';
    }
}

void write_health_jsonl(std::ostream& out, std::span<const FileAnalysis> analyses) {
    for (const FileAnalysis& a : analyses) {
        if (!a.health) continue;
        nlohmann::ordered_json record;
        record["path"] = a.path;
        record["health_value"] = a.health->value;
        record["health_category"] = std::string(health_category_name(a.health->category));
        record["smells"] = a.health->contributing;
        out << record.dump() << '\n';
    }
}

void write_findings_jsonl(std::ostream& out, std::span<const FileAnalysis> analyses) {
    for (const FileAnalysis& a : analyses) {
        for (const SmellFinding& f : a.findings) {
            nlohmann::ordered_json record;
            record["path"] = f.path;
            record["rule"] = f.rule_id;
            record["severity"] = std::string(severity_name(f.severity));
            record["start_line"] = f.span.first_line;
            record["end_line"] = f.span.last_line;
            record["remediation_minutes"] = f.remediation_minutes;
            record["message"] = f.message;
            out << record.dump() << '\n';
        }
    }
}

void write_sqale_csv(std::ostream& out, std::span<const FileAnalysis> analyses) {
    out << "path,td_time_minutes,code_lines,td_ratio,rating\n";
    for (const FileAnalysis& a : analyses) {
        if (!a.sqale) continue;
        out << escape(a.path) << ',' << format_double(a.sqale->td_time_minutes) << ','
            << a.loc.code_lines << ',' << format_fixed(a.sqale->td_ratio, 3) << ','
            << rating_name(a.sqale->rating) << '\n';
    }
}

void write_health_csv(std::ostream& out, std::span<const FileAnalysis> analyses) {
    out << "path,health_value,health_category,smells\n";
    for (const FileAnalysis& a : analyses) {
        if (!a.health) continue;
        std::string smells;
        for (const auto& [rule, count] : a.health->contributing) {
            if (!smells.empty()) smells += ';';
            smells += rule + ":" + std::to_string(count);
        }
        out << escape(a.path) << ',' << format_fixed(a.health->value, 1) << ','
            << health_category_name(a.health->category) << ',' << escape(smells) << '\n';
    }
}

void write_features_csv(std::ostream& out, std::span<const FileAnalysis> analyses,
                        const RuleCatalog& catalog) {
    const std::vector<std::string> names = feature_names(catalog);
    out << "path";
    for (const std::string& name : names) out << ',' << name;
    out << '\n';
    for (const FileAnalysis& a : analyses) {
        const auto row = feature_row(a, catalog);
        if (!row) continue;
        out << escape(a.path);
        for (double v : *row) out << ',' << format_double(v);
        out << '\n';
    }
}

void write_diagnostics_jsonl(std::ostream& out, std::span<const FileAnalysis> analyses) {
    for (const FileAnalysis& a : analyses) {
        nlohmann::ordered_json record;
        record["path"] = a.path;
        switch (a.status) {
            case AnalysisStatus::Ok: record["status"] = "ok"; break;
            case AnalysisStatus::TokenizeFailed: record["status"] = "tokenize_failed"; break;
            case AnalysisStatus::StructureFailed: record["status"] = "structure_failed"; break;
        }
        record["messages"] = a.diagnostics;
        out << record.dump() << '\n';
    }
}

MetricTable read_metric_table(std::istream& metrics_csv, std::istream& sqale_csv,
                              std::istream& health_csv, std::istream& features_csv,
                              double cost_per_line) {
    MetricTable table;
    bool ok = false;

    auto header = next_row(metrics_csv, ok);
    if (!ok || header.empty() || header[0] != "path") {
        throw AnalysisError("metrics CSV: missing header");
    }
    while (true) {
        const auto row = next_row(metrics_csv, ok);
        if (!ok) break;
        if (row.size() < 11) throw AnalysisError("metrics CSV: short row");
        MetricRecord& record = table.rows[row[0]];
        record.code_lines = to_double(row[1], "metrics CSV");
        record.mi = to_double(row[9], "metrics CSV");
    }

    header = next_row(sqale_csv, ok);
    if (!ok || header.empty() || header[0] != "path") {
        throw AnalysisError("sqale CSV: missing header");
    }
    while (true) {
        const auto row = next_row(sqale_csv, ok);
        if (!ok) break;
        if (row.size() < 5) throw AnalysisError("sqale CSV: short row");
        const auto it = table.rows.find(row[0]);
        if (it == table.rows.end()) continue;
        it->second.td_time = to_double(row[1], "sqale CSV");
        const double code_lines = to_double(row[2], "sqale CSV");
        it->second.td_ratio =
            it->second.td_time / (cost_per_line * std::max(code_lines, 1.0));
    }

    header = next_row(health_csv, ok);
    if (!ok || header.empty() || header[0] != "path") {
        throw AnalysisError("health CSV: missing header");
    }
    while (true) {
        const auto row = next_row(health_csv, ok);
        if (!ok) break;
        if (row.size() < 3) throw AnalysisError("health CSV: short row");
        const auto it = table.rows.find(row[0]);
        if (it == table.rows.end()) continue;
        it->second.health = to_double(row[1], "health CSV");
    }

    header = next_row(features_csv, ok);
    if (!ok || header.empty() || header[0] != "path") {
        throw AnalysisError("features CSV: missing header");
    }
    table.feature_names.assign(header.begin() + 1, header.end());
    while (true) {
        const auto row = next_row(features_csv, ok);
        if (!ok) break;
        if (row.size() != header.size()) throw AnalysisError("features CSV: ragged row");
        const auto it = table.rows.find(row[0]);
        if (it == table.rows.end()) continue;
        it->second.features.reserve(row.size() - 1);
        for (std::size_t i = 1; i < row.size(); ++i) {
            it->second.features.push_back(to_double(row[i], "features CSV"));
        }
    }
    return table;
}

void write_report_csv(std::ostream& out, std::span<const EvalReport> rows) {
    out << "id,approach,threshold,acc,uc1_pr,uc1_rc,uc1_f1,uc2_pr,uc2_rc,uc2_f1,uc2_f05,auc\n";
    for (const EvalReport& row : rows) {
        out << row.approach_id << ',' << escape(row.approach_name) << ',';
        out << (std::isnan(row.threshold) ? "-" : format_double(row.threshold));
        out << ',' << format_fixed(row.accuracy, 2);
        out << ',' << opt_score(row.uc1.precision) << ',' << opt_score(row.uc1.recall) << ','
            << format_fixed(row.uc1.f1, 2);
        if (row.approach_id == "F") {
            out << ",-,-,-,-";  // no liability-side scores for the human reference
        } else {
            out << ',' << opt_score(row.uc2.precision) << ',' << opt_score(row.uc2.recall) << ','
                << format_fixed(row.uc2.f1, 2) << ',' << format_fixed(row.uc2.f_beta, 2);
        }
        out << ',' << format_fixed(row.auc, 2) << '\n';
    }
}

void write_predictions_csv(std::ostream& out, std::span<const std::string> paths,
                           std::span<const double> scores) {
    out << "path,score\n";
    for (std::size_t i = 0; i < paths.size(); ++i) {
        out << escape(paths[i]) << ',' << format_double(scores[i]) << '\n';
    }
}

std::vector<std::pair<std::string, double>> read_predictions_csv(std::istream& in) {
    bool ok = false;
    const auto header = next_row(in, ok);
    if (!ok || header.size() < 2 || header[0] != "path" || header[1] != "score") {
        throw AnalysisError("predictions CSV must start with header path,score");
    }
    std::vector<std::pair<std::string, double>> rows;
    while (true) {
        const auto row = next_row(in, ok);
        if (!ok) break;
        if (row.size() != 2) throw AnalysisError("predictions CSV: malformed row");
        rows.emplace_back(row[0], to_double(row[1], "predictions CSV"));
    }
    return rows;
}

void write_roc_csv(std::ostream& out, const std::map<std::string, RocCurve>& curves_by_approach) {
    out << "approach,threshold,fpr,tpr\n";
    for (const auto& [id, curve] : curves_by_approach) {
        for (const RocPoint& p : curve.points) {
            out << id << ',' << (std::isnan(p.threshold) ? "" : format_double(p.threshold)) << ','
                << format_double(p.fpr) << ',' << format_double(p.tpr) << '\n';
        }
    }
}

}  // namespace maintlab
