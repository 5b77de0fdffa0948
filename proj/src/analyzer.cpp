#include "maintlab/analyzer.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "maintlab/language.hpp"

namespace maintlab {

FileAnalysis analyze_unit(const SourceUnit& unit, const AnalyzerConfig& config) {
    FileAnalysis out;
    out.path = unit.path;
    out.project = unit.project;

    const LanguageAdapter* adapter = find_adapter(unit.language);
    if (adapter == nullptr) throw UnsupportedLanguageError(unit.language);

    out.loc = count_loc(unit, &out.diagnostics);
    try {
        out.tokens = adapter->tokenize(unit.text);
    } catch (const MalformedTextError& e) {
        out.status = AnalysisStatus::TokenizeFailed;
        out.diagnostics.push_back(e.what());
        return out;
    }
    try {
        out.structure = adapter->parse(out.tokens);
    } catch (const UnbalancedBracesError& e) {
        out.status = AnalysisStatus::StructureFailed;
        out.diagnostics.push_back(e.what());
        return out;
    }

    const RuleSpec* dup_rule = config.catalog.find(rule_id::kDuplicatedBlock);
    if (dup_rule != nullptr) {
        const int window = static_cast<int>(dup_rule->param("min_window_tokens", 40));
        out.duplicates = detect_duplication(out.tokens, window);
    }
    out.findings = detect_structural_smells(*out.structure, out.loc, config.catalog,
                                            out.duplicates, out.path);
    const auto lint = detect_lint_rules(*out.structure, out.tokens, config.catalog, out.path);
    out.findings.insert(out.findings.end(), lint.begin(), lint.end());

    out.metrics = compute_metrics(out.tokens, *out.structure, out.loc, config.cc_aggregate);
    out.sqale = sqale(out.findings, out.loc.code_lines, config.cost_per_line);
    out.health = health_score(out.findings, config.catalog);
    return out;
}

std::vector<std::string> feature_names(const RuleCatalog& catalog) {
    std::vector<std::string> names = {
        "code_lines",    "total_lines",  "comment_lines", "cc_file",
        "cc_max",        "volume",       "distinct_operators", "distinct_operands",
        "total_operators", "total_operands", "type_count", "method_count",
        "max_parameters", "max_nesting",  "max_method_lines", "duplicate_pairs",
    };
    for (const RuleSpec& rule : catalog.rules()) {
        names.push_back("findings_" + rule.id);
    }
    return names;
}

std::optional<std::vector<double>> feature_row(const FileAnalysis& analysis,
                                               const RuleCatalog& catalog) {
    if (analysis.status != AnalysisStatus::Ok || !analysis.metrics || !analysis.structure) {
        return std::nullopt;
    }
    const MetricVector& m = *analysis.metrics;
    const StructuralModel& s = *analysis.structure;
    int max_params = 0;
    int max_nesting = 0;
    int max_lines = 0;
    for (const MethodDecl& method : s.methods) {
        max_params = std::max(max_params, method.parameter_count);
        max_nesting = std::max(max_nesting, method.max_nesting_depth);
        max_lines = std::max(max_lines, method.span.lines());
    }
    std::vector<double> row = {
        static_cast<double>(analysis.loc.code_lines),
        static_cast<double>(analysis.loc.total_lines),
        static_cast<double>(analysis.loc.comment_lines),
        static_cast<double>(m.cc_file),
        static_cast<double>(m.cc_max),
        m.halstead.volume,
        static_cast<double>(m.halstead.distinct_operators),
        static_cast<double>(m.halstead.distinct_operands),
        static_cast<double>(m.halstead.total_operators),
        static_cast<double>(m.halstead.total_operands),
        static_cast<double>(s.types.size()),
        static_cast<double>(s.methods.size()),
        static_cast<double>(max_params),
        static_cast<double>(max_nesting),
        static_cast<double>(max_lines),
        static_cast<double>(analysis.duplicates.size()),
    };
    for (const RuleSpec& rule : catalog.rules()) {
        double count = 0;
        for (const SmellFinding& finding : analysis.findings) {
            if (finding.rule_id == rule.id) ++count;
        }
        row.push_back(count);
    }
    return row;
}

std::vector<FileAnalysis> analyze_corpus(const std::vector<SourceUnit>& units,
                                         const AnalyzerConfig& config, int jobs) {
    std::vector<FileAnalysis> results(units.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < units.size(); ++i) {
            results[i] = analyze_unit(units[i], config);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(units.size());
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= units.size()) return;
            try {
                results[i] = analyze_unit(units[i], config);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(jobs, static_cast<int>(units.size()));
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& error : errors) {
        if (error) std::rethrow_exception(error);
    }
    return results;
}

}  // namespace maintlab
