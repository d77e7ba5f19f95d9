#include "codemine/metrics.hpp"

#include <algorithm>
#include <set>

#include "codemine/log.hpp"
#include "codemine/text.hpp"

namespace codemine {

using java::Declaration;
using java::Expression;
using java::Method;
using java::Statement;

namespace {

long count_statement_nodes(const Statement& st) {
    long count = 1;
    for (const Statement& child : st.children) count += count_statement_nodes(child);
    return count;
}

void count_anonymous_in_expressions(const std::vector<Expression>& exprs, long& count) {
    for (const Expression& expr : exprs) {
        if (expr.anonymous_declaration) ++count;
        count_anonymous_in_expressions(expr.children, count);
    }
}

// Statement walk that stays within the owning declaration: local and
// anonymous declarations are not descended into, only their presence at
// this level matters.
void count_anonymous_in_statement(const Statement& st, long& count) {
    count_anonymous_in_expressions(st.expressions, count);
    for (const Statement& child : st.children) count_anonymous_in_statement(child, count);
}

void collect_calls_in_expressions(const std::vector<Expression>& exprs,
                                  std::set<std::string>& names) {
    for (const Expression& expr : exprs) {
        if (!expr.method_call_name.empty()) names.insert(expr.method_call_name);
        collect_calls_in_expressions(expr.children, names);
    }
}

void collect_calls_in_statement(const Statement& st, std::set<std::string>& names) {
    collect_calls_in_expressions(st.expressions, names);
    for (const Statement& child : st.children) collect_calls_in_statement(child, names);
}

} // namespace

std::array<long, 12> MetricVector::as_row() const {
    // kMetricNames order: CNOAD CNOF CNOM CNOND CNOSIM MDODN NOAD NOF NOM NOND NOSIM RFC
    return {cnoad, cnof, cnom, cnond, cnosim, mdodn, noad, nof, nom, nond, nosim, rfc};
}

long compute_nom(const Declaration& decl) {
    return static_cast<long>(decl.methods.size());
}

long compute_nof(const Declaration& decl) {
    return static_cast<long>(decl.fields.size());
}

long compute_nond(const Declaration& decl) {
    return static_cast<long>(decl.nested_declarations.size());
}

DeclarationCounts compute_declaration_counts(const Declaration& decl) {
    return {compute_nom(decl), compute_nof(decl), compute_nond(decl)};
}

long compute_nosim(const Declaration& decl) {
    long count = 0;
    for (const Method& method : decl.methods)
        if (method.has_body) count += count_statement_nodes(method.body);
    return count;
}

long compute_mdodn(const Declaration& decl) {
    long depth = 0;
    for (const Declaration& nested : decl.nested_declarations)
        depth = std::max(depth, 1 + compute_mdodn(nested));
    return depth;
}

long compute_noad(const Declaration& decl) {
    long count = 0;
    for (const auto& field : decl.fields)
        count_anonymous_in_expressions(field.initializer_expressions, count);
    for (const Statement& block : decl.initializer_blocks)
        count_anonymous_in_statement(block, count);
    for (const Method& method : decl.methods)
        if (method.has_body) count_anonymous_in_statement(method.body, count);
    return count;
}

long compute_rfc(const Declaration& decl) {
    std::set<std::string> called;
    for (const Method& method : decl.methods)
        if (method.has_body) collect_calls_in_statement(method.body, called);

    std::set<std::string> declared;
    for (const Method& method : decl.methods) declared.insert(method.name);

    long remote = 0;
    for (const auto& name : called)
        if (!declared.count(name)) ++remote;
    return compute_nom(decl) + remote;
}

CumulativeCounts compute_cumulative(const Declaration& decl) {
    CumulativeCounts totals{compute_nom(decl), compute_nof(decl), compute_nosim(decl),
                            compute_noad(decl), compute_nond(decl)};
    java::for_each_direct_inner(decl, [&](const Declaration& inner) {
        CumulativeCounts c = compute_cumulative(inner);
        totals.cnom += c.cnom;
        totals.cnof += c.cnof;
        totals.cnosim += c.cnosim;
        totals.cnoad += c.cnoad;
        totals.cnond += c.cnond;
    });
    return totals;
}

MetricVector compute_metrics(const Declaration& decl) {
    MetricVector v;
    DeclarationCounts counts = compute_declaration_counts(decl);
    v.nom = counts.nom;
    v.nof = counts.nof;
    v.nond = counts.nond;
    v.nosim = compute_nosim(decl);
    v.mdodn = compute_mdodn(decl);
    v.noad = compute_noad(decl);
    v.rfc = compute_rfc(decl);
    CumulativeCounts c = compute_cumulative(decl);
    v.cnom = c.cnom;
    v.cnof = c.cnof;
    v.cnosim = c.cnosim;
    v.cnoad = c.cnoad;
    v.cnond = c.cnond;
    return v;
}

SnapshotMetrics compute_all(const Snapshot& snapshot, const std::string& project_id) {
    SnapshotMetrics result;

    std::vector<std::string> java_files;
    for (const auto& path : snapshot.files())
        if (ends_with(path, ".java")) java_files.push_back(path);

    auto contents = snapshot.read_all(java_files);
    for (const auto& path : java_files) {
        auto it = contents.find(path);
        if (it == contents.end()) {
            log_info("metrics: " + path + " not readable at " + snapshot.at_revision());
            result.skipped_files.push_back(path);
            continue;
        }
        java::ParseOutcome outcome = java::parse_compilation_unit(it->second, path);
        if (!outcome.ok()) {
            log_info("metrics: skipping unparseable " + path + ": " + outcome.error->message);
            result.skipped_files.push_back(path);
            continue;
        }
        for (const Declaration* decl : java::enumerate_class_declarations(*outcome.unit)) {
            MetricsRow row;
            row.project_id = project_id;
            row.class_id = path + "#" + decl->qualified_id;
            row.kind = decl->kind;
            row.metrics = compute_metrics(*decl);
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

std::string format_metric_dump(std::span<const MetricsRow> rows, std::string_view metric_name) {
    auto metric_it = std::find(kMetricNames.begin(), kMetricNames.end(), metric_name);
    if (metric_it == kMetricNames.end())
        return {};
    std::size_t index = static_cast<std::size_t>(metric_it - kMetricNames.begin());

    std::vector<std::pair<std::string, long>> lines;
    lines.reserve(rows.size());
    for (const MetricsRow& row : rows)
        lines.emplace_back(row.project_id + "\t" + row.class_id, row.metrics.as_row()[index]);
    std::sort(lines.begin(), lines.end());

    std::string out;
    for (const auto& [key, value] : lines) {
        out += key;
        out += '\t';
        out += std::to_string(value);
        out += '\n';
    }
    return out;
}

} // namespace codemine
