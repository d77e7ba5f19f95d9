#ifndef CODEMINE_METRICS_HPP
#define CODEMINE_METRICS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codemine/history.hpp"
#include "codemine/java_ast.hpp"

namespace codemine {

// The twelve class-level metrics. Column order in datasets and dumps is
// alphabetical by name (kMetricNames).
struct MetricVector {
    long nom = 0;    // declared methods (unweighted WMC)
    long nof = 0;    // fields
    long nond = 0;   // direct body-level nested declarations
    long nosim = 0;  // statement nodes in own methods, blocks included
    long mdodn = 0;  // max depth of body-level declaration nesting, 0 when un-nested
    long noad = 0;   // anonymous declarations created in own bodies
    long rfc = 0;    // methods + distinct externally-named invocations
    long cnom = 0;
    long cnof = 0;
    long cnosim = 0;
    long cnoad = 0;
    long cnond = 0;

    std::array<long, 12> as_row() const; // values in kMetricNames order
};

inline constexpr std::array<std::string_view, 12> kMetricNames = {
    "CNOAD", "CNOF", "CNOM", "CNOND", "CNOSIM", "MDODN",
    "NOAD",  "NOF",  "NOM",  "NOND",  "NOSIM",  "RFC",
};

struct MetricsRow {
    std::string project_id;
    std::string class_id; // `<file_path>#<qualified_id>`
    java::DeclKind kind = java::DeclKind::Class;
    MetricVector metrics;
    std::optional<long> ncfix; // unset until joined
};

long compute_nom(const java::Declaration& decl);
long compute_nof(const java::Declaration& decl);
long compute_nond(const java::Declaration& decl);
struct DeclarationCounts { long nom = 0, nof = 0, nond = 0; };
DeclarationCounts compute_declaration_counts(const java::Declaration& decl);

// Statement nodes across decl's own methods; statements inside nested,
// local or anonymous declarations belong to those declarations.
long compute_nosim(const java::Declaration& decl);

// Depth of the body-level nesting tree under decl; decl itself is depth 0.
long compute_mdodn(const java::Declaration& decl);

// Anonymous declarations whose nearest enclosing declaration is decl
// (method bodies, initializer blocks, field initializers).
long compute_noad(const java::Declaration& decl);

long compute_rfc(const java::Declaration& decl);

struct CumulativeCounts { long cnom = 0, cnof = 0, cnosim = 0, cnoad = 0, cnond = 0; };
// Each value is the plain metric summed over decl and every transitively
// contained declaration (nested, local, anonymous).
CumulativeCounts compute_cumulative(const java::Declaration& decl);

MetricVector compute_metrics(const java::Declaration& decl);

struct SnapshotMetrics {
    std::vector<MetricsRow> rows;
    std::vector<std::string> skipped_files; // unparseable .java files
};

// One row per declaration enumerated from every parseable .java file in the
// snapshot; ncfix left unset.
SnapshotMetrics compute_all(const Snapshot& snapshot, const std::string& project_id);

// Per-metric dump: `<project_id><TAB><class_id><TAB><value>` sorted by key.
std::string format_metric_dump(std::span<const MetricsRow> rows, std::string_view metric_name);

} // namespace codemine

#endif
