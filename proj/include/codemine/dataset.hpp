#ifndef CODEMINE_DATASET_HPP
#define CODEMINE_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "codemine/metrics.hpp"

namespace codemine {

// The joined table exported as ARFF: classID, one numeric column per metric
// (alphabetical), then fixingRevisions.
struct Dataset {
    struct Row {
        std::string class_id; // `<project_id>:<file_path>#<qualified_id>`
        std::vector<double> values;
        double fixing_revisions = 0;
    };

    std::string relation_name = "classes";
    std::vector<std::string> metric_names;
    std::vector<Row> rows;

    std::size_t metric_count() const { return metric_names.size(); }
};

struct JoinLog {
    // `<key><TAB>dropped:<missing side>` lines, side is "metrics" or "ncfix".
    std::vector<std::string> dropped;
    std::string text() const;
};

// Inner join on (project_id, class_id); keys missing from either side are
// dropped and logged. Duplicate keys in either input raise DuplicateKey.
Dataset join_rows(std::span<const MetricsRow> metric_rows, std::span<const ClassFix> fixes,
                  JoinLog* log = nullptr);

std::string write_arff_string(const Dataset& ds);
void write_arff(const Dataset& ds, const std::filesystem::path& path);

Dataset read_arff_string(std::string_view text);
Dataset read_arff(const std::filesystem::path& path);

// Deterministic seeded shuffle; train gets floor(n * train_fraction) rows.
// Throws InvalidArgument for fractions outside (0,1) or datasets with < 2 rows.
std::pair<Dataset, Dataset> split_dataset(const Dataset& ds, double train_fraction,
                                          std::uint64_t seed);

} // namespace codemine

#endif
