#include "codemine/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "codemine/errors.hpp"

namespace codemine {

namespace {

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

// Sample standard deviation (n-1); zero for a single value.
double stddev_of(const std::vector<double>& values, double mean) {
    if (values.size() < 2) return 0.0;
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    return std::sqrt(sq / static_cast<double>(values.size() - 1));
}

std::string two_decimals(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string one_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string population_rows(const Dataset& ds, PopulationFilter filter, const char* label) {
    std::string out;
    for (const MetricStats& s : reference_values(ds, filter)) {
        out += s.metric;
        out += ',';
        out += label;
        out += ',';
        out += two_decimals(s.mean);
        out += ',';
        out += two_decimals(s.median);
        out += ',';
        out += two_decimals(s.stddev);
        out += '\n';
    }
    return out;
}

} // namespace

std::vector<MetricStats> reference_values(const Dataset& ds, PopulationFilter filter) {
    std::vector<const Dataset::Row*> rows;
    for (const Dataset::Row& row : ds.rows)
        if (filter == PopulationFilter::All || row.fixing_revisions > 0) rows.push_back(&row);
    if (rows.empty())
        throw EmptyResult("empty population for reference values");

    std::vector<MetricStats> stats;
    for (std::size_t m = 0; m < ds.metric_count(); ++m) {
        std::vector<double> values;
        values.reserve(rows.size());
        for (const Dataset::Row* row : rows) values.push_back(row->values[m]);

        MetricStats s;
        s.metric = ds.metric_names[m];
        s.mean = mean_of(values);
        s.median = median_of(values);
        s.stddev = stddev_of(values, s.mean);
        stats.push_back(std::move(s));
    }
    return stats;
}

FixDistribution fix_distribution(const Dataset& ds) {
    if (ds.rows.empty())
        throw EmptyResult("empty dataset for fix distribution");

    FixDistribution dist;
    for (const Dataset::Row& row : ds.rows)
        (row.fixing_revisions > 0 ? dist.positive_count : dist.zero_count) += 1;
    double n = static_cast<double>(ds.rows.size());
    dist.zero_pct = std::round(1000.0 * static_cast<double>(dist.zero_count) / n) / 10.0;
    dist.positive_pct = std::round(1000.0 * static_cast<double>(dist.positive_count) / n) / 10.0;
    return dist;
}

std::string reference_values_csv(const Dataset& ds) {
    std::string out = "metric,population,mean,median,stddev\n";
    out += population_rows(ds, PopulationFilter::All, "all");
    bool any_fixed = false;
    for (const Dataset::Row& row : ds.rows)
        if (row.fixing_revisions > 0) {
            any_fixed = true;
            break;
        }
    if (any_fixed)
        out += population_rows(ds, PopulationFilter::FixesGt0, "fixes_gt_0");
    return out;
}

std::string fix_distribution_csv(const Dataset& ds) {
    FixDistribution dist = fix_distribution(ds);
    std::string out = "bucket,count,pct\n";
    out += "0," + std::to_string(dist.zero_count) + "," + one_decimal(dist.zero_pct) + "\n";
    out += ">0," + std::to_string(dist.positive_count) + "," + one_decimal(dist.positive_pct) + "\n";
    return out;
}

} // namespace codemine
