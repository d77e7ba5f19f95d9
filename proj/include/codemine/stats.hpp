#ifndef CODEMINE_STATS_HPP
#define CODEMINE_STATS_HPP

#include <string>
#include <vector>

#include "codemine/dataset.hpp"

namespace codemine {

enum class PopulationFilter { All, FixesGt0 };

struct MetricStats {
    std::string metric;
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0; // sample (n-1); 0 for a single row
};

// Per-metric mean/median/sample standard deviation over the chosen
// population. Throws EmptyResult when the filtered population is empty.
std::vector<MetricStats> reference_values(const Dataset& ds, PopulationFilter filter);

struct FixDistribution {
    long zero_count = 0;
    long positive_count = 0;
    double zero_pct = 0.0;     // one decimal place
    double positive_pct = 0.0;
};

FixDistribution fix_distribution(const Dataset& ds);

// CSV `metric,population,mean,median,stddev`, two decimals, populations
// "all" and "fixes_gt_0" (the latter omitted when empty).
std::string reference_values_csv(const Dataset& ds);

// CSV `bucket,count,pct` with buckets `0` and `>0`, one decimal percentages.
std::string fix_distribution_csv(const Dataset& ds);

} // namespace codemine

#endif
