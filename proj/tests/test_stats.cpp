#include <doctest.h>

#include <cmath>
#include <random>

#include "codemine/errors.hpp"
#include "codemine/stats.hpp"

using namespace codemine;

namespace {

Dataset dataset_with_targets(const std::vector<double>& first_metric,
                             const std::vector<double>& targets) {
    Dataset ds;
    ds.metric_names.assign(kMetricNames.begin(), kMetricNames.end());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        Dataset::Row row;
        row.class_id = "p:f.java#C" + std::to_string(i);
        row.values.assign(12, 0.0);
        row.values[0] = i < first_metric.size() ? first_metric[i] : 0.0;
        row.fixing_revisions = targets[i];
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

} // namespace

TEST_CASE("mean median and sample deviation on the worked example") {
    Dataset ds = dataset_with_targets({0, 0, 3}, {0, 0, 0});
    auto stats = reference_values(ds, PopulationFilter::All);
    REQUIRE(stats.size() == 12);
    CHECK(stats[0].metric == "CNOAD");
    CHECK(stats[0].mean == doctest::Approx(1.0));
    CHECK(stats[0].median == doctest::Approx(0.0));
    CHECK(stats[0].stddev == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("single row population uses the zero-deviation convention") {
    Dataset ds = dataset_with_targets({5}, {2});
    auto stats = reference_values(ds, PopulationFilter::All);
    CHECK(stats[0].mean == doctest::Approx(5.0));
    CHECK(stats[0].median == doctest::Approx(5.0));
    CHECK(stats[0].stddev == 0.0);
}

TEST_CASE("all-equal values have zero deviation and an even-count median") {
    Dataset ds = dataset_with_targets({4, 4, 4, 4}, {0, 0, 0, 0});
    auto stats = reference_values(ds, PopulationFilter::All);
    CHECK(stats[0].stddev == 0.0);
    CHECK(stats[0].median == doctest::Approx(4.0));

    Dataset even = dataset_with_targets({1, 2, 3, 10}, {0, 0, 0, 0});
    auto even_stats = reference_values(even, PopulationFilter::All);
    CHECK(even_stats[0].median == doctest::Approx(2.5));
}

TEST_CASE("statistics match a brute-force recomputation") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> value(0.0, 40.0);
    std::vector<double> metric, targets;
    for (int i = 0; i < 257; ++i) {
        metric.push_back(std::floor(value(rng)));
        targets.push_back(static_cast<double>(i % 5));
    }
    Dataset ds = dataset_with_targets(metric, targets);
    auto stats = reference_values(ds, PopulationFilter::All);

    double mean = 0;
    for (double v : metric) mean += v;
    mean /= static_cast<double>(metric.size());
    double sq = 0;
    for (double v : metric) sq += (v - mean) * (v - mean);
    double sd = std::sqrt(sq / static_cast<double>(metric.size() - 1));
    std::vector<double> sorted = metric;
    std::sort(sorted.begin(), sorted.end());
    double median = sorted[sorted.size() / 2]; // odd count

    CHECK(std::fabs(stats[0].mean - mean) < 1e-12);
    CHECK(std::fabs(stats[0].stddev - sd) < 1e-12);
    CHECK(std::fabs(stats[0].median - median) < 1e-12);
}

TEST_CASE("fixes filter shrinks the population and matches the distribution") {
    Dataset ds = dataset_with_targets({1, 2, 3, 4}, {0, 0, 2, 5});
    FixDistribution dist = fix_distribution(ds);
    CHECK(dist.zero_count == 2);
    CHECK(dist.positive_count == 2);
    CHECK(dist.zero_pct == doctest::Approx(50.0));
    CHECK(dist.positive_pct == doctest::Approx(50.0));
    CHECK(dist.zero_count + dist.positive_count == static_cast<long>(ds.rows.size()));

    auto filtered = reference_values(ds, PopulationFilter::FixesGt0);
    CHECK(filtered[0].mean == doctest::Approx(3.5)); // rows with fixes: metric values 3 and 4

    Dataset zeros = dataset_with_targets({1, 1}, {0, 0});
    FixDistribution all_zero = fix_distribution(zeros);
    CHECK(all_zero.zero_pct == doctest::Approx(100.0));
    CHECK(all_zero.positive_pct == doctest::Approx(0.0));
    CHECK_THROWS_AS(reference_values(zeros, PopulationFilter::FixesGt0), EmptyResult);
}

TEST_CASE("empty datasets are rejected") {
    Dataset empty;
    empty.metric_names.assign(kMetricNames.begin(), kMetricNames.end());
    CHECK_THROWS_AS(reference_values(empty, PopulationFilter::All), EmptyResult);
    CHECK_THROWS_AS(fix_distribution(empty), EmptyResult);
}

TEST_CASE("csv outputs carry the documented headers and precision") {
    Dataset ds = dataset_with_targets({0, 0, 3}, {0, 1, 2});
    std::string reference = reference_values_csv(ds);
    CHECK(reference.rfind("metric,population,mean,median,stddev\n", 0) == 0);
    CHECK(reference.find("CNOAD,all,1.00,0.00,1.73\n") != std::string::npos);
    CHECK(reference.find(",fixes_gt_0,") != std::string::npos);

    std::string distribution = fix_distribution_csv(ds);
    CHECK(distribution == "bucket,count,pct\n0,1,33.3\n>0,2,66.7\n");
}
