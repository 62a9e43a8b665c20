#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace narranet {

// Average ranks (1-based); tied values share the mean of the positions they
// occupy.
std::vector<double> average_ranks(std::span<const double> values);

// Product-moment correlation. nullopt ("undefined") when the vectors are
// shorter than two, a value is non-finite, or either side has zero variance.
std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys);

// Pearson on average ranks.
std::optional<double> spearman(std::span<const double> xs, std::span<const double> ys);

// Median-unbiased quantile (interpolation h = (n + 1/3) p + 1/3, clamped to
// [1, n]). values need not be sorted; must be non-empty and finite.
double quantile_type8(std::vector<double> values, double p);

// Five-number summary plus mean over the defined inputs; `skipped` counts
// inputs that were undefined (nullopt / NaN) and excluded. count == 0 means
// every input was undefined and the stat fields are unset (NaN).
struct DistributionSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double mean = 0.0;
    std::size_t count = 0;
    std::size_t skipped = 0;
};

DistributionSummary summarize_coefficients(const std::vector<std::optional<double>>& values);
DistributionSummary summarize_values(const std::vector<double>& values);

// Least-squares line y = slope * x + intercept. Requires at least two
// distinct x values (throws DataError otherwise).
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;

    bool operator==(const LinearFit&) const = default;
};

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

}  // namespace narranet
