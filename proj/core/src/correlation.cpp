#include "narranet/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "narranet/errors.hpp"

namespace narranet {

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        // Positions i..j (0-based) hold one tie group; all get the mean of
        // the 1-based positions.
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw Error("correlation inputs differ in length");
    }
    const std::size_t n = xs.size();
    if (n < 2) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
            return std::nullopt;
        }
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return std::nullopt;  // a constant side leaves the coefficient undefined
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::optional<double> spearman(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw Error("correlation inputs differ in length");
    }
    for (const double v : xs) {
        if (!std::isfinite(v)) {
            return std::nullopt;
        }
    }
    for (const double v : ys) {
        if (!std::isfinite(v)) {
            return std::nullopt;
        }
    }
    const std::vector<double> rx = average_ranks(xs);
    const std::vector<double> ry = average_ranks(ys);
    return pearson(rx, ry);
}

double quantile_type8(std::vector<double> values, double p) {
    if (values.empty()) {
        throw Error("quantile of an empty sample");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error("quantile level must be in [0, 1]");
    }
    for (const double v : values) {
        if (!std::isfinite(v)) {
            throw Error("quantile input must be finite");
        }
    }
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    // Median-unbiased plotting position, clamped to the sample range.
    const double h = std::clamp((n + 1.0 / 3.0) * p + 1.0 / 3.0, 1.0, n);
    const double floor_h = std::floor(h);
    const auto lo = static_cast<std::size_t>(floor_h) - 1;
    const double frac = h - floor_h;
    if (lo + 1 >= values.size()) {
        return values.back();
    }
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

namespace {

DistributionSummary summarize_sorted(std::vector<double> defined, std::size_t skipped) {
    DistributionSummary s;
    s.skipped = skipped;
    s.count = defined.size();
    if (defined.empty()) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        s.min = s.q1 = s.median = s.q3 = s.max = s.mean = nan;
        return s;
    }
    std::sort(defined.begin(), defined.end());
    s.min = defined.front();
    s.max = defined.back();
    s.q1 = quantile_type8(defined, 0.25);
    s.median = quantile_type8(defined, 0.5);
    s.q3 = quantile_type8(defined, 0.75);
    double total = 0.0;
    for (const double v : defined) {
        total += v;
    }
    s.mean = total / static_cast<double>(defined.size());
    return s;
}

}  // namespace

DistributionSummary summarize_coefficients(const std::vector<std::optional<double>>& values) {
    std::vector<double> defined;
    std::size_t skipped = 0;
    for (const auto& v : values) {
        if (v.has_value() && std::isfinite(*v)) {
            defined.push_back(*v);
        } else {
            ++skipped;
        }
    }
    return summarize_sorted(std::move(defined), skipped);
}

DistributionSummary summarize_values(const std::vector<double>& values) {
    std::vector<double> defined;
    std::size_t skipped = 0;
    for (const double v : values) {
        if (std::isfinite(v)) {
            defined.push_back(v);
        } else {
            ++skipped;
        }
    }
    return summarize_sorted(std::move(defined), skipped);
}

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw Error("fit inputs differ in length");
    }
    const std::size_t n = xs.size();
    if (n < 2) {
        throw DataError("line fit needs at least two points");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) {
        throw DataError("line fit needs at least two distinct x values");
    }
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    return f;
}

}  // namespace narranet
