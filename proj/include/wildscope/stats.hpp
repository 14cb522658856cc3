#pragma once

// Aggregation of search results into a diameter distribution, the
// interpolated median of that distribution, and plot-ready renderings.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>

#include "wildscope/evolution.hpp"

namespace wildscope {

/// Exact fraction, reduced, positive denominator. Percentages and the
/// median stay exact internally; rounding happens only at display.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

struct DiameterHistogram {
    std::map<int, std::uint64_t> bins;
    std::uint64_t total = 0;

    void add(int diameter, std::uint64_t count = 1) {
        bins[diameter] += count;
        total += count;
    }

    /// Associative and commutative, so partial histograms can be reduced in
    /// any order.
    void merge(const DiameterHistogram& other) {
        for (const auto& [d, c] : other.bins) add(d, c);
    }
};

DiameterHistogram histogram(std::span<const ExtremePairRecord> records);

/// Median by linear interpolation on the cumulative distribution: bins are
/// sorted, a virtual (d_min - 1, 0%) anchor is prepended, and the value is
/// interpolated between the adjacent bin values straddling the 50% mark.
/// Throws DomainError on an empty histogram.
Rational interpolated_median(const DiameterHistogram& h);

enum class PlotFormat { Csv, SvgBars };

/// Csv: "diameter,count,percent" rows (percent shown with 2 decimals).
/// SvgBars: a self-contained bar chart, one bar per diameter, labeled axes.
void emit_plot_data(const DiameterHistogram& h, PlotFormat format, std::ostream& out);

} // namespace wildscope
