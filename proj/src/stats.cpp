#include "wildscope/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "wildscope/errors.hpp"

namespace wildscope {

Rational Rational::make(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

DiameterHistogram histogram(std::span<const ExtremePairRecord> records) {
    DiameterHistogram h;
    for (const ExtremePairRecord& r : records) h.add(r.diameter);
    return h;
}

Rational interpolated_median(const DiameterHistogram& h) {
    if (h.total == 0) throw DomainError("median of an empty histogram");

    // Walk the CDF until it reaches 50%. With the zero anchor one step
    // before the smallest bin, a straddling pair (d_a, d_b] always exists:
    //   median = d_a + (50 - cum_a) / (cum_b - cum_a) * (d_b - d_a)
    // which reduces over a common total to exact integer arithmetic.
    const long long total = static_cast<long long>(h.total);
    long long cum_prev = 0;
    long long d_prev = h.bins.begin()->first - 1;
    for (const auto& [d, count] : h.bins) {
        long long cum = cum_prev + static_cast<long long>(count);
        if (2 * cum >= total) {
            long long num = (total - 2 * cum_prev) * (d - d_prev);
            long long den = 2 * (cum - cum_prev);
            Rational frac = Rational::make(num, den);
            return Rational::make(d_prev * frac.den + frac.num, frac.den);
        }
        cum_prev = cum;
        d_prev = d;
    }
    return Rational{d_prev, 1}; // unreachable: the last bin closes the CDF
}

namespace {

void emit_csv(const DiameterHistogram& h, std::ostream& out) {
    out << "diameter,count,percent\n";
    for (const auto& [d, count] : h.bins) {
        double percent = 100.0 * static_cast<double>(count) / static_cast<double>(h.total);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", percent);
        out << d << ',' << count << ',' << buf << '\n';
    }
}

void emit_svg(const DiameterHistogram& h, std::ostream& out) {
    const int bar_width = 48;
    const int gap = 24;
    const int plot_height = 240;
    const int margin_left = 64;
    const int margin_bottom = 48;
    const int margin_top = 24;
    const int n = static_cast<int>(h.bins.size());
    const int width = margin_left + n * (bar_width + gap) + gap;
    const int height = margin_top + plot_height + margin_bottom;

    std::uint64_t max_count = 0;
    for (const auto& [d, c] : h.bins) max_count = std::max(max_count, c);

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    out << "  <line x1=\"" << margin_left << "\" y1=\"" << margin_top + plot_height
        << "\" x2=\"" << width - gap << "\" y2=\"" << margin_top + plot_height
        << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << margin_left << "\" y1=\"" << margin_top << "\" x2=\""
        << margin_left << "\" y2=\"" << margin_top + plot_height << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << margin_left + (width - margin_left) / 2 << "\" y=\""
        << height - 8 << "\" text-anchor=\"middle\" font-size=\"14\">diameter</text>\n";
    out << "  <text x=\"16\" y=\"" << margin_top + plot_height / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 "
        << margin_top + plot_height / 2 << ")\">count</text>\n";
    out << "  <text x=\"" << margin_left - 8 << "\" y=\"" << margin_top + 4
        << "\" text-anchor=\"end\" font-size=\"12\">" << max_count << "</text>\n";

    int i = 0;
    for (const auto& [d, count] : h.bins) {
        int bh = max_count == 0
                     ? 0
                     : static_cast<int>(static_cast<double>(count) /
                                        static_cast<double>(max_count) * plot_height);
        int x = margin_left + gap + i * (bar_width + gap);
        int y = margin_top + plot_height - bh;
        out << "  <rect class=\"bar\" x=\"" << x << "\" y=\"" << y << "\" width=\""
            << bar_width << "\" height=\"" << bh << "\" fill=\"#4878a8\"/>\n";
        out << "  <text x=\"" << x + bar_width / 2 << "\" y=\"" << y - 4
            << "\" text-anchor=\"middle\" font-size=\"12\">" << count << "</text>\n";
        out << "  <text x=\"" << x + bar_width / 2 << "\" y=\""
            << margin_top + plot_height + 16 << "\" text-anchor=\"middle\" font-size=\"12\">"
            << d << "</text>\n";
        ++i;
    }
    out << "</svg>\n";
}

} // namespace

void emit_plot_data(const DiameterHistogram& h, PlotFormat format, std::ostream& out) {
    if (h.total == 0) throw DomainError("cannot plot an empty histogram");
    if (format == PlotFormat::Csv) {
        emit_csv(h, out);
    } else {
        emit_svg(h, out);
    }
}

} // namespace wildscope
