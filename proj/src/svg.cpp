#include "pdil/svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pdil {

namespace {

constexpr double kWidth = 960;
constexpr double kLeft = 140;
constexpr double kRight = 30;
constexpr double kRowHeight = 28;
constexpr double kTop = 46;

const std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::vector<SvgRow> component_rows(const ComponentFunction& c, const std::string& prefix)
{
    std::vector<SvgRow> rows{{prefix + " real", c.real}};
    for (const auto& cc : c.cycles)
        for (std::size_t j = 0; j < cc.slots.size(); ++j)
            rows.emplace_back(prefix + " " + cc.cycle.word() + ":" + std::to_string(j), cc.slots[j]);
    return rows;
}

std::string render_svg(const std::vector<SvgRow>& rows, const std::string& title)
{
    double lo = -1;
    double hi = 1;
    for (const auto& [label, set] : rows) {
        if (set.empty())
            continue;
        lo = std::min(lo, std::floor(set.inf().to_double()));
        hi = std::max(hi, std::ceil(set.sup().to_double()));
    }
    const double span = hi - lo;
    const auto x_of = [&](double v) { return kLeft + (v - lo) / span * (kWidth - kLeft - kRight); };
    const double height = kTop + kRowHeight * static_cast<double>(rows.size()) + 40;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(height)
       << "\" font-family=\"monospace\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << fmt(kLeft) << "\" y=\"24\" font-size=\"14\">" << escape(title) << "</text>\n";

    for (std::size_t r = 0; r < rows.size(); ++r) {
        const double y = kTop + kRowHeight * static_cast<double>(r);
        os << "<text x=\"8\" y=\"" << fmt(y + 15) << "\">" << escape(rows[r].first) << "</text>\n";
        os << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(y + 11) << "\" x2=\"" << fmt(kWidth - kRight)
           << "\" y2=\"" << fmt(y + 11) << "\" stroke=\"#ccc\"/>\n";
        for (const auto& iv : rows[r].second.intervals()) {
            const double x0 = x_of(iv.lo.to_double());
            const double x1 = x_of(iv.hi.to_double());
            os << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y + 4) << "\" width=\"" << fmt(std::max(x1 - x0, 0.5))
               << "\" height=\"14\" fill=\"" << kColors[r % kColors.size()] << "\"><title>[" << iv.lo.str() << ","
               << iv.hi.str() << ")</title></rect>\n";
        }
    }

    const double axis_y = kTop + kRowHeight * static_cast<double>(rows.size()) + 6;
    os << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(axis_y) << "\" x2=\"" << fmt(kWidth - kRight)
       << "\" y2=\"" << fmt(axis_y) << "\" stroke=\"black\"/>\n";
    for (double t = lo; t <= hi + 1e-9; t += 0.5) {
        os << "<line x1=\"" << fmt(x_of(t)) << "\" y1=\"" << fmt(axis_y) << "\" x2=\"" << fmt(x_of(t))
           << "\" y2=\"" << fmt(axis_y + 5) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt(x_of(t) - 8) << "\" y=\"" << fmt(axis_y + 18) << "\">" << fmt(t).substr(0, fmt(t).size() - 1)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace pdil
