#include "latsum/io.hpp"

#include <cmath>
#include <cstdio>

namespace latsum {

std::string format_sig12(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_shells_csv(std::ostream& os, const ShellSeries& sh) {
    os << "r2,mult\n";
    for (const auto& e : sh.entries)
        os << format_sig12(e.r2) << "," << e.mult << "\n";
}

void write_field_csv(std::ostream& os, const DomainField& field) {
    os << "x,y,value,flag\n";
    for (size_t iy = 0; iy < field.ys.size(); ++iy)
        for (size_t ix = 0; ix < field.xs.size(); ++ix)
            os << format_sig12(field.xs[ix]) << ","
               << format_sig12(field.ys[iy]) << ","
               << format_sig12(field.values[iy][ix]) << ","
               << field.flags[iy][ix] << "\n";
}

void write_arc_csv(std::ostream& os, const DomainField& field) {
    os << "t,x,y,value,flag\n";
    for (size_t i = 0; i < field.arc_t.size(); ++i)
        os << format_sig12(field.arc_t[i]) << ","
           << format_sig12(std::cos(field.arc_t[i])) << ","
           << format_sig12(std::sin(field.arc_t[i])) << ","
           << format_sig12(field.arc_values[i]) << "," << field.arc_flags[i]
           << "\n";
}

void write_curve_csv(std::ostream& os, const std::string& xname,
                     const std::string& yname, const std::vector<double>& xs,
                     const std::vector<double>& ys) {
    os << xname << "," << yname << "\n";
    for (size_t i = 0; i < xs.size(); ++i)
        os << format_sig12(xs[i]) << "," << format_sig12(ys[i]) << "\n";
}

} // namespace latsum
