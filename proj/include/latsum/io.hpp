#pragma once

#include "latsum/lattice.hpp"
#include "latsum/scan.hpp"

#include <ostream>
#include <string>

namespace latsum {

// Shortest round-trip style formatting at 12 significant digits; byte-stable
// across runs and platforms for identical doubles.
std::string format_sig12(double v);

// CSV writers, '\n' line endings, header row first.
void write_shells_csv(std::ostream& os, const ShellSeries& sh);
void write_field_csv(std::ostream& os, const DomainField& field);
void write_arc_csv(std::ostream& os, const DomainField& field);
void write_curve_csv(std::ostream& os, const std::string& xname,
                     const std::string& yname,
                     const std::vector<double>& xs,
                     const std::vector<double>& ys);

} // namespace latsum
