#pragma once

#include <optional>
#include <span>

namespace hyscat {

/// One published row: delta_l (radians) for A = 0 and A = 5 at V0 = 1, hbar = mu = 1.
struct PublishedRow {
    int l;
    double k;
    double alpha;
    double delta_A0;
    double delta_A5;
};

/// The 72 published rows (144 values), l = 0, 1, 2 in table order (k, then alpha).
std::span<const PublishedRow> published_rows();

/// Published delta_l for a grid cell, if the cell is one of the 144.
std::optional<double> published_delta(int l, double k, double alpha, double A);

}  // namespace hyscat
