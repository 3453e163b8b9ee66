#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace ratcat {

using Rank = std::int64_t;

/// Width m (columns) and height n (rows) of a rectangular lattice.
struct GridParams {
    int m = 1;
    int n = 1;

    bool operator==(const GridParams&) const = default;

    bool coprime() const;
    /// The non-coprime (3k,3) shapes that carry the east-is-larger tie-break.
    bool modified_shape() const;
    std::string to_string() const;
};

/// Cell whose northeast corner is the lattice point (u, v). Row 1 is the bottom row.
struct Cell {
    int u = 1;
    int v = 1;

    auto operator<=>(const Cell&) const = default;
};

/// mn - un - (n+1-v)m. Throws DomainError if the cell lies outside the grid.
Rank rank(GridParams params, Cell cell);

/// Total order on cells of a modified (3k,3) grid: by rank, ties broken
/// so that the eastern cell is larger. DomainError on any other shape.
std::strong_ordering compare_modified(GridParams params, Cell a, Cell b);

/// Rank > 0, or rank == 0 with another rank-0 cell strictly to the west.
bool is_positive_modified(GridParams params, Cell cell);

/// Immutable (m,n)-rank diagram, either coprime or modified.
///
/// `compare` and `is_positive` dispatch on the kind of grid so that callers
/// (path validation, fast dinv, area) are written once for both variants.
class RankDiagram {
public:
    /// Throws DomainError unless gcd(m,n) = 1 or the shape is (3k,3).
    explicit RankDiagram(GridParams params);

    GridParams params() const { return params_; }
    int m() const { return params_.m; }
    int n() const { return params_.n; }
    bool modified() const { return modified_; }

    bool contains(Cell cell) const;
    Rank rank(Cell cell) const;
    std::strong_ordering compare(Cell a, Cell b) const;
    bool is_positive(Cell cell) const;

    /// Number of positive cells; (m-1)(n-1)/2 on coprime grids.
    int positive_count() const;
    /// Number of positive cells in row v. They occupy columns 1..count.
    int positive_in_row(int v) const;

private:
    GridParams params_;
    bool modified_ = false;
    // Column of the westernmost rank-0 cell on modified grids.
    std::optional<int> west_zero_column_;
};

}  // namespace ratcat
