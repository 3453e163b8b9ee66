#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ratcat/lattice.hpp"
#include "ratcat/qtpoly.hpp"

namespace ratcat {

/// A Dyck path on a coprime (m,n) grid or a modified (3k,3) grid.
///
/// Stored as the number of cells above the path in each row, bottom to top.
/// Row v has cells (1,v)..(a_v,v) above the path and its on-path cell is
/// (a_v+1, v). Every value is validated on construction: the counts are
/// weakly increasing and every above cell is positive in the grid's order.
class DyckPath {
public:
    static DyckPath from_counts(GridParams params, std::vector<int> counts);
    /// North/east step word from (0,0) to (m,n), e.g. "NNENEEEE".
    static DyckPath from_steps(GridParams params, std::string_view steps);
    /// Accepts either "a1,a2,...,an" or an N/E word.
    static DyckPath parse(GridParams params, std::string_view literal);

    GridParams params() const { return diagram_.params(); }
    const RankDiagram& diagram() const { return diagram_; }
    int m() const { return diagram_.m(); }
    int n() const { return diagram_.n(); }
    bool modified() const { return diagram_.modified(); }

    const std::vector<int>& counts() const { return counts_; }
    /// a_v for row v in 1..n.
    int above_in_row(int v) const { return counts_.at(static_cast<std::size_t>(v - 1)); }
    bool is_above(Cell cell) const;
    /// Above cells, row by row from the bottom, west to east.
    std::vector<Cell> above_cells() const;

    std::string to_string() const;
    std::string to_steps() const;

    bool operator==(const DyckPath& other) const {
        return params() == other.params() && counts_ == other.counts_;
    }

private:
    DyckPath(RankDiagram diagram, std::vector<int> counts)
        : diagram_(diagram), counts_(std::move(counts)) {}

    RankDiagram diagram_;
    std::vector<int> counts_;
};

/// Every path on the grid in ascending lexicographic order of counts.
std::vector<DyckPath> enumerate_paths(GridParams params);

/// Number of paths by dynamic programming over the row bounds; saturates at UINT64_MAX.
std::uint64_t count_paths(GridParams params);

/// Cells whose western edge lies on the path, bottom to top.
std::vector<Cell> on_path_cells(const DyckPath& path);
std::vector<Rank> ranks_on_path(const DyckPath& path);

/// Above cells strictly east of `cell`. DomainError if `cell` is not above the path.
int arm(const DyckPath& path, Cell cell);
/// Above cells strictly south of `cell`. DomainError if `cell` is not above the path.
int leg(const DyckPath& path, Cell cell);

/// Partition of the positive cells into Area, Dinv and Skips.
struct PathStats {
    std::vector<Cell> area_set;
    std::vector<Cell> dinv_set;
    std::vector<Cell> skips_set;

    int area() const { return static_cast<int>(area_set.size()); }
    int dinv() const { return static_cast<int>(dinv_set.size()); }
    int skips() const { return static_cast<int>(skips_set.size()); }
};

/// Arm/leg inequality arm/(leg+1) < m/n < (arm+1)/leg, by cross-multiplication.
/// Coprime grids only.
PathStats dinv_slow(const DyckPath& path);

/// Rank comparisons against the four neighbouring boundary cells.
/// Works on coprime and modified grids.
PathStats dinv_fast(const DyckPath& path);

/// The four auxiliary cells used by the fast membership test.
struct FastDinvWitness {
    Cell east_end;     // easternmost above cell in the row
    Cell east_out;     // one cell east of it, below the path
    Cell south_end;    // southernmost above cell in the column
    Cell south_out;    // one cell south of it, below the path
    bool in_dinv = false;
};
FastDinvWitness fast_dinv_witness(const DyckPath& path, Cell cell);

/// Sum of q^dinv t^area over every path of the grid.
QTPoly catalan_brute(GridParams params);

/// Types of (m,3)-paths D_m(k,l), where k = a_3 and l = a_2.
enum class PathKind { T0, T1, T2a, T2b, T3a, T3b };

struct PathType {
    PathKind kind;
    int k = 0;
    int l = 0;
    bool operator==(const PathType&) const = default;
};

std::string to_string(PathKind kind);
PathKind path_kind_from_string(std::string_view name);
inline constexpr PathKind kAllPathKinds[] = {PathKind::T0,  PathKind::T1,  PathKind::T2a,
                                             PathKind::T2b, PathKind::T3a, PathKind::T3b};

/// D_m(k,l) on the (m,3) grid (coprime or modified).
DyckPath d_path(int m, int k, int l);

/// n = 3 and 3 does not divide m.
PathType classify(const DyckPath& path);

/// Modified (3k,3) path to the (3k+1,3) path with the same counts; rank 1 stays below.
DyckPath lift_3k_to_3k1(const DyckPath& path);

/// (m,n) path with on-path cells in distinct columns, m > n, to the (m-n,n)
/// path with the same on-path ranks (row v loses its v-1 westernmost above cells).
DyckPath drop_distinct_column_path(const DyckPath& path);
bool has_distinct_columns(const DyckPath& path);

/// D_m(k,l) with l >= 1 to D_{m-2}(k-1,l-1). The result lies on a modified
/// grid when 3 divides m-2.
DyckPath shrink_m3(const DyckPath& path);

}  // namespace ratcat
