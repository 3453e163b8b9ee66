#include "ratcat/lattice.hpp"

#include <numeric>

#include "ratcat/errors.hpp"

namespace ratcat {

bool GridParams::coprime() const {
    return m >= 1 && n >= 1 && std::gcd(m, n) == 1;
}

bool GridParams::modified_shape() const {
    return n == 3 && m >= 3 && m % 3 == 0;
}

std::string GridParams::to_string() const {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

namespace {

void check_cell(GridParams params, Cell cell) {
    if (params.m < 1 || params.n < 1) {
        throw DomainError("grid " + params.to_string() + " must have positive dimensions");
    }
    if (cell.u < 1 || cell.u > params.m || cell.v < 1 || cell.v > params.n) {
        throw DomainError("cell (" + std::to_string(cell.u) + "," + std::to_string(cell.v) +
                          ") outside grid " + params.to_string());
    }
}

void check_modified(GridParams params) {
    if (!params.modified_shape()) {
        throw DomainError("tie-broken order requires a (3k,3) grid, got " + params.to_string());
    }
}

std::optional<int> westernmost_zero(GridParams params) {
    std::optional<int> best;
    for (int v = 1; v <= params.n; ++v) {
        for (int u = 1; u <= params.m; ++u) {
            if (rank(params, {u, v}) == 0 && (!best || u < *best)) best = u;
        }
    }
    return best;
}

}  // namespace

Rank rank(GridParams params, Cell cell) {
    check_cell(params, cell);
    const Rank m = params.m;
    const Rank n = params.n;
    return m * n - Rank{cell.u} * n - (n + 1 - cell.v) * m;
}

std::strong_ordering compare_modified(GridParams params, Cell a, Cell b) {
    check_modified(params);
    const Rank ra = rank(params, a);
    const Rank rb = rank(params, b);
    if (ra != rb) return ra <=> rb;
    // Equal ranks on a (3k,3) grid never share a column.
    return a.u <=> b.u;
}

bool is_positive_modified(GridParams params, Cell cell) {
    check_modified(params);
    const Rank r = rank(params, cell);
    if (r != 0) return r > 0;
    const auto west = westernmost_zero(params);
    return west && *west < cell.u;
}

RankDiagram::RankDiagram(GridParams params) : params_(params) {
    if (params.m < 1 || params.n < 1) {
        throw DomainError("grid " + params.to_string() + " must have positive dimensions");
    }
    if (params.coprime()) {
        modified_ = false;
    } else if (params.modified_shape()) {
        modified_ = true;
        west_zero_column_ = westernmost_zero(params);
    } else {
        throw DomainError("grid " + params.to_string() +
                          " is neither coprime nor a modified (3k,3) shape");
    }
}

bool RankDiagram::contains(Cell cell) const {
    return cell.u >= 1 && cell.u <= params_.m && cell.v >= 1 && cell.v <= params_.n;
}

Rank RankDiagram::rank(Cell cell) const { return ratcat::rank(params_, cell); }

std::strong_ordering RankDiagram::compare(Cell a, Cell b) const {
    if (modified_) return compare_modified(params_, a, b);
    return rank(a) <=> rank(b);
}

bool RankDiagram::is_positive(Cell cell) const {
    const Rank r = rank(cell);
    if (r != 0 || !modified_) return r > 0;
    return west_zero_column_ && *west_zero_column_ < cell.u;
}

int RankDiagram::positive_in_row(int v) const {
    // Ranks strictly decrease to the east within a row.
    int count = 0;
    while (count < params_.m && is_positive({count + 1, v})) ++count;
    return count;
}

int RankDiagram::positive_count() const {
    int total = 0;
    for (int v = 1; v <= params_.n; ++v) total += positive_in_row(v);
    return total;
}

}  // namespace ratcat
