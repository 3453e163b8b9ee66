#include "ratcat/dyck.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "ratcat/errors.hpp"

namespace ratcat {

namespace {

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

// Largest admissible a_v for each row.
std::vector<int> row_bounds(const RankDiagram& diagram) {
    std::vector<int> bounds(static_cast<std::size_t>(diagram.n()));
    for (int v = 1; v <= diagram.n(); ++v) bounds[static_cast<std::size_t>(v - 1)] = diagram.positive_in_row(v);
    return bounds;
}

}  // namespace

DyckPath DyckPath::from_counts(GridParams params, std::vector<int> counts) {
    RankDiagram diagram(params);
    if (counts.size() != static_cast<std::size_t>(params.n)) {
        throw InvalidPathError("path on " + params.to_string() + " needs " +
                               std::to_string(params.n) + " counts, got " +
                               std::to_string(counts.size()));
    }
    for (int v = 1; v <= params.n; ++v) {
        const int a = counts[static_cast<std::size_t>(v - 1)];
        if (a < 0 || a > params.m) {
            throw InvalidPathError("count " + std::to_string(a) + " in row " + std::to_string(v) +
                                   " out of range on " + params.to_string());
        }
        if (v > 1 && a < counts[static_cast<std::size_t>(v - 2)]) {
            throw InvalidPathError("counts " + join(counts) + " are not weakly increasing");
        }
        // Ranks decrease eastward, so the easternmost above cell decides.
        if (a > 0 && !diagram.is_positive({a, v})) {
            throw InvalidPathError("counts " + join(counts) + " put non-positive cell (" +
                                   std::to_string(a) + "," + std::to_string(v) +
                                   ") above the path on " + params.to_string());
        }
    }
    return DyckPath(diagram, std::move(counts));
}

DyckPath DyckPath::from_steps(GridParams params, std::string_view steps) {
    std::vector<int> counts;
    int x = 0;
    for (char ch : steps) {
        switch (std::toupper(static_cast<unsigned char>(ch))) {
            case 'N':
                counts.push_back(x);
                break;
            case 'E':
                ++x;
                break;
            default:
                throw InvalidPathError("step word may only contain N and E: " + std::string(steps));
        }
    }
    if (x != params.m || counts.size() != static_cast<std::size_t>(params.n)) {
        throw InvalidPathError("step word " + std::string(steps) + " does not end at " +
                               params.to_string());
    }
    return from_counts(params, std::move(counts));
}

DyckPath DyckPath::parse(GridParams params, std::string_view literal) {
    const bool is_word = !literal.empty() && std::all_of(literal.begin(), literal.end(), [](char c) {
        const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return u == 'N' || u == 'E';
    });
    if (is_word) return from_steps(params, literal);

    std::vector<int> counts;
    std::size_t pos = 0;
    while (pos <= literal.size()) {
        const std::size_t comma = std::min(literal.find(',', pos), literal.size());
        std::string_view field = literal.substr(pos, comma - pos);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw InvalidPathError("bad path literal: " + std::string(literal));
        }
        counts.push_back(value);
        pos = comma + 1;
    }
    return from_counts(params, std::move(counts));
}

bool DyckPath::is_above(Cell cell) const {
    return diagram_.contains(cell) && cell.u <= above_in_row(cell.v);
}

std::vector<Cell> DyckPath::above_cells() const {
    std::vector<Cell> out;
    for (int v = 1; v <= n(); ++v) {
        for (int u = 1; u <= above_in_row(v); ++u) out.push_back({u, v});
    }
    return out;
}

std::string DyckPath::to_string() const { return join(counts_); }

std::string DyckPath::to_steps() const {
    std::string out;
    int x = 0;
    for (int a : counts_) {
        out.append(static_cast<std::size_t>(a - x), 'E');
        out += 'N';
        x = a;
    }
    out.append(static_cast<std::size_t>(m() - x), 'E');
    return out;
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                              : a + b;
}

template <class Visit>
void walk_paths(const std::vector<int>& bounds, std::vector<int>& counts, std::size_t row,
                Visit&& visit) {
    if (row == bounds.size()) {
        visit(counts);
        return;
    }
    const int lo = row == 0 ? 0 : counts[row - 1];
    for (int a = lo; a <= bounds[row]; ++a) {
        counts[row] = a;
        walk_paths(bounds, counts, row + 1, visit);
    }
}

}  // namespace

std::vector<DyckPath> enumerate_paths(GridParams params) {
    const RankDiagram diagram(params);
    const auto bounds = row_bounds(diagram);
    std::vector<int> counts(bounds.size(), 0);
    std::vector<DyckPath> out;
    walk_paths(bounds, counts, 0,
               [&](const std::vector<int>& c) { out.push_back(DyckPath::from_counts(params, c)); });
    return out;
}

std::uint64_t count_paths(GridParams params) {
    const RankDiagram diagram(params);
    const auto bounds = row_bounds(diagram);
    // ways[a] = number of valid prefixes ending with count a.
    const int top = params.m;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(top + 1), 0);
    ways[0] = 1;
    for (std::size_t row = 1; row < bounds.size(); ++row) {
        std::vector<std::uint64_t> next(ways.size(), 0);
        std::uint64_t running = 0;
        for (int a = 0; a <= top; ++a) {
            running = saturating_add(running, ways[static_cast<std::size_t>(a)]);
            if (a <= bounds[row]) next[static_cast<std::size_t>(a)] = running;
        }
        ways = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto w : ways) total = saturating_add(total, w);
    return total;
}

std::vector<Cell> on_path_cells(const DyckPath& path) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(path.n()));
    for (int v = 1; v <= path.n(); ++v) out.push_back({path.above_in_row(v) + 1, v});
    return out;
}

std::vector<Rank> ranks_on_path(const DyckPath& path) {
    std::vector<Rank> out;
    for (Cell c : on_path_cells(path)) out.push_back(path.diagram().rank(c));
    return out;
}

namespace {

void require_above(const DyckPath& path, Cell cell) {
    if (!path.is_above(cell)) {
        throw DomainError("cell (" + std::to_string(cell.u) + "," + std::to_string(cell.v) +
                          ") is not above path " + path.to_string());
    }
}

// Lowest row whose above part reaches column u.
int southern_row(const DyckPath& path, int u) {
    int v = 1;
    while (path.above_in_row(v) < u) ++v;
    return v;
}

// Below-path cells that are positive in the grid's order.
std::vector<Cell> area_cells(const DyckPath& path) {
    std::vector<Cell> out;
    for (int v = 1; v <= path.n(); ++v) {
        const int positive = path.diagram().positive_in_row(v);
        for (int u = path.above_in_row(v) + 1; u <= positive; ++u) out.push_back({u, v});
    }
    return out;
}

}  // namespace

int arm(const DyckPath& path, Cell cell) {
    require_above(path, cell);
    return path.above_in_row(cell.v) - cell.u;
}

int leg(const DyckPath& path, Cell cell) {
    require_above(path, cell);
    return cell.v - southern_row(path, cell.u);
}

PathStats dinv_slow(const DyckPath& path) {
    if (path.modified()) {
        throw DomainError("arm/leg dinv is only defined on coprime grids");
    }
    const std::int64_t m = path.m();
    const std::int64_t n = path.n();
    PathStats stats;
    stats.area_set = area_cells(path);
    for (Cell c : path.above_cells()) {
        const std::int64_t a = arm(path, c);
        const std::int64_t l = leg(path, c);
        // a/(l+1) < m/n  and  m/n < (a+1)/l, with (a+1)/0 read as infinity.
        const bool left = a * n < m * (l + 1);
        const bool right = l == 0 || m * l < n * (a + 1);
        (left && right ? stats.dinv_set : stats.skips_set).push_back(c);
    }
    return stats;
}

FastDinvWitness fast_dinv_witness(const DyckPath& path, Cell cell) {
    require_above(path, cell);
    FastDinvWitness w;
    const int a = path.above_in_row(cell.v);
    w.east_end = {a, cell.v};
    w.east_out = {a + 1, cell.v};
    const int s = southern_row(path, cell.u);
    w.south_end = {cell.u, s};
    w.south_out = {cell.u, s - 1};
    const auto& d = path.diagram();
    w.in_dinv = d.compare(w.east_end, w.south_out) > 0 && d.compare(w.south_end, w.east_out) > 0;
    return w;
}

PathStats dinv_fast(const DyckPath& path) {
    PathStats stats;
    stats.area_set = area_cells(path);
    for (Cell c : path.above_cells()) {
        (fast_dinv_witness(path, c).in_dinv ? stats.dinv_set : stats.skips_set).push_back(c);
    }
    return stats;
}

QTPoly catalan_brute(GridParams params) {
    QTPoly out;
    for (const auto& path : enumerate_paths(params)) {
        const auto s = dinv_fast(path);
        out.add_term(s.dinv(), s.area(), 1);
    }
    return out;
}

std::string to_string(PathKind kind) {
    switch (kind) {
        case PathKind::T0: return "0";
        case PathKind::T1: return "1";
        case PathKind::T2a: return "2a";
        case PathKind::T2b: return "2b";
        case PathKind::T3a: return "3a";
        case PathKind::T3b: return "3b";
    }
    return "?";
}

PathKind path_kind_from_string(std::string_view name) {
    for (PathKind k : kAllPathKinds) {
        if (to_string(k) == name) return k;
    }
    throw DomainError("unknown path type: " + std::string(name));
}

DyckPath d_path(int m, int k, int l) { return DyckPath::from_counts({m, 3}, {0, l, k}); }

PathType classify(const DyckPath& path) {
    if (path.n() != 3 || path.modified()) {
        throw DomainError("type classification needs an (m,3) grid with 3 not dividing m");
    }
    const int m = path.m();
    const int l = path.above_in_row(2);
    const int k = path.above_in_row(3);
    // 3 does not divide m, so 3k == m never happens.
    const bool k_small = 3 * k < m;
    PathKind kind;
    if (k == 0) {
        kind = PathKind::T0;
    } else if (l == 0) {
        kind = k_small ? PathKind::T2a : PathKind::T2b;
    } else if (!k_small) {
        kind = PathKind::T3b;
    } else {
        kind = l == k ? PathKind::T1 : PathKind::T3a;
    }
    return {kind, k, l};
}

DyckPath lift_3k_to_3k1(const DyckPath& path) {
    if (!path.modified()) throw DomainError("lift expects a path on a modified (3k,3) grid");
    const GridParams target{path.m() + 1, 3};
    DyckPath image = [&] {
        try {
            return DyckPath::from_counts(target, path.counts());
        } catch (const InvalidPathError& e) {
            throw InvariantError(std::string("lift produced an invalid path: ") + e.what());
        }
    }();
    for (Cell c : image.above_cells()) {
        if (image.diagram().rank(c) == 1) {
            throw InvariantError("lift image " + image.to_string() + " has rank 1 above the path");
        }
    }
    return image;
}

bool has_distinct_columns(const DyckPath& path) {
    const auto& a = path.counts();
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] == a[i - 1]) return false;
    }
    return true;
}

DyckPath drop_distinct_column_path(const DyckPath& path) {
    if (path.modified() || path.m() <= path.n()) {
        throw DomainError("column drop needs a coprime (m,n) path with m > n");
    }
    if (!has_distinct_columns(path)) {
        throw DomainError("path " + path.to_string() + " has two on-path cells in one column");
    }
    std::vector<int> counts = path.counts();
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] -= static_cast<int>(i);
    try {
        return DyckPath::from_counts({path.m() - path.n(), path.n()}, std::move(counts));
    } catch (const InvalidPathError& e) {
        throw InvariantError(std::string("column drop produced an invalid path: ") + e.what());
    }
}

DyckPath shrink_m3(const DyckPath& path) {
    const PathType type = classify(path);
    if (type.l < 1) throw DomainError("shrink needs at least one above cell in row 2");
    try {
        return d_path(path.m() - 2, type.k - 1, type.l - 1);
    } catch (const InvalidPathError& e) {
        throw InvariantError(std::string("shrink produced an invalid path: ") + e.what());
    }
}

}  // namespace ratcat
