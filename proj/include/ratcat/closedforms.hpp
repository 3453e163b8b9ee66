#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcat/dyck.hpp"
#include "ratcat/hikita.hpp"
#include "ratcat/qtpoly.hpp"

namespace ratcat {

/// sum_{0 <= i < n/3} s_(n-1-2i, i)(q,t). DomainError when 3 divides n.
QTPoly catalan3_closed(int n);

/// sum_{0 <= i < m/3} s_(m-1-2i, i)(q,t) for m >= 1.
QTPoly k3_closed(int m);

/// Closed form of the generating function of (m,3)-paths of one type.
/// DomainError when 3 divides m.
QTPoly type_poly(int m, PathKind kind);

/// The same generating function summed over enumerated paths.
QTPoly type_poly_brute(int m, PathKind kind);

/// Predicted F_{1} coefficient of H_{m,3}, assembled from per-type
/// dinv drops: q^-1 (P1 + P2a + P2b + 2 P3a) + (q^-1 + q^-2) P3b.
QTPoly f1_coefficient_from_types(int m);

/// One window of the per-type parking-function table for a path D_m(k,l).
struct TableEntry {
    std::vector<Rank> window;
    DescentSet descents;
    std::optional<int> dinv_drop;  // empty where the table is silent
};

/// The listed parking functions of an (m,3)-path of a given type, with their
/// expected descent sets and dinv drops relative to the path.
std::vector<TableEntry> type_table(const DyckPath& path);

using IdentityValue = std::variant<QTPoly, FExpansion, SchurExpansion>;

struct IdentityReport {
    std::string name;
    std::string params;
    IdentityValue lhs;
    IdentityValue rhs;
    bool pass = false;
    std::optional<IdentityValue> difference;  // set when lhs != rhs
    std::string note;                         // exception text or structural mismatch
};

struct VerifyBounds {
    int max_m = 20;
    int max_n = 20;
};

/// Largest m+n used by the top-coefficient identity, independent of bounds.
inline constexpr int kTopCoefficientMaxSum = 13;

/// Names accepted by verify_identity, in catalog order.
const std::vector<std::string>& identity_names();

/// Runs one identity over its parameter range. DomainError on an unknown name.
std::vector<IdentityReport> verify_identity(std::string_view name, const VerifyBounds& bounds);
std::vector<IdentityReport> verify_all(const VerifyBounds& bounds);

nlohmann::json to_json(const IdentityValue& v);
nlohmann::json to_json(const IdentityReport& r);

}  // namespace ratcat
