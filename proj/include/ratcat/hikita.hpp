#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcat/parking.hpp"
#include "ratcat/qtpoly.hpp"

namespace ratcat {

/// Integer partition, parts in weakly decreasing order.
using Partition = std::vector<int>;

/// Formal sum of QTPoly coefficients times fundamental quasisymmetric F_S,
/// S a subset of {1..n-1}. Missing keys are zero coefficients.
class FExpansion {
public:
    explicit FExpansion(int n);

    int n() const { return n_; }
    const std::map<DescentSet, QTPoly>& coeffs() const { return coeffs_; }

    /// DomainError unless S is a strictly increasing subset of {1..n-1}.
    QTPoly coeff(const DescentSet& s) const;
    void add(const DescentSet& s, const QTPoly& p);
    void add_term(const DescentSet& s, int q_degree, int t_degree);

    /// Commutative merge of two partial sums over the same n.
    FExpansion& operator+=(const FExpansion& other);
    bool operator==(const FExpansion& other) const;

private:
    void check_subset(const DescentSet& s) const;

    int n_;
    std::map<DescentSet, QTPoly> coeffs_;
};

/// Schur-basis form of a symmetric FExpansion with n <= 3.
struct SchurExpansion {
    int n = 0;
    std::map<Partition, QTPoly> coeffs;

    QTPoly coeff(const Partition& lambda) const;
    bool operator==(const SchurExpansion&) const = default;
};

/// Sum over every parking function of t^area q^dinv F_ides. Coprime (m,n) only.
FExpansion hikita(int m, int n);

/// F to Schur for n <= 3, using F_empty -> s_(1^n) and F_[n-1] -> s_(n).
/// For n = 3 the F_{1} and F_{2} coefficients must agree (InvariantError otherwise);
/// n >= 4 is UnsupportedError.
SchurExpansion to_schur(const FExpansion& fe);

/// Full set {1..n-1}.
DescentSet full_descent_set(int n);

std::string descent_key(const DescentSet& s);
DescentSet parse_descent_key(const std::string& key);
std::string partition_key(const Partition& lambda);

// {"n": n, "coeffs": {"": poly, "1": poly, "1,2": poly, ...}}
nlohmann::json to_json(const FExpansion& fe);
FExpansion f_expansion_from_json(const nlohmann::json& j);
// {"n": n, "schur": {"1,1,1": poly, "2,1": poly, "3": poly}}
nlohmann::json to_json(const SchurExpansion& se);

std::string to_latex(const FExpansion& fe);
std::string to_latex(const SchurExpansion& se);
std::string to_text(const FExpansion& fe);
std::string to_text(const SchurExpansion& se);

}  // namespace ratcat
