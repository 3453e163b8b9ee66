#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace ratcat {

using Coeff = boost::multiprecision::cpp_int;

/// Exact polynomial in Z[q,t] with nonnegative exponents.
///
/// Terms live in a sparse map keyed by (q-degree, t-degree); zero
/// coefficients are never stored, so structural equality is polynomial
/// equality and iteration is ascending lexicographic in (q, t).
class QTPoly {
public:
    struct Exponent {
        int q = 0;
        int t = 0;
        auto operator<=>(const Exponent&) const = default;
    };
    using TermMap = std::map<Exponent, Coeff>;

    QTPoly() = default;

    static QTPoly monomial(int q_degree, int t_degree, const Coeff& coeff = 1);
    static QTPoly constant(const Coeff& coeff) { return monomial(0, 0, coeff); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Coeff coefficient(int q_degree, int t_degree) const;

    /// Adds coeff * q^a t^b in place.
    void add_term(int q_degree, int t_degree, const Coeff& coeff);

    /// Largest a+b over all terms; -1 for the zero polynomial.
    int total_degree() const;

    /// Sum of all coefficients, i.e. the value at q = t = 1.
    Coeff at_one() const;

    QTPoly& operator+=(const QTPoly& other);
    QTPoly& operator-=(const QTPoly& other);
    QTPoly& operator*=(const QTPoly& other);

    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator-(const QTPoly& a);

    bool operator==(const QTPoly&) const = default;

private:
    TermMap terms_;
};

/// Two-variable Schur polynomial s_(a,b)(q,t) = sum_{i=b}^{a} q^{a+b-i} t^i.
/// Returns zero whenever a < b or b < 0.
QTPoly schur2(int a, int b);

/// Lowers every q-exponent by k. ExactDivisionError if some term has q-degree < k.
QTPoly div_q_exact(const QTPoly& p, int k);
/// Lowers every t-exponent by k. ExactDivisionError if some term has t-degree < k.
QTPoly div_t_exact(const QTPoly& p, int k);

QTPoly swap_qt(const QTPoly& p);

bool is_qt_symmetric(const QTPoly& p);

// JSON: array of {"q": a, "t": b, "c": coeff} in ascending (a, b).
// Coefficients that do not fit in 64 bits are written as decimal strings.
nlohmann::json to_json(const QTPoly& p);
QTPoly poly_from_json(const nlohmann::json& j);

/// Plain text such as "q^2*t + 3*q*t^2 + 1", by descending total degree then q-degree.
std::string to_text(const QTPoly& p);
/// LaTeX such as "q^{2}t + 3qt^{2} + 1", same term order as to_text.
std::string to_latex(const QTPoly& p);

std::ostream& operator<<(std::ostream& os, const QTPoly& p);

}  // namespace ratcat
