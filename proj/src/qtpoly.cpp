#include "ratcat/qtpoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

#include "ratcat/errors.hpp"

namespace ratcat {

QTPoly QTPoly::monomial(int q_degree, int t_degree, const Coeff& coeff) {
    QTPoly p;
    p.add_term(q_degree, t_degree, coeff);
    return p;
}

Coeff QTPoly::coefficient(int q_degree, int t_degree) const {
    const auto it = terms_.find({q_degree, t_degree});
    return it == terms_.end() ? Coeff{0} : it->second;
}

void QTPoly::add_term(int q_degree, int t_degree, const Coeff& coeff) {
    if (q_degree < 0 || t_degree < 0) {
        throw DomainError("negative exponent q^" + std::to_string(q_degree) + " t^" +
                          std::to_string(t_degree));
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace({q_degree, t_degree}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int QTPoly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, e.q + e.t);
    return best;
}

Coeff QTPoly::at_one() const {
    Coeff sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

QTPoly& QTPoly::operator+=(const QTPoly& other) {
    if (&other == this) return *this += QTPoly(other);
    for (const auto& [e, c] : other.terms_) add_term(e.q, e.t, c);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& other) {
    if (&other == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [e, c] : other.terms_) add_term(e.q, e.t, -c);
    return *this;
}

QTPoly& QTPoly::operator*=(const QTPoly& other) {
    *this = *this * other;
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea.q + eb.q, ea.t + eb.t, ca * cb);
    }
    return out;
}

QTPoly operator-(const QTPoly& a) {
    QTPoly out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

QTPoly schur2(int a, int b) {
    QTPoly out;
    if (b < 0 || a < b) return out;
    for (int i = b; i <= a; ++i) out.add_term(a + b - i, i, 1);
    return out;
}

namespace {

template <class Shift>
QTPoly shift_exact(const QTPoly& p, int k, const char* var, Shift shift) {
    if (k < 1) throw DomainError(std::string("division by ") + var + "^k needs k >= 1");
    QTPoly out;
    for (const auto& [e, c] : p.terms()) {
        const QTPoly::Exponent s = shift(e);
        if (s.q < 0 || s.t < 0) {
            throw ExactDivisionError("term q^" + std::to_string(e.q) + " t^" +
                                     std::to_string(e.t) + " is not divisible by " + var + "^" +
                                     std::to_string(k));
        }
        out.add_term(s.q, s.t, c);
    }
    return out;
}

}  // namespace

QTPoly div_q_exact(const QTPoly& p, int k) {
    return shift_exact(p, k, "q", [k](QTPoly::Exponent e) { return QTPoly::Exponent{e.q - k, e.t}; });
}

QTPoly div_t_exact(const QTPoly& p, int k) {
    return shift_exact(p, k, "t", [k](QTPoly::Exponent e) { return QTPoly::Exponent{e.q, e.t - k}; });
}

QTPoly swap_qt(const QTPoly& p) {
    QTPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(e.t, e.q, c);
    return out;
}

bool is_qt_symmetric(const QTPoly& p) { return swap_qt(p) == p; }

nlohmann::json to_json(const QTPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json term = {{"q", e.q}, {"t", e.t}};
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max()) {
            term["c"] = static_cast<std::int64_t>(c);
        } else {
            term["c"] = c.str();
        }
        arr.push_back(std::move(term));
    }
    return arr;
}

QTPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("polynomial JSON must be an array of terms");
    QTPoly out;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("q") || !term.contains("t") ||
            !term.contains("c")) {
            throw DomainError("polynomial term must have q, t and c fields: " + term.dump());
        }
        const auto& jc = term.at("c");
        Coeff c;
        if (jc.is_number_integer()) {
            c = jc.get<std::int64_t>();
        } else if (jc.is_string()) {
            try {
                c = Coeff(jc.get<std::string>());
            } catch (const std::exception&) {
                throw DomainError("bad coefficient string: " + jc.dump());
            }
        } else {
            throw DomainError("coefficient must be an integer or decimal string: " + jc.dump());
        }
        out.add_term(term.at("q").get<int>(), term.at("t").get<int>(), c);
    }
    return out;
}

namespace {

std::vector<std::pair<QTPoly::Exponent, Coeff>> display_order(const QTPoly& p) {
    std::vector<std::pair<QTPoly::Exponent, Coeff>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        const int dx = x.first.q + x.first.t;
        const int dy = y.first.q + y.first.t;
        if (dx != dy) return dx > dy;
        return x.first.q > y.first.q;
    });
    return terms;
}

struct Style {
    const char* mul;
    std::string (*power)(char var, int exp);
};

std::string render(const QTPoly& p, const Style& style) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : display_order(p)) {
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string vars;
        if (e.q > 0) vars += style.power('q', e.q);
        if (e.t > 0) {
            if (!vars.empty()) vars += style.mul;
            vars += style.power('t', e.t);
        }
        if (vars.empty()) {
            os << mag;
        } else if (mag == 1) {
            os << vars;
        } else {
            os << mag << style.mul << vars;
        }
    }
    return os.str();
}

std::string text_power(char var, int exp) {
    return exp == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(exp);
}

std::string latex_power(char var, int exp) {
    return exp == 1 ? std::string(1, var) : std::string(1, var) + "^{" + std::to_string(exp) + "}";
}

}  // namespace

std::string to_text(const QTPoly& p) { return render(p, {"*", &text_power}); }

std::string to_latex(const QTPoly& p) { return render(p, {"", &latex_power}); }

std::ostream& operator<<(std::ostream& os, const QTPoly& p) { return os << to_text(p); }

}  // namespace ratcat
