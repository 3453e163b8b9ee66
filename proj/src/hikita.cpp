#include "ratcat/hikita.hpp"

#include <sstream>

#include "ratcat/errors.hpp"

namespace ratcat {

FExpansion::FExpansion(int n) : n_(n) {
    if (n < 1) throw DomainError("F-expansion degree must be positive");
}

void FExpansion::check_subset(const DescentSet& s) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n_ - 1 || (i > 0 && s[i] <= s[i - 1])) {
            throw DomainError("{" + descent_key(s) + "} is not a sorted subset of {1.." +
                              std::to_string(n_ - 1) + "}");
        }
    }
}

QTPoly FExpansion::coeff(const DescentSet& s) const {
    check_subset(s);
    const auto it = coeffs_.find(s);
    return it == coeffs_.end() ? QTPoly{} : it->second;
}

void FExpansion::add(const DescentSet& s, const QTPoly& p) {
    check_subset(s);
    if (p.is_zero()) return;
    auto& slot = coeffs_[s];
    slot += p;
    if (slot.is_zero()) coeffs_.erase(s);
}

void FExpansion::add_term(const DescentSet& s, int q_degree, int t_degree) {
    add(s, QTPoly::monomial(q_degree, t_degree));
}

FExpansion& FExpansion::operator+=(const FExpansion& other) {
    if (other.n_ != n_) throw DomainError("cannot merge F-expansions of different degree");
    for (const auto& [s, p] : other.coeffs_) add(s, p);
    return *this;
}

bool FExpansion::operator==(const FExpansion& other) const {
    return n_ == other.n_ && coeffs_ == other.coeffs_;
}

QTPoly SchurExpansion::coeff(const Partition& lambda) const {
    const auto it = coeffs.find(lambda);
    return it == coeffs.end() ? QTPoly{} : it->second;
}

FExpansion hikita(int m, int n) {
    const GridParams params{m, n};
    if (!params.coprime()) {
        throw DomainError("Hikita polynomial needs coprime (m,n), got " + params.to_string());
    }
    FExpansion out(n);
    for (const auto& path : enumerate_paths(params)) {
        const auto stats = dinv_fast(path);
        for (const auto& pf : enumerate_pfs(path)) {
            out.add_term(ides(pf), dinv_pf(pf, stats.dinv()), stats.area());
        }
    }
    return out;
}

DescentSet full_descent_set(int n) {
    DescentSet s;
    for (int i = 1; i < n; ++i) s.push_back(i);
    return s;
}

SchurExpansion to_schur(const FExpansion& fe) {
    SchurExpansion out;
    out.n = fe.n();
    auto put = [&](const Partition& lambda, const QTPoly& p) {
        if (!p.is_zero()) out.coeffs[lambda] = p;
    };
    if (fe.n() == 1) {
        put({1}, fe.coeff({}));
    } else if (fe.n() == 2) {
        put({1, 1}, fe.coeff({}));
        put({2}, fe.coeff({1}));
    } else if (fe.n() == 3) {
        const QTPoly c1 = fe.coeff({1});
        const QTPoly c2 = fe.coeff({2});
        if (c1 != c2) {
            throw InvariantError("F_{1} and F_{2} coefficients differ: " + to_text(c1) + " vs " +
                                 to_text(c2));
        }
        put({1, 1, 1}, fe.coeff({}));
        put({2, 1}, c1);
        put({3}, fe.coeff({1, 2}));
    } else {
        throw UnsupportedError("Schur conversion is implemented for n <= 3 only, got n = " +
                               std::to_string(fe.n()));
    }
    return out;
}

std::string descent_key(const DescentSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

DescentSet parse_descent_key(const std::string& key) {
    DescentSet out;
    if (key.empty()) return out;
    std::stringstream ss(key);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw DomainError("bad descent set key: \"" + key + "\"");
        }
    }
    return out;
}

std::string partition_key(const Partition& lambda) { return descent_key(lambda); }

nlohmann::json to_json(const FExpansion& fe) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [s, p] : fe.coeffs()) coeffs[descent_key(s)] = to_json(p);
    return {{"n", fe.n()}, {"coeffs", coeffs}};
}

FExpansion f_expansion_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs")) {
        throw DomainError("F-expansion JSON needs n and coeffs");
    }
    FExpansion fe(j.at("n").get<int>());
    for (const auto& [key, poly] : j.at("coeffs").items()) {
        fe.add(parse_descent_key(key), poly_from_json(poly));
    }
    return fe;
}

nlohmann::json to_json(const SchurExpansion& se) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [lambda, p] : se.coeffs) coeffs[partition_key(lambda)] = to_json(p);
    return {{"n", se.n}, {"schur", coeffs}};
}

std::string to_latex(const FExpansion& fe) {
    if (fe.coeffs().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, p] : fe.coeffs()) {
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << to_latex(p) << "\\right)F_{";
        if (s.empty()) {
            os << "\\emptyset";
        } else {
            os << "\\{" << descent_key(s) << "\\}";
        }
        os << "}";
    }
    return os.str();
}

std::string to_latex(const SchurExpansion& se) {
    if (se.coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Map order puts s_(1^n) first and s_(n) last.
    for (const auto& [lambda, p] : se.coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << to_latex(p) << "\\right)s_{(" << partition_key(lambda) << ")}";
    }
    return os.str();
}

std::string to_text(const FExpansion& fe) {
    std::ostringstream os;
    for (const auto& [s, p] : fe.coeffs()) os << "F{" << descent_key(s) << "}: " << to_text(p) << "\n";
    if (fe.coeffs().empty()) os << "0\n";
    return os.str();
}

std::string to_text(const SchurExpansion& se) {
    std::ostringstream os;
    for (const auto& [lambda, p] : se.coeffs) {
        os << "s(" << partition_key(lambda) << "): " << to_text(p) << "\n";
    }
    if (se.coeffs.empty()) os << "0\n";
    return os.str();
}

}  // namespace ratcat
