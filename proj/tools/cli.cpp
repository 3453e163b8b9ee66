#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>

#include "ratcat/closedforms.hpp"
#include "ratcat/dyck.hpp"
#include "ratcat/errors.hpp"
#include "ratcat/hikita.hpp"
#include "ratcat/parking.hpp"
#include "ratcat/qtpoly.hpp"

namespace ratcat::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Rank>& xs, const char* open = "[", const char* close = "]") {
    std::string out = open;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out + close;
}

std::string descent_text(const DescentSet& s) { return "{" + descent_key(s) + "}"; }

GridParams checked_grid(int m, int n, bool modified) {
    const GridParams p{m, n};
    if (m < 1 || n < 1) throw UsageError("m and n must be positive");
    if (modified && !p.modified_shape()) {
        throw UsageError("--modified needs a (3k,3) grid, got " + p.to_string());
    }
    if (!modified && !p.coprime()) {
        throw UsageError("gcd(m,n) must be 1 for " + p.to_string() +
                         (p.modified_shape() ? " (use --modified for (3k,3) grids)" : ""));
    }
    return p;
}

void guard(unsigned long long projected, bool force, const std::string& what) {
    if (projected > kEnumerationLimit && !force) {
        throw UsageError("refusing to enumerate about " + std::to_string(projected) + " " + what +
                         " (limit " + std::to_string(kEnumerationLimit) + "); pass --force");
    }
}

// m^(n-1) parking functions in total.
unsigned long long projected_pfs(int m, int n) {
    const long double v = std::pow(static_cast<long double>(m), n - 1);
    return v > 1e18L ? ~0ULL : static_cast<unsigned long long>(v);
}

std::string render(const IdentityValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            std::string s = to_text(x);
            while (!s.empty() && s.back() == '\n') s.pop_back();
            for (auto& c : s) {
                if (c == '\n') c = ';';
            }
            return s;
        },
        v);
}

struct Common {
    int m = 0;
    int n = 0;
    std::string format = "text";
    bool force = false;
};

void add_grid(CLI::App* sub, Common& c) {
    sub->add_option("m", c.m, "width (columns)")->required();
    sub->add_option("n", c.n, "height (rows)")->required();
}

void add_format(CLI::App* sub, std::string& format) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
}

int cmd_paths(const Common& c, bool modified, bool stats, std::ostream& out) {
    const GridParams p = checked_grid(c.m, c.n, modified);
    guard(count_paths(p), c.force, "paths");
    const auto paths = enumerate_paths(p);
    if (c.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& path : paths) {
            nlohmann::json rec = {{"counts", path.to_string()},
                                  {"steps", path.to_steps()},
                                  {"on_path", ranks_on_path(path)}};
            if (stats) {
                const auto s = dinv_fast(path);
                rec["area"] = s.area();
                rec["dinv"] = s.dinv();
                rec["skips"] = s.skips();
            }
            arr.push_back(std::move(rec));
        }
        out << nlohmann::json{{"m", p.m}, {"n", p.n}, {"modified", modified}, {"count", paths.size()}, {"paths", arr}}
                   .dump(2)
            << "\n";
    } else if (c.format == "latex") {
        out << "\\begin{tabular}{l l" << (stats ? " r r r" : "") << "}\n";
        out << "counts & on-path ranks" << (stats ? " & area & dinv & skips" : "") << " \\\\\n\\hline\n";
        for (const auto& path : paths) {
            out << "$" << path.to_string() << "$ & $" << join(ranks_on_path(path), "\\{", "\\}") << "$";
            if (stats) {
                const auto s = dinv_fast(path);
                out << " & " << s.area() << " & " << s.dinv() << " & " << s.skips();
            }
            out << " \\\\\n";
        }
        out << "\\end{tabular}\n";
    } else {
        out << "# " << (modified ? "modified " : "") << p.to_string() << "-Dyck paths: " << paths.size() << "\n";
        for (const auto& path : paths) {
            out << path.to_string() << "  ranks=" << join(ranks_on_path(path));
            if (stats) {
                const auto s = dinv_fast(path);
                out << "  area=" << s.area() << " dinv=" << s.dinv() << " skips=" << s.skips();
            }
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_catalan(const Common& c, bool closed, std::ostream& out) {
    const GridParams p = checked_grid(c.m, c.n, false);
    std::optional<QTPoly> closed_value;
    if (closed) {
        if (p.n == 3) {
            closed_value = catalan3_closed(p.m);
        } else if (p.m == 3) {
            closed_value = catalan3_closed(p.n);
        } else {
            throw UnsupportedError("--closed needs m = 3 or n = 3");
        }
    }
    guard(count_paths(p), c.force, "paths");
    const QTPoly brute = catalan_brute(p);
    const bool equal = !closed_value || *closed_value == brute;
    const std::string label = "C_{" + std::to_string(p.m) + "," + std::to_string(p.n) + "}(q,t)";
    if (c.format == "json") {
        nlohmann::json j = {{"m", p.m}, {"n", p.n}, {"brute", to_json(brute)}};
        if (closed_value) {
            j["closed"] = to_json(*closed_value);
            j["equal"] = equal;
        }
        out << j.dump(2) << "\n";
    } else if (c.format == "latex") {
        out << label << " = " << to_latex(brute) << "\n";
        if (closed_value) {
            out << "% closed form: " << to_latex(*closed_value) << "\n";
            out << "% equal: " << (equal ? "true" : "false") << "\n";
        }
    } else {
        out << label << " = " << to_text(brute) << "\n";
        if (closed_value) {
            out << "closed = " << to_text(*closed_value) << "\n";
            out << "equal = " << (equal ? "true" : "false") << "\n";
        }
    }
    return equal ? kExitOk : kExitVerifyFailed;
}

int cmd_hikita(const Common& c, bool schur, std::ostream& out) {
    const GridParams p = checked_grid(c.m, c.n, false);
    if (schur && p.n > 3) throw UnsupportedError("--schur needs n <= 3");
    guard(projected_pfs(p.m, p.n), c.force, "parking functions");
    const FExpansion fe = hikita(p.m, p.n);
    const std::string label = "H_{" + std::to_string(p.m) + "," + std::to_string(p.n) + "}";
    if (schur) {
        const SchurExpansion se = to_schur(fe);
        if (c.format == "json") {
            auto j = to_json(se);
            j["m"] = p.m;
            out << j.dump(2) << "\n";
        } else if (c.format == "latex") {
            out << label << "(X;q,t) = " << to_latex(se) << "\n";
        } else {
            out << "# " << label << " in the Schur basis\n" << to_text(se);
        }
        return kExitOk;
    }
    if (c.format == "json") {
        auto j = to_json(fe);
        j["m"] = p.m;
        out << j.dump(2) << "\n";
    } else if (c.format == "latex") {
        out << label << "(X;q,t) = " << to_latex(fe) << "\n";
    } else {
        out << "# " << label << " in the fundamental basis\n" << to_text(fe);
    }
    return kExitOk;
}

int cmd_pf(const Common& c, const std::string& literal, std::ostream& out) {
    const GridParams p = checked_grid(c.m, c.n, false);
    const DyckPath path = DyckPath::parse(p, literal);
    guard(count_pfs(path), c.force, "parking functions");
    const auto stats = dinv_fast(path);
    const auto pfs = enumerate_pfs(path);
    if (c.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& pf : pfs) {
            arr.push_back({{"window", pf.window},
                           {"ides", ides(pf)},
                           {"inv", bounded_inversion_count(pf.window, p.m)},
                           {"dinv", dinv_pf(pf, stats.dinv())},
                           {"area", stats.area()},
                           {"affine", to_affine(pf, stats.area()).window()}});
        }
        out << nlohmann::json{{"m", p.m}, {"n", p.n}, {"path", path.to_string()}, {"count", pfs.size()}, {"pfs", arr}}
                   .dump(2)
            << "\n";
    } else if (c.format == "latex") {
        out << "\\begin{tabular}{l l r r l}\nwindow & ides & inv & dinv & affine \\\\\n\\hline\n";
        for (const auto& pf : pfs) {
            const DescentSet d = ides(pf);
            out << "$" << join(pf.window) << "$ & $" << (d.empty() ? "\\emptyset" : "\\{" + descent_key(d) + "\\}")
                << "$ & " << bounded_inversion_count(pf.window, p.m) << " & " << dinv_pf(pf, stats.dinv())
                << " & $" << join(to_affine(pf, stats.area()).window()) << "$ \\\\\n";
        }
        out << "\\end{tabular}\n";
    } else {
        out << "# parking functions on " << p.to_string() << " path " << path.to_string() << ": " << pfs.size()
            << " (path dinv=" << stats.dinv() << " area=" << stats.area() << ")\n";
        for (const auto& pf : pfs) {
            out << join(pf.window) << "  ides=" << descent_text(ides(pf))
                << "  inv=" << bounded_inversion_count(pf.window, p.m) << "  dinv=" << dinv_pf(pf, stats.dinv())
                << "  affine=" << join(to_affine(pf, stats.area()).window()) << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, const VerifyBounds& bounds, const std::string& format,
               std::ostream& out) {
    if (bounds.max_m < 1 || bounds.max_n < 1) throw UsageError("--max-m and --max-n must be positive");
    const auto& names = identity_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string known;
        for (const auto& n : names) known += " " + n;
        throw UsageError("unknown suite '" + suite + "'; known: all" + known);
    }
    const auto reports = suite == "all" ? verify_all(bounds) : verify_identity(suite, bounds);
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.pass ? 0 : 1;

    if (format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << (r.pass ? "PASS " : "FAIL ") << r.name << " " << r.params;
            if (!r.pass) {
                out << "\n  lhs: " << render(r.lhs) << "\n  rhs: " << render(r.rhs);
                if (r.difference) out << "\n  diff: " << render(*r.difference);
            }
            if (!r.note.empty()) out << "\n  note: " << r.note;
            out << "\n";
        }
        out << (reports.size() - failed) << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational q,t-Catalan and Hikita polynomial toolkit", "ratcat"};
    app.require_subcommand(1);

    Common paths_opts, catalan_opts, hikita_opts, pf_opts;
    bool modified = false, stats = false, closed = false, schur = false;
    std::string path_literal;
    std::string suite = "all";
    std::string verify_format = "text";
    VerifyBounds bounds;

    auto* paths = app.add_subcommand("paths", "list (m,n)-Dyck paths");
    add_grid(paths, paths_opts);
    paths->add_flag("--modified", modified, "use the tie-broken (3k,3) grid");
    paths->add_flag("--stats", stats, "include area, dinv and skips");
    paths->add_flag("--force", paths_opts.force, "skip the enumeration size limit");
    add_format(paths, paths_opts.format);

    auto* catalan = app.add_subcommand("catalan", "rational q,t-Catalan polynomial");
    add_grid(catalan, catalan_opts);
    catalan->add_flag("--closed", closed, "compare with the three-row closed form");
    catalan->add_flag("--force", catalan_opts.force, "skip the enumeration size limit");
    add_format(catalan, catalan_opts.format);

    auto* hik = app.add_subcommand("hikita", "Hikita polynomial in the F or Schur basis");
    add_grid(hik, hikita_opts);
    hik->add_flag("--schur", schur, "convert to the Schur basis (n <= 3)");
    hik->add_flag("--force", hikita_opts.force, "skip the enumeration size limit");
    add_format(hik, hikita_opts.format);

    auto* verify = app.add_subcommand("verify", "check closed-form identities against enumeration");
    verify->add_option("--suite", suite, "identity name or 'all'")->capture_default_str();
    verify->add_option("--max-m", bounds.max_m, "largest m")->capture_default_str();
    verify->add_option("--max-n", bounds.max_n, "largest n")->capture_default_str();
    verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* pf = app.add_subcommand("pf", "parking functions on one path");
    add_grid(pf, pf_opts);
    pf->add_option("--path", path_literal, "above counts 'a1,...,an' or an N/E word")->required();
    pf->add_flag("--force", pf_opts.force, "skip the enumeration size limit");
    add_format(pf, pf_opts.format);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*paths) return cmd_paths(paths_opts, modified, stats, out);
        if (*catalan) return cmd_catalan(catalan_opts, closed, out);
        if (*hik) return cmd_hikita(hikita_opts, schur, out);
        if (*verify) return cmd_verify(suite, bounds, verify_format, out);
        if (*pf) return cmd_pf(pf_opts, path_literal, out);
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ratcat::cli
