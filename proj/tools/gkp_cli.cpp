// gkp: tables, verification suites, path listings, permutation oracles and
// basis-change reports for two-term triangular recurrences.
//
// Exit codes: 0 success, 1 identity violation, 2 usage error.

#include "gkp/core.hpp"
#include "gkp/io.hpp"
#include "gkp/lattice_paths.hpp"
#include "gkp/poly_basis.hpp"
#include "gkp/stirling.hpp"
#include "gkp/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::optional<std::string> format;
    std::string out;
    std::uint64_t seed = 42;
    long limit = 1'000'000;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

gkp::AffineWeight weight_arg(const std::string& text) {
    try {
        return gkp::parse_affine(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_table(const Globals& g, const std::string& a, const std::string& b, long n_max, std::ostream& out) {
    if (n_max < 0) throw UsageError("--nmax must be non-negative");
    gkp::TableFormat format{};
    try {
        format = gkp::parse_table_format(g.format.value_or("csv"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const gkp::GkpSpec spec{weight_arg(a), weight_arg(b)};
    out << gkp::render_table({spec, gkp::triangle_by_recurrence(spec, static_cast<std::size_t>(n_max))}, format);
    return kOk;
}

int cmd_verify(const Globals& g, const std::string& suite, std::optional<long> n_max, long trials, std::ostream& out) {
    const auto& names = gkp::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("unknown suite '" + suite + "' (expected one of " + join(names, ", ") + ")");
    }
    if (trials < 0) throw UsageError("--trials must be non-negative");
    if (n_max && *n_max < 0) throw UsageError("--nmax must be non-negative");
    const auto report = gkp::run_suite(suite, {n_max, trials, g.seed});
    if (g.format.value_or("") == "json") {
        out << report.to_json();
    } else {
        out << report.summary();
    }
    return report.ok() ? kOk : kViolation;
}

int cmd_paths(const Globals& g, long n, long k, const std::optional<std::string>& a,
              const std::optional<std::string>& b, std::ostream& out) {
    if (n < 0 || k < 0 || k > n || n > 20) throw UsageError("require 0 <= k <= n <= 20");
    if (gkp::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) > g.limit) {
        throw UsageError("C(n,k) exceeds --limit " + std::to_string(g.limit));
    }
    std::optional<gkp::GkpSpec> spec;
    if (a || b) spec = gkp::GkpSpec{weight_arg(a.value_or("1,0,0")), weight_arg(b.value_or("1,0,0"))};

    gkp::Rational total = 0;
    long count = 0;
    gkp::for_each_path(n, k, [&](const gkp::LatticePath& p) {
        const auto sigma = gkp::sigma_of_path(p);
        out << gkp::to_string(p) << " | σ=" << gkp::to_string(sigma) << " | σ̃=" << gkp::to_string(gkp::sigma_tilde(sigma));
        if (spec) {
            const auto w = gkp::path_weight(p, *spec);
            total += w;
            out << " | w=" << gkp::to_string(w);
        }
        out << '\n';
        ++count;
    });
    out << "count=" << count;
    if (spec) out << " total=" << gkp::to_string(total);
    out << '\n';
    return kOk;
}

std::string histogram_row(const std::map<long, std::uint64_t>& hist, long from, long to) {
    std::vector<std::string> cells;
    for (long k = from; k <= to; ++k) {
        const auto it = hist.find(k);
        cells.push_back(std::to_string(it == hist.end() ? 0 : it->second));
    }
    return join(cells, ",");
}

int cmd_oracle(const Globals& g, const std::string& kind, int m, int n, std::ostream& out) {
    if (kind != "stirling") throw UsageError("unknown oracle kind '" + kind + "' (expected stirling)");
    if (m < 1 || n < 0) throw UsageError("require --m >= 1 and --n >= 0");
    if (static_cast<long>(m) * n > 16) throw UsageError("require m*n <= 16");
    const gkp::Integer count = gkp::stirling_perm_count(m, n);
    if (count > g.limit) throw UsageError("|Q(m,n)| = " + count.get_str() + " exceeds --limit " + std::to_string(g.limit));

    const auto internal = gkp::descent_histogram(m, n, false);
    const auto with_final = gkp::descent_histogram(m, n, true);
    const long top = std::max(n - 1, 0);
    const std::string internal_row = histogram_row(internal, 0, top);
    out << "count=" << count.get_str() << "; internal-descents: " << internal_row << '\n';
    out << "final-descents: " << histogram_row(with_final, 0, top + 1) << '\n';

    const auto b = gkp::b_triangle(m, static_cast<std::size_t>(n));
    std::vector<std::string> cells;
    for (long k = 0; k <= top; ++k) cells.push_back(gkp::to_string(b.triangle.at(n, k)));
    const std::string b_row = join(cells, ",");
    const bool match = b_row == internal_row;
    out << "b_triangle: " << b_row << (match ? " (match)" : " (MISMATCH)") << '\n';
    return match ? kOk : kViolation;
}

int cmd_basis(const Globals& g, const std::string& a_text, long n_max, bool check, std::ostream& out) {
    if (n_max < 0 || n_max > 50) throw UsageError("require 0 <= --nmax <= 50");
    const gkp::AffineWeight a = weight_arg(a_text);
    const gkp::Triangle f = gkp::triangle_by_recurrence({a, gkp::kUnitWeight}, static_cast<std::size_t>(n_max));
    if (g.format && *g.format != "md") {
        gkp::TableFormat format{};
        try {
            format = gkp::parse_table_format(*g.format);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        out << gkp::render_table({{a, gkp::kUnitWeight}, f}, format);
    } else {
        for (std::size_t n = 0; n <= f.n_max(); ++n) {
            std::vector<std::string> cells;
            for (std::size_t k = 0; k <= f.n_max(); ++k) {
                cells.push_back(gkp::to_string(f.at(static_cast<long>(n), static_cast<long>(k))));
            }
            out << join(cells, ",") << '\n';
        }
    }
    if (!check) return kOk;

    const auto report = gkp::verify_transition(a, n_max);
    for (const auto& c : report.checks) {
        out << "n=" << c.n << ": ";
        if (c.pass) {
            out << "pass\n";
        } else {
            out << "FAIL at x^" << *c.first_diff << ": " << gkp::to_string(c.lhs_coeff)
                << " != " << gkp::to_string(c.rhs_coeff) << '\n';
        }
    }
    out << (report.all_pass() ? "pass" : "FAIL") << '\n';
    return report.all_pass() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact two-term triangular recurrences: tables, cross-checks and oracles"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::string format;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "md"}));
    app.add_option("--out", g.out, "Write output to FILE instead of stdout");
    app.add_option("--seed", g.seed, "Seed for random spec grids");
    app.add_option("--limit", g.limit, "Upper bound on enumerated objects");

    auto* table = app.add_subcommand("table", "Print the triangle built by the recurrence");
    std::string table_a = "1,0,0";
    std::string table_b = "1,0,0";
    long table_nmax = 0;
    table->add_option("--a", table_a, "East weight a0,a1,a2");
    table->add_option("--b", table_b, "North-East weight b0,b1,b2");
    table->add_option("--nmax", table_nmax, "Last row")->required();

    auto* verify = app.add_subcommand("verify", "Run a cross-method verification suite");
    std::string suite = "all";
    std::optional<long> verify_nmax;
    long trials = 100;
    verify->add_option("--suite", suite, "Suite name");
    verify->add_option("--nmax", verify_nmax, "Override the suite's size");
    verify->add_option("--trials", trials, "Random specs per suite");

    auto* paths = app.add_subcommand("paths", "List E/NE paths with sigma, sigma tilde and weights");
    long path_n = 0;
    long path_k = 0;
    std::optional<std::string> path_a;
    std::optional<std::string> path_b;
    paths->add_option("--n", path_n)->required();
    paths->add_option("--k", path_k)->required();
    paths->add_option("--a", path_a, "East weight a0,a1,a2");
    paths->add_option("--b", path_b, "North-East weight b0,b1,b2");

    auto* oracle = app.add_subcommand("oracle", "Brute-force descent statistics of Stirling permutations");
    std::string kind;
    int oracle_m = 1;
    int oracle_n = 0;
    oracle->add_option("kind", kind, "Oracle kind (stirling)")->required();
    oracle->add_option("--m", oracle_m, "Multiplicity")->required();
    oracle->add_option("--n", oracle_n, "Alphabet size")->required();

    auto* basis = app.add_subcommand("basis", "Transition matrix between generalized factorial bases");
    std::string basis_a;
    long basis_nmax = 0;
    bool basis_check = false;
    basis->add_option("--a", basis_a, "East weight a0,a1,a2")->required();
    basis->add_option("--nmax", basis_nmax, "Largest degree")->required();
    basis->add_flag("--check", basis_check, "Verify the polynomial identity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (!format.empty()) g.format = format;

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (*table) code = cmd_table(g, table_a, table_b, table_nmax, buffer);
        if (*verify) code = cmd_verify(g, suite, verify_nmax, trials, buffer);
        if (*paths) code = cmd_paths(g, path_n, path_k, path_a, path_b, buffer);
        if (*oracle) code = cmd_oracle(g, kind, oracle_m, oracle_n, buffer);
        if (*basis) code = cmd_basis(g, basis_a, basis_nmax, basis_check, buffer);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (g.out.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(g.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << g.out << '\n';
            return kUsage;
        }
        file << buffer.str();
    }
    return code;
}
