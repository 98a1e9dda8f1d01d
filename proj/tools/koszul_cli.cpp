// Command-line front end: expansions, the Koszul map and its inverse,
// central elements, and the verification suites, with deterministic
// text/JSON output. Exit codes: 0 success, 1 verification failure,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "koszul/capelli.hpp"
#include "koszul/io.hpp"
#include "koszul/koszul_map.hpp"
#include "koszul/verify.hpp"

namespace {

struct SizeGuard {
    bool unsafe = false;
    void check_n(int n) const {
        if (n < 1) throw std::invalid_argument("n must be positive");
        if (!unsafe && n > 5)
            throw std::invalid_argument("n out of range (1..5); pass --unsafe-sizes to override");
    }
    void check_degree(int d) const {
        if (!unsafe && d > 6)
            throw std::invalid_argument("degree limit is 6; pass --unsafe-sizes to override");
    }
    void check_weight(int w) const {
        if (!unsafe && w > 6)
            throw std::invalid_argument("shape weight limit is 6; pass --unsafe-sizes to override");
    }
};

void check_entries(const koszul::Tableau& t, int n) {
    if (t.max_entry() > n)
        throw std::invalid_argument("tableau entry exceeds n");
}

std::vector<int> column_of(const koszul::Tableau& t) {
    std::vector<int> entries;
    for (const auto& row : t.rows()) {
        if (row.size() != 1)
            throw std::invalid_argument("column type expects a single-column tableau");
        entries.push_back(row[0]);
    }
    return entries;
}

nlohmann::json read_json_file(const std::string& path) {
    if (path == "-") return nlohmann::json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return nlohmann::json::parse(in);
}

void print_element(const koszul::UEAElement& u, const std::string& format) {
    if (format == "json")
        std::cout << koszul::to_json(u).dump() << "\n";
    else
        std::cout << koszul::to_text(u) << "\n";
}

void print_poly(const koszul::Poly& p, const std::string& format) {
    if (format == "json")
        std::cout << koszul::to_json(p).dump() << "\n";
    else
        std::cout << koszul::to_text(p) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace koszul;

    CLI::App app{"exact calculator for the Koszul correspondence on U(gl(n))"};
    app.require_subcommand(1);

    SizeGuard guard;
    int n = 2;
    int max_degree = 3;
    std::string left_text, right_text, type = "capelli", format = "text";
    std::string element_file, suite = "all", shape_text;
    int k_index = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "matrix size n");
        cmd->add_flag("--unsafe-sizes", guard.unsafe, "disable the size guards");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* expand = app.add_subcommand("expand", "expand a bitableau element");
    add_common(expand);
    expand->add_option("--left", left_text, "left tableau, e.g. \"1 2 / 2 4\"")->required();
    expand->add_option("--right", right_text, "right tableau")->required();
    expand->add_option("--type", type, "element flavor")
        ->check(CLI::IsMember({"capelli", "star", "young", "column", "column-star"}));

    CLI::App* kcmd = app.add_subcommand("koszul", "apply the Koszul map to an element");
    add_common(kcmd);
    kcmd->add_option("--element-file", element_file, "JSON element file ('-' for stdin)")
        ->required();

    CLI::App* bcmd = app.add_subcommand("inverse-koszul", "apply the inverse map to a polynomial");
    add_common(bcmd);
    bcmd->add_option("--element-file", element_file, "JSON polynomial file ('-' for stdin)")
        ->required();

    CLI::App* central = app.add_subcommand("central", "generate central elements");
    add_common(central);
    central->add_option("--k", k_index, "Capelli element index k (H_k)");
    central->add_option("--shape", shape_text, "partition for K_lambda, e.g. \"2 1\"");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    verify->add_option("--suite", suite, "suite name, comma list, or 'all'");
    verify->add_option("--max-degree", max_degree, "size bound for the suites");

    CLI::App* oracle = app.add_subcommand("oracle-check", "superpolarization oracle sweep");
    add_common(oracle);
    oracle->add_option("--max-degree", max_degree, "shape weight and degree bound");

    CLI::App* basis = app.add_subcommand("basis-count", "standard basis counts and ranks");
    add_common(basis);
    basis->add_option("--max-degree", max_degree, "largest degree to count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*expand) {
            guard.check_n(n);
            const Tableau left = parse_tableau(left_text);
            const Tableau right = parse_tableau(right_text);
            check_entries(left, n);
            check_entries(right, n);
            guard.check_weight(left.box_count());
            UEAElement out;
            if (type == "capelli")
                out = capelli_bitableau(left, right);
            else if (type == "star")
                out = star_capelli_bitableau(left, right);
            else if (type == "young")
                out = right_young_capelli(left, right);
            else if (type == "column")
                out = column_capelli(column_of(left), column_of(right));
            else
                out = column_capelli_star(column_of(left), column_of(right));
            print_element(out, format);
            return 0;
        }
        if (*kcmd) {
            guard.check_n(n);
            const UEAElement u = uea_from_json(read_json_file(element_file));
            if (!u.is_zero()) guard.check_degree(degree(u));
            print_poly(koszul_map(u), format);
            return 0;
        }
        if (*bcmd) {
            guard.check_n(n);
            const Poly p = poly_from_json(read_json_file(element_file));
            guard.check_degree(p.degree());
            print_element(inverse_koszul(p), format);
            return 0;
        }
        if (*central) {
            guard.check_n(n);
            UEAElement out;
            if (!shape_text.empty()) {
                const Partition lam = parse_shape(shape_text);
                guard.check_weight(lam.weight());
                out = capelli_K(lam, n);
            } else if (k_index >= 1) {
                out = capelli_H(k_index, n);
            } else {
                throw std::invalid_argument("central: pass --k or --shape");
            }
            print_element(out, format);
            return 0;
        }
        if (*verify) {
            guard.check_n(n);
            guard.check_degree(max_degree);
            VerifyOptions opt{.n = n, .max_degree = max_degree};
            std::vector<std::string> names;
            if (suite == "all") {
                names = suite_names();
            } else {
                std::istringstream ss(suite);
                std::string name;
                while (std::getline(ss, name, ','))
                    if (!name.empty()) names.push_back(name);
            }
            bool all_ok = true;
            for (const std::string& name : names) {
                const SuiteReport rep = run_suite(name, opt);
                all_ok = all_ok && rep.pass;
                std::cout << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.name << " ("
                          << rep.checks << " checks)";
                if (!rep.detail.empty()) std::cout << " " << rep.detail;
                std::cout << "\n";
            }
            return all_ok ? 0 : 1;
        }
        if (*oracle) {
            guard.check_n(n);
            guard.check_degree(max_degree);
            OracleSweepOptions opt;
            opt.n = n;
            opt.max_shape_weight = max_degree;
            opt.max_degree = max_degree;
            const OracleSweepResult res = run_oracle_sweep(opt);
            std::cout << (res.ok ? "[PASS] oracle" : "[FAIL] oracle") << " (" << res.pairs
                      << " pair-flavor combinations, " << res.comparisons
                      << " nonzero comparisons)";
            if (!res.failure.empty()) std::cout << " " << res.failure;
            std::cout << "\n";
            return res.ok ? 0 : 1;
        }
        if (*basis) {
            guard.check_n(n);
            guard.check_degree(max_degree);
            bool ok = true;
            for (int d = 1; d <= max_degree; ++d) {
                Int pairs = 0;
                for (const Partition& lam : partitions_of(d)) {
                    if (lam.part(0) > n) continue;
                    Int m(enumerate_standard(lam, n).size());
                    pairs += m * m;
                }
                const Int dim = binomial(static_cast<unsigned>(n * n + d - 1),
                                         static_cast<unsigned>(d));
                const bool match = pairs == dim;
                ok = ok && match;
                std::cout << "degree " << d << ": standard pairs " << pairs.str()
                          << ", monomial dimension " << dim.str() << (match ? "" : "  MISMATCH")
                          << "\n";
            }
            const SuiteReport rep = run_suite("bases", {.n = n, .max_degree = max_degree});
            ok = ok && rep.pass;
            std::cout << (rep.pass ? "[PASS]" : "[FAIL]") << " rank checks (" << rep.checks
                      << " checks)" << (rep.detail.empty() ? "" : " " + rep.detail) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
