#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "paraboson/io.hpp"

namespace {

using namespace paraboson;

int emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << out_file << "\n";
        return 1;
    }
    f << text;
    return 0;
}

Partition parse_lambda(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) parts.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    return Partition(parts);
}

int cmd_enumerate(const JobConfig& cfg, const std::string& out_file) {
    FockContext ctx{cfg.n, cfg.p, std::max(8, cfg.deg + 2)};
    FockEngine eng(ctx);
    std::vector<EnumerateRecord> records;
    for (const auto& rec : pbw_basis(eng, cfg.deg)) {
        EnumerateRecord r;
        r.tableau = rec.tableau;
        r.gamma = rec.gamma;
        r.vector = rec.vector;
        r.norm2 = eng.inner_product(rec.vector, rec.vector);
        records.push_back(std::move(r));
    }
    return emit(format_enumerate(records, cfg), out_file);
}

int cmd_verify(const JobConfig& cfg, const std::string& suite, const std::string& out_file) {
    VerifyConfig vc;
    vc.n = cfg.n;
    vc.p = cfg.p;
    vc.deg = cfg.deg;
    vc.seed = cfg.seed;
    auto results = run_suite(suite, vc);
    int rc = emit(format_verify(results, suite, cfg), out_file);
    if (rc != 0) return rc;
    return all_passed(results) ? 0 : 2;
}

int cmd_transition(const JobConfig& cfg, const std::string& lambda_str,
                   const std::string& out_file) {
    Partition lam = parse_lambda(lambda_str);
    if (lam.length() > cfg.p) {
        std::ostringstream os;
        os << "shape has " << lam.length() << " rows but the order p = " << cfg.p
           << " admits at most " << cfg.p << "; the highest-weight vector vanishes\n";
        return emit(os.str(), out_file);
    }
    if (lam.length() > cfg.n) {
        std::ostringstream os;
        os << "shape has more rows than the rank n = " << cfg.n << "\n";
        return emit(os.str(), out_file);
    }
    FockContext ctx{cfg.n, cfg.p, std::max({8, cfg.deg, lam.size() + 2})};
    FockEngine eng(ctx);
    auto blocks = transition_matrix(eng, lam);
    return emit(format_transition(blocks, lam, cfg), out_file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic computation in paraboson Fock spaces"};
    app.require_subcommand(1);

    JobConfig cfg;
    std::string out_file;
    std::string suite = "all";
    std::string lambda_str;

    auto add_common = [&](CLI::App* sub, bool need_deg) {
        sub->add_option("--n", cfg.n, "number of paraboson modes")->required();
        sub->add_option("--p", cfg.p, "order of the Fock space")->required()
            ->check(CLI::PositiveNumber);
        if (need_deg) sub->add_option("--deg", cfg.deg, "total degree");
        sub->add_option("--format", cfg.format, "output format: json|csv|latex|text")
            ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
        sub->add_option("--seed", cfg.seed, "seed for randomized property checks");
        sub->add_option("--out", out_file, "write output to FILE instead of stdout");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list basis vectors of a given degree");
    add_common(enumerate, true);

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    add_common(verify, true);
    verify->add_option("--suite", suite, "relations|bases|mz|gz|appendix|all");

    auto* transition = app.add_subcommand("transition",
                                          "transition matrix between the Gelfand-Zetlin and "
                                          "monomial bases for one shape");
    add_common(transition, true);
    transition->add_option("--lambda", lambda_str, "shape, e.g. \"4,2,0\"")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cfg.n < 1) throw std::invalid_argument("n must be at least 1");
        if (cfg.deg < 0) throw std::invalid_argument("degree must be non-negative");
        if (enumerate->parsed()) return cmd_enumerate(cfg, out_file);
        if (verify->parsed()) return cmd_verify(cfg, suite, out_file);
        if (transition->parsed()) return cmd_transition(cfg, lambda_str, out_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
