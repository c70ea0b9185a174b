// pds: construct, verify, search, and rule out partial difference sets in
// finite abelian groups.
//
// Exit codes: 0 success/feasible/found, 1 verification failure or an
// infeasible verdict or an empty search, 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pdskit/feasibility.hpp"
#include "pdskit/gf.hpp"
#include "pdskit/json_io.hpp"
#include "pdskit/pds.hpp"
#include "pdskit/search.hpp"

namespace {

using namespace pdskit;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty()) {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

void print_params(std::ostream& os, const PdsParams& p) {
    os << "(v=" << p.v << ", k=" << p.k << ", lambda=" << p.lambda << ", mu=" << p.mu
       << "; beta=" << p.beta() << ", delta=" << p.delta() << ")";
}

int run_verify(const std::string& path, bool json_out) {
    const CandidateSet d = candidate_set_from_text(read_input(path));
    const VerificationReport rep = verify_pds(d);
    if (json_out) {
        std::cout << to_json(rep).dump() << "\n";
    } else if (rep.is_pds) {
        std::cout << "PDS ";
        print_params(std::cout, *rep.params);
        std::cout << (rep.is_regular ? "; regular" : "; not regular")
                  << (rep.is_trivial ? "; trivial" : "; nontrivial")
                  << (rep.degenerate ? "; degenerate" : "") << "\n";
    } else {
        std::cout << "not a PDS: element " << format_element(*rep.failing_element)
                  << " has difference count " << rep.failing_count << ", expected "
                  << rep.expected_count << "\n";
    }
    return rep.is_pds ? 0 : 1;
}

int run_paley(std::int64_t q) {
    std::cout << to_json(paley_pds(q)).dump() << "\n";
    return 0;
}

std::string verdict_line(const Verdict& v) {
    std::ostringstream os;
    os << to_string(v.kind);
    if (!v.rule.empty()) os << " (" << v.rule << ")";
    if (v.kind != VerdictKind::open && !v.detail.empty()) os << ": " << v.detail;
    return os.str();
}

int run_sieve(std::int64_t v, bool json_out) {
    const Verdict verdict = sieve(v);
    if (json_out) {
        std::cout << to_json(verdict).dump() << "\n";
    } else {
        std::cout << verdict_line(verdict) << "\n";
    }
    return verdict.kind == VerdictKind::infeasible ? 1 : 0;
}

int run_atlas(std::int64_t max_v, bool json_out) {
    for (const Verdict& verdict : sieve_range(max_v)) {
        if (json_out) {
            std::cout << to_json(verdict).dump() << "\n";
        } else {
            std::cout << "v=" << verdict.v << ": " << verdict_line(verdict) << "\n";
        }
    }
    return 0;
}

int run_search(const std::string& group_spec, const std::string& mode, std::int64_t limit,
               bool json_out) {
    SearchProblem problem{AbelianGroup::parse(group_spec), PdsParams{}, SearchMode::orbit, limit};
    problem.target = paley_params(problem.group.order());
    if (mode == "orbit") {
        problem.mode = SearchMode::orbit;
    } else if (mode == "brute") {
        problem.mode = SearchMode::brute;
    } else {
        throw std::invalid_argument("mode must be 'orbit' or 'brute'");
    }
    const SearchResult result = search(problem);
    if (json_out) {
        std::cout << to_json(problem, result).dump() << "\n";
    } else {
        std::cout << "group " << problem.group.spec() << ", target ";
        print_params(std::cout, problem.target);
        std::cout << "\nsolutions: " << result.solutions.size() << " ("
                  << (result.complete ? "complete" : "truncated") << ", "
                  << result.nodes_explored << " nodes)\n";
        for (const auto& s : result.solutions) {
            std::cout << " ";
            for (const auto& m : s.members()) std::cout << " " << format_element(m);
            std::cout << "\n";
        }
    }
    return result.solutions.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial difference set toolkit"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "verify a candidate set (JSON from file or stdin)");
    std::string verify_path;
    bool verify_json = false;
    verify->add_option("path", verify_path, "candidate set JSON file (default: stdin)");
    verify->add_flag("--json", verify_json, "emit the verification report as JSON");

    auto* paley = app.add_subcommand("paley", "construct the Paley set of F_q as JSON");
    std::int64_t paley_q = 0;
    paley->add_option("--q", paley_q, "odd prime power ≡ 1 (mod 4)")->required();

    auto* sieve_cmd = app.add_subcommand("sieve", "feasibility verdict for one order");
    std::int64_t sieve_v = 0;
    bool sieve_json = false;
    sieve_cmd->add_option("--v", sieve_v, "group order")->required();
    sieve_cmd->add_flag("--json", sieve_json, "emit the verdict as JSON");

    auto* atlas = app.add_subcommand("atlas", "verdicts for every v ≡ 1 (mod 4) up to a bound");
    std::int64_t atlas_max = 0;
    bool atlas_json = false;
    atlas->add_option("--max", atlas_max, "largest order to scan")->required();
    atlas->add_flag("--json", atlas_json, "one JSON verdict per line");

    auto* search_cmd = app.add_subcommand("search", "exhaustive search for Paley-type PDSs");
    std::string search_group, search_mode = "orbit";
    std::int64_t search_limit = 0;
    bool search_paley = false, search_json = false;
    search_cmd->add_option("--group", search_group, "group spec, e.g. Z3^2")->required();
    search_cmd->add_flag("--paley", search_paley, "target the Paley parameters of the group order")
        ->required();
    search_cmd->add_option("--mode", search_mode, "orbit (default) or brute");
    search_cmd->add_option("--limit", search_limit, "stop after this many solutions (0 = all)");
    search_cmd->add_flag("--json", search_json, "emit solutions as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0; parse failures are usage errors
    }

    try {
        if (*verify) return run_verify(verify_path, verify_json);
        if (*paley) return run_paley(paley_q);
        if (*sieve_cmd) return run_sieve(sieve_v, sieve_json);
        if (*atlas) return run_atlas(atlas_max, atlas_json);
        if (*search_cmd) return run_search(search_group, search_mode, search_limit, search_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
