// Acceptance suite: one criterion per check, one pass/fail line each.
// The CLI path comes from the PDS_CLI environment variable (set by ctest).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pdskit/arith.hpp"
#include "pdskit/feasibility.hpp"
#include "pdskit/gf.hpp"
#include "pdskit/json_io.hpp"
#include "pdskit/pds.hpp"
#include "pdskit/search.hpp"

using namespace pdskit;

namespace {

struct CliResult {
    std::string output;
    int exit_code = -1;
};

std::string cli_path() {
    const char* env = std::getenv("PDS_CLI");
    if (env && *env) return env;
    return "./tools/pds";
}

CliResult run_shell(const std::string& cmd) {
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) {
        res.output.append(buf, n);
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

class Harness {
  public:
    void criterion(int id, const std::string& name, double time_limit_s,
                   const std::function<bool(std::string&)>& body) {
        std::string note;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = body(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && time_limit_s > 0 && secs > time_limit_s) {
            ok = false;
            note = "exceeded the " + std::to_string(time_limit_s) + "s budget";
        }
        std::ostringstream line;
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name << " ("
             << std::fixed;
        line.precision(2);
        line << secs << "s)";
        if (!ok && !note.empty()) line << " -- " << note;
        std::cout << line.str() << std::endl;
        if (!ok) ++failures_;
    }

    int failures() const { return failures_; }

  private:
    int failures_ = 0;
};

bool expect(bool cond, const std::string& msg, std::string& note) {
    if (!cond && note.empty()) note = msg;
    return cond;
}

const std::vector<std::int64_t> kPaleyOrders = {5, 9, 13, 17, 25, 29, 37, 41, 49};

// Shared between criteria 4 and 6.
std::vector<CandidateSet> g_found_solutions;

bool criterion_paley_cli(std::string& note) {
    const std::string cli = cli_path();
    for (const std::int64_t q : kPaleyOrders) {
        const std::string cmd =
            "\"" + cli + "\" paley --q " + std::to_string(q) + " | \"" + cli + "\" verify --json";
        const CliResult res = run_shell(cmd);
        if (!expect(res.exit_code == 0, "pipeline exit code " + std::to_string(res.exit_code) +
                                            " for q = " + std::to_string(q), note)) {
            return false;
        }
        nlohmann::json rep;
        try {
            rep = nlohmann::json::parse(res.output);
        } catch (...) {
            note = "verify emitted unparseable JSON for q = " + std::to_string(q);
            return false;
        }
        const PdsParams expected = paley_params(q);
        const bool match = rep.at("is_pds") == true && rep.at("is_regular") == true &&
                           rep.at("is_trivial") == false &&
                           rep.at("params").at("v") == expected.v &&
                           rep.at("params").at("k") == expected.k &&
                           rep.at("params").at("lambda") == expected.lambda &&
                           rep.at("params").at("mu") == expected.mu;
        if (!expect(match, "report mismatch for q = " + std::to_string(q), note)) return false;
    }
    return true;
}

bool criterion_sieve(std::string& note) {
    const Verdict v225 = sieve(225);
    if (!expect(v225.kind == VerdictKind::infeasible && v225.rule == "R2" &&
                    v225.detail.find("5 ≡ 1 (mod 4)") != std::string::npos,
                "sieve(225) did not cite R2 with 5 ≡ 1 (mod 4)", note)) {
        return false;
    }
    const Verdict v1225 = sieve(1225);
    if (!expect(v1225.kind == VerdictKind::infeasible && v1225.rule == "R2",
                "sieve(1225) is not Infeasible(R2)", note)) {
        return false;
    }
    if (!expect(sieve(441).kind == VerdictKind::open, "sieve(441) is not Open", note)) return false;
    if (!expect(sieve(3969).kind == VerdictKind::open, "sieve(3969) is not Open", note)) {
        return false;
    }
    for (std::int64_t q = 5; q < 2000; q += 4) {
        if (!as_prime_power(q)) continue;
        if (!expect(sieve(q).kind == VerdictKind::known_exists,
                    "sieve(" + std::to_string(q) + ") is not KnownExists", note)) {
            return false;
        }
    }
    return true;
}

bool criterion_subgroup_restriction(std::string& note) {
    const PdsParams target{225, 112, 55, 56};
    const auto r9 = subgroup_restriction(target, 9);
    const auto r25 = subgroup_restriction(target, 25);
    if (!expect(r9.beta1 == -1 && r9.delta1 == r9.pi * r9.pi && r9.k1_plus.integral &&
                    r9.sub_params() && *r9.sub_params() == PdsParams{9, 4, 1, 2},
                "restriction to order 9 is not (9, 4, 1, 2)", note)) {
        return false;
    }
    if (!expect(r25.beta1 == -1 && r25.delta1 == r25.pi * r25.pi && r25.k1_plus.integral &&
                    r25.sub_params() && *r25.sub_params() == PdsParams{25, 12, 5, 6},
                "restriction to order 25 is not (25, 12, 5, 6)", note)) {
        return false;
    }
    return true;
}

bool criterion_orbit_soundness(std::string& note) {
    g_found_solutions.clear();
    for (const std::string spec : {"Z3^2", "Z5^2"}) {
        const AbelianGroup g = AbelianGroup::parse(spec);
        const PdsParams target = paley_params(g.order());
        const SearchResult orbit = search(SearchProblem{g, target, SearchMode::orbit});
        const SearchResult brute = search(SearchProblem{g, target, SearchMode::brute});
        if (!expect(orbit.complete && brute.complete, spec + ": searches did not complete", note)) {
            return false;
        }
        std::set<std::vector<Element>> orbit_sets, brute_sets;
        for (const auto& s : orbit.solutions) orbit_sets.insert(s.members());
        for (const auto& s : brute.solutions) brute_sets.insert(s.members());
        if (!expect(orbit_sets == brute_sets && !orbit_sets.empty(),
                    spec + ": orbit-restricted and brute-force solution sets differ", note)) {
            return false;
        }
        for (const auto& s : orbit.solutions) {
            if (!expect(multiplier_closure_check(s).closed,
                        spec + ": a solution is not power-class closed", note)) {
                return false;
            }
            if (!expect(!mixed_orbit_violation(s).has_value(),
                        spec + ": a solution violates mixed-orbit closure", note)) {
                return false;
            }
            g_found_solutions.push_back(s);
        }
    }
    return true;
}

bool criterion_congruence_oracle(std::string& note) {
    for (std::int64_t p = 3; p < 1000; p += 2) {
        if (!is_prime(p)) continue;
        for (int k = 1; k <= 6; ++k) {
            unsigned __int128 sum = 0, term = 1;
            for (int j = 0; j < 2 * k; ++j) {
                sum += term;
                term *= static_cast<unsigned __int128>(p);
            }
            const bool oracle = sum % 4 == 0;
            const bool got = congruence_rule(p, 2 * k);
            if (!expect(got == oracle, "mismatch at p = " + std::to_string(p) +
                                           ", k = " + std::to_string(k), note)) {
                return false;
            }
            const bool odd_k_form = (k % 2 == 1) ? (p % 4 == 3) : true;
            if (!expect(got == odd_k_form, "odd-k characterization fails at p = " +
                                               std::to_string(p) + ", k = " + std::to_string(k),
                        note)) {
                return false;
            }
        }
    }
    return true;
}

bool criterion_srg_crosscheck(std::string& note) {
    const auto paley13 = cayley_srg_params(paley_pds(13));
    if (!expect(paley13.status == SrgCheck::Status::srg &&
                    *paley13.params == PdsParams{13, 6, 2, 3},
                "Paley(13) is not SRG(13, 6, 2, 3)", note)) {
        return false;
    }
    std::vector<CandidateSet> sets;
    for (const std::int64_t q : kPaleyOrders) sets.push_back(paley_pds(q));
    for (const auto& s : g_found_solutions) sets.push_back(s);
    for (const auto& d : sets) {
        if (d.group().order() > 250) continue;
        const auto rep = verify_pds(d);
        const auto srg = cayley_srg_params(d);
        if (!expect(rep.is_pds && srg.status == SrgCheck::Status::srg &&
                        rep.params == srg.params,
                    "verify_pds and cayley_srg_params disagree on a set in " + d.group().spec(),
                    note)) {
            return false;
        }
    }
    return true;
}

bool criterion_counting_suite(std::string& note) {
    std::mt19937 rng(0xC0FFEE);
    const std::vector<std::string> specs = {"Z5",   "Z9",   "Z3^2", "Z13",  "Z15",  "Z16",
                                            "Z17",  "Z25",  "Z5^2", "Z27",  "Z3^3", "Z29",
                                            "Z2^4", "Z33",  "Z37",  "Z41",  "Z45",  "Z49",
                                            "Z7^2"};
    std::vector<AbelianGroup> groups;
    for (const auto& s : specs) groups.push_back(AbelianGroup::parse(s));

    // Plantable regular PDSs so the accept branch is exercised.
    std::vector<CandidateSet> planted;
    for (const std::int64_t q : kPaleyOrders) planted.push_back(paley_pds(q));
    for (const auto& s : g_found_solutions) planted.push_back(s);
    planted.push_back(CandidateSet(AbelianGroup::parse("Z9"), {{3}, {6}}));
    planted.push_back(CandidateSet(AbelianGroup::parse("Z15"),
                                   {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));

    auto random_subset = [&](const AbelianGroup& g) {
        const std::int64_t v = g.order();
        const std::int64_t size = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(v));
        std::set<std::int64_t> picks;
        while (static_cast<std::int64_t>(picks.size()) < size) {
            picks.insert(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(v)));
        }
        std::vector<Element> members;
        for (const std::int64_t i : picks) members.push_back(g.element_at(i));
        return CandidateSet(g, members);
    };

    int accepted_regular = 0, rejected = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        CandidateSet d = [&]() {
            const unsigned pick = rng() % 100;
            if (pick < 60) {
                return random_subset(groups[rng() % groups.size()]);
            }
            const CandidateSet& base = planted[rng() % planted.size()];
            if (pick < 75) return base;
            if (pick < 85) {
                // Toggle the identity in.
                auto members = base.members();
                members.push_back(base.group().identity());
                return CandidateSet(base.group(), members);
            }
            // Perturb: swap one member for a random non-member.
            auto members = base.members();
            if (!members.empty()) {
                members.erase(members.begin() +
                              static_cast<std::ptrdiff_t>(rng() % members.size()));
                const AbelianGroup& g = base.group();
                for (int tries = 0; tries < 64; ++tries) {
                    Element cand = g.element_at(
                        static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(g.order())));
                    if (!base.contains(cand)) {
                        members.push_back(cand);
                        break;
                    }
                }
            }
            return CandidateSet(base.group(), members);
        }();

        const auto rep = verify_pds(d);
        if (rep.is_pds) {
            // Normalize the identity away before applying the regular-PDS
            // identities. Asymmetric lambda = mu sets (e.g. a group minus one
            // non-involution point) can stop verifying once the identity is
            // removed; those carry no regular core to check.
            CandidateSet core = d;
            if (d.contains(d.group().identity())) {
                std::vector<Element> members;
                for (const auto& m : d.members()) {
                    if (!d.group().is_identity(m)) members.push_back(m);
                }
                core = CandidateSet(d.group(), members);
                if (!verify_pds(core).is_pds) continue;
            }
            const auto core_rep = verify_pds(core);
            const PdsParams p = *core_rep.params;
            if (!expect(p.counting_identity_holds(),
                        "counting identity fails on an accepted set in " + d.group().spec(),
                        note)) {
                return false;
            }
            if (core_rep.is_regular) {
                ++accepted_regular;
                const AbelianGroup& g = core.group();
                const double root = std::sqrt(static_cast<double>(p.delta()));
                const double t_plus = (static_cast<double>(p.beta()) + root) / 2.0;
                const double t_minus = (static_cast<double>(p.beta()) - root) / 2.0;
                for (std::int64_t c = 1; c < g.order(); ++c) {
                    const Element chi = g.element_at(c);
                    std::complex<double> sum{0.0, 0.0};
                    for (const auto& m : core.members()) sum += g.character_value(chi, m);
                    const bool near = std::abs(sum.imag()) < 1e-6 &&
                                      (std::abs(sum.real() - t_plus) < 1e-6 ||
                                       std::abs(sum.real() - t_minus) < 1e-6);
                    if (!expect(near, "character sum off the spectrum for an accepted regular "
                                      "set in " + g.spec(), note)) {
                        return false;
                    }
                }
            }
        } else {
            ++rejected;
            if (!expect(rep.failing_element.has_value(), "rejection without a witness", note)) {
                return false;
            }
            // Independent recount at the witness.
            const AbelianGroup& g = d.group();
            const Element& w = *rep.failing_element;
            std::int64_t recount = 0;
            for (const auto& a : d.members()) {
                for (const auto& b : d.members()) {
                    if (a != b && g.subtract(a, b) == w) ++recount;
                }
            }
            if (!expect(recount == rep.failing_count && recount != rep.expected_count,
                        "witness recount does not confirm the rejection", note)) {
                return false;
            }
        }
    }
    if (!expect(accepted_regular >= 50, "too few accepted regular sets (" +
                                            std::to_string(accepted_regular) + ")", note)) {
        return false;
    }
    if (!expect(rejected >= 400, "too few rejected sets (" + std::to_string(rejected) + ")",
                note)) {
        return false;
    }
    return true;
}

bool criterion_atlas_determinism(std::string& note) {
    const std::string cmd = "\"" + cli_path() + "\" atlas --max 500 --json";
    const CliResult a = run_shell(cmd);
    const CliResult b = run_shell(cmd);
    if (!expect(a.exit_code == 0 && b.exit_code == 0, "atlas exited nonzero", note)) return false;
    if (!expect(!a.output.empty(), "atlas produced no output", note)) return false;
    return expect(a.output == b.output, "two atlas runs differ", note);
}

}  // namespace

int main() {
    Harness h;
    h.criterion(1, "Paley constructions verify through the CLI pipeline", 5.0,
                criterion_paley_cli);
    h.criterion(2, "sieve verdicts on the named instances and all small prime powers", 5.0,
                criterion_sieve);
    h.criterion(3, "subgroup restriction arithmetic on (225, 112, 55, 56)", 0.0,
                criterion_subgroup_restriction);
    h.criterion(4, "orbit-restricted search matches brute force with closed solutions", 60.0,
                criterion_orbit_soundness);
    h.criterion(5, "congruence rule equals big-integer evaluation for odd p < 1000, k <= 6", 5.0,
                criterion_congruence_oracle);
    h.criterion(6, "Cayley-graph SRG parameters agree with exact verification", 0.0,
                criterion_srg_crosscheck);
    h.criterion(7, "counting identity and character spectrum over 1000 random candidates", 0.0,
                criterion_counting_suite);
    h.criterion(8, "atlas --max 500 --json is byte-identical across runs", 0.0,
                criterion_atlas_determinism);

    if (h.failures() > 0) {
        std::cout << h.failures() << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
