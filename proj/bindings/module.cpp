#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdskit/feasibility.hpp"
#include "pdskit/gf.hpp"
#include "pdskit/json_io.hpp"
#include "pdskit/pds.hpp"
#include "pdskit/search.hpp"

namespace py = pybind11;
using namespace pdskit;

namespace {

py::tuple element_tuple(const Element& e) {
    py::tuple t(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) t[j] = e[j];
    return t;
}

py::list element_tuples(const std::vector<Element>& elems) {
    py::list out;
    for (const auto& e : elems) out.append(element_tuple(e));
    return out;
}

}  // namespace

PYBIND11_MODULE(_pdskit, m) {
    m.doc() = "partial difference sets in finite abelian groups";

    py::class_<AbelianGroup>(m, "AbelianGroup")
        .def(py::init([](const std::string& spec) { return AbelianGroup::parse(spec); }),
             py::arg("spec"))
        .def(py::init<const std::vector<std::int64_t>&>(), py::arg("cyclic_orders"))
        .def_property_readonly("factors", &AbelianGroup::factors)
        .def_property_readonly("order", &AbelianGroup::order)
        .def_property_readonly("spec", &AbelianGroup::spec)
        .def("identity", [](const AbelianGroup& g) { return element_tuple(g.identity()); })
        .def("add", [](const AbelianGroup& g, const Element& a, const Element& b) {
                 return element_tuple(g.add(a, b));
             })
        .def("negate", [](const AbelianGroup& g, const Element& a) {
                 return element_tuple(g.negate(a));
             })
        .def("scalar_mul", [](const AbelianGroup& g, std::int64_t s, const Element& a) {
                 return element_tuple(g.scalar_mul(s, a));
             })
        .def("element_order", &AbelianGroup::element_order)
        .def("power_class", [](const AbelianGroup& g, const Element& e) {
                 return element_tuples(g.power_class(e));
             })
        .def("power_class_partition", [](const AbelianGroup& g) {
                 py::list out;
                 for (const auto& cls : g.power_class_partition()) out.append(element_tuples(cls));
                 return out;
             })
        .def("hall_subgroup", &AbelianGroup::hall_subgroup, py::arg("primes"))
        .def("character_value", &AbelianGroup::character_value, py::arg("chi"), py::arg("g"))
        .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; })
        .def("__repr__", [](const AbelianGroup& g) { return "AbelianGroup('" + g.spec() + "')"; });

    py::class_<HallSubgroup>(m, "HallSubgroup")
        .def_property_readonly("order", &HallSubgroup::order)
        .def_property_readonly("index", &HallSubgroup::index)
        .def_property_readonly("odd_index", &HallSubgroup::odd_index)
        .def_property_readonly("primes", &HallSubgroup::primes)
        .def("contains", &HallSubgroup::contains)
        .def("elements", [](const HallSubgroup& h) { return element_tuples(h.elements()); });

    py::class_<PdsParams>(m, "PdsParams")
        .def(py::init([](std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
                 return PdsParams{v, k, lambda, mu};
             }),
             py::arg("v"), py::arg("k"), py::arg("lambda"), py::arg("mu"))
        .def_readonly("v", &PdsParams::v)
        .def_readonly("k", &PdsParams::k)
        .def_readonly("lambda_", &PdsParams::lambda)
        .def_readonly("mu", &PdsParams::mu)
        .def_property_readonly("beta", &PdsParams::beta)
        .def_property_readonly("delta", &PdsParams::delta)
        .def("counting_identity_holds", &PdsParams::counting_identity_holds)
        .def("__eq__", [](const PdsParams& a, const PdsParams& b) { return a == b; })
        .def("__repr__", [](const PdsParams& p) {
            return "PdsParams(" + std::to_string(p.v) + ", " + std::to_string(p.k) + ", " +
                   std::to_string(p.lambda) + ", " + std::to_string(p.mu) + ")";
        });

    py::class_<CandidateSet>(m, "CandidateSet")
        .def(py::init<AbelianGroup, std::vector<Element>>(), py::arg("group"), py::arg("members"))
        .def_property_readonly("group", &CandidateSet::group)
        .def_property_readonly("members",
                               [](const CandidateSet& s) { return element_tuples(s.members()); })
        .def("contains", &CandidateSet::contains)
        .def("__len__", [](const CandidateSet& s) { return s.size(); })
        .def("to_json", [](const CandidateSet& s) { return to_json(s).dump(); })
        .def_static("from_json",
                    [](const std::string& text) { return candidate_set_from_text(text); });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("is_pds", &VerificationReport::is_pds)
        .def_readonly("params", &VerificationReport::params)
        .def_readonly("is_regular", &VerificationReport::is_regular)
        .def_readonly("is_trivial", &VerificationReport::is_trivial)
        .def_readonly("degenerate", &VerificationReport::degenerate)
        .def_property_readonly("failing_element",
                               [](const VerificationReport& r) -> py::object {
                                   if (!r.failing_element) return py::none();
                                   return element_tuple(*r.failing_element);
                               })
        .def_readonly("failing_count", &VerificationReport::failing_count)
        .def_readonly("expected_count", &VerificationReport::expected_count)
        .def("to_json", [](const VerificationReport& r) { return to_json(r).dump(); });

    py::enum_<SrgCheck::Status>(m, "SrgStatus")
        .value("SRG", SrgCheck::Status::srg)
        .value("NOT_SRG", SrgCheck::Status::not_srg)
        .value("DEGENERATE", SrgCheck::Status::degenerate);

    py::class_<SrgCheck>(m, "SrgCheck")
        .def_readonly("status", &SrgCheck::status)
        .def_readonly("params", &SrgCheck::params)
        .def_property_readonly("witness", [](const SrgCheck& c) -> py::object {
            if (!c.witness) return py::none();
            return py::make_tuple(element_tuple(c.witness->first),
                                  element_tuple(c.witness->second));
        });

    py::enum_<RuleStatus>(m, "RuleStatus")
        .value("PASS", RuleStatus::pass)
        .value("INFEASIBLE", RuleStatus::infeasible)
        .value("NOT_APPLICABLE", RuleStatus::not_applicable);

    py::class_<RuleOutcome>(m, "RuleOutcome")
        .def_readonly("status", &RuleOutcome::status)
        .def_readonly("rule", &RuleOutcome::rule)
        .def_readonly("detail", &RuleOutcome::detail)
        .def("passed", &RuleOutcome::passed);

    py::class_<K1Root>(m, "K1Root")
        .def_readonly("approx", &K1Root::approx)
        .def_readonly("integral", &K1Root::integral)
        .def_readonly("in_range", &K1Root::in_range)
        .def_readonly("value", &K1Root::value);

    py::class_<SubgroupRestriction>(m, "SubgroupRestriction")
        .def_readonly("v1", &SubgroupRestriction::v1)
        .def_readonly("pi", &SubgroupRestriction::pi)
        .def_readonly("theta", &SubgroupRestriction::theta)
        .def_readonly("beta1", &SubgroupRestriction::beta1)
        .def_readonly("delta1", &SubgroupRestriction::delta1)
        .def_readonly("k1_plus", &SubgroupRestriction::k1_plus)
        .def_readonly("k1_minus", &SubgroupRestriction::k1_minus)
        .def_readonly("locally_feasible", &SubgroupRestriction::locally_feasible)
        .def("sub_params", &SubgroupRestriction::sub_params);

    py::enum_<VerdictKind>(m, "VerdictKind")
        .value("KNOWN_EXISTS", VerdictKind::known_exists)
        .value("INFEASIBLE", VerdictKind::infeasible)
        .value("OPEN", VerdictKind::open)
        .value("NOT_APPLICABLE", VerdictKind::not_applicable);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("v", &Verdict::v)
        .def_readonly("kind", &Verdict::kind)
        .def_readonly("rule", &Verdict::rule)
        .def_readonly("detail", &Verdict::detail)
        .def("to_json", [](const Verdict& v) { return to_json(v).dump(); })
        .def("__repr__", [](const Verdict& v) {
            return "Verdict(v=" + std::to_string(v.v) + ", " + to_string(v.kind) +
                   (v.rule.empty() ? "" : ", " + v.rule) + ")";
        });

    py::enum_<SearchMode>(m, "SearchMode")
        .value("ORBIT", SearchMode::orbit)
        .value("BRUTE", SearchMode::brute);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("solutions", &SearchResult::solutions)
        .def_readonly("nodes_explored", &SearchResult::nodes_explored)
        .def_readonly("complete", &SearchResult::complete);

    py::class_<ClosureCheck>(m, "ClosureCheck")
        .def_readonly("closed", &ClosureCheck::closed)
        .def_property_readonly("witness_g", [](const ClosureCheck& c) -> py::object {
            if (!c.witness_g) return py::none();
            return element_tuple(*c.witness_g);
        })
        .def_readonly("witness_s", &ClosureCheck::witness_s);

    m.def("parse_group", &AbelianGroup::parse, py::arg("spec"));
    m.def("paley_params", &paley_params, py::arg("v"));
    m.def("complement_params", &complement_params, py::arg("params"));
    m.def("difference_counts", [](const CandidateSet& d) {
        const auto counts = difference_counts(d);
        py::dict out;
        for (std::int64_t i = 1; i < d.group().order(); ++i) {
            out[element_tuple(d.group().element_at(i))] = counts[static_cast<std::size_t>(i)];
        }
        return out;
    });
    m.def("verify_pds", &verify_pds, py::arg("candidate"));
    m.def("cayley_srg_params", &cayley_srg_params, py::arg("candidate"));
    m.def("find_irreducible", &find_irreducible, py::arg("p"), py::arg("degree"));
    m.def("paley_pds", &paley_pds, py::arg("q"));
    m.def("congruence_rule", &congruence_rule, py::arg("p"), py::arg("e"));
    m.def("rule_delta_square", [](const PdsParams& p) { return rule_delta_square(p); });
    m.def("rule_beta_minus_one", [](const PdsParams& p) { return rule_beta_minus_one(p); });
    m.def("rule_main_theorem",
          [](std::int64_t v) { return rule_main_theorem(OrderFactorization::of(v)); },
          py::arg("v"));
    m.def("subgroup_restriction", &subgroup_restriction, py::arg("params"), py::arg("n_order"));
    m.def("sieve", &sieve, py::arg("v"));
    m.def("sieve_range", &sieve_range, py::arg("max_v"));
    m.def(
        "search",
        [](const AbelianGroup& g, const PdsParams& target, SearchMode mode, std::int64_t limit,
           bool character_pruning) {
            SearchProblem pb{g, target, mode, limit, character_pruning};
            return search(pb);
        },
        py::arg("group"), py::arg("target"), py::arg("mode") = SearchMode::orbit,
        py::arg("limit") = 0, py::arg("character_pruning") = true);
    m.def("mixed_orbit",
          [](const AbelianGroup& g, const HallSubgroup& n_sub, const Element& n, const Element& h) {
              return element_tuples(mixed_orbit(g, n_sub, n, h));
          },
          py::arg("group"), py::arg("hall"), py::arg("n"), py::arg("h"));
    m.def("multiplier_closure_check", &multiplier_closure_check, py::arg("candidate"));

#ifdef PDSKIT_VERSION
    m.attr("__version__") = PDSKIT_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
