#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmagg/aggregators.hpp"
#include "mmagg/distances.hpp"
#include "mmagg/error.hpp"
#include "mmagg/exact.hpp"
#include "mmagg/io.hpp"
#include "mmagg/mallows.hpp"
#include "mmagg/runner.hpp"

namespace py = pybind11;
using namespace mmagg;

namespace {

DistanceKind parse_distance(const std::string& name) {
    if (name == "kendall-tau" || name == "kt") return DistanceKind::KendallTau;
    if (name == "spearman-footrule" || name == "sf") return DistanceKind::SpearmanFootrule;
    if (name == "kemeny") return DistanceKind::Kemeny;
    if (name == "partial-footrule") return DistanceKind::PartialFootrule;
    throw Error(ErrorCode::KindMismatch, "unknown distance '" + name + "'");
}

SetDistanceKind parse_setdist(const std::string& name) {
    if (name == "med" || name == "median") return SetDistanceKind::Median;
    if (name == "min" || name == "minimum") return SetDistanceKind::Minimum;
    throw Error(ErrorCode::KindMismatch, "unknown set distance '" + name + "'");
}

std::vector<std::vector<int>> order_buckets(const PartialRanking& r) { return r.buckets(); }

py::dict result_to_dict(const AggregationResult& r) {
    py::dict d;
    d["ranking"] = order_buckets(r.ranking);
    d["objective"] = r.objective;
    d["class_costs"] = r.class_costs;
    d["certificate"] = r.certificate ? py::cast(*r.certificate) : py::none();
    return d;
}

// Instance from nested lists: classes -> members -> buckets (or flat orders).
Instance instance_from_lists(const std::vector<std::vector<std::vector<std::vector<int>>>>& classes,
                             const std::vector<double>& weights) {
    if (weights.size() != classes.size()) throw Error(ErrorCode::InvalidInstance, "one weight per class is required");
    Instance inst;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        RankingClass cls;
        cls.weight = weights[k];
        for (const auto& buckets : classes[k]) cls.members.push_back(PartialRanking::from_buckets(buckets));
        inst.classes.push_back(std::move(cls));
    }
    inst.n = inst.classes.empty() || inst.classes.front().members.empty() ? 0 : inst.classes.front().members.front().size();
    inst.validate();
    return inst;
}

}  // namespace

PYBIND11_MODULE(_mmagg, m) {
    m.doc() = "Multiclass MinMax rank aggregation";

    static py::exception<Error> error(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            error(e.what());
        }
    });

    py::class_<Permutation>(m, "Permutation")
        .def(py::init(&Permutation::from_ranks), py::arg("ranks"))
        .def_static("from_order", [](const std::vector<int>& order) { return Permutation::from_order(order); })
        .def_static("identity", &Permutation::identity)
        .def_property_readonly("ranks", [](const Permutation& p) {
            return std::vector<int>(p.ranks().begin(), p.ranks().end());
        })
        .def("order", &Permutation::order)
        .def("inverse", &Permutation::inverse)
        .def("__len__", &Permutation::size)
        .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
        .def("__repr__", [](const Permutation& p) {
            std::string s = "Permutation([";
            for (int i = 0; i < p.size(); ++i) s += (i ? ", " : "") + std::to_string(p.ranks()[i]);
            return s + "])";
        });

    py::class_<PartialRanking>(m, "PartialRanking")
        .def(py::init(&PartialRanking::from_buckets), py::arg("buckets"))
        .def_static("from_permutation", &PartialRanking::from_permutation)
        .def_property_readonly("buckets", &order_buckets)
        .def("position", [](const PartialRanking& r, int x) { return r.position(x).value(); })
        .def("is_total", &PartialRanking::is_total)
        .def("__len__", &PartialRanking::size);

    py::class_<Instance>(m, "Instance")
        .def(py::init(&instance_from_lists), py::arg("classes"), py::arg("weights"),
             "classes[k][i] is a list of tie buckets, top first")
        .def_readonly("n", &Instance::n)
        .def_property_readonly("num_classes", &Instance::num_classes)
        .def_property_readonly("classes",
                               [](const Instance& inst) {
                                   py::list out;
                                   for (const auto& cls : inst.classes) {
                                       py::list members;
                                       for (const auto& m : cls.members) members.append(py::cast(m.buckets()));
                                       out.append(py::make_tuple(cls.weight, members));
                                   }
                                   return out;
                               },
                               "[(weight, [buckets, ...]), ...]")
        .def("max_weight", &Instance::max_weight)
        .def("max_weight_classes", &Instance::max_weight_classes);

    m.def("kendall_tau", &kendall_tau);
    m.def("spearman_footrule", &spearman_footrule);
    m.def("kemeny", [](const PartialRanking& a, const PartialRanking& b) { return kemeny(a, b).value(); });
    m.def("partial_footrule",
          [](const PartialRanking& a, const PartialRanking& b) { return partial_footrule(a, b).value(); });

    m.def(
        "minmax_objective",
        [](const Permutation& p, const Instance& inst, const std::string& d, const std::string& s) {
            return minmax_objective(p, inst, parse_distance(d), parse_setdist(s));
        },
        py::arg("ranking"), py::arg("instance"), py::arg("distance") = "kt", py::arg("setdist") = "med");

    m.def(
        "aggregate",
        [](const Instance& inst, const std::string& algo, const std::string& family, const std::string& s,
           std::uint64_t seed, bool deterministic_ties) {
            const auto a = parse_algorithm(algo);
            if (!a) throw Error(ErrorCode::KindMismatch, "unknown algorithm '" + algo + "'");
            return result_to_dict(
                run_algorithm(*a, inst, distance_for(inst, family), parse_setdist(s), {seed, deterministic_ties}));
        },
        py::arg("instance"), py::arg("algo") = "mmkt", py::arg("distance") = "kt", py::arg("setdist") = "med",
        py::arg("seed") = 0, py::arg("deterministic_ties") = false);

    m.def(
        "relaxation_value",
        [](const Instance& inst, const std::string& family) {
            return relaxation_value(inst, distance_for(inst, family));
        },
        py::arg("instance"), py::arg("distance") = "kt");

    m.def(
        "brute_force",
        [](const Instance& inst, const std::string& family, const std::string& s, int limit) {
            const auto opt = brute_force(inst, distance_for(inst, family), parse_setdist(s), limit);
            return py::make_tuple(opt.ranking, opt.value);
        },
        py::arg("instance"), py::arg("distance") = "kt", py::arg("setdist") = "med",
        py::arg("n_limit") = kDefaultExactLimit);

    m.def(
        "sample_mallows",
        [](double phi, const Permutation& reference, std::uint64_t seed) {
            return sample_mallows({phi, reference}, seed);
        },
        py::arg("phi"), py::arg("reference"), py::arg("seed") = 0);

    m.def(
        "sample_instance",
        [](int n, std::vector<int> per_class, double phi1, double phi2, std::uint64_t seed) {
            TwoLevelConfig cfg;
            cfg.n = n;
            cfg.per_class = std::move(per_class);
            cfg.phi1 = phi1;
            cfg.phi2 = phi2;
            return sample_instance(cfg, seed);
        },
        py::arg("n"), py::arg("per_class"), py::arg("phi1"), py::arg("phi2"), py::arg("seed") = 0);

    m.def(
        "parse_instance",
        [](const std::string& text) {
            auto parsed = parse_instance_string(text);
            return py::make_tuple(parsed.instance, parsed.element_names, parsed.class_labels);
        },
        py::arg("text"));
}
