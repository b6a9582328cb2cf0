#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hilden/catalog.hpp"
#include "hilden/errors.hpp"
#include "hilden/motion.hpp"
#include "hilden/plat.hpp"
#include "hilden/projections.hpp"
#include "hilden/surface.hpp"

namespace py = pybind11;
using namespace hilden;

namespace {

py::int_ to_py(const BigInt& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list perm_list(const PuncturePermutation& p) {
    py::list out;
    for (int k = 1; k <= p.size(); ++k) out.append(p.map1(k));
    return out;
}

py::dict group_dict(const AbelianGroup& g) {
    py::dict d;
    d["free_rank"] = g.free_rank;
    py::list torsion;
    for (const BigInt& t : g.torsion) torsion.append(to_py(t));
    d["torsion"] = torsion;
    d["text"] = g.to_text();
    return d;
}

py::dict presentation_dict(const GroupPresentation& p) {
    py::dict d;
    py::list gens;
    for (int s = 0; s < p.generator_count(); ++s) gens.append(p.generators->name(s));
    d["generators"] = gens;
    py::list rels;
    for (const FreeWord& r : p.relators) rels.append(to_string(r));
    d["relators"] = rels;
    return d;
}

py::dict element_dict(const MappingClassElement& m) {
    py::dict d;
    d["genus"] = m.config->genus();
    d["arcs"] = m.config->arcs();
    py::dict images;
    const AlphabetPtr& alph = m.config->alphabet();
    for (int s = 0; s < alph->size(); ++s)
        images[py::str(alph->name(s))] = to_string(m.action.forward().image(s));
    d["images"] = images;
    d["permutation"] = perm_list(m.perm);
    d["provenance"] = to_string(m.provenance);
    return d;
}

MappingClassElement eval_at(int genus, int arcs, const std::string& word) {
    return evaluate(make_config(genus, arcs), parse_generator_word(word));
}

} // namespace

PYBIND11_MODULE(_hilden, m) {
    m.doc() = "Mapping classes fixing a trivial arc system in a handlebody: "
              "generator catalogs, motion-group images, plat-closure homology.";

    py::register_exception<error>(m, "HildenError");

    m.def(
        "evaluate",
        [](int genus, int arcs, const std::string& word) {
            return element_dict(eval_at(genus, arcs, word));
        },
        py::arg("genus"), py::arg("arcs"), py::arg("word"),
        "Evaluate a generator word; returns images, the puncture permutation "
        "(one-based) and the echoed provenance.");

    m.def(
        "validate",
        [](int genus, int arcs, const std::string& word) {
            ValidationReport rep = validate(eval_at(genus, arcs, word));
            py::dict d;
            d["pass"] = rep.pass;
            d["clause"] = rep.clause ? std::string(1, rep.clause) : std::string();
            d["puncture"] = rep.puncture;
            d["witness"] = rep.witness;
            d["message"] = rep.message;
            return d;
        },
        py::arg("genus"), py::arg("arcs"), py::arg("word"));

    m.def(
        "relation_suite",
        [](int genus, int arcs) {
            RelationReport rep = relation_suite(make_config(genus, arcs));
            py::dict d;
            py::list instances;
            for (const RelationInstance& inst : rep.instances) {
                py::dict e;
                e["relation"] = inst.relation;
                e["detail"] = inst.detail;
                e["pass"] = inst.pass;
                instances.append(e);
            }
            d["instances"] = instances;
            d["total"] = static_cast<int>(rep.instances.size());
            d["failures"] = rep.failures();
            d["all_pass"] = rep.all_pass;
            return d;
        },
        py::arg("genus"), py::arg("arcs"));

    m.def(
        "h1_matrix",
        [](int genus, int arcs, const std::string& word) {
            return h1_matrix(eval_at(genus, arcs, word));
        },
        py::arg("genus"), py::arg("arcs"), py::arg("word"),
        "Action on the closed-surface homology basis (2g x 2g).");

    m.def(
        "puncture_perm",
        [](int genus, int arcs, const std::string& word) {
            return perm_list(puncture_perm(eval_at(genus, arcs, word)));
        },
        py::arg("genus"), py::arg("arcs"), py::arg("word"));

    m.def(
        "signed_decompose",
        [](int genus, int arcs, const std::string& word) -> py::object {
            MappingClassElement el = eval_at(genus, arcs, word);
            auto sd = signed_decompose(puncture_perm(el), arcs);
            if (!sd) return py::none();
            py::list perm;
            for (int x : sd->perm) perm.append(x + 1);
            py::list signs;
            for (int s : sd->signs) signs.append(s);
            return py::make_tuple(perm, signs);
        },
        py::arg("genus"), py::arg("arcs"), py::arg("word"),
        "Arc permutation and endpoint flips, or None when a pair is split.");

    m.def(
        "is_pure",
        [](int genus, int arcs, const std::string& word) {
            return is_pure(eval_at(genus, arcs, word));
        },
        py::arg("genus"), py::arg("arcs"), py::arg("word"));

    m.def(
        "kernel_omega_necessary",
        [](int genus, int arcs, const std::string& word) {
            return kernel_omega_necessary(eval_at(genus, arcs, word));
        },
        py::arg("genus"), py::arg("arcs"), py::arg("word"));

    m.def(
        "motion_image",
        [](const std::string& word, int components) {
            MotionAutomorphism a = hilden_map(parse_generator_word(word), components);
            py::dict d;
            py::dict table;
            const AlphabetPtr& alph = a.aut.alphabet();
            for (int s = 0; s < alph->size(); ++s)
                table[py::str(alph->name(s))] = to_string(a.aut.forward().image(s));
            d["table"] = table;
            d["is_identity"] = motion_is_identity(a);
            return d;
        },
        py::arg("word"), py::arg("components"),
        "Image of a word in the interval / exchange / slide-through families "
        "as an automorphism of the free group on the circle generators.");

    m.def(
        "motion_order",
        [](const std::string& word, int components, int max_k) -> py::object {
            auto order =
                order_probe(hilden_map(parse_generator_word(word), components), max_k);
            if (!order) return py::none();
            return py::int_(*order);
        },
        py::arg("word"), py::arg("components"), py::arg("max_k") = 50);

    m.def(
        "plat_presentation",
        [](int genus, int arcs, const std::string& psi, const std::string& sigma,
           bool simplify) {
            GroupPresentation p =
                plat_presentation(plat_config(genus, arcs), parse_generator_word(psi),
                                  parse_generator_word(sigma));
            if (simplify) p = tietze_simplify(p);
            return presentation_dict(p);
        },
        py::arg("genus"), py::arg("arcs"), py::arg("psi") = "", py::arg("sigma") = "",
        py::arg("simplify") = false);

    m.def(
        "plat_homology",
        [](int genus, int arcs, const std::string& psi, const std::string& sigma) {
            return group_dict(plat_homology(plat_config(genus, arcs),
                                            parse_generator_word(psi),
                                            parse_generator_word(sigma)));
        },
        py::arg("genus"), py::arg("arcs"), py::arg("psi") = "", py::arg("sigma") = "");

    m.def(
        "coset_check",
        [](int genus, int arcs, const std::string& psi, const std::string& sigma,
           const std::string& epsilon) {
            CosetReport r = coset_equivalence_check(
                plat_config(genus, arcs), parse_generator_word(psi),
                parse_generator_word(sigma), parse_generator_word(epsilon));
            py::dict d;
            d["h1_sigma"] = group_dict(r.h1_sigma);
            d["h1_sigma_epsilon"] = group_dict(r.h1_sigma_epsilon);
            d["h1_equal"] = r.h1_equal;
            return d;
        },
        py::arg("genus"), py::arg("arcs"), py::arg("psi") = "", py::arg("sigma") = "",
        py::arg("epsilon") = "");

    m.def(
        "psi_s3",
        [](int genus) { return to_string(psi_s3(genus)); }, py::arg("genus"),
        "Handle-twist word whose plat closure is the 3-sphere.");

    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<long long>>& rows) {
            int r = static_cast<int>(rows.size());
            int c = r ? static_cast<int>(rows.front().size()) : 0;
            IntegerMatrix m = IntegerMatrix::zero(r, c);
            for (int i = 0; i < r; ++i) {
                if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                    throw config_error("rows must have equal length");
                for (int j = 0; j < c; ++j)
                    m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
            py::list out;
            for (const BigInt& d : smith_normal_form(m).invariant_factors)
                out.append(to_py(d));
            return out;
        },
        py::arg("rows"), "Full diagonal of the Smith normal form.");

    m.def("hilden_generator_tokens", [](int genus, int arcs) {
        py::list out;
        for (const GeneratorName& name : hilden_generator_names(make_config(genus, arcs)))
            out.append(to_token(name));
        return out;
    });

    m.def("psi_generator_tokens", [](int genus, int arcs) {
        py::list out;
        for (const GeneratorName& name : psi_generator_names(make_config(genus, arcs)))
            out.append(to_token(name));
        return out;
    });
}
