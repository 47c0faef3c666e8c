#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "starsem/enumeration.hpp"
#include "starsem/generation.hpp"
#include "starsem/greens.hpp"
#include "starsem/membership.hpp"
#include "starsem/ptransform.hpp"
#include "starsem/version.hpp"

namespace py = pybind11;
using namespace starsem;

namespace {

py::object big_int(const mpz_class& z) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

std::vector<int> mask_to_list(std::uint32_t mask) {
  std::vector<int> out;
  for (std::uint32_t m = mask; m; m &= m - 1) out.push_back(__builtin_ctz(m));
  return out;
}

std::uint32_t list_to_mask(const std::vector<int>& points, int n) {
  std::uint32_t mask = 0;
  for (int x : points) {
    if (x < 0 || x >= n)
      throw std::invalid_argument("vertex " + std::to_string(x) +
                                  " is outside {0,...," + std::to_string(n - 1) +
                                  "}");
    mask |= 1u << x;
  }
  return mask;
}

py::dict closure_dict(const ClosureResult& cl) {
  py::dict d;
  d["elements"] = cl.elements;
  d["products_evaluated"] = cl.products_evaluated;
  d["depth"] = cl.depth;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "partial endomorphism monoids of star graphs";
  m.attr("__version__") = kVersion;

  py::enum_<Family>(m, "Family")
      .value("PwEnd", Family::PwEnd)
      .value("PEnd", Family::PEnd)
      .value("PsEnd", Family::PsEnd)
      .value("PswEnd", Family::PswEnd)
      .value("IEnd", Family::IEnd)
      .value("PAut", Family::PAut)
      .value("PT", Family::PT)
      .value("I", Family::Isym)
      .value("TwoPT", Family::TwoPT);

  py::enum_<GreensRelation>(m, "GreensRelation")
      .value("R", GreensRelation::R)
      .value("L", GreensRelation::L)
      .value("H", GreensRelation::H)
      .value("J", GreensRelation::J);

  py::class_<PartialTransformation>(m, "PartialTransformation")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& pairs) {
             return PartialTransformation::make(n, pairs);
           }),
           py::arg("n"), py::arg("pairs") = std::vector<std::pair<int, int>>{})
      .def_static("parse", &PartialTransformation::parse, py::arg("text"))
      .def_static("empty", &PartialTransformation::empty, py::arg("n"))
      .def_static("identity", &PartialTransformation::identity, py::arg("n"))
      .def_static(
          "partial_identity",
          [](int n, const std::vector<int>& points) {
            return PartialTransformation::partial_identity(
                n, list_to_mask(points, n));
          },
          py::arg("n"), py::arg("points"))
      .def_property_readonly("n", &PartialTransformation::n)
      .def_property_readonly(
          "dom",
          [](const PartialTransformation& a) { return mask_to_list(a.dom_mask()); })
      .def_property_readonly(
          "image",
          [](const PartialTransformation& a) { return mask_to_list(a.image_mask()); })
      .def_property_readonly("rank", &PartialTransformation::rank)
      .def("defined", &PartialTransformation::defined, py::arg("x"))
      .def(
          "__call__",
          [](const PartialTransformation& a, int x) {
            if (x < 0 || x >= a.n() || !a.defined(x))
              throw py::index_error("point " + std::to_string(x) +
                                    " is not in the domain");
            return a.value(x);
          },
          py::arg("x"))
      .def("is_injective", &PartialTransformation::is_injective)
      .def("inverse", &PartialTransformation::inverse)
      .def("zeta_lift", &PartialTransformation::zeta_lift)
      .def("kernel",
           [](const PartialTransformation& a) { return kernel(a).block_lists(); })
      .def("__mul__",
           [](const PartialTransformation& a, const PartialTransformation& b) {
             return compose(a, b);
           })
      .def("__eq__",
           [](const PartialTransformation& a, const PartialTransformation& b) {
             return a == b;
           })
      .def("__hash__",
           [](const PartialTransformation& a) {
             return std::hash<PartialTransformation>{}(a);
           })
      .def("__str__", &PartialTransformation::to_string)
      .def("__repr__", [](const PartialTransformation& a) {
        return "PartialTransformation('" + a.to_string() + "')";
      });

  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("is_member", &is_member, py::arg("family"), py::arg("a"));
  m.def("is_member_definitional", &is_member_definitional, py::arg("family"),
        py::arg("a"));
  m.def("classify", &classify, py::arg("a"));
  m.def("family_name", &family_name, py::arg("family"));

  m.def(
      "cardinality",
      [](Family f, int n) { return big_int(cardinality(f, n)); },
      py::arg("family"), py::arg("n"));
  m.def(
      "enumerate_family",
      [](Family f, int n) { return enumerate_family(f, n); },
      py::arg("family"), py::arg("n"));
  m.def(
      "census",
      [](Family f, int n) {
        FamilyCensus c = census(f, n);
        py::dict d;
        d["family"] = c.family;
        d["n"] = c.n;
        d["formula_count"] = big_int(c.formula_count);
        d["enumerated_count"] = big_int(c.enumerated_count);
        d["match"] = c.match;
        return d;
      },
      py::arg("family"), py::arg("n"));
  m.def(
      "decompose_paut",
      [](int n) {
        auto d = decompose_paut(n);
        py::dict out;
        out["outer_perms"] = d.outer_perms;
        out["lifted_perms"] = d.lifted_perms;
        out["centre_swaps"] = d.centre_swaps;
        out["centre_rank_one"] = d.centre_rank_one;
        return out;
      },
      py::arg("n"));
  m.def(
      "decompose_iend",
      [](int n) {
        auto d = decompose_iend(n);
        py::dict out;
        out["paut_part"] = d.paut_part;
        out["r0_part"] = d.r0_part;
        return out;
      },
      py::arg("n"));
  m.def(
      "units", [](Family f, int n) { return units(f, n); }, py::arg("family"),
      py::arg("n"));

  m.def("related", &related, py::arg("relation"), py::arg("family"),
        py::arg("a"), py::arg("b"));
  m.def("is_regular", &is_regular, py::arg("family"), py::arg("a"));
  m.def(
      "is_regular_oracle",
      [](Family f, const PartialTransformation& a) {
        return is_regular_oracle(f, a);
      },
      py::arg("family"), py::arg("a"));

  py::class_<GreensOracle>(m, "GreensOracle")
      .def(py::init([](Family f, int n) { return GreensOracle(f, n); }),
           py::arg("family"), py::arg("n"))
      .def_property_readonly("size", &GreensOracle::size)
      .def("elements", &GreensOracle::elements)
      .def(
          "related",
          [](const GreensOracle& o, GreensRelation rel,
             const PartialTransformation& a, const PartialTransformation& b) {
            return o.related(rel, a, b);
          },
          py::arg("relation"), py::arg("a"), py::arg("b"))
      .def("regular_witness", &GreensOracle::regular_witness, py::arg("a"))
      .def("regular_witness_in_paut", &GreensOracle::regular_witness_in_paut,
           py::arg("a"));

  m.def(
      "egg_box",
      [](Family f, int n) {
        EggBoxReport report = egg_box(f, n);
        py::list classes;
        for (const auto& cls : report.classes) {
          py::dict d;
          d["representative"] = cls.representative;
          d["size"] = cls.size;
          d["r_classes"] = cls.r_classes;
          d["l_classes"] = cls.l_classes;
          d["h_size"] = cls.h_size;
          d["rectangular"] = cls.rectangular;
          d["regular"] = cls.regular;
          d["rank"] = cls.rank;
          d["zero_in_dom"] = cls.zero_in_dom;
          d["zero_in_image"] = cls.zero_in_image;
          classes.append(std::move(d));
        }
        py::dict out;
        out["family"] = report.family;
        out["n"] = report.n;
        out["total"] = report.total_size;
        out["classes"] = std::move(classes);
        return out;
      },
      py::arg("family"), py::arg("n"));

  py::class_<GeneratorCatalog>(m, "GeneratorCatalog")
      .def_static("for_n", &GeneratorCatalog::for_n, py::arg("n"))
      .def_readonly("n", &GeneratorCatalog::n)
      .def_readonly("a", &GeneratorCatalog::a)
      .def_readonly("b", &GeneratorCatalog::b)
      .def_readonly("e", &GeneratorCatalog::e)
      .def_readonly("f", &GeneratorCatalog::f)
      .def_readonly("a0", &GeneratorCatalog::a0)
      .def_readonly("b0", &GeneratorCatalog::b0)
      .def_readonly("e0", &GeneratorCatalog::e0)
      .def_readonly("f0", &GeneratorCatalog::f0)
      .def_readonly("c", &GeneratorCatalog::c)
      .def_readonly("c0", &GeneratorCatalog::c0)
      .def_readonly("d", &GeneratorCatalog::d)
      .def_readonly("z", &GeneratorCatalog::z)
      .def_readonly("z0", &GeneratorCatalog::z0)
      .def_readonly("e1", &GeneratorCatalog::e1)
      .def_readonly("z1", &GeneratorCatalog::z1);

  m.def(
      "closure",
      [](int n, const std::vector<PartialTransformation>& gens) {
        return closure_dict(closure(n, gens));
      },
      py::arg("n"), py::arg("generators"));
  m.def("named_generating_set", &named_generating_set, py::arg("family"),
        py::arg("n"));
  m.def(
      "verify_generators",
      [](Family f, int n) {
        GeneratorCheck check = verify_generators(f, n);
        py::dict d;
        d["family"] = check.family;
        d["n"] = check.n;
        d["generators"] = check.generators;
        d["closure_size"] = check.closure_size;
        d["expected_size"] = big_int(check.expected_size);
        d["generators_member"] = check.generators_member;
        d["closure_within_family"] = check.closure_within_family;
        d["size_matches"] = check.size_matches;
        d["ok"] = check.ok();
        return d;
      },
      py::arg("family"), py::arg("n"));
  m.def(
      "rank_search",
      [](Family f, int n, int k, int jobs) {
        RankSearchResult r = rank_search(f, n, k, Caps{}, jobs);
        py::dict d;
        d["family"] = r.family;
        d["n"] = r.n;
        d["k"] = r.k;
        d["family_size"] = r.family_size;
        d["subsets_examined"] = r.subsets_examined;
        d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
        return d;
      },
      py::arg("family"), py::arg("n"), py::arg("k"), py::arg("jobs") = 1);
  m.def(
      "certify_rank",
      [](Family f, int n, int jobs) {
        RankCertificate cert = certify_rank(f, n, Caps{}, jobs);
        py::list levels;
        for (const auto& level : cert.levels) {
          py::dict ld;
          ld["k"] = level.k;
          ld["subsets_examined"] = level.subsets_examined;
          ld["witness_found"] = level.witness.has_value();
          levels.append(std::move(ld));
        }
        py::dict d;
        d["family"] = cert.family;
        d["n"] = cert.n;
        d["rank"] = cert.rank;
        d["subsets_examined"] = cert.subsets_examined;
        d["levels"] = std::move(levels);
        d["witness"] = cert.witness ? py::cast(*cert.witness) : py::none();
        d["runtime_ms"] = cert.runtime_ms;
        return d;
      },
      py::arg("family"), py::arg("n"), py::arg("jobs") = 1);
  m.def(
      "factorization_violations",
      [](Family ambient, int n,
         const std::vector<PartialTransformation>& targets, Family submonoid) {
        auto violations =
            factorization_violations(ambient, n, targets, submonoid);
        py::list out;
        for (const auto& v : violations)
          out.append(py::make_tuple(v.left, v.right, v.product));
        return out;
      },
      py::arg("ambient"), py::arg("n"), py::arg("targets"),
      py::arg("submonoid"));
}
