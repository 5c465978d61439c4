#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qnb/error.hpp"
#include "qnb/json_io.hpp"
#include "qnb/nbhd.hpp"
#include "qnb/qnbhd.hpp"
#include "qnb/qsim.hpp"
#include "qnb/verify.hpp"
#include "qnb/zoo.hpp"

namespace py = pybind11;
using namespace qnb;

namespace {

std::vector<Site> members(const SiteSet& s) { return s.members(); }

SiteSet to_set(const SpacePtr& space, const std::vector<Site>& sites) {
  SiteSet out(space);
  for (Site x : sites) out.insert(x);
  return out;
}

Method to_method(const std::string& name) {
  if (name == "auto") return Method::automatic;
  if (name == "enumerate") return Method::enumerate;
  if (name == "algebraic") return Method::algebraic;
  throw Error(ErrorKind::InvalidArgument, "unknown method '" + name + "'");
}

std::vector<std::vector<Site>> scheme_lists(const NbhdScheme& n) {
  std::vector<std::vector<Site>> out;
  for (Site s = 0; s < n.source()->size(); ++s) out.push_back(n.at(s).members());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Classical and quantum neighbourhoods of reversible maps";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<CellSpace, std::shared_ptr<CellSpace>>(m, "CellSpace")
      .def_static(
          "make",
          [](const std::vector<std::pair<std::string, std::uint32_t>>& sites) {
            std::vector<SiteSpec> specs;
            for (const auto& [id, size] : sites) specs.push_back({id, size});
            return std::const_pointer_cast<CellSpace>(CellSpace::make(std::move(specs)));
          },
          py::arg("sites"))
      .def_static(
          "ring",
          [](std::size_t cells, std::uint32_t alphabet) {
            return std::const_pointer_cast<CellSpace>(CellSpace::ring(cells, alphabet));
          },
          py::arg("cells"), py::arg("alphabet_size"))
      .def_property_readonly("size", &CellSpace::size)
      .def_property_readonly("is_ring", &CellSpace::is_ring)
      .def("id", &CellSpace::id)
      .def("alphabet_size", &CellSpace::alphabet_size);

  py::class_<BlockMap>(m, "BlockMap")
      .def_property_readonly("domain", [](const BlockMap& f) { return std::const_pointer_cast<CellSpace>(f.domain()); })
      .def_property_readonly("is_ring", &BlockMap::is_ring)
      .def_property_readonly("label", [](const BlockMap& f) { return f.descriptor().label(); })
      .def("apply", [](const BlockMap& f, const std::vector<Letter>& v) { return f.apply(v); })
      .def("apply_inverse", [](const BlockMap& f, const std::vector<Letter>& v) { return f.apply_inverse(v); })
      .def("to_json", [](const BlockMap& f, const std::string& format) {
            MapFormat fmt = format == "rule" ? MapFormat::rule
                            : format == "explicit" ? MapFormat::explicit_table
                                                   : MapFormat::automatic;
            return map_to_json(f, fmt).dump();
          }, py::arg("format") = "auto");

  m.def(
      "explicit_map",
      [](const std::shared_ptr<CellSpace>& domain, const std::shared_ptr<CellSpace>& codomain,
         std::vector<std::uint64_t> table) { return make_explicit_map(domain, codomain, std::move(table)); },
      py::arg("domain"), py::arg("codomain"), py::arg("table"));
  m.def("parse_map", [](const std::string& text) { return parse_map(text); }, py::arg("text"));
  m.def("compose", &compose, py::arg("g"), py::arg("f"));
  m.def("invert", &invert, py::arg("f"));
  m.def("power", &power, py::arg("f"), py::arg("n"));
  m.def("same_function", &same_function);

  m.def("make_jk", &make_jk, py::arg("k"), py::arg("ring"));
  m.def("make_toffoli", &make_toffoli, py::arg("ring"));
  m.def("make_tk", &make_tk, py::arg("k"), py::arg("ring"));
  m.def("make_jt", &make_jt, py::arg("k"), py::arg("l"), py::arg("ring"));
  m.def("make_jt_iterated", &make_jt_iterated, py::arg("k"), py::arg("l"), py::arg("n"), py::arg("ring"));

  m.def("in_nbhd", [](const BlockMap& f, Site y) { return members(in_nbhd(f, y)); });
  m.def("out_nbhd", [](const BlockMap& f, Site x) { return members(out_nbhd(f, x)); });
  m.def(
      "quantum_in_nbhd",
      [](const BlockMap& f, Site y, const std::string& method) { return members(quantum_in_nbhd(f, y, to_method(method))); },
      py::arg("f"), py::arg("y"), py::arg("method") = "auto");
  m.def(
      "quantum_in_scheme",
      [](const BlockMap& f, const std::string& method) { return scheme_lists(quantum_in_scheme(f, 0, 1, to_method(method))); },
      py::arg("f"), py::arg("method") = "auto");
  m.def(
      "quantum_localized",
      [](const BlockMap& f, const std::vector<Site>& B, const std::vector<Site>& A, const std::string& method) {
        return witness_to_json(quantum_localized(f, to_set(f.codomain(), B), to_set(f.domain(), A), to_method(method)))
            .dump();
      },
      py::arg("f"), py::arg("B"), py::arg("A"), py::arg("method") = "auto");
  m.def("localized_by_matrix_elements", [](const BlockMap& f, const std::vector<Site>& B, const std::vector<Site>& A) {
    return localized_by_matrix_elements(f, to_set(f.codomain(), B), to_set(f.domain(), A));
  });
  m.def(
      "simple_bound",
      [](const BlockMap& f, const std::string& method) { return bound_report_to_json(simple_bound(f, to_method(method))).dump(); },
      py::arg("f"), py::arg("method") = "auto");
  m.def("composition_bound", [](const std::vector<BlockMap>& chain) {
    return scheme_lists(composition_bound(chain));
  });
  m.def("duality_check", [](const BlockMap& f) { return duality_check(f); });
  m.def("iterate_bound", [](long a, long b, long c, long d, unsigned k) {
    const auto r = iterate_bound(a, b, c, d, k);
    return std::pair{r.interval.lo, r.interval.hi};
  });

  m.def(
      "signaling_demo",
      [](const BlockMap& f, const std::vector<Letter>& v, const std::vector<Letter>& w, Site alice, Site bob,
         unsigned steps) {
        return signal_report_to_json(signaling_demo(f, Word(f.domain(), v), Word(f.domain(), w), alice, bob, steps))
            .dump();
      },
      py::arg("f"), py::arg("v"), py::arg("w"), py::arg("alice"), py::arg("bob"), py::arg("steps") = 1);
  m.def(
      "find_signaling_pair",
      [](const BlockMap& f, Site alice, Site bob, unsigned steps) -> std::optional<std::pair<std::vector<Letter>, std::vector<Letter>>> {
        auto p = find_signaling_pair(f, alice, bob, steps);
        if (!p) return std::nullopt;
        return std::pair{p->first.letters(), p->second.letters()};
      },
      py::arg("f"), py::arg("alice"), py::arg("bob"), py::arg("steps") = 1);

  m.def("run_acceptance", [](std::uint64_t seed) {
    std::vector<std::tuple<int, std::string, bool, std::size_t, std::size_t>> out;
    for (const auto& r : run_acceptance(seed)) out.emplace_back(r.id, r.name, r.passed, r.checks, r.failures);
    return out;
  }, py::arg("seed") = 7);
}
