#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetablocks/error.hpp"
#include "thetablocks/verify.hpp"

namespace py = pybind11;
using namespace thetablocks;
using io::json;

namespace {

// Every entry point takes and returns JSON text; the Python layer converts.
GroupPtr group(const std::string& spec) { return io::group_from_json(json::parse(spec)); }

std::string table(const std::string& g) { return io::to_json(character_table(group(g))).dump(); }

std::string blocks(const std::string& g, unsigned p, unsigned factor, unsigned root) {
  return io::to_json(p_blocks(character_table(group(g)), p, IdealChoice{factor, root})).dump();
}

std::string brauer(const std::string& g, unsigned p, std::uint64_t seed) {
  auto G = group(g);
  return io::to_json(brauer_table(G, reduction_for(character_table(G), p), seed)).dump();
}

std::string decomposition(const std::string& g, unsigned p, std::uint64_t seed) {
  auto G = group(g);
  auto T = character_table(G);
  auto red = reduction_for(T, p);
  return io::to_json(decomposition_matrix(T, brauer_table(G, red, seed), p_blocks(T, p, red))).dump();
}

std::string theta(const std::string& g, const std::string& normal, std::size_t row, unsigned p) {
  auto G = group(g);
  auto T = make_triple(G, io::normal_from_json(G, json::parse(normal)), row);
  return io::to_json(T, theta_blocks(T, p)).dump();
}

std::string verify(const std::string& corpus, const std::vector<std::string>& checks, std::uint64_t seed) {
  std::vector<io::TripleSpec> specs;
  for (const auto& e : json::parse(corpus)) specs.push_back(io::triple_spec_from_json(e));
  CorpusOptions opt;
  opt.checks = checks;
  opt.seed = seed;
  auto out = run_corpus(specs, opt);
  auto s = summarize(out);
  json arr = json::array();
  for (const auto& o : out) arr.push_back(to_json(o));
  return json{{"outcomes", arr},
              {"summary",
               {{"pass", s.pass}, {"fail", s.fail}, {"vacuous", s.vacuous}, {"hypothesis_not_met", s.hypothesis_not_met}}}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_thetablocks, m) {
  m.doc() = "Exact character tables, p-blocks and theta-blocks of small finite groups";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    } catch (const json::exception& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.attr("DEFAULT_SEED") = kDefaultSeed;
  m.def("builtin_groups", &builtin_group_names);
  m.def("character_table", &table, py::arg("group"));
  m.def("blocks", &blocks, py::arg("group"), py::arg("p"), py::arg("factor") = 0, py::arg("root") = 0);
  m.def("brauer_table", &brauer, py::arg("group"), py::arg("p"), py::arg("seed") = kDefaultSeed);
  m.def("decomposition", &decomposition, py::arg("group"), py::arg("p"), py::arg("seed") = kDefaultSeed);
  m.def("theta_blocks", &theta, py::arg("group"), py::arg("normal"), py::arg("theta"), py::arg("p"));
  m.def("verify", &verify, py::arg("corpus"), py::arg("checks") = std::vector<std::string>{},
        py::arg("seed") = kDefaultSeed);
}
