// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nu/corpus.hpp"
#include "nu/equiv.hpp"
#include "nu/error.hpp"
#include "nu/json_io.hpp"
#include "nu/lang.hpp"

namespace py = pybind11;

namespace {

nu::CompPtr checked(const std::string& text) {
  nu::CompPtr e = nu::parse(text);
  nu::typecheck_comp(nu::Context{}, *e);
  return e;
}

nu::Method method_of(const std::string& m) {
  if (m == "direct") return nu::Method::Direct;
  if (m == "parametric") return nu::Method::Parametric;
  if (m == "oracle") return nu::Method::Oracle;
  throw py::value_error("method must be direct, parametric or oracle");
}

}  // namespace

PYBIND11_MODULE(_nu, m) {
  m.doc() = "Evaluation and equivalence checking for programs with fresh names.";

  py::register_exception<nu::Error>(m, "NuError", PyExc_ValueError);

  m.def("typecheck", [](const std::string& text) {
    return nu::typecheck_comp(nu::Context{}, *nu::parse(text)).to_string();
  });

  m.def("pretty", [](const std::string& text) { return nu::pretty(*nu::parse(text)); });

  m.def(
      "eval_concrete",
      [](const std::string& text, nu::Name supply, std::uint64_t fuel) {
        nu::CResult r = nu::eval_concrete(nu::CEnv{}, *checked(text), supply, fuel);
        if (r.diverged) return nu::Json{{"status", "diverge"}}.dump();
        return nu::Json{{"status", "done"}, {"supply", r.supply}, {"value", nu::to_json(*r.value)}}
            .dump();
      },
      py::arg("text"), py::arg("supply") = 0, py::arg("fuel") = nu::kDefaultFuel);

  m.def(
      "eval_abstract",
      [](const std::string& text, const std::vector<nu::Name>& world, std::uint64_t fuel) {
        nu::World w(world);
        return nu::to_json(nu::eval_abstract(w, nu::AEnv{w, {}}, *checked(text), fuel)).dump();
      },
      py::arg("text"), py::arg("world") = std::vector<nu::Name>{},
      py::arg("fuel") = nu::kDefaultFuel);

  m.def(
      "check_equivalence",
      [](const std::string& lhs, const std::string& rhs, const std::string& type,
         const std::string& method, int depth, std::uint64_t fuel, unsigned ext,
         std::size_t budget) {
        nu::Budgets b{fuel, depth, ext, budget};
        nu::Verdict v = nu::check_equivalence(*nu::parse(lhs), *nu::parse(rhs),
                                              nu::parse_type(type), method_of(method), b);
        return nu::to_json(v).dump();
      },
      py::arg("lhs"), py::arg("rhs"), py::arg("type"), py::arg("method") = "direct",
      py::arg("depth") = 4, py::arg("fuel") = nu::kDefaultFuel, py::arg("ext") = 2,
      py::arg("budget") = 256);

  m.def(
      "corpus",
      [](std::uint64_t seed, std::size_t count, int depth) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& g : nu::gen_corpus(seed, count, depth)) {
          out.emplace_back(nu::pretty(*g.term), g.type.to_string());
        }
        return out;
      },
      py::arg("seed") = 1, py::arg("count") = 10, py::arg("depth") = 4);
}
