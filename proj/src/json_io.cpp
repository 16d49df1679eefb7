// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/json_io.hpp"

#include <cctype>
#include <charconv>

#include "nu/error.hpp"
#include "nu/lang.hpp"
#include "overloaded.hpp"

namespace nu {

Json to_json(const World& w) { return Json(w.names()); }

Json to_json(const Injection& u) {
  Json out = Json::array();
  for (auto [a, b] : u.pairs()) out.push_back({a, b});
  return out;
}

Json to_json(const Span& s) {
  return Json{{"left", to_json(s.left())},
              {"right", to_json(s.right())},
              {"low", to_json(s.low())},
              {"u", to_json(s.u())},
              {"u'", to_json(s.u_prime())}};
}

Json to_json(const CValue& v) {
  return std::visit(overloaded{
                        [](const CInt& i) { return Json(i.value); },
                        [](const CBool& b) { return Json(b.value); },
                        [](const CName& n) { return Json{{"name", n.value}}; },
                        [](const CClosure& c) {
                          return Json{{"closure", c.fname.empty() ? "fun" : c.fname},
                                      {"param", c.xname}};
                        },
                    },
                    v.v);
}

Json to_json(const AValue& v) {
  return std::visit(overloaded{
                        [](const AInt& i) { return Json(i.value); },
                        [](const ABool& b) { return Json(b.value); },
                        [](const AName& n) { return Json{{"name", n.value}}; },
                        [](const AClosure& c) {
                          return Json{{"closure", c.fname.empty() ? "fun" : c.fname},
                                      {"param", c.xname},
                                      {"world", to_json(c.world)}};
                        },
                    },
                    v.v);
}

Json to_json(const TValue& v) {
  if (v.is_bottom()) return Json{{"status", "diverge"}};
  return Json{{"status", "done"}, {"world", to_json(*v.world)}, {"value", to_json(*v.value)}};
}

Json to_json(const GroundEq& e) {
  return std::visit(overloaded{
                        [](const IntEq& x) { return Json{{"int", x.value}}; },
                        [](const BoolEq& x) { return Json{{"bool", x.value}}; },
                        [](const NameEq& x) { return Json{{"name", x.name}}; },
                        [](const TableEq& x) {
                          Json rows = Json::array();
                          for (auto [n, b] : x.table) rows.push_back({n, b});
                          return Json{{"table", rows}};
                        },
                    },
                    e);
}

Json to_json(const TProof& p) {
  return std::visit(overloaded{
                        [](const BottomProof&) { return Json{{"kind", "bottom"}}; },
                        [](const CospanProof& c) {
                          return Json{{"kind", "cospan"},
                                      {"apex", to_json(c.x.cod())},
                                      {"x", to_json(c.x)},
                                      {"x'", to_json(c.x_prime)},
                                      {"evidence", to_json(c.evidence)}};
                        },
                    },
                    p);
}

Json to_json(const ParamWitness& w) {
  Json out;
  switch (w.evidence) {
    case ParamWitness::Evidence::Star:
      out["evidence"] = "star";
      break;
    case ParamWitness::Evidence::Tables:
      out["evidence"] = "tables";
      out["agreed"] = w.agreed;
      break;
    case ParamWitness::Evidence::Bottom:
      out["evidence"] = "bottom";
      break;
  }
  if (w.span) out["span"] = to_json(*w.span);
  return out;
}

Json to_json(const Verdict& v) {
  return std::visit(
      overloaded{
          [](const Equivalent& e) {
            Json cert = std::visit(
                overloaded{
                    [](const DirectCertificate& c) {
                      return Json{{"method", "direct"},
                                  {"world", to_json(c.world)},
                                  {"lhs", to_json(c.lhs)},
                                  {"rhs", to_json(c.rhs)},
                                  {"proof", to_json(c.proof)}};
                    },
                    [](const ParametricCertificate& c) {
                      return Json{{"method", "parametric"},
                                  {"span", to_json(c.span)},
                                  {"lhs", to_json(c.lhs)},
                                  {"rhs", to_json(c.rhs)},
                                  {"witness", to_json(c.witness)},
                                  {"extensions_checked", c.extensions_checked}};
                    },
                },
                e.certificate);
            return Json{{"verdict", "equivalent"}, {"type", e.type.to_string()},
                        {"certificate", cert}};
          },
          [](const Distinguished& d) {
            return Json{{"verdict", "distinguished"},
                        {"observation", pretty(*d.observation)},
                        {"lhs", d.lhs_outcome},
                        {"rhs", d.rhs_outcome}};
          },
          [](const Unknown& u) { return Json{{"verdict", "unknown"}, {"reason", u.reason}}; },
      },
      v);
}

World world_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::SyntaxError, "a world is an array of names");
  return World(j.get<std::vector<Name>>());
}

Injection injection_from_json(const Json& j, const World& dom, const World& cod) {
  std::vector<std::pair<Name, Name>> pairs;
  for (const auto& p : j) pairs.emplace_back(p.at(0).get<Name>(), p.at(1).get<Name>());
  return Injection(dom, cod, pairs);
}

Injection injection_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::SyntaxError, "an injection is an array of pairs");
  std::vector<Name> dom;
  std::vector<Name> cod;
  for (const auto& p : j) {
    dom.push_back(p.at(0).get<Name>());
    cod.push_back(p.at(1).get<Name>());
  }
  return injection_from_json(j, World(dom), World(cod));
}

Span span_from_json(const Json& j) {
  World low = world_from_json(j.at("low"));
  return Span(injection_from_json(j.at("u"), low, world_from_json(j.at("left"))),
              injection_from_json(j.at("u'"), low, world_from_json(j.at("right"))));
}

World parse_world(std::string_view text) {
  std::string_view s = text;
  auto trim = [](std::string_view& v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  };
  trim(s);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw Error(ErrorKind::SyntaxError, "unclosed world " + std::string(text));
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Name> names;
  while (true) {
    trim(s);
    if (s.empty()) break;
    Name n = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc()) {
      throw Error(ErrorKind::SyntaxError, "bad name in world " + std::string(text));
    }
    names.push_back(n);
    s.remove_prefix(static_cast<std::size_t>(end - s.data()));
    trim(s);
    if (s.empty()) break;
    if (s.front() != ',') throw Error(ErrorKind::SyntaxError, "expected ',' in " + std::string(text));
    s.remove_prefix(1);
  }
  return World(names);
}

}  // namespace nu
