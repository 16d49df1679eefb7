// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// JSON forms used by the command-line tool and the Python module.
//   world      [0, 1, 2]
//   injection  [[0, 1], [1, 2]]   (sorted by source)
//   span       {"left", "right", "low", "u", "u'"}

#pragma once

#include <json.hpp>

#include "nu/abstract.hpp"
#include "nu/concrete.hpp"
#include "nu/equiv.hpp"
#include "nu/spans.hpp"
#include "nu/worlds.hpp"

namespace nu {

using Json = nlohmann::ordered_json;

Json to_json(const World& w);
Json to_json(const Injection& u);
Json to_json(const Span& s);
Json to_json(const CValue& v);
Json to_json(const AValue& v);
Json to_json(const TValue& v);
Json to_json(const GroundEq& e);
Json to_json(const TProof& p);
Json to_json(const ParamWitness& w);
Json to_json(const Verdict& v);

World world_from_json(const Json& j);
Injection injection_from_json(const Json& j);
Span span_from_json(const Json& j);

/// Parses "{0,1}", "{}" or "0,1". Throws SyntaxError.
World parse_world(std::string_view text);

}  // namespace nu
