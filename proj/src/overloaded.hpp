// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace nu {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace nu
