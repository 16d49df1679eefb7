// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// nu: command-line front end. Every result is one JSON object per line.
//
//   nu check FILE
//   nu eval FILE [--semantics concrete|abstract] [--fuel N] [--supply S] [--world W]
//   nu equiv A B --type T [--method direct|parametric|oracle] [--depth K] [--fuel N]
//                [--ext E] [--budget B] [--emit-proof PATH] [--pretty]
//   nu corpus [--seed S] [--count N] [--depth D]
//
// FILE may be "-" for stdin. Exit codes: 0 success (equiv: equivalent),
// 1 distinguished, 2 unknown, 64 usage, 65 parse or type error, 70 internal.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "nu/corpus.hpp"
#include "nu/equiv.hpp"
#include "nu/error.hpp"
#include "nu/json_io.hpp"
#include "nu/lang.hpp"

namespace {

constexpr int kUsage = 64;
constexpr int kBadInput = 65;
constexpr int kInternal = 70;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nu::CompPtr load(const std::string& path) { return nu::parse(slurp(path)); }

void emit(const nu::Json& j) { std::cout << j.dump() << '\n'; }

bool colour() {
  const char* env = std::getenv("NU_COLOR");
  return env != nullptr && std::string(env) != "0" && std::string(env) != "";
}

std::string paint(const std::string& text, const char* code) {
  if (!colour()) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

void print_pretty(const nu::Verdict& v) {
  using namespace nu;
  std::visit(
      overloaded{
          [](const Equivalent& e) {
            std::cout << paint("equivalent", "32") << " at " << e.type.to_string() << '\n';
            if (auto* d = std::get_if<DirectCertificate>(&e.certificate)) {
              std::cout << "  over world " << d->world.to_string() << '\n'
                        << "  left  result " << to_string(d->lhs) << '\n'
                        << "  right result " << to_string(d->rhs) << '\n';
              if (auto* c = std::get_if<CospanProof>(&d->proof)) {
                std::cout << "  co-span into apex " << c->x.cod().to_string() << '\n'
                          << "    leg x  " << c->x.to_string() << '\n'
                          << "    leg x' " << c->x_prime.to_string() << '\n';
              } else {
                std::cout << "  both sides diverge\n";
              }
            } else {
              const auto& p = std::get<ParametricCertificate>(e.certificate);
              std::cout << "  over span " << p.span.to_string() << '\n'
                        << "  left  result " << to_string(p.lhs) << '\n'
                        << "  right result " << to_string(p.rhs) << '\n';
              if (p.witness.span) {
                const Span& s1 = *p.witness.span;
                std::cout << "  extension span " << s1.left().to_string() << " <- low point "
                          << s1.low().to_string() << " -> " << s1.right().to_string() << '\n'
                          << "    leg u  " << s1.u().to_string() << '\n'
                          << "    leg u' " << s1.u_prime().to_string() << '\n'
                          << "  still related after " << p.extensions_checked
                          << " parametric extensions\n";
              } else {
                std::cout << "  both sides diverge\n";
              }
            }
          },
          [](const Distinguished& d) {
            std::cout << paint("distinguished", "31") << " by " << pretty(*d.observation) << '\n'
                      << "  left  " << d.lhs_outcome << '\n'
                      << "  right " << d.rhs_outcome << '\n';
          },
          [](const Unknown& u) {
            std::cout << paint("unknown", "33") << ": " << u.reason << '\n';
          },
      },
      v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate and compare programs with fresh names."};
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "Typecheck a closed term");
  check->add_option("file", check_file, "Term file, or - for stdin")->required();

  std::string eval_file;
  std::string semantics = "concrete";
  std::uint64_t fuel = nu::kDefaultFuel;
  nu::Name supply = 0;
  std::string world_text = "{}";
  auto* eval = app.add_subcommand("eval", "Evaluate a closed term");
  eval->add_option("file", eval_file, "Term file, or - for stdin")->required();
  eval->add_option("--semantics", semantics)->check(CLI::IsMember({"concrete", "abstract"}));
  eval->add_option("--fuel", fuel, "Function applications allowed");
  eval->add_option("--supply", supply, "First name handed out (concrete)");
  eval->add_option("--world", world_text, "Starting world, e.g. {0,1} (abstract)");

  std::string lhs_file;
  std::string rhs_file;
  std::string type_text;
  std::string method_text = "direct";
  nu::Budgets budgets;
  std::string proof_path;
  bool pretty_out = false;
  auto* equiv = app.add_subcommand("equiv", "Compare two closed terms");
  equiv->add_option("lhs", lhs_file)->required();
  equiv->add_option("rhs", rhs_file)->required();
  equiv->add_option("--type", type_text, "Common type, e.g. \"name -> bool\"")->required();
  equiv->add_option("--method", method_text)
      ->check(CLI::IsMember({"direct", "parametric", "oracle"}));
  equiv->add_option("--depth", budgets.depth, "Observation depth (oracle)");
  equiv->add_option("--fuel", budgets.fuel);
  equiv->add_option("--ext", budgets.ext, "Extension size for the robustness sweep");
  equiv->add_option("--budget", budgets.budget, "Extension spans tried");
  equiv->add_option("--emit-proof", proof_path, "Write the certificate here");
  equiv->add_flag("--pretty", pretty_out, "Human-readable output");

  std::uint64_t seed = 1;
  std::size_t count = 10;
  int depth = 4;
  auto* corpus = app.add_subcommand("corpus", "Print generated terms");
  corpus->add_option("--seed", seed);
  corpus->add_option("--count", count);
  corpus->add_option("--depth", depth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (check->parsed()) {
      nu::Type t = nu::typecheck_comp(nu::Context{}, *load(check_file));
      emit({{"type", t.to_string()}});
      return 0;
    }
    if (eval->parsed()) {
      nu::CompPtr e = load(eval_file);
      nu::typecheck_comp(nu::Context{}, *e);
      if (semantics == "concrete") {
        nu::CResult r = nu::eval_concrete(nu::CEnv{}, *e, supply, fuel);
        if (r.diverged) {
          emit({{"status", "diverge"}});
        } else {
          emit({{"status", "done"}, {"supply", r.supply}, {"value", nu::to_json(*r.value)}});
        }
      } else {
        nu::World w = nu::parse_world(world_text);
        emit(nu::to_json(nu::eval_abstract(w, nu::AEnv{w, {}}, *e, fuel)));
      }
      return 0;
    }
    if (equiv->parsed()) {
      nu::Type t = nu::parse_type(type_text);
      nu::CompPtr lhs = load(lhs_file);
      nu::CompPtr rhs = load(rhs_file);
      nu::Method method = method_text == "oracle"       ? nu::Method::Oracle
                          : method_text == "parametric" ? nu::Method::Parametric
                                                        : nu::Method::Direct;
      nu::Verdict v = nu::check_equivalence(*lhs, *rhs, t, method, budgets);
      nu::Json j = nu::to_json(v);
      if (!proof_path.empty() && std::holds_alternative<nu::Equivalent>(v)) {
        std::ofstream out(proof_path);
        if (!out) throw UsageError("cannot write " + proof_path);
        out << j["certificate"].dump(2) << '\n';
      }
      if (pretty_out) {
        print_pretty(v);
      } else {
        emit(j);
      }
      if (std::holds_alternative<nu::Equivalent>(v)) return 0;
      return std::holds_alternative<nu::Distinguished>(v) ? 1 : 2;
    }
    if (corpus->parsed()) {
      for (const auto& g : nu::gen_corpus(seed, count, depth)) {
        emit({{"type", g.type.to_string()}, {"term", nu::pretty(*g.term)}});
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << nu::Json{{"error", "Usage"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  } catch (const nu::Error& e) {
    std::cerr << nu::Json{{"error", std::string(nu::to_string(e.kind()))}, {"message", e.what()}}
                     .dump()
              << '\n';
    switch (e.kind()) {
      case nu::ErrorKind::SyntaxError:
      case nu::ErrorKind::TypeError:
      case nu::ErrorKind::UnboundVariable:
        return kBadInput;
      default:
        return kInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << nu::Json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return kInternal;
  }
  return kUsage;
}
