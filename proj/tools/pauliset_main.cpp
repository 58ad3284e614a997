#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pauliset/anticommuting.hpp"
#include "pauliset/commuting.hpp"
#include "pauliset/counting.hpp"
#include "pauliset/errors.hpp"
#include "pauliset/group.hpp"
#include "pauliset/oracle.hpp"
#include "pauliset/pauli.hpp"
#include "pauliset/rng.hpp"

namespace {

using nlohmann::json;
using namespace pauliset;

std::uint64_t parse_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  if (text.empty())
    throw ArgumentError("--seed: expected an integer or \"random\"");
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ArgumentError("--seed: expected an integer or \"random\", got \"" +
                          text + "\"");
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (UINT64_MAX - digit) / 10)
      throw ArgumentError("--seed: value does not fit in 64 bits");
    value = value * 10 + digit;
  }
  return value;
}

PauliSet read_set(const std::string& path) {
  std::string text;
  if (path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return PauliSet::parse(text);
}

json set_to_json(const PauliSet& s) {
  json out = json::array();
  for (const Pauli& p : s) out.push_back(p.str());
  return out;
}

void emit(bool as_json, const json& result, const std::string& plain) {
  if (as_json)
    std::cout << json{{"ok", true}, {"result", result}}.dump() << "\n";
  else
    std::cout << plain;
}

void emit_set(bool as_json, const PauliSet& s) {
  emit(as_json, set_to_json(s), s.str());
}

int run(int argc, char** argv) {
  bool as_json = false;
  int exit_code = 0;

  CLI::App app{"Toolkit for maximal commuting and anticommuting Pauli sets"};
  app.require_subcommand(1);
  app.add_flag("--json", as_json, "wrap results as {\"ok\":bool,\"result\":...}");

  auto sub = [&](CLI::App* parent, const std::string& name,
                 const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // gen
  CLI::App* gen = sub(&app, "gen", "generate maximal sets");
  gen->require_subcommand(1);
  {
    static std::size_t n = 0;
    static std::string seed = "0";
    static std::string from;
    CLI::App* c = sub(gen, "max-anticommuting",
                      "maximally anticommuting set of size 2n+1");
    c->add_option("--n", n, "factor count")->required();
    c->add_option("--seed", seed, "64-bit seed or \"random\"");
    c->add_option("--from", from, "grow from the anticommuting set in FILE");
    c->callback([&] {
      if (from.empty()) {
        emit_set(as_json, construct_maximum(n));
        return;
      }
      PauliSet g = read_set(from);
      if (g.empty())
        g = PauliSet(n);
      else if (g.n() != n)
        throw DimensionError("--from set has " + std::to_string(g.n()) +
                             " factors, --n says " + std::to_string(n));
      emit_set(as_json, extend_to_maximum(g, parse_seed(seed)));
    });
  }
  {
    static std::size_t n = 0;
    static std::string seed = "0";
    CLI::App* c = sub(gen, "max-commuting",
                      "maximally commuting subgroup of size 2^n");
    c->add_option("--n", n, "factor count")->required();
    c->add_option("--seed", seed, "64-bit seed or \"random\"");
    c->callback([&] {
      Rng rng(parse_seed(seed));
      emit_set(as_json, random_maximal_commuting(n, rng));
    });
  }

  // verify
  CLI::App* verify = sub(&app, "verify", "check a set read from FILE or stdin");
  verify->require_subcommand(1);
  {
    static bool maximal = false;
    static std::string file;
    CLI::App* c = sub(verify, "commuting", "pairwise commutation");
    c->add_flag("--maximal", maximal, "also require size 2^n");
    c->add_option("file", file, "input file (stdin when absent)");
    c->callback([&] {
      const PauliSet s = read_set(file);
      const bool value = maximal ? is_maximally_commuting(s) : is_commuting(s);
      emit(as_json, value, value ? "true\n" : "false\n");
      exit_code = value ? 0 : 1;
    });
  }
  {
    static bool maximal = false;
    static std::string file;
    CLI::App* c = sub(verify, "anticommuting", "pairwise anticommutation");
    c->add_flag("--maximal", maximal, "also require the product to be identity");
    c->add_option("file", file, "input file (stdin when absent)");
    c->callback([&] {
      const PauliSet s = read_set(file);
      bool value = is_anticommuting(s);
      if (value && maximal) value = is_maximally_anticommuting(s);
      emit(as_json, value, value ? "true\n" : "false\n");
      exit_code = value ? 0 : 1;
    });
  }

  // extend
  {
    static std::string file;
    static std::string seed = "0";
    CLI::App* c = sub(&app, "extend",
                      "grow an anticommuting minimal generating set to size 2n+1");
    c->add_option("file", file, "input file")->required();
    c->add_option("--seed", seed, "64-bit seed or \"random\"");
    c->callback([&] {
      emit_set(as_json, extend_to_maximum(read_set(file), parse_seed(seed)));
    });
  }

  // decompose
  {
    static std::string file;
    CLI::App* c = sub(&app, "decompose", "first-factor split of a set");
    c->add_option("file", file, "input file")->required();
    c->callback([&] {
      const Decomposition d = decompose(read_set(file));
      const std::string uvw(d.uvw.begin(), d.uvw.end());
      if (as_json) {
        json result{{"uvw", uvw}};
        for (char label : {'i', 'x', 'y', 'z'})
          result[std::string(1, label)] = set_to_json(d.part(label));
        emit(true, result, "");
        return;
      }
      std::string plain = "# uvw " + uvw + "\n";
      for (char label : {'i', 'x', 'y', 'z'}) {
        plain += std::string("# part ") + label + "\n";
        plain += d.part(label).str();
      }
      emit(false, {}, plain);
    });
  }

  // classify
  {
    static std::string file;
    CLI::App* c = sub(&app, "classify",
                      "structural case of a maximally anticommuting set");
    c->add_option("file", file, "input file")->required();
    c->callback([&] {
      const StructureCase sc = classify_structure(read_set(file));
      const std::string uvw(sc.uvw.begin(), sc.uvw.end());
      if (as_json) {
        emit(true,
             json{{"case", std::string(1, sc.label)},
                  {"uvw", uvw},
                  {"sizes", sc.sizes}},
             "");
        return;
      }
      std::string plain = std::string("case ") + sc.label + "\n";
      plain += "uvw " + uvw + "\n";
      plain += "sizes";
      for (std::size_t size : sc.sizes) plain += " " + std::to_string(size);
      emit(false, {}, plain + "\n");
    });
  }

  // count
  CLI::App* count = sub(&app, "count", "exact counts");
  count->require_subcommand(1);
  auto emit_count = [&](const BigInt& value) {
    const std::string text = value.str();
    emit(as_json, text, text + "\n");
  };
  {
    static std::size_t n = 0, m = 0;
    CLI::App* c = sub(count, "commuting-subgroups",
                      "commuting subgroups of order 2^m");
    c->add_option("--n", n, "factor count")->required();
    c->add_option("--m", m, "subgroup rank")->required();
    c->callback([&] { emit_count(count_commuting_subgroups(n, m)); });
  }
  {
    static std::size_t n = 0;
    CLI::App* c = sub(count, "max-commuting",
                      "maximally commuting subgroups");
    c->add_option("--n", n, "factor count")->required();
    c->callback([&] { emit_count(count_maximal_commuting(n)); });
  }
  {
    static std::size_t n = 0, m = 0, to = 0;
    CLI::App* c = sub(count, "anticommuting-extensions",
                      "extensions of an anticommuting minimal generating set");
    c->add_option("--n", n, "factor count")->required();
    c->add_option("--m", m, "current size")->required();
    c->add_option("--to", to, "target size")->required();
    c->callback([&] { emit_count(count_anticommuting_extensions(n, m, to)); });
  }
  {
    static std::size_t n = 0, m = 0;
    CLI::App* c = sub(count, "max-anticommuting",
                      "maximally anticommuting sets of size m");
    c->add_option("--n", n, "factor count")->required();
    c->add_option("--m", m, "set size")->required();
    c->callback([&] { emit_count(count_maximal_anticommuting(n, m)); });
  }

  // oracle
  CLI::App* orc = sub(&app, "oracle", "brute-force enumeration at small n");
  orc->require_subcommand(1);
  auto emit_sets = [&](const std::vector<PauliSet>& sets) {
    if (as_json) {
      json result = json::array();
      for (const PauliSet& s : sets) result.push_back(set_to_json(s));
      emit(true, result, "");
      return;
    }
    std::string plain;
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (k != 0) plain += "\n";
      plain += sets[k].str();
    }
    emit(false, {}, plain);
  };
  {
    static std::size_t n = 0;
    CLI::App* c = sub(orc, "max-commuting",
                      "every maximally commuting subgroup");
    c->add_option("--n", n, "factor count")->required();
    c->callback([&] { emit_sets(oracle::enumerate_maximal_commuting(n)); });
  }
  {
    static std::size_t n = 0, m = 0;
    CLI::App* c = sub(orc, "max-anticommuting",
                      "every maximally anticommuting set of size m");
    c->add_option("--n", n, "factor count")->required();
    c->add_option("--m", m, "set size")->required();
    c->callback(
        [&] { emit_sets(oracle::enumerate_maximal_anticommuting(n, m)); });
  }
  {
    static std::size_t n = 0;
    CLI::App* c = sub(orc, "census",
                      "verify the sign-pattern and coset laws");
    c->add_option("--n", n, "factor count")->required();
    c->callback([&] {
      const oracle::CensusReport r = oracle::census_check(n);
      if (as_json) {
        emit(true,
             json{{"n", r.n},
                  {"generating_sets_checked", r.generating_sets_checked},
                  {"anticommuting_sets_checked", r.anticommuting_sets_checked},
                  {"cosets_checked", r.cosets_checked}},
             "");
        return;
      }
      std::string plain = "n " + std::to_string(r.n) + "\n";
      plain += "generating_sets_checked " +
               std::to_string(r.generating_sets_checked) + "\n";
      plain += "anticommuting_sets_checked " +
               std::to_string(r.anticommuting_sets_checked) + "\n";
      plain += "cosets_checked " + std::to_string(r.cosets_checked) + "\n";
      emit(false, {}, plain);
    });
  }

  auto emit_error = [&](const std::string& message) {
    if (as_json)
      std::cout << json{{"ok", false}, {"error", message}}.dump() << "\n";
    else
      std::cerr << "error: " << message << "\n";
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit_error(e.what());
    return 2;
  } catch (const ParseError& e) {
    emit_error(e.what());
    return 2;
  } catch (const ArgumentError& e) {
    emit_error(e.what());
    return 2;
  } catch (const DimensionError& e) {
    emit_error(e.what());
    return 2;
  } catch (const CapacityError& e) {
    emit_error(e.what());
    return 3;
  } catch (const std::exception& e) {
    emit_error(e.what());
    return 4;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
