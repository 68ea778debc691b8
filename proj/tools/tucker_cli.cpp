// tucker: consecutive ones testing and minimum Tucker obstructions.
// Links only the C interface.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tucker/tucker.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNonC1P = 1;
constexpr int kExitError = 2;

struct MatrixDeleter {
  void operator()(tucker_matrix* m) const { tucker_matrix_free(m); }
};
struct WitnessDeleter {
  void operator()(tucker_witness* w) const { tucker_witness_free(w); }
};
using MatrixPtr = std::unique_ptr<tucker_matrix, MatrixDeleter>;
using WitnessPtr = std::unique_ptr<tucker_witness, WitnessDeleter>;

struct CliError {
  std::string message;
};

void check(tucker_status s) {
  if (s != TUCKER_OK) throw CliError{std::string(tucker_status_name(s)) + ": " + tucker_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  tucker_string_free(s);
  return out;
}

struct Settings {
  std::string format = "dense";
  std::string mode = "conditional";
  bool json = false;
  std::uint64_t seed = 1;
  int workers = 1;
  std::size_t oracle_bound = 0;  // 0: library defaults
};

tucker_format to_format(const std::string& f) { return f == "sparse" ? TUCKER_FORMAT_SPARSE : TUCKER_FORMAT_DENSE; }

tucker_options to_options(const Settings& s) {
  tucker_options o = tucker_default_options();
  o.workers = s.workers;
  o.mode = s.mode == "exact" ? TUCKER_MODE_EXACT : TUCKER_MODE_CONDITIONAL;
  return o;
}

tucker_oracle_bounds to_bounds(const Settings& s) {
  tucker_oracle_bounds b = tucker_default_oracle_bounds();
  if (s.oracle_bound > 0) {
    b.max_cols = std::max(b.max_cols, s.oracle_bound);
    b.max_dim = s.oracle_bound;
  }
  return b;
}

MatrixPtr load(const std::string& path, const Settings& s) {
  tucker_matrix* m = nullptr;
  check(tucker_matrix_load(path.c_str(), to_format(s.format), &m));
  return MatrixPtr(m);
}

std::optional<tucker_kind> parse_kind(const std::string& name) {
  static const char* names[] = {"I", "II", "III", "IV", "V"};
  for (int i = 0; i < 5; ++i)
    if (name == names[i]) return static_cast<tucker_kind>(i + 1);
  return std::nullopt;
}

const char* kind_name(tucker_kind k) {
  static const char* names[] = {"?", "I", "II", "III", "IV", "V"};
  return names[static_cast<int>(k)];
}

std::string type_name(const tucker_witness* w) {
  const tucker_kind k = tucker_witness_kind(w);
  std::string name = kind_name(k);
  if (k != TUCKER_KIND_IV && k != TUCKER_KIND_V) name += "_" + std::to_string(tucker_witness_k(w));
  return name;
}

json witness_json(const tucker_witness* w) {
  char* text = nullptr;
  check(tucker_witness_to_json(w, &text));
  return json::parse(take(text));
}

void print_witness_text(const tucker_witness* w, const json& j) {
  std::cout << "obstruction " << type_name(w) << ", " << tucker_witness_size(w) << " vertices, detector "
            << tucker_witness_detector(w);
  if (tucker_witness_ell(w) >= 0) std::cout << ", ell " << tucker_witness_ell(w);
  std::cout << "\nrows:";
  for (const auto& r : j["rows"]) std::cout << ' ' << r.get<std::string>();
  std::cout << "\ncols:";
  for (const auto& c : j["cols"]) std::cout << ' ' << c.get<std::string>();
  std::cout << '\n';
}

std::string kinds_of_mask(unsigned mask) {
  std::string out;
  for (int k = 1; k <= 5; ++k) {
    if (mask & TUCKER_KIND_BIT(k)) {
      if (!out.empty()) out += ",";
      out += kind_name(static_cast<tucker_kind>(k));
    }
  }
  return out;
}

// check / find-min
int run_check(const std::string& path, const Settings& s, bool exit_on_status) {
  auto m = load(path, s);
  const tucker_options opts = to_options(s);
  int c1p = 0;
  tucker_witness* raw = nullptr;
  check(tucker_check_c1p(m.get(), &opts, &c1p, &raw));
  WitnessPtr w(raw);
  if (c1p) {
    if (s.json)
      std::cout << json{{"c1p", true}}.dump() << '\n';
    else
      std::cout << "C1P\n";
    return kExitOk;
  }
  const json j = witness_json(w.get());
  if (s.json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "not C1P\n";
    print_witness_text(w.get(), j);
  }
  return exit_on_status ? kExitNonC1P : kExitOk;
}

int run_find_type(const std::string& path, const std::string& type, const Settings& s) {
  const auto kind = parse_kind(type);
  if (!kind) throw CliError{"unknown type '" + type + "' (expected I, II, III, IV or V)"};
  if (*kind == TUCKER_KIND_II) {
    throw CliError{"type II has no dedicated detector; use 'tucker oracle --per-type' on small inputs"};
  }
  auto m = load(path, s);
  const tucker_options opts = to_options(s);
  tucker_outcome outcome = TUCKER_NOT_FOUND;
  unsigned mask = 0;
  tucker_witness* raw = nullptr;
  check(tucker_find_type(m.get(), *kind, &opts, &outcome, &mask, &raw));
  WitnessPtr w(raw);
  if (outcome == TUCKER_FOUND) {
    const json j = witness_json(w.get());
    if (s.json)
      std::cout << j.dump() << '\n';
    else
      print_witness_text(w.get(), j);
    return kExitOk;
  }
  if (outcome == TUCKER_SUPERSEDED) {
    if (s.json) {
      json j{{"status", "superseded"}, {"type", type}, {"superseded_by", json::array()}};
      for (int k = 1; k <= 5; ++k)
        if (mask & TUCKER_KIND_BIT(k)) j["superseded_by"].push_back(kind_name(static_cast<tucker_kind>(k)));
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "superseded: an obstruction of type " << kinds_of_mask(mask) << " is at most as large\n";
    }
    return kExitOk;
  }
  if (s.json)
    std::cout << json{{"status", "not-found"}, {"type", type}}.dump() << '\n';
  else
    std::cout << "not found\n";
  return kExitOk;
}

int run_oracle(const std::string& path, bool per_type, const Settings& s) {
  auto m = load(path, s);
  const tucker_oracle_bounds b = to_bounds(s);
  int c1p = 0;
  check(tucker_oracle_c1p(m.get(), &b, &c1p));
  json out{{"c1p", c1p != 0}};
  if (!c1p) {
    tucker_witness* raw = nullptr;
    check(tucker_oracle_min(m.get(), &b, &raw));
    WitnessPtr w(raw);
    out["minimum"] = witness_json(w.get());
    int minimal = 0;
    check(tucker_oracle_is_minimal(m.get(), &b, &minimal));
    out["is_minimal_pattern"] = minimal != 0;
  }
  if (per_type) {
    json per = json::object();
    for (int k = 1; k <= 5; ++k) {
      tucker_witness* raw = nullptr;
      check(tucker_oracle_min_of_kind(m.get(), static_cast<tucker_kind>(k), &b, &raw));
      WitnessPtr w(raw);
      per[kind_name(static_cast<tucker_kind>(k))] = w ? witness_json(w.get()) : json(nullptr);
    }
    out["per_type"] = per;
  }
  if (s.json) {
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  std::cout << (c1p ? "C1P" : "not C1P") << '\n';
  if (!c1p) {
    const auto& mn = out["minimum"];
    std::string name = mn["type"].get<std::string>();
    if (name != "IV" && name != "V") name += "_" + std::to_string(mn["k"].get<int>());
    std::cout << "minimum " << name << ", "
              << mn["size"].get<int>() << " vertices; input is "
              << (out["is_minimal_pattern"].get<bool>() ? "" : "not ") << "itself a minimal pattern\n";
  }
  if (per_type) {
    for (auto& [kind, w] : out["per_type"].items()) {
      std::cout << "  " << kind << ": ";
      if (w.is_null())
        std::cout << "none\n";
      else
        std::cout << w["size"].get<int>() << " vertices\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct GeneratorSpec {
  std::string kind;  // random, planted, pattern
  std::size_t rows = 0, cols = 0;
  double density = 0;
  std::uint64_t seed = 0;
  tucker_kind type = TUCKER_KIND_I;
  int k = 1;
};

GeneratorSpec parse_generator(const std::string& text) {
  static const std::regex call(R"(\s*(\w+)\s*\(([^)]*)\)\s*)");
  std::smatch mt;
  if (!std::regex_match(text, mt, call)) throw CliError{"bad generator spec '" + text + "'"};
  std::vector<std::string> args;
  std::stringstream ss(mt[2].str());
  for (std::string a; std::getline(ss, a, ',');) {
    a.erase(0, a.find_first_not_of(" \t"));
    a.erase(a.find_last_not_of(" \t") + 1);
    args.push_back(a);
  }
  GeneratorSpec g;
  g.kind = mt[1];
  try {
    if (g.kind == "random" && args.size() == 4) {
      g.rows = std::stoul(args[0]);
      g.cols = std::stoul(args[1]);
      g.density = std::stod(args[2]);
      g.seed = std::stoull(args[3]);
      return g;
    }
    if ((g.kind == "planted" && (args.size() == 3 || args.size() == 4)) || (g.kind == "pattern" && args.size() == 2)) {
      const auto kind = parse_kind(args[0]);
      if (!kind) throw CliError{"bad pattern type '" + args[0] + "'"};
      g.type = *kind;
      g.k = std::stoi(args[1]);
      if (g.kind == "planted") {
        if (args.size() == 4) {
          g.rows = std::stoul(args[2]);
          g.cols = std::stoul(args[3]);
        } else {
          const auto x = args[2].find('x');
          g.rows = std::stoul(args[2].substr(0, x));
          g.cols = x == std::string::npos ? g.rows : std::stoul(args[2].substr(x + 1));
        }
      }
      return g;
    }
  } catch (const std::logic_error&) {
    throw CliError{"bad number in generator spec '" + text + "'"};
  }
  throw CliError{"bad generator spec '" + text + "' (random(m,n,density,seed), planted(type,k,RxC), pattern(type,k))"};
}

MatrixPtr instantiate(const GeneratorSpec& g, std::optional<std::size_t> size, std::uint64_t seed) {
  tucker_matrix* m = nullptr;
  if (g.kind == "random") {
    check(tucker_matrix_random(g.rows, size.value_or(g.cols), g.density, seed, &m));
  } else if (g.kind == "planted") {
    check(tucker_matrix_planted(g.type, g.k, size.value_or(g.rows), size.value_or(g.cols), seed, &m, nullptr));
  } else {
    check(tucker_matrix_pattern(g.type, static_cast<int>(size.value_or(static_cast<std::size_t>(g.k))), &m));
  }
  return MatrixPtr(m);
}

struct Timed {
  double seconds = 0;
  std::string result;
};

Timed run_detector(const std::string& name, const tucker_matrix* m, const Settings& s) {
  tucker_options opts = to_options(s);
  Timed t;
  tucker_witness* raw = nullptr;
  const auto start = std::chrono::steady_clock::now();
  if (name == "min" || name == "min-exact") {
    opts.mode = name == "min" ? TUCKER_MODE_CONDITIONAL : TUCKER_MODE_EXACT;
    check(tucker_find_min(m, &opts, &raw));
  } else if (name == "triple") {
    int found = 0;
    size_t ell = 0;
    check(tucker_min_triple(m, &opts, &found, &ell, nullptr));
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.result = found ? "ell=" + std::to_string(ell) : "none";
    return t;
  } else {
    static const std::regex det(R"(type([1345])(c?))");
    std::smatch mt;
    if (!std::regex_match(name, mt, det)) throw CliError{"unknown detector '" + name + "'"};
    opts.mode = mt[2].length() ? TUCKER_MODE_CONDITIONAL : TUCKER_MODE_EXACT;
    tucker_outcome outcome = TUCKER_NOT_FOUND;
    unsigned mask = 0;
    check(tucker_find_type(m, static_cast<tucker_kind>(std::stoi(mt[1])), &opts, &outcome, &mask, &raw));
    if (outcome == TUCKER_SUPERSEDED) t.result = "superseded:" + kinds_of_mask(mask);
  }
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  WitnessPtr w(raw);
  if (w)
    t.result = type_name(w.get()) + "/" + std::to_string(tucker_witness_size(w.get()));
  else if (t.result.empty())
    t.result = "none";
  return t;
}

int run_bench(const std::string& spec, const std::vector<std::size_t>& sizes, int reps,
              const std::string& detectors, const Settings& s) {
  if (reps < 1) throw CliError{"--reps must be at least 1"};
  const GeneratorSpec g = parse_generator(spec);
  std::vector<std::string> dets;
  std::stringstream ss(detectors);
  for (std::string d; std::getline(ss, d, ',');)
    if (!d.empty()) dets.push_back(d);
  std::vector<std::optional<std::size_t>> points;
  for (auto sz : sizes) points.emplace_back(sz);
  if (points.empty()) points.emplace_back(std::nullopt);

  std::cout << "generator,size,rep,detector,rows,cols,ones,seconds,result\n";
  for (const auto& size : points) {
    std::vector<std::vector<double>> times(dets.size());
    std::vector<std::string> shape(dets.size());
    for (int rep = 0; rep < reps; ++rep) {
      const std::uint64_t seed = (g.kind == "random" ? g.seed : s.seed) + static_cast<std::uint64_t>(rep);
      auto m = instantiate(g, size, seed);
      size_t ones = 0;
      check(tucker_matrix_stats(m.get(), &ones, nullptr));
      char head[128];
      std::snprintf(head, sizeof head, "%zu,%zu,%zu", tucker_matrix_rows(m.get()), tucker_matrix_cols(m.get()), ones);
      for (std::size_t d = 0; d < dets.size(); ++d) {
        const Timed t = run_detector(dets[d], m.get(), s);
        times[d].push_back(t.seconds);
        shape[d] = head;
        std::printf("%s,%s,%d,%s,%s,%.6f,%s\n", g.kind.c_str(), size ? std::to_string(*size).c_str() : "-", rep,
                    dets[d].c_str(), head, t.seconds, t.result.c_str());
      }
    }
    for (std::size_t d = 0; d < dets.size(); ++d) {
      auto v = times[d];
      std::sort(v.begin(), v.end());
      const double med = v.size() % 2 ? v[v.size() / 2] : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
      std::printf("%s,%s,median,%s,%s,%.6f,\n", g.kind.c_str(), size ? std::to_string(*size).c_str() : "-",
                  dets[d].c_str(), shape[d].c_str(), med);
    }
  }
  std::fflush(stdout);
  return kExitOk;
}

int run_generate(const std::string& spec, const Settings& s) {
  const GeneratorSpec g = parse_generator(spec);
  auto m = instantiate(g, std::nullopt, g.kind == "random" ? g.seed : s.seed);
  char* text = nullptr;
  check(tucker_matrix_serialize(m.get(), to_format(s.format), &text));
  std::cout << take(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consecutive ones testing and minimum Tucker obstructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tucker_version()));

  Settings s;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "Input/output matrix format")->check(CLI::IsMember({"dense", "sparse"}));
    sub->add_flag("--json", s.json, "Print JSON");
    sub->add_option("--workers", s.workers, "Worker threads; output does not depend on it")
        ->check(CLI::Range(1, 1024));
  };

  std::string path, type, spec, detectors = "min";
  bool per_type = false;
  int reps = 3;
  std::vector<std::size_t> sizes;

  auto* c_check = app.add_subcommand("check", "Decide C1P; exit 0 if C1P, 1 if not, 2 on error");
  c_check->add_option("matrix", path, "Matrix file")->required();
  c_check->add_option("--mode", s.mode, "Detectors for the global search")
      ->check(CLI::IsMember({"conditional", "exact"}));
  add_common(c_check);

  auto* c_min = app.add_subcommand("find-min", "Report a smallest Tucker obstruction");
  c_min->add_option("matrix", path, "Matrix file")->required();
  c_min->add_option("--mode", s.mode, "Detectors for the global search")
      ->check(CLI::IsMember({"conditional", "exact"}));
  add_common(c_min);

  auto* c_type = app.add_subcommand("find-type", "Run one per-type detector");
  c_type->add_option("matrix", path, "Matrix file")->required();
  c_type->add_option("--type", type, "I, III, IV or V")->required();
  c_type->add_option("--mode", s.mode, "exact or conditional")->check(CLI::IsMember({"conditional", "exact"}));
  add_common(c_type);

  auto* c_oracle = app.add_subcommand("oracle", "Brute-force answers for small matrices");
  c_oracle->add_option("matrix", path, "Matrix file")->required();
  c_oracle->add_flag("--per-type", per_type, "Smallest submatrix of every type");
  c_oracle->add_option("--oracle-bound", s.oracle_bound, "Largest side the enumeration accepts (default 7)")
      ->check(CLI::Range(1, 12));
  add_common(c_oracle);

  auto* c_bench = app.add_subcommand("bench", "Time detectors on generated instances (CSV)");
  c_bench->add_option("generator", spec, "random(m,n,density,seed) | planted(type,k,RxC) | pattern(type,k)")
      ->required();
  c_bench->add_option("--sizes", sizes, "Column counts (random), pad sizes (planted) or k (pattern)")
      ->delimiter(',');
  c_bench->add_option("--reps", reps, "Repetitions per size");
  c_bench->add_option("--detectors", detectors,
                      "Comma list of min, min-exact, triple, type1, type3, type3c, type4, type4c, type5, type5c");
  c_bench->add_option("--seed", s.seed, "Base seed for planted instances");
  c_bench->add_option("--workers", s.workers, "Worker threads")->check(CLI::Range(1, 1024));

  auto* c_gen = app.add_subcommand("generate", "Print a generated matrix");
  c_gen->add_option("generator", spec, "random(m,n,density,seed) | planted(type,k,RxC) | pattern(type,k)")
      ->required();
  c_gen->add_option("--seed", s.seed, "Seed for planted instances");
  c_gen->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"dense", "sparse"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (c_check->parsed()) return run_check(path, s, true);
    if (c_min->parsed()) return run_check(path, s, false);
    if (c_type->parsed()) return run_find_type(path, type, s);
    if (c_oracle->parsed()) return run_oracle(path, per_type, s);
    if (c_bench->parsed()) return run_bench(spec, sizes, reps, detectors, s);
    if (c_gen->parsed()) return run_generate(spec, s);
  } catch (const CliError& e) {
    std::cerr << "tucker: " << e.message << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "tucker: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
