#include "tamari/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>

#include "CLI11.hpp"
#include "tamari/census.hpp"
#include "tamari/classifiers.hpp"
#include "tamari/error.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/io.hpp"
#include "tamari/noncrossing.hpp"
#include "tamari/verify.hpp"

namespace tamari {

namespace {

// A bad flag value or unusable input; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_bound() {
  const char* raw = std::getenv(kMaxSizeEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultCensusBound;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > kMaxRelationSize) {
    throw UsageError(std::string(kMaxSizeEnv) + " must be an integer in 1.." +
                     std::to_string(kMaxRelationSize) + ", got '" + raw + "'");
  }
  return static_cast<int>(v);
}

void require_within(int n, int bound, const char* what) {
  if (n < 1 || n > bound) {
    throw UsageError(std::string(what) + " " + std::to_string(n) + " outside [1, " +
                     std::to_string(bound) + "]; raise it with --bound or " + kMaxSizeEnv);
  }
}

std::vector<Json> read_documents(const std::string& inline_input, std::istream& in) {
  std::vector<Json> docs;
  if (!inline_input.empty()) {
    docs.push_back(parse_json(inline_input));
    return docs;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    docs.push_back(parse_json(line));
  }
  if (docs.empty()) throw UsageError("no input: pass --input or JSON lines on stdin");
  return docs;
}

// Accepts either a poset object or an interval object.
IntervalPoset poset_or_interval(const Json& j) {
  if (j.is_object() && j.contains("lower")) return from_interval(interval_from_json(j));
  return poset_from_json(j);
}

Json classification(const IntervalPoset& p) {
  const StatPair s = stat(p);
  return Json{{"poset", poset_to_json(p)},
              {"exceptional", is_exceptional(p)},
              {"modern", is_modern(p)},
              {"new", is_new_ip(p)},
              {"infinitely_modern", is_infinitely_modern(p)},
              {"ir", s.ir},
              {"dr", s.dr}};
}

// ---- enumerate -------------------------------------------------------------

const std::vector<std::string> kFamilies{"all", "exceptional", "modern", "new",
                                         "infmodern", "nct", "ncp", "trees"};

void cmd_enumerate(int n, const std::string& family, std::ostream& out) {
  std::uint64_t count = 0;
  auto emit = [&](const Json& record) {
    out << record.dump() << '\n';
    ++count;
  };
  if (family == "nct") {
    for (const auto& t : enumerate_nct(n)) emit(Json{{"nct", nct_to_json(t)}});
  } else if (family == "ncp") {
    for (const auto& p : enumerate_ncp(n)) emit(Json{{"ncp", ncp_to_json(p)}});
  } else if (family == "trees") {
    for (const auto& t : enumerate_trees(n)) emit(Json{{"tree", tree_to_json(t)}});
  } else {
    for (const auto& p : enumerate_interval_posets(n)) {
      const TamariInterval interval = to_interval(p);
      const bool keep = family == "all" || (family == "exceptional" && is_exceptional(p)) ||
                        (family == "modern" && is_modern(p)) ||
                        (family == "new" && is_new_interval(interval)) ||
                        (family == "infmodern" && is_infinitely_modern(p));
      if (keep) emit(Json{{"poset", poset_to_json(p)}, {"interval", interval_to_json(interval)}});
    }
  }
  out << Json{{"count", count}, {"family", family}, {"size", n}}.dump() << '\n';
}

// ---- convert ---------------------------------------------------------------

const std::vector<std::string> kKinds{"interval", "poset", "nct", "ncp", "tree", "ncp-interval"};

bool poset_side(const std::string& kind) { return kind != "tree" && kind != "ncp"; }

IntervalPoset to_poset(const std::string& kind, const Json& j) {
  if (kind == "interval") return from_interval(interval_from_json(j));
  if (kind == "nct") return nct_to_poset(nct_from_json(j));
  if (kind == "ncp-interval") {
    const auto [lower, upper] = ncp_interval_from_json(j);
    return ncp_interval_to_ip(lower, upper);
  }
  return poset_from_json(j);
}

Json from_poset(const std::string& kind, const IntervalPoset& p) {
  if (kind == "interval") return interval_to_json(to_interval(p));
  if (kind == "nct") return nct_to_json(poset_to_nct(p));
  if (kind == "ncp-interval") {
    if (!is_exceptional(p)) {
      throw PreconditionError("NotExceptional", "only exceptional posets come from partitions");
    }
    const TamariInterval interval = to_interval(p);
    return ncp_interval_to_json(partition_of_tree(interval.lower()),
                                partition_of_tree(interval.upper()));
  }
  return poset_to_json(p);
}

Json convert_one(const std::string& from, const std::string& to, const Json& j) {
  if (poset_side(from) != poset_side(to)) {
    throw UsageError("no conversion from " + from + " to " + to);
  }
  if (poset_side(from)) return from_poset(to, to_poset(from, j));
  const BinaryTree t = from == "tree" ? tree_from_json(j.is_object() ? j.at("tree") : j)
                                      : tree_of_partition(ncp_from_json(j));
  if (to == "tree") return Json{{"tree", tree_to_json(t)}};
  return ncp_to_json(partition_of_tree(t));
}

// ---- verify ----------------------------------------------------------------

// "family:size=count".
void apply_override(GoldenCounts& golden, const std::string& text) {
  static const std::regex pattern(R"(([a-z_]+):(\d+)=(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw UsageError("--override-golden expects family:size=count, got '" + text + "'");
  }
  const auto it = golden.find(m[1].str());
  if (it == golden.end()) throw UsageError("unknown family '" + m[1].str() + "'");
  const auto size = std::stoul(m[2].str());
  if (size < 1 || size > it->second.size()) {
    throw UsageError("no stored golden for " + m[1].str() + " at size " + m[2].str());
  }
  it->second[size - 1] = std::stoull(m[3].str());
}

int cmd_verify(int max_size, const std::vector<std::string>& overrides, std::ostream& out) {
  GoldenCounts golden = golden_counts();
  for (const auto& o : overrides) apply_override(golden, o);
  const auto results = run_verification(max_size, golden);
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
      out << "PASS " << r.name << '\n';
    } else {
      out << "FAIL " << r.name << ": " << r.detail << '\n';
    }
  }
  out << "verify: " << passed << "/" << results.size() << " checks passed up to size "
      << max_size << '\n';
  return passed == results.size() ? kExitOk : kExitVerificationFailed;
}

// ---- export ----------------------------------------------------------------

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  file.flush();
  if (!file) throw UsageError("cannot write " + path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Tamari intervals and interval-posets", "tamari"};
  app.require_subcommand(1);
  int bound = 0;
  app.add_option("--bound", bound, "Largest size accepted for exhaustive work")
      ->check(CLI::Range(1, kMaxRelationSize));

  int size = 0;
  std::string family = "all";
  auto* enumerate = app.add_subcommand("enumerate", "Stream a family as JSON lines");
  enumerate->add_option("--size", size, "Size n")->required();
  enumerate->add_option("--family", family, "Family to list")
      ->check(CLI::IsMember(kFamilies));

  std::string input;
  int classify_size = 0;
  auto* classify = app.add_subcommand("classify", "Flags and (ir, dr) for posets");
  classify->add_option("--input", input, "One poset or interval as JSON (default: stdin)");
  classify->add_option("--size", classify_size, "Classify every poset of this size instead");

  std::string from;
  std::string to;
  auto* convert = app.add_subcommand("convert", "Apply a bijection");
  convert->add_option("--from", from, "Source kind")->required()->check(CLI::IsMember(kKinds));
  convert->add_option("--to", to, "Target kind")->required()->check(CLI::IsMember(kKinds));
  convert->add_option("--input", input, "One input document (default: stdin)");

  int max_size = 0;
  std::string format = "csv";
  auto* census_cmd = app.add_subcommand("census", "Counts per family against closed formulas");
  census_cmd->add_option("--max-size", max_size, "Largest size (default: the bound)");
  census_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> overrides;
  auto* verify = app.add_subcommand("verify", "Run every cross-check");
  verify->add_option("--max-size", max_size, "Largest size (default: the bound)");
  verify->add_option("--override-golden", overrides,
                     "Replace a stored count, as family:size=count (fault injection)");

  std::string export_format;
  std::string diagram = "arc";
  std::string output = "-";
  int census_size = 0;
  auto* export_cmd = app.add_subcommand("export", "Write DOT, JSON or CSV");
  export_cmd->add_option("--format", export_format, "dot, json or csv")
      ->required()
      ->check(CLI::IsMember({"dot", "json", "csv"}));
  export_cmd->add_option("--diagram", diagram, "arc or hasse (dot only)")
      ->check(CLI::IsMember({"arc", "hasse"}));
  export_cmd->add_option("--input", input, "Poset or interval JSON (default: stdin)");
  export_cmd->add_option("--census", census_size, "Export the census up to this size");
  export_cmd->add_option("-o,--output", output, "Output path, - for stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bound == 0) bound = default_bound();

    if (*enumerate) {
      require_within(size, bound, "size");
      cmd_enumerate(size, family, out);
      return kExitOk;
    }
    if (*classify) {
      if (classify_size != 0) {
        require_within(classify_size, bound, "size");
        for (const auto& p : enumerate_interval_posets(classify_size)) {
          out << classification(p).dump() << '\n';
        }
      } else {
        for (const auto& doc : read_documents(input, in)) {
          out << classification(poset_or_interval(doc)).dump() << '\n';
        }
      }
      return kExitOk;
    }
    if (*convert) {
      for (const auto& doc : read_documents(input, in)) {
        out << convert_one(from, to, doc).dump() << '\n';
      }
      return kExitOk;
    }
    if (*census_cmd) {
      const int top = max_size == 0 ? bound : max_size;
      require_within(top, bound, "max size");
      std::vector<CensusRow> rows;
      bool ok = true;
      for (int n = 1; n <= top; ++n) {
        rows.push_back(census(n, bound));
        ok = ok && rows.back().mismatches().empty();
      }
      out << (format == "json" ? census_json(rows).dump(2) + "\n" : census_csv(rows));
      return ok ? kExitOk : kExitVerificationFailed;
    }
    if (*verify) {
      const int top = max_size == 0 ? bound : max_size;
      require_within(top, bound, "max size");
      return cmd_verify(top, overrides, out);
    }
    if (*export_cmd) {
      std::string text;
      if (census_size != 0) {
        if (export_format == "dot") throw UsageError("--census exports csv or json");
        require_within(census_size, bound, "census size");
        std::vector<CensusRow> rows;
        for (int n = 1; n <= census_size; ++n) rows.push_back(census(n, bound));
        text = export_format == "csv" ? census_csv(rows) : census_json(rows).dump(2) + "\n";
      } else {
        if (export_format == "csv") throw UsageError("csv export needs --census N");
        const auto docs = read_documents(input, in);
        for (const auto& doc : docs) {
          const IntervalPoset p = poset_or_interval(doc);
          if (export_format == "json") {
            text += poset_to_json(p).dump() + "\n";
          } else {
            text += diagram == "hasse" ? hasse_dot(p) : arc_diagram_dot(p);
          }
        }
      }
      write_output(output, text, out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tamari
