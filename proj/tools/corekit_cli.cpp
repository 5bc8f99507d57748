// corekit command-line front end. Talks to the library only through corekit.h.

#include <corekit/corekit.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Exit codes are part of the CLI contract.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDomain = 4;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(corekit_status s) {
  switch (s) {
    case COREKIT_OK: return kExitOk;
    case COREKIT_ERR_PARSE:
    case COREKIT_ERR_NON_POSITIVE_PART: return kExitParse;
    case COREKIT_ERR_INVALID_ARGUMENT:
    case COREKIT_ERR_NOT_DISTINCT_ODD:
    case COREKIT_ERR_NOT_SELF_CONJUGATE:
    case COREKIT_ERR_BOX_OUT_OF_DIAGRAM:
    case COREKIT_ERR_INVALID_MODULUS:
    case COREKIT_ERR_PRECONDITION: return kExitPrecondition;
    case COREKIT_ERR_NON_NEGATIVE_ARGUMENT:
    case COREKIT_ERR_NON_INTEGRAL:
    case COREKIT_ERR_OUT_OF_RANGE: return kExitDomain;
    case COREKIT_ERR_INTERNAL: break;
  }
  return kExitFailure;
}

void check(corekit_status s) {
  if (s != COREKIT_OK) throw CliError{exit_code_for(s), std::string(corekit_status_name(s)) + ": " + corekit_last_error()};
}

struct PartitionDeleter {
  void operator()(corekit_partition* p) const { corekit_partition_free(p); }
};
struct HookTableDeleter {
  void operator()(corekit_hook_table* t) const { corekit_hook_table_free(t); }
};
struct StringDeleter {
  void operator()(char* s) const { corekit_string_free(s); }
};
using PartitionPtr = std::unique_ptr<corekit_partition, PartitionDeleter>;
using HookTablePtr = std::unique_ptr<corekit_hook_table, HookTableDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

PartitionPtr parse_partition(const std::string& text) {
  corekit_partition* raw = nullptr;
  check(corekit_partition_parse(text.c_str(), &raw));
  return PartitionPtr(raw);
}

std::string take(char* s) {
  StringPtr owned(s);
  return owned.get();
}

unsigned threads_from_env() {
  const char* env = std::getenv("COREKIT_THREADS");
  if (!env || !*env) return 0;
  try {
    return static_cast<unsigned>(std::max(1, std::stoi(env)));
  } catch (const std::exception&) {
    throw CliError{kExitParse, std::string("COREKIT_THREADS is not a number: ") + env};
  }
}

std::string box_text(corekit_box b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

// ---- hooks -----------------------------------------------------------------

struct HooksArgs {
  std::string partition;
  bool json = false;
};

int run_hooks(const HooksArgs& args) {
  auto p = parse_partition(args.partition);
  corekit_hook_table* raw = nullptr;
  check(corekit_hook_table_create(p.get(), &raw));
  HookTablePtr table(raw);
  if (args.json) {
    char* json = nullptr;
    check(corekit_hook_table_json(table.get(), &json));
    std::cout << take(json) << "\n";
    return kExitOk;
  }
  std::vector<std::vector<int32_t>> rows(corekit_hook_table_rows(table.get()));
  std::size_t width = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto len = corekit_hook_table_row_length(table.get(), i + 1);
    for (std::size_t j = 0; j < len; ++j) {
      int32_t h = 0;
      check(corekit_hook_table_at(table.get(), static_cast<int32_t>(i + 1), static_cast<int32_t>(j + 1), &h));
      rows[i].push_back(h);
      width = std::max(width, std::to_string(h).size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string cell = std::to_string(row[j]);
      if (j > 0) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    std::cout << line << "\n";
  }
  return kExitOk;
}

// ---- iscore ----------------------------------------------------------------

struct IsCoreArgs {
  std::string partition;
  int t = 0;
  std::string method = "naive";
  bool json = false;
};

int run_iscore(const IsCoreArgs& args) {
  auto p = parse_partition(args.partition);
  const corekit_core_method method = args.method == "sc" ? COREKIT_METHOD_SC : COREKIT_METHOD_NAIVE;
  int is_core = 0;
  corekit_box box{};
  int32_t hook = 0;
  check(corekit_is_t_core(p.get(), args.t, method, &is_core, &box, &hook));
  // Hooks of a symmetric diagram are symmetric; report the lower-triangle box.
  if (!is_core && corekit_partition_is_self_conjugate(p.get()) && box.row < box.col) std::swap(box.row, box.col);
  if (args.json) {
    nlohmann::json out{{"t", args.t}, {"method", args.method}, {"t_core", is_core == 1}};
    if (!is_core) out["witness"] = {{"row", box.row}, {"col", box.col}, {"hook", hook}};
    std::cout << out.dump() << "\n";
  } else if (is_core) {
    std::cout << "t-core\n";
  } else {
    std::cout << "not t-core " << box_text(box) << " hook=" << hook << "\n";
  }
  return kExitOk;
}

// ---- count -----------------------------------------------------------------

struct CountArgs {
  int t = 0;
  int n_max = 0;
  bool compare = false;
  bool json = false;
};

int run_count(const CountArgs& args) {
  if (args.n_max < 1) throw CliError{kExitPrecondition, "--n-max must be at least 1"};
  std::vector<uint64_t> brute(static_cast<std::size_t>(args.n_max) + 1);
  check(corekit_sc_counts_bruteforce(args.n_max, args.t, brute.data(), brute.size()));
  const bool has_formula = args.t == 2 || args.t == 3 || args.t == 7;
  const bool has_ono_raji = args.t == 7;

  bool mismatch = false;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream tsv;
  tsv << "n\tbruteforce";
  if (has_formula) tsv << "\tformula";
  if (has_ono_raji) tsv << "\tono_raji";
  tsv << "\n";
  for (int n = 1; n <= args.n_max; ++n) {
    const uint64_t b = brute[static_cast<std::size_t>(n)];
    nlohmann::json row{{"n", n}, {"bruteforce", b}};
    tsv << n << "\t" << b;
    if (has_formula) {
      uint64_t f = 0;
      check(corekit_sc_count_formula(n, args.t, &f));
      row["formula"] = f;
      tsv << "\t" << f;
      mismatch = mismatch || f != b;
    }
    if (has_ono_raji) {
      uint64_t o = 0;
      const corekit_status s = corekit_sc7_ono_raji(n, &o);
      if (s == COREKIT_OK) {
        row["ono_raji"] = o;
        tsv << "\t" << o;
        mismatch = mismatch || o != b;
      } else if (s == COREKIT_ERR_PRECONDITION) {
        row["ono_raji"] = nullptr;
        tsv << "\tNA";
      } else {
        check(s);
      }
    }
    tsv << "\n";
    rows.push_back(std::move(row));
  }
  if (args.json) {
    std::cout << nlohmann::json{{"t", args.t}, {"rows", rows}}.dump() << "\n";
  } else {
    std::cout << tsv.str();
  }
  if (args.compare && mismatch) {
    std::cerr << "formula and brute force disagree\n";
    return kExitFailure;
  }
  return kExitOk;
}

// ---- hurwitz ---------------------------------------------------------------

int run_hurwitz(const std::string& text) {
  int64_t num = 0, den = 1, hn = 0, hd = 1;
  check(corekit_parse_rational(text.c_str(), &num, &den));
  check(corekit_hurwitz(num, den, &hn, &hd));
  std::cout << hn;
  if (hd != 1) std::cout << "/" << hd;
  std::cout << "\n";
  return kExitOk;
}

// ---- supernorm -------------------------------------------------------------

struct SupernormArgs {
  std::optional<std::string> partition;
  std::optional<std::string> invert;
  std::optional<int> core_set;
  int t = 7;
};

int run_supernorm(const SupernormArgs& args) {
  const int modes = (args.partition ? 1 : 0) + (args.invert ? 1 : 0) + (args.core_set ? 1 : 0);
  if (modes != 1) throw CliError{kExitParse, "give exactly one of PARTITION, --invert N, --core-set N"};
  if (args.invert) {
    corekit_partition* raw = nullptr;
    check(corekit_supernorm_inverse(args.invert->c_str(), &raw));
    PartitionPtr p(raw);
    char* text = nullptr;
    check(corekit_partition_format(p.get(), &text));
    std::cout << take(text) << "\n";
  } else if (args.core_set) {
    char* json = nullptr;
    check(corekit_t_core_supernorm_set(*args.core_set, args.t, &json));
    std::cout << take(json) << "\n";
  } else {
    auto p = parse_partition(*args.partition);
    char* value = nullptr;
    check(corekit_supernorm(p.get(), &value));
    std::cout << take(value) << "\n";
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int n_max = 40;
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  nlohmann::json results = nlohmann::json::array();
  auto callback = [](const char* name, int passed, const char* detail, void* user) {
    static_cast<nlohmann::json*>(user)->push_back({{"name", name}, {"passed", passed == 1}, {"detail", detail}});
  };
  int all_passed = 0;
  check(corekit_verify(args.suite.c_str(), args.n_max, threads_from_env(), callback, &results, &all_passed));
  if (args.json) {
    std::cout << nlohmann::json{{"suite", args.suite}, {"n_max", args.n_max}, {"passed", all_passed == 1}, {"checks", results}}.dump()
              << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r["passed"].get<bool>() ? "PASS " : "FAIL ") << r["name"].get<std::string>() << "  "
                << r["detail"].get<std::string>() << "\n";
    }
  }
  return all_passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hook lengths, t-cores and class-number counts for self-conjugate partitions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", corekit_version());

  HooksArgs hooks;
  auto* hooks_cmd = app.add_subcommand("hooks", "Print the hook length of every box");
  hooks_cmd->add_option("partition", hooks.partition, "e.g. 7,5,4,4,2,1,1 or 1^2,3")->required();
  hooks_cmd->add_flag("--json", hooks.json, "Array of rows");

  IsCoreArgs iscore;
  auto* iscore_cmd = app.add_subcommand("iscore", "Decide whether a partition is a t-core");
  iscore_cmd->add_option("partition", iscore.partition)->required();
  iscore_cmd->add_option("--t", iscore.t)->required();
  iscore_cmd->add_option("--method", iscore.method)->check(CLI::IsMember({"naive", "sc"}));
  iscore_cmd->add_flag("--json", iscore.json);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Tabulate self-conjugate t-core counts");
  count_cmd->add_option("--t", count.t)->required();
  count_cmd->add_option("--n-max", count.n_max)->required();
  count_cmd->add_flag("--compare", count.compare, "Exit 1 if any formula disagrees with brute force");
  count_cmd->add_flag("--json", count.json);

  std::string hurwitz_arg;
  auto* hurwitz_cmd = app.add_subcommand("hurwitz", "Hurwitz class number H(x) for rational x < 0");
  hurwitz_cmd->add_option("value", hurwitz_arg, "e.g. -23 or -36/7")->required()->allow_extra_args(false);

  SupernormArgs supernorm;
  auto* supernorm_cmd = app.add_subcommand("supernorm", "Supernorm of a partition, or its inverse");
  supernorm_cmd->add_option("partition", supernorm.partition);
  supernorm_cmd->add_option("--invert", supernorm.invert, "Positive integer to factor back into a partition");
  supernorm_cmd->add_option("--core-set", supernorm.core_set, "Supernorms of distinct-odd partitions of N with t-core partners");
  supernorm_cmd->add_option("--t", supernorm.t, "Modulus for --core-set (default 7)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run exhaustive property sweeps");
  verify_cmd->add_option("--suite", verify.suite)->check(CLI::IsMember({"hooks", "bijection", "sc7", "supernorm", "all"}));
  verify_cmd->add_option("--n-max", verify.n_max);
  verify_cmd->add_flag("--json", verify.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*hooks_cmd) return run_hooks(hooks);
    if (*iscore_cmd) return run_iscore(iscore);
    if (*count_cmd) return run_count(count);
    if (*hurwitz_cmd) return run_hurwitz(hurwitz_arg);
    if (*supernorm_cmd) return run_supernorm(supernorm);
    if (*verify_cmd) return run_verify(verify);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitFailure;
}
