#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "torsq/curve.hpp"
#include "torsq/square.hpp"
#include "torsq/square_json.hpp"

using namespace torsq;

namespace {

// exit codes: 0 magic / hit, 1 negative verdict, 2 parameter rejection,
// 3 torsion/group failure, 4 malformed input
constexpr int kExitNegative = 1;
constexpr int kExitParameter = 2;
constexpr int kExitGroup = 3;
constexpr int kExitIo = 4;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kGroup:
      return kExitGroup;
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kDomain:
    case ErrorKind::kParameter:
    case ErrorKind::kResource:
      return kExitParameter;
  }
  return kExitIo;
}

struct GroupOptions {
  std::string group = "product";
  std::string curve_spec;
  std::int64_t enum_limit = 0;  // 0: TORSQ_ENUM_LIMIT env or default
};

std::int64_t resolve_enum_limit(const GroupOptions& opt) {
  if (opt.enum_limit > 0) return opt.enum_limit;
  if (const char* env = std::getenv("TORSQ_ENUM_LIMIT")) {
    char* end = nullptr;
    long long value = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || value < 1) {
      throw Error(ErrorKind::kParameter,
                  std::string("bad TORSQ_ENUM_LIMIT '") + env + "'");
    }
    return value;
  }
  return kDefaultEnumerationLimit;
}

Curve curve_from_flag(const GroupOptions& opt) {
  try {
    return parse_curve_spec(opt.curve_spec, resolve_enum_limit(opt));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kIo) {
      throw Error(ErrorKind::kParameter, e.what());
    }
    throw;
  }
}

TorsionBasis resolve_basis(const GroupOptions& opt, std::int64_t n) {
  if (opt.group == "product") return make_product_group(n);
  if (opt.group == "symbolic3") {
    if (n != 3) {
      throw Error(ErrorKind::kParameter,
                  "the symbolic 3-torsion group requires --n 3");
    }
    return make_symbolic_3torsion();
  }
  if (opt.group == "curve") {
    if (opt.curve_spec.empty()) {
      throw Error(ErrorKind::kParameter,
                  "--curve p,a4,a6 is required with --group curve");
    }
    return find_torsion_basis(curve_from_flag(opt), n);
  }
  throw Error(ErrorKind::kParameter,
              "unknown group '" + opt.group +
                  "' (expected product, curve or symbolic3)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// N lines of N whitespace-separated integers.
std::vector<std::vector<std::int64_t>> read_int_grid(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<std::int64_t>> grid;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::int64_t> row;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw Error(ErrorKind::kIo, path + ":" + std::to_string(lineno) +
                                        ": bad integer '" + token + "'");
      }
    }
    if (!row.empty()) grid.push_back(std::move(row));
  }
  if (grid.empty()) {
    throw Error(ErrorKind::kIo, path + ": empty grid");
  }
  return grid;
}

void require_label_permutation(
    const std::vector<std::vector<std::int64_t>>& grid,
    const std::string& path) {
  auto n = static_cast<std::int64_t>(grid.size());
  std::vector<bool> present(static_cast<std::size_t>(n * n), false);
  for (const auto& row : grid) {
    if (static_cast<std::int64_t>(row.size()) != n) {
      throw Error(ErrorKind::kIo,
                  path + ": expected " + std::to_string(n) + " entries per line");
    }
    for (auto label : row) {
      if (label < 1 || label > n * n ||
          present[static_cast<std::size_t>(label - 1)]) {
        throw Error(ErrorKind::kIo,
                    path + ": labels are not a permutation of 1.." +
                        std::to_string(n * n));
      }
      present[static_cast<std::size_t>(label - 1)] = true;
    }
  }
}

std::string render_label_grid(
    const std::vector<std::vector<std::int64_t>>& labels) {
  std::size_t width = 0;
  for (const auto& row : labels) {
    for (auto v : row) width = std::max(width, std::to_string(v).size());
  }
  std::ostringstream out;
  for (const auto& row : labels) {
    for (std::size_t col = 0; col < row.size(); ++col) {
      auto text = std::to_string(row[col]);
      if (col > 0) out << ' ';
      out << std::string(width - text.size(), ' ') << text;
    }
    out << '\n';
  }
  return out.str();
}

int report_and_render(const MagicSquare& sq, const std::string& format,
                      const std::string& labels) {
  auto report = verify_square(sq);
  if (format == "json") {
    std::cout << square_to_json_text(sq);
  } else if (labels == "classic") {
    std::cout << render_label_grid(to_classic_labels(sq, sq.basis));
  } else {
    std::cout << render_square_text(sq);
  }
  std::cerr << render_report_text(report, *sq.basis.group);
  return report.is_magic ? 0 : kExitNegative;
}

struct SquareOptions {
  std::int64_t n = 3;
  std::int64_t a = 1, b = -1, c = -1, d = 2;
  std::int64_t x1 = 0, y1 = 0;  // 0: center of the grid
  GroupOptions group;
  std::string format = "text";
  std::string labels = "element";
};

int cmd_square(const SquareOptions& opt) {
  StepParams params{opt.n, opt.a, opt.b, opt.c, opt.d,
                    opt.x1 > 0 ? opt.x1 : (opt.n + 1) / 2,
                    opt.y1 > 0 ? opt.y1 : (opt.n + 1) / 2};
  if (auto check = validate_params(params); !check) {
    std::cerr << "parameter rejected: " << check.reason << '\n';
    return kExitParameter;
  }
  auto basis = resolve_basis(opt.group, opt.n);
  if (auto check = verify_basis(basis); !check) {
    std::cerr << "basis rejected: " << check.witness << '\n';
    return kExitGroup;
  }
  return report_and_render(build_square(params, basis), opt.format,
                           opt.labels);
}

struct TorsionOptions {
  std::int64_t n = 3;
  GroupOptions group;
};

int cmd_torsion(const TorsionOptions& opt) {
  auto curve = curve_from_flag(opt.group);
  auto points = enumerate_points(curve);
  auto torsion = torsion_subgroup(curve, opt.n);
  std::cout << curve.equation() << '\n';
  std::cout << "group order " << points.size() << '\n';
  std::cout << opt.n << "-torsion points (" << torsion.size() << "):\n";
  auto group = make_curve_group(curve);
  for (const auto& pt : torsion) {
    std::cout << "  " << group->label(CurveGroup::to_element(pt)) << '\n';
  }
  auto basis = find_torsion_basis(curve, opt.n);
  std::cout << "basis P = " << basis.group->label(basis.p)
            << "  Q = " << basis.group->label(basis.q) << '\n';
  std::cout << "index table:\n";
  for (std::int64_t k = 1; k <= opt.n * opt.n; ++k) {
    auto coords = index_to_pair(k, opt.n);
    std::cout << "  " << k << " -> (" << coords.m.value() << ','
              << coords.n.value() << ") -> "
              << basis.group->label(element_for_index(basis, k)) << '\n';
  }
  return 0;
}

struct VerifyOptions {
  std::string path;
  GroupOptions group;  // enumeration limit only
};

int cmd_verify(const VerifyOptions& opt) {
  MagicSquare sq;
  try {
    sq = square_from_json_text(read_file(opt.path),
                               resolve_enum_limit(opt.group));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kResource) throw;
    std::cerr << "invalid document: " << e.what() << '\n';
    return kExitIo;
  }
  auto report = verify_square(sq);
  std::cout << render_report_text(report, *sq.basis.group);
  return report.is_magic ? 0 : kExitNegative;
}

struct SearchOptions {
  std::string path;
  std::int64_t max_n = 10;
};

int cmd_search(const SearchOptions& opt) {
  auto grid = read_int_grid(opt.path);
  require_label_permutation(grid, opt.path);
  auto found = reverse_search(grid, opt.max_n);
  if (!found) {
    std::cout << "not uniform-step generable\n";
    return kExitNegative;
  }
  std::cout << "a=" << found->a << " b=" << found->b << " c=" << found->c
            << " d=" << found->d << " x1=" << found->x1 << " y1=" << found->y1
            << '\n';
  return 0;
}

struct LatinOptions {
  std::string path;
  GroupOptions group;
  std::string format = "text";
  std::string labels = "element";
};

int cmd_latin(const LatinOptions& opt) {
  auto grid = read_int_grid(opt.path);
  auto n = static_cast<std::int64_t>(grid.size());
  LatinSquare latin{n, {}};
  latin.entries.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : grid) {
    if (static_cast<std::int64_t>(row.size()) != n) {
      throw Error(ErrorKind::kIo,
                  opt.path + ": expected " + std::to_string(n) +
                      " entries per line");
    }
    latin.entries.insert(latin.entries.end(), row.begin(), row.end());
  }
  if (auto check = validate_latin(latin); !check) {
    std::cerr << "latin square rejected: " << check.reason << '\n';
    return kExitParameter;
  }
  auto basis = resolve_basis(opt.group, n);
  return report_and_render(latin_to_square(latin, basis), opt.format,
                           opt.labels);
}

void add_group_options(CLI::App* cmd, GroupOptions* opt,
                       bool with_group = true) {
  if (with_group) {
    cmd->add_option("--group", opt->group,
                    "backing group: product, curve or symbolic3")
        ->default_str("product");
  }
  cmd->add_option("--curve", opt->curve_spec,
                  "curve descriptor p,a4,a6 (decimal)");
  cmd->add_option("--enum-limit", opt->enum_limit,
                  "largest prime accepted for point enumeration "
                  "(default: TORSQ_ENUM_LIMIT or 50021)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "semi-magic squares whose entries are the N-torsion of a finite "
      "abelian group, built with the uniform step method"};
  app.require_subcommand(1);

  SquareOptions square_opt;
  auto* square_cmd =
      app.add_subcommand("square", "build and verify an N x N square");
  square_cmd->add_option("--n", square_opt.n, "grid order (odd)")->required();
  square_cmd->add_option("--a", square_opt.a, "step coefficient a");
  square_cmd->add_option("--b", square_opt.b, "step coefficient b");
  square_cmd->add_option("--c", square_opt.c, "step coefficient c");
  square_cmd->add_option("--d", square_opt.d, "step coefficient d");
  square_cmd->add_option("--x1", square_opt.x1,
                         "start column (default: center)");
  square_cmd->add_option("--y1", square_opt.y1, "start row (default: center)");
  add_group_options(square_cmd, &square_opt.group);
  square_cmd->add_option("--format", square_opt.format, "text or json");
  square_cmd->add_option("--labels", square_opt.labels,
                         "text cells: element or classic (indices 1..N^2)");

  TorsionOptions torsion_opt;
  auto* torsion_cmd = app.add_subcommand(
      "torsion", "list the N-torsion of a curve and a basis for it");
  torsion_cmd->add_option("--n", torsion_opt.n, "torsion order")->required();
  add_group_options(torsion_cmd, &torsion_opt.group, false);
  torsion_cmd->get_option("--curve")->required();

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand(
      "verify", "re-verify a square from its JSON document");
  verify_cmd->add_option("file", verify_opt.path, "square document")
      ->required();
  verify_cmd->add_option("--enum-limit", verify_opt.group.enum_limit,
                         "largest prime accepted for point enumeration");

  SearchOptions search_opt;
  auto* search_cmd = app.add_subcommand(
      "search", "find uniform-step parameters reproducing a labeled grid");
  search_cmd->add_option("file", search_opt.path,
                         "grid file: N lines of N integers")
      ->required();
  search_cmd->add_option("--max-n", search_opt.max_n, "search size limit");

  LatinOptions latin_opt;
  auto* latin_cmd = app.add_subcommand(
      "latin", "build a square from a Latin-square file");
  latin_cmd->add_option("file", latin_opt.path,
                        "Latin square file: N lines of N residues mod N")
      ->required();
  add_group_options(latin_cmd, &latin_opt.group);
  latin_cmd->add_option("--format", latin_opt.format, "text or json");
  latin_cmd->add_option("--labels", latin_opt.labels,
                        "text cells: element or classic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameter;
  }

  try {
    if (square_cmd->parsed()) return cmd_square(square_opt);
    if (torsion_cmd->parsed()) return cmd_torsion(torsion_opt);
    if (verify_cmd->parsed()) return cmd_verify(verify_opt);
    if (search_cmd->parsed()) return cmd_search(search_opt);
    if (latin_cmd->parsed()) return cmd_latin(latin_opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitParameter;
}
