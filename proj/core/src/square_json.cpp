#include "torsq/square_json.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace torsq {

namespace {

using nlohmann::json;

json group_to_json(const AbelianGroup& group) {
  json j;
  j["kind"] = group.kind();
  if (auto* curve_group = dynamic_cast<const CurveGroup*>(&group)) {
    const auto& curve = curve_group->curve();
    j["p"] = curve.field().p();
    j["a4"] = curve.a4();
    j["a6"] = curve.a6();
  }
  return j;
}

const json& require_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw Error(ErrorKind::kIo,
                std::string("field '") + name + "' missing");
  }
  return *it;
}

std::int64_t require_int(const json& j, const char* name) {
  const auto& field = require_field(j, name);
  if (!field.is_number_integer()) {
    throw Error(ErrorKind::kIo,
                std::string("field '") + name + "' must be an integer");
  }
  return field.get<std::int64_t>();
}

std::shared_ptr<const AbelianGroup> group_from_json(const json& j,
                                                    std::int64_t n,
                                                    std::int64_t limit) {
  const auto& kind_field = require_field(j, "kind");
  if (!kind_field.is_string()) {
    throw Error(ErrorKind::kIo, "field 'kind' must be a string");
  }
  auto kind = kind_field.get<std::string>();
  if (kind == "product") {
    return make_product_group(n).group;
  }
  if (kind == "symbolic") {
    if (n != 3) {
      throw Error(ErrorKind::kIo, "the symbolic group requires n = 3");
    }
    return make_symbolic_3torsion().group;
  }
  if (kind == "curve") {
    auto p = require_int(j, "p");
    auto a4 = require_int(j, "a4");
    auto a6 = require_int(j, "a6");
    return make_curve_group(Curve(PrimeField(p, std::max(limit, p)), a4, a6));
  }
  throw Error(ErrorKind::kIo, "unknown group kind '" + kind + "'");
}

}  // namespace

std::string square_to_json_text(const MagicSquare& sq) {
  const auto& g = *sq.basis.group;
  json j;
  j["n"] = sq.n;
  j["group"] = group_to_json(g);
  j["basis"] = json::array({g.label(sq.basis.p), g.label(sq.basis.q)});
  if (sq.params) {
    j["params"] = {{"a", sq.params->a},   {"b", sq.params->b},
                   {"c", sq.params->c},   {"d", sq.params->d},
                   {"x1", sq.params->x1}, {"y1", sq.params->y1}};
  } else {
    j["params"] = nullptr;
  }
  json cells = json::array();
  for (const auto& cell : sq.cells) {
    cells.push_back(g.label(cell));
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

MagicSquare square_from_json_text(const std::string& text,
                                  std::int64_t limit) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kIo, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorKind::kIo, "document must be a JSON object");
  }

  MagicSquare sq;
  sq.n = require_int(j, "n");
  if (sq.n < 1) {
    throw Error(ErrorKind::kIo, "field 'n' must be >= 1");
  }

  const auto& group_field = require_field(j, "group");
  if (!group_field.is_object()) {
    throw Error(ErrorKind::kIo, "field 'group' must be an object");
  }
  auto group = group_from_json(group_field, sq.n, limit);

  const auto& basis_field = require_field(j, "basis");
  if (!basis_field.is_array() || basis_field.size() != 2 ||
      !basis_field[0].is_string() || !basis_field[1].is_string()) {
    throw Error(ErrorKind::kIo,
                "field 'basis' must be an array of two element strings");
  }
  sq.basis.n = sq.n;
  sq.basis.group = group;
  sq.basis.p = group->parse(basis_field[0].get<std::string>());
  sq.basis.q = group->parse(basis_field[1].get<std::string>());

  const auto& params_field = require_field(j, "params");
  if (params_field.is_null()) {
    sq.params = std::nullopt;
  } else if (params_field.is_object()) {
    StepParams p;
    p.n = sq.n;
    p.a = require_int(params_field, "a");
    p.b = require_int(params_field, "b");
    p.c = require_int(params_field, "c");
    p.d = require_int(params_field, "d");
    p.x1 = require_int(params_field, "x1");
    p.y1 = require_int(params_field, "y1");
    sq.params = p;
  } else {
    throw Error(ErrorKind::kIo, "field 'params' must be an object or null");
  }

  const auto& cells_field = require_field(j, "cells");
  if (!cells_field.is_array()) {
    throw Error(ErrorKind::kIo, "field 'cells' must be an array");
  }
  if (static_cast<std::int64_t>(cells_field.size()) != sq.n * sq.n) {
    throw Error(ErrorKind::kIo,
                "field 'cells' has " + std::to_string(cells_field.size()) +
                    " entries, expected n^2 = " + std::to_string(sq.n * sq.n));
  }
  sq.cells.reserve(cells_field.size());
  for (const auto& cell : cells_field) {
    if (!cell.is_string()) {
      throw Error(ErrorKind::kIo, "cells must be element strings");
    }
    sq.cells.push_back(group->parse(cell.get<std::string>()));
  }
  return sq;
}

std::string render_square_text(const MagicSquare& sq) {
  const auto& g = *sq.basis.group;
  std::vector<std::string> labels;
  labels.reserve(sq.cells.size());
  std::size_t width = 0;
  for (const auto& cell : sq.cells) {
    labels.push_back(g.label(cell));
    width = std::max(width, labels.back().size());
  }
  std::ostringstream out;
  for (std::int64_t row = 0; row < sq.n; ++row) {
    for (std::int64_t col = 0; col < sq.n; ++col) {
      const auto& label =
          labels[static_cast<std::size_t>(row * sq.n + col)];
      if (col > 0) out << ' ';
      out << std::string(width - label.size(), ' ') << label;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_report_text(const VerifyReport& report,
                               const AbelianGroup& group) {
  std::ostringstream out;
  out << "permutation of the N-torsion: "
      << (report.is_permutation ? "yes" : "no") << '\n';
  auto print_sums = [&](const char* what,
                        const std::vector<GroupElement>& sums) {
    out << what << ':';
    for (const auto& s : sums) out << ' ' << group.label(s);
    out << '\n';
  };
  print_sums("row sums (top to bottom)", report.row_sums);
  print_sums("column sums (left to right)", report.col_sums);
  auto identity = group.identity();
  for (std::size_t i = 0; i < report.row_sums.size(); ++i) {
    if (!group.eq(report.row_sums[i], identity)) {
      out << "  row " << (i + 1) << " sum " << group.label(report.row_sums[i])
          << " differs from " << group.label(identity) << '\n';
    }
  }
  for (std::size_t i = 0; i < report.col_sums.size(); ++i) {
    if (!group.eq(report.col_sums[i], identity)) {
      out << "  column " << (i + 1) << " sum "
          << group.label(report.col_sums[i]) << " differs from "
          << group.label(identity) << '\n';
    }
  }
  out << "magic: " << (report.is_magic ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace torsq
