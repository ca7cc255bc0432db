#include "bitarm/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

namespace bitarm {

namespace {

std::string_view kind_name(DatasetError::Kind kind) {
  switch (kind) {
    case DatasetError::Kind::ParseError: return "ParseError";
    case DatasetError::Kind::RaggedRow: return "RaggedRow";
    case DatasetError::Kind::ValueOutOfRange: return "ValueOutOfRange";
    case DatasetError::Kind::DuplicateId: return "DuplicateId";
    case DatasetError::Kind::EmptyMatrix: return "EmptyMatrix";
    case DatasetError::Kind::NonNumericCell: return "NonNumericCell";
  }
  return "DatasetError";
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_csv(std::string_view line, std::size_t line_no) {
  if (line.find('"') != std::string_view::npos)
    throw DatasetError(DatasetError::Kind::ParseError,
                       fmt::format("line {}: quoted fields are not supported", line_no));
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

void check_unique(const std::vector<std::string>& ids, std::string_view what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (id.empty())
      throw DatasetError(DatasetError::Kind::ParseError, fmt::format("empty {} id", what));
    if (!seen.insert(id).second)
      throw DatasetError(DatasetError::Kind::DuplicateId, fmt::format("duplicate {} id '{}'", what, id));
  }
}

double parse_cell(std::string_view cell, std::size_t line_no, std::size_t col) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (cell.empty() || ec != std::errc{} || ptr != last)
    throw DatasetError(DatasetError::Kind::NonNumericCell,
                       fmt::format("line {}, column {}: '{}' is not a number", line_no, col + 1, cell));
  if (!(v >= 0.0 && v <= 1.0))
    throw DatasetError(DatasetError::Kind::ValueOutOfRange,
                       fmt::format("line {}, column {}: {} outside [0, 1]", line_no, col + 1, cell));
  return v;
}

}  // namespace

DatasetError::DatasetError(Kind kind, const std::string& message)
    : Error(ErrorCategory::validation, std::string(kind_name(kind)), message), kind_(kind) {}

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> row_ids,
                                   std::vector<std::string> col_ids, std::vector<double> values)
    : row_ids_(std::move(row_ids)), col_ids_(std::move(col_ids)), values_(std::move(values)) {
  if (row_ids_.empty() || col_ids_.empty())
    throw DatasetError(DatasetError::Kind::EmptyMatrix,
                       fmt::format("matrix is {}x{}", row_ids_.size(), col_ids_.size()));
  check_unique(row_ids_, "row");
  check_unique(col_ids_, "column");
  if (values_.size() != row_ids_.size() * col_ids_.size())
    throw DatasetError(DatasetError::Kind::RaggedRow,
                       fmt::format("{} values for a {}x{} matrix", values_.size(), row_ids_.size(),
                                   col_ids_.size()));
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0))
      throw DatasetError(DatasetError::Kind::ValueOutOfRange, fmt::format("{} outside [0, 1]", v));
  }
  max_value_ = *std::max_element(values_.begin(), values_.end());
}

SimilarityMatrix parse_similarity_matrix(std::istream& in) {
  std::vector<std::string> row_ids;
  std::vector<std::string> col_ids;
  std::vector<double> values;
  bool have_header = false;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);  // BOM
    if (trim(view).empty()) continue;
    auto cells = split_csv(view, line_no);
    if (!have_header) {
      for (std::size_t i = 1; i < cells.size(); ++i) col_ids.emplace_back(cells[i]);
      if (col_ids.empty())
        throw DatasetError(DatasetError::Kind::EmptyMatrix, "header names no genes");
      have_header = true;
      continue;
    }
    if (cells.size() != col_ids.size() + 1)
      throw DatasetError(DatasetError::Kind::RaggedRow,
                         fmt::format("line {}: {} values, expected {}", line_no, cells.size() - 1,
                                     col_ids.size()));
    row_ids.emplace_back(cells[0]);
    for (std::size_t i = 1; i < cells.size(); ++i) values.push_back(parse_cell(cells[i], line_no, i));
  }
  if (in.bad()) throw IoError("read error while parsing similarity matrix");
  if (!have_header) throw DatasetError(DatasetError::Kind::EmptyMatrix, "input is empty");
  if (row_ids.empty()) throw DatasetError(DatasetError::Kind::EmptyMatrix, "no probe rows");
  return SimilarityMatrix(std::move(row_ids), std::move(col_ids), std::move(values));
}

SimilarityMatrix parse_similarity_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_similarity_matrix(in);
}

std::string serialize_similarity_matrix(const SimilarityMatrix& m, std::string_view corner) {
  std::string out(corner);
  for (const auto& g : m.col_ids()) {
    out += ',';
    out += g;
  }
  out += '\n';
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    out += m.row_ids()[r];
    for (std::size_t c = 0; c < m.n_cols(); ++c) fmt::format_to(std::back_inserter(out), ",{}", m.at(r, c));
    out += '\n';
  }
  return out;
}

DiscretizeConfig DiscretizeConfig::max_minus(double x_percent) {
  DiscretizeConfig cfg;
  cfg.method = Method::max_minus_x;
  cfg.x = x_percent;
  cfg.validate();
  return cfg;
}

DiscretizeConfig DiscretizeConfig::threshold(double beta) {
  DiscretizeConfig cfg;
  cfg.method = Method::beta_threshold;
  cfg.beta = beta;
  cfg.validate();
  return cfg;
}

DiscretizeConfig DiscretizeConfig::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw ConfigError(fmt::format("discretization '{}' must be max-minus-x:<x> or beta:<b>", spec));
  const auto name = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
  if (arg.empty() || ec != std::errc{} || ptr != arg.data() + arg.size())
    throw ConfigError(fmt::format("discretization parameter '{}' is not a number", arg));
  if (name == "max-minus-x") return max_minus(v);
  if (name == "beta") return threshold(v);
  throw ConfigError(fmt::format("unknown discretization method '{}'", name));
}

std::string DiscretizeConfig::to_string() const {
  if (method == Method::max_minus_x) return fmt::format("max-minus-x:{}", x);
  return fmt::format("beta:{}", beta);
}

void DiscretizeConfig::validate() const {
  if (method == Method::max_minus_x && !(x >= 0.0 && x <= 100.0))
    throw ConfigError(fmt::format("max-minus-x percentage {} outside [0, 100]", x));
  if (method == Method::beta_threshold && !(beta >= 0.0 && beta <= 1.0))
    throw ConfigError(fmt::format("beta {} outside [0, 1]", beta));
}

namespace {

BitMatrix threshold_matrix(const SimilarityMatrix& m, double cut) {
  BitMatrix b(m.row_ids(), m.col_ids());
  for (std::size_t r = 0; r < m.n_rows(); ++r)
    for (std::size_t c = 0; c < m.n_cols(); ++c)
      if (m.at(r, c) > cut) b.set(r, c);
  return b;
}

}  // namespace

BitMatrix discretize_max_minus_x(const SimilarityMatrix& m, double x_percent) {
  DiscretizeConfig::max_minus(x_percent);  // range check
  return threshold_matrix(m, (1.0 - x_percent / 100.0) * m.max_value());
}

BitMatrix discretize_beta(const SimilarityMatrix& m, double beta) {
  DiscretizeConfig::threshold(beta);
  return threshold_matrix(m, beta);
}

BitMatrix discretize(const SimilarityMatrix& m, const DiscretizeConfig& cfg) {
  cfg.validate();
  if (cfg.method == DiscretizeConfig::Method::max_minus_x) return discretize_max_minus_x(m, cfg.x);
  return discretize_beta(m, cfg.beta);
}

}  // namespace bitarm
