#include "arfe/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "arfe/error.hpp"

namespace arfe::io {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> fields;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<Line> next() {
    std::string text;
    while (std::getline(in_, text)) {
      ++number_;
      std::istringstream split(text);
      Line line{number_, {}};
      for (std::string field; split >> field;) line.fields.push_back(std::move(field));
      if (line.fields.empty() || line.fields.front().starts_with('#')) continue;
      return line;
    }
    return std::nullopt;
  }

  Line expect(const char* what) {
    auto line = next();
    if (!line) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return std::move(*line);
  }

  void expect_end() {
    if (auto line = next()) fail(*line, "trailing content");
  }

  [[noreturn]] static void fail(const Line& line, const std::string& message) {
    throw ParseError("line " + std::to_string(line.number) + ": " + message);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::size_t parse_count(const Line& line, const std::string& field) {
  std::size_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) LineReader::fail(line, "expected a non-negative integer, got '" + field + "'");
  return value;
}

BitVector parse_bits(const Line& line, const std::string& field, std::size_t expected) {
  BitVector v;
  try {
    v = BitVector::from_string(field);
  } catch (const ParseError& e) {
    LineReader::fail(line, e.what());
  }
  if (v.size() != expected) {
    LineReader::fail(line, "expected " + std::to_string(expected) + " bits, got " + std::to_string(v.size()));
  }
  return v;
}

// A `<keyword> <bits>` line whose bit field may be absent when zero bits are
// expected.
BitVector parse_keyed_bits(const Line& line, const char* keyword, std::size_t expected) {
  if (line.fields.front() != keyword) LineReader::fail(line, std::string("expected '") + keyword + "'");
  if (expected == 0 && line.fields.size() == 1) return BitVector(0);
  if (line.fields.size() != 2) LineReader::fail(line, std::string("expected '") + keyword + " <bits>'");
  return parse_bits(line, line.fields[1], expected);
}

BitMatrix read_rows(LineReader& reader, std::size_t rows, std::size_t cols) {
  std::vector<BitVector> data;
  data.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto line = reader.expect("a matrix row");
    if (line.fields.size() != 1) LineReader::fail(line, "expected a single bit string");
    data.push_back(parse_bits(line, line.fields[0], cols));
  }
  return BitMatrix::from_rows(std::move(data), cols);
}

}  // namespace

BitMatrix parse_matrix(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.expect("'<rows> <cols>'");
  if (header.fields.size() != 2) LineReader::fail(header, "expected '<rows> <cols>'");
  const auto rows = parse_count(header, header.fields[0]);
  const auto cols = parse_count(header, header.fields[1]);
  auto m = read_rows(reader, rows, cols);
  reader.expect_end();
  return m;
}

std::string format_matrix(const BitMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) out += m.row(r).to_string() + "\n";
  return out;
}

BitMatrix parse_inline_matrix(std::string_view text) {
  if (text.empty()) throw ParseError("empty inline matrix");
  std::vector<BitVector> rows;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    rows.push_back(BitVector::from_string(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError("inline matrix rows differ in length");
  }
  return BitMatrix::from_rows(std::move(rows));
}

std::string format_inline_matrix(const BitMatrix& m) { return m.to_string(','); }

QuadraticForm parse_form(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.expect("'form <dim>'");
  if (header.fields.size() != 2 || header.fields[0] != "form") LineReader::fail(header, "expected 'form <dim>'");
  const auto dim = parse_count(header, header.fields[1]);
  const auto values_line = reader.expect("'g <bits>'");
  auto values = parse_keyed_bits(values_line, "g", dim);
  auto gram = read_rows(reader, dim, dim);
  reader.expect_end();
  try {
    return QuadraticForm(std::move(gram), std::move(values));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid form: ") + e.what());
  }
}

std::string format_form(const QuadraticForm& form) {
  std::string out = "form " + std::to_string(form.dim()) + "\n";
  out += form.dim() == 0 ? "g\n" : "g " + form.basis_values().to_string() + "\n";
  for (std::size_t r = 0; r < form.dim(); ++r) out += form.gram().row(r).to_string() + "\n";
  return out;
}

SurfacePinkallForm parse_surface(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.expect("'genus <n>'");
  if (header.fields.size() != 2 || header.fields[0] != "genus") LineReader::fail(header, "expected 'genus <n>'");
  const auto genus = parse_count(header, header.fields[1]);
  const auto values_line = reader.expect("'g <bits>'");
  auto values = parse_keyed_bits(values_line, "g", 2 * genus);
  reader.expect_end();
  return SurfacePinkallForm(genus, std::move(values));
}

std::string format_surface(const SurfacePinkallForm& surface) {
  std::string out = "genus " + std::to_string(surface.genus()) + "\n";
  out += surface.genus() == 0 ? "g\n" : "g " + surface.form().basis_values().to_string() + "\n";
  return out;
}

GeneratorWord parse_word(std::istream& in) {
  LineReader reader(in);
  GeneratorWord word;
  while (auto line = reader.next()) {
    const auto& keyword = line->fields.front();
    const bool curve_token = keyword == "twist" || keyword == "square";
    if (curve_token) {
      if (line->fields.size() != 2) LineReader::fail(*line, "expected '" + keyword + " <bits>'");
      auto curve = parse_bits(*line, line->fields[1], line->fields[1].size());
      word.push_back(keyword == "twist" ? WordToken::twist(std::move(curve)) : WordToken::square(std::move(curve)));
    } else if (keyword == "flip" || keyword == "umap") {
      if (line->fields.size() != 1) LineReader::fail(*line, "'" + keyword + "' takes no argument");
      word.push_back(keyword == "flip" ? WordToken::flip() : WordToken::umap());
    } else {
      LineReader::fail(*line, "unknown token '" + keyword + "'");
    }
  }
  return word;
}

std::string format_word(const GeneratorWord& word) {
  std::string out;
  for (const auto& token : word) {
    switch (token.kind) {
      case TokenKind::twist:
        out += "twist " + token.curve.to_string() + "\n";
        break;
      case TokenKind::square:
        out += "square " + token.curve.to_string() + "\n";
        break;
      case TokenKind::flip:
        out += "flip\n";
        break;
      case TokenKind::umap:
        out += "umap\n";
        break;
    }
  }
  return out;
}

Decomposition parse_decomposition(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.expect("'u <0|1>'");
  if (header.fields.size() != 2 || header.fields[0] != "u" || (header.fields[1] != "0" && header.fields[1] != "1")) {
    LineReader::fail(header, "expected 'u <0|1>'");
  }
  Decomposition decomposition;
  decomposition.u_flag = header.fields[1] == "1";
  while (auto line = reader.next()) {
    if (line->fields.size() != 1) LineReader::fail(*line, "expected a single bit string");
    const auto& field = line->fields[0];
    auto v = parse_bits(*line, field, field.size());
    if (!decomposition.word.empty() && v.size() != decomposition.word.front().size()) {
      LineReader::fail(*line, "word vectors differ in length");
    }
    decomposition.word.push_back(std::move(v));
  }
  return decomposition;
}

std::string format_decomposition(const Decomposition& decomposition) {
  std::string out = decomposition.u_flag ? "u 1\n" : "u 0\n";
  for (const auto& v : decomposition.word) out += v.to_string() + "\n";
  return out;
}

}  // namespace arfe::io
