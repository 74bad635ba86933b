#include <sstream>
#include <vector>

#include "rankmatch/errors.hpp"
#include "rankmatch/space.hpp"

namespace rankmatch {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

long to_integer(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    auto v = std::stol(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw ParseError(line, "expected an integer, got '" + tok + "'");
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(const std::string& expecting) {
    if (pos_ >= lines_.size()) throw ParseError(last_line(), "unexpected end of input, expected " + expecting);
    return lines_[pos_++];
  }

  long header(const std::string& key) {
    const auto& line = next("'" + key + "'");
    if (line.tokens.size() != 2 || line.tokens[0] != key)
      throw ParseError(line.number, "expected '" + key + " <value>'");
    return to_integer(line.tokens[1], line.number);
  }

  Matrix matrix(FieldSpec f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& line = next("matrix row " + std::to_string(i + 1));
      if (line.tokens.size() != n)
        throw ParseError(line.number, "expected " + std::to_string(n) + " entries, got " + std::to_string(line.tokens.size()));
      for (std::size_t j = 0; j < n; ++j) {
        auto v = to_integer(line.tokens[j], line.number);
        if (v < 0 || v >= static_cast<long>(f.modulus()))
          throw ParseError(line.number, "entry " + line.tokens[j] + " outside [0, " + std::to_string(f.modulus()) + ")");
        m.set(i, j, v);
      }
    }
    return m;
  }

  bool done() const { return pos_ == lines_.size(); }
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }
  std::size_t current_line() const { return pos_ < lines_.size() ? lines_[pos_].number : last_line(); }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

AffineSpace parse_space(std::string_view text) {
  Reader in(tokenize(text));
  const auto field_line = in.current_line();
  const auto p = in.header("field");
  std::optional<FieldSpec> f;
  try {
    if (p < 2) throw DomainError("field modulus must be a prime >= 2");
    f.emplace(static_cast<std::uint32_t>(p));
  } catch (const DomainError& e) {
    throw ParseError(field_line, e.what());
  }
  const auto n_line = in.current_line();
  const auto n = in.header("n");
  if (n < 1 || n > kMaxGraphOrder) throw ParseError(n_line, "n must be in [1, " + std::to_string(kMaxGraphOrder) + "]");
  const auto& kind_line = in.next("'kind'");
  if (kind_line.tokens.size() != 2 || kind_line.tokens[0] != "kind")
    throw ParseError(kind_line.number, "expected 'kind <name>'");
  const auto kind = parse_space_kind(kind_line.tokens[1]);
  if (!kind) throw ParseError(kind_line.number, "unknown kind '" + kind_line.tokens[1] + "'");
  const auto dim_line = in.current_line();
  const auto d = in.header("dim");
  if (d < 0) throw ParseError(dim_line, "dim must be nonnegative");

  const auto& a_line = in.next("'A'");
  if (a_line.tokens.size() != 1 || a_line.tokens[0] != "A") throw ParseError(a_line.number, "expected 'A'");
  auto base = in.matrix(*f, static_cast<std::size_t>(n));

  std::vector<Matrix> basis;
  for (long r = 1; r <= d; ++r) {
    const auto& b_line = in.next("'B " + std::to_string(r) + "'");
    if (b_line.tokens.size() != 2 || b_line.tokens[0] != "B" || to_integer(b_line.tokens[1], b_line.number) != r)
      throw ParseError(b_line.number, "expected 'B " + std::to_string(r) + "'");
    auto b = in.matrix(*f, static_cast<std::size_t>(n));
    if (!satisfies_kind(b, *kind))
      throw ParseError(b_line.number, "basis element " + std::to_string(r) + " is not " + std::string(to_string(*kind)));
    basis.push_back(std::move(b));
  }
  if (!in.done()) throw ParseError(in.current_line(), "trailing content after the last basis block");
  return AffineSpace(std::move(base), std::move(basis), *kind);
}

std::string serialize_space(const AffineSpace& s) {
  std::ostringstream os;
  os << "field " << s.spec().modulus() << "\n"
     << "n " << s.order() << "\n"
     << "kind " << to_string(s.kind()) << "\n"
     << "dim " << s.basis().size() << "\n"
     << "A\n"
     << s.base().to_string();
  for (std::size_t r = 0; r < s.basis().size(); ++r) os << "B " << (r + 1) << "\n" << s.basis()[r].to_string();
  return os.str();
}

}  // namespace rankmatch
