#include "tba/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

namespace tba {

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream words(line);
    std::string word;
    while (words >> word) out.push_back({std::move(word), number});
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }

  int line() const {
    if (!done()) return tokens_[pos_].line;
    return tokens_.empty() ? 1 : tokens_.back().line;
  }

  const std::string& next(const std::string& what) {
    if (done()) {
      throw ParseError(line(), "expected " + what + ", got end of input");
    }
    return tokens_[pos_++].text;
  }

  void expect(const std::string& literal) {
    const int at = line();
    const std::string& got = next("'" + literal + "'");
    if (got != literal) {
      throw ParseError(at, "expected '" + literal + "', got '" + got + "'");
    }
  }

  int next_int(const std::string& what) {
    const int at = line();
    const std::string& text = next(what);
    try {
      std::size_t used = 0;
      const int value = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return value;
    } catch (const std::exception&) {
      throw ParseError(at, "expected " + what + ", got '" + text + "'");
    }
  }

  Rational next_rational(const std::string& what) {
    const int at = line();
    const std::string& text = next(what);
    try {
      return parse_rational(text);
    } catch (const std::exception&) {
      throw ParseError(at, "expected " + what + ", got '" + text + "'");
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::vector<std::vector<int>> read_matrix(Cursor& cur, int n,
                                          const std::string& what) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int at = cur.line();
      m[i][j] = cur.next_int(what);
      if (m[i][j] < 0) throw ParseError(at, what + " must be nonnegative");
    }
  }
  return m;
}

}  // namespace

RawAlgebra parse_native_raw(std::istream& in) {
  Cursor cur(tokenize(in));
  cur.expect("tba");
  {
    const int at = cur.line();
    if (const std::string& version = cur.next("format version");
        version != "1") {
      throw ParseError(at, "unsupported format version '" + version + "'");
    }
  }
  cur.expect("dim");
  RawAlgebra raw;
  {
    const int at = cur.line();
    raw.dim = cur.next_int("dimension");
    if (raw.dim < 1) throw ParseError(at, "dimension must be positive");
  }
  cur.expect("degrees");
  for (int b = 0; b < raw.dim; ++b) {
    raw.degrees.push_back(cur.next_rational("degree"));
  }
  cur.expect("involution");
  for (int b = 0; b < raw.dim; ++b) {
    const int at = cur.line();
    const int s = cur.next_int("involution index");
    if (s < 0 || s >= raw.dim) {
      throw ParseError(at, "involution index out of range");
    }
    raw.star.push_back(s);
  }
  while (!cur.done()) {
    cur.expect("lambda");
    LambdaEntry e;
    const int at = cur.line();
    e.a = cur.next_int("basis index");
    e.b = cur.next_int("basis index");
    e.c = cur.next_int("basis index");
    if (e.a < 0 || e.a >= raw.dim || e.b < 0 || e.b >= raw.dim || e.c < 0 ||
        e.c >= raw.dim) {
      throw ParseError(at, "lambda index out of range");
    }
    e.value = cur.next_rational("structure constant");
    raw.lambda.push_back(std::move(e));
  }
  return raw;
}

TableAlgebra::Ptr parse_native(std::istream& in) {
  return TableAlgebra::validated(parse_native_raw(in));
}

void write_native(std::ostream& out, const TableAlgebra& algebra) {
  out << "tba 1\n";
  out << "dim " << algebra.dim() << "\n";
  out << "degrees";
  for (int b = 0; b < algebra.dim(); ++b) {
    out << " " << to_string(algebra.degree(b));
  }
  out << "\n";
  out << "involution";
  for (int b = 0; b < algebra.dim(); ++b) out << " " << algebra.star(b);
  out << "\n";
  for (const auto& e : algebra.lambda_entries()) {
    out << "lambda " << e.a << " " << e.b << " " << e.c << " "
        << to_string(e.value) << "\n";
  }
}

std::string write_native(const TableAlgebra& algebra) {
  std::ostringstream out;
  write_native(out, algebra);
  return out.str();
}

RawAlgebra parse_scheme_raw(std::istream& in) {
  Cursor cur(tokenize(in));
  cur.expect("scheme");
  const int at_n = cur.line();
  const int n = cur.next_int("number of points");
  if (n < 1) throw ParseError(at_n, "need at least one point");
  const auto m = read_matrix(cur, n, "color");
  if (!cur.done()) {
    throw ParseError(cur.line(), "trailing input after the color matrix");
  }

  int d = 0;
  for (const auto& row : m) {
    for (int c : row) d = std::max(d, c + 1);
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if ((x == y) != (m[x][y] == 0)) {
        throw NotAScheme("color 0 must appear exactly on the diagonal, "
                         "violated at (" +
                         std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }

  std::vector<long long> frequency(d, 0);
  for (const auto& row : m) {
    for (int c : row) ++frequency[c];
  }
  for (int c = 0; c < d; ++c) {
    if (frequency[c] == 0) {
      throw NotAScheme("color " + std::to_string(c) + " never appears");
    }
  }

  // Transposed pairs must recolor consistently; that map is the involution.
  std::vector<int> rev(d, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int c = m[x][y];
      if (rev[c] == -1) {
        rev[c] = m[y][x];
      } else if (rev[c] != m[y][x]) {
        throw NotAScheme("transpose color of " + std::to_string(c) +
                         " is ambiguous: " + std::to_string(rev[c]) +
                         " versus " + std::to_string(m[y][x]) + " at (" +
                         std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }

  // Intersection numbers p^k_ij must not depend on the pair of color k.
  std::vector<std::vector<std::vector<long long>>> p(
      d, std::vector<std::vector<long long>>(d, std::vector<long long>(d, -1)));
  std::vector<std::pair<int, int>> witness(d, {-1, -1});
  std::vector<std::vector<long long>> counts(d, std::vector<long long>(d, 0));
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      const int k = m[x][z];
      for (auto& row : counts) std::fill(row.begin(), row.end(), 0);
      for (int y = 0; y < n; ++y) ++counts[m[x][y]][m[y][z]];
      if (witness[k].first == -1) {
        witness[k] = {x, z};
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) p[k][i][j] = counts[i][j];
        }
      } else {
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) {
            if (p[k][i][j] != counts[i][j]) {
              throw NotAScheme(
                  "p^" + std::to_string(k) + "_(" + std::to_string(i) + "," +
                  std::to_string(j) + ") is " + std::to_string(p[k][i][j]) +
                  " for pair (" + std::to_string(witness[k].first) + "," +
                  std::to_string(witness[k].second) + ") but " +
                  std::to_string(counts[i][j]) + " for pair (" +
                  std::to_string(x) + "," + std::to_string(z) + ")");
            }
          }
        }
      }
    }
  }

  RawAlgebra raw;
  raw.dim = d;
  raw.star = rev;
  for (int i = 0; i < d; ++i) {
    raw.degrees.push_back(Rational(p[0][i][rev[i]]));  // the valency of color i
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (p[k][i][j] != 0) {
          raw.lambda.push_back({i, j, k, Rational(p[k][i][j])});
        }
      }
    }
  }
  return raw;
}

TableAlgebra::Ptr parse_scheme(std::istream& in) {
  return TableAlgebra::validated(parse_scheme_raw(in));
}

RawAlgebra parse_group_raw(std::istream& in) {
  Cursor cur(tokenize(in));
  cur.expect("group");
  const int at_n = cur.line();
  const int n = cur.next_int("group order");
  if (n < 1) throw ParseError(at_n, "group order must be positive");
  const auto t = read_matrix(cur, n, "group element");
  if (!cur.done()) {
    throw ParseError(cur.line(), "trailing input after the Cayley table");
  }
  for (const auto& row : t) {
    for (int g : row) {
      if (g >= n) throw NotAGroup("table entry out of range");
    }
  }
  for (int g = 0; g < n; ++g) {
    if (t[0][g] != g || t[g][0] != g) {
      throw NotAGroup("element 0 is not a two-sided identity");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          throw NotAGroup("multiplication is not associative at (" +
                          std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")");
        }
      }
    }
  }
  std::vector<int> inverse(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (t[g][h] == 0 && t[h][g] == 0) {
        inverse[g] = h;
        break;
      }
    }
    if (inverse[g] == -1) {
      throw NotAGroup("element " + std::to_string(g) +
                      " has no two-sided inverse");
    }
  }

  RawAlgebra raw;
  raw.dim = n;
  raw.star = inverse;
  raw.degrees.assign(n, Rational(1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      raw.lambda.push_back({a, b, t[a][b], Rational(1)});
    }
  }
  return raw;
}

TableAlgebra::Ptr parse_group(std::istream& in) {
  return TableAlgebra::validated(parse_group_raw(in));
}

RawAlgebra parse_any_raw(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  std::string tag;
  int tag_line = 1;
  {
    std::istringstream probe(content);
    const auto tokens = tokenize(probe);
    if (tokens.empty()) throw ParseError(1, "empty input");
    tag = tokens.front().text;
    tag_line = tokens.front().line;
  }
  std::istringstream body(content);
  if (tag == "tba") return parse_native_raw(body);
  if (tag == "scheme") return parse_scheme_raw(body);
  if (tag == "group") return parse_group_raw(body);
  throw ParseError(tag_line, "unknown format tag '" + tag + "'");
}

TableAlgebra::Ptr parse_any(std::istream& in) {
  return TableAlgebra::validated(parse_any_raw(in));
}

RawAlgebra load_raw(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw FileError("cannot open file: " + path);
  return parse_any_raw(file);
}

TableAlgebra::Ptr load_algebra(const std::string& path) {
  return TableAlgebra::validated(load_raw(path));
}

TableAlgebra::Ptr example_q(int q) {
  if (q < 2) throw ShapeMismatch("q must be at least 2");
  const int d = q + 2;
  RawAlgebra raw;
  raw.dim = d;
  raw.star.resize(d);
  std::iota(raw.star.begin(), raw.star.end(), 0);
  raw.degrees.push_back(Rational(1));
  for (int i = 1; i < d; ++i) raw.degrees.push_back(Rational(q - 1));

  raw.lambda.push_back({0, 0, 0, Rational(1)});
  for (int b = 1; b < d; ++b) {
    raw.lambda.push_back({0, b, b, Rational(1)});
    raw.lambda.push_back({b, 0, b, Rational(1)});
  }
  for (int i = 1; i < d; ++i) {
    for (int j = 1; j < d; ++j) {
      if (i == j) {
        raw.lambda.push_back({i, i, 0, Rational(q - 1)});
        if (q > 2) raw.lambda.push_back({i, i, i, Rational(q - 2)});
      } else {
        for (int k = 1; k < d; ++k) {
          if (k == i || k == j) continue;
          raw.lambda.push_back({i, j, k, Rational(1)});
        }
      }
    }
  }
  return TableAlgebra::validated(raw);
}

}  // namespace tba
