#pragma once

// Words, noncommutative polynomials and quadratic presentations.

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "skw/linalg.hpp"
#include "skw/scalars.hpp"

namespace skw {

/// Letters are generator indices stored as bytes (0 = x, 1 = y, 2 = z).
using Word = std::string;

struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w.push_back(static_cast<char>(l));
  return w;
}

inline int letter(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

template <class S>
class NcPoly {
 public:
  using Terms = std::map<Word, S, ShortLex>;

  NcPoly() = default;

  static NcPoly monomial(const Word& w, const S& c) {
    NcPoly p;
    p.add_term(w, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S() : it->second;
  }

  void add_term(const Word& w, const S& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Common length of all words, or nullopt for mixed degrees. Zero is homogeneous of every degree.
  std::optional<std::size_t> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t d = terms_.begin()->first.size();
    if (terms_.rbegin()->first.size() != d) return std::nullopt;
    return d;
  }

  std::size_t max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

  NcPoly scaled(const S& c) const {
    NcPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, v * c);
    return r;
  }

  friend NcPoly operator+(NcPoly a, const NcPoly& b) {
    for (const auto& [w, c] : b.terms_) a.add_term(w, c);
    return a;
  }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) {
    for (const auto& [w, c] : b.terms_) a.add_term(w, -c);
    return a;
  }
  friend NcPoly operator-(const NcPoly& a) {
    NcPoly r;
    for (const auto& [w, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), w, -c);
    return r;
  }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly r;
    for (const auto& [u, c] : a.terms_) {
      for (const auto& [v, d] : b.terms_) r.add_term(u + v, c * d);
    }
    return r;
  }
  friend NcPoly operator*(const S& c, const NcPoly& p) { return p.scaled(c); }

  NcPoly& operator+=(const NcPoly& o) { return *this = *this + o; }
  NcPoly& operator-=(const NcPoly& o) { return *this = *this - o; }

  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

template <class S>
NcPoly<S> nc_multiply(const NcPoly<S>& p, const NcPoly<S>& q) {
  return p * q;
}

inline std::vector<std::string> default_names(std::size_t n) {
  static const char* xyz[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(n <= 3 ? xyz[i] : "x" + std::to_string(i));
  return names;
}

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += names.at(static_cast<std::size_t>(letter(w, i)));
  }
  return s;
}

inline std::string format_coefficient(const std::string& c) {
  bool compound = c.find_first_of("+-", 1) != std::string::npos;
  return compound ? "(" + c + ")" : c;
}

/// `c*w1.w2 + c*w3.w4`, terms in descending shortlex order.
template <class S>
std::string format_poly(const NcPoly<S>& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) out += " + ";
    first = false;
    out += format_coefficient(it->second.to_string()) + "*" + format_word(it->first, names);
  }
  return out;
}

namespace detail {

inline std::optional<Word> parse_word(const std::string& s, const std::vector<std::string>& names) {
  if (s.empty()) return std::nullopt;
  Word w;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = s.find('.', start);
    std::string tok = s.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) return std::nullopt;
    w.push_back(static_cast<char>(it - names.begin()));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return w;
}

template <ExactField K>
std::optional<Scalar<K>> try_scalar(const K& field, const std::string& s) {
  try {
    return field.parse(s);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) return std::nullopt;
    throw;
  }
}

}  // namespace detail

/// Parses one polynomial line. Column numbers in diagnostics are 1-based.
template <ExactField K>
NcPoly<Scalar<K>> parse_poly(const K& field, const std::string& line, const std::vector<std::string>& names,
                             std::size_t line_no = 1) {
  using S = Scalar<K>;
  auto fail = [&](std::size_t col, const std::string& msg) -> Error {
    return Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ", column " + std::to_string(col) + ": " + msg);
  };
  // split at top-level + and - that follow a complete term
  struct Piece {
    std::string text;
    std::size_t col;
    bool negative;
  };
  std::vector<Piece> pieces;
  int depth = 0;
  std::string cur;
  std::size_t cur_col = 0;
  bool cur_neg = false;
  auto flush = [&](std::size_t col) {
    std::string t = detail::trim(cur);
    if (t.empty()) throw fail(col, "empty term");
    pieces.push_back({t, cur_col, cur_neg});
    cur.clear();
  };
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (ch == '(') ++depth;
    if (ch == ')') {
      if (--depth < 0) throw fail(i + 1, "unbalanced ')'");
    }
    std::string t = detail::trim(cur);
    bool separator = depth == 0 && (ch == '+' || ch == '-') && !t.empty() && t.back() != '*' && t.back() != '/';
    if (separator) {
      flush(i + 1);
      cur_neg = ch == '-';
      cur_col = i + 2;
      continue;
    }
    if (t.empty() && cur.empty() && std::isspace(static_cast<unsigned char>(ch))) continue;
    if (cur.empty()) cur_col = i + 1;
    cur.push_back(ch);
  }
  if (depth != 0) throw fail(line.size(), "unbalanced '('");
  flush(line.size());

  NcPoly<S> result;
  for (const Piece& piece : pieces) {
    std::string t;
    for (char ch : piece.text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    }
    if (t == "0") continue;
    bool negative = piece.negative;
    while (!t.empty() && (t.front() == '-' || t.front() == '+')) {
      negative ^= t.front() == '-';
      t.erase(0, 1);
    }
    // factors separated by top-level '*': scalars multiply, words concatenate
    std::vector<std::string> factors;
    int dep = 0;
    std::string f;
    for (char ch : t) {
      if (ch == '(') ++dep;
      if (ch == ')') --dep;
      if (ch == '*' && dep == 0) {
        factors.push_back(f);
        f.clear();
      } else {
        f.push_back(ch);
      }
    }
    factors.push_back(f);
    std::optional<S> coeff = field.one();
    std::optional<Word> word = Word();
    for (const auto& fac : factors) {
      if (auto w = detail::parse_word(fac, names)) {
        *word += *w;
      } else if (auto c = detail::try_scalar(field, fac)) {
        *coeff = *coeff * *c;
      } else {
        word.reset();
        break;
      }
    }
    if (!word || !coeff) throw fail(piece.col, "cannot parse term '" + piece.text + "'");
    result.add_term(*word, negative ? -*coeff : *coeff);
  }
  return result;
}

template <ExactField K>
struct QuadPresentation {
  using S = Scalar<K>;

  K field;
  std::vector<std::string> names;
  std::vector<NcPoly<S>> relations;
  std::optional<std::array<S, 3>> params;

  std::size_t n_generators() const { return names.size(); }

  /// Rows indexed by relations, columns by x_i x_j at index i*n + j.
  Matrix<S> coefficient_matrix() const {
    const std::size_t n = n_generators();
    Matrix<S> m(relations.size(), n * n, field.zero());
    for (std::size_t r = 0; r < relations.size(); ++r) {
      for (const auto& [w, c] : relations[r].terms()) {
        m(r, static_cast<std::size_t>(letter(w, 0)) * n + static_cast<std::size_t>(letter(w, 1))) = c;
      }
    }
    return m;
  }

  NcPoly<S> generator(std::size_t i) const { return NcPoly<S>::monomial(Word(1, static_cast<char>(i)), field.one()); }
};

template <class S>
NcPoly<S> row_to_quadratic(const std::vector<S>& row, std::size_t n) {
  NcPoly<S> p;
  for (std::size_t k = 0; k < row.size(); ++k) {
    p.add_term(make_word({static_cast<int>(k / n), static_cast<int>(k % n)}), row[k]);
  }
  return p;
}

/// Checks homogeneity, degree two and independence; throws on violation.
template <ExactField K>
QuadPresentation<K> make_presentation(const K& field, std::vector<std::string> names,
                                      std::vector<NcPoly<Scalar<K>>> relations,
                                      std::optional<std::array<Scalar<K>, 3>> params = std::nullopt) {
  if (names.empty()) throw Error(ErrorCode::invalid_presentation, "no generators");
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& r = relations[i];
    if (r.is_zero()) throw Error(ErrorCode::invalid_presentation, "relation " + std::to_string(i + 1) + " is zero");
    auto d = r.homogeneous_degree();
    if (!d || *d != 2) {
      throw Error(ErrorCode::non_quadratic, "relation " + std::to_string(i + 1) + " is not homogeneous of degree 2");
    }
    for (const auto& [w, c] : r.terms()) {
      for (char l : w) {
        if (static_cast<std::size_t>(static_cast<unsigned char>(l)) >= names.size()) {
          throw Error(ErrorCode::invalid_presentation, "letter out of range");
        }
      }
    }
  }
  QuadPresentation<K> p{field, std::move(names), std::move(relations), std::move(params)};
  if (rank(field, p.coefficient_matrix()) != p.relations.size()) {
    throw Error(ErrorCode::dependent_relations, "relations are linearly dependent");
  }
  return p;
}

/// Presentation whose relations are the given rows, reduced to a basis first.
template <ExactField K>
QuadPresentation<K> presentation_from_rows(const K& field, std::vector<std::string> names, const Matrix<Scalar<K>>& rows) {
  const std::size_t n = names.size();
  Echelon<K> e = rref(field, rows);
  std::vector<NcPoly<Scalar<K>>> rels;
  for (std::size_t r = 0; r < e.rank(); ++r) rels.push_back(row_to_quadratic(e.reduced.row(r), n));
  return QuadPresentation<K>{field, std::move(names), std::move(rels), std::nullopt};
}

template <ExactField K>
bool relation_span_equal(const QuadPresentation<K>& p, const QuadPresentation<K>& q) {
  if (p.n_generators() != q.n_generators()) return false;
  return span_equal(p.field, p.coefficient_matrix(), q.coefficient_matrix());
}

/// f = a yz + b zy + c x^2 and its two cyclic shifts, scaled so the first
/// nonzero parameter is 1.
template <ExactField K>
QuadPresentation<K> sklyanin_presentation(const K& field, Scalar<K> a, Scalar<K> b, Scalar<K> c) {
  using S = Scalar<K>;
  std::array<S, 3> abc{a, b, c};
  std::size_t lead = 0;
  while (lead < 3 && abc[lead].is_zero()) ++lead;
  if (lead == 3) throw Error(ErrorCode::invalid_presentation, "(a,b,c) = (0,0,0)");
  S inv = abc[lead].inverse();
  for (auto& v : abc) v = v * inv;
  std::vector<NcPoly<S>> rels;
  for (int i = 0; i < 3; ++i) {
    int x = i, y = (i + 1) % 3, z = (i + 2) % 3;
    NcPoly<S> r;
    r.add_term(make_word({y, z}), abc[0]);
    r.add_term(make_word({z, y}), abc[1]);
    r.add_term(make_word({x, x}), abc[2]);
    rels.push_back(r);
  }
  return make_presentation(field, default_names(3), std::move(rels), abc);
}

/// [a:b:c] is a coordinate point or a^3 = b^3 = c^3 != 0.
template <ExactField K>
bool in_degenerate_locus(const K& field, const Scalar<K>& a, const Scalar<K>& b, const Scalar<K>& c) {
  (void)field;
  int nonzero = !a.is_zero() + !b.is_zero() + !c.is_zero();
  if (nonzero == 0) throw Error(ErrorCode::invalid_presentation, "(a,b,c) = (0,0,0)");
  if (nonzero == 1) return true;
  if (nonzero == 2) return false;
  auto a3 = a * a * a, b3 = b * b * b, c3 = c * c * c;
  return a3 == b3 && b3 == c3;
}

template <ExactField K>
std::string format_presentation(const QuadPresentation<K>& p) {
  std::string out = "generators:";
  for (const auto& n : p.names) out += " " + n;
  out += "\n";
  for (const auto& r : p.relations) out += format_poly(r, p.names) + "\n";
  return out;
}

/// Text format: `generators: x y z` followed by one relation per line. Blank
/// lines and lines starting with '#' are ignored.
template <ExactField K>
QuadPresentation<K> parse_presentation_text(const K& field, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::vector<std::string>> names;
  std::vector<NcPoly<Scalar<K>>> rels;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!names) {
      const std::string key = "generators:";
      if (t.rfind(key, 0) != 0) {
        throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ", column 1: expected 'generators:'");
      }
      std::istringstream ns(t.substr(key.size()));
      std::vector<std::string> list;
      for (std::string tok; ns >> tok;) {
        bool ok = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char ch) {
          return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
        });
        if (!ok || std::find(list.begin(), list.end(), tok) != list.end()) {
          throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": bad generator name '" + tok + "'");
        }
        list.push_back(tok);
      }
      if (list.empty()) throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": no generators");
      names = list;
      continue;
    }
    auto poly = parse_poly(field, line, *names, line_no);
    auto d = poly.homogeneous_degree();
    if (!d || *d != 2) {
      throw Error(ErrorCode::non_quadratic, "line " + std::to_string(line_no) + ": relation is not homogeneous quadratic");
    }
    rels.push_back(std::move(poly));
  }
  if (!names) throw Error(ErrorCode::parse_error, "missing 'generators:' line");
  return make_presentation(field, *names, std::move(rels));
}

}  // namespace skw
