#pragma once

// Koszul duals, Zhang twists, Ore extensions and normal-element certificates.

#include <optional>
#include <vector>

#include "skw/freealg.hpp"
#include "skw/linalg.hpp"
#include "skw/rewrite.hpp"

namespace skw {

/// Degree-zero automorphism; column j holds the image of generator j.
template <ExactField K>
struct GradedAutomorphism {
  Matrix<Scalar<K>> matrix;

  static GradedAutomorphism identity(const K& field, std::size_t n = 3) {
    Matrix<Scalar<K>> m(n, n, field.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return {m};
  }

  /// x -> w x, y -> w^2 y, z -> z.
  static GradedAutomorphism sigma(const K& field) {
    auto g = identity(field);
    Scalar<K> w = primitive_cube_root(field);
    g.matrix(0, 0) = w;
    g.matrix(1, 1) = w * w;
    return g;
  }

  /// x -> y, y -> z, z -> x.
  static GradedAutomorphism tau(const K& field) {
    Matrix<Scalar<K>> m(3, 3, field.zero());
    m(1, 0) = field.one();
    m(2, 1) = field.one();
    m(0, 2) = field.one();
    return {m};
  }

  static GradedAutomorphism from_images(const K& field, const std::vector<Scalar<K>>& row_major) {
    if (row_major.size() != 9) throw Error(ErrorCode::invalid_automorphism, "expected 9 matrix entries");
    Matrix<Scalar<K>> m(3, 3, field.zero());
    for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = row_major[i];
    return {m};
  }

  GradedAutomorphism inverse(const K& field) const {
    try {
      return {skw::inverse(field, matrix)};
    } catch (const Error&) {
      throw Error(ErrorCode::invalid_automorphism, "automorphism matrix is singular");
    }
  }

  GradedAutomorphism compose(const GradedAutomorphism& after) const { return {multiply(after.matrix, matrix)}; }

  NcPoly<Scalar<K>> apply(const NcPoly<Scalar<K>>& p) const {
    NcPoly<Scalar<K>> out;
    for (const auto& [w, c] : p.terms()) {
      NcPoly<Scalar<K>> acc = NcPoly<Scalar<K>>::monomial(Word(), c);
      for (char ch : w) {
        NcPoly<Scalar<K>> img;
        auto j = static_cast<std::size_t>(static_cast<unsigned char>(ch));
        for (std::size_t i = 0; i < matrix.rows(); ++i) img.add_term(Word(1, static_cast<char>(i)), matrix(i, j));
        acc = acc * img;
      }
      out += acc;
    }
    return out;
  }
};

/// Relation space R^perp under <x_i x_j, x_k* x_l*> = delta_ik delta_jl.
template <ExactField K>
QuadPresentation<K> koszul_dual(const QuadPresentation<K>& p) {
  auto basis = nullspace(p.field, p.coefficient_matrix());
  const std::size_t n2 = p.n_generators() * p.n_generators();
  return presentation_from_rows(p.field, p.names, Matrix<Scalar<K>>::from_rows(basis, n2));
}

/// Pairing of every relation of p against every relation of q.
template <ExactField K>
bool pairs_to_zero(const QuadPresentation<K>& p, const QuadPresentation<K>& q) {
  auto a = p.coefficient_matrix(), b = q.coefficient_matrix();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      Scalar<K> s = p.field.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(j, k);
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

enum class TwistSide {
  inverse_right,  // sum c_ij x_i sigma^{-1}(x_j)
  right,          // sum c_ij x_i sigma(x_j)
};

/// Relations of the twist with a * b = a sigma(b) on degree-one a.
template <ExactField K>
QuadPresentation<K> zhang_twist(const QuadPresentation<K>& p, const GradedAutomorphism<K>& sigma,
                                TwistSide side = TwistSide::inverse_right) {
  const std::size_t n = p.n_generators();
  if (sigma.matrix.rows() != n || sigma.matrix.cols() != n) {
    throw Error(ErrorCode::invalid_automorphism, "automorphism size does not match generator count");
  }
  GradedAutomorphism<K> inv = sigma.inverse(p.field);
  const auto& t = side == TwistSide::inverse_right ? inv.matrix : sigma.matrix;
  Matrix<Scalar<K>> c = p.coefficient_matrix();
  Matrix<Scalar<K>> out(c.rows(), n * n, p.field.zero());
  for (std::size_t r = 0; r < c.rows(); ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar<K>& cij = c(r, i * n + j);
        if (cij.is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) out(r, i * n + l) += cij * t(l, j);
      }
    }
  }
  auto q = presentation_from_rows(p.field, p.names, out);
  return q;
}

/// Ore data on k{x,y}: alpha and delta given on the generators x, y.
template <ExactField K>
struct OreData {
  using S = Scalar<K>;
  using Poly = NcPoly<S>;

  K field;
  S b;
  S c;
  std::array<Poly, 2> alpha;
  std::array<Poly, 2> delta;

  /// alpha(x) = -b x, alpha(y) = -b^2 y, delta(x) = -c y^2, delta(y) = -b^2 c x^2.
  static OreData sklyanin(const K& field, const S& b, const S& c) {
    OreData d{field, b, c, {}, {}};
    const Word x = make_word({0}), y = make_word({1});
    d.alpha[0] = Poly::monomial(x, -b);
    d.alpha[1] = Poly::monomial(y, -(b * b));
    d.delta[0] = Poly::monomial(make_word({1, 1}), -c);
    d.delta[1] = Poly::monomial(make_word({0, 0}), -(b * b * c));
    return d;
  }

  Poly apply_alpha(const Poly& p) const {
    Poly out;
    for (const auto& [w, coeff] : p.terms()) {
      Poly acc = Poly::monomial(Word(), coeff);
      for (char ch : w) acc = acc * alpha.at(static_cast<std::size_t>(ch));
      out += acc;
    }
    return out;
  }

  /// delta extended to words letter by letter: delta(g w) = alpha(g) delta(w) + delta(g) w.
  Poly apply_delta(const Poly& p) const {
    Poly out;
    for (const auto& [w, coeff] : p.terms()) {
      if (w.empty()) continue;
      out += apply_delta_word(w).scaled(coeff);
    }
    return out;
  }

  /// delta(rs) = alpha(r) delta(s) + delta(r) s for all words r, s of degree 1..max_len.
  bool check_leibniz(std::size_t max_len = 2) const {
    std::vector<Word> words;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t total = std::size_t{1} << len;
      for (std::size_t code = 0; code < total; ++code) {
        Word w;
        for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<char>((code >> (len - 1 - i)) & 1));
        words.push_back(w);
      }
    }
    for (const Word& r : words) {
      for (const Word& s : words) {
        Poly pr = Poly::monomial(r, field.one()), ps = Poly::monomial(s, field.one());
        Poly lhs = apply_delta(pr * ps);
        Poly rhs = apply_alpha(pr) * apply_delta(ps) + apply_delta(pr) * ps;
        if (!(lhs == rhs)) return false;
      }
    }
    return true;
  }

 private:
  Poly apply_delta_word(const Word& w) const {
    const auto g = static_cast<std::size_t>(w[0]);
    Poly rest = Poly::monomial(w.substr(1), field.one());
    if (w.size() == 1) return delta.at(g);
    return alpha.at(g) * apply_delta_word(w.substr(1)) + delta.at(g) * rest;
  }
};

/// Relations z g - alpha(g) z - delta(g) for g in {x, y}.
template <ExactField K>
std::vector<NcPoly<Scalar<K>>> ore_relations(const OreData<K>& d) {
  using Poly = NcPoly<Scalar<K>>;
  const Poly z = Poly::monomial(make_word({2}), d.field.one());
  std::vector<Poly> rels;
  for (std::size_t g = 0; g < 2; ++g) {
    Poly gen = Poly::monomial(Word(1, static_cast<char>(g)), d.field.one());
    rels.push_back(z * gen - d.alpha[g] * z - d.delta[g]);
  }
  return rels;
}

/// Omega = xy + b yx + c z^2.
template <ExactField K>
NcPoly<Scalar<K>> omega(const K& field, const Scalar<K>& b, const Scalar<K>& c) {
  NcPoly<Scalar<K>> p;
  p.add_term(make_word({0, 1}), field.one());
  p.add_term(make_word({1, 0}), b);
  p.add_term(make_word({2, 2}), c);
  return p;
}

template <ExactField K>
void require_cube_roots_of_one(const Scalar<K>& b, const Scalar<K>& c) {
  if (!(b * b * b).is_one() || !(c * c * c).is_one()) {
    throw Error(ErrorCode::invalid_argument, "Ore presentation needs b^3 = c^3 = 1");
  }
}

/// The Ore extension k{x,y}[z; alpha, delta] as a two-relation presentation.
template <ExactField K>
QuadPresentation<K> ore_extension(const K& field, const Scalar<K>& b, const Scalar<K>& c) {
  require_cube_roots_of_one<K>(b, c);
  auto d = OreData<K>::sklyanin(field, b, c);
  return make_presentation(field, default_names(3), ore_relations(d));
}

/// The Ore extension modulo Omega.
template <ExactField K>
QuadPresentation<K> ore_presentation(const K& field, const Scalar<K>& b, const Scalar<K>& c) {
  require_cube_roots_of_one<K>(b, c);
  auto d = OreData<K>::sklyanin(field, b, c);
  auto rels = ore_relations(d);
  rels.push_back(omega(field, b, c));
  return make_presentation(field, default_names(3), std::move(rels));
}

/// For each generator g a linear form g' with g w = w g' in the algebra.
template <ExactField K>
struct NormalCertificate {
  std::vector<std::vector<Scalar<K>>> images;  // images[g][k]: coefficient of x_k in g'

  /// Scalars s_g with g' = s_g g, when every g' is diagonal.
  std::optional<std::vector<Scalar<K>>> diagonal() const {
    std::vector<Scalar<K>> out;
    for (std::size_t g = 0; g < images.size(); ++g) {
      for (std::size_t k = 0; k < images[g].size(); ++k) {
        if (k != g && !images[g][k].is_zero()) return std::nullopt;
      }
      out.push_back(images[g][g]);
    }
    return out;
  }
};

/// Searches linear forms g' with normal_form(g w - w g') = 0 for each
/// generator g (or only the listed ones). Failure is returned as nullopt.
template <ExactField K>
std::optional<NormalCertificate<K>> certify_normal(const RewriteSystem<K>& rs, const NcPoly<Scalar<K>>& w,
                                                   std::vector<std::size_t> generators = {}) {
  using S = Scalar<K>;
  using Poly = NcPoly<S>;
  auto deg = w.homogeneous_degree();
  if (!deg) throw Error(ErrorCode::invalid_argument, "element must be homogeneous and nonzero");
  const std::size_t n = rs.names.size();
  if (generators.empty()) {
    for (std::size_t g = 0; g < n; ++g) generators.push_back(g);
  }
  const std::size_t d = *deg + 1;
  const std::vector<Word> basis = rs.normal_words(d);
  std::vector<std::vector<S>> right(n);  // coords of w x_k
  for (std::size_t k = 0; k < n; ++k) {
    right[k] = rs.coordinates(w * Poly::monomial(Word(1, static_cast<char>(k)), rs.field.one()), basis);
  }
  NormalCertificate<K> cert;
  cert.images.assign(n, std::vector<S>(n, rs.field.zero()));
  for (std::size_t g : generators) {
    std::vector<S> lhs = rs.coordinates(Poly::monomial(Word(1, static_cast<char>(g)), rs.field.one()) * w, basis);
    // columns: lambda_0..lambda_{n-1}, then the right-hand side
    Matrix<S> sys(basis.size(), n + 1, rs.field.zero());
    for (std::size_t r = 0; r < basis.size(); ++r) {
      for (std::size_t k = 0; k < n; ++k) sys(r, k) = right[k][r];
      sys(r, n) = lhs[r];
    }
    Echelon<K> e = rref(rs.field, sys);
    if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
    for (std::size_t i = 0; i < e.rank(); ++i) cert.images[g][e.pivots[i]] = e.reduced(i, n);
  }
  return cert;
}

}  // namespace skw
