#pragma once

// The point parameter ring B of S(1,1,1): closed-form dimensions, evaluation
// rank oracles on component grids, glued sections, generation in degree one
// and the kernel of S -> B.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skw/geometry.hpp"
#include "skw/linalg.hpp"
#include "skw/rewrite.hpp"

namespace skw {

/// 3 (2^{floor((d+1)/2)} + 2^{ceil((d-1)/2)}) - 6, with B_0 = 1.
inline std::uint64_t dim_B(std::size_t d) {
  if (d == 0) return 1;
  if (d > 60) throw Error(ErrorCode::too_large, "dim_B overflows 64 bits");
  std::uint64_t a = std::uint64_t{1} << ((d + 1) / 2);
  std::uint64_t b = std::uint64_t{1} << (d / 2);  // ceil((d-1)/2) == floor(d/2)
  return 3 * (a + b) - 6;
}

template <class S>
using PointTuple = std::vector<ProjPoint<S>>;

/// Grid of a line slot: the parameters [1:0] and [0:1].
template <CubeRootField K>
std::vector<ProjPoint<Scalar<K>>> line_grid(const K& field, int k) {
  return {line_point(field, k, field.one(), field.zero()), line_point(field, k, field.zero(), field.one())};
}

/// 2^l tuples for a component with l line slots; point slots contribute their root point.
template <CubeRootField K>
std::vector<PointTuple<Scalar<K>>> grid_points(const K& field, const ComponentSpec& spec) {
  std::vector<PointTuple<Scalar<K>>> rows(1);
  for (const Slot& s : spec.slots) {
    std::vector<ProjPoint<Scalar<K>>> choices =
        s.kind == SlotKind::point ? std::vector<ProjPoint<Scalar<K>>>{root_point(field, s.label)} : line_grid(field, s.label);
    std::vector<PointTuple<Scalar<K>>> next;
    for (const auto& r : rows) {
      for (const auto& q : choices) {
        next.push_back(r);
        next.back().push_back(q);
      }
    }
    rows = std::move(next);
  }
  return rows;
}

template <CubeRootField K>
std::vector<PointTuple<Scalar<K>>> grid_rows(const K& field, const std::vector<ComponentSpec>& specs) {
  std::vector<PointTuple<Scalar<K>>> rows;
  for (const auto& spec : specs) {
    auto g = grid_points(field, spec);
    rows.insert(rows.end(), g.begin(), g.end());
  }
  return rows;
}

/// Rows for degree d: the six-component grids, or the coordinate points of P^2 when d = 1.
template <CubeRootField K>
std::vector<PointTuple<Scalar<K>>> oracle_rows(const K& field, std::size_t d) {
  if (d == 1) {
    std::vector<PointTuple<Scalar<K>>> rows;
    for (int i = 0; i < 3; ++i) {
      ProjPoint<Scalar<K>> p{{field.zero(), field.zero(), field.zero()}};
      p.c[static_cast<std::size_t>(i)] = field.one();
      rows.push_back({p});
    }
    return rows;
  }
  return grid_rows(field, component_specs(d));
}

/// All n^d words of length d in lexicographic order.
inline std::vector<Word> all_words(std::size_t d, std::size_t n = 3) {
  std::vector<Word> out(1);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * n);
    for (const Word& w : out) {
      for (std::size_t a = 0; a < n; ++a) next.push_back(w + static_cast<char>(a));
    }
    out = std::move(next);
  }
  return out;
}

/// prod_j coord_{w_j}(p_j).
template <class S>
S eval_entry(const PointTuple<S>& pts, const Word& w) {
  S v = pts.at(0).c[static_cast<std::size_t>(letter(w, 0))];
  for (std::size_t j = 1; j < w.size(); ++j) v = v * pts[j].c[static_cast<std::size_t>(letter(w, j))];
  return v;
}

template <class S>
S eval_poly(const PointTuple<S>& pts, const NcPoly<S>& p) {
  S total;
  for (const auto& [w, c] : p.terms()) total += c * eval_entry(pts, w);
  return total;
}

enum class RankMethod {
  automatic,  // Gram route in characteristic 0, elimination over F_p
  direct,     // elimination on the evaluation matrix itself
  gram,       // rank of E E^* (characteristic 0 only)
};

namespace detail {

template <class K>
concept HasConjugation = std::same_as<K, CyclotomicField> || std::same_as<K, RationalField>;

template <class K>
Scalar<K> conj(const K&, const Scalar<K>& x) {
  if constexpr (std::same_as<K, CyclotomicField>) {
    return x.conj();
  } else {
    return x;
  }
}

}  // namespace detail

/// Evaluation of degree-d words at a list of point tuples. Columns are either
/// all 3^d words or the normal words of a rewrite system.
template <ExactField K>
class EvalMatrix {
 public:
  using S = Scalar<K>;

  EvalMatrix(K field, std::vector<PointTuple<S>> rows, std::size_t d, const RewriteSystem<K>* rs = nullptr)
      : field_(std::move(field)), rows_(std::move(rows)), d_(d), rs_(rs) {
    for (const auto& r : rows_) {
      if (r.size() != d_) throw Error(ErrorCode::invalid_argument, "row tuple length differs from degree");
    }
  }

  std::size_t degree() const { return d_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<PointTuple<S>>& rows() const { return rows_; }

  std::vector<Word> columns() const { return rs_ ? rs_->normal_words(d_) : all_words(d_); }

  Matrix<S> materialize() const {
    auto cols = columns();
    Matrix<S> m(rows_.size(), cols.size(), field_.zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = eval_entry(rows_[r], cols[c]);
    }
    return m;
  }

  /// E E^*, entries sum_w E_rw conj(E_sw).
  Matrix<S> gram() const {
    if constexpr (detail::HasConjugation<K>) {
      const std::size_t n = rows_.size();
      Matrix<S> g(n, n, field_.zero());
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = r; s < n; ++s) {
          S v = inner(rows_[r], rows_[s]);
          g(r, s) = v;
          g(s, r) = detail::conj(field_, v);
        }
      }
      return g;
    } else {
      throw Error(ErrorCode::unsupported_field, "Gram route needs characteristic 0");
    }
  }

  std::size_t rank(RankMethod method = RankMethod::automatic) const {
    if (method == RankMethod::automatic) method = detail::HasConjugation<K> ? RankMethod::gram : RankMethod::direct;
    if (method == RankMethod::gram) return skw::rank(field_, gram());
    return skw::rank(field_, materialize());
  }

  /// Column-space kernel: coefficient vectors c with sum_w c_w E_rw = 0 for every row.
  std::vector<std::vector<S>> kernel() const { return nullspace(field_, materialize()); }

 private:
  S inner(const PointTuple<S>& r, const PointTuple<S>& s) const {
    if (!rs_) {
      S prod = field_.one();
      for (std::size_t j = 0; j < d_; ++j) {
        S acc = field_.zero();
        for (std::size_t a = 0; a < 3; ++a) acc += r[j].c[a] * detail::conj(field_, s[j].c[a]);
        prod = prod * acc;
        if (prod.is_zero()) break;
      }
      return prod;
    }
    return rs_->weighted_sum(d_, [&](std::size_t j, std::size_t a) { return r[j].c[a] * detail::conj(field_, s[j].c[a]); });
  }

  K field_;
  std::vector<PointTuple<S>> rows_;
  std::size_t d_;
  const RewriteSystem<K>* rs_;
};

/// Rank of the evaluation matrix on the six-component grids with all 3^d word columns.
template <CubeRootField K>
std::size_t dim_B_oracle(const K& field, std::size_t d, std::size_t bound = 8, RankMethod method = RankMethod::automatic) {
  if (d == 0) return 1;
  if (d > bound) throw Error(ErrorCode::too_large, "oracle degree " + std::to_string(d) + " exceeds bound " + std::to_string(bound));
  return EvalMatrix<K>(field, oracle_rows(field, d), d).rank(method);
}

/// Glue system: one row per singular point, columns the multilinear bases of
/// the six components (2^l monomials in the line parameters each).
template <CubeRootField K>
Matrix<Scalar<K>> glue_matrix(const K& field, std::size_t d) {
  using S = Scalar<K>;
  auto specs = component_specs(d);
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const auto& s : specs) {
    offset.push_back(total);
    total += std::size_t{1} << s.line_count();
  }
  auto sing = singular_locus(d);
  std::size_t row_count = 0;
  for (const auto& sp : sing) row_count += sp.components.size() - 1;
  Matrix<S> m(row_count, total, field.zero());
  std::size_t row = 0;
  for (const auto& sp : sing) {
    std::vector<ProjPoint<S>> pts;
    for (int l : sp.labels) pts.push_back(root_point(field, l));
    // section of component ci at the point, as a row of basis-monomial values
    auto add = [&](std::size_t r, int comp, bool negate) {
      const std::size_t ci = static_cast<std::size_t>(comp - 1);
      const auto& spec = specs[ci];
      std::vector<std::size_t> line_pos;
      for (std::size_t i = 0; i < spec.slots.size(); ++i) {
        if (spec.slots[i].kind == SlotKind::line) line_pos.push_back(i);
      }
      // bit t of mono picks z (1) or y (0) on the t-th line slot
      for (std::size_t mono = 0; mono < (std::size_t{1} << line_pos.size()); ++mono) {
        S v = field.one();
        for (std::size_t t = 0; t < line_pos.size(); ++t) {
          const auto& p = pts[line_pos[t]];
          v = v * (((mono >> t) & 1) ? p.c[2] : p.c[1]);
        }
        m(r, offset[ci] + mono) += negate ? -v : v;
      }
    };
    for (std::size_t i = 1; i < sp.components.size(); ++i, ++row) {
      add(row, sp.components[0], false);
      add(row, sp.components[i], true);
    }
  }
  return m;
}

/// sum_i 2^{l_i} minus the rank of the glue system.
template <CubeRootField K>
std::size_t glued_section_dim(const K& field, std::size_t d) {
  if (d < 2) throw Error(ErrorCode::invalid_argument, "glued_section_dim needs d >= 2");
  auto m = glue_matrix(field, d);
  return m.cols() - rank(field, m);
}

template <CubeRootField K>
std::size_t glue_rank(const K& field, std::size_t d) {
  return rank(field, glue_matrix(field, d));
}

struct GenerationResult {
  std::size_t degree = 0;
  std::size_t normal_words = 0;
  std::size_t rank = 0;
  std::uint64_t expected = 0;
  bool ok = false;
};

/// Rank of the normal-word columns on the six-component grids against dim_B(d).
template <CubeRootField K>
GenerationResult check_degree_one_generation(const RewriteSystem<K>& rs, std::size_t d,
                                             RankMethod method = RankMethod::automatic) {
  GenerationResult g;
  g.degree = d;
  g.expected = dim_B(d);
  if (d == 0) {
    g.normal_words = g.rank = 1;
    g.ok = true;
    return g;
  }
  EvalMatrix<K> e(rs.field, oracle_rows(rs.field, d), d, &rs);
  g.normal_words = rs.hilbert_function(d)[d];
  g.rank = e.rank(method);
  g.ok = g.rank == g.expected;
  return g;
}

/// Basis of ker(S_d -> B_d) in normal-word coordinates.
template <CubeRootField K>
std::vector<NcPoly<Scalar<K>>> kernel_basis(const RewriteSystem<K>& rs, std::size_t d) {
  if (d == 0) return {};
  EvalMatrix<K> e(rs.field, oracle_rows(rs.field, d), d, &rs);
  auto words = e.columns();
  std::vector<NcPoly<Scalar<K>>> out;
  for (const auto& v : e.kernel()) {
    NcPoly<Scalar<K>> p;
    for (std::size_t i = 0; i < words.size(); ++i) p.add_term(words[i], v[i]);
    out.push_back(std::move(p));
  }
  return out;
}

struct KernelGrowth {
  std::size_t degree = 0;
  std::size_t kernel_dim = 0;        // dim K_d
  std::size_t generated_dim = 0;     // dim (S_1 K_{d-1} + K_{d-1} S_1)
  std::size_t new_generators = 0;    // kernel_dim - generated_dim
  bool products_vanish = false;      // every g k and k g evaluates to zero on the grids
};

/// How much of K_d is generated by K_{d-1}, computed in normal-word coordinates of S_d.
template <CubeRootField K>
KernelGrowth kernel_growth(const RewriteSystem<K>& rs, const std::vector<NcPoly<Scalar<K>>>& previous, std::size_t d) {
  using S = Scalar<K>;
  KernelGrowth out;
  out.degree = d;
  out.kernel_dim = kernel_basis(rs, d).size();
  auto words = rs.normal_words(d);
  RowBasis<K> span(rs.field, words.size());
  auto rows = oracle_rows(rs.field, d);
  out.products_vanish = true;
  for (const auto& k : previous) {
    for (std::size_t g = 0; g < rs.names.size(); ++g) {
      auto gen = NcPoly<S>::monomial(Word(1, static_cast<char>(g)), rs.field.one());
      for (const auto& prod : {gen * k, k * gen}) {
        auto nf = rs.normal_form(prod);
        span.insert(rs.coordinates(nf, words));
        for (const auto& r : rows) {
          if (!eval_poly(r, nf).is_zero()) out.products_vanish = false;
        }
      }
    }
  }
  out.generated_dim = span.rank();
  out.new_generators = out.kernel_dim - out.generated_dim;
  return out;
}

/// Taylor coefficients of (1 + t^2)(1 + 2t) / ((1 - 2t^2)(1 - t)).
inline std::vector<std::int64_t> b_series_coefficients(std::size_t D) {
  const std::int64_t num[] = {1, 2, 1, 2};
  std::vector<std::int64_t> c;
  for (std::size_t n = 0; n <= D; ++n) {
    std::int64_t v = n < 4 ? num[n] : 0;
    if (n >= 1) v += c[n - 1];
    if (n >= 2) v += 2 * c[n - 2];
    if (n >= 3) v -= 2 * c[n - 3];
    c.push_back(v);
  }
  return c;
}

struct SeriesReport {
  std::vector<std::uint64_t> dims;
  std::vector<std::int64_t> series;
  bool series_match = false;
  std::vector<Rational> step_ratios;  // dim(d+2) / dim(d) for d >= 1
  bool doubling_identity = false;     // dim(d+2) + 6 == 2 (dim(d) + 6) for d >= 1
  std::vector<double> roots;          // dim(d)^{1/d}
};

inline SeriesReport hilbert_series_report(std::size_t D) {
  if (D < 4) throw Error(ErrorCode::invalid_argument, "series report needs D >= 4");
  SeriesReport r;
  r.series = b_series_coefficients(D);
  r.series_match = true;
  for (std::size_t d = 0; d <= D; ++d) {
    r.dims.push_back(dim_B(d));
    if (static_cast<std::int64_t>(r.dims[d]) != r.series[d]) r.series_match = false;
  }
  r.doubling_identity = true;
  for (std::size_t d = 1; d + 2 <= D; ++d) {
    r.step_ratios.push_back(Rational(static_cast<long long>(r.dims[d + 2]), static_cast<long long>(r.dims[d])));
    if (r.dims[d + 2] + 6 != 2 * (r.dims[d] + 6)) r.doubling_identity = false;
  }
  for (std::size_t d = 1; d <= D; ++d) r.roots.push_back(std::pow(static_cast<double>(r.dims[d]), 1.0 / static_cast<double>(d)));
  return r;
}

/// Rank of the restriction of S_d to the grids of every maximal transition
/// pattern, which together cover all of V_d.
template <CubeRootField K>
std::size_t dim_B_full_oracle(const RewriteSystem<K>& rs, std::size_t d, RankMethod method = RankMethod::automatic) {
  if (d == 0) return 1;
  if (d == 1) return EvalMatrix<K>(rs.field, oracle_rows(rs.field, 1), 1).rank(method);
  EvalMatrix<K> e(rs.field, grid_rows(rs.field, transition_patterns(d)), d, &rs);
  return e.rank(method);
}

/// Rank of all 3^d words on every F_p-point of V_d. Tuples are reversed so
/// that word position 0 sits on the last factor, matching the multilinearization.
inline std::size_t dim_B_enumerated(const QuadPresentation<PrimeField>& pres, std::size_t d, std::size_t bound = 5) {
  const PrimeField& field = pres.field;
  if (d == 0) return 1;
  std::vector<FpTuple> pts;
  if (d == 1) {
    for (const auto& p : projective_plane(field)) pts.push_back({p});
  } else {
    auto v = enumerate_Vd(pres, d, bound);
    pts.assign(v.begin(), v.end());
  }
  auto words = all_words(d);
  RowBasis<PrimeField> basis(field, words.size());
  for (const auto& t : pts) {
    PointTuple<Fp> row;
    for (auto it = t.rbegin(); it != t.rend(); ++it) row.push_back(from_key(field, *it));
    std::vector<Fp> values(words.size());
    for (std::size_t c = 0; c < words.size(); ++c) values[c] = eval_entry(row, words[c]);
    basis.insert(std::move(values));
    if (basis.rank() == words.size()) break;
  }
  return basis.rank();
}

}  // namespace skw
