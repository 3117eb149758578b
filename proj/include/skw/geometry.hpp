#pragma once

// Multilinearized relations, the matrix M(p), the cubic E, components of the
// truncated point schemes V_d and their enumeration over prime fields.

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skw/freealg.hpp"
#include "skw/linalg.hpp"

namespace skw {

template <class S>
struct ProjPoint {
  std::array<S, 3> c;

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  /// First nonzero coordinate scaled to 1.
  ProjPoint normalized() const {
    std::size_t i = 0;
    while (i < 3 && c[i].is_zero()) ++i;
    if (i == 3) throw Error(ErrorCode::invalid_argument, "zero vector is not a projective point");
    S inv = c[i].inverse();
    return {{c[0] * inv, c[1] * inv, c[2] * inv}};
  }

  friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (!(p.c[i] * q.c[j] == p.c[j] * q.c[i])) return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    return "[" + c[0].to_string() + ":" + c[1].to_string() + ":" + c[2].to_string() + "]";
  }
};

/// [1 : w^k : w^{2k}] for the field's chosen cube root w.
template <CubeRootField K>
ProjPoint<Scalar<K>> root_point(const K& field, int k) {
  Scalar<K> w = field.zeta(), wk = field.one();
  for (int i = 0; i < ((k % 3) + 3) % 3; ++i) wk = wk * w;
  return {{field.one(), wk, wk * wk}};
}

/// A form on the factors i and i+1 of (P^2)^d. coeffs[{a, b}] multiplies
/// coordinate a of factor i+1 and coordinate b of factor i.
template <class S>
struct MultilinearForm {
  std::size_t degree = 0;
  std::size_t factor = 0;
  std::map<std::pair<int, int>, S> coeffs;

  S evaluate(const std::vector<ProjPoint<S>>& pts) const {
    S total;
    for (const auto& [key, c] : coeffs) {
      total += c * pts.at(factor + 1).c[static_cast<std::size_t>(key.first)] * pts.at(factor).c[static_cast<std::size_t>(key.second)];
    }
    return total;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
      if (it != coeffs.begin()) out += " + ";
      out += format_coefficient(it->second.to_string()) + "*" + names.at(static_cast<std::size_t>(it->first.first)) +
             std::to_string(factor + 1) + "." + names.at(static_cast<std::size_t>(it->first.second)) + std::to_string(factor);
    }
    return out;
  }
};

/// The word x_a x_b in relation r becomes (x_a)_{i+1} (x_b)_i in block i.
template <ExactField K>
std::vector<MultilinearForm<Scalar<K>>> multilinearize(const QuadPresentation<K>& p, std::size_t d) {
  if (d < 2) throw Error(ErrorCode::invalid_argument, "multilinearization needs d >= 2");
  std::vector<MultilinearForm<Scalar<K>>> out;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    for (const auto& r : p.relations) {
      MultilinearForm<Scalar<K>> f;
      f.degree = d;
      f.factor = i;
      for (const auto& [w, c] : r.terms()) f.coeffs[{letter(w, 0), letter(w, 1)}] = c;
      out.push_back(std::move(f));
    }
  }
  return out;
}

/// M(p)[r][a] = sum_b c_{r,ab} p_b, so the relations vanish at (p, q) iff M(p) q = 0.
template <ExactField K>
Matrix<Scalar<K>> m_matrix(const QuadPresentation<K>& pres, const ProjPoint<Scalar<K>>& p) {
  const std::size_t n = pres.n_generators();
  if (n != 3) throw Error(ErrorCode::invalid_argument, "M(p) needs three generators");
  Matrix<Scalar<K>> c = pres.coefficient_matrix();
  Matrix<Scalar<K>> m(c.rows(), 3, pres.field.zero());
  for (std::size_t r = 0; r < c.rows(); ++r) {
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) m(r, a) += c(r, a * 3 + b) * p.c[b];
    }
  }
  return m;
}

/// Rows (c x, a z, b y), (b z, c y, a x), (a y, b x, c z).
template <ExactField K>
Matrix<Scalar<K>> m_matrix(const K& field, const Scalar<K>& a, const Scalar<K>& b, const Scalar<K>& c,
                           const ProjPoint<Scalar<K>>& p) {
  const auto& [x, y, z] = p.c;
  Matrix<Scalar<K>> m(3, 3, field.zero());
  m(0, 0) = c * x, m(0, 1) = a * z, m(0, 2) = b * y;
  m(1, 0) = b * z, m(1, 1) = c * y, m(1, 2) = a * x;
  m(2, 0) = a * y, m(2, 1) = b * x, m(2, 2) = c * z;
  return m;
}

/// (a^3 + b^3 + c^3) xyz - abc (x^3 + y^3 + z^3).
template <ExactField K>
Scalar<K> e_cubic(const K& field, const Scalar<K>& a, const Scalar<K>& b, const Scalar<K>& c, const ProjPoint<Scalar<K>>& p) {
  (void)field;
  const auto& [x, y, z] = p.c;
  return (a * a * a + b * b * b + c * c * c) * x * y * z - a * b * c * (x * x * x + y * y * y + z * z * z);
}

/// Membership in E, computed both from the cubic and from det M(p); the two must agree.
template <ExactField K>
bool on_curve_E(const K& field, const Scalar<K>& a, const Scalar<K>& b, const Scalar<K>& c, const ProjPoint<Scalar<K>>& p) {
  Scalar<K> cubic = e_cubic(field, a, b, c, p);
  Scalar<K> det = det3(m_matrix(field, a, b, c, p));
  if (!(cubic == det)) throw std::logic_error("det M(p) differs from the E cubic at " + p.to_string());
  return cubic.is_zero();
}

enum class SlotKind { line, point };

/// Line(k) is x + w^{2k} y + w^k z = 0, the side of the triangle of root
/// points opposite Point(k) = [1 : w^k : w^{2k}].
struct Slot {
  SlotKind kind;
  int label;  // exponent k of w

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;

  std::string to_string() const {
    static const char* names[] = {"1", "w", "w^2"};
    return std::string(kind == SlotKind::line ? "Line(" : "Point(") + names[label] + ")";
  }
};

struct ComponentSpec {
  int index = 0;  // 1..6
  std::vector<Slot> slots;

  std::size_t line_count() const {
    return static_cast<std::size_t>(std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.kind == SlotKind::line; }));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < slots.size(); ++i) out += (i ? " x " : "") + slots[i].to_string();
    return out;
  }
};

/// The six alternating components of V_d for S(1,1,1): W_{2k+1} starts with
/// Line(k), W_{2k+2} starts with Point(k).
inline std::vector<ComponentSpec> component_specs(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "component_specs needs d >= 1");
  std::vector<ComponentSpec> out;
  for (int k = 0; k < 3; ++k) {
    for (int start = 0; start < 2; ++start) {
      ComponentSpec spec;
      spec.index = 2 * k + start + 1;
      for (std::size_t i = 0; i < d; ++i) {
        bool line = (i % 2 == 0) == (start == 0);
        spec.slots.push_back({line ? SlotKind::line : SlotKind::point, k});
      }
      out.push_back(spec);
    }
  }
  return out;
}

/// Intersection of two slots: nullopt if empty, otherwise the smaller slot.
inline std::optional<Slot> intersect_slots(const Slot& s, const Slot& t) {
  if (s.kind == SlotKind::line && t.kind == SlotKind::line) {
    if (s.label == t.label) return s;
    return Slot{SlotKind::point, 3 - s.label - t.label};
  }
  if (s.kind == SlotKind::point && t.kind == SlotKind::point) {
    if (s.label == t.label) return s;
    return std::nullopt;
  }
  const Slot& pt = s.kind == SlotKind::point ? s : t;
  const Slot& ln = s.kind == SlotKind::point ? t : s;
  if (pt.label != ln.label) return pt;
  return std::nullopt;
}

inline std::optional<std::vector<Slot>> intersect_components(const ComponentSpec& a, const ComponentSpec& b) {
  std::vector<Slot> out;
  for (std::size_t i = 0; i < a.slots.size(); ++i) {
    auto s = intersect_slots(a.slots[i], b.slots[i]);
    if (!s) return std::nullopt;
    out.push_back(*s);
  }
  return out;
}

struct SingularPoint {
  std::vector<int> labels;   // point labels k, one per factor
  std::vector<int> components;  // indices of the components containing it
};

/// Points of V_d lying on at least two components, from all 15 pairwise intersections.
inline std::vector<SingularPoint> singular_locus(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::invalid_argument, "singular_locus needs d >= 2");
  auto specs = component_specs(d);
  std::map<std::vector<int>, std::vector<int>> found;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (std::size_t j = i + 1; j < specs.size(); ++j) {
      auto meet = intersect_components(specs[i], specs[j]);
      if (!meet) continue;
      std::vector<int> labels;
      for (const Slot& s : *meet) {
        if (s.kind != SlotKind::point) throw std::logic_error("distinct components share a line slot");
        labels.push_back(s.label);
      }
      auto& comps = found[labels];
      for (int c : {specs[i].index, specs[j].index}) {
        if (std::find(comps.begin(), comps.end(), c) == comps.end()) comps.push_back(c);
      }
    }
  }
  std::vector<SingularPoint> out;
  for (auto& [labels, comps] : found) {
    std::sort(comps.begin(), comps.end());
    out.push_back({labels, comps});
  }
  std::sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) { return a.components < b.components; });
  return out;
}

/// Every slot pattern allowed by the extension rule L(k) -> P(k), P(k) -> L(k)
/// and P(k) -> P(j) for j != k. With maximal_only, patterns contained slotwise
/// in another pattern are dropped. Their union is all of V_d for d >= 2.
inline std::vector<ComponentSpec> transition_patterns(std::size_t d, bool maximal_only = true) {
  if (d < 2) throw Error(ErrorCode::invalid_argument, "transition_patterns needs d >= 2");
  auto allowed = [](const Slot& a, const Slot& b) {
    if (a.kind == SlotKind::line) return b.kind == SlotKind::point && b.label == a.label;
    return b.kind == SlotKind::line ? b.label == a.label : b.label != a.label;
  };
  std::vector<Slot> all;
  for (int k = 0; k < 3; ++k) all.push_back({SlotKind::line, k});
  for (int k = 0; k < 3; ++k) all.push_back({SlotKind::point, k});
  std::vector<std::vector<Slot>> pats;
  std::vector<Slot> cur;
  std::function<void()> rec = [&]() {
    if (cur.size() == d) {
      pats.push_back(cur);
      return;
    }
    for (const Slot& s : all) {
      if (!cur.empty() && !allowed(cur.back(), s)) continue;
      cur.push_back(s);
      rec();
      cur.pop_back();
    }
  };
  rec();
  // P(j) at position s widens to L(k) iff every neighbour is P(k), k != j
  auto widenable = [&](const std::vector<Slot>& pat, std::size_t s) {
    if (pat[s].kind != SlotKind::point) return false;
    for (int k = 0; k < 3; ++k) {
      if (k == pat[s].label) continue;
      const Slot pk{SlotKind::point, k};
      if ((s == 0 || pat[s - 1] == pk) && (s + 1 == pat.size() || pat[s + 1] == pk)) return true;
    }
    return false;
  };
  std::vector<ComponentSpec> out;
  for (const auto& pat : pats) {
    bool maximal = true;
    for (std::size_t s = 0; maximal_only && s < d && maximal; ++s) maximal = !widenable(pat, s);
    if (maximal) out.push_back({static_cast<int>(out.size()) + 1, pat});
  }
  return out;
}

template <CubeRootField K>
std::array<Scalar<K>, 3> line_equation(const K& field, int k) {
  auto p = root_point(field, k);
  return {field.one(), p.c[2], p.c[1]};
}

template <CubeRootField K>
bool on_slot(const K& field, const Slot& s, const ProjPoint<Scalar<K>>& p) {
  if (s.kind == SlotKind::point) return p == root_point(field, s.label);
  auto e = line_equation(field, s.label);
  return (e[0] * p.c[0] + e[1] * p.c[1] + e[2] * p.c[2]).is_zero();
}

template <CubeRootField K>
bool in_component(const K& field, const ComponentSpec& spec, const std::vector<ProjPoint<Scalar<K>>>& pts) {
  if (pts.size() != spec.slots.size()) return false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!on_slot(field, spec.slots[i], pts[i])) return false;
  }
  return true;
}

/// The point [theta(y,z) : y : z] of Line(k), theta(y,z) = -(w^{2k} y + w^k z).
template <CubeRootField K>
ProjPoint<Scalar<K>> line_point(const K& field, int k, const Scalar<K>& y, const Scalar<K>& z) {
  auto e = line_equation(field, k);
  return {{-(e[1] * y + e[2] * z), y, z}};
}

template <ExactField K>
struct Extension {
  enum class Kind { unique, pencil, plane } kind;
  std::vector<std::vector<Scalar<K>>> kernel;  // basis of ker M(p)
  std::optional<ProjPoint<Scalar<K>>> point;   // for unique
  /// For a pencil with x solved: theta(y, z) = theta_y * y + theta_z * z.
  std::optional<std::pair<Scalar<K>, Scalar<K>>> theta;
};

/// Admissible next points after p: the projectivized kernel of M(p).
template <ExactField K>
Extension<K> extend_point(const QuadPresentation<K>& pres, const ProjPoint<Scalar<K>>& p) {
  auto m = m_matrix(pres, p);
  auto ker = nullspace(pres.field, m);
  Extension<K> ext{Extension<K>::Kind::unique, ker, std::nullopt, std::nullopt};
  if (ker.empty()) throw Error(ErrorCode::no_extension, "M(p) is invertible at " + p.to_string() + "; p is not on E");
  if (ker.size() == 1) {
    ext.point = ProjPoint<Scalar<K>>{{ker[0][0], ker[0][1], ker[0][2]}}.normalized();
  } else if (ker.size() == 2) {
    ext.kind = Extension<K>::Kind::pencil;
    Echelon<K> e = rref(pres.field, m);
    if (e.rank() == 1 && e.pivots[0] == 0) ext.theta = std::make_pair(-e.reduced(0, 1), -e.reduced(0, 2));
  } else {
    ext.kind = Extension<K>::Kind::plane;
  }
  return ext;
}

// ---------------------------------------------------------------------------
// Prime-field enumeration. Points are stored normalized as residue triples.

using FpPoint = std::array<std::uint32_t, 3>;
using FpTuple = std::vector<FpPoint>;

inline FpPoint to_key(const ProjPoint<Fp>& p) {
  auto n = p.normalized();
  return {n.c[0].value(), n.c[1].value(), n.c[2].value()};
}

inline ProjPoint<Fp> from_key(const PrimeField& field, const FpPoint& k) {
  return {{field.element(k[0]), field.element(k[1]), field.element(k[2])}};
}

/// All points of P^2(F_p), normalized, in lexicographic order of (first nonzero position reversed).
inline std::vector<FpPoint> projective_plane(const PrimeField& field) {
  const std::uint32_t p = field.characteristic();
  std::vector<FpPoint> pts;
  for (std::uint32_t y = 0; y < p; ++y) {
    for (std::uint32_t z = 0; z < p; ++z) pts.push_back({1, y, z});
  }
  for (std::uint32_t z = 0; z < p; ++z) pts.push_back({0, 1, z});
  pts.push_back({0, 0, 1});
  return pts;
}

/// Projective points of the span of a kernel basis.
inline std::vector<FpPoint> projective_span(const PrimeField& field, const std::vector<std::vector<Fp>>& basis) {
  std::set<FpPoint> out;
  if (basis.size() == 1) {
    out.insert(to_key({{basis[0][0], basis[0][1], basis[0][2]}}));
  } else if (basis.size() == 2) {
    const std::uint32_t p = field.characteristic();
    auto add = [&](const Fp& s, const Fp& t) {
      ProjPoint<Fp> q{{s * basis[0][0] + t * basis[1][0], s * basis[0][1] + t * basis[1][1], s * basis[0][2] + t * basis[1][2]}};
      out.insert(to_key(q));
    };
    add(field.zero(), field.one());
    for (std::uint32_t s = 0; s < p; ++s) add(field.one(), field.element(s));
  } else if (basis.size() == 3) {
    auto all = projective_plane(field);
    out.insert(all.begin(), all.end());
  }
  return {out.begin(), out.end()};
}

/// F_p-points of V_d by chain extension through kernels of M.
template <class Visit>
void for_each_Vd_point(const QuadPresentation<PrimeField>& pres, std::size_t d, Visit&& visit) {
  const PrimeField& field = pres.field;
  std::map<FpPoint, std::vector<FpPoint>> next_cache;
  auto successors = [&](const FpPoint& key) -> const std::vector<FpPoint>& {
    auto it = next_cache.find(key);
    if (it != next_cache.end()) return it->second;
    auto ker = nullspace(field, m_matrix(pres, from_key(field, key)));
    return next_cache.emplace(key, projective_span(field, ker)).first->second;
  };
  FpTuple tuple;
  std::function<void()> rec = [&]() {
    if (tuple.size() == d) {
      visit(static_cast<const FpTuple&>(tuple));
      return;
    }
    const std::vector<FpPoint> nexts = successors(tuple.back());
    for (const FpPoint& q : nexts) {
      tuple.push_back(q);
      rec();
      tuple.pop_back();
    }
  };
  for (const FpPoint& p0 : projective_plane(field)) {
    tuple.assign(1, p0);
    rec();
  }
}

inline std::set<FpTuple> enumerate_Vd(const QuadPresentation<PrimeField>& pres, std::size_t d, std::size_t bound = 5) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "enumerate_Vd needs d >= 1");
  if (d > bound) throw Error(ErrorCode::too_large, "d = " + std::to_string(d) + " exceeds enumeration bound " + std::to_string(bound));
  std::set<FpTuple> out;
  for_each_Vd_point(pres, d, [&](const FpTuple& t) { out.insert(t); });
  return out;
}

/// Exhaustive check of every tuple in (P^2(F_p))^d against all multilinear forms.
inline std::set<FpTuple> enumerate_Vd_bruteforce(const QuadPresentation<PrimeField>& pres, std::size_t d) {
  const PrimeField& field = pres.field;
  auto plane = projective_plane(field);
  double total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= static_cast<double>(plane.size());
  if (total > 5e7) throw Error(ErrorCode::too_large, "brute-force enumeration too large");
  auto forms = multilinearize(pres, std::max<std::size_t>(d, 2));
  std::set<FpTuple> out;
  std::vector<std::size_t> idx(d, 0);
  std::vector<ProjPoint<Fp>> pts(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) pts[i] = from_key(field, plane[idx[i]]);
    bool ok = true;
    if (d >= 2) {
      for (const auto& f : forms) {
        if (!f.evaluate(pts).is_zero()) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      FpTuple t;
      for (std::size_t i = 0; i < d; ++i) t.push_back(plane[idx[i]]);
      out.insert(t);
    }
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++idx[i] < plane.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (d == 0) return out;
  }
}

/// F_p-points of one component.
inline std::set<FpTuple> component_points(const PrimeField& field, const ComponentSpec& spec) {
  const std::uint32_t p = field.characteristic();
  std::vector<std::vector<FpPoint>> choices;
  for (const Slot& s : spec.slots) {
    std::vector<FpPoint> c;
    if (s.kind == SlotKind::point) {
      c.push_back(to_key(root_point(field, s.label)));
    } else {
      c.push_back(to_key(line_point(field, s.label, field.one(), field.zero())));
      for (std::uint32_t t = 0; t < p; ++t) c.push_back(to_key(line_point(field, s.label, field.element(t), field.one())));
    }
    choices.push_back(std::move(c));
  }
  std::set<FpTuple> out;
  FpTuple cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      out.insert(cur);
      return;
    }
    for (const auto& q : choices[i]) {
      cur.push_back(q);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::set<FpTuple> union_points(const PrimeField& field, const std::vector<ComponentSpec>& specs) {
  std::set<FpTuple> out;
  for (const auto& spec : specs) {
    auto pts = component_points(field, spec);
    out.insert(pts.begin(), pts.end());
  }
  return out;
}

inline std::set<FpTuple> component_union(const PrimeField& field, std::size_t d) {
  return union_points(field, component_specs(d));
}

/// Components of S(1,1,1) containing the tuple.
inline std::vector<int> component_membership(const PrimeField& field, const FpTuple& t) {
  std::vector<ProjPoint<Fp>> pts;
  for (const auto& k : t) pts.push_back(from_key(field, k));
  std::vector<int> out;
  for (const auto& spec : component_specs(t.size())) {
    if (in_component(field, spec, pts)) out.push_back(spec.index);
  }
  return out;
}

}  // namespace skw
