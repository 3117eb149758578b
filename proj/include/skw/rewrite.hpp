#pragma once

// Degree-truncated noncommutative Groebner completion (Diamond lemma) with
// normal forms, irreducible-word bases and Hilbert functions.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "skw/freealg.hpp"
#include "skw/linalg.hpp"

namespace skw {

/// Degree-lexicographic order. `precedence` lists generators from smallest to
/// largest, so {0,1,2} is x < y < z.
struct MonomialOrder {
  std::vector<int> precedence;

  static MonomialOrder deglex(std::size_t n) {
    MonomialOrder o;
    o.precedence.resize(n);
    std::iota(o.precedence.begin(), o.precedence.end(), 0);
    return o;
  }

  /// Comma-separated generator names, smallest first: `x,y,z`.
  static MonomialOrder parse(const std::string& text, const std::vector<std::string>& names) {
    MonomialOrder o;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
      tok = detail::trim(tok);
      auto it = std::find(names.begin(), names.end(), tok);
      if (it == names.end()) throw Error(ErrorCode::invalid_argument, "unknown generator '" + tok + "' in order");
      o.precedence.push_back(static_cast<int>(it - names.begin()));
    }
    o.validate(names.size());
    return o;
  }

  void validate(std::size_t n) const {
    std::vector<int> sorted = precedence;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(n);
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) throw Error(ErrorCode::invalid_argument, "order must be a permutation of the generators");
  }

  int rank_of(int generator) const {
    return static_cast<int>(std::find(precedence.begin(), precedence.end(), generator) - precedence.begin());
  }

  bool less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      int ra = rank_of(letter(a, i)), rb = rank_of(letter(b, i));
      if (ra != rb) return ra < rb;
    }
    return false;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string s;
    for (std::size_t i = 0; i < precedence.size(); ++i) {
      if (i) s += ",";
      s += names.at(static_cast<std::size_t>(precedence[i]));
    }
    return s;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Aho-Corasick automaton recognizing words that avoid every forbidden factor.
class FactorAutomaton {
 public:
  FactorAutomaton(std::size_t alphabet, const std::vector<Word>& forbidden) : alphabet_(alphabet) {
    next_.emplace_back(alphabet, -1);
    dead_.push_back(false);
    for (const Word& w : forbidden) {
      int s = 0;
      for (char ch : w) {
        auto a = static_cast<std::size_t>(static_cast<unsigned char>(ch));
        if (next_[static_cast<std::size_t>(s)][a] < 0) {
          next_[static_cast<std::size_t>(s)][a] = static_cast<int>(next_.size());
          next_.emplace_back(alphabet, -1);
          dead_.push_back(false);
        }
        s = next_[static_cast<std::size_t>(s)][a];
      }
      dead_[static_cast<std::size_t>(s)] = true;
    }
    std::vector<int> fail(next_.size(), 0);
    std::deque<int> queue;
    for (std::size_t a = 0; a < alphabet; ++a) {
      int& t = next_[0][a];
      if (t < 0) {
        t = 0;
      } else {
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      auto s = static_cast<std::size_t>(queue.front());
      queue.pop_front();
      dead_[s] = dead_[s] || dead_[static_cast<std::size_t>(fail[s])];
      for (std::size_t a = 0; a < alphabet; ++a) {
        int t = next_[s][a];
        int f = next_[static_cast<std::size_t>(fail[s])][a];
        if (t < 0) {
          next_[s][a] = f;
        } else {
          fail[static_cast<std::size_t>(t)] = f;
          queue.push_back(t);
        }
      }
    }
  }

  std::size_t states() const { return next_.size(); }

  /// Number of words of each length 0..max_len avoiding all forbidden factors.
  std::vector<std::uint64_t> count(std::size_t max_len) const {
    std::vector<std::uint64_t> cur(next_.size(), 0), nxt(next_.size(), 0), out;
    cur[0] = 1;
    for (std::size_t d = 0;; ++d) {
      std::uint64_t total = 0;
      for (std::size_t s = 0; s < cur.size(); ++s) {
        if (__builtin_add_overflow(total, cur[s], &total)) throw Error(ErrorCode::too_large, "word count overflows 64 bits");
      }
      out.push_back(total);
      if (d == max_len) break;
      std::fill(nxt.begin(), nxt.end(), 0);
      for (std::size_t s = 0; s < cur.size(); ++s) {
        if (!cur[s]) continue;
        for (std::size_t a = 0; a < alphabet_; ++a) {
          auto t = static_cast<std::size_t>(next_[s][a]);
          if (dead_[t]) continue;
          if (__builtin_add_overflow(nxt[t], cur[s], &nxt[t])) throw Error(ErrorCode::too_large, "word count overflows 64 bits");
        }
      }
      std::swap(cur, nxt);
    }
    return out;
  }

  /// Calls visit(word) for every avoiding word of length len, in lexicographic order.
  void enumerate(std::size_t len, const std::function<void(const Word&)>& visit) const {
    Word w;
    walk(0, len, w, visit);
  }

  /// Sum over avoiding words w of length len of prod_j weight(j, w_j).
  template <class T, class Weight>
  T weighted_sum(std::size_t len, Weight&& weight, const T& zero, const T& one) const {
    std::vector<T> cur(next_.size(), zero), nxt(next_.size(), zero);
    cur[0] = one;
    for (std::size_t j = 0; j < len; ++j) {
      std::fill(nxt.begin(), nxt.end(), zero);
      for (std::size_t s = 0; s < cur.size(); ++s) {
        if (cur[s].is_zero()) continue;
        for (std::size_t a = 0; a < alphabet_; ++a) {
          auto t = static_cast<std::size_t>(next_[s][a]);
          if (dead_[t]) continue;
          T w = weight(j, a);
          if (!w.is_zero()) nxt[t] += cur[s] * w;
        }
      }
      std::swap(cur, nxt);
    }
    T total = zero;
    for (const T& v : cur) total += v;
    return total;
  }

  bool accepts(const Word& w) const {
    std::size_t s = 0;
    for (char ch : w) {
      s = static_cast<std::size_t>(next_[s][static_cast<std::size_t>(static_cast<unsigned char>(ch))]);
      if (dead_[s]) return false;
    }
    return true;
  }

 private:
  void walk(std::size_t s, std::size_t left, Word& w, const std::function<void(const Word&)>& visit) const {
    if (left == 0) {
      visit(w);
      return;
    }
    for (std::size_t a = 0; a < alphabet_; ++a) {
      auto t = static_cast<std::size_t>(next_[s][a]);
      if (dead_[t]) continue;
      w.push_back(static_cast<char>(a));
      walk(t, left - 1, w, visit);
      w.pop_back();
    }
  }

  std::size_t alphabet_;
  std::vector<std::vector<int>> next_;
  std::vector<bool> dead_;
};

template <ExactField K>
class RewriteSystem {
 public:
  using S = Scalar<K>;
  using Poly = NcPoly<S>;

  /// lead -> tail, every tail word smaller than lead.
  struct Rule {
    Word lead;
    Poly tail;
  };

  K field;
  std::vector<std::string> names;
  MonomialOrder order;

  std::size_t completed_degree() const { return degree_; }
  std::size_t rule_count() const { return rules_.size(); }

  /// Rules with words in the original generator labels.
  std::vector<Rule> rules() const {
    std::vector<Rule> out;
    for (const Rule& r : rules_) out.push_back({external(r.lead), external(r.tail)});
    return out;
  }

  std::vector<Word> leading_words() const {
    std::vector<Word> out;
    for (const Rule& r : rules_) out.push_back(external(r.lead));
    return out;
  }

  Poly normal_form(const Poly& p) const {
    if (p.max_degree() > degree_) {
      throw Error(ErrorCode::needs_deeper_completion, "degree " + std::to_string(p.max_degree()) +
                                                          " exceeds completion degree " + std::to_string(degree_));
    }
    return external(reduce(internal(p)));
  }

  bool is_irreducible(const Word& w) const { return automaton_->accepts(internal(w)); }

  std::vector<std::uint64_t> hilbert_function(std::size_t max_degree) const {
    check_degree(max_degree);
    return automaton_->count(max_degree);
  }

  /// Irreducible words of degree d in increasing monomial order.
  std::vector<Word> normal_words(std::size_t d) const {
    check_degree(d);
    std::vector<Word> out;
    automaton_->enumerate(d, [&](const Word& w) { out.push_back(external(w)); });
    return out;
  }

  /// Sum over normal words w of degree d of prod_j weight(j, w_j), letters in original labels.
  template <class Weight>
  S weighted_sum(std::size_t d, Weight&& weight) const {
    check_degree(d);
    return automaton_->weighted_sum(
        d, [&](std::size_t j, std::size_t a) { return weight(j, static_cast<std::size_t>(order.precedence[a])); }, field.zero(),
        field.one());
  }

  /// Coordinates of normal_form(p) on normal_words(d); p must be homogeneous of degree d.
  std::vector<S> coordinates(const Poly& p, const std::vector<Word>& basis) const {
    Poly nf = normal_form(p);
    std::vector<S> v(basis.size(), field.zero());
    for (const auto& [w, c] : nf.terms()) {
      auto it = std::lower_bound(basis.begin(), basis.end(), w, [&](const Word& a, const Word& b) { return order.less(a, b); });
      if (it == basis.end() || *it != w) throw Error(ErrorCode::invalid_argument, "word outside the supplied basis");
      v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
  }

  /// Recomputes every overlap ambiguity of degree <= D and every input
  /// relation multiple; true iff all reduce to zero.
  bool check_confluence() const {
    for (const Poly& s : overlap_polys(degree_, true)) {
      if (!reduce(s).is_zero()) return false;
    }
    for (const Poly& r : relations_) {
      if (r.max_degree() <= degree_ && !reduce(r).is_zero()) return false;
    }
    return true;
  }

  std::size_t ambiguity_count() const { return overlap_polys(degree_, true).size(); }

  template <ExactField K2>
  friend RewriteSystem<K2> complete_relations(const K2&, const std::vector<std::string>&, const std::vector<NcPoly<Scalar<K2>>>&,
                                              const MonomialOrder&, std::size_t);

 private:
  RewriteSystem(K f, std::vector<std::string> n, MonomialOrder o) : field(std::move(f)), names(std::move(n)), order(std::move(o)) {}

  void check_degree(std::size_t d) const {
    if (d > degree_) {
      throw Error(ErrorCode::needs_deeper_completion,
                  "degree " + std::to_string(d) + " exceeds completion degree " + std::to_string(degree_));
    }
  }

  Word internal(const Word& w) const {
    Word out(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = static_cast<char>(order.rank_of(letter(w, i)));
    return out;
  }
  Word external(const Word& w) const {
    Word out(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = static_cast<char>(order.precedence[static_cast<std::size_t>(letter(w, i))]);
    return out;
  }
  Poly internal(const Poly& p) const {
    Poly out;
    for (const auto& [w, c] : p.terms()) out.add_term(internal(w), c);
    return out;
  }
  Poly external(const Poly& p) const {
    Poly out;
    for (const auto& [w, c] : p.terms()) out.add_term(external(w), c);
    return out;
  }

  const Rule* find_rule(const Word& w, std::size_t& pos) const {
    for (std::size_t len : lead_lengths_) {
      if (len > w.size()) break;
      for (std::size_t i = 0; i + len <= w.size(); ++i) {
        auto it = index_.find(w.substr(i, len));
        if (it != index_.end()) {
          pos = i;
          return &rules_[it->second];
        }
      }
    }
    return nullptr;
  }

  // full reduction in internal letters, where shortlex is the monomial order
  Poly reduce(const Poly& p) const {
    std::map<Word, S, ShortLex> work(p.terms().begin(), p.terms().end());
    Poly out;
    while (!work.empty()) {
      auto top = std::prev(work.end());
      Word w = top->first;
      S c = top->second;
      work.erase(top);
      std::size_t pos = 0;
      const Rule* r = find_rule(w, pos);
      if (!r) {
        out.add_term(w, c);
        continue;
      }
      const Word prefix = w.substr(0, pos), suffix = w.substr(pos + r->lead.size());
      for (const auto& [tw, tc] : r->tail.terms()) {
        Word nw = prefix + tw + suffix;
        S v = c * tc;
        auto [it, fresh] = work.try_emplace(nw, v);
        if (!fresh) {
          it->second += v;
          if (it->second.is_zero()) work.erase(it);
        }
      }
    }
    return out;
  }

  // S-polynomials of overlaps l1 = u s, l2 = s v with |u s v| == d (or <= d)
  std::vector<Poly> overlap_polys(std::size_t d, bool up_to) const {
    std::vector<Poly> out;
    for (const Rule& r1 : rules_) {
      for (const Rule& r2 : rules_) {
        const std::size_t n1 = r1.lead.size(), n2 = r2.lead.size();
        for (std::size_t k = 1; k < std::min(n1, n2); ++k) {
          std::size_t total = n1 + n2 - k;
          if (up_to ? total > d : total != d) continue;
          if (r1.lead.compare(n1 - k, k, r2.lead, 0, k) != 0) continue;
          const Word u = r1.lead.substr(0, n1 - k), v = r2.lead.substr(k);
          Poly s;
          for (const auto& [w, c] : r1.tail.terms()) s.add_term(w + v, c);
          for (const auto& [w, c] : r2.tail.terms()) s.add_term(u + w, -c);
          out.push_back(std::move(s));
        }
      }
    }
    return out;
  }

  void add_rules_from(const std::vector<Poly>& candidates) {
    std::set<Word, ShortLex> support;
    for (const Poly& p : candidates) {
      for (const auto& [w, c] : p.terms()) support.insert(w);
    }
    if (support.empty()) return;
    std::vector<Word> cols(support.rbegin(), support.rend());  // descending
    std::unordered_map<Word, std::size_t> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
    Matrix<S> m(candidates.size(), cols.size(), field.zero());
    for (std::size_t r = 0; r < candidates.size(); ++r) {
      for (const auto& [w, c] : candidates[r].terms()) m(r, col_of[w]) = c;
    }
    Echelon<K> e = rref(field, m);
    for (std::size_t r = 0; r < e.rank(); ++r) {
      Rule rule;
      rule.lead = cols[e.pivots[r]];
      for (std::size_t c = e.pivots[r] + 1; c < cols.size(); ++c) {
        if (!e.reduced(r, c).is_zero()) rule.tail.add_term(cols[c], -e.reduced(r, c));
      }
      index_[rule.lead] = rules_.size();
      rules_.push_back(std::move(rule));
    }
    lead_lengths_.clear();
    for (const Rule& r : rules_) lead_lengths_.push_back(r.lead.size());
    std::sort(lead_lengths_.begin(), lead_lengths_.end());
    lead_lengths_.erase(std::unique(lead_lengths_.begin(), lead_lengths_.end()), lead_lengths_.end());
  }

  void finish() {
    std::vector<Word> leads;
    for (const Rule& r : rules_) leads.push_back(r.lead);
    automaton_ = std::make_shared<const FactorAutomaton>(names.size(), leads);
  }

  std::size_t degree_ = 0;
  std::vector<Rule> rules_;
  std::vector<Poly> relations_;
  std::unordered_map<Word, std::size_t> index_;
  std::vector<std::size_t> lead_lengths_;
  std::shared_ptr<const FactorAutomaton> automaton_;
};

/// Completion of an arbitrary list of homogeneous relations up to degree D.
template <ExactField K>
RewriteSystem<K> complete_relations(const K& field, const std::vector<std::string>& names,
                                    const std::vector<NcPoly<Scalar<K>>>& relations, const MonomialOrder& order,
                                    std::size_t D) {
  order.validate(names.size());
  RewriteSystem<K> rs(field, names, order);
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (!r.homogeneous_degree()) throw Error(ErrorCode::invalid_presentation, "relations must be homogeneous");
    if (r.max_degree() == 0) throw Error(ErrorCode::invalid_presentation, "nonzero constant relation");
    rs.relations_.push_back(rs.internal(r));
  }
  for (std::size_t d = 1; d <= D; ++d) {
    std::vector<NcPoly<Scalar<K>>> candidates;
    for (const auto& r : rs.relations_) {
      if (r.max_degree() == d) candidates.push_back(rs.reduce(r));
    }
    for (auto& s : rs.overlap_polys(d, false)) candidates.push_back(rs.reduce(s));
    std::erase_if(candidates, [](const auto& p) { return p.is_zero(); });
    rs.add_rules_from(candidates);
  }
  rs.degree_ = D;
  rs.finish();
  return rs;
}

template <ExactField K>
RewriteSystem<K> complete_to_degree(const QuadPresentation<K>& p, const MonomialOrder& order, std::size_t D) {
  if (D < 2) throw Error(ErrorCode::invalid_argument, "completion degree must be at least 2");
  return complete_relations(p.field, p.names, p.relations, order, D);
}

template <ExactField K>
RewriteSystem<K> complete_to_degree(const QuadPresentation<K>& p, std::size_t D) {
  return complete_to_degree(p, MonomialOrder::deglex(p.n_generators()), D);
}

template <ExactField K>
std::vector<std::uint64_t> hilbert_function(const RewriteSystem<K>& rs, std::size_t D) {
  return rs.hilbert_function(D);
}

template <ExactField K>
NcPoly<Scalar<K>> normal_form(const RewriteSystem<K>& rs, const NcPoly<Scalar<K>>& p) {
  return rs.normal_form(p);
}

template <ExactField K>
std::vector<Word> normal_words(const RewriteSystem<K>& rs, std::size_t d) {
  return rs.normal_words(d);
}

}  // namespace skw
