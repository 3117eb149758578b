#pragma once

// Command-line front end: subcommands, configuration, presentation loading and
// report output. run_cli returns the process exit code.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "skw/geometry.hpp"
#include "skw/ppring.hpp"
#include "skw/quadops.hpp"
#include "skw/report.hpp"
#include "skw/rewrite.hpp"
#include "skw/suite.hpp"

namespace skw::cli {

enum ExitCode : int {
  exit_pass = 0,
  exit_check_failed = 1,
  exit_usage = 2,
  exit_input = 3,
  exit_bound = 4,
  exit_internal = 5,
};

/// A bound outside the accepted range (exit code 4).
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<std::string> field;  // unset: subcommand default
  std::string presentation;          // empty: subcommand default
  std::string order;                 // empty: x < y < z
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> oracle_max;
  std::string out;
  std::string format = "json";
  bool fast = false;
  bool timing = false;

  // subcommand specifics
  std::string automorphism = "sigma";
  bool inverse = false;
  std::string element;
  std::size_t d = 3;
  std::string mode = "compare";

  FieldSpec field_spec() const {
    if (field) return FieldSpec::parse(*field);
    return fast ? FieldSpec::prime(7) : FieldSpec::cyclotomic3();
  }

  std::size_t degree_or(std::size_t fallback) const {
    std::size_t d = max_degree.value_or(fallback);
    return fast ? std::min<std::size_t>(d, 6) : d;
  }

  std::size_t oracle_or(std::size_t fallback) const {
    std::size_t d = oracle_max.value_or(fallback);
    return fast ? std::min<std::size_t>(d, 6) : d;
  }

  Json to_json() const {
    Json j;
    j["field"] = field_spec().to_string();
    j["presentation"] = presentation;
    j["order"] = order.empty() ? Json(nullptr) : Json(order);
    j["max_degree"] = max_degree ? Json(*max_degree) : Json(nullptr);
    j["oracle_max"] = oracle_max ? Json(*oracle_max) : Json(nullptr);
    j["fast"] = fast;
    j["format"] = format;
    return j;
  }
};

inline void require_positive(std::size_t v, const char* what) {
  if (v == 0) throw BoundError(std::string(what) + " must be at least 1");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read presentation file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) out.push_back(detail::trim(tok));
  return out;
}

template <ExactField K>
struct Loaded {
  QuadPresentation<K> pres;
  std::string label;
  bool ore = false;
  std::optional<std::pair<Scalar<K>, Scalar<K>>> ore_params;
};

/// builtin:s111, builtin:s100, builtin:s1bc:<b>,<c>, builtin:sabc:<a>,<b>,<c>,
/// builtin:ore:<b>,<c>, or a path to a presentation file.
template <ExactField K>
Loaded<K> load_presentation(const K& field, const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) != 0) {
    return {parse_presentation_text(field, read_file(spec)), spec, false, std::nullopt};
  }
  std::string rest = spec.substr(prefix.size());
  std::string name = rest.substr(0, rest.find(':'));
  std::string args = rest.find(':') == std::string::npos ? "" : rest.substr(rest.find(':') + 1);
  auto scalars = [&](std::size_t n) {
    auto parts = split_commas(args);
    if (parts.size() != n) {
      throw Error(ErrorCode::parse_error, "builtin:" + name + " expects " + std::to_string(n) + " comma-separated scalars");
    }
    std::vector<Scalar<K>> out;
    for (const auto& p : parts) out.push_back(field.parse(p));
    return out;
  };
  if (name == "s111" && args.empty()) return {sklyanin_presentation(field, field.one(), field.one(), field.one()), spec, false, std::nullopt};
  if (name == "s100" && args.empty()) return {sklyanin_presentation(field, field.one(), field.zero(), field.zero()), spec, false, std::nullopt};
  if (name == "s1bc") {
    auto v = scalars(2);
    return {sklyanin_presentation(field, field.one(), v[0], v[1]), spec, false, std::nullopt};
  }
  if (name == "sabc") {
    auto v = scalars(3);
    return {sklyanin_presentation(field, v[0], v[1], v[2]), spec, false, std::nullopt};
  }
  if (name == "ore") {
    auto v = scalars(2);
    return {ore_extension(field, v[0], v[1]), spec, true, std::make_pair(v[0], v[1])};
  }
  throw Error(ErrorCode::parse_error, "unknown builtin presentation '" + spec + "'");
}

template <ExactField K>
MonomialOrder order_for(const RunConfig& cfg, const QuadPresentation<K>& p) {
  return cfg.order.empty() ? MonomialOrder::deglex(p.n_generators()) : MonomialOrder::parse(cfg.order, p.names);
}

/// Expected Hilbert function of a Sklyanin presentation, when one is known.
template <ExactField K>
std::optional<std::vector<std::uint64_t>> known_dims(const QuadPresentation<K>& p, std::size_t D) {
  if (!p.params) return std::nullopt;
  const auto& [a, b, c] = *p.params;
  if (in_degenerate_locus(p.field, a, b, c)) return suite::degenerate_dims(D);
  return suite::polynomial_ring_dims(D);
}

template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
  return std::visit(fn, make_field(spec));
}

template <class K>
void require_cube_roots(const K& field, const char* what) {
  if constexpr (!CubeRootField<K>) {
    throw Error(ErrorCode::unsupported_field, std::string(what) + " needs a field with cube roots of unity, not " + field.spec().to_string());
  }
}

// ---------------------------------------------------------------------------
// Subcommands

template <ExactField K>
void cmd_hilbert(Report& rep, const K& field, const RunConfig& cfg) {
  const std::size_t D = cfg.degree_or(8);
  require_positive(D, "--max-degree");
  auto loaded = load_presentation(field, cfg.presentation);
  const auto& P = loaded.pres;
  auto order = order_for(cfg, P);
  auto rs = complete_to_degree(P, order, std::max<std::size_t>(D, 2));
  auto dims = rs.hilbert_function(D);
  rep.set_data({{"presentation", loaded.label},
                {"generators", P.names},
                {"relations", suite::relations_json(P)},
                {"order", order.to_string(P.names)},
                {"rules", rs.rule_count()},
                {"dims", dims}});
  rep.add(timed_check("hilbert function", 0, [&](CheckRecord& r) {
    r.inputs = {{"presentation", loaded.label}, {"max_degree", D}};
    r.computed = dims;
    if (auto want = known_dims(P, D)) {
      r.expected = *want;
      r.provenance = Provenance::published;
      r.pass = dims == *want;
    } else {
      r.pass = true;
    }
  }));
  rep.add(timed_check("confluence through degree " + std::to_string(std::max<std::size_t>(D, 2)), 0, [&](CheckRecord& r) {
    r.expected = true;
    r.provenance = Provenance::trivial;
    r.computed = rs.check_confluence();
    r.pass = r.computed == r.expected;
  }));
}

template <ExactField K>
void cmd_koszul(Report& rep, const K& field, const RunConfig& cfg) {
  const std::size_t D = cfg.degree_or(5);
  require_positive(D, "--max-degree");
  auto loaded = load_presentation(field, cfg.presentation);
  const auto& P = loaded.pres;
  auto dual = koszul_dual(P);
  auto dims = complete_to_degree(dual, order_for(cfg, dual), std::max<std::size_t>(D, 2)).hilbert_function(D);
  rep.set_data({{"presentation", loaded.label}, {"relations", suite::relations_json(dual)}, {"dims", dims}});
  rep.add(timed_check("pairing with the original relations", 0, [&](CheckRecord& r) {
    r.expected = true;
    r.provenance = Provenance::trivial;
    r.computed = pairs_to_zero(P, dual);
    r.pass = r.computed == r.expected;
  }));
  if constexpr (CubeRootField<K>) {
    if (P.params && !(*P.params)[0].is_zero() && !(*P.params)[1].is_zero() &&
        in_degenerate_locus(field, (*P.params)[0], (*P.params)[1], (*P.params)[2])) {
      const auto b = (*P.params)[1], c = (*P.params)[2];
      auto printed = make_presentation(field, default_names(3), suite::printed_dual_relations(field, b, c));
      rep.add(timed_check("span equals the printed dual list", 0, [&](CheckRecord& r) {
        r.expected = suite::relations_json(printed);
        r.provenance = Provenance::published;
        r.computed = suite::relations_json(dual);
        r.pass = relation_span_equal(dual, printed);
        if (!r.pass) r.note = "printed list spans the dual of S(1,b^2,c) instead";
      }));
      rep.add(timed_check("dual hilbert function", 0, [&](CheckRecord& r) {
        std::vector<std::uint64_t> want(D + 1, 3);
        want[0] = 1;
        r.expected = want;
        r.provenance = Provenance::published;
        r.computed = dims;
        r.pass = dims == want;
      }));
    }
  }
}

template <ExactField K>
GradedAutomorphism<K> parse_automorphism(const K& field, const std::string& spec) {
  if (spec == "sigma") {
    require_cube_roots(field, "sigma");
    return GradedAutomorphism<K>::sigma(field);
  }
  if (spec == "tau") return GradedAutomorphism<K>::tau(field);
  const std::string prefix = "matrix:";
  if (spec.rfind(prefix, 0) == 0) {
    std::vector<Scalar<K>> entries;
    for (const auto& p : split_commas(spec.substr(prefix.size()))) entries.push_back(field.parse(p));
    auto g = GradedAutomorphism<K>::from_images(field, entries);
    g.inverse(field);  // reject singular matrices early
    return g;
  }
  throw Error(ErrorCode::parse_error, "unknown automorphism '" + spec + "' (sigma, tau or matrix:<9 scalars>)");
}

template <ExactField K>
void cmd_twist(Report& rep, const K& field, const RunConfig& cfg) {
  const std::size_t D = cfg.degree_or(6);
  require_positive(D, "--max-degree");
  auto loaded = load_presentation(field, cfg.presentation);
  const auto& P = loaded.pres;
  if (P.n_generators() != 3) throw Error(ErrorCode::invalid_argument, "twist needs three generators");
  auto g = parse_automorphism(field, cfg.automorphism);
  if (cfg.inverse) g = g.inverse(field);
  auto tw = zhang_twist(P, g);
  auto before = complete_to_degree(P, std::max<std::size_t>(D, 2)).hilbert_function(D);
  auto after = complete_to_degree(tw, std::max<std::size_t>(D, 2)).hilbert_function(D);
  Json matrix = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < 3; ++j) row.push_back(g.matrix(i, j).to_string());
    matrix.push_back(row);
  }
  Json data = {{"presentation", loaded.label},
               {"automorphism", cfg.automorphism + (cfg.inverse ? "^-1" : "")},
               {"matrix", matrix},
               {"relations", suite::relations_json(tw)},
               {"dims", after}};
  if constexpr (CubeRootField<K>) data["identified"] = suite::identify(tw);
  rep.set_data(std::move(data));
  rep.add(timed_check("automorphism preserves the relations", 0, [&](CheckRecord& r) {
    QuadPresentation<K> image = P;
    for (auto& rel : image.relations) rel = g.apply(rel);
    r.expected = true;
    r.provenance = Provenance::trivial;
    r.pass = relation_span_equal(image, P);
    r.computed = r.pass;
    if (!r.pass) r.note = "matrix is not a graded automorphism of the algebra";
  }));
  rep.add(timed_check("twist preserves the hilbert function", 0, [&](CheckRecord& r) {
    r.inputs = {{"max_degree", D}};
    r.expected = before;
    r.provenance = Provenance::derived;
    r.computed = after;
    r.pass = before == after;
  }));
}

template <ExactField K>
void cmd_certify(Report& rep, const K& field, const RunConfig& cfg) {
  auto loaded = load_presentation(field, cfg.presentation);
  const auto& P = loaded.pres;
  NcPoly<Scalar<K>> w;
  if (!cfg.element.empty()) {
    w = parse_poly(field, cfg.element, P.names, 1);
  } else if (loaded.ore_params) {
    w = omega(field, loaded.ore_params->first, loaded.ore_params->second);
  } else {
    throw Error(ErrorCode::invalid_argument, "--element is required unless the presentation is builtin:ore:<b>,<c>");
  }
  auto deg = w.homogeneous_degree();
  if (!deg || *deg == 0) throw Error(ErrorCode::invalid_argument, "element must be homogeneous of positive degree");
  const std::size_t D = std::max<std::size_t>(cfg.degree_or(*deg + 1), *deg + 1);
  auto rs = complete_to_degree(P, order_for(cfg, P), std::max<std::size_t>(D, 2));
  auto cert = certify_normal(rs, w);
  Json images = nullptr, diagonal = nullptr;
  if (cert) {
    images = Json::array();
    for (std::size_t g = 0; g < cert->images.size(); ++g) {
      NcPoly<Scalar<K>> img;
      for (std::size_t k = 0; k < cert->images[g].size(); ++k) img.add_term(Word(1, static_cast<char>(k)), cert->images[g][k]);
      images.push_back({{"generator", P.names[g]}, {"image", img.is_zero() ? std::string("0") : format_poly(img, P.names)}});
    }
    if (auto dg = cert->diagonal()) diagonal = suite::to_json_list(*dg);
  }
  rep.set_data({{"presentation", loaded.label},
                {"element", format_poly(w, P.names)},
                {"normal", cert.has_value()},
                {"certificate", images},
                {"diagonal", diagonal}});
  rep.add(timed_check("normality certificate", 0, [&](CheckRecord& r) {
    r.inputs = {{"element", format_poly(w, P.names)}};
    r.expected = "certificate exists";
    r.provenance = Provenance::none;
    r.computed = images;
    r.pass = cert.has_value();
  }));
}

template <ExactField K>
void cmd_ptscheme(Report& rep, const K& field, const RunConfig& cfg) {
  const std::size_t d = cfg.d;
  require_positive(d, "--d");
  if (cfg.mode != "enumerate" && cfg.mode != "components" && cfg.mode != "compare") {
    throw Error(ErrorCode::parse_error, "unknown mode '" + cfg.mode + "' (enumerate, components or compare)");
  }
  auto loaded = load_presentation(field, cfg.presentation);
  const auto& P = loaded.pres;
  Json data = {{"presentation", loaded.label}, {"d", d}, {"mode", cfg.mode}};

  auto require_s111 = [&]() {
    require_cube_roots(field, "the component model");
    if constexpr (CubeRootField<K>) {
      if (!relation_span_equal(P, sklyanin_presentation(field, field.one(), field.one(), field.one()))) {
        throw Error(ErrorCode::invalid_argument, "components are tabulated for S(1,1,1) only");
      }
    }
  };

  if (cfg.mode == "components") {
    require_s111();
    if (d < 2) throw BoundError("--d must be at least 2 for the component model");
    Json comps = Json::array(), sing = Json::array();
    for (const auto& c : component_specs(d)) comps.push_back({{"index", c.index}, {"slots", c.to_string()}, {"lines", c.line_count()}});
    for (const auto& s : singular_locus(d)) sing.push_back({{"labels", suite::pattern_string(s.labels)}, {"components", s.components}});
    data["components"] = comps;
    data["singular_points"] = sing;
    data["transition_patterns"] = transition_patterns(d).size();
    rep.add(timed_check("singular locus size", 0, [&](CheckRecord& r) {
      r.expected = 6;
      r.provenance = Provenance::published;
      r.computed = sing.size();
      r.pass = sing.size() == 6;
    }));
  } else {
    if constexpr (!std::same_as<K, PrimeField>) {
      throw Error(ErrorCode::unsupported_field, "mode '" + cfg.mode + "' enumerates points and needs --field fp:<p>");
    } else {
      if (d > 5) throw BoundError("--d " + std::to_string(d) + " exceeds the enumeration bound 5");
      auto V = enumerate_Vd(P, d);
      data["points"] = V.size();
      if (cfg.mode == "enumerate") {
        std::map<std::size_t, std::size_t> by_count;
        bool s111 = relation_span_equal(P, sklyanin_presentation(field, field.one(), field.one(), field.one()));
        if (s111 && d >= 2) {
          for (const auto& t : V) ++by_count[component_membership(field, t).size()];
          Json m = Json::object();
          for (const auto& [k, v] : by_count) m[std::to_string(k)] = v;
          data["points_by_component_count"] = m;
        }
        rep.add(timed_check("enumeration", 0, [&](CheckRecord& r) {
          r.computed = V.size();
          r.pass = true;
        }));
      } else {
        require_s111();
        if (d < 2) throw BoundError("--d must be at least 2 for the component model");
        auto U = component_union(field, d);
        auto full = union_points(field, transition_patterns(d));
        data["six_component_points"] = U.size();
        data["transition_pattern_points"] = full.size();
        Json sing = Json::array();
        for (const auto& t : V) {
          auto m = component_membership(field, t);
          if (m.size() >= 2) {
            Json pts = Json::array();
            for (const auto& p : t) pts.push_back(from_key(field, p).to_string());
            sing.push_back({{"point", pts}, {"components", m}});
          }
        }
        data["singular_points"] = sing;
        rep.add(timed_check("V_d equals the union of the six components", 0, [&](CheckRecord& r) {
          r.inputs = {{"d", d}, {"field", field.spec().to_string()}};
          r.expected = true;
          r.provenance = Provenance::published;
          r.computed = V == U;
          r.pass = V == U;
          if (!r.pass) r.note = "the six components miss points; see transition_pattern_points";
        }));
        rep.add(timed_check("V_d equals the union of the transition patterns", 0, [&](CheckRecord& r) {
          r.info = true;
          r.expected = true;
          r.provenance = Provenance::derived;
          r.computed = V == full;
          r.pass = V == full;
        }));
      }
    }
  }
  rep.set_data(std::move(data));
}

template <ExactField K>
void cmd_ppring(Report& rep, const K& field, const RunConfig& cfg) {
  require_cube_roots(field, "ppring");
  if constexpr (CubeRootField<K>) {
    const std::size_t D = cfg.degree_or(10), O = cfg.oracle_or(8);
    require_positive(D, "--max-degree");
    require_positive(O, "--oracle-max");
    if (O > D) throw BoundError("--oracle-max " + std::to_string(O) + " exceeds --max-degree " + std::to_string(D));
    auto rs = complete_to_degree(sklyanin_presentation(field, field.one(), field.one(), field.one()), std::max<std::size_t>(D, 2));
    std::vector<std::uint64_t> dims, oracle, kernel;
    Json glued = Json::array(), generation = Json::array(), full = Json::array();
    for (std::size_t d = 0; d <= D; ++d) {
      dims.push_back(dim_B(d));
      auto g = check_degree_one_generation(rs, d);
      generation.push_back(g.ok);
      kernel.push_back(g.normal_words - g.rank);
    }
    for (std::size_t d = 0; d <= O; ++d) {
      oracle.push_back(dim_B_oracle(field, d, O));
      glued.push_back(d >= 2 ? Json(glued_section_dim(field, d)) : Json(nullptr));
      if (d <= 8) full.push_back(dim_B_full_oracle(rs, d));
    }
    auto series = hilbert_series_report(std::max<std::size_t>(D, 4));
    rep.set_data({{"dims", dims},
                  {"oracle_dims", oracle},
                  {"glued_dims", glued},
                  {"generation", generation},
                  {"kernel_dims", kernel},
                  {"series_match", series.series_match},
                  {"full_vd_dims", full}});
    rep.add(timed_check("evaluation oracle equals closed form", 9, [&](CheckRecord& r) {
      r.expected = std::vector<std::uint64_t>(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(O + 1));
      r.provenance = Provenance::published;
      r.computed = oracle;
      r.pass = r.computed == r.expected;
    }));
    rep.add(timed_check("glued sections equal closed form", 9, [&](CheckRecord& r) {
      Json want = Json::array();
      for (std::size_t d = 0; d <= O; ++d) want.push_back(d >= 2 ? Json(dims[d]) : Json(nullptr));
      r.expected = want;
      r.provenance = Provenance::published;
      r.computed = glued;
      r.pass = glued == want;
    }));
    rep.add(timed_check("generation in degree one", 10, [&](CheckRecord& r) {
      r.expected = std::vector<bool>(D + 1, true);
      r.provenance = Provenance::published;
      r.computed = generation;
      r.pass = r.computed == r.expected;
    }));
    rep.add(timed_check("series coefficients", 9, [&](CheckRecord& r) {
      r.expected = series.series;
      r.provenance = Provenance::published;
      r.computed = series.dims;
      r.pass = series.series_match;
    }));
    rep.add(timed_check("restriction rank over all of V_d", 0, [&](CheckRecord& r) {
      r.info = true;
      Json want = Json::array();
      for (std::size_t d = 0; d < full.size(); ++d) want.push_back(suite::degenerate_dims(d)[d]);
      r.expected = want;
      r.provenance = Provenance::derived;
      r.computed = full;
      r.pass = full == want;
    }));
  }
}

template <ExactField K>
void cmd_kernel(Report& rep, const K& field, const RunConfig& cfg) {
  require_cube_roots(field, "kernel");
  if constexpr (CubeRootField<K>) {
    using S = Scalar<K>;
    const std::size_t D = cfg.degree_or(5);
    require_positive(D, "--max-degree");
    if (D > 8) throw BoundError("--max-degree " + std::to_string(D) + " exceeds the kernel bound 8");
    auto rs = complete_to_degree(sklyanin_presentation(field, field.one(), field.one(), field.one()), std::max<std::size_t>(D, 2));
    std::vector<std::uint64_t> dims;
    Json growth = Json::array(), lowest = Json::array();
    std::vector<NcPoly<S>> prev;
    for (std::size_t d = 1; d <= D; ++d) {
      auto basis = kernel_basis(rs, d);
      dims.push_back(basis.size());
      if (d >= 2) {
        auto g = kernel_growth(rs, prev, d);
        growth.push_back({{"d", d}, {"kernel_dim", g.kernel_dim}, {"generated", g.generated_dim}, {"new_generators", g.new_generators}});
      }
      if (lowest.empty() && !basis.empty()) {
        for (const auto& k : basis) lowest.push_back(format_poly(k, rs.names));
      }
      prev = std::move(basis);
    }
    rep.set_data({{"kernel_dims", dims}, {"growth", growth}, {"lowest_degree_basis", lowest}});
    rep.add(timed_check("kernel dimensions", 11, [&](CheckRecord& r) {
      std::vector<std::uint64_t> want{0, 0, 0, 6, 18};
      want.resize(std::min<std::size_t>(D, 5));
      std::vector<std::uint64_t> got(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(want.size()));
      r.expected = want;
      r.provenance = Provenance::published;
      r.computed = got;
      r.pass = got == want;
    }));
  }
}

template <ExactField K>
void cmd_verify_all(Report& rep, const K& field, const RunConfig& cfg) {
  require_cube_roots(field, "verify-all");
  if constexpr (CubeRootField<K>) {
    suite::SuiteConfig sc;
    if (cfg.max_degree) sc.hilbert_degree = sc.generation_degree = *cfg.max_degree;
    if (cfg.oracle_max) sc.oracle_degree = *cfg.oracle_max;
    if (cfg.fast) {
      for (auto* v : {&sc.hilbert_degree, &sc.generation_degree, &sc.oracle_degree, &sc.dual_degree, &sc.twist_degree, &sc.singular_degree}) {
        *v = std::min<std::size_t>(*v, 6);
      }
    }
    require_positive(sc.hilbert_degree, "--max-degree");
    require_positive(sc.oracle_degree, "--oracle-max");
    if (sc.oracle_degree > sc.generation_degree) {
      throw BoundError("--oracle-max " + std::to_string(sc.oracle_degree) + " exceeds --max-degree " + std::to_string(sc.generation_degree));
    }
    if (sc.oracle_degree < 2) throw BoundError("verify-all needs --oracle-max of at least 2");
    suite::run_all(rep, field, sc);
    Json crit = Json::array();
    for (int c = 1; c <= 12; ++c) {
      crit.push_back({{"criterion", c}, {"title", suite::kCriteria[static_cast<std::size_t>(c - 1)]}, {"pass", rep.criterion_pass(c)}});
    }
    rep.set_data({{"criteria", crit}});
  }
}

// ---------------------------------------------------------------------------

inline int emit(const Report& rep, const RunConfig& cfg, std::ostream& out) {
  std::string text = cfg.format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::parse_error, "cannot write report to '" + cfg.out + "'");
    f << text;
    std::size_t failed = 0;
    for (const auto& r : rep.records()) failed += !r.info && !r.pass;
    out << (rep.pass() ? "PASS" : "FAIL") << " " << cfg.command << ": " << rep.records().size() << " records, " << failed
        << " failed -> " << cfg.out << "\n";
  }
  return rep.pass() ? exit_pass : exit_check_failed;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Exact-arithmetic workbench for degenerate three-dimensional Sklyanin algebras", "skw"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto common = [&](CLI::App* sub, bool presentation) {
    sub->add_option("--field", cfg.field, "q, qzeta or fp:<p>");
    sub->add_option("--order", cfg.order, "generator precedence, smallest first (x,y,z)");
    sub->add_option("--max-degree", cfg.max_degree, "rewrite degree bound");
    sub->add_option("--oracle-max", cfg.oracle_max, "evaluation-oracle degree bound");
    sub->add_option("--out", cfg.out, "write the report to a file");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--fast", cfg.fast, "use F_7 and cap degree bounds at 6");
    sub->add_flag("--timing", cfg.timing, "include wall-clock timings in the report");
    if (presentation) {
      auto* opt = sub->add_option("--presentation", cfg.presentation, "builtin:<name> or a presentation file");
      sub->add_option("spec", cfg.presentation, "same as --presentation")->excludes(opt);
    }
  };

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a quadratic presentation");
  common(hilbert, true);
  auto* koszul = app.add_subcommand("koszul-dual", "Koszul dual relations and dimensions");
  common(koszul, true);
  auto* twist = app.add_subcommand("twist", "Zhang twist by a graded automorphism");
  common(twist, true);
  twist->add_option("--auto", cfg.automorphism, "sigma, tau or matrix:<9 scalars, row-major>");
  twist->add_flag("--inverse", cfg.inverse, "twist by the inverse automorphism");
  auto* certify = app.add_subcommand("certify-normal", "normality certificate of a homogeneous element");
  common(certify, true);
  certify->add_option("--element", cfg.element, "homogeneous polynomial, e.g. \"x*y + y*x + z*z\"");
  auto* pts = app.add_subcommand("ptscheme", "truncated point schemes V_d");
  common(pts, true);
  pts->add_option("--d", cfg.d, "number of factors");
  pts->add_option("--mode", cfg.mode, "enumerate, components or compare");
  auto* pp = app.add_subcommand("ppring", "dimensions of the point parameter ring B");
  common(pp, false);
  auto* ker = app.add_subcommand("kernel", "kernel of S -> B");
  common(ker, false);
  auto* all = app.add_subcommand("verify-all", "the full verification suite");
  common(all, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_pass : exit_usage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.fast && !cfg.field) cfg.field = "fp:7";
  if (cfg.presentation.empty()) cfg.presentation = cfg.command == "certify-normal" ? "builtin:ore:1,1" : "builtin:s111";

  try {
    Report rep(cfg.command);
    rep.set_timing(cfg.timing);
    rep.set_config(cfg.to_json());
    with_field(cfg.field_spec(), [&](const auto& field) {
      if (cfg.command == "hilbert") cmd_hilbert(rep, field, cfg);
      else if (cfg.command == "koszul-dual") cmd_koszul(rep, field, cfg);
      else if (cfg.command == "twist") cmd_twist(rep, field, cfg);
      else if (cfg.command == "certify-normal") cmd_certify(rep, field, cfg);
      else if (cfg.command == "ptscheme") cmd_ptscheme(rep, field, cfg);
      else if (cfg.command == "ppring") cmd_ppring(rep, field, cfg);
      else if (cfg.command == "kernel") cmd_kernel(rep, field, cfg);
      else if (cfg.command == "verify-all") cmd_verify_all(rep, field, cfg);
    });
    return emit(rep, cfg, out);
  } catch (const BoundError& e) {
    err << "error: bound: " << e.what() << "\n";
    return exit_bound;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::too_large || e.code() == ErrorCode::needs_deeper_completion) return exit_bound;
    return exit_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace skw::cli
