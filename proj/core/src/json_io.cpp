#include "pbp/json_io.hpp"

#include <fstream>
#include <set>

#include "pbp/error.hpp"

namespace pbp {

  namespace {
    [[noreturn]] void bad(std::string const& what) {
      throw InvalidInput(what);
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    void only_keys(json const& j, std::set<std::string> const& allowed, std::string const& what) {
      if (!j.is_object()) {
        bad(what + " must be an object");
      }
      for (auto const& [k, v] : j.items()) {
        (void)v;
        if (!allowed.count(k)) {
          bad("unknown field \"" + k + "\" in " + what);
        }
      }
    }

    std::vector<std::string> strings(json const& j, char const* what) {
      if (!j.is_array()) {
        bad(std::string(what) + " must be an array of strings");
      }
      std::vector<std::string> out;
      for (auto const& x : j) {
        if (!x.is_string()) {
          bad(std::string(what) + " must be an array of strings");
        }
        out.push_back(x.get<std::string>());
      }
      return out;
    }

    long integer(json const& j, char const* what) {
      if (!j.is_number_integer()) {
        bad(std::string(what) + " must be an integer");
      }
      return j.get<long>();
    }

    bool boolean(json const& j, char const* what) {
      if (!j.is_boolean()) {
        bad(std::string(what) + " must be true or false");
      }
      return j.get<bool>();
    }

    // A positive integer or "inf" (returned as 0).
    unsigned long label(json const& j, char const* what) {
      if (j.is_string() && j.get<std::string>() == "inf") {
        return 0;
      }
      if (!j.is_number_integer() || j.get<long>() < 1) {
        bad(std::string(what) + " must be a positive integer or \"inf\"");
      }
      return j.get<unsigned long>();
    }
  }  // namespace

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      bad("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      bad(path + ": " + e.what());
    }
  }

  FinitePresentation parse_presentation(json const& j) {
    only_keys(j, {"generators", "relators"}, "presentation");
    auto names = strings(field(j, "generators"), "generators");
    if (names.empty()) {
      bad("a presentation needs at least one generator");
    }
    std::vector<Word> relators;
    if (j.contains("relators")) {
      for (auto const& r : strings(j.at("relators"), "relators")) {
        relators.push_back(parse_word(r, names));
      }
    }
    return FinitePresentation(names, relators);
  }

  json to_json(FinitePresentation const& p) {
    json rel = json::array();
    for (auto const& r : p.relators()) {
      rel.push_back(to_string(r, p.names()));
    }
    return {{"generators", p.names()}, {"relators", rel}};
  }

  CoxeterMatrix parse_coxeter(json const& j) {
    only_keys(j, {"n", "m"}, "Coxeter matrix");
    long        n = integer(field(j, "n"), "n");
    json const& m = field(j, "m");
    if (n < 1 || !m.is_array() || m.size() != static_cast<std::size_t>(n)) {
      bad("\"m\" must be an n x n array");
    }
    std::vector<std::vector<unsigned long>> rows;
    for (auto const& row : m) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
        bad("\"m\" must be an n x n array");
      }
      rows.emplace_back();
      for (auto const& e : row) {
        rows.back().push_back(label(e, "Coxeter label"));
      }
    }
    return CoxeterMatrix(std::move(rows));
  }

  json to_json(CoxeterMatrix const& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m.is_infinite(i, j)) {
          row.push_back("inf");
        } else {
          row.push_back(m.at(i, j));
        }
      }
      rows.push_back(row);
    }
    return {{"n", m.size()}, {"m", rows}};
  }

  LieAlgebra parse_algebra(json const& j) {
    only_keys(j, {"dim", "basis", "brackets"}, "algebra");
    long dim    = integer(field(j, "dim"), "dim");
    auto labels = strings(field(j, "basis"), "basis");
    if (dim < 1 || labels.size() != static_cast<std::size_t>(dim)) {
      bad("\"basis\" must list dim labels");
    }
    auto index = [&](json const& x) {
      if (!x.is_string()) {
        bad("bracket arguments must be basis labels");
      }
      auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
      if (it == labels.end()) {
        bad("unknown basis label \"" + x.get<std::string>() + "\"");
      }
      return static_cast<std::size_t>(it - labels.begin());
    };
    std::vector<LieAlgebra::Bracket> brackets;
    if (j.contains("brackets")) {
      if (!j.at("brackets").is_array()) {
        bad("\"brackets\" must be an array");
      }
      for (auto const& b : j.at("brackets")) {
        only_keys(b, {"x", "y", "value"}, "bracket");
        LieAlgebra::Bracket br{index(field(b, "x")), index(field(b, "y")),
                               QVector(labels.size(), 0)};
        json const& value = field(b, "value");
        if (!value.is_object()) {
          bad("bracket value must map labels to rationals");
        }
        for (auto const& [k, v] : value.items()) {
          std::string text = v.is_string() ? v.get<std::string>()
                             : v.is_number_integer() ? std::to_string(v.get<long>())
                                                     : "";
          if (text.empty()) {
            bad("bracket coefficients must be rationals written as strings");
          }
          br.value[index(json(k))] = parse_rational(text);
        }
        brackets.push_back(std::move(br));
      }
    }
    return LieAlgebra::from_brackets(labels, brackets);
  }

  json to_json(LieAlgebra const& l) {
    json brackets = json::array();
    for (std::size_t i = 0; i < l.dim(); ++i) {
      for (std::size_t k = i + 1; k < l.dim(); ++k) {
        json value = json::object();
        for (std::size_t c = 0; c < l.dim(); ++c) {
          if (l.c(i, k, c) != 0) {
            value[l.labels()[c]] = l.c(i, k, c).get_str();
          }
        }
        if (!value.empty()) {
          brackets.push_back({{"x", l.labels()[i]}, {"y", l.labels()[k]}, {"value", value}});
        }
      }
    }
    return {{"dim", l.dim()}, {"basis", l.labels()}, {"brackets", brackets}};
  }

  PermutationTarget parse_permutation_target(json const& j, FinitePresentation const& p) {
    only_keys(j, {"degree", "images"}, "homomorphism");
    long degree = integer(field(j, "degree"), "degree");
    if (degree < 1) {
      bad("degree must be positive");
    }
    json const& images = field(j, "images");
    only_keys(images, std::set<std::string>(p.names().begin(), p.names().end()), "images");
    PermutationTarget t{static_cast<std::size_t>(degree), {}};
    for (auto const& name : p.names()) {
      if (!images.contains(name)) {
        bad("no image for generator \"" + name + "\"");
      }
      json const& img = images.at(name);
      if (!img.is_array() || img.size() != t.degree) {
        bad("image of \"" + name + "\" must list degree points");
      }
      Permutation perm;
      std::vector<bool> hit(t.degree, false);
      for (auto const& x : img) {
        long v = integer(x, "permutation point");
        if (v < 0 || v >= degree || hit[static_cast<std::size_t>(v)]) {
          bad("image of \"" + name + "\" is not a permutation of 0..degree-1");
        }
        hit[static_cast<std::size_t>(v)] = true;
        perm.push_back(static_cast<std::size_t>(v));
      }
      t.images.push_back(std::move(perm));
    }
    return t;
  }

  Flags parse_flags(json const& j) {
    only_keys(j,
              {"infinite", "finitely-generated", "finitely-presented", "schreier", "ends",
               "vcd", "deficiency", "l2-betti1-positive", "hyperbolic", "elementary",
               "simple", "centre", "three-manifold", "seifert", "virtually"},
              "flags");
    Flags f;
    auto  flag = [&](char const* key, std::optional<bool>& out) {
      if (j.contains(key)) {
        out = boolean(j.at(key), key);
      }
    };
    flag("infinite", f.infinite);
    flag("finitely-generated", f.finitely_generated);
    flag("finitely-presented", f.finitely_presented);
    flag("schreier", f.schreier);
    flag("l2-betti1-positive", f.l2_betti1_positive);
    flag("hyperbolic", f.hyperbolic);
    flag("elementary", f.elementary);
    flag("simple", f.simple);
    flag("three-manifold", f.three_manifold);
    flag("seifert", f.seifert);
    if (j.contains("ends")) {
      json const& e = j.at("ends");
      if (e.is_string() && e.get<std::string>() == "inf") {
        f.ends = Ends::infinitely_many;
      } else {
        switch (integer(e, "ends")) {
          case 0: f.ends = Ends::zero; break;
          case 1: f.ends = Ends::one; break;
          case 2: f.ends = Ends::two; break;
          default: bad("ends must be 0, 1, 2 or \"inf\"");
        }
      }
    }
    if (j.contains("vcd")) {
      f.vcd = integer(j.at("vcd"), "vcd");
    }
    if (j.contains("deficiency")) {
      f.deficiency = integer(j.at("deficiency"), "deficiency");
    }
    if (j.contains("centre")) {
      json const& c = j.at("centre");
      std::string s = c.is_string() ? c.get<std::string>() : "";
      if (s == "finite") {
        f.centre = Centre::finite;
      } else if (s == "infinite") {
        f.centre = Centre::infinite;
      } else {
        bad("centre must be \"finite\" or \"infinite\"");
      }
    }
    if (j.contains("virtually")) {
      json const& v = j.at("virtually");
      if (!v.is_array() || v.size() != 2) {
        bad("virtually must be a pair [k, l] of free ranks");
      }
      f.virtually = VirtualForm{integer(v[0], "free rank"), integer(v[1], "free rank")};
    }
    return f;
  }

  GroupDescriptor parse_descriptor(json const& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
      bad("a descriptor needs a string \"kind\"");
    }
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "coxeter") {
      only_keys(j, {"kind", "matrix", "name"}, "coxeter descriptor");
      if (j.contains("name") == j.contains("matrix")) {
        bad("a coxeter descriptor needs exactly one of \"matrix\" and \"name\"");
      }
      if (j.contains("name")) {
        json const& n = j.at("name");
        if (!n.is_string()) {
          bad("\"name\" must be a string");
        }
        return {CoxeterKind{coxeter_catalogue::by_name(n.get<std::string>())}};
      }
      return {CoxeterKind{parse_coxeter(j.at("matrix"))}};
    }
    if (kind == "bs") {
      only_keys(j, {"kind", "m", "n"}, "bs descriptor");
      long m = integer(field(j, "m"), "m");
      long n = integer(field(j, "n"), "n");
      BSGroup check(m, n);
      return {BSKind{m, n}};
    }
    if (kind == "free-product") {
      only_keys(j, {"kind", "orders"}, "free-product descriptor");
      json const& o = field(j, "orders");
      if (!o.is_array()) {
        bad("\"orders\" must be an array");
      }
      FreeProductKind fp;
      for (auto const& x : o) {
        unsigned long v = label(x, "factor order");
        if (v == 1) {
          bad("free product factors must be nontrivial");
        }
        fp.orders.push_back(v);
      }
      return {fp};
    }
    if (kind == "direct-product") {
      only_keys(j, {"kind", "count"}, "direct-product descriptor");
      long c = integer(field(j, "count"), "count");
      if (c < 2) {
        bad("\"count\" must be at least 2");
      }
      return {DirectProductKind{static_cast<std::size_t>(c)}};
    }
    if (kind == "flagged") {
      only_keys(j, {"kind", "presentation", "flags"}, "flagged descriptor");
      FlaggedKind f;
      if (j.contains("presentation")) {
        f.presentation = parse_presentation(j.at("presentation"));
      }
      if (j.contains("flags")) {
        f.flags = parse_flags(j.at("flags"));
      }
      return {f};
    }
    if (kind == "virtually") {
      only_keys(j, {"kind", "of"}, "virtually descriptor");
      return {VirtuallyKind{
          std::make_shared<GroupDescriptor const>(parse_descriptor(field(j, "of")))}};
    }
    bad("unknown descriptor kind \"" + kind + "\"");
  }

  nlohmann::ordered_json to_json(CoxeterVerdict const& v) {
    nlohmann::ordered_json out = to_json(v.verdict);
    auto comps = nlohmann::ordered_json::array();
    for (auto const& c : v.components) {
      std::vector<std::size_t> one_based;
      for (auto x : c.vertices) {
        one_based.push_back(x + 1);
      }
      comps.push_back({{"vertices", one_based},
                       {"signature", {c.signature.p, c.signature.q, c.signature.r}},
                       {"type", to_string(c.type)}});
    }
    out["components"] = comps;
    return out;
  }

  nlohmann::ordered_json to_json(BSVerdict const& v, bool with_witness) {
    nlohmann::ordered_json out = to_json(v.verdict);
    if (!with_witness || !v.witness || !v.report) {
      return out;
    }
    SubgroupWitness const& w = *v.witness;
    WitnessReport const&   r = *v.report;
    std::vector<std::string> st{"s", "t"}, tn;
    for (std::size_t i = 0; i < w.transversal.size(); ++i) {
      tn.push_back("T" + std::to_string(i));
    }
    auto words = [](std::vector<Word> const& ws, std::vector<std::string> const& names) {
      auto a = nlohmann::ordered_json::array();
      for (auto const& x : ws) {
        a.push_back(to_string(x, names));
      }
      return a;
    };
    out["witness"] = {{"m", w.m},
                      {"eta", w.eta},
                      {"zs_generator", to_string(w.zs_generator, st)},
                      {"T", words(w.transversal, st)},
                      {"fII_basis_over_T", words(w.fii_basis_t, tn)},
                      {"fII_basis", words(w.fii_basis, st)},
                      {"pi", {{"degree", w.pi.degree}, {"s", w.pi.images[0]}, {"t", w.pi.images[1]}}}};
    out["checks"] = {{"commute", r.commute},
                     {"in_kernel", r.in_kernel},
                     {"index", r.index},
                     {"index_ok", r.index_ok},
                     {"free_up_to_length", r.length_bound},
                     {"free", r.free},
                     {"words_checked", r.words_checked},
                     {"kernel_free_rank", r.kernel_abelianization.free_rank},
                     {"kernel_torsion", nlohmann::ordered_json::array()},
                     {"abelianization_ok", r.abelianization_ok},
                     {"failures", r.failures}};
    for (auto const& t : r.kernel_abelianization.torsion) {
      out["checks"]["kernel_torsion"].push_back(t.get_str());
    }
    return out;
  }

  nlohmann::ordered_json to_json(LieAlgebra const& l, LiePresentability const& r) {
    nlohmann::ordered_json out = to_json(r.verdict);
    if (r.lattice.ideals.empty()) {
      return out;
    }
    auto ideals = nlohmann::ordered_json::array();
    for (auto const& a : r.lattice.ideals) {
      ideals.push_back(to_string(l, a));
    }
    out["lattice"] = {{"status", to_string(r.lattice.completeness)}, {"ideals", ideals}};
    return out;
  }

}  // namespace pbp
