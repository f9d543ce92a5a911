// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pbp/abels.hpp"
#include "pbp/bs.hpp"
#include "pbp/classifier.hpp"
#include "pbp/coset.hpp"
#include "pbp/coxeter.hpp"
#include "pbp/ideal_lattice.hpp"
#include "pbp/json_io.hpp"
#include "pbp/lie.hpp"
#include "pbp/polynomial.hpp"
#include "pbp/word.hpp"
#include "support.hpp"

using namespace pbp;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  class Log {
   public:
    void fail(std::string const& what) {
      ++_failures;
      if (_shown < 5) {
        _out << (_shown ? "; " : "") << what;
        ++_shown;
      }
    }
    std::size_t failures() const { return _failures; }
    std::string text() const { return _out.str(); }

   private:
    std::size_t        _failures = 0;
    std::size_t        _shown    = 0;
    std::ostringstream _out;
  };

  std::string sig(Signature const& s) {
    return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.r) + ")";
  }

  double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
  }

  // 1. Catalogue diagrams against exact classification and a float oracle.
  Outcome coxeter_catalogue_check() {
    auto start = std::chrono::steady_clock::now();
    Log  log;
    std::vector<std::string> finite;
    for (int n = 1; n <= 8; ++n) finite.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) finite.push_back("B" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) finite.push_back("D" + std::to_string(n));
    for (auto n : {"E6", "E7", "E8", "F4", "H3", "H4"}) finite.push_back(n);
    for (int m = 3; m <= 12; ++m) finite.push_back("I2(" + std::to_string(m) + ")");
    std::vector<std::string> affine{"~A1", "~A2", "~C2", "~G2", "~F4", "~E8"};

    auto check = [&](std::string const& name, bool is_affine) {
      CoxeterMatrix m       = coxeter_catalogue::by_name(name);
      Signature     exact   = signature(tits_form(m));
      Signature     oracle  = test::float_signature(test::float_tits_form(m));
      auto          reports = classify(m);
      if (!(exact == oracle)) {
        log.fail(name + " exact " + sig(exact) + " vs oracle " + sig(oracle));
      }
      if (reports.size() != 1) {
        log.fail(name + " is not irreducible");
        return;
      }
      if (is_affine) {
        if (reports[0].type != CoxeterType::affine || exact.r != 1 || exact.q != 0) {
          log.fail(name + " not affine with r = 1: " + sig(exact));
        }
      } else if (reports[0].type != CoxeterType::finite || !(exact == Signature{m.size(), 0, 0})) {
        log.fail(name + " not finite with (n,0,0): " + sig(exact));
      }
    };
    for (auto const& n : finite) check(n, false);
    for (auto const& n : affine) check(n, true);
    double t = seconds_since(start);
    if (t >= 10) log.fail("took " + std::to_string(t) + " s");
    std::ostringstream d;
    d << finite.size() << " finite and " << affine.size() << " affine types, "
      << log.failures() << " mismatches, " << t << " s";
    return {log.failures() == 0, d.str() + (log.failures() ? ": " + log.text() : "")};
  }

  QMatrix admissible(std::size_t n, std::mt19937_64& rng, bool irreducible) {
    std::uniform_int_distribution<int> den(1, 24);
    while (true) {
      QMatrix b = QMatrix::identity(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          int d = den(rng);
          b(i, j) = b(j, i) = Rational(-static_cast<long>(rng() % (d + 1)), d);
        }
      }
      if (!irreducible) return b;
      // connectivity of the support graph
      std::vector<std::size_t> comp(n);
      for (std::size_t i = 0; i < n; ++i) comp[i] = i;
      for (int pass = 0; pass < 4; ++pass)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (b(i, j) != 0) comp[i] = comp[j] = std::min(comp[i], comp[j]);
      if (std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; })) return b;
    }
  }

  // 2. Random admissible forms.
  Outcome property_suite() {
    Log             log;
    std::mt19937_64 rng(0x3a3);
    std::size_t     positive_det = 0;
    for (int i = 0; i < 1000; ++i) {
      QMatrix   b = admissible(3, rng, false);
      Signature s = signature(b);
      if (s.p + s.q + s.r != 3 || s.p < 2) log.fail("3x3 form with " + sig(s));
      if (determinant(b) > 0) {
        ++positive_det;
        if (s.p != 3) log.fail("det > 0 but " + sig(s));
      }
    }
    std::mt19937_64 rng4(0x4a4);
    for (int i = 0; i < 1000; ++i) {
      Signature s = signature(admissible(4, rng4, true));
      if (s.p + s.q + s.r != 4 || s.p < 3) log.fail("irreducible 4x4 form with " + sig(s));
    }
    QMatrix all{{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    QPoly   expect = QPoly{1, 1} * QPoly{-2, 1} * QPoly{-2, 1};
    if (!(characteristic_polynomial(all) == expect)) {
      log.fail("charpoly " + characteristic_polynomial(all).to_string());
    }
    std::ostringstream d;
    d << "2000 forms (" << positive_det << " with det > 0), charpoly "
      << characteristic_polynomial(all).to_string() << ", " << log.failures() << " violations";
    return {log.failures() == 0, d.str() + (log.failures() ? ": " + log.text() : "")};
  }

  // 3. Lie verdicts.
  Outcome lie_suite() {
    auto start = std::chrono::steady_clock::now();
    Log  log;
    for (auto name : {"af", "sol", "sl2", "so(2,1)", "vr_semidirect(2,1,1)",
                      "vr_semidirect(3,1,1)", "vr_semidirect(2,1,2)"}) {
      auto r = lie_presentable(lie_catalogue::by_name(name));
      if (r.verdict.answer != Answer::no) log.fail(std::string(name) + " is " + to_string(r.verdict.answer));
      if (std::string(name) == "sol") {
        std::size_t ideals = 0;
        for (auto const& e : r.verdict.trace) ideals += e.rule == "ideal";
        if (ideals != 4) log.fail("sol trace lists " + std::to_string(ideals) + " ideals");
      }
    }
    for (auto name : {"abelian(2)", "heisenberg", "sl2+sl2"}) {
      LieAlgebra l = lie_catalogue::by_name(name);
      auto       r = lie_presentable(l);
      if (r.verdict.answer != Answer::yes || !r.certificate) {
        log.fail(std::string(name) + " is " + to_string(r.verdict.answer));
      } else if (!verify_product_certificate(l, *r.certificate).accepted) {
        log.fail(std::string(name) + " certificate rejected");
      }
    }
    double t = seconds_since(start);
    if (t >= 5) log.fail("took " + std::to_string(t) + " s");
    std::ostringstream d;
    d << "7 NO and 3 YES cases, " << log.failures() << " failures, " << t << " s";
    return {log.failures() == 0, d.str() + (log.failures() ? ": " + log.text() : "")};
  }

  // 4. Baumslag-Solitar verdicts, witnesses and Britton confluence.
  Outcome bs_suite() {
    Log  log;
    long table = 0;
    for (long m : {-3, -2, -1, 1, 2, 3}) {
      for (long n : {-3, -2, -1, 1, 2, 3}) {
        Answer a = bs_presentable(m, n, 2).verdict.answer;
        ++table;
        if (a != (std::labs(m) == std::labs(n) ? Answer::yes : Answer::no)) {
          log.fail("BS(" + std::to_string(m) + "," + std::to_string(n) + ") is " + to_string(a));
        }
      }
    }
    for (long m : {2, 3}) {
      for (int eta : {1, -1}) {
        BSGroup       g(m, eta * m);
        WitnessReport rep = verify_witness(g, witness_subgroup(m, eta), m == 2 ? 8 : 6);
        std::string   tag = "BS(" + std::to_string(m) + "," + std::to_string(eta * m) + ")";
        if (!rep.passed()) log.fail(tag + ": " + rep.failures.front());
        if (rep.index != static_cast<std::size_t>(2 * m)) log.fail(tag + " index " + std::to_string(rep.index));
        if (rep.kernel_abelianization.free_rank != static_cast<std::size_t>(2 * m)
            || !rep.kernel_abelianization.torsion.empty()) {
          log.fail(tag + " kernel abelianization rank "
                   + std::to_string(rep.kernel_abelianization.free_rank));
        }
      }
    }
    BSGroup         g(2, 3);
    std::mt19937_64 rng(0xb5);
    std::size_t     words = 0, discrepancies = 0;
    for (std::size_t len = 0; len <= 8; ++len) {
      test::for_each_word(2, len, [&](Word const& w) {
        ++words;
        BrittonForm f = britton_reduce(g, w);
        for (int k = 0; k < 3; ++k) {
          if (britton_reduce_random(g, w, rng) != f) {
            ++discrepancies;
          }
        }
      });
    }
    if (discrepancies) log.fail(std::to_string(discrepancies) + " confluence discrepancies");
    std::ostringstream d;
    d << table << " table entries, 4 witnesses, " << words
      << " words of length <= 8 with 3 random orders each, " << discrepancies << " discrepancies";
    return {log.failures() == 0, d.str() + (log.failures() ? ": " + log.text() : "")};
  }

  // Order of the permutation group generated by `gens`, by closure.
  std::size_t group_order(std::vector<Permutation> const& gens, std::size_t degree) {
    Permutation id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = i;
    std::set<Permutation>    seen{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (auto const& x : frontier) {
        for (auto const& g : gens) {
          Permutation y(degree);
          for (std::size_t i = 0; i < degree; ++i) y[i] = g[x[i]];
          if (seen.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    return seen.size();
  }

  std::size_t perm_order(Permutation const& p) {
    Permutation x = p;
    std::size_t k = 1;
    while (!is_identity(x)) {
      x = compose(x, p);
      ++k;
    }
    return k;
  }

  // 5. Reidemeister-Schreier counts on random (presentation, quotient) pairs.
  Outcome rs_suite() {
    Log             log;
    std::mt19937_64 rng(0x55);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t const a      = 1 + rng() % 3;
      std::size_t const degree = 3 + rng() % 3;
      PermutationTarget target{degree, {}};
      for (std::size_t g = 0; g < a; ++g) target.images.push_back(test::random_permutation(degree, rng));
      std::vector<Word> rels;
      std::size_t const b = rng() % 4;
      for (std::size_t r = 0; r < b; ++r) {
        Word        w = test::random_word(a, 1 + rng() % 4, rng);
        std::size_t k = perm_order(image(target, w));
        Word        power;
        for (std::size_t i = 0; i < k; ++i) power.insert(power.end(), w.begin(), w.end());
        rels.push_back(power);
      }
      FinitePresentation p(a, rels);
      CosetTable         t = coset_enumerate(p, target);
      FinitePresentation sub = reidemeister_schreier(p, t);
      std::size_t const  d   = group_order(target.images, degree);
      auto [ga, gb] = rs_counts(static_cast<long>(a), static_cast<long>(p.relator_count()),
                                static_cast<long>(d));
      if (t.cosets != d) log.fail("index " + std::to_string(t.cosets) + " vs order " + std::to_string(d));
      if (static_cast<long>(sub.generator_count()) != ga
          || static_cast<long>(sub.relator_count()) != gb) {
        log.fail("trial " + std::to_string(trial) + ": (" + std::to_string(sub.generator_count())
                 + "," + std::to_string(sub.relator_count()) + ") vs (" + std::to_string(ga) + ","
                 + std::to_string(gb) + ")");
      }
    }
    return {log.failures() == 0,
            "20 random pairs, " + std::to_string(log.failures()) + " mismatches"
                + (log.failures() ? ": " + log.text() : "")};
  }

  // 6. Kunneth bound and the deficiency of BS presentations.
  Outcome kunneth_suite() {
    Log log;
    for (long k = 2; k <= 10; ++k) {
      for (long l = 2; l <= 10; ++l) {
        auto betti = kunneth_betti({1, k}, {1, l});
        long bound = kunneth_bound(k, l);
        if (bound > 0 || bound != k + l - k * l || betti[1] - betti[2] != bound) {
          log.fail("k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
      }
    }
    for (auto [m, n] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {1, -1}, {3, -5}}) {
      if (deficiency_count(BSGroup(m, n).presentation()) != 1) log.fail("BS deficiency");
    }
    return {log.failures() == 0, "81 pairs (k,l), 4 BS presentations, "
                                     + std::to_string(log.failures()) + " failures"};
  }

  // 7. Abels group acentrality.
  Outcome abels_suite() {
    Log         log;
    std::string detail;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      AcentralReport r = acentral_check(p, Unit{1, 1}, 10000);
      if (!r.symbolic.passed()) log.fail("symbolic identity");
      if (!r.counterexamples.empty()) log.fail("p=" + std::to_string(p) + ": " + r.counterexamples.front());
      detail += "p=" + std::to_string(p) + " commuting " + std::to_string(r.commuting) + "; ";
    }
    return {log.failures() == 0,
            "symbolic identity and 3 x 10^4 trials (" + detail + std::to_string(log.failures())
                + " counterexamples)" + (log.failures() ? ": " + log.text() : "")};
  }

  // 8. Golden descriptor corpus and finite-index invariance.
  Outcome golden_suite() {
    Log                                log;
    std::vector<std::filesystem::path> files;
    for (auto const& e : std::filesystem::directory_iterator(PBP_GOLDEN_DIR)) {
      std::string name = e.path().filename().string();
      if (name.find(".expected") == std::string::npos && e.path().extension() == ".json") {
        files.push_back(e.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.size() != 12) log.fail(std::to_string(files.size()) + " fixtures");
    for (auto const& path : files) {
      json    descriptor = read_json_file(path.string());
      Verdict v          = classify(parse_descriptor(descriptor));
      auto    expected   = path;
      expected.replace_extension(".expected.json");
      if (to_json(v).dump(2) + "\n" != test::read_file(expected.string())) {
        log.fail(path.filename().string() + " differs from its expected output");
      }
      Verdict wrapped = classify(parse_descriptor(json{{"kind", "virtually"}, {"of", descriptor}}));
      if (wrapped.answer != v.answer) {
        log.fail(path.filename().string() + " changes answer under the virtually wrapper");
      }
    }
    return {log.failures() == 0, std::to_string(files.size()) + " fixtures, "
                                     + std::to_string(log.failures()) + " failures"
                                     + (log.failures() ? ": " + log.text() : "")};
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Coxeter catalogue", coxeter_catalogue_check},
      {"admissible form properties", property_suite},
      {"Lie verdicts", lie_suite},
      {"Baumslag-Solitar suite", bs_suite},
      {"Reidemeister-Schreier counts", rs_suite},
      {"Kunneth and deficiency arithmetic", kunneth_suite},
      {"Abels acentrality", abels_suite},
      {"classifier golden corpus", golden_suite},
  };
  auto start  = std::chrono::steady_clock::now();
  int  failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << "): " << o.detail << std::endl;
  }
  std::cout << "total " << seconds_since(start) << " s" << std::endl;
  return failed ? 1 : 0;
}
