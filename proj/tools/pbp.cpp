// pbp: decide presentability by products from the command line.
//
// Exit codes: 0 verdict produced (including UNKNOWN), 2 invalid or
// inconsistent input, 3 internal verification failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pbp/abels.hpp"
#include "pbp/bs.hpp"
#include "pbp/classifier.hpp"
#include "pbp/coset.hpp"
#include "pbp/coxeter.hpp"
#include "pbp/error.hpp"
#include "pbp/ideal_lattice.hpp"
#include "pbp/json_io.hpp"
#include "pbp/lie.hpp"

namespace {

  constexpr int exit_invalid      = 2;
  constexpr int exit_verification = 3;

  struct Output {
    bool explain = false;
    int  indent  = 2;

    void emit(nlohmann::ordered_json const& j, pbp::Verdict const* v = nullptr) const {
      if (explain && v) {
        std::cout << pbp::explain(*v);
        return;
      }
      std::cout << j.dump(indent) << '\n';
    }
  };

  nlohmann::ordered_json subgroup_report(pbp::FinitePresentation const& p,
                                         pbp::PermutationTarget const&  target) {
    pbp::CosetTable         table = pbp::coset_enumerate(p, target);
    pbp::FinitePresentation sub   = pbp::reidemeister_schreier(p, table);
    pbp::AbelianInvariants  ab    = pbp::abelianization(sub);
    auto [a, b] = pbp::rs_counts(static_cast<long>(p.generator_count()),
                                 static_cast<long>(p.relator_count()),
                                 static_cast<long>(table.cosets));
    auto gens = nlohmann::ordered_json::array();
    for (auto const& w : pbp::schreier_generators(table)) {
      gens.push_back(pbp::to_string(w, p.names()));
    }
    auto torsion = nlohmann::ordered_json::array();
    for (auto const& t : ab.torsion) {
      torsion.push_back(t.get_str());
    }
    return {{"index", table.cosets},
            {"rs_counts", {a, b}},
            {"generators", sub.generator_count()},
            {"relators", sub.relator_count()},
            {"schreier_generators", gens},
            {"presentation", nlohmann::ordered_json(pbp::to_json(sub))},
            {"abelianization", {{"free_rank", ab.free_rank}, {"torsion", torsion}}}};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a group or Lie algebra is presentable by a product"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--explain", out.explain, "Print the rule trace as text instead of JSON");
  app.add_option("--indent", out.indent, "JSON indentation (-1 for one line)");

  std::string input;
  auto*       classify = app.add_subcommand("classify", "Classify a group descriptor");
  classify->add_option("-i,--input", input, "Descriptor JSON file")->required();

  std::string catalogue;
  auto*       coxeter = app.add_subcommand("coxeter", "Coxeter group from its matrix");
  auto*       cox_in  = coxeter->add_option("-i,--input", input, "Coxeter matrix JSON file");
  coxeter->add_option("--catalogue", catalogue, "Catalogue name such as E8, ~A2, triangle(3,3,7)")
      ->excludes(cox_in);

  long                       m = 0, n = 0;
  bool                       witness = false;
  std::optional<std::size_t> bound;
  auto*                      bs = app.add_subcommand("bs", "Baumslag-Solitar group BS(m, n)");
  bs->add_option("m", m, "First parameter")->required();
  bs->add_option("n", n, "Second parameter")->required();
  bs->add_flag("--witness", witness, "Include the finite-index witness and its checks");
  bs->add_option("--verify-bound", bound, "Length bound of the freeness check");

  pbp::LatticeOptions lattice;
  auto*               lie    = app.add_subcommand("lie", "Rational Lie algebra");
  auto*               lie_in = lie->add_option("-i,--input", input, "Algebra JSON file");
  lie->add_option("--catalogue", catalogue, "Catalogue name such as sol, sl2, so(2,1)")
      ->excludes(lie_in);
  lie->add_option("--max-dim", lattice.max_dim, "Largest dimension for ideal enumeration");
  lie->add_option("--budget", lattice.budget, "Largest number of ideals to enumerate");

  std::string hom;
  auto*       subgroup = app.add_subcommand("subgroup", "Kernel of a map to a permutation group");
  subgroup->add_option("-i,--input", input, "Presentation JSON file")->required();
  subgroup->add_option("--hom", hom, "Generator images JSON file")->required();

  unsigned long prime    = 0;
  long          exponent = 1;
  int           sign     = 1;
  std::size_t   trials   = 10000;
  std::uint64_t seed     = pbp::default_abels_seed;
  auto*         abels    = app.add_subcommand("abels", "Acentrality check in the Abels group");
  abels->add_option("--prime", prime, "The prime p")->required();
  abels->add_option("--trials", trials, "Number of random samples");
  abels->add_option("--exponent", exponent, "g = diag(sign * p^exponent)");
  abels->add_option("--sign", sign, "Sign of the diagonal entry")->check(CLI::IsMember({-1, 1}));
  abels->add_option("--seed", seed, "Sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      pbp::Verdict v = pbp::classify(pbp::parse_descriptor(pbp::read_json_file(input)));
      out.emit(pbp::to_json(v), &v);
    } else if (*coxeter) {
      if (input.empty() == catalogue.empty()) {
        throw pbp::InvalidInput("give exactly one of --input and --catalogue");
      }
      pbp::CoxeterMatrix mat = catalogue.empty()
                                   ? pbp::parse_coxeter(pbp::read_json_file(input))
                                   : pbp::coxeter_catalogue::by_name(catalogue);
      pbp::CoxeterVerdict v = pbp::coxeter_presentable(mat);
      out.emit(pbp::to_json(v), &v.verdict);
    } else if (*bs) {
      pbp::BSVerdict v = pbp::bs_presentable(m, n, bound);
      out.emit(pbp::to_json(v, witness), &v.verdict);
    } else if (*lie) {
      if (input.empty() == catalogue.empty()) {
        throw pbp::InvalidInput("give exactly one of --input and --catalogue");
      }
      pbp::LieAlgebra l = catalogue.empty() ? pbp::parse_algebra(pbp::read_json_file(input))
                                            : pbp::lie_catalogue::by_name(catalogue);
      pbp::LiePresentability r = pbp::lie_presentable(l, lattice);
      out.emit(pbp::to_json(l, r), &r.verdict);
    } else if (*subgroup) {
      pbp::FinitePresentation p = pbp::parse_presentation(pbp::read_json_file(input));
      pbp::PermutationTarget  t = pbp::parse_permutation_target(pbp::read_json_file(hom), p);
      out.emit(subgroup_report(p, t));
    } else if (*abels) {
      auto r = pbp::acentral_check(prime, pbp::Unit{sign, exponent}, trials, seed);
      out.emit(pbp::to_json(r));
      if (!r.passed()) {
        return exit_verification;
      }
    }
  } catch (pbp::PrecisionExhausted const& e) {
    std::cerr << "pbp: " << e.what() << '\n';
    return exit_verification;
  } catch (pbp::InvalidInput const& e) {
    std::cerr << "pbp: " << e.what() << '\n';
    return exit_invalid;
  } catch (pbp::BoundExceeded const& e) {
    std::cerr << "pbp: " << e.what() << '\n';
    return exit_invalid;
  } catch (std::exception const& e) {
    std::cerr << "pbp: " << e.what() << '\n';
    return exit_verification;
  }
  return 0;
}
