#include "pbp/classifier.hpp"

#include <algorithm>

#include "pbp/bs.hpp"
#include "pbp/coset.hpp"
#include "pbp/error.hpp"

namespace pbp {

  bool VirtualForm::infinite_cyclic() const noexcept {
    return (k == 1 && l == 0) || (k == 0 && l == 1);
  }

  std::string VirtualForm::to_string() const {
    auto f = [](long r) { return r == 1 ? std::string("Z") : "F_" + std::to_string(r); };
    if (k == 0 && l == 0) {
      return "1";
    }
    if (k == 0 || l == 0) {
      return f(k + l);
    }
    return f(k) + " x " + f(l);
  }

  namespace {
    std::string ends_string(Ends e) {
      switch (e) {
        case Ends::zero: return "0";
        case Ends::one: return "1";
        case Ends::two: return "2";
        case Ends::infinitely_many: return "infinitely many";
      }
      return "?";
    }

    void inconsistent(std::string const& why) {
      throw InconsistentInput("inconsistent flags: " + why);
    }
  }  // namespace

  void check_consistency(Flags const& f) {
    if (f.ends) {
      bool inf = *f.ends != Ends::zero;
      if (f.infinite && *f.infinite != inf) {
        inconsistent("ends = " + ends_string(*f.ends) + " but infinite = "
                     + (*f.infinite ? "true" : "false"));
      }
    }
    if (f.infinite == false) {
      if (f.centre == Centre::infinite) {
        inconsistent("a finite group with infinite centre");
      }
      if (f.virtually && !(f.virtually->k == 0 && f.virtually->l == 0)) {
        inconsistent("a finite group that is virtually " + f.virtually->to_string());
      }
    }
    if (f.simple == true && f.centre == Centre::infinite) {
      inconsistent("simple and centre = infinite");
    }
    if (f.hyperbolic == true && f.elementary == false && f.infinite == false) {
      inconsistent("non-elementary hyperbolic and finite");
    }
    if (f.hyperbolic == true && f.elementary == false && f.centre == Centre::infinite) {
      inconsistent("non-elementary hyperbolic and centre = infinite");
    }
    if (f.finitely_presented == true && f.finitely_generated == false) {
      inconsistent("finitely presented but not finitely generated");
    }
    if (f.deficiency && f.finitely_presented == false) {
      inconsistent("deficiency given for a group that is not finitely presented");
    }
    if (f.seifert == true && f.three_manifold == false) {
      inconsistent("Seifert fibred but not a three-manifold group");
    }
    if (f.vcd && *f.vcd < 0) {
      inconsistent("negative virtual cohomological dimension");
    }
    if (f.virtually && (f.virtually->k < 0 || f.virtually->l < 0)) {
      inconsistent("negative free rank");
    }
    if (f.l2_betti1_positive == true && f.finitely_generated == true
        && f.schreier == false) {
      inconsistent("positive first l2-Betti number without the Schreier property");
    }
  }

  std::vector<std::string> const& classifier_rules() {
    static std::vector<std::string> const rules{
        "coxeter",         "bs",   "free-product", "direct-product",
        "infinite-centre", "ends", "hyperbolic",   "seifert",
        "vcd",             "deficiency", "simple",  "schreier"};
    return rules;
  }

  namespace {
    struct Conclusion {
      std::string             rule;
      Answer                  answer    = Answer::unknown;
      bool                    qualified = false;
      std::vector<TraceEntry> entries;
    };

    // Facts after folding in what a given presentation witnesses.
    struct Facts {
      Flags               flags;
      std::optional<long> deficiency_lower;
      std::vector<TraceEntry> notes;
    };

    Facts gather(FlaggedKind const& k) {
      Facts f{k.flags, k.flags.deficiency, {}};
      check_consistency(f.flags);
      if (!k.presentation) {
        return f;
      }
      FinitePresentation const& p = *k.presentation;
      if (f.flags.finitely_presented == false || f.flags.finitely_generated == false) {
        inconsistent("a finite presentation is given");
      }
      f.flags.finitely_presented = true;
      f.flags.finitely_generated = true;
      long d = deficiency_count(p);
      if (f.flags.deficiency && *f.flags.deficiency < d) {
        inconsistent("asserted deficiency " + std::to_string(*f.flags.deficiency)
                     + " is below the presentation's " + std::to_string(d));
      }
      if (!f.deficiency_lower || *f.deficiency_lower < d) {
        f.deficiency_lower = d;
      }
      AbelianInvariants ab = abelianization(p);
      if (ab.free_rank > 0) {
        if (f.flags.infinite == false) {
          inconsistent("the abelianization has free rank "
                       + std::to_string(ab.free_rank) + " but infinite = false");
        }
        f.flags.infinite = true;
      }
      f.notes.push_back(
          {"presentation",
           "the given presentation has " + std::to_string(p.generator_count())
               + " generators and " + std::to_string(p.relator_count())
               + (p.relator_count() == 1 ? " relator" : " relators")
               + " (deficiency at least " + std::to_string(d)
               + ") and abelianization of free rank "
               + std::to_string(ab.free_rank)});
      return f;
    }

    std::optional<Conclusion> infinite_centre(Facts const& f) {
      if (f.flags.centre != Centre::infinite) {
        return {};
      }
      return Conclusion{
          "infinite-centre", Answer::yes, false,
          {{"infinite-centre",
            "an infinite central subgroup and the whole group commute and "
            "multiply onto the group, so a group with infinite centre is "
            "presentable by a product"}}};
    }

    std::optional<Conclusion> ends(Facts const& f) {
      if (f.flags.ends == Ends::two) {
        return Conclusion{
            "ends", Answer::yes, false,
            {{"ends",
              "a two-ended group is virtually infinite cyclic, and Z is the "
              "image of Z x Z under addition"}}};
      }
      if (f.flags.ends == Ends::infinitely_many) {
        return Conclusion{
            "ends", Answer::no, false,
            {{"ends",
              "a group with infinitely many ends is not presentable by a "
              "product"}}};
      }
      return {};
    }

    std::optional<Conclusion> hyperbolic(Facts const& f) {
      if (f.flags.hyperbolic != true || !f.flags.elementary) {
        return {};
      }
      if (*f.flags.elementary) {
        return Conclusion{
            "hyperbolic", Answer::yes, false,
            {{"hyperbolic",
              "an elementary hyperbolic group is virtually infinite cyclic"}}};
      }
      return Conclusion{
          "hyperbolic", Answer::no, false,
          {{"hyperbolic",
            "an infinite hyperbolic group is presentable by a product only if "
            "it is elementary, i.e. virtually infinite cyclic"}}};
    }

    std::optional<Conclusion> seifert(Facts const& f) {
      if (!f.flags.seifert || f.flags.infinite != true) {
        return {};
      }
      if (*f.flags.seifert) {
        return Conclusion{
            "seifert", Answer::yes, false,
            {{"seifert",
              "the fundamental group of a compact Seifert fibre space has a "
              "finite index subgroup with infinite centre (the fibre)"}}};
      }
      if (f.flags.three_manifold != true || f.flags.finitely_presented != true) {
        return {};
      }
      return Conclusion{
          "seifert", Answer::no, false,
          {{"seifert",
            "an infinite finitely presented three-manifold group is "
            "presentable by a product iff it is the fundamental group of a "
            "compact Seifert fibre space; this one is not"}}};
    }

    bool free_times_free(VirtualForm const& v) {
      return v.k >= 1 && v.l >= 1;
    }

    std::optional<Conclusion> vcd(Facts const& f) {
      if (!f.flags.vcd || *f.flags.vcd > 2 || f.flags.infinite != true
          || f.flags.finitely_presented != true || !f.flags.virtually) {
        return {};
      }
      VirtualForm v   = *f.flags.virtually;
      bool        yes = v.infinite_cyclic() || free_times_free(v);
      std::string cite =
          "an infinite finitely presented group of virtual cohomological "
          "dimension at most 2 is presentable by a product iff it is "
          "virtually Z or virtually F_k x F_l with k, l >= 1 (Bieri); this "
          "group is virtually "
          + v.to_string();
      return Conclusion{"vcd", yes ? Answer::yes : Answer::no, false,
                        {{"vcd", cite}}};
    }

    std::optional<Conclusion> deficiency(Facts const& f) {
      if (!f.deficiency_lower || *f.deficiency_lower < 1 || f.flags.infinite != true
          || f.flags.finitely_presented != true) {
        return {};
      }
      long        d = *f.deficiency_lower;
      std::string head =
          "an infinite finitely presented group of positive deficiency is "
          "presentable by a product iff it is Z or virtually F_k x Z with "
          "k >= 1, and then its deficiency is 1";
      if (d >= 2) {
        return Conclusion{
            "deficiency", Answer::no, false,
            {{"deficiency", head + "; here the deficiency is at least "
                                + std::to_string(d)}}};
      }
      if (!f.flags.virtually) {
        return {};
      }
      VirtualForm v   = *f.flags.virtually;
      bool        yes = v.infinite_cyclic() || (free_times_free(v) && (v.k == 1 || v.l == 1));
      Conclusion  c{"deficiency", yes ? Answer::yes : Answer::no, false,
                   {{"deficiency", head + "; this group is virtually " + v.to_string()}}};
      if (!yes && v.k >= 2 && v.l >= 2) {
        c.entries.push_back(
            {"kunneth",
             "b1 - b2 of " + v.to_string() + " is k + l - kl = "
                 + std::to_string(kunneth_bound(v.k, v.l))
                 + " <= 0, while an index-d subgroup of a group with a "
                   "presentation of deficiency a - b = 1 has one with "
                   "(a-1)d+1 generators and bd relators, so deficiency 1"});
      }
      return c;
    }

    std::optional<Conclusion> simple(Facts const& f) {
      if (f.flags.simple != true || f.flags.infinite != true) {
        return {};
      }
      return Conclusion{
          "simple", Answer::no, false,
          {{"simple", "an infinite simple group is not presentable by a product"}}};
    }

    std::optional<Conclusion> schreier(Facts const& f) {
      if (f.flags.finitely_generated != true || f.flags.ends != Ends::one) {
        return {};
      }
      std::vector<TraceEntry> entries;
      if (f.flags.schreier != true) {
        if (f.flags.l2_betti1_positive != true) {
          return {};
        }
        entries.push_back(
            {"schreier",
             "a finitely generated group with positive first l2-Betti number "
             "has the Schreier property (Gaboriau)"});
      }
      entries.insert(
          entries.begin(),
          {"schreier",
           "a finitely generated group with the Schreier property is "
           "presentable by a product of finitely generated groups iff it is "
           "two-ended; this group is one-ended"});
      return Conclusion{"schreier", Answer::no, true, entries};
    }

    Verdict combine(std::vector<Conclusion> const& found,
                    std::vector<TraceEntry> const& notes) {
      Verdict v;
      v.trace = notes;
      if (found.empty()) {
        v.answer = Answer::unknown;
        return v;
      }
      for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t j = i + 1; j < found.size(); ++j) {
          Conclusion const& a = found[i];
          Conclusion const& b = found[j];
          bool clash = a.answer != b.answer && !(a.answer == Answer::yes && b.qualified)
                       && !(b.answer == Answer::yes && a.qualified);
          if (clash) {
            throw InconsistentInput("rules " + a.rule + " and " + b.rule
                                    + " conclude " + to_string(a.answer) + " and "
                                    + to_string(b.answer));
          }
        }
      }
      auto yes = std::find_if(found.begin(), found.end(),
                              [](Conclusion const& c) { return c.answer == Answer::yes; });
      auto first = yes != found.end() ? yes : found.begin();
      if (yes == found.end()) {
        auto plain = std::find_if(found.begin(), found.end(),
                                  [](Conclusion const& c) { return !c.qualified; });
        if (plain != found.end()) {
          first = plain;
        }
      }
      v.answer = first->answer;
      bool qualified = std::any_of(found.begin(), found.end(),
                                   [](Conclusion const& c) { return c.qualified; });
      bool plain_no = std::any_of(found.begin(), found.end(), [](Conclusion const& c) {
        return c.answer == Answer::no && !c.qualified;
      });
      if (qualified && !plain_no) {
        v.qualifier = not_by_fg_product;
      }
      v.trace.insert(v.trace.end(), first->entries.begin(), first->entries.end());
      for (auto it = found.begin(); it != found.end(); ++it) {
        if (it != first) {
          v.trace.insert(v.trace.end(), it->entries.begin(), it->entries.end());
        }
      }
      return v;
    }

    Verdict classify_flagged(FlaggedKind const& k) {
      Facts f = gather(k);
      if (f.flags.infinite == false) {
        Verdict v;
        v.answer = Answer::not_applicable;
        v.trace  = f.notes;
        v.trace.push_back({"finite",
                           "a finite group has no infinite subgroups, so the "
                           "question does not apply"});
        return v;
      }
      std::vector<Conclusion> found;
      for (auto rule : {infinite_centre, ends, hyperbolic, seifert, vcd, deficiency,
                        simple, schreier}) {
        if (auto c = rule(f)) {
          found.push_back(std::move(*c));
        }
      }
      return combine(found, f.notes);
    }

    Verdict classify_free_product(FreeProductKind const& k) {
      if (k.orders.size() < 2) {
        throw InvalidInput("a free product needs at least two factors");
      }
      for (auto o : k.orders) {
        if (o == 1) {
          throw InvalidInput("free product factors must be nontrivial");
        }
      }
      Verdict v;
      bool    dihedral = k.orders.size() == 2 && k.orders[0] == 2 && k.orders[1] == 2;
      if (dihedral) {
        v.answer      = Answer::yes;
        v.certificate = {{"type", "finite-index-subgroup"},
                         {"subgroup", "<ab>"},
                         {"index", 2},
                         {"isomorphic_to", "Z"}};
        v.trace.push_back(
            {"free-product",
             "Z/2 * Z/2 = <a, b> is infinite dihedral; ab generates an "
             "infinite cyclic subgroup of index 2, and Z has infinite centre"});
        return v;
      }
      v.answer = Answer::no;
      v.trace.push_back(
          {"free-product",
           "a free product of two nontrivial groups is presentable by a "
           "product iff both factors have order two"});
      return v;
    }

    Verdict classify_direct_product(DirectProductKind const& k) {
      if (k.count < 2) {
        throw InvalidInput("a direct product needs at least two factors");
      }
      Verdict v;
      v.answer      = Answer::yes;
      v.certificate = {{"type", "direct-product"},
                       {"factors", k.count},
                       {"gamma1", "first factor"},
                       {"gamma2", "product of the remaining factors"}};
      v.trace.push_back(
          {"direct-product",
           "the identity map presents a direct product of infinite groups as "
           "the product of its first factor and the remaining ones"});
      return v;
    }
  }  // namespace

  Verdict classify(GroupDescriptor const& d) {
    return std::visit(
        [](auto const& k) -> Verdict {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, CoxeterKind>) {
            return coxeter_presentable(k.matrix).verdict;
          } else if constexpr (std::is_same_v<K, BSKind>) {
            return bs_presentable(k.m, k.n).verdict;
          } else if constexpr (std::is_same_v<K, FreeProductKind>) {
            return classify_free_product(k);
          } else if constexpr (std::is_same_v<K, DirectProductKind>) {
            return classify_direct_product(k);
          } else if constexpr (std::is_same_v<K, FlaggedKind>) {
            return classify_flagged(k);
          } else {
            if (!k.inner) {
              throw InvalidInput("virtually wrapper without a group");
            }
            Verdict inner = classify(*k.inner);
            Verdict v;
            v.answer    = inner.answer;
            v.qualifier = inner.qualifier;
            if (!inner.certificate.is_null()) {
              v.certificate = {{"type", "finite-index-subgroup"},
                               {"subgroup", inner.certificate}};
            }
            v.trace.push_back(
                {"finite-index",
                 "presentability by a product is unchanged by passing to or "
                 "from a subgroup of finite index"});
            v.trace.insert(v.trace.end(), inner.trace.begin(), inner.trace.end());
            return v;
          }
        },
        d.kind);
  }

}  // namespace pbp
