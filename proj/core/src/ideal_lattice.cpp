#include "pbp/ideal_lattice.hpp"

#include <algorithm>
#include <set>

#include "pbp/error.hpp"

namespace pbp {

  std::string to_string(IdealLattice::Completeness c) {
    switch (c) {
      case IdealLattice::Completeness::complete: return "Complete";
      case IdealLattice::Completeness::infinite_family:
        return "InfiniteFamilyDetected";
      case IdealLattice::Completeness::unknown: return "Unknown";
    }
    return "Unknown";
  }

  namespace {
    Module adjoint_module(LieAlgebra const& l) {
      return Module{l.dim(), l.adjoint_actions()};
    }

    std::string format_vector(LieAlgebra const& l, QVector const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
          continue;
        }
        Rational a = abs(v[i]);
        if (out.empty()) {
          out += v[i] < 0 ? "-" : "";
        } else {
          out += v[i] < 0 ? " - " : " + ";
        }
        if (a != 1) {
          out += a.get_str() + "*";
        }
        out += l.labels()[i];
      }
      return out.empty() ? "0" : out;
    }
  }  // namespace

  std::string to_string(LieAlgebra const& l, Subspace const& s) {
    if (s.is_zero()) {
      return "0";
    }
    std::string out = "span{";
    for (std::size_t i = 0; i < s.dim(); ++i) {
      out += (i == 0 ? "" : ", ") + format_vector(l, s.basis()[i]);
    }
    return out + "}";
  }

  IdealLattice ideal_lattice(LieAlgebra const& l, LatticeOptions const& opts) {
    IdealLattice out;
    if (l.dim() > opts.max_dim) {
      out.ideals = {Subspace(l.dim()), whole(l)};
      return out;
    }
    std::mt19937_64 rng(opts.meataxe.seed);
    Module          m = adjoint_module(l);

    std::set<Subspace>    seen{Subspace(l.dim())};
    std::vector<Subspace> stack{Subspace(l.dim())};
    out.completeness = IdealLattice::Completeness::complete;
    while (!stack.empty()) {
      Subspace x = std::move(stack.back());
      stack.pop_back();
      if (x.is_whole()) {
        continue;
      }
      auto soc = socle(quotient_action(m, x), rng, opts.meataxe);
      if (!soc) {
        out.completeness = IdealLattice::Completeness::unknown;
        break;
      }
      for (auto const& comp : *soc) {
        if (comp.multiplicity >= 2) {
          out.completeness = IdealLattice::Completeness::infinite_family;
          if (comp.witness) {
            out.witness = std::make_pair(preimage(x, comp.witness->first),
                                         preimage(x, comp.witness->second));
          }
          break;
        }
        Subspace y = preimage(x, comp.trace);
        if (seen.insert(y).second) {
          stack.push_back(std::move(y));
        }
      }
      if (out.completeness != IdealLattice::Completeness::complete) {
        break;
      }
      if (seen.size() > opts.budget) {
        out.completeness = IdealLattice::Completeness::unknown;
        break;
      }
    }
    out.ideals.assign(seen.begin(), seen.end());
    std::stable_sort(out.ideals.begin(),
                     out.ideals.end(),
                     [](Subspace const& a, Subspace const& b) {
                       return a.dim() < b.dim();
                     });
    for (auto const& a : out.ideals) {
      if (!is_ideal(l, a)) {
        throw VerificationFailure("lattice member is not an ideal");
      }
    }
    return out;
  }

  namespace {
    nlohmann::ordered_json certificate_json(LieAlgebra const&     l,
                                            LieCertificate const& c) {
      return {{"type", "commuting-subalgebras"},
              {"g1", to_string(l, c.g1)},
              {"g2", to_string(l, c.g2)},
              {"dims", {c.g1.dim(), c.g2.dim()}}};
    }

    void accept(LiePresentability&    r,
                LieAlgebra const&     l,
                LieCertificate const& c,
                TraceEntry            why) {
      CertificateCheck check = verify_product_certificate(l, c);
      if (!check.accepted) {
        throw VerificationFailure("product certificate rejected: "
                                  + check.reason);
      }
      r.verdict.answer      = Answer::yes;
      r.verdict.certificate = certificate_json(l, c);
      r.verdict.trace.push_back(std::move(why));
      r.certificate = c;
    }

    std::string describe(LieAlgebra const& l, IdealCheck const& c) {
      std::string s = "ideal " + to_string(l, c.ideal) + " has centralizer "
                      + to_string(l, c.centralizer);
      if (c.centralizer.is_zero()) {
        return s + "; no nonzero commuting partner";
      }
      if (c.spans) {
        return s + "; together they span the algebra";
      }
      Subspace sum = c.ideal + c.centralizer;
      return s + "; their sum has dimension " + std::to_string(sum.dim())
             + " < " + std::to_string(l.dim());
    }

    Subspace sum_of(std::vector<SocleComponent> const& comps,
                    unsigned long                      mask,
                    std::size_t                        n) {
      Subspace s(n);
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (mask >> j & 1UL) {
          s = s + comps[j].trace;
        }
      }
      return s;
    }
  }  // namespace

  LiePresentability lie_presentable(LieAlgebra const&     l,
                                    LatticeOptions const& opts) {
    ValidationReport report = validate(l);
    if (!report.ok()) {
      throw InvalidAlgebra(report.describe(l));
    }
    LiePresentability r;
    Subspace          z = centre(l);
    if (!z.is_zero()) {
      accept(r, l, {z, whole(l)},
             {"lie-centre",
              "a nonzero centre commutes with the whole algebra, so the centre "
              "and the algebra are commuting subalgebras that span it"});
      return r;
    }

    r.lattice = ideal_lattice(l, opts);
    TraceEntry criterion{
        "lie-commuting-ideals",
        "commuting subalgebras that span the algebra are ideals; a splitting "
        "exists iff some nonzero ideal a has nonzero centralizer z(a) with "
        "a + z(a) equal to the algebra"};

    // Any ideal found, even in an incomplete lattice, may split the algebra.
    std::vector<IdealCheck> found;
    for (auto const& a : r.lattice.ideals) {
      if (a.is_zero()) {
        continue;
      }
      IdealCheck c{a, centralizer(l, a), false};
      c.spans = !c.centralizer.is_zero() && (a + c.centralizer).is_whole();
      found.push_back(c);
      if (c.spans) {
        r.checks = found;
        accept(r, l, {a, c.centralizer},
               {"lie-commuting-ideals",
                "ideal " + to_string(l, a)
                    + " and its centralizer are commuting subalgebras "
                      "spanning the algebra"});
        return r;
      }
    }

    switch (r.lattice.completeness) {
      case IdealLattice::Completeness::complete: {
        r.checks = found;
        r.verdict.answer = Answer::no;
        r.verdict.trace.push_back(criterion);
        for (auto const& c : r.checks) {
          r.verdict.trace.push_back({"ideal", describe(l, c)});
        }
        return r;
      }
      case IdealLattice::Completeness::infinite_family: {
        std::mt19937_64 rng(opts.meataxe.seed);
        auto soc = socle(Module{l.dim(), l.adjoint_actions()}, rng, opts.meataxe);
        if (!soc || soc->size() >= 8 * sizeof(unsigned long)) {
          break;
        }
        std::size_t   k    = soc->size();
        unsigned long full = (1UL << k) - 1;
        for (auto const& comp : *soc) {
          IdealCheck c{comp.trace, centralizer(l, comp.trace), false};
          c.spans = !c.centralizer.is_zero()
                    && (comp.trace + c.centralizer).is_whole();
          r.checks.push_back(c);
        }
        for (unsigned long mask = 1; mask < full; ++mask) {
          Subspace zj = centralizer(l, sum_of(*soc, mask, l.dim()));
          Subspace zc = centralizer(l, sum_of(*soc, full & ~mask, l.dim()));
          if ((zj + zc).is_whole()) {
            LieCertificate c{zc, zj};
            if (verify_product_certificate(l, c).accepted) {
              accept(r, l, c,
                     {"lie-isotypic",
                      "centralizers of complementary isotypic socle "
                      "components commute and span the algebra"});
              return r;
            }
            r.verdict.answer = Answer::unknown;
            r.verdict.trace.push_back(
                {"lie-isotypic",
                 "a split of the isotypic socle components has spanning "
                 "centralizers but yields no certificate"});
            return r;
          }
        }
        r.verdict.answer = Answer::no;
        r.verdict.trace.push_back(criterion);
        r.verdict.trace.push_back(
            {"lie-isotypic",
             "with zero centre every minimal ideal lies in one of two "
             "commuting ideals and isomorphic minimal ideals lie in the same "
             "one; none of the "
                 + std::to_string(full - 1)
                 + " splits of the isotypic socle components has "
                   "centralizers spanning the algebra"});
        if (r.lattice.witness) {
          r.verdict.trace.push_back(
              {"ideal-family",
               "distinct isomorphic minimal ideals "
                   + to_string(l, r.lattice.witness->first) + " and "
                   + to_string(l, r.lattice.witness->second)});
        }
        for (auto const& c : r.checks) {
          r.verdict.trace.push_back({"ideal", describe(l, c)});
        }
        return r;
      }
      case IdealLattice::Completeness::unknown: break;
    }
    r.verdict.answer = Answer::unknown;
    r.verdict.trace.push_back(
        {"lie-lattice",
         "ideal enumeration did not finish within its dimension or budget "
         "bound"});
    return r;
  }

}  // namespace pbp
