#include "pbp/abels.hpp"

#include <array>
#include <map>

#include "pbp/error.hpp"

namespace pbp {

  bool in_zinvp(Rational const& q, unsigned long p) {
    Integer d = q.get_den();
    while (d % p == 0) {
      d /= p;
    }
    return d == 1;
  }

  namespace {
    void check_prime(unsigned long p) {
      Integer q = p;
      if (p < 2 || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0) {
        throw InvalidInput(std::to_string(p) + " is not a prime");
      }
    }

    Rational checked(Rational q, unsigned long p) {
      q.canonicalize();
      if (!in_zinvp(q, p)) {
        throw InvalidInput(q.get_str() + " is not in Z[1/" + std::to_string(p) + "]");
      }
      return q;
    }

    Rational p_power(unsigned long p, long k) {
      Integer a;
      mpz_ui_pow_ui(a.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
      return k < 0 ? Rational(1, a) : Rational(a);
    }

    void same_prime(unsigned long a, unsigned long b) {
      if (a != b) {
        throw InvalidInput("Z[1/p] elements over different primes");
      }
    }
  }  // namespace

  ZInvP::ZInvP(Rational value, unsigned long p)
      : _v(checked(std::move(value), p)), _p(p) {}

  ZInvP ZInvP::divide_by_power(long k) const {
    return ZInvP(_v / p_power(_p, k), _p);
  }

  ZInvP operator+(ZInvP const& a, ZInvP const& b) {
    same_prime(a._p, b._p);
    return ZInvP(a._v + b._v, a._p);
  }

  ZInvP operator-(ZInvP const& a, ZInvP const& b) {
    same_prime(a._p, b._p);
    return ZInvP(a._v - b._v, a._p);
  }

  ZInvP operator*(ZInvP const& a, ZInvP const& b) {
    same_prime(a._p, b._p);
    return ZInvP(a._v * b._v, a._p);
  }

  Rational Unit::value(unsigned long p) const {
    return sign * p_power(p, exponent);
  }

  A3Matrix::A3Matrix(unsigned long p, Rational x, Rational y, Rational z, Unit u)
      : _p(p), _x(std::move(x)), _y(std::move(y)), _z(std::move(z)), _u(u) {
    check_prime(p);
    if (u.sign != 1 && u.sign != -1) {
      throw InvalidInput("unit sign must be +-1");
    }
    _x = checked(_x, p);
    _y = checked(_y, p);
    _z = checked(_z, p);
  }

  A3Matrix A3Matrix::identity(unsigned long p) {
    return A3Matrix(p, 0, 0, 0, Unit{});
  }

  A3Matrix A3Matrix::diagonal(unsigned long p, Unit u) {
    return A3Matrix(p, 0, 0, 0, u);
  }

  A3Matrix A3Matrix::e12(unsigned long p, Rational a) {
    return A3Matrix(p, std::move(a), 0, 0, Unit{});
  }

  A3Matrix A3Matrix::e23(unsigned long p, Rational a) {
    return A3Matrix(p, 0, std::move(a), 0, Unit{});
  }

  A3Matrix A3Matrix::e13(unsigned long p, Rational a) {
    return A3Matrix(p, 0, 0, std::move(a), Unit{});
  }

  A3Matrix operator*(A3Matrix const& a, A3Matrix const& b) {
    same_prime(a._p, b._p);
    Rational ua = a._u.value(a._p), ub = b._u.value(a._p);
    return A3Matrix(a._p,
                    b._x + a._x * ub,
                    ua * b._y + a._y,
                    b._z + a._x * b._y + a._z,
                    a._u * b._u);
  }

  A3Matrix A3Matrix::inverse() const {
    Rational iu = _u.inverse().value(_p);
    return A3Matrix(_p, -_x * iu, -_y * iu, -_z + _x * _y * iu, _u.inverse());
  }

  bool A3Matrix::is_central() const {
    return _u == Unit{} && _x == 0 && _y == 0;
  }

  QMatrix A3Matrix::to_matrix() const {
    return QMatrix{{1, _x, _z}, {0, _u.value(_p), _y}, {0, 0, 1}};
  }

  std::string A3Matrix::to_string() const {
    return "(x=" + _x.get_str() + ", y=" + _y.get_str() + ", z=" + _z.get_str()
           + ", u=" + _u.value(_p).get_str() + ")";
  }

  A3Matrix commutator(A3Matrix const& a, A3Matrix const& b) {
    return a * b * a.inverse() * b.inverse();
  }

  std::vector<A3Matrix> a3_generators(unsigned long p) {
    return {A3Matrix::diagonal(p, {1, 1}),
            A3Matrix::diagonal(p, {-1, 0}),
            A3Matrix::e12(p, 1),
            A3Matrix::e23(p, 1)};
  }

  namespace {
    A3Matrix reduce_mod_z(A3Matrix const& m) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), m.z().get_num_mpz_t(), m.z().get_den_mpz_t());
      return A3Matrix(m.prime(), m.x(), m.y(), m.z() - fl, m.u());
    }
  }  // namespace

  GammaElement::GammaElement(A3Matrix lift) : _lift(reduce_mod_z(lift)) {}

  GammaElement operator*(GammaElement const& a, GammaElement const& b) {
    return GammaElement(a._lift * b._lift);
  }

  bool gamma_commutes(A3Matrix const& g, A3Matrix const& h) {
    A3Matrix c = commutator(g, h);
    return c.is_central() && c.z().get_den() == 1;
  }

  bool gamma_commutes(GammaElement const& g, GammaElement const& h) {
    return gamma_commutes(g.lift(), h.lift());
  }

  ////////////////////////////////////////////////////////////////////////
  // Symbolic check over Laurent polynomials in x, y, z, u, v
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t             nvars = 5;
    constexpr std::array<char, nvars> var_names{'x', 'y', 'z', 'u', 'v'};
    using Exponents                         = std::array<int, nvars>;

    struct Laurent {
      std::map<Exponents, Rational> terms;

      static Laurent constant(Rational c) {
        Laurent l;
        if (c != 0) {
          l.terms[Exponents{}] = std::move(c);
        }
        return l;
      }
      static Laurent var(std::size_t i, int e = 1) {
        Laurent   l;
        Exponents ex{};
        ex[i]       = e;
        l.terms[ex] = 1;
        return l;
      }

      void add(Exponents const& e, Rational const& c) {
        auto [it, fresh] = terms.emplace(e, c);
        if (!fresh) {
          it->second += c;
        }
        if (it->second == 0) {
          terms.erase(it);
        }
      }

      Laurent monomial_inverse() const {
        if (terms.size() != 1) {
          throw VerificationFailure("inverting a non-monomial");
        }
        auto [e, c] = *terms.begin();
        Laurent   l;
        Exponents ne;
        for (std::size_t i = 0; i < nvars; ++i) {
          ne[i] = -e[i];
        }
        l.terms[ne] = 1 / c;
        return l;
      }

      friend Laurent operator+(Laurent a, Laurent const& b) {
        for (auto const& [e, c] : b.terms) {
          a.add(e, c);
        }
        return a;
      }
      friend Laurent operator-(Laurent const& a) {
        Laurent r;
        for (auto const& [e, c] : a.terms) {
          r.terms[e] = -c;
        }
        return r;
      }
      friend Laurent operator-(Laurent const& a, Laurent const& b) {
        return a + (-b);
      }
      friend Laurent operator*(Laurent const& a, Laurent const& b) {
        Laurent r;
        for (auto const& [ea, ca] : a.terms) {
          for (auto const& [eb, cb] : b.terms) {
            Exponents e;
            for (std::size_t i = 0; i < nvars; ++i) {
              e[i] = ea[i] + eb[i];
            }
            r.add(e, ca * cb);
          }
        }
        return r;
      }
      friend bool operator==(Laurent const&, Laurent const&) = default;

      std::string to_string() const {
        if (terms.empty()) {
          return "0";
        }
        std::string out;
        for (auto const& [e, c] : terms) {
          std::string mono;
          for (std::size_t i = 0; i < nvars; ++i) {
            if (e[i] == 0) {
              continue;
            }
            mono += (mono.empty() ? "" : "*") + std::string(1, var_names[i]);
            if (e[i] != 1) {
              mono += "^" + std::to_string(e[i]);
            }
          }
          Rational a = abs(c);
          std::string coeff = a == 1 && !mono.empty() ? "" : a.get_str();
          std::string term  = coeff + (coeff.empty() || mono.empty() ? "" : "*") + mono;
          if (out.empty()) {
            out = (c < 0 ? "-" : "") + term;
          } else {
            out += (c < 0 ? " - " : " + ") + term;
          }
        }
        return out;
      }
    };

    using LMatrix = std::array<std::array<Laurent, 3>, 3>;

    LMatrix a3(Laurent x, Laurent y, Laurent z, Laurent u) {
      LMatrix m;
      m[0] = {Laurent::constant(1), std::move(x), std::move(z)};
      m[1] = {Laurent{}, std::move(u), std::move(y)};
      m[2] = {Laurent{}, Laurent{}, Laurent::constant(1)};
      return m;
    }

    LMatrix multiply(LMatrix const& a, LMatrix const& b) {
      LMatrix c;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          for (std::size_t k = 0; k < 3; ++k) {
            c[i][j] = c[i][j] + a[i][k] * b[k][j];
          }
        }
      }
      return c;
    }

    // Back substitution for an upper triangular matrix with monomial
    // diagonal.
    LMatrix inverse(LMatrix const& a) {
      LMatrix r;
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t ii = 3; ii > 0; --ii) {
          std::size_t i   = ii - 1;
          Laurent     rhs = Laurent::constant(i == j ? 1 : 0);
          for (std::size_t k = i + 1; k < 3; ++k) {
            rhs = rhs - a[i][k] * r[k][j];
          }
          r[i][j] = rhs * a[i][i].monomial_inverse();
        }
      }
      return r;
    }

    std::string render(LMatrix const& m) {
      return "(x: " + m[0][1].to_string() + "; y: " + m[1][2].to_string()
             + "; z: " + m[0][2].to_string() + "; u: " + m[1][1].to_string() + ")";
    }
  }  // namespace

  SymbolicReport symbolic_acentrality() {
    Laurent x = Laurent::var(0), y = Laurent::var(1), z = Laurent::var(2);
    Laurent u = Laurent::var(3), v = Laurent::var(4);
    Laurent ui = Laurent::var(3, -1), vi = Laurent::var(4, -1);
    Laurent one = Laurent::constant(1);

    LMatrix g  = a3({}, {}, {}, u);
    LMatrix h  = a3(x, y, z, v);
    LMatrix gi = inverse(g);
    LMatrix conj = multiply(multiply(g, h), gi);
    LMatrix comm = multiply(conj, inverse(h));

    SymbolicReport r;
    r.conjugation = conj == a3(x * ui, u * y, z, v);
    r.x_entry     = comm[0][1] == x * (ui - one) * vi;
    r.y_entry     = comm[1][2] == y * (u - one);
    r.z_entry     = comm[0][2] == x * y * (one - ui) * vi;
    r.u_entry     = comm[1][1] == one;
    r.conjugate   = render(conj);
    r.commutator  = render(comm);
    return r;
  }

  A3Matrix random_a3(unsigned long p, std::mt19937_64& rng) {
    auto entry = [&]() -> Rational {
      long k     = std::uniform_int_distribution<long>(0, 4)(rng);
      Rational d = p_power(p, k);
      long bound = 10 * d.get_num().get_si();
      long a     = std::uniform_int_distribution<long>(-bound, bound)(rng);
      return Rational(a) / d;
    };
    Rational x = entry(), y = entry(), z = entry();
    int      sign = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? 1 : -1;
    long     n    = std::uniform_int_distribution<long>(-3, 3)(rng);
    switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
      case 0: x = 0; y = 0; break;
      case 1: x = 0; break;
      case 2: y = 0; break;
      default: break;
    }
    return A3Matrix(p, x, y, z, Unit{sign, n});
  }

  AcentralReport acentral_check(unsigned long p,
                                Unit          u,
                                std::size_t   trials,
                                std::uint64_t seed) {
    if (u.exponent == 0) {
      throw InvalidInput("acentral check needs u = +-p^n with n != 0");
    }
    AcentralReport r;
    r.prime    = p;
    r.g        = u;
    r.symbolic = symbolic_acentrality();
    r.trials   = trials;
    A3Matrix        g = A3Matrix::diagonal(p, u);
    std::mt19937_64 rng(seed ^ p);
    for (std::size_t i = 0; i < trials; ++i) {
      A3Matrix h = random_a3(p, rng);
      if (!gamma_commutes(g, h)) {
        continue;
      }
      ++r.commuting;
      if (h.x() != 0 || h.y() != 0) {
        r.counterexamples.push_back(h.to_string());
      }
    }
    return r;
  }

  nlohmann::ordered_json to_json(AcentralReport const& r) {
    auto pass = [](bool b) { return b ? "pass" : "fail"; };
    return {{"prime", r.prime},
            {"g", "diag(" + r.g.value(r.prime).get_str() + ")"},
            {"symbolic", pass(r.symbolic.passed())},
            {"randomized", pass(r.randomized_passed())},
            {"trials", r.trials},
            {"commuting_samples", r.commuting},
            {"identities",
             {{"conjugate", r.symbolic.conjugate},
              {"commutator", r.symbolic.commutator}}},
            {"counterexamples", r.counterexamples}};
  }

}  // namespace pbp
