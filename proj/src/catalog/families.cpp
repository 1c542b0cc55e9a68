#include <algorithm>
#include <array>

#include "liefix/catalog.hpp"

namespace liefix {

namespace {

long positive_int(const CycScalar& c, const std::string& what) {
  if (!c.is_rational() || !c.is_integral() || c.rational_part() < 1 || c.rational_part() > 100000)
    throw Error(ErrorKind::BadParameters, what + " must be a positive integer");
  return c.rational_part().get_num().get_si();
}

void need(const std::vector<CycScalar>& params, std::size_t k, const std::string& family) {
  if (params.size() != k)
    throw Error(ErrorKind::BadParameters, family + " takes " + std::to_string(k) + " parameter(s)");
}

FieldMatrix rows(const std::vector<std::vector<CycScalar>>& r) {
  std::vector<Vec> v(r.begin(), r.end());
  return FieldMatrix::from_rows(v);
}

}  // namespace

FieldMatrix family_automorphism(const std::string& family, const std::vector<CycScalar>& params) {
  const CycScalar o(0);
  if (family == "abelian") {
    need(params, 2, family);
    long dim = positive_int(params[0], "dim");
    long n = positive_int(params[1], "n");
    return CycScalar::zeta(static_cast<unsigned>(n)) * FieldMatrix::identity(static_cast<std::size_t>(dim));
  }
  if (family == "n3") {
    need(params, 1, family);
    auto n = static_cast<unsigned>(positive_int(params[0], "n"));
    CycScalar z = CycScalar::zeta(n);
    return FieldMatrix::diagonal({z, z, z * z});
  }
  if (family == "r3m1") {
    need(params, 1, family);
    auto m = static_cast<unsigned>(positive_int(params[0], "m"));
    return rows({{CycScalar(-1), o, o}, {o, o, CycScalar::zeta(m)}, {o, CycScalar(1), o}});
  }
  if (family == "n4") {
    need(params, 2, family);
    const CycScalar &s = params[0], &t = params[1];
    return FieldMatrix::diagonal({s, t, s * t, s * s * t});
  }
  if (family == "g9w") {
    need(params, 1, family);
    auto m = static_cast<unsigned>(positive_int(params[0], "m"));
    const CycScalar w = CycScalar::zeta(3), w2 = w * w, one(1);
    const CycScalar l = CycScalar::zeta(3 * m);
    return rows({{w, o, o, o},
                 {o, l, o, o},
                 {o, (w2 - one) * l, w2 * l, o},
                 {o, CycScalar(3) * w * l, (w - one) * l, l * w}});
  }
  if (family == "g10m1") {
    need(params, 1, family);
    auto m = static_cast<unsigned>(positive_int(params[0], "m"));
    const CycScalar z = CycScalar::zeta(m);
    return rows({{CycScalar(-1), o, o, o},
                 {o, z, o, o},
                 {o, CycScalar(-2) * z, -z, o},
                 {o, o, o, -(z * z)}});
  }
  throw Error(ErrorKind::UnknownName, "no automorphism family named '" + family + "'");
}

CatalogEntry family_host(const std::string& family, const std::vector<CycScalar>& params) {
  if (family == "abelian") {
    need(params, 2, family);
    return get_algebra("C^n", {params[0]});
  }
  if (family == "n3") return get_algebra("n3");
  if (family == "r3m1") return get_algebra("r3lam", {CycScalar(-1)});
  if (family == "n4") return get_algebra("g2");
  if (family == "g9w") {
    CycScalar w = CycScalar::zeta(3);
    return get_algebra("g9", {w, w * w});
  }
  if (family == "g10m1") return get_algebra("g10", {CycScalar(-1)});
  throw Error(ErrorKind::UnknownName, "no automorphism family named '" + family + "'");
}

IsoPredicateResult iso_predicate(const std::string& name, const std::vector<CycScalar>& a,
                                 const std::vector<CycScalar>& b) {
  if (name == "g10") {
    if (a.size() != 1 || b.size() != 1) throw Error(ErrorKind::BadParameters, "g10 takes one parameter");
    if (a[0] == b[0]) return {true, "alpha = alpha'"};
    if (a[0] * b[0] == CycScalar(1)) return {true, "alpha * alpha' = 1"};
    return {};
  }
  if (name == "r3lam") {
    if (a.size() != 1 || b.size() != 1) throw Error(ErrorKind::BadParameters, "r3lam takes one parameter");
    if (a[0].is_zero() || b[0].is_zero()) throw Error(ErrorKind::BadParameters, "r3lam needs lambda != 0");
    if (a[0] == b[0]) return {true, "mu = lambda"};
    if (a[0] * b[0] == CycScalar(1)) return {true, "mu = 1/lambda"};
    return {};
  }
  if (name == "g9") {
    if (a.size() != 2 || b.size() != 2) throw Error(ErrorKind::BadParameters, "g9 takes two parameters");
    const CycScalar &al = a[0], &be = a[1];
    bool nonzero = !al.is_zero() && !be.is_zero() && !b[0].is_zero() && !b[1].is_zero();
    if (nonzero) {
      const CycScalar one(1);
      const std::vector<std::pair<std::string, std::array<CycScalar, 2>>> pairs = {
          {"(alpha, beta)", {al, be}},
          {"(beta, alpha)", {be, al}},
          {"(1/alpha, beta/alpha)", {one / al, be / al}},
          {"(beta/alpha, 1/alpha)", {be / al, one / al}},
          {"(1/beta, alpha/beta)", {one / be, al / be}},
          {"(alpha/beta, 1/beta)", {al / be, one / be}}};
      for (const auto& [clause, p] : pairs)
        if (p[0] == b[0] && p[1] == b[1]) return {true, clause};
      return {};
    }
    // Some parameter vanishes: compare the ratios 1:alpha:beta up to permutation.
    std::array<CycScalar, 3> x{CycScalar(1), b[0], b[1]};
    std::array<int, 3> perm{0, 1, 2};
    do {
      const CycScalar& lead = x[perm[0]];
      if (lead.is_zero()) continue;
      if (x[perm[1]] / lead == al && x[perm[2]] / lead == be) return {true, "ratios 1:alpha:beta agree up to permutation"};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {};
  }
  throw Error(ErrorKind::UnknownName, "no isomorphism predicate for '" + name + "'");
}

}  // namespace liefix
