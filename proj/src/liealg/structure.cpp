#include <deque>

#include "liefix/lie.hpp"

namespace liefix {

namespace {

// Rows kept in echelon form as they arrive; add() reports whether the vector
// was new.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n) : n_(n) {}

  bool add(Vec v) {
    for (const auto& [p, row] : rows_) {
      if (v[p].is_zero()) continue;
      CycScalar c = v[p];
      for (std::size_t j = 0; j < n_; ++j)
        if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    CycScalar inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    for (auto& [q, row] : rows_) {
      if (row[p].is_zero()) continue;
      CycScalar c = row[p];
      for (std::size_t j = 0; j < n_; ++j)
        if (!v[j].is_zero()) row[j] -= c * v[j];
    }
    rows_.emplace_back(p, std::move(v));
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

Vec flatten(const FieldMatrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

bool nilpotent_matrix(const FieldMatrix& a) { return power(a, a.rows()).is_zero(); }

// Lower central series of an ideal I computed inside g: I, [I,I], [I,[I,I]], ...
std::vector<Subspace> ideal_lower_central(const LieAlgebra& g, const Subspace& ideal) {
  std::vector<Subspace> out{ideal};
  while (!out.back().is_zero()) {
    Subspace next = subspace_bracket(g, ideal, out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

SubspaceChain series(const LieAlgebra& g, SeriesKind kind) {
  const std::size_t n = g.dim();
  SubspaceChain chain{kind, {}};
  if (kind == SeriesKind::UpperCentral) {
    chain.links.push_back(Subspace(n));
    for (;;) {
      const Subspace& z = chain.links.back();
      // x with [x, e_j] in Z for every j.
      FieldMatrix m(n * n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          Vec r = z.reduce(g.bracket_basis(i, j));
          for (std::size_t k = 0; k < n; ++k) m.at(j * n + k, i) = r[k];
        }
      Subspace next = Subspace::span(kernel(m));
      if (next.dim() == z.dim()) break;
      chain.links.push_back(std::move(next));
    }
    return chain;
  }
  Subspace whole = Subspace::whole(n);
  chain.links.push_back(whole);
  while (!chain.links.back().is_zero()) {
    const Subspace& prev = chain.links.back();
    Subspace next = kind == SeriesKind::Derived ? subspace_bracket(g, prev, prev)
                                                : subspace_bracket(g, whole, prev);
    if (next.dim() == prev.dim()) break;
    chain.links.push_back(std::move(next));
  }
  return chain;
}

bool is_solvable(const LieAlgebra& g) {
  return series(g, SeriesKind::Derived).links.back().is_zero();
}

bool is_nilpotent(const LieAlgebra& g) {
  return series(g, SeriesKind::LowerCentral).links.back().is_zero();
}

Subspace centralizer(const LieAlgebra& g, const Subspace& u) {
  const std::size_t n = g.dim();
  const std::size_t k = u.dim();
  if (k == 0) return Subspace::whole(n);
  FieldMatrix m(k * n, n);
  for (std::size_t b = 0; b < k; ++b) {
    Vec ub = u.basis().row(b);
    for (std::size_t i = 0; i < n; ++i) {
      Vec v = g.bracket(unit_vec(n, i), ub);
      for (std::size_t r = 0; r < n; ++r) m.at(b * n + r, i) = v[r];
    }
  }
  return Subspace::span(kernel(m));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

bool is_ideal(const LieAlgebra& g, const Subspace& u) {
  return u.contains(subspace_bracket(g, Subspace::whole(g.dim()), u));
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw Error(ErrorKind::PreconditionViolated, "quotient by a non-ideal");
  const std::size_t n = g.dim();
  Quotient q;
  q.ideal = ideal;
  q.kept = ideal.complement_indices();
  const std::size_t d = q.kept.size();
  q.projection = FieldMatrix(d, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = ideal.reduce(unit_vec(n, j));
    for (std::size_t a = 0; a < d; ++a) q.projection.at(a, j) = r[q.kept[a]];
  }
  q.lift = FieldMatrix(n, d);
  for (std::size_t a = 0; a < d; ++a) q.lift.at(q.kept[a], a) = CycScalar(1);
  LieAlgebra::BracketTable t;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Vec v = q.projection.apply(g.bracket_basis(q.kept[a], q.kept[b]));
      if (!is_zero(v)) t[{a, b}] = std::move(v);
    }
  std::string name = g.name().empty() ? std::string() : g.name() + "/I";
  q.algebra = LieAlgebra::validate(d, t, name, g.conductor());
  return q;
}

Subspace nilradical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (!is_solvable(g)) throw Error(ErrorKind::NotSolvable, "nilradical requires a solvable algebra");
  if (is_nilpotent(g)) return Subspace::whole(n);

  std::vector<FieldMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(adjoint(g, unit_vec(n, i)));

  // Associative envelope of ad(g) with the identity. On a Lie flag its
  // diagonals are exactly the functions constant on equal weights, so the
  // trace pairing below cuts out the common kernel of all weights.
  EchelonBasis seen(n * n);
  std::vector<FieldMatrix> envelope;
  std::deque<FieldMatrix> queue{FieldMatrix::identity(n)};
  seen.add(flatten(queue.front()));
  while (!queue.empty()) {
    FieldMatrix w = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : ads) {
      FieldMatrix aw = a * w;
      if (seen.add(flatten(aw))) queue.push_back(aw);
    }
    envelope.push_back(std::move(w));
  }
  FieldMatrix pairing(envelope.size(), n);
  for (std::size_t r = 0; r < envelope.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) pairing.at(r, i) = (ads[i] * envelope[r]).trace();
  Subspace nr = Subspace::span(kernel(pairing));

  // Certify before returning.
  bool ok = is_ideal(g, nr) && ideal_lower_central(g, nr).back().is_zero();
  ok = ok && nr.contains(series(g, SeriesKind::Derived).links.at(1));
  for (std::size_t j : nr.complement_indices())
    ok = ok && !nilpotent_matrix(ads[j]);
  if (!ok) throw Error(ErrorKind::PreconditionViolated, "nilradical certification failed");
  return nr;
}

UnimodularityReport unimodularity_report(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  UnimodularityReport rep;
  rep.unimodular = true;
  std::vector<FieldMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) {
    ads.push_back(adjoint(g, unit_vec(n, i)));
    rep.adjoint_traces.push_back(ads.back().trace());
    if (!rep.adjoint_traces.back().is_zero()) rep.unimodular = false;
  }
  rep.solvable = is_solvable(g);
  rep.nilradical = Subspace(n);
  if (!rep.solvable) return rep;

  rep.nilradical = nilradical(g);
  rep.nilradical_series = ideal_lower_central(g, rep.nilradical);
  rep.strongly_unimodular = true;
  const auto& links = rep.nilradical_series;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<CycScalar> traces;
    for (const auto& s : links) traces.push_back(restrict_to(ads[i], s.basis()).trace());
    for (std::size_t k = 0; k + 1 < links.size(); ++k) {
      CycScalar t = traces[k] - traces[k + 1];
      if (!t.is_zero()) rep.strongly_unimodular = false;
      rep.table.push_back({i, k + 1, t});
    }
  }
  return rep;
}

}  // namespace liefix
