#include "mackey/module.hpp"

namespace mackey {

FreeModule direct_sum(const FreeModule& a, const FreeModule& b) {
  FreeModule out = a;
  out.summands.insert(out.summands.end(), b.summands.begin(), b.summands.end());
  return out;
}

int evaluate_rank(const AddCategory& cat, const FreeModule& f, int a) {
  int r = 0;
  for (int c : f.summands) r += cat.hom_rank(a, c);
  return r;
}

std::vector<int> summand_offsets(const AddCategory& cat, const FreeModule& f, int a) {
  std::vector<int> out;
  int r = 0;
  for (int c : f.summands) {
    out.push_back(r);
    r += cat.hom_rank(a, c);
  }
  out.push_back(r);
  return out;
}

ModMorphism ModMorphism::zero(const AddCategory& cat, const FreeModule& source, const FreeModule& target) {
  ModMorphism m{source, target, {}};
  for (int t : target.summands) {
    std::vector<HomVector> row;
    for (int s : source.summands) row.push_back(HomVector::Zero(cat.hom_rank(s, t)));
    m.entries.push_back(std::move(row));
  }
  return m;
}

ModMorphism ModMorphism::identity(const AddCategory& cat, const FreeModule& f) {
  ModMorphism m = zero(cat, f, f);
  for (int i = 0; i < f.size(); ++i) m.entry(i, i) = cat.identity_vector(f.summands[static_cast<std::size_t>(i)]);
  return m;
}

IntMatrix evaluate(const AddCategory& cat, const ModMorphism& m, int a) {
  const auto rows = summand_offsets(cat, m.target, a);
  const auto cols = summand_offsets(cat, m.source, a);
  IntMatrix out = IntMatrix::Zero(rows.back(), cols.back());
  for (int i = 0; i < m.target.size(); ++i) {
    const int t = m.target.summands[static_cast<std::size_t>(i)];
    for (int j = 0; j < m.source.size(); ++j) {
      const int s = m.source.summands[static_cast<std::size_t>(j)];
      const HomVector& phi = m.entry(i, j);
      for (int p = 0; p < phi.size(); ++p) {
        if (phi(p) == 0) continue;
        for (int x = 0; x < cat.hom_rank(a, s); ++x)
          for (const HomTerm& term : cat.compose(a, s, t, x, p))
            out(rows[static_cast<std::size_t>(i)] + term.index, cols[static_cast<std::size_t>(j)] + x) += phi(p) * term.coeff;
      }
    }
  }
  return out;
}

ModMorphism compose(const AddCategory& cat, const ModMorphism& g, const ModMorphism& f) {
  if (!(f.target == g.source)) throw Error("compose: module morphisms are not composable");
  ModMorphism out = ModMorphism::zero(cat, f.source, g.target);
  for (int i = 0; i < g.target.size(); ++i) {
    const int t = g.target.summands[static_cast<std::size_t>(i)];
    for (int k = 0; k < f.source.size(); ++k) {
      const int s = f.source.summands[static_cast<std::size_t>(k)];
      HomVector& acc = out.entry(i, k);
      for (int j = 0; j < f.target.size(); ++j) {
        const int mid = f.target.summands[static_cast<std::size_t>(j)];
        const HomVector& fv = f.entry(j, k);
        const HomVector& gv = g.entry(i, j);
        if (fv.isZero() || gv.isZero()) continue;
        for (int p = 0; p < fv.size(); ++p) {
          if (fv(p) == 0) continue;
          for (int q = 0; q < gv.size(); ++q)
            if (gv(q) != 0) cat.compose_into(s, mid, t, p, q, fv(p) * gv(q), acc);
        }
      }
    }
  }
  return out;
}

ModMorphism add(const ModMorphism& a, const ModMorphism& b) {
  if (!(a.source == b.source) || !(a.target == b.target)) throw Error("add: module morphisms have different types");
  ModMorphism out = a;
  for (int i = 0; i < a.target.size(); ++i)
    for (int j = 0; j < a.source.size(); ++j) out.entry(i, j) += b.entry(i, j);
  return out;
}

bool is_zero(const ModMorphism& m) {
  for (const auto& row : m.entries)
    for (const HomVector& v : row)
      if (!v.isZero()) return false;
  return true;
}

ModMorphism hstack(const ModMorphism& a, const ModMorphism& b) {
  if (!(a.target == b.target)) throw Error("hstack: different targets");
  ModMorphism out{direct_sum(a.source, b.source), a.target, a.entries};
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    out.entries[i].insert(out.entries[i].end(), b.entries[i].begin(), b.entries[i].end());
  return out;
}

IntMatrix LatticeModule::act(const AddCategory& cat, int a, int b, const HomVector& f) const {
  IntMatrix out = variance == Variance::contravariant ? IntMatrix::Zero(rank(a), rank(b)) : IntMatrix::Zero(rank(b), rank(a));
  for (int p = 0; p < cat.hom_rank(a, b); ++p)
    if (f(p) != 0) out += f(p) * act(a, b, p);
  return out;
}

LatticeModule representable(const AddCategory& cat, int c, Variance variance) {
  const int n = cat.object_count();
  LatticeModule m;
  m.variance = variance;
  m.kind = (variance == Variance::contravariant ? "Z[-," : "Z[") + cat.object_name(c) + (variance == Variance::contravariant ? "]" : ",-]");
  for (int a = 0; a < n; ++a) m.ranks.push_back(variance == Variance::contravariant ? cat.hom_rank(a, c) : cat.hom_rank(c, a));
  m.action.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    m.action[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b)
      for (int f = 0; f < cat.hom_rank(a, b); ++f) {
        IntMatrix mat;
        if (variance == Variance::contravariant) {
          mat = IntMatrix::Zero(m.rank(a), m.rank(b));
          for (int x = 0; x < m.rank(b); ++x)
            for (const HomTerm& t : cat.compose(a, b, c, f, x)) mat(t.index, x) += t.coeff;
        } else {
          mat = IntMatrix::Zero(m.rank(b), m.rank(a));
          for (int x = 0; x < m.rank(a); ++x)
            for (const HomTerm& t : cat.compose(c, a, b, x, f)) mat(t.index, x) += t.coeff;
        }
        m.action[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].push_back(std::move(mat));
      }
  }
  return m;
}

LatticeModule constant_module(const AddCategory& cat, Variance variance) {
  const int n = cat.object_count();
  LatticeModule m;
  m.variance = variance;
  m.kind = "constant";
  m.ranks.assign(static_cast<std::size_t>(n), 1);
  m.action.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    m.action[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b)
      m.action[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].assign(static_cast<std::size_t>(cat.hom_rank(a, b)),
                                                                                 IntMatrix::Ones(1, 1));
  }
  return m;
}

LatticeModule restrict_module(const LatticeModule& m, const std::vector<int>& objects) {
  LatticeModule out;
  out.variance = m.variance;
  out.kind = m.kind;
  for (int a : objects) {
    out.ranks.push_back(m.rank(a));
    std::vector<std::vector<IntMatrix>> row;
    for (int b : objects) row.push_back(m.action[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    out.action.push_back(std::move(row));
  }
  return out;
}

bool check_functorial(const AddCategory& cat, const LatticeModule& m) {
  const int n = cat.object_count();
  for (int a = 0; a < n; ++a)
    if (m.act(a, a, cat.identity(a)) != IntMatrix::Identity(m.rank(a), m.rank(a))) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int f = 0; f < cat.hom_rank(a, b); ++f)
          for (int g = 0; g < cat.hom_rank(b, c); ++g) {
            HomVector gf = HomVector::Zero(cat.hom_rank(a, c));
            cat.compose_into(a, b, c, f, g, 1, gf);
            IntMatrix lhs = m.act(cat, a, c, gf);
            IntMatrix rhs = m.variance == Variance::contravariant ? IntMatrix(m.act(a, b, f) * m.act(b, c, g))
                                                                  : IntMatrix(m.act(b, c, g) * m.act(a, b, f));
            if (lhs != rhs) return false;
          }
  return true;
}

IntMatrix evaluate(const AddCategory& cat, const LatticeModule& target, const Augmentation& e, int a) {
  const auto cols = summand_offsets(cat, e.source, a);
  IntMatrix out = IntMatrix::Zero(target.rank(a), cols.back());
  for (int j = 0; j < e.source.size(); ++j) {
    const int c = e.source.summands[static_cast<std::size_t>(j)];
    for (int x = 0; x < cat.hom_rank(a, c); ++x)
      out.col(cols[static_cast<std::size_t>(j)] + x) = target.act(a, c, x) * e.images[static_cast<std::size_t>(j)];
  }
  return out;
}

Augmentation compose(const AddCategory& cat, const LatticeModule& target, const Augmentation& e, const ModMorphism& m) {
  if (!(m.target == e.source)) throw Error("compose: augmentation and morphism are not composable");
  Augmentation out{m.source, {}};
  for (int k = 0; k < m.source.size(); ++k) {
    const int s = m.source.summands[static_cast<std::size_t>(k)];
    IntVector v = IntVector::Zero(target.rank(s));
    for (int i = 0; i < m.target.size(); ++i)
      if (!m.entry(i, k).isZero())
        v += target.act(cat, s, m.target.summands[static_cast<std::size_t>(i)], m.entry(i, k)) * e.images[static_cast<std::size_t>(i)];
    out.images.push_back(std::move(v));
  }
  return out;
}

AbelianGroup evaluate(const AddCategory& cat, const PresentedModule& m, int a) {
  return cokernel(evaluate(cat, m.presentation, a));
}

PresentedModule free_presentation(const AddCategory& cat, const FreeModule& f) {
  return {ModMorphism::zero(cat, FreeModule{}, f)};
}

bool is_chain_complex(const AddCategory& cat, const ChainComplex& c) {
  for (std::size_t n = 1; n < c.differentials.size(); ++n)
    if (!is_zero(compose(cat, c.differentials[n - 1], c.differentials[n]))) return false;
  if (c.augmentation && !c.differentials.empty()) {
    Augmentation z = compose(cat, *c.augmentation_target, *c.augmentation, c.differentials[0]);
    for (const IntVector& v : z.images)
      if (!v.isZero()) return false;
  }
  return true;
}

AbelianGroup homology(const AddCategory& cat, const ChainComplex& c, int n, int a) {
  const bool augmented = c.augmentation.has_value();
  if (n < -1 || (n == -1 && !augmented) || n > c.length()) throw Error("homology: degree out of range");
  if (n == -1) return cokernel(evaluate(cat, *c.augmentation_target, *c.augmentation, a));
  const int dim = evaluate_rank(cat, c.modules[static_cast<std::size_t>(n)], a);
  IntMatrix outgoing(0, dim);
  if (n > 0)
    outgoing = evaluate(cat, c.differentials[static_cast<std::size_t>(n - 1)], a);
  else if (augmented)
    outgoing = evaluate(cat, *c.augmentation_target, *c.augmentation, a);
  IntMatrix incoming(dim, 0);
  if (n < c.length()) incoming = evaluate(cat, c.differentials[static_cast<std::size_t>(n)], a);
  return subquotient(dim, outgoing, incoming);
}

bool is_exact_at(const AddCategory& cat, const ChainComplex& c, int n, int a) { return homology(cat, c, n, a).is_zero(); }

bool is_exact(const AddCategory& cat, const ChainComplex& c, int top) {
  const int lo = c.augmentation ? -1 : 1;
  for (int n = lo; n <= top; ++n)
    for (int a = 0; a < cat.object_count(); ++a)
      if (!is_exact_at(cat, c, n, a)) return false;
  return true;
}

}  // namespace mackey
