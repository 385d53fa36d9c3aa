#include "mackey/resolution.hpp"

#include "mackey/cancel.hpp"
#include "mackey/smith.hpp"

#include <map>

namespace mackey {

namespace {

// Z-span of a growing set of vectors, kept in Hermite form.
class LatticeSpan {
 public:
  explicit LatticeSpan(Eigen::Index dim) : rows_(0, dim) {}

  void add_columns(const IntMatrix& cols) {
    if (cols.cols() == 0) return;
    BigMatrix stacked(rows_.rows() + cols.cols(), rows_.cols());
    stacked.topRows(rows_.rows()) = rows_;
    stacked.bottomRows(cols.cols()) = to_big(cols.transpose());
    HermiteForm h = hermite_normal_form(stacked);
    rows_ = h.H.topRows(h.rank);
    pivots_.clear();
    for (Eigen::Index r = 0; r < rows_.rows(); ++r) {
      Eigen::Index c = 0;
      while (rows_(r, c) == 0) ++c;
      pivots_.push_back(c);
    }
  }

  bool contains(BigVector v) const {
    for (Eigen::Index r = 0; r < rows_.rows(); ++r) {
      const Eigen::Index c = pivots_[static_cast<std::size_t>(r)];
      for (Eigen::Index j = r == 0 ? 0 : pivots_[static_cast<std::size_t>(r - 1)] + 1; j < c; ++j)
        if (v(j) != 0) return false;
      if (v(c) == 0) continue;
      if (v(c) % rows_(r, c) != 0) return false;
      Integer q = v(c) / rows_(r, c);
      v -= q * rows_.row(r).transpose();
    }
    return v.isZero();
  }

 private:
  BigMatrix rows_;
  std::vector<Eigen::Index> pivots_;
};

using SpanFn = std::function<IntMatrix(int a, const ModuleElement& gen)>;

std::vector<ModuleElement> cover_lattices(int objects, const std::function<BigMatrix(int)>& lattice,
                                          const std::function<int(int)>& dim, const SpanFn& span) {
  std::vector<ModuleElement> gens;
  for (int a = objects - 1; a >= 0; --a) {
    BigMatrix k = lattice(a);
    if (k.cols() == 0) continue;
    LatticeSpan s(dim(a));
    for (const ModuleElement& g : gens) s.add_columns(span(a, g));
    for (Eigen::Index r = k.cols() - 1; r >= 0; --r) {
      BigVector v = k.col(r);
      if (s.contains(v)) continue;
      ModuleElement g{a, to_int64(BigMatrix(v)).col(0)};
      s.add_columns(span(a, g));
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

ModMorphism single_cover(const AddCategory& cat, const FreeModule& f, const ModuleElement& g) {
  return free_cover(cat, f, {g});
}

}  // namespace

ModMorphism free_cover(const AddCategory& cat, const FreeModule& f, const std::vector<ModuleElement>& gens) {
  FreeModule source;
  for (const ModuleElement& g : gens) source.summands.push_back(g.object);
  ModMorphism m = ModMorphism::zero(cat, source, f);
  for (int k = 0; k < source.size(); ++k) {
    const ModuleElement& g = gens[static_cast<std::size_t>(k)];
    const auto offsets = summand_offsets(cat, f, g.object);
    if (g.vector.size() != offsets.back()) throw Error("free_cover: generator has wrong length");
    for (int i = 0; i < f.size(); ++i)
      m.entry(i, k) = g.vector.segment(offsets[static_cast<std::size_t>(i)], cat.hom_rank(g.object, f.summands[static_cast<std::size_t>(i)]));
  }
  return m;
}

std::vector<ModuleElement> kernel_generators(const AddCategory& cat, const ModMorphism& m) {
  return cover_lattices(
      cat.object_count(), [&](int a) { return kernel_basis(evaluate(cat, m, a)); },
      [&](int a) { return evaluate_rank(cat, m.source, a); },
      [&](int a, const ModuleElement& g) { return evaluate(cat, single_cover(cat, m.source, g), a); });
}

std::vector<ModuleElement> kernel_generators(const AddCategory& cat, const LatticeModule& target, const Augmentation& e) {
  return cover_lattices(
      cat.object_count(), [&](int a) { return kernel_basis(evaluate(cat, target, e, a)); },
      [&](int a) { return evaluate_rank(cat, e.source, a); },
      [&](int a, const ModuleElement& g) { return evaluate(cat, single_cover(cat, e.source, g), a); });
}

Augmentation free_cover(const AddCategory& cat, const LatticeModule& n) {
  if (n.variance != Variance::contravariant) throw Error("free_cover: module must be contravariant");
  auto gens = cover_lattices(
      cat.object_count(), [&](int a) { return BigMatrix(BigMatrix::Identity(n.rank(a), n.rank(a))); },
      [&](int a) { return n.rank(a); },
      [&](int a, const ModuleElement& g) {
        IntMatrix out(n.rank(a), cat.hom_rank(a, g.object));
        for (int f = 0; f < cat.hom_rank(a, g.object); ++f) out.col(f) = n.act(a, g.object, f) * g.vector;
        return out;
      });
  Augmentation e;
  for (const ModuleElement& g : gens) {
    e.source.summands.push_back(g.object);
    e.images.push_back(g.vector);
  }
  return e;
}

PresentedModule present(const AddCategory& cat, const LatticeModule& n) {
  Augmentation e = free_cover(cat, n);
  return {free_cover(cat, e.source, kernel_generators(cat, n, e))};
}

namespace {

bool injective_everywhere(const AddCategory& cat, const ModMorphism& d) {
  for (int a = 0; a < cat.object_count(); ++a) {
    IntMatrix m = evaluate(cat, d, a);
    if (m.cols() > 0 && integer_rank(m) != m.cols()) return false;
  }
  return true;
}

}  // namespace

void extend_resolution(const AddCategory& cat, ChainComplex& c, int length) {
  while (!c.complete && c.length() < length) {
    const int top = c.length();
    std::vector<ModuleElement> gens;
    if (top == 0) {
      if (!c.augmentation) throw Error("extend_resolution: cannot extend an unaugmented complex from degree 0");
      gens = kernel_generators(cat, *c.augmentation_target, *c.augmentation);
    } else {
      gens = kernel_generators(cat, c.differentials.back());
    }
    if (gens.empty()) {
      c.complete = true;
      break;
    }
    ModMorphism d = free_cover(cat, c.modules.back(), gens);
    c.modules.push_back(d.source);
    c.differentials.push_back(std::move(d));
  }
  if (!c.complete && c.length() >= 1 && injective_everywhere(cat, c.differentials.back())) c.complete = true;
}

ChainComplex resolve(const AddCategory& cat, const PresentedModule& m, int length) {
  ChainComplex c;
  c.modules.push_back(m.presentation.target);
  if (m.presentation.source.size() == 0) {
    c.complete = true;
    return c;
  }
  if (length == 0) return c;
  c.modules.push_back(m.presentation.source);
  c.differentials.push_back(m.presentation);
  extend_resolution(cat, c, length);
  return c;
}

ChainComplex resolve(const AddCategory& cat, const LatticeModule& n, int length) {
  ChainComplex c;
  Augmentation e = free_cover(cat, n);
  c.modules.push_back(e.source);
  c.augmentation_target = n;
  c.augmentation = std::move(e);
  extend_resolution(cat, c, length);
  return c;
}

IntMatrix hom_coboundary(const AddCategory& cat, const ModMorphism& d, const LatticeModule& n) {
  std::vector<int> row_off{0}, col_off{0};
  for (int c : d.source.summands) row_off.push_back(row_off.back() + n.rank(c));
  for (int c : d.target.summands) col_off.push_back(col_off.back() + n.rank(c));
  IntMatrix out = IntMatrix::Zero(row_off.back(), col_off.back());
  for (int i = 0; i < d.target.size(); ++i)
    for (int j = 0; j < d.source.size(); ++j) {
      if (d.entry(i, j).isZero()) continue;
      const int cj = d.source.summands[static_cast<std::size_t>(j)];
      const int di = d.target.summands[static_cast<std::size_t>(i)];
      out.block(row_off[static_cast<std::size_t>(j)], col_off[static_cast<std::size_t>(i)], n.rank(cj), n.rank(di)) =
          n.act(cat, cj, di, d.entry(i, j));
    }
  return out;
}

AbelianGroup ext(const AddCategory& cat, const ChainComplex& resolution, const LatticeModule& n, int k) {
  if (n.variance != Variance::contravariant) throw Error("ext: coefficients must be contravariant");
  if (k < 0) throw Error("ext: negative degree");
  if (k > resolution.length()) {
    if (resolution.complete) return {};
    throw Error("ext: resolution is too short for degree " + std::to_string(k));
  }
  if (k + 1 > resolution.length() && !resolution.complete)
    throw Error("ext: resolution is too short for degree " + std::to_string(k));
  auto hom_dim = [&](const FreeModule& f) {
    int r = 0;
    for (int c : f.summands) r += n.rank(c);
    return r;
  };
  const int dim = hom_dim(resolution.modules[static_cast<std::size_t>(k)]);
  IntMatrix outgoing(0, dim);
  if (k + 1 <= resolution.length()) outgoing = hom_coboundary(cat, resolution.differentials[static_cast<std::size_t>(k)], n);
  IntMatrix incoming(dim, 0);
  if (k >= 1) incoming = hom_coboundary(cat, resolution.differentials[static_cast<std::size_t>(k - 1)], n);
  return subquotient(dim, outgoing, incoming);
}

AbelianGroup hom_group(const AddCategory& cat, const PresentedModule& m, const LatticeModule& n) {
  IntMatrix delta = hom_coboundary(cat, m.presentation, n);
  return subquotient(delta.cols(), delta, IntMatrix(delta.cols(), 0));
}

AbelianGroup hom_by_definition(const AddCategory& cat, const LatticeModule& n, const LatticeModule& m) {
  if (n.variance != Variance::contravariant || m.variance != Variance::contravariant)
    throw Error("hom_by_definition: modules must be contravariant");
  const int objects = cat.object_count();
  std::vector<int> offset{0};
  for (int a = 0; a < objects; ++a) offset.push_back(offset.back() + m.rank(a) * n.rank(a));
  auto var = [&](int a, int r, int c) { return offset[static_cast<std::size_t>(a)] + r + c * m.rank(a); };
  std::vector<IntVector> rows;
  for (int a = 0; a < objects; ++a)
    for (int b = 0; b < objects; ++b)
      for (int f = 0; f < cat.hom_rank(a, b); ++f) {
        const IntMatrix& mf = m.act(a, b, f);  // M(b) -> M(a)
        const IntMatrix& nf = n.act(a, b, f);  // N(b) -> N(a)
        for (int r = 0; r < m.rank(a); ++r)
          for (int c = 0; c < n.rank(b); ++c) {
            IntVector row = IntVector::Zero(offset.back());
            for (int x = 0; x < m.rank(b); ++x)
              if (mf(r, x) != 0) row(var(b, x, c)) += mf(r, x);
            for (int y = 0; y < n.rank(a); ++y)
              if (nf(y, c) != 0) row(var(a, r, y)) -= nf(y, c);
            if (!row.isZero()) rows.push_back(std::move(row));
          }
      }
  IntMatrix system(static_cast<Eigen::Index>(rows.size()), offset.back());
  for (std::size_t i = 0; i < rows.size(); ++i) system.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  AbelianGroup g;
  g.free_rank = offset.back() - (system.rows() == 0 ? 0 : integer_rank(system));
  return g;
}

std::optional<ModMorphism> split_surjection(const AddCategory& cat, const ModMorphism& e, const ModMorphism& p) {
  if (!(e.target == p.target)) throw Error("split_surjection: e and p must share their target");
  const FreeModule& f = e.source;
  const FreeModule& p0 = p.target;
  const FreeModule& p1 = p.source;
  for (int a = 0; a < cat.object_count(); ++a)
    if (!cokernel(evaluate(cat, hstack(e, p), a)).is_zero()) throw Error("split_surjection: map is not surjective");

  auto obj = [](const FreeModule& m, int i) { return m.summands[static_cast<std::size_t>(i)]; };
  // unknown offsets
  std::map<std::pair<int, int>, int> s_off, t_off;
  int unknowns = 0;
  for (int i = 0; i < f.size(); ++i)
    for (int j = 0; j < p0.size(); ++j) {
      s_off[{i, j}] = unknowns;
      unknowns += cat.hom_rank(obj(p0, j), obj(f, i));
    }
  for (int k = 0; k < p1.size(); ++k)
    for (int j = 0; j < p0.size(); ++j) {
      t_off[{k, j}] = unknowns;
      unknowns += cat.hom_rank(obj(p0, j), obj(p1, k));
    }
  std::map<std::pair<int, int>, int> a_off, b_off;
  int equations = 0;
  for (int i = 0; i < f.size(); ++i)
    for (int l = 0; l < p1.size(); ++l) {
      a_off[{i, l}] = equations;
      equations += cat.hom_rank(obj(p1, l), obj(f, i));
    }
  for (int m = 0; m < p0.size(); ++m)
    for (int j = 0; j < p0.size(); ++j) {
      b_off[{m, j}] = equations;
      equations += cat.hom_rank(obj(p0, j), obj(p0, m));
    }

  IntMatrix system = IntMatrix::Zero(equations, unknowns);
  BigMatrix rhs = BigMatrix::Zero(equations, 1);
  // s ∘ p = 0
  for (int i = 0; i < f.size(); ++i)
    for (int l = 0; l < p1.size(); ++l)
      for (int j = 0; j < p0.size(); ++j) {
        const HomVector& pj = p.entry(j, l);
        for (int q = 0; q < pj.size(); ++q) {
          if (pj(q) == 0) continue;
          for (int u = 0; u < cat.hom_rank(obj(p0, j), obj(f, i)); ++u)
            for (const HomTerm& t : cat.compose(obj(p1, l), obj(p0, j), obj(f, i), q, u))
              system(a_off[{i, l}] + t.index, s_off[{i, j}] + u) += pj(q) * t.coeff;
        }
      }
  // e ∘ s + p ∘ t = id
  for (int m = 0; m < p0.size(); ++m)
    for (int j = 0; j < p0.size(); ++j) {
      const int row0 = b_off[{m, j}];
      for (int i = 0; i < f.size(); ++i) {
        const HomVector& em = e.entry(m, i);
        for (int q = 0; q < em.size(); ++q) {
          if (em(q) == 0) continue;
          for (int u = 0; u < cat.hom_rank(obj(p0, j), obj(f, i)); ++u)
            for (const HomTerm& t : cat.compose(obj(p0, j), obj(f, i), obj(p0, m), u, q))
              system(row0 + t.index, s_off[{i, j}] + u) += em(q) * t.coeff;
        }
      }
      for (int k = 0; k < p1.size(); ++k) {
        const HomVector& pm = p.entry(m, k);
        for (int q = 0; q < pm.size(); ++q) {
          if (pm(q) == 0) continue;
          for (int u = 0; u < cat.hom_rank(obj(p0, j), obj(p1, k)); ++u)
            for (const HomTerm& t : cat.compose(obj(p0, j), obj(p1, k), obj(p0, m), u, q))
              system(row0 + t.index, t_off[{k, j}] + u) += pm(q) * t.coeff;
        }
      }
      if (m == j) rhs(row0 + cat.identity(obj(p0, j)), 0) = 1;
    }

  auto solution = solve_integer(to_big(system), rhs);
  if (!solution) return std::nullopt;
  ModMorphism s = ModMorphism::zero(cat, p0, f);
  for (int i = 0; i < f.size(); ++i)
    for (int j = 0; j < p0.size(); ++j)
      for (int u = 0; u < s.entry(i, j).size(); ++u) s.entry(i, j)(u) = to_int64((*solution)(s_off[{i, j}] + u, 0));
  return s;
}

std::optional<ModMorphism> left_inverse(const AddCategory& cat, const ModMorphism& s) {
  const FreeModule& a = s.source;
  const FreeModule& b = s.target;
  auto obj = [](const FreeModule& m, int i) { return m.summands[static_cast<std::size_t>(i)]; };
  ModMorphism r = ModMorphism::zero(cat, b, a);
  std::map<int, SmithForm> forms;
  for (int i = 0; i < a.size(); ++i) {
    throw_if_cancelled();
    const int x = obj(a, i);
    std::vector<int> col_off{0}, row_off{0};
    for (int j = 0; j < b.size(); ++j) col_off.push_back(col_off.back() + cat.hom_rank(obj(b, j), x));
    for (int k = 0; k < a.size(); ++k) row_off.push_back(row_off.back() + cat.hom_rank(obj(a, k), x));
    auto it = forms.find(x);
    if (it == forms.end()) {
      IntMatrix system = IntMatrix::Zero(row_off.back(), col_off.back());
      for (int k = 0; k < a.size(); ++k)
        for (int j = 0; j < b.size(); ++j) {
          const HomVector& sjk = s.entry(j, k);
          for (int q = 0; q < sjk.size(); ++q) {
            if (sjk(q) == 0) continue;
            for (int u = 0; u < cat.hom_rank(obj(b, j), x); ++u)
              for (const HomTerm& t : cat.compose(obj(a, k), obj(b, j), x, q, u))
                system(row_off[static_cast<std::size_t>(k)] + t.index, col_off[static_cast<std::size_t>(j)] + u) +=
                    sjk(q) * t.coeff;
          }
        }
      it = forms.emplace(x, smith_normal_form(system, Transforms::both)).first;
    }
    BigMatrix rhs = BigMatrix::Zero(row_off.back(), 1);
    rhs(row_off[static_cast<std::size_t>(i)] + cat.identity(x), 0) = 1;
    auto sol = solve_integer(it->second, rhs);
    if (!sol) return std::nullopt;
    for (int j = 0; j < b.size(); ++j)
      for (int u = 0; u < cat.hom_rank(obj(b, j), x); ++u)
        r.entry(i, j)(u) = to_int64((*sol)(col_off[static_cast<std::size_t>(j)] + u, 0));
  }
  return r;
}

bool verify_section(const AddCategory& cat, const ModMorphism& e, const ModMorphism& p, const ModMorphism& s) {
  if (!is_zero(compose(cat, s, p))) return false;
  ModMorphism es = compose(cat, e, s);
  ModMorphism id = ModMorphism::identity(cat, p.target);
  for (int i = 0; i < id.target.size(); ++i) es.entry(i, i) -= id.entry(i, i);
  for (int a = 0; a < cat.object_count(); ++a) {
    IntMatrix diff = evaluate(cat, es, a);
    if (diff.isZero()) continue;
    IntMatrix im = evaluate(cat, p, a);
    if (im.cols() == 0 || !in_column_lattice(im, diff)) return false;
  }
  return true;
}

IntMatrix tensor_matrix(const AddCategory& cat, const ModMorphism& m, const LatticeModule& l) {
  if (l.variance != Variance::covariant) throw Error("tensor: coefficient module must be covariant");
  std::vector<int> row_off{0}, col_off{0};
  for (int c : m.target.summands) row_off.push_back(row_off.back() + l.rank(c));
  for (int c : m.source.summands) col_off.push_back(col_off.back() + l.rank(c));
  IntMatrix out = IntMatrix::Zero(row_off.back(), col_off.back());
  for (int i = 0; i < m.target.size(); ++i)
    for (int j = 0; j < m.source.size(); ++j) {
      if (m.entry(i, j).isZero()) continue;
      const int cj = m.source.summands[static_cast<std::size_t>(j)];
      const int di = m.target.summands[static_cast<std::size_t>(i)];
      out.block(row_off[static_cast<std::size_t>(i)], col_off[static_cast<std::size_t>(j)], l.rank(di), l.rank(cj)) =
          l.act(cat, cj, di, m.entry(i, j));
    }
  return out;
}

AbelianGroup tensor_over_category(const AddCategory& cat, const PresentedModule& m, const LatticeModule& l) {
  return cokernel(tensor_matrix(cat, m.presentation, l));
}

AbelianGroup tensor_homology(const AddCategory& cat, const ChainComplex& c, const LatticeModule& l, int k) {
  if (k < 0 || k > c.length()) throw Error("tensor_homology: degree out of range");
  int dim = 0;
  for (int x : c.modules[static_cast<std::size_t>(k)].summands) dim += l.rank(x);
  IntMatrix outgoing(0, dim);
  if (k > 0) outgoing = tensor_matrix(cat, c.differentials[static_cast<std::size_t>(k - 1)], l);
  IntMatrix incoming(dim, 0);
  if (k < c.length()) incoming = tensor_matrix(cat, c.differentials[static_cast<std::size_t>(k)], l);
  return subquotient(dim, outgoing, incoming);
}

std::optional<StablyFreeEvidence> stably_free_rank_evidence(const AddCategory& cat, const std::vector<int>& ranks, int c,
                                                            int bound) {
  const int n = cat.object_count();
  BigMatrix r(n, n);
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d) r(a, d) = cat.hom_rank(a, d);
  SmithForm snf = smith_normal_form(r, Transforms::both);
  for (int k = 0; k <= bound; ++k) {
    BigMatrix target(n, 1);
    for (int a = 0; a < n; ++a) target(a, 0) = ranks[static_cast<std::size_t>(a)] + k * cat.hom_rank(a, c);
    auto sol = solve_integer(snf, target);
    if (!sol) continue;
    bool nonnegative = true;
    for (int d = 0; d < n; ++d)
      if ((*sol)(d, 0) < 0) nonnegative = false;
    if (!nonnegative) continue;
    StablyFreeEvidence ev;
    ev.k = k;
    for (int d = 0; d < n; ++d) ev.multiplicities.push_back(to_int64((*sol)(d, 0)));
    return ev;
  }
  return std::nullopt;
}

}  // namespace mackey
