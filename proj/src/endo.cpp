#include "rigdim/endo.hpp"

#include <algorithm>
#include <set>

#include "rigdim/errors.hpp"

namespace rigdim {

namespace {

/// Raw coordinates of End(X_1 + ... + X_n): block (i, j) holds the hom basis
/// of Hom(X_i, X_j), blocks laid out row-major.
class RawEndo {
 public:
  explicit RawEndo(const std::vector<Module>& summands) : xs_(summands), n_(summands.size()) {
    if (xs_.empty()) throw Error("endomorphism algebra of the zero module");
    for (const auto& x : xs_) require_same_algebra(xs_.front(), x);
    field_ = xs_.front().field();
    offset_.assign(n_ * n_ + 1, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        homs_.push_back(hom_basis(xs_[i], xs_[j]));
        offset_[i * n_ + j + 1] = offset_[i * n_ + j] + homs_.back().dim();
      }
    dim_ = offset_.back();
    const auto p = field_.characteristic();
    if (p != 0 && p <= dim_)
      throw UnsupportedCharacteristic("characteristic " + std::to_string(p) + " does not exceed dim End = " +
                                      std::to_string(dim_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::size_t b = i * n_ + j;
        for (std::size_t l = 0; l < homs_[b].dim(); ++l) owner_.push_back({i, j, l});
        coords_.push_back(make_coordinator(b));
      }
    table_.resize(dim_ * dim_);
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b) table_[a * dim_ + b] = raw_product(a, b);
  }

  std::size_t n() const { return n_; }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  std::size_t block_offset(std::size_t i, std::size_t j) const { return offset_[i * n_ + j]; }
  std::size_t block_dim(std::size_t i, std::size_t j) const { return homs_[i * n_ + j].dim(); }
  const HomSpace& hom(std::size_t i, std::size_t j) const { return homs_[i * n_ + j]; }
  const SparseVector& product(std::size_t a, std::size_t b) const { return table_[a * dim_ + b]; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(dim_);
    for (std::size_t a = 0; a < dim_; ++a) {
      if (u[a] == 0) continue;
      for (std::size_t b = 0; b < dim_; ++b) {
        if (v[b] == 0) continue;
        Scalar c = field_.mul(u[a], v[b]);
        for (const auto& [idx, k] : product(a, b)) out[idx] = field_.add(out[idx], field_.mul(c, k));
      }
    }
    return out;
  }

  /// Raw coordinates of a map X_i -> X_j.
  std::vector<Scalar> coordinates(std::size_t i, std::size_t j, const ModuleMap& f) const {
    const std::size_t b = i * n_ + j;
    std::vector<Scalar> out(dim_);
    if (homs_[b].dim() == 0) return out;
    auto flat = flatten(f);
    const Coordinator& c = coords_[b];
    Matrix v(field_, c.rows.size(), 1);
    for (std::size_t r = 0; r < c.rows.size(); ++r) v.set_raw(r, 0, flat[c.rows[r]]);
    Matrix x = c.inverse * v;
    for (std::size_t l = 0; l < x.rows(); ++l) out[offset_[b] + l] = x.at(l, 0);
    return out;
  }

  /// Trace-form radical of block (i, j), as raw column vectors.
  Matrix radical_block(std::size_t i, std::size_t j) const {
    ensure_traces();
    const std::size_t dij = block_dim(i, j), dji = block_dim(j, i);
    const std::size_t oij = block_offset(i, j), oji = block_offset(j, i);
    Matrix t(field_, dji, dij);  // transpose of T restricted to the blocks
    for (std::size_t a = 0; a < dij; ++a)
      for (std::size_t b = 0; b < dji; ++b) {
        Scalar s = 0;
        for (const auto& [c, k] : product(oij + a, oji + b)) s = field_.add(s, field_.mul(k, traces_[c]));
        t.set_raw(b, a, s);
      }
    Matrix ker = kernel(t);
    Matrix out(field_, dim_, ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c)
      for (std::size_t r = 0; r < dij; ++r) out.set_raw(oij + r, c, ker.at(r, c));
    return out;
  }

 private:
  struct Owner {
    std::size_t i, j, local;
  };
  struct Coordinator {
    std::vector<std::size_t> rows;
    Matrix inverse;
  };

  Coordinator make_coordinator(std::size_t b) const {
    const std::size_t i = b / n_, j = b % n_;
    Coordinator c;
    if (homs_[b].dim() == 0) return c;
    Matrix m = hom_matrix(homs_[b], xs_[i], xs_[j]);
    c.rows = reduce(m.transpose()).pivots;
    c.inverse = *inverse(m.select_rows(c.rows));
    return c;
  }

  SparseVector raw_product(std::size_t a, std::size_t b) const {
    const Owner &oa = owner_[a], &ob = owner_[b];
    if (oa.j != ob.i) return {};
    ModuleMap g = compose(homs_[oa.i * n_ + oa.j].basis[oa.local], homs_[ob.i * n_ + ob.j].basis[ob.local]);
    auto v = coordinates(oa.i, ob.j, g);
    SparseVector out;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) out.push_back({c, v[c]});
    return out;
  }

  void ensure_traces() const {
    if (!traces_.empty() || dim_ == 0) return;
    traces_.assign(dim_, Scalar(0));
    for (std::size_t c = 0; c < dim_; ++c)
      for (std::size_t x = 0; x < dim_; ++x)
        for (const auto& [idx, k] : product(c, x))
          if (idx == x) traces_[c] = field_.add(traces_[c], k);
  }

  std::vector<Module> xs_;
  std::size_t n_;
  Field field_ = Field::rational();
  std::vector<HomSpace> homs_;
  std::vector<std::size_t> offset_;
  std::size_t dim_ = 0;
  std::vector<Owner> owner_;
  std::vector<Coordinator> coords_;
  std::vector<SparseVector> table_;
  mutable std::vector<Scalar> traces_;
};

Matrix append_column(const Matrix& m, const std::vector<Scalar>& v) {
  Matrix col(m.field(), v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) col.set_raw(r, 0, v[r]);
  return hstack(m, col);
}

bool independent_of(const Matrix& span, const std::vector<Scalar>& v) {
  Matrix col(span.field(), v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) col.set_raw(r, 0, v[r]);
  return !in_column_space(span, col);
}

std::vector<std::string> vertex_names(const std::vector<Module>& xs) {
  std::vector<std::string> names;
  std::set<std::string> used;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::string s = xs[i].name().empty() ? "X" + std::to_string(i + 1) : xs[i].name();
    while (used.count(s)) s += "'";
    used.insert(s);
    names.push_back(s);
  }
  return names;
}

}  // namespace

EndoAlgebra endo_algebra(const std::vector<Module>& summands) {
  RawEndo raw(summands);
  const std::size_t n = raw.n(), dim = raw.dim();
  const Field& f = raw.field();

  std::vector<Matrix> rad(n * n);
  std::size_t rad_dim = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rad[i * n + j] = raw.radical_block(i, j);
      const std::size_t r = rad[i * n + j].cols(), d = raw.block_dim(i, j);
      rad_dim += r;
      if (i == j && d - r != 1)
        throw SplitnessError("End(" + summands[i].name() + ")/rad has dimension " + std::to_string(d - r));
      if (i != j && r != d)
        throw NonBasicInput("summands '" + summands[i].name() + "' and '" + summands[j].name() +
                            "' are isomorphic");
    }

  // Radical powers, block by block.
  std::vector<std::vector<Matrix>> powers{rad};
  for (;;) {
    const auto& prev = powers.back();
    std::vector<Matrix> next(n * n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        Matrix acc(f, dim, 0);
        for (std::size_t j = 0; j < n; ++j) {
          const Matrix &x = prev[i * n + j], &y = rad[j * n + l];
          for (std::size_t a = 0; a < x.cols(); ++a)
            for (std::size_t b = 0; b < y.cols(); ++b) acc = append_column(acc, raw.multiply(x.column(a), y.column(b)));
        }
        next[i * n + l] = column_basis(acc);
        nonzero = nonzero || next[i * n + l].cols() > 0;
      }
    powers.push_back(std::move(next));
    if (!nonzero) break;
    if (powers.size() > dim + 1) throw Error("radical is not nilpotent");
  }
  auto power = [&](std::size_t k, std::size_t i, std::size_t j) -> const Matrix& {
    return powers[std::min(k, powers.size()) - 1][i * n + j];
  };

  struct Element {
    std::vector<Scalar> raw;
    std::size_t source, target, degree;
    Path path;
  };
  std::vector<Element> elems;
  for (std::size_t i = 0; i < n; ++i)
    elems.push_back({raw.coordinates(i, i, identity_map(summands[i])), i, i, 0, {}});

  Quiver quiver;
  quiver.vertices = vertex_names(summands);
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& r1 = rad[i * n + j];
      Matrix span = power(2, i, j);
      for (std::size_t c = 0; c < r1.cols(); ++c) {
        auto v = r1.column(c);
        if (!independent_of(span, v)) continue;
        span = append_column(span, v);
        const std::size_t a = quiver.arrows.size();
        quiver.arrows.push_back({"f" + std::to_string(a + 1), i, j});
        layer.push_back(elems.size());
        elems.push_back({v, i, j, 1, {a}});
      }
    }
  std::vector<std::size_t> arrow_elements = layer;

  for (std::size_t k = 2; !layer.empty(); ++k) {
    std::vector<std::size_t> next;
    std::vector<Matrix> spans(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) spans[i * n + l] = power(k + 1, i, l);
    for (std::size_t w : layer)
      for (std::size_t a = 0; a < quiver.arrows.size(); ++a) {
        const Arrow& ar = quiver.arrows[a];
        if (ar.source != elems[w].target) continue;
        auto v = raw.multiply(elems[w].raw, elems[arrow_elements[a]].raw);
        Matrix& span = spans[elems[w].source * n + ar.target];
        if (!independent_of(span, v)) continue;
        span = append_column(span, v);
        Path p = elems[w].path;
        p.push_back(a);
        next.push_back(elems.size());
        elems.push_back({v, elems[w].source, ar.target, k, p});
      }
    layer = std::move(next);
  }
  if (elems.size() != dim) throw Error("monomial basis of End(M) is incomplete");

  Matrix q(f, dim, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) q.set_raw(r, c, elems[c].raw[r]);
  auto qinv = inverse(q);
  if (!qinv) throw Error("monomial basis of End(M) is dependent");

  Algebra::Data data;
  data.field = f;
  data.quiver = quiver;
  for (const auto& e : elems) data.basis.push_back({e.source, e.target, e.degree, e.path});
  for (std::size_t i = 0; i < n; ++i) data.idempotents.push_back(i);
  data.arrow_elements = arrow_elements;
  data.products.resize(dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      if (elems[a].target != elems[b].source) continue;
      auto v = raw.multiply(elems[a].raw, elems[b].raw);
      Matrix col(f, dim, 1);
      for (std::size_t r = 0; r < dim; ++r) col.set_raw(r, 0, v[r]);
      Matrix x = *qinv * col;
      for (std::size_t r = 0; r < dim; ++r)
        if (x.at(r, 0) != 0) data.products[a * dim + b].push_back({r, x.at(r, 0)});
    }

  EndoAlgebra e;
  e.summands = summands;
  e.algebra = make_algebra(std::move(data));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.block_dims.push_back(raw.block_dim(i, j));
  e.radical_dim = rad_dim;
  return e;
}

bool is_indecomposable(const Module& m) {
  if (m.is_zero()) return false;
  RawEndo raw({m});
  return raw.dim() - raw.radical_block(0, 0).cols() == 1;
}

bool is_generator(const std::vector<Module>& summands) {
  if (summands.empty()) return false;
  const auto& alg = summands.front().algebra();
  std::vector<bool> seen(alg->num_vertices(), false);
  for (const auto& x : summands)
    if (auto v = projective_vertex(x)) seen[*v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_generator_cogenerator(const std::vector<Module>& summands) {
  if (!is_generator(summands)) return false;
  const auto& alg = summands.front().algebra();
  std::vector<bool> seen(alg->num_vertices(), false);
  for (const auto& x : summands)
    if (auto v = injective_vertex(x)) seen[*v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

namespace {

struct Generator {
  std::size_t source;  // summand index
  ModuleMap map;
};

/// Drops every generator that factors through the remaining ones.
std::vector<Generator> minimize(std::vector<Generator> gens, const std::vector<std::vector<HomSpace>>& homs,
                                const Module& target) {
  std::vector<bool> keep(gens.size(), true);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Matrix span(target.field(), hom_vector_length(gens[i].map.source, target), 0);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j == i || !keep[j]) continue;
      for (const auto& phi : homs[gens[i].source][gens[j].source].basis)
        span = append_column(span, flatten(compose(phi, gens[j].map)));
    }
    if (!independent_of(span, flatten(gens[i].map))) keep[i] = false;
  }
  std::vector<Generator> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (keep[i]) out.push_back(std::move(gens[i]));
  return out;
}

ValueWithStatus simple_pd(std::size_t x, const std::vector<Module>& xs, const std::vector<std::vector<HomSpace>>& homs,
                          const Options& opt) {
  std::vector<Generator> gens;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k == x) continue;
    for (const auto& h : homs[k][x].basis) gens.push_back({k, h});
  }
  {
    RawEndo end_x({xs[x]});
    Matrix r = end_x.radical_block(0, 0);
    for (std::size_t c = 0; c < r.cols(); ++c) {
      ModuleMap h = zero_map(xs[x], xs[x]);
      for (std::size_t l = 0; l < r.rows(); ++l)
        if (r.at(l, c) != 0) h = add(h, scale(homs[x][x].basis[l], r.at(l, c)));
      gens.push_back({x, h});
    }
  }
  Module target = xs[x];
  std::vector<Module> kernels;
  for (std::size_t t = 1;; ++t) {
    gens = minimize(std::move(gens), homs, target);
    if (gens.empty()) return ValueWithStatus::exact(t - 1);
    std::vector<Module> parts;
    std::vector<ModuleMap> maps;
    for (const auto& g : gens) {
      parts.push_back(xs[g.source]);
      maps.push_back(g.map);
    }
    DirectSum ds = direct_sum(parts);
    for (auto& m : maps) m.source = ds.sum;
    Inclusion k = kernel(copairing(ds, maps, target));
    if (k.sub.is_zero()) return ValueWithStatus::exact(t);
    for (const auto& prev : kernels)
      if (prev.dims() == k.sub.dims() &&
          is_isomorphic(prev, k.sub, opt.seed, opt.iso_trials).status == IsoStatus::isomorphic)
        return ValueWithStatus::infinite();
    if (t >= opt.cutoff) return ValueWithStatus::at_least(opt.cutoff);
    kernels.push_back(k.sub);
    target = k.sub;
    gens.clear();
    for (std::size_t s = 0; s < xs.size(); ++s)
      for (const auto& h : hom_basis(xs[s], target).basis) gens.push_back({s, h});
  }
}

}  // namespace

ValueWithStatus endo_gldim(const std::vector<Module>& summands, const Options& opt) {
  if (!is_generator(summands)) throw NotGenerator("M must contain every indecomposable projective");
  const std::size_t n = summands.size();
  std::vector<std::vector<HomSpace>> homs(n, std::vector<HomSpace>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) homs[i][j] = hom_basis(summands[i], summands[j]);
  std::vector<ValueWithStatus> pds;
  for (std::size_t x = 0; x < n; ++x) pds.push_back(simple_pd(x, summands, homs, opt));
  return combine_max(pds);
}

ValueWithStatus endo_gldim_direct(const std::vector<Module>& summands, const Options& opt) {
  return global_dimension(endo_algebra(summands).algebra, opt);
}

ValueWithStatus endo_domdim(const std::vector<Module>& summands, const Options& opt) {
  return dominant_dimension(endo_algebra(summands).algebra, opt);
}

MuellerResult mueller_check(const std::vector<Module>& summands, const Options& opt) {
  if (!is_generator_cogenerator(summands))
    throw NotGeneratorCogenerator("M must contain every indecomposable projective and injective");
  MuellerResult r;
  r.evd_plus_2 = rigidity_degree(direct_sum(summands).sum, opt).plus(2);
  r.domdim_direct = endo_domdim(summands, opt);
  r.agree = (r.evd_plus_2.is_exact() && r.domdim_direct.is_exact() && r.evd_plus_2.value == r.domdim_direct.value) ||
            (r.evd_plus_2.is_infinite() && r.domdim_direct.is_infinite());
  return r;
}

}  // namespace rigdim
