#include "rigdim/module.hpp"

#include <numeric>
#include <random>

#include "rigdim/errors.hpp"

namespace rigdim {

namespace {

void check_shapes(const Algebra& alg, const std::vector<std::size_t>& dims, const std::vector<Matrix>& maps) {
  if (dims.size() != alg.num_vertices()) throw InvalidRepresentation("one dimension per vertex expected");
  if (maps.size() != alg.arrows().size()) throw InvalidRepresentation("one matrix per arrow expected");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& ar = alg.arrows()[a];
    if (maps[a].rows() != dims[ar.target] || maps[a].cols() != dims[ar.source])
      throw InvalidRepresentation("matrix for arrow '" + ar.name + "' has the wrong shape");
    if (!(maps[a].field() == alg.field())) throw InvalidRepresentation("matrix over the wrong field");
  }
}

}  // namespace

Module::Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps, std::string name)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)), name_(std::move(name)) {
  check_shapes(*alg_, dims_, maps_);
  for (const auto& r : alg_->relations()) {
    if (r.terms.empty()) continue;
    const auto& first = r.terms.front().path;
    std::size_t s = alg_->arrows()[first.front()].source, t = alg_->arrows()[first.back()].target;
    Matrix acc(field(), dims_[t], dims_[s]);
    for (const auto& term : r.terms) acc = acc + path_action(term.path, s).scaled(term.coeff);
    if (!acc.is_zero()) throw InvalidRepresentation("relation '" + r.text + "' does not vanish");
  }
}

Module Module::trusted(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps, std::string name) {
  Module m;
  m.alg_ = std::move(alg);
  m.dims_ = std::move(dims);
  m.maps_ = std::move(maps);
  m.name_ = std::move(name);
  check_shapes(*m.alg_, m.dims_, m.maps_);
  return m;
}

Module Module::zero(AlgebraPtr alg) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  std::vector<Matrix> maps(alg->arrows().size(), Matrix(alg->field(), 0, 0));
  return trusted(std::move(alg), dims, maps, "0");
}

std::size_t Module::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Module Module::named(std::string n) const {
  Module m = *this;
  m.name_ = std::move(n);
  return m;
}

Matrix Module::path_action(const Path& p, std::size_t vertex) const {
  if (p.empty()) return Matrix::identity(field(), dims_[vertex]);
  Matrix acc = maps_[p.front()];
  for (std::size_t i = 1; i < p.size(); ++i) acc = maps_[p[i]] * acc;
  return acc;
}

Matrix Module::element_action(std::size_t b) const {
  const auto& e = alg_->basis(b);
  return path_action(e.path, e.source);
}

bool ModuleMap::commutes() const {
  const auto& arrows = source.algebra()->arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& ar = arrows[a];
    if (!(target.map(a) * components[ar.source] == components[ar.target] * source.map(a))) return false;
  }
  return true;
}

bool ModuleMap::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

bool ModuleMap::is_injective() const {
  for (const auto& c : components)
    if (rank(c) != c.cols()) return false;
  return true;
}

bool ModuleMap::is_surjective() const {
  for (const auto& c : components)
    if (rank(c) != c.rows()) return false;
  return true;
}

bool ModuleMap::is_isomorphism() const { return is_injective() && is_surjective(); }

ModuleMap identity_map(const Module& m) {
  ModuleMap f{m, m, {}};
  for (std::size_t v = 0; v < m.dims().size(); ++v) f.components.push_back(Matrix::identity(m.field(), m.dim(v)));
  return f;
}

ModuleMap zero_map(const Module& source, const Module& target) {
  ModuleMap f{source, target, {}};
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    f.components.emplace_back(source.field(), target.dim(v), source.dim(v));
  return f;
}

ModuleMap compose(const ModuleMap& first, const ModuleMap& second) {
  ModuleMap f{first.source, second.target, {}};
  for (std::size_t v = 0; v < first.components.size(); ++v)
    f.components.push_back(second.components[v] * first.components[v]);
  return f;
}

ModuleMap add(const ModuleMap& a, const ModuleMap& b) {
  ModuleMap f{a.source, a.target, {}};
  for (std::size_t v = 0; v < a.components.size(); ++v) f.components.push_back(a.components[v] + b.components[v]);
  return f;
}

ModuleMap scale(const ModuleMap& a, const Scalar& s) {
  ModuleMap f{a.source, a.target, {}};
  for (const auto& c : a.components) f.components.push_back(c.scaled(s));
  return f;
}

void require_same_algebra(const Module& a, const Module& b) {
  if (a.algebra() == b.algebra()) return;
  if (!a.algebra() || !b.algebra() || !a.algebra()->same_structure(*b.algebra()))
    throw AlgebraMismatch("modules over different algebras");
}

std::size_t hom_vector_length(const Module& m, const Module& n) {
  std::size_t len = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) len += m.dim(v) * n.dim(v);
  return len;
}

std::vector<Scalar> flatten(const ModuleMap& f) {
  std::vector<Scalar> out;
  for (const auto& c : f.components)
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) out.push_back(c.at(r, k));
  return out;
}

ModuleMap unflatten(const Module& m, const Module& n, const std::vector<Scalar>& v) {
  ModuleMap f{m, n, {}};
  std::size_t off = 0;
  for (std::size_t u = 0; u < m.dims().size(); ++u) {
    Matrix c(m.field(), n.dim(u), m.dim(u));
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) c.set_raw(r, k, v[off++]);
    f.components.push_back(std::move(c));
  }
  return f;
}

Matrix hom_matrix(const HomSpace& h, const Module& m, const Module& n) {
  const std::size_t len = hom_vector_length(m, n);
  Matrix out(m.field(), len, h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j) {
    auto v = flatten(h.basis[j]);
    for (std::size_t i = 0; i < len; ++i) out.set_raw(i, j, v[i]);
  }
  return out;
}

namespace {

Matrix hom_system(const Module& m, const Module& n) {
  const auto& alg = *m.algebra();
  const Field& f = m.field();
  const std::size_t nv = alg.num_vertices();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  std::size_t rows = 0;
  for (const auto& ar : alg.arrows()) rows += n.dim(ar.target) * m.dim(ar.source);
  Matrix sys(f, rows, offset[nv]);
  std::size_t row = 0;
  for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
    const auto& ar = alg.arrows()[a];
    const std::size_t s = ar.source, t = ar.target;
    const Matrix& na = n.map(a);  // n_t x n_s
    const Matrix& ma = m.map(a);  // m_t x m_s
    for (std::size_t r = 0; r < n.dim(t); ++r)
      for (std::size_t c = 0; c < m.dim(s); ++c, ++row) {
        // (N_a f_s)[r,c] - (f_t M_a)[r,c]
        for (std::size_t k = 0; k < n.dim(s); ++k) {
          const Scalar& x = na.at(r, k);
          if (x == 0) continue;
          std::size_t col = offset[s] + k * m.dim(s) + c;
          sys.set_raw(row, col, f.add(sys.at(row, col), x));
        }
        for (std::size_t k = 0; k < m.dim(t); ++k) {
          const Scalar& x = ma.at(k, c);
          if (x == 0) continue;
          std::size_t col = offset[t] + r * m.dim(t) + k;
          sys.set_raw(row, col, f.sub(sys.at(row, col), x));
        }
      }
  }
  return sys;
}

}  // namespace

HomSpace hom_basis(const Module& m, const Module& n) {
  require_same_algebra(m, n);
  Matrix k = kernel(hom_system(m, n));
  HomSpace h;
  for (std::size_t j = 0; j < k.cols(); ++j) h.basis.push_back(unflatten(m, n, k.column(j)));
  return h;
}

std::size_t hom_dim(const Module& m, const Module& n) {
  require_same_algebra(m, n);
  Matrix sys = hom_system(m, n);
  return sys.cols() - rank(sys);
}

Inclusion submodule(const Module& m, const std::vector<Matrix>& spans) {
  const auto& alg = *m.algebra();
  std::vector<std::size_t> dims;
  for (const auto& s : spans) dims.push_back(s.cols());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
    const auto& ar = alg.arrows()[a];
    auto x = solve(spans[ar.target], m.map(a) * spans[ar.source]);
    if (!x) throw InvalidRepresentation("subspace is not a submodule");
    maps.push_back(std::move(*x));
  }
  Module sub = Module::trusted(m.algebra(), dims, maps);
  return {sub, ModuleMap{sub, m, spans}};
}

Projection quotient_module(const Module& m, const std::vector<Matrix>& spans) {
  const auto& alg = *m.algebra();
  const std::size_t nv = alg.num_vertices();
  std::vector<Matrix> comp(nv), proj(nv);
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    comp[v] = complement_basis(spans[v]);
    Matrix b = hstack(spans[v], comp[v]);
    auto binv = inverse(b);
    if (!binv) throw InvalidRepresentation("quotient: spanning set is not independent");
    proj[v] = binv->block(spans[v].cols(), 0, comp[v].cols(), b.rows());
    dims[v] = comp[v].cols();
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
    const auto& ar = alg.arrows()[a];
    maps.push_back(proj[ar.target] * m.map(a) * comp[ar.source]);
  }
  Module q = Module::trusted(m.algebra(), dims, maps);
  return {q, ModuleMap{m, q, proj}};
}

Inclusion kernel(const ModuleMap& f) {
  std::vector<Matrix> spans;
  for (const auto& c : f.components) spans.push_back(kernel(c));
  return submodule(f.source, spans);
}

std::vector<Matrix> image_spans(const ModuleMap& f) {
  std::vector<Matrix> spans;
  for (const auto& c : f.components) spans.push_back(column_basis(c));
  return spans;
}

Projection cokernel(const ModuleMap& f) { return quotient_module(f.target, image_spans(f)); }

DirectSum direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw Error("direct_sum of no modules");
  const AlgebraPtr& alg = parts.front().algebra();
  for (const auto& p : parts) require_same_algebra(parts.front(), p);
  const std::size_t nv = alg->num_vertices();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg->arrows().size(); ++a) {
    const auto& ar = alg->arrows()[a];
    Matrix m(alg->field(), dims[ar.target], dims[ar.source]);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.map(a));
      r += p.dim(ar.target);
      c += p.dim(ar.source);
    }
    maps.push_back(std::move(m));
  }
  std::string name;
  for (const auto& p : parts) name += (name.empty() ? "" : "+") + p.name();
  DirectSum ds{Module::trusted(alg, dims, maps, name), {}, {}};
  std::vector<std::size_t> off(nv, 0);
  for (const auto& p : parts) {
    ModuleMap inc{p, ds.sum, {}}, pr{ds.sum, p, {}};
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix i(alg->field(), dims[v], p.dim(v));
      Matrix q(alg->field(), p.dim(v), dims[v]);
      for (std::size_t k = 0; k < p.dim(v); ++k) {
        i.set_raw(off[v] + k, k, Scalar(1));
        q.set_raw(k, off[v] + k, Scalar(1));
      }
      inc.components.push_back(std::move(i));
      pr.components.push_back(std::move(q));
      off[v] += p.dim(v);
    }
    ds.inclusions.push_back(std::move(inc));
    ds.projections.push_back(std::move(pr));
  }
  return ds;
}

ModuleMap copairing(const DirectSum& ds, const std::vector<ModuleMap>& maps, const Module& target) {
  ModuleMap f{ds.sum, target, {}};
  const std::size_t nv = ds.sum.dims().size();
  for (std::size_t v = 0; v < nv; ++v) {
    Matrix c(target.field(), target.dim(v), 0);
    for (const auto& m : maps) c = hstack(c, m.components[v]);
    f.components.push_back(std::move(c));
  }
  return f;
}

namespace {

/// Basis indices of P(v) grouped by target vertex.
std::vector<std::vector<std::size_t>> projective_layout(const Algebra& alg, std::size_t v) {
  std::vector<std::vector<std::size_t>> at(alg.num_vertices());
  for (std::size_t b = 0; b < alg.dim(); ++b)
    if (alg.basis(b).source == v) at[alg.basis(b).target].push_back(b);
  return at;
}

}  // namespace

Module projective(const AlgebraPtr& alg, std::size_t v) {
  auto at = projective_layout(*alg, v);
  std::vector<std::size_t> pos(alg->dim(), 0);
  std::vector<std::size_t> dims(alg->num_vertices());
  for (std::size_t u = 0; u < at.size(); ++u) {
    dims[u] = at[u].size();
    for (std::size_t k = 0; k < at[u].size(); ++k) pos[at[u][k]] = k;
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg->arrows().size(); ++a) {
    const auto& ar = alg->arrows()[a];
    const std::size_t el = alg->arrow_element(a);
    Matrix m(alg->field(), dims[ar.target], dims[ar.source]);
    for (std::size_t k = 0; k < at[ar.source].size(); ++k)
      for (const auto& [idx, c] : alg->product(at[ar.source][k], el)) m.set_raw(pos[idx], k, c);
    maps.push_back(std::move(m));
  }
  return Module::trusted(alg, dims, maps, "P" + alg->vertex_name(v));
}

Module simple(const AlgebraPtr& alg, std::size_t v) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& ar : alg->arrows()) maps.emplace_back(alg->field(), dims[ar.target], dims[ar.source]);
  return Module::trusted(alg, dims, maps, "S" + alg->vertex_name(v));
}

Module injective(const AlgebraPtr& alg, std::size_t v) {
  return dual(projective(alg->opposite(), v)).named("I" + alg->vertex_name(v));
}

Module regular(const AlgebraPtr& alg) {
  std::vector<Module> ps;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) ps.push_back(projective(alg, v));
  if (ps.empty()) return Module::zero(alg);
  return direct_sum(ps).sum.named("A");
}

Module coregular(const AlgebraPtr& alg) {
  std::vector<Module> is;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) is.push_back(injective(alg, v));
  if (is.empty()) return Module::zero(alg);
  return direct_sum(is).sum.named("D(A)");
}

StandardModules standard_modules(const AlgebraPtr& alg) {
  StandardModules s;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
    s.projectives.push_back(projective(alg, v));
    s.injectives.push_back(injective(alg, v));
    s.simples.push_back(simple(alg, v));
  }
  s.regular = regular(alg);
  s.coregular = coregular(alg);
  return s;
}

std::vector<Matrix> radical_spans(const Module& m) {
  const auto& alg = *m.algebra();
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
    Matrix acc(m.field(), m.dim(v), 0);
    for (std::size_t a = 0; a < alg.arrows().size(); ++a)
      if (alg.arrows()[a].target == v) acc = hstack(acc, m.map(a));
    spans.push_back(column_basis(acc));
  }
  return spans;
}

std::vector<Matrix> socle_spans(const Module& m) {
  const auto& alg = *m.algebra();
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
    Matrix acc(m.field(), 0, m.dim(v));
    for (std::size_t a = 0; a < alg.arrows().size(); ++a)
      if (alg.arrows()[a].source == v) acc = vstack(acc, m.map(a));
    spans.push_back(kernel(acc));
  }
  return spans;
}

Structure structure(const Module& m) {
  auto rad = radical_spans(m);
  auto soc = socle_spans(m);
  Structure s{submodule(m, rad), submodule(m, soc), quotient_module(m, rad), {}, {}};
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    s.top_multiplicities.push_back(m.dim(v) - rad[v].cols());
    s.socle_multiplicities.push_back(soc[v].cols());
  }
  return s;
}

ProjectiveCover projective_cover(const Module& m) {
  const AlgebraPtr& alg = m.algebra();
  auto rad = radical_spans(m);
  std::vector<Module> parts;
  std::vector<std::size_t> vertices;
  std::vector<ModuleMap> maps;
  for (std::size_t i = 0; i < alg->num_vertices(); ++i) {
    Matrix gens = complement_basis(rad[i]);
    if (gens.cols() == 0) continue;
    Module p = projective(alg, i);
    auto at = projective_layout(*alg, i);
    for (std::size_t g = 0; g < gens.cols(); ++g) {
      Matrix gen = gens.block(0, g, gens.rows(), 1);
      ModuleMap f{p, m, {}};
      for (std::size_t u = 0; u < alg->num_vertices(); ++u) {
        Matrix c(m.field(), m.dim(u), 0);
        for (std::size_t b : at[u]) c = hstack(c, m.element_action(b) * gen);
        f.components.push_back(std::move(c));
      }
      parts.push_back(p);
      vertices.push_back(i);
      maps.push_back(std::move(f));
    }
  }
  if (parts.empty()) {
    Module z = Module::zero(alg);
    return {{z, {}}, zero_map(z, m)};
  }
  DirectSum ds = direct_sum(parts);
  ModuleMap epi = copairing(ds, maps, m);
  return {{ds.sum, vertices}, epi};
}

InjectiveEnvelope injective_envelope(const Module& m) {
  ProjectiveCover pc = projective_cover(dual(m));
  Module env = dual(pc.cover.module);
  std::string name;
  for (auto v : pc.cover.vertices) name += (name.empty() ? "I" : "+I") + m.algebra()->vertex_name(v);
  env = env.named(name.empty() ? "0" : name);
  ModuleMap mono = dual(pc.epi);
  mono.source = m;
  mono.target = env;
  return {{env, pc.cover.vertices}, mono};
}

Inclusion syzygy(const Module& m) { return kernel(projective_cover(m).epi); }

Projection cosyzygy(const Module& m) { return cokernel(injective_envelope(m).mono); }

std::vector<Module> syzygies(const Module& m, std::size_t t, Direction dir) {
  if (t < 1) throw Error("syzygies: t >= 1 required");
  std::vector<Module> out;
  Module cur = m;
  for (std::size_t i = 0; i < t; ++i) {
    cur = dir == Direction::syzygy ? syzygy(cur).sub : cosyzygy(cur).quotient;
    out.push_back(cur);
  }
  return out;
}

Module dual(const Module& m) {
  AlgebraPtr op = m.algebra()->opposite();
  std::vector<Matrix> maps;
  for (const auto& x : m.maps()) maps.push_back(x.transpose());
  std::string name = m.name().empty() ? std::string{} : "D(" + m.name() + ")";
  return Module::trusted(op, m.dims(), maps, name);
}

ModuleMap dual(const ModuleMap& f) {
  ModuleMap d{dual(f.target), dual(f.source), {}};
  for (const auto& c : f.components) d.components.push_back(c.transpose());
  return d;
}

std::optional<std::size_t> projective_vertex(const Module& x) {
  auto rad = radical_spans(x);
  std::optional<std::size_t> top;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    std::size_t mult = x.dim(v) - rad[v].cols();
    if (mult == 0) continue;
    if (mult > 1 || top) return std::nullopt;
    top = v;
  }
  if (!top) return std::nullopt;
  if (projective(x.algebra(), *top).dims() != x.dims()) return std::nullopt;
  return top;
}

std::optional<std::size_t> injective_vertex(const Module& x) {
  auto soc = socle_spans(x);
  std::optional<std::size_t> s;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    std::size_t mult = soc[v].cols();
    if (mult == 0) continue;
    if (mult > 1 || s) return std::nullopt;
    s = v;
  }
  if (!s) return std::nullopt;
  if (injective(x.algebra(), *s).dims() != x.dims()) return std::nullopt;
  return s;
}

bool is_projective_indecomposable(const Module& m) { return projective_vertex(m).has_value(); }
bool is_injective_indecomposable(const Module& m) { return injective_vertex(m).has_value(); }

namespace {

/// Iso invariants: top and socle multiplicities, and the rank of the action
/// of every basis element of the algebra.
std::vector<std::size_t> rank_profile(const Module& m) {
  std::vector<std::size_t> out;
  for (const auto& s : radical_spans(m)) out.push_back(s.cols());
  for (const auto& s : socle_spans(m)) out.push_back(s.cols());
  for (std::size_t b = 0; b < m.algebra()->dim(); ++b) out.push_back(rank(m.element_action(b)));
  return out;
}

}  // namespace

IsoResult is_isomorphic(const Module& m, const Module& n, std::uint64_t seed, std::size_t trials) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return {IsoStatus::not_isomorphic, std::nullopt};
  if (m.is_zero()) return {IsoStatus::isomorphic, zero_map(m, n)};
  if (rank_profile(m) != rank_profile(n)) return {IsoStatus::not_isomorphic, std::nullopt};
  HomSpace h = hom_basis(m, n);
  const std::size_t end_m = hom_dim(m, m);
  if (h.dim() != end_m || hom_dim(n, m) != end_m || hom_dim(n, n) != end_m)
    return {IsoStatus::not_isomorphic, std::nullopt};
  if (h.dim() == 0) return {IsoStatus::not_isomorphic, std::nullopt};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-5, 5);
  const Field& f = m.field();
  for (std::size_t t = 0; t < trials; ++t) {
    ModuleMap cand = zero_map(m, n);
    for (const auto& b : h.basis) cand = add(cand, scale(b, f.from_int(coeff(rng))));
    if (cand.is_isomorphism() && cand.commutes()) return {IsoStatus::isomorphic, cand};
  }
  return {IsoStatus::inconclusive, std::nullopt};
}

Module random_module(const AlgebraPtr& alg, std::uint64_t seed, std::size_t max_summands) {
  std::mt19937_64 rng(seed);
  const std::size_t nv = alg->num_vertices();
  std::uniform_int_distribution<std::size_t> vertex(0, nv - 1), count(1, max_summands), count0(0, max_summands);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::vector<Module> tgt, src;
  for (std::size_t i = count(rng); i > 0; --i) tgt.push_back(projective(alg, vertex(rng)));
  for (std::size_t i = count0(rng); i > 0; --i) src.push_back(projective(alg, vertex(rng)));
  Module target = direct_sum(tgt).sum;
  if (src.empty()) return target.named("random");
  Module source = direct_sum(src).sum;
  HomSpace h = hom_basis(source, target);
  ModuleMap f = zero_map(source, target);
  for (const auto& b : h.basis) f = add(f, scale(b, alg->field().from_int(coeff(rng))));
  return cokernel(f).quotient.named("random");
}

}  // namespace rigdim
