#include "rigdim/homological.hpp"

#include <algorithm>

#include "rigdim/errors.hpp"

namespace rigdim {

ValueWithStatus ValueWithStatus::plus(std::size_t k) const {
  if (status == Status::infinite) return *this;
  return {status, value + k};
}

std::string ValueWithStatus::str() const {
  switch (status) {
    case Status::exact: return std::to_string(value);
    case Status::at_least: return ">=" + std::to_string(value);
    case Status::infinite: return "inf";
  }
  return "?";
}

ValueWithStatus combine_max(const std::vector<ValueWithStatus>& values) {
  bool any_at_least = false;
  std::size_t best = 0;
  for (const auto& v : values) {
    if (v.is_infinite()) return ValueWithStatus::infinite();
    if (v.status == Status::at_least) any_at_least = true;
    best = std::max(best, v.value);
  }
  return any_at_least ? ValueWithStatus::at_least(best) : ValueWithStatus::exact(best);
}

namespace {

/// Index of an earlier module certified isomorphic to x.
std::optional<std::size_t> find_repeat(const Module& x, const std::vector<Module>& earlier, const Options& opt) {
  for (std::size_t a = 0; a < earlier.size(); ++a) {
    if (earlier[a].dims() != x.dims()) continue;
    if (is_isomorphic(x, earlier[a], opt.seed, opt.iso_trials).status == IsoStatus::isomorphic) return a;
  }
  return std::nullopt;
}

/// dim Ext^1(X, N) from the cover P -> X with kernel inclusion K -> P.
std::size_t ext1(const ProjectiveCover& pc, const Inclusion& k, const Module& n) {
  if (k.sub.is_zero()) return 0;
  const std::size_t hk = hom_dim(k.sub, n);
  if (hk == 0) return 0;
  HomSpace hp = hom_basis(pc.cover.module, n);
  Matrix restr(n.field(), hom_vector_length(k.sub, n), hp.dim());
  for (std::size_t j = 0; j < hp.dim(); ++j) {
    auto v = flatten(compose(k.map, hp.basis[j]));
    for (std::size_t i = 0; i < v.size(); ++i) restr.set_raw(i, j, v[i]);
  }
  return hk - rank(restr);
}

}  // namespace

Resolution projective_resolution(const Module& m, const Options& opt) {
  Resolution r;
  r.direction = Direction::syzygy;
  r.syzygies.push_back(m);
  std::optional<ModuleMap> incl;
  for (std::size_t t = 0;; ++t) {
    const Module x = r.syzygies[t];
    if (x.is_zero()) {
      r.end = Resolution::End::complete;
      r.length = t ? t - 1 : 0;
      return r;
    }
    if (t >= 1) {
      std::vector<Module> earlier(r.syzygies.begin(), r.syzygies.begin() + static_cast<std::ptrdiff_t>(t));
      if (auto a = find_repeat(x, earlier, opt)) {
        r.end = Resolution::End::periodic;
        r.entry = *a;
        r.period = t - *a;
        return r;
      }
    }
    if (t == opt.cutoff) {
      r.end = Resolution::End::truncated;
      r.length = opt.cutoff;
      return r;
    }
    ProjectiveCover pc = projective_cover(x);
    r.terms.push_back(pc.cover);
    r.differentials.push_back(incl ? compose(pc.epi, *incl) : pc.epi);
    Inclusion k = kernel(pc.epi);
    incl = k.map;
    r.syzygies.push_back(k.sub);
  }
}

Resolution injective_resolution(const Module& m, const Options& opt) {
  Resolution r;
  r.direction = Direction::cosyzygy;
  r.syzygies.push_back(m);
  std::optional<ModuleMap> proj;
  for (std::size_t t = 0;; ++t) {
    const Module x = r.syzygies[t];
    if (x.is_zero()) {
      r.end = Resolution::End::complete;
      r.length = t ? t - 1 : 0;
      return r;
    }
    if (t >= 1) {
      std::vector<Module> earlier(r.syzygies.begin(), r.syzygies.begin() + static_cast<std::ptrdiff_t>(t));
      if (auto a = find_repeat(x, earlier, opt)) {
        r.end = Resolution::End::periodic;
        r.entry = *a;
        r.period = t - *a;
        return r;
      }
    }
    if (t == opt.cutoff) {
      r.end = Resolution::End::truncated;
      r.length = opt.cutoff;
      return r;
    }
    InjectiveEnvelope ie = injective_envelope(x);
    r.terms.push_back(ie.envelope);
    r.differentials.push_back(proj ? compose(*proj, ie.mono) : ie.mono);
    Projection c = cokernel(ie.mono);
    proj = c.map;
    r.syzygies.push_back(c.quotient);
  }
}

namespace {

ValueWithStatus from_resolution(const Resolution& r) {
  switch (r.end) {
    case Resolution::End::complete: return ValueWithStatus::exact(r.length);
    case Resolution::End::periodic: return ValueWithStatus::infinite();
    case Resolution::End::truncated: return ValueWithStatus::at_least(r.length);
  }
  return ValueWithStatus::at_least(0);
}

}  // namespace

ValueWithStatus projective_dimension(const Module& m, const Options& opt) {
  return from_resolution(projective_resolution(m, opt));
}

ValueWithStatus injective_dimension(const Module& m, const Options& opt) {
  return from_resolution(injective_resolution(m, opt));
}

ValueWithStatus global_dimension(const AlgebraPtr& alg, const Options& opt) {
  std::vector<ValueWithStatus> pds;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) pds.push_back(projective_dimension(simple(alg, v), opt));
  return combine_max(pds);
}

ValueWithStatus dominant_dimension(const AlgebraPtr& alg, const Options& opt) {
  const std::size_t nv = alg->num_vertices();
  std::vector<bool> projective_injective(nv);
  for (std::size_t j = 0; j < nv; ++j) projective_injective[j] = projective_vertex(injective(alg, j)).has_value();
  std::vector<Module> hist{regular(alg)};
  for (std::size_t t = 0;; ++t) {
    const Module x = hist[t];
    if (x.is_zero()) return ValueWithStatus::infinite();
    if (t >= 1) {
      std::vector<Module> earlier(hist.begin(), hist.begin() + static_cast<std::ptrdiff_t>(t));
      if (find_repeat(x, earlier, opt)) return ValueWithStatus::infinite();
    }
    if (t == opt.cutoff) return ValueWithStatus::at_least(opt.cutoff);
    InjectiveEnvelope ie = injective_envelope(x);
    for (auto v : ie.envelope.vertices)
      if (!projective_injective[v]) return ValueWithStatus::exact(t);
    hist.push_back(cokernel(ie.mono).quotient);
  }
}

bool is_selfinjective(const AlgebraPtr& alg) {
  for (std::size_t v = 0; v < alg->num_vertices(); ++v)
    if (!injective_vertex(projective(alg, v))) return false;
  return true;
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i) {
  require_same_algebra(m, n);
  if (i == 0) return hom_dim(m, n);
  Module x = m;
  for (std::size_t j = 1; j < i && !x.is_zero(); ++j) x = syzygy(x).sub;
  if (x.is_zero()) return 0;
  ProjectiveCover pc = projective_cover(x);
  return ext1(pc, kernel(pc.epi), n);
}

ValueWithStatus ext_vanishing_degree(const Module& m, const Module& n, const Options& opt) {
  require_same_algebra(m, n);
  std::vector<Module> hist{m};
  for (std::size_t deg = 1; deg <= opt.cutoff; ++deg) {
    const Module& x = hist.back();
    if (x.is_zero()) return ValueWithStatus::infinite();
    ProjectiveCover pc = projective_cover(x);
    Inclusion k = kernel(pc.epi);
    if (ext1(pc, k, n) != 0) return ValueWithStatus::exact(deg - 1);
    if (k.sub.is_zero()) return ValueWithStatus::infinite();
    if (find_repeat(k.sub, hist, opt)) return ValueWithStatus::infinite();
    hist.push_back(k.sub);
  }
  return ValueWithStatus::at_least(opt.cutoff);
}

ValueWithStatus rigidity_degree(const Module& m, const Options& opt) { return ext_vanishing_degree(m, m, opt); }

HomologicalDims homological_dims(const AlgebraPtr& alg, const Options& opt) {
  if (opt.cutoff < 1) throw Error("cutoff must be at least 1");
  HomologicalDims d;
  d.gldim = global_dimension(alg, opt);
  d.domdim = dominant_dimension(alg, opt);
  d.idim_left = projective_dimension(dual(regular(alg)), opt);
  d.idim_right = projective_dimension(dual(regular(alg->opposite())), opt);
  d.selfinjective = is_selfinjective(alg);
  d.nakayama = alg->is_nakayama();
  return d;
}

bool max_orthogonal_check(const std::vector<Module>& summands, std::size_t n, const IndecList& indecs,
                          const Options& opt) {
  if (!indecs.complete) throw IncompleteList("max_orthogonal_check needs a complete list of indecomposables");
  if (n < 1) throw Error("max_orthogonal_check: n >= 1 required");
  Options o = opt;
  o.cutoff = n;
  auto vanishes = [&](const Module& a, const Module& b) { return !ext_vanishing_degree(a, b, o).is_exact(); };
  for (const auto& x : indecs.modules) {
    bool right = true, left = true;
    for (const auto& y : summands) {
      right = right && vanishes(y, x);
      left = left && vanishes(x, y);
    }
    bool member = false, unknown = false;
    for (const auto& y : summands) {
      if (y.dims() != x.dims()) continue;
      auto st = is_isomorphic(x, y, opt.seed, opt.iso_trials).status;
      if (st == IsoStatus::isomorphic) {
        member = true;
        break;
      }
      if (st == IsoStatus::inconclusive) unknown = true;
    }
    if (!member && unknown) throw Inconclusive("add(M) membership of '" + x.name() + "' undecided");
    if (right != member || left != member) return false;
  }
  return true;
}

NodeData nodes_and_rho(const AlgebraPtr& alg, const Options& opt) {
  if (!is_selfinjective(alg)) throw NotSelfInjective("node detection is only supported for self-injective algebras");
  NodeData out;
  for (const auto& comp : alg->components()) {
    bool has_arrow = false, serial = true;
    for (auto v : comp) {
      if (alg->in_degree(v) > 1 || alg->out_degree(v) > 1) serial = false;
      if (alg->out_degree(v) > 0) has_arrow = true;
    }
    std::size_t loewy = 0;
    for (const auto& b : alg->basis())
      if (std::find(comp.begin(), comp.end(), b.source) != comp.end()) loewy = std::max(loewy, b.degree + 1);
    if (!has_arrow || !serial || loewy != 2) continue;
    for (auto v : comp) out.nodes.push_back(simple(alg, v));
  }
  if (out.nodes.empty()) return out;
  std::optional<std::size_t> best;
  for (const auto& s : out.nodes) {
    Module x = s;
    for (std::size_t m = 1; m <= opt.cutoff; ++m) {
      x = syzygy(x).sub;
      if (x.is_zero()) break;
      if (is_isomorphic(x, s, opt.seed, opt.iso_trials).status == IsoStatus::isomorphic) {
        if (!best || m < *best) best = m;
        break;
      }
    }
  }
  out.rho = best ? ValueWithStatus::exact(*best) : ValueWithStatus::at_least(opt.cutoff);
  return out;
}

}  // namespace rigdim
