#include "rigdim/rigidity.hpp"

#include <algorithm>
#include <exception>
#include <tuple>

#include "rigdim/errors.hpp"

namespace rigdim {

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : "+") + n;
  return s;
}

[[noreturn]] void rethrow_for(const std::string& who, std::exception_ptr e) {
  try {
    std::rethrow_exception(e);
  } catch (const UnsupportedCharacteristic& x) {
    throw UnsupportedCharacteristic("candidate " + who + ": " + x.what());
  } catch (const Inconclusive& x) {
    throw Inconclusive("candidate " + who + ": " + x.what());
  }
}

}  // namespace

IndecList enumerate_indecomposables(const AlgebraPtr& alg) {
  IndecList out;
  const std::size_t nv = alg->num_vertices();
  if (alg->is_nakayama()) {
    out.complete = true;
    for (std::size_t v = 0; v < nv; ++v) {
      Module p = projective(alg, v);
      std::vector<std::vector<std::size_t>> degrees(nv);
      std::size_t loewy = 0;
      for (std::size_t b = 0; b < alg->dim(); ++b) {
        const auto& e = alg->basis(b);
        if (e.source != v) continue;
        degrees[e.target].push_back(e.degree);
        loewy = std::max(loewy, e.degree + 1);
      }
      const std::string& vn = alg->vertex_name(v);
      for (std::size_t j = loewy; j >= 1; --j) {
        std::vector<Matrix> spans;
        for (std::size_t u = 0; u < nv; ++u) {
          std::vector<std::size_t> cols;
          for (std::size_t k = 0; k < degrees[u].size(); ++k)
            if (degrees[u][k] >= j) cols.push_back(k);
          spans.push_back(Matrix::identity(alg->field(), degrees[u].size()).select_columns(cols));
        }
        std::string name = j == loewy ? "P" + vn : j == 1 ? "S" + vn : "P" + vn + "/rad^" + std::to_string(j);
        out.modules.push_back(quotient_module(p, spans).quotient.named(name));
      }
    }
    return out;
  }
  for (std::size_t v = 0; v < nv; ++v) out.modules.push_back(projective(alg, v));
  for (std::size_t v = 0; v < nv; ++v) {
    Module i = injective(alg, v);
    if (!projective_vertex(i)) out.modules.push_back(i);
  }
  for (std::size_t v = 0; v < nv; ++v) {
    Module s = simple(alg, v);
    if (!projective_vertex(s) && !injective_vertex(s)) out.modules.push_back(s);
  }
  return out;
}

ValueWithStatus ext_vanishing_bound(const AlgebraPtr& alg, const Options& opt) {
  if (is_selfinjective(alg)) throw SelfInjectiveInput("the Ext(D(A), A) bound is vacuous for self-injective algebras");
  return ext_vanishing_degree(coregular(alg), regular(alg), opt);
}

std::vector<Module> basic_part(const std::vector<Module>& summands, const Options& opt) {
  std::vector<Module> out;
  for (const auto& x : summands) {
    bool dup = false;
    for (const auto& y : out) {
      if (x.dims() != y.dims()) continue;
      auto st = is_isomorphic(x, y, opt.seed, opt.iso_trials).status;
      if (st == IsoStatus::inconclusive)
        throw Inconclusive("cannot decide whether '" + x.name() + "' and '" + y.name() + "' are isomorphic");
      if (st == IsoStatus::isomorphic) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(x);
  }
  return out;
}

RigidityReport rigidity_dimension(const AlgebraPtr& alg, const Options& opt, const std::optional<IndecList>& indecs) {
  RigidityReport rep;
  rep.search =
      "basic generator-cogenerators: every indecomposable projective and injective, plus each subset of the "
      "remaining listed indecomposables";
  const std::size_t nv = alg->num_vertices();

  if (alg->is_semisimple()) {
    Candidate c;
    for (std::size_t v = 0; v < nv; ++v) {
      c.summands.push_back(projective(alg, v));
      c.names.push_back(c.summands.back().name());
    }
    c.evd = ValueWithStatus::infinite();
    c.gldim = ValueWithStatus::exact(0);
    rep.cf = ValueWithStatus::infinite();
    rep.witness = c.names;
    rep.candidates_examined = 1;
    rep.candidates.push_back(std::move(c));
    return rep;
  }

  const IndecList list = indecs ? *indecs : enumerate_indecomposables(alg);
  if (!is_selfinjective(alg)) {
    rep.ext_bound = ext_vanishing_bound(alg, opt).plus(2);
    rep.idim_bound = projective_dimension(dual(regular(alg)), opt).plus(1);
  }

  // Projectives and injectives, preferring the listed copies.
  std::vector<Module> base, pool;
  std::vector<bool> have_p(nv, false), have_i(nv, false);
  for (const auto& x : list.modules) {
    auto p = projective_vertex(x);
    auto i = injective_vertex(x);
    if (p) have_p[*p] = true;
    if (i) have_i[*i] = true;
    if (p || i) {
      base.push_back(x);
    } else {
      pool.push_back(x);
    }
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (!have_p[v]) {
      Module p = projective(alg, v);
      if (auto i = injective_vertex(p)) have_i[*i] = true;
      base.push_back(p);
    }
  for (std::size_t v = 0; v < nv; ++v)
    if (!have_i[v]) base.push_back(injective(alg, v));
  if (pool.size() > 20) throw Error("too many candidate summands (" + std::to_string(pool.size()) + ")");

  const std::size_t count = std::size_t{1} << pool.size();
  std::vector<Candidate> cands(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Candidate& c = cands[mask];
    c.summands = base;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (mask >> k & 1) c.summands.push_back(pool[k]);
    for (const auto& x : c.summands) c.names.push_back(x.name());
  }

  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(count); ++s) {
    auto i = static_cast<std::size_t>(s);
    try {
      cands[i].evd = rigidity_degree(direct_sum(cands[i].summands).sum, opt);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (std::size_t i = 0; i < count; ++i)
    if (errors[i]) rethrow_for(join(cands[i].names), errors[i]);

  // Largest evd first; ties by the summand name list.
  auto key = [](const ValueWithStatus& v) {
    return std::make_tuple(v.is_infinite(), v.is_infinite() ? 0 : v.value, v.status == Status::at_least);
  };
  std::stable_sort(cands.begin(), cands.end(), [&](const Candidate& a, const Candidate& b) {
    if (key(a.evd) != key(b.evd)) return key(a.evd) > key(b.evd);
    return a.names < b.names;
  });
  rep.candidates_examined = count;

  auto gldim_of = [&](Candidate& c) -> const ValueWithStatus& {
    if (!c.gldim) {
      try {
        c.gldim = endo_gldim(c.summands, opt);
      } catch (...) {
        rethrow_for(join(c.names), std::current_exception());
      }
    }
    return *c.gldim;
  };

  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < count; ++i)
    if (gldim_of(cands[i]).is_exact()) {
      best = i;
      break;
    }

  bool exact = list.complete && best.has_value() && cands[*best].evd.status != Status::at_least;
  std::vector<std::size_t> unresolved;
  for (std::size_t i = 0; i < count && exact; ++i) {
    if (best && i == *best) continue;
    bool ahead = !best || i < *best;
    if (!ahead && cands[i].evd.status != Status::at_least) continue;
    if (!gldim_of(cands[i]).is_infinite()) unresolved.push_back(i);
  }
  if (!unresolved.empty()) exact = false;

  if (exact) {
    const Candidate& w = cands[*best];
    rep.cf = w.evd.plus(2);
    rep.witness = w.names;
    rep.completeness = RigidityReport::Completeness::exact;
    if (!rep.cf.is_infinite()) rep.rep_n_finite_up_to = rep.cf.value - 1;
    auto check = [&](const std::optional<ValueWithStatus>& bound, const char* what) {
      if (!bound || !bound->is_exact()) return;
      if (rep.cf.is_infinite() || rep.cf.value > bound->value)
        throw Error(std::string("internal inconsistency: cf exceeds the ") + what + " bound");
    };
    check(rep.ext_bound, "Ext(D(A),A)");
    check(rep.idim_bound, "idim");
  } else {
    std::size_t lo = 2;
    if (best) {
      lo = std::max(lo, cands[*best].evd.value + 2);
      rep.witness = cands[*best].names;
    }
    std::optional<std::size_t> hi;
    for (const auto* bound : {&rep.ext_bound, &rep.idim_bound})
      if (*bound && (*bound)->is_exact()) hi = hi ? std::min(*hi, (*bound)->value) : (*bound)->value;
    if (list.complete && best) {
      std::size_t top = lo;
      bool bounded = true;
      for (std::size_t i = 0; i < count; ++i) {
        if (i == *best) continue;
        const auto& c = cands[i];
        if (c.gldim && c.gldim->is_infinite()) continue;
        if (!c.evd.is_exact()) {
          bounded = false;
          break;
        }
        if (i < *best || c.gldim) top = std::max(top, c.evd.value + 2);
      }
      if (bounded) hi = hi ? std::min(*hi, top) : top;
    }
    rep.cf = ValueWithStatus::at_least(lo);
    rep.upper = hi;
    rep.completeness = RigidityReport::Completeness::lower_bound_only;
    rep.rep_n_finite_up_to = lo - 1;
  }
  rep.candidates = std::move(cands);
  return rep;
}

}  // namespace rigdim
